//! The object families, their validation, enumeration and bijections.

mod asm;
mod bijections;
mod config;
mod shape;
mod sign;
mod triangle;

use std::fmt;
use std::str::FromStr;

pub use asm::{enumerate_asms, Asm};
pub use bijections::{
    ast_diagonal_reconstruct, ast_to_minzero, dast_extension_list, dast_extensions,
    delete_diagonals, minzero_to_ast, qast_from_triangle, qast_to_triangle, rows_end_upward,
};
pub use config::{BoundaryState, BulkType, Dir, Side, TriConfig};
pub use sign::{enumerate_sign_triangles, visit_sign_triangles, SignTriangle, TriFamily};
pub use triangle::{enumerate_dasasm_triangles, visit_dasasm_triangles, DasasmTriangle};

use crate::error::{Error, Result};

/// Default largest order accepted by [`enumerate`].
pub const DEFAULT_CAP: usize = 6;

/// First failed condition found by a `validate` method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(String);

impl Violation {
    pub(crate) fn new(msg: String) -> Self {
        Violation(msg)
    }

    pub fn message(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Asm,
    DasasmTri,
    Ast,
    Dast,
    Qast,
    Mast,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Asm,
        Family::DasasmTri,
        Family::Ast,
        Family::Dast,
        Family::Qast,
        Family::Mast,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Asm => "asm",
            Family::DasasmTri => "dasasm-tri",
            Family::Ast => "ast",
            Family::Dast => "dast",
            Family::Qast => "qast",
            Family::Mast => "mast",
        }
    }

    pub fn tri_family(self) -> Option<TriFamily> {
        match self {
            Family::Ast => Some(TriFamily::Ast),
            Family::Dast => Some(TriFamily::Dast),
            Family::Qast => Some(TriFamily::Qast),
            Family::Mast => Some(TriFamily::Mast),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key || (key == "dasasm" && *f == Family::DasasmTri))
            .ok_or_else(|| Error::UnknownIdentifier(s.to_string()))
    }
}

/// Any enumerated object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Object {
    Asm(Asm),
    Triangle(DasasmTriangle),
    Sign(SignTriangle),
}

impl Object {
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        match self {
            Object::Asm(a) => a.validate(),
            Object::Triangle(t) => t.validate(),
            Object::Sign(s) => s.validate(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        match self {
            Object::Asm(a) => a.rows(),
            Object::Triangle(t) => t.rows(),
            Object::Sign(s) => s.rows(),
        }
    }

    /// Rows joined by '/', entries by ','.
    pub fn to_text(&self) -> String {
        match self {
            Object::Asm(a) => a.to_text(),
            Object::Triangle(t) => t.to_text(),
            Object::Sign(s) => s.to_text(),
        }
    }

    pub fn from_text(family: Family, s: &str) -> Result<Self> {
        Ok(match family {
            Family::Asm => Object::Asm(Asm::from_text(s)?),
            Family::DasasmTri => Object::Triangle(DasasmTriangle::from_text(s)?),
            f => Object::Sign(SignTriangle::from_text(f.tri_family().unwrap(), s)?),
        })
    }
}

fn check_cap(family: Family, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: format!("enumerate {family}"),
            n,
            cap,
        });
    }
    Ok(())
}

/// All objects of the family at order n, validated, in lexicographic order
/// of the row-major entries (with −1 < 0 < 1).
pub fn enumerate(family: Family, n: usize) -> Result<Vec<Object>> {
    enumerate_with_cap(family, n, DEFAULT_CAP)
}

pub fn enumerate_with_cap(family: Family, n: usize, cap: usize) -> Result<Vec<Object>> {
    check_cap(family, n, cap)?;
    Ok(match family {
        Family::Asm => enumerate_asms(n).into_iter().map(Object::Asm).collect(),
        Family::DasasmTri => enumerate_dasasm_triangles(n)
            .into_iter()
            .map(Object::Triangle)
            .collect(),
        f => enumerate_sign_triangles(f.tri_family().unwrap(), n)
            .into_iter()
            .map(Object::Sign)
            .collect(),
    })
}

/// Number of objects without materializing them.
pub fn count(family: Family, n: usize, cap: usize) -> Result<u64> {
    check_cap(family, n, cap)?;
    let mut k = 0u64;
    match family {
        Family::Asm => k = enumerate_asms(n).len() as u64,
        Family::DasasmTri => visit_dasasm_triangles(n, |_| k += 1),
        f => visit_sign_triangles(f.tri_family().unwrap(), n, |_| k += 1),
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("DASASM_TRI".parse::<Family>().unwrap(), Family::DasasmTri);
        assert!(matches!("osasm".parse::<Family>(), Err(Error::UnknownIdentifier(_))));
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            enumerate(Family::Ast, 7),
            Err(Error::CapExceeded { n: 7, cap: 6, .. })
        ));
    }

    #[test]
    fn enumerated_objects_validate() {
        for f in Family::ALL {
            for o in enumerate(f, 3).unwrap() {
                assert!(o.validate().is_ok(), "{f}: {}", o.to_text());
                assert_eq!(Object::from_text(f, &o.to_text()).unwrap(), o);
            }
        }
    }

    #[test]
    fn order_one_asm() {
        let all = enumerate(Family::Asm, 1).unwrap();
        assert_eq!(all, vec![Object::Asm(Asm::identity(1))]);
    }
}
