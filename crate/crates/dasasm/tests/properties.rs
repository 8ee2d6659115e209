use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use dasasm::characters::{schur, symplectic, Partition};
use dasasm::exact_arith::{determinant, laurent_from_samples, pfaffian, sigma, Cyc12, ExactScalar, SkewTriangle};
use dasasm::formulas::{ast_partition_formula, qast_partition_formula, Variant};
use dasasm::objects::{ast_to_minzero, enumerate, minzero_to_ast, Family, Object};
use dasasm::vertex_model::SpectralPoint;

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=30)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    rational().prop_map(ExactScalar::Rational)
}

fn cyclotomic() -> impl Strategy<Value = ExactScalar> {
    (rational(), rational(), rational(), rational())
        .prop_map(|(a, b, c, d)| ExactScalar::from_cyc(Cyc12::new(a, b, c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_inverse(x in cyclotomic()) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn sigma_is_odd_under_inversion(x in cyclotomic()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(sigma(&x.inv().unwrap()).unwrap(), -sigma(&x).unwrap());
    }

    #[test]
    fn pfaffian_squares_to_determinant(half in 1usize..=3, entries in prop::collection::vec(scalar(), 15)) {
        let t = SkewTriangle::from_fn(2 * half, |i, j| entries[(i * 5 + j) % entries.len()].clone());
        prop_assert_eq!(pfaffian(&t).unwrap().square(), determinant(&t.completion()).unwrap());
    }

    #[test]
    fn laurent_reconstruction(low in -3i64..=0, coeffs in prop::collection::vec(-9i64..=9, 1..6)) {
        let high = low + coeffs.len() as i64 - 1;
        let f = |x: &ExactScalar| -> ExactScalar {
            coeffs.iter().enumerate().map(|(k, &c)| ExactScalar::int(c) * x.pow(low + k as i64).unwrap()).sum()
        };
        let nodes: Vec<BigRational> = (2..2 + coeffs.len() as i64).map(|k| BigRational::from_integer(k.into())).collect();
        let values: Vec<ExactScalar> = nodes.iter().map(|x| f(&ExactScalar::Rational(x.clone()))).collect();
        let p = laurent_from_samples(&nodes, &values, low, high).unwrap();
        for (k, &c) in coeffs.iter().enumerate() {
            prop_assert_eq!(p.coeff(low + k as i64), ExactScalar::int(c));
        }
    }

    #[test]
    fn schur_is_symmetric(xs in prop::collection::vec(scalar(), 3), a in 0usize..3, b in 0usize..=2, shift in 1usize..3) {
        let lambda = Partition::new(vec![a + b, b]).unwrap();
        let mut ys = xs.clone();
        ys.rotate_left(shift);
        match (schur(&lambda, &xs), schur(&lambda, &ys)) {
            (Ok(l), Ok(r)) => prop_assert_eq!(l, r),
            (l, r) => prop_assert_eq!(l.is_err(), r.is_err()),
        }
    }

    #[test]
    fn symplectic_is_inversion_invariant(xs in prop::collection::vec(scalar(), 2), a in 0usize..3) {
        let lambda = Partition::new(vec![a + 1, a]).unwrap();
        let inv: Vec<ExactScalar> = vec![xs[0].inv().unwrap(), xs[1].clone()];
        match (symplectic(&lambda, &xs), symplectic(&lambda, &inv)) {
            (Ok(l), Ok(r)) => prop_assert_eq!(l, r),
            (l, r) => prop_assert_eq!(l.is_err(), r.is_err()),
        }
    }

    #[test]
    fn objects_round_trip_through_text(fam in 0usize..6, n in 0usize..=4, pick in any::<prop::sample::Index>()) {
        let family = Family::ALL[fam];
        let all = enumerate(family, n).unwrap();
        prop_assume!(!all.is_empty());
        let o = &all[pick.index(all.len())];
        prop_assert!(o.validate().is_ok());
        prop_assert_eq!(&Object::from_text(family, &o.to_text()).unwrap(), o);
    }

    #[test]
    fn minzero_bijection_round_trips(n in 1usize..=5, pick in any::<prop::sample::Index>()) {
        let all = enumerate(Family::Ast, n).unwrap();
        let Object::Sign(a) = &all[pick.index(all.len())] else { unreachable!() };
        let t = ast_to_minzero(a).unwrap();
        prop_assert_eq!(t.n_alpha(0), n - 1);
        prop_assert_eq!(&minzero_to_ast(&t).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn determinant_formulas_are_symmetric(u in prop::collection::vec(scalar(), 4), p in scalar(), q in scalar(), swap in 0usize..2) {
        let n = 3;
        let pt = SpectralPoint::new(q, p, u.clone());
        let mut v = u;
        v.swap(swap, swap + 1);
        let swapped = pt.with_u(v);
        for f in [ast_partition_formula, qast_partition_formula] {
            if let (Ok(l), Ok(r)) = (f(n, &pt, Variant::Full), f(n, &swapped, Variant::Full)) {
                prop_assert_eq!(l, r);
            }
        }
    }
}
