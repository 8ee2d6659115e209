//! Seeded random rationals for identity testing.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scalar::ExactScalar;

/// Numerators and denominators are drawn from [-BOUND, BOUND] \ {0}.
pub const BOUND: i64 = 40;

/// Deterministic source of nonzero random rationals.
#[derive(Clone, Debug)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn nonzero(&mut self) -> i64 {
        loop {
            let k = self.rng.gen_range(-BOUND..=BOUND);
            if k != 0 {
                return k;
            }
        }
    }

    pub fn rational(&mut self) -> BigRational {
        let n = self.nonzero();
        let d = self.nonzero();
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn scalar(&mut self) -> ExactScalar {
        ExactScalar::Rational(self.rational())
    }

    pub fn scalars(&mut self, k: usize) -> Vec<ExactScalar> {
        (0..k).map(|_| self.scalar()).collect()
    }

    /// A random element of Q(ζ₁₂) with all four coordinates drawn independently.
    pub fn cyclotomic(&mut self) -> ExactScalar {
        use super::scalar::Cyc12;
        ExactScalar::from_cyc(Cyc12::new(
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RationalSampler::new(42);
        let mut b = RationalSampler::new(42);
        for _ in 0..20 {
            let x = a.rational();
            assert_eq!(x, b.rational());
            assert!(x.numer() != &BigInt::from(0));
        }
    }
}
