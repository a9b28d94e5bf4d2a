//! Seeded generators for audit samples. The same seed always yields the
//! same sequence, on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::NonnegScalar;
use crate::semimodule::{SemiMatrix, SemiPolynomial, SemiVector};

/// Bounds for random rationals `p/q`.
#[derive(Debug, Clone, Copy)]
pub struct ScalarRange {
    pub max_numer: u64,
    pub max_denom: u64,
    /// Probability of drawing exactly zero.
    pub zero_weight: f64,
}

impl Default for ScalarRange {
    fn default() -> Self {
        ScalarRange {
            max_numer: 30,
            max_denom: 12,
            zero_weight: 0.1,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    range: ScalarRange,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_range(seed, ScalarRange::default())
    }

    pub fn with_range(seed: u64, range: ScalarRange) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            range,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn scalar(&mut self) -> NonnegScalar {
        if self.rng.gen_bool(self.range.zero_weight) {
            return NonnegScalar::zero();
        }
        self.positive_scalar()
    }

    pub fn positive_scalar(&mut self) -> NonnegScalar {
        let p = self.rng.gen_range(1..=self.range.max_numer);
        let q = self.rng.gen_range(1..=self.range.max_denom);
        NonnegScalar::new(p, q).expect("positive denominator")
    }

    /// A uniformly drawn integer in `0..=max`.
    pub fn small_integer(&mut self, max: u64) -> NonnegScalar {
        NonnegScalar::from_integer(self.rng.gen_range(0..=max))
    }

    pub fn scalars(&mut self, n: usize) -> Vec<NonnegScalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn vector(&mut self, n: usize) -> SemiVector {
        SemiVector::new(self.scalars(n)).expect("positive dimension")
    }

    pub fn nonzero_vector(&mut self, n: usize) -> SemiVector {
        loop {
            let v = self.vector(n);
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub fn positive_vector(&mut self, n: usize) -> SemiVector {
        SemiVector::new((0..n).map(|_| self.positive_scalar()).collect()).expect("positive dimension")
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> SemiMatrix {
        SemiMatrix::new(rows, cols, self.scalars(rows * cols)).expect("positive dims")
    }

    pub fn positive_matrix(&mut self, rows: usize, cols: usize) -> SemiMatrix {
        let entries = (0..rows * cols).map(|_| self.positive_scalar()).collect();
        SemiMatrix::new(rows, cols, entries).expect("positive dims")
    }

    pub fn polynomial(&mut self, max_degree: usize) -> SemiPolynomial {
        SemiPolynomial::new(self.scalars(max_degree + 1))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.rng);
        p
    }

    /// A float in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a: Vec<_> = (0..20).map({
            let mut s = Sampler::new(42);
            move |_| s.scalar()
        }).collect();
        let b: Vec<_> = (0..20).map({
            let mut s = Sampler::new(42);
            move |_| s.scalar()
        }).collect();
        assert_eq!(a, b);
    }
}
