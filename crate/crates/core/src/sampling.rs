//! Seeded generation of small random polynomials and sections.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::foundation::{rat, Polynomial, Rational};

/// Options shared by all randomized checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_degree: u32,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0, samples: 8, max_degree: 2 }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    max_degree: u32,
}

impl Sampler {
    pub fn new(seed: u64, max_degree: u32) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_degree }
    }

    pub fn from_config(cfg: &CheckConfig) -> Self {
        Self::new(cfg.seed, cfg.max_degree)
    }

    /// Coefficient drawn from {-3..3}/{1,2}.
    pub fn coefficient(&mut self) -> Rational {
        let n = self.rng.gen_range(-3..=3);
        let d = if self.rng.gen_bool(0.5) { 1 } else { 2 };
        rat(n, d)
    }

    pub fn nonzero_coefficient(&mut self) -> Rational {
        loop {
            let c = self.coefficient();
            if c != rat(0, 1) {
                return c;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn polynomial(&mut self, nvars: usize) -> Polynomial {
        self.polynomial_of_degree(nvars, self.max_degree)
    }

    /// Random coefficients on every monomial of total degree <= `degree`.
    pub fn polynomial_of_degree(&mut self, nvars: usize, degree: u32) -> Polynomial {
        let monos = monomials(nvars, degree);
        let terms: Vec<_> = monos.into_iter().map(|e| (self.coefficient(), e)).collect();
        Polynomial::from_terms(nvars, terms).expect("exponent vectors sized to nvars")
    }

    pub fn polynomials(&mut self, count: usize, nvars: usize) -> Vec<Polynomial> {
        (0..count).map(|_| self.polynomial(nvars)).collect()
    }

    pub fn rationals(&mut self, count: usize) -> Vec<Rational> {
        (0..count).map(|_| self.coefficient()).collect()
    }
}

/// All exponent vectors in `nvars` variables of total degree <= `degree`.
pub fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=budget {
            prefix.push(k);
            rec(prefix, left - 1, budget - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, degree, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(0, 3).len(), 1);
        assert_eq!(monomials(2, 2).len(), 6);
        assert_eq!(monomials(3, 3).len(), 20);
    }

    #[test]
    fn seeded_is_deterministic() {
        let a = Sampler::new(7, 2).polynomials(4, 2);
        let b = Sampler::new(7, 2).polynomials(4, 2);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.degree().unwrap_or(0) <= 2));
    }
}
