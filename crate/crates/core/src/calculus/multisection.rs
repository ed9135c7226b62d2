use std::collections::BTreeMap;
use std::fmt;

use crate::algebroid::Section;
use crate::foundation::{Polynomial, Rational};
use crate::sampling::Sampler;

/// An element of the `k`-th exterior power of a free module of rank `p`
/// over the polynomial ring, stored on strictly increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiSection {
    rank: usize,
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sorts `idx` in place; returns the sign of the permutation, or `None`
/// when an index repeats.
fn sort_with_sign(idx: &mut [usize]) -> Option<bool> {
    let mut positive = true;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            positive = !positive;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(positive)
    }
}

/// Strictly increasing `k`-subsets of `0..n`.
pub fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl MultiSection {
    pub fn zero(rank: usize, nvars: usize, degree: usize) -> Self {
        MultiSection { rank, nvars, degree, coeffs: BTreeMap::new() }
    }

    pub fn function(rank: usize, f: Polynomial) -> Self {
        let mut out = Self::zero(rank, f.nvars(), 0);
        out.add_term(&[], f);
        out
    }

    pub fn from_section(s: &Section, nvars: usize) -> Self {
        let mut out = Self::zero(s.rank(), nvars, 1);
        for (i, c) in s.coeffs().iter().enumerate() {
            out.add_term(&[i], c.clone());
        }
        out
    }

    /// `e_{i_1} ∧ … ∧ e_{i_k}`; indices in any order.
    pub fn basis(rank: usize, nvars: usize, idx: &[usize]) -> Self {
        let mut out = Self::zero(rank, nvars, idx.len());
        out.add_term(idx, Polynomial::one(nvars));
        out
    }

    /// Adds `p · e_{idx}`; unsorted indices pick up the permutation sign.
    pub fn add_term(&mut self, idx: &[usize], p: Polynomial) {
        assert_eq!(idx.len(), self.degree, "index tuple length must equal the degree");
        assert!(idx.iter().all(|&i| i < self.rank), "index out of range");
        if p.is_zero() {
            return;
        }
        let mut key = idx.to_vec();
        let Some(positive) = sort_with_sign(&mut key) else { return };
        let p = if positive { p } else { -p };
        let sum = match self.coeffs.remove(&key) {
            Some(old) => &old + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.coeffs.iter()
    }

    /// Coefficient on `e_{idx}` for indices in any order.
    pub fn get(&self, idx: &[usize]) -> Polynomial {
        let mut key = idx.to_vec();
        match sort_with_sign(&mut key) {
            None => Polynomial::zero(self.nvars),
            Some(positive) => match self.coeffs.get(&key) {
                None => Polynomial::zero(self.nvars),
                Some(p) if positive => p.clone(),
                Some(p) => -p,
            },
        }
    }

    /// Degree-0 part as a polynomial.
    pub fn as_function(&self) -> Option<Polynomial> {
        (self.degree == 0).then(|| self.get(&[]))
    }

    /// Degree-1 part as a section.
    pub fn as_section(&self) -> Option<Section> {
        (self.degree == 1).then(|| Section::new((0..self.rank).map(|i| self.get(&[i])).collect()))
    }

    fn combine(&self, other: &MultiSection, negate: bool) -> MultiSection {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        // a zero value carries no meaningful degree
        if other.is_zero() {
            return self.clone();
        }
        let mut out = if self.is_zero() { MultiSection::zero(self.rank, self.nvars, other.degree) } else { self.clone() };
        assert_eq!(out.degree, other.degree, "degree mismatch");
        for (k, p) in &other.coeffs {
            out.add_term(k, if negate { -p } else { p.clone() });
        }
        out
    }

    pub fn add(&self, other: &MultiSection) -> MultiSection {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &MultiSection) -> MultiSection {
        self.combine(other, true)
    }

    pub fn neg(&self) -> MultiSection {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &Rational) -> MultiSection {
        self.mul_fn(&Polynomial::constant(self.nvars, c.clone()))
    }

    pub fn mul_fn(&self, f: &Polynomial) -> MultiSection {
        let mut out = MultiSection::zero(self.rank, self.nvars, self.degree);
        for (k, p) in &self.coeffs {
            out.add_term(k, p * f);
        }
        out
    }

    pub fn wedge(&self, other: &MultiSection) -> MultiSection {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = MultiSection::zero(self.rank, self.nvars, self.degree + other.degree);
        for (i, p) in &self.coeffs {
            for (j, q) in &other.coeffs {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                out.add_term(&idx, p * q);
            }
        }
        out
    }

    /// Wedge of a list of sections; the empty list gives the constant 1.
    pub fn wedge_sections(rank: usize, nvars: usize, sections: &[&Section]) -> MultiSection {
        let mut acc = MultiSection::function(rank, Polynomial::one(nvars));
        for s in sections {
            acc = acc.wedge(&MultiSection::from_section(s, nvars));
        }
        acc
    }

    /// Random coefficients on every basis tuple.
    pub fn random(rank: usize, nvars: usize, degree: usize, sampler: &mut Sampler) -> MultiSection {
        let mut out = MultiSection::zero(rank, nvars, degree);
        for idx in index_tuples(rank, degree) {
            out.add_term(&idx, sampler.polynomial(nvars));
        }
        out
    }

    pub fn display_with<'a>(&'a self, generators: &'a [String], vars: &'a [String]) -> impl fmt::Display + 'a {
        MultiDisplay { m: self, generators, vars }
    }
}

struct MultiDisplay<'a> {
    m: &'a MultiSection,
    generators: &'a [String],
    vars: &'a [String],
}

impl fmt::Display for MultiDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_zero() {
            return write!(f, "0");
        }
        for (n, (idx, p)) in self.m.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", p.display_with(self.vars))?;
            let names: Vec<&str> =
                idx.iter().map(|&i| self.generators.get(i).map(String::as_str).unwrap_or("?")).collect();
            if !names.is_empty() {
                write!(f, "{}", names.join("^"))?;
            }
        }
        Ok(())
    }
}
