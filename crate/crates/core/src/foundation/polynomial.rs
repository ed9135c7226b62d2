//! Sparse multivariate polynomials over Q with dense exponent vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exponents = Vec<u32>;

/// A polynomial in `nvars` variables with rational coefficients.
///
/// Terms with zero coefficient are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(c.into()))
    }

    /// The coordinate function `x_index`.
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::VariableIndex { index, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Ok(Self::monomial(exps, Rational::one()))
    }

    pub fn monomial(exps: Exponents, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Exponents)>,
    {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::VariableCount { left: nvars, right: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Constant coefficient when the polynomial has no nonconstant terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order (total degree descending, then
    /// lexicographically descending exponents).
    pub fn terms_grlex(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        v
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCount { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to variable `index`.
    pub fn partial(&self, index: usize) -> Result<Self> {
        if index >= self.nvars {
            return Err(Error::VariableIndex { index, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[index];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[index] = k - 1;
            out.add_term(e2, c * Rational::from_integer(k.into()));
        }
        Ok(out)
    }

    /// Re-embeds into a ring with `nvars` variables, sending variable `i` to
    /// variable `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Result<Self> {
        if map.len() != self.nvars {
            return Err(Error::VariableCount { left: self.nvars, right: map.len() });
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= nvars) {
            return Err(Error::VariableIndex { index: bad, nvars });
        }
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Embeds into the first `self.nvars` slots of a larger ring.
    pub fn extend_vars(&self, nvars: usize) -> Result<Self> {
        let map: Vec<usize> = (0..self.nvars).collect();
        self.embed(nvars, &map)
    }

    /// Substitutes `values[i]` for variable `i`; all values share a ring.
    pub fn substitute(&self, values: &[Polynomial]) -> Result<Self> {
        if values.len() != self.nvars {
            return Err(Error::VariableCount { left: self.nvars, right: values.len() });
        }
        let target = match values.first() {
            Some(v) => v.nvars,
            None => {
                return Ok(Self::constant(0, self.as_constant().unwrap_or_else(Rational::zero)))
            }
        };
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.try_mul(&values[i])?;
                }
            }
            out = out.try_add(&term)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::VariableCount { left: self.nvars, right: point.len() });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms_grlex()
            .into_iter()
            .map(|(e, c)| Term { coef: c.to_string(), exps: e.clone() })
            .collect()
    }

    pub fn from_term_list(nvars: usize, terms: &[Term]) -> Result<Self> {
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            parsed.push((parse_rational(&t.coef)?, t.exps.clone()));
        }
        Self::from_terms(nvars, parsed)
    }

    /// Human-readable rendering with the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Named { p: self, names }
    }
}

fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// One serialized term: `{"coef": "p/q", "exps": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coef: String,
    pub exps: Vec<u32>,
}

struct Named<'a> {
    p: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.p.terms_grlex().into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let name = self.names.get(i).map(String::as_str).unwrap_or("?");
                if k == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let shown = self.display_with(&names);
        write!(f, "{shown}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Operator impls panic on ring mismatch; library code paths use them only
// where both operands were built over the same base.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn x() -> Polynomial {
        Polynomial::var(2, 0).unwrap()
    }

    fn y() -> Polynomial {
        Polynomial::var(2, 1).unwrap()
    }

    #[test]
    fn add_cancels() {
        let one = Polynomial::one(2);
        let p = &x() + &one;
        assert_eq!(&p + &(-&x()), one);
    }

    #[test]
    fn add_zero_identity() {
        let p = &(&x() * &y()) + &Polynomial::from_int(2, 3);
        assert_eq!(&p + &Polynomial::zero(2), p);
    }

    #[test]
    fn rational_coefficients_add() {
        let x2 = &x() * &x();
        let s = &x2.scale(&q(1, 2)) + &x2.scale(&q(1, 3));
        assert_eq!(s, x2.scale(&q(5, 6)));
    }

    #[test]
    fn difference_of_squares() {
        let one = Polynomial::one(2);
        let p = &(&x() + &one) * &(&x() - &one);
        assert_eq!(p, &(&x() * &x()) - &one);
    }

    #[test]
    fn mul_identity_and_zero() {
        let p = &(&x() * &y()) + &x().scale(&q(-7, 3));
        assert_eq!(&p * &Polynomial::one(2), p);
        assert!((&p * &Polynomial::zero(2)).is_zero());
    }

    #[test]
    fn partials() {
        let x2y = &(&x() * &x()) * &y();
        assert_eq!(x2y.partial(0).unwrap(), (&x() * &y()).scale(&q(2, 1)));
        assert!((&x() * &x()).partial(1).unwrap().is_zero());
        let p = x().scale(&q(3, 2));
        assert_eq!(p.partial(0).unwrap(), Polynomial::constant(2, q(3, 2)));
    }

    #[test]
    fn mismatched_rings_are_errors() {
        let a = Polynomial::one(1);
        let b = Polynomial::one(2);
        assert!(matches!(a.try_add(&b), Err(Error::VariableCount { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::VariableCount { .. })));
        assert!(matches!(a.partial(1), Err(Error::VariableIndex { .. })));
    }

    #[test]
    fn grlex_order() {
        let p = &(&(&x() + &(&y() * &y())) + &(&x() * &y())) + &Polynomial::one(2);
        let order: Vec<Vec<u32>> = p.terms_grlex().into_iter().map(|(e, _)| e.clone()).collect();
        assert_eq!(order, vec![vec![1, 1], vec![0, 2], vec![1, 0], vec![0, 0]]);
    }

    #[test]
    fn display() {
        let names = vec!["x".to_string(), "y".to_string()];
        let p = &(&x() * &x()).scale(&q(-1, 2)) + &Polynomial::from_int(2, 3);
        assert_eq!(p.display_with(&names).to_string(), "-1/2*x^2 + 3");
    }

    #[test]
    fn substitute_and_evaluate() {
        let p = &(&x() * &y()) + &x();
        let v = p.evaluate(&[q(2, 1), q(1, 3)]).unwrap();
        assert_eq!(v, q(8, 3));
        let t = Polynomial::var(1, 0).unwrap();
        let s = p.substitute(&[t.clone(), t.clone()]).unwrap();
        assert_eq!(s, &(&t * &t) + &t);
    }
}
