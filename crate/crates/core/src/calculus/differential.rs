use crate::algebroid::{LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::foundation::Polynomial;

use super::multisection::{index_tuples, MultiSection};

fn check_form(a: &LieAlgebroid, omega: &MultiSection) -> Result<()> {
    if omega.rank() != a.rank() {
        return Err(Error::Rank { expected: a.rank(), found: omega.rank() });
    }
    if omega.nvars() != a.nvars() {
        return Err(Error::VariableCount { left: a.nvars(), right: omega.nvars() });
    }
    Ok(())
}

/// Cartan differential of a form on `a`:
///
/// `dω(e_I) = Σ_t (−1)^t a(e_{i_t}) ω(e_{I∖i_t})
///          + Σ_{s<t} (−1)^{s+t} ω([e_{i_s}, e_{i_t}], e_{I∖{i_s,i_t}})`.
pub fn lie_differential(a: &LieAlgebroid, omega: &MultiSection) -> Result<MultiSection> {
    check_form(a, omega)?;
    let n = a.rank();
    let k = omega.degree();
    let mut out = MultiSection::zero(n, a.nvars(), k + 1);
    if omega.is_zero() {
        return Ok(out);
    }
    let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
    for idx in index_tuples(n, k + 1) {
        let mut acc = Polynomial::zero(a.nvars());
        if a.nvars() > 0 {
            for t in 0..=k {
                let rest: Vec<usize> = idx.iter().enumerate().filter(|&(u, _)| u != t).map(|(_, &v)| v).collect();
                let v = a.anchor_of(idx[t]).apply(&omega.get(&rest))?;
                acc = if sign(t) > 0 { &acc + &v } else { &acc - &v };
            }
        }
        for s in 0..=k {
            for t in s + 1..=k {
                let rest: Vec<usize> =
                    idx.iter().enumerate().filter(|&(u, _)| u != s && u != t).map(|(_, &v)| v).collect();
                for l in 0..n {
                    let c = a.structure(idx[s], idx[t], l);
                    if c.is_zero() {
                        continue;
                    }
                    let mut full = vec![l];
                    full.extend_from_slice(&rest);
                    let v = c * &omega.get(&full);
                    acc = if sign(s + t) > 0 { &acc + &v } else { &acc - &v };
                }
            }
        }
        out.add_term(&idx, acc);
    }
    Ok(out)
}

/// `(i_X ω)(…) = ω(X, …)`; zero on functions.
pub fn contraction(x: &Section, omega: &MultiSection) -> Result<MultiSection> {
    if x.rank() != omega.rank() {
        return Err(Error::Rank { expected: omega.rank(), found: x.rank() });
    }
    let k = omega.degree();
    let mut out = MultiSection::zero(omega.rank(), omega.nvars(), k.saturating_sub(1));
    if k == 0 {
        return Ok(out);
    }
    for (idx, p) in omega.terms() {
        // e_{i_0} ∧ … ∧ e_{i_{k−1}} contracted on slot t carries (−1)^t
        for (t, &i) in idx.iter().enumerate() {
            let xi = x.coeff(i);
            if xi.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(u, _)| u != t).map(|(_, &v)| v).collect();
            let v = xi * p;
            out.add_term(&rest, if t % 2 == 0 { v } else { -v });
        }
    }
    Ok(out)
}

/// `L_X = i_X ∘ d + d ∘ i_X`.
pub fn lie_derivative_form(a: &LieAlgebroid, x: &Section, omega: &MultiSection) -> Result<MultiSection> {
    a.check_section(x)?;
    let first = contraction(x, &lie_differential(a, omega)?)?;
    if omega.degree() == 0 {
        return Ok(first);
    }
    let second = lie_differential(a, &contraction(x, omega)?)?;
    Ok(first.add(&second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::BaseSpace;
    use crate::fixtures;
    use crate::foundation::int;
    use crate::sampling::{CheckConfig, Sampler};

    #[test]
    fn abelian_zero_anchor_kills_everything() {
        let a = LieAlgebroid::abelian(BaseSpace::new(["x"]).unwrap(), 3);
        let mut s = Sampler::new(1, 2);
        for k in 0..3 {
            let w = MultiSection::random(3, 1, k, &mut s);
            assert!(lie_differential(&a, &w).unwrap().is_zero());
        }
    }

    #[test]
    fn d_of_h_dual_in_sl2() {
        let g = fixtures::sl2();
        let h = MultiSection::basis(3, 0, &[0]);
        let dh = lie_differential(&g, &h).unwrap();
        assert_eq!(dh, MultiSection::basis(3, 0, &[1, 2]).neg());
        // dE* = −2 H*∧E*, since [H,E] = 2E
        let de = lie_differential(&g, &MultiSection::basis(3, 0, &[1])).unwrap();
        assert_eq!(de, MultiSection::basis(3, 0, &[0, 1]).scale(&int(-2)));
    }

    #[test]
    fn d_on_functions_is_anchor() {
        let a = fixtures::action_aff1_on_line();
        let x = Polynomial::var(1, 0).unwrap();
        let f = &x * &x;
        let df = lie_differential(&a, &MultiSection::function(2, f.clone())).unwrap();
        for i in 0..2 {
            assert_eq!(df.get(&[i]), a.anchor_of(i).apply(&f).unwrap());
        }
    }

    #[test]
    fn d_squared_vanishes_on_valid_fixtures() {
        let mut s = Sampler::new(3, 2);
        for a in [fixtures::sl2(), fixtures::action_aff1_on_line(), fixtures::sl2().tangent_prolongation()] {
            assert!(a.validate(&CheckConfig::default()).passed());
            for k in 0..3 {
                let w = MultiSection::random(a.rank(), a.nvars(), k, &mut s);
                let dd = lie_differential(&a, &lie_differential(&a, &w).unwrap()).unwrap();
                assert!(dd.is_zero());
            }
        }
        let broken = fixtures::sl2_broken();
        let w = MultiSection::basis(3, 0, &[1]);
        let dd = lie_differential(&broken, &lie_differential(&broken, &w).unwrap()).unwrap();
        assert!(!dd.is_zero());
    }

    #[test]
    fn lie_derivative_basics() {
        let a = fixtures::action_aff1_on_line();
        let x = Polynomial::var(1, 0).unwrap();
        let f = &x * &x;
        let xs = a.generator(0);
        let lf = lie_derivative_form(&a, &xs, &MultiSection::function(2, f.clone())).unwrap();
        assert_eq!(lf.as_function().unwrap(), a.anchor_of(0).apply(&f).unwrap());
        let z = LieAlgebroid::abelian(BaseSpace::point(), 2);
        let w = MultiSection::basis(2, 0, &[0]);
        assert!(lie_derivative_form(&z, &z.generator(1), &w).unwrap().is_zero());
    }

    #[test]
    fn contraction_signs() {
        let w = MultiSection::basis(3, 0, &[0, 1]);
        let g = fixtures::sl2();
        assert_eq!(contraction(&g.generator(1), &w).unwrap(), MultiSection::basis(3, 0, &[0]).neg());
        assert_eq!(contraction(&g.generator(0), &w).unwrap(), MultiSection::basis(3, 0, &[1]));
    }
}
