//! The linear Poisson structure on the dual of an algebroid, on the ring
//! with base variables `x_1..x_m` followed by fiber variables `ξ_1..ξ_n`.

use crate::algebroid::{LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::foundation::Polynomial;

pub fn fiber_ring_nvars(a: &LieAlgebroid) -> usize {
    a.nvars() + a.rank()
}

/// Variable names `x.., xi1..xin` for display.
pub fn fiber_ring_names(a: &LieAlgebroid) -> Vec<String> {
    let mut v = a.base().vars().to_vec();
    v.extend((1..=a.rank()).map(|i| format!("xi{i}")));
    v
}

fn lift(a: &LieAlgebroid, f: &Polynomial) -> Result<Polynomial> {
    let map: Vec<usize> = (0..a.nvars()).collect();
    f.embed(fiber_ring_nvars(a), &map)
}

/// Pullback of a base function.
pub fn pullback(a: &LieAlgebroid, f: &Polynomial) -> Result<Polynomial> {
    if f.nvars() != a.nvars() {
        return Err(Error::VariableCount { left: a.nvars(), right: f.nvars() });
    }
    lift(a, f)
}

/// `ℓ_X = Σ X_i ξ_i`.
pub fn linear_function(a: &LieAlgebroid, x: &Section) -> Result<Polynomial> {
    a.check_section(x)?;
    let total = fiber_ring_nvars(a);
    let mut acc = Polynomial::zero(total);
    for (i, c) in x.coeffs().iter().enumerate() {
        acc = &acc + &(&lift(a, c)? * &Polynomial::var(total, a.nvars() + i)?);
    }
    Ok(acc)
}

/// `{F, G} = Σ ∂_{ξ_i}F ∂_{ξ_j}G c_ij^k ξ_k + Σ a_il (∂_{ξ_i}F ∂_{x_l}G − ∂_{ξ_i}G ∂_{x_l}F)`,
/// so that `{ℓ_X, ℓ_Y} = ℓ_{[X,Y]}`, `{ℓ_X, f} = a(X)(f)` and `{f, g} = 0`.
pub fn lie_poisson_bracket(a: &LieAlgebroid, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let total = fiber_ring_nvars(a);
    for p in [f, g] {
        if p.nvars() != total {
            return Err(Error::VariableCount { left: total, right: p.nvars() });
        }
    }
    let (m, n) = (a.nvars(), a.rank());
    let df: Vec<Polynomial> = (0..total).map(|v| f.partial(v)).collect::<Result<_>>()?;
    let dg: Vec<Polynomial> = (0..total).map(|v| g.partial(v)).collect::<Result<_>>()?;
    let mut acc = Polynomial::zero(total);
    for i in 0..n {
        let fi = &df[m + i];
        let gi = &dg[m + i];
        if !fi.is_zero() {
            for j in 0..n {
                let gj = &dg[m + j];
                if gj.is_zero() {
                    continue;
                }
                let mut lin = Polynomial::zero(total);
                for k in 0..n {
                    let c = a.structure(i, j, k);
                    if !c.is_zero() {
                        lin = &lin + &(&lift(a, c)? * &Polynomial::var(total, m + k)?);
                    }
                }
                if !lin.is_zero() {
                    acc = &acc + &(&(fi * gj) * &lin);
                }
            }
        }
        for l in 0..m {
            let c = a.anchor_component(i, l);
            if c.is_zero() {
                continue;
            }
            let c = lift(a, c)?;
            let term = &(fi * &dg[l]) - &(gi * &df[l]);
            if !term.is_zero() {
                acc = &acc + &(&c * &term);
            }
        }
    }
    Ok(acc)
}

/// `{F,{G,H}} + {G,{H,F}} + {H,{F,G}}`.
pub fn lie_poisson_jacobiator(a: &LieAlgebroid, f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Result<Polynomial> {
    let t1 = lie_poisson_bracket(a, f, &lie_poisson_bracket(a, g, h)?)?;
    let t2 = lie_poisson_bracket(a, g, &lie_poisson_bracket(a, h, f)?)?;
    let t3 = lie_poisson_bracket(a, h, &lie_poisson_bracket(a, f, g)?)?;
    Ok(&(&t1 + &t2) + &t3)
}
