//! The bialgebroid condition for a pair `(E, E*)` in duality through the
//! identity coordinate pairing of their generators.

use crate::algebroid::LieAlgebroid;
use crate::doubles::LieBialgebraData;
use crate::error::{Error, Result};
use crate::foundation::Polynomial;
use crate::report::{Check, Report};
use crate::sampling::{CheckConfig, Sampler};

use super::differential::{lie_derivative_form, lie_differential};
use super::multisection::MultiSection;
use super::schouten::schouten_bracket;

fn compatible(e: &LieAlgebroid, estar: &LieAlgebroid) -> Result<()> {
    if e.rank() != estar.rank() {
        return Err(Error::Rank { expected: e.rank(), found: estar.rank() });
    }
    if e.base() != estar.base() {
        return Err(Error::Base(format!("{:?} vs {:?}", e.base().vars(), estar.base().vars())));
    }
    Ok(())
}

/// `d_E[s₁, s₂]_* − [d_E s₁, s₂]_* − [s₁, d_E s₂]_*` for sections of `E*`.
pub fn derivation_residual(
    e: &LieAlgebroid,
    estar: &LieAlgebroid,
    s1: &MultiSection,
    s2: &MultiSection,
) -> Result<MultiSection> {
    let lhs = lie_differential(e, &schouten_bracket(estar, s1, s2)?)?;
    let t1 = schouten_bracket(estar, &lie_differential(e, s1)?, s2)?;
    let t2 = schouten_bracket(estar, s1, &lie_differential(e, s2)?)?;
    Ok(lhs.sub(&t1).sub(&t2))
}

/// `L^{E*}_{d_E f} s + [d_{E*} f, s]_E` for a function `f` and a section `s` of `E`.
pub fn lie_derivative_residual(
    e: &LieAlgebroid,
    estar: &LieAlgebroid,
    f: &Polynomial,
    s: &MultiSection,
) -> Result<MultiSection> {
    let n = e.rank();
    let fm = MultiSection::function(n, f.clone());
    let de_f = lie_differential(e, &fm)?.as_section().expect("degree one");
    let dstar_f = lie_differential(estar, &fm)?;
    let lie = lie_derivative_form(estar, &de_f, s)?;
    let br = schouten_bracket(e, &dstar_f, s)?;
    Ok(lie.add(&br))
}

/// Checks that `d_E` is a derivation of the Schouten bracket of `E*` on
/// all generator pairs and on seeded random pairs, plus the identity
/// `L^{E*}_{d_E f} s + [d_{E*} f, s]_E = 0` on random `(f, s)`. Validity
/// of `E` and `E*` is reported as prerequisite checks.
pub fn check_bialgebroid(e: &LieAlgebroid, estar: &LieAlgebroid, cfg: &CheckConfig) -> Result<Report> {
    compatible(e, estar)?;
    let mut report = Report::new("bialgebroid");
    report.absorb("E", e.validate(cfg));
    report.absorb("Estar", estar.validate(cfg));

    let (n, m) = (e.rank(), e.nvars());
    let gens = estar.generators().to_vec();
    let vars = e.base().vars().to_vec();
    let mut sampler = Sampler::from_config(cfg);

    let mut der = Check::new("derivation");
    for i in 0..n {
        for j in i + 1..n {
            let s1 = MultiSection::basis(n, m, &[i]);
            let s2 = MultiSection::basis(n, m, &[j]);
            let r = derivation_residual(e, estar, &s1, &s2)?;
            der.record(r.is_zero(), || estar.name_tuple(&[i, j]), || r.display_with(&gens, &vars).to_string());
        }
    }
    for t in 0..cfg.samples {
        let s1 = MultiSection::random(n, m, 1, &mut sampler);
        let s2 = MultiSection::random(n, m, 1, &mut sampler);
        let r = derivation_residual(e, estar, &s1, &s2)?;
        der.record(r.is_zero(), || format!("random pair #{t}"), || r.display_with(&gens, &vars).to_string());
    }
    report.push(der);

    let mut lie = Check::new("lie_derivative");
    let egens = e.generators().to_vec();
    for t in 0..cfg.samples {
        let f = sampler.polynomial(m);
        let s = MultiSection::random(n, m, 1, &mut sampler);
        let r = lie_derivative_residual(e, estar, &f, &s)?;
        lie.record(r.is_zero(), || format!("random pair #{t}"), || r.display_with(&egens, &vars).to_string());
    }
    report.push(lie);
    Ok(report)
}

/// `{x_i, x_j} = Σ_k a_E(e_k)_i · a_{E*}(ε^k)_j`, the base bivector of
/// `π# = e_* ∘ e^*`.
pub fn base_poisson(e: &LieAlgebroid, estar: &LieAlgebroid) -> Result<Vec<Vec<Polynomial>>> {
    compatible(e, estar)?;
    let m = e.nvars();
    let mut out = vec![vec![Polynomial::zero(m); m]; m];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..e.rank() {
                let p = e.anchor_component(k, i);
                let q = estar.anchor_component(k, j);
                if !p.is_zero() && !q.is_zero() {
                    *cell = &*cell + &(p * q);
                }
            }
        }
    }
    Ok(out)
}

/// `(T g, T g*)` with the generators of `T g*` reordered to `(ε̂, T ε)`, so
/// that the identity pairing is the tangent pairing `T e_i ↔ ε̂^i`,
/// `ê_i ↔ T ε^i`.
pub fn tangent_pair(bi: &LieBialgebraData) -> (LieAlgebroid, LieAlgebroid) {
    let n = bi.g().rank();
    let tg = bi.g().tangent_prolongation();
    let order: Vec<usize> = (n..2 * n).chain(0..n).collect();
    let tgs = bi.gstar().tangent_prolongation().permute(&order).expect("valid permutation");
    (tg, tgs)
}
