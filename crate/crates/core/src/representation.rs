//! Representations by covariant differential operators.
//!
//! A representation of `A` on a free module of rank `p` is stored as one
//! `p×p` polynomial matrix per generator; the derivation part is always the
//! anchor of `A`, so `D_i(s) = M_i·s + a(e_i)(s)` entrywise.

use crate::algebroid::{Derivation, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::foundation::{Polynomial, Rational};
use crate::report::{Check, Report, ValidationReport};
use crate::sampling::{CheckConfig, Sampler};
use crate::verified::{Validate, Verified};

/// A section of the represented module.
pub type ModuleSection = Section;

pub type PolyMatrix = Vec<Vec<Polynomial>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CdoRep {
    algebroid: LieAlgebroid,
    module_rank: usize,
    matrices: Vec<PolyMatrix>,
}

impl CdoRep {
    pub fn new(algebroid: LieAlgebroid, module_rank: usize, matrices: Vec<PolyMatrix>) -> Result<Self> {
        if matrices.len() != algebroid.rank() {
            return Err(Error::Rank { expected: algebroid.rank(), found: matrices.len() });
        }
        for m in &matrices {
            if m.len() != module_rank {
                return Err(Error::Rank { expected: module_rank, found: m.len() });
            }
            for row in m {
                if row.len() != module_rank {
                    return Err(Error::Rank { expected: module_rank, found: row.len() });
                }
                for p in row {
                    if p.nvars() != algebroid.nvars() {
                        return Err(Error::VariableCount { left: algebroid.nvars(), right: p.nvars() });
                    }
                }
            }
        }
        Ok(CdoRep { algebroid, module_rank, matrices })
    }

    /// Matrices all zero: generators act by their anchors only.
    pub fn trivial(algebroid: LieAlgebroid, module_rank: usize) -> Self {
        let m = algebroid.nvars();
        let matrices = vec![vec![vec![Polynomial::zero(m); module_rank]; module_rank]; algebroid.rank()];
        CdoRep { algebroid, module_rank, matrices }
    }

    /// `ad(e_i)` with matrix entries `M_i[k][j] = c[i][j][k]`. Base must be a point.
    pub fn adjoint(g: &LieAlgebroid) -> Result<Self> {
        if !g.base().is_point() {
            return Err(Error::NotAPoint(g.nvars()));
        }
        let n = g.rank();
        let matrices = (0..n)
            .map(|i| (0..n).map(|k| (0..n).map(|j| g.structure(i, j, k).clone()).collect()).collect())
            .collect();
        Ok(CdoRep { algebroid: g.clone(), module_rank: n, matrices })
    }

    /// Contragredient of the adjoint representation.
    pub fn coadjoint(g: &LieAlgebroid) -> Result<Self> {
        Ok(Self::adjoint(g)?.contragredient())
    }

    pub fn algebroid(&self) -> &LieAlgebroid {
        &self.algebroid
    }

    pub fn module_rank(&self) -> usize {
        self.module_rank
    }

    pub fn matrices(&self) -> &[PolyMatrix] {
        &self.matrices
    }

    pub fn matrix_entry(&self, i: usize, r: usize, c: usize) -> &Polynomial {
        &self.matrices[i][r][c]
    }

    fn check_module(&self, s: &ModuleSection) -> Result<()> {
        if s.rank() != self.module_rank {
            return Err(Error::Rank { expected: self.module_rank, found: s.rank() });
        }
        if let Some(p) = s.coeffs().iter().find(|p| p.nvars() != self.algebroid.nvars()) {
            return Err(Error::VariableCount { left: self.algebroid.nvars(), right: p.nvars() });
        }
        Ok(())
    }

    /// Matrix part of `D_X` for `X = Σ f_i e_i`: `Σ f_i M_i`.
    pub fn matrix_of(&self, x: &Section) -> Result<PolyMatrix> {
        self.algebroid.check_section(x)?;
        let p = self.module_rank;
        let mut out = vec![vec![Polynomial::zero(self.algebroid.nvars()); p]; p];
        for (i, f) in x.coeffs().iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for r in 0..p {
                for c in 0..p {
                    let e = &self.matrices[i][r][c];
                    if !e.is_zero() {
                        out[r][c] = &out[r][c] + &(f * e);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `D_X(s) = Σ f_i M_i s + a(X)(s)`.
    pub fn rep_apply(&self, x: &Section, s: &ModuleSection) -> Result<ModuleSection> {
        self.check_module(s)?;
        let mat = self.matrix_of(x)?;
        let der = self.algebroid.anchor_of_section(x)?;
        let mut out = Vec::with_capacity(self.module_rank);
        for (r, row) in mat.iter().enumerate() {
            let mut acc = der.apply(s.coeff(r))?;
            for (c, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    acc = &acc + &(e * s.coeff(c));
                }
            }
            out.push(acc);
        }
        Ok(Section::new(out))
    }

    /// `D_{[X,Y]} s − (D_X D_Y s − D_Y D_X s)`.
    pub fn curvature(&self, x: &Section, y: &Section, s: &ModuleSection) -> Result<ModuleSection> {
        let xy = self.algebroid.bracket_sections(x, y)?;
        let lhs = self.rep_apply(&xy, s)?;
        let a = self.rep_apply(x, &self.rep_apply(y, s)?)?;
        let b = self.rep_apply(y, &self.rep_apply(x, s)?)?;
        Ok(lhs.sub(&a.sub(&b)))
    }

    /// `D_X(f s) − f D_X(s) − a(X)(f) s`.
    pub fn leibniz_defect(&self, x: &Section, f: &Polynomial, s: &ModuleSection) -> Result<ModuleSection> {
        let lhs = self.rep_apply(x, &s.mul_fn(f))?;
        let af = self.algebroid.anchor_of_section(x)?.apply(f)?;
        let rhs = self.rep_apply(x, s)?.mul_fn(f).add(&s.mul_fn(&af));
        Ok(lhs.sub(&rhs))
    }

    pub fn zero_module_section(&self) -> ModuleSection {
        Section::zero(self.module_rank, self.algebroid.nvars())
    }

    pub fn module_unit(&self, r: usize) -> ModuleSection {
        Section::unit(self.module_rank, self.algebroid.nvars(), r)
    }

    pub fn random_module_section(&self, sampler: &mut Sampler) -> ModuleSection {
        Section::new(sampler.polynomials(self.module_rank, self.algebroid.nvars()))
    }

    /// Flatness on generator pairs against unit and random module sections,
    /// flatness on random triples, and the CDO Leibniz rule.
    pub fn validate(&self, cfg: &CheckConfig) -> ValidationReport {
        let mut report = Report::new("representation");
        let a = &self.algebroid;
        let names = a.base().vars().to_vec();
        let n = a.rank();
        let mut sampler = Sampler::from_config(cfg);

        let mut flat = Check::new("flatness");
        for i in 0..n {
            for j in 0..n {
                let mut module_sections: Vec<(String, ModuleSection)> =
                    (0..self.module_rank).map(|r| (format!("u{}", r + 1), self.module_unit(r))).collect();
                if a.nvars() > 0 {
                    module_sections.push(("random".into(), self.random_module_section(&mut sampler)));
                }
                for (label, s) in module_sections {
                    let r = self.curvature(&a.generator(i), &a.generator(j), &s).expect("well formed");
                    flat.record(
                        r.is_zero(),
                        || format!("{} on {label}", a.name_tuple(&[i, j])),
                        || r.display_with(&names).to_string(),
                    );
                }
            }
        }
        for t in 0..cfg.samples {
            let x = a.random_section(&mut sampler);
            let y = a.random_section(&mut sampler);
            let s = self.random_module_section(&mut sampler);
            let r = self.curvature(&x, &y, &s).expect("well formed");
            flat.record(r.is_zero(), || format!("random triple #{t}"), || r.display_with(&names).to_string());
        }
        report.push(flat);

        let mut leib = Check::new("leibniz");
        for t in 0..cfg.samples {
            let x = a.random_section(&mut sampler);
            let f = sampler.polynomial(a.nvars());
            let s = self.random_module_section(&mut sampler);
            let r = self.leibniz_defect(&x, &f, &s).expect("well formed");
            leib.record(r.is_zero(), || format!("random triple #{t}"), || r.display_with(&names).to_string());
        }
        report.push(leib);
        report
    }

    /// `M*_i = −M_iᵀ`, same anchor.
    pub fn contragredient(&self) -> CdoRep {
        let p = self.module_rank;
        let matrices = self
            .matrices
            .iter()
            .map(|m| (0..p).map(|r| (0..p).map(|c| -&m[c][r]).collect()).collect())
            .collect();
        CdoRep { algebroid: self.algebroid.clone(), module_rank: p, matrices }
    }

    /// `⟨D*_X φ, s⟩ + ⟨φ, D_X s⟩ − a(X)⟨φ, s⟩`; zero for every input.
    pub fn pairing_defect(&self, x: &Section, phi: &ModuleSection, s: &ModuleSection) -> Result<Polynomial> {
        let dual = self.contragredient();
        let lhs = &dual.rep_apply(x, phi)?.pair(s) + &phi.pair(&self.rep_apply(x, s)?);
        let rhs = self.algebroid.anchor_of_section(x)?.apply(&phi.pair(s))?;
        Ok(&lhs - &rhs)
    }

    /// Adds `delta` to one matrix entry.
    pub fn perturb(&mut self, i: usize, r: usize, c: usize, delta: &Rational) {
        let d = Polynomial::constant(self.algebroid.nvars(), delta.clone());
        self.matrices[i][r][c] = &self.matrices[i][r][c] + &d;
    }

    /// Replaces the acting algebroid, keeping the matrices. Shapes must agree.
    pub fn with_algebroid(&self, algebroid: LieAlgebroid) -> Result<CdoRep> {
        CdoRep::new(algebroid, self.module_rank, self.matrices.clone())
    }

    /// The linear vector field on the total space of the module, over the
    /// ring with base variables followed by fiber coordinates `u_1..u_p`.
    ///
    /// Acts on base functions through `a(X)` and on fiber-linear functions
    /// through the contragredient: `η(X)(ℓ_φ) = ℓ_{D*_X φ}`.
    pub fn linear_vector_field(rep: &Verified<CdoRep>, x: &Section) -> Result<Derivation> {
        let m = rep.algebroid.nvars();
        let p = rep.module_rank;
        let total = m + p;
        let base_map: Vec<usize> = (0..m).collect();
        let up = |q: &Polynomial| q.embed(total, &base_map).expect("embedding into total space ring");
        let anchor = rep.algebroid.anchor_of_section(x)?;
        let mat = rep.matrix_of(x)?;
        let mut comps: Vec<Polynomial> = anchor.components().iter().map(up).collect();
        for r in 0..p {
            // η(u_r) = ℓ_{D*_X ε^r} = −Σ_c (Σ_i f_i M_i)[r][c] u_c
            let mut acc = Polynomial::zero(total);
            for (c, e) in mat[r].iter().enumerate() {
                if !e.is_zero() {
                    acc = &acc - &(&up(e) * &Polynomial::var(total, m + c)?);
                }
            }
            comps.push(acc);
        }
        Ok(Derivation::new(comps))
    }

    /// Fiber-linear function `ℓ_φ = Σ φ_r u_r` on the total space ring.
    pub fn linear_function(&self, phi: &ModuleSection) -> Result<Polynomial> {
        self.check_module(phi)?;
        let m = self.algebroid.nvars();
        let total = m + self.module_rank;
        let base_map: Vec<usize> = (0..m).collect();
        let mut acc = Polynomial::zero(total);
        for (r, f) in phi.coeffs().iter().enumerate() {
            acc = &acc + &(&f.embed(total, &base_map)? * &Polynomial::var(total, m + r)?);
        }
        Ok(acc)
    }

    /// Both sides of `ξ(μ(m)) = T(μ)(x(m)) − D(μ)^↑(μ(m))`, fiber components
    /// only (base components agree by construction): the linear vector field
    /// of `X` restricted to the image of `μ`, and `a(X)(μ) − D_X(μ)`.
    pub fn swap_sides(rep: &Verified<CdoRep>, x: &Section, mu: &ModuleSection) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
        let m = rep.algebroid.nvars();
        let p = rep.module_rank;
        rep.check_module(mu)?;
        let field = Self::linear_vector_field(rep, x)?;
        let mut subst: Vec<Polynomial> = (0..m).map(|j| Polynomial::var(m, j)).collect::<Result<_>>()?;
        subst.extend(mu.coeffs().iter().cloned());
        let lhs = field.components()[m..m + p]
            .iter()
            .map(|c| c.substitute(&subst))
            .collect::<Result<Vec<_>>>()?;
        let anchor = rep.algebroid.anchor_of_section(x)?;
        let dmu = rep.rep_apply(x, mu)?;
        let rhs = (0..p)
            .map(|r| Ok(&anchor.apply(mu.coeff(r))? - dmu.coeff(r)))
            .collect::<Result<Vec<_>>>()?;
        Ok((lhs, rhs))
    }
}

impl Validate for CdoRep {
    fn validate(&self, cfg: &CheckConfig) -> Report {
        CdoRep::validate(self, cfg)
    }
}
