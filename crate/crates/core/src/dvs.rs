//! Double vector spaces (double vector bundles over a point) in the
//! coordinate model: an element is a triple `(h, v, k)` in
//! `A^H × A^V × K`.
//!
//! The vertical dual is the dual of `𝒜 → A^H`; over `h ∈ A^H` its elements
//! are functionals `(v, k) ↦ ψ(v) + κ(k)`, so it has sides `A^H`, `K*` and
//! core `(A^V)*`. The horizontal dual mirrors this with
//! `(h, k) ↦ φ(h) + κ(k)` over `v ∈ A^V`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::foundation::linalg::{self, Matrix};
use crate::foundation::{int, Rational};
use crate::report::{Check, Report};
use crate::sampling::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DoubleVectorSpace {
    pub side_h: usize,
    pub side_v: usize,
    pub core: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DvsElement {
    pub h: Vec<Rational>,
    pub v: Vec<Rational>,
    pub k: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DualKind {
    Vertical,
    Horizontal,
}

/// An element of one of the two duals: the base point in the retained side,
/// the covector on the other side, and the covector `κ` on the core.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualElement {
    pub kind: DualKind,
    pub base: Vec<Rational>,
    pub fiber: Vec<Rational>,
    pub kappa: Vec<Rational>,
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn zeros(n: usize) -> Vec<Rational> {
    vec![int(0); n]
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zeros(n);
    v[i] = int(1);
    v
}

fn len_check(what: &str, v: &[Rational], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Dimensions(format!("{what} has length {}, expected {n}", v.len())));
    }
    Ok(())
}

impl DoubleVectorSpace {
    pub fn new(side_h: usize, side_v: usize, core: usize) -> Self {
        DoubleVectorSpace { side_h, side_v, core }
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.side_h, self.side_v, self.core]
    }

    /// Sides `A^H` and `K*`, core `(A^V)*`.
    pub fn vertical_dual(&self) -> DoubleVectorSpace {
        DoubleVectorSpace::new(self.side_h, self.core, self.side_v)
    }

    /// Sides `K*` and `A^V`, core `(A^H)*`.
    pub fn horizontal_dual(&self) -> DoubleVectorSpace {
        DoubleVectorSpace::new(self.core, self.side_v, self.side_h)
    }

    pub fn element(&self, h: Vec<Rational>, v: Vec<Rational>, k: Vec<Rational>) -> Result<DvsElement> {
        len_check("h", &h, self.side_h)?;
        len_check("v", &v, self.side_v)?;
        len_check("k", &k, self.core)?;
        Ok(DvsElement { h, v, k })
    }

    pub fn dual_element(
        &self,
        kind: DualKind,
        base: Vec<Rational>,
        fiber: Vec<Rational>,
        kappa: Vec<Rational>,
    ) -> Result<DualElement> {
        let (nb, nf) = match kind {
            DualKind::Vertical => (self.side_h, self.side_v),
            DualKind::Horizontal => (self.side_v, self.side_h),
        };
        len_check("base", &base, nb)?;
        len_check("fiber covector", &fiber, nf)?;
        len_check("core covector", &kappa, self.core)?;
        Ok(DualElement { kind, base, fiber, kappa })
    }

    /// Sum in `𝒜 → A^V`: adds `h` and `k` over a common `v`.
    pub fn horizontal_add(&self, a: &DvsElement, b: &DvsElement) -> Result<DvsElement> {
        if a.v != b.v {
            return Err(Error::Incompatible("horizontal sum needs equal v".into()));
        }
        Ok(DvsElement { h: add(&a.h, &b.h), v: a.v.clone(), k: add(&a.k, &b.k) })
    }

    /// Sum in `𝒜 → A^H`: adds `v` and `k` over a common `h`.
    pub fn vertical_add(&self, a: &DvsElement, b: &DvsElement) -> Result<DvsElement> {
        if a.h != b.h {
            return Err(Error::Incompatible("vertical sum needs equal h".into()));
        }
        Ok(DvsElement { h: a.h.clone(), v: add(&a.v, &b.v), k: add(&a.k, &b.k) })
    }

    /// Evaluation of a dual element on an element in its fiber.
    pub fn evaluate(&self, phi: &DualElement, xi: &DvsElement) -> Result<Rational> {
        match phi.kind {
            DualKind::Vertical => {
                if phi.base != xi.h {
                    return Err(Error::Incompatible("ξ does not lie over the base of Φ".into()));
                }
                Ok(linalg::dot(&phi.fiber, &xi.v) + linalg::dot(&phi.kappa, &xi.k))
            }
            DualKind::Horizontal => {
                if phi.base != xi.v {
                    return Err(Error::Incompatible("ξ does not lie over the base of Ψ".into()));
                }
                Ok(linalg::dot(&phi.fiber, &xi.h) + linalg::dot(&phi.kappa, &xi.k))
            }
        }
    }

    /// `⟨Φ, Ψ⟩ = ⟨Ψ, ξ⟩ − ⟨Φ, ξ⟩` for `Φ` vertical and `Ψ` horizontal over
    /// the same core covector, and `ξ` over both base points.
    pub fn pair_over_core_dual(&self, phi: &DualElement, psi: &DualElement, xi: &DvsElement) -> Result<Rational> {
        if phi.kind != DualKind::Vertical || psi.kind != DualKind::Horizontal {
            return Err(Error::Incompatible("expected a vertical and a horizontal dual element".into()));
        }
        if phi.kappa != psi.kappa {
            return Err(Error::Incompatible("Φ and Ψ project to different core covectors".into()));
        }
        Ok(self.evaluate(psi, xi)? - self.evaluate(phi, xi)?)
    }

    /// Some `ξ` compatible with `Φ` and `Ψ`, with core part `k`.
    pub fn compatible_element(&self, phi: &DualElement, psi: &DualElement, k: Vec<Rational>) -> Result<DvsElement> {
        self.element(phi.base.clone(), psi.base.clone(), k)
    }

    fn pair_any(&self, phi: &DualElement, psi: &DualElement) -> Rational {
        let xi = self.compatible_element(phi, psi, zeros(self.core)).expect("dimensions agree");
        self.pair_over_core_dual(phi, psi, &xi).expect("compatible by construction")
    }

    /// Coordinates on the fiber over `κ`: vertical `(h, ψ)`, horizontal `(v, φ)`.
    pub fn vertical_fiber_basis(&self, kappa: &[Rational]) -> Vec<DualElement> {
        let (nh, nv) = (self.side_h, self.side_v);
        (0..nh + nv)
            .map(|i| {
                let (b, f) = if i < nh { (unit(nh, i), zeros(nv)) } else { (zeros(nh), unit(nv, i - nh)) };
                DualElement { kind: DualKind::Vertical, base: b, fiber: f, kappa: kappa.to_vec() }
            })
            .collect()
    }

    pub fn horizontal_fiber_basis(&self, kappa: &[Rational]) -> Vec<DualElement> {
        let (nh, nv) = (self.side_h, self.side_v);
        (0..nh + nv)
            .map(|i| {
                let (b, f) = if i < nv { (unit(nv, i), zeros(nh)) } else { (zeros(nv), unit(nh, i - nv)) };
                DualElement { kind: DualKind::Horizontal, base: b, fiber: f, kappa: kappa.to_vec() }
            })
            .collect()
    }

    /// Matrix of the pairing between the fibers over `κ`.
    pub fn gram(&self, kappa: &[Rational]) -> Matrix {
        let rows = self.vertical_fiber_basis(kappa);
        let cols = self.horizontal_fiber_basis(kappa);
        rows.iter().map(|r| cols.iter().map(|c| self.pair_any(r, c)).collect()).collect()
    }

    fn random_dual(&self, kind: DualKind, kappa: &[Rational], s: &mut Sampler) -> DualElement {
        let (nb, nf) = match kind {
            DualKind::Vertical => (self.side_h, self.side_v),
            DualKind::Horizontal => (self.side_v, self.side_h),
        };
        DualElement { kind, base: s.rationals(nb), fiber: s.rationals(nf), kappa: kappa.to_vec() }
    }

    /// Well-definedness of the pairing under `choices` compatible `ξ`,
    /// full rank of the fiber Gram matrix, the displayed evaluations of
    /// zeros and core elements, and the interchange law.
    pub fn pair_check(&self, seed: u64, samples: usize, choices: usize) -> Report {
        let mut report = Report::new(format!("dvs_pair {:?}", self.dims()));
        let mut s = Sampler::new(seed, 0);
        let (nh, nv, nk) = (self.side_h, self.side_v, self.core);

        let mut zero = Check::new("zero_pairing");
        let z = zeros(nk);
        let phi0 = DualElement { kind: DualKind::Vertical, base: zeros(nh), fiber: zeros(nv), kappa: z.clone() };
        let psi0 = DualElement { kind: DualKind::Horizontal, base: zeros(nv), fiber: zeros(nh), kappa: z };
        for t in 0..choices {
            let xi = self.element(zeros(nh), zeros(nv), s.rationals(nk)).expect("dims");
            let v = self.pair_over_core_dual(&phi0, &psi0, &xi).expect("compatible");
            zero.record(v == int(0), || format!("choice #{t}"), || v.to_string());
        }
        report.push(zero);

        let mut wd = Check::new("well_defined");
        for t in 0..samples {
            let kappa = s.rationals(nk);
            let phi = self.random_dual(DualKind::Vertical, &kappa, &mut s);
            let psi = self.random_dual(DualKind::Horizontal, &kappa, &mut s);
            let first = self.pair_any(&phi, &psi);
            for c in 0..choices {
                let xi = self.compatible_element(&phi, &psi, s.rationals(nk)).expect("dims");
                let v = self.pair_over_core_dual(&phi, &psi, &xi).expect("compatible");
                wd.record(v == first, || format!("sample #{t} choice #{c}"), || format!("{v} vs {first}"));
            }
        }
        report.push(wd);

        let mut nondeg = Check::new("nondegenerate");
        for (label, kappa) in [("zero", zeros(nk)), ("random", s.rationals(nk))] {
            let g = self.gram(&kappa);
            let r = linalg::rank(&g);
            nondeg.record(r == nh + nv, || format!("fiber over {label} core covector"), || format!("rank {r} < {}", nh + nv));
        }
        report.push(nondeg);

        let mut ids = Check::new("zero_and_core_evaluations");
        for t in 0..samples {
            let (kappa, k) = (s.rationals(nk), s.rationals(nk));
            let (x, psi) = (s.rationals(nv), s.rationals(nv));
            // ⟨0̃_κ, 0̃^H_x +̄ k̄⟩ = ⟨κ, k⟩ and ⟨ψ̄, 0̃^H_x +̄ k̄⟩ = ⟨ψ, x⟩
            let xi = self.element(zeros(nh), x.clone(), k.clone()).expect("dims");
            let zk = DualElement { kind: DualKind::Vertical, base: zeros(nh), fiber: zeros(nv), kappa: kappa.clone() };
            let core = DualElement { kind: DualKind::Vertical, base: zeros(nh), fiber: psi.clone(), kappa: zeros(nk) };
            let (a, b) = (self.evaluate(&zk, &xi).expect("fits"), self.evaluate(&core, &xi).expect("fits"));
            ids.record(a == linalg::dot(&kappa, &k), || format!("vertical zero #{t}"), || a.to_string());
            ids.record(b == linalg::dot(&psi, &x), || format!("vertical core #{t}"), || b.to_string());
            let (y, phi) = (s.rationals(nh), s.rationals(nh));
            let xi = self.element(y.clone(), zeros(nv), k.clone()).expect("dims");
            let zk = DualElement { kind: DualKind::Horizontal, base: zeros(nv), fiber: zeros(nh), kappa: kappa.clone() };
            let core = DualElement { kind: DualKind::Horizontal, base: zeros(nv), fiber: phi.clone(), kappa: zeros(nk) };
            let (a, b) = (self.evaluate(&zk, &xi).expect("fits"), self.evaluate(&core, &xi).expect("fits"));
            ids.record(a == linalg::dot(&kappa, &k), || format!("horizontal zero #{t}"), || a.to_string());
            ids.record(b == linalg::dot(&phi, &y), || format!("horizontal core #{t}"), || b.to_string());
        }
        report.push(ids);

        let mut inter = Check::new("interchange");
        for t in 0..samples {
            // a, b share v; c, d share v; a, c share h; b, d share h
            let (h1, h2, v1, v2) = (s.rationals(nh), s.rationals(nh), s.rationals(nv), s.rationals(nv));
            let mk = |h: &[Rational], v: &[Rational], s: &mut Sampler| DvsElement { h: h.to_vec(), v: v.to_vec(), k: s.rationals(nk) };
            let (a, b, c, d) = (mk(&h1, &v1, &mut s), mk(&h2, &v1, &mut s), mk(&h1, &v2, &mut s), mk(&h2, &v2, &mut s));
            let lhs = self
                .vertical_add(&self.horizontal_add(&a, &b).expect("same v"), &self.horizontal_add(&c, &d).expect("same v"))
                .expect("same h");
            let rhs = self
                .horizontal_add(&self.vertical_add(&a, &c).expect("same h"), &self.vertical_add(&b, &d).expect("same h"))
                .expect("same v");
            inter.record(lhs == rhs, || format!("quadruple #{t}"), || "sums differ".into());
        }
        report.push(inter);
        report
    }

    /// `Z_V` and `Z_H` on the fibers over a core covector, derived from the
    /// pairing. `(𝒜^{*H})†` and `(𝒜^{*V})†` carry the dual bases of the
    /// horizontal `(v, φ)` and vertical `(h, ψ)` fiber coordinates.
    pub fn z_maps(&self) -> ZMaps {
        // fiber linear structure does not depend on κ, so use κ = 0
        let p = self.gram(&zeros(self.core));
        let p_inv = linalg::inverse(&p).expect("pairing is nondegenerate");
        // ⟨Z_V ϑ, Ψ⟩ = ϑ(Ψ) gives M_Vᵀ P = I; ⟨Φ, Z_H χ⟩ = χ(Φ) gives P M_H = I
        ZMaps { z_v: linalg::transpose(&p_inv), z_h: p_inv, dims: *self }
    }
}

/// Matrices of `Z_V: (𝒜^{*H})† → 𝒜^{*V}` and `Z_H: (𝒜^{*V})† → 𝒜^{*H}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMaps {
    pub z_v: Matrix,
    pub z_h: Matrix,
    dims: DoubleVectorSpace,
}

impl ZMaps {
    fn block_is(m: &Matrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>, scale: i64) -> bool {
        rows.clone().all(|r| {
            cols.clone().all(|c| {
                let expect = if r - rows.start == c - cols.start { int(scale) } else { int(0) };
                m[r][c] == expect
            })
        })
    }

    /// The dual relation, and the side and core behaviour of each map.
    pub fn check(&self) -> Report {
        let (nh, nv) = (self.dims.side_h, self.dims.side_v);
        let t = nh + nv;
        let mut report = Report::new(format!("dvs_zmaps {:?}", self.dims.dims()));
        let mut dual = Check::new("z_v_is_dual_of_z_h");
        dual.record(self.z_v == linalg::transpose(&self.z_h), || "matrix identity".into(), || format!("{:?}", self.z_v));
        report.push(dual);

        // ϑ coordinates: (ν on v, h on φ); Φ coordinates: (h, ψ)
        let mut zv = Check::new("z_v_preserves_side_negates_core");
        zv.record(Self::block_is(&self.z_v, 0..nh, nv..t, 1), || "side A^H".into(), || "not the identity".into());
        zv.record(Self::block_is(&self.z_v, nh..t, 0..nv, -1), || "core (A^V)*".into(), || "not minus the identity".into());
        zv.record(Self::block_is(&self.z_v, 0..nh, 0..nv, 0) && Self::block_is(&self.z_v, nh..t, nv..t, 0), || "off-diagonal".into(), || "mixing".into());
        report.push(zv);

        // χ coordinates: (φ on h, v on ψ); Ψ coordinates: (v, φ)
        let mut zh = Check::new("z_h_negates_side_preserves_core");
        zh.record(Self::block_is(&self.z_h, 0..nv, nh..t, -1), || "side A^V".into(), || "not minus the identity".into());
        zh.record(Self::block_is(&self.z_h, nv..t, 0..nh, 1), || "core (A^H)*".into(), || "not the identity".into());
        zh.record(Self::block_is(&self.z_h, 0..nv, 0..nh, 0) && Self::block_is(&self.z_h, nv..t, nh..t, 0), || "off-diagonal".into(), || "mixing".into());
        report.push(zh);

        // Z_H† ∘ Z_V⁻¹ is the identity of 𝒜^{*V}
        let mut comp = Check::new("composition");
        let inv = linalg::inverse(&self.z_v).expect("invertible");
        comp.record(linalg::matmul(&linalg::transpose(&self.z_h), &inv) == linalg::identity(t), || "Z_H† Z_V⁻¹".into(), || "not the identity".into());
        report.push(comp);
        report
    }
}

/// The linear cotangent model over a point for `A = Q^n`:
/// `ℱ = (φ, w) ∈ T*A*`, `𝒳 = (φ, ψ) ∈ T(A*)`, `ξ = (u, v) ∈ TA`,
/// `R(ℱ) = (u', θ) ∈ T*A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotangentModel {
    n: usize,
}

impl CotangentModel {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimensions("cotangent model needs n >= 1".into()));
        }
        Ok(CotangentModel { n })
    }

    /// `⟨⟨(φ, ψ), (u, v)⟩⟩ = ⟨φ, v⟩ + ⟨ψ, u⟩`.
    pub fn tangent_pairing(&self, x: &(Vec<Rational>, Vec<Rational>), xi: &(Vec<Rational>, Vec<Rational>)) -> Rational {
        linalg::dot(&x.0, &xi.1) + linalg::dot(&x.1, &xi.0)
    }

    /// `⟨ℱ, 𝒳⟩` over `A*`: covector `w` on the tangent vector `ψ`.
    pub fn cotangent_pairing_dual(&self, f: &(Vec<Rational>, Vec<Rational>), x: &(Vec<Rational>, Vec<Rational>)) -> Result<Rational> {
        if f.0 != x.0 {
            return Err(Error::Incompatible("ℱ and 𝒳 lie over different points of A*".into()));
        }
        Ok(linalg::dot(&f.1, &x.1))
    }

    /// `⟨R(ℱ), ξ⟩` over `A`.
    pub fn cotangent_pairing(&self, r: &(Vec<Rational>, Vec<Rational>), xi: &(Vec<Rational>, Vec<Rational>)) -> Result<Rational> {
        if r.0 != xi.0 {
            return Err(Error::Incompatible("R(ℱ) and ξ lie over different points of A".into()));
        }
        Ok(linalg::dot(&r.1, &xi.1))
    }

    /// `R(φ, w)`: side-preserving, so it lies over `w ∈ A` with side
    /// covector in `A*`; the covector is read off the defining identity
    /// with `𝒳 = (φ, 0)` and `ξ = (w, e_j)`.
    pub fn r_map(&self, f: &(Vec<Rational>, Vec<Rational>)) -> (Vec<Rational>, Vec<Rational>) {
        let x = (f.0.clone(), zeros(self.n));
        let theta = (0..self.n)
            .map(|j| {
                let xi = (f.1.clone(), unit(self.n, j));
                self.tangent_pairing(&x, &xi) - self.cotangent_pairing_dual(f, &x).expect("same point")
            })
            .collect();
        (f.1.clone(), theta)
    }

    /// The identity `⟨ℱ, 𝒳⟩ + ⟨R(ℱ), ξ⟩ = ⟨⟨𝒳, ξ⟩⟩` on seeded compatible
    /// triples, side preservation of `R`, and the `ℱ = 0` branch.
    pub fn check(&self, seed: u64, triples: usize) -> Report {
        let n = self.n;
        let mut s = Sampler::new(seed, 0);
        let mut report = Report::new(format!("dvs_vue n={n}"));
        let mut vue = Check::new("identity");
        let mut sides = Check::new("sides_preserved");
        for t in 0..triples {
            let (phi, w, psi, v) = (s.rationals(n), s.rationals(n), s.rationals(n), s.rationals(n));
            let f = (phi.clone(), w.clone());
            let x = (phi.clone(), psi);
            let r = self.r_map(&f);
            let xi = (r.0.clone(), v);
            let lhs = self.cotangent_pairing_dual(&f, &x).expect("same point") + self.cotangent_pairing(&r, &xi).expect("same point");
            let rhs = self.tangent_pairing(&x, &xi);
            vue.record(lhs == rhs, || format!("triple #{t}"), || (&lhs - &rhs).to_string());
            sides.record(r.0 == w && r.1 == phi, || format!("triple #{t}"), || "sides moved".into());
        }
        report.push(vue);
        report.push(sides);

        let mut zero = Check::new("zero_covector");
        for t in 0..triples.min(10) {
            let f = (zeros(n), zeros(n));
            let x = (zeros(n), s.rationals(n));
            let r = self.r_map(&f);
            let xi = (r.0.clone(), s.rationals(n));
            let lhs = self.cotangent_pairing(&r, &xi).expect("same point");
            let rhs = self.tangent_pairing(&x, &xi);
            zero.record(lhs == int(0) && rhs == int(0), || format!("triple #{t}"), || format!("{lhs} / {rhs}"));
        }
        report.push(zero);
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_dimensions() {
        let d = DoubleVectorSpace::new(1, 1, 0);
        assert_eq!(d.vertical_dual().dims(), [1, 0, 1]);
        assert_eq!(d.horizontal_dual().dims(), [0, 1, 1]);
        let e = DoubleVectorSpace::new(2, 3, 4);
        assert_eq!(e.vertical_dual().vertical_dual(), e);
        assert_eq!(e.horizontal_dual().horizontal_dual(), e);
    }

    #[test]
    fn zero_functional_is_zero() {
        let d = DoubleVectorSpace::new(2, 2, 1);
        let z = d.dual_element(DualKind::Vertical, vec![int(1), int(2)], zeros(2), zeros(1)).unwrap();
        let xi = d.element(vec![int(1), int(2)], vec![int(5), int(-1)], vec![int(3)]).unwrap();
        assert_eq!(d.evaluate(&z, &xi).unwrap(), int(0));
    }

    #[test]
    fn trivial_core_pairing() {
        let d = DoubleVectorSpace::new(1, 1, 0);
        let phi = d.dual_element(DualKind::Vertical, vec![int(2)], vec![int(3)], vec![]).unwrap();
        let psi = d.dual_element(DualKind::Horizontal, vec![int(5)], vec![int(7)], vec![]).unwrap();
        let xi = d.element(vec![int(2)], vec![int(5)], vec![]).unwrap();
        // ⟨Ψ,ξ⟩ − ⟨Φ,ξ⟩ = 7·2 − 3·5
        assert_eq!(d.pair_over_core_dual(&phi, &psi, &xi).unwrap(), int(-1));
        assert!(d.pair_check(0, 5, 10).passed());
    }

    #[test]
    fn incompatible_inputs_rejected() {
        let d = DoubleVectorSpace::new(1, 1, 1);
        let phi = d.dual_element(DualKind::Vertical, vec![int(1)], vec![int(0)], vec![int(1)]).unwrap();
        let psi = d.dual_element(DualKind::Horizontal, vec![int(1)], vec![int(0)], vec![int(2)]).unwrap();
        let xi = d.element(vec![int(1)], vec![int(1)], vec![int(0)]).unwrap();
        assert!(d.pair_over_core_dual(&phi, &psi, &xi).is_err());
        assert!(d.element(vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn random_pairing_checks() {
        for dims in [(2, 2, 1), (2, 3, 2)] {
            let d = DoubleVectorSpace::new(dims.0, dims.1, dims.2);
            let r = d.pair_check(1, 10, 10);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn z_maps_small() {
        let d = DoubleVectorSpace::new(1, 1, 1);
        let z = d.z_maps();
        assert_eq!(z.z_v, vec![vec![int(0), int(1)], vec![int(-1), int(0)]]);
        assert!(z.check().passed());
        let core0 = DoubleVectorSpace::new(2, 0, 0).z_maps();
        assert_eq!(core0.z_v, linalg::identity(2));
    }

    #[test]
    fn vue_examples() {
        let m = CotangentModel::new(1).unwrap();
        let one = vec![int(1)];
        let f = (one.clone(), one.clone());
        let x = (one.clone(), one.clone());
        let r = m.r_map(&f);
        let xi = (r.0.clone(), one.clone());
        let lhs = m.cotangent_pairing_dual(&f, &x).unwrap() + m.cotangent_pairing(&r, &xi).unwrap();
        assert_eq!(lhs, m.tangent_pairing(&x, &xi));
        assert!(CotangentModel::new(3).unwrap().check(0, 100).passed());
        assert!(CotangentModel::new(0).is_err());
    }
}
