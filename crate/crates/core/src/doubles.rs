//! Matched pairs, their doubles, Lie bialgebras and Manin triples.

use crate::algebroid::{LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::foundation::linalg::{self, Matrix};
use crate::foundation::{int, Polynomial, Rational};
use crate::report::{Check, Report};
use crate::representation::CdoRep;
use crate::sampling::{CheckConfig, Sampler};

/// Two algebroids over one base with mutual representations: `rho` is a
/// representation of `A` on the module of `B`, `sigma` one of `B` on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    a: LieAlgebroid,
    b: LieAlgebroid,
    rho: CdoRep,
    sigma: CdoRep,
}

impl MatchedPairData {
    /// The representations are rebound to `a` and `b`, so only their
    /// matrices are taken from the inputs.
    pub fn new(a: LieAlgebroid, b: LieAlgebroid, rho: CdoRep, sigma: CdoRep) -> Result<Self> {
        if a.base() != b.base() {
            return Err(Error::Base(format!("{:?} vs {:?}", a.base().vars(), b.base().vars())));
        }
        if rho.module_rank() != b.rank() {
            return Err(Error::Rank { expected: b.rank(), found: rho.module_rank() });
        }
        if sigma.module_rank() != a.rank() {
            return Err(Error::Rank { expected: a.rank(), found: sigma.module_rank() });
        }
        let rho = rho.with_algebroid(a.clone())?;
        let sigma = sigma.with_algebroid(b.clone())?;
        Ok(MatchedPairData { a, b, rho, sigma })
    }

    /// Both representations zero.
    pub fn trivial(a: LieAlgebroid, b: LieAlgebroid) -> Result<Self> {
        let rho = CdoRep::trivial(a.clone(), b.rank());
        let sigma = CdoRep::trivial(b.clone(), a.rank());
        Self::new(a, b, rho, sigma)
    }

    pub fn a(&self) -> &LieAlgebroid {
        &self.a
    }

    pub fn b(&self) -> &LieAlgebroid {
        &self.b
    }

    pub fn rho(&self) -> &CdoRep {
        &self.rho
    }

    pub fn sigma(&self) -> &CdoRep {
        &self.sigma
    }

    /// `(B, A, σ, ρ)`.
    pub fn swap(&self) -> MatchedPairData {
        MatchedPairData { a: self.b.clone(), b: self.a.clone(), rho: self.sigma.clone(), sigma: self.rho.clone() }
    }

    /// Adds `delta` to one coefficient, keeping the representations bound
    /// to the (possibly modified) algebroids.
    pub fn perturbed(&self, p: &Perturbation) -> Result<MatchedPairData> {
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        let mut rho = self.rho.clone();
        let mut sigma = self.sigma.clone();
        match p.target {
            Target::A => a.perturb_structure(p.indices[0], p.indices[1], p.indices[2], &p.delta)?,
            Target::B => b.perturb_structure(p.indices[0], p.indices[1], p.indices[2], &p.delta)?,
            Target::Rho => rho.perturb(p.indices[0], p.indices[1], p.indices[2], &p.delta),
            Target::Sigma => sigma.perturb(p.indices[0], p.indices[1], p.indices[2], &p.delta),
        }
        MatchedPairData::new(a, b, rho, sigma)
    }

    /// `ρ_X[Y₁,Y₂] − [ρ_X Y₁, Y₂] − [Y₁, ρ_X Y₂] − ρ_{σ_{Y₂}X} Y₁ + ρ_{σ_{Y₁}X} Y₂`.
    pub fn rho_residual(&self, x: &Section, y1: &Section, y2: &Section) -> Result<Section> {
        twisted_residual(&self.b, &self.rho, &self.sigma, x, y1, y2)
    }

    /// The same with the roles of the two sides exchanged.
    pub fn sigma_residual(&self, y: &Section, x1: &Section, x2: &Section) -> Result<Section> {
        twisted_residual(&self.a, &self.sigma, &self.rho, y, x1, x2)
    }

    /// `a(σ_Y X) − b(ρ_X Y) − [b(Y), a(X)]`, as a derivation.
    pub fn anchor_residual(&self, x: &Section, y: &Section) -> Result<crate::algebroid::Derivation> {
        let lhs = self.a.anchor_of_section(&self.sigma.rep_apply(y, x)?)?;
        let rhs = self.b.anchor_of_section(&self.rho.rep_apply(x, y)?)?;
        let comm = self.b.anchor_of_section(y)?.commutator(&self.a.anchor_of_section(x)?)?;
        Ok(lhs.sub(&rhs).sub(&comm))
    }
}

// `D^L_u [v₁,v₂]_R − [D^L_u v₁, v₂]_R − [v₁, D^L_u v₂]_R − D^L_{D^R_{v₂}u} v₁ + D^L_{D^R_{v₁}u} v₂`
fn twisted_residual(
    target: &LieAlgebroid,
    act: &CdoRep,
    back: &CdoRep,
    u: &Section,
    v1: &Section,
    v2: &Section,
) -> Result<Section> {
    let lhs = act.rep_apply(u, &target.bracket_sections(v1, v2)?)?;
    let t1 = target.bracket_sections(&act.rep_apply(u, v1)?, v2)?;
    let t2 = target.bracket_sections(v1, &act.rep_apply(u, v2)?)?;
    let t3 = act.rep_apply(&back.rep_apply(v2, u)?, v1)?;
    let t4 = act.rep_apply(&back.rep_apply(v1, u)?, v2)?;
    Ok(lhs.sub(&t1).sub(&t2).sub(&t3).add(&t4))
}

/// Checks the three matched-pair equations on all generator tuples and on
/// seeded random sections. The validity of `A`, `B`, `ρ` and `σ` is
/// reported as prerequisite checks rather than raised as an error, so the
/// verdict covers every axiom of the double.
pub fn check_matched(mp: &MatchedPairData, cfg: &CheckConfig) -> Report {
    let mut report = Report::new("matched_pair");
    report.absorb("A", mp.a.validate(cfg));
    report.absorb("B", mp.b.validate(cfg));
    report.absorb("rho", mp.rho.validate(cfg));
    report.absorb("sigma", mp.sigma.validate(cfg));

    let (na, nb) = (mp.a.rank(), mp.b.rank());
    let names = mp.a.base().vars().to_vec();
    let mut sampler = Sampler::from_config(cfg);
    let ga = |i: usize| mp.a.generator(i);
    let gb = |i: usize| mp.b.generator(i);
    let an = |i: usize| mp.a.generators()[i].as_str();
    let bn = |i: usize| mp.b.generators()[i].as_str();

    let mut rho_check = Check::new("rho_derivation");
    for i in 0..na {
        for j in 0..nb {
            for k in 0..nb {
                let r = mp.rho_residual(&ga(i), &gb(j), &gb(k)).expect("well formed");
                rho_check.record(r.is_zero(), || format!("({},{},{})", an(i), bn(j), bn(k)), || r.display_with(&names).to_string());
            }
        }
    }
    for t in 0..cfg.samples {
        let x = mp.a.random_section(&mut sampler);
        let y1 = mp.b.random_section(&mut sampler);
        let y2 = mp.b.random_section(&mut sampler);
        let r = mp.rho_residual(&x, &y1, &y2).expect("well formed");
        rho_check.record(r.is_zero(), || format!("random triple #{t}"), || r.display_with(&names).to_string());
    }
    report.push(rho_check);

    let mut sigma_check = Check::new("sigma_derivation");
    for j in 0..nb {
        for i in 0..na {
            for k in 0..na {
                let r = mp.sigma_residual(&gb(j), &ga(i), &ga(k)).expect("well formed");
                sigma_check.record(r.is_zero(), || format!("({},{},{})", bn(j), an(i), an(k)), || r.display_with(&names).to_string());
            }
        }
    }
    for t in 0..cfg.samples {
        let y = mp.b.random_section(&mut sampler);
        let x1 = mp.a.random_section(&mut sampler);
        let x2 = mp.a.random_section(&mut sampler);
        let r = mp.sigma_residual(&y, &x1, &x2).expect("well formed");
        sigma_check.record(r.is_zero(), || format!("random triple #{t}"), || r.display_with(&names).to_string());
    }
    report.push(sigma_check);

    let mut anchor_check = Check::new("anchor_compatibility");
    for i in 0..na {
        for j in 0..nb {
            let r = mp.anchor_residual(&ga(i), &gb(j)).expect("well formed");
            anchor_check.record(r.is_zero(), || format!("({},{})", an(i), bn(j)), || r.display_with(&names).to_string());
        }
    }
    for t in 0..cfg.samples {
        let x = mp.a.random_section(&mut sampler);
        let y = mp.b.random_section(&mut sampler);
        let r = mp.anchor_residual(&x, &y).expect("well formed");
        anchor_check.record(r.is_zero(), || format!("random pair #{t}"), || r.display_with(&names).to_string());
    }
    report.push(anchor_check);
    report
}

/// The algebroid on `A ⊕ B` with anchor `a + b` and
/// `[X ⊕ 0, 0 ⊕ Y] = −σ_Y(X) ⊕ ρ_X(Y)`. Generators of `A` come first.
pub fn matched_double(mp: &MatchedPairData) -> LieAlgebroid {
    let (na, nb) = (mp.a.rank(), mp.b.rank());
    let m = mp.a.nvars();
    let names = mp.a.generators().iter().chain(mp.b.generators()).cloned();
    let mut d = LieAlgebroid::abelian(mp.a.base().clone(), na + nb)
        .with_generators(names)
        .expect("rank matches name count");
    let set = |d: &mut LieAlgebroid, i: usize, j: usize, k: usize, p: &Polynomial| {
        if !p.is_zero() {
            d.set_structure_raw(i, j, k, p.clone()).expect("in range");
        }
    };
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                set(&mut d, i, j, k, mp.a.structure(i, j, k));
            }
        }
        for jb in 0..m {
            d.set_anchor(i, jb, mp.a.anchor_component(i, jb).clone()).expect("in range");
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                set(&mut d, na + i, na + j, na + k, mp.b.structure(i, j, k));
            }
        }
        for jb in 0..m {
            d.set_anchor(na + i, jb, mp.b.anchor_component(i, jb).clone()).expect("in range");
        }
    }
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                let p = -mp.sigma.matrix_entry(j, k, i);
                set(&mut d, i, na + j, k, &p);
                set(&mut d, na + j, i, k, &-&p);
            }
            for l in 0..nb {
                let p = mp.rho.matrix_entry(i, l, j).clone();
                set(&mut d, i, na + j, na + l, &p);
                set(&mut d, na + j, i, na + l, &-&p);
            }
        }
    }
    d
}

/// Splits `d` after its first `split_rank` generators and reads `ρ` and `σ`
/// off the mixed brackets.
pub fn extract_matched(d: &LieAlgebroid, split_rank: usize) -> Result<MatchedPairData> {
    let n = d.rank();
    if split_rank > n {
        return Err(Error::IndexSet(format!("split rank {split_rank} exceeds rank {n}")));
    }
    let na = split_rank;
    let nb = n - na;
    let a = d.restrict(&(0..na).collect::<Vec<_>>())?;
    let b = d.restrict(&(na..n).collect::<Vec<_>>())?;
    let m = d.nvars();
    let zero = || Polynomial::zero(m);
    let mut rho = vec![vec![vec![zero(); nb]; nb]; na];
    let mut sigma = vec![vec![vec![zero(); na]; na]; nb];
    for i in 0..na {
        for j in 0..nb {
            for l in 0..nb {
                rho[i][l][j] = d.structure(i, na + j, na + l).clone();
            }
            for k in 0..na {
                sigma[j][k][i] = -d.structure(i, na + j, k);
            }
        }
    }
    let rho = CdoRep::new(a.clone(), nb, rho)?;
    let sigma = CdoRep::new(b.clone(), na, sigma)?;
    MatchedPairData::new(a, b, rho, sigma)
}

/// A Lie bialgebra given by the brackets on `g` and on `g*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBialgebraData {
    g: LieAlgebroid,
    gstar: LieAlgebroid,
}

impl LieBialgebraData {
    pub fn new(g: LieAlgebroid, gstar: LieAlgebroid) -> Result<Self> {
        for x in [&g, &gstar] {
            if !x.base().is_point() {
                return Err(Error::NotAPoint(x.nvars()));
            }
        }
        if g.rank() != gstar.rank() {
            return Err(Error::Rank { expected: g.rank(), found: gstar.rank() });
        }
        Ok(LieBialgebraData { g, gstar })
    }

    pub fn g(&self) -> &LieAlgebroid {
        &self.g
    }

    pub fn gstar(&self) -> &LieAlgebroid {
        &self.gstar
    }

    pub fn swap(&self) -> LieBialgebraData {
        LieBialgebraData { g: self.gstar.clone(), gstar: self.g.clone() }
    }

    /// `(g, g*, ad*_g, ad*_{g*})`.
    pub fn matched_pair(&self) -> MatchedPairData {
        let rho = CdoRep::coadjoint(&self.g).expect("base is a point");
        let sigma = CdoRep::coadjoint(&self.gstar).expect("base is a point");
        MatchedPairData::new(self.g.clone(), self.gstar.clone(), rho, sigma).expect("ranks agree")
    }

    /// Adds `delta` to `c[i][j][k]` of `g` (`on_dual = false`) or of `g*`.
    pub fn perturbed(&self, on_dual: bool, i: usize, j: usize, k: usize, delta: &Rational) -> Result<Self> {
        let mut out = self.clone();
        let target = if on_dual { &mut out.gstar } else { &mut out.g };
        target.perturb_structure(i, j, k, delta)?;
        Ok(out)
    }
}

/// A symmetric bilinear form on a `dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearPairing {
    matrix: Matrix,
}

impl BilinearPairing {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Dimensions("pairing matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::Dimensions(format!("pairing matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(BilinearPairing { matrix })
    }

    /// `⟨X + φ, Y + ψ⟩ = ψ(X) + φ(Y)` on `g ⊕ g*`.
    pub fn hyperbolic(n: usize) -> Self {
        let mut m = linalg::zeros(2 * n, 2 * n);
        for i in 0..n {
            m[i][n + i] = int(1);
            m[n + i][i] = int(1);
        }
        BilinearPairing { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        linalg::dot(u, &linalg::matvec(&self.matrix, v))
    }
}

/// The double of `bi` with its canonical pairing.
pub fn drinfeld_double(bi: &LieBialgebraData) -> (LieAlgebroid, BilinearPairing) {
    (matched_double(&bi.matched_pair()), BilinearPairing::hyperbolic(bi.g.rank()))
}

/// The matched-pair equations for the two coadjoint representations.
pub fn check_bialgebra_twisted(bi: &LieBialgebraData, cfg: &CheckConfig) -> Report {
    let mut r = check_matched(&bi.matched_pair(), cfg);
    r.subject = "bialgebra".into();
    r
}

fn constant_vector(s: &Section) -> Vec<Rational> {
    s.coeffs().iter().map(|p| p.as_constant().expect("constant coefficients")).collect()
}

fn index_label(d: &LieAlgebroid, idx: &[usize]) -> String {
    d.name_tuple(idx)
}

/// Invariance, subalgebra closure, isotropy, coisotropy and nondegeneracy
/// for a Lie algebra with a pairing and a splitting into two index sets.
pub fn check_manin(d: &LieAlgebroid, pairing: &BilinearPairing, sub1: &[usize], sub2: &[usize]) -> Result<Report> {
    if !d.base().is_point() {
        return Err(Error::NotAPoint(d.nvars()));
    }
    let n = d.rank();
    if pairing.dim() != n {
        return Err(Error::Dimensions(format!("pairing of dimension {} for rank {n}", pairing.dim())));
    }
    let mut seen = vec![false; n];
    for &i in sub1.iter().chain(sub2) {
        if i >= n || seen[i] {
            return Err(Error::IndexSet(format!("{sub1:?} and {sub2:?} do not partition 0..{n}")));
        }
        seen[i] = true;
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::IndexSet(format!("{sub1:?} and {sub2:?} do not partition 0..{n}")));
    }

    let mut report = Report::new("manin");
    let basis: Vec<Vec<Rational>> = (0..n).map(|i| constant_vector(&d.generator(i))).collect();
    let br: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|i| (0..n).map(|j| constant_vector(&d.generator_bracket(i, j))).collect())
        .collect();

    let mut inv = Check::new("invariance");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let r = pairing.eval(&br[x][y], &basis[z]) + pairing.eval(&basis[y], &br[x][z]);
                inv.record(r == int(0), || index_label(d, &[x, y, z]), || r.to_string());
            }
        }
    }
    report.push(inv);

    for (label, sub) in [("1", sub1), ("2", sub2)] {
        let mut closed = Check::new(format!("closure_{label}"));
        for &i in sub {
            for &j in sub {
                let leak: Vec<usize> = (0..n).filter(|k| !sub.contains(k) && br[i][j][*k] != int(0)).collect();
                closed.record(leak.is_empty(), || index_label(d, &[i, j]), || format!("components outside {leak:?}"));
            }
        }
        report.push(closed);

        let mut iso = Check::new(format!("isotropic_{label}"));
        for &i in sub {
            for &j in sub {
                let v = pairing.eval(&basis[i], &basis[j]);
                iso.record(v == int(0), || index_label(d, &[i, j]), || v.to_string());
            }
        }
        report.push(iso);

        // sub^⊥ = kernel of the rows ⟨e_s, ·⟩ for s in sub
        let rows: Matrix = sub.iter().map(|&s| pairing.matrix[s].clone()).collect();
        let perp = linalg::kernel(&rows, n);
        let mut coiso = Check::new(format!("coisotropic_{label}"));
        for (t, w) in perp.iter().enumerate() {
            let outside: Vec<usize> = (0..n).filter(|k| !sub.contains(k) && w[*k] != int(0)).collect();
            coiso.record(
                outside.is_empty(),
                || format!("orthogonal vector #{t}"),
                || format!("{:?}", w.iter().map(ToString::to_string).collect::<Vec<_>>()),
            );
        }
        if perp.is_empty() {
            coiso.record(true, String::new, String::new);
        }
        report.push(coiso);
    }

    let mut nondeg = Check::new("nondegenerate");
    let rank = linalg::rank(&pairing.matrix);
    nondeg.record(rank == n, || "pairing matrix".into(), || format!("rank {rank} < {n}"));
    report.push(nondeg);
    Ok(report)
}

/// Which coefficient a perturbation touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Target {
    A,
    B,
    Rho,
    Sigma,
}

/// A fixed rational added to one coefficient. For `A` and `B` the indices
/// are `(i, j, k)` of a structure function (its mirror is updated too);
/// for `Rho` and `Sigma` they are `(generator, row, column)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Perturbation {
    pub target: Target,
    pub indices: [usize; 3],
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub delta: Rational,
}

impl std::fmt::Display for Perturbation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}{:?} += {}", self.target, self.indices, self.delta)
    }
}

/// Draws a reproducible single-coefficient perturbation of `mp` by `+1`.
pub fn random_perturbation(mp: &MatchedPairData, seed: u64) -> Perturbation {
    let mut s = Sampler::new(seed, 0);
    let (na, nb) = (mp.a.rank(), mp.b.rank());
    let mut targets = vec![Target::Rho, Target::Sigma];
    if na >= 2 {
        targets.push(Target::A);
    }
    if nb >= 2 {
        targets.push(Target::B);
    }
    let target = targets[s.index(targets.len())];
    let distinct_pair = |s: &mut Sampler, n: usize| {
        let i = s.index(n);
        let j = (i + 1 + s.index(n - 1)) % n;
        (i, j)
    };
    let indices = match target {
        Target::A => {
            let (i, j) = distinct_pair(&mut s, na);
            [i, j, s.index(na)]
        }
        Target::B => {
            let (i, j) = distinct_pair(&mut s, nb);
            [i, j, s.index(nb)]
        }
        Target::Rho => [s.index(na), s.index(nb), s.index(nb)],
        Target::Sigma => [s.index(nb), s.index(na), s.index(na)],
    };
    Perturbation { target, indices, delta: int(1) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::BaseSpace;
    use crate::fixtures;

    fn cfg() -> CheckConfig {
        CheckConfig::default()
    }

    #[test]
    fn zero_reps_over_a_point_are_matched() {
        let a = LieAlgebroid::abelian(BaseSpace::point(), 2);
        let b = LieAlgebroid::abelian(BaseSpace::point(), 3);
        let mp = MatchedPairData::trivial(a, b).unwrap();
        assert!(check_matched(&mp, &cfg()).passed());
    }

    #[test]
    fn zero_reps_give_direct_product() {
        let mp = MatchedPairData::trivial(fixtures::aff1(), fixtures::sl2()).unwrap();
        let d = matched_double(&mp);
        assert_eq!(d.rank(), 5);
        for i in 0..2 {
            for j in 2..5 {
                assert!(d.generator_bracket(i, j).is_zero());
            }
        }
        assert_eq!(d.restrict(&[2, 3, 4]).unwrap(), fixtures::sl2());
        let back = extract_matched(&d, 2).unwrap();
        assert!(back.rho().matrices().iter().flatten().flatten().all(Polynomial::is_zero));
        assert!(back.sigma().matrices().iter().flatten().flatten().all(Polynomial::is_zero));
    }

    #[test]
    fn sl2_borel_split() {
        let g = fixtures::sl2();
        let mp = extract_matched(&g, 2).unwrap();
        assert!(check_matched(&mp, &cfg()).passed());
        assert_eq!(matched_double(&mp), g);
    }

    #[test]
    fn sl2_split_with_e_first() {
        let g = fixtures::sl2().permute(&[1, 0, 2]).unwrap();
        let mp = extract_matched(&g, 1).unwrap();
        assert!(check_matched(&mp, &cfg()).passed());
        assert_eq!(matched_double(&mp), g);
        // E and F alone do not close
        let bad = fixtures::sl2().permute(&[1, 2, 0]).unwrap();
        assert!(matches!(extract_matched(&bad, 2), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn sigma_perturbation_breaks_second_equation() {
        let mp = extract_matched(&fixtures::sl2(), 2).unwrap();
        let p = Perturbation { target: Target::Sigma, indices: [0, 0, 0], delta: int(1) };
        let r = check_matched(&mp.perturbed(&p).unwrap(), &cfg());
        assert!(!r.check("sigma_derivation").unwrap().passed);
        assert!(!validate_double(&mp.perturbed(&p).unwrap()));
    }

    fn validate_double(mp: &MatchedPairData) -> bool {
        matched_double(mp).validate(&cfg()).passed()
    }

    #[test]
    fn coadjoint_with_abelian_dual_is_semidirect() {
        let g = fixtures::sl2();
        let bi = LieBialgebraData::new(g.clone(), LieAlgebroid::abelian(BaseSpace::point(), 3)).unwrap();
        let (d, pairing) = drinfeld_double(&bi);
        // [X, φ] = ad*_X φ: [H, H*] = 0, [H, E*] = -2 E*
        let e_star = d.generator(4);
        assert_eq!(d.bracket_sections(&d.generator(0), &e_star).unwrap(), e_star.scale(&int(-2)));
        assert!(check_bialgebra_twisted(&bi, &cfg()).passed());
        assert!(check_manin(&d, &pairing, &[0, 1, 2], &[3, 4, 5]).unwrap().passed());
    }

    #[test]
    fn abelian_double_and_hyperbolic_pairing() {
        let ab = LieAlgebroid::abelian(BaseSpace::point(), 2);
        let bi = LieBialgebraData::new(ab.clone(), ab).unwrap();
        let (d, p) = drinfeld_double(&bi);
        assert!(d.structure_is_zero());
        assert_eq!(p.matrix()[0][2], int(1));
        assert_eq!(p.matrix()[0][1], int(0));
        assert!(check_manin(&d, &p, &[0, 1], &[2, 3]).unwrap().passed());
    }

    #[test]
    fn standard_sl2_double() {
        let bi = fixtures::sl2_standard();
        assert!(check_bialgebra_twisted(&bi, &cfg()).passed());
        let (d, p) = drinfeld_double(&bi);
        assert!(d.validate(&cfg()).passed());
        let r = check_manin(&d, &p, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.check("invariance").unwrap().cases, 216);
        let identity = BilinearPairing::new(linalg::identity(6)).unwrap();
        let r = check_manin(&d, &identity, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert!(!r.check("invariance").unwrap().passed);
        assert!(r.check("invariance").unwrap().witness.is_some());
    }

    #[test]
    fn scaled_cobracket_fails_both_ways() {
        let bi = fixtures::sl2_standard().perturbed(true, 0, 1, 1, &int(1)).unwrap();
        assert!(!check_bialgebra_twisted(&bi, &cfg()).passed());
        assert!(!drinfeld_double(&bi).0.validate(&cfg()).passed());
    }

    #[test]
    fn manin_input_errors() {
        let (d, p) = drinfeld_double(&fixtures::sl2_standard());
        assert!(check_manin(&d, &p, &[0, 1], &[3, 4, 5]).is_err());
        assert!(check_manin(&d, &p, &[0, 1, 2, 3], &[3, 4, 5]).is_err());
        assert!(BilinearPairing::new(vec![vec![int(0), int(1)], vec![int(0), int(0)]]).is_err());
        assert!(LieBialgebraData::new(fixtures::sl2(), fixtures::aff1()).is_err());
    }

    #[test]
    fn perturbations_are_reproducible() {
        let mp = extract_matched(&fixtures::sl2(), 2).unwrap();
        assert_eq!(random_perturbation(&mp, 5), random_perturbation(&mp, 5));
        for seed in 0..20 {
            let p = random_perturbation(&mp, seed);
            let q = mp.perturbed(&p).unwrap();
            assert_ne!(q, mp);
        }
    }
}
