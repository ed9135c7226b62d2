//! Built-in examples: Lie algebras, algebroids over lines and planes,
//! matched pairs and Lie bialgebras.
//!
//! Constants that are not forced by a definition (the dual bracket of a
//! coboundary bialgebra) are computed from an r-matrix and only returned
//! after an exhaustive cocycle and Jacobi check.

use crate::algebroid::{BaseSpace, LieAlgebroid};
use crate::doubles::{extract_matched, LieBialgebraData, MatchedPairData};
use crate::error::{Error, Result};
use crate::foundation::linalg::{self, Matrix};
use crate::foundation::{int, Polynomial, Rational};
use crate::representation::CdoRep;
use crate::sampling::CheckConfig;

/// `[H,E] = 2E`, `[H,F] = −2F`, `[E,F] = H`.
pub fn sl2() -> LieAlgebroid {
    LieAlgebroid::lie_algebra(["H", "E", "F"], &[(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))])
        .expect("valid constants")
}

/// sl2 with `[E,F] = H + E`; fails Jacobi at `(H,E,F)`.
pub fn sl2_broken() -> LieAlgebroid {
    let mut g = sl2();
    g.perturb_structure(1, 2, 1, &int(1)).expect("in range");
    g
}

/// `[e1, e2] = e2`.
pub fn aff1() -> LieAlgebroid {
    LieAlgebroid::lie_algebra(["e1", "e2"], &[(0, 1, 1, int(1))]).expect("valid constants")
}

/// The action algebroid of aff(1) on the line: `a(e1) = −x d/dx`,
/// `a(e2) = d/dx`.
pub fn action_aff1_on_line() -> LieAlgebroid {
    let mut out = LieAlgebroid::abelian(BaseSpace::new(["x"]).expect("one name"), 2)
        .with_generators(["e1", "e2"])
        .expect("two names");
    out.set_bracket(0, 1, 1, Polynomial::one(1)).expect("in range");
    out.set_anchor(0, 0, -Polynomial::var(1, 0).expect("in range")).expect("in range");
    out.set_anchor(1, 0, Polynomial::one(1)).expect("in range");
    out
}

/// The tangent bundle of `R^m` with its coordinate frame.
pub fn tangent_bundle(vars: &[&str]) -> LieAlgebroid {
    let m = vars.len();
    let base = BaseSpace::new(vars.iter().copied()).expect("distinct names");
    let names: Vec<String> = vars.iter().map(|v| format!("d{v}")).collect();
    let mut t = LieAlgebroid::abelian(base, m).with_generators(names).expect("rank m");
    for i in 0..m {
        t.set_anchor(i, i, Polynomial::one(m)).expect("in range");
    }
    t
}

/// The r-matrix `E∧F = E⊗F − F⊗E` of sl2.
pub fn sl2_standard_r() -> Matrix {
    let mut r = linalg::zeros(3, 3);
    r[1][2] = int(1);
    r[2][1] = int(-1);
    r
}

/// `δ(x) = [x⊗1 + 1⊗x, r]` as matrices `δ(e_c)[a][b]`.
pub fn coboundary(g: &LieAlgebroid, r: &Matrix) -> Vec<Matrix> {
    (0..g.rank()).map(|c| act(g, c, r)).collect()
}

fn constant(g: &LieAlgebroid, i: usize, j: usize, k: usize) -> Rational {
    g.structure(i, j, k).as_constant().expect("Lie algebra constants")
}

// e_x · t for t in g⊗g: Σ ([e_x, e_a] ⊗ e_b + e_a ⊗ [e_x, e_b]) t_ab
fn act(g: &LieAlgebroid, x: usize, t: &Matrix) -> Matrix {
    let n = g.rank();
    let mut out = linalg::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            if t[a][b] == int(0) {
                continue;
            }
            for k in 0..n {
                let c1 = constant(g, x, a, k);
                if c1 != int(0) {
                    out[k][b] += &c1 * &t[a][b];
                }
                let c2 = constant(g, x, b, k);
                if c2 != int(0) {
                    out[a][k] += &c2 * &t[a][b];
                }
            }
        }
    }
    out
}

/// Exhaustive 1-cocycle check `δ[x,y] = x·δ(y) − y·δ(x)` over basis pairs.
pub fn cocycle_holds(g: &LieAlgebroid, delta: &[Matrix]) -> bool {
    let n = g.rank();
    for x in 0..n {
        for y in 0..n {
            let mut lhs = linalg::zeros(n, n);
            for k in 0..n {
                let c = constant(g, x, y, k);
                for a in 0..n {
                    for b in 0..n {
                        lhs[a][b] += &c * &delta[k][a][b];
                    }
                }
            }
            let rx = act(g, x, &delta[y]);
            let ry = act(g, y, &delta[x]);
            for a in 0..n {
                for b in 0..n {
                    if lhs[a][b] != &rx[a][b] - &ry[a][b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The bialgebra with dual bracket `[ε^a, ε^b] = Σ_c δ(e_c)[a][b] ε^c`
/// for `δ` the coboundary of `r`. Refuses to return data failing the
/// cocycle check, antisymmetry of `δ`, or Jacobi for `g*`.
pub fn coboundary_bialgebra(g: &LieAlgebroid, r: &Matrix) -> Result<LieBialgebraData> {
    let n = g.rank();
    let delta = coboundary(g, r);
    if !cocycle_holds(g, &delta) {
        return Err(Error::Unverified("cobracket is not a cocycle".into()));
    }
    let names: Vec<String> = g.generators().iter().map(|s| format!("{s}*")).collect();
    let mut gstar = LieAlgebroid::abelian(BaseSpace::point(), n).with_generators(names)?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if delta[c][a][b] != -&delta[c][b][a] {
                    return Err(Error::Unverified("cobracket is not antisymmetric".into()));
                }
                if a < b && delta[c][a][b] != int(0) {
                    gstar.set_bracket(a, b, c, Polynomial::constant(0, delta[c][a][b].clone()))?;
                }
            }
        }
    }
    let report = gstar.validate(&CheckConfig::default());
    if !report.passed() {
        return Err(Error::Unverified(format!("dual bracket fails validation\n{report}")));
    }
    LieBialgebraData::new(g.clone(), gstar)
}

/// sl2 with the cobracket of `r = E∧F`.
pub fn sl2_standard() -> LieBialgebraData {
    coboundary_bialgebra(&sl2(), &sl2_standard_r()).expect("standard r-matrix passes the oracle")
}

/// aff(1) with the cobracket of `r = e1∧e2`.
pub fn aff1_coboundary() -> LieBialgebraData {
    let mut r = linalg::zeros(2, 2);
    r[0][1] = int(1);
    r[1][0] = int(-1);
    coboundary_bialgebra(&aff1(), &r).expect("any 2-dimensional coboundary passes the oracle")
}

fn abelian_point(names: &[&str]) -> LieAlgebroid {
    LieAlgebroid::abelian(BaseSpace::point(), names.len())
        .with_generators(names.iter().copied())
        .expect("rank matches")
}

/// Named bialgebra fixtures, all passing.
pub fn bialgebra_fixtures() -> Vec<(&'static str, LieBialgebraData)> {
    let ab2 = abelian_point(&["e1", "e2"]);
    let ab2s = abelian_point(&["e1*", "e2*"]);
    let ab3s = abelian_point(&["H*", "E*", "F*"]);
    let ab3 = abelian_point(&["a1", "a2", "a3"]);
    let mk = |g: LieAlgebroid, s: LieAlgebroid| LieBialgebraData::new(g, s).expect("ranks agree");
    vec![
        ("abelian", mk(ab2.clone(), ab2s.clone())),
        ("sl2_trivial", mk(sl2(), ab3s)),
        ("sl2_standard", sl2_standard()),
        ("aff1_trivial", mk(aff1(), ab2s)),
        ("sl2_dual_of_abelian", mk(ab3, sl2())),
        ("aff1_coboundary", aff1_coboundary()),
    ]
}

/// Named matched-pair fixtures, all passing.
pub fn matched_fixtures() -> Vec<(&'static str, MatchedPairData)> {
    vec![
        ("zero_rep", MatchedPairData::trivial(aff1(), sl2()).expect("point bases")),
        ("sl2_borel", extract_matched(&sl2(), 2).expect("span(H,E) and span(F) close")),
        ("sl2_e_split", extract_matched(&sl2().permute(&[1, 0, 2]).expect("permutation"), 1).expect("closed spans")),
        ("sl2_drinfeld", sl2_standard().matched_pair()),
        ("tm_bundle", tm_bundle()),
        ("action_tm", action_tm()),
        ("poly_rho", poly_rho()),
    ]
}

/// `A = TR²` acting on a bundle of aff(1) algebras by differentiating
/// coefficients (flat, matrices zero), `σ = 0`.
pub fn tm_bundle() -> MatchedPairData {
    let a = tangent_bundle(&["x", "y"]);
    let mut b = LieAlgebroid::abelian(a.base().clone(), 2).with_generators(["b1", "b2"]).expect("rank 2");
    b.set_bracket(0, 1, 1, Polynomial::one(2)).expect("in range");
    MatchedPairData::trivial(a, b).expect("same base")
}

/// `A` the action algebroid of aff(1) on the line, `B = TR`, with
/// `ρ_X(Y) = [a(X), Y]` and `σ = 0`.
pub fn action_tm() -> MatchedPairData {
    let a = action_aff1_on_line();
    let b = tangent_bundle(&["x"]);
    let rho = CdoRep::new(
        a.clone(),
        1,
        vec![vec![vec![Polynomial::one(1)]], vec![vec![Polynomial::zero(1)]]],
    )
    .expect("shapes");
    let sigma = CdoRep::trivial(b.clone(), 2);
    MatchedPairData::new(a, b, rho, sigma).expect("same base")
}

/// `A = TR`, `B` a trivial line bundle, `ρ_{d/dx}(s) = x s + s'`, `σ = 0`.
pub fn poly_rho() -> MatchedPairData {
    let a = tangent_bundle(&["x"]);
    let b = LieAlgebroid::abelian(a.base().clone(), 1).with_generators(["u"]).expect("rank 1");
    let rho = CdoRep::new(a.clone(), 1, vec![vec![vec![Polynomial::var(1, 0).expect("in range")]]]).expect("shapes");
    let sigma = CdoRep::trivial(b.clone(), 1);
    MatchedPairData::new(a, b, rho, sigma).expect("same base")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubles::check_matched;

    #[test]
    fn sl2_jacobi_oracle() {
        // independent brute force over all 27 basis triples
        let g = sl2();
        let c = |i: usize, j: usize, k: usize| constant(&g, i, j, k);
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    for out in 0..3 {
                        let mut sum = int(0);
                        for (a, b, d) in [(x, y, z), (y, z, x), (z, x, y)] {
                            for k in 0..3 {
                                sum += c(b, d, k) * c(a, k, out);
                            }
                        }
                        assert_eq!(sum, int(0));
                    }
                }
            }
        }
    }

    #[test]
    fn standard_cobracket_values() {
        let bi = sl2_standard();
        let s = bi.gstar();
        // [H*, E*] = E*·δ-coefficient read from δ(E) = E⊗H − H⊗E
        let delta = coboundary(&sl2(), &sl2_standard_r());
        assert!(delta[0].iter().flatten().all(|v| *v == int(0)));
        assert_eq!(delta[1][1][0], int(1));
        assert_eq!(delta[1][0][1], int(-1));
        assert_eq!(s.structure(0, 1, 1).as_constant().unwrap(), int(-1));
        assert_eq!(s.structure(0, 2, 2).as_constant().unwrap(), int(-1));
        assert!(s.structure(1, 2, 0).is_zero() && s.structure(1, 2, 1).is_zero() && s.structure(1, 2, 2).is_zero());
    }

    #[test]
    fn non_cocycle_rejected() {
        // a symmetric r gives a symmetric δ
        let mut r = linalg::zeros(3, 3);
        r[1][1] = int(1);
        assert!(coboundary_bialgebra(&sl2(), &r).is_err());
    }

    #[test]
    fn all_fixtures_pass() {
        let cfg = CheckConfig::default();
        for (name, mp) in matched_fixtures() {
            assert!(check_matched(&mp, &cfg).passed(), "{name}");
        }
        for (name, bi) in bialgebra_fixtures() {
            assert!(crate::doubles::check_bialgebra_twisted(&bi, &cfg).passed(), "{name}");
        }
        assert!(action_aff1_on_line().validate(&cfg).passed());
    }
}
