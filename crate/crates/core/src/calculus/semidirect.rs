//! The two algebroids `A ⊕ B*` and `A* ⊕ B` attached to a matched pair.

use crate::algebroid::LieAlgebroid;
use crate::doubles::{matched_double, MatchedPairData};
use crate::representation::CdoRep;

fn starred(names: &[String]) -> Vec<String> {
    names.iter().map(|n| format!("{n}*")).collect()
}

/// `A ⋉ B*` through the contragredient of `ρ`, anchor `a(X)`:
/// `[X₁⊕ψ₁, X₂⊕ψ₂] = [X₁,X₂] ⊕ {ρ*_{X₁}ψ₂ − ρ*_{X₂}ψ₁}`.
pub fn semidirect_e(mp: &MatchedPairData) -> LieAlgebroid {
    let a = mp.a().clone();
    let bstar = LieAlgebroid::abelian(a.base().clone(), mp.b().rank())
        .with_generators(starred(mp.b().generators()))
        .expect("rank matches");
    let rho_star = mp.rho().contragredient();
    let sigma0 = CdoRep::trivial(bstar.clone(), a.rank());
    let sd = MatchedPairData::new(a, bstar, rho_star, sigma0).expect("shapes agree");
    matched_double(&sd)
}

/// `A* ⊕ B` with anchor `−b(Y)` and
/// `[φ₁⊕Y₁, φ₂⊕Y₂] = {σ*_{Y₂}φ₁ − σ*_{Y₁}φ₂} ⊕ [Y₂, Y₁]`.
pub fn semidirect_edual(mp: &MatchedPairData) -> LieAlgebroid {
    let (na, nb) = (mp.a().rank(), mp.b().rank());
    let b = mp.b();
    let m = b.nvars();
    let names = starred(mp.a().generators()).into_iter().chain(b.generators().iter().cloned());
    let mut e = LieAlgebroid::abelian(b.base().clone(), na + nb).with_generators(names).expect("rank matches");
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                let c = b.structure(i, j, k);
                if !c.is_zero() {
                    e.set_structure_raw(na + i, na + j, na + k, -c).expect("in range");
                }
            }
        }
        for l in 0..m {
            e.set_anchor(na + i, l, -b.anchor_component(i, l)).expect("in range");
        }
    }
    // [ε^k, f_j] = σ*_{f_j} ε^k, whose r-th component is −Mσ_j[k][r]
    for k in 0..na {
        for j in 0..nb {
            for r in 0..na {
                let p = mp.sigma().matrix_entry(j, k, r);
                if !p.is_zero() {
                    e.set_structure_raw(k, na + j, r, -p).expect("in range");
                    e.set_structure_raw(na + j, k, r, p.clone()).expect("in range");
                }
            }
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::BaseSpace;
    use crate::doubles::{drinfeld_double, extract_matched, LieBialgebraData};
    use crate::fixtures;
    use crate::sampling::CheckConfig;

    #[test]
    fn zero_rho_gives_product_with_abelian() {
        let mp = MatchedPairData::trivial(fixtures::aff1(), fixtures::sl2()).unwrap();
        let e = semidirect_e(&mp);
        assert_eq!(e.restrict(&[0, 1]).unwrap(), fixtures::aff1());
        for i in 0..5 {
            for j in 2..5 {
                assert!(e.generator_bracket(i, j).is_zero());
            }
        }
        let ed = semidirect_edual(&mp);
        let b = ed.restrict(&[2, 3, 4]).unwrap();
        assert_eq!(b, fixtures::sl2().opposite());
    }

    #[test]
    fn coadjoint_semidirect_equals_double_with_abelian_dual() {
        let g = fixtures::sl2();
        let ab = LieAlgebroid::abelian(BaseSpace::point(), 3);
        let bi = LieBialgebraData::new(g.clone(), ab.clone()).unwrap();
        let ad = crate::representation::CdoRep::adjoint(&g).unwrap();
        let mp = MatchedPairData::new(g, ab.clone(), ad, CdoRep::trivial(ab, 3)).unwrap();
        let e = semidirect_e(&mp);
        let (d, _) = drinfeld_double(&bi);
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    assert_eq!(e.structure(i, j, k), d.structure(i, j, k));
                }
            }
        }
    }

    #[test]
    fn edual_is_opposite_of_b_semidirect() {
        for mp in [extract_matched(&fixtures::sl2(), 2).unwrap(), fixtures::action_tm()] {
            let swapped = semidirect_e(&mp.swap());
            let (na, nb) = (mp.a().rank(), mp.b().rank());
            let order: Vec<usize> = (nb..na + nb).chain(0..nb).collect();
            let expect = swapped.permute(&order).unwrap().opposite();
            assert_eq!(semidirect_edual(&mp), expect);
        }
    }

    #[test]
    fn sl2_semidirects_validate() {
        let mp = extract_matched(&fixtures::sl2(), 2).unwrap();
        let cfg = CheckConfig::default();
        assert!(semidirect_e(&mp).validate(&cfg).passed());
        assert!(semidirect_edual(&mp).validate(&cfg).passed());
    }
}
