//! JSON formats for algebroids, representations, matched pairs, bialgebras
//! and double vector spaces.
//!
//! Polynomials are lists of `{"coef": "p/q", "exps": [...]}` in grlex
//! order; rationals are strings. Structure functions are listed for
//! `i < j` and applied antisymmetrically; an entry with `i >= j` overrides
//! a single slot and only appears for deliberately broken inputs.

use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use crate::algebroid::{BaseSpace, LieAlgebroid};
use crate::doubles::{LieBialgebraData, MatchedPairData};
use crate::dvs::DoubleVectorSpace;
use crate::error::{Error, Result};
use crate::foundation::{Polynomial, Rational, Term};
use crate::representation::CdoRep;

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Serialize, Deserialize)]
struct BaseJson {
    vars: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct StructureEntry {
    i: usize,
    j: usize,
    k: usize,
    poly: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct AnchorEntry {
    i: usize,
    j: usize,
    poly: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
pub struct AlgebroidJson {
    base: BaseJson,
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(default)]
    c: Vec<StructureEntry>,
    #[serde(default)]
    anchor: Vec<AnchorEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct RepJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    algebroid: Option<AlgebroidJson>,
    module_rank: usize,
    matrices: Vec<Vec<Vec<Vec<Term>>>>,
}

#[derive(Serialize, Deserialize)]
pub struct MatchedJson {
    #[serde(rename = "A")]
    a: AlgebroidJson,
    #[serde(rename = "B")]
    b: AlgebroidJson,
    rho: RepJson,
    sigma: RepJson,
}

#[derive(Serialize, Deserialize)]
pub struct BialgebraJson {
    g: AlgebroidJson,
    gstar: AlgebroidJson,
}

#[derive(Serialize, Deserialize)]
pub struct DvsJson {
    dims: [usize; 3],
}

impl AlgebroidJson {
    pub fn from_algebroid(a: &LieAlgebroid) -> Self {
        let n = a.rank();
        let mut c = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let p = a.structure(i, j, k);
                    let listed = if i < j {
                        !p.is_zero()
                    } else {
                        // only slots that break antisymmetry are written
                        let mirror = if i == j { Polynomial::zero(a.nvars()) } else { -a.structure(j, i, k) };
                        *p != mirror
                    };
                    if listed {
                        c.push(StructureEntry { i, j, k, poly: p.to_terms() });
                    }
                }
            }
        }
        let mut anchor = Vec::new();
        for i in 0..n {
            for j in 0..a.nvars() {
                let p = a.anchor_component(i, j);
                if !p.is_zero() {
                    anchor.push(AnchorEntry { i, j, poly: p.to_terms() });
                }
            }
        }
        AlgebroidJson {
            base: BaseJson { vars: a.base().vars().to_vec() },
            rank: n,
            names: Some(a.generators().to_vec()),
            c,
            anchor,
        }
    }

    pub fn to_algebroid(&self) -> Result<LieAlgebroid> {
        let base = BaseSpace::new(self.base.vars.clone())?;
        let m = base.dim();
        let mut a = LieAlgebroid::abelian(base, self.rank);
        if let Some(names) = &self.names {
            a = a.with_generators(names.clone())?;
        }
        for e in self.c.iter().filter(|e| e.i < e.j) {
            a.set_bracket(e.i, e.j, e.k, Polynomial::from_term_list(m, &e.poly)?)?;
        }
        for e in self.c.iter().filter(|e| e.i >= e.j) {
            a.set_structure_raw(e.i, e.j, e.k, Polynomial::from_term_list(m, &e.poly)?)?;
        }
        for e in &self.anchor {
            a.set_anchor(e.i, e.j, Polynomial::from_term_list(m, &e.poly)?)?;
        }
        Ok(a)
    }
}

impl RepJson {
    pub fn from_rep(rep: &CdoRep, with_algebroid: bool) -> Self {
        RepJson {
            algebroid: with_algebroid.then(|| AlgebroidJson::from_algebroid(rep.algebroid())),
            module_rank: rep.module_rank(),
            matrices: rep
                .matrices()
                .iter()
                .map(|m| m.iter().map(|row| row.iter().map(Polynomial::to_terms).collect()).collect())
                .collect(),
        }
    }

    /// Builds the representation; `algebroid` is used when the file does not
    /// carry its own.
    pub fn to_rep(&self, algebroid: Option<&LieAlgebroid>) -> Result<CdoRep> {
        let a = match (&self.algebroid, algebroid) {
            (Some(j), _) => j.to_algebroid()?,
            (None, Some(a)) => a.clone(),
            (None, None) => return Err(Error::Parse("representation without an acting algebroid".into())),
        };
        let m = a.nvars();
        let matrices = self
            .matrices
            .iter()
            .map(|mat| {
                mat.iter()
                    .map(|row| row.iter().map(|p| Polynomial::from_term_list(m, p)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CdoRep::new(a, self.module_rank, matrices)
    }
}

impl MatchedJson {
    pub fn from_matched(mp: &MatchedPairData) -> Self {
        MatchedJson {
            a: AlgebroidJson::from_algebroid(mp.a()),
            b: AlgebroidJson::from_algebroid(mp.b()),
            rho: RepJson::from_rep(mp.rho(), false),
            sigma: RepJson::from_rep(mp.sigma(), false),
        }
    }

    pub fn to_matched(&self) -> Result<MatchedPairData> {
        let a = self.a.to_algebroid()?;
        let b = self.b.to_algebroid()?;
        let rho = self.rho.to_rep(Some(&a))?;
        let sigma = self.sigma.to_rep(Some(&b))?;
        MatchedPairData::new(a, b, rho, sigma)
    }
}

impl BialgebraJson {
    pub fn from_bialgebra(bi: &LieBialgebraData) -> Self {
        BialgebraJson { g: AlgebroidJson::from_algebroid(bi.g()), gstar: AlgebroidJson::from_algebroid(bi.gstar()) }
    }

    pub fn to_bialgebra(&self) -> Result<LieBialgebraData> {
        LieBialgebraData::new(self.g.to_algebroid()?, self.gstar.to_algebroid()?)
    }
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn algebroid_to_json(a: &LieAlgebroid) -> String {
    to_pretty(&AlgebroidJson::from_algebroid(a))
}

pub fn algebroid_from_json(s: &str) -> Result<LieAlgebroid> {
    serde_json::from_str::<AlgebroidJson>(s)?.to_algebroid()
}

pub fn rep_to_json(rep: &CdoRep) -> String {
    to_pretty(&RepJson::from_rep(rep, true))
}

pub fn rep_from_json(s: &str) -> Result<CdoRep> {
    serde_json::from_str::<RepJson>(s)?.to_rep(None)
}

pub fn matched_to_json(mp: &MatchedPairData) -> String {
    to_pretty(&MatchedJson::from_matched(mp))
}

pub fn matched_from_json(s: &str) -> Result<MatchedPairData> {
    serde_json::from_str::<MatchedJson>(s)?.to_matched()
}

pub fn bialgebra_to_json(bi: &LieBialgebraData) -> String {
    to_pretty(&BialgebraJson::from_bialgebra(bi))
}

pub fn bialgebra_from_json(s: &str) -> Result<LieBialgebraData> {
    serde_json::from_str::<BialgebraJson>(s)?.to_bialgebra()
}

pub fn dvs_to_json(d: &DoubleVectorSpace) -> String {
    to_pretty(&DvsJson { dims: d.dims() })
}

pub fn dvs_from_json(s: &str) -> Result<DoubleVectorSpace> {
    let [h, v, k] = serde_json::from_str::<DvsJson>(s)?.dims;
    Ok(DoubleVectorSpace::new(h, v, k))
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn algebroid_round_trip() {
        for a in [fixtures::sl2(), fixtures::sl2_broken(), fixtures::action_aff1_on_line(), fixtures::tangent_bundle(&["x", "y"])] {
            let s = algebroid_to_json(&a);
            assert_eq!(algebroid_from_json(&s).unwrap(), a);
        }
    }

    #[test]
    fn matched_and_bialgebra_round_trip() {
        for (_, mp) in fixtures::matched_fixtures() {
            assert_eq!(matched_from_json(&matched_to_json(&mp)).unwrap(), mp);
        }
        for (_, bi) in fixtures::bialgebra_fixtures() {
            assert_eq!(bialgebra_from_json(&bialgebra_to_json(&bi)).unwrap(), bi);
        }
    }

    #[test]
    fn rep_round_trip_and_integer_coefficients() {
        let rep = CdoRep::adjoint(&fixtures::sl2()).unwrap();
        let s = rep_to_json(&rep);
        assert!(s.contains("\"coef\": \"2\""));
        assert_eq!(rep_from_json(&s).unwrap(), rep);
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(algebroid_from_json("{").is_err());
        let bad = r#"{"base":{"vars":[]},"rank":2,"c":[{"i":0,"j":1,"k":5,"poly":[]}]}"#;
        assert!(algebroid_from_json(bad).is_err());
        let badcoef = r#"{"base":{"vars":[]},"rank":2,"c":[{"i":0,"j":1,"k":0,"poly":[{"coef":"1.5","exps":[]}]}]}"#;
        assert!(algebroid_from_json(badcoef).is_err());
        assert_eq!(dvs_from_json(r#"{"dims":[1,2,3]}"#).unwrap().dims(), [1, 2, 3]);
    }
}
