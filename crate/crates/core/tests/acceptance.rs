//! Acceptance criteria, one printed line each. Run with
//! `cargo test -p doubloid --test acceptance -- --nocapture`.

#![allow(clippy::needless_range_loop)]

use std::time::{Duration, Instant};

use doubloid::calculus::lie_poisson::fiber_ring_nvars;
use doubloid::calculus::{
    base_poisson, check_bialgebroid, index_tuples, lie_differential, lie_poisson_jacobiator, schouten_bracket,
    semidirect_e, semidirect_edual, tangent_pair, MultiSection,
};
use doubloid::doubles::{
    check_bialgebra_twisted, check_manin, check_matched, drinfeld_double, matched_double, random_perturbation,
    LieBialgebraData, MatchedPairData,
};
use doubloid::dvs::{CotangentModel, DoubleVectorSpace};
use doubloid::fixtures;
use doubloid::sampling::{monomials, Sampler};
use doubloid::{int, CheckConfig, LieAlgebroid, Polynomial, Rational, Report};

const EXACT: &str = "exact rational equality (tolerance 0)";

fn cfg() -> CheckConfig {
    CheckConfig { seed: 0, samples: 6, max_degree: 2 }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(n: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let in_time = limit.is_none_or(|l| took < l);
    let ok = out.ok && in_time;
    let limit_text = limit.map_or("no limit".to_string(), |l| format!("limit {} s", l.as_secs()));
    println!(
        "criterion {n} {name}: {} ({EXACT}; {:.3} s, {limit_text}) {}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        out.detail
    );
    ok
}

/// Positive matched pairs plus 21 seeded single-coefficient perturbations.
fn matched_corpus() -> Vec<(String, MatchedPairData)> {
    let positives = fixtures::matched_fixtures();
    let mut corpus: Vec<(String, MatchedPairData)> =
        positives.iter().map(|(n, mp)| (n.to_string(), mp.clone())).collect();
    for seed in 0..21u64 {
        let (name, mp) = &positives[seed as usize % positives.len()];
        let p = random_perturbation(mp, seed);
        corpus.push((format!("{name} {p}"), mp.perturbed(&p).expect("indices in range")));
    }
    corpus
}

/// Bialgebra fixtures plus seeded perturbations of either structure.
fn bialgebra_corpus() -> Vec<(String, LieBialgebraData)> {
    let mut out = Vec::new();
    let mut s = Sampler::new(11, 0);
    for (name, bi) in fixtures::bialgebra_fixtures() {
        out.push((name.to_string(), bi.clone()));
        let n = bi.g().rank();
        if n < 2 {
            continue;
        }
        for _ in 0..4 {
            let on_dual = s.index(2) == 1;
            let i = s.index(n);
            let j = (i + 1 + s.index(n - 1)) % n;
            let k = s.index(n);
            let bad = bi.perturbed(on_dual, i, j, k, &int(1)).expect("indices in range");
            out.push((format!("{name} perturbed {}[{i}][{j}][{k}]", if on_dual { "g*" } else { "g" }), bad));
        }
    }
    out
}

fn verdict_mismatch<'a>(rows: impl IntoIterator<Item = (&'a str, Vec<bool>)>) -> Option<String> {
    rows.into_iter().find(|(_, v)| v.iter().any(|b| *b != v[0])).map(|(n, v)| format!("{n}: {v:?}"))
}

fn criterion_1() -> Outcome {
    let corpus = matched_corpus();
    let rows: Vec<(String, Vec<bool>)> = corpus
        .iter()
        .map(|(n, mp)| (n.clone(), vec![check_matched(mp, &cfg()).passed(), matched_double(mp).validate(&cfg()).passed()]))
        .collect();
    let neg = rows.iter().filter(|(_, v)| !v[0]).count();
    let bad = verdict_mismatch(rows.iter().map(|(n, v)| (n.as_str(), v.clone())));
    Outcome { ok: bad.is_none() && neg > 0, detail: format!("{} inputs, {neg} failing; {}", rows.len(), bad.unwrap_or_default()) }
}

fn criterion_2() -> Outcome {
    let corpus = matched_corpus();
    let mut rows = Vec::new();
    for (n, mp) in &corpus {
        let bi = check_bialgebroid(&semidirect_e(mp), &semidirect_edual(mp), &cfg()).expect("shapes agree");
        rows.push((n.clone(), vec![check_matched(mp, &cfg()).passed(), bi.passed()]));
    }
    let bad = verdict_mismatch(rows.iter().map(|(n, v)| (n.as_str(), v.clone())));
    Outcome { ok: bad.is_none(), detail: format!("{} inputs; {}", rows.len(), bad.unwrap_or_default()) }
}

/// Independent invariance oracle straight from structure constants.
fn invariance_oracle(d: &LieAlgebroid, b: &[Vec<Rational>]) -> bool {
    let n = d.rank();
    let c = |i: usize, j: usize, k: usize| d.structure(i, j, k).as_constant().expect("constant structure");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = int(0);
                for l in 0..n {
                    s += c(i, j, l) * &b[l][k] + &b[j][l] * c(i, k, l);
                }
                if s != int(0) {
                    return false;
                }
            }
        }
    }
    true
}

fn criterion_3() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for bi in [fixtures::sl2_standard(), fixtures::sl2_standard().swap()] {
        let (d, pairing) = drinfeld_double(&bi);
        let (s1, s2): (Vec<usize>, Vec<usize>) = ((0..3).collect(), (3..6).collect());
        let r = check_manin(&d, &pairing, &s1, &s2).expect("subspaces in range");
        let triples = r.check("invariance").map_or(0, |c| c.cases);
        let oracle = invariance_oracle(&d, pairing.matrix());
        let jac = d.validate(&cfg()).passed();
        ok &= r.passed() && triples == 216 && oracle && jac;
        lines.push(format!("{}: manin {} over {triples} triples, oracle {oracle}, jacobi {jac}", d.generators().join(","), r.passed()));
    }
    Outcome { ok, detail: lines.join("; ") }
}

fn criterion_4() -> Outcome {
    let mut rows = Vec::new();
    for (n, bi) in bialgebra_corpus() {
        let twisted = check_bialgebra_twisted(&bi, &cfg()).passed();
        let jacobi = drinfeld_double(&bi).0.validate(&cfg()).passed();
        let mp = bi.matched_pair();
        let semi = check_bialgebroid(&semidirect_e(&mp), &semidirect_edual(&mp), &cfg()).expect("shapes").passed();
        rows.push((n, vec![twisted, jacobi, semi]));
    }
    let neg = rows.iter().filter(|(_, v)| !v[0]).count();
    let bad = verdict_mismatch(rows.iter().map(|(n, v)| (n.as_str(), v.clone())));
    Outcome { ok: bad.is_none() && neg > 0, detail: format!("{} inputs, {neg} failing; {}", rows.len(), bad.unwrap_or_default()) }
}

fn criterion_5() -> Outcome {
    let mut pass_ok = 0;
    let mut fail_ok = 0;
    let mut wrong = Vec::new();
    for (n, bi) in bialgebra_corpus() {
        let expected = check_bialgebra_twisted(&bi, &cfg()).passed();
        let (t, ts) = tangent_pair(&bi);
        let got = check_bialgebroid(&t, &ts, &cfg()).expect("shapes").passed();
        match (expected, got) {
            (true, true) => pass_ok += 1,
            (false, false) => fail_ok += 1,
            _ => wrong.push(n),
        }
    }
    Outcome { ok: wrong.is_empty() && pass_ok > 0 && fail_ok > 0, detail: format!("{pass_ok} pass, {fail_ok} fail; mismatches {wrong:?}") }
}

/// `d∘d` vanishes on basis forms with coefficients of degree <= 2 (<= 1 above degree 0).
fn dd_vanishes(a: &LieAlgebroid) -> bool {
    let (n, m) = (a.rank(), a.nvars());
    for k in 0..n {
        let deg = if k == 0 { 2 } else { 1 };
        for idx in index_tuples(n, k) {
            for e in monomials(m, deg) {
                let f = Polynomial::monomial(e, int(1));
                let omega = MultiSection::basis(n, m, &idx).mul_fn(&f);
                let dd = lie_differential(a, &lie_differential(a, &omega).unwrap()).unwrap();
                if !dd.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn graded_sign(exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) { int(1) } else { int(-1) }
}

fn criterion_6() -> Outcome {
    // dd = 0 iff Jacobi, on valid and broken algebroids
    let mut algs: Vec<(String, LieAlgebroid)> = vec![
        ("sl2".into(), fixtures::sl2()),
        ("sl2_broken".into(), fixtures::sl2_broken()),
        ("aff1".into(), fixtures::aff1()),
        ("action_aff1_on_line".into(), fixtures::action_aff1_on_line()),
        ("tangent_bundle".into(), fixtures::tangent_bundle(&["x", "y"])),
    ];
    for (n, mp) in fixtures::matched_fixtures() {
        algs.push((format!("{n} double"), matched_double(&mp)));
    }
    for (n, mp) in matched_corpus().into_iter().skip(fixtures::matched_fixtures().len()).take(6) {
        algs.push((format!("{n} double"), matched_double(&mp)));
    }
    let mut dd_mismatch = Vec::new();
    for (n, a) in &algs {
        if dd_vanishes(a) != a.validate(&cfg()).passed() {
            dd_mismatch.push(n.clone());
        }
    }

    // Schouten on sl2: degree-one brackets equal the Lie bracket, graded
    // antisymmetry and graded Jacobi on 50 seeded triples
    let g = fixtures::sl2();
    let mut s = Sampler::new(6, 0);
    let mut schouten_fail = 0;
    for i in 0..3 {
        for j in 0..3 {
            let b = schouten_bracket(&g, &MultiSection::from_section(&g.generator(i), 0), &MultiSection::from_section(&g.generator(j), 0)).unwrap();
            if b != MultiSection::from_section(&g.generator_bracket(i, j), 0) {
                schouten_fail += 1;
            }
        }
    }
    for _ in 0..50 {
        let d: Vec<usize> = (0..3).map(|_| s.index(3)).collect();
        let p = MultiSection::random(3, 0, d[0], &mut s);
        let q = MultiSection::random(3, 0, d[1], &mut s);
        let r = MultiSection::random(3, 0, d[2], &mut s);
        // (−1)^{(p−1)(q−1)}
        let e = graded_sign((d[0] + 1) * (d[1] + 1));
        let pq = schouten_bracket(&g, &p, &q).unwrap();
        let qp = schouten_bracket(&g, &q, &p).unwrap();
        if !pq.add(&qp.scale(&e)).is_zero() {
            schouten_fail += 1;
        }
        let lhs = schouten_bracket(&g, &p, &schouten_bracket(&g, &q, &r).unwrap()).unwrap();
        let rhs = schouten_bracket(&g, &pq, &r)
            .unwrap()
            .add(&schouten_bracket(&g, &q, &schouten_bracket(&g, &p, &r).unwrap()).unwrap().scale(&e));
        if !lhs.sub(&rhs).is_zero() {
            schouten_fail += 1;
        }
    }

    // Lie–Poisson Jacobi on 50 seeded cubic fiber polynomials
    let mut lp_fail = 0;
    let lp_algs = [fixtures::sl2(), fixtures::action_aff1_on_line()];
    let mut s = Sampler::new(7, 3);
    for t in 0..50 {
        let a = &lp_algs[t % 2];
        let nv = fiber_ring_nvars(a);
        let (f, g2, h) = (s.polynomial_of_degree(nv, 3), s.polynomial_of_degree(nv, 3), s.polynomial_of_degree(nv, 3));
        if !lie_poisson_jacobiator(a, &f, &g2, &h).unwrap().is_zero() {
            lp_fail += 1;
        }
    }
    Outcome {
        ok: dd_mismatch.is_empty() && schouten_fail == 0 && lp_fail == 0,
        detail: format!(
            "dd/jacobi on {} algebroids, mismatches {dd_mismatch:?}; schouten failures {schouten_fail}/109; lie-poisson failures {lp_fail}/50",
            algs.len()
        ),
    }
}

fn criterion_7() -> Outcome {
    let mut checked = Vec::new();
    let mut ok = true;
    for (n, mp) in fixtures::matched_fixtures() {
        if mp.a().nvars() == 0 {
            continue;
        }
        let pi = base_poisson(&semidirect_e(&mp), &semidirect_edual(&mp)).expect("same base");
        ok &= pi.iter().flatten().all(Polynomial::is_zero);
        checked.push(n);
    }
    Outcome { ok: ok && !checked.is_empty(), detail: format!("zero on {checked:?}") }
}

fn criterion_8() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    for h in 0..=4 {
        for v in 0..=4 {
            for k in 0..=3 {
                let d = DoubleVectorSpace::new(h, v, k);
                let p = d.pair_check(count as u64, 3, 10);
                let z = d.z_maps().check();
                count += 1;
                if !p.passed() || !z.passed() {
                    fails.push(d.dims());
                }
            }
        }
    }
    let vue = CotangentModel::new(3).unwrap().check(8, 100);
    let cases = vue.check("identity").map_or(0, |c| c.cases);
    Outcome {
        ok: fails.is_empty() && vue.passed() && cases == 100,
        detail: format!("{count} shapes (10 choices of ξ each), failing {fails:?}; identity on {cases} triples"),
    }
}

fn structured_reports() -> String {
    let mut reports: Vec<Report> = Vec::new();
    for (_, mp) in matched_corpus().into_iter().take(10) {
        reports.push(check_matched(&mp, &cfg()));
    }
    for (_, bi) in fixtures::bialgebra_fixtures() {
        reports.push(check_bialgebra_twisted(&bi, &cfg()));
    }
    reports.push(DoubleVectorSpace::new(2, 2, 1).pair_check(3, 4, 10));
    reports.push(CotangentModel::new(3).unwrap().check(3, 20));
    serde_json::to_string(&reports).unwrap()
}

#[test]
fn acceptance() {
    let total = Instant::now();
    let mut ok = true;
    ok &= run(1, "matched_pair_vs_double", Some(Duration::from_secs(10)), criterion_1);
    ok &= run(2, "matched_pair_vs_semidirect", Some(Duration::from_secs(20)), criterion_2);
    ok &= run(3, "drinfeld_double_manin", None, criterion_3);
    ok &= run(4, "bialgebra_equivalences", None, criterion_4);
    ok &= run(5, "tangent_pair", None, criterion_5);
    ok &= run(6, "differential_schouten_lie_poisson", None, criterion_6);
    ok &= run(7, "base_poisson_vanishes", None, criterion_7);
    ok &= run(8, "double_vector_space_duality", None, criterion_8);
    ok &= run(9, "determinism_and_runtime", Some(Duration::from_secs(60)), || {
        let (a, b) = (structured_reports(), structured_reports());
        let elapsed = total.elapsed();
        Outcome {
            ok: a == b && elapsed < Duration::from_secs(60),
            detail: format!("{} identical report bytes; whole acceptance run {:.3} s", a.len(), elapsed.as_secs_f64()),
        }
    });
    assert!(ok, "an acceptance criterion failed");
}
