use crate::algebroid::{LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::foundation::Polynomial;

use super::multisection::MultiSection;

fn check(a: &LieAlgebroid, p: &MultiSection) -> Result<()> {
    if p.rank() != a.rank() {
        return Err(Error::Rank { expected: a.rank(), found: p.rank() });
    }
    if p.nvars() != a.nvars() {
        return Err(Error::VariableCount { left: a.nvars(), right: p.nvars() });
    }
    Ok(())
}

/// A monomial `f e_{i_1} ∧ … ∧ e_{i_k}` as the sections
/// `(f e_{i_1}, e_{i_2}, …, e_{i_k})`.
fn factors(a: &LieAlgebroid, idx: &[usize], f: &Polynomial) -> Vec<Section> {
    idx.iter()
        .enumerate()
        .map(|(t, &i)| if t == 0 { a.generator(i).mul_fn(f) } else { a.generator(i) })
        .collect()
}

fn without<T: Clone>(v: &[T], skip: usize) -> Vec<T> {
    v.iter().enumerate().filter(|&(u, _)| u != skip).map(|(_, x)| x.clone()).collect()
}

/// `[X_1∧…∧X_p, Y_1∧…∧Y_q] = Σ (−1)^{i+j} [X_i, Y_j] ∧ X_1…X̂_i…X_p ∧ Y_1…Ŷ_j…Y_q`.
fn bracket_decomposable(a: &LieAlgebroid, xs: &[Section], ys: &[Section]) -> Result<MultiSection> {
    let (n, m) = (a.rank(), a.nvars());
    let mut out = MultiSection::zero(n, m, xs.len() + ys.len() - 1);
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            let b = a.bracket_sections(x, y)?;
            if b.is_zero() {
                continue;
            }
            let xr = without(xs, i);
            let yr = without(ys, j);
            let mut list: Vec<&Section> = vec![&b];
            list.extend(xr.iter());
            list.extend(yr.iter());
            let w = MultiSection::wedge_sections(n, m, &list);
            out = if (i + j) % 2 == 0 { out.add(&w) } else { out.sub(&w) };
        }
    }
    Ok(out)
}

/// `[X_1∧…∧X_p, g] = Σ_i (−1)^{p−i} a(X_i)(g) X_1…X̂_i…X_p`.
fn bracket_with_function(a: &LieAlgebroid, xs: &[Section], g: &Polynomial) -> Result<MultiSection> {
    let (n, m) = (a.rank(), a.nvars());
    let p = xs.len();
    let mut out = MultiSection::zero(n, m, p - 1);
    for (i, x) in xs.iter().enumerate() {
        let v = a.anchor_of_section(x)?.apply(g)?;
        if v.is_zero() {
            continue;
        }
        let rest = without(xs, i);
        let refs: Vec<&Section> = rest.iter().collect();
        let w = MultiSection::wedge_sections(n, m, &refs).mul_fn(&v);
        // 1-based sign (−1)^{p−i} with i = index + 1
        out = if (p - 1 - i).is_multiple_of(2) { out.add(&w) } else { out.sub(&w) };
    }
    Ok(out)
}

/// The Schouten bracket extending the algebroid bracket to multisections,
/// normalized by `[X, Y] = bracket_sections(X, Y)` and `[X, f] = a(X)(f)`.
/// The bracket of two functions is zero.
pub fn schouten_bracket(a: &LieAlgebroid, p: &MultiSection, q: &MultiSection) -> Result<MultiSection> {
    check(a, p)?;
    check(a, q)?;
    let (n, m) = (a.rank(), a.nvars());
    let (dp, dq) = (p.degree(), q.degree());
    if dp == 0 && dq == 0 {
        return Ok(MultiSection::zero(n, m, 0));
    }
    if dp == 0 {
        // [f, Q] = (−1)^q [Q, f]
        let r = schouten_bracket(a, q, p)?;
        return Ok(if dq % 2 == 0 { r } else { r.neg() });
    }
    let mut out = MultiSection::zero(n, m, dp + dq - 1);
    for (i, f) in p.terms() {
        let xs = factors(a, i, f);
        if dq == 0 {
            out = out.add(&bracket_with_function(a, &xs, &q.get(&[]))?);
            continue;
        }
        for (j, g) in q.terms() {
            let ys = factors(a, j, g);
            out = out.add(&bracket_decomposable(a, &xs, &ys)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sampling::Sampler;

    fn sign(e: usize) -> bool {
        e.is_multiple_of(2)
    }

    #[test]
    fn pins_to_bracket_and_anchor() {
        let a = fixtures::action_aff1_on_line();
        let mut s = Sampler::new(2, 2);
        let x = a.random_section(&mut s);
        let y = a.random_section(&mut s);
        let f = s.polynomial(1);
        let px = MultiSection::from_section(&x, 1);
        let py = MultiSection::from_section(&y, 1);
        let b = schouten_bracket(&a, &px, &py).unwrap();
        assert_eq!(b.as_section().unwrap(), a.bracket_sections(&x, &y).unwrap());
        let pf = MultiSection::function(2, f.clone());
        let xf = schouten_bracket(&a, &px, &pf).unwrap();
        assert_eq!(xf.as_function().unwrap(), a.anchor_of_section(&x).unwrap().apply(&f).unwrap());
        let fx = schouten_bracket(&a, &pf, &px).unwrap();
        assert_eq!(fx, xf.neg());
    }

    #[test]
    fn graded_antisymmetry_and_leibniz() {
        let a = fixtures::action_aff1_on_line();
        let mut s = Sampler::new(9, 1);
        for (dp, dq, dr) in [(1, 1, 1), (2, 1, 0), (2, 2, 1), (0, 2, 1), (1, 0, 2)] {
            let p = MultiSection::random(2, 1, dp, &mut s);
            let q = MultiSection::random(2, 1, dq, &mut s);
            let r = MultiSection::random(2, 1, dr, &mut s);
            let pq = schouten_bracket(&a, &p, &q).unwrap();
            let qp = schouten_bracket(&a, &q, &p).unwrap();
            let e = (dp + 1) * (dq + 1);
            let expect = if sign(e) { qp.neg() } else { qp };
            assert!(pq.sub(&expect).is_zero(), "antisymmetry ({dp},{dq})");

            let lhs = schouten_bracket(&a, &p, &q.wedge(&r)).unwrap();
            let t1 = pq.wedge(&r);
            let t2 = q.wedge(&schouten_bracket(&a, &p, &r).unwrap());
            let rhs = if sign((dp + 1) * dq) { t1.add(&t2) } else { t1.sub(&t2) };
            assert!(lhs.sub(&rhs).is_zero(), "leibniz ({dp},{dq},{dr})");
        }
    }
}
