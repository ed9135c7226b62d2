//! Lie algebroids over affine spaces, modelled as Lie–Rinehart data: a free
//! module of rank `n` over `Q[x_1..x_m]`, structure functions `c[i][j][k]`
//! with `[e_i, e_j] = Σ_k c[i][j][k] e_k`, and an anchor
//! `a(e_i) = Σ_j a[i][j] ∂/∂x_j`.
//!
//! With `m = 0` the base is a point and the algebroid is a Lie algebra.

use std::fmt;

use crate::error::{Error, Result};
use crate::foundation::{Polynomial, Rational};
use crate::report::{Check, Report, ValidationReport};
use crate::sampling::{CheckConfig, Sampler};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseSpace {
    vars: Vec<String>,
}

impl BaseSpace {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Base(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(BaseSpace { vars })
    }

    pub fn point() -> Self {
        BaseSpace { vars: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_point(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.dim())
    }
}

/// An element of the free module: one polynomial coefficient per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    coeffs: Vec<Polynomial>,
}

impl Section {
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        Section { coeffs }
    }

    pub fn zero(rank: usize, nvars: usize) -> Self {
        Section { coeffs: vec![Polynomial::zero(nvars); rank] }
    }

    /// The `index`-th generator as a section.
    pub fn unit(rank: usize, nvars: usize, index: usize) -> Self {
        let mut s = Self::zero(rank, nvars);
        s.coeffs[index] = Polynomial::one(nvars);
        s
    }

    pub fn from_constants(nvars: usize, values: &[Rational]) -> Self {
        Section { coeffs: values.iter().map(|v| Polynomial::constant(nvars, v.clone())).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Section) -> Section {
        Section { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Section) -> Section {
        Section { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Section {
        Section { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Multiplication by a function.
    pub fn mul_fn(&self, f: &Polynomial) -> Section {
        Section { coeffs: self.coeffs.iter().map(|a| a * f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Section {
        Section { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// Concatenation, used for direct sums.
    pub fn concat(&self, other: &Section) -> Section {
        Section { coeffs: self.coeffs.iter().chain(&other.coeffs).cloned().collect() }
    }

    pub fn split_at(&self, at: usize) -> (Section, Section) {
        (Section::new(self.coeffs[..at].to_vec()), Section::new(self.coeffs[at..].to_vec()))
    }

    /// Coordinate pairing `Σ φ_i s_i`.
    pub fn pair(&self, other: &Section) -> Polynomial {
        let nvars = self.coeffs.first().map_or(0, Polynomial::nvars);
        self.coeffs.iter().zip(&other.coeffs).fold(Polynomial::zero(nvars), |acc, (a, b)| &acc + &(a * b))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        SectionDisplay { s: self, names }
    }
}

struct SectionDisplay<'a> {
    s: &'a Section,
    names: &'a [String],
}

impl fmt::Display for SectionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.s.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c.display_with(self.names))?;
        }
        write!(f, "]")
    }
}

/// A vector field `Σ_j v_j ∂/∂x_j` on the base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    components: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(components: Vec<Polynomial>) -> Self {
        Derivation { components }
    }

    pub fn zero(nvars: usize) -> Self {
        Derivation { components: vec![Polynomial::zero(nvars); nvars] }
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(f.nvars());
        for (j, v) in self.components.iter().enumerate() {
            let d = f.partial(j)?;
            if !d.is_zero() {
                out = out.try_add(&v.try_mul(&d)?)?;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation { components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        Derivation { components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect() }
    }

    pub fn mul_fn(&self, f: &Polynomial) -> Derivation {
        Derivation { components: self.components.iter().map(|a| a * f).collect() }
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &Derivation) -> Result<Derivation> {
        let mut comps = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            let a = self.apply(&other.components[j])?;
            let b = other.apply(&self.components[j])?;
            comps.push(a.try_sub(&b)?);
        }
        Ok(Derivation { components: comps })
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DerivationDisplay { d: self, names }
    }
}

struct DerivationDisplay<'a> {
    d: &'a Derivation,
    names: &'a [String],
}

impl fmt::Display for DerivationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.d.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let name = self.names.get(j).map(String::as_str).unwrap_or("?");
            write!(f, "({})d/d{}", c.display_with(self.names), name)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebroid {
    base: BaseSpace,
    rank: usize,
    generators: Vec<String>,
    // c[(i * n + j) * n + k]
    structure: Vec<Polynomial>,
    // a[i * m + j]
    anchor: Vec<Polynomial>,
}

impl LieAlgebroid {
    /// Abelian algebroid with zero anchor.
    pub fn abelian(base: BaseSpace, rank: usize) -> Self {
        let m = base.dim();
        LieAlgebroid {
            generators: default_names(rank),
            structure: vec![Polynomial::zero(m); rank * rank * rank],
            anchor: vec![Polynomial::zero(m); rank * m],
            base,
            rank,
        }
    }

    /// Lie algebra from nonzero constants `[e_i, e_j] ∋ coef · e_k` with `i < j`.
    pub fn lie_algebra<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        brackets: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut g = Self::abelian(BaseSpace::point(), names.len());
        g.generators = names;
        for (i, j, k, c) in brackets {
            g.set_bracket(*i, *j, *k, Polynomial::constant(0, c.clone()))?;
        }
        Ok(g)
    }

    pub fn base(&self) -> &BaseSpace {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.base.dim()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn with_generators<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.rank {
            return Err(Error::Rank { expected: self.rank, found: names.len() });
        }
        self.generators = names;
        Ok(self)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.rank + j) * self.rank + k
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::Rank { expected: self.rank, found: i + 1 });
        }
        Ok(())
    }

    fn check_poly(&self, p: &Polynomial) -> Result<()> {
        if p.nvars() != self.nvars() {
            return Err(Error::VariableCount { left: self.nvars(), right: p.nvars() });
        }
        Ok(())
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.structure[self.idx(i, j, k)]
    }

    /// Sets `c[i][j][k] = p` and `c[j][i][k] = −p`.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, p: Polynomial) -> Result<()> {
        self.check_gen(i)?;
        self.check_gen(j)?;
        self.check_gen(k)?;
        self.check_poly(&p)?;
        if i == j {
            return Err(Error::IndexSet(format!("bracket of generator {i} with itself is fixed at zero")));
        }
        let neg = -&p;
        let (a, b) = (self.idx(i, j, k), self.idx(j, i, k));
        self.structure[a] = p;
        self.structure[b] = neg;
        Ok(())
    }

    /// Sets a single structure function without touching its mirror entry.
    /// Only meant for building deliberately broken inputs.
    pub fn set_structure_raw(&mut self, i: usize, j: usize, k: usize, p: Polynomial) -> Result<()> {
        self.check_gen(i)?;
        self.check_gen(j)?;
        self.check_gen(k)?;
        self.check_poly(&p)?;
        let a = self.idx(i, j, k);
        self.structure[a] = p;
        Ok(())
    }

    pub fn anchor_component(&self, i: usize, j: usize) -> &Polynomial {
        &self.anchor[i * self.nvars() + j]
    }

    pub fn set_anchor(&mut self, i: usize, j: usize, p: Polynomial) -> Result<()> {
        self.check_gen(i)?;
        if j >= self.nvars() {
            return Err(Error::VariableIndex { index: j, nvars: self.nvars() });
        }
        self.check_poly(&p)?;
        let m = self.nvars();
        self.anchor[i * m + j] = p;
        Ok(())
    }

    /// Anchor of the `i`-th generator.
    pub fn anchor_of(&self, i: usize) -> Derivation {
        let m = self.nvars();
        Derivation::new(self.anchor[i * m..(i + 1) * m].to_vec())
    }

    pub fn generator(&self, i: usize) -> Section {
        Section::unit(self.rank, self.nvars(), i)
    }

    /// The bracket of two generators, `Σ_k c[i][j][k] e_k`.
    pub fn generator_bracket(&self, i: usize, j: usize) -> Section {
        Section::new((0..self.rank).map(|k| self.structure(i, j, k).clone()).collect())
    }

    pub fn zero_section(&self) -> Section {
        Section::zero(self.rank, self.nvars())
    }

    pub fn check_section(&self, s: &Section) -> Result<()> {
        if s.rank() != self.rank {
            return Err(Error::Rank { expected: self.rank, found: s.rank() });
        }
        for c in s.coeffs() {
            self.check_poly(c)?;
        }
        Ok(())
    }

    pub fn anchor_of_section(&self, s: &Section) -> Result<Derivation> {
        self.check_section(s)?;
        let m = self.nvars();
        let mut comps = vec![Polynomial::zero(m); m];
        for (i, f) in s.coeffs().iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (j, comp) in comps.iter_mut().enumerate() {
                let a = self.anchor_component(i, j);
                if !a.is_zero() {
                    *comp = &*comp + &(f * a);
                }
            }
        }
        Ok(Derivation::new(comps))
    }

    /// `[s, t]_k = Σ_{i,j} s_i t_j c[i][j][k] + a(s)(t_k) − a(t)(s_k)`.
    pub fn bracket_sections(&self, s: &Section, t: &Section) -> Result<Section> {
        self.check_section(s)?;
        self.check_section(t)?;
        let n = self.rank;
        let m = self.nvars();
        let mut out = vec![Polynomial::zero(m); n];
        for i in 0..n {
            let si = s.coeff(i);
            if si.is_zero() {
                continue;
            }
            for j in 0..n {
                let tj = t.coeff(j);
                if tj.is_zero() {
                    continue;
                }
                let st = si * tj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure(i, j, k);
                    if !c.is_zero() {
                        *o = &*o + &(&st * c);
                    }
                }
            }
        }
        if m > 0 {
            let as_ = self.anchor_of_section(s)?;
            let at = self.anchor_of_section(t)?;
            for k in 0..n {
                let d1 = as_.apply(t.coeff(k))?;
                let d2 = at.apply(s.coeff(k))?;
                out[k] = &(&out[k] + &d1) - &d2;
            }
        }
        Ok(Section::new(out))
    }

    /// `[s,[t,u]] + [t,[u,s]] + [u,[s,t]]`.
    pub fn jacobiator(&self, s: &Section, t: &Section, u: &Section) -> Result<Section> {
        let a = self.bracket_sections(s, &self.bracket_sections(t, u)?)?;
        let b = self.bracket_sections(t, &self.bracket_sections(u, s)?)?;
        let c = self.bracket_sections(u, &self.bracket_sections(s, t)?)?;
        Ok(a.add(&b).add(&c))
    }

    /// `a([s,t]) − [a(s), a(t)]`.
    pub fn anchor_defect(&self, s: &Section, t: &Section) -> Result<Derivation> {
        let lhs = self.anchor_of_section(&self.bracket_sections(s, t)?)?;
        let rhs = self.anchor_of_section(s)?.commutator(&self.anchor_of_section(t)?)?;
        Ok(lhs.sub(&rhs))
    }

    /// Checks antisymmetry of the structure functions, the Jacobi identity
    /// and the anchor morphism condition, on all generators and on seeded
    /// random polynomial sections.
    pub fn validate(&self, cfg: &CheckConfig) -> ValidationReport {
        let mut report = Report::new("algebroid");
        let n = self.rank;
        let names = self.base.vars().to_vec();

        let mut anti = Check::new("antisymmetry");
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let sum = self.structure(i, j, k) + self.structure(j, i, k);
                    anti.record(
                        sum.is_zero(),
                        || format!("c[{}][{}][{}]", self.generators[i], self.generators[j], self.generators[k]),
                        || sum.display_with(&names).to_string(),
                    );
                }
            }
        }
        report.push(anti);

        let mut sampler = Sampler::from_config(cfg);
        let mut jac = Check::new("jacobi");
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = self
                        .jacobiator(&self.generator(i), &self.generator(j), &self.generator(k))
                        .expect("generator sections are well formed");
                    jac.record(
                        r.is_zero(),
                        || self.name_tuple(&[i, j, k]),
                        || r.display_with(&names).to_string(),
                    );
                }
            }
        }
        for t in 0..cfg.samples {
            let s = self.random_section(&mut sampler);
            let u = self.random_section(&mut sampler);
            let v = self.random_section(&mut sampler);
            let r = self.jacobiator(&s, &u, &v).expect("random sections are well formed");
            jac.record(r.is_zero(), || format!("random triple #{t}"), || r.display_with(&names).to_string());
        }
        report.push(jac);

        let mut anc = Check::new("anchor_morphism");
        for i in 0..n {
            for j in 0..n {
                let d = self.anchor_defect(&self.generator(i), &self.generator(j)).expect("well formed");
                anc.record(d.is_zero(), || self.name_tuple(&[i, j]), || d.display_with(&names).to_string());
            }
        }
        for t in 0..cfg.samples {
            let s = self.random_section(&mut sampler);
            let u = self.random_section(&mut sampler);
            let d = self.anchor_defect(&s, &u).expect("well formed");
            anc.record(d.is_zero(), || format!("random pair #{t}"), || d.display_with(&names).to_string());
        }
        report.push(anc);
        report
    }

    pub fn random_section(&self, sampler: &mut Sampler) -> Section {
        Section::new(sampler.polynomials(self.rank, self.nvars()))
    }

    pub fn name_tuple(&self, idx: &[usize]) -> String {
        let parts: Vec<&str> = idx.iter().map(|&i| self.generators[i].as_str()).collect();
        format!("({})", parts.join(","))
    }

    /// Bracket and anchor negated.
    pub fn opposite(&self) -> LieAlgebroid {
        let mut out = self.clone();
        for p in out.structure.iter_mut().chain(out.anchor.iter_mut()) {
            *p = -&*p;
        }
        out
    }

    /// Reorders generators: new generator `t` is old generator `order[t]`.
    pub fn permute(&self, order: &[usize]) -> Result<LieAlgebroid> {
        let n = self.rank;
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::IndexSet(format!("permutation of length {} for rank {n}", order.len())));
        }
        for &o in order {
            if o >= n || seen[o] {
                return Err(Error::IndexSet(format!("{order:?} is not a permutation")));
            }
            seen[o] = true;
        }
        let mut out = LieAlgebroid::abelian(self.base.clone(), n);
        out.generators = order.iter().map(|&o| self.generators[o].clone()).collect();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let p = self.structure(order[a], order[b], order[c]).clone();
                    out.set_structure_raw(a, b, c, p)?;
                }
            }
            for j in 0..self.nvars() {
                out.set_anchor(a, j, self.anchor_component(order[a], j).clone())?;
            }
        }
        Ok(out)
    }

    /// Restriction to a bracket-closed set of generators.
    pub fn restrict(&self, indices: &[usize]) -> Result<LieAlgebroid> {
        let mut out = LieAlgebroid::abelian(self.base.clone(), indices.len());
        out.generators = indices.iter().map(|&i| self.generators[i].clone()).collect();
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for k in 0..self.rank {
                    let c = self.structure(i, j, k);
                    match indices.iter().position(|&t| t == k) {
                        Some(pos) => out.set_structure_raw(a, b, pos, c.clone())?,
                        None if !c.is_zero() => return Err(Error::NotClosed { i, j }),
                        None => {}
                    }
                }
            }
            for j in 0..self.nvars() {
                out.set_anchor(a, j, self.anchor_component(i, j).clone())?;
            }
        }
        Ok(out)
    }

    /// The algebroid `TA → TM` over the doubled base `(x, ẋ)` generated by
    /// complete lifts `T e_i` (first `n`) and vertical lifts `ê_i` (last `n`).
    pub fn tangent_prolongation(&self) -> LieAlgebroid {
        let n = self.rank;
        let m = self.nvars();
        let mut vars: Vec<String> = self.base.vars().to_vec();
        vars.extend(self.base.vars().iter().map(|v| format!("{v}_dot")));
        let base = BaseSpace { vars };
        let lift: Vec<usize> = (0..m).collect();
        let up = |p: &Polynomial| p.embed(2 * m, &lift).expect("embedding into doubled base");
        // ḟ = Σ ẋ_l ∂f/∂x_l
        let dot = |p: &Polynomial| {
            let mut acc = Polynomial::zero(2 * m);
            for l in 0..m {
                let d = up(&p.partial(l).expect("index in range"));
                if !d.is_zero() {
                    acc = &acc + &(&Polynomial::var(2 * m, m + l).expect("index in range") * &d);
                }
            }
            acc
        };

        let mut out = LieAlgebroid::abelian(base, 2 * n);
        out.generators = self
            .generators
            .iter()
            .map(|g| format!("T{g}"))
            .chain(self.generators.iter().map(|g| format!("{g}^")))
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.structure(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    out.set_structure_raw(i, j, k, up(c)).expect("in range");
                    out.set_structure_raw(i, j, n + k, dot(c)).expect("in range");
                    out.set_structure_raw(i, n + j, n + k, up(c)).expect("in range");
                    out.set_structure_raw(n + j, i, n + k, -&up(c)).expect("in range");
                }
            }
            for j in 0..m {
                let a = self.anchor_component(i, j);
                out.set_anchor(i, j, up(a)).expect("in range");
                out.set_anchor(i, m + j, dot(a)).expect("in range");
                out.set_anchor(n + i, m + j, up(a)).expect("in range");
            }
        }
        out
    }

    /// True when every structure function and anchor component is constant.
    pub fn is_constant(&self) -> bool {
        self.structure.iter().chain(&self.anchor).all(|p| p.as_constant().is_some())
    }

    /// Adds `delta` to one structure function (mirrored to keep
    /// antisymmetry when `i != j`).
    pub fn perturb_structure(&mut self, i: usize, j: usize, k: usize, delta: &Rational) -> Result<()> {
        let d = Polynomial::constant(self.nvars(), delta.clone());
        let cur = self.structure(i, j, k).clone();
        if i == j {
            return self.set_structure_raw(i, j, k, &cur + &d);
        }
        self.set_bracket(i, j, k, &cur + &d)
    }

    pub fn structure_is_zero(&self) -> bool {
        self.structure.iter().all(Polynomial::is_zero)
    }

    pub fn anchor_is_zero(&self) -> bool {
        self.anchor.iter().all(Polynomial::is_zero)
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl crate::verified::Validate for LieAlgebroid {
    fn validate(&self, cfg: &CheckConfig) -> Report {
        LieAlgebroid::validate(self, cfg)
    }
}
