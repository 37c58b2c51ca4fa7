//! Graded-commutative algebras given by a finite presentation.
//!
//! An [`AlgebraContext`] fixes an ordered generator list, the monomials that
//! rewrite to zero and the monomials that carry 2-torsion. Elements are
//! finite sums of exponent vectors with exact coefficients; every
//! constructor goes through [`normalize`], so stored elements are always in
//! normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{domain, structural, Result};
use crate::scalar::{Ring, Scalar};

/// Default degree window for the exhaustive product checks.
pub const DEFAULT_PRODUCT_DEGREE_BOUND: i64 = 60;
/// Default degree window for rank tables.
pub const DEFAULT_TABLE_DEGREE_BOUND: i64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorInfo {
    pub name: String,
    /// Homological degree of the generator as a class of the space.
    pub unshifted_degree: i64,
    /// Degree in the algebra grading, i.e. `unshifted_degree - shift`.
    pub shifted_degree: i64,
    /// Exponent capped at one (exterior generator).
    pub nilpotent: bool,
    /// Whether the generator counts as odd for Koszul signs.
    pub odd: bool,
    /// Coefficient of the generator's image under orientation reversal.
    pub sign_under_theta: i8,
}

impl GeneratorInfo {
    /// A generator of a context whose product lowers degree by `shift`.
    pub fn new(name: &str, unshifted_degree: i64, shift: i64) -> Self {
        let shifted_degree = unshifted_degree - shift;
        GeneratorInfo {
            name: name.to_string(),
            unshifted_degree,
            shifted_degree,
            nilpotent: false,
            odd: shifted_degree.rem_euclid(2) == 1,
            sign_under_theta: 1,
        }
    }

    pub fn nilpotent(mut self) -> Self {
        self.nilpotent = true;
        self
    }

    /// Treat the generator as even for sign purposes (ungraded-commutative rings).
    pub fn even(mut self) -> Self {
        self.odd = false;
        self
    }

    pub fn theta_sign(mut self, sign: i8) -> Self {
        self.sign_under_theta = sign;
        self
    }
}

/// Exponent vector over the generators of a context, in the context's order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn unit(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    /// `generator^exponent` in a context with `len` generators.
    pub fn power(len: usize, generator: usize, exponent: u32) -> Self {
        let mut e = vec![0; len];
        e[generator] = exponent;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self >= pattern`, i.e. `pattern` divides `self`.
    pub fn divisible_by(&self, pattern: &Monomial) -> bool {
        self.0.len() == pattern.0.len() && self.0.iter().zip(&pattern.0).all(|(a, b)| a >= b)
    }

    pub fn total_letters(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// A finite presentation of a graded algebra over `Q` or `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    /// Short tag of the space the algebra describes ("loop", "omega", "sphere").
    pub label: String,
    pub n: u32,
    pub ring: Ring,
    /// Degree lowered by each product: `n` for loop and intersection products, 0 for Pontrjagin.
    pub shift: i64,
    /// Printed name of the empty monomial.
    pub unit_name: String,
    pub generators: Vec<GeneratorInfo>,
    pub zero_rules: Vec<Monomial>,
    pub torsion_rules: Vec<Monomial>,
}

impl AlgebraContext {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        label: &str,
        n: u32,
        ring: Ring,
        shift: i64,
        unit_name: &str,
        generators: Vec<GeneratorInfo>,
        zero_rules: Vec<Monomial>,
        torsion_rules: Vec<Monomial>,
    ) -> Result<Arc<Self>> {
        let len = generators.len();
        for g in &generators {
            if g.shifted_degree != g.unshifted_degree - shift {
                return Err(structural(format!(
                    "generator {} has inconsistent degrees",
                    g.name
                )));
            }
            if !g.nilpotent && g.shifted_degree <= 0 {
                return Err(structural(format!(
                    "polynomial generator {} must have positive degree",
                    g.name
                )));
            }
            if g.sign_under_theta != 1 && g.sign_under_theta != -1 {
                return Err(structural(format!("generator {} has a bad sign", g.name)));
            }
        }
        for rule in zero_rules.iter().chain(&torsion_rules) {
            if rule.len() != len {
                return Err(structural("rewrite rule does not match the generator list"));
            }
        }
        Ok(Arc::new(AlgebraContext {
            label: label.to_string(),
            n,
            ring,
            shift,
            unit_name: unit_name.to_string(),
            generators,
            zero_rules,
            torsion_rules,
        }))
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        self.shift
            + m.exponents()
                .iter()
                .zip(&self.generators)
                .map(|(&e, g)| e as i64 * g.shifted_degree)
                .sum::<i64>()
    }

    /// True if the monomial is forced to zero by a nilpotency cap or a zero rule.
    pub fn vanishes(&self, m: &Monomial) -> bool {
        m.exponents()
            .iter()
            .zip(&self.generators)
            .any(|(&e, g)| g.nilpotent && e > 1)
            || self.zero_rules.iter().any(|r| m.divisible_by(r))
    }

    pub fn is_torsion(&self, m: &Monomial) -> bool {
        self.torsion_rules.iter().any(|r| m.divisible_by(r))
    }

    /// Koszul sign of `u * v` from moving the odd letters of `v` past those of `u`.
    pub fn koszul_sign(&self, u: &Monomial, v: &Monomial) -> bool {
        let mut transpositions = 0u64;
        for (j, gj) in self.generators.iter().enumerate() {
            if !gj.odd || v.0[j] == 0 {
                continue;
            }
            let passed: u64 = self.generators[j + 1..]
                .iter()
                .zip(&u.0[j + 1..])
                .filter(|(g, _)| g.odd)
                .map(|(_, &e)| e as u64)
                .sum();
            transpositions += passed * v.0[j] as u64;
        }
        transpositions % 2 == 1
    }

    /// Coefficient of `m` under orientation reversal when it acts letter by letter.
    pub fn letter_theta_sign(&self, m: &Monomial) -> i8 {
        let negative = m
            .exponents()
            .iter()
            .zip(&self.generators)
            .filter(|(_, g)| g.sign_under_theta < 0)
            .map(|(&e, _)| e)
            .sum::<u32>()
            % 2
            == 1;
        if negative {
            -1
        } else {
            1
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return self.unit_name.clone();
        }
        let mut parts = Vec::new();
        for (g, &e) in self.generators.iter().zip(m.exponents()) {
            match e {
                0 => {}
                1 => parts.push(g.name.clone()),
                e => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        parts.join("*")
    }
}

/// A normal-form basis vector, with its annihilator when it is a torsion class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMonomial {
    pub monomial: Monomial,
    pub torsion: Option<u32>,
}

/// All normal-form monomials of degree `d`, sorted by exponent vector.
///
/// Over `Z` the 2-torsion monomials are kept and flagged; over `Q` they vanish.
pub fn basis_in_degree(d: i64, ctx: &AlgebraContext) -> Vec<BasisMonomial> {
    let len = ctx.generators.len();
    let nilpotent: Vec<usize> = (0..len).filter(|&i| ctx.generators[i].nilpotent).collect();
    let free: Vec<usize> = (0..len).filter(|&i| !ctx.generators[i].nilpotent).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << nilpotent.len()) {
        let mut exps = vec![0u32; len];
        let mut budget = d - ctx.shift;
        for (bit, &i) in nilpotent.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                exps[i] = 1;
                budget -= ctx.generators[i].shifted_degree;
            }
        }
        distribute(ctx, &free, 0, budget, &mut exps, &mut out);
    }
    let mut basis: Vec<BasisMonomial> = out
        .into_iter()
        .map(Monomial)
        .filter(|m| !ctx.vanishes(m))
        .filter_map(|m| {
            let torsion = ctx.is_torsion(&m);
            match (torsion, ctx.ring) {
                (true, Ring::Q) => None,
                (true, Ring::Z) => Some(BasisMonomial {
                    monomial: m,
                    torsion: Some(2),
                }),
                (false, _) => Some(BasisMonomial {
                    monomial: m,
                    torsion: None,
                }),
            }
        })
        .collect();
    basis.sort_by(|a, b| a.monomial.cmp(&b.monomial));
    basis
}

fn distribute(
    ctx: &AlgebraContext,
    free: &[usize],
    pos: usize,
    budget: i64,
    exps: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if pos == free.len() {
        if budget == 0 {
            out.push(exps.clone());
        }
        return;
    }
    if budget < 0 {
        return;
    }
    let i = free[pos];
    let step = ctx.generators[i].shifted_degree;
    let mut e = 0u32;
    while e as i64 * step <= budget {
        exps[i] = e;
        distribute(ctx, free, pos + 1, budget - e as i64 * step, exps, out);
        e += 1;
    }
    exps[i] = 0;
}

/// Normal-form basis of every degree in `0..=max_degree`, ascending.
pub fn basis_up_to(max_degree: i64, ctx: &AlgebraContext) -> Vec<(i64, BasisMonomial)> {
    (0..=max_degree)
        .flat_map(|d| basis_in_degree(d, ctx).into_iter().map(move |b| (d, b)))
        .collect()
}

/// A finite formal sum of monomials with nonzero exact coefficients.
#[derive(Clone)]
pub struct Element {
    ctx: Arc<AlgebraContext>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{} n={} {}]({})", self.ctx.label, self.ctx.n, self.ctx.ring, self)
    }
}

/// Bring raw terms into normal form.
///
/// Applies nilpotency caps and zero rules, merges equal monomials, reduces
/// torsion coefficients (mod 2 over `Z`, to zero over `Q`) and drops zeros.
pub fn normalize(raw: Vec<(Scalar, Monomial)>, ctx: &Arc<AlgebraContext>) -> Result<Element> {
    let len = ctx.generators.len();
    let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
    for (c, m) in raw {
        if m.len() != len {
            return Err(structural(format!(
                "monomial of length {} in a context with {} generators",
                m.len(),
                len
            )));
        }
        if ctx.ring == Ring::Z && !c.is_integer() {
            return Err(domain(format!("fraction {c} in an integral algebra")));
        }
        if c.is_zero() || ctx.vanishes(&m) {
            continue;
        }
        let slot = terms.entry(m).or_insert_with(Scalar::zero);
        *slot = &*slot + &c;
    }
    let mut out = BTreeMap::new();
    for (m, c) in terms {
        let c = if ctx.is_torsion(&m) {
            match ctx.ring {
                Ring::Q => continue,
                Ring::Z => c.rem_euclid(2).expect("integral coefficient"),
            }
        } else {
            c
        };
        if !c.is_zero() {
            out.insert(m, c);
        }
    }
    Ok(Element {
        ctx: ctx.clone(),
        terms: out,
    })
}

/// Product of two elements of the same context.
pub fn multiply(x: &Element, y: &Element, ctx: &Arc<AlgebraContext>) -> Result<Element> {
    x.check_context(ctx)?;
    y.check_context(ctx)?;
    let mut raw = Vec::with_capacity(x.terms.len() * y.terms.len());
    for (u, cu) in &x.terms {
        for (v, cv) in &y.terms {
            let exps: Vec<u32> = u.0.iter().zip(&v.0).map(|(a, b)| a + b).collect();
            let m = Monomial(exps);
            if ctx.vanishes(&m) {
                continue;
            }
            let c = cu * cv;
            let c = if ctx.koszul_sign(u, v) { -c } else { c };
            raw.push((c, m));
        }
    }
    normalize(raw, ctx)
}

/// Sorted distinct degrees of the monomials present; empty for zero.
pub fn degree(x: &Element, ctx: &AlgebraContext) -> Vec<i64> {
    let mut ds: Vec<i64> = x.terms.keys().map(|m| ctx.monomial_degree(m)).collect();
    ds.sort_unstable();
    ds.dedup();
    ds
}

impl Element {
    pub fn zero(ctx: &Arc<AlgebraContext>) -> Self {
        Element {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(ctx: &Arc<AlgebraContext>) -> Self {
        Self::from_monomial(ctx, Monomial::unit(ctx.generators.len()))
    }

    /// The normal form of a single monomial with coefficient one.
    pub fn from_monomial(ctx: &Arc<AlgebraContext>, m: Monomial) -> Self {
        normalize(vec![(Scalar::one(), m)], ctx).expect("monomial of matching length")
    }

    pub fn term(ctx: &Arc<AlgebraContext>, c: Scalar, m: Monomial) -> Result<Self> {
        normalize(vec![(c, m)], ctx)
    }

    /// The generator with the given printed name.
    pub fn generator(ctx: &Arc<AlgebraContext>, name: &str) -> Result<Self> {
        let i = ctx
            .generator_index(name)
            .ok_or_else(|| domain(format!("no generator `{name}` in the {} algebra", ctx.label)))?;
        Ok(Self::from_monomial(ctx, Monomial::power(ctx.generators.len(), i, 1)))
    }

    pub fn context(&self) -> &Arc<AlgebraContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        degree(self, &self.ctx)
    }

    /// The single degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Split into homogeneous components, keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<i64, Element> {
        let mut parts: BTreeMap<i64, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = self.ctx.monomial_degree(m);
            parts
                .entry(d)
                .or_insert_with(|| Element::zero(&self.ctx))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    pub fn check_context(&self, ctx: &Arc<AlgebraContext>) -> Result<()> {
        if Arc::ptr_eq(&self.ctx, ctx) || *self.ctx == **ctx {
            Ok(())
        } else {
            Err(structural(format!(
                "element of the {} algebra (n={}, {}) used in the {} algebra (n={}, {})",
                self.ctx.label, self.ctx.n, self.ctx.ring, ctx.label, ctx.n, ctx.ring
            )))
        }
    }

    fn raw_terms(&self) -> Vec<(Scalar, Monomial)> {
        self.terms.iter().map(|(m, c)| (c.clone(), m.clone())).collect()
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        other.check_context(&self.ctx)?;
        let mut raw = self.raw_terms();
        raw.extend(other.raw_terms());
        normalize(raw, &self.ctx)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one()).expect("integral scale")
    }

    pub fn scale(&self, c: &Scalar) -> Result<Element> {
        normalize(
            self.terms.iter().map(|(m, v)| (c * v, m.clone())).collect(),
            &self.ctx,
        )
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        multiply(self, other, &self.ctx)
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = Element::unit(&self.ctx);
        for _ in 0..k {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    /// Apply a per-monomial rule linearly.
    pub fn map_terms<F>(&self, target: &Arc<AlgebraContext>, mut f: F) -> Result<Element>
    where
        F: FnMut(&Monomial) -> Result<Element>,
    {
        let mut acc = Element::zero(target);
        for (m, c) in &self.terms {
            let image = f(m)?;
            acc = acc.add(&image.scale(c)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&Monomial, &Scalar)> = self.terms.iter().collect();
        ordered.sort_by_key(|(m, _)| (self.ctx.monomial_degree(m), (*m).clone()));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let name = self.ctx.format_monomial(m);
            let body = format_term(&c.abs(), &name);
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// `c*name`, omitting a unit coefficient.
pub(crate) fn format_term(c: &Scalar, name: &str) -> String {
    if c.is_one() {
        name.to_string()
    } else {
        format!("{c}*{name}")
    }
}

/// Associativity, graded commutativity, unitality and idempotence of
/// [`normalize`] on every basis monomial up to `max_degree`.
///
/// Shifted products (loop, intersection) are checked for graded commutativity
/// with sign `(-1)^{(|x|-s)(|y|-s)}`, `s` the shift; the unshifted Pontrjagin
/// ring of a sphere is `Z[x]` and is checked for plain commutativity.
pub fn verify_product_laws(ctx: &Arc<AlgebraContext>, max_degree: i64) -> crate::Report {
    use crate::report::{Check, Report};

    let basis: Vec<(i64, Element)> = basis_up_to(max_degree, ctx)
        .into_iter()
        .map(|(d, b)| (d, Element::from_monomial(ctx, b.monomial)))
        .collect();
    let mut report = Report::new(format!(
        "{} product laws, n={}, ring {}, degree <= {max_degree}",
        ctx.label, ctx.n, ctx.ring
    ));

    let mut assoc = Check::new("(u*v)*w = u*(v*w)");
    for (du, u) in &basis {
        for (dv, v) in &basis {
            if du + dv > max_degree {
                continue;
            }
            let uv = u.mul(v).expect("same context");
            for (dw, w) in &basis {
                if du + dv + dw > max_degree {
                    continue;
                }
                let l = uv.mul(w).expect("same context");
                let r = u.mul(&v.mul(w).expect("same context")).expect("same context");
                assoc.expect(l == r, || format!("u={u}, v={v}, w={w}: {l} != {r}"));
            }
        }
    }
    report.push(assoc);

    let graded = ctx.shift != 0;
    let mut comm = Check::new(if graded {
        "y*x = (-1)^((|x|-n)(|y|-n)) x*y"
    } else {
        "y*x = x*y"
    });
    for (dx, x) in &basis {
        for (dy, y) in &basis {
            if dx + dy > max_degree {
                continue;
            }
            let negative = graded && ((dx - ctx.shift) * (dy - ctx.shift)).rem_euclid(2) == 1;
            let xy = x.mul(y).expect("same context");
            let expected = if negative { xy.neg() } else { xy };
            let yx = y.mul(x).expect("same context");
            comm.expect(yx == expected, || format!("x={x}, y={y}: {yx} != {expected}"));
        }
    }
    report.push(comm);

    let unit = Element::unit(ctx);
    let mut unital = Check::new("E*x = x*E = x");
    for (_, x) in &basis {
        let l = unit.mul(x).expect("same context");
        let r = x.mul(&unit).expect("same context");
        unital.expect(&l == x && &r == x, || format!("x={x}: {l}, {r}"));
    }
    report.push(unital);

    let mut idem = Check::new("normalize(normalize(x)) = normalize(x)");
    for (i, (_, x)) in basis.iter().enumerate() {
        // a non-trivial raw sum: 3x - x + (next basis vector) - (next basis vector)
        let mut raw: Vec<(Scalar, Monomial)> = x
            .terms()
            .flat_map(|(m, c)| {
                [
                    (&Scalar::from_int(3) * c, m.clone()),
                    (-c.clone(), m.clone()),
                ]
            })
            .collect();
        if let Some((_, y)) = basis.get(i + 1) {
            for (m, c) in y.terms() {
                raw.push((c.clone(), m.clone()));
                raw.push((-c.clone(), m.clone()));
            }
        }
        let once = normalize(raw, ctx).expect("well-formed terms");
        let twice = normalize(once.raw_terms(), ctx).expect("well-formed terms");
        idem.expect(once == twice, || format!("x={x}: {once} != {twice}"));
    }
    report.push(idem);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd_ctx(n: u32, ring: Ring) -> Arc<AlgebraContext> {
        let n_ = n as i64;
        AlgebraContext::new(
            "loop",
            n,
            ring,
            n_,
            "E",
            vec![
                GeneratorInfo::new("A", 0, n_).nilpotent(),
                GeneratorInfo::new("U", 2 * n_ - 1, n_).theta_sign(-1),
            ],
            vec![],
            vec![],
        )
        .unwrap()
    }

    fn even_ctx(n: u32, ring: Ring) -> Arc<AlgebraContext> {
        let n_ = n as i64;
        AlgebraContext::new(
            "loop",
            n,
            ring,
            n_,
            "E",
            vec![
                GeneratorInfo::new("sigma1", n_ - 1, n_).nilpotent().theta_sign(-1),
                GeneratorInfo::new("A", 0, n_).nilpotent(),
                GeneratorInfo::new("Theta", 3 * n_ - 2, n_).theta_sign(-1),
            ],
            vec![Monomial::new(vec![1, 1, 0])],
            vec![Monomial::new(vec![0, 1, 1])],
        )
        .unwrap()
    }

    #[test]
    fn exterior_square_vanishes() {
        let ctx = odd_ctx(3, Ring::Z);
        let e = normalize(vec![(Scalar::one(), Monomial::new(vec![2, 0]))], &ctx).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn cancellation() {
        let ctx = odd_ctx(3, Ring::Z);
        let e = normalize(
            vec![
                (Scalar::from_int(3), Monomial::unit(2)),
                (Scalar::from_int(-3), Monomial::unit(2)),
            ],
            &ctx,
        )
        .unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn torsion_coefficient_has_period_two() {
        // k*(a*t) by repeated addition: the coefficient cycles with period 2.
        let ctx = even_ctx(4, Ring::Z);
        let at = Monomial::new(vec![0, 1, 1]);
        let one = Element::from_monomial(&ctx, at.clone());
        let mut acc = Element::zero(&ctx);
        let mut seen = Vec::new();
        for _ in 0..=5 {
            seen.push(acc.coefficient(&at));
            acc = acc.add(&one).unwrap();
        }
        let expected: Vec<Scalar> = (0..=5).map(|k| Scalar::from_int(k % 2)).collect();
        assert_eq!(seen, expected);
        let five = normalize(vec![(Scalar::from_int(5), at.clone())], &ctx).unwrap();
        assert_eq!(five, one);
    }

    #[test]
    fn wrong_length_is_structural() {
        let ctx = odd_ctx(3, Ring::Z);
        let err = normalize(vec![(Scalar::one(), Monomial::new(vec![1, 0, 0]))], &ctx);
        assert!(matches!(err, Err(crate::Error::Structural(_))));
    }

    #[test]
    fn fractions_rejected_over_z() {
        let ctx = odd_ctx(3, Ring::Z);
        let err = normalize(vec![(Scalar::ratio(1, 2).unwrap(), Monomial::unit(2))], &ctx);
        assert!(matches!(err, Err(crate::Error::Domain(_))));
    }

    #[test]
    fn mixed_contexts_rejected() {
        let a = Element::unit(&odd_ctx(3, Ring::Z));
        let b = Element::unit(&odd_ctx(5, Ring::Z));
        assert!(matches!(a.mul(&b), Err(crate::Error::Structural(_))));
    }

    #[test]
    fn degrees_of_monomials() {
        let ctx = odd_ctx(3, Ring::Q);
        assert_eq!(degree(&Element::unit(&ctx), &ctx), vec![3]);
        let au2 = Element::from_monomial(&ctx, Monomial::new(vec![1, 2]));
        // 0 + 2*(2n-1) - 2n with n = 3
        assert_eq!(degree(&au2, &ctx), vec![4]);
        assert!(degree(&Element::zero(&ctx), &ctx).is_empty());
    }

    #[test]
    fn basis_examples() {
        let ctx = odd_ctx(3, Ring::Z);
        let b4 = basis_in_degree(4, &ctx);
        assert_eq!(b4.len(), 1);
        assert_eq!(b4[0].monomial, Monomial::new(vec![1, 2]));
        assert!(basis_in_degree(1, &ctx).is_empty());

        let ctx = even_ctx(4, Ring::Z);
        let b6 = basis_in_degree(6, &ctx);
        assert_eq!(
            b6,
            vec![BasisMonomial {
                monomial: Monomial::new(vec![0, 1, 1]),
                torsion: Some(2)
            }]
        );
        assert!(basis_in_degree(6, &even_ctx(4, Ring::Q)).is_empty());
    }

    #[test]
    fn koszul_sign_for_odd_letters() {
        let ctx = AlgebraContext::new(
            "test",
            3,
            Ring::Z,
            0,
            "1",
            vec![
                GeneratorInfo::new("p", 1, 0).nilpotent(),
                GeneratorInfo::new("q", 1, 0).nilpotent(),
            ],
            vec![],
            vec![],
        )
        .unwrap();
        let p = Element::generator(&ctx, "p").unwrap();
        let q = Element::generator(&ctx, "q").unwrap();
        assert_eq!(q.mul(&p).unwrap(), p.mul(&q).unwrap().neg());
        assert_eq!(p.mul(&q).unwrap().to_string(), "p*q");
    }

    #[test]
    fn printing_is_canonical() {
        let ctx = odd_ctx(3, Ring::Q);
        let x = normalize(
            vec![
                (Scalar::from_int(3), Monomial::unit(2)),
                (Scalar::one(), Monomial::new(vec![1, 2])),
                (Scalar::ratio(-1, 2).unwrap(), Monomial::new(vec![0, 1])),
            ],
            &ctx,
        )
        .unwrap();
        assert_eq!(x.to_string(), "3*E + A*U^2 - 1/2*U");
    }
}
