//! Finite subgroups of O(2) acting on loop spaces by reparametrization,
//! rational quotient homology, transfer maps and transfer products.
//!
//! Over `Q` the quotient map is an isomorphism from the invariant classes
//! onto the homology of the orbit space, so a quotient class is stored as
//! its unique invariant representative. `q_*` averages over the group and
//! `tr` multiplies the representative by the group order.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{basis_in_degree, format_term, Element, Monomial};
use crate::error::{domain, structural, Error, Result};
use crate::linalg::rank;
use crate::maps::{chi_star, ev_star, j_shriek, theta_star, LinearMap};
use crate::report::{Check, Report};
use crate::scalar::{Ring, Scalar};
use crate::sphere::{make_space, BettiEntry, BettiTable, Space, SpacePresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupKind {
    /// Rotations by multiples of `1/m`.
    Cyclic(u32),
    /// `C_m` together with orientation reversal.
    Dihedral(u32),
    /// `D_m` conjugated by the rotation `num/den`.
    ConjugateDihedral { m: u32, num: u32, den: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgroupSpec {
    pub kind: SubgroupKind,
}

impl SubgroupSpec {
    pub fn cyclic(m: u32) -> Result<Self> {
        Self::checked(SubgroupKind::Cyclic(m))
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        Self::checked(SubgroupKind::Dihedral(m))
    }

    pub fn conjugate_dihedral(m: u32, num: u32, den: u32) -> Result<Self> {
        if den == 0 {
            return Err(domain("rotation with zero denominator"));
        }
        Self::checked(SubgroupKind::ConjugateDihedral { m, num, den })
    }

    /// `{id, theta}`: reversal followed by a half rotation, the conjugate of
    /// `D_1` by a quarter rotation.
    pub fn theta() -> Self {
        SubgroupSpec {
            kind: SubgroupKind::ConjugateDihedral { m: 1, num: 1, den: 2 },
        }
    }

    fn checked(kind: SubgroupKind) -> Result<Self> {
        let m = match kind {
            SubgroupKind::Cyclic(m) | SubgroupKind::Dihedral(m) => m,
            SubgroupKind::ConjugateDihedral { m, .. } => m,
        };
        if m == 0 {
            return Err(domain("subgroup parameter m must be at least 1"));
        }
        Ok(SubgroupSpec { kind })
    }

    pub fn order(&self) -> u32 {
        match self.kind {
            SubgroupKind::Cyclic(m) => m,
            SubgroupKind::Dihedral(m) | SubgroupKind::ConjugateDihedral { m, .. } => 2 * m,
        }
    }

    /// Number of group elements acting on homology as the identity and as
    /// orientation reversal, respectively.
    pub fn action_counts(&self) -> (u32, u32) {
        match self.kind {
            SubgroupKind::Cyclic(m) => (m, 0),
            SubgroupKind::Dihedral(m) | SubgroupKind::ConjugateDihedral { m, .. } => (m, m),
        }
    }

    pub fn has_reflections(&self) -> bool {
        self.action_counts().1 > 0
    }

    pub fn is_theta(&self) -> bool {
        *self == SubgroupSpec::theta()
    }

    pub fn label(&self) -> String {
        match self.kind {
            SubgroupKind::Cyclic(m) => format!("C{m}"),
            SubgroupKind::Dihedral(m) => format!("D{m}"),
            _ if self.is_theta() => "theta".to_string(),
            SubgroupKind::ConjugateDihedral { m, num, den } => format!("D{m}@{num}/{den}"),
        }
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for SubgroupSpec {
    type Err = Error;

    /// `Cm`, `Dm`, `theta`, or `Dm@p/q` for a conjugate dihedral group.
    fn from_str(s: &str) -> Result<Self> {
        if s == "theta" {
            return Ok(SubgroupSpec::theta());
        }
        let bad = || domain(format!("unknown group `{s}` (expected Cm, Dm or theta)"));
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        match head {
            "C" => SubgroupSpec::cyclic(rest.parse().map_err(|_| bad())?),
            "D" => match rest.split_once('@') {
                None => SubgroupSpec::dihedral(rest.parse().map_err(|_| bad())?),
                Some((m, rot)) => {
                    let (p, q) = rot.split_once('/').ok_or_else(bad)?;
                    SubgroupSpec::conjugate_dihedral(
                        m.parse().map_err(|_| bad())?,
                        p.parse().map_err(|_| bad())?,
                        q.parse().map_err(|_| bad())?,
                    )
                }
            },
            _ => Err(bad()),
        }
    }
}

/// The action of a subgroup on the homology of a loop space.
///
/// Rotations act trivially; every reflection acts as orientation reversal.
pub fn homology_action(group: &SubgroupSpec, pres: &SpacePresentation) -> Result<LinearMap> {
    if group.has_reflections() {
        theta_star(pres)
    } else {
        match pres.space {
            Space::LoopSphere => chi_star(pres),
            Space::BasedLoopSphere => Ok(LinearMap::identity("rotation", &pres.ctx)),
            Space::Sphere => Err(domain("the O(2) action lives on loop spaces")),
        }
    }
}

/// Rational homology of an orbit space `Λ/G` (or `Ω/G`) with its transfer product.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub base: SpacePresentation,
    pub group: SubgroupSpec,
    action: LinearMap,
}

/// A class of the orbit space, stored as its invariant representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientElement {
    rep: Element,
    group: SubgroupSpec,
}

impl QuotientAlgebra {
    pub fn new(group: SubgroupSpec, base: SpacePresentation) -> Result<Self> {
        if base.ring() != Ring::Q {
            return Err(domain(
                "quotient homology is computed with rational coefficients only",
            ));
        }
        let action = homology_action(&group, &base)?;
        Ok(QuotientAlgebra { base, group, action })
    }

    /// Quotient of the free loop space of `S^n`.
    pub fn loop_space(group: SubgroupSpec, n: u32) -> Result<Self> {
        Self::new(group, make_space(Space::LoopSphere, n, Ring::Q)?)
    }

    /// Quotient of the based loop space of `S^n`.
    pub fn based_loop_space(group: SubgroupSpec, n: u32) -> Result<Self> {
        Self::new(group, make_space(Space::BasedLoopSphere, n, Ring::Q)?)
    }

    pub fn n(&self) -> u32 {
        self.base.n()
    }

    pub fn order(&self) -> Scalar {
        Scalar::from_int(self.group.order() as i64)
    }

    pub fn action(&self) -> &LinearMap {
        &self.action
    }

    pub fn is_invariant(&self, x: &Element) -> Result<bool> {
        Ok(self.action.apply(x)? == *x)
    }

    /// Wrap an invariant class as the quotient class it represents.
    pub fn from_invariant(&self, x: &Element) -> Result<QuotientElement> {
        x.check_context(&self.base.ctx)?;
        if !self.is_invariant(x)? {
            return Err(structural(format!(
                "{x} is not invariant under {}",
                self.group
            )));
        }
        Ok(QuotientElement {
            rep: x.clone(),
            group: self.group,
        })
    }

    /// Induced map of the quotient projection.
    ///
    /// Represented by the group average `(1/|G|) sum_g g_*(x)`.
    pub fn q_star(&self, x: &Element) -> Result<QuotientElement> {
        x.check_context(&self.base.ctx)?;
        let (rotations, reflections) = self.group.action_counts();
        let mut sum = x.scale(&Scalar::from_int(rotations as i64))?;
        if reflections > 0 {
            let flipped = self.action.apply(x)?;
            sum = sum.add(&flipped.scale(&Scalar::from_int(reflections as i64))?)?;
        }
        let rep = sum.scale(&self.order().recip()?)?;
        Ok(QuotientElement {
            rep,
            group: self.group,
        })
    }

    pub fn check(&self, a: &QuotientElement) -> Result<()> {
        if a.group != self.group {
            return Err(structural(format!(
                "class of the {} quotient used in the {} quotient",
                a.group, self.group
            )));
        }
        a.rep.check_context(&self.base.ctx)
    }

    pub fn transfer(&self, a: &QuotientElement) -> Result<Element> {
        self.check(a)?;
        a.rep.scale(&self.order())
    }

    /// `q_*(tr(a) * tr(b))`.
    pub fn transfer_product(&self, a: &QuotientElement, b: &QuotientElement) -> Result<QuotientElement> {
        let product = self.transfer(a)?.mul(&self.transfer(b)?)?;
        self.q_star(&product)
    }

    /// `q_*(E) / |G|^2`.
    pub fn unit(&self) -> Result<QuotientElement> {
        let order = self.order();
        self.q_star(&self.base.unit())?.scale(&(&order * &order).recip()?)
    }

    pub fn zero(&self) -> QuotientElement {
        QuotientElement {
            rep: self.base.zero(),
            group: self.group,
        }
    }

    /// `a^k` for the transfer product, with `a^0` the unit.
    pub fn power(&self, a: &QuotientElement, k: u32) -> Result<QuotientElement> {
        let mut acc = self.unit()?;
        for _ in 0..k {
            acc = self.transfer_product(&acc, a)?;
        }
        Ok(acc)
    }

    /// Basis monomials of degree `d` fixed by the group.
    pub fn invariants_in_degree(&self, d: i64) -> Result<Vec<Monomial>> {
        let mut out = Vec::new();
        for b in basis_in_degree(d, &self.base.ctx) {
            let x = Element::from_monomial(&self.base.ctx, b.monomial.clone());
            if self.is_invariant(&x)? {
                out.push(b.monomial);
            }
        }
        Ok(out)
    }

    /// `q_*` of each invariant basis monomial of degree `d`.
    pub fn basis_in_degree(&self, d: i64) -> Result<Vec<QuotientElement>> {
        self.invariants_in_degree(d)?
            .into_iter()
            .map(|m| self.q_star(&Element::from_monomial(&self.base.ctx, m)))
            .collect()
    }

    pub fn basis_up_to(&self, max_degree: i64) -> Result<Vec<(i64, QuotientElement)>> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            for b in self.basis_in_degree(d)? {
                out.push((d, b));
            }
        }
        Ok(out)
    }

    pub fn betti(&self, max_degree: i64) -> Result<BettiTable> {
        if max_degree < 0 {
            return Err(domain("max_degree must be non-negative"));
        }
        let mut entries = Vec::new();
        for d in 0..=max_degree {
            let rank = self.invariants_in_degree(d)?.len();
            if rank > 0 {
                entries.push(BettiEntry {
                    degree: d,
                    rank,
                    torsion: vec![],
                });
            }
        }
        Ok(BettiTable {
            space: self.base.space,
            group: Some(self.group.label()),
            n: self.n(),
            ring: Ring::Q,
            max_degree,
            entries,
        })
    }

    /// Whether `f` maps the degree-`from` quotient piece isomorphically onto the degree-`to` piece.
    pub fn is_isomorphism_between_degrees<F>(&self, f: F, from: i64, to: i64) -> Result<bool>
    where
        F: Fn(&QuotientElement) -> Result<QuotientElement>,
    {
        let sources = self.invariants_in_degree(from)?;
        let targets = self.invariants_in_degree(to)?;
        if sources.len() != targets.len() {
            return Ok(false);
        }
        let mut rows = Vec::new();
        for m in sources {
            let img = f(&self.q_star(&Element::from_monomial(&self.base.ctx, m))?)?;
            self.check(&img)?;
            rows.push(targets.iter().map(|t| img.rep.coefficient(t)).collect());
        }
        Ok(rank(&rows) == rows.len())
    }
}

impl QuotientElement {
    /// The invariant class `x` with `q_*(x) = self`.
    pub fn representative(&self) -> &Element {
        &self.rep
    }

    pub fn group(&self) -> SubgroupSpec {
        self.group
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.rep.degrees()
    }

    pub fn homogeneous_degree(&self) -> Option<i64> {
        self.rep.homogeneous_degree()
    }

    pub fn homogeneous_parts(&self) -> Vec<(i64, QuotientElement)> {
        self.rep
            .homogeneous_parts()
            .into_iter()
            .map(|(d, rep)| (d, QuotientElement { rep, group: self.group }))
            .collect()
    }

    fn same_quotient(&self, other: &QuotientElement) -> Result<()> {
        if self.group != other.group {
            return Err(structural(format!(
                "cannot combine classes of the {} and {} quotients",
                self.group, other.group
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.same_quotient(other)?;
        Ok(QuotientElement {
            rep: self.rep.add(&other.rep)?,
            group: self.group,
        })
    }

    pub fn sub(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuotientElement {
        QuotientElement {
            rep: self.rep.neg(),
            group: self.group,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<QuotientElement> {
        Ok(QuotientElement {
            rep: self.rep.scale(c)?,
            group: self.group,
        })
    }
}

impl fmt::Display for QuotientElement {
    /// `c*q(m) + ...` in degree order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rep.is_zero() {
            return f.write_str("0");
        }
        let ctx = self.rep.context();
        let mut terms: Vec<(&Monomial, &Scalar)> = self.rep.terms().collect();
        terms.sort_by_key(|(m, _)| (ctx.monomial_degree(m), (*m).clone()));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let body = format_term(&c.abs(), &format!("q({})", ctx.format_monomial(m)));
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

/// Invariant basis monomials of `pres` in degree `d` under `group`.
pub fn invariants_in_degree(group: &SubgroupSpec, pres: &SpacePresentation, d: i64) -> Result<Vec<Monomial>> {
    QuotientAlgebra::new(*group, pres.clone())?.invariants_in_degree(d)
}

pub fn transfer(qa: &QuotientAlgebra, a: &QuotientElement) -> Result<Element> {
    qa.transfer(a)
}

pub fn transfer_product(qa: &QuotientAlgebra, a: &QuotientElement, b: &QuotientElement) -> Result<QuotientElement> {
    qa.transfer_product(a, b)
}

/// Transfer product built from the Pontrjagin product of the based loop space.
pub fn based_transfer_product(
    group: &SubgroupSpec,
    n: u32,
    a: &QuotientElement,
    b: &QuotientElement,
) -> Result<QuotientElement> {
    QuotientAlgebra::based_loop_space(*group, n)?.transfer_product(a, b)
}

pub fn quotient_betti(group: &SubgroupSpec, n: u32, max_degree: i64) -> Result<BettiTable> {
    QuotientAlgebra::loop_space(*group, n)?.betti(max_degree)
}

/// Which realization of the orbit-space product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AVariant {
    /// Orientation reversal `{id, vartheta}` (the group `D1`).
    Vartheta,
    /// Reversal with a half shift (the group `theta`).
    Theta,
}

/// Geometric orbit product `A(a, b)` with `b` homogeneous of degree `j`.
///
/// For orientation reversal it vanishes when `n` is odd and equals
/// `(-1)^{n(n-j)} P(a, b)` when `n` is even; the shifted variant equals
/// `(-1)^{n(n-j)} P(a, b)` for every `n`.
pub fn geometric_product_a(
    variant: AVariant,
    qa: &QuotientAlgebra,
    a: &QuotientElement,
    b: &QuotientElement,
) -> Result<QuotientElement> {
    match variant {
        AVariant::Vartheta if qa.group != SubgroupSpec::dihedral(1)? => {
            return Err(domain("the vartheta product lives on the D1 quotient"))
        }
        AVariant::Theta if !qa.group.is_theta() => {
            return Err(domain("the theta product lives on the theta quotient"))
        }
        _ => {}
    }
    if qa.base.space != Space::LoopSphere {
        return Err(domain("orbit products are defined on the free loop space"));
    }
    qa.check(a)?;
    qa.check(b)?;
    if b.is_zero() {
        return Ok(qa.zero());
    }
    let j = b.homogeneous_degree().ok_or_else(|| {
        domain(format!(
            "second argument {b} is not homogeneous; split it by degree first"
        ))
    })?;
    let n = qa.n() as i64;
    if variant == AVariant::Vartheta && n % 2 == 1 {
        return Ok(qa.zero());
    }
    let negative = (n * (n - j)).rem_euclid(2) == 1;
    qa.transfer_product(a, b)?.scale(&Scalar::sign(negative))
}

/// Transfer axioms and the scaling identities between `q_*`, `tr` and `P_G`.
pub fn verify_transfer_axioms(group: &SubgroupSpec, n: u32, max_degree: i64) -> Result<Report> {
    let qa = QuotientAlgebra::loop_space(*group, n)?;
    let order = qa.order();
    let order2 = &order * &order;
    let mut report = Report::new(format!(
        "transfer identities, n={n}, G={group}, degree <= {max_degree}"
    ));
    let quotient_basis = qa.basis_up_to(max_degree)?;

    let mut q_tr = Check::new("q(tr(a)) = |G| a");
    for (_, a) in &quotient_basis {
        let lhs = qa.q_star(&qa.transfer(a)?)?;
        let rhs = a.scale(&order)?;
        q_tr.expect(lhs == rhs, || format!("a={a}: {lhs} != {rhs}"));
    }
    report.push(q_tr);

    let mut tr_q = Check::new("tr(q(x)) = sum_g g(x)");
    let (rotations, reflections) = group.action_counts();
    for d in 0..=max_degree {
        for b in basis_in_degree(d, &qa.base.ctx) {
            let x = Element::from_monomial(&qa.base.ctx, b.monomial);
            let lhs = qa.transfer(&qa.q_star(&x)?)?;
            // sum over the group, one term per element
            let mut rhs = qa.base.zero();
            for _ in 0..rotations {
                rhs = rhs.add(&x)?;
            }
            for _ in 0..reflections {
                rhs = rhs.add(&qa.action().apply(&x)?)?;
            }
            tr_q.expect(lhs == rhs, || format!("x={x}: {lhs} != {rhs}"));
        }
    }
    report.push(tr_q);

    let mut tr_p = Check::new("tr(P(a,b)) = |G| tr(a)*tr(b)");
    let mut q_mul = Check::new("q(x*y) = |G|^-2 P(q(x), q(y))");
    for (_, a) in &quotient_basis {
        for (_, b) in &quotient_basis {
            let p = qa.transfer_product(a, b)?;
            let lhs = qa.transfer(&p)?;
            let rhs = qa.transfer(a)?.mul(&qa.transfer(b)?)?.scale(&order)?;
            tr_p.expect(lhs == rhs, || format!("a={a}, b={b}: {lhs} != {rhs}"));

            let (x, y) = (a.representative(), b.representative());
            let lhs = qa.q_star(&x.mul(y)?)?;
            let rhs = qa
                .transfer_product(&qa.q_star(x)?, &qa.q_star(y)?)?
                .scale(&order2.recip()?)?;
            q_mul.expect(lhs == rhs, || format!("x={x}, y={y}: {lhs} != {rhs}"));
        }
    }
    report.push(tr_p);
    report.push(q_mul);
    Ok(report)
}

/// Associativity, graded commutativity and the two-sided unit of `P_G`.
pub fn verify_quotient_laws(group: &SubgroupSpec, n: u32, max_degree: i64) -> Result<Report> {
    let qa = QuotientAlgebra::loop_space(*group, n)?;
    let basis = qa.basis_up_to(max_degree)?;
    let shift = n as i64;
    let mut report = Report::new(format!(
        "transfer product laws, n={n}, G={group}, degree <= {max_degree}"
    ));

    let mut assoc = Check::new("P(P(a,b),c) = P(a,P(b,c))");
    for (da, a) in &basis {
        for (db, b) in &basis {
            if da + db > max_degree {
                continue;
            }
            let ab = qa.transfer_product(a, b)?;
            for (dc, c) in &basis {
                if da + db + dc > max_degree {
                    continue;
                }
                let l = qa.transfer_product(&ab, c)?;
                let r = qa.transfer_product(a, &qa.transfer_product(b, c)?)?;
                assoc.expect(l == r, || format!("a={a}, b={b}, c={c}: {l} != {r}"));
            }
        }
    }
    report.push(assoc);

    let mut comm = Check::new("P(b,a) = (-1)^((|a|-n)(|b|-n)) P(a,b)");
    for (da, a) in &basis {
        for (db, b) in &basis {
            if da + db > max_degree {
                continue;
            }
            let negative = ((da - shift) * (db - shift)).rem_euclid(2) == 1;
            let l = qa.transfer_product(b, a)?;
            let r = qa.transfer_product(a, b)?.scale(&Scalar::sign(negative))?;
            comm.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
        }
    }
    report.push(comm);

    let e = qa.unit()?;
    let mut unit = Check::new("P(e,a) = P(a,e) = a with e = q(E)/|G|^2");
    for (_, a) in &basis {
        let l = qa.transfer_product(&e, a)?;
        let r = qa.transfer_product(a, &e)?;
        unit.expect(&l == a && &r == a, || format!("a={a}: {l}, {r}"));
    }
    report.push(unit);
    Ok(report)
}

/// The unscaled products `P_{D_m}/(2m)^2` agree for `m = 1..=max_m`.
pub fn verify_dihedral_independence(n: u32, max_m: u32, max_degree: i64) -> Result<Report> {
    let reference = QuotientAlgebra::loop_space(SubgroupSpec::dihedral(1)?, n)?;
    let mut report = Report::new(format!(
        "dihedral quotients agree up to scaling, n={n}, m <= {max_m}, degree <= {max_degree}"
    ));
    let mut check = Check::new("P_{D_m}(a,b)/(2m)^2 = P_{D_1}(a,b)/4");
    let ref_basis = reference.basis_up_to(max_degree)?;
    let quarter = Scalar::ratio(1, 4)?;
    for m in 2..=max_m {
        let qa = QuotientAlgebra::loop_space(SubgroupSpec::dihedral(m)?, n)?;
        let basis = qa.basis_up_to(max_degree)?;
        if basis.len() != ref_basis.len() {
            check.expect(false, || format!("m={m}: quotient ranks differ"));
            continue;
        }
        let order = qa.order();
        let scale = (&order * &order).recip()?;
        for ((_, a), (_, ra)) in basis.iter().zip(&ref_basis) {
            for ((_, b), (_, rb)) in basis.iter().zip(&ref_basis) {
                let l = qa.transfer_product(a, b)?.scale(&scale)?;
                let r = reference.transfer_product(ra, rb)?.scale(&quarter)?;
                check.expect(l.representative() == r.representative(), || {
                    format!("m={m}, a={a}, b={b}: {l} != {r}")
                });
            }
        }
    }
    if max_m < 2 {
        check.expect(true, String::new);
    }
    report.push(check);
    Ok(report)
}

/// Nonnilpotent generator of the orientation-reversal quotient and
/// invertibility of multiplication by it.
///
/// n odd: `mu = q(U^2)`, `mu^k` spans degree `2k(n-1)+n`, `P(., mu)` is
/// bijective from degree `i >= 0`. n even: `eta = q(Theta^2)`, `eta^k` spans
/// degree `4k(n-1)+n`, `P(., eta)` is bijective from degree `i > 0`.
pub fn verify_main_theorem(n: u32, max_power: u32, max_degree: i64) -> Result<Report> {
    if n < 3 {
        return Err(domain("the nonnilpotence check needs n >= 3"));
    }
    let qa = QuotientAlgebra::loop_space(SubgroupSpec::dihedral(1)?, n)?;
    let s = n as i64;
    let odd = n % 2 == 1;
    let (name, generator, step, first_degree, start) = if odd {
        let u = qa.base.get("U")?;
        ("mu", qa.q_star(&u.pow(2))?, 2 * s - 2, 3 * s - 2, 0)
    } else {
        let t = qa.base.get("Theta")?;
        ("eta", qa.q_star(&t.pow(2))?, 4 * s - 4, 5 * s - 4, 1)
    };
    let mut report = Report::new(format!("orientation-reversal quotient, n={n}"));

    let mut first = Check::new(format!("{name} spans degree {first_degree}"));
    let dim = qa.invariants_in_degree(first_degree)?.len();
    first.expect(
        dim == 1 && generator.homogeneous_degree() == Some(first_degree),
        || format!("{name} = {generator}, dim = {dim}"),
    );
    report.push(first);

    let mut powers = Check::new(format!("{name}^k != 0 spans degree {step}k + n"));
    let mut power = qa.unit()?;
    for k in 1..=max_power {
        power = qa.transfer_product(&power, &generator)?;
        let d = step * k as i64 + s;
        let dim = qa.invariants_in_degree(d)?.len();
        powers.expect(
            !power.is_zero() && dim == 1 && power.homogeneous_degree() == Some(d),
            || format!("k={k}: {power}, dim H_{d} = {dim}"),
        );
    }
    report.push(powers);

    let mut bij = Check::new(format!(
        "P(., {name}) : H_i -> H_(i+{step}) is bijective for i >= {start}"
    ));
    for i in start..=max_degree {
        let ok = qa.is_isomorphism_between_degrees(|a| qa.transfer_product(a, &generator), i, i + step)?;
        bij.expect(ok, || format!("i={i}"));
    }
    report.push(bij);
    Ok(report)
}

/// The rotation by a quarter turn identifies the reversal quotient with the
/// shifted-reversal quotient as algebras.
pub fn theta_vs_vartheta_iso(n: u32, max_degree: i64) -> Result<Report> {
    if n < 3 {
        return Err(domain("the comparison needs n >= 3"));
    }
    let vq = QuotientAlgebra::loop_space(SubgroupSpec::dihedral(1)?, n)?;
    let tq = QuotientAlgebra::loop_space(SubgroupSpec::theta(), n)?;
    let chi = chi_star(&vq.base)?;
    // chi_*(q_vartheta(x)) = q_theta(chi_{1/4*}(x))
    let compare = |a: &QuotientElement| -> Result<QuotientElement> {
        tq.q_star(&chi.apply(a.representative())?)
    };
    let mut report = Report::new(format!("vartheta and theta quotients, n={n}, degree <= {max_degree}"));

    let mut hom = Check::new("P_theta(chi a, chi b) = chi P_vartheta(a, b)");
    let basis = vq.basis_up_to(max_degree)?;
    for (_, a) in &basis {
        for (_, b) in &basis {
            let l = tq.transfer_product(&compare(a)?, &compare(b)?)?;
            let r = compare(&vq.transfer_product(a, b)?)?;
            hom.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
        }
    }
    report.push(hom);

    let mut bij = Check::new("chi is bijective degreewise");
    for d in 0..=max_degree {
        let vs = vq.invariants_in_degree(d)?;
        let ts = tq.invariants_in_degree(d)?;
        bij.expect(vs == ts, || format!("degree {d}: {} vs {} classes", vs.len(), ts.len()));
    }
    report.push(bij);

    let mut unit = Check::new("chi e = e");
    let (ve, te) = (vq.unit()?, tq.unit()?);
    let image = compare(&ve)?;
    unit.expect(image == te, || format!("{image} != {te}"));
    report.push(unit);

    let named = if n % 2 == 1 {
        ("mu", vq.base.get("U")?.pow(2))
    } else {
        ("eta", vq.base.get("Theta")?.pow(2))
    };
    let mut gen = Check::new(format!("chi {0} = {0}", named.0));
    let image = compare(&vq.q_star(&named.1)?)?;
    let expected = tq.q_star(&named.1)?;
    gen.expect(image == expected, || format!("{image} != {expected}"));
    report.push(gen);
    Ok(report)
}

/// Sign relations between the geometric orbit products and the transfer products.
pub fn verify_a_products(n: u32, max_degree: i64) -> Result<Report> {
    let vq = QuotientAlgebra::loop_space(SubgroupSpec::dihedral(1)?, n)?;
    let tq = QuotientAlgebra::loop_space(SubgroupSpec::theta(), n)?;
    let s = n as i64;
    let mut report = Report::new(format!("orbit products, n={n}, degree <= {max_degree}"));
    let mut var = if n % 2 == 1 {
        Check::new("A_vartheta = 0 for n odd")
    } else {
        Check::new("(-1)^(n(n-j)) A_vartheta(a,b) = P_vartheta(a,b)")
    };
    let mut the = Check::new("(-1)^(n(n-j)) A_theta(a,b) = P_theta(a,b)");
    for (q, check, variant) in [
        (&vq, &mut var, AVariant::Vartheta),
        (&tq, &mut the, AVariant::Theta),
    ] {
        let basis = q.basis_up_to(max_degree)?;
        for (_, a) in &basis {
            for (j, b) in &basis {
                let sign = Scalar::sign((s * (s - j)).rem_euclid(2) == 1);
                let av = geometric_product_a(variant, q, a, b)?;
                if variant == AVariant::Vartheta && n % 2 == 1 {
                    check.expect(av.is_zero(), || format!("a={a}, b={b}: {av}"));
                } else {
                    let l = av.scale(&sign)?;
                    let r = q.transfer_product(a, b)?;
                    check.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
                }
            }
        }
    }
    report.push(var);
    report.push(the);
    Ok(report)
}

/// `(ev/G)_* = (1/|G|) ev_* tr` and `(j/G)_! = (1/|G|) q_Omega j_! tr` on the
/// orientation-reversal quotient.
pub struct QuotientMaps {
    pub loop_quotient: QuotientAlgebra,
    pub based_quotient: QuotientAlgebra,
    ev: LinearMap,
    shriek: LinearMap,
}

impl QuotientMaps {
    pub fn new(group: SubgroupSpec, n: u32) -> Result<Self> {
        Ok(QuotientMaps {
            loop_quotient: QuotientAlgebra::loop_space(group, n)?,
            based_quotient: QuotientAlgebra::based_loop_space(group, n)?,
            ev: ev_star(n, Ring::Q)?,
            shriek: j_shriek(n, Ring::Q)?,
        })
    }

    pub fn ev(&self, a: &QuotientElement) -> Result<Element> {
        let inv = self.loop_quotient.order().recip()?;
        self.ev.apply(&self.loop_quotient.transfer(a)?)?.scale(&inv)
    }

    pub fn j_shriek(&self, a: &QuotientElement) -> Result<QuotientElement> {
        let inv = self.loop_quotient.order().recip()?;
        let lifted = self.shriek.apply(&self.loop_quotient.transfer(a)?)?;
        self.based_quotient.q_star(&lifted)?.scale(&inv)
    }
}

pub fn verify_quotient_homs(n: u32, max_degree: i64) -> Result<Report> {
    let group = SubgroupSpec::dihedral(1)?;
    let maps = QuotientMaps::new(group, n)?;
    let qa = &maps.loop_quotient;
    let qo = &maps.based_quotient;
    let order = qa.order();
    let order2 = &order * &order;
    let basis = qa.basis_up_to(max_degree)?;
    let mut report = Report::new(format!(
        "quotient homomorphisms, n={n}, G={group}, degree <= {max_degree}"
    ));

    let mut ev = Check::new("(ev/G)(P(a,b)) = |G|^2 (ev/G)(a) . (ev/G)(b)");
    let mut js = Check::new("(j/G)!(P(a,b)) = P_Omega((j/G)!(a), (j/G)!(b))");
    for (_, a) in &basis {
        for (_, b) in &basis {
            let p = qa.transfer_product(a, b)?;
            let l = maps.ev(&p)?;
            let r = maps.ev(a)?.mul(&maps.ev(b)?)?.scale(&order2)?;
            ev.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));

            let l = maps.j_shriek(&p)?;
            let r = qo.transfer_product(&maps.j_shriek(a)?, &maps.j_shriek(b)?)?;
            js.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
        }
    }
    let fundamental = maps.ev(&qa.q_star(&qa.base.unit())?)?;
    let sphere_unit = make_space(Space::Sphere, n, Ring::Q)?.unit();
    ev.expect(fundamental == sphere_unit, || format!("(ev/G)(q(E)) = {fundamental}"));
    let unit_image = maps.j_shriek(&qa.unit()?)?;
    let based_unit = qo.unit()?;
    js.expect(unit_image == based_unit, || format!("(j/G)!(e) = {unit_image}"));
    report.push(ev);
    report.push(js);
    Ok(report)
}
