//! Induced maps between the loop, based-loop and sphere algebras, and the
//! identities that tie them together.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{basis_up_to, AlgebraContext, Element, Monomial};
use crate::error::{domain, Result};
use crate::report::{Check, Report};
use crate::scalar::{Ring, Scalar};
use crate::sphere::{make_space, Space, SpacePresentation};

type Rule = dyn Fn(&Monomial) -> Result<Element> + Send + Sync;

/// A linear map given by the image of each basis monomial.
#[derive(Clone)]
pub struct LinearMap {
    pub name: String,
    pub source: Arc<AlgebraContext>,
    pub target: Arc<AlgebraContext>,
    pub degree_shift: i64,
    rule: Arc<Rule>,
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearMap")
            .field("name", &self.name)
            .field("source", &self.source.label)
            .field("target", &self.target.label)
            .field("degree_shift", &self.degree_shift)
            .finish()
    }
}

impl LinearMap {
    pub fn new<F>(
        name: &str,
        source: &Arc<AlgebraContext>,
        target: &Arc<AlgebraContext>,
        degree_shift: i64,
        rule: F,
    ) -> Self
    where
        F: Fn(&Monomial) -> Result<Element> + Send + Sync + 'static,
    {
        LinearMap {
            name: name.to_string(),
            source: source.clone(),
            target: target.clone(),
            degree_shift,
            rule: Arc::new(rule),
        }
    }

    /// A map scaling each monomial by a sign.
    pub fn diagonal<F>(name: &str, ctx: &Arc<AlgebraContext>, sign: F) -> Self
    where
        F: Fn(&Monomial) -> i8 + Send + Sync + 'static,
    {
        let target = ctx.clone();
        LinearMap::new(name, ctx, ctx, 0, move |m| {
            Element::term(&target, Scalar::from_int(sign(m) as i64), m.clone())
        })
    }

    pub fn identity(name: &str, ctx: &Arc<AlgebraContext>) -> Self {
        LinearMap::diagonal(name, ctx, |_| 1)
    }

    pub fn image(&self, m: &Monomial) -> Result<Element> {
        (self.rule)(m)
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        x.check_context(&self.source)?;
        x.map_terms(&self.target, |m| self.image(m))
    }

    /// `self` after `first`.
    pub fn after(&self, first: &LinearMap) -> Result<LinearMap> {
        if *first.target != *self.source {
            return Err(domain(format!(
                "cannot compose {} after {}",
                self.name, first.name
            )));
        }
        let (outer, inner) = (self.clone(), first.clone());
        Ok(LinearMap::new(
            &format!("{}∘{}", self.name, first.name),
            &first.source,
            &self.target,
            first.degree_shift + self.degree_shift,
            move |m| outer.apply(&inner.image(m)?),
        ))
    }
}

/// Sign of orientation reversal on `x^k` in the Pontrjagin ring.
///
/// Built from `x -> -x` and the twisted multiplicativity
/// `theta(a * b) = (-1)^{|a||b|} theta(a) * theta(b)`, peeling one `x` at a time.
pub fn pontrjagin_theta_sign(n: u32, k: u32) -> i8 {
    let dx = n as u64 - 1;
    let mut sign = 1i8;
    for i in 0..k as u64 {
        // theta(x^{i+1}) = (-1)^{|x^i||x|} theta(x^i) * theta(x)
        let twist = (i * dx * dx) % 2 == 1;
        sign = -sign;
        if twist {
            sign = -sign;
        }
    }
    sign
}

/// Orientation reversal on homology.
///
/// On the free loop space it acts letter by letter and is multiplicative;
/// on the based loop space it follows [`pontrjagin_theta_sign`].
pub fn theta_star(pres: &SpacePresentation) -> Result<LinearMap> {
    let ctx = pres.ctx.clone();
    match pres.space {
        Space::LoopSphere => {
            let c = ctx.clone();
            Ok(LinearMap::diagonal("theta", &ctx, move |m| c.letter_theta_sign(m)))
        }
        Space::BasedLoopSphere => {
            let n = pres.n();
            Ok(LinearMap::diagonal("theta", &ctx, move |m| {
                pontrjagin_theta_sign(n, m.exponents()[0])
            }))
        }
        Space::Sphere => Err(domain("orientation reversal acts on loop spaces only")),
    }
}

/// Rotation of loops; homotopic to the identity.
pub fn chi_star(pres: &SpacePresentation) -> Result<LinearMap> {
    if pres.space != Space::LoopSphere {
        return Err(domain("rotation is defined on the free loop space"));
    }
    Ok(LinearMap::identity("chi", &pres.ctx))
}

/// Evaluation at the base point, free loops to the sphere.
pub fn ev_star(n: u32, ring: Ring) -> Result<LinearMap> {
    let src = make_space(Space::LoopSphere, n, ring)?;
    let dst = make_space(Space::Sphere, n, ring)?;
    let a = src.ctx.generator_index("A").expect("A");
    let pt = dst.get("pt")?;
    let fundamental = dst.unit();
    let target = dst.ctx.clone();
    Ok(LinearMap::new("ev", &src.ctx, &dst.ctx, 0, move |m| {
        if m.is_unit() {
            Ok(fundamental.clone())
        } else if m.total_letters() == 1 && m.exponents()[a] == 1 {
            Ok(pt.clone())
        } else {
            Ok(Element::zero(&target))
        }
    }))
}

/// Umkehr map of the fibre inclusion, free loops to based loops, lowering degree by `n`.
///
/// Multiplicative, with `U -> x` (n odd), `Theta -> x^2` (n even) and the
/// remaining generators in the kernel.
pub fn j_shriek(n: u32, ring: Ring) -> Result<LinearMap> {
    let src = make_space(Space::LoopSphere, n, ring)?;
    let dst = make_space(Space::BasedLoopSphere, n, ring)?;
    let x = dst.get("x")?;
    let images: Vec<Element> = src
        .ctx
        .generators
        .iter()
        .map(|g| match g.name.as_str() {
            "U" => x.clone(),
            "Theta" => x.pow(2),
            _ => dst.zero(),
        })
        .collect();
    let target = dst.ctx.clone();
    Ok(LinearMap::new("jshriek", &src.ctx, &dst.ctx, -(n as i64), move |m| {
        let mut acc = Element::unit(&target);
        for (img, &e) in images.iter().zip(m.exponents()) {
            if e > 0 {
                acc = acc.mul(&img.pow(e))?;
            }
        }
        Ok(acc)
    }))
}

/// Fibre inclusion, based loops into free loops.
///
/// `x^k -> A*U^k` for n odd; for n even `x^{2r-1} -> sigma1*Theta^{r-1}` and
/// `x^{2r} -> A*Theta^r` (the 2-torsion class, zero over `Q` once `r > 0`).
pub fn j_star(n: u32, ring: Ring) -> Result<LinearMap> {
    let src = make_space(Space::BasedLoopSphere, n, ring)?;
    let dst = make_space(Space::LoopSphere, n, ring)?;
    let target = dst.ctx.clone();
    let len = target.generators.len();
    let odd = n % 2 == 1;
    Ok(LinearMap::new("jstar", &src.ctx, &dst.ctx, 0, move |m| {
        let k = m.exponents()[0];
        let exps = if odd {
            vec![1, k]
        } else if k % 2 == 1 {
            vec![1, 0, (k - 1) / 2]
        } else {
            vec![0, 1, k / 2]
        };
        debug_assert_eq!(exps.len(), len);
        Ok(Element::from_monomial(&target, Monomial::new(exps)))
    }))
}

fn basis_elements(ctx: &Arc<AlgebraContext>, max_degree: i64) -> Vec<(i64, Element)> {
    basis_up_to(max_degree, ctx)
        .into_iter()
        .map(|(d, b)| (d, Element::from_monomial(ctx, b.monomial)))
        .collect()
}

/// The three relations between loop product, Pontrjagin product and the
/// fibre maps, checked on every basis pair of total degree at most `max_degree`.
pub fn verify_gysin_relations(n: u32, ring: Ring, max_degree: i64) -> Result<Report> {
    let lp = make_space(Space::LoopSphere, n, ring)?;
    let om = make_space(Space::BasedLoopSphere, n, ring)?;
    let shriek = j_shriek(n, ring)?;
    let star = j_star(n, ring)?;
    let a_class = lp.get("A")?;
    let loop_basis = basis_elements(&lp.ctx, max_degree);
    let based_basis = basis_elements(&om.ctx, max_degree);

    let mut report = Report::new(format!("fibre relations, n={n}, ring {ring}, degree <= {max_degree}"));

    let mut c1 = Check::new("jshriek(a*b) = jshriek(a) * jshriek(b)");
    for (da, a) in &loop_basis {
        for (db, b) in &loop_basis {
            if da + db > max_degree {
                continue;
            }
            let lhs = a.mul(b).and_then(|p| shriek.apply(&p));
            let rhs = shriek
                .apply(a)
                .and_then(|x| shriek.apply(b).and_then(|y| x.mul(&y)));
            let (Some(l), Some(r)) = (
                c1.expect_ok(lhs, || format!("a={a}, b={b}")),
                c1.expect_ok(rhs, || format!("a={a}, b={b}")),
            ) else {
                continue;
            };
            c1.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
        }
    }
    report.push(c1);

    let mut c2 = Check::new("jstar(y) * a = jstar(y * jshriek(a))");
    for (dy, y) in &based_basis {
        for (da, a) in &loop_basis {
            if dy + da > max_degree {
                continue;
            }
            let lhs = star.apply(y).and_then(|s| s.mul(a));
            let rhs = shriek
                .apply(a)
                .and_then(|s| y.mul(&s))
                .and_then(|p| star.apply(&p));
            let (Some(l), Some(r)) = (
                c2.expect_ok(lhs, || format!("y={y}, a={a}")),
                c2.expect_ok(rhs, || format!("y={y}, a={a}")),
            ) else {
                continue;
            };
            c2.expect(l == r, || format!("y={y}, a={a}: {l} != {r}"));
        }
    }
    report.push(c2);

    let mut c3 = Check::new("jstar(jshriek(a)) = A * a");
    for (_, a) in &loop_basis {
        let lhs = shriek.apply(a).and_then(|s| star.apply(&s));
        let rhs = a_class.mul(a);
        let (Some(l), Some(r)) = (
            c3.expect_ok(lhs, || format!("a={a}")),
            c3.expect_ok(rhs, || format!("a={a}")),
        ) else {
            continue;
        };
        c3.expect(l == r, || format!("a={a}: {l} != {r}"));
    }
    report.push(c3);
    Ok(report)
}

/// Involution, multiplicativity and sign laws of orientation reversal, plus
/// the evaluation homomorphism, up to `max_degree` and powers up to `max_power`.
pub fn verify_structure_maps(n: u32, ring: Ring, max_degree: i64, max_power: u32) -> Result<Report> {
    let lp = make_space(Space::LoopSphere, n, ring)?;
    let om = make_space(Space::BasedLoopSphere, n, ring)?;
    let sp = make_space(Space::Sphere, n, ring)?;
    let theta = theta_star(&lp)?;
    let theta_om = theta_star(&om)?;
    let ev = ev_star(n, ring)?;
    let loop_basis = basis_elements(&lp.ctx, max_degree);
    let mut report = Report::new(format!("structure maps, n={n}, ring {ring}, degree <= {max_degree}"));

    let mut inv = Check::new("theta(theta(a)) = a");
    for (_, a) in &loop_basis {
        let twice = theta.apply(a).and_then(|t| theta.apply(&t));
        if let Some(t) = inv.expect_ok(twice, || format!("a={a}")) {
            inv.expect(&t == a, || format!("a={a}: got {t}"));
        }
    }
    report.push(inv);

    let mut endo = Check::new("theta(a*b) = theta(a)*theta(b)");
    for (da, a) in &loop_basis {
        for (db, b) in &loop_basis {
            if da + db > max_degree {
                continue;
            }
            let lhs = a.mul(b).and_then(|p| theta.apply(&p));
            let rhs = theta.apply(a).and_then(|x| theta.apply(b).and_then(|y| x.mul(&y)));
            let (Some(l), Some(r)) = (
                endo.expect_ok(lhs, || format!("a={a}, b={b}")),
                endo.expect_ok(rhs, || format!("a={a}, b={b}")),
            ) else {
                continue;
            };
            endo.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
        }
    }
    report.push(endo);

    let mut big_theta = Check::new("theta(Theta) = (-1)^(n-1) Theta");
    let t = lp.get("Theta")?;
    let expected = if n % 2 == 1 { t.clone() } else { t.neg() };
    let got = theta.apply(&t)?;
    big_theta.expect(got == expected, || format!("got {got}"));
    report.push(big_theta);

    let mut law = Check::new("(-1)^(|a||b|) theta(a)*theta(b) = theta(a*b) on based loops");
    let mut formula = Check::new(
        "theta(x^k) = (-1)^k x^k if n odd or k(k-1) = 0 mod 4, else (-1)^(k+1) x^k",
    );
    let x = om.get("x")?;
    let dx = n as i64 - 1;
    for i in 0..=max_power {
        let a = x.pow(i);
        for j in 0..=max_power - i {
            let b = x.pow(j);
            let twist = (i as i64 * dx * j as i64 * dx) % 2 == 1;
            let lhs = theta_om.apply(&a)?.mul(&theta_om.apply(&b)?)?;
            let lhs = if twist { lhs.neg() } else { lhs };
            let rhs = theta_om.apply(&a.mul(&b)?)?;
            law.expect(lhs == rhs, || format!("a=x^{i}, b=x^{j}: {lhs} != {rhs}"));
        }
        let k = i as i64;
        let plain = n % 2 == 1 || (k * (k - 1)) % 4 == 0;
        let sign = if plain { k % 2 == 1 } else { (k + 1) % 2 == 1 };
        let expected = a.scale(&Scalar::sign(sign))?;
        let got = theta_om.apply(&a)?;
        formula.expect(got == expected, || format!("k={i}: got {got}, expected {expected}"));
    }
    report.push(law);
    report.push(formula);

    let mut evh = Check::new("ev(a*b) = ev(a) . ev(b)");
    for (da, a) in &loop_basis {
        for (db, b) in &loop_basis {
            if da + db > max_degree {
                continue;
            }
            let l = ev.apply(&a.mul(b)?)?;
            let r = ev.apply(a)?.mul(&ev.apply(b)?)?;
            evh.expect(l == r, || format!("a={a}, b={b}: {l} != {r}"));
        }
    }
    let e_img = ev.apply(&lp.unit())?;
    evh.expect(e_img == sp.unit(), || format!("ev(E) = {e_img}"));
    report.push(evh);
    Ok(report)
}
