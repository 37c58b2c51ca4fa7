//! The concrete algebras of spheres: the loop-product algebra of the free
//! loop space, the Pontrjagin ring of the based loop space and the
//! intersection algebra of the sphere itself.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{basis_in_degree, AlgebraContext, Element, GeneratorInfo, Monomial};
use crate::linalg::{is_injective_on_degree, is_isomorphism_between_degrees};
use crate::report::{Check, Report};
use crate::error::{domain, Error, Result};
use crate::scalar::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Space {
    /// Free loop space, loop product.
    LoopSphere,
    /// Based loop space, Pontrjagin product.
    BasedLoopSphere,
    /// The sphere with its intersection product.
    Sphere,
}

impl Space {
    pub fn tag(self) -> &'static str {
        match self {
            Space::LoopSphere => "loop",
            Space::BasedLoopSphere => "omega",
            Space::Sphere => "sphere",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "loop" => Ok(Space::LoopSphere),
            "omega" => Ok(Space::BasedLoopSphere),
            "sphere" => Ok(Space::Sphere),
            other => Err(domain(format!("unknown space `{other}`"))),
        }
    }
}

/// An algebra together with its named classes.
#[derive(Debug, Clone)]
pub struct SpacePresentation {
    pub space: Space,
    pub ctx: Arc<AlgebraContext>,
    named: BTreeMap<String, Element>,
}

impl SpacePresentation {
    pub fn n(&self) -> u32 {
        self.ctx.n
    }

    pub fn ring(&self) -> Ring {
        self.ctx.ring
    }

    pub fn unit(&self) -> Element {
        Element::unit(&self.ctx)
    }

    pub fn zero(&self) -> Element {
        Element::zero(&self.ctx)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.named.keys().map(String::as_str)
    }

    pub fn get(&self, name: &str) -> Result<Element> {
        lookup_generator(self, name)
    }
}

pub fn make_space(space: Space, n: u32, ring: Ring) -> Result<SpacePresentation> {
    if n < 2 {
        return Err(domain(format!("sphere dimension must be at least 2, got {n}")));
    }
    let s = n as i64;
    match space {
        Space::LoopSphere if n % 2 == 1 => {
            if n < 3 {
                return Err(domain("odd spheres need n >= 3"));
            }
            let ctx = AlgebraContext::new(
                "loop",
                n,
                ring,
                s,
                "E",
                vec![
                    GeneratorInfo::new("A", 0, s).nilpotent(),
                    GeneratorInfo::new("U", 2 * s - 1, s).theta_sign(-1),
                ],
                vec![],
                vec![],
            )?;
            let a = Element::generator(&ctx, "A")?;
            let u = Element::generator(&ctx, "U")?;
            let mut named = BTreeMap::new();
            named.insert("E".to_string(), Element::unit(&ctx));
            named.insert("sigma1".to_string(), a.mul(&u)?);
            named.insert("Theta".to_string(), u.mul(&u)?);
            named.insert("A".to_string(), a);
            named.insert("U".to_string(), u);
            Ok(SpacePresentation { space, ctx, named })
        }
        Space::LoopSphere => {
            // sigma1, A, Theta with A^2 = sigma1*A = 0 and 2*A*Theta = 0
            let ctx = AlgebraContext::new(
                "loop",
                n,
                ring,
                s,
                "E",
                vec![
                    GeneratorInfo::new("sigma1", s - 1, s).nilpotent().theta_sign(-1),
                    GeneratorInfo::new("A", 0, s).nilpotent(),
                    GeneratorInfo::new("Theta", 3 * s - 2, s).theta_sign(-1),
                ],
                vec![Monomial::new(vec![1, 1, 0])],
                vec![Monomial::new(vec![0, 1, 1])],
            )?;
            let mut named = BTreeMap::new();
            named.insert("E".to_string(), Element::unit(&ctx));
            for g in ["A", "sigma1", "Theta"] {
                named.insert(g.to_string(), Element::generator(&ctx, g)?);
            }
            Ok(SpacePresentation { space, ctx, named })
        }
        Space::BasedLoopSphere => {
            let ctx = AlgebraContext::new(
                "omega",
                n,
                ring,
                0,
                "x^0",
                vec![GeneratorInfo::new("x", s - 1, 0).even().theta_sign(-1)],
                vec![],
                vec![],
            )?;
            let mut named = BTreeMap::new();
            named.insert("x".to_string(), Element::generator(&ctx, "x")?);
            Ok(SpacePresentation { space, ctx, named })
        }
        Space::Sphere => {
            let ctx = AlgebraContext::new(
                "sphere",
                n,
                ring,
                s,
                "fundamental",
                vec![GeneratorInfo::new("pt", 0, s).nilpotent()],
                vec![],
                vec![],
            )?;
            let mut named = BTreeMap::new();
            named.insert("pt".to_string(), Element::generator(&ctx, "pt")?);
            named.insert("fundamental".to_string(), Element::unit(&ctx));
            Ok(SpacePresentation { space, ctx, named })
        }
    }
}

pub fn lookup_generator(pres: &SpacePresentation, name: &str) -> Result<Element> {
    pres.named.get(name).cloned().ok_or_else(|| {
        domain(format!(
            "`{name}` is not a class of the {} algebra for n = {}",
            pres.space,
            pres.n()
        ))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub degree: i64,
    pub rank: usize,
    /// Annihilators of the cyclic torsion summands.
    pub torsion: Vec<u32>,
}

/// Nonzero homology groups in `0..=max_degree`, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub space: Space,
    pub group: Option<String>,
    pub n: u32,
    pub ring: Ring,
    pub max_degree: i64,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn rank(&self, degree: i64) -> usize {
        self.entry(degree).map_or(0, |e| e.rank)
    }

    pub fn torsion(&self, degree: i64) -> &[u32] {
        self.entry(degree).map_or(&[], |e| e.torsion.as_slice())
    }

    pub fn entry(&self, degree: i64) -> Option<&BettiEntry> {
        self.entries
            .binary_search_by_key(&degree, |e| e.degree)
            .ok()
            .map(|i| &self.entries[i])
    }
}

/// Ranks and torsion read off the normal-form basis degree by degree.
pub fn betti(space: Space, n: u32, ring: Ring, max_degree: i64) -> Result<BettiTable> {
    if max_degree < 0 {
        return Err(domain("max_degree must be non-negative"));
    }
    let pres = make_space(space, n, ring)?;
    let mut entries = Vec::new();
    for d in 0..=max_degree {
        let basis = basis_in_degree(d, &pres.ctx);
        let rank = basis.iter().filter(|b| b.torsion.is_none()).count();
        let torsion: Vec<u32> = basis.iter().filter_map(|b| b.torsion).collect();
        if rank > 0 || !torsion.is_empty() {
            entries.push(BettiEntry {
                degree: d,
                rank,
                torsion,
            });
        }
    }
    Ok(BettiTable {
        space,
        group: None,
        n,
        ring,
        max_degree,
        entries,
    })
}

/// Generation by the named generators, invertibility of multiplication by
/// `Theta` and nonnilpotence of `Theta`, for the free loop space algebra.
pub fn verify_presentation(n: u32, ring: Ring, max_degree: i64, max_power: u32) -> Result<Report> {
    let pres = make_space(Space::LoopSphere, n, ring)?;
    let ctx = &pres.ctx;
    let mut report = Report::new(format!(
        "loop algebra presentation, n={n}, ring {ring}, degree <= {max_degree}"
    ));

    // Express each basis class as a product of generators and compare.
    let generators: Vec<Element> = ctx
        .generators
        .iter()
        .map(|g| pres.get(&g.name))
        .collect::<Result<_>>()?;
    let names: Vec<&str> = ctx.generators.iter().map(|g| g.name.as_str()).collect();
    let mut generated = Check::new(format!(
        "every class except E is a product of {}",
        names.join(", ")
    ));
    for d in 0..=max_degree {
        for b in basis_in_degree(d, ctx) {
            if b.monomial.is_unit() {
                continue;
            }
            let mut product: Option<Element> = None;
            for (g, &e) in generators.iter().zip(b.monomial.exponents()) {
                for _ in 0..e {
                    product = Some(match product {
                        None => g.clone(),
                        Some(p) => p.mul(g)?,
                    });
                }
            }
            let target = Element::from_monomial(ctx, b.monomial.clone());
            let product = product.expect("non-unit monomial");
            generated.expect(product == target || product == target.neg(), || {
                format!("{target} vs product {product}")
            });
        }
    }
    report.push(generated);

    let theta = pres.get("Theta")?;
    let step = 2 * n as i64 - 2;
    // For n odd, H_1 = 0 while H_{2n-1} is spanned by U, so the map out of
    // degree 1 is injective but not onto; bijectivity starts at k = 2.
    let mut inj = Check::new("*Theta : H_k -> H_{k+2n-2} is injective for k > 0");
    let mut bij = Check::new("*Theta : H_k -> H_{k+2n-2} is an isomorphism for k >= 2");
    for k in 1..=max_degree {
        let ok = is_injective_on_degree(|x| x.mul(&theta), ctx, k, ctx, k + step)?;
        inj.expect(ok, || format!("k={k}"));
        if k >= 2 {
            let ok = is_isomorphism_between_degrees(|x| x.mul(&theta), ctx, k, ctx, k + step)?;
            bij.expect(ok, || format!("k={k}"));
        }
    }
    report.push(inj);
    report.push(bij);

    let mut nonnil = Check::new("Theta^k != 0");
    let mut power = Element::unit(ctx);
    for k in 1..=max_power {
        power = power.mul(&theta)?;
        nonnil.expect(!power.is_zero(), || format!("k={k}"));
    }
    report.push(nonnil);
    Ok(report)
}
