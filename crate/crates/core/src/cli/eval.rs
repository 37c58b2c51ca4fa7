//! Evaluation of parsed expressions against a chosen space, ring and group.

use std::fmt;

use num_bigint::BigInt;

use super::expr::Expr;
use crate::algebra::Element;
use crate::equivariant::{geometric_product_a, AVariant, QuotientAlgebra, QuotientElement, QuotientMaps, SubgroupSpec};
use crate::error::{Error, Result};
use crate::maps::{ev_star, j_shriek, j_star, theta_star};
use crate::scalar::{Ring, Scalar};
use crate::sphere::{make_space, Space, SpacePresentation};

/// Space, dimension, ring and optional group that expressions are read in.
///
/// Names resolve in the active space first and then in the companion spaces
/// of the same sphere, so values produced by the structure maps print back
/// to text that evaluates to the same class.
#[derive(Debug, Clone)]
pub struct EvalContext {
    pub space: Space,
    pub n: u32,
    pub ring: Ring,
    pub group: Option<SubgroupSpec>,
    loop_space: SpacePresentation,
    based: SpacePresentation,
    sphere: SpacePresentation,
    quotients: Option<(QuotientAlgebra, QuotientAlgebra)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
    Quotient(QuotientElement),
}

fn eval_err(msg: impl Into<String>) -> Error {
    Error::Evaluation(msg.into())
}

impl EvalContext {
    pub fn new(space: Space, n: u32, ring: Ring, group: Option<SubgroupSpec>) -> Result<Self> {
        if group.is_some() && ring != Ring::Q {
            return Err(crate::error::domain("quotient homology is computed over Q only"));
        }
        let quotients = match group {
            None => None,
            Some(g) => Some((
                QuotientAlgebra::loop_space(g, n)?,
                QuotientAlgebra::based_loop_space(g, n)?,
            )),
        };
        Ok(EvalContext {
            space,
            n,
            ring,
            group,
            loop_space: make_space(Space::LoopSphere, n, ring)?,
            based: make_space(Space::BasedLoopSphere, n, ring)?,
            sphere: make_space(Space::Sphere, n, ring)?,
            quotients,
        })
    }

    pub fn presentation(&self, space: Space) -> &SpacePresentation {
        match space {
            Space::LoopSphere => &self.loop_space,
            Space::BasedLoopSphere => &self.based,
            Space::Sphere => &self.sphere,
        }
    }

    pub fn active(&self) -> &SpacePresentation {
        self.presentation(self.space)
    }

    fn space_of(&self, x: &Element) -> Space {
        match x.context().label.as_str() {
            "omega" => Space::BasedLoopSphere,
            "sphere" => Space::Sphere,
            _ => Space::LoopSphere,
        }
    }

    fn quotient(&self, space: Space) -> Result<&QuotientAlgebra> {
        let (l, b) = self
            .quotients
            .as_ref()
            .ok_or_else(|| eval_err("quotient operations need a group (--group)"))?;
        match space {
            Space::LoopSphere => Ok(l),
            Space::BasedLoopSphere => Ok(b),
            Space::Sphere => Err(eval_err("the sphere has no orbit quotient")),
        }
    }

    fn quotient_of(&self, a: &QuotientElement) -> Result<&QuotientAlgebra> {
        self.quotient(self.space_of(a.representative()))
    }

    fn quotient_space(&self) -> Space {
        match self.space {
            Space::Sphere => Space::LoopSphere,
            s => s,
        }
    }

    fn lookup(&self, name: &str) -> Result<Value> {
        let order = [self.space, Space::LoopSphere, Space::BasedLoopSphere, Space::Sphere];
        for s in order {
            if let Ok(x) = self.presentation(s).get(name) {
                return Ok(Value::Element(x));
            }
        }
        match name {
            "mu" | "eta" => {
                let (wanted, generator) = if self.n % 2 == 1 { ("mu", "U") } else { ("eta", "Theta") };
                if name != wanted {
                    return Err(eval_err(format!(
                        "`{name}` is not defined for n = {} (use `{wanted}`)",
                        self.n
                    )));
                }
                let qa = self.quotient(Space::LoopSphere)?;
                let x = self.loop_space.get(generator)?.pow(2);
                Ok(Value::Quotient(qa.q_star(&x)?))
            }
            "e" => Ok(Value::Quotient(self.quotient(self.quotient_space())?.unit()?)),
            _ => Err(eval_err(format!(
                "unknown name `{name}` for n = {} (classes of the {} space: {})",
                self.n,
                self.space,
                self.active().names().collect::<Vec<_>>().join(", ")
            ))),
        }
    }

    fn literal(&self, num: BigInt, den: BigInt) -> Result<Value> {
        let c = Scalar::from_big_ratio(num, den)?;
        if self.ring == Ring::Z && !c.is_integer() {
            return Err(eval_err(format!("fraction {c} is not available over Z")));
        }
        Ok(Value::Scalar(c))
    }

    /// A scalar used where a class is needed becomes that multiple of the unit.
    fn as_element(&self, v: Value, space: Space) -> Result<Element> {
        match v {
            Value::Element(x) => Ok(x),
            Value::Scalar(c) => self.presentation(space).unit().scale(&c),
            Value::Quotient(a) => Err(eval_err(format!("expected a class of {space}, found the quotient class {a}"))),
        }
    }

    fn as_quotient(&self, v: Value, space: Space) -> Result<QuotientElement> {
        let qa = self.quotient(space)?;
        match v {
            Value::Quotient(a) => {
                qa.check(&a)?;
                Ok(a)
            }
            Value::Scalar(c) => qa.unit()?.scale(&c),
            Value::Element(x) => Err(eval_err(format!("expected a quotient class, found {x} (apply q first)"))),
        }
    }

    fn add(&self, a: Value, b: Value) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(p), Value::Scalar(q)) => Value::Scalar(&p + &q),
            (Value::Element(x), other) | (other, Value::Element(x)) => {
                let space = self.space_of(&x);
                Value::Element(x.add(&self.as_element(other, space)?)?)
            }
            (Value::Quotient(x), other) | (other, Value::Quotient(x)) => {
                let space = self.space_of(x.representative());
                Value::Quotient(x.add(&self.as_quotient(other, space)?)?)
            }
        })
    }

    fn scale(&self, c: &Scalar, v: Value) -> Result<Value> {
        Ok(match v {
            Value::Scalar(p) => Value::Scalar(c * &p),
            Value::Element(x) => Value::Element(x.scale(c)?),
            Value::Quotient(a) => Value::Quotient(a.scale(c)?),
        })
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(c), v) | (v, Value::Scalar(c)) => self.scale(&c, v),
            (Value::Element(x), Value::Element(y)) => Ok(Value::Element(x.mul(&y)?)),
            (Value::Quotient(x), Value::Quotient(y)) => {
                Ok(Value::Quotient(self.quotient_of(&x)?.transfer_product(&x, &y)?))
            }
            (x, y) => Err(eval_err(format!(
                "cannot multiply {} by {}",
                self.render(&x),
                self.render(&y)
            ))),
        }
    }

    fn pow(&self, v: Value, k: u32) -> Result<Value> {
        Ok(match v {
            Value::Scalar(c) => Value::Scalar(c.pow(k)),
            Value::Element(x) => Value::Element(x.pow(k)),
            Value::Quotient(a) => Value::Quotient(self.quotient_of(&a)?.power(&a, k)?),
        })
    }

    fn call(&self, name: &str, mut args: Vec<Value>) -> Result<Value> {
        let arity = match name {
            "P" | "POmega" | "Avartheta" | "Atheta" => 2,
            "q" | "tr" | "theta" | "jshriek" | "jstar" | "ev" => 1,
            _ => return Err(eval_err(format!("unknown function `{name}`"))),
        };
        if args.len() != arity {
            return Err(eval_err(format!(
                "`{name}` takes {arity} argument(s), got {}",
                args.len()
            )));
        }
        let second = if arity == 2 { args.pop() } else { None };
        let first = args.pop().expect("arity checked");
        let n = self.n;
        match name {
            "q" => {
                let x = match first {
                    Value::Quotient(a) => return Err(eval_err(format!("q applied to the quotient class {a}"))),
                    v => self.as_element(v, self.quotient_space())?,
                };
                Ok(Value::Quotient(self.quotient(self.space_of(&x))?.q_star(&x)?))
            }
            "tr" => match first {
                Value::Quotient(a) => Ok(Value::Element(self.quotient_of(&a)?.transfer(&a)?)),
                v => Err(eval_err(format!("tr expects a quotient class, found {}", self.render(&v)))),
            },
            "theta" => match first {
                Value::Quotient(a) => {
                    let qa = self.quotient_of(&a)?;
                    let flipped = theta_star(&qa.base)?.apply(a.representative())?;
                    Ok(Value::Quotient(qa.from_invariant(&flipped)?))
                }
                v => {
                    let x = self.as_element(v, self.space)?;
                    let pres = self.presentation(self.space_of(&x));
                    Ok(Value::Element(theta_star(pres)?.apply(&x)?))
                }
            },
            "jshriek" => match first {
                Value::Quotient(a) => {
                    let maps = QuotientMaps::new(a.group(), n)?;
                    Ok(Value::Quotient(maps.j_shriek(&a)?))
                }
                v => {
                    let x = self.as_element(v, Space::LoopSphere)?;
                    Ok(Value::Element(j_shriek(n, self.ring)?.apply(&x)?))
                }
            },
            "jstar" => {
                let x = self.as_element(first, Space::BasedLoopSphere)?;
                Ok(Value::Element(j_star(n, self.ring)?.apply(&x)?))
            }
            "ev" => match first {
                Value::Quotient(a) => {
                    let maps = QuotientMaps::new(a.group(), n)?;
                    Ok(Value::Element(maps.ev(&a)?))
                }
                v => {
                    let x = self.as_element(v, Space::LoopSphere)?;
                    Ok(Value::Element(ev_star(n, self.ring)?.apply(&x)?))
                }
            },
            _ => {
                let second = second.expect("arity checked");
                let space = if name == "POmega" {
                    Space::BasedLoopSphere
                } else {
                    Space::LoopSphere
                };
                let qa = self.quotient(space)?;
                let a = self.as_quotient(first, space)?;
                let b = self.as_quotient(second, space)?;
                let variant = match name {
                    "Avartheta" => AVariant::Vartheta,
                    "Atheta" => AVariant::Theta,
                    _ => return Ok(Value::Quotient(qa.transfer_product(&a, &b)?)),
                };
                // the sign depends on the degree of b, so split it first
                let mut acc = qa.zero();
                for (_, part) in b.homogeneous_parts() {
                    acc = acc.add(&geometric_product_a(variant, qa, &a, &part)?)?;
                }
                Ok(Value::Quotient(acc))
            }
        }
    }

    pub fn evaluate(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Int(k) => self.literal(BigInt::from(k.clone()), BigInt::from(1)),
            Expr::Frac(p, q) => self.literal(BigInt::from(p.clone()), BigInt::from(q.clone())),
            Expr::Name(s) => self.lookup(s),
            Expr::Neg(x) => self.scale(&-Scalar::one(), self.evaluate(x)?),
            Expr::Add(a, b) => self.add(self.evaluate(a)?, self.evaluate(b)?),
            Expr::Sub(a, b) => {
                let b = self.scale(&-Scalar::one(), self.evaluate(b)?)?;
                self.add(self.evaluate(a)?, b)
            }
            Expr::Mul(a, b) => self.mul(self.evaluate(a)?, self.evaluate(b)?),
            Expr::Pow(a, k) => self.pow(self.evaluate(a)?, *k),
            Expr::Call(name, args) => {
                let vals = args.iter().map(|a| self.evaluate(a)).collect::<Result<Vec<_>>>()?;
                self.call(name, vals)
            }
        }
    }

    /// Evaluate and coerce a bare scalar to a multiple of the active unit.
    pub fn evaluate_top(&self, e: &Expr) -> Result<Value> {
        match self.evaluate(e)? {
            Value::Scalar(c) => Ok(Value::Element(self.active().unit().scale(&c)?)),
            v => Ok(v),
        }
    }

    /// Text that evaluates back to `v` in this context.
    ///
    /// Zero prints as `0` in the active space and as `0*<unit>` elsewhere,
    /// so the space of a vanishing result is not lost.
    pub fn render(&self, v: &Value) -> String {
        match v {
            Value::Scalar(c) => c.to_string(),
            Value::Element(x) if x.is_zero() => {
                if x.check_context(&self.active().ctx).is_ok() {
                    "0".to_string()
                } else {
                    format!("0*{}", x.context().unit_name)
                }
            }
            Value::Element(x) => x.to_string(),
            Value::Quotient(a) if a.is_zero() => {
                format!("0*q({})", a.representative().context().unit_name)
            }
            Value::Quotient(a) => a.to_string(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(c) => write!(f, "{c}"),
            Value::Element(x) => write!(f, "{x}"),
            Value::Quotient(a) => write!(f, "{a}"),
        }
    }
}

/// Parse, evaluate and print one expression.
pub fn eval_str(input: &str, ctx: &EvalContext) -> Result<String> {
    let e = super::expr::parse(input)?;
    Ok(ctx.render(&ctx.evaluate_top(&e)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(space: Space, n: u32, ring: Ring, group: Option<&str>) -> EvalContext {
        EvalContext::new(space, n, ring, group.map(|g| g.parse().unwrap())).unwrap()
    }

    #[test]
    fn loop_products() {
        let c = ctx(Space::LoopSphere, 3, Ring::Z, None);
        assert_eq!(eval_str("U*U", &c).unwrap(), "U^2");
        assert_eq!(eval_str("Theta - U^2", &c).unwrap(), "0");
        assert_eq!(eval_str("A*U^2 + 3*E", &c).unwrap(), "3*E + A*U^2");
        assert_eq!(eval_str("2", &c).unwrap(), "2*E");
        assert!(matches!(eval_str("1/2*U", &c), Err(Error::Evaluation(_))));
        let c = ctx(Space::LoopSphere, 4, Ring::Q, None);
        assert_eq!(eval_str("A*Theta", &c).unwrap(), "0");
        assert!(matches!(eval_str("U", &c), Err(Error::Evaluation(_))));
    }

    #[test]
    fn quotient_products() {
        let c = ctx(Space::LoopSphere, 3, Ring::Q, Some("D1"));
        assert_eq!(eval_str("P(q(U^2),q(U^2))", &c).unwrap(), "4*q(U^4)");
        assert_eq!(eval_str("mu*mu", &c).unwrap(), "4*q(U^4)");
        assert_eq!(eval_str("e", &c).unwrap(), "1/4*q(E)");
        assert_eq!(eval_str("q(U)", &c).unwrap(), "0*q(E)");
        assert_eq!(eval_str("tr(mu)", &c).unwrap(), "2*U^2");
        assert_eq!(eval_str("Avartheta(mu, mu)", &c).unwrap(), "0*q(E)");
        assert!(matches!(eval_str("eta", &c), Err(Error::Evaluation(_))));
        let c = ctx(Space::LoopSphere, 3, Ring::Q, None);
        assert!(matches!(eval_str("q(U^2)", &c), Err(Error::Evaluation(_))));
    }

    #[test]
    fn maps_between_spaces() {
        let c = ctx(Space::LoopSphere, 4, Ring::Z, None);
        assert_eq!(eval_str("jshriek(Theta^2 + E)", &c).unwrap(), "x^0 + x^4");
        assert_eq!(eval_str("jshriek(A)", &c).unwrap(), "0*x^0");
        assert_eq!(eval_str("ev(A + 2*E)", &c).unwrap(), "pt + 2*fundamental");
        assert_eq!(eval_str("jstar(x^2)", &c).unwrap(), "A*Theta");
        assert_eq!(eval_str("theta(sigma1 + A)", &c).unwrap(), "A - sigma1");
        assert_eq!(eval_str("0*x^0", &c).unwrap(), "0*x^0");
    }
}
