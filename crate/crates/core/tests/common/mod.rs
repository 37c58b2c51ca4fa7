//! Expression generators shared by the property and acceptance tests.
#![allow(dead_code)]

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::sample::select;
use sphere_loops::cli::{EvalContext, Expr};
use sphere_loops::{Ring, Space, SubgroupSpec};

fn int(k: u32) -> Expr {
    Expr::Int(BigUint::from(k))
}

fn call(name: &str, args: Vec<Expr>) -> Expr {
    Expr::Call(name.to_string(), args)
}

fn bin(f: fn(Box<Expr>, Box<Expr>) -> Expr) -> impl Fn((Expr, Expr)) -> Expr + Clone {
    move |(a, b)| f(Box::new(a), Box::new(b))
}

/// Structure maps that stay inside the algebra being generated.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Maps {
    /// `theta` and `jstar(jshriek(.))`.
    Loop,
    /// `theta`.
    Based,
    None,
}

/// Well-typed expressions over one base algebra.
pub fn base_expr(names: Vec<&'static str>, fractions: bool, maps: Maps) -> BoxedStrategy<Expr> {
    let names = select(names).prop_map(|s| Expr::Name(s.to_string()));
    let ints = (0u32..5).prop_map(int);
    let leaf = if fractions {
        prop_oneof![
            3 => names,
            1 => ints,
            1 => (1u32..4, 1u32..4).prop_map(|(p, q)| Expr::Frac(p.into(), q.into())),
        ]
        .boxed()
    } else {
        prop_oneof![3 => names, 1 => ints].boxed()
    };
    leaf.prop_recursive(3, 16, 2, move |inner| {
        let mut ops = vec![
            (inner.clone(), inner.clone()).prop_map(bin(Expr::Add)).boxed(),
            (inner.clone(), inner.clone()).prop_map(bin(Expr::Sub)).boxed(),
            (inner.clone(), inner.clone()).prop_map(bin(Expr::Mul)).boxed(),
            (inner.clone(), 0u32..3).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)).boxed(),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))).boxed(),
        ];
        if maps != Maps::None {
            ops.push(inner.clone().prop_map(|e| call("theta", vec![e])).boxed());
        }
        if maps == Maps::Loop {
            ops.push(
                inner
                    .clone()
                    .prop_map(|e| call("jstar", vec![call("jshriek", vec![e])]))
                    .boxed(),
            );
        }
        proptest::strategy::Union::new(ops)
    })
    .boxed()
}

/// Well-typed expressions over an orbit-space algebra.
pub fn quotient_expr(
    base: BoxedStrategy<Expr>,
    named: Vec<&'static str>,
    product: &'static str,
    a_product: Option<&'static str>,
) -> BoxedStrategy<Expr> {
    let leaf = prop_oneof![
        3 => base.prop_map(|e| call("q", vec![e])),
        2 => select(named).prop_map(|s| Expr::Name(s.to_string())),
        1 => (0u32..4).prop_map(int),
    ];
    leaf.prop_recursive(3, 12, 2, move |inner| {
        let mut ops = vec![
            (inner.clone(), inner.clone()).prop_map(bin(Expr::Add)).boxed(),
            (inner.clone(), inner.clone()).prop_map(bin(Expr::Sub)).boxed(),
            (inner.clone(), inner.clone()).prop_map(bin(Expr::Mul)).boxed(),
            (inner.clone(), inner.clone())
                .prop_map(move |(a, b)| call(product, vec![a, b]))
                .boxed(),
            (inner.clone(), 0u32..3).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)).boxed(),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))).boxed(),
        ];
        if let Some(a) = a_product {
            ops.push(
                (inner.clone(), inner.clone())
                    .prop_map(move |(x, y)| call(a, vec![x, y]))
                    .boxed(),
            );
        }
        proptest::strategy::Union::new(ops)
    })
    .boxed()
}

pub struct Scenario {
    pub ctx: EvalContext,
    pub exprs: BoxedStrategy<Expr>,
}

/// Contexts covering every space, both rings, both parities and several groups.
pub fn scenarios() -> Vec<Scenario> {
    let ctx = |space, n, ring, group: Option<&str>| {
        EvalContext::new(space, n, ring, group.map(|g| g.parse::<SubgroupSpec>().unwrap())).unwrap()
    };
    let odd_loop = vec!["A", "U", "E", "sigma1", "Theta"];
    let even_loop = vec!["A", "sigma1", "Theta", "E"];
    vec![
        Scenario {
            ctx: ctx(Space::LoopSphere, 3, Ring::Z, None),
            exprs: base_expr(odd_loop.clone(), false, Maps::Loop),
        },
        Scenario {
            ctx: ctx(Space::LoopSphere, 4, Ring::Z, None),
            exprs: base_expr(even_loop.clone(), false, Maps::Loop),
        },
        Scenario {
            ctx: ctx(Space::LoopSphere, 6, Ring::Q, None),
            exprs: base_expr(even_loop.clone(), true, Maps::Loop),
        },
        Scenario {
            ctx: ctx(Space::BasedLoopSphere, 4, Ring::Z, None),
            exprs: base_expr(vec!["x"], false, Maps::Based),
        },
        Scenario {
            ctx: ctx(Space::Sphere, 5, Ring::Q, None),
            exprs: base_expr(vec!["pt", "fundamental"], true, Maps::None),
        },
        Scenario {
            ctx: ctx(Space::LoopSphere, 3, Ring::Q, Some("D1")),
            exprs: quotient_expr(base_expr(odd_loop.clone(), true, Maps::Loop), vec!["mu", "e"], "P", Some("Avartheta")),
        },
        Scenario {
            ctx: ctx(Space::LoopSphere, 4, Ring::Q, Some("D1")),
            exprs: quotient_expr(base_expr(even_loop.clone(), true, Maps::Loop), vec!["eta", "e"], "P", Some("Avartheta")),
        },
        Scenario {
            ctx: ctx(Space::LoopSphere, 5, Ring::Q, Some("theta")),
            exprs: quotient_expr(base_expr(odd_loop, true, Maps::Loop), vec!["mu", "e"], "P", Some("Atheta")),
        },
        Scenario {
            ctx: ctx(Space::LoopSphere, 6, Ring::Q, Some("C3")),
            exprs: quotient_expr(base_expr(even_loop, true, Maps::Loop), vec!["eta", "e"], "P", None),
        },
        Scenario {
            ctx: ctx(Space::BasedLoopSphere, 4, Ring::Q, Some("D2")),
            exprs: quotient_expr(base_expr(vec!["x"], true, Maps::Based), vec!["e"], "POmega", None),
        },
    ]
}

/// Parse the printed expression, evaluate, print the value, and evaluate the
/// printed value again; both evaluations must agree.
pub fn round_trip(ctx: &EvalContext, e: &Expr) -> Result<(), String> {
    use sphere_loops::cli::parse;
    let text = e.to_string();
    let reparsed = parse(&text).map_err(|err| format!("`{text}` does not parse: {err}"))?;
    if &reparsed != e {
        return Err(format!("`{text}` parses to a different tree"));
    }
    let value = ctx
        .evaluate_top(&reparsed)
        .map_err(|err| format!("`{text}` does not evaluate: {err}"))?;
    let printed = ctx.render(&value);
    let again = parse(&printed)
        .and_then(|p| ctx.evaluate_top(&p))
        .map_err(|err| format!("printed value `{printed}` of `{text}` fails: {err}"))?;
    if again != value {
        return Err(format!(
            "`{text}` = `{printed}` but the printed form evaluates to `{}`",
            ctx.render(&again)
        ));
    }
    if ctx.render(&again) != printed {
        return Err(format!("printing is not stable for `{printed}`"));
    }
    Ok(())
}
