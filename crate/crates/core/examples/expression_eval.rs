//! Parsing and evaluating expressions, as the `eval` subcommand does.

use sphere_loops::cli::{eval_str, parse, EvalContext};
use sphere_loops::{Ring, Space, SubgroupSpec};

fn main() -> sphere_loops::Result<()> {
    let sessions = [
        (EvalContext::new(Space::LoopSphere, 3, Ring::Z, None)?, vec!["U*U", "A*U^2 + 3*E", "theta(U + A)", "jshriek(U^3)", "ev(A - 2)"]),
        (EvalContext::new(Space::LoopSphere, 4, Ring::Q, None)?, vec!["A*Theta", "(sigma1 + Theta)^2", "jstar(x^3)"]),
        (
            EvalContext::new(Space::LoopSphere, 3, Ring::Q, Some(SubgroupSpec::dihedral(1)?))?,
            vec!["P(q(U^2), q(U^2))", "mu^3", "e", "tr(mu) - 2*U^2", "Avartheta(mu, mu)", "jshriek(mu)"],
        ),
    ];
    for (ctx, exprs) in &sessions {
        let group = ctx.group.map_or("none".to_string(), |g| g.label());
        println!("space {}, n = {}, ring {}, group {group}", ctx.space, ctx.n, ctx.ring);
        for e in exprs {
            println!("  {e:<24} => {}", eval_str(e, ctx)?);
        }
    }
    match parse("U^^2") {
        Err(err) => println!("U^^2 => {err}"),
        Ok(_) => unreachable!("malformed input"),
    }
    Ok(())
}
