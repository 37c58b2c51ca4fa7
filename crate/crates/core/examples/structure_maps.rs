//! Orientation reversal, the fibre maps and evaluation at the base point.

use sphere_loops::maps::{ev_star, j_shriek, j_star, theta_star, verify_gysin_relations};
use sphere_loops::{make_space, Ring, Space};

fn main() -> sphere_loops::Result<()> {
    for n in [3, 4] {
        let ring = Ring::Z;
        let lp = make_space(Space::LoopSphere, n, ring)?;
        let om = make_space(Space::BasedLoopSphere, n, ring)?;
        let theta = theta_star(&lp)?;
        let theta_om = theta_star(&om)?;
        println!("n = {n}");
        for name in lp.names() {
            let x = lp.get(name)?;
            println!("  theta({name}) = {}", theta.apply(&x)?);
        }
        let x = om.get("x")?;
        let signs: Vec<String> = (0..8)
            .map(|k| theta_om.apply(&x.pow(k)).map(|y| y.to_string()))
            .collect::<sphere_loops::Result<_>>()?;
        println!("  theta(x^k), k < 8: {}", signs.join(", "));

        let (shriek, star, ev) = (j_shriek(n, ring)?, j_star(n, ring)?, ev_star(n, ring)?);
        let top = if n % 2 == 1 { "U" } else { "Theta" };
        let g = lp.get(top)?;
        println!("  jshriek({top}^2 + E) = {}", shriek.apply(&g.pow(2).add(&lp.unit())?)?);
        for k in 0..4 {
            println!("  jstar(x^{k}) = {}", star.apply(&x.pow(k))?);
        }
        println!("  ev(A + E) = {}", ev.apply(&lp.get("A")?.add(&lp.unit())?)?);
        print!("{}", verify_gysin_relations(n, ring, 30)?);
    }
    Ok(())
}
