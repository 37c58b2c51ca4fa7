//! Orbit spaces of finite subgroups of O(2): quotient classes, transfer and
//! the transfer product.

use sphere_loops::equivariant::QuotientAlgebra;
use sphere_loops::SubgroupSpec;

fn main() -> sphere_loops::Result<()> {
    let n = 3;
    for group in [SubgroupSpec::dihedral(1)?, SubgroupSpec::dihedral(3)?, SubgroupSpec::cyclic(4)?] {
        let qa = QuotientAlgebra::loop_space(group, n)?;
        let u = qa.base.get("U")?;
        let a = qa.base.get("A")?;
        let mu = qa.q_star(&u.pow(2))?;
        println!("G = {group}, |G| = {}", group.order());
        println!("  q(U)         = {}", qa.q_star(&u)?);
        println!("  q(A*U^2)     = {}", qa.q_star(&a.mul(&u.pow(2))?)?);
        println!("  tr(q(U^2))   = {}", qa.transfer(&mu)?);
        println!("  P(mu, mu)    = {}", qa.transfer_product(&mu, &mu)?);
        println!("  unit e       = {}", qa.unit()?);
        println!("  P(e, mu)     = {}", qa.transfer_product(&qa.unit()?, &mu)?);
    }

    let based = QuotientAlgebra::based_loop_space(SubgroupSpec::dihedral(1)?, 4)?;
    let x = based.base.get("x")?;
    let invariant: Vec<String> = (0..12)
        .filter(|&k| based.is_invariant(&x.pow(k)).unwrap_or(false))
        .map(|k| format!("x^{k}"))
        .collect();
    println!("invariant based classes for n = 4 under D1: {}", invariant.join(", "));
    Ok(())
}
