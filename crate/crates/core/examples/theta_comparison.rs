//! Reversal versus reversal-with-half-turn: isomorphic transfer algebras, and
//! the sign relating the geometric orbit products to them.

use sphere_loops::equivariant::{geometric_product_a, theta_vs_vartheta_iso, verify_a_products, AVariant, QuotientAlgebra};
use sphere_loops::SubgroupSpec;

fn main() -> sphere_loops::Result<()> {
    for n in [3, 4] {
        print!("{}", theta_vs_vartheta_iso(n, 30)?);
        print!("{}", verify_a_products(n, 30)?);
    }
    // n odd and |b| even make the sign (-1)^(n(n-j)) negative
    let tq = QuotientAlgebra::loop_space(SubgroupSpec::theta(), 3)?;
    let (a, u) = (tq.base.get("A")?, tq.base.get("U")?);
    let mu = tq.q_star(&u.pow(2))?;
    let b = tq.q_star(&a.mul(&u.pow(2))?)?;
    println!("n = 3: A_theta(mu, q(A*U^2)) = {}", geometric_product_a(AVariant::Theta, &tq, &mu, &b)?);
    println!("n = 3: P_theta(mu, q(A*U^2)) = {}", tq.transfer_product(&mu, &b)?);
    Ok(())
}
