//! The orientation-reversal quotient is generated by one nonnilpotent class:
//! `mu = q(U^2)` for odd n, `eta = q(Theta^2)` for even n.

use sphere_loops::equivariant::{verify_main_theorem, QuotientAlgebra};
use sphere_loops::SubgroupSpec;

fn main() -> sphere_loops::Result<()> {
    for n in [3, 4] {
        let qa = QuotientAlgebra::loop_space(SubgroupSpec::dihedral(1)?, n)?;
        let (name, g) = if n % 2 == 1 { ("mu", "U") } else { ("eta", "Theta") };
        let generator = qa.q_star(&qa.base.get(g)?.pow(2))?;
        for k in 1..=4 {
            let p = qa.power(&generator, k)?;
            println!("n = {n}: {name}^{k} = {p}  (degree {:?})", p.degrees());
        }
        print!("{}", verify_main_theorem(n, 10, 40)?);
    }
    Ok(())
}
