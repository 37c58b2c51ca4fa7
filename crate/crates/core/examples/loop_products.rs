//! The loop product in both parities: signs, nilpotents and 2-torsion.

use sphere_loops::{make_space, Ring, Space};

fn main() -> sphere_loops::Result<()> {
    let odd = make_space(Space::LoopSphere, 3, Ring::Z)?;
    let (a, u) = (odd.get("A")?, odd.get("U")?);
    println!("n = 3 over Z");
    println!("  U*U       = {}", u.mul(&u)?);
    println!("  A*A       = {}", a.mul(&a)?);
    println!("  A*U^3     = {}  (degree {:?})", a.mul(&u.pow(3))?, a.mul(&u.pow(3))?.degrees());
    println!("  (A+U)^2   = {}", a.add(&u)?.pow(2));

    let even = make_space(Space::LoopSphere, 4, Ring::Z)?;
    let (a, s, t) = (even.get("A")?, even.get("sigma1")?, even.get("Theta")?);
    println!("n = 4 over Z");
    println!("  sigma1*sigma1 = {}", s.mul(&s)?);
    println!("  sigma1*A      = {}", s.mul(&a)?);
    for k in 1..=3 {
        let x = a.mul(&t.pow(k))?;
        println!("  A*Theta^{k}    = {x},  2*(A*Theta^{k}) = {}", x.add(&x)?);
    }

    let rational = make_space(Space::LoopSphere, 4, Ring::Q)?;
    let x = rational.get("A")?.mul(&rational.get("Theta")?)?;
    println!("n = 4 over Q: A*Theta = {x}");
    Ok(())
}
