//! Homology of the free loop space, based loop space and sphere, degree by degree.
//!
//! `cargo run --example betti_tables -- 4 Z 20`

use sphere_loops::cli::{build_table, TableRequest};
use sphere_loops::{Ring, Space};

fn main() -> sphere_loops::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(4, |s| s.parse().expect("n"));
    let ring: Ring = args.next().map_or(Ok(Ring::Z), |s| s.parse())?;
    let max_degree: i64 = args.next().map_or(20, |s| s.parse().expect("max degree"));

    for space in [Space::LoopSphere, Space::BasedLoopSphere, Space::Sphere] {
        let table = build_table(&TableRequest {
            space,
            n,
            ring,
            group: None,
            max_degree,
        })?;
        println!("{}", table.to_ascii());
    }
    Ok(())
}
