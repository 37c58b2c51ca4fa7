//! Rational homology of orbit spaces as tables, in ASCII and JSON.
//!
//! `cargo run --example quotient_tables -- 4 D1 30`

use sphere_loops::cli::{build_table, TableRequest};
use sphere_loops::{Ring, Space, SubgroupSpec};

fn main() -> sphere_loops::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(4, |s| s.parse().expect("n"));
    let group: SubgroupSpec = args.next().map_or(Ok(SubgroupSpec::theta()), |s| s.parse())?;
    let max_degree: i64 = args.next().map_or(30, |s| s.parse().expect("max degree"));

    let req = TableRequest {
        space: Space::LoopSphere,
        n,
        ring: Ring::Q,
        group: Some(group),
        max_degree,
    };
    let table = build_table(&req)?;
    println!("{}", table.to_ascii());
    println!("{}", table.to_json());
    Ok(())
}
