//! Run identity suites from code; the `verify` subcommand is a thin wrapper.
//!
//! `cargo run --release --example verify_suites -- all`

use sphere_loops::cli::{run_verify, VerifyOptions, SUITES};
use sphere_loops::Ring;

fn main() -> sphere_loops::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "gysin".to_string());
    println!("available suites: all, {}", SUITES.join(", "));
    let opts = VerifyOptions {
        n: Some(4),
        ring: Some(Ring::Q),
        degree_bound: Some(40),
        ..Default::default()
    };
    let outcome = run_verify(&suite, &opts)?;
    print!("{outcome}");
    std::process::exit(outcome.exit_code());
}
