use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sphere_loops::cli::{emit_betti, eval_str, run_verify, EvalContext, Format, TableRequest, VerifyOptions};
use sphere_loops::{Ring, Space, SubgroupSpec};

/// Exact loop homology of spheres and of their orbit spaces.
#[derive(Parser)]
#[command(name = "sphere-loops", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its normal form.
    Eval {
        expression: String,
        #[command(flatten)]
        target: Target,
    },
    /// Print a homology table.
    Betti {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 20, allow_negative_numbers = true)]
        max_degree: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
        format: OutputFormat,
    },
    /// Run a verification suite (or `all`); exits nonzero on any failed identity.
    Verify {
        suite: String,
        /// Sphere dimension; 3, 4, 5 and 6 when omitted.
        #[arg(long)]
        n: Option<u32>,
        /// Coefficient ring; both when omitted.
        #[arg(long, value_parser = parse_ring)]
        ring: Option<Ring>,
        #[arg(long, value_parser = parse_group)]
        group: Option<SubgroupSpec>,
        #[arg(long)]
        degree_bound: Option<i64>,
        #[arg(long)]
        power_bound: Option<u32>,
    },
}

#[derive(Args)]
struct Target {
    /// loop, omega or sphere.
    #[arg(long, default_value = "loop", value_parser = parse_space)]
    space: Space,
    #[arg(long, default_value_t = 3)]
    n: u32,
    /// Q or Z.
    #[arg(long, default_value = "Q", value_parser = parse_ring)]
    ring: Ring,
    /// Cm, Dm or theta.
    #[arg(long, value_parser = parse_group)]
    group: Option<SubgroupSpec>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Ascii,
    Json,
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse().map_err(|e: sphere_loops::Error| e.to_string())
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse().map_err(|e: sphere_loops::Error| e.to_string())
}

fn parse_group(s: &str) -> Result<SubgroupSpec, String> {
    s.parse().map_err(|e: sphere_loops::Error| e.to_string())
}

/// Write to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn run(cli: Cli) -> sphere_loops::Result<ExitCode> {
    match cli.command {
        Command::Eval { expression, target } => {
            let ctx = EvalContext::new(target.space, target.n, target.ring, target.group)?;
            emit(&eval_str(&expression, &ctx)?);
        }
        Command::Betti {
            target,
            max_degree,
            format,
        } => {
            let req = TableRequest {
                space: target.space,
                n: target.n,
                ring: target.ring,
                group: target.group,
                max_degree,
            };
            let format = match format {
                OutputFormat::Ascii => Format::Ascii,
                OutputFormat::Json => Format::Json,
            };
            emit(&emit_betti(&req, format)?);
        }
        Command::Verify {
            suite,
            n,
            ring,
            group,
            degree_bound,
            power_bound,
        } => {
            let opts = VerifyOptions {
                n,
                ring,
                group,
                degree_bound,
                power_bound,
            };
            let outcome = run_verify(&suite, &opts)?;
            emit(&outcome.to_string());
            if !outcome.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
