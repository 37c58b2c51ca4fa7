//! Acceptance criteria, one PASS/FAIL line each. Exact arithmetic, zero tolerance.

mod common;

use std::process::Command;
use std::time::Instant;

use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use sphere_loops::cli::{build_table, TableRequest};
use sphere_loops::equivariant::{
    quotient_betti, theta_vs_vartheta_iso, verify_a_products, verify_main_theorem,
    verify_quotient_homs, verify_quotient_laws, verify_transfer_axioms, QuotientAlgebra,
};
use sphere_loops::maps::{theta_star, verify_gysin_relations, verify_structure_maps};
use sphere_loops::sphere::verify_presentation;
use sphere_loops::{betti, make_space, Report, Ring, Scalar, Space, SubgroupSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn require(report: Report) -> Result<(), String> {
    if report.passed() {
        Ok(())
    } else {
        Err(format!("{report}"))
    }
}

fn lift<T>(r: sphere_loops::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `(rank, torsion)` of `H_d(LS^n)` from the closed-form families, with `l_r = (2r-1)(n-1)`.
fn loop_oracle(n: i64, ring: Ring, d: i64) -> (usize, Vec<u32>) {
    if d == 0 || d == n {
        return (1, vec![]);
    }
    let in_family = |offset: i64| (1..=200).any(|r| offset + (2 * r - 1) * (n - 1) == d);
    if n % 2 == 1 {
        let hits = [0, n - 1, n, 2 * n - 1].iter().filter(|&&o| in_family(o)).count();
        (hits, vec![])
    } else {
        let rank = [0, 2 * n - 1].iter().filter(|&&o| in_family(o)).count();
        let torsion = if ring == Ring::Z && in_family(n - 1) { vec![2] } else { vec![] };
        (rank, torsion)
    }
}

/// Rank of `H_d(LS^n / vartheta; Q)` from the closed-form families.
fn quotient_oracle(n: i64, d: i64) -> usize {
    if d == 0 || d == n {
        return 1;
    }
    let hit = |offset: i64, r_even: bool| {
        (1..=200).any(|r: i64| (!r_even || r % 2 == 0) && offset + (2 * r - 1) * (n - 1) == d)
    };
    let families = if n % 2 == 1 {
        [hit(n - 1, false), hit(2 * n - 1, false)]
    } else {
        [hit(0, true), hit(2 * n - 1, true)]
    };
    families.iter().filter(|&&h| h).count()
}

fn all_groups() -> Vec<SubgroupSpec> {
    let mut g: Vec<SubgroupSpec> = (1..=5).map(|m| SubgroupSpec::dihedral(m).unwrap()).collect();
    g.push(SubgroupSpec::theta());
    g.extend((2..=7).map(|m| SubgroupSpec::cyclic(m).unwrap()));
    g
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut degrees = 0;
    for n in 3..=7u32 {
        for ring in [Ring::Q, Ring::Z] {
            let table = lift(betti(Space::LoopSphere, n, ring, 200))?;
            for d in 0..=200 {
                let expected = loop_oracle(n as i64, ring, d);
                let got = (table.rank(d), table.torsion(d).to_vec());
                if got != expected {
                    return Err(format!("n={n} {ring} degree {d}: {got:?} != {expected:?}"));
                }
                degrees += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 5.0 {
        return Err(format!("took {elapsed:.2}s, budget 5s"));
    }
    Ok(format!("{degrees} degrees in {elapsed:.2}s"))
}

fn criterion_2() -> Outcome {
    for n in [4u32, 6] {
        for ring in [Ring::Z, Ring::Q] {
            let pres = lift(make_space(Space::LoopSphere, n, ring))?;
            let a = lift(pres.get("A"))?;
            let theta = lift(pres.get("Theta"))?;
            for k in 1..=20 {
                let x = lift(a.mul(&theta.pow(k)))?;
                let twice = lift(x.scale(&Scalar::from_int(2)))?;
                let ok = match ring {
                    Ring::Z => twice.is_zero() && !x.is_zero(),
                    Ring::Q => x.is_zero(),
                };
                if !ok {
                    return Err(format!("n={n} {ring} k={k}: A*Theta^k = {x}, 2x = {twice}"));
                }
            }
        }
        require(lift(verify_presentation(n, Ring::Z, 60, 20))?)?;
    }
    Ok("A*Theta^k is 2-torsion and nonzero over Z, zero over Q, k <= 20".into())
}

fn criterion_3() -> Outcome {
    for n in 3..=6u32 {
        let plain = lift(betti(Space::LoopSphere, n, Ring::Q, 200))?;
        for g in all_groups() {
            let table = lift(quotient_betti(&g, n, 200))?;
            for d in 0..=200 {
                let expected = if g.has_reflections() {
                    quotient_oracle(n as i64, d)
                } else {
                    plain.rank(d)
                };
                if table.rank(d) != expected {
                    return Err(format!("n={n} G={g} degree {d}: {} != {expected}", table.rank(d)));
                }
            }
        }
    }
    Ok("D1..D5, theta and C2..C7 for n = 3..6, degrees <= 200".into())
}

fn criterion_4() -> Outcome {
    for n in 3..=6u32 {
        for g in all_groups() {
            require(lift(verify_transfer_axioms(&g, n, 100))?)?;
        }
    }
    // independent closed form: P(q(U^2a), q(U^2b)) = |G|^2 q(U^(2a+2b)) for D_m, n odd
    for m in 1..=5u32 {
        let g = SubgroupSpec::dihedral(m).unwrap();
        let qa = lift(QuotientAlgebra::loop_space(g, 3))?;
        let u = lift(qa.base.get("U"))?;
        let order2 = Scalar::from_int(4 * (m * m) as i64);
        for a in 0..4 {
            for b in 0..4 {
                let p = lift(qa.transfer_product(
                    &lift(qa.q_star(&u.pow(2 * a)))?,
                    &lift(qa.q_star(&u.pow(2 * b)))?,
                ))?;
                let expected = lift(lift(qa.q_star(&u.pow(2 * a + 2 * b)))?.scale(&order2))?;
                if p != expected {
                    return Err(format!("D{m}: P(q(U^{}), q(U^{})) = {p} != {expected}", 2 * a, 2 * b));
                }
            }
        }
    }
    Ok("12 groups x n = 3..6 to degree 100, plus closed-form products".into())
}

fn criterion_5() -> Outcome {
    for n in 3..=6u32 {
        for g in all_groups() {
            require(lift(verify_quotient_laws(&g, n, 60))?)?;
        }
    }
    Ok("12 groups x n = 3..6, total degree <= 60".into())
}

fn criterion_6() -> Outcome {
    for n in 3..=6u32 {
        require(lift(verify_main_theorem(n, 25, 100))?)?;
        // independent closed form: mu^k = 4^(k-1) q(U^2k), eta^k = 4^(k-1) q(Theta^2k)
        let qa = lift(QuotientAlgebra::loop_space(SubgroupSpec::dihedral(1).unwrap(), n))?;
        let (g, step) = if n % 2 == 1 { ("U", 2 * n - 2) } else { ("Theta", 4 * n - 4) };
        let base = lift(qa.base.get(g))?;
        let generator = lift(qa.q_star(&base.pow(2)))?;
        let mut power = lift(qa.unit())?;
        for k in 1..=25u32 {
            power = lift(qa.transfer_product(&power, &generator))?;
            let expected = lift(lift(qa.q_star(&base.pow(2 * k)))?.scale(&Scalar::from_int(4).pow(k - 1)))?;
            if power != expected {
                return Err(format!("n={n} k={k}: {power} != {expected}"));
            }
            let d = (step * k + n) as i64;
            if power.homogeneous_degree() != Some(d) || lift(qa.invariants_in_degree(d))?.len() != 1 {
                return Err(format!("n={n} k={k}: power does not span degree {d}"));
            }
        }
    }
    Ok("mu^k, eta^k for k <= 25; bijectivity for i <= 100".into())
}

/// Orientation reversal on `x^k` by the case formula: `(-1)^k` when n is odd
/// or `k(k-1) = 0 mod 4`, else `(-1)^(k+1)`.
fn case_formula(n: u32, k: u32) -> i64 {
    let base = if k.is_multiple_of(2) { 1 } else { -1 };
    if n % 2 == 1 || (k * k.saturating_sub(1)).is_multiple_of(4) {
        base
    } else {
        -base
    }
}

fn criterion_7() -> Outcome {
    for n in 3..=6u32 {
        for ring in [Ring::Q, Ring::Z] {
            require(lift(verify_structure_maps(n, ring, 60, 40))?)?;
            require(lift(verify_gysin_relations(n, ring, 60))?)?;
            let om = lift(make_space(Space::BasedLoopSphere, n, ring))?;
            let theta = lift(theta_star(&om))?;
            let x = lift(om.get("x"))?;
            for k in 0..=40 {
                let got = lift(theta.apply(&x.pow(k)))?;
                let expected = lift(x.pow(k).scale(&Scalar::from_int(case_formula(n, k))))?;
                if got != expected {
                    return Err(format!("n={n} {ring} k={k}: theta(x^k) = {got}"));
                }
            }
        }
    }
    Ok("n = 3..6, Q and Z".into())
}

fn criterion_8() -> Outcome {
    for n in [3u32, 4] {
        require(lift(verify_quotient_homs(n, 60))?)?;
    }
    Ok("G = D1, n = 3, 4".into())
}

fn criterion_9() -> Outcome {
    for n in [3u32, 4] {
        require(lift(theta_vs_vartheta_iso(n, 60))?)?;
    }
    for n in 3..=6u32 {
        require(lift(verify_a_products(n, 60))?)?;
    }
    Ok("comparison for n = 3, 4; A-products for n = 3..6".into())
}

fn criterion_10() -> Outcome {
    let scenarios = common::scenarios();
    let per = 1000 / scenarios.len() as u32;
    let mut total = 0;
    for s in &scenarios {
        let config = Config {
            cases: per,
            failure_persistence: None,
            ..Config::default()
        };
        let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
        runner
            .run(&s.exprs, |e| {
                common::round_trip(&s.ctx, &e).map_err(proptest::test_runner::TestCaseError::fail)
            })
            .map_err(|e| format!("round trip: {e}"))?;
        total += per;
    }

    let bin = env!("CARGO_BIN_EXE_sphere-loops");
    let json_args: [&[&str]; 2] = [
        &["betti", "--n", "4", "--ring", "Z", "--max-degree", "200", "--format", "json"],
        &["betti", "--n", "5", "--group", "D2", "--max-degree", "200", "--format", "json"],
    ];
    for args in json_args {
        let first = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        let second = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        if !first.status.success() || first.stdout != second.stdout || first.stdout.is_empty() {
            return Err(format!("json output of {args:?} is not byte-identical"));
        }
    }
    let req = TableRequest {
        space: Space::LoopSphere,
        n: 4,
        ring: Ring::Z,
        group: None,
        max_degree: 200,
    };
    let lib_json = lift(build_table(&req))?.to_json();
    let bin_json = Command::new(bin).args(json_args[0]).output().map_err(|e| e.to_string())?.stdout;
    if String::from_utf8_lossy(&bin_json).trim_end() != lib_json {
        return Err("binary and library json differ".into());
    }

    let start = Instant::now();
    let status = Command::new(bin)
        .args(["verify", "all"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    let elapsed = start.elapsed().as_secs_f64();
    if !status.success() {
        return Err(format!("`verify all` exited with {status}"));
    }
    if elapsed >= 60.0 {
        return Err(format!("`verify all` took {elapsed:.1}s"));
    }
    Ok(format!("{total} round trips; json stable; verify all in {elapsed:.1}s"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Betti tables of LS^n match the closed-form families", criterion_1),
        ("presentation fidelity of A*Theta^k", criterion_2),
        ("quotient tables", criterion_3),
        ("transfer axioms and the algebra isomorphism", criterion_4),
        ("transfer product algebra laws", criterion_5),
        ("nonnilpotent generator and bijectivity", criterion_6),
        ("structure-map identities", criterion_7),
        ("quotient homomorphisms", criterion_8),
        ("vartheta vs theta comparison and A-products", criterion_9),
        ("CLI round trip, stable JSON, verify all", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!(
                "[PASS] {:>2}. {name} ({detail}; {:.2}s)",
                i + 1,
                start.elapsed().as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
