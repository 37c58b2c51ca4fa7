//! The `verify` runner: named suites of exact identity checks.

use std::fmt;

use crate::algebra::{basis_in_degree, verify_product_laws};
use crate::equivariant::{
    quotient_betti, theta_vs_vartheta_iso, verify_a_products, verify_dihedral_independence,
    verify_main_theorem, verify_quotient_homs, verify_quotient_laws, verify_transfer_axioms,
    SubgroupSpec,
};
use crate::error::{domain, Result};
use crate::maps::{verify_gysin_relations, verify_structure_maps};
use crate::report::{Check, Report};
use crate::scalar::Ring;
use crate::sphere::{betti, make_space, verify_presentation, Space};

pub const SUITES: [&str; 9] = [
    "algebra",
    "presentation",
    "maps",
    "gysin",
    "quotient",
    "main-theorem",
    "iso",
    "a-product",
    "quotient-homs",
];

/// Suites whose statements are about rational quotient homology.
const RATIONAL_ONLY: [&str; 5] = ["quotient", "main-theorem", "iso", "a-product", "quotient-homs"];

pub const DEFAULT_DIMENSIONS: [u32; 4] = [3, 4, 5, 6];

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Sphere dimension; all of [`DEFAULT_DIMENSIONS`] when absent.
    pub n: Option<u32>,
    /// Coefficient ring; both when absent.
    pub ring: Option<Ring>,
    /// Restrict the quotient suite to one group.
    pub group: Option<SubgroupSpec>,
    /// Overrides each suite's own degree window.
    pub degree_bound: Option<i64>,
    /// Overrides each suite's own power bound.
    pub power_bound: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub reports: Vec<Report>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            write!(f, "{r}")?;
        }
        let failed = self.reports.iter().filter(|r| !r.passed()).count();
        writeln!(
            f,
            "{} of {} reports passed",
            self.reports.len() - failed,
            self.reports.len()
        )
    }
}

fn default_quotient_groups() -> Vec<SubgroupSpec> {
    let mut groups: Vec<SubgroupSpec> = (1..=5).map(|m| SubgroupSpec::dihedral(m).expect("m >= 1")).collect();
    groups.push(SubgroupSpec::theta());
    groups.extend((2..=7).map(|m| SubgroupSpec::cyclic(m).expect("m >= 1")));
    groups
}

/// Quotient ranks against the unquotiented table (rotations) or the
/// (+1)-eigenspace of orientation reversal (groups with reflections).
fn quotient_rank_check(group: &SubgroupSpec, n: u32, max_degree: i64) -> Result<Check> {
    let table = quotient_betti(group, n, max_degree)?;
    let pres = make_space(Space::LoopSphere, n, Ring::Q)?;
    let plain = betti(Space::LoopSphere, n, Ring::Q, max_degree)?;
    let mut check = Check::new(if group.has_reflections() {
        format!("dim H_i(L/{group}) = dim of the +1 eigenspace of theta_*, i <= {max_degree}")
    } else {
        format!("dim H_i(L/{group}) = dim H_i(L), i <= {max_degree}")
    });
    for d in 0..=max_degree {
        let expected = if group.has_reflections() {
            basis_in_degree(d, &pres.ctx)
                .iter()
                .filter(|b| pres.ctx.letter_theta_sign(&b.monomial) == 1)
                .count()
        } else {
            plain.rank(d)
        };
        let got = table.rank(d);
        check.expect(got == expected, || format!("degree {d}: {got} != {expected}"));
    }
    Ok(check)
}

fn run_suite(suite: &str, n: u32, ring: Ring, opts: &VerifyOptions) -> Result<Vec<Report>> {
    let d = |default: i64| opts.degree_bound.unwrap_or(default);
    let k = |default: u32| opts.power_bound.unwrap_or(default);
    Ok(match suite {
        "algebra" => [Space::LoopSphere, Space::BasedLoopSphere, Space::Sphere]
            .into_iter()
            .map(|s| Ok(verify_product_laws(&make_space(s, n, ring)?.ctx, d(60))))
            .collect::<Result<Vec<_>>>()?,
        "presentation" => vec![verify_presentation(n, ring, d(60), k(20))?],
        "maps" => vec![verify_structure_maps(n, ring, d(60), k(40))?],
        "gysin" => vec![verify_gysin_relations(n, ring, d(60))?],
        "quotient" => {
            let groups = match opts.group {
                Some(g) => vec![g],
                None => default_quotient_groups(),
            };
            let mut tables = Report::new(format!("quotient tables, n={n}"));
            let mut reports = Vec::new();
            for g in &groups {
                tables.push(quotient_rank_check(g, n, d(200))?);
            }
            reports.push(tables);
            let sample = match opts.group {
                Some(g) => vec![g],
                None => vec![
                    SubgroupSpec::dihedral(1)?,
                    SubgroupSpec::dihedral(3)?,
                    SubgroupSpec::theta(),
                    SubgroupSpec::cyclic(2)?,
                ],
            };
            for g in &sample {
                reports.push(verify_transfer_axioms(g, n, d(100))?);
                reports.push(verify_quotient_laws(g, n, d(60))?);
            }
            reports.push(verify_dihedral_independence(n, 5, d(60))?);
            reports
        }
        "main-theorem" => vec![verify_main_theorem(n, k(25), d(100))?],
        "iso" => vec![theta_vs_vartheta_iso(n, d(60))?],
        "a-product" => vec![verify_a_products(n, d(60))?],
        "quotient-homs" => vec![verify_quotient_homs(n, d(60))?],
        other => {
            return Err(domain(format!(
                "unknown suite `{other}` (expected all or one of {})",
                SUITES.join(", ")
            )))
        }
    })
}

/// Run one suite, or every suite for `"all"`, over the selected dimensions and rings.
///
/// Rational-only suites are skipped for an explicit `--ring Z` under `all`
/// and rejected for an explicit `--ring Z` when named directly.
pub fn run_verify(suite: &str, opts: &VerifyOptions) -> Result<VerifyOutcome> {
    let suites: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(domain(format!(
            "unknown suite `{suite}` (expected all or one of {})",
            SUITES.join(", ")
        )));
    };
    if suite != "all" && RATIONAL_ONLY.contains(&suite) && opts.ring == Some(Ring::Z) {
        return Err(domain(format!("suite `{suite}` is stated over Q only")));
    }
    let dims = opts.n.map_or(DEFAULT_DIMENSIONS.to_vec(), |n| vec![n]);
    let rings = opts.ring.map_or(vec![Ring::Q, Ring::Z], |r| vec![r]);
    let mut reports = Vec::new();
    for s in suites {
        for &n in &dims {
            if RATIONAL_ONLY.contains(&s) {
                if rings.contains(&Ring::Q) {
                    reports.extend(run_suite(s, n, Ring::Q, opts)?);
                }
            } else {
                for &r in &rings {
                    reports.extend(run_suite(s, n, r, opts)?);
                }
            }
        }
    }
    Ok(VerifyOutcome { reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_verify("nonsense", &VerifyOptions::default()).is_err());
    }

    #[test]
    fn rational_suite_rejects_integers() {
        let opts = VerifyOptions {
            ring: Some(Ring::Z),
            ..Default::default()
        };
        assert!(run_verify("iso", &opts).is_err());
    }

    #[test]
    fn small_gysin_run_passes() {
        let opts = VerifyOptions {
            n: Some(4),
            ring: Some(Ring::Z),
            degree_bound: Some(20),
            ..Default::default()
        };
        let out = run_verify("gysin", &opts).unwrap();
        assert!(out.passed(), "{out}");
        assert_eq!(out.exit_code(), 0);
    }
}
