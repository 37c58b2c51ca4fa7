//! Homology tables as ASCII or JSON.

use serde::Serialize;

use crate::algebra::basis_in_degree;
use crate::equivariant::{QuotientAlgebra, SubgroupSpec};
use crate::error::{domain, Result};
use crate::scalar::Ring;
use crate::sphere::{betti, make_space, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Json,
}

#[derive(Debug, Clone, Copy)]
pub struct TableRequest {
    pub space: Space,
    pub n: u32,
    pub ring: Ring,
    pub group: Option<SubgroupSpec>,
    pub max_degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRecord {
    pub degree: i64,
    pub rank: usize,
    pub torsion: Vec<u32>,
    pub generators: Vec<String>,
    pub family: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub space: String,
    pub n: u32,
    pub ring: Ring,
    pub group: Option<String>,
    pub max_degree: i64,
    pub entries: Vec<TableRecord>,
}

/// Which `lambda_r = (2r-1)(n-1)` family a degree of the free loop space belongs to.
pub fn family_label(n: u32, degree: i64) -> Option<String> {
    let s = n as i64;
    if degree <= 0 || degree == s || s < 3 {
        return None;
    }
    let families = [(0, "lambda_"), (s - 1, "n-1+lambda_"), (s, "n+lambda_"), (2 * s - 1, "2n-1+lambda_")];
    families.iter().find_map(|&(offset, tag)| {
        let rest = degree - offset;
        (rest > 0 && rest % (s - 1) == 0 && (rest / (s - 1)) % 2 == 1)
            .then(|| format!("{tag}{}", (rest / (s - 1) + 1) / 2))
    })
}

pub fn build_table(req: &TableRequest) -> Result<Table> {
    if req.max_degree < 0 {
        return Err(domain("max_degree must be non-negative"));
    }
    let family = |d: i64| {
        if req.space == Space::LoopSphere {
            family_label(req.n, d)
        } else {
            None
        }
    };
    let mut entries = Vec::new();
    match req.group {
        None => {
            let pres = make_space(req.space, req.n, req.ring)?;
            let table = betti(req.space, req.n, req.ring, req.max_degree)?;
            for e in table.entries {
                let generators = basis_in_degree(e.degree, &pres.ctx)
                    .iter()
                    .map(|b| pres.ctx.format_monomial(&b.monomial))
                    .collect();
                entries.push(TableRecord {
                    degree: e.degree,
                    rank: e.rank,
                    torsion: e.torsion,
                    generators,
                    family: family(e.degree),
                });
            }
        }
        Some(group) => {
            let pres = make_space(req.space, req.n, req.ring)?;
            let qa = QuotientAlgebra::new(group, pres)?;
            let table = qa.betti(req.max_degree)?;
            for e in table.entries {
                let generators = qa
                    .invariants_in_degree(e.degree)?
                    .iter()
                    .map(|m| format!("q({})", qa.base.ctx.format_monomial(m)))
                    .collect();
                entries.push(TableRecord {
                    degree: e.degree,
                    rank: e.rank,
                    torsion: e.torsion,
                    generators,
                    family: family(e.degree),
                });
            }
        }
    }
    Ok(Table {
        space: req.space.tag().to_string(),
        n: req.n,
        ring: req.ring,
        group: req.group.map(|g| g.label()),
        max_degree: req.max_degree,
        entries,
    })
}

impl Table {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn to_ascii(&self) -> String {
        let mut out = format!(
            "{} space, n = {}, ring {}, group {}, degrees 0..={}\n",
            self.space,
            self.n,
            self.ring,
            self.group.as_deref().unwrap_or("none"),
            self.max_degree
        );
        let rows: Vec<[String; 5]> = self
            .entries
            .iter()
            .map(|e| {
                let torsion = if e.torsion.is_empty() {
                    "-".to_string()
                } else {
                    e.torsion.iter().map(|t| format!("Z/{t}")).collect::<Vec<_>>().join("+")
                };
                [
                    e.degree.to_string(),
                    e.rank.to_string(),
                    torsion,
                    e.family.clone().unwrap_or_else(|| "-".to_string()),
                    e.generators.join(", "),
                ]
            })
            .collect();
        let header = ["degree", "rank", "torsion", "family", "generators"].map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        for r in std::iter::once(&header).chain(&rows) {
            let line = format!(
                "{:>w0$}  {:>w1$}  {:<w2$}  {:<w3$}  {}",
                r[0],
                r[1],
                r[2],
                r[3],
                r[4],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2],
                w3 = widths[3]
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Ascii => self.to_ascii(),
            Format::Json => self.to_json(),
        }
    }
}

pub fn emit_betti(req: &TableRequest, format: Format) -> Result<String> {
    Ok(build_table(req)?.render(format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_labels() {
        assert_eq!(family_label(3, 0), None);
        assert_eq!(family_label(3, 3), None);
        assert_eq!(family_label(3, 2).as_deref(), Some("lambda_1"));
        assert_eq!(family_label(3, 4).as_deref(), Some("n-1+lambda_1"));
        assert_eq!(family_label(3, 5).as_deref(), Some("n+lambda_1"));
        assert_eq!(family_label(3, 7).as_deref(), Some("2n-1+lambda_1"));
        assert_eq!(family_label(3, 6).as_deref(), Some("lambda_2"));
        assert_eq!(family_label(4, 9).as_deref(), Some("lambda_2"));
        assert_eq!(family_label(4, 1), None);
    }

    #[test]
    fn quotient_table_json() {
        let req = TableRequest {
            space: Space::LoopSphere,
            n: 3,
            ring: Ring::Q,
            group: Some(SubgroupSpec::dihedral(1).unwrap()),
            max_degree: 12,
        };
        let t = build_table(&req).unwrap();
        let degrees: Vec<i64> = t.entries.iter().map(|e| e.degree).collect();
        assert_eq!(degrees, vec![0, 3, 4, 7, 8, 11, 12]);
        assert!(t.entries.iter().all(|e| e.rank == 1));
        assert_eq!(t.entries[2].generators, vec!["q(A*U^2)"]);
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["group"], "D1");
        assert_eq!(v["ring"], "Q");
        assert_eq!(v["entries"][0]["family"], serde_json::Value::Null);
    }

    #[test]
    fn torsion_entry_and_errors() {
        let req = TableRequest {
            space: Space::LoopSphere,
            n: 4,
            ring: Ring::Z,
            group: None,
            max_degree: 6,
        };
        let t = build_table(&req).unwrap();
        let e = t.entries.iter().find(|e| e.degree == 6).unwrap();
        assert_eq!((e.rank, e.torsion.clone()), (0, vec![2]));
        assert!(t.to_ascii().contains("Z/2"));
        assert!(build_table(&TableRequest { max_degree: -1, ..req }).is_err());
        let with_group = TableRequest {
            group: Some(SubgroupSpec::dihedral(1).unwrap()),
            ..req
        };
        assert!(build_table(&with_group).is_err());
    }
}
