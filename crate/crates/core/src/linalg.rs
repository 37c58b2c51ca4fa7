//! Exact rank and determinant for the small matrices between degree pieces.

use std::sync::Arc;

use crate::algebra::{basis_in_degree, AlgebraContext, Element};
use crate::error::Result;
use crate::scalar::{Ring, Scalar};

/// Row-reduce a copy of `rows` over `Q`, returning (rank, determinant if square).
#[allow(clippy::needless_range_loop)]
pub fn rank_and_det(rows: &[Vec<Scalar>]) -> (usize, Option<Scalar>) {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let square = nrows == ncols;
    let mut det = Scalar::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            det = Scalar::zero();
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = -det;
        }
        let pivot = m[rank][col].clone();
        det = &det * &pivot;
        let inv = pivot.recip().expect("nonzero pivot");
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] * &inv;
                for c in col..ncols {
                    let sub = &factor * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        rank += 1;
    }
    (rank, square.then_some(if rank == nrows { det } else { Scalar::zero() }))
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    rank_and_det(rows).0
}

/// Whether a linear map is an isomorphism from the degree-`from` piece of
/// `src` onto the degree-`to` piece of `dst`.
///
/// Over `Q` this is a full-rank square matrix. Over `Z` the free block must
/// be unimodular and the 2-torsion block invertible mod 2.
pub fn is_isomorphism_between_degrees<F>(
    map: F,
    src: &Arc<AlgebraContext>,
    from: i64,
    dst: &Arc<AlgebraContext>,
    to: i64,
) -> Result<bool>
where
    F: Fn(&Element) -> Result<Element>,
{
    let sb = basis_in_degree(from, src);
    let tb = basis_in_degree(to, dst);
    if sb.len() != tb.len() {
        return Ok(false);
    }
    let (s_free, s_tor): (Vec<_>, Vec<_>) = sb.iter().partition(|b| b.torsion.is_none());
    let (t_free, t_tor): (Vec<_>, Vec<_>) = tb.iter().partition(|b| b.torsion.is_none());
    if s_free.len() != t_free.len() || s_tor.len() != t_tor.len() {
        return Ok(false);
    }
    let block = |sources: &[&crate::algebra::BasisMonomial],
                 targets: &[&crate::algebra::BasisMonomial]|
     -> Result<Vec<Vec<Scalar>>> {
        let mut rows = Vec::new();
        for s in sources {
            let img = map(&Element::from_monomial(src, s.monomial.clone()))?;
            img.check_context(dst)?;
            rows.push(targets.iter().map(|t| img.coefficient(&t.monomial)).collect());
        }
        Ok(rows)
    };
    let free = block(&s_free, &t_free)?;
    let tor = block(&s_tor, &t_tor)?;
    let free_ok = match src.ring {
        Ring::Q => rank(&free) == free.len(),
        Ring::Z => {
            let (_, det) = rank_and_det(&free);
            det.is_some_and(|d| d.abs().is_one())
        }
    };
    let tor_ok = rank_mod2(&tor) == tor.len();
    Ok(free_ok && tor_ok)
}

/// Rank over GF(2) of an integral matrix.
#[allow(clippy::needless_range_loop)]
pub fn rank_mod2(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| c.rem_euclid(2).is_some_and(|v| v.is_one()))
                .collect()
        })
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col]) else {
            continue;
        };
        m.swap(p, rank);
        for r in 0..m.len() {
            if r != rank && m[r][col] {
                for c in col..ncols {
                    let v = m[rank][c];
                    m[r][c] ^= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether a linear map is injective on the degree-`from` piece of `src`.
///
/// Free classes must map to linearly independent free images, torsion
/// classes to independent torsion images mod 2.
pub fn is_injective_on_degree<F>(
    map: F,
    src: &Arc<AlgebraContext>,
    from: i64,
    dst: &Arc<AlgebraContext>,
    to: i64,
) -> Result<bool>
where
    F: Fn(&Element) -> Result<Element>,
{
    let sb = basis_in_degree(from, src);
    let tb = basis_in_degree(to, dst);
    let mut free_rows = Vec::new();
    let mut tor_rows = Vec::new();
    for s in &sb {
        let img = map(&Element::from_monomial(src, s.monomial.clone()))?;
        img.check_context(dst)?;
        let row_for = |torsion: bool| -> Vec<Scalar> {
            tb.iter()
                .filter(|t| t.torsion.is_some() == torsion)
                .map(|t| img.coefficient(&t.monomial))
                .collect()
        };
        if s.torsion.is_none() {
            free_rows.push(row_for(false));
        } else {
            tor_rows.push(row_for(true));
        }
    }
    let free_ok = free_rows.is_empty() || rank(&free_rows) == free_rows.len();
    let tor_ok = tor_rows.is_empty() || rank_mod2(&tor_rows) == tor_rows.len();
    Ok(free_ok && tor_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn determinant_and_rank() {
        let m = vec![vec![s(2), s(1)], vec![s(1), s(1)]];
        assert_eq!(rank_and_det(&m), (2, Some(s(1))));
        let m = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert_eq!(rank_and_det(&m), (1, Some(s(0))));
        let m = vec![vec![s(0), s(1)], vec![s(1), s(0)]];
        assert_eq!(rank_and_det(&m), (2, Some(s(-1))));
        assert_eq!(rank_and_det(&[]), (0, Some(s(1))));
        assert_eq!(rank(&[vec![s(1), s(0), s(3)]]), 1);
        // rank 2 over Q, rank 1 over GF(2)
        let m = vec![vec![s(1), s(1)], vec![s(1), s(3)]];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_mod2(&m), 1);
    }
}
