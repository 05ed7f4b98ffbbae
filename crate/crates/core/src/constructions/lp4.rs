//! `LP(4, q)`: lines of `PG(4, q)` as points, planes as lines, with the two
//! polarity transformations.
//!
//! Both polarities come from the symplectic form
//! `x1 y2 - x2 y1 + x3 y4 - x4 y3` on four coordinates. On the hyperplane
//! `H0 = {x5 = 0}` it acts directly; at the point `P0 = (0:0:0:0:1)` it acts
//! on the quotient, whose coordinates are `x1..x4`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::projective::{null_space, subspaces_within, SubspaceIndex};
use crate::algebra::{pg_subspaces, FiniteField, Subspace};
use crate::incidence::Configuration;
use crate::Result;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolarityFlags {
    /// Apply the polarity of `H0`: `L ~ p` iff `π(L) ⊆ p` for `L, p ⊆ H0`.
    pub hyperplane_side: bool,
    /// Apply the polarity at `P0`: `L ~ p` iff `L ⊆ π'(p)` for `P0 ∈ L, p`.
    pub point_side: bool,
}

/// Orthogonal complement in `F_q^4` of the span of `rows`.
fn perp(field: &FiniteField, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let dual: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| vec![field.neg(r[1]), r[0], field.neg(r[3]), r[2]])
        .collect();
    null_space(field, dual, 4)
}

fn within_h0(s: &Subspace) -> bool {
    s.within_coordinate_hyperplane(4)
}

fn through_p0(field: &FiniteField, s: &Subspace) -> bool {
    let mut rows = s.row_vecs();
    rows.push(vec![0, 0, 0, 0, 1]);
    crate::algebra::projective::rank(field, rows) == s.dim() + 1
}

fn lift(rows: Vec<Vec<u32>>, last: u32) -> Vec<Vec<u32>> {
    rows.into_iter().map(|mut r| {
        r.truncate(4);
        r.push(last);
        r
    }).collect()
}

/// Point lists of the configuration, one per plane of `PG(4, q)` in sorted
/// order; points are lines of `PG(4, q)` in sorted order.
pub fn lp4_lines_by_plane(q: u64, flags: PolarityFlags) -> Result<(usize, Vec<Vec<u32>>)> {
    let field = FiniteField::new(q)?;
    let lines = pg_subspaces(4, q, 1)?;
    let planes = pg_subspaces(4, q, 2)?;
    let index = SubspaceIndex::new(&lines);
    let id = |s: &Subspace| index.get(s).expect("line of PG(4,q)") as u32;

    let blocks: Vec<Vec<u32>> = planes
        .par_iter()
        .map(|p| {
            let contained = subspaces_within(&field, p, 1);
            let in_h0 = within_h0(p);
            let at_p0 = through_p0(&field, p);
            assert!(!(in_h0 && at_p0), "P0 lies off H0, so the modified zones are disjoint");
            let mut block: Vec<u32> = if flags.hyperplane_side && in_h0 {
                // lines L of H0 with π(L) ⊆ p are the images π(M) of lines M ⊆ p
                contained
                    .iter()
                    .map(|m| {
                        let image = lift(perp(&field, &m.row_vecs()), 0);
                        id(&Subspace::span(&field, 4, &image).expect("π(M) is a line"))
                    })
                    .collect()
            } else if flags.point_side && at_p0 {
                let quotient: Vec<Vec<u32>> = p.row_vecs().into_iter().map(|r| r[..4].to_vec()).collect();
                let mut image = lift(perp(&field, &quotient), 0);
                image.push(vec![0, 0, 0, 0, 1]);
                let target = Subspace::span(&field, 4, &image).expect("π'(p) is a plane");
                let mut b: Vec<u32> = contained.iter().filter(|l| !through_p0(&field, l)).map(id).collect();
                b.extend(subspaces_within(&field, &target, 1).iter().filter(|l| through_p0(&field, l)).map(id));
                b
            } else {
                contained.iter().map(id).collect()
            };
            block.sort_unstable();
            block
        })
        .collect();
    Ok((lines.len(), blocks))
}

pub fn lp4(q: u64, flags: PolarityFlags) -> Result<Configuration> {
    let (v, blocks) = lp4_lines_by_plane(q, flags)?;
    let k = (q * q + q + 1) as usize;
    Configuration::new(v, k, blocks)
}
