//! Projective subspaces of `PG(n, q)` in reduced row echelon form.

use std::collections::HashMap;

use super::FiniteField;
use crate::{Error, Result};

/// A projective subspace of `PG(n, q)`, stored as the unique reduced row
/// echelon basis of the underlying `(dim + 1)`-dimensional vector subspace of
/// `F_q^(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    q: u32,
    dim: usize,
    /// `(dim + 1) x (n + 1)` matrix, row-major.
    basis: Vec<u32>,
}

impl Subspace {
    /// Canonical subspace spanned by `rows` (any spanning set, possibly
    /// dependent). Returns `None` for the zero subspace.
    pub fn span(field: &FiniteField, n: usize, rows: &[Vec<u32>]) -> Option<Subspace> {
        let reduced = rref(field, rows.to_vec());
        if reduced.is_empty() {
            return None;
        }
        Some(Subspace {
            n,
            q: field.order(),
            dim: reduced.len() - 1,
            basis: reduced.into_iter().flatten().collect(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u32 {
        self.q
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.basis.chunks(self.n + 1)
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    pub fn flat(&self) -> &[u32] {
        &self.basis
    }

    /// Whether every basis vector satisfies `x_i = 0`.
    pub fn within_coordinate_hyperplane(&self, coord: usize) -> bool {
        self.rows().all(|r| r[coord] == 0)
    }
}

/// Reduced row echelon form; zero rows are dropped.
pub fn rref(field: &FiniteField, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    let t = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

pub fn rank(field: &FiniteField, rows: Vec<Vec<u32>>) -> usize {
    rref(field, rows).len()
}

/// Basis of `{ y : M y = 0 }` where `M` has the given rows.
pub fn null_space(field: &FiniteField, rows: Vec<Vec<u32>>, cols: usize) -> Vec<Vec<u32>> {
    let reduced = rref(field, rows);
    let mut pivots = Vec::new();
    for row in &reduced {
        pivots.push(row.iter().position(|&x| x != 0).unwrap());
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= (q as u128).pow((n - i) as u32) - 1;
        den *= (q as u128).pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All projective subspaces of dimension `dim` in `PG(n, q)`, sorted by their
/// flattened echelon matrices.
pub fn pg_subspaces(n: usize, q: u64, dim: usize) -> Result<Vec<Subspace>> {
    let field = FiniteField::new(q)?;
    pg_subspaces_over(&field, n, dim)
}

pub fn pg_subspaces_over(field: &FiniteField, n: usize, dim: usize) -> Result<Vec<Subspace>> {
    if dim > n {
        return Err(Error::DimensionOutOfRange { n, dim });
    }
    let cols = n + 1;
    let rank = dim + 1;
    let q = field.order();
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..rank).collect();
    loop {
        // free positions: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> = (0..rank)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..cols)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut values = vec![0u32; free.len()];
        loop {
            let mut basis = vec![0u32; rank * cols];
            for (r, &pc) in pivots.iter().enumerate() {
                basis[r * cols + pc] = 1;
            }
            for (&(r, c), &x) in free.iter().zip(&values) {
                basis[r * cols + c] = x;
            }
            out.push(Subspace {
                n,
                q,
                dim,
                basis,
            });
            // odometer over free entries
            let mut i = 0;
            while i < values.len() {
                values[i] += 1;
                if values[i] < q {
                    break;
                }
                values[i] = 0;
                i += 1;
            }
            if i == values.len() {
                break;
            }
        }
        // next pivot combination
        let mut i = rank;
        loop {
            if i == 0 {
                out.sort_unstable();
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < cols - rank + i {
                pivots[i] += 1;
                for j in i + 1..rank {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Whether `b` is contained in `a`.
pub fn subspace_contains(field: &FiniteField, a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.n != b.n || a.q != b.q || a.q != field.order() {
        return Err(Error::AmbientMismatch);
    }
    if b.dim > a.dim {
        return Ok(false);
    }
    let mut rows = a.row_vecs();
    rows.extend(b.row_vecs());
    Ok(rank(field, rows) == a.dim + 1)
}

/// Lookup from canonical basis to position in a sorted subspace list.
pub struct SubspaceIndex {
    map: HashMap<Vec<u32>, usize>,
}

impl SubspaceIndex {
    pub fn new(subspaces: &[Subspace]) -> Self {
        SubspaceIndex {
            map: subspaces
                .iter()
                .enumerate()
                .map(|(i, s)| (s.basis.clone(), i))
                .collect(),
        }
    }

    pub fn get(&self, s: &Subspace) -> Option<usize> {
        self.map.get(&s.basis).copied()
    }
}

/// All projective points (as canonical 1-dimensional subspaces) of `s`.
pub fn points_of(field: &FiniteField, s: &Subspace) -> Vec<Subspace> {
    let rows = s.row_vecs();
    let q = field.order();
    let cols = s.n + 1;
    let m = rows.len();
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; m];
    loop {
        // keep coefficient vectors whose first nonzero entry is 1
        if let Some(first) = coeffs.iter().position(|&c| c != 0) {
            if coeffs[first] == 1 {
                let mut v = vec![0u32; cols];
                for (row, &c) in rows.iter().zip(&coeffs) {
                    if c != 0 {
                        for (x, &y) in v.iter_mut().zip(row) {
                            *x = field.add(*x, field.mul(c, y));
                        }
                    }
                }
                out.push(Subspace::span(field, s.n, &[v]).unwrap());
            }
        }
        let mut i = 0;
        while i < m {
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
    }
    out.sort_unstable();
    out
}

/// All subspaces of projective dimension `dim` inside `s`.
pub fn subspaces_within(field: &FiniteField, s: &Subspace, dim: usize) -> Vec<Subspace> {
    let rows = s.row_vecs();
    // enumerate echelon forms in the coordinate system of s, then map back
    let inner = pg_subspaces_over(field, s.dim, dim).expect("dim <= s.dim");
    let mut out: Vec<Subspace> = inner
        .iter()
        .map(|t| {
            let mapped: Vec<Vec<u32>> = t
                .rows()
                .map(|coeffs| {
                    let mut v = vec![0u32; s.n + 1];
                    for (row, &c) in rows.iter().zip(coeffs) {
                        if c != 0 {
                            for (x, &y) in v.iter_mut().zip(row) {
                                *x = field.add(*x, field.mul(c, y));
                            }
                        }
                    }
                    v
                })
                .collect();
            Subspace::span(field, s.n, &mapped).unwrap()
        })
        .collect();
    out.sort_unstable();
    out
}
