//! Families of strongly regular configurations.

mod lp4;
mod spec;

use std::collections::HashSet;

use crate::algebra::projective::{points_of, SubspaceIndex};
use crate::algebra::{pg_subspaces, FiniteField, Group, Subspace};
use crate::graphs::{srg_check, Graph};
use crate::incidence::Configuration;
use crate::{Error, Result};

pub use lp4::{lp4, lp4_lines_by_plane, PolarityFlags};
pub use spec::ConstructionSpec;

/// `PG(2, q)`: points and lines are the 1- and 2-dimensional subspaces of
/// `F_q^3`, both in sorted echelon order.
pub fn projective_plane(q: u64) -> Result<Configuration> {
    let field = FiniteField::new(q)?;
    let points = pg_subspaces(2, q, 0)?;
    let index = SubspaceIndex::new(&points);
    let lines = pg_subspaces(2, q, 1)?
        .iter()
        .map(|l| points_of(&field, l).iter().map(|p| index.get(p).expect("point of the plane") as u32).collect())
        .collect();
    Configuration::new(points.len(), q as usize + 1, lines)
}

/// Indices of `(1:0:0)`, `(0:1:0)`, `(0:0:1)` in [`projective_plane`].
pub fn coordinate_triangle(q: u64) -> Result<[u32; 3]> {
    let field = FiniteField::new(q)?;
    let points = pg_subspaces(2, q, 0)?;
    let index = SubspaceIndex::new(&points);
    let mut out = [0u32; 3];
    for (i, slot) in out.iter_mut().enumerate() {
        let mut e = vec![0u32; 3];
        e[i] = 1;
        let p = Subspace::span(&field, 2, &[e]).expect("nonzero vector");
        *slot = index.get(&p).expect("coordinate point") as u32;
    }
    Ok(out)
}

/// Deletes the points on the sides of triangle `abc` and the lines through
/// its vertices. Survivors keep their relative order.
pub fn triangle_removal(plane: &Configuration, a: u32, b: u32, c: u32) -> Result<Configuration> {
    let (v, k) = (plane.v(), plane.k());
    if !plane.is_valid() || k < 2 || v != k * k - k + 1 {
        return Err(Error::NotProjectivePlane(format!("{v} points with {k} per line")));
    }
    let n = k - 1;
    if n < 5 {
        return Err(Error::OrderTooSmall(n));
    }
    if [a, b, c].iter().any(|&p| p as usize >= v) || a == b || b == c || a == c {
        return Err(Error::InvalidSpec(format!("triangle {a}, {b}, {c} is not three distinct points")));
    }
    let through = |p: u32| -> HashSet<usize> {
        plane.lines().iter().enumerate().filter(|(_, l)| l.contains(&p)).map(|(i, _)| i).collect()
    };
    let (ta, tb, tc) = (through(a), through(b), through(c));
    let side = |x: &HashSet<usize>, y: &HashSet<usize>| *x.intersection(y).next().expect("two points share a line");
    let sides = [side(&ta, &tb), side(&tb, &tc), side(&ta, &tc)];
    if sides[0] == sides[1] {
        return Err(Error::CollinearTriple(a as usize, b as usize, c as usize));
    }
    let mut gone = vec![false; v];
    for &s in &sides {
        for &p in &plane.lines()[s] {
            gone[p as usize] = true;
        }
    }
    let mut label = vec![u32::MAX; v];
    let mut next = 0;
    for p in 0..v {
        if !gone[p] {
            label[p] = next;
            next += 1;
        }
    }
    let lines = plane
        .lines()
        .iter()
        .enumerate()
        .filter(|(i, _)| !ta.contains(i) && !tb.contains(i) && !tc.contains(i))
        .map(|(_, l)| l.iter().filter(|&&p| !gone[p as usize]).map(|&p| label[p as usize]).collect())
        .collect();
    Configuration::new(next as usize, n - 2, lines)
}

/// Points are the vertices of a Moore graph of valency at least 3, lines
/// their neighbourhoods.
pub fn moore_configuration(g: &Graph) -> Result<Configuration> {
    let p = srg_check(g).ok_or(Error::NotMooreGraph)?;
    if p.d < 3 || p.lambda != 0 || p.mu != 1 || p.v != p.d * p.d + 1 {
        return Err(Error::NotMooreGraph);
    }
    let lines = (0..g.order()).map(|x| g.neighbors(x).map(|y| y as u32).collect()).collect();
    Configuration::new(g.order(), p.d as usize, lines)
}

/// Whether the left differences `a^-1 b` of distinct elements of `d` are
/// pairwise distinct.
pub fn is_deficient(g: &Group, d: &[u32]) -> bool {
    let mut seen = vec![false; g.order()];
    for &a in d {
        for &b in d {
            if a == b {
                continue;
            }
            let x = g.mul(g.inv(a), b) as usize;
            if seen[x] {
                return false;
            }
            seen[x] = true;
        }
    }
    true
}

/// Points are the elements of `g`, lines the left translates `xD`.
pub fn development(g: &Group, d: &[u32]) -> Result<Configuration> {
    let n = g.order();
    if let Some(&x) = d.iter().find(|&&x| x as usize >= n) {
        return Err(Error::InvalidSpec(format!("element index {x} out of range for a group of order {n}")));
    }
    let distinct: HashSet<u32> = d.iter().copied().collect();
    if distinct.len() != d.len() || !is_deficient(g, d) {
        return Err(Error::NotDeficient);
    }
    let lines: Vec<Vec<u32>> = (0..n as u32)
        .map(|x| {
            let mut l: Vec<u32> = d.iter().map(|&y| g.mul(x, y)).collect();
            l.sort_unstable();
            l
        })
        .collect();
    let set: HashSet<&Vec<u32>> = lines.iter().collect();
    // regular on lines: only the identity fixes D
    if set.len() != n {
        return Err(Error::InconsistentParameters(format!("development of a {}-set has repeated lines", d.len())));
    }
    Configuration::new(n, d.len(), lines)
}

/// `F_q^* x F_q^*` with `{(x, x + 1) : x != 0, -1}`.
pub fn fq_star_pair_set(q: u64) -> Result<(Group, Vec<u32>)> {
    let field = FiniteField::new(q)?;
    let one = Group::field_multiplicative(q)?;
    let g = Group::direct_product(&one, &one);
    let m = (q - 1) as u32;
    let d = (0..m)
        .filter_map(|i| {
            let x = field.exp(i as u64);
            let y = field.add(x, 1);
            (y != 0).then(|| i * m + field.log(y).expect("nonzero"))
        })
        .collect();
    Ok((g, d))
}

/// `Q_8 x Q_8` with the difference sets of the configurations from the Hall
/// plane and from its dual.
pub fn quaternion_pair_sets() -> (Group, Vec<u32>, Vec<u32>) {
    let q8 = Group::quaternion8();
    let g = Group::direct_product(&q8, &q8);
    let set = |pairs: &[(&str, &str)]| -> Vec<u32> {
        pairs.iter().map(|(a, b)| g.element(&format!("{a}|{b}")).expect("quaternion unit")).collect()
    };
    let d1 = set(&[("1", "1"), ("i", "-k"), ("j", "k"), ("k", "-j"), ("-i", "j"), ("-j", "i"), ("-k", "-i")]);
    let d2 = set(&[("1", "1"), ("i", "-k"), ("j", "j"), ("k", "-j"), ("-i", "-i"), ("-j", "i"), ("-k", "k")]);
    (g, d1, d2)
}
