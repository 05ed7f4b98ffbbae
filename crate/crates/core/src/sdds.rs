//! Strong deficient difference sets.
//!
//! For `D ⊆ G` let `Δ(D)` be the left differences `a^-1 b`, `a != b`, and
//! `n(x) = |Δ ∩ xΔ|`. `D` is an SDDS for `(v_k; λ, μ)` when the differences
//! are distinct and `n` is `λ` on `Δ` and `μ` off `Δ ∪ {1}`; its development
//! is then a strongly regular configuration.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Group;
use crate::constructions::is_deficient;
use crate::incidence::SrcParams;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceProfile {
    pub delta: BTreeSet<u32>,
    /// `n(x)` for every `x != 1`.
    pub n_of: BTreeMap<u32, usize>,
}

/// `None` when some difference repeats.
pub fn difference_profile(g: &Group, d: &[u32]) -> Option<DifferenceProfile> {
    if !is_deficient(g, d) || d.iter().collect::<BTreeSet<_>>().len() != d.len() {
        return None;
    }
    let mut in_delta = vec![false; g.order()];
    for &a in d {
        for &b in d {
            if a != b {
                in_delta[g.mul(g.inv(a), b) as usize] = true;
            }
        }
    }
    let delta: BTreeSet<u32> = (0..g.order() as u32).filter(|&x| in_delta[x as usize]).collect();
    // n(x) counts pairs (y, z) in Δ x Δ with y = x z
    let mut n = vec![0usize; g.order()];
    for &y in &delta {
        for &z in &delta {
            n[g.mul(y, g.inv(z)) as usize] += 1;
        }
    }
    let id = g.identity();
    let n_of = (0..g.order() as u32).filter(|&x| x != id).map(|x| (x, n[x as usize])).collect();
    Some(DifferenceProfile { delta, n_of })
}

/// `(λ, μ)` when `d` is an SDDS. `None` also when `Δ` is all of `G ∖ {1}`,
/// where `μ` is undefined.
pub fn sdds_check(g: &Group, d: &[u32]) -> Option<(usize, usize)> {
    let prof = difference_profile(g, d)?;
    let mut lambda = None;
    let mut mu = None;
    for (x, &n) in &prof.n_of {
        let slot = if prof.delta.contains(x) { &mut lambda } else { &mut mu };
        match slot {
            None => *slot = Some(n),
            Some(m) if *m != n => return None,
            _ => {}
        }
    }
    Some((lambda?, mu?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// Every SDDS.
    None,
    /// One set per left-translation class: the translate containing the
    /// identity whose remaining elements are lexicographically smallest.
    ContainsIdentity,
}

struct Searcher<'a> {
    g: &'a Group,
    k: usize,
    lambda: usize,
    mu: usize,
    in_delta: Vec<bool>,
    /// Partial `n(x)`.
    n: Vec<usize>,
    delta: Vec<u32>,
    set: Vec<u32>,
    found: Vec<Vec<u32>>,
    /// Counts incremented and the length of `delta` before each push.
    journal: Vec<(Vec<usize>, usize)>,
}

impl Searcher<'_> {
    /// Adds `x` to the set; returns false, with state untouched, when a
    /// difference repeats or some partial `n(x)` exceeds its bound.
    fn push(&mut self, x: u32) -> bool {
        let g = self.g;
        let mut fresh = Vec::with_capacity(2 * self.set.len());
        for &s in &self.set {
            for y in [g.mul(g.inv(s), x), g.mul(g.inv(x), s)] {
                if self.in_delta[y as usize] || fresh.contains(&y) {
                    return false;
                }
                fresh.push(y);
            }
        }
        let start = self.delta.len();
        for &y in &fresh {
            self.in_delta[y as usize] = true;
            self.delta.push(y);
        }
        let cap = self.lambda.max(self.mu);
        let mut touched = Vec::new();
        let mut ok = true;
        'pairs: for i in 0..self.delta.len() {
            for j in 0..self.delta.len() {
                if i == j || (i < start && j < start) {
                    continue;
                }
                let w = g.mul(self.delta[i], g.inv(self.delta[j])) as usize;
                self.n[w] += 1;
                touched.push(w);
                if self.n[w] > if self.in_delta[w] { self.lambda } else { cap } {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        // counts gathered before these elements joined Δ
        ok = ok && fresh.iter().all(|&y| self.n[y as usize] <= self.lambda);
        if !ok {
            self.undo(touched, start);
            return false;
        }
        self.set.push(x);
        self.journal.push((touched, start));
        true
    }

    fn undo(&mut self, touched: Vec<usize>, start: usize) {
        for w in touched {
            self.n[w] -= 1;
        }
        for y in self.delta.drain(start..) {
            self.in_delta[y as usize] = false;
        }
    }

    fn pop(&mut self) {
        let (touched, start) = self.journal.pop().expect("pop after push");
        self.undo(touched, start);
        self.set.pop();
    }

    fn extend(&mut self, next: u32) {
        if self.set.len() == self.k {
            if sdds_check(self.g, &self.set) == Some((self.lambda, self.mu)) {
                self.found.push(self.set.clone());
            }
            return;
        }
        let id = self.g.identity();
        for x in next..self.g.order() as u32 {
            if x == id {
                continue;
            }
            // need k - |set| - 1 more after x
            if (self.g.order() as u32 - x) < (self.k - self.set.len()) as u32 {
                break;
            }
            if self.push(x) {
                self.extend(x + 1);
                self.pop();
            }
        }
    }
}

fn is_canonical_translate(g: &Group, d: &[u32]) -> bool {
    let key = |s: &[u32]| -> Vec<u32> {
        let mut v: Vec<u32> = s.iter().copied().filter(|&x| x != g.identity()).collect();
        v.sort_unstable();
        v
    };
    let own = key(d);
    d.iter().all(|&a| {
        let t: Vec<u32> = d.iter().map(|&b| g.mul(g.inv(a), b)).collect();
        key(&t) >= own
    })
}

/// All SDDS of size `k` in `g` for `(|g|_k; λ, μ)`, sorted, each as a
/// sorted list of element indices.
pub fn sdds_search(g: &Group, k: usize, lambda: usize, mu: usize, norm: Normalization) -> Result<Vec<Vec<u32>>> {
    let v = g.order() as u64;
    let p = SrcParams::new(v, k as u64, lambda as u64, mu as u64);
    if k < 3 || v < p.d() + 2 || !p.identity_holds() {
        return Err(Error::InconsistentParameters(format!("{p} with |G| = {v}")));
    }
    let id = g.identity();
    let seconds: Vec<u32> = (0..v as u32).filter(|&x| x != id).collect();
    let mut reps: Vec<Vec<u32>> = seconds
        .par_iter()
        .flat_map_iter(|&x| {
            let mut s = Searcher {
                g,
                k,
                lambda,
                mu,
                in_delta: vec![false; g.order()],
                n: vec![0; g.order()],
                delta: Vec::new(),
                set: vec![id],
                found: Vec::new(),
                journal: Vec::new(),
            };
            if s.push(x) {
                s.extend(x + 1);
            }
            s.found.into_iter().filter(|d| is_canonical_translate(g, d))
        })
        .map(|mut d| {
            d.sort_unstable();
            d
        })
        .collect();
    reps.sort();
    if norm == Normalization::ContainsIdentity {
        return Ok(reps);
    }
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    for d in &reps {
        for h in 0..v as u32 {
            let mut t: Vec<u32> = d.iter().map(|&b| g.mul(h, b)).collect();
            t.sort_unstable();
            all.insert(t);
        }
    }
    Ok(all.into_iter().collect())
}
