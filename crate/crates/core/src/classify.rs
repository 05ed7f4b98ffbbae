//! Configurations with a prescribed point graph.
//!
//! A configuration with point graph `Γ` and lines of size `k` is a set of
//! `k`-cliques of `Γ` covering every edge exactly once, so the search is an
//! exact cover of the edge set. Equivalently it is a `v`-clique in the
//! clique graph, whose vertices are the `k`-cliques and whose edges join
//! cliques meeting in at most one point.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graphs::{k_cliques, srg_check, Graph, SrgParams};
use crate::incidence::{Configuration, Side};
use crate::iso::{analyse, canonical_form, CanonicalForm};
use crate::Result;

#[derive(Clone, Debug)]
pub struct CliqueGraphResult {
    pub source: Graph,
    pub k: usize,
    pub cliques: Vec<Vec<u32>>,
    pub compat: Graph,
    /// `srg_check` of the source; callers may warn when it is not
    /// `SRG(v, k(k-1), λ, μ)`.
    pub srg: Option<SrgParams>,
}

impl CliqueGraphResult {
    /// Whether the source has the parameters of a point graph with lines of
    /// size `k`.
    pub fn fits_k(&self) -> bool {
        self.srg.is_some_and(|p| p.d == (self.k * (self.k - 1)) as u64)
    }
}

fn meet(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

pub fn clique_graph(g: &Graph, k: usize) -> CliqueGraphResult {
    let cliques = k_cliques(g, k);
    let rows: Vec<Vec<usize>> = (0..cliques.len())
        .into_par_iter()
        .map(|i| (i + 1..cliques.len()).filter(|&j| meet(&cliques[i], &cliques[j]) <= 1).collect())
        .collect();
    let compat = Graph::from_edges(cliques.len(), rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |&j| (i, j))));
    CliqueGraphResult { source: g.clone(), k, cliques, compat, srg: srg_check(g) }
}

struct Cover<'a> {
    /// Edge indices of each clique.
    clique_edges: &'a [Vec<usize>],
    /// Cliques through each edge.
    edge_cliques: &'a [Vec<u32>],
    covered: Vec<bool>,
    alive: Vec<bool>,
    /// Live cliques through each edge.
    options: Vec<usize>,
    chosen: Vec<u32>,
    found: Vec<Vec<u32>>,
    limit: usize,
}

impl Cover<'_> {
    /// Takes clique `c`; returns the cliques it killed.
    fn take(&mut self, c: u32) -> Vec<u32> {
        let mut killed = Vec::new();
        for &e in &self.clique_edges[c as usize] {
            self.covered[e] = true;
            for &o in &self.edge_cliques[e] {
                if self.alive[o as usize] {
                    self.alive[o as usize] = false;
                    killed.push(o);
                    for &f in &self.clique_edges[o as usize] {
                        self.options[f] -= 1;
                    }
                }
            }
        }
        self.chosen.push(c);
        killed
    }

    fn untake(&mut self, c: u32, killed: Vec<u32>) {
        self.chosen.pop();
        for &o in killed.iter().rev() {
            self.alive[o as usize] = true;
            for &f in &self.clique_edges[o as usize] {
                self.options[f] += 1;
            }
        }
        for &e in &self.clique_edges[c as usize] {
            self.covered[e] = false;
        }
    }

    /// Uncovered edge with the fewest live cliques; `None` when all covered.
    fn pick(&self) -> Option<usize> {
        (0..self.covered.len()).filter(|&e| !self.covered[e]).min_by_key(|&e| self.options[e])
    }

    fn search(&mut self) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(e) = self.pick() else {
            let mut sol = self.chosen.clone();
            sol.sort_unstable();
            self.found.push(sol);
            return;
        };
        if self.options[e] == 0 {
            return;
        }
        let opts: Vec<u32> = self.edge_cliques[e].iter().copied().filter(|&c| self.alive[c as usize]).collect();
        for c in opts {
            let killed = self.take(c);
            self.search();
            self.untake(c, killed);
        }
    }
}

/// Every configuration with point graph `g` and lines of size `k`, at most
/// `limit` of them, in a deterministic order.
pub fn find_configurations(g: &Graph, k: usize, limit: Option<usize>) -> Vec<Configuration> {
    let cliques = k_cliques(g, k);
    find_configurations_from(g, k, &cliques, limit)
}

pub fn find_configurations_from(g: &Graph, k: usize, cliques: &[Vec<u32>], limit: Option<usize>) -> Vec<Configuration> {
    let limit = limit.unwrap_or(usize::MAX);
    let v = g.order();
    if k < 2 || limit == 0 {
        return Vec::new();
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let clique_edges: Vec<Vec<usize>> = cliques
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(k * (k - 1) / 2);
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    out.push(index[&(a as usize, b as usize)]);
                }
            }
            out
        })
        .collect();
    let mut edge_cliques = vec![Vec::new(); edges.len()];
    for (c, es) in clique_edges.iter().enumerate() {
        for &e in es {
            edge_cliques[e].push(c as u32);
        }
    }
    let fresh = || Cover {
        clique_edges: &clique_edges,
        edge_cliques: &edge_cliques,
        covered: vec![false; edges.len()],
        alive: vec![true; cliques.len()],
        options: edge_cliques.iter().map(Vec::len).collect(),
        chosen: Vec::new(),
        found: Vec::new(),
        limit,
    };
    let root = fresh();
    let solutions: Vec<Vec<u32>> = match root.pick() {
        None => vec![Vec::new()],
        Some(e) => edge_cliques[e]
            .par_iter()
            .map(|&c| {
                let mut cover = fresh();
                let killed = cover.take(c);
                cover.search();
                cover.untake(c, killed);
                cover.found
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .take(limit)
            .collect(),
    };
    solutions
        .into_iter()
        .map(|sol| {
            let lines = sol.iter().map(|&c| cliques[c as usize].clone()).collect();
            let c = Configuration::new(v, k, lines).expect("clique vertices are points of g");
            assert_eq!(c.associated_graph(Side::Point).expect("exact cover is a configuration"), *g);
            c
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsoClass {
    pub representative: Configuration,
    pub form: CanonicalForm,
    pub count: usize,
    pub aut_order: u128,
    pub self_dual: bool,
}

/// Groups configurations by canonical form, in order of first appearance.
pub fn reduce_isomorphs(configs: &[Configuration]) -> Result<Vec<IsoClass>> {
    let forms: Vec<CanonicalForm> = configs.par_iter().map(canonical_form).collect::<Result<_>>()?;
    let mut order: Vec<usize> = Vec::new();
    let mut counts: HashMap<&CanonicalForm, (usize, usize)> = HashMap::new();
    for (i, f) in forms.iter().enumerate() {
        counts
            .entry(f)
            .and_modify(|(_, n)| *n += 1)
            .or_insert_with(|| {
                order.push(i);
                (i, 1)
            });
    }
    order
        .par_iter()
        .map(|&i| {
            let c = &configs[i];
            let a = analyse(c)?;
            let dual_form = canonical_form(&c.dual()?)?;
            Ok(IsoClass {
                representative: c.clone(),
                self_dual: dual_form == a.form,
                count: counts[&forms[i]].1,
                form: forms[i].clone(),
                aut_order: a.aut_order,
            })
        })
        .collect()
}
