//! Canonical labelling of configurations through their two-coloured
//! point/line incidence graph.
//!
//! The search individualizes vertices of the first smallest non-singleton
//! cell, refines to an equitable partition, and compares leaves by
//! `(trace path, certificate)`. Automorphisms are collected whenever two
//! leaves carry the same key; the group order is the product of the orbit
//! lengths of the individualized vertices along the first path.

mod refine;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::incidence::Configuration;
use crate::Result;
use refine::{mix, Partition};

/// Canonical incidence structure; equal forms mean isomorphic configurations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub v: usize,
    pub b: usize,
    pub k: usize,
    /// Point labels of each canonical line in turn, little-endian `u32`.
    pub bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        let mut s = format!("{:x}.{:x}.{:x}:", self.v, self.b, self.k);
        for byte in &self.bytes {
            s.push_str(&format!("{byte:02x}"));
        }
        s
    }

    /// The configuration spelled out by this form.
    pub fn to_configuration(&self) -> Result<Configuration> {
        let labels: Vec<u32> = self
            .bytes
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
            .collect();
        let lines = labels.chunks(self.k.max(1)).map(<[u32]>::to_vec).collect();
        Configuration::new(self.v, self.k, lines)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

/// Everything the search produces in one pass.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub form: CanonicalForm,
    pub aut_order: u128,
    /// Point permutations generating the automorphism group.
    pub generators: Vec<Vec<u32>>,
    /// `labelling[p]` is the canonical label of point `p`.
    pub labelling: Vec<u32>,
}

pub fn analyse(c: &Configuration) -> Result<Analysis> {
    c.validate_for_iso()?;
    Ok(Search::new(c).run())
}

pub fn canonical_form(c: &Configuration) -> Result<CanonicalForm> {
    Ok(analyse(c)?.form)
}

/// Order of the group of incidence-preserving point/line permutation pairs.
pub fn aut_order(c: &Configuration) -> Result<u128> {
    Ok(analyse(c)?.aut_order)
}

pub fn is_isomorphic(a: &Configuration, b: &Configuration) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Whether the configuration is isomorphic to its dual.
pub fn is_self_dual(c: &Configuration) -> Result<bool> {
    Ok(canonical_form(c)? == canonical_form(&c.dual()?)?)
}

impl Configuration {
    fn validate_for_iso(&self) -> Result<()> {
        self.require_valid()
    }
}

struct Leaf {
    inv: Vec<u64>,
    cert: Vec<u32>,
    lab: Vec<u32>,
    path: Vec<u32>,
}

struct Search {
    v: usize,
    k: usize,
    adj: Vec<Vec<u32>>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<u32>>,
    order: u128,
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (big, small) = if self.size[a as usize] >= self.size[b as usize] { (a, b) } else { (b, a) };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
    }

    fn class_size(&mut self, x: u32) -> usize {
        let r = self.find(x);
        self.size[r as usize] as usize
    }
}

/// Orbits of the generators that fix every vertex of `path`.
struct Orbits {
    uf: UnionFind,
    seen: usize,
}

impl Search {
    fn new(c: &Configuration) -> Search {
        let v = c.v();
        let b = c.lines().len();
        let mut adj = vec![Vec::new(); v + b];
        for (i, line) in c.lines().iter().enumerate() {
            for &p in line {
                adj[p as usize].push((v + i) as u32);
                adj[v + i].push(p);
            }
        }
        Search { v, k: c.k(), adj, first: None, best: None, gens: Vec::new(), order: 1 }
    }

    fn run(mut self) -> Analysis {
        let n = self.adj.len();
        let mut root = Partition::with_cells(&[self.v, n - self.v]);
        let starts = root.cell_starts();
        let h = root.refine(&self.adj, &starts);
        let mut inv = vec![h];
        let mut path = Vec::new();
        self.visit(root, &mut inv, &mut path, true);
        let best = self.best.expect("search reaches a leaf");
        let mut bytes = Vec::with_capacity(best.cert.len() * 4);
        for x in &best.cert {
            bytes.extend_from_slice(&x.to_le_bytes());
        }
        let mut labelling = vec![0u32; self.v];
        for (i, &x) in best.lab.iter().enumerate().take(self.v) {
            labelling[x as usize] = i as u32;
        }
        let generators = self.gens.iter().map(|g| g[..self.v].to_vec()).collect();
        Analysis {
            form: CanonicalForm { v: self.v, b: n - self.v, k: self.k, bytes },
            aut_order: self.order,
            generators,
            labelling,
        }
    }

    fn certificate(&self, lab: &[u32]) -> Vec<u32> {
        let mut pos = vec![0u32; lab.len()];
        for (i, &x) in lab.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        let mut cert = Vec::with_capacity((lab.len() - self.v) * self.k);
        for &line in &lab[self.v..] {
            let start = cert.len();
            cert.extend(self.adj[line as usize].iter().map(|&p| pos[p as usize]));
            cert[start..].sort_unstable();
        }
        cert
    }

    fn add_generator(&mut self, from: &[u32], to: &[u32]) {
        let mut g = vec![0u32; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            g[a as usize] = b;
        }
        if g.iter().enumerate().any(|(i, &x)| i as u32 != x) {
            self.gens.push(g);
        }
    }

    /// Returns `Some(level)` to unwind to the node with that many
    /// individualized vertices.
    fn leaf(&mut self, part: &Partition, inv: &[u64], path: &[u32]) -> Option<usize> {
        let cert = self.certificate(&part.lab);
        let Some(first) = &self.first else {
            let leaf = Leaf { inv: inv.to_vec(), cert, lab: part.lab.clone(), path: path.to_vec() };
            self.best = Some(Leaf { inv: leaf.inv.clone(), cert: leaf.cert.clone(), lab: leaf.lab.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if first.inv == inv && first.cert == cert {
            let (lab, level) = (first.lab.clone(), common_prefix(&first.path, path));
            self.add_generator(&lab, &part.lab);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        if best.inv == inv && best.cert == cert {
            let (lab, level) = (best.lab.clone(), common_prefix(&best.path, path));
            self.add_generator(&lab, &part.lab);
            return Some(level);
        }
        if (inv, &cert) > (&best.inv[..], &best.cert) {
            self.best = Some(Leaf { inv: inv.to_vec(), cert, lab: part.lab.clone(), path: path.to_vec() });
        }
        None
    }

    fn orbits(&self, orb: &mut Option<Orbits>, path: &[u32]) {
        let n = self.adj.len();
        if orb.as_ref().is_some_and(|o| o.seen == self.gens.len()) {
            return;
        }
        let mut uf = UnionFind::new(n);
        for g in &self.gens {
            if path.iter().all(|&x| g[x as usize] == x) {
                for (i, &x) in g.iter().enumerate() {
                    uf.union(i as u32, x);
                }
            }
        }
        *orb = Some(Orbits { uf, seen: self.gens.len() });
    }

    fn prunable(&self, inv: &[u64]) -> bool {
        let l = inv.len();
        let first = self.first.as_ref().expect("first leaf exists off the first path");
        let best = self.best.as_ref().expect("best leaf exists off the first path");
        let eq_first = first.inv.len() >= l && first.inv[..l] == *inv;
        let below_best = *inv < best.inv[..l.min(best.inv.len())];
        !eq_first && below_best
    }

    fn visit(&mut self, part: Partition, inv: &mut Vec<u64>, path: &mut Vec<u32>, on_first: bool) -> Option<usize> {
        if part.is_discrete() {
            return self.leaf(&part, inv, path);
        }
        let level = path.len();
        let (start, len) = part.target_cell().expect("non-discrete partition has a target");
        let mut cell: Vec<u32> = part.lab[start..start + len].to_vec();
        cell.sort_unstable();
        let mut done: Vec<u32> = Vec::new();
        let mut orb: Option<Orbits> = None;
        for &w in &cell {
            self.orbits(&mut orb, path);
            let o = orb.as_mut().expect("orbits computed");
            let rw = o.uf.find(w);
            if done.iter().any(|&u| o.uf.find(u) == rw) {
                continue;
            }
            let mut child = part.clone();
            let s = child.individualize(w);
            let h = mix(child.refine(&self.adj, &[s as u32]), s as u64);
            inv.push(h);
            path.push(w);
            let first_child = on_first && done.is_empty();
            let res = if !first_child && self.prunable(inv) {
                None
            } else {
                self.visit(child, inv, path, first_child)
            };
            inv.pop();
            path.pop();
            done.push(w);
            if let Some(j) = res {
                if j < level {
                    return Some(j);
                }
            }
        }
        if on_first {
            self.orbits(&mut orb, path);
            let size = orb.as_mut().expect("orbits computed").uf.class_size(cell[0]);
            self.order *= size as u128;
        }
        None
    }
}
