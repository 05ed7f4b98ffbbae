//! Ordered partitions of a vertex set and equitable refinement.
//!
//! Cells are contiguous ranges of `lab`. Everything that feeds the returned
//! trace hash (cell positions, split counts, fragment sizes) is determined by
//! the partition structure alone, so the hash is an isomorphism invariant.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub lab: Vec<u32>,
    /// Start of the cell holding each vertex.
    cell: Vec<u32>,
    /// Length of the cell starting at each position; only meaningful at starts.
    len: Vec<u32>,
    ncells: usize,
}

pub(crate) fn mix(h: u64, x: u64) -> u64 {
    // splitmix64 finaliser over the running state
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Partition {
    /// Consecutive cells of the given sizes over vertices `0..n` in order.
    pub fn with_cells(sizes: &[usize]) -> Partition {
        let n: usize = sizes.iter().sum();
        let mut p = Partition {
            lab: (0..n as u32).collect(),
            cell: vec![0; n],
            len: vec![0; n],
            ncells: 0,
        };
        let mut s = 0;
        for &size in sizes.iter().filter(|&&z| z > 0) {
            p.len[s] = size as u32;
            for x in s..s + size {
                p.cell[x] = s as u32;
            }
            p.ncells += 1;
            s += size;
        }
        p
    }

    pub fn n(&self) -> usize {
        self.lab.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.ncells == self.lab.len()
    }

    pub fn cell_starts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.ncells);
        let mut s = 0;
        while s < self.n() {
            out.push(s as u32);
            s += self.len[s] as usize;
        }
        out
    }

    /// First smallest non-singleton cell, as `(start, len)`.
    pub fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let l = self.len[s] as usize;
            if l > 1 && best.is_none_or(|(_, bl)| l < bl) {
                best = Some((s, l));
                if l == 2 {
                    break;
                }
            }
            s += l;
        }
        best
    }

    /// Splits `x` off the front of its cell; returns the start of `{x}`.
    pub fn individualize(&mut self, x: u32) -> usize {
        let s = self.cell[x as usize] as usize;
        let l = self.len[s] as usize;
        let at = self.lab[s..s + l].iter().position(|&y| y == x).expect("vertex is in its cell") + s;
        self.lab.swap(s, at);
        self.len[s] = 1;
        self.len[s + 1] = (l - 1) as u32;
        for i in s + 1..s + l {
            self.cell[self.lab[i] as usize] = (s + 1) as u32;
        }
        self.ncells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting from the given splitter cells. Returns a trace hash.
    pub fn refine(&mut self, adj: &[Vec<u32>], splitters: &[u32]) -> u64 {
        let n = self.n();
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &s in splitters {
            if !in_queue[s as usize] {
                in_queue[s as usize] = true;
                queue.push_back(s);
            }
        }
        let mut cnt = vec![0u32; n];
        let mut touched: Vec<u32> = Vec::new();
        let mut cells: Vec<u32> = Vec::new();
        let mut hash = 0x5eed_u64;
        while let Some(w) = queue.pop_front() {
            if self.is_discrete() {
                break;
            }
            let w = w as usize;
            in_queue[w] = false;
            for i in w..w + self.len[w] as usize {
                for &y in &adj[self.lab[i] as usize] {
                    if cnt[y as usize] == 0 {
                        touched.push(y);
                    }
                    cnt[y as usize] += 1;
                }
            }
            cells.clear();
            cells.extend(touched.iter().map(|&y| self.cell[y as usize]));
            cells.sort_unstable();
            cells.dedup();
            hash = mix(mix(hash, w as u64), cells.len() as u64);
            for &s in &cells {
                let s = s as usize;
                let l = self.len[s] as usize;
                let seg = &mut self.lab[s..s + l];
                seg.sort_unstable_by_key(|&x| cnt[x as usize]);
                let lo = cnt[seg[0] as usize];
                let hi = cnt[seg[l - 1] as usize];
                if lo == hi {
                    hash = mix(mix(hash, s as u64), lo as u64);
                    continue;
                }
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut f = s;
                for i in s + 1..=s + l {
                    if i == s + l || cnt[self.lab[i] as usize] != cnt[self.lab[f] as usize] {
                        frags.push((f, i - f));
                        f = i;
                    }
                }
                for &(f, fl) in &frags {
                    hash = mix(mix(mix(hash, f as u64), cnt[self.lab[f] as usize] as u64), fl as u64);
                    self.len[f] = fl as u32;
                    for i in f..f + fl {
                        self.cell[self.lab[i] as usize] = f as u32;
                    }
                }
                self.ncells += frags.len() - 1;
                if in_queue[s] {
                    for &(f, _) in &frags[1..] {
                        in_queue[f] = true;
                        queue.push_back(f as u32);
                    }
                } else {
                    let largest = frags
                        .iter()
                        .enumerate()
                        .max_by(|a, b| a.1 .1.cmp(&b.1 .1).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .expect("at least two fragments");
                    for (i, &(f, _)) in frags.iter().enumerate() {
                        if i != largest {
                            in_queue[f] = true;
                            queue.push_back(f as u32);
                        }
                    }
                }
            }
            for &y in &touched {
                cnt[y as usize] = 0;
            }
            touched.clear();
        }
        mix(hash, self.ncells as u64)
    }
}
