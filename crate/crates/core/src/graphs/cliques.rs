use rayon::prelude::*;

use super::{bit_iter, Graph};

/// All cliques of exactly `k` vertices, each sorted ascending, the list in
/// lexicographic order.
///
/// Every clique is produced once, from its smallest vertex, by extending with
/// strictly larger common neighbours. Roots are processed in parallel and
/// concatenated in root order, which is already the lexicographic order.
pub fn k_cliques(g: &Graph, k: usize) -> Vec<Vec<u32>> {
    let n = g.order();
    if k == 0 {
        return Vec::new();
    }
    if k == 1 {
        return (0..n as u32).map(|v| vec![v]).collect();
    }
    let words = g.words;
    (0..n)
        .into_par_iter()
        .map(|root| {
            let mut out = Vec::new();
            let mut cand: Vec<u64> = g.row(root).to_vec();
            mask_at_most(&mut cand, root);
            let mut stack = vec![root as u32];
            extend(g, k, words, &cand, &mut stack, &mut out);
            out
        })
        .flatten()
        .collect()
}

/// Clears bits `0..=v`.
fn mask_at_most(set: &mut [u64], v: usize) {
    for (i, w) in set.iter_mut().enumerate() {
        let lo = i * 64;
        if v >= lo + 63 {
            *w = 0;
        } else if v >= lo {
            *w &= !((1u64 << (v - lo + 1)) - 1);
        }
    }
}

fn extend(g: &Graph, k: usize, words: usize, cand: &[u64], stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if stack.len() == k {
        out.push(stack.clone());
        return;
    }
    let needed = k - stack.len();
    if cand.iter().map(|w| w.count_ones() as usize).sum::<usize>() < needed {
        return;
    }
    let mut next = vec![0u64; words];
    for v in bit_iter(cand) {
        if needed == 1 {
            stack.push(v as u32);
            out.push(stack.clone());
            stack.pop();
            continue;
        }
        for ((dst, &c), &r) in next.iter_mut().zip(cand).zip(g.row(v)) {
            *dst = c & r;
        }
        mask_at_most(&mut next, v);
        stack.push(v as u32);
        extend(g, k, words, &next, stack, out);
        stack.pop();
    }
}

/// Number of triangles, counted edge by edge from common neighbourhoods.
pub fn count_triangles(g: &Graph) -> usize {
    g.edges().map(|(a, b)| g.common_neighbors(a, b)).sum::<usize>() / 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::GraphSpec;
    use proptest::prelude::*;

    fn brute_force(g: &Graph, k: usize) -> Vec<Vec<u32>> {
        let n = g.order();
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        if k > n {
            return out;
        }
        loop {
            if idx.iter().enumerate().all(|(i, &a)| idx[i + 1..].iter().all(|&b| g.has_edge(a, b))) {
                out.push(idx.iter().map(|&x| x as u32).collect());
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] < n - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn paley_13_triangles() {
        let g = GraphSpec::Paley(13).build().unwrap();
        assert_eq!(k_cliques(&g, 3).len(), 26);
        assert_eq!(count_triangles(&g), 26);
    }

    #[test]
    fn shrikhande_triangles() {
        let g = GraphSpec::Shrikhande.build().unwrap();
        assert_eq!(k_cliques(&g, 3).len(), 32);
    }

    #[test]
    fn rook_4_triangles() {
        let g = GraphSpec::Rook(4).build().unwrap();
        assert_eq!(k_cliques(&g, 3).len(), 32);
        assert_eq!(count_triangles(&g), 32);
    }

    #[test]
    fn across_word_boundaries() {
        let g = GraphSpec::Complement(Box::new(GraphSpec::CyclicLatinSquare(9))).build().unwrap();
        assert_eq!(g.order(), 81);
        let tri = k_cliques(&g, 3);
        assert_eq!(tri.len(), count_triangles(&g));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 4usize..14, density in 0.2f64..0.9, seed in any::<u64>(), k in 2usize..5) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut g = Graph::empty(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(density) {
                        g.add_edge(a, b);
                    }
                }
            }
            let fast = k_cliques(&g, k);
            prop_assert_eq!(&fast, &brute_force(&g, k));
            if k == 3 {
                prop_assert_eq!(fast.len(), count_triangles(&g));
            }
            for c in &fast {
                prop_assert!(c.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
