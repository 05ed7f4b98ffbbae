use num_bigint::BigInt;
use num_traits::Zero;

/// Rank over `GF(p)` for a prime `p < 2^32`.
pub fn modular_rank(m: &[Vec<u8>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x as u64 % p).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in c..cols {
                row[j] = (row[j] + p - f * pivot_row[j] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Exact rank over the rationals by fraction-free elimination.
pub fn bareiss_rank(m: &[Vec<u8>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pr = &top[rank];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let t = &pr[c] * &row[j] - &row[c] * &pr[j];
                row[j] = t / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pr[c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank over Q with exact fractions, as an independent reference.
    fn rational_rank(m: &[Vec<u8>]) -> usize {
        use num_bigint::BigInt;
        use num_traits::Signed;
        type Q = (BigInt, BigInt);
        let norm = |(n, d): Q| -> Q {
            let g = gcd(n.abs(), d.abs());
            let (n, d) = if g.is_zero() { (n, d) } else { (n / &g, d / &g) };
            if d.is_negative() { (-n, -d) } else { (n, d) }
        };
        fn gcd(a: BigInt, b: BigInt) -> BigInt {
            if b.is_zero() { a } else { let r = &a % &b; gcd(b, r) }
        }
        let mut a: Vec<Vec<Q>> = m
            .iter()
            .map(|r| r.iter().map(|&x| (BigInt::from(x), BigInt::from(1))).collect())
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..a.len()).find(|&i| !a[i][c].0.is_zero()) else { continue };
            a.swap(rank, p);
            let pv = a[rank][c].clone();
            for i in rank + 1..a.len() {
                let f = norm((&a[i][c].0 * &pv.1, &a[i][c].1 * &pv.0));
                for j in c..cols {
                    let s = &a[rank][j];
                    let prod = (&f.0 * &s.0, &f.1 * &s.1);
                    let cur = &a[i][j];
                    a[i][j] = norm((&cur.0 * &prod.1 - &prod.0 * &cur.1, &cur.1 * &prod.1));
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_cases() {
        assert_eq!(bareiss_rank(&[vec![1, 1], vec![1, 1]]), 1);
        assert_eq!(bareiss_rank(&[vec![0, 1], vec![1, 0]]), 2);
        // singular mod 2 only
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(modular_rank(&m, 2), 2);
        assert_eq!(modular_rank(&m, 2_147_483_647), 3);
        assert_eq!(bareiss_rank(&m), 3);
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            n in 1usize..8,
            cells in proptest::collection::vec(0u8..3, 64),
        ) {
            let m: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| cells[i * 8 + j]).collect()).collect();
            let r = rational_rank(&m);
            prop_assert_eq!(bareiss_rank(&m), r);
            prop_assert!(modular_rank(&m, 2_147_483_629) <= r);
        }
    }
}
