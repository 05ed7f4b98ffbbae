//! Finite fields `GF(p^e)` for `q <= 2^16`.
//!
//! Elements are integers in `0..q`; the element `Σ c_i p^i` stands for the
//! residue `Σ c_i x^i` modulo the defining polynomial. The defining polynomial
//! is the monic irreducible of degree `e` whose lower coefficients
//! `(c_0, ..., c_{e-1})`, read as the base-`p` integer `Σ c_i p^i`, are
//! smallest. For `GF(9)` that is `x^2 + 1`; for `GF(4)` it is `x^2 + x + 1`.

use std::fmt;

use crate::{Error, Result};

pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone)]
pub struct FiniteField {
    q: u32,
    p: u32,
    e: u32,
    /// Coefficients of the defining polynomial, constant term first, monic.
    modulus: Vec<u32>,
    /// `exp[i] = ω^i` for a fixed primitive element `ω`, `i in 0..q-1`.
    exp: Vec<u32>,
    /// `log[x]` for `x != 0`; `log[0]` is unused.
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

/// Returns `(p, e)` with `q = p^e`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Polynomials over `Z_p` as coefficient vectors, constant term first.
fn poly_trim(a: &mut Vec<u32>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inverse(m[dm], p);
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let factor = r[dr] * lead_inv % p;
        for i in 0..=dm {
            let idx = dr - dm + i;
            r[idx] = (r[idx] + p - factor * m[i] % p) % p;
        }
        poly_trim(&mut r);
        if r.len() - 1 < dm {
            break;
        }
    }
    r
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2)
    let mut result = 1u64;
    let mut base = (a % p) as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

fn monic_with_tail(tail: u32, degree: u32, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(degree as usize + 1);
    let mut t = tail;
    for _ in 0..degree {
        coeffs.push(t % p);
        t /= p;
    }
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let degree = (f.len() - 1) as u32;
    for d in 1..=degree / 2 {
        for tail in 0..p.pow(d) {
            let g = monic_with_tail(tail, d, p);
            let r = poly_rem(f, &g, p);
            if r.len() == 1 && r[0] == 0 {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds `GF(q)` with the least irreducible defining polynomial.
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(e))
                .map(|tail| monic_with_tail(tail, e, p))
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        let mut field = FiniteField {
            q,
            p,
            e,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(field)
    }

    fn decode(&self, x: u32) -> Vec<u32> {
        let mut c = Vec::with_capacity(self.e as usize);
        let mut t = x;
        for _ in 0..self.e {
            c.push(t % self.p);
            t /= self.p;
        }
        c
    }

    fn encode(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &ci| acc * self.p + ci)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u32; ca.len() + cb.len()];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.e as usize, 0);
        self.encode(&r)
    }

    fn build_log_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![0u32; self.q as usize];
        for g in 2..self.q.max(3) {
            if g >= self.q {
                break;
            }
            let mut x = 1u32;
            let mut order = 0usize;
            loop {
                exp[order] = x;
                order += 1;
                x = self.slow_mul(x, g);
                if x == 1 || order == n {
                    break;
                }
            }
            if x == 1 && order == n {
                break;
            }
        }
        if self.q == 2 {
            exp[0] = 1;
        }
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element whose powers index the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut result = 0;
        let mut place = 1;
        for _ in 0..self.e {
            result += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        result
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.e == 1 {
            return (self.p - a) % self.p;
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut result = 0;
        let mut place = 1;
        for _ in 0..self.e {
            result += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        result
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let n = self.q - 1;
        let l = self.log[a as usize];
        self.exp[((n - l) % n) as usize]
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (k % n)) % n) as usize]
    }

    /// Discrete logarithm to the base [`primitive_element`](Self::primitive_element).
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `ω^i` for the primitive element `ω`.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Whether `a` is a nonzero square.
    pub fn is_nonzero_square(&self, a: u32) -> bool {
        match self.log(a) {
            None => false,
            Some(_) if self.p == 2 => true,
            Some(l) => l % 2 == 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &FiniteField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                // multiplication agrees with polynomial arithmetic
                assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_hold_exhaustively_up_to_16() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            check_axioms(&FiniteField::new(q).unwrap());
        }
    }

    #[test]
    fn gf2_is_the_prime_field() {
        let f = FiniteField::new(2).unwrap();
        assert_eq!(f.elements().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf9_uses_x2_plus_1() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!((1..9).filter(|&a| f.mul(a, f.inv(a)) == 1).count(), 8);
        // x * x = -1
        assert_eq!(f.mul(3, 3), f.neg(1));
    }

    #[test]
    fn gf4_and_gf8_moduli() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(matches!(FiniteField::new(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(FiniteField::new(1), Err(Error::NotPrimePower(1))));
        assert!(matches!(FiniteField::new(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn primitive_element_generates() {
        for q in [3, 4, 5, 9, 16, 25, 27, 49, 64, 81, 121] {
            let f = FiniteField::new(q).unwrap();
            let mut seen = vec![false; q as usize];
            for i in 0..q - 1 {
                seen[f.exp(i) as usize] = true;
            }
            assert_eq!(seen.iter().filter(|&&s| s).count() as u64, q - 1);
        }
    }

    #[test]
    fn squares_mod_13() {
        let f = FiniteField::new(13).unwrap();
        let squares: Vec<u32> = (1..13).filter(|&a| f.is_nonzero_square(a)).collect();
        assert_eq!(squares, vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn prime_power_factorisation() {
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(31), Some((31, 1)));
        assert_eq!(prime_power(100), None);
    }
}
