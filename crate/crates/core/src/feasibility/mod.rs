//! Parameter arithmetic for strongly regular graphs and configurations:
//! spectra, the determinant-square and clique conditions, the rook-graph
//! exclusion, the standard SRG feasibility battery, and the table of
//! feasible primitive parameters.

mod table;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graphs::SrgParams;
use crate::incidence::SrcParams;
use crate::{Error, Result};

pub use table::{enumerate_feasible, render_table, ExclusionList, FeasibilityVerdict, Overall, Primitivity, Reason};

/// The two non-principal eigenvalues of the point graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Eigenvalues {
    Integral { r: i64, s: i64 },
    /// `r, s = (sum ± √disc) / 2` with `disc` not a perfect square.
    Conjugate { sum: i64, disc: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigendata {
    pub eigenvalues: Eigenvalues,
    pub f: u64,
    pub g: u64,
}

impl Eigendata {
    pub fn r(&self) -> f64 {
        match self.eigenvalues {
            Eigenvalues::Integral { r, .. } => r as f64,
            Eigenvalues::Conjugate { sum, disc } => (sum as f64 + (disc as f64).sqrt()) / 2.0,
        }
    }

    pub fn s(&self) -> f64 {
        match self.eigenvalues {
            Eigenvalues::Integral { s, .. } => s as f64,
            Eigenvalues::Conjugate { sum, disc } => (sum as f64 - (disc as f64).sqrt()) / 2.0,
        }
    }

    pub fn integral(&self) -> Option<(i64, i64)> {
        match self.eigenvalues {
            Eigenvalues::Integral { r, s } => Some((r, s)),
            Eigenvalues::Conjugate { .. } => None,
        }
    }
}

fn isqrt_exact(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).find(|&x| x >= 0 && x * x == n)
}

/// Spectrum of `SRG(v, d, λ, μ)` for primitive parameters.
pub fn srg_eigendata(p: SrgParams) -> Result<Eigendata> {
    if !p.identity_holds() {
        return Err(Error::IdentityViolated);
    }
    if p.mu == 0 {
        return Err(Error::InconsistentParameters("μ = 0 has no two-eigenvalue spectrum".into()));
    }
    let (v, d, l, m) = (p.v as i64, p.d as i64, p.lambda as i64, p.mu as i64);
    let sum = l - m;
    let disc = sum * sum + 4 * (d - m);
    let num = sum * (v - 1) + 2 * d;
    let (eigenvalues, t) = match isqrt_exact(disc) {
        Some(root) => {
            if (sum + root) % 2 != 0 || root == 0 || num % root != 0 {
                return Err(Error::NonIntegralMultiplicity);
            }
            let r = (sum + root) / 2;
            (Eigenvalues::Integral { r, s: r - root }, num / root)
        }
        None if num == 0 => (Eigenvalues::Conjugate { sum, disc }, 0),
        None => return Err(Error::NonIntegralMultiplicity),
    };
    if (v - 1 - t) % 2 != 0 || v - 1 - t < 0 || v - 1 + t < 0 {
        return Err(Error::NonIntegralMultiplicity);
    }
    Ok(Eigendata { eigenvalues, f: ((v - 1 - t) / 2) as u64, g: ((v - 1 + t) / 2) as u64 })
}

/// Spectrum of the point graph `SRG(v, k(k-1), λ, μ)`.
pub fn eigendata(p: SrcParams) -> Result<Eigendata> {
    srg_eigendata(p.srg())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SquareVerdict {
    Pass,
    /// `prime` appears to an odd `exponent` in `(r+k)^f (s+k)^g`.
    Fail { prime: u64, exponent: u64 },
    /// The product is negative.
    FailNegative,
}

impl SquareVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, SquareVerdict::Pass)
    }
}

impl fmt::Display for SquareVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareVerdict::Pass => f.write_str("pass"),
            SquareVerdict::Fail { prime, exponent } => write!(f, "fail ({prime}^{exponent})"),
            SquareVerdict::FailNegative => f.write_str("fail (negative)"),
        }
    }
}

/// Prime factorisation of `n > 0` by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decides whether `(r+k)^f (s+k)^g` is a perfect square from the parity
/// of prime exponents. A zero factor gives `0`, which is a square.
pub fn square_condition(p: SrcParams) -> Result<SquareVerdict> {
    let e = eigendata(p)?;
    let k = p.k as i64;
    // (base, multiplicity) pairs whose product is the determinant
    let factors: Vec<(i64, u64)> = match e.eigenvalues {
        Eigenvalues::Integral { r, s } => vec![(r + k, e.f), (s + k, e.g)],
        Eigenvalues::Conjugate { .. } => {
            let d = k * (k - 1);
            let (l, m) = (p.lambda as i64, p.mu as i64);
            vec![(k * k + k * (l - m) + m - d, e.f)]
        }
    };
    if factors.iter().any(|&(b, _)| b == 0) {
        return Ok(SquareVerdict::Pass);
    }
    let negative = factors.iter().filter(|&&(b, m)| b < 0 && m % 2 == 1).count() % 2 == 1;
    let mut exps: std::collections::BTreeMap<u64, u64> = Default::default();
    for &(b, m) in &factors {
        for (q, x) in factorize(b.unsigned_abs()) {
            *exps.entry(q).or_insert(0) += x * m;
        }
    }
    if let Some((&prime, &exponent)) = exps.iter().find(|(_, &x)| x % 2 == 1) {
        return Ok(SquareVerdict::Fail { prime, exponent });
    }
    Ok(if negative { SquareVerdict::FailNegative } else { SquareVerdict::Pass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliqueVerdict {
    Fail,
    EqualityPg,
    StrictPass,
}

/// Compares `(v - k)(λ + 1)` with `k(k-1)^3`.
pub fn clique_condition(p: SrcParams) -> CliqueVerdict {
    let lhs = (p.v as i128 - p.k as i128) * (p.lambda as i128 + 1);
    let km1 = p.k as i128 - 1;
    let rhs = p.k as i128 * km1 * km1 * km1;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => CliqueVerdict::Fail,
        std::cmp::Ordering::Equal => CliqueVerdict::EqualityPg,
        std::cmp::Ordering::Greater => CliqueVerdict::StrictPass,
    }
}

/// Parameters whose point graph would have to be the rook graph
/// `R_n`, `n = C(k,2) + 1`; for `k > 3` the rook graph is the only such graph
/// and it carries no configuration.
pub fn rook_exclusion(p: SrcParams) -> bool {
    if p.k <= 3 {
        return false;
    }
    let c = p.k * (p.k - 1) / 2;
    p.v == (c + 1) * (c + 1) && p.lambda + 1 == c && p.mu == 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SrgFailure {
    IdentityViolated,
    /// Trivial or out-of-range parameters (`d = 0`, `d ≥ v - 1`, `λ ≥ d`, ...).
    Degenerate,
    NonIntegralMultiplicity,
    ConferenceNotSumOfTwoSquares,
    Krein,
    AbsoluteBound,
}

impl fmt::Display for SrgFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SrgFailure::IdentityViolated => "identity violated",
            SrgFailure::Degenerate => "degenerate parameters",
            SrgFailure::NonIntegralMultiplicity => "non-integral multiplicities",
            SrgFailure::ConferenceNotSumOfTwoSquares => "conference graph with v not a sum of two squares",
            SrgFailure::Krein => "Krein condition",
            SrgFailure::AbsoluteBound => "absolute bound",
        })
    }
}

fn sum_of_two_squares(v: u64) -> bool {
    (0..).take_while(|a| a * a <= v).any(|a| isqrt_exact((v - a * a) as i64).is_some())
}

/// The standard necessary conditions for `SRG(v, d, λ, μ)`. Passing means
/// the parameters are not ruled out by these checks.
pub fn srg_param_feasible(p: SrgParams) -> std::result::Result<(), SrgFailure> {
    if p.d == 0 || p.d + 1 >= p.v || p.lambda >= p.d || p.mu > p.d {
        return Err(SrgFailure::Degenerate);
    }
    if !p.identity_holds() {
        return Err(SrgFailure::IdentityViolated);
    }
    if p.mu == 0 {
        // disjoint cliques
        return if p.lambda + 1 == p.d && p.v.is_multiple_of(p.d + 1) { Ok(()) } else { Err(SrgFailure::Degenerate) };
    }
    if p.mu == p.d {
        // complete multipartite
        return if p.v.is_multiple_of(p.v - p.d) { Ok(()) } else { Err(SrgFailure::Degenerate) };
    }
    // the complement needs λ' ≥ 0 and μ' ≥ 0
    if p.v + p.mu < 2 * p.d + 2 || p.v + p.lambda < 2 * p.d {
        return Err(SrgFailure::Degenerate);
    }
    let e = srg_eigendata(p).map_err(|_| SrgFailure::NonIntegralMultiplicity)?;
    let (f, g) = (e.f as i128, e.g as i128);
    if f == 0 || g == 0 {
        return Err(SrgFailure::NonIntegralMultiplicity);
    }
    let v = p.v as i128;
    match e.eigenvalues {
        Eigenvalues::Conjugate { .. } => {
            if !sum_of_two_squares(p.v) {
                return Err(SrgFailure::ConferenceNotSumOfTwoSquares);
            }
        }
        Eigenvalues::Integral { r, s } => {
            let (r, s, d) = (r as i128, s as i128, p.d as i128);
            let k1 = (r + 1) * (d + r + 2 * r * s) <= (d + r) * (s + 1) * (s + 1);
            let k2 = (s + 1) * (d + s + 2 * r * s) <= (d + s) * (r + 1) * (r + 1);
            if !(k1 && k2) {
                return Err(SrgFailure::Krein);
            }
        }
    }
    if v > f * (f + 3) / 2 || v > g * (g + 3) / 2 {
        return Err(SrgFailure::AbsoluteBound);
    }
    Ok(())
}

/// `pg(s, t, α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PgParams {
    pub s: u64,
    pub t: u64,
    pub alpha: u64,
}

/// Point graph (or, on the line side, line graph) parameters of a partial
/// geometry.
pub fn pg_graph_params(pg: PgParams, side: crate::incidence::Side) -> Result<SrgParams> {
    let (s, t) = match side {
        crate::incidence::Side::Point => (pg.s, pg.t),
        crate::incidence::Side::Line => (pg.t, pg.s),
    };
    let a = pg.alpha;
    if a == 0 || a > s.min(t) + 1 {
        return Err(Error::InvalidSpec(format!("α = {a} out of range for pg({s},{t},α)")));
    }
    let num = (s + 1) * (s * t + a);
    if !num.is_multiple_of(a) {
        return Err(Error::NonIntegralPointCount);
    }
    Ok(SrgParams::new(num / a, s * (t + 1), s - 1 + t * (a - 1), a * (t + 1)))
}
