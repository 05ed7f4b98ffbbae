//! Symmetric configurations: validity, associated graphs, strong regularity,
//! duality, antiflag spectra and properness.

mod rank;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graphs::{srg_check, Graph, SrgParams};
use crate::{Error, Result};

pub use rank::{bareiss_rank, modular_rank};

/// `v` points and `v` lines of size `k`. Each line is stored sorted and the
/// line list is sorted lexicographically, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Configuration {
    v: usize,
    k: usize,
    lines: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawConfiguration {
    v: usize,
    k: usize,
    lines: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawConfiguration::deserialize(d)?;
        Configuration::new(raw.v, raw.k, raw.lines).map_err(serde::de::Error::custom)
    }
}

/// A broken configuration invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    LineCount { expected: usize, found: usize },
    LineSize { line: usize, size: usize },
    RepeatedPoint { line: usize, point: u32 },
    PointDegree { point: usize, degree: usize },
    PairCoveredTwice { a: u32, b: u32, lines: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LineCount { expected, found } => write!(f, "line count: expected {expected}, found {found}"),
            Violation::LineSize { line, size } => write!(f, "line size: line {line} has {size} points"),
            Violation::RepeatedPoint { line, point } => write!(f, "line {line} repeats point {point}"),
            Violation::PointDegree { point, degree } => write!(f, "point degree: point {point} lies on {degree} lines"),
            Violation::PairCoveredTwice { a, b, lines } => {
                write!(f, "pair covered twice: {{{a},{b}}} on lines {} and {}", lines.0, lines.1)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Point,
    Line,
}

/// `(v_k; λ, μ)`: the point graph is `SRG(v, k(k-1), λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrcParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrcParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Self {
        SrcParams { v, k, lambda, mu }
    }

    /// Degree `k(k-1)` of the point graph.
    pub fn d(&self) -> u64 {
        self.k * (self.k.saturating_sub(1))
    }

    pub fn srg(&self) -> SrgParams {
        SrgParams::new(self.v, self.d(), self.lambda, self.mu)
    }

    /// `(v - 1 - k(k-1)) μ = k(k-1)(k(k-1) - 1 - λ)`.
    pub fn identity_holds(&self) -> bool {
        self.srg().identity_holds()
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.v, self.k, self.lambda, self.mu)
    }
}

impl fmt::Display for SrcParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}_{};{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeometryKind {
    PartialGeometry { alpha: usize },
    SemipartialGeometry { alpha: usize, mu: usize },
    AlphaBetaGeometry { alpha: usize, beta: usize },
    General,
}

/// Antiflag spectrum: for each value, how many antiflags `(P, ℓ)` have that
/// many points of `ℓ` collinear with `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryClass {
    pub kind: GeometryKind,
    pub spectrum: BTreeMap<usize, usize>,
}

impl GeometryClass {
    pub fn values(&self) -> Vec<usize> {
        self.spectrum.keys().copied().collect()
    }
}

impl Configuration {
    /// Sorts points within lines and lines lexicographically. Only the shape is
    /// checked here (indices in range); see [`Configuration::validate`].
    pub fn new(v: usize, k: usize, lines: Vec<Vec<u32>>) -> Result<Configuration> {
        let mut lines = lines;
        for (i, line) in lines.iter_mut().enumerate() {
            if let Some(&p) = line.iter().find(|&&p| p as usize >= v) {
                return Err(Error::InvalidConfiguration(format!("line {i} mentions point {p} but v = {v}")));
            }
            line.sort_unstable();
        }
        lines.sort();
        Ok(Configuration { v, k, lines })
    }

    /// `k` is taken from the first line.
    pub fn from_lines(v: usize, lines: Vec<Vec<u32>>) -> Result<Configuration> {
        let k = lines.first().map_or(0, Vec::len);
        Configuration::new(v, k, lines)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    /// Indices of the lines through each point.
    pub fn lines_through(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.v];
        for (i, line) in self.lines.iter().enumerate() {
            for &p in line {
                out[p as usize].push(i as u32);
            }
        }
        out
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut bad = Vec::new();
        if self.lines.len() != self.v {
            bad.push(Violation::LineCount { expected: self.v, found: self.lines.len() });
        }
        let mut degree = vec![0usize; self.v];
        let mut cover: std::collections::HashMap<(u32, u32), usize> = Default::default();
        for (i, line) in self.lines.iter().enumerate() {
            if line.len() != self.k {
                bad.push(Violation::LineSize { line: i, size: line.len() });
            }
            for w in line.windows(2) {
                if w[0] == w[1] {
                    bad.push(Violation::RepeatedPoint { line: i, point: w[0] });
                }
            }
            let mut pts = line.clone();
            pts.dedup();
            for (x, &a) in pts.iter().enumerate() {
                degree[a as usize] += 1;
                for &b in &pts[x + 1..] {
                    if let Some(first) = cover.insert((a, b), i) {
                        bad.push(Violation::PairCoveredTwice { a, b, lines: (first, i) });
                    }
                }
            }
        }
        for (point, &d) in degree.iter().enumerate() {
            if d != self.k {
                bad.push(Violation::PointDegree { point, degree: d });
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        self.validate().map_err(|v| {
            let shown: Vec<String> = v.iter().take(5).map(ToString::to_string).collect();
            let more = if v.len() > 5 { format!(" and {} more", v.len() - 5) } else { String::new() };
            Error::InvalidConfiguration(format!("{}{more}", shown.join("; ")))
        })
    }

    /// Collinearity graph on points, or concurrence graph on lines.
    pub fn associated_graph(&self, side: Side) -> Result<Graph> {
        self.require_valid()?;
        Ok(match side {
            Side::Point => self.point_graph_unchecked(),
            Side::Line => self.dual_unchecked().point_graph_unchecked(),
        })
    }

    pub(crate) fn point_graph_unchecked(&self) -> Graph {
        let mut g = Graph::empty(self.v);
        for line in &self.lines {
            for (x, &a) in line.iter().enumerate() {
                for &b in &line[x + 1..] {
                    g.add_edge(a as usize, b as usize);
                }
            }
        }
        g
    }

    /// Strong-regularity parameters, if the point graph is `SRG(v, k(k-1), λ, μ)`.
    /// The line graph is checked to carry the same parameters.
    pub fn src_check(&self) -> Result<Option<SrcParams>> {
        let pg = self.associated_graph(Side::Point)?;
        let Some(p) = srg_check(&pg) else {
            return Ok(None);
        };
        let params = SrcParams::new(p.v, self.k as u64, p.lambda, p.mu);
        if p.d != params.d() {
            return Ok(None);
        }
        let lg = self.associated_graph(Side::Line)?;
        let lp = srg_check(&lg);
        if lp != Some(p) {
            return Err(Error::TheoremViolation {
                point: p.as_tuple(),
                line: lp.map(|x| x.as_tuple()),
            });
        }
        Ok(Some(params))
    }

    /// Transposed incidence: point `i` of the dual is line `i`.
    pub fn dual(&self) -> Result<Configuration> {
        self.require_valid()?;
        Ok(self.dual_unchecked())
    }

    fn dual_unchecked(&self) -> Configuration {
        Configuration::new(self.lines.len(), self.k, self.lines_through()).expect("line indices are in range")
    }

    /// The configuration with point `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[u32]) -> Configuration {
        let lines = self.lines.iter().map(|l| l.iter().map(|&p| perm[p as usize]).collect()).collect();
        Configuration::new(self.v, self.k, lines).expect("permutation stays in range")
    }

    pub fn alpha_spectrum(&self) -> Result<GeometryClass> {
        let g = self.associated_graph(Side::Point)?;
        let words = self.v.div_ceil(64).max(1);
        let mut spectrum = BTreeMap::new();
        for line in &self.lines {
            let mut mask = vec![0u64; words];
            for &p in line {
                mask[p as usize / 64] |= 1 << (p % 64);
            }
            for point in 0..self.v {
                if mask[point / 64] >> (point % 64) & 1 == 1 {
                    continue;
                }
                let c: u32 = g.row(point).iter().zip(&mask).map(|(a, b)| (a & b).count_ones()).sum();
                *spectrum.entry(c as usize).or_insert(0) += 1;
            }
        }
        let values: Vec<usize> = spectrum.keys().copied().collect();
        let kind = match values.as_slice() {
            [alpha] => GeometryKind::PartialGeometry { alpha: *alpha },
            [0, alpha] => match constant_mu(&g) {
                Some(mu) => GeometryKind::SemipartialGeometry { alpha: *alpha, mu },
                None => GeometryKind::AlphaBetaGeometry { alpha: 0, beta: *alpha },
            },
            [alpha, beta] => GeometryKind::AlphaBetaGeometry { alpha: *alpha, beta: *beta },
            _ => GeometryKind::General,
        };
        Ok(GeometryClass { kind, spectrum })
    }

    /// Whether the incidence matrix is nonsingular over the rationals.
    pub fn is_proper(&self) -> Result<bool> {
        self.require_valid()?;
        let m = self.incidence_matrix();
        for p in PRECHECK_PRIMES {
            if modular_rank(&m, p) == self.v {
                return Ok(true);
            }
        }
        Ok(bareiss_rank(&m) == self.v)
    }

    /// Rows are lines, columns are points.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        self.lines
            .iter()
            .map(|l| {
                let mut row = vec![0u8; self.v];
                for &p in l {
                    row[p as usize] = 1;
                }
                row
            })
            .collect()
    }

    /// `v k` then one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.v, self.k);
        for l in &self.lines {
            let row: Vec<String> = l.iter().map(ToString::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Blank lines and `#` comments are ignored.
    pub fn from_text(text: &str) -> Result<Configuration> {
        let mut rows = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let parse_row = |l: &str| -> Result<Vec<u64>> {
            l.split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("not an index: `{t}`"))))
                .collect()
        };
        let header = rows.next().ok_or_else(|| Error::Parse("empty configuration file".into()))?;
        let (v, k) = match parse_row(header)?.as_slice() {
            [v, k] => (*v as usize, *k as usize),
            _ => return Err(Error::Parse(format!("header must be `v k`, got `{header}`"))),
        };
        let lines = rows
            .map(|l| Ok(parse_row(l)?.into_iter().map(|x| x as u32).collect()))
            .collect::<Result<Vec<Vec<u32>>>>()?;
        Configuration::new(v, k, lines)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("configuration serializes")
    }

    pub fn from_json(text: &str) -> Result<Configuration> {
        Ok(serde_json::from_str(text)?)
    }

    /// JSON when the content starts with `{`, the text format otherwise.
    pub fn read_file(path: &Path) -> Result<Configuration> {
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
            _ => Error::Io(e),
        })?;
        if text.trim_start().starts_with('{') {
            Configuration::from_json(&text)
        } else {
            Configuration::from_text(&text)
        }
    }
}

const PRECHECK_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

/// Common-neighbour count shared by all non-adjacent pairs, if constant.
fn constant_mu(g: &Graph) -> Option<usize> {
    let mut mu = None;
    for a in 0..g.order() {
        for b in a + 1..g.order() {
            if g.has_edge(a, b) {
                continue;
            }
            let c = g.common_neighbors(a, b);
            match mu {
                None => mu = Some(c),
                Some(m) if m != c => return None,
                _ => {}
            }
        }
    }
    mu
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::graphs::GraphSpec;
    use proptest::prelude::*;

    #[test]
    fn desargues_is_valid() {
        assert_eq!(desargues().validate(), Ok(()));
    }

    #[test]
    fn identical_lines_cover_pairs_twice() {
        let c = Configuration::new(4, 2, vec![vec![0, 1], vec![0, 1], vec![2, 3], vec![2, 3]]).unwrap();
        let v = c.validate().unwrap_err();
        assert!(v.iter().any(|x| matches!(x, Violation::PairCoveredTwice { a: 0, b: 1, .. })));
        assert!(v.iter().any(|x| x.to_string().starts_with("pair covered twice")));
    }

    #[test]
    fn short_line_is_reported() {
        let mut lines = desargues().lines().to_vec();
        lines[4].pop();
        let c = Configuration::new(10, 3, lines).unwrap();
        let v = c.validate().unwrap_err();
        assert!(v.iter().any(|x| matches!(x, Violation::LineSize { size: 2, .. })));
        assert!(v.iter().any(|x| matches!(x, Violation::PointDegree { degree: 2, .. })));
    }

    #[test]
    fn out_of_range_point() {
        assert!(matches!(
            Configuration::new(3, 2, vec![vec![0, 3]]),
            Err(Error::InvalidConfiguration(_))
        ));
    }

    #[test]
    fn desargues_point_graph_is_petersen_complement() {
        let c = desargues();
        let g = c.associated_graph(Side::Point).unwrap();
        assert_eq!(srg_check(&g), Some(SrgParams::new(10, 6, 3, 4)));
        assert_eq!(srg_check(&GraphSpec::Petersen.build().unwrap().complement()), srg_check(&g));
        for side in [Side::Point, Side::Line] {
            let g = c.associated_graph(side).unwrap();
            assert!((0..10).all(|x| g.degree(x) == 6));
        }
    }

    #[test]
    fn invalid_configuration_has_no_graph() {
        let c = Configuration::new(4, 2, vec![vec![0, 1], vec![0, 1], vec![2, 3], vec![2, 3]]).unwrap();
        assert!(matches!(c.associated_graph(Side::Point), Err(Error::InvalidConfiguration(_))));
        assert!(c.src_check().is_err());
    }

    #[test]
    fn src_check_examples() {
        assert_eq!(desargues().src_check().unwrap(), Some(SrcParams::new(10, 3, 3, 4)));
        assert_eq!(cyclic(13, &[7, 8, 11]).src_check().unwrap(), Some(SrcParams::new(13, 3, 2, 3)));
        let plain = cyclic(13, &[0, 1, 3]);
        assert!(plain.is_valid());
        assert_eq!(plain.src_check().unwrap(), None);
        assert_eq!(duads_synthemes().src_check().unwrap(), Some(SrcParams::new(15, 3, 1, 3)));
    }

    #[test]
    fn line_graph_of_13_3_development() {
        let g = cyclic(13, &[7, 8, 11]).associated_graph(Side::Line).unwrap();
        assert_eq!(srg_check(&g), Some(SrgParams::new(13, 6, 2, 3)));
    }

    #[test]
    fn dual_is_an_involution_up_to_relabelling() {
        let c = cyclic(13, &[0, 1, 3]);
        let dd = c.dual().unwrap().dual().unwrap();
        // point i of dd is line i of the dual, i.e. the i-th sorted pencil of c
        let mut pencils: Vec<(Vec<u32>, u32)> =
            c.lines_through().into_iter().enumerate().map(|(p, l)| (l, p as u32)).collect();
        pencils.sort();
        let sigma: Vec<u32> = pencils.iter().map(|&(_, p)| p).collect();
        assert_eq!(dd.relabel(&sigma), c);
        let d = desargues();
        assert_eq!(d.dual().unwrap().dual().unwrap().src_check().unwrap(), d.src_check().unwrap());
    }

    #[test]
    fn desargues_is_semipartial() {
        let g = desargues().alpha_spectrum().unwrap();
        assert_eq!(g.kind, GeometryKind::SemipartialGeometry { alpha: 2, mu: 4 });
        assert_eq!(g.values(), vec![0, 2]);
        // 10 lines, 7 antiflags each
        assert_eq!(g.spectrum.values().sum::<usize>(), 70);
    }

    #[test]
    fn quadrangle_is_partial_geometry() {
        let g = duads_synthemes().alpha_spectrum().unwrap();
        assert_eq!(g.kind, GeometryKind::PartialGeometry { alpha: 1 });
    }

    #[test]
    fn properness() {
        assert!(desargues().is_proper().unwrap());
        assert!(!duads_synthemes().is_proper().unwrap());
        let m = desargues().incidence_matrix();
        assert_eq!(bareiss_rank(&m), 10);
        assert_eq!(bareiss_rank(&duads_synthemes().incidence_matrix()), 10);
    }

    #[test]
    fn text_and_json_round_trip() {
        let c = desargues();
        assert_eq!(Configuration::from_text(&c.to_text()).unwrap(), c);
        assert_eq!(Configuration::from_json(&c.to_json()).unwrap(), c);
        let with_comments = format!("# header\n{}\n\n", c.to_text());
        assert_eq!(Configuration::from_text(&with_comments).unwrap(), c);
        assert!(Configuration::from_text("3\n0 1").is_err());
        assert!(Configuration::from_json(r#"{"v":2,"k":1,"lines":[[5]]}"#).is_err());
    }

    #[test]
    fn missing_file() {
        let e = Configuration::read_file(Path::new("/nonexistent/x.cfg")).unwrap_err();
        assert!(matches!(e, Error::FileNotFound(_)));
    }

    fn shuffled(c: &Configuration, seed: u64) -> Configuration {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut perm: Vec<u32> = (0..c.v() as u32).collect();
        perm.shuffle(&mut rng);
        c.relabel(&perm)
    }

    proptest! {
        #[test]
        fn parameters_survive_relabelling_and_duality(seed in any::<u64>(), which in 0usize..3) {
            let c = [desargues(), cyclic(13, &[7, 8, 11]), duads_synthemes()][which].clone();
            let r = shuffled(&c, seed);
            let p = r.src_check().unwrap().unwrap();
            prop_assert_eq!(Some(p), c.src_check().unwrap());
            prop_assert_eq!(r.dual().unwrap().src_check().unwrap(), Some(p));
            prop_assert!(p.identity_holds());
            prop_assert_eq!(r.alpha_spectrum().unwrap(), c.alpha_spectrum().unwrap());
        }
    }
}
