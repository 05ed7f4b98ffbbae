use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{decode_graph6, read_graph_file, Graph};
use crate::algebra::FiniteField;
use crate::{Error, Result};

/// Named graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    /// Paley graph on `GF(q)`, `q ≡ 1 (mod 4)`.
    Paley(u64),
    /// `n x n` rook graph.
    Rook(usize),
    /// Cells of a Latin square, adjacent when they share a row, column or symbol.
    LatinSquare(Vec<Vec<usize>>),
    /// Latin-square graph of the Cayley table of `Z_n`.
    CyclicLatinSquare(usize),
    Petersen,
    HoffmanSingleton,
    /// Complement of the Latin-square graph of `Z_4`: the `SRG(16,6,2,2)`
    /// that is not the rook graph.
    Shrikhande,
    Complement(Box<GraphSpec>),
    Graph6(String),
    /// First graph of a graph6 or adjacency-matrix file.
    Graph6File(PathBuf),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Paley(q) => paley(*q),
            GraphSpec::Rook(n) => Ok(rook(*n)),
            GraphSpec::LatinSquare(l) => latin_square_graph(l),
            GraphSpec::CyclicLatinSquare(n) => latin_square_graph(&cyclic_latin_square(*n)),
            GraphSpec::Petersen => Ok(petersen()),
            GraphSpec::HoffmanSingleton => Ok(hoffman_singleton()),
            GraphSpec::Shrikhande => Ok(latin_square_graph(&cyclic_latin_square(4))?.complement()),
            GraphSpec::Complement(inner) => Ok(inner.build()?.complement()),
            GraphSpec::Graph6(s) => decode_graph6(s),
            GraphSpec::Graph6File(path) => read_graph_file(path)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::MalformedGraph6(format!("{} holds no graphs", path.display()))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Paley(q) => write!(f, "paley:{q}"),
            GraphSpec::Rook(n) => write!(f, "rook:{n}"),
            GraphSpec::LatinSquare(l) => write!(f, "latin:{}", l.len()),
            GraphSpec::CyclicLatinSquare(n) => write!(f, "cyclic-latin:{n}"),
            GraphSpec::Petersen => write!(f, "petersen"),
            GraphSpec::HoffmanSingleton => write!(f, "hoffman-singleton"),
            GraphSpec::Shrikhande => write!(f, "shrikhande"),
            GraphSpec::Complement(g) => write!(f, "complement:{g}"),
            GraphSpec::Graph6(s) => write!(f, "graph6:{s}"),
            GraphSpec::Graph6File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    /// `paley:q`, `rook:n`, `cyclic-latin:n`, `petersen`, `hoffman-singleton`,
    /// `shrikhande`, `complement:<spec>`, `graph6:<string>`, `file:<path>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| -> Result<u64> {
            t.parse()
                .map_err(|_| Error::InvalidSpec(format!("bad number in graph spec `{s}`")))
        };
        if let Some(rest) = s.strip_prefix("complement:") {
            return Ok(GraphSpec::Complement(Box::new(rest.parse()?)));
        }
        if let Some(rest) = s.strip_prefix("graph6:") {
            return Ok(GraphSpec::Graph6(rest.to_string()));
        }
        if let Some(rest) = s.strip_prefix("file:") {
            return Ok(GraphSpec::Graph6File(PathBuf::from(rest)));
        }
        if let Some(rest) = s.strip_prefix("paley:") {
            return Ok(GraphSpec::Paley(num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("rook:") {
            return Ok(GraphSpec::Rook(num(rest)? as usize));
        }
        if let Some(rest) = s.strip_prefix("cyclic-latin:") {
            return Ok(GraphSpec::CyclicLatinSquare(num(rest)? as usize));
        }
        match s {
            "petersen" => Ok(GraphSpec::Petersen),
            "hoffman-singleton" => Ok(GraphSpec::HoffmanSingleton),
            "shrikhande" => Ok(GraphSpec::Shrikhande),
            _ => Err(Error::InvalidSpec(format!("unknown graph `{s}`"))),
        }
    }
}

fn paley(q: u64) -> Result<Graph> {
    let field = FiniteField::new(q)?;
    if q % 4 != 1 {
        return Err(Error::InvalidSpec(format!("Paley graph needs q = 1 mod 4, got {q}")));
    }
    let n = q as usize;
    let mut g = Graph::empty(n);
    for a in 0..q as u32 {
        for b in a + 1..q as u32 {
            if field.is_nonzero_square(field.sub(a, b)) {
                g.add_edge(a as usize, b as usize);
            }
        }
    }
    Ok(g)
}

fn rook(n: usize) -> Graph {
    let mut g = Graph::empty(n * n);
    for a in 0..n * n {
        for b in a + 1..n * n {
            if a / n == b / n || a % n == b % n {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// The Cayley table of `Z_n`: `L[i][j] = (i + j) mod n`.
pub fn cyclic_latin_square(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn latin_square_graph(l: &[Vec<usize>]) -> Result<Graph> {
    let n = l.len();
    let bad = || Error::InvalidSpec("not a Latin square".into());
    if l.iter().any(|row| row.len() != n || row.iter().any(|&s| s >= n)) {
        return Err(bad());
    }
    for i in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for j in 0..n {
            if std::mem::replace(&mut row_seen[l[i][j]], true) || std::mem::replace(&mut col_seen[l[j][i]], true) {
                return Err(bad());
            }
        }
    }
    let mut g = Graph::empty(n * n);
    for a in 0..n * n {
        let (ra, ca) = (a / n, a % n);
        for b in a + 1..n * n {
            let (rb, cb) = (b / n, b % n);
            if ra == rb || ca == cb || l[ra][ca] == l[rb][cb] {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// Kneser graph `K(5,2)`: 2-subsets of `{0..4}`, adjacent when disjoint.
fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = Graph::empty(10);
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Five pentagons `P_i` and five pentagrams `Q_i`; `P_{i,j}` is vertex
/// `5i + j`, `Q_{i,j}` is `25 + 5i + j`. `P_{i,j} ~ P_{i,j±1}`,
/// `Q_{i,j} ~ Q_{i,j±2}`, `P_{i,j} ~ Q_{k,ik+j}`.
fn hoffman_singleton() -> Graph {
    let p = |i: usize, j: usize| 5 * i + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut g = Graph::empty(50);
    for i in 0..5 {
        for j in 0..5 {
            g.add_edge(p(i, j), p(i, j + 1));
            g.add_edge(q(i, j), q(i, j + 2));
            for k in 0..5 {
                g.add_edge(p(i, j), q(k, i * k + j));
            }
        }
    }
    g
}
