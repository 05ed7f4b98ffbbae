use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{clique_condition, rook_exclusion, square_condition, srg_param_feasible, CliqueVerdict, SquareVerdict, SrgFailure};
use crate::graphs::SrgParams;
use crate::incidence::SrcParams;
use crate::{Error, Result};

/// SRG parameter sets known not to be realised; an entry covers its complement.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExclusionList {
    entries: Vec<(SrgParams, String)>,
}

const BUILTIN: &str = include_str!("../../data/srg_nonexistent.txt");

impl ExclusionList {
    /// Lines `v d lambda mu  # tag`; blank and comment-only lines are skipped.
    pub fn parse(text: &str) -> Result<ExclusionList> {
        let mut entries = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let (body, tag) = match line.split_once('#') {
                Some((b, t)) => (b.trim(), t.trim()),
                None => (line.trim(), ""),
            };
            if body.is_empty() {
                continue;
            }
            let nums: Vec<u64> = body
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("exclusion list line {}: `{t}`", no + 1))))
                .collect::<Result<_>>()?;
            let [v, d, l, m] = nums[..] else {
                return Err(Error::Parse(format!("exclusion list line {}: expected 4 numbers", no + 1)));
            };
            entries.push((SrgParams::new(v, d, l, m), tag.to_string()));
        }
        Ok(ExclusionList { entries })
    }

    pub fn builtin() -> ExclusionList {
        ExclusionList::parse(BUILTIN).expect("shipped exclusion list parses")
    }

    pub fn read_file(path: &Path) -> Result<ExclusionList> {
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
            _ => Error::Io(e),
        })?;
        ExclusionList::parse(&text)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Citation tag of the entry matching `p` or its complement.
    pub fn lookup(&self, p: SrgParams) -> Option<&str> {
        let c = p.complement();
        self.entries.iter().find(|(e, _)| *e == p || *e == c).map(|(_, t)| t.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Primitivity {
    /// `μ = 0`: disjoint projective planes.
    UnionOfPlanes,
    /// `μ = k(k-1)`.
    EllipticSemiplane,
    Primitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    Srg(SrgFailure),
    KnownNonexistent(String),
    CliqueCondition,
    SquareCondition,
    Imprimitive(Primitivity),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Srg(x) => write!(f, "SRG: {x}"),
            Reason::KnownNonexistent(tag) => write!(f, "SRG known not to exist ({tag})"),
            Reason::CliqueCondition => f.write_str("clique condition"),
            Reason::SquareCondition => f.write_str("square condition"),
            Reason::Imprimitive(p) => write!(f, "imprimitive ({p:?})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Overall {
    Infeasible(Reason),
    PartialGeometryOnly,
    Feasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityVerdict {
    pub params: SrcParams,
    pub identity: bool,
    pub srg_feasible: std::result::Result<(), SrgFailure>,
    pub known_nonexistent: Option<String>,
    pub square_condition: Option<SquareVerdict>,
    pub clique_condition: CliqueVerdict,
    pub rook_excluded: bool,
    pub primitivity: Primitivity,
    pub overall: Overall,
}

impl FeasibilityVerdict {
    pub fn evaluate(p: SrcParams, exclusions: &ExclusionList) -> FeasibilityVerdict {
        let d = p.d();
        let primitivity = if p.mu == 0 {
            Primitivity::UnionOfPlanes
        } else if p.mu == d {
            Primitivity::EllipticSemiplane
        } else {
            Primitivity::Primitive
        };
        let srg_feasible = srg_param_feasible(p.srg());
        let known_nonexistent = exclusions.lookup(p.srg()).map(str::to_string);
        let square = if primitivity == Primitivity::Primitive { square_condition(p).ok() } else { None };
        let clique = clique_condition(p);
        let overall = if let Err(e) = srg_feasible {
            Overall::Infeasible(Reason::Srg(e))
        } else if primitivity != Primitivity::Primitive {
            Overall::Infeasible(Reason::Imprimitive(primitivity))
        } else if let Some(tag) = &known_nonexistent {
            Overall::Infeasible(Reason::KnownNonexistent(tag.clone()))
        } else if clique == CliqueVerdict::Fail {
            Overall::Infeasible(Reason::CliqueCondition)
        } else if clique == CliqueVerdict::EqualityPg {
            Overall::PartialGeometryOnly
        } else if !square.is_some_and(|s| s.passes()) {
            Overall::Infeasible(Reason::SquareCondition)
        } else {
            Overall::Feasible
        };
        FeasibilityVerdict {
            params: p,
            identity: p.identity_holds(),
            srg_feasible,
            known_nonexistent,
            square_condition: square,
            clique_condition: clique,
            rook_excluded: rook_exclusion(p),
            primitivity,
            overall,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.overall == Overall::Feasible
    }
}

/// All primitive `(v_k; λ, μ)` with `v ≤ v_max`, `k ≥ 3` whose point graph
/// parameters pass the SRG battery, sorted by `(v, k, λ, μ)`. Rows rejected
/// only by the exclusion list are kept and marked.
pub fn enumerate_feasible(v_max: u64, exclusions: &ExclusionList) -> Vec<FeasibilityVerdict> {
    let ks: Vec<u64> = (3..).take_while(|k| k * (k - 1) + 2 <= v_max).collect();
    let mut out: Vec<FeasibilityVerdict> = ks
        .par_iter()
        .flat_map_iter(|&k| {
            let d = k * (k - 1);
            (d + 2..=v_max).flat_map(move |v| {
                (1..d).filter_map(move |mu| {
                    let num = (v - 1 - d) * mu;
                    if num % d != 0 || num / d > d - 1 {
                        return None;
                    }
                    let p = SrcParams::new(v, k, d - 1 - num / d, mu);
                    srg_param_feasible(p.srg()).is_ok().then_some(p)
                })
            })
        })
        .map(|p| FeasibilityVerdict::evaluate(p, exclusions))
        .collect();
    out.sort_by_key(|x| x.params.as_tuple());
    out
}

/// Aligned text: feasible rows are numbered, the rest carry their reason.
pub fn render_table(rows: &[FeasibilityVerdict]) -> String {
    let mut s = format!("{:>4}  {:<18} {:<12} {}\n", "No.", "(v_k;lambda,mu)", "status", "remarks");
    let mut no = 0;
    for r in rows {
        let p = r.params;
        let params = format!("({}_{};{},{})", p.v, p.k, p.lambda, p.mu);
        let (num, status, remark) = match &r.overall {
            Overall::Feasible => {
                no += 1;
                let remark = if r.rook_excluded { "rook graph only: no configuration".to_string() } else { String::new() };
                (no.to_string(), "feasible", remark)
            }
            Overall::PartialGeometryOnly => ("-".into(), "pg-only", "clique condition with equality".to_string()),
            Overall::Infeasible(reason) => {
                let mut remark = reason.to_string();
                if let (Reason::SquareCondition, Some(SquareVerdict::Fail { prime, exponent })) = (reason, r.square_condition) {
                    remark = format!("{remark}: {prime}^{exponent}");
                }
                ("-".into(), "infeasible", remark)
            }
        };
        s.push_str(format!("{num:>4}  {params:<18} {status:<12} {remark}").trim_end());
        s.push('\n');
    }
    s
}
