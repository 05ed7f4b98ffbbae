use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    coordinate_triangle, development, fq_star_pair_set, lp4, moore_configuration, projective_plane,
    quaternion_pair_sets, triangle_removal, PolarityFlags,
};
use crate::algebra::{Group, GroupSpec};
use crate::graphs::GraphSpec;
use crate::incidence::Configuration;
use crate::{Error, Result};

/// A named construction, as JSON (`{"family": "lp4", "q": 2, ...}`) or in
/// the short text form accepted by [`FromStr`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ConstructionSpec {
    ProjectivePlane { q: u64 },
    /// Defaults to the coordinate triangle.
    TriangleRemoval {
        q: u64,
        #[serde(default)]
        triangle: Option<[u32; 3]>,
    },
    Moore { graph: String },
    Lp4 {
        q: u64,
        #[serde(default)]
        flags: PolarityFlags,
    },
    /// Element names as printed by the group, e.g. `(1,2,4)` or `i|-k`.
    Development { group: String, set: Vec<String> },
    /// `{(x, x+1)}` in `F_q^* x F_q^*`.
    FieldPairs { q: u64 },
    /// The two 7-sets in `Q_8 x Q_8`; `which` is 1 or 2.
    QuaternionPairs { which: u8 },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Configuration> {
        match self {
            ConstructionSpec::ProjectivePlane { q } => projective_plane(*q),
            ConstructionSpec::TriangleRemoval { q, triangle } => {
                let plane = projective_plane(*q)?;
                let [a, b, c] = match triangle {
                    Some(t) => *t,
                    None => coordinate_triangle(*q)?,
                };
                triangle_removal(&plane, a, b, c)
            }
            ConstructionSpec::Moore { graph } => moore_configuration(&graph.parse::<GraphSpec>()?.build()?),
            ConstructionSpec::Lp4 { q, flags } => lp4(*q, *flags),
            ConstructionSpec::Development { group, set } => {
                let g = Group::build(&group.parse::<GroupSpec>()?)?;
                let d = set.iter().map(|x| g.element(x)).collect::<Result<Vec<_>>>()?;
                development(&g, &d)
            }
            ConstructionSpec::FieldPairs { q } => {
                let (g, d) = fq_star_pair_set(*q)?;
                development(&g, &d)
            }
            ConstructionSpec::QuaternionPairs { which } => {
                let (g, d1, d2) = quaternion_pair_sets();
                match which {
                    1 => development(&g, &d1),
                    2 => development(&g, &d2),
                    _ => Err(Error::InvalidSpec(format!("quaternion set {which}: expected 1 or 2"))),
                }
            }
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    /// JSON, or one of `plane:q`, `triangle:q[:a,b,c]`, `moore:<graph>`,
    /// `lp4:q[:hyperplane|:point|:both]`, `dev:<group>:<e1>;<e2>;...`,
    /// `field-pairs:q`, `quaternion-pairs:1|2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidSpec(format!("construction JSON: {e}")));
        }
        let bad = || Error::InvalidSpec(format!("unknown construction `{s}`"));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        let (family, rest) = s.split_once(':').ok_or_else(bad)?;
        Ok(match family {
            "plane" => ConstructionSpec::ProjectivePlane { q: num(rest)? },
            "triangle" => match rest.split_once(':') {
                None => ConstructionSpec::TriangleRemoval { q: num(rest)?, triangle: None },
                Some((q, t)) => {
                    let pts: Vec<u32> = t.split(',').map(|x| num(x).map(|x| x as u32)).collect::<Result<_>>()?;
                    let triangle = <[u32; 3]>::try_from(pts).map_err(|_| bad())?;
                    ConstructionSpec::TriangleRemoval { q: num(q)?, triangle: Some(triangle) }
                }
            },
            "moore" => ConstructionSpec::Moore { graph: rest.to_string() },
            "lp4" => {
                let (q, mode) = rest.split_once(':').unwrap_or((rest, "none"));
                let flags = match mode {
                    "none" => PolarityFlags::default(),
                    "hyperplane" => PolarityFlags { hyperplane_side: true, point_side: false },
                    "point" => PolarityFlags { hyperplane_side: false, point_side: true },
                    "both" => PolarityFlags { hyperplane_side: true, point_side: true },
                    _ => return Err(bad()),
                };
                ConstructionSpec::Lp4 { q: num(q)?, flags }
            }
            "dev" => {
                let (group, set) = rest.rsplit_once(':').ok_or_else(bad)?;
                ConstructionSpec::Development {
                    group: group.to_string(),
                    set: set.split(';').map(|x| x.trim().to_string()).collect(),
                }
            }
            "field-pairs" => ConstructionSpec::FieldPairs { q: num(rest)? },
            "quaternion-pairs" => ConstructionSpec::QuaternionPairs { which: num(rest)? as u8 },
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::ProjectivePlane { q } => write!(f, "plane:{q}"),
            ConstructionSpec::TriangleRemoval { q, triangle: None } => write!(f, "triangle:{q}"),
            ConstructionSpec::TriangleRemoval { q, triangle: Some([a, b, c]) } => write!(f, "triangle:{q}:{a},{b},{c}"),
            ConstructionSpec::Moore { graph } => write!(f, "moore:{graph}"),
            ConstructionSpec::Lp4 { q, flags } => {
                let mode = match (flags.hyperplane_side, flags.point_side) {
                    (false, false) => "",
                    (true, false) => ":hyperplane",
                    (false, true) => ":point",
                    (true, true) => ":both",
                };
                write!(f, "lp4:{q}{mode}")
            }
            ConstructionSpec::Development { group, set } => write!(f, "dev:{group}:{}", set.join(";")),
            ConstructionSpec::FieldPairs { q } => write!(f, "field-pairs:{q}"),
            ConstructionSpec::QuaternionPairs { which } => write!(f, "quaternion-pairs:{which}"),
        }
    }
}
