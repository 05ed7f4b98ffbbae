//! Checkable numeric claims, one per acceptance criterion.
//!
//! Each claim computes an `observed` JSON value shaped exactly like its
//! frozen `expected` value; anything informative but not part of the check
//! goes into `details`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use srconf_core::classify::{clique_graph, find_configurations, find_configurations_from, reduce_isomorphs};
use srconf_core::constructions::{
    coordinate_triangle, development, lp4, lp4_lines_by_plane, moore_configuration, projective_plane,
    quaternion_pair_sets, triangle_removal, PolarityFlags,
};
use srconf_core::feasibility::{
    clique_condition, eigendata, enumerate_feasible, square_condition, CliqueVerdict, ExclusionList,
    FeasibilityVerdict, Overall, Reason, SquareVerdict,
};
use srconf_core::graphs::{k_cliques, read_graph_file, srg_check};
use srconf_core::iso::{aut_order, canonical_form, is_self_dual};
use srconf_core::sdds::{sdds_check, sdds_search, Normalization};
use srconf_core::{Configuration, GeometryKind, Graph, GraphSpec, Group, Result, Side, SrcParams, SrgParams};

use crate::report::ClaimCheck;

pub const DATA_DIR_VAR: &str = "SRCFG_DATA_DIR";

pub struct ClaimEnv {
    pub data_dir: Option<PathBuf>,
}

impl ClaimEnv {
    pub fn from_env() -> ClaimEnv {
        ClaimEnv { data_dir: std::env::var_os(DATA_DIR_VAR).map(PathBuf::from) }
    }
}

pub struct Checked {
    pub check: ClaimCheck,
    pub details: Value,
    /// Every configuration built along the way, labelled.
    pub configurations: Vec<(String, Configuration)>,
}

pub enum ClaimOutcome {
    Checked(Checked),
    /// The claim needs external data that is not available.
    MissingData(String),
}

pub struct Claim {
    pub id: &'static str,
    pub criterion: u8,
    pub title: &'static str,
    run: fn(&ClaimEnv) -> Result<ClaimOutcome>,
}

impl Claim {
    pub fn run(&self, env: &ClaimEnv) -> Result<ClaimOutcome> {
        (self.run)(env)
    }
}

pub static CLAIMS: [Claim; 13] = [
    Claim { id: "table", criterion: 1, title: "feasible (v_k;lambda,mu) up to v = 200", run: table },
    Claim { id: "square-28-4", criterion: 2, title: "(28_4;6,4) spectrum and square condition", run: square_28_4 },
    Claim { id: "clique-81-5", criterion: 3, title: "(81_5;1,6) fails the clique condition", run: clique_81_5 },
    Claim { id: "paley-13", criterion: 4, title: "configurations on Paley(13)", run: paley_13 },
    Claim { id: "shrikhande-rook", criterion: 5, title: "configurations on the Shrikhande and rook(4) graphs", run: shrikhande_rook },
    Claim { id: "petersen-complement", criterion: 6, title: "configurations on the Petersen complement", run: petersen_complement },
    Claim { id: "triangle-36-5", criterion: 7, title: "(36_5;10,12) from PG(2,7) and its uniqueness", run: triangle_36_5 },
    Claim { id: "published-sdds", criterion: 8, title: "published strong deficient difference sets", run: published_sdds },
    Claim { id: "z13-search", criterion: 9, title: "exhaustive difference set search in Z13", run: z13_search },
    Claim { id: "lp4-2", criterion: 10, title: "LP(4,2) and its polarity transforms", run: lp4_2 },
    Claim { id: "hoffman-singleton", criterion: 11, title: "neighbourhoods of the Hoffman-Singleton graph", run: hoffman_singleton },
    Claim { id: "line-graphs", criterion: 12, title: "line graph parameters equal point graph parameters", run: line_graphs },
    Claim { id: "external-srg", criterion: 13, title: "no (25_4;5,6) or (45_4;3,3) configurations", run: external_srg },
];

/// By id, or by criterion number.
pub fn find(key: &str) -> Option<&'static Claim> {
    let key = key.trim();
    CLAIMS.iter().find(|c| c.id == key || key.parse::<u8>().is_ok_and(|n| n == c.criterion))
}

fn checked(expected: Value, observed: Value, details: Value, configurations: Vec<(String, Configuration)>) -> Result<ClaimOutcome> {
    Ok(ClaimOutcome::Checked(Checked { check: ClaimCheck::new(expected, observed), details, configurations }))
}

fn graph(spec: &str) -> Result<Graph> {
    spec.parse::<GraphSpec>()?.build()
}

pub(crate) fn order_json(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn params_json(c: &Configuration) -> Result<Value> {
    Ok(c.src_check()?.map_or(Value::Null, |p| Value::String(p.to_string())))
}

fn pg_triangle(q: u64) -> Result<Configuration> {
    let [a, b, c] = coordinate_triangle(q)?;
    triangle_removal(&projective_plane(q)?, a, b, c)
}

const TABLE: [(u64, u64, u64, u64); 41] = [
    (10, 3, 3, 4), (13, 3, 2, 3), (16, 3, 2, 2), (25, 4, 5, 6), (36, 5, 10, 12), (41, 5, 9, 10),
    (45, 4, 3, 3), (49, 4, 5, 2), (49, 6, 17, 20), (50, 7, 35, 36), (61, 6, 14, 15), (63, 6, 13, 15),
    (64, 7, 26, 30), (81, 8, 37, 42), (85, 6, 11, 10), (85, 7, 20, 21), (96, 5, 4, 4), (99, 7, 21, 15),
    (100, 9, 50, 56), (105, 9, 51, 45), (113, 8, 27, 28), (120, 8, 28, 24), (121, 5, 9, 2), (121, 6, 11, 6),
    (121, 9, 43, 42), (121, 10, 65, 72), (125, 9, 45, 36), (136, 6, 15, 4), (136, 9, 36, 40),
    (144, 11, 82, 90), (145, 9, 35, 36), (153, 8, 19, 21), (155, 7, 17, 9), (169, 9, 31, 30),
    (169, 12, 101, 110), (171, 11, 73, 66), (175, 6, 5, 5), (181, 10, 44, 45), (196, 10, 40, 42),
    (196, 13, 122, 132), (196, 13, 125, 120),
];

/// Row counts of a generated table, by outcome.
pub(crate) fn table_summary(rows: &[FeasibilityVerdict]) -> Value {
    let count = |f: &dyn Fn(&FeasibilityVerdict) -> bool| rows.iter().filter(|r| f(r)).count();
    let known = count(&|r| r.known_nonexistent.is_some());
    json!({
        "enumerated": rows.len(),
        "known_nonexistent": known,
        "candidates": rows.len() - known,
        "clique_fail": count(&|r| r.overall == Overall::Infeasible(Reason::CliqueCondition)),
        "pg_only": count(&|r| r.overall == Overall::PartialGeometryOnly),
        "square_fail": count(&|r| r.overall == Overall::Infeasible(Reason::SquareCondition)),
        "feasible": count(&|r| r.is_feasible()),
        "rook_excluded": count(&|r| r.is_feasible() && r.rook_excluded),
    })
}

fn table(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let rows = enumerate_feasible(200, &ExclusionList::builtin());
    let s = table_summary(&rows);
    let pick = |key: &str| s[key].clone();
    let feasible: Vec<String> = rows.iter().filter(|r| r.is_feasible()).map(|r| r.params.to_string()).collect();
    let observed = json!({
        "candidates": pick("candidates"),
        "clique_fail": pick("clique_fail"),
        "pg_only": pick("pg_only"),
        "square_fail": pick("square_fail"),
        "feasible": feasible.len(),
        "rows": feasible,
    });
    let rows_expected: Vec<String> =
        TABLE.iter().map(|&(v, k, l, m)| SrcParams::new(v, k, l, m).to_string()).collect();
    let expected = json!({
        "candidates": 64, "clique_fail": 11, "pg_only": 6, "square_fail": 6, "feasible": 41, "rows": rows_expected,
    });
    let rook: Vec<String> =
        rows.iter().filter(|r| r.is_feasible() && r.rook_excluded).map(|r| r.params.to_string()).collect();
    checked(expected, observed, json!({ "summary": s, "rook_excluded": rook }), vec![])
}

fn square_28_4(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let p = SrcParams::new(28, 4, 6, 4);
    let e = eigendata(p)?;
    let (r, s) = e.integral().map_or((Value::Null, Value::Null), |(r, s)| (r.into(), s.into()));
    let witness = match square_condition(p)? {
        SquareVerdict::Fail { prime, exponent } => json!(format!("{prime}^{exponent}")),
        other => json!(other.to_string()),
    };
    let observed = json!({ "r": r, "s": s, "f": e.f, "g": e.g, "square_condition": witness });
    let expected = json!({ "r": 4, "s": -2, "f": 7, "g": 20, "square_condition": "2^41" });
    checked(expected, observed, json!({}), vec![])
}

fn clique_81_5(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let p = SrcParams::new(81, 5, 1, 6);
    let verdict = FeasibilityVerdict::evaluate(p, &ExclusionList::builtin());
    let observed = json!({
        "clique_condition": clique_condition(p),
        "overall": verdict.overall,
    });
    let expected = json!({
        "clique_condition": CliqueVerdict::Fail,
        "overall": Overall::Infeasible(Reason::CliqueCondition),
    });
    let lhs = (p.v - p.k) * (p.lambda + 1);
    let rhs = p.k * (p.k - 1).pow(3);
    checked(expected, observed, json!({ "lhs": lhs, "rhs": rhs }), vec![])
}

fn labelled(prefix: &str, cs: &[Configuration]) -> Vec<(String, Configuration)> {
    cs.iter().enumerate().map(|(i, c)| (format!("{prefix} #{i}"), c.clone())).collect()
}

fn paley_13(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let g = graph("paley:13")?;
    let cg = clique_graph(&g, 3);
    let found = find_configurations_from(&g, 3, &cg.cliques, None);
    let classes = reduce_isomorphs(&found)?;
    let observed = json!({
        "cliques": cg.cliques.len(),
        "compat_vertices": cg.compat.order(),
        "compat_edges": cg.compat.edge_count(),
        "configurations": found.len(),
        "classes": classes.len(),
        "aut_order": classes.first().map(|c| order_json(c.aut_order)),
        "self_dual": classes.first().map(|c| c.self_dual),
    });
    let expected = json!({
        "cliques": 26, "compat_vertices": 26, "compat_edges": 286, "configurations": 2, "classes": 1,
        "aut_order": 39, "self_dual": true,
    });
    checked(expected, observed, json!({}), labelled("Paley(13)", &found))
}

fn shrikhande_rook(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let g = graph("shrikhande")?;
    let cg = clique_graph(&g, 3);
    let found = find_configurations_from(&g, 3, &cg.cliques, None);
    let classes = reduce_isomorphs(&found)?;
    let target = canonical_form(&pg_triangle(5)?)?;
    let rook = find_configurations(&graph("rook:4")?, 3, None);
    let observed = json!({
        "cliques": cg.cliques.len(),
        "configurations": found.len(),
        "classes": classes.len(),
        "class_is_pg25_minus_triangle": classes.len() == 1 && classes[0].form == target,
        "rook4_configurations": rook.len(),
    });
    let expected = json!({
        "cliques": 32, "configurations": 2, "classes": 1, "class_is_pg25_minus_triangle": true, "rook4_configurations": 0,
    });
    checked(expected, observed, json!({ "rook4_cliques": k_cliques(&graph("rook:4")?, 3).len() }), labelled("Shrikhande", &found))
}

fn kind_label(kind: &GeometryKind) -> String {
    match kind {
        GeometryKind::PartialGeometry { alpha } => format!("pg(alpha={alpha})"),
        GeometryKind::SemipartialGeometry { alpha, mu } => format!("spg({alpha},{mu})"),
        GeometryKind::AlphaBetaGeometry { alpha, beta } => format!("({alpha},{beta})-geometry"),
        GeometryKind::General => "general".into(),
    }
}

fn petersen_complement(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let g = graph("complement:petersen")?;
    let cg = clique_graph(&g, 3);
    let found = find_configurations_from(&g, 3, &cg.cliques, None);
    let classes = reduce_isomorphs(&found)?;
    let desargues = moore_configuration(&graph("petersen")?)?;
    let des_form = canonical_form(&desargues)?;
    let mut kinds = Vec::new();
    let mut other_values = Vec::new();
    for c in &classes {
        let a = c.representative.alpha_spectrum()?;
        if c.form != des_form {
            other_values = a.values();
        }
        kinds.push((c.form == des_form, kind_label(&a.kind)));
    }
    kinds.sort();
    let observed = json!({
        "classes": classes.len(),
        "kinds": kinds.iter().map(|(d, k)| json!({ "desargues": d, "kind": k })).collect::<Vec<_>>(),
    });
    let expected = json!({
        "classes": 2,
        "kinds": [{ "desargues": false, "kind": "general" }, { "desargues": true, "kind": "spg(2,4)" }],
    });
    let details = json!({
        "cliques": cg.cliques.len(),
        "compat_edges": cg.compat.edge_count(),
        "configurations": found.len(),
        "non_desargues_spectrum_values": other_values,
    });
    checked(expected, observed, details, labelled("Petersen complement", &found))
}

fn triangle_36_5(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let t = pg_triangle(7)?;
    let p = t.src_check()?;
    let g = graph("complement:cyclic-latin:6")?;
    let cg = clique_graph(&g, 5);
    let found = find_configurations_from(&g, 5, &cg.cliques, None);
    let classes = reduce_isomorphs(&found)?;
    let form = canonical_form(&t)?;
    let observed = json!({
        "params": p.map(|p| p.to_string()),
        "proper": t.is_proper()?,
        "primitive": p.is_some_and(|p| 0 < p.mu && p.mu < p.d()),
        "graph": srg_check(&g).map(|s| s.as_tuple()),
        "cliques_in_range": (132..=336).contains(&cg.cliques.len()),
        "configurations": found.len(),
        "classes": classes.len(),
        "class_is_pg27_minus_triangle": classes.len() == 1 && classes[0].form == form,
    });
    let expected = json!({
        "params": "(36_5;10,12)",
        "proper": true,
        "primitive": true,
        "graph": [36, 20, 10, 12],
        "cliques_in_range": true,
        "configurations": 2,
        "classes": 1,
        "class_is_pg27_minus_triangle": true,
    });
    let mut configs = labelled("(36_5) classification", &found);
    configs.push(("PG(2,7) minus triangle".into(), t));
    checked(expected, observed, json!({ "cliques": cg.cliques.len() }), configs)
}

fn named(g: &Group, names: &[&str]) -> Result<Vec<u32>> {
    names.iter().map(|n| g.element(n)).collect()
}

fn published_sdds(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let z13 = Group::cyclic(13);
    let z4s4 = Group::direct_product(&Group::cyclic(4), &Group::symmetric(4));
    let s5 = Group::symmetric(5);
    let frob = Group::frobenius_31_5();
    let (q8q8, d1, d2) = quaternion_pair_sets();
    let sets: Vec<(&str, &Group, Vec<u32>)> = vec![
        ("Z13", &z13, vec![7, 8, 11]),
        ("Z4 x S4", &z4s4, named(&z4s4, &["0|id", "1|(1,4)(2,3)", "1|(1,3,4,2)", "1|(1,4,3)", "2|(1,2,4)"])?),
        ("S5", &s5, named(&s5, &["id", "(1,2,5,3,4)", "(1,3,4,2,5)", "(1,5,3,2,4)", "(1,4)(2,3,5)", "(1,4,5,2)", "(1,2,4)", "(1,2,5)"])?),
        ("Z31:Z5", &frob, named(&frob, &["id", "f^12g^4", "f^15g", "f^18", "f^20g^2", "f^26g^3", "f^30"])?),
        ("Q8 x Q8, D1", &q8q8, d1),
        ("Q8 x Q8, D2", &q8q8, d2),
    ];
    let mut observed = Vec::new();
    let mut configs = Vec::new();
    for (name, g, d) in &sets {
        let dev = development(g, d)?;
        observed.push(json!({
            "group": name,
            "sdds": sdds_check(g, d),
            "params": params_json(&dev)?,
            "aut_order": order_json(aut_order(&dev)?),
            "self_dual": is_self_dual(&dev)?,
        }));
        configs.push((format!("development in {name}"), dev));
    }
    let dual_pair = canonical_form(&configs[4].1.dual()?)? == canonical_form(&configs[5].1)?;
    let observed = json!({ "sets": observed, "q8_developments_dual_to_each_other": dual_pair });
    let row = |group: &str, l: u64, m: u64, params: &str, aut: u64, sd: bool| {
        json!({ "group": group, "sdds": [l, m], "params": params, "aut_order": aut, "self_dual": sd })
    };
    let expected = json!({
        "sets": [
            row("Z13", 2, 3, "(13_3;2,3)", 39, true),
            row("Z4 x S4", 4, 4, "(96_5;4,4)", 11520, true),
            row("S5", 28, 24, "(120_8;28,24)", 20160, true),
            row("Z31:Z5", 17, 9, "(155_7;17,9)", 9_999_360, true),
            row("Q8 x Q8, D1", 26, 30, "(64_7;26,30)", 768, false),
            row("Q8 x Q8, D2", 26, 30, "(64_7;26,30)", 768, false),
        ],
        "q8_developments_dual_to_each_other": true,
    });
    checked(expected, observed, json!({}), configs)
}

fn z13_search(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let g = Group::cyclic(13);
    let found = sdds_search(&g, 3, 2, 3, Normalization::ContainsIdentity)?;
    let devs = found.iter().map(|d| development(&g, d)).collect::<Result<Vec<_>>>()?;
    let params: BTreeSet<String> = devs
        .iter()
        .map(|c| Ok(c.src_check()?.map_or_else(|| "not strongly regular".into(), |p| p.to_string())))
        .collect::<Result<_>>()?;
    let classes = reduce_isomorphs(&devs)?;
    let observed = json!({ "params": params, "classes": classes.len(), "nonempty": !found.is_empty() });
    let expected = json!({ "params": ["(13_3;2,3)"], "classes": 1, "nonempty": true });
    checked(expected, observed, json!({ "normalized_sets": found }), labelled("Z13 development", &devs))
}

fn concurrence(blocks: &[Vec<u32>]) -> Graph {
    let mut g = Graph::empty(blocks.len());
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if blocks[i].iter().any(|x| blocks[j].binary_search(x).is_ok()) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn lp4_2(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let settings = [(false, false), (true, false), (false, true), (true, true)];
    let flags = |(h, p): (bool, bool)| PolarityFlags { hyperplane_side: h, point_side: p };
    let mut configs = Vec::new();
    let mut params = Vec::new();
    let mut aut = Vec::new();
    let mut self_dual = Vec::new();
    let mut kinds = Vec::new();
    for s in settings {
        let c = lp4(2, flags(s))?;
        params.push(params_json(&c)?);
        aut.push(order_json(aut_order(&c)?));
        self_dual.push(is_self_dual(&c)?);
        kinds.push(c.alpha_spectrum()?);
        configs.push((format!("LP(4,2) hyperplane_side={} point_side={}", s.0, s.1), c));
    }
    let point_graph_equal = configs[0].1.associated_graph(Side::Point)? == configs[1].1.associated_graph(Side::Point)?;
    let (_, plain) = lp4_lines_by_plane(2, flags((false, false)))?;
    let (_, point) = lp4_lines_by_plane(2, flags((false, true)))?;
    let line_graph_equal = concurrence(&plain) == concurrence(&point);
    let dual_pair = canonical_form(&configs[1].1.dual()?)? == canonical_form(&configs[2].1)?;
    let observed = json!({
        "params": params,
        "plain_kind": kind_label(&kinds[0].kind),
        "hyperplane_kind": kind_label(&kinds[1].kind),
        "hyperplane_spectrum_contains_7": kinds[1].spectrum.contains_key(&7),
        "point_graph_unchanged_by_hyperplane_side": point_graph_equal,
        "line_graph_unchanged_by_point_side": line_graph_equal,
        "hyperplane_dual_is_point_side": dual_pair,
        "self_dual": self_dual,
        "aut_orders": aut,
    });
    let expected = json!({
        "params": vec!["(155_7;17,9)"; 4],
        "plain_kind": "spg(3,9)",
        "hyperplane_kind": "general",
        "hyperplane_spectrum_contains_7": true,
        "point_graph_unchanged_by_hyperplane_side": true,
        "line_graph_unchanged_by_point_side": true,
        "hyperplane_dual_is_point_side": true,
        "self_dual": [true, false, false, true],
        "aut_orders": [9_999_360, 322_560, 322_560, 20_160],
    });
    let spectra: Vec<Value> = kinds.iter().map(|k| json!(k.values())).collect();
    checked(expected, observed, json!({ "spectrum_values": spectra }), configs)
}

fn hoffman_singleton(_: &ClaimEnv) -> Result<ClaimOutcome> {
    let c = moore_configuration(&graph("hoffman-singleton")?)?;
    let observed = json!({
        "params": params_json(&c)?,
        "aut_order": order_json(aut_order(&c)?),
        "self_dual": is_self_dual(&c)?,
    });
    let expected = json!({ "params": "(50_7;35,36)", "aut_order": 252_000, "self_dual": true });
    checked(expected, observed, json!({}), vec![("Hoffman-Singleton neighbourhoods".into(), c)])
}

/// Point and line graph parameters of every configuration the other
/// construction claims build.
fn line_graphs(env: &ClaimEnv) -> Result<ClaimOutcome> {
    let mut all = Vec::new();
    for claim in CLAIMS.iter().filter(|c| (4..=11).contains(&c.criterion)) {
        if let ClaimOutcome::Checked(ch) = claim.run(env)? {
            all.extend(ch.configurations);
        }
    }
    line_graph_check(&all)
}

/// The check behind [`line_graphs`], on configurations already at hand.
pub fn line_graph_check(configs: &[(String, Configuration)]) -> Result<ClaimOutcome> {
    let mut mismatches = Vec::new();
    for (label, c) in configs {
        let p = srg_check(&c.associated_graph(Side::Point)?);
        let l = srg_check(&c.associated_graph(Side::Line)?);
        if p.is_none() || p != l {
            mismatches.push(label.clone());
        }
    }
    checked(json!({ "mismatches": [] }), json!({ "mismatches": mismatches }), json!({ "configurations": configs.len() }), vec![])
}

struct Family {
    key: &'static str,
    srg: SrgParams,
    k: usize,
    graphs: usize,
    cliques: (usize, usize),
}

const FAMILIES: [Family; 2] = [
    Family { key: "srg25", srg: SrgParams { v: 25, d: 12, lambda: 5, mu: 6 }, k: 4, graphs: 15, cliques: (73, 90) },
    Family { key: "srg45", srg: SrgParams { v: 45, d: 12, lambda: 3, mu: 3 }, k: 4, graphs: 78, cliques: (12, 135) },
];

/// Every graph in the regular files of `dir`, in file-name order; files that
/// do not parse are listed separately.
fn load_dir(dir: &Path) -> Result<(Vec<Graph>, Vec<String>)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => srconf_core::Error::FileNotFound(dir.to_path_buf()),
            _ => e.into(),
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for p in paths {
        match read_graph_file(&p) {
            Ok(gs) => graphs.extend(gs),
            Err(_) => skipped.push(p.display().to_string()),
        }
    }
    Ok((graphs, skipped))
}

fn external_srg(env: &ClaimEnv) -> Result<ClaimOutcome> {
    let Some(dir) = &env.data_dir else {
        return Ok(ClaimOutcome::MissingData(format!("{DATA_DIR_VAR} is not set")));
    };
    let (graphs, skipped) = load_dir(dir)?;
    let mut observed = serde_json::Map::new();
    let mut expected = serde_json::Map::new();
    let mut details = serde_json::Map::new();
    for f in &FAMILIES {
        let members: Vec<&Graph> = graphs.iter().filter(|g| srg_check(g) == Some(f.srg)).collect();
        let counts: Vec<usize> = members.iter().map(|g| k_cliques(g, f.k).len()).collect();
        let configurations: usize = members.iter().map(|g| find_configurations(g, f.k, Some(1)).len()).sum();
        let in_range = counts.iter().all(|n| (f.cliques.0..=f.cliques.1).contains(n));
        observed.insert(f.key.into(), json!({ "graphs": members.len(), "clique_counts_in_range": in_range, "configurations": configurations }));
        expected.insert(f.key.into(), json!({ "graphs": f.graphs, "clique_counts_in_range": true, "configurations": 0 }));
        details.insert(
            f.key.into(),
            json!({ "min_cliques": counts.iter().min(), "max_cliques": counts.iter().max(), "range": [f.cliques.0, f.cliques.1] }),
        );
    }
    details.insert("unreadable_files".into(), json!(skipped));
    details.insert("graphs_read".into(), json!(graphs.len()));
    checked(Value::Object(expected), Value::Object(observed), Value::Object(details), vec![])
}
