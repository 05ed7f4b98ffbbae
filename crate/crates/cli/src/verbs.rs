use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use srconf_core::classify::{clique_graph, find_configurations_from, reduce_isomorphs};
use srconf_core::constructions::{development, ConstructionSpec};
use srconf_core::feasibility::{enumerate_feasible, render_table, ExclusionList};
use srconf_core::graphs::{read_graph_file, srg_check};
use srconf_core::iso::{analyse, canonical_form, is_self_dual};
use srconf_core::sdds::{difference_profile, sdds_check, sdds_search, Normalization};
use srconf_core::{Configuration, Error, Graph, GraphSpec, Group, GroupSpec, Side};

use crate::claims::{self, order_json, table_summary, ClaimEnv, ClaimOutcome};
use crate::{FileFormat, NormalizationArg, Verb, VerbOutput};

#[derive(Debug)]
pub(crate) struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub(crate) fn name(verb: &Verb) -> &'static str {
    match verb {
        Verb::FeasibleTable { .. } => "feasible-table",
        Verb::Construct { .. } => "construct",
        Verb::Verify { .. } => "verify",
        Verb::Classify { .. } => "classify",
        Verb::SddsCheck { .. } => "sdds-check",
        Verb::SddsSearch { .. } => "sdds-search",
        Verb::Iso { .. } => "iso",
        Verb::Aut { .. } => "aut",
        Verb::Selfdual { .. } => "selfdual",
        Verb::Dual { .. } => "dual",
        Verb::Spectrum { .. } => "spectrum",
        Verb::Reproduce { .. } => "reproduce",
    }
}

fn looks_like_spec(arg: &str) -> bool {
    arg.trim_start().starts_with('{') || arg.contains(':')
}

/// A file when one exists at `arg`, a construction spec otherwise.
pub(crate) fn load_configuration(arg: &str) -> Result<Configuration> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(Configuration::read_file(path)?);
    }
    if looks_like_spec(arg) {
        return Ok(arg.parse::<ConstructionSpec>()?.build()?);
    }
    Err(Error::FileNotFound(path.to_path_buf()).into())
}

fn load_graphs(arg: &str) -> Result<Vec<Graph>> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(read_graph_file(path)?);
    }
    match arg.parse::<GraphSpec>() {
        Ok(spec) => Ok(vec![spec.build()?]),
        Err(e) if looks_like_spec(arg) => Err(e.into()),
        Err(_) => Err(Error::FileNotFound(path.to_path_buf()).into()),
    }
}

fn load_group(arg: &str) -> Result<Group> {
    let spec = if Path::new(arg).is_file() { GroupSpec::CayleyFile(PathBuf::from(arg)) } else { arg.parse()? };
    Ok(Group::build(&spec)?)
}

fn summary(c: &Configuration) -> Result<Value> {
    let params = if c.is_valid() { c.src_check()?.map(|p| p.to_string()) } else { None };
    Ok(json!({ "v": c.v(), "k": c.k(), "params": params }))
}

fn write_configuration(c: &Configuration, path: &Path, format: FileFormat) -> Result<()> {
    let text = match format {
        FileFormat::Text => c.to_text(),
        FileFormat::Json => c.to_json() + "\n",
    };
    std::fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn output(inputs: Value, results: Value) -> Result<VerbOutput> {
    Ok(VerbOutput { inputs, results, claim_check: None, text: None })
}

pub(crate) fn dispatch(verb: &Verb) -> Result<VerbOutput> {
    match verb {
        Verb::FeasibleTable { vmax, exclusions, no_exclusions, text } => {
            let (list, source) = match (exclusions, no_exclusions) {
                (Some(p), _) => (ExclusionList::read_file(p)?, p.display().to_string()),
                (None, true) => (ExclusionList::default(), "none".into()),
                (None, false) => (ExclusionList::builtin(), "builtin".into()),
            };
            let rows = enumerate_feasible(*vmax, &list);
            let results = json!({
                "summary": table_summary(&rows),
                "rows": rows.iter().map(|r| {
                    let mut v = serde_json::to_value(r).expect("verdict serializes");
                    v["label"] = json!(r.params.to_string());
                    v
                }).collect::<Vec<_>>(),
            });
            let mut out = output(json!({ "vmax": vmax, "exclusions": source }), results)?;
            if *text {
                out.text = Some(render_table(&rows));
            }
            Ok(out)
        }
        Verb::Construct { spec, write, format } => {
            let parsed: ConstructionSpec = spec.parse()?;
            let c = parsed.build()?;
            if let Some(p) = write {
                write_configuration(&c, p, *format)?;
            }
            let mut results = summary(&c)?;
            results["lines"] = json!(c.lines());
            output(json!({ "spec": parsed.to_string(), "write": write }), results)
        }
        Verb::Verify { source } => {
            let c = load_configuration(source)?;
            let violations: Vec<String> = match c.validate() {
                Ok(()) => vec![],
                Err(v) => v.iter().map(ToString::to_string).collect(),
            };
            let mut results = json!({ "v": c.v(), "k": c.k(), "valid": violations.is_empty(), "violations": violations });
            if c.is_valid() {
                let point = srg_check(&c.associated_graph(Side::Point)?);
                let line = srg_check(&c.associated_graph(Side::Line)?);
                let params = c.src_check()?;
                results["params"] = json!(params.map(|p| p.to_string()));
                results["point_graph"] = json!(point.map(|p| p.as_tuple()));
                results["line_graph"] = json!(line.map(|p| p.as_tuple()));
                results["proper"] = json!(c.is_proper()?);
                results["primitive"] = json!(params.map(|p| 0 < p.mu && p.mu < p.d()));
                results["geometry"] = serde_json::to_value(c.alpha_spectrum()?).expect("spectrum serializes");
            }
            output(json!({ "source": source }), results)
        }
        Verb::Classify { graph, k, limit } => {
            let graphs = load_graphs(graph)?;
            let mut per_graph = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let cg = clique_graph(g, *k);
                let found = find_configurations_from(g, *k, &cg.cliques, *limit);
                let classes = reduce_isomorphs(&found)?;
                let mut entry = json!({
                    "index": i,
                    "srg": cg.srg.map(|p| p.as_tuple()),
                    "cliques": cg.cliques.len(),
                    "edges": cg.compat.edge_count(),
                    "configurations": found.len(),
                    "classes": classes.iter().map(|c| json!({
                        "aut_order": order_json(c.aut_order),
                        "self_dual": c.self_dual,
                        "count": c.count,
                        "params": c.representative.src_check().ok().flatten().map(|p| p.to_string()),
                        "form": c.form.hex(),
                    })).collect::<Vec<_>>(),
                });
                if !cg.fits_k() {
                    entry["warning"] = json!(format!("graph is not SRG(v, {}, lambda, mu)", k * (k - 1)));
                }
                per_graph.push(entry);
            }
            output(json!({ "graph": graph, "k": k, "limit": limit }), json!({ "graphs": per_graph }))
        }
        Verb::SddsCheck { group, set, indices } => {
            let g = load_group(group)?;
            let d: Vec<u32> = match (set, indices) {
                (Some(s), _) => s.split(';').map(str::trim).filter(|t| !t.is_empty()).map(|t| g.element(t)).collect::<std::result::Result<_, _>>()?,
                (None, Some(s)) => s
                    .split(',')
                    .map(|t| {
                        let i: u32 = t.trim().parse().map_err(|_| CliError(format!("bad index `{t}`")))?;
                        if i as usize >= g.order() {
                            return Err(CliError(format!("index {i} out of range for a group of order {}", g.order())));
                        }
                        Ok(i)
                    })
                    .collect::<Result<_>>()?,
                (None, None) => return Err(CliError("give --set or --indices".into())),
            };
            let profile = difference_profile(&g, &d);
            let lm = sdds_check(&g, &d);
            let dev = match lm {
                Some(_) => Some(summary(&development(&g, &d)?)?),
                None => None,
            };
            let results = json!({
                "order": g.order(),
                "set": d,
                "names": d.iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
                "deficient": profile.is_some(),
                "differences": profile.as_ref().map(|p| p.delta.len()),
                "sdds": lm,
                "development": dev,
            });
            output(json!({ "group": group, "set": set, "indices": indices }), results)
        }
        Verb::SddsSearch { group, k, lambda, mu, normalization, develop } => {
            let g = load_group(group)?;
            let norm = match normalization {
                NormalizationArg::None => Normalization::None,
                NormalizationArg::ContainsIdentity => Normalization::ContainsIdentity,
            };
            let found = sdds_search(&g, *k, *lambda, *mu, norm)?;
            let mut results = json!({
                "order": g.order(),
                "count": found.len(),
                "sets": found,
                "names": found.iter().map(|d| d.iter().map(|&x| g.name(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            if *develop {
                let devs = found.iter().map(|d| development(&g, d)).collect::<srconf_core::Result<Vec<_>>>()?;
                let params = devs.iter().map(summary).collect::<Result<Vec<_>>>()?;
                let classes = reduce_isomorphs(&devs)?;
                results["developments"] = json!(params);
                results["classes"] = json!(classes
                    .iter()
                    .map(|c| json!({ "aut_order": order_json(c.aut_order), "self_dual": c.self_dual, "count": c.count }))
                    .collect::<Vec<_>>());
            }
            let inputs = json!({ "group": group, "k": k, "lambda": lambda, "mu": mu, "normalization": norm, "develop": develop });
            output(inputs, results)
        }
        Verb::Iso { a, b } => {
            let (x, y) = (load_configuration(a)?, load_configuration(b)?);
            let same = canonical_form(&x)? == canonical_form(&y)?;
            output(json!({ "a": a, "b": b }), json!({ "a": summary(&x)?, "b": summary(&y)?, "isomorphic": same }))
        }
        Verb::Aut { source } => {
            let c = load_configuration(source)?;
            let a = analyse(&c)?;
            let results = json!({
                "configuration": summary(&c)?,
                "aut_order": order_json(a.aut_order),
                "generators": a.generators.len(),
                "form": a.form.hex(),
            });
            output(json!({ "source": source }), results)
        }
        Verb::Selfdual { source } => {
            let c = load_configuration(source)?;
            output(json!({ "source": source }), json!({ "configuration": summary(&c)?, "self_dual": is_self_dual(&c)? }))
        }
        Verb::Dual { source, write, format } => {
            let d = load_configuration(source)?.dual()?;
            if let Some(p) = write {
                write_configuration(&d, p, *format)?;
            }
            let mut results = summary(&d)?;
            results["lines"] = json!(d.lines());
            output(json!({ "source": source, "write": write }), results)
        }
        Verb::Spectrum { source } => {
            let c = load_configuration(source)?;
            let spec = c.alpha_spectrum()?;
            let results = json!({
                "configuration": summary(&c)?,
                "kind": spec.kind,
                "values": spec.values(),
                "spectrum": spec.spectrum,
            });
            output(json!({ "source": source }), results)
        }
        Verb::Reproduce { claim, list } => {
            if *list || claim.is_none() {
                let all: Vec<Value> =
                    claims::CLAIMS.iter().map(|c| json!({ "id": c.id, "criterion": c.criterion, "title": c.title })).collect();
                return output(json!({ "list": true }), json!({ "claims": all }));
            }
            let key = claim.as_deref().unwrap_or_default();
            let c = claims::find(key).ok_or_else(|| {
                let ids: Vec<&str> = claims::CLAIMS.iter().map(|c| c.id).collect();
                CliError(format!("unknown claim `{key}`; known claims: {}", ids.join(", ")))
            })?;
            match c.run(&ClaimEnv::from_env())? {
                ClaimOutcome::MissingData(why) => Err(CliError(format!("claim `{}` needs external data: {why}", c.id))),
                ClaimOutcome::Checked(ch) => Ok(VerbOutput {
                    inputs: json!({ "claim": c.id, "criterion": c.criterion }),
                    results: json!({ "title": c.title, "details": ch.details, "configurations": ch.configurations.len() }),
                    claim_check: Some(ch.check),
                    text: None,
                }),
            }
        }
    }
}
