//! Runs a chosen set of comparisons on two graphs and assembles a report
//! with one verdict per relation, optional witnesses, and a check that the
//! verdicts respect the known implications between the relations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{hom_indist_tplus_with, TPlusVerdict};
use crate::limits::Limits;
use crate::spectral::{
    commute_distances, cospectral_with, fuerer_invariant_with, integer_maps, spectrum_with,
    MatrixMapId, SpectralTolerance,
};
use crate::wl::{wl11_indistinguishable, wlk_indistinguishable_with, Depth, WlVerdict};
use crate::wlkd::{
    pseudo_stochastic_feasible_with, word_soe_test_with, PseudoStochasticVerdict, WordVerdict,
};

pub const SCHEMA_VERSION: u32 = 1;

/// A relation to test. Parameters left as `None` come from the
/// [`CompareConfig`].
#[derive(Clone, Debug, PartialEq)]
pub enum RelationSpec {
    Wl1,
    Wl11,
    Wlk {
        k: Option<usize>,
        d: Option<Depth>,
    },
    Cospectral(MatrixMapId),
    Fuerer,
    Commute,
    HomTplus(Option<usize>),
    WordSoe {
        k: Option<usize>,
        d: Option<usize>,
        bound: Option<usize>,
    },
    PseudoStochastic {
        k: Option<usize>,
        d: Option<usize>,
    },
}

/// A relation with every parameter fixed.
#[derive(Clone, Debug, PartialEq)]
pub enum Relation {
    Wl1,
    Wl11,
    Wlk { k: usize, d: Depth },
    Cospectral(MatrixMapId),
    Fuerer,
    Commute,
    HomTplus(usize),
    WordSoe { k: usize, d: usize, bound: usize },
    PseudoStochastic { k: usize, d: usize },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Wl1 => f.write_str("wl1"),
            Relation::Wl11 => f.write_str("wl11"),
            Relation::Wlk { k, d } => write!(f, "wlk({k},{d})"),
            Relation::Cospectral(id) => write!(f, "cospectral({id})"),
            Relation::Fuerer => f.write_str("fuerer"),
            Relation::Commute => f.write_str("commute"),
            Relation::HomTplus(b) => write!(f, "homTplus({b})"),
            Relation::WordSoe { k, d, bound } => write!(f, "wordSoe({k},{d},{bound})"),
            Relation::PseudoStochastic { k, d } => write!(f, "pseudoStochastic({k},{d})"),
        }
    }
}

/// Splits `name(a,b)` into the name and its arguments.
fn call(s: &str) -> Result<(&str, Vec<&str>)> {
    match s.find('(') {
        None => Ok((s, Vec::new())),
        Some(open) => {
            let inner = s[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::Argument(format!("unbalanced parentheses in `{s}`")))?;
            let args = if inner.is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(str::trim).collect()
            };
            Ok((&s[..open], args))
        }
    }
}

fn int(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Argument(format!("`{s}` is not a non-negative integer")))
}

impl FromStr for RelationSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = call(s.trim())?;
        let arity = |n: &[usize]| -> Result<()> {
            if n.contains(&args.len()) {
                Ok(())
            } else {
                Err(Error::Argument(format!(
                    "wrong number of arguments in `{s}`"
                )))
            }
        };
        let opt = |i: usize| args.get(i).map(|a| int(a)).transpose();
        Ok(match name {
            "wl1" => RelationSpec::Wl1,
            "wl11" => RelationSpec::Wl11,
            "wl2" => RelationSpec::Wlk {
                k: Some(2),
                d: Some(Depth::Stable),
            },
            "wlk" => {
                arity(&[0, 2])?;
                RelationSpec::Wlk {
                    k: opt(0)?,
                    d: args.get(1).map(|a| a.parse()).transpose()?,
                }
            }
            "cospectral" => {
                arity(&[0, 1])?;
                RelationSpec::Cospectral(match args.first() {
                    Some(m) => m.parse()?,
                    None => MatrixMapId::Adjacency,
                })
            }
            "fuerer" => RelationSpec::Fuerer,
            "commute" => RelationSpec::Commute,
            "homTplus" | "tplus" => {
                arity(&[0, 1])?;
                RelationSpec::HomTplus(opt(0)?)
            }
            "wordSoe" | "word" => {
                arity(&[0, 3])?;
                RelationSpec::WordSoe {
                    k: opt(0)?,
                    d: opt(1)?,
                    bound: opt(2)?,
                }
            }
            "pseudoStochastic" | "pseudo" => {
                arity(&[0, 2])?;
                RelationSpec::PseudoStochastic {
                    k: opt(0)?,
                    d: opt(1)?,
                }
            }
            _ => return Err(Error::Argument(format!("unknown test `{s}`"))),
        })
    }
}

/// Parses a comma separated list; commas inside parentheses belong to the
/// entry. `all` expands to every relation with the configured parameters.
pub fn parse_tests(list: &str) -> Result<Vec<RelationSpec>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<(usize, char)> = list.char_indices().collect();
    let mut items = Vec::new();
    for &(i, c) in &bytes {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&list[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&list[start..]);
    for item in items.into_iter().map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(all_tests());
        } else {
            out.push(item.parse()?);
        }
    }
    Ok(out)
}

pub fn default_tests() -> Vec<RelationSpec> {
    vec![
        RelationSpec::Wl1,
        RelationSpec::Wl11,
        RelationSpec::Cospectral(MatrixMapId::Adjacency),
        RelationSpec::Cospectral(MatrixMapId::Laplacian),
        RelationSpec::Commute,
    ]
}

fn all_tests() -> Vec<RelationSpec> {
    let mut out = vec![
        RelationSpec::Wl1,
        RelationSpec::Wl11,
        RelationSpec::Wlk {
            k: Some(2),
            d: Some(Depth::Stable),
        },
        RelationSpec::Wlk { k: None, d: None },
    ];
    out.extend(integer_maps().into_iter().map(RelationSpec::Cospectral));
    out.push(RelationSpec::Cospectral(MatrixMapId::RandomWalk));
    out.extend([
        RelationSpec::Fuerer,
        RelationSpec::Commute,
        RelationSpec::HomTplus(None),
        RelationSpec::WordSoe {
            k: None,
            d: None,
            bound: None,
        },
        RelationSpec::PseudoStochastic { k: None, d: None },
    ]);
    out
}

#[derive(Clone, Debug)]
pub struct CompareConfig {
    pub tests: Vec<RelationSpec>,
    pub k: usize,
    pub d: Depth,
    pub word_bound: usize,
    pub pattern_bound: usize,
    pub tolerance: SpectralTolerance,
    pub limits: Limits,
    /// Cap on distinct states in the word search.
    pub word_states: usize,
}

impl Default for CompareConfig {
    fn default() -> Self {
        CompareConfig {
            tests: default_tests(),
            k: 1,
            d: Depth::Finite(1),
            word_bound: 4,
            pattern_bound: 6,
            tolerance: SpectralTolerance::default(),
            limits: Limits::default(),
            word_states: 200_000,
        }
    }
}

impl CompareConfig {
    fn finite_d(&self) -> Result<usize> {
        match self.d {
            Depth::Finite(d) => Ok(d),
            Depth::Stable => Err(Error::Argument(
                "this certificate needs a finite --d".into(),
            )),
        }
    }

    pub fn resolve(&self, spec: &RelationSpec) -> Result<Relation> {
        Ok(match spec {
            RelationSpec::Wl1 => Relation::Wl1,
            RelationSpec::Wl11 => Relation::Wl11,
            RelationSpec::Wlk { k, d } => Relation::Wlk {
                k: k.unwrap_or(self.k),
                d: d.unwrap_or(self.d),
            },
            RelationSpec::Cospectral(id) => Relation::Cospectral(id.clone()),
            RelationSpec::Fuerer => Relation::Fuerer,
            RelationSpec::Commute => Relation::Commute,
            RelationSpec::HomTplus(b) => Relation::HomTplus(b.unwrap_or(self.pattern_bound)),
            RelationSpec::WordSoe { k, d, bound } => Relation::WordSoe {
                k: k.unwrap_or(self.k),
                d: match d {
                    Some(d) => *d,
                    None => self.finite_d()?,
                },
                bound: bound.unwrap_or(self.word_bound),
            },
            RelationSpec::PseudoStochastic { k, d } => Relation::PseudoStochastic {
                k: k.unwrap_or(self.k),
                d: match d {
                    Some(d) => *d,
                    None => self.finite_d()?,
                },
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "verdict", content = "reason")]
pub enum Verdict {
    Equal,
    Distinguished,
    EqualUpToBound,
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal => f.write_str("equal"),
            Verdict::Distinguished => f.write_str("distinguished"),
            Verdict::EqualUpToBound => f.write_str("equal up to bound"),
            Verdict::Skipped(reason) => write!(f, "skipped ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputInfo {
    pub name: String,
    pub order: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contradiction {
    pub premise: String,
    pub conclusion: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateReport {
    pub schema_version: u32,
    pub tool: BTreeMap<String, String>,
    pub inputs: [InputInfo; 2],
    pub config: BTreeMap<String, Value>,
    pub relations: BTreeMap<String, Outcome>,
    pub contradictions: Vec<Contradiction>,
}

impl CertificateReport {
    /// 1 if some relation distinguishes the graphs, else 0. Skipped
    /// relations do not count.
    pub fn exit_code(&self) -> i32 {
        let distinguished = self
            .relations
            .values()
            .any(|o| o.verdict == Verdict::Distinguished);
        i32::from(distinguished)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let [a, b] = &self.inputs;
        out.push_str(&format!(
            "{} (n={}, m={}) vs {} (n={}, m={})\n",
            a.name, a.order, a.size, b.name, b.order, b.size
        ));
        let width = self.relations.keys().map(String::len).max().unwrap_or(0);
        for (name, outcome) in &self.relations {
            out.push_str(&format!("  {name:width$}  {}", outcome.verdict));
            if let Some(w) = &outcome.witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        for c in &self.contradictions {
            out.push_str(&format!(
                "CONTRADICTION: {} but not {}\n",
                c.premise, c.conclusion
            ));
        }
        out
    }
}

fn wl_outcome(v: WlVerdict) -> Outcome {
    if v.indistinguishable {
        Outcome {
            verdict: Verdict::Equal,
            witness: None,
        }
    } else {
        Outcome {
            verdict: Verdict::Distinguished,
            witness: Some(json!({
                "iterations": v.iterations_used,
                "colour": v.witness.as_ref().map(|w| w.colour),
                "countG": v.witness.as_ref().map(|w| w.count_g),
                "countH": v.witness.as_ref().map(|w| w.count_h),
            })),
        }
    }
}

fn equal_if(equal: bool, witness: impl FnOnce() -> Option<Value>) -> Outcome {
    if equal {
        Outcome {
            verdict: Verdict::Equal,
            witness: None,
        }
    } else {
        Outcome {
            verdict: Verdict::Distinguished,
            witness: witness(),
        }
    }
}

fn evaluate(rel: &Relation, g: &Graph, h: &Graph, cfg: &CompareConfig) -> Result<Outcome> {
    let limits = &cfg.limits;
    let tol = &cfg.tolerance;
    Ok(match rel {
        Relation::Wl1 => wl_outcome(wlk_indistinguishable_with(g, h, 1, Depth::Stable, limits)?),
        Relation::Wl11 => wl_outcome(wl11_indistinguishable(g, h).verdict),
        Relation::Wlk { k, d } => wl_outcome(wlk_indistinguishable_with(g, h, *k, *d, limits)?),
        Relation::Cospectral(id) => {
            let equal = cospectral_with(id, g, h, tol)?;
            equal_if(equal, || {
                let show = |x: &Graph| -> Option<Value> {
                    let s = spectrum_with(id, x, tol).ok()?;
                    Some(
                        s.eigenvalues
                            .iter()
                            .map(|e| {
                                json!([
                                    tol.round(e.value) as f64 * tol.grid,
                                    tol.round(e.imag) as f64 * tol.grid,
                                    e.multiplicity
                                ])
                            })
                            .collect(),
                    )
                };
                Some(json!({ "spectrumG": show(g), "spectrumH": show(h) }))
            })
        }
        Relation::Fuerer => {
            let (a, b) = (
                fuerer_invariant_with(g, tol)?,
                fuerer_invariant_with(h, tol)?,
            );
            equal_if(a == b, || {
                let part = if a.spectrum != b.spectrum {
                    "spectrum"
                } else {
                    "eigenprojection entries"
                };
                Some(json!({ "differs": part }))
            })
        }
        Relation::Commute => {
            if g.order() != h.order() {
                equal_if(false, || Some(json!({ "orders": [g.order(), h.order()] })))
            } else {
                let (a, b) = (
                    commute_distances(g)?.multiset(),
                    commute_distances(h)?.multiset(),
                );
                let show = |x: &Option<crate::linalg::Q>| {
                    x.as_ref().map_or("inf".to_string(), |q| q.to_string())
                };
                equal_if(a == b, || {
                    let i = a.iter().zip(&b).position(|(x, y)| x != y)?;
                    Some(json!({ "sortedIndex": i, "g": show(&a[i]), "h": show(&b[i]) }))
                })
            }
        }
        Relation::HomTplus(bound) => match hom_indist_tplus_with(g, h, *bound, limits)? {
            TPlusVerdict::EqualUpToBound { patterns } => Outcome {
                verdict: Verdict::EqualUpToBound,
                witness: Some(json!({ "patterns": patterns })),
            },
            TPlusVerdict::Distinguished {
                pattern,
                count_g,
                count_h,
            } => Outcome {
                verdict: Verdict::Distinguished,
                witness: Some(json!({
                    "patternOrder": pattern.graph.order(),
                    "patternEdges": pattern.graph.edges(),
                    "homG": count_g.to_string(),
                    "homH": count_h.to_string(),
                })),
            },
        },
        Relation::WordSoe { k, d, bound } => {
            match word_soe_test_with(g, h, *k, *d, *bound, limits, cfg.word_states)? {
                WordVerdict::Witness { word, soe_g, soe_h } => Outcome {
                    verdict: Verdict::Distinguished,
                    witness: Some(json!({
                        "word": word.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                        "soeG": soe_g.to_string(),
                        "soeH": soe_h.to_string(),
                    })),
                },
                WordVerdict::NoWitness { states, .. } => Outcome {
                    verdict: Verdict::EqualUpToBound,
                    witness: Some(json!({ "states": states })),
                },
            }
        }
        Relation::PseudoStochastic { k, d } => {
            match pseudo_stochastic_feasible_with(g, h, *k, *d, limits)? {
                PseudoStochasticVerdict::Feasible { dim_g, dim_h, x } => Outcome {
                    verdict: Verdict::Equal,
                    witness: Some(json!({
                        "rows": dim_h,
                        "cols": dim_g,
                        "x": x.iter().map(|(r, c, v)| json!([r, c, v.to_string()])).collect::<Vec<_>>(),
                    })),
                },
                PseudoStochasticVerdict::Infeasible => Outcome {
                    verdict: Verdict::Distinguished,
                    witness: None,
                },
            }
        }
    })
}

/// Implications `premise equal => conclusion not distinguished` between the
/// relations present in the report.
fn lattice(relations: &[(Relation, Verdict)]) -> Vec<Contradiction> {
    use Relation::*;
    let implies = |a: &Relation, b: &Relation| -> bool {
        match (a, b) {
            (
                Wlk {
                    k,
                    d: Depth::Stable,
                },
                Wl11,
            ) => *k >= 2,
            (
                Wlk {
                    k,
                    d: Depth::Stable,
                },
                Commute,
            ) => *k >= 2,
            (Wlk { k: k1, d: d1 }, Wlk { k: k2, d: d2 }) => {
                let deeper = match (d1, d2) {
                    (Depth::Stable, _) => true,
                    (Depth::Finite(x), Depth::Finite(y)) => x >= y,
                    (Depth::Finite(_), Depth::Stable) => false,
                };
                k1 >= k2 && deeper && (k1, d1) != (k2, d2)
            }
            (
                Wlk {
                    d: Depth::Stable, ..
                },
                Wl1,
            ) => true,
            (Wl11, Wl1) | (Wl11, Cospectral(_)) | (Wl11, Fuerer) | (Wl11, HomTplus(_)) => true,
            (Fuerer, Cospectral(MatrixMapId::Adjacency)) => true,
            (
                Wlk {
                    k: k1,
                    d: Depth::Finite(d1),
                },
                PseudoStochastic { k: k2, d: d2 },
            )
            | (
                PseudoStochastic { k: k1, d: d1 },
                Wlk {
                    k: k2,
                    d: Depth::Finite(d2),
                },
            ) => k1 == k2 && d1 == d2,
            (
                Wlk {
                    k: k1,
                    d: Depth::Finite(d1),
                },
                WordSoe { k: k2, d: d2, .. },
            )
            | (PseudoStochastic { k: k1, d: d1 }, WordSoe { k: k2, d: d2, .. }) => {
                k1 == k2 && d1 == d2
            }
            _ => false,
        }
    };
    let mut out = Vec::new();
    for (a, va) in relations {
        if *va != Verdict::Equal {
            continue;
        }
        for (b, vb) in relations {
            if *vb == Verdict::Distinguished && implies(a, b) {
                out.push(Contradiction {
                    premise: format!("{a} equal"),
                    conclusion: format!("{b} not distinguished"),
                });
            }
        }
    }
    out
}

/// A graph with a display name for the report.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

/// Runs every configured relation. Failures of a single relation, such as
/// a size cap, are recorded as skipped with the reason.
pub fn run_compare(a: &NamedGraph, b: &NamedGraph, cfg: &CompareConfig) -> CertificateReport {
    let mut relations = BTreeMap::new();
    let mut resolved = Vec::new();
    for spec in &cfg.tests {
        let (key, outcome, rel) = match cfg.resolve(spec) {
            Ok(rel) => {
                let outcome = evaluate(&rel, &a.graph, &b.graph, cfg).unwrap_or_else(|e| Outcome {
                    verdict: Verdict::Skipped(e.to_string()),
                    witness: None,
                });
                (rel.to_string(), outcome, Some(rel))
            }
            Err(e) => (
                format!("{spec:?}"),
                Outcome {
                    verdict: Verdict::Skipped(e.to_string()),
                    witness: None,
                },
                None,
            ),
        };
        if relations.contains_key(&key) {
            continue;
        }
        if let Some(rel) = rel {
            resolved.push((rel, outcome.verdict.clone()));
        }
        relations.insert(key, outcome);
    }
    let contradictions = lattice(&resolved);

    let mut config = BTreeMap::new();
    config.insert("k".into(), json!(cfg.k));
    config.insert("d".into(), json!(cfg.d.to_string()));
    config.insert("wordBound".into(), json!(cfg.word_bound));
    config.insert("patternBound".into(), json!(cfg.pattern_bound));
    config.insert("relativeTolerance".into(), json!(cfg.tolerance.relative));
    config.insert("roundingGrid".into(), json!(cfg.tolerance.grid));
    config.insert(
        "certificateCap".into(),
        json!(cfg.limits.certificate_cap.to_string()),
    );
    config.insert("wordStateCap".into(), json!(cfg.word_states));
    let mut tool = BTreeMap::new();
    tool.insert("name".into(), env!("CARGO_PKG_NAME").into());
    tool.insert("version".into(), env!("CARGO_PKG_VERSION").into());

    let info = |x: &NamedGraph| InputInfo {
        name: x.name.clone(),
        order: x.graph.order(),
        size: x.graph.size(),
    };
    CertificateReport {
        schema_version: SCHEMA_VERSION,
        tool,
        inputs: [info(a), info(b)],
        config,
        relations,
        contradictions,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl FromStr for InputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(InputFormat::Graph6),
            "edgelist" | "edges" => Ok(InputFormat::EdgeList),
            _ => Err(Error::Argument(format!("unknown format `{s}`"))),
        }
    }
}

/// Loads a shipped fixture by name, or else reads a file. Without an
/// explicit format, `.g6` files are graph6 and everything else is an edge
/// list.
pub fn load_graph(arg: &str, format: Option<InputFormat>) -> Result<NamedGraph> {
    if let Some(graph) = crate::graph::families::fixture(arg) {
        return Ok(NamedGraph {
            name: arg.to_string(),
            graph,
        });
    }
    let text = std::fs::read_to_string(arg)?;
    let format = format.unwrap_or(if arg.ends_with(".g6") {
        InputFormat::Graph6
    } else {
        InputFormat::EdgeList
    });
    let graph = match format {
        InputFormat::Graph6 => crate::graph::parse_graph6(text.trim())?,
        InputFormat::EdgeList => crate::graph::parse_edge_list(&text)?,
    };
    Ok(NamedGraph {
        name: arg.to_string(),
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::fixture;

    fn named(name: &str) -> NamedGraph {
        NamedGraph {
            name: name.into(),
            graph: fixture(name).unwrap(),
        }
    }

    #[test]
    fn splits_outside_parentheses() {
        let t = parse_tests("wl1, wlk(2,inf),cospectral(laplacian),wordSoe(2,1,3)").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(
            t[1],
            RelationSpec::Wlk {
                k: Some(2),
                d: Some(Depth::Stable)
            }
        );
        assert_eq!(
            t[3],
            RelationSpec::WordSoe {
                k: Some(2),
                d: Some(1),
                bound: Some(3)
            }
        );
        assert!(parse_tests("wlk(2").is_err());
        assert!(parse_tests("nonsense").is_err());
    }

    #[test]
    fn identical_graphs_exit_zero() {
        let r = run_compare(&named("c6"), &named("c6"), &CompareConfig::default());
        assert_eq!(r.exit_code(), 0);
        assert!(r.relations.values().all(|o| o.verdict == Verdict::Equal));
        assert!(r.contradictions.is_empty());
    }

    #[test]
    fn c6_vs_two_triangles() {
        let cfg = CompareConfig {
            tests: parse_tests("wl1,wl2,cospectral(adjacency),pseudoStochastic(1,1)").unwrap(),
            ..CompareConfig::default()
        };
        let r = run_compare(&named("c6"), &named("two-c3"), &cfg);
        assert_eq!(r.relations["wl1"].verdict, Verdict::Equal);
        assert_eq!(r.relations["wlk(2,inf)"].verdict, Verdict::Distinguished);
        assert_eq!(
            r.relations["cospectral(adjacency)"].verdict,
            Verdict::Distinguished
        );
        assert_eq!(r.exit_code(), 1);
        assert!(r.contradictions.is_empty());
    }

    #[test]
    fn size_caps_become_skips() {
        let cfg = CompareConfig {
            tests: parse_tests("pseudoStochastic(2,2)").unwrap(),
            ..CompareConfig::default()
        };
        let r = run_compare(&named("c6"), &named("two-c3"), &cfg);
        let o = r.relations.values().next().unwrap();
        assert!(matches!(o.verdict, Verdict::Skipped(_)));
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn json_is_deterministic() {
        let cfg = CompareConfig::default();
        let a = run_compare(&named("c4"), &named("c4-plus-k1"), &cfg).to_json();
        let b = run_compare(&named("c4"), &named("c4-plus-k1"), &cfg).to_json();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
    }

    #[test]
    fn lattice_flags_inconsistent_verdicts() {
        let c = lattice(&[
            (Relation::Wl11, Verdict::Equal),
            (Relation::Wl1, Verdict::Distinguished),
        ]);
        assert_eq!(c.len(), 1);
        let c = lattice(&[
            (
                Relation::Wlk {
                    k: 1,
                    d: Depth::Finite(1),
                },
                Verdict::Distinguished,
            ),
            (Relation::PseudoStochastic { k: 1, d: 1 }, Verdict::Equal),
        ]);
        assert_eq!(c.len(), 1);
    }
}
