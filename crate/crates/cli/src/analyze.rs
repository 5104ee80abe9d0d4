use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use shk_core::certificate::{check_complex_certificate, check_graph_certificate, check_ideal_certificate};
use shk_core::combinatorial::{
    is_dismissing_vertex, is_scalable, is_shedding_vertex, is_shellable, is_vertex_decomposable,
    is_vertex_dismissible, is_weakly_connected,
};
use shk_core::homology::{depth, is_cohen_macaulay, is_initially_cm, is_sequentially_cm, reduced_homology_ranks};
use shk_core::ideal_props::{
    graded_betti_numbers, has_degree_quotients, has_linear_quotients, is_vertex_divisible, is_vertex_splittable,
    resolution_profile,
};
use shk_core::{Certificate, Decision, FieldSpec, Method, SearchLimit, SimplicialComplex, Truth};

use crate::input::Input;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prop {
    VertexDecomposable,
    VertexDismissible,
    Shellable,
    Scalable,
    WeaklyConnected,
    CohenMacaulay,
    InitiallyCm,
    SequentiallyCm,
    Depth,
    Homology,
    Dismissing(String),
    Shedding(String),
    VertexDivisible,
    VertexSplittable,
    LinearQuotients,
    DegreeQuotients,
    Regularity,
    DegreeResolution,
    LinearResolution,
    ComponentwiseLinear,
    Betti,
    Chordal,
    Cochordal,
}

const COMPLEX_PROPS: [Prop; 10] = [
    Prop::VertexDecomposable,
    Prop::VertexDismissible,
    Prop::Shellable,
    Prop::Scalable,
    Prop::WeaklyConnected,
    Prop::CohenMacaulay,
    Prop::InitiallyCm,
    Prop::SequentiallyCm,
    Prop::Depth,
    Prop::Homology,
];

const IDEAL_PROPS: [Prop; 9] = [
    Prop::VertexDivisible,
    Prop::VertexSplittable,
    Prop::LinearQuotients,
    Prop::DegreeQuotients,
    Prop::Regularity,
    Prop::DegreeResolution,
    Prop::LinearResolution,
    Prop::ComponentwiseLinear,
    Prop::Betti,
];

impl Prop {
    pub fn name(&self) -> String {
        let base = match self {
            Prop::VertexDecomposable => "vertex_decomposable",
            Prop::VertexDismissible => "vertex_dismissible",
            Prop::Shellable => "shellable",
            Prop::Scalable => "scalable",
            Prop::WeaklyConnected => "weakly_connected",
            Prop::CohenMacaulay => "cohen_macaulay",
            Prop::InitiallyCm => "initially_cm",
            Prop::SequentiallyCm => "sequentially_cm",
            Prop::Depth => "depth",
            Prop::Homology => "homology",
            Prop::Dismissing(x) => return format!("dismissing:{x}"),
            Prop::Shedding(x) => return format!("shedding:{x}"),
            Prop::VertexDivisible => "vertex_divisible",
            Prop::VertexSplittable => "vertex_splittable",
            Prop::LinearQuotients => "linear_quotients",
            Prop::DegreeQuotients => "degree_quotients",
            Prop::Regularity => "regularity",
            Prop::DegreeResolution => "degree_resolution",
            Prop::LinearResolution => "linear_resolution",
            Prop::ComponentwiseLinear => "componentwise_linear",
            Prop::Betti => "betti",
            Prop::Chordal => "chordal",
            Prop::Cochordal => "cochordal",
        };
        base.to_string()
    }

    fn parse(token: &str) -> Result<Prop, CliError> {
        if let Some((head, x)) = token.split_once(':') {
            return match head {
                "dismissing" => Ok(Prop::Dismissing(x.to_string())),
                "shedding" => Ok(Prop::Shedding(x.to_string())),
                _ => Err(CliError::Input(format!("unknown property `{token}`"))),
            };
        }
        let all = COMPLEX_PROPS
            .iter()
            .chain(IDEAL_PROPS.iter())
            .chain([Prop::Chordal, Prop::Cochordal].iter());
        let alias = match token {
            "vd" => "vertex_decomposable",
            "vdism" => "vertex_dismissible",
            "wc" => "weakly_connected",
            "cm" => "cohen_macaulay",
            "icm" => "initially_cm",
            "scm" => "sequentially_cm",
            "vdiv" => "vertex_divisible",
            "vsplit" => "vertex_splittable",
            "lq" => "linear_quotients",
            "dq" => "degree_quotients",
            "reg" => "regularity",
            "cl" => "componentwise_linear",
            other => other,
        };
        all.into_iter()
            .find(|p| p.name() == alias)
            .cloned()
            .ok_or_else(|| CliError::Input(format!("unknown property `{token}`")))
    }

    fn applies_to(&self, input: &Input) -> bool {
        let complex_side = COMPLEX_PROPS.contains(self) || matches!(self, Prop::Dismissing(_) | Prop::Shedding(_));
        match input {
            Input::Complex(_) => complex_side,
            Input::Graph(_) => complex_side || matches!(self, Prop::Chordal | Prop::Cochordal),
            Input::Ideal(_) => IDEAL_PROPS.contains(self),
        }
    }
}

/// Resolves a `--props` list (`all` or comma separated names) for `input`.
pub fn select_props(list: &str, input: &Input) -> Result<Vec<Prop>, CliError> {
    let mut out = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if token == "all" {
            let defaults: Vec<Prop> = match input {
                Input::Complex(_) => COMPLEX_PROPS.to_vec(),
                Input::Graph(_) => [Prop::Chordal, Prop::Cochordal].into_iter().chain(COMPLEX_PROPS).collect(),
                Input::Ideal(_) => IDEAL_PROPS.to_vec(),
            };
            out.extend(defaults);
            continue;
        }
        let p = Prop::parse(token)?;
        if !p.applies_to(input) {
            return Err(CliError::Input(format!("property `{token}` does not apply to a {}", input.kind())));
        }
        out.push(p);
    }
    let mut seen = Vec::new();
    out.retain(|p| {
        let fresh = !seen.contains(p);
        if fresh {
            seen.push(p.clone());
        }
        fresh
    });
    if out.is_empty() {
        return Err(CliError::Input("no properties selected".into()));
    }
    Ok(out)
}

pub fn parse_fields(list: &str) -> Result<Vec<FieldSpec>, CliError> {
    let mut out = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let f: FieldSpec = token.parse()?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    if out.is_empty() {
        return Err(CliError::Input("no fields selected".into()));
    }
    Ok(out)
}

pub struct AnalyzeOptions {
    pub props: Vec<Prop>,
    pub fields: Vec<FieldSpec>,
    pub limit: SearchLimit,
}

/// One evaluated property.
pub struct Outcome {
    pub name: String,
    pub value: Value,
    pub certificate: Option<Certificate>,
    pub error: Option<shk_core::Error>,
    pub millis: f64,
}

pub struct Report {
    pub input: Input,
    pub outcomes: Vec<Outcome>,
}

fn decision_value(d: &Decision) -> Value {
    let value = match d.value {
        Truth::True => Value::Bool(true),
        Truth::False => Value::Bool(false),
        Truth::Unknown => Value::Null,
    };
    let method = match d.method {
        Method::Exact => "exact",
        Method::Heuristic => "heuristic",
    };
    json!({ "value": value, "method": method, "nodes": d.budget_spent })
}

fn per_field<T: Serialize>(
    fields: &[FieldSpec],
    mut f: impl FnMut(FieldSpec) -> shk_core::Result<T>,
) -> shk_core::Result<Value> {
    let mut map = Map::new();
    for &field in fields {
        map.insert(field.short_name(), serde_json::to_value(f(field)?).expect("serializable"));
    }
    Ok(Value::Object(map))
}

fn complex_of(input: &Input) -> shk_core::Result<SimplicialComplex> {
    match input {
        Input::Complex(c) => Ok(c.clone()),
        Input::Graph(g) => g.independence_complex(),
        Input::Ideal(_) => unreachable!("filtered by applies_to"),
    }
}

type Evaluated = shk_core::Result<(Value, Option<Certificate>)>;

fn with_decision(d: shk_core::Result<Decision>) -> Evaluated {
    d.map(|d| (decision_value(&d), d.certificate))
}

fn evaluate(input: &Input, prop: &Prop, opts: &AnalyzeOptions) -> Evaluated {
    let limit = opts.limit;
    let fields = &opts.fields;
    if let Input::Ideal(i) = input {
        return match prop {
            Prop::VertexDivisible => with_decision(Ok(is_vertex_divisible(i, limit))),
            Prop::VertexSplittable => with_decision(Ok(is_vertex_splittable(i, limit))),
            Prop::LinearQuotients => with_decision(has_linear_quotients(i, limit)),
            Prop::DegreeQuotients => with_decision(has_degree_quotients(i, limit)),
            Prop::Regularity => per_field(fields, |f| resolution_profile(i, f).map(|p| p.regularity)).map(|v| (v, None)),
            Prop::DegreeResolution => {
                per_field(fields, |f| resolution_profile(i, f).map(|p| p.degree_resolution)).map(|v| (v, None))
            }
            Prop::LinearResolution => {
                per_field(fields, |f| resolution_profile(i, f).map(|p| p.linear_resolution)).map(|v| (v, None))
            }
            Prop::ComponentwiseLinear => {
                per_field(fields, |f| resolution_profile(i, f).map(|p| p.componentwise_linear)).map(|v| (v, None))
            }
            Prop::Betti => per_field(fields, |f| {
                graded_betti_numbers(i, f).map(|t| t.entries().map(|((k, j), b)| [k as u64, j as u64, b]).collect::<Vec<_>>())
            })
            .map(|v| (v, None)),
            _ => unreachable!("filtered by applies_to"),
        };
    }
    if let Input::Graph(g) = input {
        match prop {
            Prop::Chordal => {
                let cert = g.chordal_certificate();
                return Ok((json!({ "value": cert.is_some() }), cert));
            }
            Prop::Cochordal => {
                let cert = g.complement().chordal_certificate();
                return Ok((json!({ "value": cert.is_some() }), cert));
            }
            _ => {}
        }
    }
    let c = complex_of(input)?;
    let vertex = |x: &str| c.vertices().require(x);
    match prop {
        Prop::VertexDecomposable => with_decision(is_vertex_decomposable(&c, limit)),
        Prop::VertexDismissible => with_decision(is_vertex_dismissible(&c, limit)),
        Prop::Shellable => with_decision(is_shellable(&c, limit)),
        Prop::Scalable => with_decision(is_scalable(&c, limit)),
        Prop::WeaklyConnected => is_weakly_connected(&c).map(|b| (json!({ "value": b }), None)),
        Prop::CohenMacaulay => per_field(fields, |f| is_cohen_macaulay(&c, f)).map(|v| (v, None)),
        Prop::InitiallyCm => per_field(fields, |f| is_initially_cm(&c, f)).map(|v| (v, None)),
        Prop::SequentiallyCm => per_field(fields, |f| is_sequentially_cm(&c, f)).map(|v| (v, None)),
        Prop::Depth => per_field(fields, |f| depth(&c, f)).map(|v| (v, None)),
        Prop::Homology => per_field(fields, |f| reduced_homology_ranks(&c, f).map(|h| h.ranks().to_vec())).map(|v| (v, None)),
        Prop::Dismissing(x) => is_dismissing_vertex(&c, vertex(x)?).map(|b| (json!({ "value": b }), None)),
        Prop::Shedding(x) => is_shedding_vertex(&c, vertex(x)?).map(|b| (json!({ "value": b }), None)),
        _ => unreachable!("filtered by applies_to"),
    }
}

pub fn analyze(input: Input, opts: &AnalyzeOptions) -> Report {
    let outcomes = opts
        .props
        .iter()
        .map(|prop| {
            let start = Instant::now();
            let result = evaluate(&input, prop, opts);
            let millis = start.elapsed().as_secs_f64() * 1e3;
            let (value, certificate, error) = match result {
                Ok((v, cert)) => (v, cert, None),
                Err(e) => (json!({ "error": e.to_string() }), None, Some(e)),
            };
            Outcome {
                name: prop.name(),
                value,
                certificate,
                error,
                millis,
            }
        })
        .collect();
    Report { input, outcomes }
}

fn stats(input: &Input) -> Value {
    let complex_stats = |c: &SimplicialComplex| match c.dimensions() {
        Ok((dim, mdim)) => json!({
            "vertices": c.vertices().len(),
            "facets": c.facet_count(),
            "dim": dim,
            "mdim": mdim,
            "pure": mdim == dim,
            "f_vector": c.f_vector().ok(),
        }),
        Err(_) => json!({ "vertices": c.vertices().len(), "facets": 0 }),
    };
    match input {
        Input::Complex(c) => complex_stats(c),
        Input::Graph(g) => {
            let mut v = json!({ "vertices": g.vertex_count(), "edges": g.edge_count() });
            if let Ok(c) = g.independence_complex() {
                v["independence_complex"] = complex_stats(&c);
            }
            v
        }
        Input::Ideal(i) => json!({
            "variables": i.ring().len(),
            "generators": i.generators().len(),
            "degree": i.degree().ok(),
            "min_degree": i.min_degree().ok(),
            "squarefree": i.is_squarefree(),
        }),
    }
}

impl Report {
    /// Deterministic JSON: no timings, keys sorted.
    pub fn to_json(&self) -> Value {
        let mut props = Map::new();
        for o in &self.outcomes {
            let mut v = o.value.clone();
            if let Some(cert) = &o.certificate {
                v["certificate"] = serde_json::to_value(cert).expect("serializable");
            }
            props.insert(o.name.clone(), v);
        }
        json!({
            "schema": 1,
            "kind": self.input.kind(),
            "input": self.input.canonical(),
            "stats": stats(&self.input),
            "properties": props,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let st = stats(&self.input);
        let line = match &self.input {
            Input::Complex(_) => format!(
                "complex: {} vertices, {} facets, dim {}, mdim {}",
                st["vertices"], st["facets"], st["dim"], st["mdim"]
            ),
            Input::Graph(_) => format!("graph: {} vertices, {} edges", st["vertices"], st["edges"]),
            Input::Ideal(i) => format!("ideal: {} generators in {} variables: {i}", st["generators"], st["variables"]),
        };
        writeln!(out, "{line}").unwrap();
        let width = self.outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
        for o in &self.outcomes {
            let shown = match (&o.error, &o.value) {
                (Some(e), _) => format!("error: {e}"),
                (None, Value::Object(m)) if m.contains_key("value") => {
                    let mut s = match &m["value"] {
                        Value::Null => "unknown".to_string(),
                        v => v.to_string(),
                    };
                    if let Some(method) = m.get("method") {
                        write!(s, "  ({}, {} nodes)", method.as_str().unwrap_or(""), m["nodes"]).unwrap();
                    }
                    if let Some(cert) = &o.certificate {
                        write!(s, " [{}]", cert.kind()).unwrap();
                    }
                    s
                }
                (None, Value::Object(m)) => m
                    .iter()
                    .map(|(k, v)| format!("{k}={}", compact(v)))
                    .collect::<Vec<_>>()
                    .join("  "),
                (None, v) => v.to_string(),
            };
            writeln!(out, "{:width$}  {shown}  {:.1} ms", o.name, o.millis).unwrap();
        }
        out
    }

    pub fn has_capacity_error(&self) -> bool {
        self.outcomes.iter().any(|o| o.error.as_ref().is_some_and(|e| e.is_capacity()))
    }

    pub fn has_input_error(&self) -> bool {
        self.outcomes.iter().any(|o| o.error.as_ref().is_some_and(|e| !e.is_capacity()))
    }

    /// Writes one replay bundle per certificate into `dir`.
    pub fn write_certificates(&self, dir: &Path) -> Result<usize, CliError> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        let mut written = 0;
        for o in &self.outcomes {
            if let Some(cert) = &o.certificate {
                let bundle = Bundle {
                    schema: 1,
                    kind: self.input.kind().to_string(),
                    property: o.name.clone(),
                    input: self.input.canonical(),
                    certificate: cert.clone(),
                };
                let path = dir.join(format!("{}.json", o.name));
                let text = serde_json::to_string_pretty(&bundle).expect("serializable");
                std::fs::write(&path, text + "\n").map_err(|e| CliError::Io(path.display().to_string(), e))?;
                written += 1;
            }
        }
        Ok(written)
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().all(Value::is_array) => {
            // Betti entries `[i, j, b]` as `b_{i,j}`.
            items
                .iter()
                .map(|e| format!("{}@{},{}", e[2], e[0], e[1]))
                .collect::<Vec<_>>()
                .join(" ")
        }
        Value::Array(items) => items.iter().map(Value::to_string).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// A certificate together with the object it certifies.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Bundle {
    pub schema: u32,
    pub kind: String,
    pub property: String,
    pub input: String,
    pub certificate: Certificate,
}

/// Re-validates a bundle with the definition-level checker.
pub fn replay(bundle: &Bundle) -> Result<Result<(), String>, CliError> {
    if bundle.schema != 1 {
        return Err(CliError::Input(format!("unsupported bundle schema {}", bundle.schema)));
    }
    let input = Input::parse(&bundle.kind, &bundle.input)?;
    let verdict = match (&input, &bundle.certificate) {
        (Input::Complex(c), cert) => check_complex_certificate(c, cert),
        (Input::Ideal(i), cert) => check_ideal_certificate(i, cert),
        (Input::Graph(g), cert @ Certificate::EliminationOrder { .. }) => {
            if bundle.property == "cochordal" {
                check_graph_certificate(&g.complement(), cert)
            } else {
                check_graph_certificate(g, cert)
            }
        }
        (Input::Graph(g), cert) => check_complex_certificate(&g.independence_complex()?, cert),
    };
    Ok(verdict.map_err(|e| e.to_string()))
}
