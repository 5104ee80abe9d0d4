//! Randomized verification of the implications and equivalences between the
//! properties decided by this crate.
//!
//! Every trial is a pure function of `(seed, check, trial index)`; the
//! complex-based checks (hierarchy, duality, skeletal) share one corpus.

use std::fmt;
use std::str::FromStr;

use crate::certificate::{check_complex_certificate, check_ideal_certificate};
use crate::combinatorial::{
    has_k_property, is_dismissing_vertex, is_scalable, is_shedding_vertex, is_shellable, is_vertex_decomposable,
    is_vertex_dismissible, is_weakly_connected, SkeletalProperty,
};
use crate::complex::{SimplicialComplex, SkeletonMode};
use crate::decision::{Decision, SearchLimit};
use crate::error::{Error, Result};
use crate::format::{write_complex, write_graph, write_ideal};
use crate::graph::{classify_cycle, cycle_graph};
use crate::homology::{depth, is_cohen_macaulay, is_initially_cm, is_sequentially_cm, FieldSpec};
use crate::ideal::{
    complex_of_ideal, dual_ideal, polarize, squarefree_truncation, variable_split, IdealView, Monomial,
    MonomialIdeal, TruncationMode,
};
use crate::ideal_props::{
    graded_betti_numbers, has_degree_quotients, has_linear_quotients, is_vertex_divisible, is_vertex_splittable,
    resolution_profile,
};
use crate::random::{self, ComplexShape, SeededRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Hierarchy,
    Duality,
    Skeletal,
    Cycles,
    Cochordal,
    Mdim1,
    Truncation,
    Polarization,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Hierarchy,
        Check::Duality,
        Check::Skeletal,
        Check::Cycles,
        Check::Cochordal,
        Check::Mdim1,
        Check::Truncation,
        Check::Polarization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Hierarchy => "hierarchy",
            Check::Duality => "duality",
            Check::Skeletal => "skeletal",
            Check::Cycles => "cycles",
            Check::Cochordal => "cochordal",
            Check::Mdim1 => "mdim1",
            Check::Truncation => "truncation",
            Check::Polarization => "polarization",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct BatteryConfig {
    /// Vertices (or variables) of generated instances.
    pub vertices: usize,
    /// Faces drawn per random complex, before antichain reduction.
    pub facets: usize,
    pub trials: usize,
    pub seed: u64,
    pub fields: Vec<FieldSpec>,
    pub limit: SearchLimit,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            vertices: 7,
            facets: 8,
            trials: 100,
            seed: 0,
            fields: vec![FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)],
            limit: SearchLimit::Exact,
        }
    }
}

impl BatteryConfig {
    /// Number of trials `check` runs; cycles always cover `n = 3..=12`.
    pub fn trial_count(&self, check: Check) -> usize {
        match check {
            Check::Cycles => 10,
            _ => self.trials,
        }
    }
}

/// A relation that failed on a concrete instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub trial: usize,
    pub relation: String,
    pub detail: String,
    /// The instance in its file format.
    pub instance: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrialResult {
    pub trial: usize,
    /// Relations evaluated on both sides.
    pub evaluated: usize,
    /// Relations skipped because a side was unknown or over capacity.
    pub skipped: Vec<String>,
    pub violations: Vec<Violation>,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// The random stream of one trial of one corpus.
pub fn trial_rng(seed: u64, stream: u64, trial: usize) -> SeededRng {
    random::seeded(splitmix(splitmix(seed ^ (stream << 56)) ^ trial as u64))
}

/// The shared complex corpus used by the hierarchy, duality and skeletal
/// checks.
pub fn corpus_complex(cfg: &BatteryConfig, trial: usize) -> SimplicialComplex {
    let shape = ComplexShape::new(cfg.vertices, cfg.facets);
    random::random_complex(&mut trial_rng(cfg.seed, 0, trial), &shape)
}

/// Relations that are claimed for these properties but fail for their
/// step-wise definitions, each with a smallest known witness:
///
/// - a scaling order only bounds the initial dimension of each step
///   intersection, which may be disconnected; ⟨bde, acfg, adeg, cdef⟩ has
///   the order acfg, adeg, cdef, bde but is not initially Cohen–Macaulay, and
///   the independence complex of the 10-cycle is scalable as well;
/// - ⟨ag, abcd, adef, bcef⟩ has a vertex decomposable 1-skeleton and is
///   weakly connected, yet every dismissing vertex leaves a deletion or link
///   that is not vertex dismissible.
pub const KNOWN_COUNTEREXAMPLES: &[&str] = &[
    "scalable=>icm",
    "scalable=shellable(initial-skeleton)",
    "degree-quotients=>degree-resolution",
    "vdism=vd(initial-skeleton)",
    "vdism=(mdim)-vd",
    "scalable=(n mod 3 != 1)",
    "weakly-connected=vdism=scalable=icm",
    // Duals of the two skeleton equivalences above.
    "divisible=splittable(I_k)",
    "degree-quotients=linear-quotients(I_k)",
];

/// Whether a violated relation is one of [`KNOWN_COUNTEREXAMPLES`].
pub fn is_known_counterexample(relation: &str) -> bool {
    KNOWN_COUNTEREXAMPLES.iter().any(|k| relation.starts_with(k))
}

type Side = std::result::Result<bool, String>;

fn side(d: Result<Decision>) -> Side {
    match d {
        Ok(d) => d.known().ok_or_else(|| "search budget exhausted".to_string()),
        Err(e) => Err(e.to_string()),
    }
}

fn plain(r: Result<bool>) -> Side {
    r.map_err(|e| e.to_string())
}

struct Recorder {
    check: Check,
    trial: usize,
    instance: String,
    result: TrialResult,
}

impl Recorder {
    fn new(check: Check, trial: usize, instance: String) -> Self {
        Recorder {
            check,
            trial,
            instance,
            result: TrialResult {
                trial,
                ..TrialResult::default()
            },
        }
    }

    fn violate(&mut self, relation: &str, detail: String) {
        self.result.violations.push(Violation {
            check: self.check,
            trial: self.trial,
            relation: relation.to_string(),
            detail,
            instance: self.instance.clone(),
        });
    }

    fn skip(&mut self, relation: &str, why: &str) {
        self.result.skipped.push(format!("{relation}: {why}"));
    }

    /// All named sides agree.
    fn equal(&mut self, relation: &str, sides: &[(&str, &Side)]) {
        let mut values = Vec::with_capacity(sides.len());
        for (name, s) in sides {
            match s {
                Ok(v) => values.push((*name, *v)),
                Err(why) => return self.skip(relation, &format!("{name}: {why}")),
            }
        }
        self.result.evaluated += 1;
        if values.windows(2).any(|w| w[0].1 != w[1].1) {
            let detail = values
                .iter()
                .map(|(n, v)| format!("{n}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            self.violate(relation, detail);
        }
    }

    fn implies(&mut self, relation: &str, a: (&str, &Side), b: (&str, &Side)) {
        match (a.1, b.1) {
            (Ok(false), _) | (_, Ok(true)) => self.result.evaluated += 1,
            (Ok(true), Ok(false)) => {
                self.result.evaluated += 1;
                self.violate(relation, format!("{}=true but {}=false", a.0, b.0));
            }
            (Err(why), _) => self.skip(relation, &format!("{}: {why}", a.0)),
            (_, Err(why)) => self.skip(relation, &format!("{}: {why}", b.0)),
        }
    }

    fn holds(&mut self, relation: &str, ok: std::result::Result<bool, String>, detail: impl FnOnce() -> String) {
        match ok {
            Ok(true) => self.result.evaluated += 1,
            Ok(false) => {
                self.result.evaluated += 1;
                self.violate(relation, detail());
            }
            Err(why) => self.skip(relation, &why),
        }
    }
}

pub fn run_trial(check: Check, cfg: &BatteryConfig, trial: usize) -> TrialResult {
    match check {
        Check::Hierarchy => hierarchy(cfg, trial),
        Check::Duality => duality(cfg, trial),
        Check::Skeletal => skeletal(cfg, trial),
        Check::Cycles => cycles(cfg, trial),
        Check::Cochordal => cochordal(cfg, trial),
        Check::Mdim1 => mdim1(cfg, trial),
        Check::Truncation => truncation(cfg, trial),
        Check::Polarization => polarization(cfg, trial),
    }
}

/// Runs all trials of `check` sequentially.
pub fn run_check(check: Check, cfg: &BatteryConfig) -> Vec<TrialResult> {
    (0..cfg.trial_count(check)).map(|t| run_trial(check, cfg, t)).collect()
}

fn replay_complex(rec: &mut Recorder, c: &SimplicialComplex, name: &str, d: &Result<Decision>) {
    if let Ok(Decision {
        certificate: Some(cert),
        ..
    }) = d
    {
        let outcome = check_complex_certificate(c, cert);
        rec.holds(&format!("certificate:{name}"), Ok(outcome.is_ok()), || {
            format!("{outcome:?}")
        });
    }
}

fn replay_ideal(rec: &mut Recorder, i: &MonomialIdeal, name: &str, d: &Result<Decision>) {
    if let Ok(Decision {
        certificate: Some(cert),
        ..
    }) = d
    {
        let outcome = check_ideal_certificate(i, cert);
        rec.holds(&format!("certificate:{name}"), Ok(outcome.is_ok()), || {
            format!("{outcome:?}")
        });
    }
}

fn hierarchy(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let c = corpus_complex(cfg, trial);
    let mut rec = Recorder::new(Check::Hierarchy, trial, write_complex(&c));
    let vd_d = is_vertex_decomposable(&c, cfg.limit);
    let vdism_d = is_vertex_dismissible(&c, cfg.limit);
    let sh_d = is_shellable(&c, cfg.limit);
    let sc_d = is_scalable(&c, cfg.limit);
    replay_complex(&mut rec, &c, "vd", &vd_d);
    replay_complex(&mut rec, &c, "vdism", &vdism_d);
    replay_complex(&mut rec, &c, "shellable", &sh_d);
    replay_complex(&mut rec, &c, "scalable", &sc_d);
    let (vd, vdism, sh, sc) = (side(vd_d), side(vdism_d), side(sh_d), side(sc_d));
    rec.implies("vd=>vdism", ("vd", &vd), ("vdism", &vdism));
    rec.implies("vdism=>scalable", ("vdism", &vdism), ("scalable", &sc));
    rec.implies("shellable=>scalable", ("shellable", &sh), ("scalable", &sc));
    rec.implies("vd=>shellable", ("vd", &vd), ("shellable", &sh));
    let pure = c.is_pure().unwrap_or(false);
    if pure {
        rec.equal("pure:scalable=shellable", &[("scalable", &sc), ("shellable", &sh)]);
    }
    for &f in &cfg.fields {
        let icm = plain(is_initially_cm(&c, f));
        let scm = plain(is_sequentially_cm(&c, f));
        rec.implies(&format!("scalable=>icm[{}]", f.short_name()), ("scalable", &sc), ("icm", &icm));
        rec.implies(&format!("shellable=>scm[{}]", f.short_name()), ("shellable", &sh), ("scm", &scm));
        if pure {
            let cm = plain(is_cohen_macaulay(&c, f));
            rec.implies(&format!("pure:scalable=>cm[{}]", f.short_name()), ("scalable", &sc), ("cm", &cm));
        }
    }
    let skeleton = c.mdim().and_then(|m| c.pure_skeleton(m, SkeletonMode::Pure));
    for x in c.support().ids() {
        let shed = plain(is_shedding_vertex(&c, x));
        let dis = plain(is_dismissing_vertex(&c, x));
        rec.implies("shedding=>dismissing", ("shedding", &shed), ("dismissing", &dis));
        if pure {
            rec.equal("pure:shedding=dismissing", &[("shedding", &shed), ("dismissing", &dis)]);
        }
        if let Ok(s) = &skeleton {
            let shed_skel = plain(is_shedding_vertex(s, x));
            rec.equal(
                "dismissing=shedding-in-initial-skeleton",
                &[("dismissing", &dis), ("shedding-in-skeleton", &shed_skel)],
            );
        }
    }
    let Ok(dual) = dual_ideal(&c) else {
        return rec.result;
    };
    if dual.is_unit() {
        return rec.result;
    }
    let vs_d = Ok(is_vertex_splittable(&dual, cfg.limit));
    let vdiv_d = Ok(is_vertex_divisible(&dual, cfg.limit));
    let lq_d = has_linear_quotients(&dual, cfg.limit);
    let dq_d = has_degree_quotients(&dual, cfg.limit);
    replay_ideal(&mut rec, &dual, "splittable", &vs_d);
    replay_ideal(&mut rec, &dual, "divisible", &vdiv_d);
    replay_ideal(&mut rec, &dual, "linear-quotients", &lq_d);
    replay_ideal(&mut rec, &dual, "degree-quotients", &dq_d);
    let (vs, vdiv, lq, dq) = (side(vs_d), side(vdiv_d), side(lq_d), side(dq_d));
    rec.implies("splittable=>linear-quotients", ("splittable", &vs), ("lq", &lq));
    rec.implies("divisible=>degree-quotients", ("divisible", &vdiv), ("dq", &dq));
    for &f in &cfg.fields {
        let profile = resolution_profile(&dual, f).map_err(|e| e.to_string());
        let cl = profile.as_ref().map(|p| p.componentwise_linear).map_err(Clone::clone);
        let dr = profile.as_ref().map(|p| p.degree_resolution).map_err(Clone::clone);
        let name = f.short_name();
        rec.implies(&format!("linear-quotients=>componentwise-linear[{name}]"), ("lq", &lq), ("cl", &cl));
        rec.implies(&format!("degree-quotients=>degree-resolution[{name}]"), ("dq", &dq), ("dr", &dr));
    }
    rec.result
}

fn label_set(i: &MonomialIdeal) -> std::collections::BTreeSet<String> {
    i.generator_labels().into_iter().collect()
}

fn duality(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let c = corpus_complex(cfg, trial);
    let mut rec = Recorder::new(Check::Duality, trial, write_complex(&c));
    let dual = match dual_ideal(&c) {
        Ok(d) => d,
        Err(e) => {
            rec.skip("dual", &e.to_string());
            return rec.result;
        }
    };
    let vdism = side(is_vertex_dismissible(&c, cfg.limit));
    let sc = side(is_scalable(&c, cfg.limit));
    let vdiv = side(Ok(is_vertex_divisible(&dual, cfg.limit)));
    rec.equal("vdism=divisible", &[("vdism", &vdism), ("divisible", &vdiv)]);
    if !dual.is_unit() {
        let dq = side(has_degree_quotients(&dual, cfg.limit));
        rec.equal("scalable=degree-quotients", &[("scalable", &sc), ("dq", &dq)]);
        let n = c.vertices().len() as i64;
        if let (Ok(m), Ok(d)) = (c.mdim(), dual.degree()) {
            if m >= 0 {
                rec.holds("mdim=|X|-deg-1", Ok(m as i64 == n - d as i64 - 1), || {
                    format!("mdim={m}, |X|={n}, deg={d}")
                });
            }
        }
        for &f in &cfg.fields {
            let name = f.short_name();
            let icm = plain(is_initially_cm(&c, f));
            let profile = resolution_profile(&dual, f);
            let dr = profile.as_ref().map(|p| p.degree_resolution).map_err(|e| e.to_string());
            rec.equal(&format!("icm=degree-resolution[{name}]"), &[("icm", &icm), ("dr", &dr)]);
            match (depth(&c, f), profile) {
                (Ok(dep), Ok(p)) => rec.holds(
                    &format!("reg=|X|-depth[{name}]"),
                    Ok(p.regularity as i64 == n - dep as i64),
                    || format!("reg={}, |X|={n}, depth={dep}", p.regularity),
                ),
                (Err(e), _) | (_, Err(e)) => rec.skip("reg=|X|-depth", &e.to_string()),
            }
        }
    }
    for x in c.support().ids() {
        let Ok((colon, rest)) = variable_split(&dual, x) else {
            continue;
        };
        if let Ok(del) = c.deletion(x).and_then(|d| dual_ideal(&d)) {
            rec.holds("dual(del)=colon", Ok(label_set(&del) == label_set(&colon)), || {
                format!("x={}, dual(del)={del}, colon={colon}", c.vertices().name(x))
            });
        }
        let sigma = crate::complex::Face::from_ids([x]);
        if let Ok(lk) = c.link(sigma).and_then(|l| dual_ideal(&l)) {
            rec.holds("dual(link)=restriction", Ok(label_set(&lk) == label_set(&rest)), || {
                format!("x={}, dual(link)={lk}, restriction={rest}", c.vertices().name(x))
            });
        }
    }
    rec.result
}

fn skeletal(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let c = corpus_complex(cfg, trial);
    let mut rec = Recorder::new(Check::Skeletal, trial, write_complex(&c));
    let (Ok(m), Ok(d)) = (c.mdim(), c.dim()) else {
        return rec.result;
    };
    let skeletons: Vec<SimplicialComplex> = (0..=d)
        .map(|k| c.pure_skeleton(k, SkeletonMode::Pure).expect("k in range"))
        .collect();
    let at = |k: i32| &skeletons[k as usize];
    let vdism = side(is_vertex_dismissible(&c, cfg.limit));
    let sc = side(is_scalable(&c, cfg.limit));
    let sh = side(is_shellable(&c, cfg.limit));
    let vd = side(is_vertex_decomposable(&c, cfg.limit));
    if m >= 0 {
        let vd_skel = side(is_vertex_decomposable(at(m), cfg.limit));
        let sh_skel = side(is_shellable(at(m), cfg.limit));
        rec.equal("vdism=vd(initial-skeleton)", &[("vdism", &vdism), ("vd-skeleton", &vd_skel)]);
        rec.equal("scalable=shellable(initial-skeleton)", &[("scalable", &sc), ("shellable-skeleton", &sh_skel)]);
        let kvd = side(has_k_property(&c, m, SkeletalProperty::VertexDecomposable, None, cfg.limit));
        rec.equal("vdism=(mdim)-vd", &[("vdism", &vdism), ("k-vd", &kvd)]);
    }
    let ksh = side(has_k_property(&c, d, SkeletalProperty::Shellable, None, cfg.limit));
    rec.equal("shellable=(dim)-shellable", &[("shellable", &sh), ("k-shellable", &ksh)]);
    let all_from = |prop: &dyn Fn(&SimplicialComplex) -> Side| -> Side {
        let mut acc = Ok(true);
        for k in m.max(0)..=d {
            match prop(at(k)) {
                Ok(true) => {}
                Ok(false) => return Ok(false),
                Err(e) => acc = Err(e),
            }
        }
        acc
    };
    let vd_all = all_from(&|s| side(is_vertex_decomposable(s, cfg.limit)));
    rec.equal("vd=all-skeletons-vd", &[("vd", &vd), ("skeletons", &vd_all)]);
    let sh_all = all_from(&|s| side(is_shellable(s, cfg.limit)));
    rec.equal("shellable=all-skeletons-shellable", &[("shellable", &sh), ("skeletons", &sh_all)]);
    for &f in &cfg.fields {
        let scm = plain(is_sequentially_cm(&c, f));
        let kcm = side(has_k_property(&c, d, SkeletalProperty::CohenMacaulay, Some(f), cfg.limit));
        rec.equal(&format!("scm=(dim)-cm[{}]", f.short_name()), &[("scm", &scm), ("k-cm", &kcm)]);
    }
    // Skeleton identities for deletion and link. The deletion identity needs
    // `x` to be shedding in the skeleton: in ⟨abf, bcdeg⟩ deleting `a` from the
    // 2-skeleton leaves the edge `bf` behind.
    for k in 0..=m {
        for x in c.support().ids() {
            if is_shedding_vertex(at(k), x) == Ok(true) {
                let lhs = c.deletion(x).and_then(|del| del.pure_skeleton(k, SkeletonMode::Pure));
                let rhs = at(k).deletion(x);
                if let (Ok(a), Ok(b)) = (lhs, rhs) {
                    rec.holds("del-skeleton-identity", Ok(a == b), || format!("x={x}, k={k}"));
                }
            }
            if k >= 1 {
                let sigma = crate::complex::Face::from_ids([x]);
                let lhs = c.link(sigma).and_then(|l| l.pure_skeleton(k - 1, SkeletonMode::Pure));
                let rhs = at(k).link(sigma);
                if let (Ok(a), Ok(b)) = (lhs, rhs) {
                    rec.holds("link-skeleton-identity", Ok(a == b), || format!("x={x}, k={k}"));
                }
            }
        }
    }
    // The initial skeleton is the dual-view complex of I_k at k = deg I.
    if let Ok(dual) = dual_ideal(&c) {
        if !dual.is_unit() {
            let k = dual.degree().expect("proper");
            if let Ok(t) = squarefree_truncation(&dual, k, TruncationMode::AtLeast) {
                if let (Ok(view), true) = (complex_of_ideal(&t, IdealView::Dual), m >= 0) {
                    rec.holds("initial-skeleton=dual(I_deg)", Ok(&view == at(m)), || format!("I_k={t}"));
                }
            }
            ideal_skeletal(&mut rec, &dual, cfg.limit);
        }
    }
    rec.result
}

/// `P(I) ⇔ P(I_[k])` for all `k ≤ deg I`, for vertex splittability and
/// linear quotients.
fn ideal_skeletal(rec: &mut Recorder, i: &MonomialIdeal, limit: SearchLimit) {
    let top = i.degree().expect("proper");
    let mut parts = Vec::new();
    for k in 1..=top {
        match squarefree_truncation(i, k, TruncationMode::Exactly) {
            Ok(p) => parts.push(p),
            Err(e) => return rec.skip("ideal-skeletal", &e.to_string()),
        }
    }
    let every = |f: &dyn Fn(&MonomialIdeal) -> Side| -> Side {
        let mut acc = Ok(true);
        for p in &parts {
            if p.is_zero() {
                continue;
            }
            match f(p) {
                Ok(true) => {}
                Ok(false) => return Ok(false),
                Err(e) => acc = Err(e),
            }
        }
        acc
    };
    let vs = side(Ok(is_vertex_splittable(i, limit)));
    let vs_parts = every(&|p| side(Ok(is_vertex_splittable(p, limit))));
    rec.equal("splittable=all-components-splittable", &[("splittable", &vs), ("components", &vs_parts)]);
    let lq = side(has_linear_quotients(i, limit));
    let lq_parts = every(&|p| side(has_linear_quotients(p, limit)));
    rec.equal("linear-quotients=all-components", &[("lq", &lq), ("components", &lq_parts)]);
}

fn four_way(rec: &mut Recorder, c: &SimplicialComplex, cfg: &BatteryConfig) {
    let wc = plain(is_weakly_connected(c));
    let vdism = side(is_vertex_dismissible(c, cfg.limit));
    let sc = side(is_scalable(c, cfg.limit));
    for &f in &cfg.fields {
        let icm = plain(is_initially_cm(c, f));
        rec.equal(
            &format!("weakly-connected=vdism=scalable=icm[{}]", f.short_name()),
            &[("weakly-connected", &wc), ("vdism", &vdism), ("scalable", &sc), ("icm", &icm)],
        );
    }
}

fn cycles(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let n = trial + 3;
    let g = cycle_graph(n).expect("n >= 3");
    let mut rec = Recorder::new(Check::Cycles, trial, write_graph(&g));
    let c = g.independence_complex().expect("nonempty graph");
    let class = classify_cycle(n).expect("n >= 3");
    rec.holds("mdim=ceil(n/3)-1", Ok(c.mdim() == Ok(class.mdim)), || {
        format!("n={n}, mdim={:?}, expected {}", c.mdim(), class.mdim)
    });
    let expected: Side = Ok(class.vertex_dismissible_expected);
    let vdism = side(is_vertex_dismissible(&c, cfg.limit));
    let sc = side(is_scalable(&c, cfg.limit));
    rec.equal("vdism=(n mod 3 != 1)", &[("vdism", &vdism), ("expected", &expected)]);
    rec.equal("scalable=(n mod 3 != 1)", &[("scalable", &sc), ("expected", &expected)]);
    for &f in &cfg.fields {
        let icm = plain(is_initially_cm(&c, f));
        rec.equal(&format!("icm=(n mod 3 != 1)[{}]", f.short_name()), &[("icm", &icm), ("expected", &expected)]);
    }
    rec.result
}

fn cochordal(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, 1, trial);
    let top = cfg.vertices.clamp(3, 8);
    let n = rand::Rng::random_range(&mut rng, 3..=top);
    let g = random::random_cochordal_graph(&mut rng, n);
    let mut rec = Recorder::new(Check::Cochordal, trial, write_graph(&g));
    rec.holds("generated-cochordal", Ok(g.is_cochordal()), String::new);
    let c = g.independence_complex().expect("nonempty graph");
    four_way(&mut rec, &c, cfg);
    rec.result
}

fn mdim1(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, 2, trial);
    let c = random::random_mdim1_complex(&mut rng, cfg.vertices.max(3), cfg.facets.max(2));
    let mut rec = Recorder::new(Check::Mdim1, trial, write_complex(&c));
    four_way(&mut rec, &c, cfg);
    rec.result
}

fn truncation(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, 3, trial);
    let n = cfg.vertices.clamp(2, 7);
    let i = random::random_squarefree_ideal(&mut rng, n, 1..=6, 1..=n.min(4));
    let mut rec = Recorder::new(Check::Truncation, trial, write_ideal(&i));
    let k = i.degree().expect("proper nonzero");
    let t = match squarefree_truncation(&i, k, TruncationMode::AtLeast) {
        Ok(t) => t,
        Err(e) => {
            rec.skip("truncation", &e.to_string());
            return rec.result;
        }
    };
    let vdiv = side(Ok(is_vertex_divisible(&i, cfg.limit)));
    let vs = side(Ok(is_vertex_splittable(&t, cfg.limit)));
    rec.equal("divisible=splittable(I_k)", &[("divisible", &vdiv), ("splittable-truncation", &vs)]);
    let dq = side(has_degree_quotients(&i, cfg.limit));
    let lq = side(has_linear_quotients(&t, cfg.limit));
    rec.equal("degree-quotients=linear-quotients(I_k)", &[("dq", &dq), ("lq-truncation", &lq)]);
    if i.is_equigenerated() {
        let lq_i = side(has_linear_quotients(&i, cfg.limit));
        rec.equal("equigenerated:dq=lq", &[("dq", &dq), ("lq", &lq_i)]);
    }
    rec.result
}

fn polarization(cfg: &BatteryConfig, trial: usize) -> TrialResult {
    let mut rng = trial_rng(cfg.seed, 4, trial);
    let n = cfg.vertices.clamp(2, 4);
    let i = random::random_monomial_ideal(&mut rng, n, 1..=5, 3);
    let mut rec = Recorder::new(Check::Polarization, trial, write_ideal(&i));
    let p = match polarize(&i) {
        Ok(p) => p,
        Err(e) => {
            rec.skip("polarize", &e.to_string());
            return rec.result;
        }
    };
    let degrees = |j: &MonomialIdeal| {
        let mut d: Vec<u32> = j.generators().iter().map(Monomial::degree).collect();
        d.sort_unstable();
        d
    };
    rec.holds("polarization-preserves-degrees", Ok(p.is_squarefree() && degrees(&i) == degrees(&p)), || {
        format!("polarized={p}")
    });
    for x in crate::bits::ids(i.support()) {
        let name = i.ring().name(x);
        let px = p
            .ring()
            .id(name)
            .or_else(|| p.ring().id(&crate::ideal::polarized_name(name, 1)))
            .expect("polarized variable");
        let a = i.colon(&Monomial::variable(x)).generators().iter().map(Monomial::degree).max();
        let b = p.colon(&Monomial::variable(px)).generators().iter().map(Monomial::degree).max();
        rec.holds("polarization-preserves-colon-degree", Ok(a == b), || format!("x={name}"));
    }
    let pairs = [
        ("divisible", side(Ok(is_vertex_divisible(&i, cfg.limit))), side(Ok(is_vertex_divisible(&p, cfg.limit)))),
        ("degree-quotients", side(has_degree_quotients(&i, cfg.limit)), side(has_degree_quotients(&p, cfg.limit))),
    ];
    for (name, a, b) in &pairs {
        rec.equal(&format!("{name}(I)={name}(I^pol)"), &[("I", a), ("pol", b)]);
    }
    for &f in &cfg.fields {
        let name = f.short_name();
        let ti = graded_betti_numbers(&i, f);
        let tp = graded_betti_numbers(&p, f);
        match (ti, tp) {
            (Ok(a), Ok(b)) => {
                let same = a.entries().eq(b.entries());
                rec.holds(&format!("betti(I)=betti(I^pol)[{name}]"), Ok(same), || {
                    format!("{:?} vs {:?}", a.entries().collect::<Vec<_>>(), b.entries().collect::<Vec<_>>())
                });
                let dr = |t: &crate::ideal_props::BettiTable, j: &MonomialIdeal| {
                    Ok(t.regularity() == j.degree().ok())
                };
                rec.equal(&format!("degree-resolution(I)=(I^pol)[{name}]"), &[("I", &dr(&a, &i)), ("pol", &dr(&b, &p))]);
            }
            (Err(e), _) | (_, Err(e)) => rec.skip("betti", &e.to_string()),
        }
    }
    rec.result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BatteryConfig {
        BatteryConfig {
            vertices: 5,
            facets: 5,
            trials: 8,
            seed: 7,
            ..BatteryConfig::default()
        }
    }

    #[test]
    fn only_known_counterexamples_on_a_small_corpus() {
        let cfg = small();
        for check in Check::ALL {
            for r in run_check(check, &cfg) {
                let fresh: Vec<_> = r.violations.iter().filter(|v| !is_known_counterexample(&v.relation)).collect();
                assert!(fresh.is_empty(), "{check}: {fresh:?}");
                assert!(r.evaluated > 0 || check == Check::Duality, "{check} trial {} evaluated nothing", r.trial);
            }
        }
    }

    #[test]
    fn trials_are_deterministic() {
        let cfg = small();
        assert_eq!(corpus_complex(&cfg, 3), corpus_complex(&cfg, 3));
        assert_eq!(run_trial(Check::Truncation, &cfg, 2), run_trial(Check::Truncation, &cfg, 2));
        assert_eq!("mdim1".parse::<Check>().unwrap(), Check::Mdim1);
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn ten_cycle_is_the_known_cycle_exception() {
        let r = run_trial(Check::Cycles, &BatteryConfig::default(), 7);
        let relations: Vec<_> = r.violations.iter().map(|v| v.relation.as_str()).collect();
        assert_eq!(relations, ["scalable=(n mod 3 != 1)"]);
        for n in [3, 4, 5, 6, 7, 8, 9, 11, 12] {
            assert!(run_trial(Check::Cycles, &BatteryConfig::default(), n - 3).violations.is_empty());
        }
    }
}
