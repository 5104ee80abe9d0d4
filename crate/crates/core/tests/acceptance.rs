//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! A criterion FAILs on any mismatch or overrun. Each mismatch is then
//! recomputed with the brute-force oracles in `common`; the process exits
//! non-zero only if some mismatch is not reproduced by them (an engine bug)
//! or a time limit is exceeded.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use shk_core::battery::{corpus_complex, trial_rng, BatteryConfig};
use shk_core::combinatorial::{
    is_dismissing_vertex, is_scalable, is_shedding_vertex, is_shellable, is_vertex_decomposable,
    is_vertex_dismissible, is_weakly_connected,
};
use shk_core::graph::{classify_cycle, cycle_graph};
use shk_core::homology::{boundary_matrix, depth, is_initially_cm, is_sequentially_cm, reduced_homology_ranks};
use shk_core::ideal::{dual_ideal, polarize, squarefree_truncation, TruncationMode};
use shk_core::ideal_props::{
    graded_betti_numbers, has_degree_quotients, has_linear_quotients, is_vertex_divisible, is_vertex_splittable,
    resolution_profile,
};
use shk_core::{random, Decision, FieldSpec, MonomialIdeal, Result, SearchLimit, SimplicialComplex, SkeletonMode};

use common::Facets;

const EXACT: SearchLimit = SearchLimit::Exact;
const Q: FieldSpec = FieldSpec::Rationals;
const GF2: FieldSpec = FieldSpec::Prime(2);
const GF3: FieldSpec = FieldSpec::Prime(3);
const CORPUS: usize = 500;

const DELTA1: &str = "abcd cdef acg aef abe afg bdg beg ceg dfg";
const DELTA2: &str = "abcd cdef acg aef abe abf bfg bdg beg ceg dfg";
const DELTA3: &str = "abcd cdef acg aef abe afg bdg beg ceg dfg abg";

struct Mismatch {
    what: String,
    /// Set when the oracles reproduce the mismatch.
    confirmed: Option<String>,
}

#[derive(Default)]
struct Report {
    checked: usize,
    mismatches: Vec<Mismatch>,
}

impl Report {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String, confirm: impl FnOnce() -> Option<String>) {
        self.checked += 1;
        if !ok {
            self.mismatches.push(Mismatch {
                what: what(),
                confirmed: confirm(),
            });
        }
    }

    /// A mismatch that no oracle is expected to excuse.
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.expect(ok, what, || None);
    }
}

fn truth(d: Result<Decision>) -> bool {
    d.expect("decidable").known().expect("exact search")
}

fn field_prime(f: FieldSpec) -> i128 {
    match f {
        FieldSpec::Rationals => 0,
        FieldSpec::Prime(p) => p as i128,
    }
}

/// Oracle reading of the scaling counterexample class: a literal scaling
/// order exists, yet the initial skeleton is not Cohen–Macaulay over `p`,
/// so it is neither shellable nor initially CM.
fn scaling_without_cm(f: &Facets, p: i128) -> Option<String> {
    let skel = common::pure_skeleton(f, common::mdim(f) as usize);
    (common::scalable(f) && !common::cohen_macaulay(&skel, p))
        .then(|| "oracle: scaling order exists and the initial skeleton is not CM".to_string())
}

fn show(f: &Facets) -> String {
    let words: Vec<String> = f.iter().map(|s| s.iter().map(String::as_str).collect()).collect();
    format!("<{}>", words.join(","))
}

/// The complex whose facets are the complements of the generators.
fn dual_complex_facets(i: &MonomialIdeal) -> Facets {
    let names = i.ring().names();
    common::maximal(
        i.generators()
            .iter()
            .map(|g| {
                let s = g.support();
                (0..names.len()).filter(|&k| s >> k & 1 == 0).map(|k| names[k].clone()).collect()
            })
            .collect(),
    )
}

fn criterion_1(r: &mut Report) {
    let c = common::complex("ab cde");
    let x = c.vertex_id("c").unwrap();
    r.require(is_dismissing_vertex(&c, x).unwrap(), || "c not dismissing".into());
    r.require(!is_shedding_vertex(&c, x).unwrap(), || "c shedding".into());
}

fn criterion_2(r: &mut Report) {
    let c = common::complex("ab bcd def");
    r.require(truth(is_scalable(&c, EXACT)), || "not scalable".into());
    r.require(truth(is_vertex_dismissible(&c, EXACT)), || "not vertex dismissible".into());
    let lk = c.link(c.face_of(&["d"]).unwrap()).unwrap();
    r.require(common::facets_of(&lk) == common::facets("bc ef"), || "link at d".into());
    r.require(!truth(is_scalable(&lk, EXACT)), || "link scalable".into());
    r.require(!truth(is_vertex_dismissible(&lk, EXACT)), || "link vertex dismissible".into());
}

fn criterion_3(r: &mut Report) {
    let all_fields = FieldSpec::MENU;
    let d1 = common::complex(DELTA1);
    let f1 = common::facets(DELTA1);
    for (f, want) in [(Q, true), (GF3, true), (GF2, false)] {
        r.require(is_initially_cm(&d1, f).unwrap() == want, || format!("Δ₁ icm[{}] != {want}", f.short_name()));
    }
    r.expect(
        !truth(is_scalable(&d1, EXACT)),
        || "Δ₁ is scalable".into(),
        || {
            common::scalable(&f1).then(|| {
                "oracle: order abcd,acg,abe,aef,cdef,afg,ceg,beg,bdg,dfg has every step intersection of mdim >= 1".into()
            })
        },
    );
    for f in all_fields {
        r.require(!is_sequentially_cm(&d1, f).unwrap(), || format!("Δ₁ scm[{}]", f.short_name()));
    }

    let d2 = common::complex(DELTA2);
    r.require(truth(is_scalable(&d2, EXACT)), || "Δ₂ not scalable".into());
    r.require(!truth(is_vertex_dismissible(&d2, EXACT)), || "Δ₂ vertex dismissible".into());
    for f in all_fields {
        r.require(!is_sequentially_cm(&d2, f).unwrap(), || format!("Δ₂ scm[{}]", f.short_name()));
    }

    let d3 = common::complex(DELTA3);
    r.require(truth(is_vertex_dismissible(&d3, EXACT)), || "Δ₃ not vertex dismissible".into());
    r.require(truth(is_scalable(&d3, EXACT)), || "Δ₃ not scalable".into());
    for f in [Q, GF3] {
        r.require(is_initially_cm(&d3, f).unwrap(), || format!("Δ₃ icm[{}]", f.short_name()));
    }
}

fn initial_skeleton(c: &SimplicialComplex) -> SimplicialComplex {
    c.pure_skeleton(c.mdim().unwrap(), SkeletonMode::Pure).unwrap()
}

fn criterion_4(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..CORPUS {
        let c = corpus_complex(cfg, t);
        let skel = initial_skeleton(&c);
        let f = common::facets_of(&c);
        let vdism = truth(is_vertex_dismissible(&c, EXACT));
        let vd = truth(is_vertex_decomposable(&skel, EXACT));
        r.require(vdism == vd, || format!("trial {t} {}: vdism={vdism}, vd(skel)={vd}", show(&f)));
        let sc = truth(is_scalable(&c, EXACT));
        let sh = truth(is_shellable(&skel, EXACT));
        r.expect(
            sc == sh,
            || format!("trial {t} {}: scalable={sc}, shellable(skel)={sh}", show(&f)),
            || scaling_without_cm(&f, 0).filter(|_| sc),
        );
    }
}

fn criterion_5(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..CORPUS {
        let c = corpus_complex(cfg, t);
        let dual = dual_ideal(&c).unwrap();
        let vdism = truth(is_vertex_dismissible(&c, EXACT));
        let vdiv = is_vertex_divisible(&dual, EXACT).known().unwrap();
        r.require(vdism == vdiv, || format!("trial {t}: vdism={vdism}, divisible={vdiv}"));
        if dual.is_unit() {
            // A simplex: every property holds and the dual is the unit ideal.
            continue;
        }
        let sc = truth(is_scalable(&c, EXACT));
        let dq = truth(has_degree_quotients(&dual, EXACT));
        r.require(sc == dq, || format!("trial {t}: scalable={sc}, dq={dq}"));
        for f in [Q, GF2] {
            let icm = is_initially_cm(&c, f).unwrap();
            let dr = resolution_profile(&dual, f).unwrap().degree_resolution;
            r.require(icm == dr, || format!("trial {t}: icm[{}]={icm}, dr={dr}", f.short_name()));
        }
    }
}

fn criterion_6(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..CORPUS {
        let c = corpus_complex(cfg, t);
        let f = common::facets_of(&c);
        let vd = truth(is_vertex_decomposable(&c, EXACT));
        let vdism = truth(is_vertex_dismissible(&c, EXACT));
        let sc = truth(is_scalable(&c, EXACT));
        let sh = truth(is_shellable(&c, EXACT));
        r.require(!vd || vdism, || format!("trial {t}: vd but not vdism"));
        r.require(!vdism || sc, || format!("trial {t}: vdism but not scalable"));
        r.require(!sh || sc, || format!("trial {t}: shellable but not scalable"));
        for fld in [Q, GF2, GF3] {
            let icm = is_initially_cm(&c, fld).unwrap();
            r.expect(
                !sc || icm,
                || format!("trial {t} {}: scalable but not icm[{}]", show(&f), fld.short_name()),
                || scaling_without_cm(&f, field_prime(fld)),
            );
        }
        let dual = dual_ideal(&c).unwrap();
        if dual.is_unit() {
            continue;
        }
        let vs = is_vertex_splittable(&dual, EXACT).known().unwrap();
        let lq = truth(has_linear_quotients(&dual, EXACT));
        r.require(!vs || lq, || format!("trial {t}: splittable but no linear quotients"));
        for fld in [Q, GF2, GF3] {
            let cl = resolution_profile(&dual, fld).unwrap().componentwise_linear;
            r.require(!lq || cl, || format!("trial {t}: linear quotients but not cl[{}]", fld.short_name()));
        }
    }
}

fn criterion_7(r: &mut Report) {
    for n in 3..=12 {
        let g = cycle_graph(n).unwrap();
        let c = g.independence_complex().unwrap();
        let class = classify_cycle(n).unwrap();
        let want = n % 3 != 1;
        r.require(c.mdim().unwrap() == class.mdim && class.mdim == n.div_ceil(3) as i32 - 1, || {
            format!("C{n}: mdim")
        });
        r.require(truth(is_vertex_dismissible(&c, EXACT)) == want, || format!("C{n}: vdism != {want}"));
        let f = common::facets_of(&c);
        r.expect(
            truth(is_scalable(&c, EXACT)) == want,
            || format!("C{n}: scalable != {want}"),
            || (!want && common::scalable(&f)).then(|| "oracle: a literal scaling order exists".into()),
        );
        for fld in [Q, GF2, GF3] {
            r.require(is_initially_cm(&c, fld).unwrap() == want, || {
                format!("C{n}: icm[{}] != {want}", fld.short_name())
            });
        }
    }
}

/// Weakly connected = vertex dismissible = scalable = initially CM.
fn four_way(r: &mut Report, c: &SimplicialComplex, label: &str) {
    let f = common::facets_of(c);
    let wc = is_weakly_connected(c).unwrap();
    let vdism = truth(is_vertex_dismissible(c, EXACT));
    let sc = truth(is_scalable(c, EXACT));
    let mut sides = vec![("wc", wc), ("vdism", vdism), ("scalable", sc)];
    for fld in [Q, GF2, GF3] {
        sides.push(("icm", is_initially_cm(c, fld).unwrap()));
    }
    let agree = sides.iter().all(|s| s.1 == sides[0].1);
    r.expect(
        agree,
        || format!("{label} {}: {sides:?}", show(&f)),
        || {
            // Everything but vertex dismissibility holds, and the brute-force
            // recursion also finds no dismissing decomposition.
            let others = sides.iter().filter(|s| s.0 != "vdism").all(|s| s.1);
            let oracle = !vdism && others && !common::Decomp::default().decide(&f, true) && common::scalable(&f);
            oracle.then(|| "oracle: weakly connected and scalable but not vertex dismissible".into())
        },
    );
}

fn criterion_8(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..200 {
        let mut rng = trial_rng(cfg.seed, 1, t);
        let n = rng.random_range(3..=8);
        let g = random::random_cochordal_graph(&mut rng, n);
        r.require(g.is_cochordal(), || format!("cochordal trial {t}: generator"));
        four_way(r, &g.independence_complex().unwrap(), &format!("cochordal trial {t}"));
    }
    for t in 0..200 {
        let mut rng = trial_rng(cfg.seed, 2, t);
        let c = random::random_mdim1_complex(&mut rng, cfg.vertices, cfg.facets);
        r.require(c.mdim().unwrap() == 1, || format!("mdim1 trial {t}: generator"));
        four_way(r, &c, &format!("mdim1 trial {t}"));
    }
}

fn criterion_9(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..200 {
        let mut rng = trial_rng(cfg.seed, 3, t);
        let i = random::random_squarefree_ideal(&mut rng, 7, 1..=6, 1..=4);
        let k = i.degree().unwrap();
        let trunc = squarefree_truncation(&i, k, TruncationMode::AtLeast).unwrap();
        let f = dual_complex_facets(&i);
        let vdiv = is_vertex_divisible(&i, EXACT).known().unwrap();
        let vs = is_vertex_splittable(&trunc, EXACT).known().unwrap();
        r.require(vdiv == vs, || format!("trial {t} {i}: divisible={vdiv}, splittable(I_k)={vs}"));
        let dq = truth(has_degree_quotients(&i, EXACT));
        let lq = truth(has_linear_quotients(&trunc, EXACT));
        // I_k is the dual ideal of the initial skeleton of the dual complex;
        // linear quotients there force that skeleton to be CM.
        r.expect(
            dq == lq,
            || format!("trial {t} {i}: dq={dq}, lq(I_k)={lq}"),
            || scaling_without_cm(&f, 0).filter(|_| dq),
        );
    }
}

fn criterion_10(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..100 {
        let mut rng = trial_rng(cfg.seed, 4, t);
        let i = random::random_monomial_ideal(&mut rng, 4, 1..=5, 3);
        let p = polarize(&i).unwrap();
        let a = is_vertex_divisible(&i, EXACT).known().unwrap();
        let b = is_vertex_divisible(&p, EXACT).known().unwrap();
        r.require(a == b, || format!("trial {t} {i}: divisible {a} vs {b}"));
        let a = truth(has_degree_quotients(&i, EXACT));
        let b = truth(has_degree_quotients(&p, EXACT));
        r.require(a == b, || format!("trial {t} {i}: dq {a} vs {b}"));
        let deg = i.degree().unwrap();
        for fld in [Q, GF2] {
            let ti = graded_betti_numbers(&i, fld).unwrap();
            let tp = graded_betti_numbers(&p, fld).unwrap();
            let (a, b) = (ti.regularity() == Some(deg), tp.regularity() == Some(deg));
            r.require(a == b, || format!("trial {t} {i}: dr[{}] {a} vs {b}", fld.short_name()));
            r.require(ti.entries().eq(tp.entries()), || format!("trial {t} {i}: betti tables differ"));
        }
    }
}

fn homology_matches_oracle(r: &mut Report, name: &str, c: &SimplicialComplex) {
    let f = common::facets_of(c);
    for fld in [Q, GF2, GF3] {
        let got: Vec<i64> = reduced_homology_ranks(c, fld).unwrap().ranks().iter().map(|&v| v as i64).collect();
        let want = common::reduced_homology(&f, field_prime(fld));
        r.require(got == want, || format!("{name}[{}]: {got:?} vs oracle {want:?}", fld.short_name()));
    }
}

fn criterion_11(r: &mut Report, cfg: &BatteryConfig) {
    let triangle = common::complex("ab bc ac");
    let tetra = common::complex("abc abd acd bcd");
    let rp2 = common::complex("abc acd ade aef afb bce cdf deb efc fbd");
    let h = |c: &SimplicialComplex, f, i| reduced_homology_ranks(c, f).unwrap().rank(i);
    r.require(h(&triangle, Q, 1) == 1, || "hollow triangle h̃₁".into());
    r.require(h(&tetra, Q, 2) == 1, || "tetrahedron boundary h̃₂".into());
    r.require(h(&rp2, Q, 1) == 0, || "RP² h̃₁ over ℚ".into());
    r.require(h(&rp2, GF2, 1) == 1, || "RP² h̃₁ over GF(2)".into());
    for (name, c) in [("triangle", &triangle), ("tetrahedron", &tetra), ("RP²", &rp2)] {
        homology_matches_oracle(r, name, c);
    }
    for t in 0..CORPUS {
        let c = corpus_complex(cfg, t);
        let d = c.dim().unwrap();
        for k in 0..=d {
            let composed = boundary_matrix(&c, k).unwrap().mul(&boundary_matrix(&c, k + 1).unwrap());
            r.require(composed.is_zero(), || format!("trial {t}: ∂{k}∘∂{} != 0", k + 1));
        }
        if t < 100 {
            homology_matches_oracle(r, &format!("trial {t}"), &c);
        }
    }
}

fn criterion_12(r: &mut Report, cfg: &BatteryConfig) {
    for t in 0..CORPUS {
        let c = corpus_complex(cfg, t);
        let dual = dual_ideal(&c).unwrap();
        if dual.is_unit() {
            continue;
        }
        let n = c.vertices().len();
        for fld in [Q, GF2] {
            let reg = resolution_profile(&dual, fld).unwrap().regularity as usize;
            let dep = depth(&c, fld).unwrap();
            r.require(reg + dep == n, || format!("trial {t}[{}]: reg={reg}, depth={dep}, |X|={n}", fld.short_name()));
        }
    }
}

fn main() -> ExitCode {
    let cfg = BatteryConfig::default();
    let secs = Duration::from_secs;
    let criteria: Vec<(&str, Duration, Box<dyn Fn(&mut Report)>)> = vec![
        ("dismissing but not shedding", Duration::from_millis(1), Box::new(criterion_1)),
        ("scalable and dismissible, link is neither", secs(1), Box::new(criterion_2)),
        ("three separating complexes", secs(60), Box::new(criterion_3)),
        ("skeleton equivalences", secs(300), Box::new(|r| criterion_4(r, &cfg))),
        ("duality", secs(300), Box::new(|r| criterion_5(r, &cfg))),
        ("hierarchy", secs(300), Box::new(|r| criterion_6(r, &cfg))),
        ("cycle classification", secs(300), Box::new(criterion_7)),
        ("co-chordal and mdim-1 four-way equality", secs(300), Box::new(|r| criterion_8(r, &cfg))),
        ("truncations", secs(300), Box::new(|r| criterion_9(r, &cfg))),
        ("polarization", secs(300), Box::new(|r| criterion_10(r, &cfg))),
        ("homology engine", secs(300), Box::new(|r| criterion_11(r, &cfg))),
        ("regularity and depth", secs(300), Box::new(|r| criterion_12(r, &cfg))),
    ];

    let mut unexplained = 0;
    let mut failed = Vec::new();
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let n = k + 1;
        let mut report = Report::default();
        let start = Instant::now();
        run(&mut report);
        let elapsed = start.elapsed();
        let slow = elapsed > *limit;
        let pass = report.mismatches.is_empty() && !slow;
        println!(
            "criterion {n:>2} {name:<42} {} ({} checks, {} mismatches, {:.3?} / {:?})",
            if pass { "PASS" } else { "FAIL" },
            report.checked,
            report.mismatches.len(),
            elapsed,
            limit
        );
        if slow {
            println!("    time limit exceeded");
            unexplained += 1;
        }
        for m in &report.mismatches {
            match &m.confirmed {
                Some(why) => println!("    {}\n      {why}", m.what),
                None => {
                    println!("    {}\n      NOT reproduced by the oracles", m.what);
                    unexplained += 1;
                }
            }
        }
        if !pass {
            failed.push(n);
        }
    }
    println!(
        "\n{} of 12 criteria pass; failing: {failed:?}; unexplained mismatches: {unexplained}",
        12 - failed.len()
    );
    if unexplained == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
