//! Replays certificates against the definitions.
//!
//! The checker works on plain label sets and label-keyed exponent maps and
//! shares no code with the search procedures: no memoization, no bitsets.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::decision::{Certificate, IdealTree, QuotientStep, VertexTree};
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("a {0} certificate does not apply to this kind of object")]
    WrongKind(&'static str),
    #[error("certificate rejected: {0}")]
    Rejected(String),
}

fn reject<T>(msg: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError::Rejected(msg.into()))
}

type Set = BTreeSet<String>;

fn to_set(labels: &[String]) -> Set {
    labels.iter().cloned().collect()
}

fn show(s: &Set) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        s.iter().cloned().collect::<Vec<_>>().join("")
    }
}

/// Maximal members of a family.
fn maximal_sets(family: Vec<Set>) -> Vec<Set> {
    let mut out: Vec<Set> = Vec::new();
    for s in &family {
        if !family.iter().any(|t| t != s && s.is_subset(t)) && !out.contains(s) {
            out.push(s.clone());
        }
    }
    out.sort();
    out
}

fn min_size(facets: &[Set]) -> usize {
    facets.iter().map(Set::len).min().unwrap_or(0)
}

fn same_facets(a: &[Set], b: &[Set]) -> bool {
    let x: BTreeSet<&Set> = a.iter().collect();
    let y: BTreeSet<&Set> = b.iter().collect();
    x == y
}

pub fn check_complex_certificate(c: &SimplicialComplex, cert: &Certificate) -> Result<(), CertificateError> {
    let facets: Vec<Set> = c.facet_labels().iter().map(|f| to_set(f)).collect();
    if facets.is_empty() {
        return reject("the void complex has no certificates");
    }
    match cert {
        Certificate::SheddingTree { tree } => check_vertex_tree(&facets, tree, true),
        Certificate::DismissingTree { tree } => check_vertex_tree(&facets, tree, false),
        Certificate::ShellingOrder { facets: order } => check_facet_order(&facets, order, true),
        Certificate::ScalingOrder { facets: order } => check_facet_order(&facets, order, false),
        other => Err(CertificateError::WrongKind(other.kind())),
    }
}

fn check_vertex_tree(facets: &[Set], tree: &VertexTree, shedding: bool) -> Result<(), CertificateError> {
    match tree {
        VertexTree::Simplex { facet } => {
            if facets.len() == 1 && facets[0] == to_set(facet) {
                Ok(())
            } else {
                reject(format!("leaf {} is not the whole complex", show(&to_set(facet))))
            }
        }
        VertexTree::Split { vertex, deletion, link } => {
            let x = vertex;
            let del: Vec<Set> = maximal_sets(
                facets
                    .iter()
                    .map(|f| f.iter().filter(|v| *v != x).cloned().collect())
                    .collect(),
            );
            let lk: Vec<Set> = maximal_sets(
                facets
                    .iter()
                    .filter(|f| f.contains(x))
                    .map(|f| f.iter().filter(|v| *v != x).cloned().collect())
                    .collect(),
            );
            if lk.is_empty() {
                return reject(format!("vertex {x} lies in no facet"));
            }
            let ok = if shedding {
                facets.iter().filter(|f| f.contains(x)).all(|f| {
                    let rest: Set = f.iter().filter(|v| *v != x).cloned().collect();
                    facets.iter().any(|g| !g.contains(x) && rest.is_subset(g))
                })
            } else {
                min_size(&del) >= min_size(facets)
            };
            if !ok {
                let what = if shedding { "shedding" } else { "dismissing" };
                return reject(format!("vertex {x} is not {what}"));
            }
            check_vertex_tree(&del, deletion, shedding)?;
            check_vertex_tree(&lk, link, shedding)
        }
    }
}

fn check_facet_order(facets: &[Set], order: &[Vec<String>], shelling: bool) -> Result<(), CertificateError> {
    let listed: Vec<Set> = order.iter().map(|f| to_set(f)).collect();
    let distinct: BTreeSet<&Set> = listed.iter().collect();
    if listed.len() != facets.len() || distinct.len() != listed.len() || !same_facets(&listed, facets) {
        return reject("the order is not a permutation of the facets");
    }
    let m = min_size(facets);
    for j in 1..listed.len() {
        let f = &listed[j];
        let meets = maximal_sets(
            listed[..j]
                .iter()
                .map(|g| f.intersection(g).cloned().collect())
                .collect(),
        );
        let ok = if shelling {
            meets.iter().all(|s| s.len() + 1 == f.len())
        } else {
            min_size(&meets) + 1 >= m
        };
        if !ok {
            return reject(format!("step {} ({}) violates the intersection condition", j + 1, show(f)));
        }
    }
    Ok(())
}

type Mono = BTreeMap<String, u32>;

fn parse_mono(text: &str) -> Result<Mono, CertificateError> {
    let mut m = Mono::new();
    if text.trim() == "1" {
        return Ok(m);
    }
    for factor in text.split('*') {
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => match e.parse::<u32>() {
                Ok(e) => (n, e),
                Err(_) => return reject(format!("bad exponent in `{text}`")),
            },
            None => (factor, 1),
        };
        if name.is_empty() {
            return reject(format!("bad monomial `{text}`"));
        }
        *m.entry(name.to_string()).or_insert(0) += e;
    }
    Ok(m)
}

fn divides(a: &Mono, b: &Mono) -> bool {
    a.iter().all(|(v, e)| b.get(v).is_some_and(|f| f >= e))
}

fn degree(m: &Mono) -> u32 {
    m.values().sum()
}

/// `a / gcd(a, b)`.
fn colon_mono(a: &Mono, b: &Mono) -> Mono {
    a.iter()
        .filter_map(|(v, &e)| {
            let r = e.saturating_sub(b.get(v).copied().unwrap_or(0));
            (r > 0).then(|| (v.clone(), r))
        })
        .collect()
}

fn minimal_monos(gens: Vec<Mono>) -> BTreeSet<Mono> {
    let mut out = BTreeSet::new();
    for g in &gens {
        if !gens.iter().any(|h| h != g && divides(h, g)) {
            out.insert(g.clone());
        }
    }
    out
}

fn ideal_degree(gens: &BTreeSet<Mono>) -> u32 {
    gens.iter().map(degree).max().unwrap_or(0)
}

fn parse_all(labels: &[String]) -> Result<BTreeSet<Mono>, CertificateError> {
    labels.iter().map(|l| parse_mono(l)).collect()
}

pub fn check_ideal_certificate(i: &MonomialIdeal, cert: &Certificate) -> Result<(), CertificateError> {
    let gens = parse_all(&i.generator_labels())?;
    match cert {
        Certificate::DivisionTree { tree } => check_ideal_tree(&gens, tree, true),
        Certificate::SplittingTree { tree } => check_ideal_tree(&gens, tree, false),
        Certificate::LinearQuotientOrder { steps } => check_quotient_order(&gens, steps, true),
        Certificate::DegreeQuotientOrder { steps } => check_quotient_order(&gens, steps, false),
        other => Err(CertificateError::WrongKind(other.kind())),
    }
}

fn check_ideal_tree(gens: &BTreeSet<Mono>, tree: &IdealTree, divisible: bool) -> Result<(), CertificateError> {
    match tree {
        IdealTree::Base { generators } => {
            let listed = parse_all(generators)?;
            if &listed != gens {
                return reject("a base node does not match its ideal");
            }
            let unit = gens.len() == 1 && gens.iter().next().is_some_and(Mono::is_empty);
            let base = gens.is_empty() || unit || (divisible && gens.len() == 1);
            if base {
                Ok(())
            } else {
                reject("a base node is not zero, unit or (where allowed) principal")
            }
        }
        IdealTree::Split { variable, colon, rest } => {
            let x: Mono = [(variable.clone(), 1)].into_iter().collect();
            let k: BTreeSet<Mono> = gens.iter().filter(|g| !g.contains_key(variable)).cloned().collect();
            let j = if divisible {
                let j = minimal_monos(gens.iter().map(|g| colon_mono(g, &x)).collect());
                if ideal_degree(&j) + 1 > ideal_degree(gens) {
                    return reject(format!("variable {variable} is not dividing"));
                }
                j
            } else {
                let with_x: Vec<&Mono> = gens.iter().filter(|g| g.contains_key(variable)).collect();
                if with_x.is_empty() || with_x.iter().any(|g| g[variable] != 1) {
                    return reject(format!("variable {variable} does not split the generators"));
                }
                with_x.into_iter().map(|g| colon_mono(g, &x)).collect()
            };
            if !k.iter().all(|g| j.iter().any(|h| divides(h, g))) {
                return reject(format!("at {variable}, K is not contained in J"));
            }
            check_ideal_tree(&j, colon, divisible)?;
            check_ideal_tree(&k, rest, divisible)
        }
    }
}

fn check_quotient_order(gens: &BTreeSet<Mono>, steps: &[QuotientStep], linear: bool) -> Result<(), CertificateError> {
    let order: Vec<Mono> = steps.iter().map(|s| parse_mono(&s.generator)).collect::<Result<_, _>>()?;
    let listed: BTreeSet<Mono> = order.iter().cloned().collect();
    if listed.len() != order.len() || &listed != gens {
        return reject("the order is not a permutation of the minimal generators");
    }
    let top = ideal_degree(gens);
    for (j, step) in steps.iter().enumerate() {
        let f = &order[j];
        let colon = minimal_monos(order[..j].iter().map(|g| colon_mono(g, f)).collect());
        if parse_all(&step.colon)? != colon {
            return reject(format!("step {} records the wrong colon ideal", j + 1));
        }
        let d = ideal_degree(&colon);
        if d != step.colon_degree {
            return reject(format!("step {} records the wrong colon degree", j + 1));
        }
        if j == 0 {
            continue;
        }
        let ok = if linear {
            colon.iter().all(|m| degree(m) == 1)
        } else {
            d + degree(f) <= top + 1
        };
        if !ok {
            return reject(format!("step {} violates the quotient condition", j + 1));
        }
    }
    Ok(())
}

pub fn check_graph_certificate(g: &Graph, cert: &Certificate) -> Result<(), CertificateError> {
    let Certificate::EliminationOrder { vertices } = cert else {
        return Err(CertificateError::WrongKind(cert.kind()));
    };
    let names = g.vertices();
    let mut adjacency: BTreeMap<&str, Set> = names.names().iter().map(|n| (n.as_str(), Set::new())).collect();
    for (u, v) in g.edges() {
        adjacency.get_mut(names.name(u)).expect("vertex").insert(names.name(v).to_string());
        adjacency.get_mut(names.name(v)).expect("vertex").insert(names.name(u).to_string());
    }
    let listed = to_set(vertices);
    if listed.len() != vertices.len() || listed != names.names().iter().cloned().collect::<Set>() {
        return reject("the order is not a permutation of the vertices");
    }
    for (k, v) in vertices.iter().enumerate() {
        let later: Set = vertices[k + 1..]
            .iter()
            .filter(|w| adjacency[v.as_str()].contains(*w))
            .cloned()
            .collect();
        for a in &later {
            for b in &later {
                if a < b && !adjacency[a.as_str()].contains(b) {
                    return reject(format!("later neighbours {a}, {b} of {v} are not adjacent"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::test_support::cx;
    use crate::ideal::test_support::mi;

    fn order(fs: &[&str]) -> Vec<Vec<String>> {
        fs.iter().map(|f| f.chars().map(|c| c.to_string()).collect()).collect()
    }

    #[test]
    fn scaling_order_from_the_definition() {
        let c = cx("ab bcd def");
        let good = Certificate::ScalingOrder { facets: order(&["ab", "bcd", "def"]) };
        assert_eq!(check_complex_certificate(&c, &good), Ok(()));
        let bad = Certificate::ScalingOrder { facets: order(&["ab", "def", "bcd"]) };
        assert!(check_complex_certificate(&c, &bad).is_err());
        let shelling = Certificate::ShellingOrder { facets: order(&["ab", "bcd", "def"]) };
        assert!(check_complex_certificate(&c, &shelling).is_err());
        let short = Certificate::ScalingOrder { facets: order(&["ab", "bcd"]) };
        assert!(check_complex_certificate(&c, &short).is_err());
    }

    #[test]
    fn trees_are_checked_node_by_node() {
        let c = cx("ab cde");
        let leaf = |f: &str| Box::new(VertexTree::Simplex { facet: f.chars().map(|c| c.to_string()).collect() });
        // c is dismissing, but del(c) = ⟨ab, de⟩ is not a simplex.
        let tree = VertexTree::Split { vertex: "c".into(), deletion: leaf("ab"), link: leaf("de") };
        assert!(check_complex_certificate(&c, &Certificate::DismissingTree { tree: tree.clone() }).is_err());
        assert!(check_complex_certificate(&c, &Certificate::SheddingTree { tree }).is_err());
        let edge = cx("ab bc");
        let tree = VertexTree::Split { vertex: "a".into(), deletion: leaf("bc"), link: leaf("b") };
        assert_eq!(check_complex_certificate(&edge, &Certificate::SheddingTree { tree }), Ok(()));
    }

    #[test]
    fn wrong_kind() {
        let cert = Certificate::EliminationOrder { vertices: vec![] };
        assert_eq!(
            check_complex_certificate(&cx("a"), &cert),
            Err(CertificateError::WrongKind("elimination-order"))
        );
        assert!(check_ideal_certificate(&mi("a", "a"), &cert).is_err());
    }

    #[test]
    fn quotient_orders() {
        let i = mi("abcdef", "abc aef cdef");
        let steps = crate::ideal_props::quotient_steps(&i, &[2, 1, 0]);
        assert_eq!(check_ideal_certificate(&i, &Certificate::DegreeQuotientOrder { steps: steps.clone() }), Ok(()));
        assert!(check_ideal_certificate(&i, &Certificate::LinearQuotientOrder { steps }).is_err());
    }
}
