//! Exact deciders for shedding/dismissing vertices, vertex decomposability
//! and dismissibility, shellability and scalability, and weak connectedness.
//!
//! Every positive answer carries a [`Certificate`] that
//! [`crate::certificate`] can replay from the definitions.

mod decompose;
mod shelling;

use crate::bits;
use crate::complex::{SimplicialComplex, SkeletonMode};
use crate::decision::{Budget, Certificate, Decision, Method, SearchLimit, Truth};
use crate::error::{Error, Result};
use crate::homology::{is_cohen_macaulay, FieldSpec};

pub(crate) use decompose::{is_dismissing, is_shedding};

use decompose::{Decomposer, VertexRule};
use shelling::{find_order, OrderRule};

/// Facet limit for the order searches (placed-sets are `u64` masks).
pub const MAX_ORDER_FACETS: usize = 64;

pub fn is_shedding_vertex(c: &SimplicialComplex, x: usize) -> Result<bool> {
    c.check_vertex(x)?;
    c.require_non_void("shedding test")?;
    Ok(is_shedding(c.facet_masks(), x))
}

/// `mdim del(x) ≥ mdim Δ`.
pub fn is_dismissing_vertex(c: &SimplicialComplex, x: usize) -> Result<bool> {
    c.check_vertex(x)?;
    c.require_non_void("dismissing test")?;
    Ok(is_dismissing(c.facet_masks(), x))
}

fn decompose(c: &SimplicialComplex, rule: VertexRule, limit: SearchLimit) -> Result<Decision> {
    c.require_non_void("vertex decomposition")?;
    let mut search = Decomposer::new(rule, Budget::new(limit));
    let outcome = search.decide(c.facet_masks()).map(|ok| {
        ok.then(|| {
            let tree = search.tree(c.facet_masks(), c.vertices());
            match rule {
                VertexRule::Shedding => Certificate::SheddingTree { tree },
                VertexRule::Dismissing => Certificate::DismissingTree { tree },
            }
        })
    });
    Ok(Decision::finish(outcome, limit, search.budget.spent))
}

/// Simplex, or a shedding vertex whose deletion and link are both vertex
/// decomposable.
pub fn is_vertex_decomposable(c: &SimplicialComplex, limit: SearchLimit) -> Result<Decision> {
    decompose(c, VertexRule::Shedding, limit)
}

/// Simplex, or a dismissing vertex whose deletion and link are both vertex
/// dismissible.
pub fn is_vertex_dismissible(c: &SimplicialComplex, limit: SearchLimit) -> Result<Decision> {
    decompose(c, VertexRule::Dismissing, limit)
}

fn order(c: &SimplicialComplex, rule: OrderRule, limit: SearchLimit) -> Result<Decision> {
    c.require_non_void("facet order search")?;
    if c.facet_count() > MAX_ORDER_FACETS {
        return Err(Error::Capacity {
            what: "facets in an order search",
            limit: MAX_ORDER_FACETS,
        });
    }
    let mut budget = Budget::new(limit);
    let facets = c.facet_masks();
    let outcome = find_order(facets, rule, &mut budget).map(|found| {
        found.map(|idx| {
            let listed = idx
                .into_iter()
                .map(|i| c.vertices().labels_of(facets[i]))
                .collect();
            match rule {
                OrderRule::Shelling => Certificate::ShellingOrder { facets: listed },
                OrderRule::Scaling => Certificate::ScalingOrder { facets: listed },
            }
        })
    });
    Ok(Decision::finish(outcome, limit, budget.spent))
}

/// Björner–Wachs (non-pure) shellability.
pub fn is_shellable(c: &SimplicialComplex, limit: SearchLimit) -> Result<Decision> {
    c.require_non_void("facet order search")?;
    // Shellable complexes are sequentially Cohen–Macaulay over every field;
    // refuting that is far cheaper than exhausting the order search.
    if c.facet_count() > 2 && crate::homology::is_sequentially_cm(c, FieldSpec::Rationals) == Ok(false) {
        return Ok(Decision::finish(Ok(None), limit, 1));
    }
    order(c, OrderRule::Shelling, limit)
}

/// Existence of a scaling order: every step intersection has initial
/// dimension at least `mdim Δ - 1`.
pub fn is_scalable(c: &SimplicialComplex, limit: SearchLimit) -> Result<Decision> {
    order(c, OrderRule::Scaling, limit)
}

/// Connectivity of the facet graph whose edges join facets sharing at least
/// `mdim Δ` vertices.
pub fn is_weakly_connected(c: &SimplicialComplex) -> Result<bool> {
    c.require_non_void("weak connectedness")?;
    let facets = c.facet_masks();
    let need = bits::mdim(facets).max(0) as u32;
    let q = facets.len();
    let mut reached = vec![false; q];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(a) = stack.pop() {
        for b in 0..q {
            if !reached[b] && (facets[a] & facets[b]).count_ones() >= need {
                reached[b] = true;
                stack.push(b);
            }
        }
    }
    Ok(reached.into_iter().all(|r| r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeletalProperty {
    VertexDecomposable,
    Shellable,
    CohenMacaulay,
}

/// True when every pure skeleton `Δ^[j]`, `0 ≤ j ≤ k`, has `prop`.
pub fn has_k_property(
    c: &SimplicialComplex,
    k: i32,
    prop: SkeletalProperty,
    field: Option<FieldSpec>,
    limit: SearchLimit,
) -> Result<Decision> {
    let d = c.dim()?;
    if k < -1 || k > d {
        return Err(Error::DimensionOutOfRange {
            k: k as i64,
            lo: -1,
            hi: d as i64,
        });
    }
    if (prop == SkeletalProperty::CohenMacaulay) != field.is_some() {
        return Err(Error::InvalidArgument(
            "a field is required exactly for the Cohen-Macaulay property".into(),
        ));
    }
    let mut spent = 0;
    let mut value = Truth::True;
    for j in 0..=k {
        let skeleton = c.pure_skeleton(j, SkeletonMode::Pure)?;
        let step = match prop {
            SkeletalProperty::VertexDecomposable => is_vertex_decomposable(&skeleton, limit)?,
            SkeletalProperty::Shellable => is_shellable(&skeleton, limit)?,
            SkeletalProperty::CohenMacaulay => {
                let cm = is_cohen_macaulay(&skeleton, field.expect("checked"))?;
                Decision {
                    value: cm.into(),
                    method: Method::Exact,
                    certificate: None,
                    budget_spent: 0,
                }
            }
        };
        spent += step.budget_spent;
        match step.value {
            Truth::False => {
                value = Truth::False;
                break;
            }
            Truth::Unknown => value = Truth::Unknown,
            Truth::True => {}
        }
    }
    let method = if prop == SkeletalProperty::CohenMacaulay {
        Method::Exact
    } else {
        limit.method()
    };
    Ok(Decision {
        value,
        method,
        certificate: None,
        budget_spent: spent,
    })
}
