//! Recursive shedding / dismissing search.

use std::collections::HashMap;

use crate::bits;
use crate::decision::{Budget, Exhausted, VertexTree};
use crate::complex::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum VertexRule {
    Shedding,
    Dismissing,
}

/// Every facet through `x` loses `x` into some facet avoiding `x`.
pub(crate) fn is_shedding(facets: &[u64], x: usize) -> bool {
    let bit = 1u64 << x;
    facets.iter().filter(|&&f| f & bit != 0).all(|&f| {
        let rest = f & !bit;
        facets
            .iter()
            .any(|&g| g & bit == 0 && bits::is_subset(rest, g))
    })
}

pub(crate) fn is_dismissing(facets: &[u64], x: usize) -> bool {
    bits::mdim(&bits::deletion(facets, x)) >= bits::mdim(facets)
}

impl VertexRule {
    fn admits(self, facets: &[u64], x: usize) -> bool {
        match self {
            VertexRule::Shedding => is_shedding(facets, x),
            VertexRule::Dismissing => is_dismissing(facets, x),
        }
    }
}

/// Support vertices by descending degree in the pure initial-dimension
/// skeleton, ties by id.
pub(crate) fn candidate_order(facets: &[u64]) -> Vec<usize> {
    let r = (bits::mdim(facets) + 1) as usize;
    let mut degree = [0u32; 64];
    for s in bits::pure_skeleton(facets, r as i32 - 1) {
        for v in bits::ids(s) {
            degree[v] += 1;
        }
    }
    let mut order: Vec<usize> = bits::ids(bits::support(facets)).collect();
    order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
    order
}

enum Outcome {
    Split(usize),
    Fail,
}

pub(crate) struct Decomposer {
    rule: VertexRule,
    pub(crate) budget: Budget,
    memo: HashMap<Vec<u64>, Outcome>,
}

impl Decomposer {
    pub(crate) fn new(rule: VertexRule, budget: Budget) -> Self {
        Decomposer {
            rule,
            budget,
            memo: HashMap::new(),
        }
    }

    /// `facets` must be non-void and canonically sorted.
    pub(crate) fn decide(&mut self, facets: &[u64]) -> Result<bool, Exhausted> {
        if facets.len() == 1 {
            return Ok(true);
        }
        if let Some(outcome) = self.memo.get(facets) {
            return Ok(matches!(outcome, Outcome::Split(_)));
        }
        self.budget.tick()?;
        for x in candidate_order(facets) {
            if !self.rule.admits(facets, x) {
                continue;
            }
            let link = bits::link(facets, 1u64 << x);
            if !self.decide(&link)? {
                continue;
            }
            let deletion = bits::deletion(facets, x);
            if self.decide(&deletion)? {
                self.memo.insert(facets.to_vec(), Outcome::Split(x));
                return Ok(true);
            }
        }
        self.memo.insert(facets.to_vec(), Outcome::Fail);
        Ok(false)
    }

    /// Rebuilds the witness tree of a complex already decided true.
    pub(crate) fn tree(&self, facets: &[u64], names: &VertexSet) -> VertexTree {
        if facets.len() == 1 {
            return VertexTree::Simplex {
                facet: names.labels_of(facets[0]),
            };
        }
        match self.memo.get(facets) {
            Some(Outcome::Split(x)) => VertexTree::Split {
                vertex: names.name(*x).to_string(),
                deletion: Box::new(self.tree(&bits::deletion(facets, *x), names)),
                link: Box::new(self.tree(&bits::link(facets, 1u64 << x), names)),
            },
            _ => unreachable!("tree requested for an undecided complex"),
        }
    }
}
