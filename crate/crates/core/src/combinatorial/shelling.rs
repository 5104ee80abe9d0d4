//! Facet-order search for shellings and scaling orders.
//!
//! Whether a facet may be appended depends only on the set of facets already
//! placed, so the search memoizes dead placed-sets.

use std::collections::HashSet;

use crate::bits;
use crate::decision::{Budget, Exhausted};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum OrderRule {
    /// `⟨F_j⟩ ∩ ⋃⟨F_i⟩` pure of dimension `dim F_j - 1`.
    Shelling,
    /// `mdim(⟨F_j⟩ ∩ ⋃⟨F_i⟩) ≥ mdim Δ - 1`.
    Scaling,
}

/// Checks one step: every maximal `F_j ∩ F_i` has at least `threshold`
/// elements.
pub(crate) fn step_ok(facet: u64, placed: impl Iterator<Item = u64> + Clone, threshold: u32) -> bool {
    let big: Vec<u64> = placed
        .clone()
        .map(|g| g & facet)
        .filter(|i| i.count_ones() >= threshold)
        .collect();
    placed
        .map(|g| g & facet)
        .all(|i| big.iter().any(|&b| bits::is_subset(i, b)))
}

struct OrderSearch<'a> {
    facets: &'a [u64],
    rule: OrderRule,
    thresholds: Vec<u32>,
    dead: HashSet<u64>,
    budget: &'a mut Budget,
    full: u64,
}

impl OrderSearch<'_> {
    fn valid(&self, j: usize, placed: u64) -> bool {
        if placed == 0 {
            return true;
        }
        let facet = self.facets[j];
        step_ok(
            facet,
            bits::ids(placed).map(|i| self.facets[i]),
            self.thresholds[j],
        )
    }

    fn candidates(&self, placed: u64) -> Vec<usize> {
        let remaining = self.full & !placed;
        let mut cands: Vec<usize> = bits::ids(remaining).collect();
        if self.rule == OrderRule::Shelling {
            // Some shelling lists facets by weakly decreasing dimension, so
            // only the largest remaining facets need to be tried.
            let top = cands
                .iter()
                .map(|&j| self.facets[j].count_ones())
                .max()
                .unwrap_or(0);
            cands.retain(|&j| self.facets[j].count_ones() == top);
        }
        let score = |j: usize| -> (u32, u32) {
            let f = self.facets[j];
            let adj = bits::ids(placed)
                .filter(|&i| (self.facets[i] & f).count_ones() >= self.thresholds[j])
                .count() as u32;
            (adj, f.count_ones())
        };
        cands.sort_by(|&a, &b| score(b).cmp(&score(a)).then(a.cmp(&b)));
        cands
    }

    fn dfs(&mut self, placed: u64, order: &mut Vec<usize>) -> Result<bool, Exhausted> {
        if placed == self.full {
            return Ok(true);
        }
        if self.dead.contains(&placed) {
            return Ok(false);
        }
        self.budget.tick()?;
        for j in self.candidates(placed) {
            if !self.valid(j, placed) {
                continue;
            }
            order.push(j);
            if self.dfs(placed | (1u64 << j), order)? {
                return Ok(true);
            }
            order.pop();
        }
        self.dead.insert(placed);
        Ok(false)
    }
}

/// Pure shellable complexes of positive dimension are strongly connected.
fn top_facets_strongly_connected(facets: &[u64]) -> bool {
    let top = facets.iter().map(|f| f.count_ones()).max().unwrap_or(0);
    if top < 2 {
        return true;
    }
    let tops: Vec<u64> = facets
        .iter()
        .copied()
        .filter(|f| f.count_ones() == top)
        .collect();
    let mut reached = vec![false; tops.len()];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(a) = stack.pop() {
        for b in 0..tops.len() {
            if !reached[b] && (tops[a] & tops[b]).count_ones() == top - 1 {
                reached[b] = true;
                stack.push(b);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Finds an admissible facet order (as indices into `facets`) or proves none
/// exists. `facets` must be non-void with at most 64 facets.
pub(crate) fn find_order(
    facets: &[u64],
    rule: OrderRule,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, Exhausted> {
    let q = facets.len();
    debug_assert!(q >= 1 && q <= 64);
    if q == 1 {
        return Ok(Some(vec![0]));
    }
    if rule == OrderRule::Shelling && !top_facets_strongly_connected(facets) {
        budget.tick()?;
        return Ok(None);
    }
    let min_size = facets.iter().map(|f| f.count_ones()).min().unwrap_or(0);
    let thresholds = facets
        .iter()
        .map(|f| match rule {
            OrderRule::Shelling => f.count_ones() - 1,
            OrderRule::Scaling => min_size.saturating_sub(1),
        })
        .collect();
    let full = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
    let mut search = OrderSearch {
        facets,
        rule,
        thresholds,
        dead: HashSet::new(),
        budget,
        full,
    };
    let mut order = Vec::with_capacity(q);
    if search.dfs(0, &mut order)? {
        Ok(Some(order))
    } else {
        Ok(None)
    }
}
