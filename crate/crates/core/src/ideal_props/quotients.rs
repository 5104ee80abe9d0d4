//! Generator-order search for linear and degree quotients.
//!
//! The colon `(f_i : i placed) : f_j` depends only on the set of generators
//! already placed, so dead placed-sets are memoized.

use std::collections::HashSet;

use crate::bits;
use crate::decision::{Budget, Certificate, Decision, Exhausted, QuotientStep, SearchLimit};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::ideal::{minimalize, Monomial, MonomialIdeal};
use crate::ideal_props::{graded_betti_numbers, resolution_profile};

/// Generator limit for the order searches.
pub const MAX_QUOTIENT_GENERATORS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientRule {
    /// Every step colon is generated by variables.
    Linear,
    /// Every step colon satisfies `deg J_j ≤ deg I - deg f_j + 1`.
    Degree,
}

fn step_colon(gens: &[Monomial], placed: u64, j: usize) -> Vec<Monomial> {
    minimalize(bits::ids(placed).map(|i| gens[i].colon(&gens[j])).collect())
}

fn step_ok(rule: QuotientRule, colon: &[Monomial], f: &Monomial, top: u32) -> bool {
    match rule {
        QuotientRule::Linear => colon.iter().all(|m| m.degree() == 1),
        QuotientRule::Degree => {
            let d = colon.iter().map(Monomial::degree).max().unwrap_or(0);
            d + f.degree() <= top + 1
        }
    }
}

struct QuotientSearch<'a> {
    gens: &'a [Monomial],
    rule: QuotientRule,
    top: u32,
    full: u64,
    dead: HashSet<u64>,
    budget: Budget,
}

impl QuotientSearch<'_> {
    fn dfs(&mut self, placed: u64, order: &mut Vec<usize>) -> Result<bool, Exhausted> {
        if placed == self.full {
            return Ok(true);
        }
        if self.dead.contains(&placed) {
            return Ok(false);
        }
        self.budget.tick()?;
        for j in bits::ids(self.full & !placed) {
            if placed != 0 {
                let colon = step_colon(self.gens, placed, j);
                if !step_ok(self.rule, &colon, &self.gens[j], self.top) {
                    continue;
                }
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

/// The recorded data of each step of `order` (indices into the generators).
pub fn quotient_steps(i: &MonomialIdeal, order: &[usize]) -> Vec<QuotientStep> {
    let gens = i.generators();
    let mut placed = 0u64;
    order
        .iter()
        .map(|&j| {
            let colon = step_colon(gens, placed, j);
            placed |= 1u64 << j;
            QuotientStep {
                generator: i.monomial_label(&gens[j]),
                colon_degree: colon.iter().map(Monomial::degree).max().unwrap_or(0),
                colon: colon.iter().map(|m| i.monomial_label(m)).collect(),
            }
        })
        .collect()
}

fn search(i: &MonomialIdeal, rule: QuotientRule, limit: SearchLimit) -> Result<Decision> {
    i.require_proper_nonzero()?;
    let gens = i.generators();
    if gens.len() > MAX_QUOTIENT_GENERATORS {
        return Err(Error::Capacity {
            what: "generators in a quotient-order search",
            limit: MAX_QUOTIENT_GENERATORS,
        });
    }
    let q = gens.len();
    let mut s = QuotientSearch {
        gens,
        rule,
        top: i.degree()?,
        full: if q == 64 { u64::MAX } else { (1u64 << q) - 1 },
        dead: HashSet::new(),
        budget: Budget::new(limit),
    };
    let mut order = Vec::with_capacity(q);
    let outcome = s.dfs(0, &mut order).map(|ok| {
        ok.then(|| {
            let steps = quotient_steps(i, &order);
            match rule {
                QuotientRule::Linear => Certificate::LinearQuotientOrder { steps },
                QuotientRule::Degree => Certificate::DegreeQuotientOrder { steps },
            }
        })
    });
    Ok(Decision::finish(outcome, limit, s.budget.spent))
}

pub fn has_linear_quotients(i: &MonomialIdeal, limit: SearchLimit) -> Result<Decision> {
    i.require_proper_nonzero()?;
    // Linear quotients force componentwise linearity (a linear resolution
    // when equigenerated) over every field, which refutes most negative
    // instances long before the order search would.
    if i.generators().len() > 2 && !resolution_allows_linear_quotients(i) {
        return Ok(Decision::finish(Ok(None), limit, 1));
    }
    search(i, QuotientRule::Linear, limit)
}

fn resolution_allows_linear_quotients(i: &MonomialIdeal) -> bool {
    let q = FieldSpec::Rationals;
    if i.is_equigenerated() {
        match (graded_betti_numbers(i, q), i.degree()) {
            (Ok(t), Ok(d)) => t.regularity() == Some(d),
            _ => true,
        }
    } else {
        resolution_profile(i, q).map_or(true, |p| p.componentwise_linear)
    }
}

pub fn has_degree_quotients(i: &MonomialIdeal, limit: SearchLimit) -> Result<Decision> {
    search(i, QuotientRule::Degree, limit)
}
