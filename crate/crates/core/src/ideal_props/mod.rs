//! Deciders for monomial ideals: dividing variables, vertex divisible and
//! vertex splittable ideals, linear and degree quotients; graded Betti
//! numbers and resolution shape.

mod betti;
mod quotients;

use std::collections::HashMap;

use crate::decision::{Budget, Certificate, Decision, Exhausted, IdealTree, SearchLimit};
use crate::error::{Error, Result};
use crate::ideal::{split_same_ring, Monomial, MonomialIdeal};

pub use betti::{
    graded_betti_numbers, graded_betti_numbers_hochster, graded_betti_numbers_lcm, resolution_profile,
    BettiTable, ResolutionProfile,
};
pub use quotients::{has_degree_quotients, has_linear_quotients, quotient_steps, QuotientRule};

/// Degree of a proper ideal, with the unit ideal counted as degree 0.
fn degree_or_zero(i: &MonomialIdeal) -> u32 {
    i.generators().iter().map(Monomial::degree).max().unwrap_or(0)
}

fn dividing(i: &MonomialIdeal, x: usize) -> bool {
    let colon = i.colon(&Monomial::variable(x));
    degree_or_zero(&colon) + 1 <= degree_or_zero(i)
}

/// `deg(I : x) + 1 ≤ deg I`, where a unit colon ideal has degree 0.
pub fn is_dividing_variable(i: &MonomialIdeal, x: usize) -> Result<bool> {
    i.require_proper_nonzero()?;
    if x >= i.ring().len() {
        return Err(Error::UnknownVertexId(x));
    }
    Ok(dividing(i, x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SplitRule {
    /// Dividing variable, `J = (I : x)`, `K` the `x`-free generators.
    Divisible,
    /// `G(I) = x G(J) ⊔ G(K)`, `x` dividing no generator of `J` or `K`,
    /// and `K ⊆ J`.
    Splittable,
}

struct IdealSearch {
    rule: SplitRule,
    budget: Budget,
    memo: HashMap<Vec<Monomial>, Option<usize>>,
}

impl IdealSearch {
    fn is_base(&self, i: &MonomialIdeal) -> bool {
        match self.rule {
            SplitRule::Divisible => i.is_zero() || i.is_principal(),
            SplitRule::Splittable => i.is_zero() || i.is_unit(),
        }
    }

    /// The `(J, K)` pair at `x`, if `x` is admissible for the rule.
    fn split(&self, i: &MonomialIdeal, x: usize) -> Option<(MonomialIdeal, MonomialIdeal)> {
        match self.rule {
            SplitRule::Divisible => {
                if !dividing(i, x) {
                    return None;
                }
                Some(split_same_ring(i, x))
            }
            SplitRule::Splittable => {
                let with_x: Vec<&Monomial> = i.generators().iter().filter(|g| g.exponent(x) > 0).collect();
                if with_x.is_empty() || with_x.iter().any(|g| g.exponent(x) > 1) {
                    return None;
                }
                let xm = Monomial::variable(x);
                let j = MonomialIdeal::from_minimal(
                    i.ring().clone(),
                    with_x.iter().map(|g| g.colon(&xm)).collect(),
                );
                let (_, k) = split_same_ring(i, x);
                k.is_subideal_of(&j).then_some((j, k))
            }
        }
    }

    fn decide(&mut self, i: &MonomialIdeal) -> Result<bool, Exhausted> {
        if self.is_base(i) {
            return Ok(true);
        }
        if let Some(known) = self.memo.get(i.generators()) {
            return Ok(known.is_some());
        }
        self.budget.tick()?;
        let support = i.support();
        let mut found = None;
        for x in crate::bits::ids(support) {
            let Some((j, k)) = self.split(i, x) else {
                continue;
            };
            if self.decide(&k)? && self.decide(&j)? {
                found = Some(x);
                break;
            }
        }
        self.memo.insert(i.generators().to_vec(), found);
        Ok(found.is_some())
    }

    fn tree(&self, i: &MonomialIdeal) -> IdealTree {
        if self.is_base(i) {
            return IdealTree::Base {
                generators: i.generator_labels(),
            };
        }
        let x = self.memo[i.generators()].expect("tree requested for a failed ideal");
        let (j, k) = self.split(i, x).expect("recorded split is admissible");
        IdealTree::Split {
            variable: i.ring().name(x).to_string(),
            colon: Box::new(self.tree(&j)),
            rest: Box::new(self.tree(&k)),
        }
    }
}

fn ideal_decide(i: &MonomialIdeal, rule: SplitRule, limit: SearchLimit) -> Decision {
    let mut search = IdealSearch {
        rule,
        budget: Budget::new(limit),
        memo: HashMap::new(),
    };
    let outcome = search.decide(i).map(|ok| {
        ok.then(|| {
            let tree = search.tree(i);
            match rule {
                SplitRule::Divisible => Certificate::DivisionTree { tree },
                SplitRule::Splittable => Certificate::SplittingTree { tree },
            }
        })
    });
    Decision::finish(outcome, limit, search.budget.spent)
}

/// Zero, unit or principal, or `I = xJ + K` at a dividing variable `x`
/// with `J = (I : x)` and `K ⊆ J` the `x`-free part, both vertex divisible.
///
/// For ideals with higher powers of `x` the colon `J` may still involve `x`;
/// the recursion then continues on `J` in the same ring.
pub fn is_vertex_divisible(i: &MonomialIdeal, limit: SearchLimit) -> Decision {
    ideal_decide(i, SplitRule::Divisible, limit)
}

/// Zero or unit, or `I = xJ + K` with `G(I) = x G(J) ⊔ G(K)`, `x` dividing no
/// generator of `J` or `K`, `K ⊆ J`, and `J`, `K` vertex splittable.
pub fn is_vertex_splittable(i: &MonomialIdeal, limit: SearchLimit) -> Decision {
    ideal_decide(i, SplitRule::Splittable, limit)
}
