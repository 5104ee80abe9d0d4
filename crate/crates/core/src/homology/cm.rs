//! Reisner-type Cohen–Macaulay tests and depth of the Stanley–Reisner ring.

use std::collections::HashMap;

use crate::bits;
use crate::complex::{SimplicialComplex, SkeletonMode};
use crate::error::{Error, Result};
use crate::ideal::stanley_reisner_bridge;
use crate::ideal_props::graded_betti_numbers;

use super::chain::reduced_homology_of;
use super::FieldSpec;

/// Reisner's criterion, organised as a recursion over vertex links: a pure
/// complex is CM iff its homology vanishes below the top and every vertex
/// link is CM. Links are memoized by facet list.
struct CmTester {
    field: FieldSpec,
    memo: HashMap<Vec<u64>, bool>,
}

impl CmTester {
    fn check(&mut self, facets: &[u64]) -> Result<bool> {
        if facets.len() == 1 {
            return Ok(true);
        }
        if let Some(&known) = self.memo.get(facets) {
            return Ok(known);
        }
        let d = bits::dim(facets);
        let ok = bits::mdim(facets) == d && self.homology_ok(facets, d)? && {
            let mut all = true;
            for v in bits::ids(bits::support(facets)) {
                if !self.check(&bits::link(facets, 1u64 << v))? {
                    all = false;
                    break;
                }
            }
            all
        };
        self.memo.insert(facets.to_vec(), ok);
        Ok(ok)
    }

    fn homology_ok(&self, facets: &[u64], d: i32) -> Result<bool> {
        let ranks = reduced_homology_of(facets, self.field)?;
        Ok(ranks.iter().take(d.max(0) as usize + 1).all(|&r| r == 0) || d == -1)
    }
}

fn cm_facets(facets: &[u64], field: FieldSpec) -> Result<bool> {
    CmTester {
        field,
        memo: HashMap::new(),
    }
    .check(facets)
}

/// Pure, with `h̃_i(link σ) = 0` for every face `σ` and `i < dim link σ`.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    c.require_non_void("Cohen-Macaulay test")?;
    cm_facets(c.facet_masks(), field)
}

/// The pure skeleton at the initial dimension is Cohen–Macaulay.
pub fn is_initially_cm(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let skeleton = c.pure_skeleton(c.mdim()?, SkeletonMode::Pure)?;
    is_cohen_macaulay(&skeleton, field)
}

/// Every pure skeleton `Δ^[j]`, `0 ≤ j ≤ dim Δ`, is Cohen–Macaulay.
pub fn is_sequentially_cm(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let d = c.dim()?;
    for j in 0..=d {
        if !is_cohen_macaulay(&c.pure_skeleton(j, SkeletonMode::Pure)?, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Depth of `𝕂[Δ]` as `|X| - pd(𝕂[Δ])`, with the projective dimension read
/// from the graded Betti table of the Stanley–Reisner ideal.
pub fn depth(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    c.require_non_void("depth")?;
    let n = c.vertices().len();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "depth needs a nonempty vertex set".into(),
        ));
    }
    let (sr, _) = stanley_reisner_bridge(c)?;
    let value = if sr.is_zero() {
        n
    } else {
        let pd = graded_betti_numbers(&sr, field)?
            .projective_dimension()
            .expect("nonzero ideal has a nonzero Betti number");
        n - pd - 1
    };
    debug_assert_eq!(Some(value), depth_by_skeletons(c, field).ok());
    Ok(value)
}

/// Depth as `1 + max{i : Δ^(i) is Cohen–Macaulay}` over the full skeletons.
pub fn depth_by_skeletons(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    let d = c.dim()?;
    let mut best = -1;
    for i in 0..=d {
        if is_cohen_macaulay(&c.pure_skeleton(i, SkeletonMode::Full)?, field)? {
            best = i;
        } else {
            break;
        }
    }
    Ok((best + 1) as usize)
}
