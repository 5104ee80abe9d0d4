//! Graded Betti numbers of monomial ideals.
//!
//! Two independent routes: Hochster's formula over the induced subcomplexes
//! of the Stanley–Reisner complex (squarefree ideals), and the upper Koszul
//! simplicial complexes `K^b(I)` over the lcm lattice (any monomial ideal).

use std::collections::{BTreeMap, HashSet};

use crate::bits;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_of, FieldSpec};
use crate::ideal::{polarize, squarefree_truncation, Monomial, MonomialIdeal, TruncationMode};

/// Largest generator support for the Hochster route.
pub const HOCHSTER_MAX_VARIABLES: usize = 20;
/// Largest lcm lattice for the upper Koszul route.
pub const LCM_LATTICE_LIMIT: usize = 1 << 16;

/// Graded Betti numbers `β_{i,j}` of an ideal (not of its quotient ring).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    fn new(field: FieldSpec) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, i: usize, j: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, v)| v).sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max{j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i as u32).max()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Hochster's formula: `β_{i,W}(I) = h̃_{|W|-i-2}(Δ_W)` where `Δ` is the
/// complex of sets containing no generator. Only `W` that are unions of
/// generators can contribute.
pub fn graded_betti_numbers_hochster(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    i.require_proper_nonzero()?;
    i.require_squarefree()?;
    let support = i.support();
    if support.count_ones() as usize > HOCHSTER_MAX_VARIABLES {
        return Err(Error::Capacity {
            what: "variables for Hochster's formula",
            limit: HOCHSTER_MAX_VARIABLES,
        });
    }
    let gens: Vec<u64> = i.generators().iter().map(Monomial::support).collect();
    let mut table = BettiTable::new(field);
    let mut result = Ok(());
    bits::for_each_subset(support, |w| {
        if result.is_err() || w == 0 {
            return;
        }
        let inside: Vec<u64> = gens.iter().copied().filter(|&g| bits::is_subset(g, w)).collect();
        if bits::support(&inside) != w {
            return;
        }
        let facets: Vec<u64> = bits::minimal_transversals(&inside)
            .into_iter()
            .map(|t| w & !t)
            .collect();
        match reduced_homology_of(&bits::maximal(facets), field) {
            Ok(ranks) => {
                let size = w.count_ones();
                for (k, &r) in ranks.iter().enumerate() {
                    // k indexes dimension k - 1 = |W| - i - 2.
                    if let Some(hom) = (size as usize).checked_sub(k + 1) {
                        table.add(hom, size, r);
                    }
                }
            }
            Err(e) => result = Err(e),
        }
    });
    result?;
    Ok(table)
}

fn lcm_lattice(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        let mut fresh = vec![g.clone()];
        for m in &all {
            fresh.push(m.lcm(g));
        }
        for m in fresh {
            if seen.insert(m.clone()) {
                all.push(m);
                if all.len() > LCM_LATTICE_LIMIT {
                    return Err(Error::Capacity {
                        what: "elements of the lcm lattice",
                        limit: LCM_LATTICE_LIMIT,
                    });
                }
            }
        }
    }
    Ok(all)
}

/// Upper Koszul route: `β_{i,b}(I) = h̃_{i-1}(K^b(I))`, where `K^b(I)` is
/// generated by `{v : g_v < b_v}` for the generators `g | x^b`.
pub fn graded_betti_numbers_lcm(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    i.require_proper_nonzero()?;
    let gens = i.generators();
    let mut table = BettiTable::new(field);
    for b in lcm_lattice(gens)? {
        let facets: Vec<u64> = gens
            .iter()
            .filter(|g| g.divides(&b))
            .map(|g| {
                b.factors()
                    .iter()
                    .filter(|&&(v, e)| g.exponent(v) < e)
                    .fold(0u64, |acc, &(v, _)| acc | (1u64 << v))
            })
            .collect();
        let ranks = reduced_homology_of(&bits::maximal(facets), field)?;
        for (k, &r) in ranks.iter().enumerate() {
            table.add(k, b.degree(), r);
        }
    }
    Ok(table)
}

/// Exact graded Betti numbers over `field`, by Hochster's formula for
/// squarefree ideals of moderate support and over the lcm lattice otherwise.
pub fn graded_betti_numbers(i: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if i.is_squarefree() && (i.support().count_ones() as usize) <= 14 {
        graded_betti_numbers_hochster(i, field)
    } else {
        graded_betti_numbers_lcm(i, field)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionProfile {
    pub regularity: u32,
    pub degree: u32,
    /// `reg I = deg I`.
    pub degree_resolution: bool,
    /// Equigenerated with `reg I = deg I`.
    pub linear_resolution: bool,
    /// Every squarefree component `(I^pol)_[d]` has a linear resolution.
    pub componentwise_linear: bool,
}

fn has_linear_resolution_in(i: &MonomialIdeal, d: u32, field: FieldSpec) -> Result<bool> {
    Ok(graded_betti_numbers(i, field)?.regularity() == Some(d))
}

pub fn resolution_profile(i: &MonomialIdeal, field: FieldSpec) -> Result<ResolutionProfile> {
    let table = graded_betti_numbers(i, field)?;
    let regularity = table.regularity().expect("proper nonzero ideal");
    let degree = i.degree()?;
    let polarized = if i.is_squarefree() { i.clone() } else { polarize(i)? };
    let mut componentwise_linear = true;
    // Components above deg I are components of I_[deg I] and inherit
    // linearity from it.
    for d in i.min_degree()?..=degree {
        let component = squarefree_truncation(&polarized, d, TruncationMode::Exactly)?;
        if component.is_zero() {
            continue;
        }
        if !has_linear_resolution_in(&component, d, field)? {
            componentwise_linear = false;
            break;
        }
    }
    Ok(ResolutionProfile {
        regularity,
        degree,
        degree_resolution: regularity == degree,
        linear_resolution: i.is_equigenerated() && regularity == degree,
        componentwise_linear,
    })
}
