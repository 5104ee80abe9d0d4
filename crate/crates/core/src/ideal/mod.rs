//! Monomial ideals over a named variable list, and the bridges to simplicial
//! complexes (Stanley–Reisner ideal, Alexander dual ideal).

mod monomial;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::bits;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

pub use monomial::Monomial;
pub(crate) use monomial::minimalize;

/// A monomial ideal, stored by its minimal generators in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: VertexSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`; every variable id must index into `ring`.
    pub fn new(ring: VertexSet, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if let Some(v) = g.max_variable() {
                if v >= ring.len() {
                    return Err(Error::UnknownVertexId(v));
                }
            }
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimalize(gens),
        })
    }

    pub(crate) fn from_minimal(ring: VertexSet, gens: Vec<Monomial>) -> Self {
        debug_assert_eq!(minimalize(gens.clone()), gens);
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: VertexSet) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: VertexSet) -> Self {
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one()],
        }
    }

    pub fn ring(&self) -> &VertexSet {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_squarefree(&self) -> Result<()> {
        if self.is_squarefree() {
            Ok(())
        } else {
            Err(Error::NotSquarefree)
        }
    }

    /// Maximum generator degree; undefined for the zero and unit ideals.
    pub fn degree(&self) -> Result<u32> {
        self.require_proper_nonzero()?;
        Ok(self.gens.iter().map(Monomial::degree).max().unwrap_or(0))
    }

    pub fn min_degree(&self) -> Result<u32> {
        self.require_proper_nonzero()?;
        Ok(self.gens.iter().map(Monomial::degree).min().unwrap_or(0))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment, comparing generators by variable label.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| {
            let mapped = other.translate(self, g);
            mapped.is_some_and(|m| other.contains(&m))
        })
    }

    /// Rewrites a monomial of `from`'s ring into this ring by label.
    fn translate(&self, from: &MonomialIdeal, m: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(m.factors().len());
        for &(v, e) in m.factors() {
            factors.push((self.ring.id(from.ring.name(v))?, e));
        }
        Some(Monomial::from_factors(factors))
    }

    /// Same ideal over another ring containing every variable in use.
    pub fn with_ring(&self, ring: VertexSet) -> Result<Self> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut factors = Vec::new();
            for &(v, e) in g.factors() {
                factors.push((ring.require(self.ring.name(v))?, e));
            }
            gens.push(Monomial::from_factors(factors));
        }
        MonomialIdeal::new(ring, gens)
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g.support())
    }

    /// `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.colon(m)).collect()),
        }
    }

    pub fn monomial_label(&self, m: &Monomial) -> String {
        monomial_label(&self.ring, m)
    }

    pub fn generator_labels(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.monomial_label(g)).collect()
    }

    /// Parses a product like `a*b^2` (or `a b^2`, `1`) over this ring.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        parse_monomial(&self.ring, text)
    }

    /// Removes variable `x` from the ring when no generator uses it.
    pub(crate) fn drop_variable(&self, x: usize) -> Option<MonomialIdeal> {
        if self.support() & (1u64 << x) != 0 {
            return None;
        }
        let ring = self.ring.without(1u64 << x);
        let gens = self
            .gens
            .iter()
            .map(|g| g.remap(|v| if v > x { v - 1 } else { v }))
            .collect();
        Some(MonomialIdeal { ring, gens })
    }
}

pub(crate) fn monomial_label(ring: &VertexSet, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.factors()
        .iter()
        .map(|&(v, e)| {
            if e == 1 {
                ring.name(v).to_string()
            } else {
                format!("{}^{}", ring.name(v), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub(crate) fn parse_monomial(ring: &VertexSet, text: &str) -> Result<Monomial> {
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::one());
    }
    let mut factors = Vec::new();
    for token in text.split(|c: char| c == '*' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad exponent in `{token}`")))?;
                (n, e)
            }
            None => (token, 1),
        };
        factors.push((ring.require(name)?, exp));
    }
    if factors.is_empty() {
        return Err(Error::InvalidArgument(format!("empty monomial `{text}`")));
    }
    Ok(Monomial::from_factors(factors))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.generator_labels().join(", "))
    }
}

/// Builds an ideal from generators written as `(label, exponent)` factors.
pub fn build_ideal<S: AsRef<str>>(ring: &[S], raw_generators: &[Vec<(S, u32)>]) -> Result<MonomialIdeal> {
    let ring = VertexSet::new(ring.iter().map(|s| s.as_ref().to_string()))?;
    let mut gens = Vec::with_capacity(raw_generators.len());
    for raw in raw_generators {
        let mut factors = Vec::with_capacity(raw.len());
        for (name, e) in raw {
            factors.push((ring.require(name.as_ref())?, *e));
        }
        gens.push(Monomial::from_factors(factors));
    }
    MonomialIdeal::new(ring, gens)
}

/// Maximum generator degree.
pub fn ideal_degree(i: &MonomialIdeal) -> Result<u32> {
    i.degree()
}

/// `((I : x), K)` where `K` is generated by the generators of `I` that `x`
/// does not divide. Both are returned over `X ∖ {x}` whenever `x` does not
/// occur in `(I : x)` (always the case for squarefree `I`), and over `X`
/// otherwise.
pub fn variable_split(i: &MonomialIdeal, x: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if x >= i.ring.len() {
        return Err(Error::UnknownVertexId(x));
    }
    let (colon, rest) = split_same_ring(i, x);
    match (colon.drop_variable(x), rest.drop_variable(x)) {
        (Some(c), Some(r)) => Ok((c, r)),
        _ => Ok((colon, rest)),
    }
}

/// `(I : x)` and the `x`-free part, both over the ring of `I`.
pub(crate) fn split_same_ring(i: &MonomialIdeal, x: usize) -> (MonomialIdeal, MonomialIdeal) {
    let xm = Monomial::variable(x);
    let colon = i.colon(&xm);
    let rest = MonomialIdeal {
        ring: i.ring.clone(),
        gens: i
            .gens
            .iter()
            .filter(|g| g.exponent(x) == 0)
            .cloned()
            .collect(),
    };
    (colon, rest)
}

/// The Stanley–Reisner ideal (minimal non-faces) and the Alexander dual
/// ideal `(x^{X∖F} : F facet)` of a complex.
pub fn stanley_reisner_bridge(c: &SimplicialComplex) -> Result<(MonomialIdeal, MonomialIdeal)> {
    c.require_non_void("Stanley-Reisner ideal")?;
    let ring = c.vertices().clone();
    let full = ring.full_mask();
    let complements: Vec<u64> = c.facet_masks().iter().map(|&f| full & !f).collect();
    let sr = bits::minimal_transversals(&complements)
        .into_iter()
        .map(Monomial::from_mask)
        .collect();
    let dual = complements.into_iter().map(Monomial::from_mask).collect();
    Ok((
        MonomialIdeal::from_minimal(ring.clone(), minimalize(sr)),
        MonomialIdeal::from_minimal(ring, minimalize(dual)),
    ))
}

/// Alexander dual ideal `I_{Δ∨}`.
pub fn dual_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    Ok(stanley_reisner_bridge(c)?.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealView {
    /// Faces are the sets containing no generator.
    StanleyReisner,
    /// Facets are the complements of the generators.
    Dual,
}

pub fn complex_of_ideal(i: &MonomialIdeal, view: IdealView) -> Result<SimplicialComplex> {
    i.require_proper_nonzero()?;
    i.require_squarefree()?;
    let full = i.ring.full_mask();
    let masks: Vec<u64> = i.gens.iter().map(Monomial::support).collect();
    let facets = match view {
        IdealView::Dual => masks.iter().map(|&g| full & !g).collect(),
        IdealView::StanleyReisner => bits::minimal_transversals(&masks)
            .into_iter()
            .map(|t| full & !t)
            .collect(),
    };
    Ok(SimplicialComplex::from_masks(i.ring.clone(), facets))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TruncationMode {
    /// `I_k`: squarefree monomials of `I` of degree at least `k`.
    AtLeast,
    /// `I_[k]`: squarefree monomials of `I` of degree exactly `k`.
    Exactly,
}

/// Work bound (in enumerated monomials) for truncations.
const TRUNCATION_LIMIT: usize = 1 << 20;

pub fn squarefree_truncation(i: &MonomialIdeal, k: u32, mode: TruncationMode) -> Result<MonomialIdeal> {
    i.require_squarefree()?;
    let full = i.ring.full_mask();
    let mut out: HashSet<u64> = HashSet::new();
    let mut work = 0usize;
    for g in &i.gens {
        let gm = g.support();
        let d = gm.count_ones();
        if mode == TruncationMode::AtLeast && d >= k {
            out.insert(gm);
            continue;
        }
        if d > k {
            continue;
        }
        let mut overflow = false;
        bits::for_each_subset_of_size(full & !gm, (k - d) as usize, |extra| {
            work += 1;
            if work > TRUNCATION_LIMIT {
                overflow = true;
            } else {
                out.insert(gm | extra);
            }
        });
        if overflow {
            return Err(Error::Capacity {
                what: "monomials enumerated by a squarefree truncation",
                limit: TRUNCATION_LIMIT,
            });
        }
    }
    let gens = out.into_iter().map(Monomial::from_mask).collect();
    MonomialIdeal::new(i.ring.clone(), gens)
}

/// Label of the `j`-th polarized copy of variable `name`.
pub fn polarized_name(name: &str, j: u32) -> String {
    format!("{name}~{j}")
}

/// Replaces each power `x^e` by `x~1 ⋯ x~e`; variables that never occur
/// with exponent above one keep their names.
pub fn polarize(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.require_proper_nonzero()?;
    let n = i.ring.len();
    let mut top = vec![0u32; n];
    for g in &i.gens {
        for &(v, e) in g.factors() {
            top[v] = top[v].max(e);
        }
    }
    let mut names: Vec<String> = Vec::new();
    let mut copies: BTreeMap<(usize, u32), String> = BTreeMap::new();
    for v in 0..n {
        let name = i.ring.name(v);
        if top[v] <= 1 {
            names.push(name.to_string());
            copies.insert((v, 1), name.to_string());
        } else {
            for j in 1..=top[v] {
                let p = polarized_name(name, j);
                names.push(p.clone());
                copies.insert((v, j), p);
            }
        }
    }
    let ring = VertexSet::new(names)?;
    let gens = i
        .gens
        .iter()
        .map(|g| {
            Monomial::from_factors(g.factors().iter().flat_map(|&(v, e)| {
                let ring = &ring;
                let copies = &copies;
                (1..=e).map(move |j| (ring.id(&copies[&(v, j)]).expect("fresh name"), 1))
            }))
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}
