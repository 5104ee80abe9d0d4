//! Finite simplicial complexes over an interned vertex set.
//!
//! A complex is stored by its facets. Vertex labels are sorted
//! lexicographically and mapped to dense ids, and faces are `u64` bitsets over
//! those ids, so the ambient set holds at most 64 vertices.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Ordered list of distinct vertex (or variable) labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    names: Vec<String>,
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    if label == "()"
        || label
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == '*' || c == '^' || c == '@')
    {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

impl VertexSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = labels.into_iter().map(Into::into).collect();
        for name in &names {
            validate_label(name)?;
        }
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "ambient vertex set",
                limit: MAX_VERTICES,
            });
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(label)).ok()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.id(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Bitset containing every id.
    pub fn full_mask(&self) -> u64 {
        if self.names.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    /// The vertex set with the ids in `mask` removed; remaining ids are
    /// compressed as in [`bits::compress`].
    pub fn without(&self, mask: u64) -> VertexSet {
        let names = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1u64 << i) == 0)
            .map(|(_, n)| n.clone())
            .collect();
        VertexSet { names }
    }

    pub fn labels_of(&self, mask: u64) -> Vec<String> {
        bits::ids(mask).map(|i| self.names[i].clone()).collect()
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64> {
        labels
            .iter()
            .try_fold(0u64, |acc, l| Ok(acc | (1u64 << self.require(l.as_ref())?)))
    }
}

/// A face: a set of vertex ids of some ambient [`VertexSet`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        Face(ids.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dimension(self) -> i32 {
        self.len() as i32 - 1
    }

    pub fn contains(self, id: usize) -> bool {
        self.0 & (1u64 << id) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        bits::is_subset(self.0, other.0)
    }

    pub fn ids(self) -> impl Iterator<Item = usize> {
        bits::ids(self.0)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        bits::canonical_cmp(self.0, other.0)
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkeletonMode {
    /// Generated by the faces of dimension exactly `k`.
    Pure,
    /// All faces of dimension at most `k`.
    Full,
}

/// A finite simplicial complex, stored by its facets in canonical order.
///
/// The complex with no facets at all is the void complex; the complex whose
/// only facet is the empty face is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from label sets; ambient defaults to the union of the
    /// facets.
    pub fn build<S: AsRef<str>>(raw_facets: &[Vec<S>], ambient: Option<&[S]>) -> Result<Self> {
        for facet in raw_facets {
            for l in facet {
                validate_label(l.as_ref())?;
            }
        }
        let vertices = match ambient {
            Some(labels) => VertexSet::new(labels.iter().map(|l| l.as_ref().to_string()))?,
            None => {
                let mut seen: Vec<String> = raw_facets
                    .iter()
                    .flatten()
                    .map(|l| l.as_ref().to_string())
                    .collect();
                seen.sort();
                seen.dedup();
                VertexSet::new(seen)?
            }
        };
        let facets = raw_facets
            .iter()
            .map(|f| vertices.mask_of(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_masks(vertices, facets))
    }

    /// Builds from faces given as masks over `vertices`; non-maximal faces
    /// are dropped.
    pub fn from_faces<I: IntoIterator<Item = Face>>(vertices: VertexSet, faces: I) -> Result<Self> {
        let full = vertices.full_mask();
        let masks: Vec<u64> = faces.into_iter().map(Face::bits).collect();
        if let Some(&bad) = masks.iter().find(|&&m| !bits::is_subset(m, full)) {
            return Err(Error::UnknownVertexId(bad.trailing_zeros() as usize));
        }
        Ok(Self::from_masks(vertices, masks))
    }

    pub(crate) fn from_masks(vertices: VertexSet, faces: Vec<u64>) -> Self {
        SimplicialComplex {
            vertices,
            facets: bits::maximal(faces),
        }
    }

    /// Wraps an already maximal, canonically sorted facet list.
    pub(crate) fn from_canonical(vertices: VertexSet, facets: Vec<u64>) -> Self {
        debug_assert_eq!(bits::maximal(facets.clone()), facets);
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: VertexSet) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: VertexSet) -> Self {
        let full = vertices.full_mask();
        SimplicialComplex {
            vertices,
            facets: vec![full],
        }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn facets(&self) -> impl ExactSizeIterator<Item = Face> + '_ {
        self.facets.iter().map(|&f| Face(f))
    }

    pub(crate) fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// A single facet (this includes `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn support(&self) -> Face {
        Face(bits::support(&self.facets))
    }

    pub fn vertex_id(&self, label: &str) -> Result<usize> {
        self.vertices.require(label)
    }

    pub fn face_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        self.vertices.mask_of(labels).map(Face)
    }

    pub fn labels(&self, face: Face) -> Vec<String> {
        self.vertices.labels_of(face.0)
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(face.0, f))
    }

    pub(crate) fn require_non_void(&self, what: &'static str) -> Result<()> {
        if self.is_void() {
            Err(Error::VoidComplex(what))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.vertices.len() {
            Err(Error::UnknownVertexId(x))
        } else {
            Ok(())
        }
    }

    /// `(dim, mdim)`: the largest and smallest facet dimensions.
    pub fn dimensions(&self) -> Result<(i32, i32)> {
        self.require_non_void("dimension")?;
        Ok((bits::dim(&self.facets), bits::mdim(&self.facets)))
    }

    pub fn dim(&self) -> Result<i32> {
        self.dimensions().map(|d| d.0)
    }

    pub fn mdim(&self) -> Result<i32> {
        self.dimensions().map(|d| d.1)
    }

    pub fn is_pure(&self) -> Result<bool> {
        self.dimensions().map(|(d, m)| d == m)
    }

    pub fn pure_skeleton(&self, k: i32, mode: SkeletonMode) -> Result<Self> {
        let d = self.dim()?;
        if k < -1 || k > d {
            return Err(Error::DimensionOutOfRange {
                k: k as i64,
                lo: -1,
                hi: d as i64,
            });
        }
        let facets = match mode {
            SkeletonMode::Pure => bits::pure_skeleton(&self.facets, k),
            SkeletonMode::Full => {
                let r = (k + 1) as u32;
                let mut faces: Vec<u64> = Vec::new();
                for &f in &self.facets {
                    if f.count_ones() <= r {
                        faces.push(f);
                    } else {
                        bits::for_each_subset_of_size(f, r as usize, |s| faces.push(s));
                    }
                }
                bits::maximal(faces)
            }
        };
        Ok(SimplicialComplex::from_canonical(self.vertices.clone(), facets))
    }

    /// The deletion of vertex `x`, over the ambient set with `x` removed.
    pub fn deletion(&self, x: usize) -> Result<Self> {
        self.check_vertex(x)?;
        let bit = 1u64 << x;
        let facets = bits::deletion(&self.facets, x)
            .into_iter()
            .map(|f| bits::compress(f, bit))
            .collect();
        Ok(SimplicialComplex::from_masks(self.vertices.without(bit), facets))
    }

    /// The link of `sigma`, over the ambient set with `sigma` removed.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !bits::is_subset(sigma.0, self.vertices.full_mask()) || !self.contains_face(sigma) {
            return Err(Error::NotAFace);
        }
        let facets = bits::link(&self.facets, sigma.0)
            .into_iter()
            .map(|f| bits::compress(f, sigma.0))
            .collect();
        Ok(SimplicialComplex::from_masks(self.vertices.without(sigma.0), facets))
    }

    /// Topological join over the disjoint union of both ambient sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        if let Some(shared) = self
            .vertices
            .names()
            .iter()
            .find(|n| other.vertices.id(n).is_some())
        {
            return Err(Error::OverlappingLabels(shared.clone()));
        }
        let vertices = VertexSet::new(
            self.vertices
                .names()
                .iter()
                .chain(other.vertices.names())
                .cloned(),
        )?;
        let remap = |c: &SimplicialComplex, f: u64| -> u64 {
            bits::ids(f).fold(0, |acc, i| {
                acc | (1u64 << vertices.id(c.vertices.name(i)).expect("present"))
            })
        };
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                faces.push(remap(self, f) | remap(other, g));
            }
        }
        Ok(SimplicialComplex::from_masks(vertices, faces))
    }

    /// Entry `i` counts the `i`-dimensional faces, for `i` in `0..=dim`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        let d = self.dim()?;
        if d < 0 {
            return Ok(Vec::new());
        }
        let mut seen: HashSet<u64> = HashSet::new();
        let mut counts = vec![0u64; (d + 1) as usize];
        for &f in &self.facets {
            bits::for_each_subset(f, |s| {
                if s != 0 && seen.insert(s) {
                    counts[s.count_ones() as usize - 1] += 1;
                }
            });
        }
        Ok(counts)
    }

    /// Every face, including the empty face, canonically sorted.
    pub fn faces(&self) -> Vec<Face> {
        bits::all_faces(&self.facets).into_iter().map(Face).collect()
    }

    /// Re-expresses the complex over a larger ambient label set.
    pub fn with_ambient(&self, ambient: VertexSet) -> Result<Self> {
        let mut faces = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            let labels = self.vertices.labels_of(f);
            faces.push(ambient.mask_of(&labels)?);
        }
        Ok(SimplicialComplex::from_masks(ambient, faces))
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| self.vertices.labels_of(f))
            .collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, &facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if facet == 0 {
                write!(f, "∅")?;
            } else {
                let labels = self.vertices.labels_of(facet);
                let compact = labels.iter().all(|l| l.chars().count() == 1);
                write!(f, "{}", labels.join(if compact { "" } else { " " }))?;
            }
        }
        write!(f, "⟩")
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::SimplicialComplex;

    /// Complex from single-letter facets separated by commas or spaces.
    pub(crate) fn cx(spec: &str) -> SimplicialComplex {
        let raw: Vec<Vec<String>> = spec
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .map(|f| f.chars().map(|c| c.to_string()).collect())
            .collect();
        SimplicialComplex::build(&raw, None).unwrap()
    }
}
