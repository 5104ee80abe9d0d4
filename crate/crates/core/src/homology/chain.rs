//! Reduced simplicial chain complexes and their homology ranks.

use std::collections::HashMap;

use crate::bits;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

use super::linalg::IntMatrix;
use super::FieldSpec;

/// Largest face count for which homology is computed.
pub const MAX_FACES: usize = 1 << 15;

/// Reduced Betti numbers `h̃_i` for `i = -1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    ranks: Vec<u64>,
}

impl HomologyProfile {
    /// `h̃_i`; zero outside the stored range.
    pub fn rank(&self, i: i32) -> u64 {
        if i < -1 {
            return 0;
        }
        self.ranks.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Ranks indexed from dimension `-1`.
    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// True when `h̃_i = 0` for every `i < bound`.
    pub fn vanishes_below(&self, bound: i32) -> bool {
        (-1..bound).all(|i| self.rank(i) == 0)
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// Faces grouped by cardinality, each group canonically sorted.
pub(crate) struct FaceLattice {
    pub(crate) by_size: Vec<Vec<u64>>,
}

impl FaceLattice {
    pub(crate) fn new(facets: &[u64]) -> Result<Self> {
        if bits::face_count_bounded(facets, MAX_FACES).is_none() {
            return Err(Error::Capacity {
                what: "faces in a chain complex",
                limit: MAX_FACES,
            });
        }
        let top = facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for face in bits::all_faces(facets) {
            by_size[face.count_ones() as usize].push(face);
        }
        Ok(FaceLattice { by_size })
    }

    /// Boundary map from faces of size `s` to faces of size `s - 1`, with
    /// rows indexed by the smaller faces.
    pub(crate) fn boundary(&self, s: usize) -> IntMatrix {
        let empty = Vec::new();
        let cols = self.by_size.get(s).unwrap_or(&empty);
        if s == 0 {
            return IntMatrix::zeros(0, cols.len());
        }
        let rows = &self.by_size[s - 1];
        let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, &face) in cols.iter().enumerate() {
            for (pos, v) in bits::ids(face).enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m.set(index[&(face & !(1u64 << v))], j, sign);
            }
        }
        m
    }

    pub(crate) fn reduced_homology(&self, field: FieldSpec) -> Vec<u64> {
        let top = self.by_size.len() - 1;
        // rank[s] = rank of the boundary leaving size-s faces.
        let mut rank = vec![0u64; top + 2];
        for (s, r) in rank.iter_mut().enumerate().take(top + 1).skip(1) {
            *r = self.boundary(s).rank(field) as u64;
        }
        (0..=top)
            .map(|s| self.by_size[s].len() as u64 - rank[s] - rank[s + 1])
            .collect()
    }
}

/// Reduced homology of the complex generated by non-void `facets`.
pub(crate) fn reduced_homology_of(facets: &[u64], field: FieldSpec) -> Result<Vec<u64>> {
    Ok(FaceLattice::new(facets)?.reduced_homology(field))
}

pub fn reduced_homology_ranks(c: &SimplicialComplex, field: FieldSpec) -> Result<HomologyProfile> {
    c.require_non_void("homology")?;
    Ok(HomologyProfile {
        ranks: reduced_homology_of(c.facet_masks(), field)?,
    })
}

/// The boundary map `∂_k` from `k`-faces to `(k-1)`-faces, in canonical face
/// order on both sides (the empty face is the only `(-1)`-face).
pub fn boundary_matrix(c: &SimplicialComplex, k: i32) -> Result<IntMatrix> {
    c.require_non_void("boundary matrix")?;
    let d = c.dim()?;
    if k < 0 || k > d + 1 {
        return Err(Error::DimensionOutOfRange {
            k: k as i64,
            lo: 0,
            hi: (d + 1) as i64,
        });
    }
    let lattice = FaceLattice::new(c.facet_masks())?;
    let s = (k + 1) as usize;
    if s >= lattice.by_size.len() {
        let rows = lattice.by_size[s - 1].len();
        return Ok(IntMatrix::zeros(rows, 0));
    }
    Ok(lattice.boundary(s))
}
