//! Seeded random instances for the verification battery.
//!
//! The distributions are only meant to produce a varied corpus; nothing is
//! claimed about them.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::graph::Graph;
use crate::ideal::{Monomial, MonomialIdeal};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Labels `a, b, …` for up to 26 vertices, `v0, v1, …` beyond.
pub fn vertex_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|k| ((b'a' + k as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|k| format!("v{k:02}")).collect()
    }
}

fn random_subset(rng: &mut impl Rng, n: usize, size: usize) -> u64 {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    ids[..size.min(n)].iter().fold(0, |acc, &v| acc | (1u64 << v))
}

/// Shape of random complexes: `q` faces drawn with sizes in `sizes`, then
/// reduced to their maximal members. The ambient set is the support.
#[derive(Clone, Debug)]
pub struct ComplexShape {
    pub vertices: usize,
    pub faces: RangeInclusive<usize>,
    pub sizes: RangeInclusive<usize>,
}

impl ComplexShape {
    pub fn new(vertices: usize, max_faces: usize) -> Self {
        ComplexShape {
            vertices,
            faces: 1..=max_faces,
            sizes: 1..=vertices.min(5),
        }
    }
}

pub fn random_complex(rng: &mut impl Rng, shape: &ComplexShape) -> SimplicialComplex {
    let n = shape.vertices;
    let q = rng.random_range(shape.faces.clone());
    let masks: Vec<u64> = (0..q)
        .map(|_| {
            let size = rng.random_range(shape.sizes.clone()).clamp(1, n);
            random_subset(rng, n, size)
        })
        .collect();
    from_masks_on_support(n, masks)
}

fn from_masks_on_support(n: usize, masks: Vec<u64>) -> SimplicialComplex {
    let all = VertexSet::new(vertex_labels(n)).expect("generated labels");
    let support = bits::support(&masks);
    let vertices = all.without(all.full_mask() & !support);
    let removed = all.full_mask() & !support;
    let masks = masks.into_iter().map(|m| bits::compress(m, removed)).collect();
    SimplicialComplex::from_masks(vertices, masks)
}

/// Random complexes of initial dimension exactly one (rejection sampling
/// over faces of size 2 to 4 with at least one edge).
pub fn random_mdim1_complex(rng: &mut impl Rng, vertices: usize, max_faces: usize) -> SimplicialComplex {
    assert!(vertices >= 2);
    loop {
        let q = rng.random_range(1..=max_faces.max(1));
        let mut masks = vec![random_subset(rng, vertices, 2)];
        for _ in 1..q {
            let size = rng.random_range(2..=4usize.min(vertices));
            masks.push(random_subset(rng, vertices, size));
        }
        let c = from_masks_on_support(vertices, masks);
        if c.mdim() == Ok(1) {
            return c;
        }
    }
}

/// Random chordal graph: each new vertex is joined to a random clique of the
/// graph built so far, so the reverse insertion order is a perfect
/// elimination order.
pub fn random_chordal_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let vs = VertexSet::new(vertex_labels(n)).expect("generated labels");
    let mut adj = vec![0u64; n];
    for v in 1..n {
        let mut clique = 0u64;
        if rng.random_bool(0.85) {
            let u = rng.random_range(0..v);
            clique = 1u64 << u;
            let mut nbrs: Vec<usize> = bits::ids(adj[u]).collect();
            nbrs.shuffle(rng);
            for w in nbrs {
                if bits::is_subset(clique, adj[w]) && rng.random_bool(0.6) {
                    clique |= 1u64 << w;
                }
            }
        }
        for w in bits::ids(clique) {
            adj[w] |= 1u64 << v;
            adj[v] |= 1u64 << w;
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| bits::ids(adj[u]).filter(move |&w| w > u).map(move |w| (u, w)))
        .collect();
    Graph::new(vs, &edges).expect("valid edges")
}

/// Complement of a random chordal graph.
pub fn random_cochordal_graph(rng: &mut impl Rng, n: usize) -> Graph {
    random_chordal_graph(rng, n).complement()
}

/// Random squarefree ideal with generator count and degrees in the given
/// ranges (before minimalization).
pub fn random_squarefree_ideal(
    rng: &mut impl Rng,
    variables: usize,
    generators: RangeInclusive<usize>,
    degrees: RangeInclusive<usize>,
) -> MonomialIdeal {
    let ring = VertexSet::new(vertex_labels(variables)).expect("generated labels");
    let q = rng.random_range(generators);
    let gens = (0..q)
        .map(|_| {
            let d = rng.random_range(degrees.clone()).clamp(1, variables);
            Monomial::from_mask(random_subset(rng, variables, d))
        })
        .collect();
    MonomialIdeal::new(ring, gens).expect("ids in range")
}

/// Random monomial ideal with at least one exponent above one among its
/// minimal generators.
pub fn random_monomial_ideal(
    rng: &mut impl Rng,
    variables: usize,
    generators: RangeInclusive<usize>,
    max_exponent: u32,
) -> MonomialIdeal {
    let ring = VertexSet::new(vertex_labels(variables)).expect("generated labels");
    loop {
        let q = rng.random_range(generators.clone());
        let gens: Vec<Monomial> = (0..q)
            .map(|_| {
                let support = rng.random_range(1..=variables.min(3));
                let m = random_subset(rng, variables, support);
                Monomial::from_factors(bits::ids(m).map(|v| (v, rng.random_range(1..=max_exponent))))
            })
            .collect();
        let i = MonomialIdeal::new(ring.clone(), gens).expect("ids in range");
        if !i.is_squarefree() {
            return i;
        }
    }
}
