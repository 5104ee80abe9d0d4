//! Simple graphs: complements, chordality, independence complexes and
//! cycle graphs.

use crate::bits;
use crate::complex::{SimplicialComplex, VertexSet};
use crate::decision::Certificate;
use crate::error::{Error, Result};

/// Undirected simple graph on at most 64 labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(vertices: VertexSet, edges: &[(usize, usize)]) -> Result<Self> {
        let n = vertices.len();
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::UnknownVertexId(w));
                }
            }
            if u == v {
                return Err(Error::Loop(vertices.name(u).to_string()));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { vertices, adj })
    }

    pub fn empty(vertices: VertexSet) -> Self {
        let n = vertices.len();
        Graph {
            vertices,
            adj: vec![0; n],
        }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1u64 << v) != 0
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.adj.len() {
            for v in bits::ids(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices.full_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &a)| full & !a & !(1u64 << v))
            .collect();
        Graph {
            vertices: self.vertices.clone(),
            adj,
        }
    }

    /// A perfect elimination order (as vertex ids) if the graph is chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let order = self.mcs_elimination_order();
        self.is_perfect_elimination_order(&order).then_some(order)
    }

    /// Reverse of a maximum cardinality search visit order.
    fn mcs_elimination_order(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut weight = vec![0u32; n];
        let mut visited = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| visited & (1u64 << v) == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unvisited vertex");
            visited |= 1u64 << v;
            visit.push(v);
            for w in bits::ids(self.adj[v] & !visited) {
                weight[w] += 1;
            }
        }
        visit.reverse();
        visit
    }

    /// Every vertex's later neighbors form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let n = self.adj.len();
        if order.len() != n {
            return false;
        }
        let mut seen = 0u64;
        for &v in order {
            if v >= n || seen & (1u64 << v) != 0 {
                return false;
            }
            seen |= 1u64 << v;
        }
        let mut later = seen;
        for &v in order {
            later &= !(1u64 << v);
            let nb = self.adj[v] & later;
            if bits::ids(nb).any(|w| !bits::is_subset(nb & !(1u64 << w), self.adj[w])) {
                return false;
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// Chordality with the elimination order as certificate.
    pub fn chordal_certificate(&self) -> Option<Certificate> {
        self.perfect_elimination_order().map(|order| Certificate::EliminationOrder {
            vertices: order.iter().map(|&v| self.vertices.name(v).to_string()).collect(),
        })
    }

    /// Maximal cliques by Bron–Kerbosch with pivoting.
    pub fn maximal_cliques(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.vertices.full_mask(), 0, &mut out);
        out
    }

    fn bron_kerbosch(&self, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits::ids(p | x)
            .max_by_key(|&u| (self.adj[u] & p).count_ones())
            .expect("nonempty");
        for v in bits::ids(p & !self.adj[pivot]) {
            let bit = 1u64 << v;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    /// Complex of independent sets; its Stanley–Reisner ideal is the edge
    /// ideal of the graph.
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        if self.adj.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let facets = self.complement().maximal_cliques();
        Ok(SimplicialComplex::from_masks(self.vertices.clone(), facets))
    }
}

/// Builds a graph from labeled edges over the given vertex labels.
pub fn build_graph<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
    let vs = VertexSet::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
    let mut ids = Vec::with_capacity(edges.len());
    for (a, b) in edges {
        ids.push((vs.require(a.as_ref())?, vs.require(b.as_ref())?));
    }
    Graph::new(vs, &ids)
}

/// The cycle `1 - 2 - ⋯ - n - 1`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String)> = (0..n)
        .map(|i| (labels[i].clone(), labels[(i + 1) % n].clone()))
        .collect();
    build_graph(&labels, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleClass {
    /// `⌈n/3⌉ - 1`, the initial dimension of the independence complex.
    pub mdim: i32,
    /// `n mod 3 ≠ 1`.
    pub vertex_dismissible_expected: bool,
}

pub fn classify_cycle(n: usize) -> Result<CycleClass> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    Ok(CycleClass {
        mdim: n.div_ceil(3) as i32 - 1,
        vertex_dismissible_expected: n % 3 != 1,
    })
}
