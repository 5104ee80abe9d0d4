//! Brute-force oracles for the integration tests. Everything here works on
//! plain `BTreeSet<String>` faces and shares nothing with the library's
//! engines.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use shk_core::SimplicialComplex;

pub type Set = BTreeSet<String>;
pub type Facets = Vec<Set>;

/// Facets written as words of single-letter vertices, e.g. `"ab cde"`.
pub fn facets(spec: &str) -> Facets {
    maximal(spec.split_whitespace().map(|w| w.chars().map(String::from).collect()).collect())
}

pub fn complex(spec: &str) -> SimplicialComplex {
    let raw: Vec<Vec<String>> = spec
        .split_whitespace()
        .map(|w| w.chars().map(String::from).collect())
        .collect();
    SimplicialComplex::build(&raw, None).unwrap()
}

pub fn facets_of(c: &SimplicialComplex) -> Facets {
    maximal(c.facet_labels().into_iter().map(|f| f.into_iter().collect()).collect())
}

pub fn maximal(family: Vec<Set>) -> Facets {
    let mut out: Facets = family
        .iter()
        .filter(|s| !family.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn mdim(f: &Facets) -> i64 {
    f.iter().map(|s| s.len() as i64).min().unwrap() - 1
}

pub fn dim(f: &Facets) -> i64 {
    f.iter().map(|s| s.len() as i64).max().unwrap() - 1
}

pub fn vertices(f: &Facets) -> Set {
    f.iter().flatten().cloned().collect()
}

pub fn deletion(f: &Facets, x: &str) -> Facets {
    maximal(f.iter().map(|s| s.iter().filter(|v| *v != x).cloned().collect()).collect())
}

pub fn link(f: &Facets, x: &str) -> Facets {
    maximal(
        f.iter()
            .filter(|s| s.contains(x))
            .map(|s| s.iter().filter(|v| *v != x).cloned().collect())
            .collect(),
    )
}

/// Every face of dimension `k` (size `k + 1`), as the facets of the pure
/// `k`-skeleton.
pub fn pure_skeleton(f: &Facets, k: usize) -> Facets {
    let mut out = Vec::new();
    for s in f {
        let items: Vec<&String> = s.iter().collect();
        for combo in combinations(items.len(), k + 1) {
            out.push(combo.iter().map(|&i| items[i].clone()).collect());
        }
    }
    maximal(out)
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All faces including the empty face.
pub fn all_faces(f: &Facets) -> BTreeSet<Set> {
    let mut out = BTreeSet::new();
    for s in f {
        let items: Vec<&String> = s.iter().collect();
        for mask in 0u32..(1 << items.len()) {
            out.insert((0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| items[i].clone()).collect());
        }
    }
    out
}

pub fn is_shedding(f: &Facets, x: &str) -> bool {
    let del = deletion(f, x);
    link(f, x).iter().all(|l| !del.contains(l))
}

pub fn is_dismissing(f: &Facets, x: &str) -> bool {
    let del = deletion(f, x);
    !del.is_empty() && mdim(&del) >= mdim(f)
}

#[derive(Default)]
pub struct Decomp {
    memo: HashMap<(bool, Facets), bool>,
}

impl Decomp {
    /// Vertex decomposable (`dismissing == false`) or vertex dismissible.
    pub fn decide(&mut self, f: &Facets, dismissing: bool) -> bool {
        if f.len() == 1 {
            return true;
        }
        if let Some(&v) = self.memo.get(&(dismissing, f.clone())) {
            return v;
        }
        let answer = vertices(f).iter().any(|x| {
            let ok = if dismissing { is_dismissing(f, x) } else { is_shedding(f, x) };
            ok && self.decide(&deletion(f, x), dismissing) && self.decide(&link(f, x), dismissing)
        });
        self.memo.insert((dismissing, f.clone()), answer);
        answer
    }
}

fn intersection_facets(f: &Set, placed: &[&Set]) -> Facets {
    maximal(placed.iter().map(|g| f.intersection(g).cloned().collect()).collect())
}

/// Whether some facet order satisfies `ok(facet, intersection facets)` at
/// every step after the first.
pub fn has_order(f: &Facets, ok: &dyn Fn(&Set, &Facets) -> bool) -> bool {
    fn go(f: &Facets, placed: u64, ok: &dyn Fn(&Set, &Facets) -> bool, dead: &mut BTreeSet<u64>) -> bool {
        if placed.count_ones() as usize == f.len() {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for j in 0..f.len() {
            if placed >> j & 1 == 1 {
                continue;
            }
            let prev: Vec<&Set> = (0..f.len()).filter(|&i| placed >> i & 1 == 1).map(|i| &f[i]).collect();
            if (prev.is_empty() || ok(&f[j], &intersection_facets(&f[j], &prev))) && go(f, placed | 1 << j, ok, dead) {
                return true;
            }
        }
        dead.insert(placed);
        false
    }
    go(f, 0, ok, &mut BTreeSet::new())
}

/// Björner–Wachs shellability: each step intersection is pure of
/// codimension one in the new facet.
pub fn shellable(f: &Facets) -> bool {
    has_order(f, &|s, inter| inter.iter().all(|i| i.len() + 1 == s.len()))
}

/// Literal scaling order: each step intersection has initial dimension at
/// least `mdim - 1`.
pub fn scalable(f: &Facets) -> bool {
    let need = mdim(f);
    has_order(f, &|_, inter| inter.iter().all(|i| i.len() as i64 >= need))
}

/// Invariant factors of an integer matrix, by Smith normal form.
pub fn smith_invariants(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block as pivot.
        let mut pivot = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && pivot.is_none_or(|(a, b): (usize, usize)| m[i][j].abs() < m[a][b].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for i in t..rows {
                        m[i][j] -= q * m[i][t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // The pivot must divide the rest of the block.
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = m[i][j];
                            m[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Move the smallest nonzero entry of row/column t to the pivot.
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

/// Reduced simplicial homology ranks `h̃_{-1}, h̃_0, …` over ℚ (`p == 0`) or
/// GF(p), from the invariant factors of the integer boundary maps.
pub fn reduced_homology(f: &Facets, p: i128) -> Vec<i64> {
    let faces = all_faces(f);
    let top = faces.iter().map(Set::len).max().unwrap();
    let by_size: Vec<Vec<Set>> = (0..=top).map(|s| faces.iter().filter(|x| x.len() == s).cloned().collect()).collect();
    // rank of ∂: C_s → C_{s-1} (faces of size s to size s - 1).
    let rank = |s: usize| -> i64 {
        if s == 0 || s > top {
            return 0;
        }
        let index: HashMap<&Set, usize> = by_size[s - 1].iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut m = vec![vec![0i128; by_size[s].len()]; by_size[s - 1].len()];
        for (j, face) in by_size[s].iter().enumerate() {
            for (k, v) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(v);
                m[index[&sub]][j] = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        smith_invariants(m)
            .into_iter()
            .filter(|&d| if p == 0 { d != 0 } else { d % p != 0 })
            .count() as i64
    };
    (0..=top).map(|s| by_size[s].len() as i64 - rank(s) - rank(s + 1)).collect()
}

/// Reisner: every link (including the complex itself) has vanishing reduced
/// homology below its dimension.
pub fn cohen_macaulay(f: &Facets, p: i128) -> bool {
    let d = dim(f);
    if mdim(f) != d {
        return false;
    }
    all_faces(f).into_iter().all(|sigma| {
        let lk = maximal(
            f.iter()
                .filter(|s| sigma.is_subset(s))
                .map(|s| s.difference(&sigma).cloned().collect())
                .collect(),
        );
        let h = reduced_homology(&lk, p);
        let ld = dim(&lk);
        // h[i] is h̃_{i-1}.
        (0..h.len()).all(|i| i as i64 - 1 >= ld || h[i] == 0)
    })
}

/// Whether `order` (a permutation of the facets) is a literal scaling order.
pub fn is_scaling_order(order: &[Set]) -> bool {
    let f: Facets = maximal(order.to_vec());
    let need = mdim(&f);
    (1..order.len()).all(|j| {
        let prev: Vec<&Set> = order[..j].iter().collect();
        intersection_facets(&order[j], &prev).iter().all(|i| i.len() as i64 >= need)
    })
}

/// Connected components of the 1-skeleton of the complex generated by `f`.
pub fn components(f: &Facets) -> usize {
    let mut groups: Vec<Set> = Vec::new();
    for s in f {
        let (touching, rest): (Vec<Set>, Vec<Set>) = groups.into_iter().partition(|g| !g.is_disjoint(s));
        let mut merged = s.clone();
        for g in touching {
            merged.extend(g);
        }
        groups = rest;
        groups.push(merged);
    }
    groups.len()
}
