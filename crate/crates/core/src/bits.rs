//! Facet-list primitives on `u64` vertex bitsets.
//!
//! Everything here works on raw masks over a fixed id space; relabeling to a
//! smaller ambient set is done by the public types in [`crate::complex`].

use std::cmp::Ordering;

/// Canonical order on faces: by cardinality, then lexicographically on the
/// increasing id sequence.
pub fn canonical_cmp(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

pub fn ids(mask: u64) -> impl Iterator<Item = usize> + Clone {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let id = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(id)
        }
    })
}

/// Reduces a family of sets to its maximal members, canonically sorted.
pub fn maximal(mut faces: Vec<u64>) -> Vec<u64> {
    faces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|&g| is_subset(f, g)) {
            kept.push(f);
        }
    }
    kept.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
    kept
}

/// Minimal members of a family, canonically sorted.
pub fn minimal(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by(|a, b| a.count_ones().cmp(&b.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&g| is_subset(g, s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
    kept
}

/// Scatters the low bits of `pattern` onto the set bits of `mask`.
pub fn deposit(pattern: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    let mut p = pattern;
    while m != 0 && p != 0 {
        let low = m & m.wrapping_neg();
        if p & 1 != 0 {
            out |= low;
        }
        p >>= 1;
        m &= m - 1;
    }
    out
}

/// Calls `f` on every subset of `mask` with exactly `r` elements.
pub fn for_each_subset_of_size(mask: u64, r: usize, mut f: impl FnMut(u64)) {
    let n = mask.count_ones() as usize;
    if r > n {
        return;
    }
    if r == 0 {
        f(0);
        return;
    }
    if r == n {
        f(mask);
        return;
    }
    // Gosper's hack over r-bit patterns in n bits.
    let mut pattern: u64 = (1u64 << r) - 1;
    let limit: u128 = 1u128 << n;
    while (pattern as u128) < limit {
        f(deposit(pattern, mask));
        let c = pattern & pattern.wrapping_neg();
        let r2 = pattern.wrapping_add(c);
        if r2 == 0 {
            break;
        }
        pattern = (((r2 ^ pattern) >> 2) / c) | r2;
    }
}

/// Calls `f` on every subset of `mask`, including the empty set and `mask`.
pub fn for_each_subset(mask: u64, mut f: impl FnMut(u64)) {
    let mut sub = mask;
    loop {
        f(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}

/// Removes the bits in `removed` and shifts the higher ones down, so ids stay
/// dense after shrinking the ambient set.
pub fn compress(mask: u64, removed: u64) -> u64 {
    let mut out = 0;
    let mut shift = 0;
    for id in 0..64 {
        let bit = 1u64 << id;
        if removed & bit != 0 {
            shift += 1;
        } else if mask & bit != 0 {
            out |= 1u64 << (id - shift);
        }
    }
    out
}

pub fn support(facets: &[u64]) -> u64 {
    facets.iter().fold(0, |acc, &f| acc | f)
}

/// Initial dimension of a non-void facet list.
pub fn mdim(facets: &[u64]) -> i32 {
    facets.iter().map(|f| f.count_ones() as i32).min().expect("non-void") - 1
}

pub fn dim(facets: &[u64]) -> i32 {
    facets.iter().map(|f| f.count_ones() as i32).max().expect("non-void") - 1
}

/// Facets of the deletion of `x`.
pub fn deletion(facets: &[u64], x: usize) -> Vec<u64> {
    let bit = 1u64 << x;
    maximal(facets.iter().map(|&f| f & !bit).collect())
}

/// Facets of the link of the face `sigma`; empty (void) if `sigma` is not a face.
pub fn link(facets: &[u64], sigma: u64) -> Vec<u64> {
    let mut out: Vec<u64> = facets
        .iter()
        .filter(|&&f| is_subset(sigma, f))
        .map(|&f| f & !sigma)
        .collect();
    out.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
    out
}

/// Facets of the pure `k`-skeleton: every `(k+1)`-subset of a facet.
pub fn pure_skeleton(facets: &[u64], k: i32) -> Vec<u64> {
    let r = (k + 1) as usize;
    let mut out = std::collections::HashSet::new();
    for &f in facets {
        for_each_subset_of_size(f, r, |s| {
            out.insert(s);
        });
    }
    let mut v: Vec<u64> = out.into_iter().collect();
    v.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
    v
}

/// Every face (including the empty one) of the complex generated by `facets`.
pub fn all_faces(facets: &[u64]) -> Vec<u64> {
    let mut seen = std::collections::HashSet::new();
    for &f in facets {
        if seen.contains(&f) {
            continue;
        }
        for_each_subset(f, |s| {
            seen.insert(s);
        });
    }
    let mut v: Vec<u64> = seen.into_iter().collect();
    v.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
    v
}

/// Number of faces the complex has, without enumerating them when it would be
/// too many. Returns `None` when the count exceeds `limit`.
pub fn face_count_bounded(facets: &[u64], limit: usize) -> Option<usize> {
    let crude: u128 = facets.iter().map(|f| 1u128 << f.count_ones()).sum();
    if crude <= limit as u128 {
        return Some(crude as usize);
    }
    None
}

/// Minimal transversals (hitting sets) of a family of sets, by Berge's
/// incremental method.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut current: Vec<u64> = vec![0];
    for &e in edges {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                for v in ids(e) {
                    next.push(t | (1u64 << v));
                }
            }
        }
        current = minimal(next);
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ids: &[usize]) -> u64 {
        ids.iter().fold(0, |a, &i| a | (1 << i))
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = vec![m(&[2, 3, 4]), m(&[0, 1]), m(&[0, 2]), m(&[1])];
        v.sort_by(|&a, &b| canonical_cmp(a, b));
        assert_eq!(v, vec![m(&[1]), m(&[0, 1]), m(&[0, 2]), m(&[2, 3, 4])]);
        assert_eq!(canonical_cmp(m(&[0, 3]), m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn subsets_of_size_enumerates_binomially() {
        let mut count = 0;
        for_each_subset_of_size(m(&[1, 3, 5, 7, 9]), 2, |s| {
            assert_eq!(s.count_ones(), 2);
            assert!(is_subset(s, m(&[1, 3, 5, 7, 9])));
            count += 1;
        });
        assert_eq!(count, 10);
        let mut all = 0;
        for_each_subset_of_size(u64::MAX, 1, |_| all += 1);
        assert_eq!(all, 64);
    }

    #[test]
    fn compress_shifts_ids_down() {
        assert_eq!(compress(m(&[0, 2, 5]), m(&[1, 2])), m(&[0, 3]));
    }

    #[test]
    fn transversals_of_two_disjoint_edges() {
        let t = minimal_transversals(&[m(&[0, 1]), m(&[2, 3])]);
        assert_eq!(t, vec![m(&[0, 2]), m(&[0, 3]), m(&[1, 2]), m(&[1, 3])]);
        assert_eq!(minimal_transversals(&[]), vec![0]);
    }
}
