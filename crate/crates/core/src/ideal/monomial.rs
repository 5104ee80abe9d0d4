use std::cmp::Ordering;

/// A monomial as a sorted list of `(variable id, positive exponent)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn variable(id: usize) -> Self {
        Monomial { exps: vec![(id, 1)] }
    }

    /// Collects `(id, exponent)` factors; repeated ids multiply, zero
    /// exponents vanish.
    pub fn from_factors<I: IntoIterator<Item = (usize, u32)>>(factors: I) -> Self {
        let mut exps: Vec<(usize, u32)> = Vec::new();
        let mut raw: Vec<(usize, u32)> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        raw.sort_unstable();
        for (v, e) in raw {
            match exps.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => exps.push((v, e)),
            }
        }
        Monomial { exps }
    }

    /// Squarefree monomial on the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        Monomial {
            exps: crate::bits::ids(mask).map(|v| (v, 1)).collect(),
        }
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn exponent(&self, id: usize) -> u32 {
        self.exps
            .binary_search_by_key(&id, |&(v, _)| v)
            .map_or(0, |k| self.exps[k].1)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn max_variable(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    /// Support as a bitset (variable ids must be below 64).
    pub fn support(&self) -> u64 {
        self.exps.iter().fold(0, |acc, &(v, _)| acc | (1u64 << v))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.exps.iter().peekable();
        'outer: for &(v, e) in &self.exps {
            while let Some(&&(w, f)) = it.peek() {
                match w.cmp(&v) {
                    Ordering::Less => {
                        it.next();
                    }
                    Ordering::Equal => {
                        if f < e {
                            return false;
                        }
                        it.next();
                        continue 'outer;
                    }
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    fn merge(&self, other: &Monomial, op: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let a = self.exps.get(i).copied();
            let b = other.exps.get(j).copied();
            let (v, e, f) = match (a, b) {
                (Some((v, e)), Some((w, f))) if v == w => {
                    i += 1;
                    j += 1;
                    (v, e, f)
                }
                (Some((v, e)), Some((w, _))) if v < w => {
                    i += 1;
                    (v, e, 0)
                }
                (Some((v, e)), None) => {
                    i += 1;
                    (v, e, 0)
                }
                (_, Some((w, f))) => {
                    j += 1;
                    (w, 0, f)
                }
                (None, None) => unreachable!(),
            };
            let r = op(e, f);
            if r > 0 {
                out.push((v, r));
            }
        }
        Monomial { exps: out }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a.saturating_sub(b))
    }

    /// Relabels variable ids through `map` (which must be injective).
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_factors(self.exps.iter().map(|&(v, e)| (map(v), e)))
    }

    /// Canonical order: by degree, then lexicographically on exponent
    /// vectors with larger exponents of earlier variables first.
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps) {
                if a != b {
                    return if a.0 != b.0 {
                        a.0.cmp(&b.0)
                    } else {
                        b.1.cmp(&a.1)
                    };
                }
            }
            other.exps.len().cmp(&self.exps.len())
        })
    }
}

/// Minimal generators of the ideal generated by `gens`, canonically sorted.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.canonical_cmp(b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &[(usize, u32)]) -> Monomial {
        Monomial::from_factors(f.iter().copied())
    }

    #[test]
    fn arithmetic() {
        let a2b = m(&[(0, 2), (1, 1)]);
        let ab = m(&[(0, 1), (1, 1)]);
        assert!(ab.divides(&a2b));
        assert!(!a2b.divides(&ab));
        assert!(Monomial::one().divides(&ab));
        assert_eq!(a2b.colon(&ab), m(&[(0, 1)]));
        assert_eq!(ab.colon(&m(&[(2, 1)])), ab);
        assert_eq!(ab.lcm(&m(&[(1, 3), (2, 1)])), m(&[(0, 1), (1, 3), (2, 1)]));
        assert_eq!(ab.mul(&ab), m(&[(0, 2), (1, 2)]));
        assert_eq!(m(&[(1, 1), (1, 2), (0, 0)]), m(&[(1, 3)]));
        assert_eq!(a2b.degree(), 3);
        assert!(!a2b.is_squarefree());
    }

    #[test]
    fn canonical_order_matches_face_order() {
        let ab = Monomial::from_mask(0b011);
        let ac = Monomial::from_mask(0b101);
        let bc = Monomial::from_mask(0b110);
        let a2 = m(&[(0, 2)]);
        let mut v = vec![bc.clone(), ac.clone(), a2.clone(), ab.clone()];
        v.sort_by(|x, y| x.canonical_cmp(y));
        assert_eq!(v, vec![a2, ab, ac, bc]);
    }

    #[test]
    fn minimal_generators() {
        let g = minimalize(vec![
            Monomial::from_mask(0b111),
            Monomial::from_mask(0b011),
            Monomial::from_mask(0b011),
        ]);
        assert_eq!(g, vec![Monomial::from_mask(0b011)]);
    }
}
