//! The canonical projection `B_k → S_k`.
//!
//! Punctures are numbered right to left: the letter `σ_i` exchanges punctures
//! `k−i` and `k−i+1`. Letters act in reading order (top to bottom of the
//! drawn braid), and `images[j−1]` is where puncture `j` ends up. With this
//! numbering the projections of `σ2²σ1⁻¹σ3σ2⁻³`, `σ2²σ4σ1σ3σ5σ2` and
//! `σ2³σ4³σ1⁻³σ3⁻³σ5⁻³σ2³σ4³` come out as `[3,1,4,2]`, `[2,5,1,3,6,4]` and
//! `[3,5,1,6,2,4]`.
//!
//! Pairs `{2i−1, 2i}` are invariant under the reversal `j ↦ k+1−j`, so plat
//! combinatorics do not depend on the numbering direction.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;

/// A permutation of `{1, …, k}` stored as its image tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (1..=size).collect() }
    }

    /// Builds a permutation from a 1-based image tuple; `None` unless it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based point `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` followed by `next`: `j ↦ next(self(j))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len(), "permutation sizes differ");
        Permutation { images: self.images.iter().map(|&v| next.apply(v)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self^m` by repeated squaring; negative exponents invert first.
    pub fn pow(&self, m: i64) -> Permutation {
        let mut base = if m < 0 { self.inverse() } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Permutation::identity(self.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Cycle decomposition, each cycle starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j - 1] {
                seen[j - 1] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// `π(w)`, the permutation of punctures induced by `w`. Crossing signs are ignored.
pub fn canonical_projection(w: &BraidWord) -> Permutation {
    let k = w.strands();
    // occupant[p] = puncture currently at position p (0-based both)
    let mut occupant: Vec<usize> = (0..k).collect();
    for l in w.letters() {
        let a = k - l.generator - 1;
        occupant.swap(a, a + 1);
    }
    let mut images = vec![0; k];
    for (pos, &puncture) in occupant.iter().enumerate() {
        images[puncture] = pos + 1;
    }
    Permutation { images }
}

pub fn permutation_order(p: &Permutation) -> u64 {
    p.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn projection_of_figure_braid() {
        let w = parse_braid("s2^2 s1^-1 s3 s2^-3", 4).unwrap();
        assert_eq!(canonical_projection(&w), perm(&[3, 1, 4, 2]));
    }

    #[test]
    fn projection_of_six_strand_examples() {
        let w = parse_braid("s2^2 s4 s1 s3 s5 s2", 6).unwrap();
        assert_eq!(canonical_projection(&w), perm(&[2, 5, 1, 3, 6, 4]));
        let w = parse_braid("s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3", 6).unwrap();
        assert_eq!(canonical_projection(&w), perm(&[3, 5, 1, 6, 2, 4]));
    }

    #[test]
    fn empty_word_projects_to_identity() {
        assert!(canonical_projection(&BraidWord::identity(6)).is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(perm(&[3, 1, 4, 2]).order(), 4);
        assert_eq!(perm(&[2, 5, 1, 3, 6, 4]).order(), 6);
        assert_eq!(perm(&[3, 5, 1, 6, 2, 4]).order(), 2);
        assert_eq!(Permutation::identity(6).order(), 1);
        assert_eq!(Permutation::identity(0).order(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![1, 1, 2]).is_none());
        assert!(Permutation::from_images(vec![0, 1]).is_none());
        assert!(Permutation::from_images(vec![1, 3]).is_none());
    }

    #[test]
    fn cycles_and_display() {
        let p = perm(&[2, 5, 1, 3, 6, 4]);
        assert_eq!(p.cycles(), vec![vec![1, 2, 5, 6, 4, 3]]);
        assert_eq!(p.to_string(), "[2,5,1,3,6,4]");
    }

    mod props {
        use super::*;
        use crate::braid::{BraidWord, Letter};
        use proptest::prelude::*;

        fn arb_word(strands: usize) -> impl Strategy<Value = BraidWord> {
            prop::collection::vec((1..strands, any::<bool>()), 0..20).prop_map(move |ls| {
                BraidWord::new(strands, ls.into_iter().map(|(g, p)| Letter { generator: g, positive: p }).collect())
                    .unwrap()
            })
        }

        proptest! {
            #[test]
            fn projection_is_a_homomorphism(a in arb_word(6), b in arb_word(6)) {
                let ab = canonical_projection(&a.concat(&b).unwrap());
                prop_assert_eq!(ab, canonical_projection(&a).then(&canonical_projection(&b)));
            }

            #[test]
            fn projection_commutes_with_powers(w in arb_word(8), m in 0i64..=10) {
                prop_assert_eq!(canonical_projection(&w.power(m)), canonical_projection(&w).pow(m));
            }

            #[test]
            fn order_annihilates(w in arb_word(8)) {
                let p = canonical_projection(&w);
                let k = p.order();
                prop_assert!(p.pow(k as i64).is_identity());
                for d in 1..k {
                    if k % d == 0 {
                        prop_assert!(!p.pow(d as i64).is_identity());
                    }
                }
            }

            #[test]
            fn signs_do_not_matter(w in arb_word(6)) {
                let flipped = BraidWord::new(6, w.letters().iter().map(|l| l.inverse()).collect()).unwrap();
                prop_assert_eq!(canonical_projection(&flipped), canonical_projection(&w));
                prop_assert_eq!(canonical_projection(&w.inverse()), canonical_projection(&w).inverse());
            }
        }
    }
}
