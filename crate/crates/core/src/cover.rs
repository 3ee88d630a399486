//! Homology of the double branched cover of a plat.
//!
//! The double cover of the disk branched over `2n` punctures is a surface
//! of genus `n−1` with two boundary circles. Its first homology has the arc
//! basis `e_1, …, e_{2n−1}`, where `e_i` is the lift of the straight arc
//! from puncture `i` to puncture `i+1` (numbered left to right here). The
//! intersection pairing is `⟨e_i, e_{i+1}⟩ = 1`, zero for `|i−j| ≥ 2`, and
//! has a one-dimensional radical spanned by `e_1 + e_3 + … + e_{2n−1}`,
//! the boundary class. Capping off gives the closed surface, whose homology
//! is the quotient with basis `e_1, …, e_{2n−2}`.
//!
//! A half twist acts on homology by the transvection
//! `σ_i : x ↦ x + ⟨x, e_i⟩ e_i`. This is the reduced Burau representation
//! at `t = −1`. Matrices act on column vectors and `M(w)` is the product
//! of the letter matrices in word order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::linalg::{big_num, big_vecs, determinant, smith_invariants, BigNum, IntMatrix};
use crate::permutation::canonical_projection;
use crate::plat::{plat_graph, summarize};

/// `⟨x, y⟩` in the arc basis.
pub fn pairing(x: &[BigInt], y: &[BigInt]) -> BigInt {
    assert_eq!(x.len(), y.len(), "vectors of different length");
    (0..x.len().saturating_sub(1)).map(|i| &x[i] * &y[i + 1] - &x[i + 1] * &y[i]).sum()
}

/// Gram matrix of the pairing on `dim` consecutive arcs.
pub fn pairing_matrix(dim: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(dim, dim);
    for i in 0..dim.saturating_sub(1) {
        j[(i, i + 1)] = BigInt::one();
        j[(i + 1, i)] = -BigInt::one();
    }
    j
}

/// Matrix of one letter on the `strands − 1` arcs.
pub fn letter_matrix(strands: usize, l: Letter) -> IntMatrix {
    let dim = strands - 1;
    let i = l.generator - 1;
    let s = if l.positive { BigInt::one() } else { -BigInt::one() };
    let mut m = IntMatrix::identity(dim);
    // ⟨x, e_i⟩ = x_{i−1} − x_{i+1}
    if i > 0 {
        m[(i, i - 1)] += &s;
    }
    if i + 1 < dim {
        m[(i, i + 1)] -= &s;
    }
    m
}

/// Integral Burau matrix at `t = −1` in the arc basis.
pub fn burau_neg1(w: &BraidWord) -> IntMatrix {
    w.letters().iter().fold(IntMatrix::identity(w.strands() - 1), |acc, &l| acc.mul(&letter_matrix(w.strands(), l)))
}

fn check_even(w: &BraidWord) -> Result<usize> {
    if w.strands() % 2 == 1 {
        return Err(Error::OddStrands(w.strands()));
    }
    Ok(w.strands() / 2)
}

/// Arc-basis vector reduced to the quotient basis `e_1..e_{2n−2}` using
/// `e_{2n−1} ≡ −(e_1 + e_3 + … + e_{2n−3})`.
fn reduce(v: &[BigInt]) -> Vec<BigInt> {
    let q = v.len() - 1;
    let last = &v[q];
    let mut out = v[..q].to_vec();
    for j in (0..q).step_by(2) {
        out[j] -= last;
    }
    out
}

fn lift(v: &[BigInt]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    out.push(BigInt::zero());
    out
}

/// The action on the homology of the closed surface, a `2(n−1)`-square
/// matrix preserving `pairing_matrix(2n−2)`.
pub fn symplectic_lift(w: &BraidWord) -> Result<IntMatrix> {
    check_even(w)?;
    Ok(quotient(&burau_neg1(w)))
}

fn quotient(m: &IntMatrix) -> IntMatrix {
    let q = m.rows() - 1;
    let cols: Vec<Vec<BigInt>> = (0..q).map(|j| reduce(&m.column(j))).collect();
    IntMatrix::from_columns(&cols)
}

/// Lifts of the standard lower shadows (`e_{2i−1}`) and their images under
/// the braid, both in the quotient basis. Each list has `n` entries summing
/// to zero.
pub fn lift_shadow_classes(w: &BraidWord) -> Result<(Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)> {
    let n = check_even(w)?;
    let s = symplectic_lift(w)?;
    let dim = 2 * n - 1;
    let alpha: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[2 * i] = BigInt::one();
            reduce(&e)
        })
        .collect();
    let beta = alpha.iter().map(|a| s.mul_vec(a)).collect();
    Ok((alpha, beta))
}

/// `P_ij = ⟨α_i, β_j⟩` for `i, j < n`. Pairing against the first `n−1`
/// lower classes identifies the quotient of the surface homology by the
/// lower Lagrangian with `ℤ^{n−1}`, so `P` presents `H_1` of the cover.
pub fn h1_presentation(w: &BraidWord) -> Result<IntMatrix> {
    let n = check_even(w)?;
    let (alpha, beta) = lift_shadow_classes(w)?;
    let mut p = IntMatrix::zeros(n - 1, n - 1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            p[(i, j)] = pairing(&lift(&alpha[i]), &lift(&beta[j]));
        }
    }
    Ok(p)
}

/// `|H_1|` of the double branched cover; `0` when `H_1` is infinite. For a
/// knot this is the determinant.
pub fn h1_order(w: &BraidWord) -> Result<BigInt> {
    Ok(determinant(&h1_presentation(w)?).abs())
}

/// Torsion invariant factors and free rank of `H_1`, trivial factors dropped.
pub fn h1_structure(w: &BraidWord) -> Result<(Vec<BigInt>, usize)> {
    let p = h1_presentation(w)?;
    let inv = smith_invariants(&p);
    let free = p.rows() - inv.len();
    Ok((inv.into_iter().filter(|d| !d.is_one()).collect(), free))
}

/// For a 4-strand braid: the coefficient of `e_2` in the image of `e_1`,
/// i.e. `⟨α, φα⟩`. It is `3` for `σ2³`.
pub fn two_bridge_entry(w: &BraidWord) -> Result<BigInt> {
    if w.strands() != 4 {
        return Err(Error::NotFourStrands(w.strands()));
    }
    Ok(symplectic_lift(w)?[(1, 0)].clone())
}

/// Image of the lifted standard curve as `(e_2, e_1)` coefficients: `σ2³`
/// gives the `(3, 1)` curve.
pub fn curve_slope(w: &BraidWord) -> Result<(BigInt, BigInt)> {
    if w.strands() != 4 {
        return Err(Error::NotFourStrands(w.strands()));
    }
    let s = symplectic_lift(w)?;
    Ok((s[(1, 0)].clone(), s[(0, 0)].clone()))
}

/// A 2-bridge knot is trivial iff its double cover is `S³`, i.e. the
/// designated entry has absolute value one.
pub fn is_unknot_2bridge(w: &BraidWord) -> Result<bool> {
    if w.strands() != 4 {
        return Err(Error::NotFourStrands(w.strands()));
    }
    let s = summarize(w);
    if !s.is_knot() {
        return Err(Error::NotAKnot(s.components));
    }
    Ok(two_bridge_entry(w)?.abs().is_one())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverData {
    pub burau_neg1: IntMatrix,
    pub symplectic: IntMatrix,
    #[serde(with = "big_vecs")]
    pub alpha_classes: Vec<Vec<BigInt>>,
    #[serde(with = "big_vecs")]
    pub beta_classes: Vec<Vec<BigInt>>,
    pub h1_presentation: IntMatrix,
    #[serde(with = "big_num")]
    pub h1_order: BigInt,
    /// Nontrivial torsion factors of `H_1`.
    pub h1_torsion: Vec<BigNum>,
    pub h1_free_rank: usize,
}

pub fn cover_data(w: &BraidWord) -> Result<CoverData> {
    let (alpha, beta) = lift_shadow_classes(w)?;
    let p = h1_presentation(w)?;
    let (torsion, free) = h1_structure(w)?;
    Ok(CoverData {
        burau_neg1: burau_neg1(w),
        symplectic: symplectic_lift(w)?,
        alpha_classes: alpha,
        beta_classes: beta,
        h1_order: determinant(&p).abs(),
        h1_presentation: p,
        h1_torsion: torsion.into_iter().map(BigNum).collect(),
        h1_free_rank: free,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

/// A curve class on the punctured sphere recorded by its winding number
/// around each puncture (same numbering as the canonical projection).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureClass {
    pub winding: Vec<i64>,
}

impl PunctureClass {
    pub fn new(winding: Vec<i64>) -> Self {
        PunctureClass { winding }
    }

    /// Indicator of the given 1-based punctures.
    pub fn around(punctures: usize, enclosed: &[usize]) -> Self {
        let mut winding = vec![0; punctures];
        for &p in enclosed {
            winding[p - 1] = 1;
        }
        PunctureClass { winding }
    }

    fn check_canonical(&self, punctures: usize) -> Result<()> {
        if self.winding.len() != punctures {
            return Err(Error::NonCanonicalClass(format!(
                "{} winding numbers for {} punctures",
                self.winding.len(),
                punctures
            )));
        }
        if let Some(v) = self.winding.iter().find(|&&v| v != 0 && v != 1) {
            return Err(Error::NonCanonicalClass(format!("winding number {v} is not 0 or 1")));
        }
        let support = self.winding.iter().filter(|&&v| v == 1).count();
        if support % 2 == 1 {
            return Err(Error::NonCanonicalClass(format!("odd support {support}")));
        }
        Ok(())
    }
}

/// Whether the class is a sum of curves around bridge endpoints, for the
/// lower bridges `{2i−1, 2i}` or the upper bridges, which sit at the
/// images of the standard pairs under the canonical projection.
pub fn disk_bound_test(c: &PunctureClass, side: Side, w: &BraidWord) -> Result<bool> {
    check_even(w)?;
    c.check_canonical(w.strands())?;
    let pairs = match side {
        Side::Lower => plat_graph(&crate::permutation::Permutation::identity(w.strands())).top_edges,
        Side::Upper => plat_graph(&canonical_projection(w)).bottom_edges,
    };
    Ok(pairs.iter().all(|&(a, b)| c.winding[a - 1] == c.winding[b - 1]))
}

/// An arc between two punctures, with any punctures enclosed between the
/// arc and the boundary of its neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcSpec {
    pub endpoints: (usize, usize),
    pub enclosed: Vec<usize>,
}

impl ArcSpec {
    pub fn annulus_class(&self, punctures: usize) -> PunctureClass {
        let mut pts = vec![self.endpoints.0, self.endpoints.1];
        pts.extend(&self.enclosed);
        PunctureClass::around(punctures, &pts)
    }
}

/// An arc bounds a disk on a side iff the boundary of its annular
/// neighbourhood does.
pub fn arc_disk_test(arc: &ArcSpec, side: Side, w: &BraidWord) -> Result<bool> {
    disk_bound_test(&arc.annulus_class(w.strands()), side, w)
}
