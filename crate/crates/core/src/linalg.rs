//! Dense integer matrices over `BigInt` with fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// # Panics
    /// If the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_columns(cols: &[Vec<BigInt>]) -> Self {
        let rows = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `i64` when they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// # Panics
    /// On a dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<BigNum>> =
            (0..self.rows).map(|i| self.row(i).iter().cloned().map(BigNum).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<BigNum>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(serde::de::Error::custom("ragged matrix"));
        }
        let n = rows.len();
        Ok(IntMatrix { rows: n, cols, data: rows.into_iter().flatten().map(|b| b.0).collect() })
    }
}

/// A big integer that serialises as a JSON number when it fits in `i64`
/// and as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigNum(pub BigInt);

impl Serialize for BigNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigNum(BigInt::from(v))),
            Raw::Text(t) => t.parse().map(BigNum).map_err(serde::de::Error::custom),
        }
    }
}

/// `serde(with = "big_num")` adapter for plain `BigInt` fields.
pub mod big_num {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        BigNum(x.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        BigNum::deserialize(d).map(|b| b.0)
    }
}

/// `serde(with = "big_vecs")` adapter for `Vec<Vec<BigInt>>`.
pub mod big_vecs {
    use super::*;

    pub fn serialize<S: Serializer>(x: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Vec<BigNum>> = x.iter().map(|r| r.iter().cloned().map(BigNum).collect()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<BigInt>>, D::Error> {
        let v: Vec<Vec<BigNum>> = Vec::deserialize(d)?;
        Ok(v.into_iter().map(|r| r.into_iter().map(|b| b.0).collect()).collect())
    }
}

/// Determinant by Bareiss elimination; every intermediate division is exact.
///
/// # Panics
/// If the matrix is not square.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.data.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            a.data.swap(r * cols + j, p * cols + j);
        }
        for i in r + 1..rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            let (x, y) = (a[(r, c)].clone(), a[(i, c)].clone());
            for j in c..cols {
                let v = &a[(i, j)] * &x - &a[(r, j)] * &y;
                a[(i, j)] = v;
            }
            let g = a.row(i).iter().fold(BigInt::zero(), |g, v| g.gcd(v));
            if !g.is_zero() && !g.is_one() {
                for j in c..cols {
                    a[(i, j)] = &a[(i, j)] / &g;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Nonzero invariant factors `d_1 | d_2 | …` of the Smith normal form,
/// all positive. The cokernel is `⊕ ℤ/d_i ⊕ ℤ^{rows − len}`.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero magnitude in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        for j in 0..cols {
            a.data.swap(t * cols + j, pi * cols + j);
        }
        for i in 0..rows {
            a.data.swap(i * cols + t, i * cols + pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &a[(i, j)] - &q * &a[(t, j)];
                        a[(i, j)] = v;
                    }
                }
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &a[(i, j)] - &q * &a[(i, t)];
                        a[(i, j)] = v;
                    }
                }
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // the pivot must also divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[(i, j)] % &a[(t, t)]).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = &a[(t, j)] + &a[(i, j)];
                            a[(t, j)] = v;
                        }
                        continue;
                    }
                }
            }
            // shrink the pivot to the smallest nonzero entry in its row/column
            let mut best = (t, t);
            for i in t..rows {
                if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                for j in 0..cols {
                    a.data.swap(t * cols + j, best.0 * cols + j);
                }
            } else if best.1 != t {
                for i in 0..rows {
                    a.data.swap(i * cols + t, i * cols + best.1);
                }
            }
        }
        out.push(a[(t, t)].abs());
        t += 1;
    }
    out
}
