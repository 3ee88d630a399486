//! Action of braids on measured multicurves of the punctured disk, in
//! Dynnikov's piecewise-linear coordinates.
//!
//! A multicurve on the `k`-punctured disk is encoded by `2(k−2)` integers
//! `(a_1, …, a_{k−2}, b_1, …, b_{k−2})`. Every nonzero integer vector is the
//! code of exactly one integral lamination, and each generator acts by a
//! max-plus update touching at most four coordinates. The action is exact
//! over the integers and positively homogeneous, so floats can be
//! renormalised freely.
//!
//! The full twist acts trivially on curves, so the action detects braids
//! only up to the centre; the exponent sum recovers the missing power of
//! `Δ²`.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Scalar type the update rules run over.
pub trait PlCoord: Clone + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> {
    fn zero() -> Self;

    fn pos(&self) -> Self {
        if *self > Self::zero() {
            self.clone()
        } else {
            Self::zero()
        }
    }

    fn neg_part(&self) -> Self {
        if *self < Self::zero() {
            self.clone()
        } else {
            Self::zero()
        }
    }
}

impl PlCoord for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
}

impl PlCoord for i64 {
    fn zero() -> Self {
        0
    }
}

impl PlCoord for f64 {
    fn zero() -> Self {
        0.0
    }
}

/// A measured multicurve on the `k`-punctured disk.
///
/// In renormalised float mode the true coordinates are
/// `coords · exp(log_scale)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LamVector<C = BigInt> {
    punctures: usize,
    coords: Vec<C>,
    pub log_scale: f64,
}

impl<C: PlCoord> LamVector<C> {
    pub fn new(punctures: usize, coords: Vec<C>) -> Result<Self> {
        let expected = dimension(punctures);
        if coords.len() != expected {
            return Err(Error::DimensionMismatch { got: coords.len(), expected });
        }
        Ok(LamVector { punctures, coords, log_scale: 0.0 })
    }

    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn coords(&self) -> &[C] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == C::zero())
    }

    /// The `a` and `b` halves.
    pub fn split(&self) -> (&[C], &[C]) {
        self.coords.split_at(self.coords.len() / 2)
    }

    fn apply_letter(&mut self, l: Letter) {
        let k = self.punctures;
        let half = self.coords.len() / 2;
        let (a, b) = self.coords.split_at_mut(half);
        update(k, a, b, l);
    }
}

impl LamVector<BigInt> {
    pub fn from_i64(punctures: usize, coords: &[i64]) -> Result<Self> {
        LamVector::new(punctures, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_float(&self) -> LamVector<f64> {
        let max_bits = self.coords.iter().map(|c| c.bits()).max().unwrap_or(0);
        // shift everything down so the largest entry fits comfortably in an f64
        let shift = max_bits.saturating_sub(60);
        let coords = self
            .coords
            .iter()
            .map(|c| {
                let shifted: BigInt = c >> shift;
                shifted.to_f64().unwrap_or(0.0)
            })
            .collect();
        LamVector {
            punctures: self.punctures,
            coords,
            log_scale: self.log_scale + shift as f64 * std::f64::consts::LN_2,
        }
    }

    /// Natural log of the L1 norm.
    pub fn log_norm(&self) -> f64 {
        let total: BigInt = self.coords.iter().map(|c| c.abs()).sum();
        big_ln(&total) + self.log_scale
    }
}

impl LamVector<f64> {
    pub fn log_norm(&self) -> f64 {
        let total: f64 = self.coords.iter().map(|c| c.abs()).sum();
        total.ln() + self.log_scale
    }

    /// Divides through by the largest absolute coordinate, folding it into `log_scale`.
    pub fn renormalize(&mut self) {
        let m = self.coords.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
        if m > 0.0 {
            for c in &mut self.coords {
                *c /= m;
            }
            self.log_scale += m.ln();
        }
    }

    fn max_abs(&self) -> f64 {
        self.coords.iter().fold(0.0f64, |acc, c| acc.max(c.abs()))
    }
}

fn big_ln(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().unwrap_or(f64::MAX);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Coordinate count `2(k−2)` for `k` punctures (0 below three punctures).
pub fn dimension(punctures: usize) -> usize {
    2 * punctures.saturating_sub(2)
}

/// One generator applied in place. `a`, `b` hold `a_1..a_{k−2}`, `b_1..b_{k−2}`.
fn update<C: PlCoord>(k: usize, a: &mut [C], b: &mut [C], l: Letter) {
    if k < 3 {
        return;
    }
    let i = l.generator;
    let last = k - 1;
    if l.positive {
        if i == 1 {
            let bp = a[0].clone() + b[0].pos();
            let ap = -b[0].clone() + bp.pos();
            a[0] = ap;
            b[0] = bp;
        } else if i == last {
            let j = k - 3;
            let bp = a[j].clone() + b[j].neg_part();
            let ap = -b[j].clone() + bp.neg_part();
            a[j] = ap;
            b[j] = bp;
        } else {
            let (p, q) = (i - 2, i - 1);
            let c = a[p].clone() - a[q].clone() - b[q].pos() + b[p].neg_part();
            let ap_p = a[p].clone() - b[p].pos() - (b[q].pos() + c.clone()).pos();
            let bp_p = b[q].clone() + c.neg_part();
            let ap_q = a[q].clone() - b[q].neg_part() + (c.clone() - b[p].neg_part()).pos();
            let bp_q = b[p].clone() - c.neg_part();
            a[p] = ap_p;
            b[p] = bp_p;
            a[q] = ap_q;
            b[q] = bp_q;
        }
    } else if i == 1 {
        let bp = -a[0].clone() + b[0].pos();
        let ap = b[0].clone() - bp.pos();
        a[0] = ap;
        b[0] = bp;
    } else if i == last {
        let j = k - 3;
        let bp = -a[j].clone() + b[j].neg_part();
        let ap = b[j].clone() - bp.neg_part();
        a[j] = ap;
        b[j] = bp;
    } else {
        let (p, q) = (i - 2, i - 1);
        let d = a[p].clone() - a[q].clone() + b[q].pos() - b[p].neg_part();
        let ap_p = a[p].clone() + b[p].pos() + (b[q].pos() - d.clone()).pos();
        let bp_p = b[q].clone() - d.pos();
        let ap_q = a[q].clone() + b[q].neg_part() + (b[p].neg_part() + d.clone()).neg_part();
        let bp_q = b[p].clone() + d.pos();
        a[p] = ap_p;
        b[p] = bp_p;
        a[q] = ap_q;
        b[q] = bp_q;
    }
}

/// Applies `w` letter by letter (leftmost letter first).
pub fn act<C: PlCoord>(w: &BraidWord, v: &LamVector<C>) -> Result<LamVector<C>> {
    if w.strands() != v.punctures {
        return Err(Error::DimensionMismatch { got: v.coords.len(), expected: dimension(w.strands()) });
    }
    let mut out = v.clone();
    for &l in w.letters() {
        out.apply_letter(l);
    }
    Ok(out)
}

fn act_float_in_place(w: &BraidWord, v: &mut LamVector<f64>) {
    for (n, &l) in w.letters().iter().enumerate() {
        v.apply_letter(l);
        if n % 16 == 15 && v.max_abs() > 1e150 {
            v.renormalize();
        }
    }
    v.renormalize();
}

/// The lamination with `a = 0`, `b = −1`: curves around consecutive puncture pairs.
pub fn canonical_seed(punctures: usize) -> LamVector<BigInt> {
    let d = dimension(punctures) / 2;
    let coords = (0..2 * d).map(|j| if j < d { BigInt::from(0) } else { BigInt::from(-1) }).collect();
    LamVector { punctures, coords, log_scale: 0.0 }
}

fn random_seed(punctures: usize, rng: &mut ChaCha8Rng) -> LamVector<BigInt> {
    let d = dimension(punctures);
    loop {
        let coords: Vec<i64> = (0..d).map(|_| rng.gen_range(-50..=50)).collect();
        if coords.iter().any(|&c| c != 0) {
            return LamVector::from_i64(punctures, &coords).expect("dimension matches");
        }
    }
}

/// Vectors used to decide whether a braid acts trivially: every signed
/// basis vector, the canonical seed and one generic vector.
fn test_vectors(punctures: usize) -> Vec<LamVector<BigInt>> {
    let d = dimension(punctures);
    let mut out = Vec::with_capacity(2 * d + 2);
    for j in 0..d {
        for s in [1i64, -1] {
            let mut c = vec![0i64; d];
            c[j] = s;
            out.push(LamVector::from_i64(punctures, &c).expect("dimension matches"));
        }
    }
    out.push(canonical_seed(punctures));
    let generic: Vec<i64> = (0..d as i64).map(|j| 3 + 7 * j - 11 * (j % 3) + if j % 2 == 0 { -17 } else { 5 }).collect();
    out.push(LamVector::from_i64(punctures, &generic).expect("dimension matches"));
    out
}

/// True iff `w` fixes every test vector, i.e. `w` is central as far as the
/// action can tell.
pub fn acts_trivially(w: &BraidWord) -> bool {
    test_vectors(w.strands()).iter().all(|v| act(w, v).expect("strands match") == *v)
}

/// Word problem: `w` is the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    w.exponent_sum() == 0 && acts_trivially(w)
}

/// Two words represent the same braid.
pub fn braid_eq(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Ok(is_trivial(&a.concat(&b.inverse())?))
}

/// A braid in `B_k` is periodic iff `w^k` or `w^{k−1}` is a power of `Δ²`;
/// the exponent sum of `Δ²` is `k(k−1)`, which fixes the candidate power.
pub fn is_periodic(w: &BraidWord) -> bool {
    let k = w.strands();
    if k < 3 {
        return true;
    }
    let full = (k * (k - 1)) as i64;
    let e = w.exponent_sum();
    [k, k - 1].into_iter().any(|p| (p as i64 * e) % full == 0 && acts_trivially(&w.power(p as i64)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for EntropyOptions {
    fn default() -> Self {
        EntropyOptions { tol: 1e-4, max_iter: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyEstimate {
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

const EXACT_LIMIT_BITS: u64 = 100; // about 10^30

/// Per-iteration log norms `log‖w^m v‖₁` for `m = 0..=iterations`, exact
/// while coordinates stay below ~10³⁰ and renormalised floats afterwards.
/// Coordinates stay in `i64` below this bound; one letter grows them by at
/// most a factor of eight, so no intermediate value can overflow.
const SMALL_LIMIT: i64 = 1 << 56;

enum Mode {
    Small(LamVector<i64>),
    Big(LamVector<BigInt>),
    Float(LamVector<f64>),
}

impl LamVector<i64> {
    fn to_big(&self) -> LamVector<BigInt> {
        LamVector { punctures: self.punctures, coords: self.coords.iter().map(|&c| BigInt::from(c)).collect(), log_scale: 0.0 }
    }

    fn log_norm(&self) -> f64 {
        let total: i128 = self.coords.iter().map(|&c| (c as i128).abs()).sum();
        (total as f64).ln()
    }
}

/// Applies `w` in `i64`, finishing in `BigInt` once a coordinate passes
/// [`SMALL_LIMIT`].
fn act_small(w: &BraidWord, v: &mut LamVector<i64>) -> Option<LamVector<BigInt>> {
    let letters = w.letters();
    for (n, &l) in letters.iter().enumerate() {
        v.apply_letter(l);
        if v.coords.iter().any(|c| c.abs() > SMALL_LIMIT) {
            let mut big = v.to_big();
            for &rest in &letters[n + 1..] {
                big.apply_letter(rest);
            }
            return Some(big);
        }
    }
    None
}

fn small_seed(seed: &LamVector<BigInt>) -> Mode {
    let small: Option<Vec<i64>> = seed.coords.iter().map(|c| c.to_i64().filter(|x| x.abs() <= SMALL_LIMIT)).collect();
    match small {
        Some(coords) => Mode::Small(LamVector { punctures: seed.punctures, coords, log_scale: 0.0 }),
        None => Mode::Big(seed.clone()),
    }
}

/// One step of the trajectory: exact while coordinates are below
/// [`EXACT_LIMIT_BITS`], renormalised floats afterwards.
fn step(w: &BraidWord, mode: Mode) -> (Mode, f64) {
    let big = match mode {
        Mode::Small(mut v) => match act_small(w, &mut v) {
            None => {
                let ln = v.log_norm();
                return (Mode::Small(v), ln);
            }
            Some(big) => big,
        },
        Mode::Big(v) => act(w, &v).expect("strands match"),
        Mode::Float(mut f) => {
            act_float_in_place(w, &mut f);
            let ln = f.log_norm();
            return (Mode::Float(f), ln);
        }
    };
    if big.coords.iter().any(|c| c.bits() > EXACT_LIMIT_BITS) {
        let f = big.to_float();
        let ln = f.log_norm();
        (Mode::Float(f), ln)
    } else {
        let ln = big.log_norm();
        (Mode::Big(big), ln)
    }
}

fn log_norm_trajectory(w: &BraidWord, seed: &LamVector<BigInt>, opts: &EntropyOptions) -> EntropyEstimate {
    let mut history = vec![seed.log_norm()];
    let mut mode = small_seed(seed);
    let mut estimates: Vec<f64> = Vec::new();
    let mut checkpoint = 8usize;
    for m in 1..=opts.max_iter {
        let (next, log_norm) = step(w, mode);
        mode = next;
        history.push(log_norm);
        if m == checkpoint {
            let half = m / 2;
            let e = (history[m] - history[half]) / half as f64;
            estimates.push(e);
            let n = estimates.len();
            if n >= 3
                && (estimates[n - 1] - estimates[n - 2]).abs() < opts.tol
                && (estimates[n - 2] - estimates[n - 3]).abs() < opts.tol
            {
                return EntropyEstimate { value: e.max(0.0), iterations: m, converged: true };
            }
            checkpoint *= 2;
        }
    }
    let last = estimates.last().copied().unwrap_or_else(|| {
        let m = history.len() - 1;
        if m == 0 {
            0.0
        } else {
            (history[m] - history[0]) / m as f64
        }
    });
    EntropyEstimate { value: last.max(0.0), iterations: opts.max_iter, converged: false }
}

/// Growth-rate estimate from one seed.
///
/// The estimate at `m = 2^j` iterations is the mean per-iteration log growth
/// over the second half of the run, `(log‖v_m‖ − log‖v_{m/2}‖)/(m/2)`; it is
/// accepted once three consecutive checkpoints agree to within `tol`.
pub fn entropy_from_seed(w: &BraidWord, seed: &LamVector<BigInt>, opts: &EntropyOptions) -> Result<EntropyEstimate> {
    if seed.punctures != w.strands() {
        return Err(Error::DimensionMismatch { got: seed.coords.len(), expected: dimension(w.strands()) });
    }
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    Ok(log_norm_trajectory(w, seed, opts))
}

fn seeds(punctures: usize) -> Vec<LamVector<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_b7a1d5);
    vec![canonical_seed(punctures), random_seed(punctures, &mut rng), random_seed(punctures, &mut rng)]
}

/// Entropy estimate with convergence metadata, never failing.
///
/// Periodic braids short-circuit to exactly zero. Otherwise three seeds run
/// and the largest converged estimate wins; if none converge the largest
/// last estimate is reported with `converged = false`.
pub fn estimate_entropy(w: &BraidWord, opts: &EntropyOptions) -> EntropyEstimate {
    if w.strands() < 3 || is_periodic(w) {
        return EntropyEstimate { value: 0.0, iterations: 0, converged: true };
    }
    let runs: Vec<EntropyEstimate> = seeds(w.strands()).iter().map(|s| log_norm_trajectory(w, s, opts)).collect();
    let best = |it: &mut dyn Iterator<Item = &EntropyEstimate>| {
        it.copied().fold(None, |acc: Option<EntropyEstimate>, e| match acc {
            Some(a) if a.value >= e.value => Some(a),
            _ => Some(e),
        })
    };
    best(&mut runs.iter().filter(|e| e.converged))
        .or_else(|| best(&mut runs.iter()))
        .expect("at least one seed")
}

/// Topological entropy `log λ` of `w`.
pub fn entropy(w: &BraidWord, tol: f64, max_iter: usize) -> Result<f64> {
    let est = estimate_entropy(w, &EntropyOptions { tol, max_iter });
    if est.converged {
        Ok(est.value)
    } else {
        Err(Error::NoConvergence { iterations: est.iterations, last_estimate: est.value })
    }
}

/// Log-norm trajectory in pure big-integer arithmetic, for cross-checks.
pub fn log_norms_exact(w: &BraidWord, seed: &LamVector<BigInt>, iterations: usize) -> Vec<f64> {
    let mut v = seed.clone();
    let mut out = vec![v.log_norm()];
    for _ in 0..iterations {
        v = act(w, &v).expect("strands match");
        out.push(v.log_norm());
    }
    out
}

/// Log-norm trajectory in renormalised floats from the start.
pub fn log_norms_float(w: &BraidWord, seed: &LamVector<BigInt>, iterations: usize) -> Vec<f64> {
    let mut v = seed.to_float();
    v.renormalize();
    let mut out = vec![v.log_norm()];
    for _ in 0..iterations {
        act_float_in_place(w, &mut v);
        out.push(v.log_norm());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Periodic,
    PseudoAnosovLikely,
    /// Neither periodic nor visibly expanding; possibly reducible.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NtReport {
    pub verdict: Verdict,
    pub entropy_estimate: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub fn nt_classify(w: &BraidWord) -> NtReport {
    nt_classify_with(w, &EntropyOptions::default())
}

pub fn nt_classify_with(w: &BraidWord, opts: &EntropyOptions) -> NtReport {
    if w.strands() < 3 || is_periodic(w) {
        return NtReport { verdict: Verdict::Periodic, entropy_estimate: 0.0, iterations: 0, converged: true };
    }
    let est = estimate_entropy(w, opts);
    let verdict = if est.converged && est.value > 10.0 * opts.tol {
        Verdict::PseudoAnosovLikely
    } else {
        Verdict::Undetermined
    };
    NtReport { verdict, entropy_estimate: est.value, iterations: est.iterations, converged: est.converged }
}
