//! Fishnet (twist-box) structure of plat words and the exact bridge distance
//! of highly twisted plats.
//!
//! A row is a maximal run of letters with the same generator parity. Letters
//! in such a run pairwise commute, so the run is a product of disjoint twist
//! boxes `σ_j^a`. Runs are taken greedily left to right; consecutive
//! same-parity letters always land in the same row, so powers of a fishnet
//! word have their junction rows merged.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowParity {
    /// Boxes at `σ1, σ3, …, σ_{2m−1}`.
    Odd,
    /// Boxes at `σ2, σ4, …, σ_{2m−2}`.
    Even,
}

impl RowParity {
    fn of(generator: usize) -> Self {
        if generator % 2 == 1 {
            RowParity::Odd
        } else {
            RowParity::Even
        }
    }

    /// Generator indices a complete row of this parity carries in width `m`.
    pub fn slots(self, width: usize) -> Vec<usize> {
        match self {
            RowParity::Odd => (1..=width).map(|j| 2 * j - 1).collect(),
            RowParity::Even => (1..width).map(|j| 2 * j).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRow {
    pub parity: RowParity,
    /// Generator index → signed half-twist count. Zero counts are kept.
    pub boxes: BTreeMap<usize, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistGrid {
    /// Plat width `m`: the word lives in `B_{2m}`.
    pub width: usize,
    pub rows: Vec<TwistRow>,
}

impl TwistGrid {
    pub fn height(&self) -> usize {
        self.rows.len()
    }
}

pub fn fishnet_parse(w: &BraidWord) -> Result<TwistGrid> {
    if w.strands() % 2 == 1 {
        return Err(Error::NotFishnet(format!("{} strands cannot be closed as a plat", w.strands())));
    }
    let mut rows: Vec<TwistRow> = Vec::new();
    for l in w.letters() {
        let parity = RowParity::of(l.generator);
        let delta = if l.positive { 1 } else { -1 };
        match rows.last_mut() {
            Some(row) if row.parity == parity => *row.boxes.entry(l.generator).or_insert(0) += delta,
            _ => rows.push(TwistRow { parity, boxes: BTreeMap::from([(l.generator, delta)]) }),
        }
    }
    Ok(TwistGrid { width: w.strands() / 2, rows })
}

/// True iff the grid has rows and every slot of every row holds at least
/// three half twists in absolute value.
pub fn is_highly_twisted(g: &TwistGrid) -> bool {
    !g.rows.is_empty()
        && g.rows.iter().all(|row| {
            row.parity
                .slots(g.width)
                .iter()
                .all(|slot| row.boxes.get(slot).is_some_and(|a| a.abs() >= 3))
        })
}

/// Exact bridge distance `⌈n / (2(m−2))⌉` of a highly twisted plat with
/// `n` rows and width `m ≥ 3`.
pub fn jm_distance(g: &TwistGrid) -> Result<u64> {
    if g.width < 3 {
        return Err(Error::WidthTooSmall(g.width));
    }
    if !is_highly_twisted(g) {
        return Err(Error::NotHighlyTwisted);
    }
    let n = g.height() as u64;
    let d = 2 * (g.width as u64 - 2);
    Ok(n.div_ceil(d))
}
