//! Families of knots from powers of a pseudo-Anosov plat.
//!
//! If `π(β)` has order `k`, every power `β^{mk+1}` closes to a knot. For a
//! generic pseudo-Anosov `β` the bridge distance of these plats grows at
//! least linearly in `m`, so past some threshold they are prime (distance
//! at least 2) and hyperbolic (distance at least 3), and a knot of bridge
//! distance `d` has genus at least `(d−1)/2`. The threshold is not
//! computable from the braid alone; only highly twisted powers, whose
//! distance is known exactly, receive the flags here.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::cover::h1_order;
use crate::diagram::plat_diagram;
use crate::dynamics::{estimate_entropy, nt_classify_with, EntropyOptions, Verdict};
use crate::error::{Error, Result};
use crate::fishnet::{fishnet_parse, is_highly_twisted, jm_distance};
use crate::linalg::big_num;
use crate::permutation::{canonical_projection, permutation_order};
use crate::plat::{knot_powers, summarize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distance {
    Exact { d: u64 },
    /// Only the linear lower bound past an unknown threshold is available.
    LowerBoundTrack,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub power: u64,
    pub word: String,
    pub components: usize,
    pub entropy: f64,
    /// True when the entropy was computed from the power itself rather
    /// than scaled from the base braid.
    pub entropy_recomputed: bool,
    pub distance: Distance,
    pub prime: bool,
    pub hyperbolic: bool,
    pub rationale: Vec<String>,
    pub genus_lower_bound: Option<u64>,
    pub crossings: usize,
    pub seifert_genus_bound: Option<usize>,
    #[serde(with = "big_num")]
    pub determinant: BigInt,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub input: String,
    pub strands: usize,
    pub verdict: Verdict,
    pub entropy: f64,
    pub k: u64,
    pub assume_generic: bool,
    pub entries: Vec<FamilyEntry>,
    pub warnings: Vec<String>,
}

/// `⌈(d−1)/2⌉`, and `0` for `d ≤ 1`.
pub fn genus_lower_bound(d: u64) -> u64 {
    d.saturating_sub(1).div_ceil(2)
}

const SPOT_CHECKS: usize = 3;
const SHORTCUT_TOLERANCE: f64 = 1e-2;

pub fn generate_family(w: &BraidWord, max_power: u64, assume_generic: bool) -> Result<FamilyReport> {
    if w.strands() < 6 {
        return Err(Error::TooFewStrands(w.strands()));
    }
    let summary = summarize(w);
    if !summary.is_knot() {
        return Err(Error::NotAKnot(summary.components));
    }
    let opts = EntropyOptions::default();
    let nt = nt_classify_with(w, &opts);
    if nt.verdict == Verdict::Periodic {
        return Err(Error::NotPseudoAnosov);
    }
    let k = permutation_order(&canonical_projection(w));
    let mut warnings = Vec::new();
    if nt.verdict == Verdict::Undetermined {
        warnings.push(format!(
            "entropy estimate {:.5} did not certify a pseudo-Anosov braid; the braid may be reducible",
            nt.entropy_estimate
        ));
    }
    let twisted = fishnet_parse(w).map(|g| is_highly_twisted(&g)).unwrap_or(false);
    let assume_generic = assume_generic || twisted;
    if !assume_generic {
        warnings.push(
            "genericity of the pseudo-Anosov braid is assumed, not certified; pass assume_generic once it is checked"
                .to_string(),
        );
    }

    let powers = knot_powers(w, max_power);
    let mut entries: Vec<FamilyEntry> =
        powers.par_iter().map(|&m| build_entry(w, m, nt.entropy_estimate)).collect::<Result<_>>()?;

    // spot-check the linear entropy shortcut on the smallest powers
    let mut drift = false;
    for e in entries.iter_mut().take(SPOT_CHECKS) {
        let full = estimate_entropy(&w.power(e.power as i64), &opts).value;
        drift |= (full - e.entropy).abs() > SHORTCUT_TOLERANCE;
        e.entropy = full;
        e.entropy_recomputed = true;
    }
    if drift {
        warnings.push("entropy shortcut drifted; all entries recomputed".to_string());
        entries.par_iter_mut().filter(|e| !e.entropy_recomputed).for_each(|e| {
            e.entropy = estimate_entropy(&w.power(e.power as i64), &opts).value;
            e.entropy_recomputed = true;
        });
    }

    Ok(FamilyReport {
        input: w.to_string(),
        strands: w.strands(),
        verdict: nt.verdict,
        entropy: nt.entropy_estimate,
        k,
        assume_generic,
        entries,
        warnings,
    })
}

fn build_entry(w: &BraidWord, m: u64, base_entropy: f64) -> Result<FamilyEntry> {
    let p = w.power(m as i64);
    let components = summarize(&p).components;
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let exact = fishnet_parse(&p).ok().and_then(|g| jm_distance(&g).ok());
    let mut rationale = Vec::new();
    let (distance, prime, hyperbolic, genus) = match exact {
        Some(d) => {
            rationale.push(format!("highly twisted plat: bridge distance exactly {d}"));
            if d >= 2 {
                rationale.push("distance at least 2: prime, since composite knots have distance 1".to_string());
            }
            if d >= 3 {
                rationale.push("distance at least 3: hyperbolic complement".to_string());
            }
            (Distance::Exact { d }, d >= 2, d >= 3, Some(genus_lower_bound(d)))
        }
        None => {
            rationale.push(
                "distance bounded below by the lifted Heegaard splitting, which grows linearly in m past an unknown threshold; no flags claimed"
                    .to_string(),
            );
            (Distance::LowerBoundTrack, false, false, None)
        }
    };
    let diagram = plat_diagram(&p)?;
    Ok(FamilyEntry {
        power: m,
        word: p.to_string(),
        components,
        entropy: m as f64 * base_entropy,
        entropy_recomputed: false,
        distance,
        prime,
        hyperbolic,
        rationale,
        genus_lower_bound: genus,
        crossings: diagram.crossings(),
        seifert_genus_bound: diagram.seifert_genus_bound(),
        determinant: h1_order(&p)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub m1: u64,
    pub m2: u64,
    pub reason: String,
}

/// Pairs of entries certified to be different knots: the genus lower bound
/// of one exceeds the Seifert genus bound of the other's diagram.
pub fn distinctness_witnesses(report: &FamilyReport) -> Result<Vec<Witness>> {
    let exact: Vec<&FamilyEntry> =
        report.entries.iter().filter(|e| matches!(e.distance, Distance::Exact { .. })).collect();
    if exact.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "{} entries with exact distance, need at least 2",
            exact.len()
        )));
    }
    let mut out = Vec::new();
    for a in &exact {
        for b in &exact {
            if a.power == b.power {
                continue;
            }
            let (Some(upper), Some(lower)) = (a.seifert_genus_bound, b.genus_lower_bound) else {
                continue;
            };
            if lower > upper as u64 {
                out.push(Witness {
                    m1: a.power,
                    m2: b.power,
                    reason: format!(
                        "genus of power {} is at least {lower}, above the Seifert bound {upper} of power {}",
                        b.power, a.power
                    ),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    const TWISTED_PLAT: &str = "s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3";

    #[test]
    fn genus_bounds() {
        assert_eq!(genus_lower_bound(0), 0);
        assert_eq!(genus_lower_bound(1), 0);
        assert_eq!(genus_lower_bound(2), 1);
        assert_eq!(genus_lower_bound(4), 2);
        assert_eq!(genus_lower_bound(18), 9);
    }

    #[test]
    fn highly_twisted_family() {
        let w = parse_braid(TWISTED_PLAT, 6).unwrap();
        let r = generate_family(&w, 9, false).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.assume_generic);
        assert_eq!(r.entries.iter().map(|e| e.power).collect::<Vec<_>>(), vec![1, 3, 5, 7, 9]);
        for e in &r.entries {
            let d = e.power + 1;
            assert_eq!(e.distance, Distance::Exact { d });
            assert!(e.prime);
            assert_eq!(e.hyperbolic, e.power >= 3);
            assert!((e.entropy - e.power as f64 * 4.02503).abs() < 1e-2 * e.power as f64);
            assert!(num_integer::Integer::is_odd(&e.determinant));
        }
        assert!(r.entries.iter().take(3).all(|e| e.entropy_recomputed));
    }

    #[test]
    fn non_twisted_family_claims_nothing() {
        let w = parse_braid("s2^2 s4 s1 s3 s5 s2", 6).unwrap();
        let r = generate_family(&w, 13, false).unwrap();
        assert_eq!(r.k, 6);
        assert!(!r.assume_generic);
        assert!(!r.warnings.is_empty());
        for e in &r.entries {
            assert_eq!(e.distance, Distance::LowerBoundTrack);
            assert!(!e.hyperbolic && !e.prime);
            assert!(e.genus_lower_bound.is_none());
        }
        assert!(distinctness_witnesses(&r).is_err());
    }

    #[test]
    fn rejections() {
        let fig8 = parse_braid("s2 s1^-1 s2^2 s3", 4).unwrap();
        assert_eq!(generate_family(&fig8, 5, true), Err(Error::TooFewStrands(4)));
        let link = parse_braid("s1 s3", 6).unwrap();
        assert!(matches!(generate_family(&link, 5, true), Err(Error::NotAKnot(_))));
        let periodic = parse_braid("s1 s2 s3 s4 s5", 6).unwrap();
        assert!(summarize(&periodic).is_knot());
        assert_eq!(generate_family(&periodic, 5, true), Err(Error::NotPseudoAnosov));
    }
}
