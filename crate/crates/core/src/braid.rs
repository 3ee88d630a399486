//! Braid words over the Artin generators.
//!
//! A [`BraidWord`] is purely syntactic: a strand count and a sequence of
//! signed generator letters. Only free reduction is performed here; deciding
//! whether two words are equal in the braid group is the job of
//! [`crate::dynamics::is_trivial`].
//!
//! Surface syntax is `sI^E` tokens separated by whitespace, e.g.
//! `s2^2 s1^-1 s3 s2^-3`. Files may also use the numeric form
//! `strands: i1 i2 ...` where a negative entry is an inverse generator.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single Artin generator `σ_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    /// 1-based generator index.
    pub generator: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, positive: true }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, positive: false }
    }

    pub fn from_signed(value: i64) -> Option<Self> {
        match value {
            0 => None,
            v => Some(Letter { generator: v.unsigned_abs() as usize, positive: v > 0 }),
        }
    }

    pub fn signed(self) -> i64 {
        let g = self.generator as i64;
        if self.positive {
            g
        } else {
            -g
        }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, positive: !self.positive }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.positive != other.positive
    }
}

/// A word in the braid group `B_strands`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking every generator index against the strand count.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrandsForGroup { got: strands, min: 2 });
        }
        if let Some(bad) = letters.iter().find(|l| l.generator == 0 || l.generator >= strands) {
            return Err(Error::IndexOutOfRange { index: bad.generator, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 2, "braid groups need at least 2 strands");
        BraidWord { strands, letters: Vec::new() }
    }

    /// Parses surface syntax for any strand count `>= 2`.
    ///
    /// Use [`parse_braid`] when the word is meant to be closed as a plat.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrandsForGroup { got: strands, min: 2 });
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (generator, exponent) = parse_token(token)?;
            if generator == 0 || generator >= strands {
                return Err(Error::IndexOutOfRange { index: generator, strands });
            }
            let letter = Letter { generator, positive: exponent > 0 };
            letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses one line of the numeric file form, `strands: i1 i2 ...`.
    pub fn parse_numeric(line: &str) -> Result<Self> {
        let (head, tail) = line.split_once(':').ok_or_else(|| Error::Syntax {
            token: line.trim().to_string(),
            reason: "expected `strands: i1 i2 ...`".into(),
        })?;
        let strands: usize = head.trim().parse().map_err(|_| Error::Syntax {
            token: head.trim().to_string(),
            reason: "strand count is not a non-negative integer".into(),
        })?;
        let mut letters = Vec::new();
        for token in tail.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| Error::Syntax {
                token: token.to_string(),
                reason: "expected a signed integer".into(),
            })?;
            let letter = Letter::from_signed(value).ok_or_else(|| Error::Syntax {
                token: token.to_string(),
                reason: "generator 0 does not exist".into(),
            })?;
            letters.push(letter);
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of bridges `n` of the plat closure, i.e. `strands / 2`.
    pub fn bridges(&self) -> usize {
        self.strands / 2
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| if l.positive { 1 } else { -1 }).sum()
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `w^m` for any integer `m`; negative powers go through the inverse.
    pub fn power(&self, m: i64) -> BraidWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let reps = m.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The numeric file form, `strands: i1 i2 ...`.
    pub fn to_numeric(&self) -> String {
        let mut s = format!("{}:", self.strands);
        for l in &self.letters {
            s.push(' ');
            s.push_str(&l.signed().to_string());
        }
        s
    }

    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }
}

impl fmt::Display for BraidWord {
    /// Run-length encoded surface syntax; parses back to the same letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.positive { run } else { -run };
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "s{}", l.generator)?;
            } else {
                write!(f, "s{}^{}", l.generator, exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

fn parse_token(token: &str) -> Result<(usize, i64)> {
    let syntax = |reason: &str| Error::Syntax { token: token.to_string(), reason: reason.to_string() };
    let body = token.strip_prefix('s').ok_or_else(|| syntax("token must start with 's'"))?;
    let (index, exponent) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax("generator index must be a positive integer"));
    }
    let generator: usize = index.parse().map_err(|_| syntax("generator index too large"))?;
    let exponent = match exponent {
        None => 1,
        Some(e) => {
            let digits = e.strip_prefix('-').or_else(|| e.strip_prefix('+')).unwrap_or(e);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax("exponent must be an integer"));
            }
            e.parse::<i64>().map_err(|_| syntax("exponent too large"))?
        }
    };
    Ok((generator, exponent))
}

/// Parses a braid destined for plat closure: the strand count must be even.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands % 2 == 1 {
        return Err(Error::OddStrands(strands));
    }
    BraidWord::parse(text, strands)
}

/// The Garside half twist `Δ = (σ1…σ_{k−1})(σ1…σ_{k−2})…(σ1)`.
pub fn garside_delta(strands: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
    for top in (1..strands).rev() {
        letters.extend((1..=top).map(Letter::pos));
    }
    BraidWord { strands, letters }
}

/// The full twist `Δ²`, generator of the centre.
pub fn full_twist(strands: usize) -> BraidWord {
    garside_delta(strands).power(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, signed: &[i64]) -> BraidWord {
        BraidWord::new(strands, signed.iter().map(|&v| Letter::from_signed(v).unwrap()).collect()).unwrap()
    }

    #[test]
    fn parses_exponent_runs() {
        let w = parse_braid("s2^2 s1^-1 s3 s2^-3", 4).unwrap();
        assert_eq!(w.signed_letters(), vec![2, 2, -1, 3, -2, -2, -2]);
    }

    #[test]
    fn empty_text_is_identity() {
        let w = parse_braid("", 6).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.strands(), 6);
        assert!(parse_braid("   \n ", 6).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_braid("s6", 6), Err(Error::IndexOutOfRange { index: 6, strands: 6 })));
        assert!(matches!(parse_braid("s0", 6), Err(Error::IndexOutOfRange { index: 0, .. })));
        assert!(matches!(parse_braid("s1", 5), Err(Error::OddStrands(5))));
        for bad in ["x1", "s", "s^2", "s1^", "s1^x", "s-1", "s1^2^3", "s1s2"] {
            assert!(matches!(parse_braid(bad, 6), Err(Error::Syntax { .. })), "{bad}");
        }
    }

    #[test]
    fn zero_exponent_contributes_nothing() {
        assert!(parse_braid("s1^0", 4).unwrap().is_empty());
    }

    #[test]
    fn free_reduction() {
        assert!(word(4, &[1, -1]).free_reduce().is_empty());
        assert_eq!(word(4, &[1, 2, -2, 1]).free_reduce(), word(4, &[1, 1]));
        assert_eq!(word(4, &[1, 2, -3, -2, 2, 3, -2, -1]).free_reduce(), BraidWord::identity(4));
        let reduced = word(6, &[1, 3, -2, 5]);
        assert_eq!(reduced.free_reduce(), reduced);
    }

    #[test]
    fn group_operations() {
        let w = word(4, &[1, -2, 3, 3]);
        assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty());
        assert!(w.power(0).is_empty());
        assert_eq!(w.power(-1), w.inverse());
        assert_eq!(w.power(3).len(), 12);
        assert!(matches!(w.concat(&BraidWord::identity(6)), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn garside_words() {
        assert_eq!(garside_delta(4).signed_letters(), vec![1, 2, 3, 1, 2, 1]);
        assert_eq!(garside_delta(2).signed_letters(), vec![1]);
        assert_eq!(full_twist(6).exponent_sum(), 30);
        assert!(garside_delta(5).letters().iter().all(|l| l.positive));
    }

    #[test]
    fn numeric_form() {
        let w = BraidWord::parse_numeric("6: 2 2 4 1 3 5 2").unwrap();
        assert_eq!(w, parse_braid("s2^2 s4 s1 s3 s5 s2", 6).unwrap());
        assert_eq!(BraidWord::parse_numeric(&w.to_numeric()).unwrap(), w);
        assert_eq!(BraidWord::parse_numeric("4:").unwrap(), BraidWord::identity(4));
        assert!(BraidWord::parse_numeric("4: 1 x").is_err());
        assert!(BraidWord::parse_numeric("4 1 2").is_err());
        assert!(matches!(BraidWord::parse_numeric("4: 0"), Err(Error::Syntax { .. })));
        assert!(matches!(BraidWord::parse_numeric("4: 4"), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn display_compacts_runs() {
        let w = parse_braid("s2 s2 s1^-1 s3 s2^-3", 4).unwrap();
        assert_eq!(w.to_string(), "s2^2 s1^-1 s3 s2^-3");
        assert_eq!(BraidWord::identity(4).to_string(), "");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_word() -> impl Strategy<Value = BraidWord> {
            (2usize..5).prop_flat_map(|n| {
                let strands = 2 * n;
                prop::collection::vec((1..strands, any::<bool>()), 0..24).prop_map(move |ls| {
                    BraidWord::new(strands, ls.into_iter().map(|(g, p)| Letter { generator: g, positive: p }).collect())
                        .unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn format_parse_round_trip(w in arb_word()) {
                let back = parse_braid(&w.to_string(), w.strands()).unwrap();
                prop_assert_eq!(back, w);
            }

            #[test]
            fn free_reduce_is_idempotent(w in arb_word()) {
                let once = w.free_reduce();
                prop_assert_eq!(once.free_reduce(), once.clone());
                prop_assert!(once.letters().windows(2).all(|p| !p[0].is_inverse_of(p[1])));
            }

            #[test]
            fn inverse_cancels(w in arb_word()) {
                prop_assert!(w.inverse().concat(&w).unwrap().free_reduce().is_empty());
            }

            #[test]
            fn concat_is_associative(a in arb_word(), b in arb_word(), c in arb_word()) {
                let b = BraidWord::new(a.strands(), b.letters().iter().copied().filter(|l| l.generator < a.strands()).collect()).unwrap();
                let c = BraidWord::new(a.strands(), c.letters().iter().copied().filter(|l| l.generator < a.strands()).collect()).unwrap();
                let left = a.concat(&b).unwrap().concat(&c).unwrap();
                let right = a.concat(&b.concat(&c).unwrap()).unwrap();
                prop_assert_eq!(left, right);
            }
        }
    }
}
