//! Left normal forms in the 3-strand braid group.
//!
//! Every 3-braid is uniquely `Delta^p s_a^{k1} s_{3-a}^{k2} ... ` with the
//! generators alternating, interior exponents at least 2 and the positive
//! tail not containing a half twist. [`NormalForm3`] stores that data and
//! [`NormalForm3::push_generator`] is the constant time automaton that right
//! multiplies by one positive generator.

mod family;
mod lambda;

pub use family::{classify_family, FamilyTag, NMember};
pub use lambda::{conjugate_to_lambda, summit_infimum, LambdaClass, LambdaRep};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::braidword::BraidWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GarsideError {
    #[error("expected a 3-strand word, got {strands} strands")]
    NotThreeStrands { strands: usize },
    #[error("not conjugate to a positive braid (summit infimum {summit_infimum})")]
    NotPositive { summit_infimum: i64 },
    #[error("cannot parse normal form `{text}`: {reason}")]
    Format { text: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm3 {
    p: i64,
    first: u8,
    exponents: Vec<u64>,
    // sum of exponents, kept in step with `exponents`
    letters: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleFactor {
    Delta,
    S1,
    S2,
    S1S2,
    S2S1,
}

impl SimpleFactor {
    pub fn letters(self) -> &'static [u32] {
        match self {
            SimpleFactor::Delta => &[1, 2, 1],
            SimpleFactor::S1 => &[1],
            SimpleFactor::S2 => &[2],
            SimpleFactor::S1S2 => &[1, 2],
            SimpleFactor::S2S1 => &[2, 1],
        }
    }
}

impl NormalForm3 {
    pub fn delta_power(p: i64) -> Self {
        NormalForm3 { p, first: 0, exponents: Vec::new(), letters: 0 }
    }

    /// Checked constructor. `first` is ignored (taken as 0) when `exponents` is empty.
    pub fn new(p: i64, first: u8, exponents: Vec<u64>) -> Result<Self, GarsideError> {
        let bad = |reason: &str| GarsideError::Format {
            text: format!("({p}; {exponents:?}; first={first})"),
            reason: reason.to_string(),
        };
        if exponents.is_empty() {
            return Ok(Self::delta_power(p));
        }
        if first != 1 && first != 2 {
            return Err(bad("first generator must be 1 or 2"));
        }
        if exponents.contains(&0) {
            return Err(bad("zero exponent"));
        }
        let m = exponents.len();
        if m > 2 && exponents[1..m - 1].iter().any(|&k| k < 2) {
            return Err(bad("interior exponent below 2"));
        }
        let letters = exponents.iter().sum();
        Ok(NormalForm3 { p, first, exponents, letters })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// 1 or 2, or 0 for a pure power of `Delta`.
    pub fn first_gen(&self) -> u8 {
        self.first
    }

    pub fn last_gen(&self) -> u8 {
        match self.exponents.len() {
            0 => 0,
            m if m % 2 == 1 => self.first,
            _ => 3 - self.first,
        }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Number of letters after the `Delta` power.
    pub fn tail_length(&self) -> u64 {
        self.letters
    }

    /// Length of the spelled out word `Delta^p` followed by the tail.
    pub fn word_length(&self) -> u64 {
        3 * self.p.unsigned_abs() + self.letters
    }

    pub fn is_positive(&self) -> bool {
        self.p >= 0
    }

    /// Right multiplication by the positive generator `s_i`.
    pub fn push_generator(&mut self, i: u8) {
        debug_assert!(i == 1 || i == 2);
        if self.exponents.is_empty() {
            self.first = i;
            self.exponents.push(1);
            self.letters = 1;
            return;
        }
        let last = self.exponents.len() - 1;
        if i == self.last_gen() {
            self.exponents[last] += 1;
            self.letters += 1;
            return;
        }
        if self.exponents[last] > 1 {
            self.exponents.push(1);
            self.letters += 1;
            return;
        }
        match self.letters {
            1 => {
                self.exponents.push(1);
                self.letters = 2;
            }
            2 => {
                self.p += 1;
                self.first = 0;
                self.exponents.clear();
                self.letters = 0;
            }
            _ => {
                // s_{3-b}^{k} s_b s_{3-b} absorbs a half twist, which slides left
                // and swaps the generators it passes.
                self.exponents.pop();
                self.exponents[last - 1] -= 1;
                self.letters -= 2;
                self.p += 1;
                self.first = 3 - self.first;
            }
        }
    }

    /// The `ell` non-`Delta` simple factors of the left-weighted factorisation.
    pub fn simple_factors(&self) -> Vec<SimpleFactor> {
        let m = self.exponents.len();
        let mut out = Vec::new();
        let single = |g: u8| if g == 1 { SimpleFactor::S1 } else { SimpleFactor::S2 };
        let pair = |g: u8| if g == 1 { SimpleFactor::S1S2 } else { SimpleFactor::S2S1 };
        let mut g = self.first;
        for (idx, &k) in self.exponents.iter().enumerate() {
            let used_before = u64::from(idx > 0);
            let used_after = u64::from(idx + 1 < m);
            for _ in 0..(k - used_before - used_after) {
                out.push(single(g));
            }
            if idx + 1 < m {
                out.push(pair(g));
            }
            g = 3 - g;
        }
        out
    }

    /// `(inf, sup)`.
    pub fn inf_sup(&self) -> (i64, i64) {
        let m = self.exponents.len() as u64;
        let ell = if m == 0 { 0 } else { self.letters - (m - 1) };
        (self.p, self.p + ell as i64)
    }

    pub fn to_word(&self) -> BraidWord {
        let tail = BraidWord::from_syllables(self.first.max(1) as u32, &self.exponents);
        BraidWord::delta_power(self.p).concat(&tail)
    }

    pub fn render(&self) -> String {
        let ks: Vec<String> = self.exponents.iter().map(|k| k.to_string()).collect();
        if ks.is_empty() {
            format!("({}; ; )", self.p)
        } else {
            format!("({}; {}; first={})", self.p, ks.join(","), self.first)
        }
    }
}

impl fmt::Display for NormalForm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for NormalForm3 {
    type Err = GarsideError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| GarsideError::Format { text: s.to_string(), reason: reason.to_string() };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| bad("missing parentheses"))?;
        let parts: Vec<&str> = inner.split(';').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad("expected three `;` separated fields"));
        }
        let p: i64 = parts[0].parse().map_err(|_| bad("bad delta exponent"))?;
        if parts[1].is_empty() {
            if !parts[2].is_empty() {
                return Err(bad("first generator given without exponents"));
            }
            return Ok(NormalForm3::delta_power(p));
        }
        let exponents = parts[1]
            .split(',')
            .map(|k| k.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad("bad exponent list"))?;
        let first = parts[2]
            .strip_prefix("first=")
            .and_then(|a| a.trim().parse::<u8>().ok())
            .ok_or_else(|| bad("bad first generator"))?;
        NormalForm3::new(p, first, exponents)
    }
}

/// Left normal form of a 3-strand word, in time linear in its length.
///
/// `s1^-1 = Delta^-1 s1 s2` and `s2^-1 = Delta^-1 s2 s1`; each `Delta^-1`
/// then slides to the front, swapping the generators it passes. A letter's
/// final generator therefore only depends on the parity of the number of
/// inverse letters to its right.
pub fn normal_form(word: &BraidWord) -> Result<NormalForm3, GarsideError> {
    if word.strands() != 3 {
        return Err(GarsideError::NotThreeStrands { strands: word.strands() });
    }
    let inverses = word.letters().iter().filter(|l| l.inverse).count();
    let mut nf = NormalForm3::delta_power(-(inverses as i64));
    let mut seen = 0usize;
    for l in word.letters() {
        if l.inverse {
            seen += 1;
        }
        let flip = (inverses - seen) % 2 == 1;
        let g = if flip { 3 - l.gen as u8 } else { l.gen as u8 };
        if l.inverse {
            nf.push_generator(g);
            nf.push_generator(3 - g);
        } else {
            nf.push_generator(g);
        }
    }
    Ok(nf)
}
