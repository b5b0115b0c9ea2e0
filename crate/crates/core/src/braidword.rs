//! Braid words on `n` strands.
//!
//! Text form is whitespace separated tokens `s<i>` or `s<i>^<e>` with
//! `1 <= i < n` and `e != 0`. On three strands the compact letters
//! `a b A B D` are also accepted (`D` is the half twist `s1 s2 s1`), and a
//! token may string several of them together (`aab`).

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("malformed token `{token}` at position {position}")]
    Malformed { token: String, position: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("compact letters need exactly 3 strands (got {strands})")]
    CompactAlphabet { strands: usize },
    #[error("zero exponent in token `{token}`")]
    ZeroExponent { token: String },
}

/// One generator `s_gen` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(gen: u32) -> Self {
        Letter { gen, inverse: false }
    }

    pub const fn neg(gen: u32) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, ParseError> {
        for l in &letters {
            check_index(l.gen as i64, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// Positive 3-strand word from syllable exponents, starting with `s_first`.
    pub fn from_syllables(first: u32, exponents: &[u64]) -> Self {
        let mut letters = Vec::new();
        let mut g = first;
        for &k in exponents {
            letters.extend(std::iter::repeat_n(Letter::pos(g), k as usize));
            g = 3 - g;
        }
        BraidWord { strands: 3, letters }
    }

    /// `Delta^p` on three strands, spelled `s1 s2 s1` (or its inverse) `|p|` times.
    pub fn delta_power(p: i64) -> Self {
        let mut letters = Vec::with_capacity(3 * p.unsigned_abs() as usize);
        for _ in 0..p.unsigned_abs() {
            if p > 0 {
                letters.extend([Letter::pos(1), Letter::pos(2), Letter::pos(1)]);
            } else {
                letters.extend([Letter::neg(1), Letter::neg(2), Letter::neg(1)]);
            }
        }
        BraidWord { strands: 3, letters }
    }

    pub fn parse(text: &str, strands: usize) -> Result<Self, ParseError> {
        let mut letters = Vec::new();
        for (position, token) in text.split_whitespace().enumerate() {
            if token.starts_with('s') {
                let (gen, e) = parse_generator(token, position)?;
                check_index(gen, strands)?;
                let l = Letter { gen: gen as u32, inverse: e < 0 };
                letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
            } else if token.chars().all(|c| "abABD".contains(c)) {
                if strands != 3 {
                    return Err(ParseError::CompactAlphabet { strands });
                }
                for c in token.chars() {
                    match c {
                        'a' => letters.push(Letter::pos(1)),
                        'b' => letters.push(Letter::pos(2)),
                        'A' => letters.push(Letter::neg(1)),
                        'B' => letters.push(Letter::neg(2)),
                        _ => letters.extend([Letter::pos(1), Letter::pos(2), Letter::pos(1)]),
                    }
                }
            } else {
                return Err(ParseError::Malformed { token: token.to_string(), position });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn word_length(&self) -> usize {
        self.letters.len()
    }

    /// Number of maximal runs of one signed generator.
    pub fn syllable_length(&self) -> usize {
        self.runs().len()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inverse)
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.inv()).collect();
        BraidWord { strands: self.strands, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn push(&mut self, l: Letter) {
        assert!(l.gen >= 1 && (l.gen as usize) < self.strands, "generator out of range");
        self.letters.push(l);
    }

    /// Maximal runs `(letter, run length)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((prev, n)) if *prev == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Canonical text, with maximal runs compressed.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .runs()
            .into_iter()
            .map(|(l, n)| {
                let e = n as i64 * l.exponent();
                if e == 1 {
                    format!("s{}", l.gen)
                } else {
                    format!("s{}^{}", l.gen, e)
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn check_index(index: i64, strands: usize) -> Result<(), ParseError> {
    if index < 1 || index >= strands as i64 {
        return Err(ParseError::IndexOutOfRange { index, strands });
    }
    Ok(())
}

fn parse_generator(token: &str, position: usize) -> Result<(i64, i64), ParseError> {
    let malformed = || ParseError::Malformed { token: token.to_string(), position };
    let body = &token[1..];
    let (idx, exp) = match body.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (body, None),
    };
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let gen: i64 = idx.parse().map_err(|_| malformed())?;
    let e = match exp {
        None => 1,
        Some(e) => {
            let digits = e.strip_prefix(['-', '+']).unwrap_or(e);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let v: i64 = e.parse().map_err(|_| malformed())?;
            if v.unsigned_abs() > u32::MAX as u64 {
                return Err(malformed());
            }
            v
        }
    };
    if e == 0 {
        return Err(ParseError::ZeroExponent { token: token.to_string() });
    }
    Ok((gen, e))
}
