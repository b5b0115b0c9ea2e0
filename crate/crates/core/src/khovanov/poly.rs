use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::diagram::LinkDiagram;

/// Integer Laurent polynomial in `q`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: i64, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, e);
        p
    }

    pub fn add_term(&mut self, c: i64, e: i64) {
        if c == 0 {
            return;
        }
        let v = self.coeffs.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (mag, e) {
                (m, 0) => m.to_string(),
                (1, 1) => "q".to_string(),
                (1, e) => format!("q^{e}"),
                (m, 1) => format!("{m}q"),
                (m, e) => format!("{m}q^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Unnormalised Jones polynomial from the bracket state sum:
/// `sum_s (-1)^{i(s)} q^{i(s) + w} (q + q^-1)^{|s|}` with `i(s) = #B(s) - n`.
/// Only the number of circles per state is used, nothing from the chain complex.
pub fn bracket_jones(d: &LinkDiagram) -> LaurentPoly {
    let c = d.crossing_count();
    assert!(c <= 24, "state sum over 2^{c} states");
    let n = d.negative_count() as i64;
    let w = d.writhe();
    // (q + q^-1)^r for every r that occurs
    let mut powers = vec![LaurentPoly::monomial(1, 0)];
    let loop_value = &LaurentPoly::monomial(1, 1) + &LaurentPoly::monomial(1, -1);
    let mut total = LaurentPoly::zero();
    for s in 0u64..(1u64 << c) {
        let r = d.smoothing(|k| s >> k & 1 == 1).1;
        while powers.len() <= r {
            let next = powers.last().unwrap() * &loop_value;
            powers.push(next);
        }
        let i = s.count_ones() as i64 - n;
        let sign = if i.rem_euclid(2) == 0 { 1 } else { -1 };
        for (e, coef) in powers[r].terms() {
            total.add_term(sign * coef, e + i + w);
        }
    }
    total
}
