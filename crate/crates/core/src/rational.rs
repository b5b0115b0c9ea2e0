//! Rewriting standard rational diagrams `D(a_1, ..., a_m)`.
//!
//! Codes are plain integer slices; positions in the public API are 1-based
//! to match the usual `a_i` indexing. See `LinkDiagram::from_rational_code`
//! for the diagram conventions.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalError {
    #[error("{op}: {reason}")]
    Precondition { op: &'static str, reason: String },
    #[error("zero entry at position {position}")]
    ZeroEntry { position: usize },
    #[error("bad rational code {text:?}")]
    Parse { text: String },
}

fn pre(op: &'static str, reason: impl Into<String>) -> RationalError {
    RationalError::Precondition { op, reason: reason.into() }
}

/// Change in positive crossings, negative crossings and writhe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Bookkeeping {
    pub delta_p: i64,
    pub delta_n: i64,
    pub delta_w: i64,
}

impl Bookkeeping {
    pub fn new(delta_p: i64, delta_n: i64) -> Self {
        Bookkeeping { delta_p, delta_n, delta_w: delta_p - delta_n }
    }
}

impl fmt::Display for Bookkeeping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dp={} dn={} dw={:+}", self.delta_p, self.delta_n, self.delta_w)
    }
}

/// Removes zero boxes. An interior zero merges its neighbours; a zero at
/// either end lets the next box untwist against the cup or cap, so both
/// go. Stops at `[]` (the unknot) or `[0]` (the two-component unlink).
pub fn normalize_zeros(code: &[i64]) -> Vec<i64> {
    let mut c = code.to_vec();
    loop {
        if c.len() <= 1 {
            return c;
        }
        let Some(k) = c.iter().position(|&a| a == 0) else {
            return c;
        };
        if k == 0 {
            c.drain(..2);
        } else if k == c.len() - 1 {
            c.truncate(k - 1);
        } else {
            c[k - 1] += c[k + 1];
            c.drain(k..k + 2);
        }
    }
}

fn u_raw(code: &[i64]) -> Result<Vec<i64>, RationalError> {
    if code.len() < 2 {
        return Err(pre("U", "needs at least two entries"));
    }
    if code[0] < 1 || code[1] < 1 {
        return Err(pre("U", "a_1 and a_2 must be at least 1"));
    }
    let mut out = vec![code[0] - 1, -1, code[1] - 1];
    out.extend_from_slice(&code[2..]);
    Ok(out)
}

fn t_raw(code: &[i64], i: usize) -> Result<Vec<i64>, RationalError> {
    let m = code.len();
    if m <= 3 {
        return Err(pre("T", "needs at least four entries"));
    }
    if !(2..=m - 2).contains(&i) {
        return Err(pre("T", format!("index {i} outside 2..={}", m - 2)));
    }
    let a = |k: usize| code[k - 1];
    if a(i) != -1 {
        return Err(pre("T", format!("a_{i} is {}, not -1", a(i))));
    }
    if a(i - 1) < 1 || a(i + 1) < 1 || a(i + 2) < 1 {
        return Err(pre("T", format!("a_{}, a_{} and a_{} must be at least 1", i - 1, i + 1, i + 2)));
    }
    let mut out = code.to_vec();
    out[i - 2] = a(i - 1) + 1;
    out[i - 1] = a(i + 1);
    out[i] = -1;
    out[i + 1] = a(i + 2) - 1;
    Ok(out)
}

/// `D(a_1 - 1, -1, a_2 - 1, a_3, ..., a_m)`, zero-collapsed.
pub fn u_transform(code: &[i64]) -> Result<Vec<i64>, RationalError> {
    Ok(normalize_zeros(&u_raw(code)?))
}

/// Moves the `-1` at 1-based position `i` one box to the right, zero-collapsed.
pub fn t_transform(code: &[i64], i: usize) -> Result<Vec<i64>, RationalError> {
    Ok(normalize_zeros(&t_raw(code, i)?))
}

/// `(a_1 - 1, -1, a_2 - 2, -1, ..., a_{m-1} - 2, -1, a_m - 1)` before collapsing zeros.
pub fn alternating_closed_form(code: &[i64]) -> Vec<i64> {
    let m = code.len();
    let mut out = Vec::with_capacity(2 * m);
    for (k, &a) in code.iter().enumerate() {
        if k > 0 {
            out.push(-1);
        }
        let edge = k == 0 || k + 1 == m;
        out.push(if edge { a - 1 } else { a - 2 });
    }
    out
}

/// Rewrites `D(a_1, ..., a_m)`, all `a_i >= 2`, into an equivalent alternating
/// diagram by the chain of U and T moves, checked against the closed form.
pub fn alternating_code(code: &[i64]) -> Result<(Vec<i64>, Bookkeeping), RationalError> {
    let m = code.len();
    if m < 2 {
        return Err(pre("alternating", "needs at least two entries"));
    }
    if let Some(k) = code.iter().position(|&a| a < 2) {
        return Err(pre("alternating", format!("a_{} is {}, below 2", k + 1, code[k])));
    }
    // D_m = D, then D_i = (T_i o ... o T_2 o U)(D_{i+1}) down to i = 2, then D' = U(D_2)
    let mut d = code.to_vec();
    for i in (2..m).rev() {
        d = u_raw(&d)?;
        for t in 2..=i {
            d = t_raw(&d, t)?;
        }
    }
    d = u_raw(&d)?;
    assert_eq!(d, alternating_closed_form(code), "move sequence disagrees with the closed form");
    let mm = m as i64 - 1;
    Ok((normalize_zeros(&d), Bookkeeping::new(0, -mm)))
}

/// Adjacent entries have opposite signs.
pub fn is_alternating(code: &[i64]) -> Result<bool, RationalError> {
    if let Some(k) = code.iter().position(|&a| a == 0) {
        return Err(RationalError::ZeroEntry { position: k + 1 });
    }
    Ok(code.windows(2).all(|w| w[0] * w[1] < 0))
}

/// Comma-separated integers, spaces allowed.
pub fn parse_code(text: &str) -> Result<Vec<i64>, RationalError> {
    let bad = || RationalError::Parse { text: text.to_string() };
    let t = text.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(|s| s.trim().parse::<i64>().map_err(|_| bad())).collect()
}

pub fn render_code(code: &[i64]) -> String {
    code.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}
