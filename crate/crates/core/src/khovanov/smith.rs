//! Smith normal form of sparse integer matrices.
//!
//! Unit pivots are eliminated first on the sparse columns (Markowitz order
//! keeps fill-in down); what is left is usually tiny and goes through a
//! dense reduction. The sparse pass runs on `i64` with overflow checks and
//! restarts on `BigInt` if any intermediate does not fit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Column-sparse integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    /// Columns given as `(row, value)` lists; they are sorted and zeros dropped.
    pub fn from_columns(rows: usize, mut cols: Vec<Vec<(u32, i64)>>) -> Self {
        for c in &mut cols {
            c.retain(|&(_, v)| v != 0);
            c.sort_unstable_by_key(|&(r, _)| r);
            assert!(c.windows(2).all(|w| w[0].0 != w[1].0), "repeated row in a column");
            assert!(c.iter().all(|&(r, _)| (r as usize) < rows), "row out of range");
        }
        IntegerMatrix { rows, cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| (0..nrows).filter(|&r| rows[r][c] != 0).map(|r| (r as u32, rows[r][c])).collect())
            .collect();
        IntegerMatrix { rows: nrows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(u32, i64)] {
        &self.cols[c]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols.len()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r as usize][c] = v;
            }
        }
        out
    }

    /// `self * other`, with `BigInt` accumulation.
    pub fn mul(&self, other: &IntegerMatrix) -> Vec<Vec<BigInt>> {
        assert_eq!(self.cols(), other.rows, "shape mismatch");
        let mut out = vec![vec![BigInt::zero(); other.cols()]; self.rows];
        for (c, col) in other.cols.iter().enumerate() {
            for &(k, v) in col {
                for &(r, u) in &self.cols[k as usize] {
                    out[r as usize][c] += BigInt::from(u) * BigInt::from(v);
                }
            }
        }
        out
    }
}

/// Nonzero invariant factors `d1 | d2 | ... | d_rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors other than 1.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().filter(|d| !d.is_one())
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let start: Vec<Vec<(u32, i64)>> = m.cols.clone();
    if let Some(f) = reduce::<i64>(m.rows, start) {
        return f;
    }
    let start: Vec<Vec<(u32, BigInt)>> =
        m.cols.iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect();
    reduce::<BigInt>(m.rows, start).expect("BigInt arithmetic does not overflow")
}

trait Coeff: Clone + PartialEq {
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    /// `self - f * g`
    fn sub_mul(&self, f: &Self, g: &Self) -> Option<Self>;
    fn neg_mul(f: &Self, g: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub_mul(&self, f: &Self, g: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*g)?)
    }
    fn neg_mul(f: &Self, g: &Self) -> Option<Self> {
        f.checked_mul(*g)?.checked_neg()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub_mul(&self, f: &Self, g: &Self) -> Option<Self> {
        Some(self - f * g)
    }
    fn neg_mul(f: &Self, g: &Self) -> Option<Self> {
        Some(-(f * g))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

fn reduce<T: Coeff>(rows: usize, mut cols: Vec<Vec<(u32, T)>>) -> Option<SmithForm> {
    let ncols = cols.len();
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); rows];
    for (c, col) in cols.iter().enumerate() {
        for &(r, _) in col {
            row_cols[r as usize].push(c as u32);
        }
    }
    let mut row_alive = vec![true; rows];
    let mut col_alive = vec![true; ncols];
    let mut units = 0usize;

    loop {
        let mut order: Vec<usize> = (0..ncols).filter(|&c| col_alive[c] && !cols[c].is_empty()).collect();
        order.sort_by_key(|&c| cols[c].len());
        let mut progress = false;
        for c in order {
            if !col_alive[c] || cols[c].is_empty() {
                continue;
            }
            let best = cols[c]
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(r, _)| row_cols[*r as usize].len())
                .map(|(r, v)| (*r, v.clone()));
            let Some((r, u)) = best else { continue };
            let pivot_col = std::mem::take(&mut cols[c]);
            let mut others = std::mem::take(&mut row_cols[r as usize]);
            others.sort_unstable();
            others.dedup();
            for &c2 in &others {
                let c2 = c2 as usize;
                if c2 == c || !col_alive[c2] {
                    continue;
                }
                let Ok(pos) = cols[c2].binary_search_by_key(&r, |&(rr, _)| rr) else { continue };
                let f = cols[c2][pos].1.mul(&u)?;
                let merged = axpy(&cols[c2], &f, &pivot_col, &mut row_cols, c2 as u32)?;
                cols[c2] = merged;
            }
            row_alive[r as usize] = false;
            col_alive[c] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let live: Vec<usize> = (0..ncols).filter(|&c| col_alive[c] && !cols[c].is_empty()).collect();
    let mut row_index = vec![usize::MAX; rows];
    let mut nr = 0;
    for &c in &live {
        for &(r, _) in &cols[c] {
            debug_assert!(row_alive[r as usize]);
            if row_index[r as usize] == usize::MAX {
                row_index[r as usize] = nr;
                nr += 1;
            }
        }
    }
    let mut dense = vec![vec![BigInt::zero(); live.len()]; nr];
    for (j, &c) in live.iter().enumerate() {
        for (r, v) in &cols[c] {
            dense[row_index[*r as usize]][j] = v.to_big();
        }
    }
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_smith(dense));
    Some(SmithForm { factors })
}

// x - f * y on sorted sparse columns; registers new rows of column `cx`
fn axpy<T: Coeff>(x: &[(u32, T)], f: &T, y: &[(u32, T)], row_cols: &mut [Vec<u32>], cx: u32) -> Option<Vec<(u32, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = T::neg_mul(f, &y[j].1)?;
            row_cols[y[j].0 as usize].push(cx);
            out.push((y[j].0, v));
            j += 1;
        } else {
            let v = x[i].1.sub_mul(f, &y[j].1)?;
            if !v.is_nil() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Diagonalises a dense matrix; returns the nonzero invariant factors.
fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block goes to (t, t)
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole remaining block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Torsion coefficient as `u64`, if it fits.
pub fn factor_to_u64(d: &BigInt) -> Option<u64> {
    d.to_u64()
}
