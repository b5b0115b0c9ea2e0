use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::group::AbelianGroup;
use super::poly::LaurentPoly;

pub const SCHEMA_VERSION: u32 = 1;

/// Bigraded groups `H^{i,j}`; absent cells are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HomologyTable {
    cells: BTreeMap<(i64, i64), AbelianGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub i: i64,
    pub j: i64,
    pub rank: u64,
    #[serde(default)]
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub schema_version: u32,
    pub cells: Vec<CellRecord>,
}

impl HomologyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = ((i64, i64), AbelianGroup)>) -> Self {
        let mut t = Self::new();
        for ((i, j), g) in cells {
            t.add(i, j, &g);
        }
        t
    }

    pub fn get(&self, i: i64, j: i64) -> AbelianGroup {
        self.cells.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: i64, j: i64, g: AbelianGroup) {
        if g.is_zero() {
            self.cells.remove(&(i, j));
        } else {
            self.cells.insert((i, j), g);
        }
    }

    /// Adds `g` as a direct summand at `(i, j)`.
    pub fn add(&mut self, i: i64, j: i64, g: &AbelianGroup) {
        let sum = self.get(i, j).direct_sum(g);
        self.set(i, j, sum);
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64, &AbelianGroup)> {
        self.cells.iter().map(|(&(i, j), g)| (i, j, g))
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// `[di]{dj}`: the group at `(i, j)` moves to `(i + di, j + dj)`.
    pub fn shift(&self, di: i64, dj: i64) -> Self {
        HomologyTable { cells: self.cells.iter().map(|(&(i, j), g)| ((i + di, j + dj), g.clone())).collect() }
    }

    pub fn direct_sum(&self, other: &HomologyTable) -> Self {
        let mut out = self.clone();
        for (i, j, g) in other.cells() {
            out.add(i, j, g);
        }
        out
    }

    pub fn min_j(&self) -> Option<i64> {
        self.cells.keys().map(|&(_, j)| j).min()
    }

    pub fn euler_characteristic(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (i, j, g) in self.cells() {
            p.add_term(if i.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) }, j);
        }
        p
    }

    pub fn to_record(&self) -> TableRecord {
        TableRecord {
            schema_version: SCHEMA_VERSION,
            cells: self
                .cells()
                .map(|(i, j, g)| CellRecord { i, j, rank: g.rank, torsion: g.torsion.clone() })
                .collect(),
        }
    }

    pub fn from_record(r: &TableRecord) -> Self {
        HomologyTable::from_cells(r.cells.iter().map(|c| ((c.i, c.j), AbelianGroup::new(c.rank, &c.torsion))))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        Ok(Self::from_record(&serde_json::from_str(text)?))
    }

    /// Rows descend in `j`, columns ascend in `i`.
    pub fn render_ascii(&self) -> String {
        if self.is_empty() {
            return "(zero)\n".to_string();
        }
        let is: BTreeSet<i64> = self.cells.keys().map(|&(i, _)| i).collect();
        let js: BTreeSet<i64> = self.cells.keys().map(|&(_, j)| j).collect();
        let (i0, i1) = (*is.first().unwrap(), *is.last().unwrap());
        let (j0, j1) = (*js.first().unwrap(), *js.last().unwrap());
        render_grid(i0..=i1, j0, j1, |i, j| self.cells.get(&(i, j)).map(|g| g.render()).unwrap_or_default())
    }
}

/// Plain text grid; rows from `j_hi` down to `j_lo` in steps of 2.
pub(crate) fn render_grid(
    cols: std::ops::RangeInclusive<i64>,
    j_lo: i64,
    j_hi: i64,
    cell: impl Fn(i64, i64) -> String,
) -> String {
    let cols: Vec<i64> = cols.collect();
    let mut rows = Vec::new();
    let mut j = j_hi;
    while j >= j_lo {
        rows.push(j);
        j -= 2;
    }
    let body: Vec<Vec<String>> = rows.iter().map(|&j| cols.iter().map(|&i| cell(i, j)).collect()).collect();
    let label_w = rows.iter().map(|j| j.to_string().len()).max().unwrap_or(1).max(3);
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(k, i)| body.iter().map(|r| r[k].len()).max().unwrap_or(0).max(i.to_string().len()))
        .collect();
    let mut out = String::new();
    out.push_str(&format!("{:>label_w$} |", "j\\i"));
    for (k, i) in cols.iter().enumerate() {
        out.push_str(&format!(" {:^w$}", i, w = widths[k]));
    }
    out.push('\n');
    out.push_str(&"-".repeat(label_w + 2 + widths.iter().map(|w| w + 1).sum::<usize>()));
    out.push('\n');
    for (r, j) in body.iter().zip(&rows) {
        out.push_str(&format!("{:>label_w$} |", j));
        for (k, s) in r.iter().enumerate() {
            out.push_str(&format!(" {:^w$}", s, w = widths[k]));
        }
        out.push('\n');
    }
    out
}
