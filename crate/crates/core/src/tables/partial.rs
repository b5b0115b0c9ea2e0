use serde::{Deserialize, Serialize};

use super::TablesError;
use crate::khovanov::{render_grid, AbelianGroup, CellRecord, HomologyTable, TableRecord, SCHEMA_VERSION};

/// Where a partial table is known. Inside the region an absent cell is zero;
/// outside it nothing is claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    Complete,
    /// Columns `i <= i_max` together with rows `j <= j_max`; `j_low` is the lowest row.
    LShape { i_max: i64, j_low: i64, j_max: i64 },
}

impl Region {
    pub fn contains(&self, i: i64, j: i64) -> bool {
        match *self {
            Region::Complete => true,
            Region::LShape { i_max, j_max, .. } => i <= i_max || j <= j_max,
        }
    }

    pub fn shift(&self, di: i64, dj: i64) -> Region {
        match *self {
            Region::Complete => Region::Complete,
            Region::LShape { i_max, j_low, j_max } => {
                Region::LShape { i_max: i_max + di, j_low: j_low + dj, j_max: j_max + dj }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTable {
    pub cells: HomologyTable,
    pub region: Region,
    /// Label of the undetermined block, if any.
    pub residual: Option<char>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialRecord {
    pub schema_version: u32,
    pub cells: Vec<CellRecord>,
    pub determined: Region,
    pub residual: Option<char>,
}

impl PartialTable {
    pub fn complete(cells: HomologyTable) -> Self {
        PartialTable { cells, region: Region::Complete, residual: None }
    }

    pub fn is_determined(&self, i: i64, j: i64) -> bool {
        self.region.contains(i, j)
    }

    /// `None` outside the determined region.
    pub fn get(&self, i: i64, j: i64) -> Option<AbelianGroup> {
        self.is_determined(i, j).then(|| self.cells.get(i, j))
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        PartialTable { cells: self.cells.shift(di, dj), region: self.region.shift(di, dj), residual: self.residual }
    }

    /// Removes `block` as a direct summand, cell by cell.
    pub fn subtract_block(&self, block: &PartialTable) -> Result<Self, TablesError> {
        let mut out = self.cells.clone();
        for (i, j, g) in block.cells.cells() {
            if !self.is_determined(i, j) {
                return Err(TablesError::Undetermined { i, j });
            }
            let rest = self.cells.get(i, j).subtract(g).ok_or(TablesError::NotASummand { i, j })?;
            out.set(i, j, rest);
        }
        Ok(PartialTable { cells: out, region: self.region, residual: self.residual })
    }

    /// First cell of the determined region where `full` differs, with both groups.
    pub fn disagreement(&self, full: &HomologyTable) -> Option<(i64, i64, AbelianGroup, AbelianGroup)> {
        let mut keys: Vec<(i64, i64)> = self.cells.cells().map(|(i, j, _)| (i, j)).collect();
        keys.extend(full.cells().map(|(i, j, _)| (i, j)));
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().filter(|&(i, j)| self.is_determined(i, j)).find_map(|(i, j)| {
            let (mine, theirs) = (self.cells.get(i, j), full.get(i, j));
            (mine != theirs).then_some((i, j, mine, theirs))
        })
    }

    pub fn to_record(&self) -> PartialRecord {
        PartialRecord {
            schema_version: SCHEMA_VERSION,
            cells: self.cells.to_record().cells,
            determined: self.region,
            residual: self.residual,
        }
    }

    pub fn from_record(r: &PartialRecord) -> Self {
        let cells = HomologyTable::from_record(&TableRecord { schema_version: r.schema_version, cells: r.cells.clone() });
        PartialTable { cells, region: r.determined, residual: r.residual }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        Ok(Self::from_record(&serde_json::from_str(text)?))
    }

    /// Undetermined cells show the residual label (or `?`).
    pub fn render_ascii(&self) -> String {
        let i_hi = self.cells.cells().map(|(i, _, _)| i).max().unwrap_or(0);
        let j_hi = self.cells.cells().map(|(_, j, _)| j).max().unwrap_or(0);
        let (cols, j_lo, j_top) = match self.region {
            Region::Complete => {
                if self.cells.is_empty() {
                    return "(zero)\n".to_string();
                }
                let i_lo = self.cells.cells().map(|(i, _, _)| i).min().unwrap();
                (i_lo..=i_hi, self.cells.min_j().unwrap(), j_hi)
            }
            Region::LShape { i_max, j_low, j_max } => {
                (0..=i_hi.max(i_max) + 1, j_low, j_hi.max(j_max) + 2)
            }
        };
        let mark = self.residual.map(String::from).unwrap_or_else(|| "?".to_string());
        render_grid(cols, j_lo, j_top, |i, j| match self.get(i, j) {
            None => mark.clone(),
            Some(g) if g.is_zero() => String::new(),
            Some(g) => g.render(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknot() -> PartialTable {
        PartialTable::complete(HomologyTable::from_cells([
            ((0, -1), AbelianGroup::free(1)),
            ((0, 1), AbelianGroup::free(1)),
        ]))
    }

    #[test]
    fn shift_moves_cells_and_region() {
        let t = unknot().shift(0, 7);
        assert_eq!(t.cells.get(0, 6), AbelianGroup::free(1));
        assert_eq!(t.cells.get(0, 8), AbelianGroup::free(1));
        assert_eq!(unknot().shift(0, 0), unknot());
        let l = PartialTable {
            cells: HomologyTable::from_cells([((2, 5), AbelianGroup::free(1))]),
            region: Region::LShape { i_max: 3, j_low: 1, j_max: 5 },
            residual: Some('Z'),
        };
        let s = l.shift(4, 12);
        assert_eq!(s.cells.get(6, 17), AbelianGroup::free(1));
        assert_eq!(s.region, Region::LShape { i_max: 7, j_low: 13, j_max: 17 });
        assert_eq!(s.shift(-4, -12), l);
    }

    #[test]
    fn subtraction() {
        let t = unknot();
        assert!(t.subtract_block(&t).unwrap().cells.is_empty());
        assert_eq!(t.subtract_block(&PartialTable::complete(HomologyTable::new())).unwrap(), t);
        assert_eq!(
            t.subtract_block(&t.shift(0, 2)),
            Err(TablesError::NotASummand { i: 0, j: 3 })
        );
    }

    #[test]
    fn region_membership() {
        let r = Region::LShape { i_max: 3, j_low: 2, j_max: 6 };
        assert!(r.contains(3, 100));
        assert!(r.contains(9, 6));
        assert!(!r.contains(4, 8));
    }

    #[test]
    fn json_round_trip() {
        let l = PartialTable {
            cells: HomologyTable::from_cells([((3, 7), AbelianGroup::new(0, &[2]))]),
            region: Region::LShape { i_max: 3, j_low: 1, j_max: 5 },
            residual: Some('Z'),
        };
        let text = l.to_json();
        assert!(text.contains("\"kind\": \"l_shape\""));
        assert_eq!(PartialTable::from_json(&text).unwrap(), l);
    }
}
