use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::braidword::BraidWord;
use crate::khovanov::{CellRecord, HomologyTable, TableRecord, SCHEMA_VERSION};

const GOLDEN_JSON: &str = include_str!("../../data/golden.json");

/// A reference table for the closure of a 3-braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub word: String,
    pub table: HomologyTable,
}

#[derive(Serialize, Deserialize)]
struct GoldenFile {
    schema_version: u32,
    strands: usize,
    tables: Vec<GoldenEntry>,
}

#[derive(Serialize, Deserialize)]
struct GoldenEntry {
    word: String,
    cells: Vec<CellRecord>,
}

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error("golden file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("golden file: unsupported schema {0}")]
    Schema(u32),
    #[error("golden file: bad word {word:?}: {reason}")]
    Word { word: String, reason: String },
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenTable>, GoldenError> {
    let f: GoldenFile = serde_json::from_str(text)?;
    if f.schema_version != SCHEMA_VERSION {
        return Err(GoldenError::Schema(f.schema_version));
    }
    f.tables
        .into_iter()
        .map(|e| {
            BraidWord::parse(&e.word, f.strands)
                .map_err(|err| GoldenError::Word { word: e.word.clone(), reason: err.to_string() })?;
            let record = TableRecord { schema_version: SCHEMA_VERSION, cells: e.cells };
            Ok(GoldenTable { word: e.word, table: HomologyTable::from_record(&record) })
        })
        .collect()
}

pub fn render_golden(tables: &[GoldenTable]) -> String {
    let f = GoldenFile {
        schema_version: SCHEMA_VERSION,
        strands: 3,
        tables: tables
            .iter()
            .map(|g| GoldenEntry { word: g.word.clone(), cells: g.table.to_record().cells })
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("plain data serialises")
}

/// The bundled reference tables.
pub fn golden_tables() -> &'static [GoldenTable] {
    static CELL: OnceLock<Vec<GoldenTable>> = OnceLock::new();
    CELL.get_or_init(|| parse_golden(GOLDEN_JSON).expect("bundled golden data is valid"))
}

/// Looks a table up by braid word; spelling does not matter, only the letters.
pub fn golden(word: &str) -> Option<&'static HomologyTable> {
    let want = BraidWord::parse(word, 3).ok()?;
    golden_tables()
        .iter()
        .find(|g| BraidWord::parse(&g.word, 3).map(|w| w.letters() == want.letters()).unwrap_or(false))
        .map(|g| &g.table)
}
