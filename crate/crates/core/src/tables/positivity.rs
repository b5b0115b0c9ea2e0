use std::fmt;

use super::golden::golden;
use super::shape::{lshape_pattern, n_member_key, C_PATTERNS};
use crate::garside3::NMember;
use crate::khovanov::{AbelianGroup, HomologyTable};

/// Which of the ten patterns a table fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    N(NMember),
    C1,
    C2,
    C3,
    C4,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::N(m) => write!(f, "{}", crate::garside3::FamilyTag::N(*m)),
            PatternKind::C1 => f.write_str("C1"),
            PatternKind::C2 => f.write_str("C2"),
            PatternKind::C3 => f.write_str("C3"),
            PatternKind::C4 => f.write_str("C4"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Compatible { kind: PatternKind, j_low: i64 },
    /// `expected` is what the closest pattern predicts at the witness cell.
    Incompatible { i: i64, j: i64, found: AbelianGroup, expected: AbelianGroup },
}

impl Verdict {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Verdict::Compatible { .. })
    }
}

/// Checks whether a full homology table could come from a closed positive 3-braid.
pub fn matches_positive3(t: &HomologyTable) -> Verdict {
    if let Some((i, j, g)) = t.cells().find(|&(i, _, _)| i < 0) {
        return Verdict::Incompatible { i, j, found: g.clone(), expected: AbelianGroup::zero() };
    }
    let Some(j_low) = t.min_j() else {
        // every link has nonzero homology
        return Verdict::Incompatible { i: 0, j: 0, found: AbelianGroup::zero(), expected: AbelianGroup::free(1) };
    };
    for m in NMember::ALL {
        if golden(n_member_key(m)) == Some(t) {
            return Verdict::Compatible { kind: PatternKind::N(m), j_low };
        }
    }
    let kinds = [PatternKind::C1, PatternKind::C2, PatternKind::C3, PatternKind::C4];
    let mut best: Option<(usize, (i64, i64, AbelianGroup, AbelianGroup))> = None;
    for (kind, (label, _)) in kinds.into_iter().zip(C_PATTERNS) {
        let pattern = lshape_pattern(label, j_low);
        let mut misses = Vec::new();
        let mut keys: Vec<(i64, i64)> = pattern.cells.cells().map(|(i, j, _)| (i, j)).collect();
        keys.extend(t.cells().map(|(i, j, _)| (i, j)));
        keys.sort_unstable();
        keys.dedup();
        for (i, j) in keys.into_iter().filter(|&(i, j)| pattern.is_determined(i, j)) {
            let (want, have) = (pattern.cells.get(i, j), t.get(i, j));
            if want != have {
                misses.push((i, j, have, want));
            }
        }
        if misses.is_empty() {
            return Verdict::Compatible { kind, j_low };
        }
        if best.as_ref().is_none_or(|(n, _)| misses.len() < *n) {
            best = Some((misses.len(), misses.swap_remove(0)));
        }
    }
    let (_, (i, j, found, expected)) = best.expect("four patterns tried");
    Verdict::Incompatible { i, j, found, expected }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_are_compatible() {
        let t = golden("D a").unwrap();
        assert_eq!(matches_positive3(t), Verdict::Compatible { kind: PatternKind::C4, j_low: 1 });
        let t = golden("a a a b b").unwrap();
        assert_eq!(matches_positive3(t), Verdict::Compatible { kind: PatternKind::C2, j_low: 2 });
        let t = golden("a b").unwrap();
        assert_eq!(matches_positive3(t), Verdict::Compatible { kind: PatternKind::N(NMember::S1S2), j_low: -1 });
    }

    #[test]
    fn negative_column_is_rejected() {
        let mut t = golden("D a").unwrap().clone();
        t.set(-1, 1, AbelianGroup::free(1));
        assert!(matches!(matches_positive3(&t), Verdict::Incompatible { i: -1, j: 1, .. }));
    }
}
