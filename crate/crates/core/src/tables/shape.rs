use super::golden::golden;
use super::partial::{PartialTable, Region};
use super::TablesError;
use crate::garside3::{classify_family, conjugate_to_lambda, FamilyTag, NMember, NormalForm3};
use crate::khovanov::{AbelianGroup, HomologyTable};

// (i, j - j_low, rank, torsion) on the L-shaped region of each C family
const C1_CELLS: &[(i64, i64, u64, &[u64])] = &[
    (0, 0, 1, &[]),
    (0, 2, 2, &[]),
    (0, 4, 1, &[]),
    (2, 4, 1, &[]),
    (2, 6, 1, &[]),
    (3, 6, 0, &[2]),
    (3, 8, 1, &[2]),
    (3, 10, 1, &[]),
];
const C2_CELLS: &[(i64, i64, u64, &[u64])] =
    &[(0, 0, 1, &[]), (0, 2, 1, &[]), (2, 4, 2, &[]), (2, 6, 1, &[]), (3, 6, 0, &[2]), (3, 8, 1, &[])];
const C3_CELLS: &[(i64, i64, u64, &[u64])] =
    &[(0, 0, 1, &[]), (0, 2, 1, &[]), (2, 4, 2, &[]), (3, 6, 0, &[2, 2]), (3, 8, 2, &[])];
const C4_CELLS: &[(i64, i64, u64, &[u64])] =
    &[(0, 0, 1, &[]), (0, 2, 1, &[]), (2, 4, 1, &[]), (3, 6, 0, &[2]), (3, 8, 1, &[])];

/// The four L-shaped patterns, keyed by residual block label.
pub(crate) const C_PATTERNS: [(char, &[(i64, i64, u64, &[u64])]); 4] =
    [('W', C1_CELLS), ('X', C2_CELLS), ('Y', C3_CELLS), ('Z', C4_CELLS)];

pub(crate) fn lshape_pattern(label: char, j_low: i64) -> PartialTable {
    let cells = C_PATTERNS.iter().find(|(l, _)| *l == label).expect("known block label").1;
    PartialTable {
        cells: HomologyTable::from_cells(
            cells.iter().map(|&(i, dj, r, t)| ((i, j_low + dj), AbelianGroup::new(r, t))),
        ),
        region: Region::LShape { i_max: 3, j_low, j_max: j_low + 4 },
        residual: Some(label),
    }
}

pub(crate) fn n_member_key(m: NMember) -> &'static str {
    match m {
        NMember::Trivial => "",
        NMember::S1 => "a",
        NMember::S1Sq => "a a",
        NMember::S1S2 => "a b",
        NMember::S1SqS2Sq => "a a b b",
        NMember::Delta => "D",
    }
}

fn bundled(word: &str) -> PartialTable {
    PartialTable::complete(golden(word).expect("bundled table present").clone())
}

/// The table promised for a family tag and the length of a positive word.
pub fn lshape_theorem1(tag: FamilyTag, word_length: u64) -> PartialTable {
    match tag {
        FamilyTag::N(m) => bundled(n_member_key(m)),
        _ => lshape_pattern(tag.block_label().expect("C family"), word_length as i64 - 3),
    }
}

/// The reduced word `r(w)` of a positive 3-braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RWord {
    One,
    S1,
    S1S2,
}

impl RWord {
    pub fn length(self) -> u64 {
        match self {
            RWord::One => 0,
            RWord::S1 => 1,
            RWord::S1S2 => 2,
        }
    }

    fn key(self) -> &'static str {
        match self {
            RWord::One => "",
            RWord::S1 => "a",
            RWord::S1S2 => "a b",
        }
    }

    fn delta_sq_key(self) -> &'static str {
        match self {
            RWord::One => "D D",
            RWord::S1 => "D D a",
            RWord::S1S2 => "D D a b",
        }
    }
}

pub fn r_of(nf: &NormalForm3) -> Result<RWord, TablesError> {
    if !nf.is_positive() {
        return Err(TablesError::NotPositiveWord);
    }
    let sl = nf.to_word().syllable_length();
    Ok(match sl {
        0 => RWord::One,
        1 => RWord::S1,
        _ => RWord::S1S2,
    })
}

/// Transports the table of `w` to the table of `Delta^2 w`.
pub fn jaeger_step(t: &PartialTable, word_length: u64, r: RWord) -> Result<PartialTable, TablesError> {
    let s = word_length as i64 - r.length() as i64;
    let m = t.subtract_block(&bundled(r.key()).shift(0, s))?;
    let moved = m.shift(4, 12);
    let base = bundled(r.delta_sq_key()).shift(0, s);
    let region = match t.region {
        Region::Complete => Region::Complete,
        Region::LShape { i_max, j_low, j_max } => Region::LShape { i_max: i_max + 4, j_low: j_low + 6, j_max: j_max + 12 },
    };
    Ok(PartialTable { cells: base.cells.direct_sum(&moved.cells), region, residual: t.residual })
}

/// The iterated construction: seed with `gamma` from `beta = Delta^{2q} gamma`
/// and apply the Jaeger step `q` times.
pub fn extended_shape(nf: &NormalForm3) -> Result<PartialTable, TablesError> {
    let rep = conjugate_to_lambda(nf).rep;
    let p = rep.p();
    if p < 0 {
        return Err(TablesError::NotPositive { summit_infimum: p });
    }
    let q = p / 2;
    let gamma = NormalForm3::new(p - 2 * q, rep.first_gen(), rep.exponents().to_vec())
        .expect("a representative stays valid without Delta^2");
    let tag = classify_family(&gamma).map_err(|_| TablesError::NotPositive { summit_infimum: p })?;
    let mut len = gamma.word_length();
    let mut t = lshape_theorem1(tag, len);
    let mut word = gamma;
    for _ in 0..q {
        t = jaeger_step(&t, len, r_of(&word)?)?;
        word = NormalForm3::new(word.p() + 2, word.first_gen(), word.exponents().to_vec())
            .expect("Delta^2 is central");
        len += 6;
    }
    Ok(t)
}

/// Closed pattern for `Delta^p`, `p > 0` even: two cells at the bottom of
/// column 0, then `p/2 - 1` repeated blocks and a final block, each one four
/// columns right and six degrees up from the last.
pub fn delta_power_even_table(p: u64) -> HomologyTable {
    assert!(p > 0 && p.is_multiple_of(2), "p must be positive and even");
    const REPEATED: &[(i64, i64, u64, &[u64])] =
        &[(0, 0, 1, &[]), (1, 2, 0, &[2]), (2, 2, 1, &[]), (1, 4, 1, &[]), (2, 4, 1, &[]), (3, 6, 1, &[]), (3, 8, 1, &[])];
    const FINAL: &[(i64, i64, u64, &[u64])] =
        &[(0, 0, 1, &[]), (1, 2, 0, &[2]), (2, 2, 1, &[]), (1, 4, 1, &[]), (2, 4, 3, &[]), (2, 6, 2, &[])];
    let j_low = 3 * p as i64 - 3;
    let mut t = HomologyTable::from_cells([((0, j_low), AbelianGroup::free(1)), ((0, j_low + 2), AbelianGroup::free(1))]);
    let blocks = p as i64 / 2;
    for b in 0..blocks {
        let (ai, aj) = (2 + 4 * b, j_low + 4 + 6 * b);
        let cells = if b + 1 == blocks { FINAL } else { REPEATED };
        for &(i, j, r, tor) in cells {
            t.add(ai + i, aj + j, &AbelianGroup::new(r, tor));
        }
    }
    t
}
