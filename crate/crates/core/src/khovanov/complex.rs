//! The enhanced-state chain complex.
//!
//! Generators are states (bit `k` set when crossing `k` is B-smoothed) with
//! a sign on every circle. A generator sits in degree
//! `i = #B - n` and `j = i + w + (#plus - #minus)`. Within a block the order is
//! by state (as an integer), then by the set of minus circles (as an integer).
//! The differential flips one A to B; merges send `++ -> +`, `+- , -+ -> -`,
//! `-- -> 0` and splits send `+ -> +- + -+`, `- -> --`, each with the sign
//! `(-1)^{number of B-smoothings after the flipped crossing}`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::group::AbelianGroup;
use super::smith::{factor_to_u64, smith_normal_form, IntegerMatrix, SmithForm};
use super::table::HomologyTable;
use super::KhovanovError;
use crate::diagram::LinkDiagram;

pub struct KhovanovComplex<'a> {
    diagram: &'a LinkDiagram,
    c: usize,
    n: i64,
    w: i64,
    edges: usize,
    free: usize,
    // circle label of each edge, state-major
    labels: Vec<u8>,
    circles: Vec<u8>,
    binom: Vec<Vec<u64>>,
}

struct Block {
    states: Vec<u32>,
    minus: Vec<u8>,
    // offset of each state's generators, indexed by state; u32::MAX if absent
    offset: Vec<u32>,
    dim: usize,
}

impl<'a> KhovanovComplex<'a> {
    pub fn new(diagram: &'a LinkDiagram, max_crossings: usize) -> Result<Self, KhovanovError> {
        let c = diagram.crossing_count();
        if c > max_crossings || c > 30 {
            return Err(KhovanovError::TooManyCrossings { crossings: c, limit: max_crossings.min(30) });
        }
        let edges = diagram.edge_count();
        let free = diagram.free_loops();
        if edges + free > 63 {
            return Err(KhovanovError::TooManyCrossings { crossings: c, limit: 30 });
        }
        let mut labels = vec![0u8; edges << c];
        let mut circles = vec![0u8; 1 << c];
        for s in 0..1usize << c {
            let (lab, r) = diagram.smoothing(|k| s >> k & 1 == 1);
            for (e, l) in lab.into_iter().enumerate() {
                labels[s * edges + e] = l as u8;
            }
            circles[s] = r as u8;
        }
        let mut binom = vec![vec![0u64; 65]; 65];
        for a in 0..65 {
            binom[a][0] = 1;
            for b in 1..=a {
                binom[a][b] = binom[a - 1][b - 1] + if b < a { binom[a - 1][b] } else { 0 };
            }
        }
        Ok(KhovanovComplex {
            diagram,
            c,
            n: diagram.negative_count() as i64,
            w: diagram.writhe(),
            edges,
            free,
            labels,
            circles,
            binom,
        })
    }

    pub fn i_range(&self) -> std::ops::RangeInclusive<i64> {
        -self.n..=self.c as i64 - self.n
    }

    pub fn j_values(&self) -> Vec<i64> {
        let mut js = BTreeSet::new();
        for s in 0..1usize << self.c {
            let i = s.count_ones() as i64 - self.n;
            let r = self.circles[s] as i64;
            let mut j = i + self.w - r;
            while j <= i + self.w + r {
                js.insert(j);
                j += 2;
            }
        }
        js.into_iter().collect()
    }

    fn block(&self, i: i64, j: i64) -> Block {
        let mut b = Block { states: Vec::new(), minus: Vec::new(), offset: vec![u32::MAX; 1 << self.c], dim: 0 };
        let pop = i + self.n;
        if pop < 0 || pop > self.c as i64 {
            return b;
        }
        let tau = j - i - self.w;
        for s in 0..1usize << self.c {
            if s.count_ones() as i64 != pop {
                continue;
            }
            let r = self.circles[s] as i64;
            if (r - tau).rem_euclid(2) != 0 || tau.abs() > r {
                continue;
            }
            let m = (r - tau) / 2;
            b.offset[s] = b.dim as u32;
            b.states.push(s as u32);
            b.minus.push(m as u8);
            b.dim += self.binom[r as usize][m as usize] as usize;
        }
        b
    }

    pub fn dim(&self, i: i64, j: i64) -> usize {
        self.block(i, j).dim
    }

    fn rank_of(&self, mask: u64) -> u64 {
        let mut rank = 0;
        let mut t = 0;
        let mut m = mask;
        while m != 0 {
            let pos = m.trailing_zeros() as usize;
            t += 1;
            rank += self.binom[pos][t];
            m &= m - 1;
        }
        rank
    }

    /// The differential `C^{i,j} -> C^{i+1,j}`.
    pub fn differential(&self, i: i64, j: i64) -> IntegerMatrix {
        let src = self.block(i, j);
        let dst = self.block(i + 1, j);
        self.differential_between(&src, &dst)
    }

    fn differential_between(&self, src: &Block, dst: &Block) -> IntegerMatrix {
        let e = self.edges;
        let mut cols: Vec<Vec<(u32, i64)>> = Vec::with_capacity(src.dim);
        let mut map = [0u8; 64];
        for (&s, &m) in src.states.iter().zip(&src.minus) {
            let s = s as usize;
            let r = self.circles[s] as usize;
            let masks = masks_with(r, m as u32);
            let base = cols.len();
            cols.extend((0..masks.len()).map(|_| Vec::new()));
            if dst.dim == 0 {
                continue;
            }
            let ls = &self.labels[s * e..(s + 1) * e];
            let rs_edges = r - self.free;
            for k in 0..self.c {
                if s >> k & 1 == 1 {
                    continue;
                }
                let t = s | 1 << k;
                if dst.offset[t] == u32::MAX {
                    continue;
                }
                let off = dst.offset[t] as u64;
                let lt = &self.labels[t * e..(t + 1) * e];
                let rt_edges = self.circles[t] as usize - self.free;
                let sign: i64 = if (s >> (k + 1)).count_ones().is_multiple_of(2) { 1 } else { -1 };
                let [a, b, cc, _] = self.diagram.crossings()[k].edges;
                for (x, &lab) in ls.iter().enumerate() {
                    map[lab as usize] = lt[x];
                }
                for f in 0..self.free {
                    map[rs_edges + f] = (rt_edges + f) as u8;
                }
                let x = ls[a] as usize;
                let y = ls[cc] as usize;
                let keep: u64 = ((1u64 << r) - 1) & !(1u64 << x) & !(1u64 << y);
                let carry = |mask: u64| -> u64 {
                    let mut out = 0u64;
                    let mut mm = mask & keep;
                    while mm != 0 {
                        let p = mm.trailing_zeros() as usize;
                        out |= 1u64 << map[p];
                        mm &= mm - 1;
                    }
                    out
                };
                for (idx, &mask) in masks.iter().enumerate() {
                    let col = &mut cols[base + idx];
                    let rest = carry(mask);
                    if x != y {
                        let z = lt[a] as u64;
                        let (mx, my) = (mask >> x & 1, mask >> y & 1);
                        if mx == 1 && my == 1 {
                            continue;
                        }
                        let tm = rest | ((mx | my) << z);
                        col.push(((off + self.rank_of(tm)) as u32, sign));
                    } else {
                        let z1 = lt[a] as u64;
                        let z2 = lt[b] as u64;
                        if mask >> x & 1 == 1 {
                            let tm = rest | 1 << z1 | 1 << z2;
                            col.push(((off + self.rank_of(tm)) as u32, sign));
                        } else {
                            col.push(((off + self.rank_of(rest | 1 << z2)) as u32, sign));
                            col.push(((off + self.rank_of(rest | 1 << z1)) as u32, sign));
                        }
                    }
                }
            }
        }
        IntegerMatrix::from_columns(dst.dim, cols)
    }

    pub fn homology(&self) -> Result<HomologyTable, KhovanovError> {
        let js = self.j_values();
        let per_j: Vec<Result<Vec<(i64, i64, AbelianGroup)>, KhovanovError>> =
            js.par_iter().map(|&j| self.homology_at(j)).collect();
        let mut t = HomologyTable::new();
        for cells in per_j {
            for (i, j, g) in cells? {
                t.set(i, j, g);
            }
        }
        Ok(t)
    }

    fn homology_at(&self, j: i64) -> Result<Vec<(i64, i64, AbelianGroup)>, KhovanovError> {
        let is: Vec<i64> = self.i_range().collect();
        let blocks: Vec<Block> = is.iter().map(|&i| self.block(i, j)).collect();
        let empty = SmithForm { factors: Vec::new() };
        // snf[k] is the form of the map out of degree is[k]
        let snf: Vec<SmithForm> = (0..is.len())
            .map(|k| {
                if k + 1 < is.len() && blocks[k].dim > 0 && blocks[k + 1].dim > 0 {
                    smith_normal_form(&self.differential_between(&blocks[k], &blocks[k + 1]))
                } else {
                    empty.clone()
                }
            })
            .collect();
        let mut out = Vec::new();
        for k in 0..is.len() {
            let dim = blocks[k].dim;
            if dim == 0 {
                continue;
            }
            let into = if k > 0 { &snf[k - 1] } else { &empty };
            let rank = dim - snf[k].rank() - into.rank();
            let torsion = into
                .torsion()
                .map(|d| factor_to_u64(d).ok_or(KhovanovError::TorsionTooLarge { i: is[k], j }))
                .collect::<Result<Vec<u64>, _>>()?;
            let g = AbelianGroup::new(rank as u64, &torsion);
            if !g.is_zero() {
                out.push((is[k], j, g));
            }
        }
        Ok(out)
    }
}

fn masks_with(r: usize, m: u32) -> Vec<u64> {
    if m == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut v: u64 = (1u64 << m) - 1;
    while v < 1u64 << r {
        out.push(v);
        // next integer with the same number of set bits
        let t = v | (v - 1);
        v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_order() {
        assert_eq!(masks_with(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_with(3, 3), vec![0b111]);
        assert_eq!(masks_with(2, 0), vec![0]);
    }
}
