use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^rank + Z/t1 + Z/t2 + ...` with the
/// torsion stored as invariant factors `1 < t1 | t2 | ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// Normalises any list of cyclic orders (entries 0 and 1 are dropped).
    pub fn new(rank: u64, cyclic: &[u64]) -> Self {
        let parts: Vec<u64> = cyclic.iter().filter(|&&t| t > 1).flat_map(|&t| prime_powers(t)).collect();
        AbelianGroup { rank, torsion: invariant_factors(parts) }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut cyc = self.torsion.clone();
        cyc.extend_from_slice(&other.torsion);
        AbelianGroup::new(self.rank + other.rank, &cyc)
    }

    /// The complement `c` with `self = other + c`, if `other` is a summand.
    pub fn subtract(&self, other: &AbelianGroup) -> Option<AbelianGroup> {
        if other.rank > self.rank {
            return None;
        }
        let mut mine = self.primary_parts();
        for q in other.primary_parts() {
            let pos = mine.iter().position(|&x| x == q)?;
            mine.swap_remove(pos);
        }
        Some(AbelianGroup { rank: self.rank - other.rank, torsion: invariant_factors(mine) })
    }

    pub fn primary_parts(&self) -> Vec<u64> {
        self.torsion.iter().flat_map(|&t| prime_powers(t)).collect()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for &t in &self.torsion {
            *counts.entry(t).or_default() += 1;
        }
        for (t, n) in counts {
            if n == 1 {
                parts.push(format!("Z{t}"));
            } else {
                parts.push(format!("Z{t}^{n}"));
            }
        }
        parts.join("+")
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn prime_powers(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut q = 1;
            while n.is_multiple_of(p) {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn smallest_prime(q: u64) -> u64 {
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    p
}

fn invariant_factors(parts: Vec<u64>) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for q in parts {
        by_prime.entry(smallest_prime(q)).or_default().push(q);
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (slot, q) in out.iter_mut().zip(powers.iter()) {
            *slot *= q;
        }
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_torsion() {
        assert_eq!(AbelianGroup::new(1, &[2, 3]).torsion, vec![6]);
        assert_eq!(AbelianGroup::new(0, &[4, 2, 1, 0]).torsion, vec![2, 4]);
        assert_eq!(AbelianGroup::new(0, &[6, 4]).torsion, vec![2, 12]);
    }

    #[test]
    fn sums_and_differences() {
        let a = AbelianGroup::new(2, &[2]);
        let b = AbelianGroup::new(1, &[2, 2]);
        let s = a.direct_sum(&b);
        assert_eq!(s, AbelianGroup::new(3, &[2, 2, 2]));
        assert_eq!(s.subtract(&b), Some(a.clone()));
        assert_eq!(a.subtract(&b), None);
        assert_eq!(AbelianGroup::new(0, &[4]).subtract(&AbelianGroup::new(0, &[2])), None);
    }

    #[test]
    fn renders() {
        assert_eq!(AbelianGroup::zero().render(), "0");
        assert_eq!(AbelianGroup::new(1, &[2]).render(), "Z+Z2");
        assert_eq!(AbelianGroup::new(2, &[2, 2]).render(), "Z^2+Z2^2");
    }
}
