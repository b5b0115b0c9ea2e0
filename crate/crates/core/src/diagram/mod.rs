//! Oriented link diagrams in planar-diagram form.
//!
//! A crossing lists its four edges counter-clockwise starting from the
//! incoming under-strand, `[a, b, c, d]`, so the under-strand runs `a -> c`
//! and the over-strand joins `b` and `d`. It is positive when the over-strand
//! runs `d -> b`. Components without crossings are kept as a count.
//!
//! The A-smoothing at `[a, b, c, d]` joins `a` with `b` and `c` with `d`;
//! the B-smoothing joins `a` with `d` and `b` with `c`.

mod builder;
mod rational;

use std::fmt::Write as _;

use thiserror::Error;

use crate::braidword::BraidWord;

pub(crate) use builder::{Builder, End};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("empty rational code")]
    EmptyCode,
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edges: [usize; 4],
    pub sign: i8,
}

impl Crossing {
    fn incoming(&self) -> [usize; 2] {
        let over_in = if self.sign > 0 { self.edges[3] } else { self.edges[1] };
        [self.edges[0], over_in]
    }

    fn outgoing(&self) -> [usize; 2] {
        let over_out = if self.sign > 0 { self.edges[1] } else { self.edges[3] };
        [self.edges[2], over_out]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    edge_count: usize,
    free_loops: usize,
}

impl LinkDiagram {
    pub fn from_parts(crossings: Vec<Crossing>, edge_count: usize, free_loops: usize) -> Result<Self, DiagramError> {
        let mut heads = vec![0u8; edge_count];
        let mut tails = vec![0u8; edge_count];
        for (k, c) in crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::Malformed(format!("crossing {k} has sign {}", c.sign)));
            }
            for e in c.edges {
                if e >= edge_count {
                    return Err(DiagramError::Malformed(format!("crossing {k} names edge {e}")));
                }
            }
            for e in c.incoming() {
                heads[e] += 1;
            }
            for e in c.outgoing() {
                tails[e] += 1;
            }
        }
        if let Some(e) = (0..edge_count).find(|&e| heads[e] != 1 || tails[e] != 1) {
            return Err(DiagramError::Malformed(format!(
                "edge {e} must enter one crossing and leave one (enters {}, leaves {})",
                heads[e], tails[e]
            )));
        }
        Ok(LinkDiagram { crossings, edge_count, free_loops })
    }

    /// Closure of a braid word; crossings follow the letters, strands run upwards.
    pub fn from_braid(word: &BraidWord) -> Self {
        let mut b = Builder::default();
        let bottom: Vec<End> = (0..word.strands()).map(|_| b.node()).collect();
        let mut cur = bottom.clone();
        for l in word.letters() {
            b.braid_letter(&mut cur, l.gen as usize - 1, !l.inverse);
        }
        for (top, bot) in cur.into_iter().zip(bottom) {
            b.wire(top, bot);
        }
        b.finish()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn positive_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign > 0).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossings.len() - self.positive_count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Circle label of every edge and the number of circles (free loops
    /// included, numbered last). Labels follow first appearance by edge id.
    pub fn smoothing(&self, is_b: impl Fn(usize) -> bool) -> (Vec<u32>, usize) {
        let mut uf = UnionFind::new(self.edge_count);
        for (k, c) in self.crossings.iter().enumerate() {
            let [a, b, cc, d] = c.edges;
            if is_b(k) {
                uf.union(a, d);
                uf.union(b, cc);
            } else {
                uf.union(a, b);
                uf.union(cc, d);
            }
        }
        let (labels, n) = uf.labels();
        (labels, n + self.free_loops)
    }

    /// Number of circles of the state, `state[k]` true meaning a B-smoothing at crossing `k`.
    pub fn circle_count(&self, state: &[bool]) -> usize {
        assert_eq!(state.len(), self.crossings.len(), "state length");
        self.smoothing(|k| state[k]).1
    }

    pub fn circles_all_a(&self) -> usize {
        self.smoothing(|_| false).1
    }

    pub fn circles_all_b(&self) -> usize {
        self.smoothing(|_| true).1
    }

    /// Quantum degrees of the all-A and all-B enhanced extremes.
    pub fn j_bounds(&self) -> (i64, i64) {
        let c = self.crossing_count() as i64;
        let p = self.positive_count() as i64;
        let n = self.negative_count() as i64;
        (c - 3 * n - self.circles_all_a() as i64, -c + 3 * p + self.circles_all_b() as i64)
    }

    /// No crossing has both of its A-arcs on one circle of the all-A state.
    pub fn is_a_adequate(&self) -> bool {
        let (labels, _) = self.smoothing(|_| false);
        self.crossings.iter().all(|c| labels[c.edges[0]] != labels[c.edges[2]])
    }

    /// Component label of every edge and the number of components.
    pub fn components(&self) -> (Vec<u32>, usize) {
        let mut uf = UnionFind::new(self.edge_count);
        for c in &self.crossings {
            uf.union(c.edges[0], c.edges[2]);
            uf.union(c.edges[1], c.edges[3]);
        }
        let (labels, n) = uf.labels();
        (labels, n + self.free_loops)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    /// Half the signed count of crossings between different components.
    pub fn linking_number(&self) -> i64 {
        let (comp, _) = self.components();
        let twice: i64 = self
            .crossings
            .iter()
            .filter(|c| comp[c.edges[0]] != comp[c.edges[1]])
            .map(|c| c.sign as i64)
            .sum();
        twice / 2
    }

    /// Same diagram with the orientation of one component reversed.
    pub fn with_component_reversed(&self, component: u32) -> Self {
        let (comp, _) = self.components();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let under = comp[c.edges[0]] == component;
                let over = comp[c.edges[1]] == component;
                let [a, b, cc, d] = c.edges;
                let edges = if under { [cc, d, a, b] } else { c.edges };
                let sign = if under != over { -c.sign } else { c.sign };
                Crossing { edges, sign }
            })
            .collect();
        LinkDiagram { crossings, edge_count: self.edge_count, free_loops: self.free_loops }
    }

    /// Same diagram with crossing `k` moved to position `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.crossings.len());
        let mut crossings = self.crossings.clone();
        for (k, &to) in perm.iter().enumerate() {
            crossings[to] = self.crossings[k];
        }
        LinkDiagram { crossings, edge_count: self.edge_count, free_loops: self.free_loops }
    }

    pub fn to_pd_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# pd edges={} free_loops={}", self.edge_count, self.free_loops);
        for c in &self.crossings {
            let [a, b, cc, d] = c.edges;
            let _ = writeln!(s, "X {a} {b} {cc} {d} {}", if c.sign > 0 { "+" } else { "-" });
        }
        s
    }

    pub fn from_pd_text(text: &str) -> Result<Self, DiagramError> {
        let bad = |m: String| DiagramError::Malformed(m);
        let mut edge_count = None;
        let mut free_loops = 0;
        let mut crossings = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(header) = line.strip_prefix('#') {
                for kv in header.split_whitespace() {
                    match kv.split_once('=') {
                        Some(("edges", v)) => edge_count = Some(v.parse().map_err(|_| bad(format!("line {no}: edges")))?),
                        Some(("free_loops", v)) => {
                            free_loops = v.parse().map_err(|_| bad(format!("line {no}: free_loops")))?
                        }
                        _ => {}
                    }
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 6 || f[0] != "X" {
                return Err(bad(format!("line {no}: expected `X a b c d +|-`")));
            }
            let mut edges = [0usize; 4];
            for (slot, tok) in edges.iter_mut().zip(&f[1..5]) {
                *slot = tok.parse().map_err(|_| bad(format!("line {no}: edge `{tok}`")))?;
            }
            let sign = match f[5] {
                "+" => 1,
                "-" => -1,
                t => return Err(bad(format!("line {no}: sign `{t}`"))),
            };
            crossings.push(Crossing { edges, sign });
        }
        let edge_count = edge_count
            .unwrap_or_else(|| crossings.iter().flat_map(|c| c.edges).max().map_or(0, |m| m + 1));
        Self::from_parts(crossings, edge_count, free_loops)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Dense labels in order of first appearance.
    pub fn labels(&mut self) -> (Vec<u32>, usize) {
        let n = self.parent.len();
        let mut root_label = vec![u32::MAX; n];
        let mut out = vec![0u32; n];
        let mut next = 0u32;
        for x in 0..n {
            let r = self.find(x);
            if root_label[r] == u32::MAX {
                root_label[r] = next;
                next += 1;
            }
            out[x] = root_label[r];
        }
        (out, next as usize)
    }
}
