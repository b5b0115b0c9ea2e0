//! Assembling diagrams from geometric pieces.
//!
//! A crossing has four slots in counter-clockwise order: `SW, SE, NE, NW`.
//! Wires join slots and auxiliary nodes (the bends of cups, caps and closing
//! arcs); a node carries exactly two wires. Resolving merges wire chains into
//! edges and orients each component by walking it from its lowest edge.

use super::{Crossing, LinkDiagram};

pub(crate) const SW: u8 = 0;
pub(crate) const SE: u8 = 1;
pub(crate) const NE: u8 = 2;
pub(crate) const NW: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum End {
    Port(usize, u8),
    Node(usize),
}

#[derive(Debug, Default)]
pub(crate) struct Builder {
    // true when the SW-NE strand is the over strand
    over_sw_ne: Vec<bool>,
    wires: Vec<(End, End)>,
    nodes: usize,
}

impl Builder {
    pub fn node(&mut self) -> End {
        self.nodes += 1;
        End::Node(self.nodes - 1)
    }

    pub fn crossing(&mut self, over_sw_ne: bool) -> usize {
        self.over_sw_ne.push(over_sw_ne);
        self.over_sw_ne.len() - 1
    }

    pub fn wire(&mut self, from: End, to: End) {
        self.wires.push((from, to));
    }

    /// Braid-style crossing between columns `x` and `x + 1`, entered from below.
    /// A positive letter puts the strand from the lower left on top.
    pub fn braid_letter(&mut self, cur: &mut [End], x: usize, positive: bool) {
        let c = self.crossing(positive);
        self.wire(cur[x], End::Port(c, SW));
        self.wire(cur[x + 1], End::Port(c, SE));
        cur[x] = End::Port(c, NW);
        cur[x + 1] = End::Port(c, NE);
    }

    pub fn finish(self) -> LinkDiagram {
        let nc = self.over_sw_ne.len();
        let mut slot_wire = vec![[usize::MAX; 4]; nc];
        let mut node_wires: Vec<Vec<usize>> = vec![Vec::new(); self.nodes];
        for (w, &(a, b)) in self.wires.iter().enumerate() {
            for e in [a, b] {
                match e {
                    End::Port(c, s) => {
                        assert_eq!(slot_wire[c][s as usize], usize::MAX, "slot used twice");
                        slot_wire[c][s as usize] = w;
                    }
                    End::Node(n) => node_wires[n].push(w),
                }
            }
        }
        assert!(slot_wire.iter().flatten().all(|&w| w != usize::MAX), "dangling crossing slot");
        assert!(node_wires.iter().all(|v| v.len() == 2), "node without exactly two wires");

        // follow a wire out of `from`, through nodes, until a crossing slot
        let walk = |start: usize, from_side: usize| -> (Option<(usize, u8)>, Vec<usize>) {
            let mut w = start;
            let mut side = from_side;
            let mut seen = vec![start];
            loop {
                let e = if side == 1 { self.wires[w].1 } else { self.wires[w].0 };
                match e {
                    End::Port(c, s) => return (Some((c, s)), seen),
                    End::Node(n) => {
                        let ws = &node_wires[n];
                        // leave through the other attachment of the node
                        let (next, next_side) = if ws[0] == w && ws[1] == w {
                            (w, 1 - side)
                        } else {
                            let nx = if ws[0] == w { ws[1] } else { ws[0] };
                            let s = if self.wires[nx].0 == e { 1 } else { 0 };
                            (nx, s)
                        };
                        if next == start {
                            return (None, seen);
                        }
                        seen.push(next);
                        w = next;
                        side = next_side;
                    }
                }
            }
        };

        let mut wire_done = vec![false; self.wires.len()];
        // (tail slot, head slot) of each edge in its forward direction
        let mut edges: Vec<((usize, u8), (usize, u8))> = Vec::new();
        let mut free_loops = 0;
        for w in 0..self.wires.len() {
            if wire_done[w] {
                continue;
            }
            let (head, fwd) = walk(w, 1);
            for &x in &fwd {
                wire_done[x] = true;
            }
            let Some(head) = head else {
                free_loops += 1;
                continue;
            };
            let (tail, back) = walk(w, 0);
            for &x in &back {
                wire_done[x] = true;
            }
            edges.push((tail.expect("open chain has two ends"), head));
        }

        let mut slot_edge = vec![[(usize::MAX, false); 4]; nc];
        for (e, &(t, h)) in edges.iter().enumerate() {
            slot_edge[t.0][t.1 as usize] = (e, false);
            slot_edge[h.0][h.1 as usize] = (e, true);
        }

        // orient: incoming[c][s] is true when the strand enters crossing c at slot s
        let mut incoming = vec![[false; 4]; nc];
        let mut oriented = vec![false; edges.len()];
        for start in 0..edges.len() {
            if oriented[start] {
                continue;
            }
            let mut e = start;
            let mut forward = true;
            loop {
                oriented[e] = true;
                let (t, h) = edges[e];
                let (arrive, _) = if forward { (h, t) } else { (t, h) };
                incoming[arrive.0][arrive.1 as usize] = true;
                let exit = (arrive.1 + 2) % 4;
                let (next, at_head) = slot_edge[arrive.0][exit as usize];
                // leaving through the head end means travelling backwards
                forward = !at_head;
                e = next;
                if e == start {
                    break;
                }
            }
        }

        let crossings = (0..nc)
            .map(|c| {
                let under = if self.over_sw_ne[c] { [SE, NW] } else { [SW, NE] };
                let u = if incoming[c][under[0] as usize] { under[0] } else { under[1] };
                let slots = [u, (u + 1) % 4, (u + 2) % 4, (u + 3) % 4];
                let edges = slots.map(|s| slot_edge[c][s as usize].0);
                // positive exactly when the over strand runs from slot d to slot b
                let sign = if incoming[c][slots[3] as usize] { 1 } else { -1 };
                Crossing { edges, sign }
            })
            .collect();
        LinkDiagram::from_parts(crossings, edges.len(), free_loops)
            .expect("builder output is a valid diagram")
    }
}
