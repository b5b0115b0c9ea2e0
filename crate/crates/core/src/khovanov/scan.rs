//! Khovanov homology by scanning: crossings are tensored in one at a time
//! over dotted cobordisms between crossingless tangles, closed loops are
//! removed by delooping and identity entries by Gaussian elimination, so the
//! complex stays small however many crossings there are.
//!
//! Relations are those of Khovanov's original theory: a sphere is 0, a
//! dotted sphere is 1, two dots on a component are 0, and a neck cuts into
//! the two ways of putting one dot next to it. Hence a morphism between
//! matchings `a` and `b` is an integer combination of dot patterns on the
//! cycles of `a` glued to `b`, stored as a bitmask per term.
//!
//! Points of the boundary are slots `4k + s` of processed crossings whose
//! edge leaves the processed part.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::smith::{factor_to_u64, smith_normal_form, IntegerMatrix};
use super::{AbelianGroup, HomologyTable, KhovanovError};
use crate::diagram::LinkDiagram;

/// Widest boundary the scan accepts.
pub const MAX_BOUNDARY: usize = 120;

const NONE: u32 = u32::MAX;

type Mor = BTreeMap<u64, i64>;

fn add_term(m: &mut Mor, mask: u64, c: i64) {
    let e = m.entry(mask).or_insert(0);
    *e = e.checked_add(c).expect("cobordism coefficient overflow");
    if *e == 0 {
        m.remove(&mask);
    }
}

/// Cycle label of every point of `a` glued to `b`, numbered by smallest point.
fn cycles(a: &[u8], b: &[u8]) -> (Vec<u8>, usize) {
    let mut lab = vec![u8::MAX; a.len()];
    let mut c = 0u8;
    for s in 0..a.len() {
        if lab[s] != u8::MAX {
            continue;
        }
        let mut p = s;
        loop {
            lab[p] = c;
            let q = a[p] as usize;
            lab[q] = c;
            p = b[q] as usize;
            if p == s {
                break;
            }
        }
        c += 1;
    }
    (lab, c as usize)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// A connected surface reduced to dotted disks on its boundary cycles.
struct Piece {
    circles: Vec<u8>,
    genus: u32,
    dots: u32,
}

/// Adds `coef` times the product of the pieces, each cut into disks.
fn expand(pieces: &[Piece], coef: i64, out: &mut Mor) {
    // per piece, the dot masks it can contribute
    let mut choices: Vec<Vec<u64>> = Vec::with_capacity(pieces.len());
    let mut c = coef;
    for p in pieces {
        let e = p.dots + p.genus;
        if e >= 2 {
            return;
        }
        let k = p.circles.len();
        let all: u64 = p.circles.iter().fold(0, |m, &t| m | 1 << t);
        if e == 1 {
            choices.push(vec![all]);
        } else if k == 0 {
            return;
        } else {
            choices.push(p.circles.iter().map(|&t| all & !(1 << t)).collect());
        }
        if p.genus == 1 {
            c = c.checked_mul(2).expect("cobordism coefficient overflow");
        }
    }
    let mut masks = vec![0u64];
    for ch in &choices {
        if ch.len() == 1 {
            masks.iter_mut().for_each(|m| *m |= ch[0]);
        } else {
            masks = masks.iter().flat_map(|&m| ch.iter().map(move |&x| m | x)).collect();
        }
    }
    for m in masks {
        add_term(out, m, c);
    }
}

/// `g . f` for `f: x -> m` and `g: m -> y`.
fn compose(x: &[u8], m: &[u8], y: &[u8], f: &Mor, g: &Mor) -> Mor {
    let (l1, c1) = cycles(x, m);
    let (l2, c2) = cycles(m, y);
    let (l3, c3) = cycles(x, y);
    let mut uf = UnionFind::new(c1 + c2);
    let mut arcs = Vec::new();
    for p in 0..m.len() {
        if p < m[p] as usize {
            uf.union(l1[p] as usize, c1 + l2[p] as usize);
            arcs.push(l1[p] as usize);
        }
    }
    let roots: Vec<usize> = (0..c1 + c2).map(|d| uf.find(d)).collect();
    let mut comp_of = vec![usize::MAX; c1 + c2];
    let mut ncomp = 0;
    for d in 0..c1 + c2 {
        if comp_of[roots[d]] == usize::MAX {
            comp_of[roots[d]] = ncomp;
            ncomp += 1;
        }
    }
    let comp = |d: usize| comp_of[roots[d]];
    let mut euler = vec![0i64; ncomp];
    for d in 0..c1 + c2 {
        euler[comp(d)] += 1;
    }
    for &d in &arcs {
        euler[comp(d)] -= 1;
    }
    let mut circles: Vec<Vec<u8>> = vec![Vec::new(); ncomp];
    let mut seen = vec![false; c3];
    for p in 0..x.len() {
        let t = l3[p] as usize;
        if !seen[t] {
            seen[t] = true;
            circles[comp(l1[p] as usize)].push(t as u8);
        }
    }
    let genus: Vec<u32> = (0..ncomp)
        .map(|i| {
            let g2 = 2 - euler[i] - circles[i].len() as i64;
            debug_assert!(g2 >= 0 && g2 % 2 == 0);
            (g2 / 2) as u32
        })
        .collect();
    let mut out = Mor::new();
    for (&mf, &cf) in f {
        for (&mg, &cg) in g {
            let mut dots = vec![0u32; ncomp];
            for d in 0..c1 {
                dots[comp(d)] += (mf >> d & 1) as u32;
            }
            for d in 0..c2 {
                dots[comp(c1 + d)] += (mg >> d & 1) as u32;
            }
            let pieces: Vec<Piece> = (0..ncomp)
                .map(|i| Piece { circles: circles[i].clone(), genus: genus[i], dots: dots[i] })
                .collect();
            expand(&pieces, cf.checked_mul(cg).expect("cobordism coefficient overflow"), &mut out);
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Obj {
    m: Vec<u8>,
    r: i32,
    q: i32,
}

#[derive(Default)]
struct Complex {
    objs: Vec<Option<Obj>>,
    out: Vec<BTreeMap<usize, Mor>>,
    inn: Vec<BTreeSet<usize>>,
}

impl Complex {
    fn push(&mut self, o: Obj) -> usize {
        self.objs.push(Some(o));
        self.out.push(BTreeMap::new());
        self.inn.push(BTreeSet::new());
        self.objs.len() - 1
    }

    fn obj(&self, u: usize) -> &Obj {
        self.objs[u].as_ref().expect("live object")
    }

    fn add(&mut self, u: usize, v: usize, f: &Mor, scale: i64) {
        let e = self.out[u].entry(v).or_default();
        for (&m, &c) in f {
            add_term(e, m, c.checked_mul(scale).expect("cobordism coefficient overflow"));
        }
        if e.is_empty() {
            self.out[u].remove(&v);
            self.inn[v].remove(&u);
        } else {
            self.inn[v].insert(u);
        }
    }

    /// `Some(+-1)` when the entry `u -> v` is plus or minus an identity.
    fn unit(&self, u: usize, v: usize, f: &Mor) -> Option<i64> {
        if f.len() != 1 {
            return None;
        }
        let (&mask, &c) = f.iter().next().unwrap();
        let (a, b) = (self.obj(u), self.obj(v));
        (mask == 0 && c.abs() == 1 && a.m == b.m && a.q == b.q).then_some(c)
    }

    fn eliminate(&mut self, u: usize, v: usize, sign: i64) {
        let xs: Vec<(usize, Mor)> =
            self.inn[v].iter().filter(|&&x| x != u).map(|&x| (x, self.out[x][&v].clone())).collect();
        let ys: Vec<(usize, Mor)> =
            self.out[u].iter().filter(|(&y, _)| y != v).map(|(&y, g)| (y, g.clone())).collect();
        let mu = self.obj(u).m.clone();
        for (x, delta) in &xs {
            let mx = self.obj(*x).m.clone();
            for (y, gamma) in &ys {
                let t = compose(&mx, &mu, &self.obj(*y).m, delta, gamma);
                self.add(*x, *y, &t, -sign);
            }
        }
        for w in [u, v] {
            for x in std::mem::take(&mut self.inn[w]) {
                self.out[x].remove(&w);
            }
            for y in std::mem::take(&mut self.out[w]).into_keys() {
                self.inn[y].remove(&w);
            }
            self.objs[w] = None;
        }
    }

    fn simplify(&mut self) {
        loop {
            let mut changed = false;
            for u in 0..self.objs.len() {
                while self.objs[u].is_some() {
                    let hit = self.out[u].iter().find_map(|(&v, f)| self.unit(u, v, f).map(|s| (v, s)));
                    let Some((v, s)) = hit else { break };
                    self.eliminate(u, v, s);
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }
}

/// One crossing being glued onto the processed tangle.
struct Step {
    n1: usize,
    /// glue partner of every local node (old boundary, then the four slots)
    glue: Vec<u32>,
    /// position in the new boundary
    newidx: Vec<u32>,
    width: usize,
}

const SMOOTHING: [[u8; 4]; 2] = [[1, 0, 3, 2], [3, 2, 1, 0]];

impl Step {
    fn links(&self, a1: &[u8], s: usize) -> Vec<u32> {
        let mut l: Vec<u32> = a1.iter().map(|&p| p as u32).collect();
        l.extend(SMOOTHING[s].iter().map(|&p| (self.n1 + p as usize) as u32));
        l
    }

    /// Glued matching on the new boundary and the smallest node of each loop.
    fn glue_object(&self, a1: &[u8], s: usize) -> (Vec<u8>, Vec<u32>) {
        let link = self.links(a1, s);
        let n = link.len();
        let mut seen = vec![false; n];
        let mut m = vec![0u8; self.width];
        for start in 0..n {
            if self.newidx[start] == NONE || seen[start] {
                continue;
            }
            let mut p = start;
            loop {
                seen[p] = true;
                let q = link[p] as usize;
                seen[q] = true;
                if self.newidx[q] != NONE {
                    m[self.newidx[start] as usize] = self.newidx[q] as u8;
                    m[self.newidx[q] as usize] = self.newidx[start] as u8;
                    break;
                }
                p = self.glue[q] as usize;
            }
        }
        let mut loops = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops.push(start as u32);
            let mut p = start;
            loop {
                seen[p] = true;
                let q = link[p] as usize;
                seen[q] = true;
                p = self.glue[q] as usize;
                if p == start {
                    break;
                }
            }
        }
        (m, loops)
    }

    /// Glues `f: a1 -> b1` with the identity (`sa == sb`) or the saddle on
    /// the new crossing and deloops. Calls `emit(src_choice, tgt_choice, mor)`
    /// where bit `t` of a choice set means the `-1` summand of loop `t`.
    #[allow(clippy::too_many_arguments)]
    fn glue_morphism(
        &self,
        a1: &[u8],
        b1: &[u8],
        sa: usize,
        sb: usize,
        f: &Mor,
        src: &(Vec<u8>, Vec<u32>),
        tgt: &(Vec<u8>, Vec<u32>),
        mut emit: impl FnMut(u32, u32, Mor),
    ) {
        let (l1, c1) = cycles(a1, b1);
        let xa: Vec<u8> = SMOOTHING[sa].to_vec();
        let xb: Vec<u8> = SMOOTHING[sb].to_vec();
        let (l2, c2) = cycles(&xa, &xb);
        let n = self.n1 + 4;
        let disk = |p: usize| if p < self.n1 { l1[p] as usize } else { c1 + l2[p - self.n1] as usize };
        let mut uf = UnionFind::new(c1 + c2);
        let mut gluings = Vec::new();
        for p in 0..n {
            let g = self.glue[p];
            if g != NONE && p < g as usize {
                uf.union(disk(p), disk(g as usize));
                gluings.push(p);
            }
        }
        let roots: Vec<usize> = (0..c1 + c2).map(|d| uf.find(d)).collect();
        let mut comp_of = vec![usize::MAX; c1 + c2];
        let mut ncomp = 0;
        for d in 0..c1 + c2 {
            if comp_of[roots[d]] == usize::MAX {
                comp_of[roots[d]] = ncomp;
                ncomp += 1;
            }
        }
        let comp = |p: usize| comp_of[roots[disk(p)]];
        let mut euler = vec![0i64; ncomp];
        for d in 0..c1 + c2 {
            euler[comp_of[roots[d]]] += 1;
        }
        for &p in &gluings {
            euler[comp(p)] -= 1;
        }

        // boundary circles of the glued surface
        let bottom = self.links(a1, sa);
        let top = self.links(b1, sb);
        let (lab_new, _) = cycles(&src.0, &tgt.0);
        let mut circles: Vec<Vec<u8>> = vec![Vec::new(); ncomp];
        let mut src_loop_comp = vec![0usize; src.1.len()];
        let mut tgt_loop_comp = vec![0usize; tgt.1.len()];
        let mut seen = vec![[false; 2]; n];
        for start in 0..n {
            for lvl in 0..2 {
                if seen[start][lvl] {
                    continue;
                }
                let (mut p, mut l) = (start, lvl);
                let mut mixed = None;
                let mut min_node = usize::MAX;
                loop {
                    seen[p][l] = true;
                    min_node = min_node.min(p);
                    let q = if l == 0 { bottom[p] } else { top[p] } as usize;
                    seen[q][l] = true;
                    min_node = min_node.min(q);
                    if self.newidx[q] != NONE {
                        mixed = Some(self.newidx[q] as usize);
                        l = 1 - l;
                        p = q;
                    } else {
                        p = self.glue[q] as usize;
                    }
                    if p == start && l == lvl {
                        break;
                    }
                }
                let c = comp(start);
                match mixed {
                    Some(i) => circles[c].push(lab_new[i]),
                    None if lvl == 0 => {
                        let t = src.1.iter().position(|&s| s as usize == min_node).expect("source loop");
                        src_loop_comp[t] = c;
                    }
                    None => {
                        let t = tgt.1.iter().position(|&s| s as usize == min_node).expect("target loop");
                        tgt_loop_comp[t] = c;
                    }
                }
            }
        }
        let mut loops_in = vec![0i64; ncomp];
        for &c in src_loop_comp.iter().chain(&tgt_loop_comp) {
            loops_in[c] += 1;
        }
        let genus: Vec<u32> = (0..ncomp)
            .map(|i| {
                let k = circles[i].len() as i64 + loops_in[i];
                let g2 = 2 - euler[i] - k;
                debug_assert!(g2 >= 0 && g2 % 2 == 0, "odd genus");
                (g2 / 2) as u32
            })
            .collect();
        let disks_c1: Vec<usize> = {
            // component of each disk of f
            (0..c1).map(|d| comp_of[roots[d]]).collect()
        };
        for sc in 0..1u32 << src.1.len() {
            for tc in 0..1u32 << tgt.1.len() {
                let mut out = Mor::new();
                for (&mf, &cf) in f {
                    let mut dots = vec![0u32; ncomp];
                    for (d, &c) in disks_c1.iter().enumerate() {
                        dots[c] += (mf >> d & 1) as u32;
                    }
                    // a dotted cup for the -1 summand below, a dotted cap for +1 above
                    for (t, &c) in src_loop_comp.iter().enumerate() {
                        dots[c] += sc >> t & 1;
                    }
                    for (t, &c) in tgt_loop_comp.iter().enumerate() {
                        dots[c] += 1 - (tc >> t & 1);
                    }
                    let pieces: Vec<Piece> = (0..ncomp)
                        .map(|i| Piece { circles: circles[i].clone(), genus: genus[i], dots: dots[i] })
                        .collect();
                    expand(&pieces, cf, &mut out);
                }
                if !out.is_empty() {
                    emit(sc, tc, out);
                }
            }
        }
    }
}

fn loop_shift(choice: u32, loops: usize) -> i32 {
    loops as i32 - 2 * choice.count_ones() as i32
}

/// Crossing order keeping the boundary narrow: always take the crossing
/// with most slots already attached.
fn scan_order(partner: &[u32], c: usize) -> Vec<usize> {
    let mut done = vec![false; c];
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        let best = (0..c)
            .filter(|&k| !done[k])
            .max_by_key(|&k| {
                let attached = (0..4).filter(|&s| done[partner[4 * k + s] as usize / 4]).count();
                (attached, std::cmp::Reverse(k))
            })
            .expect("crossing left");
        done[best] = true;
        order.push(best);
    }
    order
}

pub fn khovanov_homology_scanned(d: &LinkDiagram) -> Result<HomologyTable, KhovanovError> {
    let c = d.crossing_count();
    let mut slots_of: Vec<Vec<u32>> = vec![Vec::new(); d.edge_count()];
    for (k, x) in d.crossings().iter().enumerate() {
        for (s, &e) in x.edges.iter().enumerate() {
            slots_of[e].push((4 * k + s) as u32);
        }
    }
    let mut partner = vec![NONE; 4 * c];
    for v in &slots_of {
        partner[v[0] as usize] = v[1];
        partner[v[1] as usize] = v[0];
    }

    let mut cx = Complex::default();
    cx.push(Obj { m: Vec::new(), r: 0, q: 0 });
    let mut pts: Vec<u32> = Vec::new();
    let mut done = vec![false; c];
    for k in scan_order(&partner, c) {
        done[k] = true;
        let n1 = pts.len();
        let mut glue = vec![NONE; n1 + 4];
        let local = |h: u32| -> Option<usize> {
            if h as usize / 4 == k {
                Some(n1 + h as usize % 4)
            } else {
                pts.binary_search(&h).ok()
            }
        };
        for p in 0..n1 + 4 {
            let h = if p < n1 { pts[p] } else { (4 * k + p - n1) as u32 };
            if let Some(q) = local(partner[h as usize]) {
                glue[p] = q as u32;
            }
        }
        let mut new_pts: Vec<(u32, usize)> = (0..n1 + 4)
            .filter(|&p| glue[p] == NONE)
            .map(|p| (if p < n1 { pts[p] } else { (4 * k + p - n1) as u32 }, p))
            .collect();
        new_pts.sort_unstable();
        if new_pts.len() > MAX_BOUNDARY {
            return Err(KhovanovError::BoundaryTooWide { width: new_pts.len(), limit: MAX_BOUNDARY });
        }
        let mut newidx = vec![NONE; n1 + 4];
        for (i, &(_, p)) in new_pts.iter().enumerate() {
            newidx[p] = i as u32;
        }
        let step = Step { n1, glue, newidx, width: new_pts.len() };

        let mut next = Complex::default();
        // (old object, smoothing) -> glued object and its first new index
        let mut made: HashMap<(usize, usize), ((Vec<u8>, Vec<u32>), usize)> = HashMap::new();
        for u in 0..cx.objs.len() {
            let Some(o) = cx.objs[u].clone() else { continue };
            for s in 0..2 {
                let g = step.glue_object(&o.m, s);
                let first = next.objs.len();
                for ch in 0..1u32 << g.1.len() {
                    next.push(Obj { m: g.0.clone(), r: o.r + s as i32, q: o.q + s as i32 + loop_shift(ch, g.1.len()) });
                }
                made.insert((u, s), (g, first));
            }
        }
        for u in 0..cx.objs.len() {
            let Some(o) = cx.objs[u].clone() else { continue };
            let (src_a, base_a) = &made[&(u, 0)];
            let (tgt_b, base_b) = &made[&(u, 1)];
            let sign = if o.r % 2 == 0 { 1 } else { -1 };
            let mut id = Mor::new();
            id.insert(0, sign);
            let mut pending = Vec::new();
            step.glue_morphism(&o.m, &o.m, 0, 1, &id, src_a, tgt_b, |sc, tc, m| {
                pending.push((base_a + sc as usize, base_b + tc as usize, m))
            });
            for (v, f) in &cx.out[u] {
                let ov = cx.obj(*v);
                for s in 0..2 {
                    let (src, bs) = &made[&(u, s)];
                    let (tgt, bt) = &made[&(*v, s)];
                    step.glue_morphism(&o.m, &ov.m, s, s, f, src, tgt, |sc, tc, m| {
                        pending.push((bs + sc as usize, bt + tc as usize, m))
                    });
                }
            }
            for (a, b, m) in pending {
                next.add(a, b, &m, 1);
            }
        }
        next.simplify();
        cx = next;
        pts = new_pts.into_iter().map(|(h, _)| h).collect();
    }
    debug_assert!(pts.is_empty());

    // split free loops: each doubles the complex with shifts +1 and -1
    let mut objs: Vec<(usize, i32, i32)> = Vec::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    let live: Vec<usize> = (0..cx.objs.len()).filter(|&u| cx.objs[u].is_some()).collect();
    let f = d.free_loops();
    let copies = 1usize << f;
    let index: HashMap<usize, usize> = live.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    for ch in 0..copies {
        for &u in &live {
            let o = cx.obj(u);
            objs.push((u, o.r, o.q + loop_shift(ch as u32, f)));
        }
    }
    for ch in 0..copies {
        for &u in &live {
            for (v, m) in &cx.out[u] {
                let c = m.get(&0).copied().unwrap_or(0);
                if c != 0 {
                    entries.push((ch * live.len() + index[&u], ch * live.len() + index[v], c));
                }
            }
        }
    }
    let n = d.negative_count() as i64;
    let p = d.positive_count() as i64;
    homology_of(&objs, &entries, n, p)
}

fn homology_of(objs: &[(usize, i32, i32)], entries: &[(usize, usize, i64)], n: i64, p: i64) -> Result<HomologyTable, KhovanovError> {
    // (i, j) -> positions of objects, in order
    let mut cells: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (k, &(_, r, q)) in objs.iter().enumerate() {
        cells.entry((r as i64 - n, q as i64 + p - 2 * n)).or_default().push(k);
    }
    let pos: HashMap<usize, usize> =
        cells.values().flat_map(|v| v.iter().enumerate().map(|(i, &k)| (k, i))).collect();
    let mut maps: BTreeMap<(i64, i64), Vec<Vec<(u32, i64)>>> = BTreeMap::new();
    for (&(i, j), v) in &cells {
        maps.insert((i, j), vec![Vec::new(); v.len()]);
    }
    for &(a, b, c) in entries {
        let (_, r, q) = objs[a];
        debug_assert_eq!(q, objs[b].2, "differential changes quantum degree");
        let key = (r as i64 - n, q as i64 + p - 2 * n);
        maps.get_mut(&key).unwrap()[pos[&a]].push((pos[&b] as u32, c));
    }
    let mut t = HomologyTable::new();
    let rank_into = |i: i64, j: i64| -> (usize, Vec<num_bigint::BigInt>) {
        match (cells.get(&(i - 1, j)), cells.get(&(i, j))) {
            (Some(_), Some(dst)) => {
                let snf = smith_normal_form(&IntegerMatrix::from_columns(dst.len(), maps[&(i - 1, j)].clone()));
                (snf.rank(), snf.torsion().cloned().collect())
            }
            _ => (0, Vec::new()),
        }
    };
    for (&(i, j), v) in &cells {
        let out_rank = match cells.get(&(i + 1, j)) {
            Some(dst) => smith_normal_form(&IntegerMatrix::from_columns(dst.len(), maps[&(i, j)].clone())).rank(),
            None => 0,
        };
        let (in_rank, torsion) = rank_into(i, j);
        let torsion = torsion
            .iter()
            .map(|d| factor_to_u64(d).ok_or(KhovanovError::TorsionTooLarge { i, j }))
            .collect::<Result<Vec<u64>, _>>()?;
        t.set(i, j, AbelianGroup::new((v.len() - out_rank - in_rank) as u64, &torsion));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_labels() {
        // a = (01)(23), b = (03)(12): one cycle; a against itself: two
        assert_eq!(cycles(&[1, 0, 3, 2], &[3, 2, 1, 0]), (vec![0, 0, 0, 0], 1));
        assert_eq!(cycles(&[1, 0, 3, 2], &[1, 0, 3, 2]), (vec![0, 0, 1, 1], 2));
    }

    #[test]
    fn saddle_twice_is_neck_cut() {
        // saddle then saddle back on four points: a tube, which cuts into one dot on either side
        let a = [1u8, 0, 3, 2];
        let b = [3u8, 2, 1, 0];
        let mut s = Mor::new();
        s.insert(0, 1);
        let t = compose(&a, &b, &a, &s, &s);
        let want: Mor = [(0b01, 1), (0b10, 1)].into_iter().collect();
        assert_eq!(t, want);
    }

    #[test]
    fn identity_composes_trivially() {
        let a = [1u8, 0, 3, 2];
        let mut id = Mor::new();
        id.insert(0, 1);
        let mut dot = Mor::new();
        dot.insert(0b10, 3);
        assert_eq!(compose(&a, &a, &a, &id, &dot), dot);
        assert_eq!(compose(&a, &a, &a, &dot, &dot), Mor::new());
    }
}
