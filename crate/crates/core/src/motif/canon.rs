//! Canonical forms and automorphism counts for small graphs.
//!
//! Vertices are first split into cells by iterated color refinement, which
//! is invariant under relabeling. The canonical labeling is the ordering,
//! among those listing cells in color order, whose upper-triangular
//! adjacency bit string is lexicographically smallest. The search is a
//! branch and bound over partial orderings: after `k` vertices are placed
//! the first `k(k-1)/2` bits are fixed, so any branch whose prefix already
//! exceeds the best known prefix is cut.

use alloc::vec::Vec;
use core::fmt;

use super::small::SmallGraph;

/// Canonical form of a small graph: vertex count plus the adjacency bits of
/// the pairs `(0,1), (0,2), (1,2), (0,3), …` under the canonical labeling,
/// first pair in the most significant position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    v: u8,
    bits: u128,
}

impl CanonicalKey {
    pub fn vertex_count(&self) -> usize {
        self.v as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    fn pair_count(&self) -> usize {
        let v = self.v as usize;
        v * v.saturating_sub(1) / 2
    }
}

impl fmt::Display for CanonicalKey {
    /// The bit string, one character per vertex pair.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.pair_count();
        for i in (0..m).rev() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Iterated color refinement. Returns a color per vertex; colors are
/// numbered by sorted signature so the numbering itself is invariant.
pub(crate) fn refine_colors(g: &SmallGraph) -> Vec<usize> {
    let v = g.v();
    let mut colors: Vec<usize> = (0..v).map(|a| g.degree(a)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..v)
            .map(|a| {
                let mut nb: Vec<usize> = (0..v)
                    .filter(|&b| g.has_edge(a, b))
                    .map(|b| colors[b])
                    .collect();
                nb.sort_unstable();
                (colors[a], nb, a)
            })
            .collect();
        sigs.sort();
        let mut next = alloc::vec![0; v];
        let mut color = 0;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                color += 1;
            }
            next[sigs[i].2] = color;
        }
        let refined = count_distinct(&next);
        colors = next;
        if refined == classes {
            return colors;
        }
        classes = refined;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut s: Vec<usize> = xs.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

struct Search<'a> {
    g: &'a SmallGraph,
    colors: Vec<usize>,
    cell_of_position: Vec<usize>,
    order: Vec<usize>,
    best_bits: u128,
    best_order: Vec<usize>,
    found: bool,
    total_bits: usize,
}

impl Search<'_> {
    fn run(&mut self, placed: usize, used: u16, bits: u128) {
        let v = self.g.v();
        if placed == v {
            if !self.found || bits < self.best_bits {
                self.best_bits = bits;
                self.best_order.clone_from(&self.order);
                self.found = true;
            }
            return;
        }
        let cell = self.cell_of_position[placed];
        for cand in 0..v {
            if used >> cand & 1 == 1 || self.colors[cand] != cell {
                continue;
            }
            let mut next = bits;
            for &prev in &self.order {
                next = next << 1 | self.g.has_edge(prev, cand) as u128;
            }
            let len = (placed + 1) * placed / 2;
            if self.found {
                let best_prefix = self.best_bits >> (self.total_bits - len);
                if next > best_prefix {
                    continue;
                }
            }
            self.order.push(cand);
            self.run(placed + 1, used | 1 << cand, next);
            self.order.pop();
        }
    }
}

/// Canonical key together with the canonical ordering: `order[i]` is the
/// original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &SmallGraph) -> (CanonicalKey, Vec<usize>) {
    let v = g.v();
    let colors = refine_colors(g);
    let mut cell_of_position = colors.clone();
    cell_of_position.sort_unstable();
    let mut search = Search {
        g,
        colors,
        cell_of_position,
        order: Vec::with_capacity(v),
        best_bits: 0,
        best_order: Vec::new(),
        found: false,
        total_bits: v * v.saturating_sub(1) / 2,
    };
    search.run(0, 0, 0);
    (
        CanonicalKey {
            v: v as u8,
            bits: search.best_bits,
        },
        search.best_order,
    )
}

/// Canonical key of `g`; equal keys exactly when the graphs are isomorphic.
pub fn canonical_key(g: &SmallGraph) -> CanonicalKey {
    canonical_labeling(g).0
}

/// `g` relabeled into canonical position order.
pub fn canonical_form(g: &SmallGraph) -> (CanonicalKey, SmallGraph) {
    let (key, order) = canonical_labeling(g);
    let mut perm = alloc::vec![0; g.v()];
    for (pos, &vertex) in order.iter().enumerate() {
        perm[vertex] = pos;
    }
    (key, g.permuted(&perm))
}

/// Number of adjacency-preserving bijections of `g` onto itself. Images are
/// restricted to vertices of the same refined color.
pub fn aut_count(g: &SmallGraph) -> u64 {
    let v = g.v();
    if v == 0 {
        return 1;
    }
    let colors = refine_colors(g);
    let order = bfs_order(g);
    let mut image = alloc::vec![usize::MAX; v];
    let mut count = 0u64;
    extend_automorphism(g, &colors, &order, 0, 0, &mut image, &mut count);
    count
}

fn extend_automorphism(
    g: &SmallGraph,
    colors: &[usize],
    order: &[usize],
    depth: usize,
    used: u16,
    image: &mut [usize],
    count: &mut u64,
) {
    if depth == order.len() {
        *count += 1;
        return;
    }
    let a = order[depth];
    for cand in 0..g.v() {
        if used >> cand & 1 == 1 || colors[cand] != colors[a] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&b| g.has_edge(a, b) == g.has_edge(cand, image[b]));
        if !consistent {
            continue;
        }
        image[a] = cand;
        extend_automorphism(g, colors, order, depth + 1, used | 1 << cand, image, count);
    }
    image[a] = usize::MAX;
}

/// Vertices in breadth-first order, restarting at each unvisited vertex.
fn bfs_order(g: &SmallGraph) -> Vec<usize> {
    let v = g.v();
    let mut order = Vec::with_capacity(v);
    let mut seen: u16 = 0;
    for start in 0..v {
        if seen >> start & 1 == 1 {
            continue;
        }
        seen |= 1 << start;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let a = order[head];
            head += 1;
            let mut nb = g.row(a) & !seen;
            while nb != 0 {
                let b = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << b;
                order.push(b);
            }
        }
    }
    order
}
