//! Homomorphism numbers of small multigraphs into a weighted complete
//! graph by vertex elimination.
//!
//! Each edge `ab` with multiplicity `m` is a factor `w[φ(a)][φ(b)]^m` over
//! two variables. Eliminating a vertex multiplies the factors that mention
//! it and sums it out, leaving one factor over its remaining neighbors.
//! The cost of a step is `n^{k+1}` for `k` neighbors; vertices are taken in
//! greedy minimum-degree order.

use alloc::vec::Vec;

use super::partition::QuotientMultigraph;
use crate::error::{Error, Result};
use crate::model::WeightedCompleteGraph;

/// Upper limit on the entries of any intermediate factor table.
pub const FACTOR_TABLE_CAP: u64 = 1 << 25;

/// Greedy minimum-degree elimination order of a multigraph's simple
/// skeleton, with ties broken by smaller vertex index. Also returns the
/// largest neighborhood met, i.e. the width of the order.
pub fn elimination_order(h: &QuotientMultigraph) -> (Vec<usize>, usize) {
    let mut adj: Vec<u32> = alloc::vec![0; h.v];
    for &(a, b) in h.edge_mults.keys() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut alive: u32 = if h.v == 32 { u32::MAX } else { (1u32 << h.v) - 1 };
    let mut order = Vec::with_capacity(h.v);
    let mut width = 0;
    while alive != 0 {
        let mut best = usize::MAX;
        let mut best_deg = u32::MAX;
        let mut rest = alive;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let deg = (adj[x] & alive).count_ones();
            if deg < best_deg {
                best = x;
                best_deg = deg;
            }
        }
        let nb = adj[best] & alive & !(1 << best);
        let mut r = nb;
        while r != 0 {
            let y = r.trailing_zeros() as usize;
            r &= r - 1;
            adj[y] |= nb & !(1 << y);
        }
        width = width.max(best_deg as usize);
        alive &= !(1 << best);
        order.push(best);
    }
    (order, width)
}

enum Table<'a> {
    Borrowed(&'a [f64]),
    Owned(Vec<f64>),
}

impl Table<'_> {
    #[inline]
    fn data(&self) -> &[f64] {
        match self {
            Table::Borrowed(s) => s,
            Table::Owned(v) => v,
        }
    }
}

struct Factor<'a> {
    /// Sorted variable list; the table is row-major in this order.
    vars: Vec<usize>,
    table: Table<'a>,
}

/// `Σ_φ Π_{ab} w[φ(a)][φ(b)]^{mult(ab)}` over all maps `φ: V(h) → [n]`.
/// Zero whenever `h` has a loop, since the diagonal of `w` is zero.
pub fn hom_multigraph(h: &QuotientMultigraph, w: &WeightedCompleteGraph) -> Result<f64> {
    let order = elimination_order(h).0;
    hom_with_order(h, w, &order)
}

pub(crate) fn hom_with_order(
    h: &QuotientMultigraph,
    w: &WeightedCompleteGraph,
    order: &[usize],
) -> Result<f64> {
    if h.has_loop {
        return Ok(0.0);
    }
    let n = w.n();

    let mut powers: Vec<(u32, Vec<f64>)> = Vec::new();
    for &m in h.edge_mults.values() {
        if m > 1 && !powers.iter().any(|(k, _)| *k == m) {
            let table = w.as_slice().iter().map(|&x| pow_u32(x, m)).collect();
            powers.push((m, table));
        }
    }
    let mut factors: Vec<Factor<'_>> = h
        .edge_mults
        .iter()
        .map(|(&(a, b), &m)| {
            let data: &[f64] = if m == 1 {
                w.as_slice()
            } else {
                &powers.iter().find(|(k, _)| *k == m).expect("power table").1
            };
            Factor {
                vars: alloc::vec![a, b],
                table: Table::Borrowed(data),
            }
        })
        .collect();

    let mut scalar = 1.0;
    for &x in order {
        let (involved, rest): (Vec<_>, Vec<_>) =
            factors.into_iter().partition(|f| f.vars.contains(&x));
        factors = rest;
        if involved.is_empty() {
            scalar *= n as f64;
            continue;
        }
        let mut out_vars: Vec<usize> = involved
            .iter()
            .flat_map(|f| f.vars.iter().copied())
            .filter(|&y| y != x)
            .collect();
        out_vars.sort_unstable();
        out_vars.dedup();
        let size = (n as u64).checked_pow(out_vars.len() as u32);
        let size = match size {
            Some(s) if s <= FACTOR_TABLE_CAP => s as usize,
            _ => {
                return Err(Error::CapExceeded {
                    what: "factor table entries",
                    value: size.unwrap_or(u64::MAX),
                    cap: FACTOR_TABLE_CAP,
                })
            }
        };
        let table = eliminate(n, x, &out_vars, &involved, size);
        if out_vars.is_empty() {
            scalar *= table[0];
        } else {
            factors.push(Factor {
                vars: out_vars,
                table: Table::Owned(table),
            });
        }
    }
    // Anything left has no variables.
    for f in &factors {
        scalar *= f.table.data()[0];
    }
    Ok(scalar)
}

fn eliminate(n: usize, x: usize, out_vars: &[usize], involved: &[Factor<'_>], size: usize) -> Vec<f64> {
    let k = out_vars.len();
    // Per factor: stride of x and stride of each output variable.
    let mut x_stride = Vec::with_capacity(involved.len());
    let mut out_stride = Vec::with_capacity(involved.len());
    for f in involved {
        let len = f.vars.len();
        let stride_of = |pos: usize| n.pow((len - 1 - pos) as u32);
        let sx = f.vars.iter().position(|&y| y == x).map(stride_of).unwrap_or(0);
        let so: Vec<usize> = out_vars
            .iter()
            .map(|y| f.vars.iter().position(|z| z == y).map(stride_of).unwrap_or(0))
            .collect();
        x_stride.push(sx);
        out_stride.push(so);
    }
    let data: Vec<&[f64]> = involved.iter().map(|f| f.table.data()).collect();

    let mut out = alloc::vec![0.0; size];
    let mut digits = alloc::vec![0usize; k];
    let mut base = alloc::vec![0usize; involved.len()];
    for slot in out.iter_mut() {
        for (fi, b) in base.iter_mut().enumerate() {
            *b = digits
                .iter()
                .zip(&out_stride[fi])
                .map(|(d, s)| d * s)
                .sum();
        }
        *slot = match involved.len() {
            1 => {
                let (d0, b0, s0) = (data[0], base[0], x_stride[0]);
                (0..n).map(|v| d0[b0 + v * s0]).sum()
            }
            2 => {
                let (d0, b0, s0) = (data[0], base[0], x_stride[0]);
                let (d1, b1, s1) = (data[1], base[1], x_stride[1]);
                (0..n).map(|v| d0[b0 + v * s0] * d1[b1 + v * s1]).sum()
            }
            _ => (0..n)
                .map(|v| {
                    let mut prod = 1.0;
                    for fi in 0..data.len() {
                        prod *= data[fi][base[fi] + v * x_stride[fi]];
                    }
                    prod
                })
                .sum(),
        };
        // Odometer, last output variable fastest to match row-major layout.
        for j in (0..k).rev() {
            digits[j] += 1;
            if digits[j] < n {
                break;
            }
            digits[j] = 0;
        }
    }
    out
}

fn pow_u32(x: f64, m: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..m {
        acc *= x;
    }
    acc
}
