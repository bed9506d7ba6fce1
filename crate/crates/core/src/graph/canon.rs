//! Canonical labelling for small graphs by individualization and refinement.

use super::Graph;
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest order accepted by [`canonical_key`]; the key packs the upper triangle into a `u128`.
pub const CANON_LIMIT: usize = 16;

/// Largest order accepted by [`isomorphism_classes`].
pub const ISO_ENUMERATION_LIMIT: usize = 9;

/// Isomorphism-invariant key: the upper triangle of the canonically relabelled adjacency
/// matrix, in graph6 bit order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    order: u8,
    bits: u128,
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("key order is valid");
        let total = n * n.saturating_sub(1) / 2;
        let mut i = 0;
        for v in 1..n {
            for u in 0..v {
                if self.bits >> (total - 1 - i) & 1 == 1 {
                    g.set_edge(u, v, true);
                }
                i += 1;
            }
        }
        g
    }
}

fn key_of(g: &Graph, order: &[usize]) -> u128 {
    let mut bits = 0u128;
    for v in 1..order.len() {
        for u in 0..v {
            bits = bits << 1 | u128::from(g.has_edge(order[u], order[v]));
        }
    }
    bits
}

/// Split cells until the ordered partition is equitable.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cells[si].clone();
            let mut changed = false;
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut counted: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (splitter.iter().filter(|&&w| g.has_edge(v, w)).count(), v))
                    .collect();
                counted.sort_unstable();
                let mut start = 0;
                for i in 1..=counted.len() {
                    if i == counted.len() || counted[i].0 != counted[start].0 {
                        next.push(counted[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                changed |= counted[0].0 != counted[counted.len() - 1].0;
            }
            *cells = next;
            if changed {
                continue 'outer;
            }
        }
        return;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.order()).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = key_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, order));
        }
        return;
    };
    let cell = &cells[target];
    // transpositions of twins in the same cell are automorphisms fixing the partition
    let mut reps: Vec<usize> = Vec::new();
    for &v in cell {
        if !reps.iter().any(|&r| twins(g, r, v)) {
            reps.push(v);
        }
    }
    for v in reps {
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
        let mut branch = cells.clone();
        branch.splice(target..=target, [vec![v], rest]);
        search(g, branch, best);
    }
}

fn canonical_order(g: &Graph) -> Result<(u128, Vec<usize>)> {
    if g.order() > CANON_LIMIT {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            limit: CANON_LIMIT,
        });
    }
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    let (bits, _) = canonical_order(g)?;
    Ok(CanonicalKey {
        order: g.order() as u8,
        bits,
    })
}

/// Canonically relabelled copy of `g` (order at most [`CANON_LIMIT`]).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(canonical_key(g)?.to_graph())
}

/// One canonical representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical key.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ISO_ENUMERATION_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: ISO_ENUMERATION_LIMIT,
        });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let keys: BTreeSet<CanonicalKey> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0u32..1 << k).map(move |mask| {
                    let mut h = Graph::empty(k + 1).expect("small order");
                    for (u, v) in g.edges() {
                        h.set_edge(u, v, true);
                    }
                    for u in 0..k {
                        if mask >> u & 1 == 1 {
                            h.set_edge(u, k, true);
                        }
                    }
                    canonical_key(&h).expect("order below limit")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = keys.iter().map(CanonicalKey::to_graph).collect();
    }
    Ok(level)
}
