//! Simple undirected graphs stored as per-vertex bitsets.

mod canon;
mod generators;
mod graph6;

pub use canon::{
    canonical_form, canonical_key, isomorphism_classes, CanonicalKey, CANON_LIMIT, ISO_ENUMERATION_LIMIT,
};
pub use generators::*;
pub use graph6::{graph6_decode, graph6_encode};

use crate::error::{Error, Result};
use std::fmt;

/// Largest order a [`Graph`] may have.
pub const MAX_ORDER: usize = 1 << 16;

/// A simple undirected graph on vertices `0..order`.
///
/// Adjacency is symmetric and irreflexive. Values are immutable once built;
/// the mutating helpers are crate-private and only used during construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameters("order must be at least 1".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                limit: MAX_ORDER,
            });
        }
        let words = order.div_ceil(64);
        Ok(Graph {
            order,
            words,
            rows: vec![0; words * order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order || u == v {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u}, {v}) invalid for order {order}"
                )));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v);
        let (wu, bu) = (v / 64, 1u64 << (v % 64));
        let (wv, bv) = (u / 64, 1u64 << (u % 64));
        if on {
            self.rows[u * self.words + wu] |= bu;
            self.rows[v * self.words + wv] |= bv;
        } else {
            self.rows[u * self.words + wu] &= !bu;
            self.rows[v * self.words + wv] &= !bv;
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.order).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut comps = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![];
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::InvalidParameters("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.order)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        Ok(g)
    }

    /// Adjacency matrix as 0/1 rows.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|u| {
                (0..self.order)
                    .map(|v| i64::from(self.has_edge(u, v)))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {})", self.order, graph6_encode(self))
    }
}

/// Same order, edges exactly on the non-adjacent distinct pairs.
pub fn complement(g: &Graph) -> Graph {
    let mut h = g.clone();
    for u in 0..g.order {
        for v in u + 1..g.order {
            h.set_edge(u, v, !g.has_edge(u, v));
        }
    }
    h
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let mut l = Graph::empty(edges.len())?;
    // incident edge lists per vertex
    let mut incident = vec![Vec::new(); g.order];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                l.set_edge(i, j, true);
            }
        }
    }
    Ok(l)
}

/// `t` vertex-disjoint copies of `g`; copy `c` occupies `c*n..(c+1)*n`.
pub fn disjoint_union(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameters("t must be at least 1".into()));
    }
    let n = g.order;
    let mut h = Graph::empty(n.checked_mul(t).ok_or(Error::OrderTooLarge {
        order: usize::MAX,
        limit: MAX_ORDER,
    })?)?;
    let edges = g.edges();
    for c in 0..t {
        for &(u, v) in &edges {
            h.set_edge(c * n + u, c * n + v, true);
        }
    }
    Ok(h)
}

/// Seidel switching: toggle every pair with exactly one endpoint in `subset`.
pub fn switch(g: &Graph, subset: &[usize]) -> Result<Graph> {
    let mut inside = vec![false; g.order];
    for &v in subset {
        if v >= g.order {
            return Err(Error::InvalidParameters(format!("vertex {v} out of range")));
        }
        inside[v] = true;
    }
    let mut h = g.clone();
    for u in 0..g.order {
        for v in u + 1..g.order {
            if inside[u] != inside[v] {
                h.set_edge(u, v, !g.has_edge(u, v));
            }
        }
    }
    Ok(h)
}
