use super::Graph;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameters(msg.into()))
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v, true);
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid("cycle needs at least 3 vertices");
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// Spider `T(a, b, c)`: three paths of `a`, `b`, `c` vertices hanging off a centre (vertex 0).
pub fn spider(legs: &[usize]) -> Result<Graph> {
    let order = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(order, &edges)
}

/// Caterpillar with spine `0..pendants.len()` and `pendants[i]` leaves on spine vertex `i`.
/// Leaves are numbered after the spine, in spine order.
pub fn caterpillar(pendants: &[usize]) -> Result<Graph> {
    if pendants.is_empty() {
        return invalid("caterpillar needs a non-empty spine");
    }
    let spine = pendants.len();
    let order = spine + pendants.iter().sum::<usize>();
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for (i, &k) in pendants.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(order, &edges)
}

/// Kneser graph `K(m, k)`: `k`-subsets of `0..m` in lexicographic order, adjacent when disjoint.
pub fn kneser(m: usize, k: usize) -> Result<Graph> {
    if k == 0 || m < 2 * k || m > 64 {
        return invalid(format!("kneser({m}, {k}) needs 1 <= k and 2k <= m <= 64"));
    }
    let mut subsets: Vec<u64> = Vec::new();
    // lexicographic k-subsets
    fn rec(start: usize, mask: u64, size: usize, m: usize, k: usize, out: &mut Vec<u64>) {
        if size == k {
            out.push(mask);
            return;
        }
        for e in start..m {
            if m - e < k - size {
                break;
            }
            rec(e + 1, mask | 1 << e, size + 1, m, k, out);
        }
    }
    rec(0, 0, 0, m, k, &mut subsets);
    let mut g = Graph::empty(subsets.len())?;
    for (i, &a) in subsets.iter().enumerate() {
        for (j, &b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                g.set_edge(i, j, true);
            }
        }
    }
    Ok(g)
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("kneser(5, 2) is valid")
}

/// Circulant graph on `Z_n`: `u ~ v` iff `u - v ≡ ±s` for some `s` in `connections`.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &s in connections {
        if s == 0 || s >= n {
            return invalid(format!("connection {s} must lie in 1..{n}"));
        }
        for u in 0..n {
            g.set_edge(u, (u + s) % n, true);
        }
    }
    Ok(g)
}

const PAIRING_ATTEMPTS: usize = 100_000;

/// Random `k`-regular graph from the pairing model, rejecting loops and multi-edges.
///
/// Deterministic for a given seed. Not uniform for large `k`.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k >= n || (n * k) % 2 == 1 {
        return invalid(format!("no {k}-regular graph on {n} vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * k).map(|p| p / k).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n)?;
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.set_edge(u, v, true);
        }
        return Ok(g);
    }
    invalid(format!("pairing model failed for n={n}, k={k}"))
}

/// First connected graph produced by [`random_regular`] for seeds `seed, seed+1, ...`.
pub fn random_connected_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    for s in seed..seed.saturating_add(1000) {
        let g = random_regular(n, k, s)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    invalid(format!("no connected {k}-regular graph on {n} vertices found"))
}
