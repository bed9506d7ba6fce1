//! Seidel matrices `S(G) = J - I - 2A(G)`, their exact spectra, switching and
//! switching-class canonical keys.

use crate::arith::{root_multiplicity, AlgebraicNumber, BigInt, IntMatrix, IntPoly};
use crate::error::{Error, Result};
use crate::graph::{canonical_key, switch, CanonicalKey, Graph};
use std::collections::HashMap;

/// Largest order accepted by [`switching_canonical`].
pub const SWITCHING_KEY_LIMIT: usize = crate::graph::CANON_LIMIT;

/// Symmetric integer matrix with zero diagonal and `±1` off the diagonal:
/// `-1` on edges, `+1` on non-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelMatrix {
    matrix: IntMatrix,
}

impl SeidelMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        i64::try_from(self.matrix.get(i, j)).expect("entries are 0 or ±1")
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    pub fn neg(&self) -> IntMatrix {
        self.matrix.neg()
    }
}

pub fn seidel(g: &Graph) -> SeidelMatrix {
    SeidelMatrix {
        matrix: IntMatrix::from_fn(g.order(), |i, j| {
            if i == j {
                0
            } else if g.has_edge(i, j) {
                -1
            } else {
                1
            }
        }),
    }
}

pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| i64::from(g.has_edge(i, j)))
}

/// A polynomial kept as a product `∏ f_i^{e_i}` of (not necessarily coprime) factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    factors: Vec<(IntPoly, usize)>,
}

impl FactoredPoly {
    pub fn single(p: IntPoly) -> Self {
        FactoredPoly {
            factors: vec![(p, 1)],
        }
    }

    pub fn factors(&self) -> &[(IntPoly, usize)] {
        &self.factors
    }

    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, e)| f.degree().unwrap_or(0) * e)
            .sum()
    }

    /// Multiplicity of `a` as a root.
    pub fn multiplicity(&self, a: &AlgebraicNumber) -> usize {
        self.factors
            .iter()
            .map(|(f, e)| e * root_multiplicity(f, a))
            .sum()
    }

    pub fn least_root(&self) -> Option<AlgebraicNumber> {
        self.factors
            .iter()
            .filter_map(|(f, _)| AlgebraicNumber::least_root(f))
            .min()
    }

    pub fn greatest_root(&self) -> Option<AlgebraicNumber> {
        self.factors
            .iter()
            .filter_map(|(f, _)| AlgebraicNumber::greatest_root(f))
            .max()
    }

    /// Distinct real roots with multiplicities, ascending.
    pub fn roots(&self) -> Vec<(AlgebraicNumber, usize)> {
        let mut roots: Vec<AlgebraicNumber> = Vec::new();
        for (f, _) in &self.factors {
            for r in AlgebraicNumber::real_roots(f) {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots
            .into_iter()
            .map(|r| {
                let m = self.multiplicity(&r);
                (r, m)
            })
            .collect()
    }
}

/// `det(xI - S(G))` in factored form.
///
/// With components `H_1..H_t`, `S(G) = B + J` where `B` is block diagonal with blocks
/// `C_i = -2A(H_i) - I`. The matrix determinant lemma gives
/// `det(xI - S) = ∏ φ_i · (1 - Σ N_i / φ_i)` with `φ_i = det(xI - C_i)` and
/// `N_i = φ_i - det(xI - S(H_i))`. Identical components are grouped, so a union of `t`
/// copies costs one small characteristic polynomial.
pub fn seidel_charpoly(g: &Graph) -> FactoredPoly {
    let comps = g.components();
    if comps.len() == 1 {
        return FactoredPoly::single(seidel(g).matrix.charpoly());
    }
    // group identical induced components, then identical (φ, ψ) pairs
    let mut by_graph: HashMap<Graph, usize> = HashMap::new();
    for comp in &comps {
        let h = g.induced(comp).expect("component is non-empty");
        *by_graph.entry(h).or_default() += 1;
    }
    let mut groups: Vec<(IntPoly, IntPoly, usize)> = Vec::new();
    let mut sorted: Vec<(Graph, usize)> = by_graph.into_iter().collect();
    sorted.sort_by_key(|(h, _)| (h.order(), crate::graph::graph6_encode(h)));
    for (h, m) in sorted {
        let s = seidel(&h).matrix;
        let psi = s.charpoly();
        // C = S(H) - J
        let c = IntMatrix::from_fn(h.order(), |i, j| {
            if i == j {
                -1
            } else {
                i64::try_from(s.get(i, j)).unwrap() - 1
            }
        });
        let phi = c.charpoly();
        match groups.iter_mut().find(|(p, q, _)| *p == phi && *q == psi) {
            Some(gr) => gr.2 += m,
            None => groups.push((phi, psi, m)),
        }
    }
    let mut factors: Vec<(IntPoly, usize)> = groups
        .iter()
        .filter(|(_, _, m)| *m > 1)
        .map(|(phi, _, m)| (phi.clone(), m - 1))
        .collect();
    let prod_all = groups
        .iter()
        .fold(IntPoly::one(), |acc, (phi, _, _)| &acc * phi);
    let mut rest = prod_all;
    for (k, (phi_k, psi_k, m_k)) in groups.iter().enumerate() {
        let n_k = phi_k - psi_k;
        let others = groups
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(IntPoly::one(), |acc, (_, (phi, _, _))| &acc * phi);
        let term = (&n_k * &others).scale(&BigInt::from(*m_k));
        rest = &rest - &term;
    }
    factors.push((rest, 1));
    FactoredPoly { factors }
}

/// Exact least Seidel eigenvalue.
pub fn seidel_min_eigenvalue(g: &Graph) -> AlgebraicNumber {
    seidel_charpoly(g)
        .least_root()
        .expect("characteristic polynomials of symmetric matrices have real roots")
}

pub fn seidel_eigen_multiplicity(g: &Graph, a: &AlgebraicNumber) -> usize {
    seidel_charpoly(g).multiplicity(a)
}

/// `rank(S(G) + beta I)`.
pub fn seidel_rank_shifted(g: &Graph, beta: &AlgebraicNumber) -> usize {
    g.order() - seidel_eigen_multiplicity(g, &beta.neg())
}

/// Exact spectral radius (largest adjacency eigenvalue).
pub fn spectral_radius(g: &Graph) -> AlgebraicNumber {
    let comps = g.components();
    if comps.len() == 1 {
        return AlgebraicNumber::greatest_root(&adjacency_matrix(g).charpoly())
            .expect("adjacency spectrum is real");
    }
    let mut seen: HashMap<Graph, ()> = HashMap::new();
    comps
        .iter()
        .filter_map(|c| {
            let h = g.induced(c).unwrap();
            seen.insert(h.clone(), ()).is_none().then_some(h)
        })
        .map(|h| spectral_radius(&h))
        .max()
        .unwrap()
}

/// Mod-2 congruence: `det(xI + S(G)) ≡ det(xI - J + I) (mod 2)`.
pub fn parity_identity_check(g: &Graph) -> bool {
    let n = g.order();
    let lhs = seidel(g).neg().charpoly_mod2();
    let rhs = IntMatrix::from_fn(n, |i, j| i64::from(i != j)).charpoly_mod2();
    lhs == rhs
}

/// Key constant on switching-isomorphism classes: for each vertex `v`, switch so `v` is
/// isolated and canonically label; keep the least key.
pub fn switching_canonical(g: &Graph) -> Result<CanonicalKey> {
    let n = g.order();
    if n > SWITCHING_KEY_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: SWITCHING_KEY_LIMIT,
        });
    }
    let mut best: Option<CanonicalKey> = None;
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        let key = canonical_key(&switch(g, &nbrs)?)?;
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    Ok(best.expect("order at least 1"))
}

/// If `h` arises from `g` by switching (same labels), the switched set containing vertex 0's
/// complement side; `None` otherwise.
pub fn switching_set(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if h.order() != n {
        return None;
    }
    // x in X iff the pair (0, x) differs; then every pair must differ iff exactly one end is in X
    let inside: Vec<bool> = (0..n)
        .map(|x| x != 0 && g.has_edge(0, x) != h.has_edge(0, x))
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if (g.has_edge(u, v) != h.has_edge(u, v)) != (inside[u] != inside[v]) {
                return None;
            }
        }
    }
    Some((0..n).filter(|&x| inside[x]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BigRational;
    use crate::graph::{complement, complete, cycle, disjoint_union, isomorphism_classes, line_graph, path, petersen};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn int(i: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(i)
    }

    fn spectrum(g: &Graph) -> Vec<(f64, usize)> {
        seidel_charpoly(g)
            .roots()
            .into_iter()
            .map(|(r, m)| (r.to_f64(), m))
            .collect()
    }

    #[test]
    fn empty_and_complete_spectra() {
        let e = Graph::empty(5).unwrap();
        assert_eq!(spectrum(&e), vec![(-1.0, 4), (4.0, 1)]);
        assert_eq!(spectrum(&complete(5).unwrap()), vec![(-4.0, 1), (1.0, 4)]);
    }

    #[test]
    fn two_k2() {
        let g = disjoint_union(&complete(2).unwrap(), 2).unwrap();
        assert_eq!(spectrum(&g), vec![(-3.0, 1), (1.0, 3)]);
        assert_eq!(seidel_min_eigenvalue(&g), int(-3));
        assert_eq!(seidel_rank_shifted(&g, &int(3)), 3);
    }

    #[test]
    fn complement_negates() {
        let g = cycle(6).unwrap();
        assert_eq!(seidel(&complement(&g)).into_matrix(), seidel(&g).neg());
        // min eig of S(G) = -max eig of S(complement)
        let max_c = seidel_charpoly(&complement(&g)).greatest_root().unwrap();
        assert_eq!(seidel_min_eigenvalue(&g), max_c.neg());
    }

    #[test]
    fn line_graph_complement_of_petersen() {
        let h = complement(&line_graph(&petersen()).unwrap());
        assert_eq!(seidel_min_eigenvalue(&h), int(-6));
        assert_eq!(seidel_eigen_multiplicity(&h, &int(-6)), 1);
    }

    #[test]
    fn kneser_spectrum() {
        let g = crate::graph::kneser(8, 2).unwrap();
        assert_eq!(spectrum(&g), vec![(-3.0, 21), (9.0, 7)]);
    }

    #[test]
    fn factored_charpoly_matches_direct() {
        for g in isomorphism_classes(6).unwrap() {
            assert_eq!(seidel_charpoly(&g).expand(), seidel(&g).matrix.charpoly(), "{g:?}");
        }
        let g = disjoint_union(&cycle(5).unwrap(), 4).unwrap();
        assert_eq!(seidel_charpoly(&g).expand(), seidel(&g).matrix.charpoly());
    }

    #[test]
    fn switching_k2() {
        let k2 = complete(2).unwrap();
        let e2 = switch(&k2, &[0]).unwrap();
        assert_eq!(e2, Graph::empty(2).unwrap());
        assert_eq!(spectrum(&k2), spectrum(&e2));
        assert_eq!(switching_canonical(&k2).unwrap(), switching_canonical(&e2).unwrap());
    }

    #[test]
    fn switching_classes_on_four_vertices() {
        // brute force over all 2^6 labelled graphs
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let keys: BTreeSet<_> = (0u32..64)
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                switching_canonical(&Graph::from_edges(4, &edges).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(keys.len(), 3);
    }

    #[test]
    fn parity_examples() {
        assert!(parity_identity_check(&complete(5).unwrap()));
        assert!(parity_identity_check(&path(2).unwrap()));
        assert_eq!(seidel(&path(2).unwrap()).neg().charpoly_mod2().to_string(), "x^2 + 1");
        // n = 4: (x+1)^4, n = 5: (x+1)^4 x
        let s4 = seidel(&cycle(4).unwrap()).into_matrix().charpoly_mod2();
        assert_eq!(s4.to_string(), "x^4 + 1");
        let s5 = seidel(&cycle(5).unwrap()).into_matrix().charpoly_mod2();
        assert_eq!(s5.to_string(), "x^5 + x");
    }

    #[test]
    fn spectral_radii() {
        assert_eq!(spectral_radius(&complete(4).unwrap()), int(3));
        let sq5 = AlgebraicNumber::sqrt(&BigRational::from_integer(5.into())).unwrap();
        assert_eq!(spectral_radius(&crate::graph::star(5).unwrap()), sq5);
        let u = disjoint_union(&cycle(5).unwrap(), 3).unwrap();
        assert_eq!(spectral_radius(&u), int(2));
    }

    #[test]
    fn labelled_switching_set() {
        let g = petersen();
        let h = switch(&g, &[1, 4, 7]).unwrap();
        assert_eq!(switching_set(&g, &h), Some(vec![1, 4, 7]));
        assert_eq!(switching_set(&g, &complement(&g)), None);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n, any::<u64>()).prop_map(|(n, bits)| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits >> (i % 64) & 1 == 1 {
                        g.set_edge(u, v, true);
                    }
                    i += 1;
                }
            }
            g
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn switching_preserves_charpoly_and_key(g in arb_graph(7), subset in any::<u8>(), perm_seed in any::<u64>()) {
            let n = g.order();
            let x: Vec<usize> = (0..n).filter(|&v| subset >> v & 1 == 1).collect();
            let h = switch(&g, &x).unwrap();
            prop_assert_eq!(seidel(&h).into_matrix().charpoly(), seidel(&g).into_matrix().charpoly());
            prop_assert_eq!(switching_canonical(&h).unwrap(), switching_canonical(&g).unwrap());
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = perm_seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(switching_canonical(&g.relabel(&perm).unwrap()).unwrap(), switching_canonical(&g).unwrap());
        }

        #[test]
        fn parity_identity_holds(g in arb_graph(9)) {
            prop_assert!(parity_identity_check(&g));
        }
    }
}
