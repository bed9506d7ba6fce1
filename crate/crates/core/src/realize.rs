//! Explicit equiangular line systems from rank certificates, and back.

use crate::arith::AlgebraicNumber;
use crate::certificate::AlgebraicJson;
use crate::constructions::RBoundCert;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seidel::seidel;
use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// Unit vectors spanning lines with common angle `arccos alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineSystem {
    pub dim: usize,
    pub alpha: AlgebraicNumber,
    pub vectors: Vec<Vec<f64>>,
    pub tolerance: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineReport {
    pub max_norm_deviation: f64,
    pub max_cosine_deviation: f64,
    pub passed: bool,
}

/// `1e-9` up to 100 lines, growing linearly beyond.
pub fn default_tolerance(n: usize) -> f64 {
    1e-9 * (n as f64 / 100.0).max(1.0)
}

impl LineSystem {
    pub fn new(alpha: AlgebraicNumber, vectors: Vec<Vec<f64>>, tolerance: f64) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        if dim == 0 || vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::InvalidParameters(
                "vectors must be non-empty and of equal positive dimension".into(),
            ));
        }
        if tolerance.is_nan() || tolerance <= 0.0 {
            return Err(Error::InvalidParameters("tolerance must be positive".into()));
        }
        Ok(LineSystem {
            dim,
            alpha,
            vectors,
            tolerance,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// One vector per row, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for v in &self.vectors {
            let row: Vec<String> = v.iter().map(|x| format!("{x:.16e}")).collect();
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        out
    }

    /// Parses CSV rows and rejects systems that fail [`verify_lines`].
    pub fn from_csv(text: &str, alpha: AlgebraicNumber, tolerance: f64) -> Result<Self> {
        let vectors = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(',')
                    .map(|x| {
                        x.trim().parse::<f64>().map_err(|_| {
                            Error::InvalidParameters(format!("not a number: {x:?}"))
                        })
                    })
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(alpha, vectors, tolerance)?.validated()
    }

    pub fn to_json(&self) -> String {
        let j = LineSystemJson {
            schema: crate::certificate::SCHEMA_VERSION,
            kind: "line_system".into(),
            dim: self.dim,
            n: self.len(),
            alpha: (&self.alpha).into(),
            alpha_approx: self.alpha.to_f64(),
            tolerance: self.tolerance,
            vectors: self.vectors.clone(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: LineSystemJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidParameters(e.to_string()))?;
        if j.kind != "line_system" || j.vectors.len() != j.n {
            return Err(Error::InvalidParameters("not a line system".into()));
        }
        let ls = Self::new((&j.alpha).try_into()?, j.vectors, j.tolerance)?;
        if ls.dim != j.dim {
            return Err(Error::InvalidParameters("dimension mismatch".into()));
        }
        ls.validated()
    }

    fn validated(self) -> Result<Self> {
        let r = verify_lines(&self);
        if r.passed {
            Ok(self)
        } else {
            Err(Error::FactorizationResidual {
                residual: r.max_norm_deviation.max(r.max_cosine_deviation),
                tolerance: self.tolerance,
            })
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LineSystemJson {
    schema: u32,
    kind: String,
    dim: usize,
    n: usize,
    alpha: AlgebraicJson,
    alpha_approx: f64,
    tolerance: f64,
    vectors: Vec<Vec<f64>>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Factors `I + alpha S` with `alpha = 1/beta`, keeping the `d` positive eigenpairs.
pub fn realize_lines(cert: &RBoundCert) -> Result<LineSystem> {
    let n = cert.n;
    if cert.beta <= AlgebraicNumber::from_integer(0) {
        return Err(Error::InvalidParameters("beta must be positive".into()));
    }
    let alpha = cert.beta.recip()?;
    let a = alpha.to_f64();
    let s = seidel(&cert.graph);
    let m = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            1.0
        } else {
            a * s.entry(i, j) as f64
        }
    });
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]).then(i.cmp(&j)));
    let kept = &order[..cert.d];
    let tolerance = default_tolerance(n);
    if let Some(&last) = kept.last() {
        if eig.eigenvalues[last] <= tolerance {
            return Err(Error::FactorizationResidual {
                residual: eig.eigenvalues[last].abs(),
                tolerance,
            });
        }
    }
    let columns: Vec<Vec<f64>> = kept
        .iter()
        .map(|&k| {
            let col = eig.eigenvectors.column(k);
            let flip = col
                .iter()
                .find(|x| x.abs() > 1e-8)
                .is_some_and(|&x| x < 0.0);
            let scale = eig.eigenvalues[k].sqrt() * if flip { -1.0 } else { 1.0 };
            col.iter().map(|x| x * scale).collect()
        })
        .collect();
    let vectors = (0..n)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect();
    LineSystem::new(alpha, vectors, tolerance)?.validated()
}

pub fn verify_lines(ls: &LineSystem) -> LineReport {
    let a = ls.alpha.to_f64();
    let mut max_norm: f64 = 0.0;
    let mut max_cos: f64 = 0.0;
    for (i, v) in ls.vectors.iter().enumerate() {
        max_norm = max_norm.max((dot(v, v).sqrt() - 1.0).abs());
        for w in &ls.vectors[i + 1..] {
            max_cos = max_cos.max((dot(v, w).abs() - a).abs());
        }
    }
    LineReport {
        max_norm_deviation: max_norm,
        max_cosine_deviation: max_cos,
        passed: max_norm <= ls.tolerance && max_cos <= ls.tolerance,
    }
}

/// Vertices are lines; `x ~ y` iff `<v_x, v_y> < 0`.
pub fn graph_from_lines(ls: &LineSystem) -> Result<Graph> {
    let n = ls.len();
    let a = ls.alpha.to_f64();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ip = dot(&ls.vectors[i], &ls.vectors[j]);
            if ip.abs() <= ls.tolerance && a > ls.tolerance {
                return Err(Error::AmbiguousSign(i, j));
            }
            if ip < 0.0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{certify, line_graph_complement_cert, union_cert};
    use crate::graph::{complete, cycle, disjoint_union, kneser, petersen};
    use crate::seidel::{switching_canonical, switching_set};

    fn int(i: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(i)
    }

    /// Orthonormal basis of the sum-zero hyperplane of `R^m`.
    fn helmert(m: usize) -> Vec<Vec<f64>> {
        (1..m)
            .map(|k| {
                let c = 1.0 / ((k * (k + 1)) as f64).sqrt();
                (0..m)
                    .map(|i| match i.cmp(&k) {
                        std::cmp::Ordering::Less => c,
                        std::cmp::Ordering::Equal => -(k as f64) * c,
                        std::cmp::Ordering::Greater => 0.0,
                    })
                    .collect()
            })
            .collect()
    }

    fn kneser_family() -> LineSystem {
        let basis = helmert(8);
        let mut vectors = Vec::new();
        for i in 0..8 {
            for j in i + 1..8 {
                let u: Vec<f64> = (0..8)
                    .map(|k| f64::from(u8::from(k == i || k == j)) - 0.25)
                    .collect();
                let norm = 1.5f64.sqrt();
                vectors.push(basis.iter().map(|b| dot(b, &u) / norm).collect());
            }
        }
        LineSystem::new(AlgebraicNumber::from_ratio(1, 3), vectors, 1e-12).unwrap()
    }

    #[test]
    fn closed_form_kneser_lines() {
        let ls = kneser_family();
        assert!(verify_lines(&ls).passed);
        assert_eq!(ls.dim, 7);
        assert_eq!(graph_from_lines(&ls).unwrap(), kneser(8, 2).unwrap());
    }

    #[test]
    fn realized_kneser_matches_closed_form() {
        let g = kneser(8, 2).unwrap();
        let ls = realize_lines(&certify(&g, &int(3)).unwrap()).unwrap();
        assert_eq!((ls.len(), ls.dim), (28, 7));
        let r = verify_lines(&ls);
        assert!(r.passed && r.max_cosine_deviation <= 1e-9);
        // both Gram matrices are I + S/3 up to switching
        let back = graph_from_lines(&ls).unwrap();
        let family = graph_from_lines(&kneser_family()).unwrap();
        assert!(switching_set(&back, &family).is_some());
    }

    #[test]
    fn small_round_trips() {
        let certs = [
            certify(&disjoint_union(&complete(2).unwrap(), 2).unwrap(), &int(3)).unwrap(),
            certify(&cycle(5).unwrap(), &AlgebraicNumber::sqrt(&crate::arith::BigRational::from_integer(5.into())).unwrap()).unwrap(),
            union_cert(&cycle(4).unwrap(), 3).unwrap(),
            line_graph_complement_cert(&petersen()).unwrap(),
        ];
        for c in &certs {
            let ls = realize_lines(c).unwrap();
            assert_eq!((ls.len(), ls.dim), (c.n, c.d));
            let back = graph_from_lines(&ls).unwrap();
            assert!(switching_set(&back, &c.graph).is_some());
            assert_eq!(switching_canonical(&back).unwrap(), switching_canonical(&c.graph).unwrap());
        }
    }

    #[test]
    fn two_k2_gives_three_dimensions() {
        let ls = realize_lines(&certify(&disjoint_union(&complete(2).unwrap(), 2).unwrap(), &int(3)).unwrap()).unwrap();
        assert_eq!(ls.dim, 3);
        assert!(verify_lines(&ls).max_cosine_deviation < 1e-12);
    }

    #[test]
    fn single_line() {
        let ls = realize_lines(&certify(&Graph::empty(1).unwrap(), &int(3)).unwrap()).unwrap();
        assert_eq!((ls.len(), ls.dim), (1, 1));
        assert!((ls.vectors[0][0].abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn perturbation_is_detected() {
        let mut ls = kneser_family();
        ls.vectors[0].iter_mut().for_each(|x| *x *= 1.0 + 1e-3);
        let r = verify_lines(&ls);
        assert!(!r.passed);
        assert!((r.max_norm_deviation - 1e-3).abs() < 1e-9);
    }

    #[test]
    fn orthonormal_pair() {
        let ls = LineSystem::new(int(0), vec![vec![1.0, 0.0], vec![0.0, 1.0]], 1e-9).unwrap();
        assert!(verify_lines(&ls).passed);
        assert_eq!(graph_from_lines(&ls).unwrap(), Graph::empty(2).unwrap());
    }

    #[test]
    fn mercedes() {
        let h = 3f64.sqrt() / 2.0;
        let vs = vec![vec![1.0, 0.0], vec![-0.5, h], vec![-0.5, -h]];
        let ls = LineSystem::new(AlgebraicNumber::from_ratio(1, 2), vs, 1e-12).unwrap();
        assert!(verify_lines(&ls).passed);
        assert_eq!(graph_from_lines(&ls).unwrap(), complete(3).unwrap());
    }

    #[test]
    fn ambiguous_sign() {
        let ls = LineSystem::new(AlgebraicNumber::from_ratio(1, 2), vec![vec![1.0, 0.0], vec![0.0, 1.0]], 1e-9).unwrap();
        assert_eq!(graph_from_lines(&ls), Err(Error::AmbiguousSign(0, 1)));
    }

    #[test]
    fn gram_rank_and_psd() {
        for c in [
            certify(&kneser(8, 2).unwrap(), &int(3)).unwrap(),
            line_graph_complement_cert(&petersen()).unwrap(),
        ] {
            let a = c.beta.recip().unwrap().to_f64();
            let s = seidel(&c.graph);
            let m = DMatrix::from_fn(c.n, c.n, |i, j| if i == j { 1.0 } else { a * s.entry(i, j) as f64 });
            let ev = SymmetricEigen::new(m).eigenvalues;
            assert!(ev.iter().all(|&x| x >= -1e-9));
            let rank = ev.iter().filter(|&&x| x > 1e-6 * c.n as f64).count();
            assert_eq!(rank, c.d);
        }
    }

    #[test]
    fn csv_and_json_round_trip() {
        let ls = realize_lines(&certify(&kneser(8, 2).unwrap(), &int(3)).unwrap()).unwrap();
        let csv = ls.to_csv();
        let back = LineSystem::from_csv(&csv, ls.alpha.clone(), ls.tolerance).unwrap();
        assert_eq!(back.vectors, ls.vectors);
        let back = LineSystem::from_json(&ls.to_json()).unwrap();
        assert_eq!(back, ls);
        let mut bad = ls.clone();
        bad.vectors[3][0] += 1e-3;
        assert!(LineSystem::from_csv(&bad.to_csv(), ls.alpha.clone(), ls.tolerance).is_err());
    }
}
