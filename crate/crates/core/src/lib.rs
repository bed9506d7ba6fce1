//! Exact Seidel-matrix spectra, constructions of equiangular line systems, and
//! re-verifiable certificates for the bounds they witness.
//!
//! A graph `G` on `n` vertices with least Seidel eigenvalue `>= -beta` gives `n` equiangular
//! lines at angle `arccos(1/beta)` in dimension `rank(S(G) + beta I)`. Everything that feeds a
//! certificate is computed exactly (integer characteristic polynomials, real algebraic
//! numbers); floating point appears only when writing down explicit vectors.

pub mod arith;
pub mod audit;
pub mod certificate;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod realize;
pub mod search;
pub mod seidel;

pub use arith::{AlgebraicNumber, BigInt, BigRational, IntMatrix, IntPoly};
pub use certificate::{Certificate, RadiusCert, VerifyFailure};
pub use constructions::{
    certify, line_graph_complement_cert, n_from_r, shearer_graph, theorem1_pipeline,
    union_cert, NBoundCert, RBoundCert,
};
pub use error::{Error, Result};
pub use graph::{graph6_decode, graph6_encode, Graph};
pub use realize::{graph_from_lines, realize_lines, verify_lines, LineReport, LineSystem};
pub use search::{compute_r, enumerate_switching_classes, r_table, RTableEntry, RValue};
pub use seidel::{seidel, seidel_min_eigenvalue, switching_canonical, SeidelMatrix};
