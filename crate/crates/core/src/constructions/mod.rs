//! Certificate-producing constructions: rank certificates for Seidel matrices, unions of
//! copies of a connected graph, complements of line graphs of cubic graphs, and the passage
//! from rank bounds to line counts.

mod shearer;

pub use shearer::{shearer_graph, shearer_graph_with_budget, DEFAULT_STEP_BUDGET};

use crate::arith::{AlgebraicNumber, BigInt, BigRational};
use crate::error::{Error, Result};
use crate::graph::{complement, disjoint_union, line_graph, Graph};
use crate::seidel::{seidel_charpoly, spectral_radius};
use num_traits::One;

/// Witness that `rank(S(graph) + beta I) = d` while the Seidel spectrum lies in `[-beta, ∞)`,
/// hence `R_beta(n) <= d`.
#[derive(Clone, Debug, PartialEq)]
pub struct RBoundCert {
    pub graph: Graph,
    pub beta: AlgebraicNumber,
    pub n: usize,
    pub d: usize,
    pub min_eig: AlgebraicNumber,
    pub multiplicity: usize,
    pub provenance: Vec<String>,
}

impl RBoundCert {
    /// `1 - d/n`.
    pub fn slack(&self) -> BigRational {
        BigRational::one() - BigRational::new(self.d.into(), self.n.into())
    }
}

/// Witness that `N_alpha(d) >= n`: `n` equiangular lines at angle `arccos alpha` in `R^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct NBoundCert {
    pub alpha: AlgebraicNumber,
    pub d: usize,
    pub n: usize,
    pub eta: BigRational,
    pub witness: RBoundCert,
    pub provenance: Vec<String>,
}

pub fn certify(g: &Graph, beta: &AlgebraicNumber) -> Result<RBoundCert> {
    certify_as(g, beta, "certify")
}

fn certify_as(g: &Graph, beta: &AlgebraicNumber, op: &str) -> Result<RBoundCert> {
    let phi = seidel_charpoly(g);
    let min_eig = phi.least_root().expect("symmetric matrices have real eigenvalues");
    let neg_beta = beta.neg();
    if min_eig < neg_beta {
        return Err(Error::EigenvalueBelowThreshold);
    }
    let multiplicity = phi.multiplicity(&neg_beta);
    Ok(RBoundCert {
        graph: g.clone(),
        beta: beta.clone(),
        n: g.order(),
        d: g.order() - multiplicity,
        min_eig,
        multiplicity,
        provenance: vec![op.to_string()],
    })
}

/// `2 rho + 1`.
pub fn union_beta(rho: &AlgebraicNumber) -> AlgebraicNumber {
    rho.affine(&BigRational::from_integer(2.into()), &BigRational::one())
}

/// Certificate for `t` disjoint copies of connected `g` at `beta = 2 rho(g) + 1`.
pub fn union_cert(g: &Graph, t: usize) -> Result<RBoundCert> {
    let components = g.components().len();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    if t < 2 {
        return Err(Error::InvalidParameters("union needs at least two copies".into()));
    }
    let beta = union_beta(&spectral_radius(g));
    let cert = certify_as(&disjoint_union(g, t)?, &beta, "union_cert")?;
    debug_assert!(cert.d + t <= t * g.order() + 1);
    Ok(cert)
}

/// Certificate for the complement of the line graph of a cubic graph on `4n'+2` vertices, at
/// `beta = 6n' - 6`. The multiplicity is reported as computed.
pub fn line_graph_complement_cert(g: &Graph) -> Result<RBoundCert> {
    if g.regular_degree() != Some(3) {
        return Err(Error::NotCubic);
    }
    let order = g.order();
    if order % 4 != 2 || order < 10 {
        return Err(Error::WrongOrder(order));
    }
    let n_prime = (order - 2) / 4;
    let beta = AlgebraicNumber::from_integer(6 * n_prime as i64 - 6);
    certify_as(&complement(&line_graph(g)?), &beta, "line_graph_complement_cert")
}

/// Reads a rank certificate as a line count: `R_beta(n) <= d` gives `N_{1/beta}(target_d) >= n`.
pub fn n_from_r(cert: &RBoundCert, target_d: usize) -> Result<NBoundCert> {
    if target_d < cert.d {
        return Err(Error::DimensionTooSmall {
            target: target_d,
            certified: cert.d,
        });
    }
    if target_d == 0 {
        return Err(Error::InvalidParameters("dimension must be positive".into()));
    }
    let alpha = cert.beta.recip()?;
    let mut provenance = cert.provenance.clone();
    provenance.push("n_from_r".into());
    Ok(NBoundCert {
        alpha,
        d: target_d,
        n: cert.n,
        eta: BigRational::new(cert.n.into(), target_d.into()) - BigRational::one(),
        witness: cert.clone(),
        provenance,
    })
}

/// Everything the density pipeline computed along the way.
#[derive(Clone, Debug)]
pub struct Theorem1Run {
    pub cert: NBoundCert,
    pub lambda: AlgebraicNumber,
    pub epsilon: BigRational,
    /// Spectral radius of the component graph.
    pub rho: AlgebraicNumber,
    /// Order of the component graph.
    pub component_order: usize,
}

impl Theorem1Run {
    /// `1/tau - 1/alpha = 2(lambda - rho)`, which lies in `[0, 2 epsilon)`.
    pub fn beta_gap(&self) -> f64 {
        2.0 * (self.lambda.to_f64() - self.rho.to_f64())
    }
}

/// The largest admissible `tau`: `1 / (1 + 2 sqrt(2 + sqrt 5))`.
pub fn tau_threshold() -> AlgebraicNumber {
    union_beta(&AlgebraicNumber::shearer_threshold())
        .recip()
        .expect("nonzero")
}

pub fn theorem1_pipeline(tau: &AlgebraicNumber, i: u32, t: usize) -> Result<NBoundCert> {
    theorem1_run(tau, i, t).map(|run| run.cert)
}

/// `lambda = (1/tau - 1)/2`, a graph with spectral radius in `(lambda - 2^-i, lambda]`, `t`
/// copies of it, and the resulting line count.
pub fn theorem1_run(tau: &AlgebraicNumber, i: u32, t: usize) -> Result<Theorem1Run> {
    if tau.cmp_rational(&BigRational::from_integer(0.into())).is_le() {
        return Err(Error::InvalidParameters("tau must be positive".into()));
    }
    if *tau > tau_threshold() {
        return Err(Error::BelowThreshold);
    }
    let half = BigRational::new(1.into(), 2.into());
    let lambda = tau.recip()?.affine(&half, &-&half);
    let epsilon = BigRational::new(BigInt::one(), BigInt::one() << i);
    let g = shearer_graph(&lambda, &epsilon)?;
    let mut witness = union_cert(&g, t)?;
    witness.provenance = vec!["shearer_graph".into(), "union_cert".into()];
    let cert = n_from_r(&witness, witness.d)?;
    Ok(Theorem1Run {
        rho: spectral_radius(&g),
        component_order: g.order(),
        cert,
        lambda,
        epsilon,
    })
}
