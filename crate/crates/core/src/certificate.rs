//! JSON certificates and their independent re-verification.
//!
//! Every number is written exactly: integers and rationals as decimal strings, algebraic
//! numbers as a defining polynomial (coefficients lowest degree first) plus an isolating
//! interval. Verification starts again from the graph6 string.

use crate::arith::{AlgebraicNumber, BigInt, BigRational, IntPoly};
use crate::constructions::{NBoundCert, RBoundCert};
use crate::error::{Error, Result};
use crate::graph::{graph6_decode, graph6_encode, Graph};
use crate::seidel::{seidel_charpoly, spectral_radius};
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

/// Witness that `lambda - epsilon < rho(graph) <= lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusCert {
    pub graph: Graph,
    pub lambda: AlgebraicNumber,
    pub epsilon: BigRational,
    pub rho: AlgebraicNumber,
    pub provenance: Vec<String>,
}

impl RadiusCert {
    pub fn new(graph: Graph, lambda: AlgebraicNumber, epsilon: BigRational) -> Self {
        let rho = spectral_radius(&graph);
        RadiusCert {
            graph,
            lambda,
            epsilon,
            rho,
            provenance: vec!["shearer_graph".into()],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    RBound(RBoundCert),
    NBound(NBoundCert),
    Radius(RadiusCert),
}

/// The first invariant that failed to re-verify.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyFailure {
    #[error("order mismatch: certificate claims n = {claimed}, graph has {actual} vertices")]
    OrderMismatch { claimed: usize, actual: usize },
    #[error("eigenvalue threshold: least Seidel eigenvalue {min} is below -beta = {neg_beta}")]
    EigenvalueThreshold { min: String, neg_beta: String },
    #[error("min eigenvalue mismatch: claimed {claimed}, computed {actual}")]
    MinEigenvalueMismatch { claimed: String, actual: String },
    #[error("multiplicity mismatch: claimed {claimed}, computed {actual}")]
    MultiplicityMismatch { claimed: usize, actual: usize },
    #[error("rank mismatch: claimed d = {claimed}, rank(S + beta I) = {actual}")]
    RankMismatch { claimed: usize, actual: usize },
    #[error("alpha mismatch: alpha {alpha} is not 1/beta for beta = {beta}")]
    AlphaMismatch { alpha: String, beta: String },
    #[error("line count mismatch: claimed n = {claimed}, witness has {actual}")]
    LineCountMismatch { claimed: usize, actual: usize },
    #[error("dimension too small: d = {claimed} is below the witness rank {rank}")]
    DimensionTooSmall { claimed: usize, rank: usize },
    #[error("eta mismatch: claimed {claimed}, n/d - 1 = {actual}")]
    EtaMismatch { claimed: String, actual: String },
    #[error("spectral radius mismatch: claimed {claimed}, computed {actual}")]
    RadiusMismatch { claimed: String, actual: String },
    #[error("spectral radius out of range: {rho} is not in (lambda - epsilon, lambda]")]
    RadiusOutOfRange { rho: String },
    #[error("non-positive epsilon")]
    NonPositiveEpsilon,
    #[error("witness: {0}")]
    Witness(Box<VerifyFailure>),
}

pub fn verify_rbound(c: &RBoundCert) -> Result<(), VerifyFailure> {
    let actual = c.graph.order();
    if c.n != actual {
        return Err(VerifyFailure::OrderMismatch { claimed: c.n, actual });
    }
    let phi = seidel_charpoly(&c.graph);
    let min = phi.least_root().expect("real spectrum");
    let neg_beta = c.beta.neg();
    if min < neg_beta {
        return Err(VerifyFailure::EigenvalueThreshold {
            min: min.to_string(),
            neg_beta: neg_beta.to_string(),
        });
    }
    if min != c.min_eig {
        return Err(VerifyFailure::MinEigenvalueMismatch {
            claimed: c.min_eig.to_string(),
            actual: min.to_string(),
        });
    }
    let m = phi.multiplicity(&neg_beta);
    if m != c.multiplicity {
        return Err(VerifyFailure::MultiplicityMismatch {
            claimed: c.multiplicity,
            actual: m,
        });
    }
    if c.d != c.n - m {
        return Err(VerifyFailure::RankMismatch {
            claimed: c.d,
            actual: c.n - m,
        });
    }
    Ok(())
}

pub fn verify_nbound(c: &NBoundCert) -> Result<(), VerifyFailure> {
    verify_rbound(&c.witness).map_err(|e| VerifyFailure::Witness(Box::new(e)))?;
    let w = &c.witness;
    let recip_ok = w.beta.recip().map(|r| r == c.alpha).unwrap_or(false);
    if !recip_ok {
        return Err(VerifyFailure::AlphaMismatch {
            alpha: c.alpha.to_string(),
            beta: w.beta.to_string(),
        });
    }
    if c.n != w.n {
        return Err(VerifyFailure::LineCountMismatch { claimed: c.n, actual: w.n });
    }
    if c.d < w.d || c.d == 0 {
        return Err(VerifyFailure::DimensionTooSmall { claimed: c.d, rank: w.d });
    }
    let eta = BigRational::new(c.n.into(), c.d.into()) - BigRational::one();
    if eta != c.eta {
        return Err(VerifyFailure::EtaMismatch {
            claimed: c.eta.to_string(),
            actual: eta.to_string(),
        });
    }
    Ok(())
}

pub fn verify_radius(c: &RadiusCert) -> Result<(), VerifyFailure> {
    if c.epsilon <= BigRational::from_integer(0.into()) {
        return Err(VerifyFailure::NonPositiveEpsilon);
    }
    let rho = spectral_radius(&c.graph);
    if rho != c.rho {
        return Err(VerifyFailure::RadiusMismatch {
            claimed: c.rho.to_string(),
            actual: rho.to_string(),
        });
    }
    if rho > c.lambda || rho <= c.lambda.affine(&BigRational::one(), &-&c.epsilon) {
        return Err(VerifyFailure::RadiusOutOfRange { rho: rho.to_string() });
    }
    Ok(())
}

impl Certificate {
    pub fn verify(&self) -> Result<(), VerifyFailure> {
        match self {
            Certificate::RBound(c) => verify_rbound(c),
            Certificate::NBound(c) => verify_nbound(c),
            Certificate::Radius(c) => verify_radius(c),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::RBound(_) => "r_bound",
            Certificate::NBound(_) => "n_bound",
            Certificate::Radius(_) => "spectral_radius",
        }
    }

    pub fn to_value(&self) -> Value {
        let v = match self {
            Certificate::RBound(c) => serde_json::to_value(RBoundJson::from(c)),
            Certificate::NBound(c) => serde_json::to_value(NBoundJson::from(c)),
            Certificate::Radius(c) => serde_json::to_value(RadiusJson::from(c)),
        };
        v.expect("certificate JSON is always representable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }

    /// Parses a certificate. Structural problems (unknown kind, bad graph6, invalid algebraic
    /// data) are `InvalidCertificate`; numeric claims are only checked by [`verify`](Self::verify).
    pub fn from_value(v: &Value) -> Result<Self> {
        let invalid = |e: serde_json::Error| Error::InvalidCertificate(e.to_string());
        let schema = v.get("schema").and_then(Value::as_u64);
        if schema != Some(u64::from(SCHEMA_VERSION)) {
            return Err(Error::InvalidCertificate(format!(
                "unsupported schema {:?}",
                v.get("schema")
            )));
        }
        match v.get("kind").and_then(Value::as_str) {
            Some("r_bound") => {
                let j: RBoundJson = serde_json::from_value(v.clone()).map_err(invalid)?;
                Ok(Certificate::RBound(j.try_into()?))
            }
            Some("n_bound") => {
                let j: NBoundJson = serde_json::from_value(v.clone()).map_err(invalid)?;
                Ok(Certificate::NBound(j.try_into()?))
            }
            Some("spectral_radius") => {
                let j: RadiusJson = serde_json::from_value(v.clone()).map_err(invalid)?;
                Ok(Certificate::Radius(j.try_into()?))
            }
            other => Err(Error::InvalidCertificate(format!("unknown kind {other:?}"))),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::InvalidCertificate(e.to_string()))?;
        Self::from_value(&v)
    }
}

impl From<RBoundCert> for Certificate {
    fn from(c: RBoundCert) -> Self {
        Certificate::RBound(c)
    }
}

impl From<NBoundCert> for Certificate {
    fn from(c: NBoundCert) -> Self {
        Certificate::NBound(c)
    }
}

impl From<RadiusCert> for Certificate {
    fn from(c: RadiusCert) -> Self {
        Certificate::Radius(c)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(q: &BigRational) -> Self {
        RationalJson {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalJson> for BigRational {
    type Error = Error;
    fn try_from(j: &RationalJson) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| Error::InvalidCertificate(format!("not an integer: {s:?}")))
        };
        let den = parse(&j.den)?;
        if den == BigInt::from(0) {
            return Err(Error::InvalidCertificate("zero denominator".into()));
        }
        Ok(BigRational::new(parse(&j.num)?, den))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicJson {
    pub poly: Vec<String>,
    pub interval: [RationalJson; 2],
}

impl From<&AlgebraicNumber> for AlgebraicJson {
    fn from(a: &AlgebraicNumber) -> Self {
        let (lo, hi) = a.interval();
        AlgebraicJson {
            poly: a.defining_poly().coeffs().iter().map(ToString::to_string).collect(),
            interval: [lo.into(), hi.into()],
        }
    }
}

impl TryFrom<&AlgebraicJson> for AlgebraicNumber {
    type Error = Error;
    fn try_from(j: &AlgebraicJson) -> Result<Self> {
        let coeffs = j
            .poly
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| Error::InvalidCertificate(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let lo = BigRational::try_from(&j.interval[0])?;
        let hi = BigRational::try_from(&j.interval[1])?;
        AlgebraicNumber::new(IntPoly::new(coeffs), lo, hi)
            .map_err(|e| Error::InvalidCertificate(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct RBoundJson {
    schema: u32,
    kind: String,
    graph6: String,
    beta: AlgebraicJson,
    n: usize,
    d: usize,
    min_eig: AlgebraicJson,
    multiplicity: usize,
    provenance: Vec<String>,
}

impl From<&RBoundCert> for RBoundJson {
    fn from(c: &RBoundCert) -> Self {
        RBoundJson {
            schema: SCHEMA_VERSION,
            kind: "r_bound".into(),
            graph6: graph6_encode(&c.graph),
            beta: (&c.beta).into(),
            n: c.n,
            d: c.d,
            min_eig: (&c.min_eig).into(),
            multiplicity: c.multiplicity,
            provenance: c.provenance.clone(),
        }
    }
}

impl TryFrom<RBoundJson> for RBoundCert {
    type Error = Error;
    fn try_from(j: RBoundJson) -> Result<Self> {
        Ok(RBoundCert {
            graph: decode(&j.graph6)?,
            beta: (&j.beta).try_into()?,
            n: j.n,
            d: j.d,
            min_eig: (&j.min_eig).try_into()?,
            multiplicity: j.multiplicity,
            provenance: j.provenance,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct NBoundJson {
    schema: u32,
    kind: String,
    alpha: AlgebraicJson,
    d: usize,
    n: usize,
    eta: RationalJson,
    witness: RBoundJson,
    provenance: Vec<String>,
}

impl From<&NBoundCert> for NBoundJson {
    fn from(c: &NBoundCert) -> Self {
        NBoundJson {
            schema: SCHEMA_VERSION,
            kind: "n_bound".into(),
            alpha: (&c.alpha).into(),
            d: c.d,
            n: c.n,
            eta: (&c.eta).into(),
            witness: (&c.witness).into(),
            provenance: c.provenance.clone(),
        }
    }
}

impl TryFrom<NBoundJson> for NBoundCert {
    type Error = Error;
    fn try_from(j: NBoundJson) -> Result<Self> {
        Ok(NBoundCert {
            alpha: (&j.alpha).try_into()?,
            d: j.d,
            n: j.n,
            eta: (&j.eta).try_into()?,
            witness: j.witness.try_into()?,
            provenance: j.provenance,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct RadiusJson {
    schema: u32,
    kind: String,
    graph6: String,
    lambda: AlgebraicJson,
    epsilon: RationalJson,
    rho: AlgebraicJson,
    provenance: Vec<String>,
}

impl From<&RadiusCert> for RadiusJson {
    fn from(c: &RadiusCert) -> Self {
        RadiusJson {
            schema: SCHEMA_VERSION,
            kind: "spectral_radius".into(),
            graph6: graph6_encode(&c.graph),
            lambda: (&c.lambda).into(),
            epsilon: (&c.epsilon).into(),
            rho: (&c.rho).into(),
            provenance: c.provenance.clone(),
        }
    }
}

impl TryFrom<RadiusJson> for RadiusCert {
    type Error = Error;
    fn try_from(j: RadiusJson) -> Result<Self> {
        Ok(RadiusCert {
            graph: decode(&j.graph6)?,
            lambda: (&j.lambda).try_into()?,
            epsilon: (&j.epsilon).try_into()?,
            rho: (&j.rho).try_into()?,
            provenance: j.provenance,
        })
    }
}

fn decode(s: &str) -> Result<Graph> {
    graph6_decode(s).map_err(|e| Error::InvalidCertificate(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{certify, n_from_r, shearer_graph, union_cert};
    use crate::graph::{complete, kneser};

    fn kneser_cert() -> RBoundCert {
        certify(&kneser(8, 2).unwrap(), &AlgebraicNumber::from_integer(3)).unwrap()
    }

    #[test]
    fn round_trip_rbound() {
        let c: Certificate = kneser_cert().into();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.verify(), Ok(()));
    }

    #[test]
    fn round_trip_nbound_irrational() {
        let u = union_cert(&crate::graph::path(3).unwrap(), 3).unwrap();
        let c: Certificate = n_from_r(&u, u.d + 2).unwrap().into();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.verify(), Ok(()));
    }

    #[test]
    fn round_trip_radius() {
        let lam = AlgebraicNumber::from_ratio(5, 2);
        let e = BigRational::new(1.into(), 1000.into());
        let g = shearer_graph(&lam, &e).unwrap();
        let c: Certificate = RadiusCert::new(g, lam, e).into();
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back.verify(), Ok(()));
    }

    #[test]
    fn tampered_rank() {
        let mut c = kneser_cert();
        c.d -= 1;
        let err = verify_rbound(&c).unwrap_err();
        assert!(err.to_string().starts_with("rank mismatch"));
    }

    #[test]
    fn tampered_beta() {
        let mut c = kneser_cert();
        c.beta = AlgebraicNumber::from_ratio(3, 2);
        let err = verify_rbound(&c).unwrap_err();
        assert!(err.to_string().starts_with("eigenvalue threshold"), "{err}");
    }

    #[test]
    fn tampered_eta_and_witness() {
        let u = union_cert(&complete(2).unwrap(), 4).unwrap();
        let mut nb = n_from_r(&u, 5).unwrap();
        nb.eta = BigRational::one();
        assert!(matches!(verify_nbound(&nb), Err(VerifyFailure::EtaMismatch { .. })));
        let mut nb = n_from_r(&u, 5).unwrap();
        nb.witness.multiplicity += 1;
        assert!(matches!(verify_nbound(&nb), Err(VerifyFailure::Witness(_))));
    }

    #[test]
    fn structural_errors() {
        assert!(Certificate::from_json("{}").is_err());
        let mut v = Certificate::from(kneser_cert()).to_value();
        v["graph6"] = Value::from("!!");
        assert!(matches!(Certificate::from_value(&v), Err(Error::InvalidCertificate(_))));
        let mut v = Certificate::from(kneser_cert()).to_value();
        v["schema"] = Value::from(2);
        assert!(Certificate::from_value(&v).is_err());
    }
}
