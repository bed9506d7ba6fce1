//! Exhaustive computation of `R_beta(n)` over switching classes of small order.

use crate::arith::AlgebraicNumber;
use crate::certificate::AlgebraicJson;
use crate::error::{Error, Result};
use crate::graph::{graph6_decode, graph6_encode, isomorphism_classes, Graph};
use crate::seidel::{seidel, switching_canonical, FactoredPoly};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Largest order the search accepts.
pub const SEARCH_LIMIT: usize = 10;

/// Number of switching classes for `n = 0..=10`, as produced by [`enumerate_switching_classes`].
pub const SWITCHING_CLASS_COUNTS: [usize; 11] = [1, 1, 1, 2, 3, 7, 16, 54, 243, 2038, 33120];

/// One representative per switching class on `n` vertices, in canonical-key order. Each
/// representative has an isolated vertex.
pub fn enumerate_switching_classes(n: usize) -> Result<Vec<Graph>> {
    if n > SEARCH_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: SEARCH_LIMIT,
        });
    }
    if n < 2 {
        return Err(Error::InvalidParameters("order must be at least 2".into()));
    }
    // every class has a member with vertex 0 isolated
    let keys: Vec<_> = isomorphism_classes(n - 1)?
        .par_iter()
        .map(|h| {
            let edges: Vec<_> = h.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
            switching_canonical(&Graph::from_edges(n, &edges).expect("valid edges"))
        })
        .collect::<Result<_>>()?;
    let unique: BTreeMap<_, ()> = keys.into_iter().map(|k| (k, ())).collect();
    Ok(unique.into_keys().map(|k| k.to_graph()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RValue {
    Exact(usize),
    /// No graph of this order has least Seidel eigenvalue `>= -beta`.
    Infeasible,
}

impl fmt::Display for RValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RValue::Exact(v) => write!(f, "{v}"),
            RValue::Infeasible => f.write_str("infeasible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RTableEntry {
    pub beta: AlgebraicNumber,
    pub n: usize,
    pub value: RValue,
    pub witness: Option<Graph>,
    pub classes_scanned: usize,
}

impl RTableEntry {
    pub fn to_json_line(&self) -> String {
        let value = match self.value {
            RValue::Exact(v) => json!(v),
            RValue::Infeasible => json!("infeasible"),
        };
        json!({
            "beta": AlgebraicJson::from(&self.beta),
            "n": self.n,
            "value": value,
            "witness": self.witness.as_ref().map(graph6_encode),
            "classes_scanned": self.classes_scanned,
        })
        .to_string()
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidParameters(format!("search record: {what}"));
        let v: Value = serde_json::from_str(line).map_err(|e| bad(&e.to_string()))?;
        let beta: AlgebraicJson =
            serde_json::from_value(v["beta"].clone()).map_err(|e| bad(&e.to_string()))?;
        let n = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let value = match &v["value"] {
            Value::Number(x) => RValue::Exact(x.as_u64().ok_or_else(|| bad("value"))? as usize),
            Value::String(s) if s == "infeasible" => RValue::Infeasible,
            _ => return Err(bad("value")),
        };
        let witness = match &v["witness"] {
            Value::String(s) => Some(graph6_decode(s)?),
            Value::Null => None,
            _ => return Err(bad("witness")),
        };
        Ok(RTableEntry {
            beta: (&beta).try_into()?,
            n,
            value,
            witness,
            classes_scanned: v["classes_scanned"].as_u64().ok_or_else(|| bad("classes_scanned"))? as usize,
        })
    }
}

/// `rank(S(g) + beta I)`, or `None` when `g` has a Seidel eigenvalue below `-beta`.
pub fn shifted_rank(g: &Graph, beta: &AlgebraicNumber) -> Option<usize> {
    let phi = FactoredPoly::single(seidel(g).as_matrix().charpoly());
    let neg = beta.neg();
    if phi.least_root().expect("real spectrum") < neg {
        return None;
    }
    Some(g.order() - phi.multiplicity(&neg))
}

pub fn compute_r(beta: &AlgebraicNumber, n: usize) -> Result<RTableEntry> {
    compute_r_with_workers(beta, n, rayon::current_num_threads())
}

pub fn compute_r_with_workers(beta: &AlgebraicNumber, n: usize, workers: usize) -> Result<RTableEntry> {
    let classes = enumerate_switching_classes(n)?;
    compute_r_over(beta, n, &classes, workers)
}

/// Minimum over the given representatives, split into `workers` contiguous chunks. Ties go to
/// the earliest representative, so the result does not depend on `workers`.
pub fn compute_r_over(
    beta: &AlgebraicNumber,
    n: usize,
    representatives: &[Graph],
    workers: usize,
) -> Result<RTableEntry> {
    let workers = workers.max(1);
    let chunk = representatives.len().div_ceil(workers).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let best = pool.install(|| {
        representatives
            .par_chunks(chunk)
            .enumerate()
            .filter_map(|(c, graphs)| {
                graphs
                    .iter()
                    .enumerate()
                    .filter_map(|(i, g)| shifted_rank(g, beta).map(|r| (r, c * chunk + i)))
                    .min()
            })
            .min()
    });
    Ok(RTableEntry {
        beta: beta.clone(),
        n,
        value: best.map_or(RValue::Infeasible, |(r, _)| RValue::Exact(r)),
        witness: best.map(|(_, i)| representatives[i].clone()),
        classes_scanned: representatives.len(),
    })
}

pub fn r_table(beta: &AlgebraicNumber, n_lo: usize, n_hi: usize, workers: usize) -> Result<Vec<RTableEntry>> {
    (n_lo..=n_hi)
        .map(|n| compute_r_with_workers(beta, n, workers))
        .collect()
}

/// Aligned text table.
pub fn render_table(entries: &[RTableEntry]) -> String {
    let rows: Vec<[String; 5]> = entries
        .iter()
        .map(|e| {
            [
                e.beta.to_short_string(),
                e.n.to_string(),
                e.value.to_string(),
                e.classes_scanned.to_string(),
                e.witness.as_ref().map_or("-".into(), graph6_encode),
            ]
        })
        .collect();
    let header = ["beta", "n", "R", "classes", "witness"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for r in &rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |r: &[String; 5]| {
        let cells: Vec<String> = r.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    out += &(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  ") + "\n");
    for r in &rows {
        out += &line(r);
    }
    out
}
