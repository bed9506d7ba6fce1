//! Exhaustive checks of the arithmetic constraints on Seidel spectra.

use crate::arith::{root_multiplicity, AlgebraicNumber, BigRational};
use crate::error::Result;
use crate::graph::{isomorphism_classes, Graph};
use crate::seidel::{parity_identity_check, seidel};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphAudit {
    /// `det(xI + S) ≡ det(xI - J + I) (mod 2)`.
    pub parity: bool,
    /// Even integer eigenvalues: multiplicity at most 1 for odd order, absent for even order.
    pub even_eigenvalues: bool,
    /// `sqrt 2` and `3/2` are not eigenvalues.
    pub never_eigenvalues: bool,
}

impl GraphAudit {
    pub fn passed(&self) -> bool {
        self.parity && self.even_eigenvalues && self.never_eigenvalues
    }
}

pub fn audit_graph(g: &Graph) -> GraphAudit {
    let n = g.order();
    let phi = seidel(g).as_matrix().charpoly();
    let limit = n as i64;
    let even_ok = (-limit..=limit).filter(|e| e % 2 == 0).all(|e| {
        let m = root_multiplicity(&phi, &AlgebraicNumber::from_integer(e));
        if n.is_multiple_of(2) {
            m == 0
        } else {
            m <= 1
        }
    });
    let sqrt2 = AlgebraicNumber::sqrt(&BigRational::from_integer(2.into())).expect("positive");
    let never_ok = root_multiplicity(&phi, &sqrt2) == 0
        && root_multiplicity(&phi, &AlgebraicNumber::from_ratio(3, 2)) == 0;
    GraphAudit {
        parity: parity_identity_check(g),
        even_eigenvalues: even_ok,
        never_eigenvalues: never_ok,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub n: usize,
    pub classes: usize,
    pub parity_failures: usize,
    pub even_failures: usize,
    pub never_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityAudit {
    pub rows: Vec<AuditRow>,
}

impl ParityAudit {
    pub fn total_classes(&self) -> usize {
        self.rows.iter().map(|r| r.classes).sum()
    }

    pub fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.parity_failures + r.even_failures + r.never_failures == 0)
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{:>3}  {:>8}  {:>6}  {:>6}  {:>6}\n",
            "n", "classes", "parity", "even", "never"
        );
        for r in &self.rows {
            out += &format!(
                "{:>3}  {:>8}  {:>6}  {:>6}  {:>6}\n",
                r.n, r.classes, r.parity_failures, r.even_failures, r.never_failures
            );
        }
        if self.passed() {
            out += &format!("all {} isomorphism classes pass\n", self.total_classes());
        } else {
            out += "FAILURES (columns count failing classes)\n";
        }
        out
    }
}

/// Audits every isomorphism class on `1..=max_n` vertices.
pub fn parity_audit(max_n: usize) -> Result<ParityAudit> {
    let rows = (1..=max_n)
        .map(|n| {
            let results: Vec<GraphAudit> = isomorphism_classes(n)?.par_iter().map(audit_graph).collect();
            Ok(AuditRow {
                n,
                classes: results.len(),
                parity_failures: results.iter().filter(|a| !a.parity).count(),
                even_failures: results.iter().filter(|a| !a.even_eigenvalues).count(),
                never_failures: results.iter().filter(|a| !a.never_eigenvalues).count(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(ParityAudit { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn five_vertices() {
        let a = parity_audit(5).unwrap();
        assert_eq!(a.total_classes(), 52);
        assert!(a.passed());
        assert!(a.render().ends_with("all 52 isomorphism classes pass\n"));
    }

    #[test]
    fn odd_order_admits_one_even_eigenvalue() {
        // S(C_5) has eigenvalue 0 once; S(K_3) has -2 once
        assert!(audit_graph(&cycle(5).unwrap()).passed());
        assert!(audit_graph(&complete(3).unwrap()).passed());
    }
}
