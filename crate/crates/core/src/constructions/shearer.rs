//! Graphs whose spectral radius approaches a prescribed value from below.
//!
//! Above `sqrt(2+sqrt(5))` every real is a limit of spectral radii. The construction grows a
//! caterpillar spine vertex by spine vertex. Writing `x_i` for the Perron entries on the spine
//! and `r_i = x_i / x_{i+1}`, a vertex with `n_i` pendant leaves satisfies
//! `r_i = lambda - 1/r_{i-1} - n_i/lambda`. The ratios must not drop below the fixed point
//! `r* = (lambda - sqrt(lambda^2 - 4)) / 2` of the bare path, so each step attaches the largest
//! `n_i` that keeps `r_i >= r*`. Every step is confirmed by an exact spectral radius and backed
//! off if it overshoots.

use crate::arith::{AlgebraicNumber, BigInt, BigRational};
use crate::error::{Error, Result};
use crate::graph::{caterpillar, spider, star, Graph};
use crate::seidel::spectral_radius;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Default number of exact spectral-radius evaluations before giving up.
pub const DEFAULT_STEP_BUDGET: usize = 10_000;

const FIXED_BITS: u32 = 256;

pub fn shearer_graph(lambda: &AlgebraicNumber, epsilon: &BigRational) -> Result<Graph> {
    shearer_graph_with_budget(lambda, epsilon, DEFAULT_STEP_BUDGET)
}

/// Like [`shearer_graph`], giving up with `BudgetExhausted` after `budget` exact evaluations.
pub fn shearer_graph_with_budget(
    lambda: &AlgebraicNumber,
    epsilon: &BigRational,
    budget: usize,
) -> Result<Graph> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidParameters("epsilon must be positive".into()));
    }
    let floor = lambda.affine(&BigRational::one(), &-epsilon);
    let mut search = Search {
        lambda,
        floor: &floor,
        budget,
        steps: 0,
    };
    match lambda.compare(&AlgebraicNumber::shearer_threshold()) {
        Ordering::Less => Err(Error::BelowThreshold),
        Ordering::Equal => search.spiders(),
        Ordering::Greater => match square_of(lambda) {
            Some(m) => star(m),
            None => search.caterpillar(),
        },
    }
}

/// `m` when `lambda = sqrt(m)` for a positive integer `m`.
fn square_of(lambda: &AlgebraicNumber) -> Option<usize> {
    if let Some(k) = lambda.as_integer() {
        return (&k * &k).to_usize();
    }
    let c = lambda.defining_poly().coeffs();
    if c.len() == 3 && c[1].is_zero() && c[2].is_one() && c[0].is_negative() {
        return (-&c[0]).to_usize();
    }
    None
}

struct Search<'a> {
    lambda: &'a AlgebraicNumber,
    floor: &'a AlgebraicNumber,
    budget: usize,
    steps: usize,
}

enum Verdict {
    Done,
    Below,
    Above,
}

impl Search<'_> {
    fn check(&mut self, g: &Graph) -> Result<Verdict> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let rho = spectral_radius(g);
        Ok(if rho > *self.lambda {
            Verdict::Above
        } else if rho > *self.floor {
            Verdict::Done
        } else {
            Verdict::Below
        })
    }

    /// At the threshold itself: the trees `T(1, k, k)` have spectral radius increasing to it.
    fn spiders(&mut self) -> Result<Graph> {
        for k in 1.. {
            let g = spider(&[1, k, k])?;
            match self.check(&g)? {
                Verdict::Done => return Ok(g),
                Verdict::Below => {}
                Verdict::Above => unreachable!("T(1,k,k) stays below the threshold"),
            }
        }
        unreachable!()
    }

    fn caterpillar(&mut self) -> Result<Graph> {
        let unit = BigInt::one() << (2 * FIXED_BITS);
        let width = BigRational::new(BigInt::one(), BigInt::one() << (FIXED_BITS + 8));
        let lo = self.lambda.lower_bound(&width);
        let lam = (lo * BigRational::from_integer(BigInt::one() << FIXED_BITS)).floor().to_integer();
        let r_star = (&lam - (&lam * &lam - &unit * 4u32).sqrt()) / 2u32;
        let margin = BigInt::one() << (FIXED_BITS / 2);

        let mut pendants: Vec<usize> = Vec::new();
        let mut inv_prev = BigInt::zero();
        loop {
            let avail = &lam - &inv_prev - &r_star - &margin;
            let mut k = if avail.is_positive() {
                (avail * &lam / &unit).to_usize().unwrap_or(0)
            } else {
                0
            };
            loop {
                pendants.push(k);
                let g = caterpillar(&pendants)?;
                match self.check(&g)? {
                    Verdict::Done => return Ok(g),
                    Verdict::Below => break,
                    Verdict::Above => {
                        pendants.pop();
                        if k == 0 {
                            return Err(Error::InvalidParameters(
                                "caterpillar growth stalled above lambda".into(),
                            ));
                        }
                        k -= 1;
                    }
                }
            }
            let r = &lam - &unit * BigInt::from(k) / &lam - &inv_prev;
            let r = if r < r_star { r_star.clone() } else { r };
            inv_prev = &unit / r;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_tree(g: &Graph) -> bool {
        g.is_connected() && g.edge_count() + 1 == g.order()
    }

    fn eps(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    fn assert_contract(lambda: &AlgebraicNumber, e: &BigRational, g: &Graph) {
        let rho = spectral_radius(g);
        assert!(rho <= *lambda);
        assert!(rho > lambda.affine(&BigRational::one(), &-e));
        assert!(g.is_connected());
    }

    #[test]
    fn integer_square_gives_star() {
        let lam = AlgebraicNumber::from_integer(3);
        let g = shearer_graph(&lam, &eps(1, 1_000_000_000)).unwrap();
        assert_eq!(g.order(), 10);
        assert_contract(&lam, &eps(1, 1_000_000_000), &g);
    }

    #[test]
    fn rational_target() {
        let lam = AlgebraicNumber::from_ratio(21, 10);
        let e = eps(1, 10_000);
        let g = shearer_graph(&lam, &e).unwrap();
        assert!(is_tree(&g));
        assert_contract(&lam, &e, &g);
    }

    #[test]
    fn threshold_uses_spiders() {
        let lam = AlgebraicNumber::shearer_threshold();
        let e = eps(1, 64);
        let g = shearer_graph(&lam, &e).unwrap();
        assert_contract(&lam, &e, &g);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), 3);
    }

    #[test]
    fn below_threshold() {
        let lam = AlgebraicNumber::from_integer(2);
        assert_eq!(shearer_graph(&lam, &eps(1, 1000)), Err(Error::BelowThreshold));
    }

    #[test]
    fn budget_is_enforced() {
        let lam = AlgebraicNumber::from_ratio(21, 10);
        assert_eq!(
            shearer_graph_with_budget(&lam, &eps(1, 1 << 30), 3),
            Err(Error::BudgetExhausted(3))
        );
    }

    #[test]
    fn bad_epsilon() {
        let lam = AlgebraicNumber::from_integer(3);
        assert!(matches!(shearer_graph(&lam, &eps(0, 1)), Err(Error::InvalidParameters(_))));
    }
}
