//! Exact arithmetic: integer polynomials, GF(2) polynomials, integer matrices and real
//! algebraic numbers.

mod algebraic;
mod gf2;
mod matrix;
mod modular;
mod parse;
mod poly;

pub use algebraic::{is_totally_real_algebraic_integer, AlgebraicNumber, SturmSequence};
pub use gf2::Gf2Poly;
pub use matrix::IntMatrix;
pub use parse::parse_rational;
pub use poly::IntPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Characteristic polynomial `det(xI - m)`.
pub fn charpoly(m: &IntMatrix) -> IntPoly {
    m.charpoly()
}

/// `det(xI - m)` over GF(2), computed directly in GF(2).
pub fn charpoly_mod2(m: &IntMatrix) -> Gf2Poly {
    m.charpoly_mod2()
}

pub fn rank_exact(m: &IntMatrix) -> usize {
    m.rank_exact()
}

/// Multiplicity of `a` as a root of `p`; zero for the zero polynomial.
pub fn root_multiplicity(p: &IntPoly, a: &AlgebraicNumber) -> usize {
    if p.is_zero() {
        return 0;
    }
    if let Some(q) = a.as_rational() {
        let lin = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        let mut cur = p.clone();
        let mut k = 0;
        while let Some(next) = cur.div_exact(&lin) {
            cur = next;
            k += 1;
        }
        return k;
    }
    let (lo, hi) = a.interval();
    let mut cur = p.clone();
    let mut k = 0;
    loop {
        let g = cur.gcd(a.defining_poly());
        if g.degree().unwrap_or(0) == 0 || SturmSequence::new(&g).count_between(lo, hi) == 0 {
            return k;
        }
        cur = cur.div_exact(&g).expect("gcd divides");
        k += 1;
    }
}

/// Multiplicity of `a` as an eigenvalue of the symmetric matrix `m`.
pub fn eigen_multiplicity(m: &IntMatrix, a: &AlgebraicNumber) -> usize {
    root_multiplicity(&m.charpoly(), a)
}

/// `rank(m + beta I)` for symmetric `m`: `n` minus the multiplicity of `-beta`.
pub fn rank_shifted(m: &IntMatrix, beta: &AlgebraicNumber) -> usize {
    m.dim() - eigen_multiplicity(m, &beta.neg())
}
