//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use super::gf2::Gf2Poly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial, coefficients stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - root` for an integer root.
    pub fn linear_root(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().expect("non-zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic_up_to_sign(&self) -> bool {
        self.leading().is_some_and(|c| c.abs().is_one())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut out = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `den^deg * p(num/den)` for `den > 0`; shares its sign with `p(num/den)`.
    fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for k in (0..d).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[k] * &den_pow;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval_homogeneous(x.numer(), x.denom());
        sign(&v)
    }

    /// Pseudo-remainder: returns `(r, e)` with `lc(b)^e * a = q * b + r`, `deg r < deg b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> (IntPoly, usize) {
        let db = b.deg();
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut e = 0;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                coeffs[i + dr - db] -= &lr * c;
            }
            r = IntPoly::new(coeffs);
            e += 1;
        }
        (r, e)
    }

    /// Remainder of `self` by `b` up to a positive constant factor.
    pub fn positive_rem(&self, b: &IntPoly) -> IntPoly {
        let (r, e) = self.pseudo_rem(b);
        if b.leading().unwrap().is_negative() && e % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Exact division in `Z[x]`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let ld = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if dr < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - dd + 1];
        for k in (0..=dr - dd).rev() {
            let top = &r[k + dd];
            let (qk, rem) = top.div_rem(ld);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        r.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
    }

    /// Greatest common divisor over the rationals, returned primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Product of the distinct irreducible factors (primitive, positive leading coefficient).
    pub fn square_free_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides")
            .primitive_part()
    }

    /// Square-free factorisation `[(f_1, 1), (f_2, 2), ...]`: each `f_i` square-free,
    /// primitive and pairwise coprime, with `∏ f_i^i` equal to the primitive part.
    /// Factors equal to 1 are omitted.
    pub fn square_free_factorization(&self) -> Vec<(IntPoly, usize)> {
        let mut f = self.primitive_part();
        // layers[i] is the product of the factors of multiplicity > i
        let mut layers = Vec::new();
        while f.degree().unwrap_or(0) > 0 {
            let layer = f.square_free_part();
            f = f.div_exact(&layer).expect("square-free part divides").primitive_part();
            layers.push(layer);
        }
        layers.push(IntPoly::one());
        layers
            .windows(2)
            .enumerate()
            .filter_map(|(i, w)| {
                let g = w[0].div_exact(&w[1]).expect("layers are nested").primitive_part();
                (g.degree().unwrap_or(0) > 0).then_some((g, i + 1))
            })
            .collect()
    }

    /// `q(x) = p(a x + b)` cleared of denominators and made primitive.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> IntPoly {
        let mut acc: Vec<BigRational> = vec![];
        for c in self.coeffs.iter().rev() {
            // acc = acc * (a x + b) + c
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (i, v) in acc.iter().enumerate() {
                next[i] += v * b;
                next[i + 1] += v * a;
            }
            next[0] += BigRational::from(c.clone());
            acc = next;
        }
        rational_to_primitive(&acc)
    }

    /// `x^deg p(1/x)`.
    pub fn reversed(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(-x)`.
    pub fn negated_variable(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn mod2(&self) -> Gf2Poly {
        Gf2Poly::from_bits(self.coeffs.iter().map(|c| c.is_odd()))
    }

    /// Upper bound `B` (an integer) with every complex root strictly inside `|z| < B`.
    pub fn root_bound(&self) -> BigInt {
        let d = self.deg();
        let lead = self.coeffs[d].abs();
        let max = self.coeffs[..d]
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default();
        BigInt::one() + max.div_ceil(&lead) + BigInt::one()
    }
}

fn sign(v: &BigInt) -> i8 {
    match v.cmp(&BigInt::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

pub(crate) fn rational_to_primitive(coeffs: &[BigRational]) -> IntPoly {
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPoly::new(
        coeffs
            .iter()
            .map(|c| (c * BigRational::from(l.clone())).to_integer())
            .collect(),
    )
    .primitive_part()
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
