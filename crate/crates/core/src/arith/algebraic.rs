//! Real algebraic numbers as a square-free integer polynomial plus an isolating interval.
//!
//! Every comparison is decided exactly: intervals are refined by bisection until they
//! separate, and equality is detected through a polynomial gcd with a Sturm count.

use super::poly::IntPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPoly>,
}

impl SturmSequence {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d.primitive_part());
        }
        while seq.len() >= 2 {
            let k = seq.len();
            let r = seq[k - 2].positive_rem(&seq[k - 1]);
            if r.is_zero() {
                break;
            }
            // -remainder, divided by its (positive) content
            let c = r.content();
            let next = IntPoly::new(r.coeffs().iter().map(|a| -(a / &c)).collect());
            seq.push(next);
        }
        SturmSequence { seq }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let lead = if p.leading().unwrap().is_positive() { 1 } else { -1 };
            if positive || p.degree().unwrap() % 2 == 0 {
                lead
            } else {
                -lead
            }
        }))
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// A real algebraic number.
///
/// Invariants: `poly` is square-free, primitive, with positive leading coefficient. Either
/// `lo == hi` and the number is the rational `lo` with linear `poly`, or `lo < hi`, `poly`
/// does not vanish at either endpoint and has exactly one root in `(lo, hi)`.
#[derive(Clone)]
pub struct AlgebraicNumber {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl AlgebraicNumber {
    pub fn from_rational(q: BigRational) -> Self {
        let poly = IntPoly::new(vec![-q.numer().clone(), q.denom().clone()]);
        AlgebraicNumber {
            poly,
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_integer(i: i64) -> Self {
        Self::from_rational(BigRational::from_integer(i.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// The unique root of `poly` in the closed interval `[lo, hi]`.
    pub fn new(poly: IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidAlgebraic("constant defining polynomial".into()));
        }
        if lo > hi {
            return Err(Error::InvalidAlgebraic("empty interval".into()));
        }
        let poly = poly.square_free_part();
        let at_lo = poly.sign_at(&lo) == 0;
        let at_hi = poly.sign_at(&hi) == 0;
        let inner = if lo < hi {
            let sturm = SturmSequence::new(&poly);
            sturm.count_between(&lo, &hi) - usize::from(at_hi)
        } else {
            0
        };
        let total = inner + usize::from(at_lo) + usize::from(at_hi && lo != hi);
        if total != 1 {
            return Err(Error::InvalidAlgebraic(format!(
                "{poly} has {total} roots in [{lo}, {hi}]"
            )));
        }
        if at_lo {
            return Ok(Self::from_rational(lo));
        }
        if at_hi {
            return Ok(Self::from_rational(hi));
        }
        Ok(AlgebraicNumber { poly, lo, hi })
    }

    /// All distinct real roots of `p`, ascending.
    pub fn real_roots(p: &IntPoly) -> Vec<AlgebraicNumber> {
        if p.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let s = p.square_free_part();
        let sturm = SturmSequence::new(&s);
        let b = BigRational::from_integer(s.root_bound());
        let mut out = Vec::new();
        isolate(&s, &sturm, -b.clone(), b, &mut out);
        out
    }

    /// Rewrites a rational root as an exact rational. Only leading coefficients up to
    /// `2^20` are searched; larger ones are left alone.
    fn settled(mut self) -> Self {
        if self.as_rational().is_some() {
            return self;
        }
        let lc = self.poly.leading().expect("non-constant").abs();
        let Some(lc) = lc.to_u64().filter(|&c| c <= 1 << 20) else {
            return self;
        };
        // distinct rationals with denominators dividing lc are 1/lc^2 apart
        let width = BigRational::new(BigInt::one(), BigInt::from(2 * lc * lc));
        self.refine_to(&width);
        if self.as_rational().is_some() {
            return self;
        }
        for b in (1..=lc).filter(|b| lc % b == 0) {
            let b = BigInt::from(b);
            let lo = (&self.lo * &b).ceil().to_integer();
            let hi = (&self.hi * &b).floor().to_integer();
            let mut k = lo;
            while k <= hi {
                let q = BigRational::new(k.clone(), b.clone());
                if self.poly.sign_at(&q) == 0 {
                    return Self::from_rational(q);
                }
                k += 1;
            }
        }
        self
    }

    /// Least real root of `p`, if any.
    pub fn least_root(p: &IntPoly) -> Option<AlgebraicNumber> {
        extreme_root(p, false)
    }

    /// Greatest real root of `p`, if any.
    pub fn greatest_root(p: &IntPoly) -> Option<AlgebraicNumber> {
        extreme_root(p, true)
    }

    /// Non-negative square root of a non-negative rational.
    pub fn sqrt(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidAlgebraic("square root of a negative number".into()));
        }
        let p = IntPoly::new(vec![-q.numer().clone(), BigInt::zero(), q.denom().clone()]);
        Ok(Self::greatest_root(&p).expect("x^2 - q has a real root for q >= 0"))
    }

    /// `sqrt(2 + sqrt(5))`, the greatest root of `x^4 - 4x^2 - 1`.
    pub fn shearer_threshold() -> Self {
        Self::greatest_root(&IntPoly::from_i64s(&[-1, 0, -4, 0, 1])).expect("real root exists")
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Bisect the isolating interval once.
    fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let s_mid = self.poly.sign_at(&mid);
        if s_mid == 0 {
            *self = Self::from_rational(mid);
        } else if self.poly.sign_at(&self.lo) != s_mid {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Refine until the interval width is at most `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        while &(&self.hi - &self.lo) > width {
            self.bisect();
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        let scale = a.lo.abs().max(a.hi.abs()).max(BigRational::one());
        a.refine_to(&(scale * rat(1, 1 << 60)));
        ((&a.lo + &a.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Lower rational bound within `width` of the number.
    /// Exact for rationals, twelve decimals otherwise.
    pub fn to_short_string(&self) -> String {
        match self.as_rational() {
            Some(q) => q.to_string(),
            None => format!("≈{:.12}", self.to_f64()),
        }
    }

    pub fn lower_bound(&self, width: &BigRational) -> BigRational {
        let mut a = self.clone();
        a.refine_to(width);
        a.lo
    }

    pub fn upper_bound(&self, width: &BigRational) -> BigRational {
        let mut a = self.clone();
        a.refine_to(width);
        a.hi
    }

    pub fn neg(&self) -> AlgebraicNumber {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(-q);
        }
        AlgebraicNumber {
            poly: self.poly.negated_variable().primitive_part(),
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    /// `1 / self`; fails for zero.
    pub fn recip(&self) -> Result<AlgebraicNumber> {
        if let Some(q) = self.as_rational() {
            if q.is_zero() {
                return Err(Error::InvalidAlgebraic("reciprocal of zero".into()));
            }
            return Ok(Self::from_rational(q.recip()));
        }
        let mut a = self.clone();
        while a.lo.is_negative() && a.hi.is_positive() {
            a.bisect();
        }
        if let Some(q) = a.as_rational() {
            if q.is_zero() {
                return Err(Error::InvalidAlgebraic("reciprocal of zero".into()));
            }
            return Ok(Self::from_rational(q.recip()));
        }
        // endpoint may be zero; refine past it
        while a.lo.is_zero() || a.hi.is_zero() {
            a.bisect();
        }
        Ok(AlgebraicNumber {
            poly: a.poly.reversed().primitive_part(),
            lo: a.hi.recip(),
            hi: a.lo.recip(),
        })
    }

    /// `scale * self + offset` for rational `scale != 0`.
    pub fn affine(&self, scale: &BigRational, offset: &BigRational) -> AlgebraicNumber {
        assert!(!scale.is_zero(), "affine map must be invertible");
        if let Some(q) = self.as_rational() {
            return Self::from_rational(q * scale + offset);
        }
        let inv = scale.recip();
        let poly = self.poly.compose_affine(&inv, &(-offset * &inv));
        let (a, b) = (&self.lo * scale + offset, &self.hi * scale + offset);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        AlgebraicNumber { poly, lo, hi }
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        if let Some(r) = self.as_rational() {
            return r.cmp(q);
        }
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(q);
        if s == 0 {
            Ordering::Equal
        } else if self.poly.sign_at(&self.lo) != s {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Exact three-way comparison.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return a.cmp(b),
            (_, Some(q)) => return self.cmp_rational(q),
            (Some(q), _) => return other.cmp_rational(q).reverse(),
            _ => {}
        }
        if self.hi <= other.lo {
            return Ordering::Less;
        }
        if other.hi <= self.lo {
            return Ordering::Greater;
        }
        let g = self.poly.gcd(&other.poly);
        if g.degree().unwrap_or(0) > 0 {
            let l = (&self.lo).max(&other.lo);
            let h = (&self.hi).min(&other.hi);
            if SturmSequence::new(&g).count_between(l, h) > 0 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            a.bisect();
            b.bisect();
            if a.as_rational().is_some() || b.as_rational().is_some() {
                return a.compare(&b);
            }
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
        }
    }

    /// Whether the defining polynomial is monic up to sign with only real roots.
    pub fn has_totally_real_integral_poly(&self) -> bool {
        is_totally_real_algebraic_integer(&self.poly)
    }
}

fn isolate(
    p: &IntPoly,
    sturm: &SturmSequence,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<AlgebraicNumber>,
) {
    let count = sturm.count_between(&lo, &hi);
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(
            AlgebraicNumber {
                poly: p.clone(),
                lo,
                hi,
            }
            .settled(),
        );
        return;
    }
    let mid = split_point(p, &lo, &hi);
    isolate(p, sturm, lo, mid.clone(), out);
    isolate(p, sturm, mid, hi, out);
}

/// A point strictly inside `(lo, hi)` where `p` does not vanish, close to the middle.
fn split_point(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let half = rat(1, 2);
    let mid = lo + &w * &half;
    if p.sign_at(&mid) != 0 {
        return mid;
    }
    // distinct points 1/2 + 2^-k; only finitely many can be roots
    let mut step = rat(1, 4);
    loop {
        let m = lo + &w * (&half + &step);
        if p.sign_at(&m) != 0 {
            return m;
        }
        step /= BigRational::from_integer(2.into());
    }
}

fn extreme_root(p: &IntPoly, greatest: bool) -> Option<AlgebraicNumber> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let s = p.square_free_part();
    let sturm = SturmSequence::new(&s);
    let b = BigRational::from_integer(s.root_bound());
    let (mut lo, mut hi) = (-b.clone(), b);
    let mut count = sturm.count_between(&lo, &hi);
    if count == 0 {
        return None;
    }
    while count > 1 {
        let mid = split_point(&s, &lo, &hi);
        let left = sturm.count_between(&lo, &mid);
        let right = count - left;
        if (greatest && right > 0) || left == 0 {
            lo = mid;
            count = right;
        } else {
            hi = mid;
            count = left;
        }
    }
    Some(AlgebraicNumber { poly: s, lo, hi }.settled())
}

/// True iff `p` is monic up to sign and all of its roots are real.
pub fn is_totally_real_algebraic_integer(p: &IntPoly) -> bool {
    if p.is_zero() || !p.is_monic_up_to_sign() {
        return false;
    }
    let s = p.square_free_part();
    let d = s.degree().unwrap();
    d == 0 || SturmSequence::new(&s).count_real() == d
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "root of {} in ({}, {}) ≈ {:.12}", self.poly, self.lo, self.hi, self.to_f64()),
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicNumber({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rational_roots_are_settled() {
        let r = AlgebraicNumber::least_root(&p(&[-27, -6, 1])).unwrap();
        assert_eq!(r.as_integer(), Some(BigInt::from(-3)));
        let roots = AlgebraicNumber::real_roots(&(&p(&[-3, 2]) * &p(&[-2, 0, 1])));
        assert_eq!(roots[2].as_rational(), Some(&rat(3, 2)));
        assert!(roots[1].as_rational().is_none());
    }

    #[test]
    fn sqrt2_against_rationals() {
        let s2 = AlgebraicNumber::sqrt(&rat(2, 1)).unwrap();
        assert_eq!(s2.compare(&AlgebraicNumber::from_ratio(3, 2)), Ordering::Less);
        assert_eq!(s2.compare(&AlgebraicNumber::from_ratio(7, 5)), Ordering::Greater);
        assert_eq!(s2.compare(&s2), Ordering::Equal);
        assert!((s2.to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn shearer_threshold_value() {
        let t = AlgebraicNumber::shearer_threshold();
        // 10291/5000 = 2.0582 lies just above sqrt(2 + sqrt 5) = 2.058171...
        assert_eq!(t.compare(&AlgebraicNumber::from_ratio(10291, 5000)), Ordering::Less);
        assert_eq!(t.compare(&AlgebraicNumber::from_ratio(20581, 10000)), Ordering::Greater);
        assert!((t.to_f64() - (2.0 + 5f64.sqrt()).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn equality_between_different_presentations() {
        // sqrt 2 as root of x^2 - 2 and of (x^2-2)(x-5)
        let a = AlgebraicNumber::sqrt(&rat(2, 1)).unwrap();
        let b = AlgebraicNumber::new(&p(&[-2, 0, 1]) * &p(&[-5, 1]), rat(1, 1), rat(2, 1)).unwrap();
        assert_eq!(a.compare(&b), Ordering::Equal);
        // 2 sqrt(2) + 1 via affine map equals root of x^2 - 2x - 7
        let c = a.affine(&rat(2, 1), &rat(1, 1));
        let d = AlgebraicNumber::greatest_root(&p(&[-7, -2, 1])).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.neg(), AlgebraicNumber::least_root(&p(&[-7, 2, 1])).unwrap());
    }

    #[test]
    fn reciprocal() {
        let a = AlgebraicNumber::sqrt(&rat(2, 1)).unwrap();
        let r = a.recip().unwrap();
        assert!((r.to_f64() - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(AlgebraicNumber::from_integer(3).recip().unwrap(), AlgebraicNumber::from_ratio(1, 3));
        assert!(AlgebraicNumber::from_integer(0).recip().is_err());
        let n = AlgebraicNumber::least_root(&p(&[-1, 0, 1, 1])).unwrap().neg().neg();
        assert!(n.recip().is_ok());
    }

    #[test]
    fn root_isolation() {
        // (x-1)(x-2)(x-3)(x^2-2)
        let f = &(&(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[-3, 1])) * &p(&[-2, 0, 1]);
        let roots = AlgebraicNumber::real_roots(&f);
        let approx: Vec<f64> = roots.iter().map(AlgebraicNumber::to_f64).collect();
        let expected = [-2f64.sqrt(), 1.0, 2f64.sqrt(), 2.0, 3.0];
        assert_eq!(approx.len(), 5);
        for (a, e) in approx.iter().zip(expected) {
            assert!((a - e).abs() < 1e-12);
        }
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
        assert!(AlgebraicNumber::real_roots(&p(&[1, 0, 1])).is_empty());
        assert_eq!(AlgebraicNumber::greatest_root(&f).unwrap(), AlgebraicNumber::from_integer(3));
    }

    #[test]
    fn construction_validation() {
        assert!(AlgebraicNumber::new(p(&[-2, 0, 1]), rat(-2, 1), rat(2, 1)).is_err());
        assert!(AlgebraicNumber::new(p(&[-2, 0, 1]), rat(2, 1), rat(1, 1)).is_err());
        assert!(AlgebraicNumber::new(p(&[3]), rat(0, 1), rat(1, 1)).is_err());
        let r = AlgebraicNumber::new(p(&[-2, 1]), rat(2, 1), rat(3, 1)).unwrap();
        assert_eq!(r.as_integer(), Some(2.into()));
    }

    #[test]
    fn totally_real_integers() {
        assert!(is_totally_real_algebraic_integer(&p(&[-2, 0, 1])));
        assert!(!is_totally_real_algebraic_integer(&p(&[1, 0, 1])));
        assert!(!is_totally_real_algebraic_integer(&p(&[-3, 2])));
        assert!(is_totally_real_algebraic_integer(&(&p(&[-2, 0, 1]) * &p(&[-2, 0, 1]))));
    }

    fn arb_number() -> impl Strategy<Value = AlgebraicNumber> {
        prop_oneof![
            (-20i64..20, 1i64..6).prop_map(|(n, d)| AlgebraicNumber::from_ratio(n, d)),
            (proptest::collection::vec(-6i64..6, 2..5), 1i64..4, any::<bool>()).prop_filter_map(
                "needs a real root",
                |(mut c, lead, top)| {
                    c.push(lead);
                    let f = p(&c);
                    let r = AlgebraicNumber::real_roots(&f);
                    if top { r.last().cloned() } else { r.first().cloned() }
                }
            ),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn compare_is_a_total_order(a in arb_number(), b in arb_number(), c in arb_number()) {
            let fa = a.to_f64();
            let fb = b.to_f64();
            prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
            if (fa - fb).abs() > 1e-9 {
                prop_assert_eq!(a.compare(&b), fa.partial_cmp(&fb).unwrap());
            }
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
        }
    }
}
