//! Text syntax for exact numbers.
//!
//! * rationals: `3`, `-7/2`, `0.18`, `1e-4`, `2.5E3`
//! * `sqrt(q)` for rational `q >= 0`
//! * `root(c0,c1,...;lo;hi)`: the root of `c0 + c1 x + ...` in `[lo, hi]`
//! * `threshold`: `sqrt(2 + sqrt 5)`; `tau-threshold`: `1 / (1 + 2 sqrt(2 + sqrt 5))`

use super::{AlgebraicNumber, BigInt, BigRational, IntPoly};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::str::FromStr;

fn bad(s: &str) -> Error {
    Error::InvalidAlgebraic(format!("cannot parse {s:?}"))
}

/// Integers, fractions and decimals with optional exponent, exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad(s))?;
        let d: BigInt = d.trim().parse().map_err(|_| bad(s))?;
        if d.is_zero() {
            return Err(Error::InvalidAlgebraic("zero denominator".into()));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad(s))?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad(s));
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad(s))?;
    let shift = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut q = BigRational::from_integer(all);
    if shift >= 0 {
        q *= BigRational::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        q /= BigRational::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Ok(if neg { -q } else { q })
}

impl FromStr for AlgebraicNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "threshold" => return Ok(AlgebraicNumber::shearer_threshold()),
            "tau-threshold" => {
                let two = BigRational::from_integer(2.into());
                return AlgebraicNumber::shearer_threshold()
                    .affine(&two, &BigRational::one())
                    .recip();
            }
            _ => {}
        }
        if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            return AlgebraicNumber::sqrt(&parse_rational(inner)?);
        }
        if let Some(inner) = t.strip_prefix("root(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(';').collect();
            let [coeffs, lo, hi] = parts[..] else {
                return Err(bad(s));
            };
            let coeffs = coeffs
                .split(',')
                .map(|c| c.trim().parse::<BigInt>().map_err(|_| bad(s)))
                .collect::<Result<Vec<_>>>()?;
            return AlgebraicNumber::new(IntPoly::new(coeffs), parse_rational(lo)?, parse_rational(hi)?);
        }
        parse_rational(t).map(AlgebraicNumber::from_rational)
    }
}
