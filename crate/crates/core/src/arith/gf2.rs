//! Polynomials over GF(2), bit-packed.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { words: vec![] }
    }

    pub fn one() -> Self {
        Gf2Poly { words: vec![1] }
    }

    /// `x + c`.
    pub fn linear(c: bool) -> Self {
        Gf2Poly {
            words: vec![0b10 | u64::from(c)],
        }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        for (i, b) in bits.into_iter().enumerate() {
            if i % 64 == 0 {
                words.push(0);
            }
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let mut p = Gf2Poly { words };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let n = self.words.len().max(other.words.len());
        let mut words: Vec<u64> = (0..n)
            .map(|i| self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2Poly { words }
    }

    pub fn shift_up(&self, k: usize) -> Gf2Poly {
        match self.degree() {
            None => Gf2Poly::zero(),
            Some(d) => Gf2Poly::from_bits((0..=d + k).map(|i| i >= k && self.coeff(i - k))),
        }
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = Gf2Poly::zero();
        if let Some(d) = self.degree() {
            for i in 0..=d {
                if self.coeff(i) {
                    out = out.add(&other.shift_up(i));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Gf2Poly {
        (0..e).fold(Gf2Poly::one(), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let terms: Vec<String> = (0..=d)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_mod_two() {
        // (x+1)^4 = x^4 + 1 over GF(2)
        let p = Gf2Poly::linear(true).pow(4);
        assert_eq!(p.to_string(), "x^4 + 1");
        assert_eq!(p.degree(), Some(4));
        let q = Gf2Poly::linear(true).pow(70);
        assert_eq!(q.degree(), Some(70));
        assert_eq!(Gf2Poly::linear(false).pow(3).to_string(), "x^3");
    }
}
