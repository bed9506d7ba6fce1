//! Word-sized prime field arithmetic and Chinese remaindering.

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62)).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

pub(crate) const PRIME_BITS: f64 = 61.0;

/// Reduce a big integer into `0..p`.
pub(crate) fn reduce(a: &BigInt, p: u64) -> u64 {
    let r = a % BigInt::from(p);
    let r = if r < BigInt::zero() { r + p } else { r };
    r.try_into().expect("reduced value fits in u64")
}

/// Incremental Garner reconstruction into the symmetric range.
pub(crate) struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    pub fn new(len: usize) -> Self {
        Crt {
            modulus: BigInt::one(),
            values: vec![BigInt::zero(); len],
        }
    }

    pub fn absorb(&mut self, residues: &[u64], p: u64) {
        let m_mod_p = reduce(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for (x, &r) in self.values.iter_mut().zip(residues) {
            let x_mod_p = reduce(x, p);
            let delta = mul_mod((r + p - x_mod_p) % p, m_inv, p);
            *x += &self.modulus * delta;
        }
        self.modulus *= p;
    }

    pub fn finish(self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        self.values
            .into_iter()
            .map(|x| if x > half { x - &self.modulus } else { x })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(97) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(561) && !is_prime(3_215_031_751));
        let ps: Vec<u64> = large_primes().take(3).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| p > 1 << 61));
    }

    #[test]
    fn crt_recovers_signed_values() {
        let vals = [BigInt::from(-123456789i64) * BigInt::from(987654321u64) * BigInt::from(1u64 << 62), BigInt::from(42)];
        let mut crt = Crt::new(2);
        for p in large_primes().take(3) {
            let res: Vec<u64> = vals.iter().map(|v| reduce(v, p)).collect();
            crt.absorb(&res, p);
        }
        assert_eq!(crt.finish(), vals.to_vec());
    }
}
