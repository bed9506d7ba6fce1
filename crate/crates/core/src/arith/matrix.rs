//! Square integer matrices: characteristic polynomials and exact rank.

use super::gf2::Gf2Poly;
use super::modular::{inv_mod, large_primes, mul_mod, reduce, Crt, PRIME_BITS};
use super::poly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        IntMatrix {
            n,
            entries: (0..n * n).map(|k| BigInt::from(f(k / n, k % n))).collect(),
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| rows[i][j])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `self + c I`.
    pub fn shifted(&self, c: &BigInt) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] += c;
        }
        m
    }

    pub fn scaled(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn neg(&self) -> IntMatrix {
        self.scaled(&-BigInt::one())
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_f64().unwrap()).collect())
            .collect()
    }

    /// Bits needed to bound every coefficient of `det(xI - M)` (Hadamard bound on principal minors).
    fn charpoly_coefficient_bits(&self) -> f64 {
        let b = self
            .entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_default()
            .max(BigInt::one());
        let log_b = b.bits() as f64;
        let n = self.n;
        let mut log_binom = 0.0f64;
        let mut best = 0.0f64;
        for k in 1..=n {
            log_binom += ((n - k + 1) as f64).log2() - (k as f64).log2();
            let bits = log_binom + k as f64 * (0.5 * (k as f64).log2() + log_b);
            best = best.max(bits);
        }
        best
    }

    /// Characteristic polynomial `det(xI - M)` modulo a word-sized prime, via Hessenberg reduction.
    fn charpoly_mod(&self, p: u64) -> Vec<u64> {
        let n = self.n;
        let mut h: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| reduce(self.get(i, j), p)).collect())
            .collect();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let t_inv = inv_mod(h[m][m - 1], p);
            for j in m + 1..n {
                let u = mul_mod(h[j][m - 1], t_inv, p);
                if u == 0 {
                    continue;
                }
                for k in 0..n {
                    let sub = mul_mod(u, h[m][k], p);
                    h[j][k] = (h[j][k] + p - sub) % p;
                }
                for row in h.iter_mut() {
                    let add = mul_mod(u, row[j], p);
                    row[m] = (row[m] + add) % p;
                }
            }
        }
        // polys[m] = charpoly of the leading m x m block, lowest degree first
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let d = h[m - 1][m - 1];
            let mut cur = vec![0u64; m + 1];
            for (k, &c) in prev.iter().enumerate() {
                cur[k + 1] = (cur[k + 1] + c) % p;
                cur[k] = (cur[k] + p - mul_mod(d, c, p)) % p;
            }
            let mut t = 1u64;
            for i in 1..m {
                t = mul_mod(t, h[m - i][m - i - 1], p);
                let coef = mul_mod(t, h[m - i - 1][m - 1], p);
                if coef == 0 {
                    continue;
                }
                for (k, &c) in polys[m - i - 1].iter().enumerate() {
                    cur[k] = (cur[k] + p - mul_mod(coef, c, p)) % p;
                }
            }
            polys.push(cur);
        }
        polys.pop().unwrap()
    }

    /// Exact characteristic polynomial `det(xI - M)`, monic of degree `n`.
    ///
    /// Computed modulo enough 61-bit primes to exceed twice the Hadamard bound on the
    /// coefficients, then reconstructed by Chinese remaindering.
    pub fn charpoly(&self) -> IntPoly {
        if self.n == 0 {
            return IntPoly::one();
        }
        let needed = self.charpoly_coefficient_bits() + 2.0;
        let mut crt = Crt::new(self.n + 1);
        let mut have = 0.0;
        for p in large_primes() {
            crt.absorb(&self.charpoly_mod(p), p);
            have += PRIME_BITS;
            if have > needed {
                break;
            }
        }
        IntPoly::new(crt.finish())
    }

    /// `det(xI - M)` over GF(2), by Hessenberg reduction on bit-packed rows.
    pub fn charpoly_mod2(&self) -> Gf2Poly {
        let n = self.n;
        let words = n.div_ceil(64).max(1);
        let mut rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut r = vec![0u64; words];
                for j in 0..n {
                    if self.get(i, j).is_odd() {
                        r[j / 64] |= 1 << (j % 64);
                    }
                }
                r
            })
            .collect();
        let bit = |rows: &Vec<Vec<u64>>, i: usize, j: usize| rows[i][j / 64] >> (j % 64) & 1 == 1;
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| bit(&rows, i, m - 1)) else {
                continue;
            };
            if i != m {
                rows.swap(i, m);
                for r in rows.iter_mut() {
                    let (bi, bm) = (r[i / 64] >> (i % 64) & 1, r[m / 64] >> (m % 64) & 1);
                    if bi != bm {
                        r[i / 64] ^= 1 << (i % 64);
                        r[m / 64] ^= 1 << (m % 64);
                    }
                }
            }
            for j in m + 1..n {
                if !bit(&rows, j, m - 1) {
                    continue;
                }
                let pivot = rows[m].clone();
                for (a, b) in rows[j].iter_mut().zip(&pivot) {
                    *a ^= b;
                }
                for r in rows.iter_mut() {
                    if r[j / 64] >> (j % 64) & 1 == 1 {
                        r[m / 64] ^= 1 << (m % 64);
                    }
                }
            }
        }
        let mut polys = vec![Gf2Poly::one()];
        for m in 1..=n {
            let mut cur = polys[m - 1].mul(&Gf2Poly::linear(bit(&rows, m - 1, m - 1)));
            let mut t = true;
            for i in 1..m {
                t &= bit(&rows, m - i, m - i - 1);
                if !t {
                    break;
                }
                if bit(&rows, m - i - 1, m - 1) {
                    cur = cur.add(&polys[m - i - 1]);
                }
            }
            polys.push(cur);
        }
        polys.pop().unwrap()
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank_exact(&self) -> usize {
        let n = self.n;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..n {
                for j in c + 1..n {
                    let v = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[rank][c].clone();
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// Determinant by Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}
