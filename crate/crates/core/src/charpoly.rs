//! Exact characteristic polynomials of integer matrices.
//!
//! The polynomial is computed modulo enough 62-bit primes to cover the
//! coefficient bound `(1 + k)^n`, where `k` is the largest absolute row sum,
//! and lifted by CRT to the symmetric residue range. Each modular image comes
//! from a Hessenberg reduction, `O(n^3)` per prime.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{inv_mod_prime, is_prime, mul_mod};

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), n * n, "matrix data must be n*n");
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.n.max(1))
    }
}

/// Coefficients of `det(t·I - A)`, low degree first; the last entry is 1.
pub fn char_poly(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.dim();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let k: u64 = a
        .rows()
        .map(|r| r.iter().map(|v| v.unsigned_abs()).sum::<u64>())
        .max()
        .unwrap_or(0);
    // |c_i| <= C(n,i) k^i, so every |c_i| <= (1+k)^n
    let bound = BigUint::from(k + 1).pow(n as u32);
    let needed = bound * 2u32;

    let mut modulus = BigUint::one();
    let mut acc: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    let mut primes = PrimeStream::new();
    while modulus <= needed {
        let p = primes.next_prime();
        let image = char_poly_mod(a, p);
        // Garner step: acc += modulus * ((r - acc) * modulus^{-1} mod p)
        let m_mod_p = (&modulus % p).iter_u64_digits().next().unwrap_or(0);
        let m_inv = inv_mod_prime(m_mod_p, p).expect("moduli are coprime");
        for (c, &r) in acc.iter_mut().zip(&image) {
            let c_mod_p = (&*c % p).iter_u64_digits().next().unwrap_or(0);
            let delta = mul_mod((r + p - c_mod_p) % p, m_inv, p);
            *c += &modulus * delta;
        }
        modulus *= p;
    }
    let half = &modulus >> 1u32;
    acc.into_iter()
        .map(|c| {
            if c > half {
                BigInt::from(c) - BigInt::from(modulus.clone())
            } else {
                BigInt::from(c)
            }
        })
        .collect()
}

struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        PrimeStream { next: (1u64 << 62) - 1 }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return c;
            }
        }
    }
}

/// `det(t·I - A) mod p`, low degree first.
pub fn char_poly_mod(a: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a.dim();
    let mut h: Vec<Vec<u64>> = a
        .rows()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };

    // similarity transform to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod_prime(h[j + 1][j], p).expect("nonzero pivot");
        for i in j + 2..n {
            if h[i][j] == 0 {
                continue;
            }
            let u = mul_mod(h[i][j], inv, p);
            // row_i -= u * row_{j+1}
            for c in 0..n {
                let t = mul_mod(u, h[j + 1][c], p);
                h[i][c] = sub(h[i][c], t);
            }
            // col_{j+1} += u * col_i
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[j + 1] = (row[j + 1] + t) % p;
            }
        }
    }

    // p_m = (t - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{l=i+1}^{m} h_{l,l-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], mul_mod(h[m][m], c, p));
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(h[i][m], prod, p);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul_mod(coef, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Berkowitz: division-free, independent of the modular route.
    fn berkowitz(a: &IntMatrix) -> Vec<BigInt> {
        let n = a.dim();
        let at = |i: usize, j: usize| BigInt::from(a.get(i, j));
        // vector of coefficients, high degree first
        let mut v: Vec<BigInt> = vec![BigInt::one(), -at(0, 0)];
        for r in 1..n {
            // Toeplitz column: 1, -a_rr, -R C, -R A C, ...
            let big_r: Vec<BigInt> = (0..r).map(|j| at(r, j)).collect();
            let c: Vec<BigInt> = (0..r).map(|i| at(i, r)).collect();
            let mut col = vec![BigInt::one(), -at(r, r)];
            let mut w = c.clone();
            for _ in 0..r {
                let rc: BigInt = big_r.iter().zip(&w).map(|(x, y)| x * y).sum();
                col.push(-rc);
                w = (0..r)
                    .map(|i| (0..r).map(|j| at(i, j) * &w[j]).sum())
                    .collect();
            }
            let mut nv = vec![BigInt::zero(); r + 2];
            for i in 0..r + 2 {
                for j in 0..=i.min(r) {
                    if i - j < col.len() {
                        nv[i] += &col[i - j] * &v[j];
                    }
                }
            }
            v = nv;
        }
        v.reverse();
        v
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn single_vertex_with_loops() {
        let a = IntMatrix::new(1, vec![6]);
        assert_eq!(char_poly(&a), ints(&[-6, 1]));
    }

    #[test]
    fn four_cycle() {
        let a = IntMatrix::new(4, vec![0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0]);
        assert_eq!(char_poly(&a), ints(&[0, 0, -4, 0, 1]));
        assert_eq!(berkowitz(&a), ints(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn matches_berkowitz_on_fixed_matrices() {
        // deterministic LCG fill, entries in [-5, 5]
        let mut s: u64 = 0x2545_F491_4F6C_DD1D;
        for n in 1..=9 {
            for _ in 0..4 {
                let data: Vec<i64> = (0..n * n)
                    .map(|_| {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((s >> 33) % 11) as i64 - 5
                    })
                    .collect();
                let a = IntMatrix::new(n, data);
                assert_eq!(char_poly(&a), berkowitz(&a), "n = {n}");
            }
        }
    }

    #[test]
    fn zero_pivot_columns() {
        // already triangular and a permutation-like matrix with empty columns
        let a = IntMatrix::new(3, vec![2, 5, 7, 0, 3, 1, 0, 0, 4]);
        assert_eq!(char_poly(&a), berkowitz(&a));
        let b = IntMatrix::new(4, vec![0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0]);
        assert_eq!(char_poly(&b), berkowitz(&b));
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        // all-ones matrix: eigenvalues 30 and 0 (29 times)
        let n = 30;
        let a = IntMatrix::new(n, vec![1; n * n]);
        let cp = char_poly(&a);
        let mut expect = vec![BigInt::zero(); n + 1];
        expect[n] = BigInt::one();
        expect[n - 1] = BigInt::from(-30);
        assert_eq!(cp, expect);
        // entries up to 34 in absolute value
        let b = IntMatrix::new(12, (0..144).map(|i| (i % 7) as i64 * 9 - 20).collect());
        assert_eq!(char_poly(&b), berkowitz(&b));
    }
}
