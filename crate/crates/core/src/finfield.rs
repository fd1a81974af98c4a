//! Finite fields `F_{p^n}` and additive (linearized-polynomial) maps on them.
//!
//! Elements are stored packed: the coefficient vector `(c_0, …, c_{n-1})` of
//! the representative polynomial becomes the integer `Σ c_i p^i`. Packed
//! order is the canonical total order on elements.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::arith::is_prime;
use crate::{Caps, Error, Result};

/// An element of `F_{p^n}`, packed as `Σ c_i p^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqElem(pub(crate) u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);

    /// Packed value; also the element's rank in canonical order.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// `F_p[x] / (modulus)` with a monic irreducible modulus of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    p: u32,
    n: u32,
    q: u32,
    /// Monic, low degree first, length `n + 1`.
    modulus: Vec<u32>,
}

/// One arithmetic request for [`FieldDescriptor::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add(FqElem, FqElem),
    Mul(FqElem, FqElem),
    Neg(FqElem),
    Inv(FqElem),
    Pow(FqElem, u64),
}

impl FieldDescriptor {
    /// The field of order `p^n` with the default enumeration cap.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        Self::with_caps(p, n, &Caps::default())
    }

    pub fn with_caps(p: u64, n: u32, caps: &Caps) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
        caps.check("field order", q, caps.field_order.min(u32::MAX as u64))?;
        let p = p as u32;
        let modulus = smallest_irreducible(p, n as usize);
        Ok(FieldDescriptor {
            p,
            n,
            q: q as u32,
            modulus,
        })
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64, caps: &Caps) -> Result<Self> {
        let (p, n) = crate::arith::prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::with_caps(p, n, caps)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, low degree first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }

    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    /// The image of the integer `k` in the prime subfield.
    pub fn from_int(&self, k: i64) -> FqElem {
        FqElem(k.rem_euclid(self.p as i64) as u32)
    }

    /// The class of `x`, i.e. the generator of the extension (`1` when `n = 1`).
    pub fn generator(&self) -> FqElem {
        if self.n == 1 {
            self.one()
        } else {
            FqElem(self.p)
        }
    }

    /// `x^i`, the `i`-th power basis vector over `F_p`.
    pub fn basis(&self, i: u32) -> FqElem {
        debug_assert!(i < self.n);
        FqElem(self.p.pow(i))
    }

    pub fn contains(&self, a: FqElem) -> bool {
        a.0 < self.q
    }

    pub fn check(&self, a: FqElem) -> Result<FqElem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FqElem> {
        if coeffs.len() != self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.pack(coeffs))
    }

    /// Element with packed index `i`, `0 <= i < q`.
    pub fn element(&self, i: u32) -> FqElem {
        debug_assert!(i < self.q);
        FqElem(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q).map(FqElem)
    }

    pub fn coeffs(&self, a: FqElem) -> Vec<u32> {
        let mut out = vec![0; self.n as usize];
        self.unpack(a, &mut out);
        out
    }

    fn unpack(&self, a: FqElem, out: &mut [u32]) {
        let mut v = a.0;
        for c in out.iter_mut().take(self.n as usize) {
            *c = v % self.p;
            v /= self.p;
        }
    }

    fn pack(&self, coeffs: &[u32]) -> FqElem {
        let mut v = 0u32;
        for &c in coeffs[..self.n as usize].iter().rev() {
            v = v * self.p + c;
        }
        FqElem(v)
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.p == 2 {
            return FqElem(a.0 ^ b.0);
        }
        if self.n == 1 {
            return FqElem((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut v, mut place) = (0u32, 1u32);
        for _ in 0..self.n {
            v += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FqElem(v)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut v, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.n {
            v += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FqElem(v)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    /// Product, reduced modulo the field modulus.
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p as u64;
        if self.n == 1 {
            return FqElem(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        let n = self.n as usize;
        let mut x = [0u32; 32];
        let mut y = [0u32; 32];
        self.unpack(a, &mut x);
        self.unpack(b, &mut y);
        let mut prod = [0u64; 64];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + x[i] as u64 * y[j] as u64) % p;
            }
        }
        for d in (n..2 * n - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            // x^d = x^{d-n} * x^n and x^n ≡ -Σ m_i x^i
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[d - n + i] = (prod[d - n + i] + (p - c) * m) % p;
            }
            prod[d] = 0;
        }
        let mut v = 0u32;
        for i in (0..n).rev() {
            v = v * self.p + prod[i] as u32;
        }
        FqElem(v)
    }

    pub fn pow(&self, mut a: FqElem, mut e: u64) -> FqElem {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, self.p as u64)
    }

    /// Checked arithmetic entry point: validates every operand first.
    pub fn apply(&self, op: FieldOp) -> Result<FqElem> {
        match op {
            FieldOp::Add(a, b) => Ok(self.add(self.check(a)?, self.check(b)?)),
            FieldOp::Mul(a, b) => Ok(self.mul(self.check(a)?, self.check(b)?)),
            FieldOp::Neg(a) => Ok(self.neg(self.check(a)?)),
            FieldOp::Inv(a) => self.inv(self.check(a)?),
            FieldOp::Pow(a, e) => Ok(self.pow(self.check(a)?, e)),
        }
    }

    /// Human-readable polynomial form, e.g. `x+1`; prime-field elements print
    /// as plain residues.
    pub fn format(&self, a: FqElem) -> String {
        if self.n == 1 {
            let mut s = String::new();
            let _ = write!(s, "{}", a.0);
            return s;
        }
        format_poly(&self.coeffs(a), "x")
    }
}

pub(crate) fn format_poly(coeffs: &[u32], var: &str) -> String {
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('+');
        }
        let _ = match (i, c) {
            (0, c) => write!(s, "{c}"),
            (1, 1) => write!(s, "{var}"),
            (1, c) => write!(s, "{c}{var}"),
            (i, 1) => write!(s, "{var}^{i}"),
            (i, c) => write!(s, "{c}{var}^{i}"),
        };
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

// ---- polynomials over F_p (low degree first, no trailing zeros) ----

fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = crate::arith::inv_mod_prime(m[dm] as u64, p as u64).unwrap_or(1);
    while r.len() > dm {
        let d = r.len() - 1;
        let c = (r[d] as u64 * lead_inv) % p as u64;
        for i in 0..=dm {
            let t = (c * m[i] as u64) % p as u64;
            r[d - dm + i] = ((r[d - dm + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|v| v as u32).collect();
    poly_rem(&prod, m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of a monic `f` of degree `n` over `F_p`: `f` has no factor
/// of degree `k <= n/2`, i.e. `gcd(f, x^{p^k} - x) = 1` for each such `k`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let mut h = vec![0, 1]; // x
    for _ in 1..=n / 2 {
        // h <- h^p mod f
        let mut acc = vec![1];
        let mut base = h.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        h = acc;
        // h - x
        let mut diff = h.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The lexicographically least monic irreducible polynomial of degree `n`,
/// comparing `(c_0, c_1, …, c_{n-1})` with `c_0` most significant. For
/// `n = 1` this is `x`.
fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    let mut f = vec![0u32; n + 1];
    f[n] = 1;
    loop {
        if is_irreducible(&f, p) {
            return f;
        }
        // increment with c_{n-1} least significant
        let mut i = n;
        loop {
            i -= 1;
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
            assert!(i > 0, "no irreducible polynomial of degree {n} over F_{p}");
        }
    }
}

/// An `F_p`-linear map `T(x) = Σ_j a_j x^{p^j}` on `F_{p^n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdditiveMap {
    coeffs: Vec<FqElem>,
}

impl AdditiveMap {
    pub fn new(field: &FieldDescriptor, coeffs: Vec<FqElem>) -> Result<Self> {
        if coeffs.len() != field.degree() as usize || !coeffs.iter().all(|&c| field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(AdditiveMap { coeffs })
    }

    pub fn zero(field: &FieldDescriptor) -> Self {
        AdditiveMap {
            coeffs: vec![FqElem::ZERO; field.degree() as usize],
        }
    }

    /// `μ_c : x ↦ c·x`.
    pub fn multiplication(field: &FieldDescriptor, c: FqElem) -> Self {
        let mut m = Self::zero(field);
        m.coeffs[0] = c;
        m
    }

    /// `x ↦ x^{p^j}`.
    pub fn frobenius_power(field: &FieldDescriptor, j: usize) -> Self {
        let mut m = Self::zero(field);
        m.coeffs[j] = field.one();
        m
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn is_multiplication(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, field: &FieldDescriptor, x: FqElem) -> FqElem {
        let mut acc = field.zero();
        let mut xp = x;
        for (j, &a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                xp = field.frobenius(xp);
            }
            if !a.is_zero() {
                acc = field.add(acc, field.mul(a, xp));
            }
        }
        acc
    }

    pub fn add(&self, field: &FieldDescriptor, other: &Self) -> Self {
        AdditiveMap {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, field: &FieldDescriptor, other: &Self) -> Self {
        AdditiveMap {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| field.sub(a, b))
                .collect(),
        }
    }
}

/// All additive maps on the field in canonical order (`a_0` most
/// significant). With `fix_a0_zero` only the `p^{n(n-1)}` maps with `a_0 = 0`.
pub fn enumerate_additive_maps(
    field: &FieldDescriptor,
    fix_a0_zero: bool,
    caps: &Caps,
) -> Result<Vec<AdditiveMap>> {
    let n = field.degree() as usize;
    let q = field.order() as u128;
    let free = if fix_a0_zero { n - 1 } else { n };
    let count = q.checked_pow(free as u32).unwrap_or(u128::MAX);
    caps.check("additive maps", count, caps.enumeration)?;
    let mut out = Vec::with_capacity(count as usize);
    for k in 0..count as u64 {
        let mut coeffs = vec![FqElem::ZERO; n];
        let mut v = k;
        for j in (n - free..n).rev() {
            coeffs[j] = FqElem((v % q as u64) as u32);
            v /= q as u64;
        }
        out.push(AdditiveMap { coeffs });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Independent root-count oracle for degrees 2 and 3: irreducible iff no
    /// root in F_p.
    fn has_root(f: &[u32], p: u32) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x as u64 + c as u64) % p as u64;
            }
            acc == 0
        })
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FieldDescriptor::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn smallest_quadratics() {
        assert_eq!(FieldDescriptor::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldDescriptor::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn irreducibility_matches_root_oracle_low_degree() {
        for p in [2u32, 3, 5, 7] {
            for deg in [2usize, 3] {
                let total = p.pow(deg as u32);
                for k in 0..total {
                    let mut f = vec![0u32; deg + 1];
                    let mut v = k;
                    for c in f.iter_mut().take(deg) {
                        *c = v % p;
                        v /= p;
                    }
                    f[deg] = 1;
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "{f:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn modulus_is_lexicographic_minimum() {
        // x^4+1 = (x+1)^4, so the first candidate with c0 = 1 that survives
        // is x^4+x^3+1, ahead of x^4+x+1
        let f = FieldDescriptor::new(2, 4).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 0, 1, 1]);
        // x^2+1 splits mod 5 (2^2 = -1); x^2+x+1 has discriminant 2, a non-residue
        let f = FieldDescriptor::new(5, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldDescriptor::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(FieldDescriptor::new(3, 0), Err(Error::ZeroDegree));
        assert!(matches!(FieldDescriptor::new(2, 17), Err(Error::CapExceeded { .. })));
        let f = FieldDescriptor::new(7, 1).unwrap();
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.apply(FieldOp::Add(FqElem(9), f.one())), Err(Error::FieldMismatch));
    }

    #[test]
    fn f4_and_f7_examples() {
        let f4 = FieldDescriptor::new(2, 2).unwrap();
        let x = f4.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f4.coeffs(f4.mul(x, x)), vec![1, 1]);
        let f7 = FieldDescriptor::new(7, 1).unwrap();
        assert_eq!(f7.inv(FqElem(3)).unwrap(), FqElem(5));
        assert_eq!(f7.apply(FieldOp::Pow(FqElem(3), 6)).unwrap(), f7.one());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = FieldDescriptor::new(p, n).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        for (p, n) in [(2, 4), (3, 3), (5, 2), (7, 2)] {
            let f = FieldDescriptor::new(p, n).unwrap();
            let q = f.order() as u64;
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1), f.one());
            }
        }
    }

    #[test]
    fn additive_map_counts() {
        let caps = Caps::default();
        let f4 = FieldDescriptor::new(2, 2).unwrap();
        assert_eq!(enumerate_additive_maps(&f4, true, &caps).unwrap().len(), 4);
        let f5 = FieldDescriptor::new(5, 1).unwrap();
        let m = enumerate_additive_maps(&f5, true, &caps).unwrap();
        assert_eq!(m, vec![AdditiveMap::zero(&f5)]);
        let f9 = FieldDescriptor::new(3, 2).unwrap();
        assert_eq!(enumerate_additive_maps(&f9, false, &caps).unwrap().len(), 81);
    }

    #[test]
    fn additive_maps_are_fp_linear() {
        let caps = Caps::default();
        for (p, n) in [(2, 2), (3, 2), (2, 3), (5, 2), (2, 4)] {
            let f = FieldDescriptor::new(p, n).unwrap();
            let maps = enumerate_additive_maps(&f, false, &caps).unwrap();
            // exhaustive in (x, y) for q <= 9, a stride of maps above that
            let stride = if f.order() <= 9 { 1 } else { 7 };
            for t in maps.iter().step_by(stride) {
                for x in f.elements() {
                    for y in f.elements() {
                        assert_eq!(t.eval(&f, f.add(x, y)), f.add(t.eval(&f, x), t.eval(&f, y)));
                    }
                    for l in 0..p as i64 {
                        let lam = f.from_int(l);
                        assert_eq!(t.eval(&f, f.mul(lam, x)), f.mul(lam, t.eval(&f, x)));
                    }
                }
            }
        }
    }

    #[test]
    fn a0_zero_maps_partition_all_maps_into_multiplication_cosets() {
        let caps = Caps::default();
        for (p, n) in [(2, 2), (3, 2), (2, 3)] {
            let f = FieldDescriptor::new(p, n).unwrap();
            let reps = enumerate_additive_maps(&f, true, &caps).unwrap();
            let all: BTreeSet<_> = enumerate_additive_maps(&f, false, &caps)
                .unwrap()
                .into_iter()
                .collect();
            let mut seen = BTreeSet::new();
            for t in &reps {
                for c in f.elements() {
                    let m = t.add(&f, &AdditiveMap::multiplication(&f, c));
                    assert!(seen.insert(m), "cosets overlap");
                }
            }
            assert_eq!(seen, all);
            assert_eq!(reps.len() as u64, p.pow(n * (n - 1)));
        }
    }

    #[test]
    fn frobenius_subgroup_values_in_f4() {
        let f = FieldDescriptor::new(2, 2).unwrap();
        let frob = AdditiveMap::frobenius_power(&f, 1);
        let w = f.generator();
        let w2 = f.mul(w, w);
        assert_eq!(frob.eval(&f, w), w2);
        assert_eq!(frob.eval(&f, w2), w);
        assert!(!frob.is_multiplication());
        assert!(AdditiveMap::multiplication(&f, w).is_multiplication());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn field_axioms_sampled(a in 0u32..625, b in 0u32..625, c in 0u32..625) {
                let f = FieldDescriptor::new(5, 4).unwrap();
                let (a, b, c) = (FqElem(a), FqElem(b), FqElem(c));
                prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                if !a.is_zero() {
                    prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }

            #[test]
            fn coeff_roundtrip(v in 0u32..2401) {
                let f = FieldDescriptor::new(7, 4).unwrap();
                let e = FqElem(v);
                prop_assert_eq!(f.from_coeffs(&f.coeffs(e)).unwrap(), e);
            }
        }
    }
}
