//! Primitive roots, real cyclotomic fields `Q(ζ_ℓ)⁺` and the conductors in
//! which one of the small primes 5, 7, 11 stays inert.

use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_integer::Integer;

use crate::arith::{factorize, gcd, is_prime, pow_mod, prime_divisors, primes_up_to};
use crate::{Error, Result};

/// The only primes accepted as inert candidates.
pub const CANDIDATE_PRIMES: [u64; 3] = [5, 7, 11];

/// Smallest conductor the stream considers.
pub const MIN_CONDUCTOR: u64 = 7;

fn check_modulus(g: u64, l: u64) -> Result<()> {
    if l < 3 || !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if gcd(g % l, l) != 1 {
        return Err(Error::NotCoprime { g, modulus: l });
    }
    Ok(())
}

/// Least `k ≥ 1` with `g^k ≡ 1 (mod ℓ)`, by descending through the divisors
/// of `ℓ - 1`.
pub fn multiplicative_order(g: u64, l: u64) -> Result<u64> {
    check_modulus(g, l)?;
    let g = g % l;
    let mut ord = l - 1;
    for (r, e) in factorize(l - 1) {
        for _ in 0..e {
            if pow_mod(g, ord / r, l) == 1 {
                ord /= r;
            } else {
                break;
            }
        }
    }
    Ok(ord)
}

/// `g^{(ℓ-1)/r} ≢ 1` for every prime `r | ℓ - 1`.
pub fn is_primitive_root(g: u64, l: u64) -> Result<bool> {
    check_modulus(g, l)?;
    let g = g % l;
    Ok(prime_divisors(l - 1).into_iter().all(|r| pow_mod(g, (l - 1) / r, l) != 1))
}

/// `base^(num/den)` with the exponent in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPower {
    pub base: u64,
    pub num: u64,
    pub den: u64,
}

impl RationalPower {
    pub fn new(base: u64, num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num.gcd(&den).max(1);
        RationalPower {
            base,
            num: num / g,
            den: den / g,
        }
    }

    /// Exact equality of the two real numbers.
    pub fn same_value(&self, other: &Self) -> bool {
        if self.base == other.base {
            // cross-multiplied exponents
            return self.num as u128 * other.den as u128 == other.num as u128 * self.den as u128
                || self.base == 1;
        }
        if self.num == 0 || other.num == 0 || self.base <= 1 || other.base <= 1 {
            let one = |r: &Self| r.num == 0 || r.base == 1;
            return one(self) && one(other);
        }
        // base1^(n1·d2) = base2^(n2·d1)
        let lhs = BigUint::from(self.base).pow((self.num * other.den) as u32);
        let rhs = BigUint::from(other.base).pow((other.num * self.den) as u32);
        lhs == rhs
    }

    pub fn to_f64(&self) -> f64 {
        libm::pow(self.base as f64, self.num as f64 / self.den as f64)
    }
}

impl fmt::Display for RationalPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}/{}", self.base, self.num, self.den)
    }
}

/// Invariants of `Q(ζ_ℓ + ζ_ℓ^{-1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclotomicRealField {
    pub conductor: u64,
    /// `(ℓ - 1) / 2`.
    pub degree: u64,
    /// `ℓ^{(ℓ-3)/2}`.
    pub discriminant: BigUint,
    /// `ℓ^{(ℓ-3)/(ℓ-1)}`.
    pub root_discriminant: RationalPower,
    pub root_discriminant_approx: f64,
}

impl CyclotomicRealField {
    /// `(2d+1)^{(d-1)/d}`, the root discriminant written through the degree.
    pub fn root_discriminant_from_degree(&self) -> RationalPower {
        let d = self.degree;
        RationalPower::new(2 * d + 1, d - 1, d)
    }

    /// The exact identity `ℓ^{(ℓ-3)/(ℓ-1)} = (2d+1)^{1 - 1/d}`.
    pub fn root_discriminant_identity_holds(&self) -> bool {
        let d = self.degree;
        let l = self.conductor;
        // (ℓ-3)/(ℓ-1) against (d-1)/d, cross-multiplied, with ℓ = 2d+1
        2 * d + 1 == l
            && (l - 3) as u128 * d as u128 == (d - 1) as u128 * (l - 1) as u128
            && self.root_discriminant.same_value(&self.root_discriminant_from_degree())
    }
}

pub fn real_field_data(l: u64) -> Result<CyclotomicRealField> {
    if l < 5 {
        return Err(Error::ConductorTooSmall(l));
    }
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    let d = (l - 1) / 2;
    let rd = RationalPower::new(l, l - 3, l - 1);
    Ok(CyclotomicRealField {
        conductor: l,
        degree: d,
        discriminant: BigUint::from(l).pow((l as u32 - 3) / 2),
        root_discriminant: rd,
        root_discriminant_approx: rd.to_f64(),
    })
}

/// Splitting of a rational prime `p ≠ ℓ` in `Q(ζ_ℓ)⁺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionType {
    pub p: u64,
    pub conductor: u64,
    /// Residue degree: least `k ≥ 1` with `p^k ≡ ±1 (mod ℓ)`.
    pub residue_degree: u64,
    pub primes: u64,
    /// Order of `p` modulo `ℓ` (residue degree in the full cyclotomic field).
    pub cyclotomic_order: u64,
    pub ramified: bool,
}

impl DecompositionType {
    pub fn inert(&self) -> bool {
        self.primes == 1
    }
}

pub fn decomposition_in_real_subfield(p: u64, l: u64) -> Result<DecompositionType> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == l {
        return Err(Error::Ramified(l));
    }
    if l < 5 {
        return Err(Error::ConductorTooSmall(l));
    }
    let ord = multiplicative_order(p, l)?;
    // -1 is the unique element of order 2, so p^k ≡ -1 first happens at ord/2
    let f = if ord % 2 == 0 { ord / 2 } else { ord };
    let d = (l - 1) / 2;
    Ok(DecompositionType {
        p,
        conductor: l,
        residue_degree: f,
        primes: d / f,
        cyclotomic_order: ord,
        ramified: false,
    })
}

fn validate_candidates(candidates: &[u64]) -> Result<Vec<u64>> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    if let Some(&g) = candidates.iter().find(|g| !CANDIDATE_PRIMES.contains(g)) {
        return Err(Error::InvalidCandidate(g));
    }
    let mut c = candidates.to_vec();
    c.sort_unstable();
    c.dedup();
    Ok(c)
}

/// Least candidate (other than `ℓ`) that is a primitive root mod `ℓ`.
fn least_witness(candidates: &[u64], l: u64) -> Option<u64> {
    candidates
        .iter()
        .copied()
        .find(|&g| g != l && is_primitive_root(g, l).unwrap_or(false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InertConductor {
    pub conductor: u64,
    pub witness: u64,
}

/// Ascending primes `7 ≤ ℓ ≤ limit` for which some candidate `g ≠ ℓ` is a
/// primitive root mod `ℓ` (hence inert in `Q(ζ_ℓ)⁺`), each with the least
/// such `g`. A limit below 7 gives an empty list.
pub fn inert_conductor_stream(candidates: &[u64], limit: u64) -> Result<Vec<InertConductor>> {
    let candidates = validate_candidates(candidates)?;
    if limit < MIN_CONDUCTOR {
        return Ok(Vec::new());
    }
    Ok(primes_up_to(limit)
        .into_iter()
        .filter(|&l| l >= MIN_CONDUCTOR)
        .filter_map(|l| least_witness(&candidates, l).map(|witness| InertConductor { conductor: l, witness }))
        .collect())
}

/// One row of the conductor table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConductorRow {
    pub field: CyclotomicRealField,
    pub witness: u64,
    pub decomposition: DecompositionType,
}

pub fn conductor_table(candidates: &[u64], limit: u64) -> Result<Vec<ConductorRow>> {
    inert_conductor_stream(candidates, limit)?
        .into_iter()
        .map(|c| {
            Ok(ConductorRow {
                field: real_field_data(c.conductor)?,
                witness: c.witness,
                decomposition: decomposition_in_real_subfield(c.witness, c.conductor)?,
            })
        })
        .collect()
}

/// Fraction of odd primes below a bound having a candidate primitive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Density {
    pub hits: u64,
    pub total: u64,
}

impl Density {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.hits as f64 / self.total as f64
        }
    }

    /// `hits / total > num / den`, exactly.
    pub fn exceeds(&self, num: u64, den: u64) -> bool {
        self.hits as u128 * den as u128 > num as u128 * self.total as u128
    }
}

/// Over odd primes `ℓ < bound`, counts those where some `g ∈ candidates`,
/// `g ≠ ℓ`, is a primitive root.
pub fn primitive_root_density(candidates: &[u64], bound: u64) -> Result<Density> {
    let candidates = validate_candidates(candidates)?;
    let mut d = Density { hits: 0, total: 0 };
    if bound < 4 {
        return Ok(d);
    }
    for l in primes_up_to(bound - 1).into_iter().filter(|&l| l > 2) {
        d.total += 1;
        if least_witness(&candidates, l).is_some() {
            d.hits += 1;
        }
    }
    Ok(d)
}

/// Field degree and guaranteed inertia degree used downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineDegree {
    pub degree: u64,
    pub inertia_degree: u64,
}

/// With `doubling`, a quadratic extension of the degree-`d` field: degree
/// `2d`, inertia degree at least half of it.
pub fn pipeline_degree(d: u64, doubling: bool) -> PipelineDegree {
    if doubling {
        PipelineDegree {
            degree: 2 * d,
            inertia_degree: d,
        }
    } else {
        PipelineDegree {
            degree: d,
            inertia_degree: d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;
    use proptest::prelude::*;

    fn naive_order(g: u64, l: u64) -> u64 {
        let mut x = g % l;
        let mut k = 1;
        while x != 1 {
            x = x * (g % l) % l;
            k += 1;
        }
        k
    }

    fn naive_residue_degree(p: u64, l: u64) -> u64 {
        let mut x = p % l;
        let mut k = 1;
        while x != 1 && x != l - 1 {
            x = x * (p % l) % l;
            k += 1;
        }
        k
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(5, 7).unwrap(), 6);
        assert_eq!(multiplicative_order(1, 13).unwrap(), 1);
        assert_eq!(multiplicative_order(3, 11).unwrap(), 5);
        assert_eq!(multiplicative_order(10, 7).unwrap(), 6);
        assert_eq!(multiplicative_order(14, 7), Err(Error::NotCoprime { g: 14, modulus: 7 }));
        assert_eq!(multiplicative_order(2, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn primitive_root_examples() {
        assert!(is_primitive_root(5, 7).unwrap());
        assert!(!is_primitive_root(2, 7).unwrap());
        assert!(!is_primitive_root(5, 11).unwrap());
        assert!(is_primitive_root(7, 11).unwrap());
    }

    #[test]
    fn order_and_root_test_match_naive_scan() {
        for l in primes_up_to(2000).into_iter().filter(|&l| l > 2) {
            for g in [2, 3, 5, 7, 11, 13] {
                if g % l == 0 {
                    continue;
                }
                let ord = multiplicative_order(g, l).unwrap();
                assert_eq!(ord, naive_order(g, l), "g={g} l={l}");
                assert_eq!(is_primitive_root(g, l).unwrap(), ord == l - 1);
            }
        }
    }

    #[test]
    fn real_field_examples() {
        let k = real_field_data(11).unwrap();
        assert_eq!(k.degree, 5);
        assert_eq!(k.discriminant, BigUint::from(14641u32));
        assert_eq!(k.root_discriminant, RationalPower { base: 11, num: 4, den: 5 });
        let k = real_field_data(5).unwrap();
        assert_eq!((k.degree, k.discriminant.clone()), (2, BigUint::from(5u32)));
        let k = real_field_data(7).unwrap();
        assert_eq!(format!("{}", k.root_discriminant), "7^2/3");
        assert!((k.root_discriminant_approx - 3.659305710022971).abs() < 1e-12);
        assert_eq!(real_field_data(3), Err(Error::ConductorTooSmall(3)));
        assert_eq!(real_field_data(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn rd_identity_and_exactness() {
        for l in primes_up_to(500).into_iter().filter(|&l| l >= 5) {
            let k = real_field_data(l).unwrap();
            assert!(k.root_discriminant_identity_holds(), "{l}");
            // rd^d = disc, as exact integers
            let rd = k.root_discriminant;
            let lhs = BigUint::from(rd.base).pow((rd.num * k.degree / rd.den) as u32);
            assert_eq!(lhs, k.discriminant);
        }
        assert!(RationalPower::new(4, 1, 2).same_value(&RationalPower::new(2, 1, 1)));
        assert!(RationalPower::new(8, 2, 3).same_value(&RationalPower::new(4, 1, 1)));
        assert!(!RationalPower::new(7, 2, 3).same_value(&RationalPower::new(7, 3, 4)));
        assert!(RationalPower::new(7, 0, 3).same_value(&RationalPower::new(5, 0, 1)));
    }

    #[test]
    fn decomposition_examples() {
        let t = decomposition_in_real_subfield(5, 7).unwrap();
        assert_eq!((t.residue_degree, t.primes), (3, 1));
        assert!(t.inert());
        let t = decomposition_in_real_subfield(3, 11).unwrap();
        assert_eq!((t.residue_degree, t.primes), (5, 1));
        assert!(!is_primitive_root(3, 11).unwrap());
        // 29 ≡ 1 mod 7: totally split
        let t = decomposition_in_real_subfield(29, 7).unwrap();
        assert_eq!((t.residue_degree, t.primes), (1, 3));
        assert_eq!(decomposition_in_real_subfield(7, 7), Err(Error::Ramified(7)));
        assert_eq!(decomposition_in_real_subfield(4, 7), Err(Error::NotPrime(4)));
    }

    #[test]
    fn residue_degree_matches_scan() {
        for l in primes_up_to(1500).into_iter().filter(|&l| l >= 5) {
            for p in [2, 3, 5, 7, 11, 13, 17] {
                if p == l {
                    continue;
                }
                let t = decomposition_in_real_subfield(p, l).unwrap();
                assert_eq!(t.residue_degree, naive_residue_degree(p, l), "p={p} l={l}");
                assert_eq!(t.residue_degree * t.primes, (l - 1) / 2);
                let q = t.cyclotomic_order / t.residue_degree;
                assert!(t.cyclotomic_order.is_multiple_of(t.residue_degree) && (q == 1 || q == 2));
            }
        }
    }

    #[test]
    fn stream_examples() {
        let s = inert_conductor_stream(&[5], 30).unwrap();
        for pair in [(7, 5), (17, 5), (23, 5)] {
            assert!(s.contains(&InertConductor { conductor: pair.0, witness: pair.1 }));
        }
        assert!(s.iter().all(|c| c.conductor != 5));
        // 5 has order 5 mod 11, so 11 is absent for {5}
        assert!(s.iter().all(|c| c.conductor != 11));
        let s = inert_conductor_stream(&[5, 7, 11], 10).unwrap();
        assert_eq!(s, vec![InertConductor { conductor: 7, witness: 5 }]);
        // ℓ = 7 with only 7 available: self excluded
        assert!(inert_conductor_stream(&[7], 10).unwrap().is_empty());
        assert!(inert_conductor_stream(&[5], 3).unwrap().is_empty());
        assert_eq!(inert_conductor_stream(&[], 30), Err(Error::EmptyCandidates));
        assert_eq!(inert_conductor_stream(&[13], 30), Err(Error::InvalidCandidate(13)));
    }

    #[test]
    fn stream_witness_is_least() {
        let s = inert_conductor_stream(&[11, 7, 5], 3000).unwrap();
        for c in &s {
            assert!(is_primitive_root(c.witness, c.conductor).unwrap());
            for g in [5, 7, 11].into_iter().filter(|&g| g < c.witness && g != c.conductor) {
                assert!(!is_primitive_root(g, c.conductor).unwrap());
            }
        }
        // tails stay nonempty
        for n in [100, 1000, 2000] {
            assert!(s.iter().any(|c| c.conductor >= n));
        }
    }

    #[test]
    fn table_rows_are_inert() {
        let rows = conductor_table(&[5, 7, 11], 500).unwrap();
        assert!(!rows.is_empty());
        for r in rows {
            assert!(r.decomposition.inert());
            assert_eq!(r.decomposition.residue_degree, r.field.degree);
        }
    }

    #[test]
    fn density_small() {
        // odd primes below 30: 3,5,7,11,13,17,19,23,29
        let d = primitive_root_density(&[5], 30).unwrap();
        let expect = [3u64, 7, 17, 23]
            .iter()
            .filter(|&&l| is_primitive_root(5, l).unwrap())
            .count() as u64;
        assert_eq!(d.total, 9);
        assert_eq!(d.hits, expect);
        assert!(Density { hits: 3, total: 5 }.exceeds(1, 2));
        assert!(!Density { hits: 1, total: 2 }.exceeds(1, 2));
    }

    #[test]
    fn doubling_toggle() {
        assert_eq!(pipeline_degree(5, false), PipelineDegree { degree: 5, inertia_degree: 5 });
        assert_eq!(pipeline_degree(5, true), PipelineDegree { degree: 10, inertia_degree: 5 });
    }

    proptest! {
        #[test]
        fn primitive_implies_inert(idx in 3usize..1200, gi in 0usize..3) {
            let primes = primes_up_to(10_000);
            let l = primes[idx % primes.len()];
            let g = CANDIDATE_PRIMES[gi];
            prop_assume!(g != l && l >= 5);
            if is_primitive_root(g, l).unwrap() {
                let t = decomposition_in_real_subfield(g, l).unwrap();
                prop_assert_eq!(t.residue_degree, (l - 1) / 2);
            }
        }

        #[test]
        fn order_divides_l_minus_1(g in 2u64..10_000, idx in 1usize..1000) {
            let primes = primes_up_to(10_000);
            let l = primes[idx % primes.len()];
            prop_assume!(g % l != 0);
            let k = multiplicative_order(g, l).unwrap();
            prop_assert_eq!((l - 1) % k, 0);
            prop_assert_eq!(pow_mod(g % l, k, l), 1);
        }
    }
}
