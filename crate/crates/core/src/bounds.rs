//! Covolume and lattice-count constants, evaluated in log space.
//!
//! Notation: `d` is the field degree, `dim`, `r`, `m_i` the dimension, rank
//! and exponents of the group, `p0` the residue characteristic at the
//! distinguished place and `p'` the inert prime.
//!
//! ```text
//! log c1 = (dim/2) log c0 + (s/2) log c0' + Σ (log m_i! - (m_i+1) log 2π)
//!          + dim log p0 + r log(π²/6)
//! log c3 = (dim - 1/2) log p'          γ = (dim + s)/2
//! log c4 = (1/4 - ε) log p'
//! log c5 = log c3 + C log c1 + dim log p'
//! log x  = d (log c1 + log c3 + γ log d)        [+ d log c_tf if torsion-free]
//! subgroups  = (d/2)(d/2 - 1) log p'
//! class cap  = d (log c5 + γ C log d)
//! count      = max(0, subgroups - class cap)
//! ```

use alloc::vec::Vec;
use core::f64::consts::PI;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::is_prime;
use crate::lietype::{chevalley_order, LieType};
use crate::{Error, Result};

/// Lie data entering the constants.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupTypeData {
    pub ty: LieType,
    pub rank: usize,
    pub dim: u32,
    pub exponents: Vec<u32>,
    pub positive_roots: u32,
    pub s: i64,
}

/// Standard data for `ty` with `s = 0`; type `A1` is rejected.
pub fn lie_data(ty: LieType) -> Result<GroupTypeData> {
    if ty == LieType::A(1) {
        return Err(Error::ExcludedA1);
    }
    Ok(GroupTypeData {
        ty,
        rank: ty.rank(),
        dim: ty.dimension(),
        exponents: ty.exponents(),
        positive_roots: ty.positive_roots(),
        s: 0,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundParams {
    pub group: GroupTypeData,
    pub c0: f64,
    pub c0_prime: f64,
    pub p0: u64,
    pub p_prime: u64,
    /// Exponent constant `C` of the conjugacy-class cap.
    pub cap_exponent: f64,
    pub eps: f64,
    pub torsion_free: bool,
    pub c_tf: f64,
    /// Replace the subgroup count by `d² log c3` (reported separately).
    pub paper_literal: bool,
}

impl BoundParams {
    pub fn new(group: GroupTypeData) -> Self {
        BoundParams {
            group,
            c0: 1.0,
            c0_prime: 1.0,
            p0: 13,
            p_prime: 5,
            cap_exponent: 1.0,
            eps: 0.05,
            torsion_free: false,
            c_tf: 2.0,
            paper_literal: false,
        }
    }

    /// `A2` with every other constant at its default.
    pub fn default_a2() -> Self {
        Self::new(lie_data(LieType::A(2)).expect("A2 is supported"))
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.c0) || !positive(self.c0_prime) || !positive(self.cap_exponent) || !positive(self.c_tf) {
            return Err(Error::InvalidParameter("constants must be positive and finite"));
        }
        if !(self.eps > 0.0 && self.eps < 0.25) {
            return Err(Error::InvalidParameter("eps must lie in (0, 1/4)"));
        }
        if !is_prime(self.p0) || self.p0 <= 11 {
            return Err(Error::InvalidParameter("p0 must be a prime greater than 11"));
        }
        if !is_prime(self.p_prime) || self.p_prime <= 3 || self.p_prime > 11 {
            return Err(Error::InvalidParameter("p' must be one of 5, 7, 11"));
        }
        if self.group.ty == LieType::A(1) {
            return Err(Error::ExcludedA1);
        }
        Ok(())
    }

    pub fn gamma(&self) -> f64 {
        (self.group.dim as f64 + self.group.s as f64) / 2.0
    }

    fn ln_p_prime(&self) -> f64 {
        libm::log(self.p_prime as f64)
    }

    /// Smallest degree at which the `c4` form of the subgroup count applies.
    pub fn validity_threshold(&self) -> u64 {
        libm::ceil(1.0 / (2.0 * self.eps)) as u64
    }
}

fn ln_factorial(m: u32) -> f64 {
    (2..=m).map(|k| libm::log(k as f64)).sum()
}

pub fn compute_c1(params: &BoundParams) -> f64 {
    let g = &params.group;
    let dim = g.dim as f64;
    let ln_2pi = libm::log(2.0 * PI);
    let exps: f64 = g
        .exponents
        .iter()
        .map(|&m| ln_factorial(m) - (m as f64 + 1.0) * ln_2pi)
        .sum();
    dim / 2.0 * libm::log(params.c0)
        + g.s as f64 / 2.0 * libm::log(params.c0_prime)
        + exps
        + dim * libm::log(params.p0 as f64)
        + g.rank as f64 * libm::log(PI * PI / 6.0)
}

pub fn compute_c3(params: &BoundParams) -> f64 {
    (params.group.dim as f64 - 0.5) * params.ln_p_prime()
}

pub fn compute_c4(params: &BoundParams) -> f64 {
    (0.25 - params.eps) * params.ln_p_prime()
}

pub fn compute_c5(params: &BoundParams) -> f64 {
    compute_c3(params) + params.cap_exponent * compute_c1(params) + params.group.dim as f64 * params.ln_p_prime()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovolumeBound {
    pub log_x: f64,
    /// `γ d log d`.
    pub lower: f64,
    pub lower_holds: bool,
}

pub fn covolume_log_bound(params: &BoundParams, d: u64) -> Result<CovolumeBound> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let df = d as f64;
    let gamma = params.gamma();
    let ln_d = libm::log(df);
    let mut log_x = df * (compute_c1(params) + compute_c3(params) + gamma * ln_d);
    if params.torsion_free {
        log_x += df * libm::log(params.c_tf);
    }
    let lower = gamma * df * ln_d;
    Ok(CovolumeBound {
        log_x,
        lower,
        lower_holds: log_x >= lower * (1.0 - 1e-9),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsospectralCount {
    pub log_subgroup_count: f64,
    pub log_class_cap: f64,
    pub log_nonconjugate_count: f64,
    /// `d² log c3 - class cap`, clamped at 0.
    pub log_paper_literal_count: f64,
    /// `d ≥ 1/(2ε)`.
    pub valid: bool,
}

pub fn isospectral_log_count(params: &BoundParams, d: u64) -> Result<IsospectralCount> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let df = d as f64;
    let half = df / 2.0;
    let sub = half * (half - 1.0) * params.ln_p_prime();
    let cap = df * (compute_c5(params) + params.gamma() * params.cap_exponent * libm::log(df));
    let literal = df * df * compute_c3(params) - cap;
    Ok(IsospectralCount {
        log_subgroup_count: sub,
        log_class_cap: cap,
        log_nonconjugate_count: (sub - cap).max(0.0),
        log_paper_literal_count: literal.max(0.0),
        valid: c4_condition_exact(params.eps, d),
    })
}

/// `2εd ≥ 1` evaluated exactly on the binary value of `ε`. Equivalent to
/// `(d/2)(d/2 - 1) ≥ (1/4 - ε) d²`.
pub fn c4_condition_exact(eps: f64, d: u64) -> bool {
    if !(eps > 0.0) || d == 0 {
        return false;
    }
    let bits = eps.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mantissa, exp) = if biased == 0 { (frac, -1074) } else { (frac | (1 << 52), biased - 1075) };
    // 2·mantissa·2^exp·d ≥ 1
    let lhs = mantissa as u128 * d as u128;
    let shift = exp + 1;
    if shift >= 0 {
        return lhs > 0;
    }
    let s = -shift;
    s < 127 && lhs >= 1u128 << s
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub d: u64,
    pub log_c1: f64,
    pub log_c3: f64,
    pub log_c4: f64,
    pub log_c5: f64,
    pub gamma: f64,
    pub log_x: f64,
    pub covolume_lower_holds: bool,
    pub log_subgroup_count: f64,
    pub log_class_cap: f64,
    pub log_nonconjugate_count: f64,
    pub log_paper_literal_count: f64,
    pub valid: bool,
}

impl BoundReport {
    /// The count selected by the params' `paper_literal` flag.
    pub fn selected_count(&self, paper_literal: bool) -> f64 {
        if paper_literal {
            self.log_paper_literal_count
        } else {
            self.log_nonconjugate_count
        }
    }

    /// `count / ((log x)² / (log log x)²)`.
    pub fn exponent_ratio(&self, paper_literal: bool) -> Option<f64> {
        let lx = self.log_x;
        if lx <= 1.0 {
            return None;
        }
        let llx = libm::log(lx);
        Some(self.selected_count(paper_literal) * llx * llx / (lx * lx))
    }
}

pub fn bound_report(params: &BoundParams, d: u64) -> Result<BoundReport> {
    params.validate()?;
    let cov = covolume_log_bound(params, d)?;
    let count = isospectral_log_count(params, d)?;
    Ok(BoundReport {
        d,
        log_c1: compute_c1(params),
        log_c3: compute_c3(params),
        log_c4: compute_c4(params),
        log_c5: compute_c5(params),
        gamma: params.gamma(),
        log_x: cov.log_x,
        covolume_lower_holds: cov.lower_holds,
        log_subgroup_count: count.log_subgroup_count,
        log_class_cap: count.log_class_cap,
        log_nonconjugate_count: count.log_nonconjugate_count,
        log_paper_literal_count: count.log_paper_literal_count,
        valid: count.valid,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthTable {
    pub reports: Vec<BoundReport>,
    /// Running minimum of [`BoundReport::exponent_ratio`] over positive rows.
    pub a_running: Vec<Option<f64>>,
    /// Largest `a` with `count ≥ a (log x)²/(log log x)²` on every positive row.
    pub a: Option<f64>,
    /// Largest `c6` with `count ≥ c6 d²` on every positive row.
    pub c6: Option<f64>,
    /// Least `d` in the range from which the count stays positive.
    pub positivity_threshold: Option<u64>,
    /// The count never decreases from the threshold onwards.
    pub monotone_beyond_threshold: bool,
    pub paper_literal: bool,
}

pub fn growth_table(params: &BoundParams, d_lo: u64, d_hi: u64) -> Result<GrowthTable> {
    if d_lo > d_hi {
        return Err(Error::InvalidParameter("empty degree range"));
    }
    let lit = params.paper_literal;
    let reports = (d_lo..=d_hi).map(|d| bound_report(params, d)).collect::<Result<Vec<_>>>()?;
    let mut a_running = Vec::with_capacity(reports.len());
    let mut a: Option<f64> = None;
    let mut c6: Option<f64> = None;
    for r in &reports {
        if r.selected_count(lit) > 0.0 {
            if let Some(ratio) = r.exponent_ratio(lit) {
                a = Some(a.map_or(ratio, |v| v.min(ratio)));
            }
            let df = r.d as f64;
            let c = r.selected_count(lit) / (df * df);
            c6 = Some(c6.map_or(c, |v| v.min(c)));
        }
        a_running.push(a);
    }
    let positivity_threshold = reports
        .iter()
        .rposition(|r| r.selected_count(lit) <= 0.0)
        .map_or(Some(d_lo), |i| reports.get(i + 1).map(|r| r.d));
    let monotone_beyond_threshold = match positivity_threshold {
        Some(t) => reports
            .iter()
            .skip((t - d_lo) as usize)
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[1].selected_count(lit) >= w[0].selected_count(lit)),
        None => false,
    };
    Ok(GrowthTable {
        reports,
        a_running,
        a,
        c6,
        positivity_threshold,
        monotone_beyond_threshold,
        paper_literal: lit,
    })
}

/// `Π |G(F_{p^{n_i}})| / p^{Σ n_i}`, required to divide exactly.
pub fn index_bound(ty: LieType, p: u64, inertia_degrees: &[u32]) -> Result<BigUint> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if inertia_degrees.is_empty() || inertia_degrees.contains(&0) {
        return Err(Error::InvalidParameter("inertia degrees must be positive"));
    }
    let mut num = BigUint::one();
    let mut total = 0u32;
    for &n in inertia_degrees {
        let q = p
            .checked_pow(n)
            .ok_or(Error::InvalidParameter("p^n overflows u64"))?;
        num *= chevalley_order(ty, q)?;
        total += n;
    }
    let den = BigUint::from(p).pow(total);
    if !(&num % &den).is_zero() {
        return Err(Error::Indivisible);
    }
    Ok(num / den)
}
