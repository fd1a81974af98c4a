use serde::Serialize;

use isospec_core::bounds::{growth_table, lie_data, BoundParams, BoundReport, GrowthTable};
use isospec_core::cyclofields::{inert_conductor_stream, pipeline_degree, real_field_data};
use isospec_core::lietype::LieType;

use crate::args::{BoundArgs, BoundsArgs, PipelineArgs};
use crate::error::{CliError, CliResult};

/// Longest degree range a single table may cover.
pub const MAX_RANGE: u64 = 100_000;

#[derive(Debug, Serialize)]
pub struct ParamsEcho {
    pub lie_type: String,
    pub rank: usize,
    pub dim: u32,
    pub exponents: Vec<u32>,
    pub positive_roots: u32,
    pub s: i64,
    pub c0: f64,
    pub c0_prime: f64,
    pub p0: u64,
    pub p_prime: u64,
    pub cap_exponent: f64,
    pub eps: f64,
    pub validity_threshold: u64,
    pub torsion_free: bool,
    pub c_tf: f64,
    pub count_variant: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
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

impl From<&BoundReport> for ReportJson {
    fn from(r: &BoundReport) -> Self {
        ReportJson {
            d: r.d,
            log_c1: r.log_c1,
            log_c3: r.log_c3,
            log_c4: r.log_c4,
            log_c5: r.log_c5,
            gamma: r.gamma,
            log_x: r.log_x,
            covolume_lower_holds: r.covolume_lower_holds,
            log_subgroup_count: r.log_subgroup_count,
            log_class_cap: r.log_class_cap,
            log_nonconjugate_count: r.log_nonconjugate_count,
            log_paper_literal_count: r.log_paper_literal_count,
            valid: r.valid,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CsvRow {
    pub d: u64,
    pub log_x: f64,
    pub log_subgroup_count: f64,
    pub log_class_cap: f64,
    pub log_nonconjugate_count: f64,
    pub a_running: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct Growth {
    pub d_lo: u64,
    pub d_hi: u64,
    pub a: Option<f64>,
    pub a_defined: bool,
    pub c6: Option<f64>,
    pub positivity_threshold: Option<u64>,
    pub monotone_beyond_threshold: bool,
}

#[derive(Debug, Serialize)]
pub struct BoundsReport {
    pub params: ParamsEcho,
    pub growth: Growth,
    pub rows: Vec<ReportJson>,
}

#[derive(Debug, Serialize)]
pub struct Conductor {
    pub l: u64,
    pub field_degree: u64,
    pub degree: u64,
    pub inertia_degree: u64,
    pub witness: u64,
    pub rd_exact: String,
    pub report: ReportJson,
}

#[derive(Debug, Serialize)]
pub struct PipelineReport {
    pub params: ParamsEcho,
    pub degree_doubling: bool,
    pub conductors: Vec<Conductor>,
    pub growth: Growth,
    pub rows: Vec<ReportJson>,
}

pub fn parse_range(s: &str) -> CliResult<(u64, u64)> {
    let bad = || CliError::Usage(format!("degree range must look like 150:400, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo < 2 || lo > hi {
        return Err(CliError::Usage(format!("degree range {lo}:{hi} must satisfy 2 <= lo <= hi")));
    }
    if hi - lo >= MAX_RANGE {
        return Err(CliError::Cap(format!("degree range spans more than {MAX_RANGE} values")));
    }
    Ok((lo, hi))
}

pub fn params(args: &BoundArgs) -> CliResult<BoundParams> {
    let ty = LieType::parse(&args.lie_type)?;
    let mut group = lie_data(ty)?;
    group.s = args.s;
    let mut p = BoundParams::new(group);
    p.c0 = args.c0;
    p.c0_prime = args.c0_prime;
    p.p0 = args.p0;
    p.p_prime = args.pprime;
    p.cap_exponent = args.cap_exponent;
    p.eps = args.eps;
    p.torsion_free = args.torsion_free;
    p.c_tf = args.c_tf;
    p.paper_literal = args.paper_literal_count;
    p.validate()?;
    Ok(p)
}

fn echo(p: &BoundParams) -> ParamsEcho {
    ParamsEcho {
        lie_type: p.group.ty.to_string(),
        rank: p.group.rank,
        dim: p.group.dim,
        exponents: p.group.exponents.clone(),
        positive_roots: p.group.positive_roots,
        s: p.group.s,
        c0: p.c0,
        c0_prime: p.c0_prime,
        p0: p.p0,
        p_prime: p.p_prime,
        cap_exponent: p.cap_exponent,
        eps: p.eps,
        validity_threshold: p.validity_threshold(),
        torsion_free: p.torsion_free,
        c_tf: p.c_tf,
        count_variant: if p.paper_literal { "paper_literal" } else { "constructed" },
    }
}

fn growth(t: &GrowthTable, lo: u64, hi: u64) -> Growth {
    Growth {
        d_lo: lo,
        d_hi: hi,
        a: t.a,
        a_defined: t.a.is_some(),
        c6: t.c6,
        positivity_threshold: t.positivity_threshold,
        monotone_beyond_threshold: t.monotone_beyond_threshold,
    }
}

pub fn csv_rows(t: &GrowthTable) -> Vec<CsvRow> {
    t.reports
        .iter()
        .zip(&t.a_running)
        .map(|(r, a)| CsvRow {
            d: r.d,
            log_x: r.log_x,
            log_subgroup_count: r.log_subgroup_count,
            log_class_cap: r.log_class_cap,
            log_nonconjugate_count: r.selected_count(t.paper_literal),
            a_running: *a,
        })
        .collect()
}

pub fn run_bounds(args: &BoundsArgs) -> CliResult<(BoundsReport, GrowthTable)> {
    let p = params(&args.bound)?;
    let (lo, hi) = parse_range(&args.bound.drange)?;
    let table = growth_table(&p, lo, hi)?;
    let report = BoundsReport {
        params: echo(&p),
        growth: growth(&table, lo, hi),
        rows: table.reports.iter().map(ReportJson::from).collect(),
    };
    Ok((report, table))
}

pub fn run_pipeline(args: &PipelineArgs) -> CliResult<(PipelineReport, GrowthTable)> {
    let p = params(&args.bound)?;
    let (lo, hi) = parse_range(&args.bound.drange)?;
    let doubling = !args.no_doubling;
    // degree is l - 1 with doubling and (l - 1)/2 without
    let l_max = if doubling { hi + 1 } else { 2 * hi + 1 };
    let table = growth_table(&p, lo, hi)?;
    let mut conductors = Vec::new();
    for c in inert_conductor_stream(&[p.p_prime], l_max)? {
        let field = real_field_data(c.conductor)?;
        let deg = pipeline_degree(field.degree, doubling);
        if deg.degree < lo || deg.degree > hi {
            continue;
        }
        let report = &table.reports[(deg.degree - lo) as usize];
        conductors.push(Conductor {
            l: c.conductor,
            field_degree: field.degree,
            degree: deg.degree,
            inertia_degree: deg.inertia_degree,
            witness: c.witness,
            rd_exact: field.root_discriminant.to_string(),
            report: report.into(),
        });
    }
    let report = PipelineReport {
        params: echo(&p),
        degree_doubling: doubling,
        conductors,
        growth: growth(&table, lo, hi),
        rows: table.reports.iter().map(ReportJson::from).collect(),
    };
    Ok((report, table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("150:400").unwrap(), (150, 400));
        assert_eq!(parse_range(" 2 : 2 ").unwrap(), (2, 2));
        assert!(matches!(parse_range("1:5"), Err(CliError::Usage(_))));
        assert!(matches!(parse_range("5"), Err(CliError::Usage(_))));
        assert!(matches!(parse_range("2:200000"), Err(CliError::Cap(_))));
    }
}
