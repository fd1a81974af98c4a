use serde::Serialize;

use isospec_core::cyclofields::{conductor_table, ConductorRow};

use crate::args::FieldsArgs;
use crate::error::{CliError, CliResult};

/// Largest conductor limit accepted by `fields`.
pub const SIEVE_CAP: u64 = 10_000_000;

#[derive(Debug, Serialize)]
pub struct Row {
    pub l: u64,
    pub d: u64,
    pub disc: String,
    pub rd_exact: String,
    pub witness: u64,
    pub f: u64,
    pub m: u64,
}

#[derive(Debug, Serialize)]
pub struct FieldsReport {
    pub candidates: Vec<u64>,
    pub limit: u64,
    pub count: usize,
    pub rows: Vec<RowJson>,
}

#[derive(Debug, Serialize)]
pub struct RowJson {
    #[serde(flatten)]
    pub row: Row,
    pub rd_approx: f64,
    pub inert: bool,
}

fn to_row(r: &ConductorRow) -> Row {
    Row {
        l: r.field.conductor,
        d: r.field.degree,
        disc: r.field.discriminant.to_string(),
        rd_exact: r.field.root_discriminant.to_string(),
        witness: r.witness,
        f: r.decomposition.residue_degree,
        m: r.decomposition.primes,
    }
}

pub fn run(args: &FieldsArgs) -> CliResult<(FieldsReport, Vec<Row>)> {
    if args.limit > SIEVE_CAP {
        return Err(CliError::Cap(format!("limit {} exceeds sieve cap {SIEVE_CAP}", args.limit)));
    }
    let table = conductor_table(&args.candidates, args.limit)?;
    let rows: Vec<RowJson> = table
        .iter()
        .map(|r| RowJson {
            row: to_row(r),
            rd_approx: r.field.root_discriminant_approx,
            inert: r.decomposition.inert(),
        })
        .collect();
    let csv_rows = table.iter().map(to_row).collect();
    let mut candidates = args.candidates.clone();
    candidates.sort_unstable();
    candidates.dedup();
    Ok((
        FieldsReport {
            candidates,
            limit: args.limit,
            count: rows.len(),
            rows,
        },
        csv_rows,
    ))
}
