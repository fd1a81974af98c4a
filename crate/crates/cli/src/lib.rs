//! Command-line front end over `isospec-core`.

pub mod args;
pub mod bounds;
pub mod error;
pub mod fields;
pub mod lie;
pub mod output;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Format};
use error::{CliError, CliResult, EXIT_COUNTEREXAMPLE, EXIT_EMPTY, EXIT_OK, EXIT_USAGE};
use isospec_core::Caps;

pub fn caps(cli: &Cli) -> Caps {
    let mut c = Caps::default();
    if let Some(v) = cli.common.max_enumeration {
        c.enumeration = v;
    }
    if let Some(v) = cli.common.max_subgroup_oracle {
        c.subgroup_oracle = v;
    }
    if let Some(v) = cli.common.max_charpoly_vertices {
        c.charpoly_vertices = v;
    }
    if let Some(v) = cli.common.max_pair_work {
        c.pair_work = v;
    }
    c
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("isospec: {e}");
            e.exit_code()
        }
    }
}

fn write_json<T: Serialize>(kind: &str, cli: &Cli, caps: Caps, result: T) -> CliResult<()> {
    let doc = output::document(kind, cli, caps, result);
    output::emit(cli.common.output.as_deref(), &output::to_json(&doc)?)
}

fn write_csv<R: Serialize>(cli: &Cli, rows: &[R]) -> CliResult<()> {
    output::emit(cli.common.output.as_deref(), &output::to_csv(rows)?)
}

fn json_only(cli: &Cli, name: &str) -> CliResult<()> {
    if cli.common.format == Format::Csv {
        return Err(CliError::Usage(format!("{name} only produces JSON")));
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> CliResult<i32> {
    let caps = caps(cli);
    match &cli.command {
        Command::Verify(a) => {
            json_only(cli, "verify")?;
            let cert = verify::run(a, &caps)?;
            let ok = cert.verified();
            write_json("verify", cli, caps, &cert)?;
            Ok(if ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Fields(a) => {
            let (report, rows) = fields::run(a)?;
            let empty = rows.is_empty();
            match cli.common.format {
                Format::Json => write_json("fields", cli, caps, &report)?,
                Format::Csv => write_csv(cli, &rows)?,
            }
            if empty {
                eprintln!("isospec: no conductor up to {} has an inert candidate", a.limit);
                return Ok(EXIT_EMPTY);
            }
            Ok(EXIT_OK)
        }
        Command::Pipeline(a) => {
            let (report, table) = bounds::run_pipeline(a)?;
            let defined = table.a.is_some();
            match cli.common.format {
                Format::Json => write_json("pipeline", cli, caps, &report)?,
                Format::Csv => write_csv(cli, &bounds::csv_rows(&table))?,
            }
            if !defined {
                eprintln!("isospec: the count is never positive on the range, so a is undefined");
                return Ok(EXIT_EMPTY);
            }
            Ok(EXIT_OK)
        }
        Command::Bounds(a) => {
            let (report, table) = bounds::run_bounds(a)?;
            match cli.common.format {
                Format::Json => write_json("bounds", cli, caps, &report)?,
                Format::Csv => write_csv(cli, &bounds::csv_rows(&table))?,
            }
            Ok(EXIT_OK)
        }
        Command::Embed(a) => {
            json_only(cli, "embed")?;
            let report = lie::run_embed(a, &caps)?;
            let ok = report.isomorphism;
            write_json("embed", cli, caps, &report)?;
            Ok(if ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Order(a) => {
            json_only(cli, "order")?;
            let report = lie::run_order(a)?;
            write_json("order", cli, caps, &report)?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_caps() {
        let cli = Cli::try_parse_from(["isospec", "--max-subgroup-oracle", "7", "--max-pair-work", "9", "order", "--type", "G2", "--q", "2"])
            .unwrap();
        let c = caps(&cli);
        assert_eq!(c.subgroup_oracle, 7);
        assert_eq!(c.pair_work, 9);
        assert_eq!(c.charpoly_vertices, Caps::default().charpoly_vertices);
    }
}
