use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use tempfile::NamedTempFile;

use crate::args::Cli;
use crate::error::CliResult;

pub const SCHEMA_VERSION: u32 = 1;

/// Envelope shared by every JSON document.
#[derive(Debug, Serialize)]
pub struct Document<'a, T: Serialize> {
    pub schema: String,
    pub tool: Tool,
    /// Seconds since the Unix epoch; the only field that varies between runs.
    pub timestamp: u64,
    pub config: &'a Cli,
    pub effective_caps: Caps,
    pub result: T,
}

#[derive(Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Caps {
    pub field_order: u64,
    pub enumeration: u64,
    pub subgroup_oracle: u64,
    pub charpoly_vertices: usize,
    pub pair_work: u64,
}

impl From<isospec_core::Caps> for Caps {
    fn from(c: isospec_core::Caps) -> Self {
        Caps {
            field_order: c.field_order,
            enumeration: c.enumeration,
            subgroup_oracle: c.subgroup_oracle,
            charpoly_vertices: c.charpoly_vertices,
            pair_work: c.pair_work,
        }
    }
}

pub fn document<'a, T: Serialize>(kind: &str, cli: &'a Cli, caps: isospec_core::Caps, result: T) -> Document<'a, T> {
    Document {
        schema: format!("isospec.{kind}/{SCHEMA_VERSION}"),
        tool: Tool {
            name: "isospec",
            version: env!("CARGO_PKG_VERSION"),
        },
        timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        config: cli,
        effective_caps: caps.into(),
        result,
    }
}

pub fn to_json<T: Serialize>(value: &T) -> CliResult<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

pub fn to_csv<R: Serialize>(rows: &[R]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    w.into_inner().map_err(|e| crate::error::CliError::Internal(e.to_string()))
}

/// Writes to `path` through a temporary file in the same directory, or to
/// stdout when no path is given.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = NamedTempFile::new_in(dir)?;
            tmp.write_all(bytes)?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
        }
    }
    Ok(())
}
