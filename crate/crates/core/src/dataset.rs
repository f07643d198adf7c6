//! The embedded catalog of 125 pure metacyclic fields with `D <= 150` and
//! its tab-separated text format.
//!
//! Columns: `no D species f4 m VL VM VN E pattern type pf proto`. Lines
//! starting with `#` and blank lines are ignored; the header is required.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::arith::Factorization;
use crate::dpf::{DpfType, EligibilityPattern};
use crate::error::{Error, Result};
use crate::invariants::Species;
use crate::radicand::Radicand;

pub const HEADER: &str = "no\tD\tspecies\tf4\tm\tVL\tVM\tVN\tE\tpattern\ttype\tpf\tproto";

/// The embedded catalog in its canonical text form.
pub const EMBEDDED_TSV: &str = include_str!("../data/fields.tsv");

/// Known type counts among fields with `D < 100`.
pub const REFERENCE_FREQUENCIES_BELOW_100: [(DpfType, usize); 8] = [
    (DpfType::Alpha1, 1),
    (DpfType::Alpha2, 10),
    (DpfType::Beta2, 7),
    (DpfType::Gamma, 25),
    (DpfType::Delta2, 8),
    (DpfType::Epsilon, 26),
    (DpfType::Eta, 1),
    (DpfType::Theta, 3),
];

/// One catalog row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldRecord {
    pub row_no: u32,
    pub d: u64,
    pub species: Species,
    pub f4: Factorization,
    pub m: u64,
    pub v_l: u32,
    pub v_m: u32,
    pub v_n: u32,
    pub e: u32,
    pub pattern: EligibilityPattern,
    pub dpf_type: DpfType,
    /// Principal factors as printed, `calL`, `calK`, `frakK1`, `frakK2` for
    /// the ideal symbols. May be empty.
    pub principal_factors: String,
    /// Whether the row is the prototype of its refined species.
    pub prototype: bool,
}

#[derive(Debug, Clone, Copy)]
pub enum DatasetSource<'a> {
    Embedded,
    File(&'a Path),
}

pub fn load_dataset(source: DatasetSource<'_>) -> Result<Vec<FieldRecord>> {
    match source {
        DatasetSource::Embedded => parse_tsv(EMBEDDED_TSV),
        DatasetSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            parse_tsv(&text)
        }
    }
}

/// The embedded catalog.
pub fn embedded() -> Vec<FieldRecord> {
    parse_tsv(EMBEDDED_TSV).expect("embedded catalog is well-formed")
}

fn field<T: std::str::FromStr>(raw: &str, name: &str, line: usize) -> Result<T> {
    raw.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {name} {raw:?}"),
    })
}

fn parse_row(cols: &[&str], line: usize) -> Result<FieldRecord> {
    let at = |e: Error| Error::Parse {
        line,
        message: e.to_string(),
    };
    let d: u64 = field(cols[1], "D", line)?;
    let radicand = Radicand::quintic(d).map_err(at)?;
    if !radicand.is_normalized().map_err(at)? {
        return Err(Error::Parse {
            line,
            message: format!("D = {d} is not normalized"),
        });
    }
    let e: u32 = field(cols[8], "E", line)?;
    if e > 6 {
        return Err(Error::Parse {
            line,
            message: format!("E = {e} is outside 0..=6"),
        });
    }
    let prototype = match cols[12] {
        "0" => false,
        "1" => true,
        other => {
            return Err(Error::Parse {
                line,
                message: format!("invalid proto flag {other:?}"),
            })
        }
    };
    Ok(FieldRecord {
        row_no: field(cols[0], "row number", line)?,
        d,
        species: cols[2].parse().map_err(at)?,
        f4: cols[3].parse().map_err(at)?,
        m: field(cols[4], "m", line)?,
        v_l: field(cols[5], "VL", line)?,
        v_m: field(cols[6], "VM", line)?,
        v_n: field(cols[7], "VN", line)?,
        e,
        pattern: cols[9].parse().map_err(at)?,
        dpf_type: cols[10].parse().map_err(at)?,
        principal_factors: cols[11].to_string(),
        prototype,
    })
}

/// Parses catalog text. Line numbers in errors are 1-based.
pub fn parse_tsv(text: &str) -> Result<Vec<FieldRecord>> {
    let mut records = Vec::new();
    let mut seen_header = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !seen_header {
            if trimmed != HEADER {
                return Err(Error::Parse {
                    line,
                    message: "missing or malformed header".to_string(),
                });
            }
            seen_header = true;
            continue;
        }
        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() != 13 {
            return Err(Error::Parse {
                line,
                message: format!("expected 13 columns, found {}", cols.len()),
            });
        }
        records.push(parse_row(&cols, line)?);
    }
    if !seen_header {
        return Err(Error::Parse {
            line: 1,
            message: "missing header".to_string(),
        });
    }
    Ok(records)
}

/// Canonical text form: header, then one line per record.
pub fn to_tsv(records: &[FieldRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.row_no,
            r.d,
            r.species,
            r.f4.display_leading(5),
            r.m,
            r.v_l,
            r.v_m,
            r.v_n,
            r.e,
            r.pattern,
            r.dpf_type,
            r.principal_factors,
            u8::from(r.prototype),
        );
    }
    out
}

/// Type counts among rows with `D < d_max`. Every type appears as a key.
pub fn type_frequencies(records: &[FieldRecord], d_max: u64) -> BTreeMap<DpfType, usize> {
    let mut counts: BTreeMap<DpfType, usize> = DpfType::ALL.iter().map(|&t| (t, 0)).collect();
    for r in records.iter().filter(|r| r.d < d_max) {
        *counts.entry(r.dpf_type).or_default() += 1;
    }
    counts
}
