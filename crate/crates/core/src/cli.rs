//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 when verification fails, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::algebra::{ambiguous_dimensions, selftest};
use crate::dataset::{
    embedded, load_dataset, type_frequencies, DatasetSource, REFERENCE_FREQUENCIES_BELOW_100,
};
use crate::dpf::{admissible_types, eligibility_pattern, polya_decision, DpfType};
use crate::error::Error;
use crate::invariants::FieldInvariants;
use crate::radicand::{enumerate_normalized, Radicand, QUINTIC};
use crate::relations::zeta_norm_density;
use crate::verify::verify_dataset;

#[derive(Debug, Parser)]
#[command(
    name = "quintic-dpf",
    version,
    about = "Pure quintic fields: invariants, DPF types, catalog checks"
)]
struct Cli {
    /// Render type names and pattern marks with Greek letters and symbols.
    #[arg(long, global = true)]
    unicode: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants and admissible DPF types of Q(D^(1/5)).
    Classify {
        d: u64,
        #[arg(long)]
        json: bool,
    },
    /// Catalog of all normalized radicands below a bound.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        tsv: bool,
    },
    /// Cross-check a catalog (the embedded one by default).
    Verify {
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
    /// Type frequencies among catalog rows with D below a bound.
    Stats {
        #[arg(long, default_value_t = 100)]
        max: u64,
    },
    /// Density of radicands with t primes other than 5 where zeta_5 is a norm.
    Density {
        #[arg(long = "t")]
        t: u32,
    },
    /// Group-ring identities.
    Algebra {
        #[arg(long)]
        selftest: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let result = match cli.command {
        Command::Classify { d, json } => classify(d, json, cli.unicode, out),
        Command::Table { max, tsv } => table(max, tsv, cli.unicode, out),
        Command::Verify { dataset } => verify(dataset, out),
        Command::Stats { max } => stats(max, cli.unicode, out),
        Command::Density { t } => density(t, out),
        Command::Algebra { selftest } => algebra(selftest, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

type CmdResult = Result<i32, Error>;

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn classify(d: u64, as_json: bool, unicode: bool, out: &mut dyn Write) -> CmdResult {
    let input = Radicand::reduced(d, QUINTIC)?;
    let (normalized, k0) = input.normalize()?;
    let inv = FieldInvariants::compute(&normalized)?;
    let c = inv.counters;
    let adm = admissible_types(&inv);
    let dims = ambiguous_dimensions(&inv);
    let recorded = embedded().into_iter().find(|r| r.d == normalized.value());
    let name = |t: DpfType| t.name(unicode);

    if as_json {
        let polya: Map<String, Value> = adm
            .admissible
            .iter()
            .map(|t| {
                (
                    name(t).to_string(),
                    json!(polya_decision(t, c.conductor_primes)),
                )
            })
            .collect();
        let v = json!({
            "input": d,
            "normalized": normalized.value(),
            "k0": k0,
            "factorization": normalized.factorization().to_string(),
            "species": inv.species.tag(),
            "f4": inv.conductor4.display_leading(5),
            "discriminants": {
                "L": inv.discriminants.pure.display_leading(5),
                "M": inv.discriminants.intermediate.display_leading(5),
                "N": inv.discriminants.normal.display_leading(5),
            },
            "counters": {
                "T": c.conductor_primes, "t": c.t, "u": c.u, "v": c.v,
                "n": c.n, "s2": c.s2, "s4": c.s4,
            },
            "multiplicity": inv.multiplicity,
            "refined_species": inv.refined().to_string(),
            "admissible_types": adm.admissible.names(unicode),
            "polya": polya,
            "recorded_type": recorded.as_ref().map(|r| name(r.dpf_type)),
        });
        writeln!(out, "{v}").map_err(io)?;
        return Ok(0);
    }

    let mut lines = vec![
        format!("radicand: {d}"),
        format!("normalized: {} (k0 = {k0})", normalized.value()),
        format!("factorization: {}", normalized.factorization()),
        format!("species: {}", inv.species),
        format!("f4: {}", inv.conductor4.display_leading(5)),
        format!("disc L: {}", inv.discriminants.pure.display_leading(5)),
        format!(
            "disc M: {}",
            inv.discriminants.intermediate.display_leading(5)
        ),
        format!("disc N: {}", inv.discriminants.normal.display_leading(5)),
        format!(
            "counters: T={} t={} u={} v={} n={} s2={} s4={}",
            c.conductor_primes, c.t, c.u, c.v, c.n, c.s2, c.s4
        ),
        format!("multiplicity: {}", inv.multiplicity),
        format!("refined species: {}", inv.refined()),
        format!(
            "ambiguous dimensions: absolute={} intermediate={} relative={}",
            dims.absolute, dims.intermediate, dims.relative
        ),
        format!("admissible: {}", adm.admissible.names(unicode).join(" ")),
    ];
    for (t, rule) in &adm.excluded {
        lines.push(format!("  excluded {}: {}", name(*t), rule.describe()));
    }
    for t in adm.admissible.iter() {
        let verdict = if polya_decision(t, c.conductor_primes) {
            "Polya"
        } else {
            "not Polya"
        };
        lines.push(format!("polya {}: {verdict}", name(t)));
    }
    match recorded {
        Some(r) => {
            let compatible = adm.admissible.contains(r.dpf_type);
            let pattern = eligibility_pattern(&inv, Some(r.dpf_type));
            lines.push(format!(
                "recorded: {} (row {}) {}",
                name(r.dpf_type),
                r.row_no,
                if compatible {
                    "recorded-type-compatible"
                } else {
                    "recorded-type-INCOMPATIBLE"
                }
            ));
            lines.push(format!("pattern: {}", pattern.render(unicode)));
        }
        None => {
            lines.push("recorded: none".to_string());
            lines.push(format!(
                "pattern: {}",
                eligibility_pattern(&inv, None).render(unicode)
            ));
        }
    }
    for l in lines {
        writeln!(out, "{l}").map_err(io)?;
    }
    Ok(0)
}

fn table(max: u64, tsv: bool, unicode: bool, out: &mut dyn Write) -> CmdResult {
    let radicands = enumerate_normalized(max, QUINTIC)?;
    if tsv {
        writeln!(out, "{}", crate::dataset::HEADER).map_err(io)?;
    } else {
        writeln!(
            out,
            "{:>6} {:<18} {:<3} {:<24} {:>4} {:>2} {:<12} admissible",
            "D", "factors", "S", "f4", "m", "T", "pattern"
        )
        .map_err(io)?;
    }
    for (i, r) in radicands.iter().enumerate() {
        let inv = FieldInvariants::compute(r)?;
        let pattern = eligibility_pattern(&inv, None);
        let f4 = inv.conductor4.display_leading(5);
        if tsv {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t\t\t\t\t{}\t\t\t",
                i + 1,
                r.value(),
                inv.species,
                f4,
                inv.multiplicity,
                pattern
            )
            .map_err(io)?;
        } else {
            writeln!(
                out,
                "{:>6} {:<18} {:<3} {:<24} {:>4} {:>2} {:<12} {}",
                r.value(),
                r.factorization().to_string(),
                inv.species.tag(),
                f4,
                inv.multiplicity,
                inv.counters.conductor_primes,
                pattern.render(unicode),
                admissible_types(&inv).admissible.names(unicode).join(" ")
            )
            .map_err(io)?;
        }
    }
    Ok(0)
}

fn verify(dataset: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let records = match &dataset {
        Some(path) => load_dataset(DatasetSource::File(path))?,
        None => load_dataset(DatasetSource::Embedded)?,
    };
    let report = verify_dataset(&records);
    writeln!(out, "{report}").map_err(io)?;
    Ok(if report.is_clean() { 0 } else { 1 })
}

fn stats(max: u64, unicode: bool, out: &mut dyn Write) -> CmdResult {
    let counts = type_frequencies(&embedded(), max);
    let compare = max == 100;
    if compare {
        writeln!(out, "{:<4} {:>4} {:>4}", "type", "n", "ref").map_err(io)?;
    } else {
        writeln!(out, "{:<4} {:>4}", "type", "n").map_err(io)?;
    }
    for (t, n) in &counts {
        if compare {
            let reference = REFERENCE_FREQUENCIES_BELOW_100
                .iter()
                .find(|(r, _)| r == t)
                .map_or(0, |&(_, k)| k);
            writeln!(out, "{:<4} {:>4} {:>4}", t.name(unicode), n, reference).map_err(io)?;
        } else {
            writeln!(out, "{:<4} {:>4}", t.name(unicode), n).map_err(io)?;
        }
    }
    let total: usize = counts.values().sum();
    writeln!(out, "total {total}").map_err(io)?;
    Ok(0)
}

fn density(t: u32, out: &mut dyn Write) -> CmdResult {
    writeln!(out, "{}", zeta_norm_density(t)?).map_err(io)?;
    Ok(0)
}

fn algebra(run_selftest: bool, out: &mut dyn Write) -> CmdResult {
    if !run_selftest {
        writeln!(out, "nothing to do; pass --selftest").map_err(io)?;
        return Ok(2);
    }
    let results = selftest();
    for (name, ok) in &results {
        writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" }).map_err(io)?;
    }
    Ok(if results.iter().all(|(_, ok)| *ok) {
        0
    } else {
        1
    })
}
