//! Command-line front end for `stackycovers-core`.
//!
//! [`run`] parses arguments, writes to the given streams and returns the
//! process exit code: 0 success, 1 verification discrepancy, 2 domain or
//! usage error, 3 enumeration cap exceeded.

pub mod args;
pub mod error;
pub mod record;
pub mod sweep;
pub mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use stackycovers_core::oracle::{self, Identity, VerifyReport};
use stackycovers_core::simple_cyclic::{CharAssumption, SimpleCyclicParams};
use stackycovers_core::strata;
use stackycovers_core::triple_cover::TripleCoverParams;

use args::{Cli, ClassifyTarget, Command, Format, StrataTarget};
use error::CliError;
use record::{OutputRecord, PicReport, RecordBody, SimpleReport, TripleReport};
use sweep::{SweepSpec, Tuples};
use table::{SimpleRow, TripleRow};

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_mutation(args, None, out, err)
}

/// Like [`run`], but `verify` perturbs the shortcut of `mutate`.
pub fn run_with_mutation<I, T>(args: I, mutate: Option<Identity>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, mutate, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn resolve_cap(cli: &Cli) -> Result<u128, CliError> {
    match cli.cap {
        Some(c) => Ok(c),
        None => Ok(oracle::cap_from_env()?),
    }
}

fn dispatch(cli: &Cli, mutate: Option<Identity>, out: &mut dyn Write) -> Result<(), CliError> {
    let ch: CharAssumption = cli.char_flag.into();
    match &cli.command {
        Command::Classify { target } => match target {
            ClassifyTarget::Simple { n, r, d } => {
                let p = SimpleCyclicParams::new(*n, *r, *d)?;
                let body = RecordBody::Simple(Box::new(SimpleReport::build(&p, ch)?));
                let input = vec![
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                    ("d", d.to_string()),
                    ("char", format!("{:?}", cli.char_flag).to_lowercase()),
                ];
                emit_record(out, OutputRecord::new("classify simple", input, body), cli.format)
            }
            ClassifyTarget::Triple { d1, d2, strict } => {
                let p = if *strict {
                    TripleCoverParams::new(*d1, *d2)?
                } else {
                    TripleCoverParams::relaxed(*d1, *d2)?
                };
                let body = RecordBody::Triple(Box::new(TripleReport::build(&p)?));
                let input = vec![("d1", d1.to_string()), ("d2", d2.to_string()), ("strict", strict.to_string())];
                emit_record(out, OutputRecord::new("classify triple", input, body), cli.format)
            }
        },
        Command::Pic { n, r, d } => {
            let p = SimpleCyclicParams::new(*n, *r, *d)?;
            let body = RecordBody::Pic(PicReport::build(&p)?);
            let input = vec![("n", n.to_string()), ("r", r.to_string()), ("d", d.to_string())];
            emit_record(out, OutputRecord::new("pic", input, body), cli.format)
        }
        Command::Strata { which } => match which {
            StrataTarget::P1 { rd } => {
                let body = RecordBody::StrataP1(strata::aut_locus_codim_p1(*rd)?);
                emit_record(out, OutputRecord::new("strata p1", vec![("rd", rd.to_string())], body), cli.format)
            }
            StrataTarget::P2 { d, ambient } => {
                let body = RecordBody::StrataP2(strata::aut_locus_codim_p2_with(*d, ch, (*ambient).into())?);
                let input = vec![("d", d.to_string()), ("ambient", format!("{ambient:?}").to_lowercase())];
                emit_record(out, OutputRecord::new("strata p2", input, body), cli.format)
            }
        },
        Command::Table { sweep } => {
            let spec = read_sweep(sweep)?;
            let cap = resolve_cap(cli)?;
            let requested = spec.tuple_count()?;
            if requested > cap {
                return Err(stackycovers_core::ClassifyError::CapExceeded { requested, cap }.into());
            }
            let format = cli.format.unwrap_or(Format::Csv);
            match spec.tuples()? {
                Tuples::Simple(ps) => {
                    let rows = ps.iter().map(|p| SimpleRow::build(p, ch)).collect::<Result<Vec<_>, _>>()?;
                    table::write_rows(out, &rows, format)
                }
                Tuples::Triple(ps) => {
                    let rows = ps.iter().map(TripleRow::build).collect::<Result<Vec<_>, _>>()?;
                    table::write_rows(out, &rows, format)
                }
            }
        }
        Command::Verify { sweep, only, .. } => {
            let cap = resolve_cap(cli)?;
            let sweep_box = match sweep {
                Some(path) => read_sweep(path)?.to_box(cap)?,
                None => oracle::SweepBox::default().with_cap(cap),
            };
            let only = only
                .iter()
                .map(|s| parse_identity(s))
                .collect::<Result<Vec<_>, _>>()?;
            let mutate = match mutate {
                Some(m) => Some(m),
                None => flag_mutation(&cli.command)?,
            };
            let report = oracle::verify(&sweep_box, &only, mutate)?;
            write_verify(out, &report, cli.format)?;
            match report.discrepancy_count() {
                0 => Ok(()),
                k => Err(CliError::Discrepancy(k)),
            }
        }
    }
}

#[cfg(feature = "mutation")]
fn flag_mutation(cmd: &Command) -> Result<Option<Identity>, CliError> {
    match cmd {
        Command::Verify { mutate: Some(m), .. } => parse_identity(m).map(Some),
        _ => Ok(None),
    }
}

#[cfg(not(feature = "mutation"))]
fn flag_mutation(_: &Command) -> Result<Option<Identity>, CliError> {
    Ok(None)
}

fn parse_identity(s: &str) -> Result<Identity, CliError> {
    Identity::from_id(s).ok_or_else(|| {
        let known: Vec<_> = Identity::ALL.iter().map(|i| i.id()).collect();
        CliError::Usage(format!("unknown identity {s:?}; expected one of {}", known.join(", ")))
    })
}

fn read_sweep(path: &std::path::Path) -> Result<SweepSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read sweep file {}: {e}", path.display())))?;
    SweepSpec::parse(&text)
}

fn emit_record(out: &mut dyn Write, rec: OutputRecord, format: Option<Format>) -> Result<(), CliError> {
    match format.unwrap_or(Format::Json) {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rec)?;
            writeln!(out)?;
        }
        Format::Csv => table::write_csv(out, &["field", "value"], &table::flatten(&serde_json::to_value(&rec)?))?,
        Format::Md => table::write_markdown(out, &["field", "value"], &table::flatten(&serde_json::to_value(&rec)?))?,
    }
    Ok(())
}

fn write_verify(out: &mut dyn Write, report: &VerifyReport, format: Option<Format>) -> Result<(), CliError> {
    let rows: Vec<Vec<String>> = report
        .identities
        .iter()
        .map(|r| {
            vec![
                r.identity.id().to_string(),
                r.checked.to_string(),
                r.skipped.to_string(),
                r.discrepancies.len().to_string(),
            ]
        })
        .collect();
    let header = ["identity", "checked", "skipped", "discrepancies"];
    match format {
        Some(Format::Json) => {
            let rec = OutputRecord::new("verify", vec![], RecordBody::Verify(report.clone()));
            serde_json::to_writer_pretty(&mut *out, &rec)?;
            writeln!(out)?;
            return Ok(());
        }
        Some(Format::Csv) => table::write_csv(out, &header, &rows)?,
        Some(Format::Md) => table::write_markdown(out, &header, &rows)?,
        None => {
            writeln!(out, "{:<14} {:>9} {:>8} {:>14}", header[0], header[1], header[2], header[3])?;
            for r in &rows {
                writeln!(out, "{:<14} {:>9} {:>8} {:>14}", r[0], r[1], r[2], r[3])?;
            }
        }
    }
    for r in &report.identities {
        for d in &r.discrepancies {
            writeln!(
                out,
                "DISCREPANCY {} at {}: shortcut = {}, oracle = {} [{}]",
                r.identity, d.params, d.shortcut, d.oracle, r.citation
            )?;
        }
    }
    if format.is_none() {
        writeln!(
            out,
            "{} identities checked, {} discrepancies",
            report.identities.len(),
            report.discrepancy_count()
        )?;
    }
    Ok(())
}
