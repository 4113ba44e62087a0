//! Command-line front end: `table`, `bounds`, `verify`, `encode`.
//!
//! [`run`] takes the argument list and output streams and returns the exit
//! code, so the binary is a thin wrapper and tests can drive it in-process.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{
    concat_line, concat_preset, figure, sample_curve, singleton_like_max_dim, write_curves_csv,
    BoundId, BoundSpec, Grid, Preset,
};
use crate::codes::descriptor::CodeDescriptor;
use crate::codes::explicit_family;
use crate::error::{Error, Result};
use crate::field::{split_top_level, FieldCtx};
use crate::metrics::{min_distance_exhaustive_with, BlockProfile, LinearCode, OracleConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "sumrank", version, about = "Concatenated sum-rank codes: tables, bounds, verification, encoding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce the dimension tables for block lengths 15 (1) and 31 (2).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sample a rate/distance bound (or a figure preset) as CSV.
    Bounds(BoundsArgs),
    /// Build a code and compute its exact minimum distance by enumeration.
    Verify {
        descriptor: String,
        #[arg(long, default_value_t = 24)]
        cap_bits: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Encode a comma-separated message with a code.
    Encode { descriptor: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(clap::Args, Debug)]
struct BoundsArgs {
    /// Figure preset 1..=8.
    #[arg(long, conflicts_with = "bound")]
    figure: Option<u32>,
    /// With --figure: print the parameter choices instead of data.
    #[arg(long, requires = "figure")]
    explain: bool,
    /// singleton_like, gv_exact, gv_asymptotic, tvz_like_sr or concat_line.
    #[arg(long)]
    bound: Option<String>,
    /// Inner code for concat_line: d2, lrs_half or lrs_max.
    #[arg(long)]
    preset: Option<String>,
    /// Field order for tvz_like_sr and concat_line.
    #[arg(long)]
    p: Option<u64>,
    /// Field order for the GV-like bounds.
    #[arg(long)]
    q: Option<u64>,
    /// Rows per block.
    #[arg(long)]
    n: Option<usize>,
    /// Columns per block (block size for square-block bounds).
    #[arg(long)]
    m: Option<usize>,
    /// Number of blocks.
    #[arg(long)]
    t: Option<usize>,
    /// Half the inner dimension for a raw concat_line.
    #[arg(long)]
    r: Option<usize>,
    /// Inner sum-rank distance for a raw concat_line.
    #[arg(long)]
    d: Option<usize>,
    /// start:stop:step, decimals or fractions.
    #[arg(long)]
    grid: Option<String>,
    /// Do not clamp rates to [0, 1].
    #[arg(long)]
    raw: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Table { which, format } => cmd_table(which, format, out),
        Command::Bounds(args) => cmd_bounds(&args, out),
        Command::Verify {
            descriptor,
            cap_bits,
            threads,
        } => cmd_verify(&descriptor, cap_bits, threads, out),
        Command::Encode { descriptor, message } => cmd_encode(&descriptor, &message, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TooLarge { .. } => EXIT_INFEASIBLE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

/// One row of a dimension table. Dimensions are over `F_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub d_sr: usize,
    pub our_dim: usize,
    pub comparison_dim: Option<usize>,
    pub singleton_dim: usize,
}

/// Literature values for the comparison column, halves of the dimension
/// (the tables print them as `2 * value`), indexed from `d_sr = 4`.
const TABLE1_COMPARISON: [Option<usize>; 12] = [
    Some(20),
    Some(18),
    Some(16),
    Some(14),
    Some(10),
    Some(8),
    Some(8),
    Some(6),
    Some(4),
    None,
    Some(2),
    None,
];

const TABLE2_COMPARISON: [usize; 27] = [
    57, 53, 52, 49, 47, 44, 42, 40, 39, 36, 35, 32, 31, 29, 28, 25, 24, 22, 21, 20, 19, 18, 17, 15, 14, 13, 13,
];

pub struct TableSpec {
    pub q: u64,
    pub n: usize,
    pub m: usize,
    pub d_range: std::ops::RangeInclusive<usize>,
    pub comparison_label: &'static str,
}

pub fn table_spec(which: u8) -> Result<TableSpec> {
    match which {
        1 => Ok(TableSpec {
            q: 2,
            n: 15,
            m: 2,
            d_range: 4..=15,
            comparison_label: "MP21 Table IV (published)",
        }),
        2 => Ok(TableSpec {
            q: 3,
            n: 31,
            m: 2,
            d_range: 4..=30,
            comparison_label: "Chen Table VII (published)",
        }),
        _ => Err(Error::Parse(format!("no table {which} (1 or 2)"))),
    }
}

/// Builds every code of the table and reads its dimension off the generator.
pub fn table_rows(which: u8) -> Result<Vec<TableRow>> {
    let spec = table_spec(which)?;
    let q = FieldCtx::prime(spec.q)?;
    let profile = BlockProfile::uniform(spec.m, spec.m, spec.n)?;
    spec.d_range
        .clone()
        .enumerate()
        .map(|(i, d1)| {
            let code = explicit_family(&q, spec.n, spec.m, 1, d1)?;
            let comparison_dim = match which {
                1 => TABLE1_COMPARISON[i].map(|h| 2 * h),
                _ => Some(2 * TABLE2_COMPARISON[i]),
            };
            let d_sr = code.d_design().unwrap_or(d1);
            Ok(TableRow {
                d_sr,
                our_dim: code.k(),
                comparison_dim,
                singleton_dim: singleton_like_max_dim(&profile, d_sr)?,
            })
        })
        .collect()
}

fn as_multiple(v: usize, m: usize) -> String {
    if v.is_multiple_of(m) {
        format!("{m}*{}", v / m)
    } else {
        v.to_string()
    }
}

fn cmd_table<W: Write>(which: u8, format: Format, out: &mut W) -> Result<i32> {
    let spec = table_spec(which)?;
    let rows = table_rows(which)?;
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            let map = |e: csv::Error| Error::Parse(format!("csv output failed: {e}"));
            w.write_record(["d_sr", "dimension", "comparison", "singleton"]).map_err(map)?;
            for r in &rows {
                w.write_record([
                    r.d_sr.to_string(),
                    r.our_dim.to_string(),
                    r.comparison_dim.map(|c| c.to_string()).unwrap_or_default(),
                    r.singleton_dim.to_string(),
                ])
                .map_err(map)?;
            }
            w.flush().map_err(io_err)?;
        }
        Format::Text => {
            writeln!(
                out,
                "Sum-rank codes with block length {}, {m}x{m} blocks over F_{}",
                spec.n,
                spec.q,
                m = spec.m
            )
            .map_err(io_err)?;
            writeln!(out, "dimensions over F_{}; * marks rows exceeding the comparison", spec.q).map_err(io_err)?;
            let label = spec.comparison_label;
            writeln!(out, "{:>5}  {:>10}  {:>w$}  {:>10}", "d_sr", "dimension", label, "Singleton", w = label.len())
                .map_err(io_err)?;
            for r in &rows {
                let better = r.comparison_dim.is_none_or(|c| r.our_dim > c);
                let comparison = r
                    .comparison_dim
                    .map(|c| as_multiple(c, spec.m))
                    .unwrap_or_else(|| "none".into());
                writeln!(
                    out,
                    "{:>5}  {:>10}  {:>w$}  {:>10}{}",
                    r.d_sr,
                    as_multiple(r.our_dim, spec.m),
                    comparison,
                    as_multiple(r.singleton_dim, spec.m),
                    if better { "  *" } else { "" },
                    w = label.len()
                )
                .map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn need<T: Copy>(v: Option<T>, name: &str, bound: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("{bound} needs --{name}")))
}

fn bound_spec(args: &BoundsArgs, id: BoundId) -> Result<BoundSpec> {
    let b = id.as_str();
    Ok(match id {
        BoundId::SingletonLike => BoundSpec::SingletonLike {
            n: need(args.n, "n", b)?,
            m: need(args.m, "m", b)?,
            t: need(args.t, "t", b)?,
        },
        BoundId::GvExact => BoundSpec::GvExact {
            q: need(args.q, "q", b)?,
            n: need(args.n, "n", b)?,
            m: need(args.m, "m", b)?,
            t: need(args.t, "t", b)?,
        },
        BoundId::GvAsymptotic => BoundSpec::GvAsymptotic {
            q: need(args.q, "q", b)?,
            m: need(args.m, "m", b)?,
        },
        BoundId::TvzLikeSr => BoundSpec::TvzLikeSr {
            p: need(args.p, "p", b)?,
            m: need(args.m, "m", b)?,
        },
        BoundId::ConcatLine => {
            let (p, m, t) = (need(args.p, "p", b)?, need(args.m, "m", b)?, need(args.t, "t", b)?);
            match &args.preset {
                Some(name) => BoundSpec::Concat(concat_preset(name.parse::<Preset>()?, p, m, t)?),
                None => {
                    let r = need(args.r, "r (or --preset)", b)?;
                    let d = need(args.d, "d", b)?;
                    BoundSpec::Concat(concat_line(p, m, t, 2 * r, d)?)
                }
            }
        }
    })
}

fn cmd_bounds<W: Write>(args: &BoundsArgs, out: &mut W) -> Result<i32> {
    let grid = match &args.grid {
        Some(g) => g.parse::<Grid>()?,
        None => Grid::default(),
    };
    let curves = if let Some(n) = args.figure {
        let fig = figure(n)?;
        if args.explain {
            writeln!(out, "figure {}: {}", fig.number, fig.title).map_err(io_err)?;
            writeln!(out, "{}", fig.explain).map_err(io_err)?;
            return Ok(EXIT_OK);
        }
        fig.sample(&grid)?
    } else {
        let id: BoundId = args
            .bound
            .as_deref()
            .ok_or_else(|| Error::Parse("bounds needs --figure or --bound".into()))?
            .parse()?;
        vec![sample_curve(&bound_spec(args, id)?, &grid)?]
    };
    write_curves_csv(&curves, !args.raw, out)?;
    Ok(EXIT_OK)
}

fn cmd_verify<W: Write>(descriptor: &str, cap_bits: u32, threads: usize, out: &mut W) -> Result<i32> {
    let desc: CodeDescriptor = descriptor.parse()?;
    let code = desc.build()?;
    let cfg = OracleConfig {
        cap_bits,
        threads: threads.max(1),
    };
    let exact = min_distance_exhaustive_with(&code, &cfg)?;
    let designed = code.d_design();
    let pass = designed.is_none_or(|d| exact >= d);
    writeln!(out, "code: {desc}").map_err(io_err)?;
    writeln!(out, "field: {}", code.field()).map_err(io_err)?;
    writeln!(out, "profile: {}", code.profile().describe()).map_err(io_err)?;
    writeln!(out, "dimension: {}", code.dimension()).map_err(io_err)?;
    match designed {
        Some(d) => writeln!(out, "designed distance: {d}"),
        None => writeln!(out, "designed distance: none"),
    }
    .map_err(io_err)?;
    writeln!(out, "exact distance: {exact}").map_err(io_err)?;
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).map_err(io_err)?;
    Ok(if pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_encode<W: Write>(descriptor: &str, message: &str, out: &mut W) -> Result<i32> {
    let code = descriptor.parse::<CodeDescriptor>()?.build()?;
    let ctx = code.field().clone();
    let msg = if message.trim().is_empty() {
        Vec::new()
    } else {
        split_top_level(message, ',')?
            .into_iter()
            .map(|s| ctx.parse_elem(s))
            .collect::<Result<Vec<_>>>()?
    };
    for block in code.encode_blocks(&msg)? {
        writeln!(out, "{block}").map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["sumrank"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_rows_match_examples() {
        let t1 = table_rows(1).unwrap();
        let row12 = t1.iter().find(|r| r.d_sr == 12).unwrap();
        assert_eq!(*row12, TableRow { d_sr: 12, our_dim: 16, comparison_dim: Some(8), singleton_dim: 38 });
        let row15 = t1.iter().find(|r| r.d_sr == 15).unwrap();
        assert_eq!((row15.our_dim, row15.comparison_dim, row15.singleton_dim), (4, None, 32));

        let t2 = table_rows(2).unwrap();
        let row9 = t2.iter().find(|r| r.d_sr == 9).unwrap();
        assert_eq!((row9.our_dim, row9.comparison_dim, row9.singleton_dim), (92, Some(88), 108));
        for r in t1.iter().chain(&t2) {
            assert!(r.our_dim <= r.singleton_dim);
        }
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["table", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bounds"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bounds", "--bound", "gv_exact", "--q", "2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = run_str(&["verify", "sumzero:2:2:3"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("dimension: 8") && out.contains("exact distance: 2") && out.ends_with("PASS\n"));
        let (code, _, err) = run_str(&["verify", "rs:2^4:15:12", "--cap-bits", "20"]);
        assert_eq!(code, EXIT_INFEASIBLE);
        assert!(err.contains("cap"));
    }

    #[test]
    fn explain_and_empty_grid() {
        let (code, out, _) = run_str(&["bounds", "--figure", "2", "--explain"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("r=6"));
        let (code, out, _) = run_str(&["bounds", "--figure", "1", "--grid", "0.5:0.1:0.1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "delta,rate,bound_id\n");
    }
}
