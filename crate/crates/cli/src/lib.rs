//! Command-line front end: signature sets, table reproduction, vanishing
//! reports and the flag-bundle Hodge calculator.
//!
//! Exit codes: 0 success, 2 bad arguments or input, 3 a closed form
//! disagrees with the enumerator, 4 dimension mismatch. JSON output carries
//! the same code in its `"status"` field.

mod render;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parasig::grid::ParamGrid;
use parasig::signatures::attainable_with_provenance;
use parasig::weyl::WeylWord;
use parasig::{
    attainable_signatures, build_root_datum_with, compare_cell, hodge_y, picard_reports, CartanType, CellReport,
    CellStatus, Error, HodgeDiamond, Limits, PairDescriptor, RootDatum, VanishingAnalyzer,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use render::spaced;
pub use render::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_DIMENSION: i32 = 4;

const PARABOLIC_HELP: &str = "\
Simple roots of H, as comma-separated 1-based Bourbaki labels of compact simple roots.
The noncompact simple root is psi_m (AIII), psi_1 (BDI, EIII), psi_n (CI, DIII), psi_7 (EVII).";

#[derive(Debug, Parser)]
#[command(
    name = "parasig",
    version,
    about = "Signatures of theta-stable parabolics and their Hodge consequences"
)]
pub struct Cli {
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Attainable (R+, R-) values for one Hermitian symmetric pair.
    Signatures(SignaturesArgs),
    /// Reproduce the R- tables over a parameter grid.
    Tables(TablesArgs),
    /// H^{0,q}, H^{1,q} vanishing and H^{1,1} structure.
    Vanishing(VanishingArgs),
    /// Hodge diamond of the flag bundle Y over X.
    HodgeY(HodgeYArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// AIII, BDI-even, BDI-odd, CI, DIII, EIII or EVII.
    #[arg(long = "type", value_parser = parse_type)]
    pub ty: CartanType,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse::<CartanType>().map_err(|e| e.to_string())
}

impl PairArgs {
    fn datum(&self) -> Result<RootDatum, Error> {
        let limits = Limits::from_env();
        let desc = PairDescriptor::from_parts(self.ty, self.m, self.n)?;
        desc.validate_with(&limits)?;
        build_root_datum_with(desc, &limits)
    }
}

#[derive(Debug, Args)]
pub struct SignaturesArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// R+ values to report.
    #[arg(long, value_delimiter = ',', default_values_t = [0usize, 1])]
    pub rplus: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Compare against the closed forms.
    #[arg(long)]
    pub check: bool,
    /// List a face point attaining each signature.
    #[arg(long)]
    pub provenance: bool,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// 2: exceptional pairs; 3: R+ = 0; 4: R+ = 1.
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
    pub which: u8,
    /// Grid bound: AIII m+n <= P, BDI-even m <= P-2, BDI-odd m <= P-3, CI n <= P-3, DIII n <= P-2.
    #[arg(long, default_value_t = parasig::grid::DEFAULT_MAX_PARAMS)]
    pub max_params: usize,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VanishingArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Largest q reported (default: dim X + 1).
    #[arg(long)]
    pub qmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HodgeYArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, default_value = "", help = PARABOLIC_HELP)]
    pub parabolic: String,
    /// Hodge diamond of X as JSON: {"dim": d, "entries": [{"p", "q", "value": int | "unknown"}]}.
    #[arg(long)]
    pub x_hodge: PathBuf,
    /// Take H^{0,2}(X) = 0 as a hypothesis instead of deriving it.
    #[arg(long)]
    pub assume_h02_zero: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimensionMismatch { .. } => EXIT_DIMENSION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let format = match &cli.command {
        Command::Signatures(a) => a.format,
        Command::Tables(a) => a.format,
        Command::Vanishing(a) => a.format,
        Command::HodgeY(a) => a.format,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build() {
        Ok(pool) => pool,
        Err(e) => return failure_outcome(format, usage(e.to_string())),
    };
    let result = pool.install(|| match &cli.command {
        Command::Signatures(a) => cmd_signatures(a),
        Command::Tables(a) => cmd_tables(a),
        Command::Vanishing(a) => cmd_vanishing(a),
        Command::HodgeY(a) => cmd_hodge_y(a),
    });
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => failure_outcome(format, f),
    }
}

fn failure_outcome(format: Format, f: Failure) -> Outcome {
    match format {
        Format::Json => Outcome {
            code: f.code,
            stdout: pretty(&json!({ "status": f.code, "error": f.message })),
            stderr: String::new(),
        },
        _ => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn status_code(reports: &[CellReport]) -> i32 {
    if reports.iter().any(|r| r.status == CellStatus::Disagree) {
        EXIT_DISAGREE
    } else {
        EXIT_OK
    }
}

fn closed_form_cell(r: &CellReport) -> String {
    match r.closed_forms.as_slice() {
        [] => "-".into(),
        [one] => spaced(&one.values),
        many => many
            .iter()
            .map(|v| format!("{}: {}", v.formula, spaced(&v.values)))
            .collect::<Vec<_>>()
            .join("; "),
    }
}

fn formula_cell(r: &CellReport) -> String {
    if r.closed_forms.is_empty() {
        return "-".into();
    }
    r.closed_forms.iter().map(|v| v.formula).collect::<Vec<_>>().join("; ")
}

fn report_json(r: &CellReport) -> Value {
    json!({
        "descriptor": r.descriptor,
        "r_plus": r.r_plus,
        "enumerated": r.enumerated,
        "closed_forms": r.closed_forms.iter().map(|v| json!({
            "formula": v.formula,
            "values": v.values,
        })).collect::<Vec<_>>(),
        "matched": r.matched,
        "status": r.status.label(),
        "note": r.note,
    })
}

fn word_label(w: &WeylWord) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.letters()
        .iter()
        .map(|i| format!("s{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn labels(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_signatures(args: &SignaturesArgs) -> Result<(i32, String), Failure> {
    let datum = args.pair.datum()?;
    let desc = datum.descriptor();
    let mut rplus: Vec<usize> = args.rplus.clone();
    rplus.sort_unstable();
    rplus.dedup();
    let set = attainable_signatures(&datum, Some(&rplus))?;
    let reports: Vec<CellReport> = if args.check {
        rplus.iter().map(|&rp| compare_cell(desc, rp, &set.row(rp))).collect()
    } else {
        Vec::new()
    };
    let code = status_code(&reports);
    let provenance = if args.provenance {
        let words = parasig::signatures::FaceEnumeration::new(&datum)?;
        let prov = attainable_with_provenance(&datum)?;
        prov.into_iter()
            .filter(|(s, _)| rplus.contains(&s.r_plus))
            .map(|(s, f)| {
                (
                    s,
                    labels(&f.subset),
                    word_label(&words.coset_words()[f.coset]),
                    f.point.to_string(),
                )
            })
            .collect()
    } else {
        Vec::new()
    };

    let out = match args.format {
        Format::Json => {
            let rows: Vec<Value> = rplus
                .iter()
                .enumerate()
                .map(|(i, &rp)| {
                    let mut row = json!({ "r_plus": rp, "r_minus": set.r_minus(rp) });
                    if args.check {
                        row["check"] = report_json(&reports[i]);
                    }
                    row
                })
                .collect();
            let mut v = json!({
                "status": code,
                "descriptor": desc.to_string(),
                "group": desc.group_name(),
                "dim": desc.complex_dim(),
                "rows": rows,
            });
            if args.provenance {
                v["provenance"] = Value::Array(
                    provenance
                        .iter()
                        .map(|(s, b, w, x)| {
                            json!({ "r_plus": s.r_plus, "r_minus": s.r_minus, "subset": b, "coset_word": w, "point": x })
                        })
                        .collect(),
                );
            }
            pretty(&v)
        }
        fmt => {
            let mut table = if args.check {
                Table::new(["R+", "R-", "Closed form", "Formula", "Status", "Note"])
            } else {
                Table::new(["R+", "R-"])
            };
            for (i, &rp) in rplus.iter().enumerate() {
                let values = spaced(&set.row(rp));
                if args.check {
                    let r = &reports[i];
                    table.push([
                        rp.to_string(),
                        values,
                        closed_form_cell(r),
                        formula_cell(r),
                        r.status.label().to_string(),
                        r.note.clone(),
                    ]);
                } else {
                    table.push([rp.to_string(), values]);
                }
            }
            let mut prov = Table::new(["R+", "R-", "Subset", "Coset word", "Point"]);
            for (s, b, w, x) in &provenance {
                prov.push([
                    s.r_plus.to_string(),
                    s.r_minus.to_string(),
                    b.clone(),
                    w.clone(),
                    x.clone(),
                ]);
            }
            if fmt == Format::Csv {
                let mut s = table.to_csv();
                if args.provenance {
                    s.push('\n');
                    s.push_str(&prov.to_csv());
                }
                s
            } else {
                let mut s = format!(
                    "## {} ({}), dim X = {}\n\n",
                    desc,
                    desc.group_name(),
                    desc.complex_dim()
                );
                s.push_str(&table.to_markdown());
                if args.provenance {
                    s.push_str("\n### Witnesses\n\n");
                    s.push_str(&prov.to_markdown());
                }
                s
            }
        }
    };
    Ok((code, out))
}

fn cell_reports(descs: &[PairDescriptor], r_plus: &[usize]) -> Result<Vec<Vec<CellReport>>, Failure> {
    let rows: Result<Vec<Vec<CellReport>>, Error> = descs
        .par_iter()
        .map(|&d| {
            let datum = build_root_datum_with(d, &Limits::from_env())?;
            let set = attainable_signatures(&datum, Some(r_plus))?;
            Ok(r_plus.iter().map(|&rp| compare_cell(d, rp, &set.row(rp))).collect())
        })
        .collect();
    Ok(rows?)
}

fn cmd_tables(args: &TablesArgs) -> Result<(i32, String), Failure> {
    let grid = ParamGrid::new(args.max_params);
    let (descs, r_plus): (Vec<PairDescriptor>, Vec<usize>) = match args.which {
        2 => (parasig::grid::exceptional(), vec![0, 1]),
        3 => (grid.rplus_zero_rows(), vec![0]),
        _ => (grid.rplus_one_rows(), vec![1]),
    };
    let rows = cell_reports(&descs, &r_plus)?;
    let all: Vec<CellReport> = rows.iter().flatten().cloned().collect();
    let code = status_code(&all);

    let out = match args.format {
        Format::Json => {
            let rows: Vec<Value> = descs
                .iter()
                .zip(&rows)
                .map(|(d, cells)| {
                    json!({
                        "descriptor": d.to_string(),
                        "group": d.group_name(),
                        "compact": d.compact_name(),
                        "dim": d.complex_dim(),
                        "cells": cells.iter().map(report_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pretty(&json!({
                "status": code,
                "table": args.which,
                "max_params": args.max_params,
                "rows": rows,
            }))
        }
        fmt => {
            let mut table = if args.which == 2 {
                Table::new(["Type", "G", "K", "R+=0", "Status", "R+=1", "Status", "Note"])
            } else {
                Table::new([
                    "Type",
                    "G",
                    "K",
                    "R- (enumerated)",
                    "Closed form",
                    "Formula",
                    "Status",
                    "Note",
                ])
            };
            for (d, cells) in descs.iter().zip(&rows) {
                if args.which == 2 {
                    let note: Vec<&str> = cells
                        .iter()
                        .map(|c| c.note.as_str())
                        .filter(|n| !n.is_empty())
                        .collect();
                    table.push([
                        d.to_string(),
                        d.group_name(),
                        d.compact_name(),
                        spaced(&cells[0].enumerated),
                        cells[0].status.label().into(),
                        spaced(&cells[1].enumerated),
                        cells[1].status.label().into(),
                        note.join("; "),
                    ]);
                } else {
                    let c = &cells[0];
                    table.push([
                        d.to_string(),
                        d.group_name(),
                        d.compact_name(),
                        spaced(&c.enumerated),
                        closed_form_cell(c),
                        formula_cell(c),
                        c.status.label().into(),
                        c.note.clone(),
                    ]);
                }
            }
            match fmt {
                Format::Csv => table.to_csv(),
                _ => {
                    let title = match args.which {
                        2 => "R- values for the exceptional pairs, x != 0".to_string(),
                        3 => format!("R- values with R+ = 0, x != 0 (grid bound {})", args.max_params),
                        _ => format!("R- values with R+ = 1, x != 0 (grid bound {})", args.max_params),
                    };
                    format!("## {title}\n\n{}", table.to_markdown())
                }
            }
        }
    };
    Ok((code, out))
}

fn cmd_vanishing(args: &VanishingArgs) -> Result<(i32, String), Failure> {
    let datum = args.pair.datum()?;
    let desc = datum.descriptor();
    let analyzer = VanishingAnalyzer::from_datum(&datum)?;
    let qmax = args.qmax.unwrap_or(desc.complex_dim() + 1);
    if qmax < 1 {
        return Err(usage("--qmax must be at least 1"));
    }
    let mut rows = Vec::new();
    for q in 1..=qmax {
        let h0 = analyzer.h0q(q)?;
        let h1 = if q >= 2 { Some(analyzer.h1q(q)?) } else { None };
        rows.push((q, h0, h1));
    }
    let h11 = analyzer.h11();
    let real_rank = desc.real_rank();

    let out = match args.format {
        Format::Json => pretty(&json!({
            "status": EXIT_OK,
            "descriptor": desc.to_string(),
            "group": desc.group_name(),
            "dim": desc.complex_dim(),
            "real_rank": real_rank,
            "rplus_zero": analyzer.rplus_zero(),
            "rplus_one": analyzer.rplus_one(),
            "rows": rows.iter().map(|(q, h0, h1)| json!({
                "q": q,
                "h0q": h0,
                "h1q": h1,
            })).collect::<Vec<_>>(),
            "h11": h11,
        })),
        fmt => {
            let mut table = Table::new(["q", "H^{0,q}", "Reason", "H^{1,q}", "Reason"]);
            for (q, h0, h1) in &rows {
                let (v1, r1) = match h1 {
                    Some(v) => (v.value.label().to_string(), v.reason.clone()),
                    None => ("-".into(), String::new()),
                };
                table.push([q.to_string(), h0.value.label().to_string(), h0.reason.clone(), v1, r1]);
            }
            table.push([
                "(1,1)".to_string(),
                "-".into(),
                String::new(),
                h11.value.label().to_string(),
                h11.reason.clone(),
            ]);
            match fmt {
                Format::Csv => table.to_csv(),
                _ => format!(
                    "## {} ({}), dim X = {}, real rank {}\n\nR+ = 0: {}\nR+ = 1: {}\n\n{}\nH^{{1,1}}(X): {}\n",
                    desc,
                    desc.group_name(),
                    desc.complex_dim(),
                    real_rank,
                    spaced(analyzer.rplus_zero()),
                    spaced(analyzer.rplus_one()),
                    table.to_markdown(),
                    if h11.value == parasig::Verdict::IsomorphicToC {
                        "C"
                    } else {
                        "unconstrained"
                    },
                ),
            }
        }
    };
    Ok((EXIT_OK, out))
}

/// Parses 1-based labels like `"1,3"` into 0-based simple-root indices.
pub fn parse_parabolic(text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let label: usize = part.parse().map_err(|_| format!("invalid parabolic label {part:?}"))?;
        if label == 0 {
            return Err("parabolic labels are 1-based".into());
        }
        out.push(label - 1);
    }
    Ok(out)
}

fn cmd_hodge_y(args: &HodgeYArgs) -> Result<(i32, String), Failure> {
    let datum = args.pair.datum()?;
    let desc = datum.descriptor();
    let parabolic = parse_parabolic(&args.parabolic).map_err(usage)?;
    let text =
        fs::read_to_string(&args.x_hodge).map_err(|e| usage(format!("cannot read {}: {e}", args.x_hodge.display())))?;
    let x = HodgeDiamond::from_json(&text)?;
    let y = hodge_y(&datum, &x, &parabolic)?;
    let picard = picard_reports(desc, &parabolic, args.assume_h02_zero)?;
    let fiber_total: u64 = y.fiber_betti.iter().sum();
    let chi_x = x.euler_characteristic();
    let chi_y = y.diamond.euler_characteristic();
    let multiplicative = match (chi_x, chi_y) {
        (Some(a), Some(b)) => Some(a * fiber_total as i64 == b),
        _ => None,
    };
    let mut sorted = parabolic.clone();
    sorted.sort_unstable();
    let parabolic_labels: Vec<usize> = sorted.iter().map(|i| i + 1).collect();

    let out = match args.format {
        Format::Json => pretty(&json!({
            "status": EXIT_OK,
            "descriptor": desc.to_string(),
            "parabolic": parabolic_labels,
            "fiber_betti": y.fiber_betti,
            "diamond": y.diamond.to_value(),
            "picard": picard,
            "euler": {
                "x": chi_x,
                "y": chi_y,
                "fiber": fiber_total,
                "multiplicative": multiplicative,
            },
        })),
        Format::Csv => {
            let mut table = Table::new(["p", "q", "value"]);
            let d = y.diamond.dim() as i64;
            for p in 0..=d {
                for q in 0..=d {
                    table.push([p.to_string(), q.to_string(), y.diamond.get(p, q).to_string()]);
                }
            }
            table.to_csv()
        }
        Format::Markdown => {
            let d = y.diamond.dim() as i64;
            let mut table = Table::new(std::iter::once("p \\ q".to_string()).chain((0..=d).map(|q| q.to_string())));
            for p in 0..=d {
                table.push(std::iter::once(p.to_string()).chain((0..=d).map(|q| y.diamond.get(p, q).to_string())));
            }
            let betti: Vec<String> = y.fiber_betti.iter().map(u64::to_string).collect();
            let chi = |c: Option<i64>| c.map_or("unknown".to_string(), |v| v.to_string());
            let rank = picard.rank_free_part.map_or("unknown".to_string(), |v| v.to_string());
            format!(
                "## Y over {} with H given by {{{}}}\n\nFiber Betti numbers b_0, b_2, ...: {}\n\n{}\n\
                 rank Pic(X) mod torsion: {}\ntorsion: {}\nc1 isomorphism: {}\n{}\nreason: {}\n\n\
                 chi(X) = {}, chi(Y) = {}, fiber total = {}\n",
                desc,
                labels(&sorted),
                betti.join(" "),
                table.to_markdown(),
                rank,
                picard.torsion.as_deref().unwrap_or("unknown"),
                picard.c1_isomorphism,
                picard
                    .y_gamma_split
                    .as_deref()
                    .unwrap_or("Pic(Y) split not established"),
                picard.reason,
                chi(chi_x),
                chi(chi_y),
                fiber_total,
            )
        }
    };
    Ok((EXIT_OK, out))
}
