//! `aalpha`: evaluate, verify and rank A_α eigenvalue bounds from the shell.
//!
//! Exit codes: 0 success, 1 bound violation, 2 input or I/O error,
//! 3 eigensolver non-convergence.

mod engine;
mod error;
mod grid;
mod output;
mod source;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use aalpha_core::bounds::BoundId;
use aalpha_core::graph6::{write_edge_list, write_graph6};
use aalpha_core::{BoundReport, InvariantSet, Spectrum};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use error::CliError;

#[derive(Parser)]
#[command(
    name = "aalpha",
    version,
    about = "A_alpha spectra and eigenvalue bound verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, spectrum and every bound report for each graph in SOURCE.
    Eval {
        /// graph6 record, file, generator spec (e.g. star:10) or enumerate:N
        source: String,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every bound over corpora and an α grid.
    ///
    /// Report rows go to --out as CSV; the summary goes to stdout (stderr when
    /// CSV rows are streamed to stdout).
    Verify {
        #[arg(required = true)]
        corpus: Vec<String>,
        #[arg(long, default_value = "0:1:0.1")]
        alpha_grid: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank graphs by ascending gap for one bound.
    Tightness {
        corpus: String,
        #[arg(long)]
        bound: BoundId,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 10)]
        top: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print graphs from a generator spec or enumerate:N as graph6 lines.
    Gen {
        spec: String,
        /// Emit edge lists (blank-line separated) instead of graph6.
        #[arg(long)]
        edge_list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match engine::configure_threads().and_then(|()| dispatch(cli.command)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("aalpha: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Eval {
            source,
            alpha,
            format,
            out,
        } => cmd_eval(&source, alpha, format, out),
        Command::Verify {
            corpus,
            alpha_grid,
            tol,
            format,
            out,
        } => cmd_verify(&corpus, &alpha_grid, tol, format, out),
        Command::Tightness {
            corpus,
            bound,
            alpha,
            top,
            format,
            out,
        } => cmd_tightness(&corpus, bound, alpha, top, format, out),
        Command::Gen {
            spec,
            edge_list,
            out,
        } => cmd_gen(&spec, edge_list, out),
    }
}

#[derive(Serialize)]
struct EvalRecord<'a> {
    graph6: &'a str,
    invariants: &'a InvariantSet,
    spectrum: &'a Spectrum,
    reports: &'a [BoundReport],
}

fn cmd_eval(
    source: &str,
    alpha: f64,
    format: Format,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let graphs = source::load(source)?;
    let mut w = output::open(out.as_deref())?;
    let mut records = Vec::new();
    if format == Format::Csv {
        writeln!(w, "{}", output::CSV_HEADER)?;
    }
    let mut first = true;
    engine::run(graphs, &[alpha], |r| {
        if r.analysis.invariants.n > 64 {
            eprintln!(
                "aalpha: warning: exact clique search on n = {}",
                r.analysis.invariants.n
            );
        }
        let inv = &r.analysis.invariants;
        let (spectrum, reports) = &r.runs[0];
        match format {
            Format::Table => {
                if !first {
                    writeln!(w)?;
                }
                output::table(&mut *w, &r.graph6, inv, spectrum, reports)?;
            }
            Format::Csv => {
                for rep in reports {
                    output::csv_row(&mut *w, &r.graph6, inv, alpha, rep)?;
                }
            }
            Format::Json => records.push(
                serde_json::to_value(EvalRecord {
                    graph6: &r.graph6,
                    invariants: inv,
                    spectrum,
                    reports,
                })
                .expect("reports serialize"),
            ),
        }
        first = false;
        Ok(())
    })?;
    if format == Format::Json {
        serde_json::to_writer_pretty(&mut *w, &records).expect("json values serialize");
        writeln!(w)?;
    }
    w.flush()?;
    Ok(0)
}

#[derive(Clone, Copy, Default, Serialize)]
struct Counts {
    checked: u64,
    inapplicable: u64,
    equalities: u64,
    violations: u64,
}

impl Counts {
    fn add(&mut self, r: &BoundReport, tol: f64) {
        if r.is_applicable() {
            self.checked += 1;
        } else {
            self.inapplicable += 1;
        }
        self.equalities += u64::from(r.equality());
        self.violations += u64::from(r.is_violation(tol));
    }
}

#[derive(Serialize)]
struct BoundCounts {
    bound_id: BoundId,
    #[serde(flatten)]
    counts: Counts,
}

#[derive(Serialize)]
struct Summary {
    graphs: u64,
    alphas: usize,
    tolerance: f64,
    #[serde(flatten)]
    total: Counts,
    per_bound: Vec<BoundCounts>,
}

fn cmd_verify(
    corpus: &[String],
    alpha_grid: &str,
    tol: f64,
    format: Format,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let alphas = grid::parse_alpha_grid(alpha_grid)?;
    if tol.is_nan() || tol < 0.0 {
        return Err(CliError::Input(format!(
            "tolerance must be non-negative, got {tol}"
        )));
    }
    let graphs = source::load_all(corpus)?;
    let rows_to_stdout = out.is_none() && format == Format::Csv;
    let mut rows = match (&out, rows_to_stdout) {
        (Some(_), _) | (None, true) => Some(output::open(out.as_deref())?),
        (None, false) => None,
    };
    if let Some(w) = rows.as_mut() {
        writeln!(w, "{}", output::CSV_HEADER)?;
    }

    let mut summary = Summary {
        graphs: 0,
        alphas: alphas.len(),
        tolerance: tol,
        total: Counts::default(),
        per_bound: BoundId::ALL
            .iter()
            .map(|&bound_id| BoundCounts {
                bound_id,
                counts: Counts::default(),
            })
            .collect(),
    };
    engine::run(graphs, &alphas, |r| {
        summary.graphs += 1;
        let inv = &r.analysis.invariants;
        for (alpha, (_, reports)) in alphas.iter().zip(&r.runs) {
            for rep in reports {
                summary.total.add(rep, tol);
                let slot = BoundId::ALL
                    .iter()
                    .position(|&b| b == rep.id)
                    .expect("known id");
                summary.per_bound[slot].counts.add(rep, tol);
                if let Some(w) = rows.as_mut() {
                    output::csv_row(&mut **w, &r.graph6, inv, *alpha, rep)?;
                }
            }
        }
        Ok(())
    })?;
    if let Some(mut w) = rows {
        w.flush()?;
    }

    let mut text = Vec::new();
    write_summary(&mut text, &summary, format)?;
    if rows_to_stdout {
        std::io::stderr().write_all(&text)?;
    } else {
        std::io::stdout().write_all(&text)?;
    }
    Ok(if summary.total.violations > 0 { 1 } else { 0 })
}

fn write_summary(w: &mut dyn Write, s: &Summary, format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, s).expect("summary serializes");
            writeln!(w)
        }
        Format::Table | Format::Csv => {
            writeln!(
                w,
                "graphs={} alphas={} tol={} checked={} inapplicable={} equalities={} violations={}",
                s.graphs,
                s.alphas,
                output::num(s.tolerance),
                s.total.checked,
                s.total.inapplicable,
                s.total.equalities,
                s.total.violations
            )?;
            writeln!(
                w,
                "{:<8} {:>10} {:>12} {:>10} {:>10}",
                "bound", "checked", "inapplicable", "equalities", "violations"
            )?;
            for b in &s.per_bound {
                writeln!(
                    w,
                    "{:<8} {:>10} {:>12} {:>10} {:>10}",
                    b.bound_id.as_str(),
                    b.counts.checked,
                    b.counts.inapplicable,
                    b.counts.equalities,
                    b.counts.violations
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Ranked {
    graph6: String,
    n: usize,
    m: usize,
    bound_value: f64,
    observed: f64,
    gap: f64,
    equality: bool,
}

fn cmd_tightness(
    corpus: &str,
    bound: BoundId,
    alpha: f64,
    top: usize,
    format: Format,
    out: Option<PathBuf>,
) -> Result<u8, CliError> {
    let graphs = source::load(corpus)?;
    let mut ranked = Vec::new();
    engine::run(graphs, &[alpha], |r| {
        let rep = r.runs[0]
            .1
            .iter()
            .find(|rep| rep.id == bound)
            .expect("every bound is reported");
        if let (Some(bound_value), Some(observed), Some(gap)) =
            (rep.bound_value(), rep.observed(), rep.gap())
        {
            ranked.push(Ranked {
                graph6: r.graph6,
                n: r.analysis.invariants.n,
                m: r.analysis.invariants.m,
                bound_value,
                observed,
                gap,
                equality: rep.equality(),
            });
        }
        Ok(())
    })?;
    ranked.sort_by(|a, b| a.gap.total_cmp(&b.gap));
    ranked.truncate(top);

    let mut w = output::open(out.as_deref())?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *w, &ranked).expect("ranking serializes");
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(
                w,
                "rank,graph6,n,m,bound_id,alpha,bound_value,observed,gap,equality"
            )?;
            for (i, r) in ranked.iter().enumerate() {
                writeln!(
                    w,
                    "{},{},{},{},{bound},{},{},{},{},{}",
                    i + 1,
                    r.graph6,
                    r.n,
                    r.m,
                    output::num(alpha),
                    output::num(r.bound_value),
                    output::num(r.observed),
                    output::num(r.gap),
                    r.equality
                )?;
            }
        }
        Format::Table => {
            writeln!(w, "{bound} at alpha={alpha}")?;
            writeln!(w, "{:>5}  {:<20} {:>14}  equality", "rank", "graph6", "gap")?;
            for (i, r) in ranked.iter().enumerate() {
                writeln!(
                    w,
                    "{:>5}  {:<20} {:>14.6e}  {}",
                    i + 1,
                    r.graph6,
                    r.gap,
                    if r.equality { "yes" } else { "no" }
                )?;
            }
        }
    }
    w.flush()?;
    Ok(0)
}

fn cmd_gen(spec: &str, edge_list: bool, out: Option<PathBuf>) -> Result<u8, CliError> {
    let graphs = source::load(spec)?;
    let mut w = output::open(out.as_deref())?;
    for (i, g) in graphs.enumerate() {
        if edge_list {
            if i > 0 {
                writeln!(w)?;
            }
            write!(w, "{}", write_edge_list(&g))?;
        } else {
            writeln!(w, "{}", write_graph6(&g)?)?;
        }
    }
    w.flush()?;
    Ok(0)
}
