use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use aalpha_core::{BoundReport, InvariantSet, Outcome, Spectrum};

use crate::error::CliError;

pub const CSV_HEADER: &str =
    "graph6,n,m,alpha,bound_id,applicable,bound_value,observed,gap,equality";

pub fn open(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| CliError::io(p, e))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Shortest round-trip form, switching to exponent notation for tiny or huge
/// magnitudes.
pub fn num(x: f64) -> String {
    if x != 0.0 && x.is_finite() && !(1e-4..1e15).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn csv_row(
    w: &mut dyn Write,
    graph6: &str,
    inv: &InvariantSet,
    alpha: f64,
    r: &BoundReport,
) -> io::Result<()> {
    writeln!(
        w,
        "{graph6},{},{},{},{},{},{},{},{},{}",
        inv.n,
        inv.m,
        num(alpha),
        r.id,
        r.is_applicable(),
        opt(r.bound_value()),
        opt(r.observed()),
        opt(r.gap()),
        r.equality()
    )
}

pub fn table(
    w: &mut dyn Write,
    graph6: &str,
    inv: &InvariantSet,
    s: &Spectrum,
    reports: &[BoundReport],
) -> io::Result<()> {
    writeln!(
        w,
        "graph {graph6}  n={} m={} alpha={}",
        inv.n, inv.m, s.alpha
    )?;
    let diameter = inv.diameter.map_or("inf".to_string(), |d| d.to_string());
    writeln!(
        w,
        "  max_degree={} second_max_degree={} d2={} min_degree={} mean_degree={}",
        inv.max_degree, inv.second_max_degree, inv.second_degree, inv.min_degree, inv.mean_degree
    )?;
    writeln!(
        w,
        "  zagreb1={} zagreb2={} clique_number={} diameter={diameter}",
        inv.zagreb1, inv.zagreb2, inv.clique_number
    )?;
    writeln!(
        w,
        "  connected={} bipartite={} irregular={}",
        inv.connected, inv.bipartite, inv.irregular
    )?;
    let eigenvalues: Vec<String> = s.eigenvalues.iter().map(|x| format!("{x:.10}")).collect();
    writeln!(
        w,
        "  spectrum [{}]  residual={:.3e}",
        eigenvalues.join(", "),
        s.residual
    )?;
    writeln!(
        w,
        "  {:<8} {:<15} {:>18} {:>18} {:>14}  equality",
        "bound", "side", "bound_value", "observed", "gap"
    )?;
    for r in reports {
        let side = serde_json::to_value(r.side)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        match &r.outcome {
            Outcome::Applicable {
                bound_value,
                observed,
                gap,
                equality,
            } => writeln!(
                w,
                "  {:<8} {:<15} {:>18.10} {:>18.10} {:>14.3e}  {}",
                r.id.as_str(),
                side,
                bound_value,
                observed,
                gap,
                if *equality { "yes" } else { "no" }
            )?,
            Outcome::Inapplicable { reason } => writeln!(
                w,
                "  {:<8} {:<15} inapplicable: {reason}",
                r.id.as_str(),
                side
            )?,
            Outcome::Failed { reason } => {
                writeln!(w, "  {:<8} {:<15} FAILED: {reason}", r.id.as_str(), side)?
            }
        }
    }
    Ok(())
}
