//! Parallel evaluation over (graph, α) with results delivered in corpus order.

use aalpha_core::graph6::write_graph6;
use aalpha_core::{BoundReport, Graph, GraphAnalysis, Spectrum};
use rayon::prelude::*;

use crate::error::CliError;

const CHUNK: usize = 4096;

pub struct GraphResult {
    pub analysis: GraphAnalysis,
    pub graph6: String,
    /// One entry per requested α, in the order given.
    pub runs: Vec<(Spectrum, Vec<BoundReport>)>,
}

fn evaluate(graph: Graph, alphas: &[f64]) -> Result<GraphResult, CliError> {
    let graph6 = write_graph6(&graph)?;
    let analysis = GraphAnalysis::new(graph);
    let runs = alphas
        .iter()
        .map(|&a| analysis.evaluate(a))
        .collect::<Result<_, _>>()?;
    Ok(GraphResult {
        analysis,
        graph6,
        runs,
    })
}

/// Evaluates every graph at every α on the rayon pool, handing results to
/// `sink` one at a time in input order. Stops at the first error in order.
pub fn run<F>(
    graphs: impl Iterator<Item = Graph>,
    alphas: &[f64],
    mut sink: F,
) -> Result<(), CliError>
where
    F: FnMut(GraphResult) -> Result<(), CliError>,
{
    let mut graphs = graphs.peekable();
    while graphs.peek().is_some() {
        let chunk: Vec<Graph> = graphs.by_ref().take(CHUNK).collect();
        let results: Vec<_> = chunk.into_par_iter().map(|g| evaluate(g, alphas)).collect();
        for r in results {
            sink(r?)?;
        }
    }
    Ok(())
}

/// Applies `AALPHA_THREADS` to the global pool when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("AALPHA_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| {
            CliError::Input(format!(
                "AALPHA_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}
