//! Resolving a command-line graph source into graphs.

use std::fs;
use std::path::Path;

use aalpha_core::generators::{connected_masks, graph_from_mask, GraphSpec};
use aalpha_core::graph6::{parse_edge_list, parse_graph6, parse_graph6_corpus};
use aalpha_core::Graph;

use crate::error::CliError;

pub type Graphs = Box<dyn Iterator<Item = Graph> + Send>;

/// `enumerate:N`, a readable file, a generator spec, or a literal graph6 record.
pub fn load(source: &str) -> Result<Graphs, CliError> {
    if let Some(n) = source.strip_prefix("enumerate:") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Input(format!("bad enumeration order {n:?}")))?;
        let masks = connected_masks(n)?;
        return Ok(Box::new(
            masks.into_iter().map(move |m| graph_from_mask(n, m)),
        ));
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        return Ok(Box::new(parse_file(&text)?.into_iter()));
    }
    let graph = if source.contains(':') {
        source.parse::<GraphSpec>()?.build()?
    } else {
        parse_graph6(source)?
    };
    Ok(Box::new(std::iter::once(graph)))
}

pub fn load_all(sources: &[String]) -> Result<Graphs, CliError> {
    let mut parts = Vec::with_capacity(sources.len());
    for s in sources {
        parts.push(load(s)?);
    }
    Ok(Box::new(parts.into_iter().flatten()))
}

/// A file is an edge list when its first content line is two integers.
fn parse_file(text: &str) -> Result<Vec<Graph>, CliError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    let is_edge_list = first.is_some_and(|l| {
        let fields: Vec<_> = l.split_whitespace().collect();
        fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
    });
    if is_edge_list {
        Ok(vec![parse_edge_list(text)?])
    } else {
        Ok(parse_graph6_corpus(text)?)
    }
}
