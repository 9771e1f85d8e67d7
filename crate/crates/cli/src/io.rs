use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use sombor_core::graph::{edgelist, graph6};
use sombor_core::Graph;

/// Reads a file (`-` for stdin) holding graph6 lines or edge-list blocks.
///
/// The format is detected from the first meaningful line: edge lists start
/// with a digit, which is never a graph6 character.
pub fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let graphs = match first {
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => edgelist::parse_all(&text),
        _ => graph6::decode_lines(&text),
    }
    .with_context(|| format!("parsing {}", path.display()))?;
    Ok(graphs)
}

pub fn read_one(path: &Path) -> Result<Graph> {
    let mut graphs = read_graphs(path)?;
    anyhow::ensure!(
        graphs.len() == 1,
        "{} holds {} graphs, expected exactly one",
        path.display(),
        graphs.len()
    );
    Ok(graphs.remove(0))
}

/// Writes to `path`, or to stdout when it is `None` or `-`.
pub fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, bytes).with_context(|| format!("writing {}", p.display()))
        }
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    graphs
        .into_iter()
        .map(|g| graph6::encode(g) + "\n")
        .collect()
}
