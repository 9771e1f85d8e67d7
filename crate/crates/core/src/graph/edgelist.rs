//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with 0-based labels.
//! Blank lines and `#` comments are ignored. Several graphs may follow one another.

use super::{FormatError, Graph};

pub fn format(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), FormatError> {
    let err = |reason: String| FormatError::EdgeList {
        line: lineno,
        reason,
    };
    let mut it = line.split_whitespace();
    let mut next = |what: &str| {
        it.next()
            .ok_or_else(|| err(format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|e| err(format!("bad {what}: {e}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(err("expected exactly two integers".into()));
    }
    Ok((a, b))
}

/// Parses all graphs in `text`.
pub fn parse_all(text: &str) -> Result<Vec<Graph>, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut graphs = Vec::new();
    while let Some((lineno, header)) = lines.next() {
        let (n, m) = parse_pair(header, lineno)?;
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let (ln, l) = lines.next().ok_or_else(|| FormatError::EdgeList {
                line: lineno,
                reason: format!("header promises {m} edges, found {k}"),
            })?;
            edges.push(parse_pair(l, ln)?);
        }
        graphs.push(Graph::from_edge_list(n, &edges)?);
    }
    Ok(graphs)
}

/// Parses exactly one graph.
pub fn parse(text: &str) -> Result<Graph, FormatError> {
    let mut graphs = parse_all(text)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        k => Err(FormatError::EdgeList {
            line: 1,
            reason: format!("expected one graph, found {k}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphError;

    #[test]
    fn parse_and_format() {
        let g = parse("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(format(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(parse(&format(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_multiple_graphs() {
        let text = "# two graphs\n2 1\n0 1\n\n3 0\n";
        let gs = parse_all(text).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(parse(text).is_err());
    }

    #[test]
    fn errors_carry_lines() {
        assert!(matches!(
            parse("3 2\n0 1\n"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse("3 1\n0 x\n"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert_eq!(
            parse("3 1\n1 1\n"),
            Err(FormatError::Graph(GraphError::SelfLoop { vertex: 1 }))
        );
    }
}
