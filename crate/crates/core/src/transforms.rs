//! Graph rewrites: the branch relocation along an edge and explicit edge swaps.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{{{u},{v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex {vertex} has degree {degree}, relocation needs at least 2")]
    DegreeTooLow { vertex: usize, degree: usize },
    #[error("{u} and {v} share neighbor {w}")]
    CommonNeighbor { u: usize, v: usize, w: usize },
    #[error("edge {{{u},{v}}} to remove is missing")]
    RemovalMissing { u: usize, v: usize },
    #[error("edge {{{u},{v}}} to add already exists")]
    AdditionExists { u: usize, v: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("cannot parse swap token {0:?}, expected +u,v or -u,v")]
    Parse(String),
}

fn check_vertex(g: &Graph, vertex: usize) -> Result<(), TransformError> {
    let n = g.vertex_count();
    if vertex < n {
        Ok(())
    } else {
        Err(TransformError::OutOfRange { vertex, n })
    }
}

/// Moves every neighbor of `v` other than `u` onto `u`, leaving `v` pendant at `u`.
///
/// Vertex labels are unchanged. Afterwards `d(u)` becomes `d(u) + d(v) - 1`.
pub fn relocate(g: &Graph, u: usize, v: usize) -> Result<Graph, TransformError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if !g.has_edge(u, v) {
        return Err(TransformError::NotAnEdge { u, v });
    }
    for vertex in [u, v] {
        let degree = g.neighbors(vertex).len();
        if degree < 2 {
            return Err(TransformError::DegreeTooLow { vertex, degree });
        }
    }
    if let Some(&w) = g.neighbors(u).iter().find(|w| g.has_edge(v, **w)) {
        return Err(TransformError::CommonNeighbor { u, v, w });
    }
    let moved: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
    let removals: Vec<_> = moved.iter().map(|&w| (v, w)).collect();
    let additions: Vec<_> = moved.iter().map(|&w| (u, w)).collect();
    Ok(g.with_edits(&removals, &additions))
}

/// `G + additions - removals`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeSwap {
    pub additions: Vec<(usize, usize)>,
    pub removals: Vec<(usize, usize)>,
}

impl EdgeSwap {
    pub fn new(additions: Vec<(usize, usize)>, removals: Vec<(usize, usize)>) -> Self {
        EdgeSwap {
            additions,
            removals,
        }
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

pub fn apply_swap(g: &Graph, swap: &EdgeSwap) -> Result<Graph, TransformError> {
    let mut removed = BTreeSet::new();
    for &(u, v) in &swap.removals {
        check_vertex(g, u)?;
        check_vertex(g, v)?;
        if !g.has_edge(u, v) || !removed.insert(norm(u, v)) {
            return Err(TransformError::RemovalMissing { u, v });
        }
    }
    let mut added = BTreeSet::new();
    for &(u, v) in &swap.additions {
        check_vertex(g, u)?;
        check_vertex(g, v)?;
        if u == v {
            return Err(TransformError::SelfLoop { vertex: u });
        }
        if g.has_edge(u, v) || !added.insert(norm(u, v)) {
            return Err(TransformError::AdditionExists { u, v });
        }
    }
    let removals: Vec<_> = removed.into_iter().collect();
    let additions: Vec<_> = added.into_iter().collect();
    Ok(g.with_edits(&removals, &additions))
}

impl FromStr for EdgeSwap {
    type Err = TransformError;

    /// Whitespace-separated tokens `+u,v` (add) and `-u,v` (remove).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut swap = EdgeSwap::default();
        for token in s.split_whitespace() {
            let bad = || TransformError::Parse(token.to_string());
            let (add, rest) = if let Some(rest) = token.strip_prefix('+') {
                (true, rest)
            } else if let Some(rest) = token.strip_prefix('-') {
                (false, rest)
            } else {
                return Err(bad());
            };
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let pair = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if add {
                swap.additions.push(pair);
            } else {
                swap.removals.push(pair);
            }
        }
        Ok(swap)
    }
}

impl fmt::Display for EdgeSwap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .additions
            .iter()
            .map(|(u, v)| format!("+{u},{v}"))
            .chain(self.removals.iter().map(|(u, v)| format!("-{u},{v}")))
            .collect();
        f.write_str(&tokens.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cycle;
    use crate::graph::are_isomorphic;
    use crate::index::{general_sombor, Alpha};

    fn so(g: &Graph, a: f64) -> f64 {
        general_sombor(g, Alpha::new(a).unwrap()).0
    }

    #[test]
    fn relocate_on_c6() {
        let g = relocate(&cycle(6).unwrap(), 0, 5).unwrap();
        // 5-cycle 0..4 with pendant 5 at 0
        let expected =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.degree(5), Ok(1));
        assert_eq!(g.degree(0), Ok(3));
    }

    #[test]
    fn relocate_on_path_increases_index() {
        // a=0, u=1, v=2, b=3
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let g = relocate(&p4, 1, 2).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2), (1, 3)]);
        for a in [0.25, 0.5, 0.75] {
            assert!(so(&g, a) > so(&p4, a));
        }
    }

    #[test]
    fn relocate_errors() {
        let tri = cycle(3).unwrap();
        assert_eq!(
            relocate(&tri, 0, 1),
            Err(TransformError::CommonNeighbor { u: 0, v: 1, w: 2 })
        );
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            relocate(&p3, 1, 0),
            Err(TransformError::DegreeTooLow {
                vertex: 0,
                degree: 1
            })
        );
        assert_eq!(
            relocate(&p3, 0, 2),
            Err(TransformError::NotAnEdge { u: 0, v: 2 })
        );
        assert!(matches!(
            relocate(&p3, 0, 7),
            Err(TransformError::OutOfRange { .. })
        ));
    }

    #[test]
    fn odd_cycle_swap() {
        let c7 = cycle(7).unwrap();
        let swap: EdgeSwap = "+1,5 -0,6".parse().unwrap();
        let g = apply_swap(&c7, &swap).unwrap();
        assert!(g.is_unicyclic());
        let diff = so(&c7, 0.5) - so(&g, 0.5);
        let p = |b: f64| b.sqrt();
        let closed = 2.0 * (p(8.0) - p(13.0)) + p(8.0) - p(18.0) + 2.0 * (p(8.0) - p(10.0));
        assert!((diff - closed).abs() < 1e-12);
        assert!((diff - -3.636).abs() < 1e-3);
    }

    #[test]
    fn swap_identity_and_errors() {
        let c4 = cycle(4).unwrap();
        assert_eq!(apply_swap(&c4, &EdgeSwap::default()).unwrap(), c4);
        assert_eq!(
            apply_swap(&c4, &EdgeSwap::new(vec![(0, 1)], vec![])),
            Err(TransformError::AdditionExists { u: 0, v: 1 })
        );
        assert_eq!(
            apply_swap(&c4, &EdgeSwap::new(vec![], vec![(0, 2)])),
            Err(TransformError::RemovalMissing { u: 0, v: 2 })
        );
        assert_eq!(
            apply_swap(&c4, &EdgeSwap::new(vec![(3, 3)], vec![])),
            Err(TransformError::SelfLoop { vertex: 3 })
        );
    }

    #[test]
    fn swap_tokens() {
        let s: EdgeSwap = "+1,5  -0,6 +2,4".parse().unwrap();
        assert_eq!(s.additions, vec![(1, 5), (2, 4)]);
        assert_eq!(s.removals, vec![(0, 6)]);
        assert_eq!(s.to_string(), "+1,5 +2,4 -0,6");
        for bad in ["1,5", "+1", "+a,b", "*1,2", "+-1,2"] {
            assert!(bad.parse::<EdgeSwap>().is_err(), "{bad}");
        }
    }

    #[test]
    fn relocation_commutes_with_relabeling() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (2, 6)])
            .unwrap();
        let perm = [3, 6, 0, 5, 1, 2, 4];
        let direct = relocate(&g, 1, 4).unwrap().permute(&perm);
        let moved = relocate(&g.permute(&perm), perm[1], perm[4]).unwrap();
        assert!(are_isomorphic(&direct, &moved).unwrap());
        assert_eq!(direct, moved);
    }
}
