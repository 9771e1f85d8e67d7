//! Simple undirected graphs and the structural queries used throughout the crate.
//!
//! A [`Graph`] is an immutable value: vertices are `0..n`, adjacency lists are kept
//! sorted, and every rewrite elsewhere in the crate produces a fresh graph.

mod canon;
pub mod edgelist;
pub mod graph6;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use canon::{are_isomorphic, canonical_code, CanonicalCode, CANON_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("edge {{{u},{v}}} listed more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph has {n} vertices, canonical labeling supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Malformed graph6 or edge-list input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// Builds from adjacency lists already known to be symmetric, sorted and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && l.iter().all(|&v| v != u)));
        Graph { adj, m }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Sorted neighbor list of `v`.
    ///
    /// Panics if `v` is out of range; [`Graph::degree`] is the checked query.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adj.get(v).map(Vec::len).ok_or(GraphError::OutOfRange {
            vertex: v,
            n: self.vertex_count(),
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    fn bfs_distances(&self, source: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
        dist.fill(usize::MAX);
        dist[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    /// Breadth-first distances from `source`; unreachable vertices get `None`.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if source >= self.vertex_count() {
            return Err(GraphError::OutOfRange {
                vertex: source,
                n: self.vertex_count(),
            });
        }
        let mut dist = vec![0; self.vertex_count()];
        self.bfs_distances(source, &mut dist, &mut VecDeque::new());
        Ok(dist
            .into_iter()
            .map(|d| (d != usize::MAX).then_some(d))
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut dist = vec![0; n];
        self.bfs_distances(0, &mut dist, &mut VecDeque::new());
        dist.iter().all(|&d| d != usize::MAX)
    }

    /// Maximum eccentricity, by breadth-first search from every vertex.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut dist = vec![0; n];
        let mut queue = VecDeque::with_capacity(n);
        let mut best = 0;
        for s in 0..n {
            self.bfs_distances(s, &mut dist, &mut queue);
            for &d in &dist {
                if d == usize::MAX {
                    return Err(GraphError::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Result<usize, GraphError> {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                // nothing shorter can be found past this depth
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Err(GraphError::Acyclic)
        } else {
            Ok(best)
        }
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.vertex_count() >= 3 && self.m == self.vertex_count() && self.is_connected()
    }

    /// All vertices of degree one, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adj[v].len() == 1)
            .collect()
    }

    /// The unique cycle of a unicyclic graph in cyclic order.
    ///
    /// Pendant vertices are stripped until the 2-regular core remains. The walk
    /// starts at the smallest core vertex and heads toward its smaller core neighbor.
    pub fn cycle_vertices(&self) -> Result<Vec<usize>, GraphError> {
        if !self.is_unicyclic() {
            return Err(GraphError::NotUnicyclic);
        }
        let n = self.vertex_count();
        let mut deg = self.degrees();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let core_neighbors = |v: usize| self.adj[v].iter().copied().filter(|&w| !removed[w]);
        let start = (0..n)
            .find(|&v| !removed[v])
            .ok_or(GraphError::NotUnicyclic)?;
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = core_neighbors(start)
            .min()
            .ok_or(GraphError::NotUnicyclic)?;
        while cur != start {
            cycle.push(cur);
            let next = core_neighbors(cur)
                .find(|&w| w != prev)
                .ok_or(GraphError::NotUnicyclic)?;
            prev = cur;
            cur = next;
        }
        Ok(cycle)
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// Panics unless `perm` is a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut hit = vec![false; n];
        assert!(
            perm.len() == n
                && perm
                    .iter()
                    .all(|&p| p < n && !std::mem::replace(&mut hit[p], true)),
            "not a permutation of 0..{n}"
        );
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            let target = &mut adj[perm[u]];
            target.extend(list.iter().map(|&v| perm[v]));
            target.sort_unstable();
        }
        Graph { adj, m: self.m }
    }

    /// Copy with the edge set edited; callers guarantee simplicity is preserved.
    pub(crate) fn with_edits(
        &self,
        removals: &[(usize, usize)],
        additions: &[(usize, usize)],
    ) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removals {
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        for &(u, v) in additions {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph::from_sorted_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edge_list()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let tri = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tri.edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
        let single = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 5));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(2, 2)]),
            Err(GraphError::SelfLoop { vertex: 2 })
        );
    }

    #[test]
    fn degree_queries() {
        assert!((0..5).all(|v| cycle(5).degree(v) == Ok(2)));
        assert_eq!(star(4).degree(0), Ok(4));
        assert_eq!(
            star(4).degree(9),
            Err(GraphError::OutOfRange { vertex: 9, n: 5 })
        );
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(cycle(6).diameter(), Ok(3));
        let path = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(path.diameter(), Ok(4));
        let two = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(two.diameter(), Err(GraphError::Disconnected));
        assert_eq!(Graph::empty(0).diameter(), Err(GraphError::Empty));
        assert_eq!(Graph::empty(1).diameter(), Ok(0));
    }

    #[test]
    fn girth_cases() {
        assert_eq!(cycle(7).girth(), Ok(7));
        assert_eq!(star(3).girth(), Err(GraphError::Acyclic));
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Ok(3));
        // two cycles, the longer found first from vertex 0
        let g = Graph::from_edge_list(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 6),
                (6, 7),
                (7, 5),
                (4, 5),
            ],
        )
        .unwrap();
        assert_eq!(g.girth(), Ok(3));
    }

    #[test]
    fn unicyclic_recognition() {
        assert!(cycle(5).is_unicyclic());
        let tree = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert!(!tree.is_unicyclic());
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_unicyclic());
    }

    #[test]
    fn pendants() {
        assert!(cycle(5).pendant_vertices().is_empty());
        assert_eq!(star(4).pendant_vertices(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn cycle_extraction() {
        assert_eq!(cycle(5).cycle_vertices(), Ok(vec![0, 1, 2, 3, 4]));
        let g =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(g.cycle_vertices(), Ok(vec![0, 1, 2]));
        assert_eq!(star(3).cycle_vertices(), Err(GraphError::NotUnicyclic));
    }

    #[test]
    fn permute_relabels() {
        let path = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let p = path.permute(&[1, 0, 2]);
        assert_eq!(p.edge_list(), vec![(0, 1), (0, 2)]);
    }
}
