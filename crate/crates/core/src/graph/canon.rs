//! Canonical labeling by partition refinement and backtracking.
//!
//! The ordered partition is refined to an equitable one by repeatedly splitting
//! cells on neighbor counts into a splitter cell, starting from the unit partition
//! (so the first split is by degree). Non-discrete partitions branch on the first
//! non-singleton cell. Each leaf fixes a vertex order whose packed upper-triangle
//! word is compared, and the largest word is the code.
//!
//! Two prunings keep symmetric inputs tractable: twins (same neighborhood apart
//! from each other) inside a target cell are explored once, and automorphisms
//! discovered from equal leaf words collapse children that lie in one orbit of
//! the generators fixing the current prefix.

use std::fmt;

use super::{graph6, Graph, GraphError};

/// Largest vertex count supported: the upper triangle has to fit in a `u128`.
pub const CANON_MAX_N: usize = 16;

/// Isomorphism-invariant identifier of an unlabeled graph.
///
/// Ordering is by vertex count, then by the canonical adjacency word, which for a
/// fixed vertex count agrees with the lexicographic order of the graph6 strings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    word: u128,
}

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    /// Canonical adjacency encoding, as graph6 bytes of the canonical representative.
    pub fn bytes(&self) -> Vec<u8> {
        self.to_graph6().into_bytes()
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let total = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.word >> (total - 1 - idx)) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edge_list(n, &edges).expect("canonical word decodes to a simple graph")
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_graph6())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    let n = g.vertex_count();
    if n > CANON_MAX_N {
        return Err(GraphError::TooLarge {
            n,
            limit: CANON_MAX_N,
        });
    }
    let mut adj = [0u32; CANON_MAX_N];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut search = Search {
        n,
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let cells = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n as u8).collect::<Vec<_>>()]
    };
    search.descend(cells, &mut Vec::new());
    let word = search.best.map_or(0, |(w, _)| w);
    Ok(CanonicalCode { n: n as u8, word })
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        // still enforce the size contract on both arguments
        canonical_code(g)?;
        canonical_code(h)?;
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

type Labeling = [u8; CANON_MAX_N];

struct Search {
    n: usize,
    adj: [u32; CANON_MAX_N],
    first: Option<(u128, Labeling)>,
    best: Option<(u128, Labeling)>,
    /// Automorphisms as vertex maps.
    generators: Vec<Labeling>,
}

impl Search {
    fn mask(cell: &[u8]) -> u32 {
        cell.iter().fold(0, |m, &v| m | (1 << v))
    }

    /// Refines to an equitable ordered partition.
    fn refine(&self, cells: &mut Vec<Vec<u8>>) {
        'outer: loop {
            for w in 0..cells.len() {
                let splitter = Self::mask(&cells[w]);
                let mut next: Vec<Vec<u8>> = Vec::with_capacity(cells.len() + 1);
                let mut split = false;
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, u8)> = cell
                        .iter()
                        .map(|&v| ((self.adj[v as usize] & splitter).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                    split |= keyed[0].0 != keyed[keyed.len() - 1].0;
                }
                if split {
                    *cells = next;
                    continue 'outer;
                }
            }
            return;
        }
    }

    fn leaf_word(&self, order: &Labeling) -> u128 {
        let n = self.n;
        let mut word = 0u128;
        for j in 1..n {
            let row = self.adj[order[j] as usize];
            for &vi in &order[..j] {
                word = (word << 1) | ((row >> vi) & 1) as u128;
            }
        }
        word
    }

    fn record_automorphism(&mut self, from: &Labeling, to: &Labeling) {
        let mut gamma = [0u8; CANON_MAX_N];
        for k in 0..self.n {
            gamma[from[k] as usize] = to[k];
        }
        if (0..self.n).any(|v| gamma[v] as usize != v) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<u8>>, prefix: &mut Vec<u8>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let mut order = [0u8; CANON_MAX_N];
            for (k, cell) in cells.iter().enumerate() {
                order[k] = cell[0];
            }
            let word = self.leaf_word(&order);
            match self.first {
                None => self.first = Some((word, order)),
                Some((w, first)) if w == word => self.record_automorphism(&order, &first),
                _ => {}
            }
            match self.best {
                Some((w, _)) if w > word => {}
                Some((w, best)) if w == word => self.record_automorphism(&order, &best),
                _ => self.best = Some((word, order)),
            }
            return;
        };

        let candidates = cells[target].clone();
        let mut explored: Vec<u8> = Vec::new();
        for &v in &candidates {
            if explored
                .iter()
                .any(|&u| self.twins(u, v) || self.same_orbit(prefix, u, v))
            {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(candidates.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn twins(&self, u: u8, v: u8) -> bool {
        let (u, v) = (u as usize, v as usize);
        (self.adj[u] & !(1 << v)) == (self.adj[v] & !(1 << u))
    }

    /// Whether `u` and `v` share an orbit of the group generated by the known
    /// automorphisms that fix every vertex of `prefix`.
    fn same_orbit(&self, prefix: &[u8], u: u8, v: u8) -> bool {
        let fixing: Vec<&Labeling> = self
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p as usize] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in fixing {
            for x in 0..self.n {
                let (a, b) = (root(&mut parent, x), root(&mut parent, g[x] as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        root(&mut parent, u as usize) == root(&mut parent, v as usize)
    }
}
