//! Free trees, one per isomorphism class, in constant amortized time per tree.
//!
//! Trees are walked as level sequences of canonical rooted trees (root at a
//! centroid) using the successor rule of Wright, Richmond, Odlyzko and McKay:
//! `next_rooted` produces the next rooted level sequence and `next_free` skips
//! sequences whose rooting is not the canonical one for the free tree.

use crate::graph::Graph;

/// Iterator over the free trees on `n` vertices.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    pending: Option<Vec<usize>>,
    single: bool,
}

impl FreeTrees {
    pub(crate) fn new(n: usize) -> Self {
        match n {
            0 => FreeTrees {
                pending: None,
                single: false,
            },
            1 => FreeTrees {
                pending: None,
                single: true,
            },
            _ => {
                // path rooted at its center
                let mut layout: Vec<usize> = (0..=n / 2).collect();
                layout.extend(1..n.div_ceil(2));
                FreeTrees {
                    pending: Some(layout),
                    single: false,
                }
            }
        }
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            return Some(Graph::empty(1));
        }
        let candidate = self.pending.take()?;
        let tree = next_free(candidate);
        self.pending = next_rooted(&tree, None);
        Some(layout_to_graph(&tree))
    }
}

fn next_rooted(levels: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = levels.len() - 1;
        while levels[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits at the second child of the root: the first subtree (levels shifted up
/// by one) and the rest of the tree with the root kept.
fn split(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = levels
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&levels[m..]);
    (left, rest)
}

fn next_free(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("p >= 1 always has a successor");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, slot) in next[len - (height + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    next
}

fn layout_to_graph(levels: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in levels.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if levels[top] >= level {
                stack.pop();
            } else {
                edges.push((top, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edge_list(levels.len(), &edges).expect("level sequence yields a tree")
}
