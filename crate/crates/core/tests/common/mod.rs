//! Independent oracles shared by the integration and acceptance tests.
//! Nothing here calls into the library's canonical labeling or enumeration.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// All permutations of `items` (Heap's algorithm).
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut a = items.to_vec();
    let mut out = vec![a.clone()];
    let n = a.len();
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Canonical form by exhaustive relabeling, restricted to relabelings that
/// place vertices in non-decreasing degree order. Returns the largest
/// adjacency bit string (upper triangle, row-major) over those relabelings.
pub fn brute_canon(n: usize, edges: &[(usize, usize)]) -> (usize, u64) {
    assert!(n <= 11, "brute force oracle is for tiny graphs");
    let mut deg = vec![0; n];
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        classes.entry(deg[v]).or_default().push(v);
    }
    let blocks: Vec<Vec<Vec<usize>>> = classes.values().map(|c| permutations(c)).collect();
    let mut best = 0u64;
    let mut idx = vec![0; blocks.len()];
    loop {
        // order[k] = original vertex placed at position k
        let order: Vec<usize> = blocks
            .iter()
            .zip(&idx)
            .flat_map(|(b, &i)| b[i].iter().copied())
            .collect();
        let mut word = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                word = (word << 1) | adj[order[i]][order[j]] as u64;
            }
        }
        best = best.max(word);
        let mut k = 0;
        loop {
            if k == blocks.len() {
                return (n, best);
            }
            idx[k] += 1;
            if idx[k] < blocks[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}

/// One labeled representative per isomorphism class of connected unicyclic
/// graphs on `n` vertices, found by scanning every `n`-edge subset of `K_n`.
pub fn brute_unicyclic(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() < 32);
    let mut classes: BTreeMap<(usize, u64), Vec<(usize, usize)>> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let edges: Vec<_> = (0..pairs.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        if connected(n, &edges) {
            classes.entry(brute_canon(n, &edges)).or_insert(edges);
        }
    }
    classes.into_values().collect()
}

/// Labeled tree encoded by a Prüfer sequence over `0..n`.
pub fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut deg = vec![1; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| deg[v] == 1).unwrap();
        edges.push((leaf.min(s), leaf.max(s)));
        deg[leaf] -= 1;
        deg[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// One labeled representative per free tree on `n >= 2` vertices, via all
/// `n^(n-2)` Prüfer sequences.
pub fn brute_free_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut classes: BTreeMap<(usize, u64), Vec<(usize, usize)>> = BTreeMap::new();
    let total = n.pow(n as u32 - 2);
    let mut seq = vec![0; n - 2];
    for mut k in 0..total {
        for s in seq.iter_mut() {
            *s = k % n;
            k /= n;
        }
        let edges = prufer_decode(&seq);
        classes.entry(brute_canon(n, &edges)).or_insert(edges);
    }
    classes.into_values().collect()
}

/// `SO_α` straight from the definition, summing over an adjacency matrix.
pub fn naive_index(n: usize, edges: &[(usize, usize)], alpha: f64) -> f64 {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    edges
        .iter()
        .map(|&(u, v)| ((deg[u] * deg[u] + deg[v] * deg[v]) as f64).powf(alpha))
        .sum()
}
