//! Exhaustive generation of connected unicyclic graphs up to isomorphism.
//!
//! Every unicyclic graph is a spanning tree plus one edge, so each free tree on
//! `n` vertices is augmented by every missing edge and the results are
//! deduplicated by canonical code. Trees are spread across worker threads; each
//! worker keeps its own code set and the sets are merged and sorted at the end,
//! so the output order never depends on scheduling.
//!
//! Memory is one 32-byte code per class (class counts grow roughly 2.7x per
//! vertex: 39065 classes at n = 14), so the default cap of 14 is about time,
//! not space.

mod trees;

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

pub use trees::FreeTrees;

use crate::graph::{canonical_code, CanonicalCode, Graph, GraphError, CANON_MAX_N};

pub const DEFAULT_MAX_N: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("n = {n} exceeds the enumeration cap of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Which unicyclic graphs on `n` vertices to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumFilter {
    pub n: usize,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
}

impl EnumFilter {
    pub fn new(n: usize) -> Self {
        EnumFilter {
            n,
            diameter: None,
            girth: None,
        }
    }

    pub fn with_diameter(mut self, d: usize) -> Self {
        self.diameter = Some(d);
        self
    }

    pub fn with_girth(mut self, g: usize) -> Self {
        self.girth = Some(g);
        self
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        let n = self.n;
        if n < 3 {
            return Err(EnumError::InvalidFilter(format!(
                "n must be at least 3, got {n}"
            )));
        }
        if let Some(d) = self.diameter {
            if d < 1 || d + 2 > n {
                return Err(EnumError::InvalidFilter(format!(
                    "diameter must lie in 1..={}, got {d}",
                    n - 2
                )));
            }
        }
        if let Some(g) = self.girth {
            if g < 3 || g > n {
                return Err(EnumError::InvalidFilter(format!(
                    "girth must lie in 3..={n}, got {g}"
                )));
            }
        }
        Ok(())
    }

    pub fn matches(&self, g: &Graph) -> bool {
        g.vertex_count() == self.n
            && g.is_unicyclic()
            && self.diameter.is_none_or(|d| g.diameter() == Ok(d))
            && self.girth.is_none_or(|c| g.girth() == Ok(c))
    }
}

/// Pairwise non-isomorphic canonical representatives, sorted by canonical code.
#[derive(Debug, Clone)]
pub struct EnumResult {
    pub codes: Vec<CanonicalCode>,
    pub graphs: Vec<Graph>,
}

impl EnumResult {
    pub fn count(&self) -> usize {
        self.codes.len()
    }
}

/// Enumeration settings: vertex cap and worker count.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    max_n: usize,
    jobs: Option<usize>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_n: DEFAULT_MAX_N,
            jobs: None,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Raises or lowers the cap; it can never exceed the canonical-code limit.
    pub fn max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n.min(CANON_MAX_N);
        self
    }

    /// Worker threads; `None` uses the global rayon pool.
    pub fn jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs;
        self
    }

    fn check_size(&self, n: usize) -> Result<(), EnumError> {
        if n > self.max_n {
            Err(EnumError::TooLarge {
                n,
                limit: self.max_n,
            })
        } else {
            Ok(())
        }
    }

    pub fn free_trees(&self, n: usize) -> Result<FreeTrees, EnumError> {
        if n == 0 {
            return Err(EnumError::InvalidFilter("trees need n >= 1".into()));
        }
        self.check_size(n)?;
        Ok(FreeTrees::new(n))
    }

    pub(crate) fn run<R: Send>(&self, work: impl FnOnce() -> R + Send) -> Result<R, EnumError> {
        match self.jobs {
            None => Ok(work()),
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map(|pool| pool.install(work))
                .map_err(|e| EnumError::Pool(e.to_string())),
        }
    }

    /// Sorted canonical codes of every class passing `filter`.
    pub fn codes(&self, filter: &EnumFilter) -> Result<Vec<CanonicalCode>, EnumError> {
        filter.validate()?;
        self.check_size(filter.n)?;
        let trees: Vec<Graph> = FreeTrees::new(filter.n).collect();
        let merged = self.run(|| {
            trees
                .par_iter()
                .map(|t| augment(t, filter))
                .try_reduce(HashSet::new, |mut a, b| {
                    a.extend(b);
                    Ok(a)
                })
        })??;
        let mut codes: Vec<CanonicalCode> = merged.into_iter().collect();
        codes.sort_unstable();
        Ok(codes)
    }

    pub fn unicyclic(&self, filter: &EnumFilter) -> Result<EnumResult, EnumError> {
        let codes = self.codes(filter)?;
        let graphs = codes.iter().map(CanonicalCode::to_graph).collect();
        Ok(EnumResult { codes, graphs })
    }

    pub fn count(&self, n: usize, diameter: Option<usize>) -> Result<usize, EnumError> {
        let filter = EnumFilter {
            n,
            diameter,
            girth: None,
        };
        Ok(self.codes(&filter)?.len())
    }
}

/// Codes of all graphs `tree + uv` passing the filter.
fn augment(tree: &Graph, filter: &EnumFilter) -> Result<HashSet<CanonicalCode>, EnumError> {
    let n = tree.vertex_count();
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            tree.distances_from(s).map(|d| {
                d.into_iter()
                    .map(|x| x.expect("trees are connected"))
                    .collect()
            })
        })
        .collect::<Result<_, _>>()?;
    let mut out = HashSet::new();
    // adding an edge never lengthens a shortest path
    let tree_diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    if filter.diameter.is_some_and(|d| d > tree_diameter) {
        return Ok(out);
    }
    for u in 0..n {
        for v in u + 1..n {
            let cycle_len = dist[u][v] + 1;
            if cycle_len < 3 || filter.girth.is_some_and(|g| g != cycle_len) {
                continue;
            }
            let g = tree.with_edits(&[], &[(u, v)]);
            if let Some(d) = filter.diameter {
                if g.diameter()? != d {
                    continue;
                }
            }
            out.insert(canonical_code(&g)?);
        }
    }
    Ok(out)
}

pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees, EnumError> {
    Enumerator::default().max_n(CANON_MAX_N).free_trees(n)
}

pub fn enumerate_unicyclic(filter: &EnumFilter) -> Result<EnumResult, EnumError> {
    Enumerator::default().unicyclic(filter)
}

pub fn count_unicyclic(n: usize, diameter: Option<usize>) -> Result<usize, EnumError> {
    Enumerator::default().count(n, diameter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c_family, cycle};

    #[test]
    fn small_counts() {
        assert_eq!(count_unicyclic(3, None), Ok(1));
        assert_eq!(count_unicyclic(4, None), Ok(2));
        assert_eq!(count_unicyclic(5, None), Ok(5));
        assert_eq!(count_unicyclic(6, None), Ok(13));
        assert_eq!(count_unicyclic(7, None), Ok(33));
    }

    #[test]
    fn n5_diameter_two() {
        let res = enumerate_unicyclic(&EnumFilter::new(5).with_diameter(2)).unwrap();
        let mut expected = vec![
            canonical_code(&cycle(5).unwrap()).unwrap(),
            canonical_code(&c_family(3, 2, 0).unwrap()).unwrap(),
        ];
        expected.sort();
        assert_eq!(res.codes, expected);
    }

    #[test]
    fn girth_filter() {
        let res = enumerate_unicyclic(&EnumFilter::new(6).with_girth(6)).unwrap();
        assert_eq!(res.count(), 1);
        let all = count_unicyclic(6, None).unwrap();
        let by_girth: usize = (3..=6)
            .map(|g| {
                enumerate_unicyclic(&EnumFilter::new(6).with_girth(g))
                    .unwrap()
                    .count()
            })
            .sum();
        assert_eq!(all, by_girth);
    }

    #[test]
    fn filter_validation() {
        assert!(EnumFilter::new(2).validate().is_err());
        assert!(EnumFilter::new(6).with_diameter(5).validate().is_err());
        assert!(EnumFilter::new(6).with_diameter(0).validate().is_err());
        assert!(EnumFilter::new(6).with_girth(2).validate().is_err());
        assert!(EnumFilter::new(6).with_girth(7).validate().is_err());
        assert!(EnumFilter::new(3).with_diameter(1).validate().is_ok());
    }

    #[test]
    fn size_cap() {
        assert_eq!(
            count_unicyclic(15, None),
            Err(EnumError::TooLarge { n: 15, limit: 14 })
        );
        assert!(matches!(
            enumerate_free_trees(17),
            Err(EnumError::TooLarge { n: 17, limit: 16 })
        ));
        assert!(enumerate_free_trees(0).is_err());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let f = EnumFilter::new(8);
        let one = Enumerator::new().jobs(Some(1)).codes(&f).unwrap();
        let four = Enumerator::new().jobs(Some(4)).codes(&f).unwrap();
        assert_eq!(one, four);
    }
}
