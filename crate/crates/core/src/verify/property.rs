use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{graph6, Graph};
use crate::index::{general_sombor, Alpha};
use crate::transforms::relocate;

use super::grid::STRICT_MARGIN;
use super::VerifyError;

/// How each instance picks its exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaSampler {
    Fixed(Alpha<f64>),
    /// Uniform on `[low, high)`.
    Uniform {
        low: f64,
        high: f64,
    },
}

impl AlphaSampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Alpha<f64>, VerifyError> {
        match *self {
            AlphaSampler::Fixed(a) => Ok(a),
            AlphaSampler::Uniform { low, high } => {
                if low.is_nan() || high.is_nan() || low >= high {
                    return Err(VerifyError::BadGrid(format!(
                        "empty alpha range [{low}, {high})"
                    )));
                }
                Ok(Alpha::new(rng.random_range(low..high))?)
            }
        }
    }
}

/// Edges `uv` eligible for [`relocate`]: both ends of degree at least 2, no common neighbor.
pub fn applicable_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| {
            let (nu, nv) = (g.neighbors(u), g.neighbors(v));
            nu.len() >= 2 && nv.len() >= 2 && !nu.iter().any(|w| nv.binary_search(w).is_ok())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
    pub alpha: f64,
    pub before: f64,
    pub after: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InstanceOutcome {
    /// No applicable edge.
    Skipped,
    /// Index went up by `gain`.
    Increased {
        gain: f64,
    },
    Counterexample(Counterexample),
}

/// Relocates along `(u, v)` and compares the index before and after.
pub fn check_relocation(
    g: &Graph,
    u: usize,
    v: usize,
    alpha: Alpha<f64>,
) -> Result<InstanceOutcome, VerifyError> {
    let h = relocate(g, u, v)?;
    let before = general_sombor(g, alpha).value();
    let after = general_sombor(&h, alpha).value();
    let gain = after - before;
    if gain > STRICT_MARGIN {
        Ok(InstanceOutcome::Increased { gain })
    } else {
        Ok(InstanceOutcome::Counterexample(Counterexample {
            graph6: graph6::encode(g),
            u,
            v,
            alpha: alpha.value(),
            before,
            after,
        }))
    }
}

/// Random connected graph on `n` vertices: a random recursive tree under a
/// random labeling, plus each remaining pair with a random probability below 0.35.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = rng.random_range(0..k);
        edges.push((labels[parent], labels[k]));
    }
    let p: f64 = rng.random_range(0.0..0.35);
    let mut g = Graph::from_edge_list(n, &edges).expect("tree edges are simple");
    let mut extra = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(p) {
                extra.push((u, v));
            }
        }
    }
    if !extra.is_empty() {
        g = g.with_edits(&[], &extra);
    }
    g
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub seed: u64,
    /// Applicable instances checked.
    pub checked: usize,
    /// Sampled graphs without an applicable edge.
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Smallest observed increase.
    pub min_gain: f64,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Samples graphs until `samples` applicable instances have been checked.
///
/// Each instance is a random connected graph with `5 <= n <= 12`, a random
/// applicable edge in a random orientation, and an α from `sampler`. Gives up
/// after `100 · samples` graphs. Fully determined by `seed`.
pub fn verify_transform_monotonicity(
    samples: usize,
    sampler: AlphaSampler,
    seed: u64,
) -> Result<PropertyReport, VerifyError> {
    if samples == 0 {
        return Err(VerifyError::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport {
        seed,
        checked: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        min_gain: f64::INFINITY,
    };
    let max_attempts = samples.saturating_mul(100);
    let mut attempts = 0;
    while report.checked < samples && attempts < max_attempts {
        attempts += 1;
        let n = rng.random_range(5..=12);
        let g = random_connected_graph(&mut rng, n);
        let edges = applicable_edges(&g);
        let Some(&(a, b)) = edges.get(rng.random_range(0..edges.len().max(1))) else {
            report.skipped += 1;
            continue;
        };
        let (u, v) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
        let alpha = sampler.sample(&mut rng)?;
        report.checked += 1;
        match check_relocation(&g, u, v, alpha)? {
            InstanceOutcome::Increased { gain } => report.min_gain = report.min_gain.min(gain),
            InstanceOutcome::Counterexample(c) => report.counterexamples.push(c),
            InstanceOutcome::Skipped => unreachable!("edge was applicable"),
        }
    }
    Ok(report)
}
