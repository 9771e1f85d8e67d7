use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::enumerate::{EnumFilter, Enumerator};
use crate::families::{c_family, u_graph};
use crate::graph::{canonical_code, CanonicalCode, Graph};
use crate::index::{edge_contribution, general_sombor, Alpha};

use super::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The predicted graph is the only maximizer.
    ConfirmedUnique,
    /// The predicted graph attains the maximum together with others.
    ConfirmedTied,
    /// The predicted graph does not attain the maximum.
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ConfirmedUnique => "ConfirmedUnique",
            Verdict::ConfirmedTied => "ConfirmedTied",
            Verdict::Refuted => "Refuted",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub n: usize,
    pub d: usize,
    pub alpha: Alpha<f64>,
    /// `|U_{n,d}|`.
    pub class_size: usize,
    pub max_value: f64,
    /// Sorted codes of every class within tolerance of the maximum.
    pub argmax_codes: Vec<CanonicalCode>,
    pub predicted_code: CanonicalCode,
    pub predicted_value: f64,
    pub verdict: Verdict,
    pub runtime: Duration,
}

/// The graph the extremal theorems name as the maximizer of `SO_α` on `U_{n,d}`.
///
/// `d = 2`: `C(3, n-3, 0)`, `d = 3`: `C(3, n-4, 1)`, both for `n >= d + 3`;
/// `d >= 4`: `U(n, d, 1)` for `n >= d + 2`.
pub fn predicted_extremal(n: usize, d: usize) -> Result<Graph, VerifyError> {
    let out = |reason: &str| VerifyError::OutOfTheoremRange {
        n,
        d,
        reason: reason.to_string(),
    };
    if d < 2 {
        return Err(out("the theorems start at d = 2"));
    }
    if d + 2 > n {
        return Err(out("a unicyclic graph with diameter d needs n >= d + 2"));
    }
    match d {
        2 | 3 if n < d + 3 => Err(out("the d = 2, 3 theorems need n >= d + 3")),
        2 => Ok(c_family(3, n - 3, 0)?),
        3 => Ok(c_family(3, n - 4, 1)?),
        _ => Ok(u_graph(n, d, 1)?),
    }
}

pub fn extremal_search(
    n: usize,
    d: usize,
    alpha: Alpha<f64>,
    tolerance: f64,
) -> Result<ExtremalReport, VerifyError> {
    extremal_search_with(&Enumerator::default(), n, d, alpha, tolerance)
}

/// Exhaustive search for the maximizers of `SO_α` over `U_{n,d}`.
///
/// Values within `tolerance · max(1, |max|)` of the maximum are grouped and
/// compared by canonical code against [`predicted_extremal`].
pub fn extremal_search_with(
    enumerator: &Enumerator,
    n: usize,
    d: usize,
    alpha: Alpha<f64>,
    tolerance: f64,
) -> Result<ExtremalReport, VerifyError> {
    let started = Instant::now();
    let alpha = alpha.require_open_unit()?;
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(VerifyError::BadTolerance(tolerance));
    }
    let class = enumerator.unicyclic(&EnumFilter::new(n).with_diameter(d))?;
    if class.count() == 0 {
        return Err(VerifyError::EmptyClass { n, d });
    }
    let predicted = predicted_extremal(n, d)?;
    let predicted_code = canonical_code(&predicted)?;
    let predicted_value = general_sombor(&predicted, alpha).value();
    let values: Vec<f64> = enumerator.run(|| {
        class
            .graphs
            .par_iter()
            .map(|g| general_sombor(g, alpha).value())
            .collect()
    })?;
    let max_value = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let second = second_pass_max(&class.graphs, alpha)?;
    if (second - max_value).abs() > 1e-12 * max_value.abs().max(1.0) {
        return Err(VerifyError::SelfCheck {
            first: max_value,
            second,
        });
    }

    let cutoff = max_value - tolerance * max_value.abs().max(1.0);
    let argmax_codes: Vec<CanonicalCode> = class
        .codes
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v >= cutoff)
        .map(|(c, _)| *c)
        .collect();
    let verdict = if !argmax_codes.contains(&predicted_code) {
        Verdict::Refuted
    } else if argmax_codes.len() == 1 {
        Verdict::ConfirmedUnique
    } else {
        Verdict::ConfirmedTied
    };
    Ok(ExtremalReport {
        n,
        d,
        alpha,
        class_size: class.count(),
        max_value,
        argmax_codes,
        predicted_code,
        predicted_value,
        verdict,
        runtime: started.elapsed(),
    })
}

/// Sequential recomputation through the checked per-edge entry point.
fn second_pass_max(graphs: &[Graph], alpha: Alpha<f64>) -> Result<f64, VerifyError> {
    let mut best = f64::NEG_INFINITY;
    for g in graphs {
        let mut total = 0.0;
        for (u, v) in g.edges() {
            total += edge_contribution(g.neighbors(u).len(), g.neighbors(v).len(), alpha)?;
        }
        best = best.max(total);
    }
    Ok(best)
}
