//! The general Sombor index `SO_α(G) = Σ_{uv ∈ E} (d(u)² + d(v)²)^α` and its
//! α = 1/2 (Sombor) and α = 1 (forgotten) specializations.
//!
//! Edges are summed in lexicographic order so a value is bit-reproducible for a
//! given labeled graph regardless of who calls it.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("alpha must be finite, got {0}")]
    NonFiniteAlpha(f64),
    #[error("alpha {0} outside the open interval (0, 1)")]
    AlphaOutOfRange(f64),
    #[error("edge endpoint degrees must be at least 1, got ({du}, {dv})")]
    InvalidDegree { du: usize, dv: usize },
}

/// Exponent of the general Sombor index.
///
/// Any finite value is accepted here; [`Alpha::require_open_unit`] is the extra
/// check for code that relies on `0 < α < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha<T>(T);

impl<T: Scalar> Alpha<T> {
    pub fn new(value: T) -> Result<Self, IndexError> {
        if value.is_finite() {
            Ok(Alpha(value))
        } else {
            Err(IndexError::NonFiniteAlpha(
                value.to_f64().unwrap_or(f64::NAN),
            ))
        }
    }

    /// Like [`Alpha::new`], additionally requiring `0 < α < 1`.
    pub fn in_open_unit(value: T) -> Result<Self, IndexError> {
        Self::new(value)?.require_open_unit()
    }

    pub fn require_open_unit(self) -> Result<Self, IndexError> {
        if self.0 > T::zero() && self.0 < T::one() {
            Ok(self)
        } else {
            Err(IndexError::AlphaOutOfRange(
                self.0.to_f64().unwrap_or(f64::NAN),
            ))
        }
    }

    pub fn sombor() -> Self {
        Alpha(T::lit(0.5))
    }

    pub fn forgotten() -> Self {
        Alpha(T::one())
    }

    pub fn value(self) -> T {
        self.0
    }
}

impl<T: fmt::Display> fmt::Display for Alpha<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Value of a degree-based edge-sum index.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct IndexValue<T>(pub T);

impl<T: Scalar> IndexValue<T> {
    pub fn value(self) -> T {
        self.0
    }

    /// `|self - other| <= rel * max(1, |self|)`.
    pub fn approx_eq(self, other: Self, rel: T) -> bool {
        (self.0 - other.0).abs() <= rel * T::one().max(self.0.abs())
    }
}

impl<T: fmt::Display> fmt::Display for IndexValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(du² + dv²)^α`, without the degree check.
#[inline]
pub(crate) fn sombor_term<T: Scalar>(du: usize, dv: usize, alpha: Alpha<T>) -> T {
    T::from_usize_exact(du * du + dv * dv).powf(alpha.0)
}

pub fn edge_contribution<T: Scalar>(
    du: usize,
    dv: usize,
    alpha: Alpha<T>,
) -> Result<T, IndexError> {
    if du == 0 || dv == 0 {
        return Err(IndexError::InvalidDegree { du, dv });
    }
    Ok(sombor_term(du, dv, alpha))
}

/// Sums `term(d(u), d(v))` over the edges in lexicographic order.
pub(crate) fn edge_sum<T: Scalar>(g: &Graph, term: impl Fn(usize, usize) -> T) -> T {
    let deg = g.degrees();
    g.edges()
        .fold(T::zero(), |acc, (u, v)| acc + term(deg[u], deg[v]))
}

pub fn general_sombor<T: Scalar>(g: &Graph, alpha: Alpha<T>) -> IndexValue<T> {
    IndexValue(edge_sum(g, |du, dv| sombor_term(du, dv, alpha)))
}

pub fn sombor<T: Scalar>(g: &Graph) -> IndexValue<T> {
    general_sombor(g, Alpha::sombor())
}

/// Forgotten index `F(G)`.
pub fn forgotten<T: Scalar>(g: &Graph) -> IndexValue<T> {
    general_sombor(g, Alpha::forgotten())
}
