//! Named unicyclic families and the closed-form index of `U(n, d)`.
//!
//! Labeling conventions:
//! - `cycle(n)`: vertices `0..n` in cycle order.
//! - `u_graph(n, d, i)`: path `v1..vd` is `0..d`, the cycle apex `u0` is `d`,
//!   pendants `d+1..n` hang off vertex `0`. The 4-cycle is `v_i u0 v_{i+2} v_{i+1}`.
//! - `c_family(p, q, r)`: cycle `0..p`, `q` pendants on `0`, then `r` pendants on `1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::index::{Alpha, IndexValue};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0}")]
    TooSmall(String),
    #[error("{0}")]
    InvalidParameters(String),
    #[error("cannot parse family spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("cycle edges are simple"))
}

/// `U(n, d, i)`: a `d`-vertex path with a 4-cycle through `v_i, v_{i+1}, v_{i+2}`
/// and `n - d - 1` pendants at `v_1`. Has diameter `d` and girth 4.
pub fn u_graph(n: usize, d: usize, i: usize) -> Result<Graph, FamilyError> {
    if d < 3 || n < d + 2 || i < 1 || i + 2 > d {
        return Err(FamilyError::InvalidParameters(format!(
            "U(n,d,i) needs d >= 3, n >= d+2, 1 <= i <= d-2; got ({n},{d},{i})"
        )));
    }
    let apex = d;
    let mut edges: Vec<_> = (0..d - 1).map(|k| (k, k + 1)).collect();
    edges.push((i - 1, apex));
    edges.push((apex, i + 1));
    edges.extend((d + 1..n).map(|p| (0, p)));
    Ok(Graph::from_edge_list(n, &edges).expect("U(n,d,i) edges are simple"))
}

/// `C(p, q, r)`: cycle `C_p` with `q` and `r` pendants on two adjacent cycle vertices.
pub fn c_family(p: usize, q: usize, r: usize) -> Result<Graph, FamilyError> {
    if p < 3 {
        return Err(FamilyError::TooSmall(format!(
            "C(p,q,r) needs p >= 3, got p={p}"
        )));
    }
    let n = p + q + r;
    let mut edges: Vec<_> = (0..p).map(|k| (k, (k + 1) % p)).collect();
    edges.extend((p..p + q).map(|v| (0, v)));
    edges.extend((p + q..n).map(|v| (1, v)));
    Ok(Graph::from_edge_list(n, &edges).expect("C(p,q,r) edges are simple"))
}

/// Closed form of `SO_α(U(n, d))`, valid for `d >= 4`, `n >= d + 2`:
///
/// `(n-d-1)((n-d+1)²+1)^α + 2((n-d+1)²+4)^α + γ` with
/// `γ = 2·13^α + 10^α` for `d = 4` and `γ = 3·13^α + (d-5)·8^α + 5^α` for `d >= 5`.
pub fn closed_form_u<T: Scalar>(
    n: usize,
    d: usize,
    alpha: Alpha<T>,
) -> Result<IndexValue<T>, FamilyError> {
    if d < 4 || n < d + 2 {
        return Err(FamilyError::InvalidParameters(format!(
            "closed form covers d >= 4 and n >= d+2; got n={n}, d={d}"
        )));
    }
    let a = alpha.value();
    let pw = |base: usize| T::from_usize_exact(base).powf(a);
    let k = T::from_usize_exact;
    let hub = n - d + 1;
    let gamma = if d == 4 {
        k(2) * pw(13) + pw(10)
    } else {
        k(3) * pw(13) + k(d - 5) * pw(8) + pw(5)
    };
    Ok(IndexValue(
        k(n - d - 1) * pw(hub * hub + 1) + k(2) * pw(hub * hub + 4) + gamma,
    ))
}

/// A family member as written on the command line: `C:n`, `U:n,d,i` or `CF:p,q,r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle { n: usize },
    U { n: usize, d: usize, i: usize },
    CFamily { p: usize, q: usize, r: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::U { n, d, i } => u_graph(n, d, i),
            FamilySpec::CFamily { p, q, r } => c_family(p, q, r),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle { n } => write!(f, "C:{n}"),
            FamilySpec::U { n, d, i } => write!(f, "U:{n},{d},{i}"),
            FamilySpec::CFamily { p, q, r } => write!(f, "CF:{p},{q},{r}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| FamilyError::Parse {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (kind, args) = s.trim().split_once(':').ok_or_else(|| err("missing ':'"))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("parameters must be non-negative integers"))?;
        match (kind.trim(), nums.as_slice()) {
            ("C", &[n]) => Ok(FamilySpec::Cycle { n }),
            ("U", &[n, d, i]) => Ok(FamilySpec::U { n, d, i }),
            ("CF", &[p, q, r]) => Ok(FamilySpec::CFamily { p, q, r }),
            ("C", _) => Err(err("C takes one parameter")),
            ("U", _) | ("CF", _) => Err(err("expected three parameters")),
            _ => Err(err("kind must be C, U or CF")),
        }
    }
}
