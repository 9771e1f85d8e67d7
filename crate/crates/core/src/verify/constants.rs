use crate::scalar::Scalar;

use super::grid::{classify, Grid, Status};
use super::VerifyError;

/// A sign condition `Σ coef · base^α < 0` used as a step in an extremal argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProofConstant {
    pub id: &'static str,
    /// `(coefficient, base)` pairs.
    pub terms: &'static [(f64, f64)],
    /// Upper end of the α range on which the expression is claimed negative.
    pub valid_below: f64,
    /// Largest α on the default check grid.
    pub default_check_max: f64,
    /// Claimed sign change, if one is stated.
    pub stated_root: Option<f64>,
}

impl ProofConstant {
    pub fn eval<T: Scalar>(&self, alpha: T) -> T {
        self.terms.iter().fold(T::zero(), |acc, &(c, b)| {
            acc + T::lit(c) * T::lit(b).powf(alpha)
        })
    }

    /// The expression as text, e.g. `8^a - 13^a + 20^a - 17^a`.
    pub fn expression(&self) -> String {
        let mut out = String::new();
        for (k, &(c, b)) in self.terms.iter().enumerate() {
            let sign = if c < 0.0 { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => out.push('-'),
                (0, _) => {}
                _ => {
                    out.push(' ');
                    out.push_str(sign);
                    out.push(' ');
                }
            }
            let mag = c.abs();
            if mag != 1.0 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&format!("{b}^a"));
        }
        out
    }
}

const fn unit(id: &'static str, terms: &'static [(f64, f64)]) -> ProofConstant {
    ProofConstant {
        id,
        terms,
        valid_below: 1.0,
        default_check_max: 0.999,
        stated_root: None,
    }
}

pub const CATALOG: &[ProofConstant] = &[
    ProofConstant {
        id: "subcase22",
        terms: &[(1.0, 8.0), (-1.0, 13.0), (1.0, 20.0), (-1.0, 17.0)],
        valid_below: 1.90056,
        default_check_max: 1.9,
        stated_root: Some(1.90056),
    },
    unit(
        "lemma3odd",
        &[
            (2.0, 8.0),
            (-2.0, 13.0),
            (1.0, 8.0),
            (-1.0, 18.0),
            (2.0, 8.0),
            (-2.0, 10.0),
        ],
    ),
    unit(
        "prop2",
        &[
            (1.0, 10.0),
            (-1.0, 5.0),
            (2.0, 13.0),
            (2.0, 8.0),
            (-3.0, 20.0),
            (-1.0, 17.0),
        ],
    ),
    unit("thm1case1", &[(2.0, 8.0), (-1.0, 10.0), (-1.0, 18.0)]),
    unit(
        "thm1claim2a",
        &[(1.0, 18.0), (-1.0, 13.0), (1.0, 5.0), (-1.0, 10.0)],
    ),
    unit("thm1claim2b", &[(1.0, 18.0), (1.0, 8.0), (-2.0, 13.0)]),
    unit(
        "claim3case1",
        &[(1.0, 13.0), (-1.0, 18.0), (1.0, 8.0), (-1.0, 10.0)],
    ),
    unit("claim3case2", &[(2.0, 8.0), (-2.0, 10.0)]),
    unit("claim4case1", &[(1.0, 18.0), (-1.0, 20.0)]),
    unit(
        "claim4case2",
        &[
            (2.0, 10.0),
            (-2.0, 17.0),
            (2.0, 13.0),
            (-2.0, 20.0),
            (1.0, 10.0),
            (-1.0, 5.0),
        ],
    ),
];

pub fn lookup_constant(id: &str) -> Result<&'static ProofConstant, VerifyError> {
    CATALOG
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| VerifyError::UnknownConstant(id.to_string()))
}

#[derive(Debug, Clone)]
pub struct ConstantReport {
    pub constant: &'static ProofConstant,
    pub grid: Grid,
    pub points_checked: usize,
    /// `(α, value)` where the value is not negative.
    pub violations: Vec<(f64, f64)>,
    pub boundary: Vec<(f64, f64)>,
    /// Largest value on the grid, i.e. the one closest to breaking the claim.
    pub max_value: (f64, f64),
    /// Located sign change, for constants that state one.
    pub sign_change: Option<f64>,
}

impl ConstantReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Bisects for a root of `c` in `[lo, hi]`; `None` unless the ends differ in sign.
pub fn locate_sign_change(c: &ProofConstant, lo: f64, hi: f64, tol: f64) -> Option<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let f_lo = c.eval(lo);
    if f_lo.signum() == c.eval(hi).signum() || tol.is_nan() || tol <= 0.0 {
        return None;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if c.eval(mid).signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Checks negativity of a catalog constant on `step, 2·step, ..., alpha_max`.
///
/// `alpha_max` defaults to the constant's own check range and must stay below
/// the end of its stated validity; `step` defaults to `1e-3`.
pub fn check_constant(
    id: &str,
    alpha_max: Option<f64>,
    step: Option<f64>,
) -> Result<ConstantReport, VerifyError> {
    let constant = lookup_constant(id)?;
    let step = step.unwrap_or(1e-3);
    let top = alpha_max.unwrap_or(constant.default_check_max);
    if top.is_nan() || top <= 0.0 || top >= constant.valid_below {
        return Err(VerifyError::BadGrid(format!(
            "{} is claimed negative only for 0 < alpha < {}, got alpha_max {top}",
            constant.id, constant.valid_below
        )));
    }
    let grid = Grid::new(step, top, step)?;
    let mut report = ConstantReport {
        constant,
        grid,
        points_checked: 0,
        violations: Vec::new(),
        boundary: Vec::new(),
        max_value: (f64::NAN, f64::NEG_INFINITY),
        sign_change: None,
    };
    for a in grid.points() {
        let v = constant.eval(a);
        report.points_checked += 1;
        match classify(-v) {
            Status::Violation => report.violations.push((a, v)),
            Status::Boundary => report.boundary.push((a, v)),
            Status::Pass => {}
        }
        if v > report.max_value.1 {
            report.max_value = (a, v);
        }
    }
    report.sign_change = constant
        .stated_root
        .and_then(|_| locate_sign_change(constant, 1.5, 2.5, 1e-10));
    Ok(report)
}
