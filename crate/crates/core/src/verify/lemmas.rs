use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::analytic;
use super::grid::{classify, Grid, Status};
use super::VerifyError;

/// The analytic claims that can be grid-checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `(x²+y²)^α <= (1+(x-1+y)²)^α` for `x, y >= 1`, `α > 0`.
    L1,
    /// `(x²+9)^α - (x²+4)^α` decreasing for `x > 0`.
    L5,
    /// `f1`, `f2` strictly increasing for `x >= 1`.
    L6,
    /// The pendant-shift function strictly increasing for `x >= 3`.
    L7,
    /// `g(x) > 0` for `x >= 1`.
    GPos,
    /// `h(x) > 0` for `x >= 3`.
    HPos,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::L1,
        LemmaId::L5,
        LemmaId::L6,
        LemmaId::L7,
        LemmaId::GPos,
        LemmaId::HPos,
    ];

    fn x_min(self) -> (f64, bool) {
        match self {
            LemmaId::L1 | LemmaId::L6 | LemmaId::GPos => (1.0, true),
            LemmaId::L5 => (0.0, false),
            LemmaId::L7 | LemmaId::HPos => (3.0, true),
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaId::L1 => "L1",
            LemmaId::L5 => "L5",
            LemmaId::L6 => "L6",
            LemmaId::L7 => "L7",
            LemmaId::GPos => "gpos",
            LemmaId::HPos => "hpos",
        })
    }
}

impl FromStr for LemmaId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| VerifyError::UnknownLemma(s.to_string()))
    }
}

/// Default `(alpha_grid, x_grid)` for each claim.
pub fn default_grids(id: LemmaId) -> (Grid, Grid) {
    let g = |a, b, s| Grid::new(a, b, s).expect("static grid");
    let unit_alpha = g(0.02, 0.98, 0.02);
    match id {
        LemmaId::L1 => (g(0.1, 2.0, 0.1), g(1.0, 50.0, 0.5)),
        LemmaId::L5 => (unit_alpha, g(0.1, 50.0, 0.1)),
        LemmaId::L6 | LemmaId::GPos => (unit_alpha, g(1.0, 50.0, 0.02)),
        LemmaId::L7 | LemmaId::HPos => (unit_alpha, g(3.0, 50.0, 0.02)),
    }
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    /// Which quantity: the lemma id, or `L6:f1` / `L6:f2`.
    pub quantity: String,
    pub alpha: f64,
    pub x: f64,
    /// Second coordinate, only for the two-dimensional L1 grid.
    pub y: Option<f64>,
    pub value: f64,
    pub status: Status,
}

#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub alpha_grid: Grid,
    pub x_grid: Grid,
    pub points_checked: usize,
    pub violations: Vec<GridPoint>,
    pub boundary: Vec<GridPoint>,
    /// Smallest `|value|` seen anywhere on the grid.
    pub min_margin: f64,
    /// For every quantity and α, the point closest to failing.
    pub alpha_minima: Vec<GridPoint>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations, boundary points and per-α minima, sorted and deduplicated.
    pub fn rows(&self) -> Vec<GridPoint> {
        let mut rows: Vec<GridPoint> = self
            .violations
            .iter()
            .chain(&self.boundary)
            .chain(&self.alpha_minima)
            .cloned()
            .collect();
        rows.sort_by(|a, b| {
            (&a.quantity, a.alpha, a.x, a.y)
                .partial_cmp(&(&b.quantity, b.alpha, b.x, b.y))
                .expect("grid coordinates are finite")
        });
        rows.dedup_by(|a, b| {
            a.quantity == b.quantity && a.alpha == b.alpha && a.x == b.x && a.y == b.y
        });
        rows
    }
}

/// Sign a quantity must have on the grid.
#[derive(Clone, Copy)]
enum Sense {
    NonNegative,
    Negative,
    Positive,
}

impl Sense {
    fn orient(self, value: f64) -> f64 {
        match self {
            Sense::Negative => -value,
            Sense::NonNegative | Sense::Positive => value,
        }
    }
}

fn validate(id: LemmaId, alpha: &Grid, x: &Grid) -> Result<(), VerifyError> {
    let (x_min, inclusive) = id.x_min();
    let x_ok = if inclusive {
        x.start >= x_min
    } else {
        x.start > x_min
    };
    if !x_ok {
        let rel = if inclusive { ">=" } else { ">" };
        return Err(VerifyError::BadGrid(format!(
            "{id} needs x {rel} {x_min}, grid starts at {}",
            x.start
        )));
    }
    if alpha.start <= 0.0 {
        return Err(VerifyError::BadGrid(format!("{id} needs alpha > 0")));
    }
    if id != LemmaId::L1 && alpha.last() >= 1.0 {
        return Err(VerifyError::BadGrid(format!("{id} needs alpha < 1")));
    }
    Ok(())
}

/// Evaluates every quantity of one α row.
fn row(id: LemmaId, a: f64, xs: &[f64]) -> Vec<GridPoint> {
    let point = |quantity: &str, x: f64, y: Option<f64>, value: f64, sense: Sense| GridPoint {
        quantity: quantity.to_string(),
        alpha: a,
        x,
        y,
        value,
        status: classify(sense.orient(value)),
    };
    let increments = |name: &str, f: &dyn Fn(f64) -> f64, sense: Sense| -> Vec<GridPoint> {
        let values: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        xs.windows(2)
            .zip(values.windows(2))
            .map(|(x, v)| point(name, x[0], None, v[1] - v[0], sense))
            .collect()
    };
    match id {
        LemmaId::L1 => xs
            .iter()
            .flat_map(|&x| xs.iter().map(move |&y| (x, y, analytic::l1_gap(x, y, a))))
            .map(|(x, y, v)| point("L1", x, Some(y), v, Sense::NonNegative))
            .collect(),
        LemmaId::L5 => increments("L5", &|x| analytic::l5_f(x, a), Sense::Negative),
        LemmaId::L6 => {
            let mut out = increments("L6:f1", &|x| analytic::l6_f1(x, a), Sense::Positive);
            out.extend(increments(
                "L6:f2",
                &|x| analytic::l6_f2(x, a),
                Sense::Positive,
            ));
            out
        }
        LemmaId::L7 => increments("L7", &|x| analytic::l7_f(x, a), Sense::Positive),
        LemmaId::GPos => xs
            .iter()
            .map(|&x| point("gpos", x, None, analytic::g(x, a), Sense::Positive))
            .collect(),
        LemmaId::HPos => xs
            .iter()
            .map(|&x| point("hpos", x, None, analytic::h(x, a), Sense::Positive))
            .collect(),
    }
}

/// Checks one claim at every grid point.
///
/// Monotonicity claims are checked through forward differences between
/// consecutive x points (step = grid step); sign claims pointwise.
pub fn check_lemma(
    id: LemmaId,
    alpha_grid: Grid,
    x_grid: Grid,
) -> Result<LemmaReport, VerifyError> {
    validate(id, &alpha_grid, &x_grid)?;
    let xs = x_grid.points();
    let sense_of = |q: &str| if q == "L5" { -1.0 } else { 1.0 };
    let rows: Vec<Vec<GridPoint>> = alpha_grid
        .points()
        .into_par_iter()
        .map(|a| row(id, a, &xs))
        .collect();

    let mut report = LemmaReport {
        lemma: id,
        alpha_grid,
        x_grid,
        points_checked: 0,
        violations: Vec::new(),
        boundary: Vec::new(),
        min_margin: f64::INFINITY,
        alpha_minima: Vec::new(),
    };
    for points in rows {
        report.points_checked += points.len();
        let mut minima: Vec<GridPoint> = Vec::new();
        for p in points {
            report.min_margin = report.min_margin.min(p.value.abs());
            match p.status {
                Status::Violation => report.violations.push(p.clone()),
                Status::Boundary => report.boundary.push(p.clone()),
                Status::Pass => {}
            }
            let oriented = sense_of(&p.quantity) * p.value;
            match minima.iter_mut().find(|m| m.quantity == p.quantity) {
                Some(m) if sense_of(&m.quantity) * m.value > oriented => *m = p,
                Some(_) => {}
                None => minima.push(p),
            }
        }
        report.alpha_minima.extend(minima);
    }
    Ok(report)
}
