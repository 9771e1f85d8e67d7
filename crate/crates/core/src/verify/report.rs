//! CSV writers for extremal and lemma reports.
//!
//! Numbers use Rust's shortest round-trip formatting, so output is
//! byte-identical across runs.

use std::io::Write;

use super::{ExtremalReport, LemmaReport};

pub const EXTREMAL_HEADER: [&str; 8] = [
    "n",
    "d",
    "alpha",
    "max_value",
    "argmax_g6",
    "predicted_g6",
    "verdict",
    "seconds",
];

pub const LEMMA_HEADER: [&str; 6] = ["lemma", "alpha", "x", "value", "status", "y"];

/// One row per report. `seconds` is left empty unless `timing` is set.
pub fn write_extremal_csv<W: Write>(
    out: W,
    reports: &[ExtremalReport],
    timing: bool,
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(EXTREMAL_HEADER)?;
    for r in reports {
        let argmax: Vec<String> = r.argmax_codes.iter().map(|c| c.to_graph6()).collect();
        let seconds = if timing {
            format!("{:.6}", r.runtime.as_secs_f64())
        } else {
            String::new()
        };
        w.write_record([
            r.n.to_string(),
            r.d.to_string(),
            r.alpha.to_string(),
            r.max_value.to_string(),
            argmax.join(";"),
            r.predicted_code.to_graph6(),
            r.verdict.to_string(),
            seconds,
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Violations, boundary points and the per-α minimum of each quantity.
pub fn write_lemma_csv<W: Write>(out: W, reports: &[LemmaReport]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(LEMMA_HEADER)?;
    for r in reports {
        for p in r.rows() {
            w.write_record([
                p.quantity.clone(),
                p.alpha.to_string(),
                p.x.to_string(),
                p.value.to_string(),
                p.status.to_string(),
                p.y.map(|y| y.to_string()).unwrap_or_default(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
