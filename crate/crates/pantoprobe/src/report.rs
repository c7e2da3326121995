//! Serialization of results to CSV and JSON.
//!
//! Numbers are written with Rust's shortest-round-trip float formatting, so
//! identical runs serialize to byte-identical files; the gram-force column
//! is rounded to six significant digits as a bench-readable convenience.

use crate::contact::{DwellReport, SimStep};
use crate::design::DesignSolution;
use crate::statics::SweepResult;
use crate::units::{format_significant, newtons_to_gram_force};

/// Header of the sweep CSV.
pub const SWEEP_CSV_HEADER: &str = "height_m,theta1_rad,force_ideal_N,force_lossy_N,force_lossy_gf";

/// Header of the simulation time-series CSV.
pub const TIMESERIES_CSV_HEADER: &str = "t_s,gap_m,theta1_rad,force_N,in_band";

/// Render a sweep as CSV, one row per height.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::with_capacity(64 * (result.rows.len() + 1));
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in &result.rows {
        let gram_force = format_significant(newtons_to_gram_force(row.force_lossy), 6);
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.height, row.theta1, row.force_ideal, row.force_lossy, gram_force
        ));
    }
    out
}

/// Render a simulation trace as CSV, one row per timestep. The pose column
/// is empty on out-of-reach steps.
pub fn timeseries_csv(steps: &[SimStep]) -> String {
    let mut out = String::with_capacity(48 * (steps.len() + 1));
    out.push_str(TIMESERIES_CSV_HEADER);
    out.push('\n');
    for step in steps {
        out.push_str(&format!("{},{},", step.t, step.gap));
        if let Some(theta1) = step.theta1 {
            out.push_str(&format!("{theta1}"));
        }
        out.push_str(&format!(",{},{}\n", step.force, step.in_band));
    }
    out
}

/// Render a dwell report as pretty-printed JSON.
pub fn dwell_json(report: &DwellReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("dwell report serializes");
    text.push('\n');
    text
}

/// Render a design solution as pretty-printed JSON.
pub fn design_json(solution: &DesignSolution) -> String {
    let mut text = serde_json::to_string_pretty(solution).expect("design solution serializes");
    text.push('\n');
    text
}
