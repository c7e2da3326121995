//! Inverse design: pick link length, lever arm, and spring tension so the
//! probe delivers a target contact force over a required stroke and still
//! fits through the deployment hole in the ice.
//!
//! The search space is small enough (millimeter grid over centimeter-scale
//! bounds, a handful of catalog spring tensions) that exhaustive evaluation
//! is both tractable and the easiest thing to trust: [`solve_design`]
//! streams over the full grid keeping the best candidate, and
//! [`brute_force_design`] materializes and sorts the same grid as an
//! independent cross-check. Both must agree exactly, tie-breaks included.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::units::newtons_to_gram_force;

/// What the mechanism must achieve and what it may occupy.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignSpec {
    /// Target ideal contact force, Newtons.
    pub target_force: f64,
    /// Required endpoint height range (min, max), meters.
    pub stroke: (f64, f64),
    /// Diameter of the deployment hole the folded mechanism must pass,
    /// meters.
    pub envelope_diameter: f64,
    /// Catalog of available constant-force spring tensions, Newtons.
    pub tensions: Vec<f64>,
    /// Bounds on the (equal) link length l1 = l2, meters.
    pub link_bounds: (f64, f64),
    /// Bounds on the lever arm r, meters.
    pub lever_bounds: (f64, f64),
    /// Clearance added to the folded footprint, meters.
    pub margin: f64,
    /// Lowest usable height as a fraction of the full stroke 2*l1.
    pub min_height_fraction: f64,
    /// Grid step over both length bounds, meters.
    pub resolution: f64,
    /// Acceptable relative deviation of achieved force from target.
    pub force_tolerance: f64,
}

impl DesignSpec {
    /// Spec with the default margin (0.02 m), minimum-height fraction
    /// (0.05), grid resolution (1 mm), and force tolerance (±2%).
    pub fn new(
        target_force: f64,
        stroke: (f64, f64),
        envelope_diameter: f64,
        tensions: Vec<f64>,
        link_bounds: (f64, f64),
        lever_bounds: (f64, f64),
    ) -> Self {
        Self {
            target_force,
            stroke,
            envelope_diameter,
            tensions,
            link_bounds,
            lever_bounds,
            margin: 0.02,
            min_height_fraction: 0.05,
            resolution: 0.001,
            force_tolerance: 0.02,
        }
    }

    /// Check field ranges; call before solving.
    pub fn validate(&self) -> Result<()> {
        if !self.target_force.is_finite() || self.target_force < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "target force must be nonnegative and finite, got {}",
                self.target_force
            )));
        }
        let (stroke_min, stroke_max) = self.stroke;
        if !(stroke_min.is_finite() && stroke_max.is_finite() && 0.0 < stroke_min) {
            return Err(Error::InvalidParameter(format!(
                "stroke bounds must be positive and finite, got ({stroke_min}, {stroke_max})"
            )));
        }
        if stroke_min >= stroke_max {
            return Err(Error::InvalidParameter(format!(
                "stroke min must be below stroke max, got ({stroke_min}, {stroke_max})"
            )));
        }
        if !(self.envelope_diameter > 0.0 && self.envelope_diameter.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "envelope diameter must be positive and finite, got {}",
                self.envelope_diameter
            )));
        }
        if self.tensions.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one spring tension is required".into(),
            ));
        }
        for &tension in &self.tensions {
            if !tension.is_finite() || tension < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "spring tensions must be nonnegative and finite, got {tension}"
                )));
            }
        }
        for (name, (low, high)) in [("link", self.link_bounds), ("lever", self.lever_bounds)] {
            if !(low.is_finite() && high.is_finite() && low > 0.0 && low <= high) {
                return Err(Error::InvalidParameter(format!(
                    "{name} bounds must be positive, finite, and ordered, got ({low}, {high})"
                )));
            }
        }
        if !(self.resolution > 0.0 && self.resolution.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid resolution must be positive and finite, got {}",
                self.resolution
            )));
        }
        if !self.margin.is_finite() || self.margin < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "margin must be nonnegative and finite, got {}",
                self.margin
            )));
        }
        if !(0.0..1.0).contains(&self.min_height_fraction) {
            return Err(Error::InvalidParameter(format!(
                "min_height_fraction must be in [0, 1), got {}",
                self.min_height_fraction
            )));
        }
        if !self.force_tolerance.is_finite() || self.force_tolerance < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "force tolerance must be nonnegative and finite, got {}",
                self.force_tolerance
            )));
        }
        Ok(())
    }
}

/// One evaluated design candidate, feasible or not.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignSolution {
    /// Link length l1 = l2, meters.
    #[serde(rename = "l_m")]
    pub link_length: f64,
    /// Lever arm, meters.
    #[serde(rename = "r_m")]
    pub lever_arm: f64,
    /// Spring tension, Newtons.
    #[serde(rename = "tension_n")]
    pub tension: f64,
    /// Ideal contact force of this candidate, Newtons.
    #[serde(rename = "achieved_force_n")]
    pub achieved_force: f64,
    /// Same force in gram-force, for bench comparison.
    #[serde(rename = "achieved_force_gf")]
    pub achieved_force_gf: f64,
    /// Folded footprint diameter `max(l1,l2) + r + margin`, meters.
    #[serde(rename = "footprint_m")]
    pub footprint: f64,
    /// True when every constraint is satisfied.
    pub feasible: bool,
    /// The constraints this candidate violates (empty when feasible).
    pub violations: Vec<String>,
}

impl DesignSolution {
    /// Sort key implementing the selection rule: smallest footprint, then
    /// smallest lever arm, link length, and tension. Violation count leads
    /// so that infeasible searches surface the least-violating candidate.
    fn rank(&self) -> (usize, f64, f64, f64, f64) {
        (
            self.violations.len(),
            self.footprint,
            self.lever_arm,
            self.link_length,
            self.tension,
        )
    }

    fn ranks_before(&self, other: &Self) -> bool {
        let (an, a1, a2, a3, a4) = self.rank();
        let (bn, b1, b2, b3, b4) = other.rank();
        (an, [a1, a2, a3, a4]) < (bn, [b1, b2, b3, b4])
    }
}

/// Lever arm delivering `f_o` from input force `f_i` through links of
/// length `l2`: the transmission law solved for r.
pub fn solve_lever(f_o: f64, f_i: f64, l2: f64) -> Result<f64> {
    if !f_o.is_finite() || f_o < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "target force must be nonnegative and finite, got {f_o}"
        )));
    }
    if !(l2 > 0.0 && l2.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "link length must be positive and finite, got {l2}"
        )));
    }
    if !f_i.is_finite() || f_i < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "input force must be nonnegative and finite, got {f_i}"
        )));
    }
    if f_i == 0.0 {
        return Err(Error::Infeasible(format!(
            "no lever arm can reach {f_o} N from zero input force"
        )));
    }
    Ok(2.0 * l2 * f_o / f_i)
}

/// Grid values `min + k*resolution` for every k keeping the value within
/// the bounds. The upper bound is included only when it lies on the grid.
pub fn grid_points(min: f64, max: f64, resolution: f64) -> Vec<f64> {
    let count = ((max - min) / resolution + 1e-9).floor() as usize;
    (0..=count).map(|k| min + k as f64 * resolution).collect()
}

/// Evaluate one candidate against the spec's constraints.
pub fn check_candidate(
    spec: &DesignSpec,
    link_length: f64,
    lever_arm: f64,
    tension: f64,
) -> DesignSolution {
    let reach = 2.0 * link_length;
    let min_height = spec.min_height_fraction * reach;
    let footprint = link_length + lever_arm + spec.margin;
    let achieved_force = tension * lever_arm / (2.0 * link_length);

    let mut violations = Vec::new();
    if spec.stroke.1 > reach {
        violations.push(format!(
            "stroke max {:.4} m exceeds reach 2*l1 = {:.4} m",
            spec.stroke.1, reach
        ));
    }
    if spec.stroke.0 < min_height {
        violations.push(format!(
            "stroke min {:.4} m below minimum usable height {:.4} m",
            spec.stroke.0, min_height
        ));
    }
    if footprint > spec.envelope_diameter {
        violations.push(format!(
            "footprint {:.4} m exceeds envelope diameter {:.4} m",
            footprint, spec.envelope_diameter
        ));
    }
    if (achieved_force - spec.target_force).abs() > spec.force_tolerance * spec.target_force {
        violations.push(format!(
            "achieved force {:.5} N outside ±{:.1}% of target {:.5} N",
            achieved_force,
            spec.force_tolerance * 100.0,
            spec.target_force
        ));
    }

    DesignSolution {
        link_length,
        lever_arm,
        tension,
        achieved_force,
        achieved_force_gf: newtons_to_gram_force(achieved_force),
        footprint,
        feasible: violations.is_empty(),
        violations,
    }
}

/// Search the full parameter grid for the best feasible design.
///
/// Selection: smallest folded footprint, ties broken by smallest lever arm,
/// then link length, then tension. When nothing is feasible, the returned
/// solution has `feasible = false` and carries the violations of the
/// closest candidate (fewest violations, same tie-break) — infeasibility is
/// an answer, not an error.
pub fn solve_design(spec: &DesignSpec) -> Result<DesignSolution> {
    spec.validate()?;
    let links = grid_points(spec.link_bounds.0, spec.link_bounds.1, spec.resolution);
    let levers = grid_points(spec.lever_bounds.0, spec.lever_bounds.1, spec.resolution);

    let mut best: Option<DesignSolution> = None;
    for &link_length in &links {
        for &lever_arm in &levers {
            for &tension in &spec.tensions {
                let candidate = check_candidate(spec, link_length, lever_arm, tension);
                let better = match &best {
                    None => true,
                    Some(current) => candidate.ranks_before(current),
                };
                if better {
                    best = Some(candidate);
                }
            }
        }
    }
    // The grid always has at least one cell (bounds validated nonempty).
    Ok(best.expect("validated grid is nonempty"))
}

/// Independent cross-check of [`solve_design`]: materialize every candidate,
/// sort by the selection rule, and take the first. Equal output (including
/// tie-breaks) is asserted by tests and by the CLI's exhaustive-check flag.
pub fn brute_force_design(spec: &DesignSpec) -> Result<DesignSolution> {
    spec.validate()?;
    let links = grid_points(spec.link_bounds.0, spec.link_bounds.1, spec.resolution);
    let levers = grid_points(spec.lever_bounds.0, spec.lever_bounds.1, spec.resolution);

    let mut candidates = Vec::with_capacity(links.len() * levers.len() * spec.tensions.len());
    for &link_length in &links {
        for &lever_arm in &levers {
            for &tension in &spec.tensions {
                candidates.push(check_candidate(spec, link_length, lever_arm, tension));
            }
        }
    }
    candidates.sort_by(|a, b| {
        let (an, a1, a2, a3, a4) = a.rank();
        let (bn, b1, b2, b3, b4) = b.rank();
        (an, [a1, a2, a3, a4])
            .partial_cmp(&(bn, [b1, b2, b3, b4]))
            .expect("finite ranks")
    });
    Ok(candidates.into_iter().next().expect("nonempty grid"))
}
