//! Quasi-static contact simulation: the probe pressing on an uneven, rigid
//! surface while the vehicle underneath heaves and drifts.
//!
//! Because the linkage is light and spring-driven, no dynamics are modeled:
//! at every instant the probe endpoint either rests exactly on the surface
//! (when the gap is within the stroke), floats at full extension (surface
//! out of reach), or bottoms out at the minimum-stroke pose (surface too
//! close). The contact force then follows directly from the force law at
//! that pose, which is what makes the constant-force property visible: as
//! long as the surface stays within the stroke, the force barely moves.
//!
//! The simulation answers the operational question "does the probe hold an
//! in-band contact force long enough for a measurement?" — summarized per
//! run in a [`DwellReport`].

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::linkage::PantographConfig;
use crate::statics::{
    lossy_output_force_with_rng, spring_probe_force, LossModel, MotionDirection, SpringModel,
};

/// Fraction of the full stroke treated as the mechanical bottom stop: gaps
/// below `MIN_STROKE_FRACTION * (l1 + l2)` saturate rather than error.
pub const MIN_STROKE_FRACTION: f64 = 0.05;

/// Shared piecewise-linear interpolation with constant extrapolation beyond
/// the first/last knot.
fn interpolate(points: &[(f64, f64)], x: f64) -> f64 {
    let first = points[0];
    let last = points[points.len() - 1];
    if x <= first.0 {
        return first.1;
    }
    if x >= last.0 {
        return last.1;
    }
    // partition_point finds the first knot strictly right of x; the two
    // guards above ensure both neighbors exist.
    let hi = points.partition_point(|&(px, _)| px <= x);
    let (x0, y0) = points[hi - 1];
    let (x1, y1) = points[hi];
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

fn check_knots(what: &str, points: &[(f64, f64)]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "{what} needs at least one point"
        )));
    }
    for &(x, y) in points {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "{what} points must be finite, got ({x}, {y})"
            )));
        }
    }
    for pair in points.windows(2) {
        if pair[1].0 <= pair[0].0 {
            return Err(Error::InvalidParameter(format!(
                "{what} positions must be strictly increasing, got {} after {}",
                pair[1].0, pair[0].0
            )));
        }
    }
    Ok(())
}

/// Ice-surface height versus horizontal position: piecewise linear between
/// knots, constant beyond the ends.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceProfile {
    points: Vec<(f64, f64)>,
}

impl SurfaceProfile {
    /// Build a profile from (position, height) knots with strictly
    /// increasing positions.
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        check_knots("surface profile", &points)?;
        Ok(Self { points })
    }

    /// A flat surface at the given height.
    pub fn flat(height: f64) -> Result<Self> {
        Self::new(vec![(0.0, height)])
    }

    /// Surface height above the reference plane at a horizontal position.
    pub fn height_at(&self, x: f64) -> f64 {
        interpolate(&self.points, x)
    }
}

/// Vertical offset law of the vehicle base over time.
#[derive(Debug, Clone, PartialEq)]
pub enum HeaveKind {
    /// Fixed offset.
    Constant {
        /// Offset, meters.
        offset: f64,
    },
    /// `mean + amplitude * sin(2*pi*t/period + phase)`.
    Sinusoid {
        /// Mean offset, meters.
        mean: f64,
        /// Amplitude, meters.
        amplitude: f64,
        /// Period, seconds.
        period: f64,
        /// Phase, radians.
        phase: f64,
    },
    /// Recorded (time, offset) samples, linearly interpolated and clamped
    /// beyond the ends.
    Samples {
        /// Samples with strictly increasing times.
        points: Vec<(f64, f64)>,
    },
}

/// Vehicle base motion: vertical heave plus constant horizontal drift.
#[derive(Debug, Clone, PartialEq)]
pub struct HeaveTrajectory {
    kind: HeaveKind,
    drift_speed: f64,
}

impl HeaveTrajectory {
    /// No heave at all (offset zero, no drift).
    pub fn still() -> Self {
        Self {
            kind: HeaveKind::Constant { offset: 0.0 },
            drift_speed: 0.0,
        }
    }

    /// Constant vertical offset.
    pub fn constant(offset: f64) -> Result<Self> {
        if !offset.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "heave offset must be finite, got {offset}"
            )));
        }
        Ok(Self {
            kind: HeaveKind::Constant { offset },
            drift_speed: 0.0,
        })
    }

    /// Sinusoidal heave.
    pub fn sinusoid(mean: f64, amplitude: f64, period: f64, phase: f64) -> Result<Self> {
        for (name, value) in [("mean", mean), ("amplitude", amplitude), ("phase", phase)] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "heave {name} must be finite, got {value}"
                )));
            }
        }
        if !(period > 0.0 && period.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "heave period must be positive and finite, got {period}"
            )));
        }
        Ok(Self {
            kind: HeaveKind::Sinusoid {
                mean,
                amplitude,
                period,
                phase,
            },
            drift_speed: 0.0,
        })
    }

    /// Heave from recorded (time, offset) samples.
    pub fn from_samples(points: Vec<(f64, f64)>) -> Result<Self> {
        check_knots("heave samples", &points)?;
        Ok(Self {
            kind: HeaveKind::Samples { points },
            drift_speed: 0.0,
        })
    }

    /// Add a constant horizontal drift speed, m/s.
    pub fn with_drift(mut self, speed: f64) -> Result<Self> {
        if !speed.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "drift speed must be finite, got {speed}"
            )));
        }
        self.drift_speed = speed;
        Ok(self)
    }

    /// The vertical offset law.
    pub fn kind(&self) -> &HeaveKind {
        &self.kind
    }

    /// Horizontal drift speed, m/s.
    pub fn drift_speed(&self) -> f64 {
        self.drift_speed
    }

    /// Vertical offset of the vehicle base at time `t`.
    pub fn offset_at(&self, t: f64) -> f64 {
        match &self.kind {
            HeaveKind::Constant { offset } => *offset,
            HeaveKind::Sinusoid {
                mean,
                amplitude,
                period,
                phase,
            } => mean + amplitude * (TAU * t / period + phase).sin(),
            HeaveKind::Samples { points } => interpolate(points, t),
        }
    }

    /// Horizontal position of the vehicle base at time `t`.
    pub fn position_at(&self, t: f64) -> f64 {
        self.drift_speed * t
    }
}

/// Acceptable contact-force window for a measurement, Newtons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ForceBand {
    /// Lower edge, Newtons.
    #[serde(rename = "low_n")]
    pub low: f64,
    /// Upper edge, Newtons.
    #[serde(rename = "high_n")]
    pub high: f64,
}

impl ForceBand {
    /// Symmetric band of `fraction` around `nominal` (e.g. 0.1 for ±10%).
    pub fn around(nominal: f64, fraction: f64) -> Self {
        Self {
            low: nominal * (1.0 - fraction),
            high: nominal * (1.0 + fraction),
        }
    }

    /// Check field ranges; call at configuration boundaries.
    pub fn validate(&self) -> Result<()> {
        if !self.low.is_finite() || !self.high.is_finite() || self.low < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "force band must be finite and nonnegative, got ({}, {})",
                self.low, self.high
            )));
        }
        if self.low > self.high {
            return Err(Error::InvalidParameter(format!(
                "force band low {} exceeds high {}",
                self.low, self.high
            )));
        }
        Ok(())
    }

    /// Whether a force lies inside the band (inclusive).
    pub fn contains(&self, force: f64) -> bool {
        self.low <= force && force <= self.high
    }
}

/// Time stepping and measurement parameters of a simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationSettings {
    /// Simulated duration, seconds.
    pub duration: f64,
    /// Fixed timestep, seconds. Events shorter than one step are invisible.
    pub dt: f64,
    /// In-band window for dwell accounting.
    pub band: ForceBand,
    /// Continuous in-band time needed for a valid measurement, seconds.
    pub required_dwell: f64,
}

impl SimulationSettings {
    /// Check field ranges; call at configuration boundaries.
    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "dt must be positive and finite, got {}",
                self.dt
            )));
        }
        if !(self.duration >= self.dt && self.duration.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "duration must be at least one timestep, got {} with dt {}",
                self.duration, self.dt
            )));
        }
        if !self.required_dwell.is_finite() || self.required_dwell < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "required_dwell must be nonnegative and finite, got {}",
                self.required_dwell
            )));
        }
        self.band.validate()
    }

    fn step_count(&self) -> usize {
        (self.duration / self.dt).round() as usize
    }
}

/// Pose and force of one quasi-static contact solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactSample {
    /// Contact force, Newtons; zero when the surface is out of reach.
    pub force: f64,
    /// Joint angle of the contact pose; `None` when out of reach.
    pub theta1: Option<f64>,
    /// True when the probe bottomed out at the minimum-stroke pose.
    pub saturated: bool,
}

/// One simulated timestep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimStep {
    /// Time, seconds.
    pub t: f64,
    /// Surface-to-base gap, meters.
    pub gap: f64,
    /// Contact pose; `None` when out of reach.
    pub theta1: Option<f64>,
    /// Contact force, Newtons.
    pub force: f64,
    /// Whether the force lies in the measurement band.
    pub in_band: bool,
    /// Whether the probe bottomed out this step.
    pub saturated: bool,
}

/// A maximal interval of nonzero contact force.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContactEvent {
    /// Event start, seconds.
    #[serde(rename = "start_s")]
    pub start: f64,
    /// Event end, seconds.
    #[serde(rename = "end_s")]
    pub end: f64,
    /// Smallest force during the event, Newtons.
    #[serde(rename = "min_force_n")]
    pub min_force: f64,
    /// Largest force during the event, Newtons.
    #[serde(rename = "max_force_n")]
    pub max_force: f64,
    /// Mean force during the event, Newtons.
    #[serde(rename = "mean_force_n")]
    pub mean_force: f64,
    /// True when the probe bottomed out at any point during the event.
    pub saturated: bool,
}

/// Per-run summary: contact events, in-band dwell, and whether the run held
/// the band long enough for a measurement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DwellReport {
    /// The measurement band the run was scored against.
    pub band: ForceBand,
    /// Continuous in-band time needed for a measurement, seconds.
    #[serde(rename = "required_dwell_s")]
    pub required_dwell: f64,
    /// Longest continuous in-band interval, seconds.
    #[serde(rename = "longest_in_band_dwell_s")]
    pub longest_dwell: f64,
    /// Fraction of all timesteps with an in-band force.
    pub fraction_in_band: f64,
    /// `longest_dwell >= required_dwell`.
    pub measurement_achieved: bool,
    /// Maximal intervals of nonzero contact force, in time order.
    pub events: Vec<ContactEvent>,
}

/// A full simulation run: the per-step trace and its summary.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationRun {
    /// One entry per timestep.
    pub steps: Vec<SimStep>,
    /// Dwell summary over the whole run.
    pub report: DwellReport,
}

/// The baseline probe: a linear spring of the given stiffness and preload
/// mounted so its tip sits `mount_extension` below the vehicle base when
/// fully extended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringProbe {
    /// Spring stiffness, N/m.
    pub stiffness: f64,
    /// Contact force at zero deflection, Newtons.
    pub preload: f64,
    /// Reach of the relaxed probe below the base, meters.
    pub mount_extension: f64,
}

impl SpringProbe {
    /// Check field ranges; call at configuration boundaries.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("stiffness", self.stiffness), ("preload", self.preload)] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "spring probe {name} must be nonnegative and finite, got {value}"
                )));
            }
        }
        if !(self.mount_extension > 0.0 && self.mount_extension.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "spring probe mount_extension must be positive and finite, got {}",
                self.mount_extension
            )));
        }
        Ok(())
    }

    /// Contact force at a given gap: zero beyond the probe's reach,
    /// otherwise the linear spring law on the deflection.
    pub fn force_at_gap(&self, gap: f64) -> Result<f64> {
        if gap >= self.mount_extension {
            return Ok(0.0);
        }
        spring_probe_force(self.stiffness, self.preload, self.mount_extension - gap)
    }
}

/// Solve one quasi-static contact: where does the probe sit for this gap,
/// and what force does it press with?
///
/// - gap beyond the stroke (`> l1 + l2 + tip_offset`): no contact;
/// - gap below the bottom stop: saturated, force at the minimum-stroke pose;
/// - otherwise the endpoint sits exactly on the surface (rigid ice) and the
///   force law is evaluated at that pose.
///
/// Total over all finite gaps; seeds a fresh noise generator per call. Use
/// [`solve_contact_with_rng`] inside loops.
pub fn solve_contact(
    config: &PantographConfig,
    spring: &SpringModel,
    loss: &LossModel,
    gap: f64,
    direction: MotionDirection,
) -> Result<ContactSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(loss.rng_seed);
    solve_contact_with_rng(config, spring, loss, gap, direction, &mut rng)
}

/// [`solve_contact`] with a caller-owned noise generator; draws noise only
/// when contact actually occurs.
pub fn solve_contact_with_rng<R: Rng + ?Sized>(
    config: &PantographConfig,
    spring: &SpringModel,
    loss: &LossModel,
    gap: f64,
    direction: MotionDirection,
    rng: &mut R,
) -> Result<ContactSample> {
    if !gap.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "gap must be finite, got {gap}"
        )));
    }
    if gap > config.max_reach() {
        return Ok(ContactSample {
            force: 0.0,
            theta1: None,
            saturated: false,
        });
    }
    let y_min = MIN_STROKE_FRACTION * config.max_height();
    let linkage_height = gap - config.tip_offset();
    let (target, saturated) = if linkage_height < y_min {
        (y_min, true)
    } else {
        (linkage_height, false)
    };
    let theta1 = config.inverse_kinematics(target)?.theta1;
    let force = lossy_output_force_with_rng(config, theta1, spring, loss, direction, rng)?;
    Ok(ContactSample {
        force,
        theta1: Some(theta1),
        saturated,
    })
}

/// Direction of probe travel inferred from how the gap is changing: an
/// opening gap lets the spring pay out (extending); a closing gap pushes the
/// probe back (compressing). An unchanged gap keeps the previous direction.
fn classify_direction(previous: MotionDirection, gap_delta: f64) -> MotionDirection {
    if gap_delta > 0.0 {
        MotionDirection::Extending
    } else if gap_delta < 0.0 {
        MotionDirection::Compressing
    } else {
        previous
    }
}

fn build_report(steps: &[SimStep], settings: &SimulationSettings) -> DwellReport {
    let dt = settings.dt;
    let mut events = Vec::new();
    let mut run_start: Option<usize> = None;
    for k in 0..=steps.len() {
        let in_contact = k < steps.len() && steps[k].force > 0.0;
        match (in_contact, run_start) {
            (true, None) => run_start = Some(k),
            (false, Some(start)) => {
                events.push(summarize_event(&steps[start..k], start, dt));
                run_start = None;
            }
            _ => {}
        }
    }

    let mut longest_run = 0usize;
    let mut current_run = 0usize;
    let mut in_band_count = 0usize;
    for step in steps {
        if step.in_band {
            in_band_count += 1;
            current_run += 1;
            longest_run = longest_run.max(current_run);
        } else {
            current_run = 0;
        }
    }

    let longest_dwell = longest_run as f64 * dt;
    DwellReport {
        band: settings.band,
        required_dwell: settings.required_dwell,
        longest_dwell,
        fraction_in_band: in_band_count as f64 / steps.len() as f64,
        measurement_achieved: longest_dwell >= settings.required_dwell,
        events,
    }
}

fn summarize_event(run: &[SimStep], start_index: usize, dt: f64) -> ContactEvent {
    let mut min_force = f64::INFINITY;
    let mut max_force = f64::NEG_INFINITY;
    let mut sum = 0.0;
    let mut saturated = false;
    for step in run {
        min_force = min_force.min(step.force);
        max_force = max_force.max(step.force);
        sum += step.force;
        saturated |= step.saturated;
    }
    ContactEvent {
        start: start_index as f64 * dt,
        end: (start_index + run.len()) as f64 * dt,
        min_force,
        max_force,
        mean_force: sum / run.len() as f64,
        saturated,
    }
}

/// Step the scenario's gap over time, solving a contact per step via
/// `sample`, and summarize dwell. Shared by both probe laws.
fn run_simulation(
    surface: &SurfaceProfile,
    heave: &HeaveTrajectory,
    settings: &SimulationSettings,
    mut sample: impl FnMut(f64, MotionDirection) -> Result<ContactSample>,
) -> Result<SimulationRun> {
    settings.validate()?;
    let n = settings.step_count();
    let mut steps = Vec::with_capacity(n);
    let mut direction = MotionDirection::Extending;
    let mut previous_gap = None;
    for k in 0..n {
        // Times as products, not a running sum, so step k is exact.
        let t = k as f64 * settings.dt;
        let gap = surface.height_at(heave.position_at(t)) - heave.offset_at(t);
        if let Some(prev) = previous_gap {
            direction = classify_direction(direction, gap - prev);
        }
        previous_gap = Some(gap);
        let contact = sample(gap, direction)?;
        steps.push(SimStep {
            t,
            gap,
            theta1: contact.theta1,
            force: contact.force,
            in_band: contact.force > 0.0 && settings.band.contains(contact.force),
            saturated: contact.saturated,
        });
    }
    let report = build_report(&steps, settings);
    Ok(SimulationRun { steps, report })
}

/// Simulate the pantograph probe over a heave/drift scenario.
///
/// One noise generator is seeded from `loss.rng_seed` for the whole run and
/// consulted only on contact steps, so a fixed seed reproduces the run bit
/// for bit.
pub fn simulate(
    config: &PantographConfig,
    spring: &SpringModel,
    loss: &LossModel,
    surface: &SurfaceProfile,
    heave: &HeaveTrajectory,
    settings: &SimulationSettings,
) -> Result<SimulationRun> {
    loss.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(loss.rng_seed);
    run_simulation(surface, heave, settings, |gap, direction| {
        solve_contact_with_rng(config, spring, loss, gap, direction, &mut rng)
    })
}

/// Simulate the baseline spring probe over the same kind of scenario. The
/// baseline is noiseless and never saturates (no bottom stop is modeled).
pub fn simulate_spring_probe(
    probe: &SpringProbe,
    surface: &SurfaceProfile,
    heave: &HeaveTrajectory,
    settings: &SimulationSettings,
) -> Result<SimulationRun> {
    probe.validate()?;
    run_simulation(surface, heave, settings, |gap, _direction| {
        Ok(ContactSample {
            force: probe.force_at_gap(gap)?,
            theta1: None,
            saturated: false,
        })
    })
}

/// Both probes' runs over one scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeComparison {
    /// The pantograph probe's run.
    pub pantograph: SimulationRun,
    /// The baseline spring probe's run.
    pub spring_probe: SimulationRun,
}

/// Run the identical scenario through the pantograph and the baseline
/// spring probe, returning both traces and reports.
pub fn compare_probes(
    config: &PantographConfig,
    spring: &SpringModel,
    loss: &LossModel,
    probe: &SpringProbe,
    surface: &SurfaceProfile,
    heave: &HeaveTrajectory,
    settings: &SimulationSettings,
) -> Result<ProbeComparison> {
    Ok(ProbeComparison {
        pantograph: simulate(config, spring, loss, surface, heave, settings)?,
        spring_probe: simulate_spring_probe(probe, surface, heave, settings)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statics::ideal_output_force;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn reference() -> PantographConfig {
        PantographConfig::new(0.2, 0.2, 0.05).unwrap()
    }

    fn reference_spring() -> SpringModel {
        SpringModel::constant_force(14.906).unwrap()
    }

    fn band_10pct() -> ForceBand {
        ForceBand::around(1.86325, 0.10)
    }

    fn settings(duration: f64) -> SimulationSettings {
        SimulationSettings {
            duration,
            dt: 1e-3,
            band: band_10pct(),
            required_dwell: 1.0,
        }
    }

    #[test]
    fn interpolation_clamps_and_interpolates() {
        let surface = SurfaceProfile::new(vec![(0.0, 0.25), (1.0, 0.35), (2.0, 0.15)]).unwrap();
        assert_eq!(surface.height_at(-5.0), 0.25);
        assert_eq!(surface.height_at(0.0), 0.25);
        assert_relative_eq!(surface.height_at(0.5), 0.30, max_relative = 1e-12);
        assert_relative_eq!(surface.height_at(1.5), 0.25, max_relative = 1e-12);
        assert_eq!(surface.height_at(9.0), 0.15);

        assert!(SurfaceProfile::new(vec![]).is_err());
        assert!(SurfaceProfile::new(vec![(0.0, 0.1), (0.0, 0.2)]).is_err());
        assert!(SurfaceProfile::new(vec![(0.0, f64::NAN)]).is_err());
    }

    #[test]
    fn heave_laws() {
        let constant = HeaveTrajectory::constant(0.03).unwrap();
        assert_eq!(constant.offset_at(17.0), 0.03);
        assert_eq!(constant.position_at(17.0), 0.0);

        let sine = HeaveTrajectory::sinusoid(0.0, 0.05, 2.0, 0.0).unwrap();
        assert_abs_diff_eq!(sine.offset_at(0.0), 0.0, epsilon = 1e-15);
        assert_relative_eq!(sine.offset_at(0.5), 0.05, max_relative = 1e-12);
        assert!(HeaveTrajectory::sinusoid(0.0, 0.05, 0.0, 0.0).is_err());

        let samples = HeaveTrajectory::from_samples(vec![(0.0, 0.0), (1.0, 0.1)]).unwrap();
        assert_relative_eq!(samples.offset_at(0.5), 0.05, max_relative = 1e-12);
        assert_eq!(samples.offset_at(5.0), 0.1);

        let drifting = HeaveTrajectory::still().with_drift(0.2).unwrap();
        assert_relative_eq!(drifting.position_at(3.0), 0.6, max_relative = 1e-12);
    }

    #[test]
    fn solve_contact_branches() {
        let config = reference();
        let spring = reference_spring();
        let lossless = LossModel::lossless();
        let ideal = ideal_output_force(&config, 14.906).unwrap();

        let touching = solve_contact(
            &config,
            &spring,
            &lossless,
            0.25,
            MotionDirection::Extending,
        )
        .unwrap();
        assert_relative_eq!(touching.force, 1.86325, max_relative = 1e-12);
        assert_eq!(touching.force, ideal);
        assert!(!touching.saturated);
        let theta1 = touching.theta1.unwrap();
        assert_relative_eq!(theta1, (0.25f64 / 0.4).asin(), max_relative = 1e-12);

        let out_of_reach =
            solve_contact(&config, &spring, &lossless, 0.5, MotionDirection::Extending).unwrap();
        assert_eq!(out_of_reach.force, 0.0);
        assert_eq!(out_of_reach.theta1, None);
        assert!(!out_of_reach.saturated);

        // Bottom stop at 5% of the 0.4 m stroke = 0.02 m.
        let bottomed = solve_contact(
            &config,
            &spring,
            &lossless,
            0.01,
            MotionDirection::Compressing,
        )
        .unwrap();
        assert!(bottomed.saturated);
        assert_eq!(bottomed.force, ideal);
        assert_relative_eq!(
            bottomed.theta1.unwrap(),
            (0.02f64 / 0.4).asin(),
            max_relative = 1e-12
        );

        // The boundary gap is still contact, at the fully extended pose.
        let grazing =
            solve_contact(&config, &spring, &lossless, 0.4, MotionDirection::Extending).unwrap();
        assert_eq!(grazing.force, ideal);
    }

    #[test]
    fn tip_offset_shifts_reach() {
        let config = reference().with_tip_offset(0.05).unwrap();
        let spring = reference_spring();
        let lossless = LossModel::lossless();
        // Reach extends to 0.45; a 0.42 gap is contact at linkage height 0.37.
        let sample = solve_contact(
            &config,
            &spring,
            &lossless,
            0.42,
            MotionDirection::Extending,
        )
        .unwrap();
        assert_relative_eq!(
            sample.theta1.unwrap(),
            (0.37f64 / 0.4).asin(),
            max_relative = 1e-12
        );
        let beyond = solve_contact(
            &config,
            &spring,
            &lossless,
            0.46,
            MotionDirection::Extending,
        )
        .unwrap();
        assert_eq!(beyond.force, 0.0);
    }

    #[test]
    fn flat_contact_run_holds_the_band() {
        let config = reference();
        let run = simulate(
            &config,
            &reference_spring(),
            &LossModel::lossless(),
            &SurfaceProfile::flat(0.25).unwrap(),
            &HeaveTrajectory::still(),
            &SimulationSettings {
                duration: 2.0,
                dt: 1e-3,
                band: ForceBand {
                    low: 1.7,
                    high: 2.0,
                },
                required_dwell: 1.0,
            },
        )
        .unwrap();
        assert_eq!(run.steps.len(), 2000);
        assert_eq!(run.report.events.len(), 1);
        let event = &run.report.events[0];
        assert_eq!(event.start, 0.0);
        assert_relative_eq!(event.end, 2.0, max_relative = 1e-12);
        assert!(!event.saturated);
        assert_relative_eq!(event.mean_force, 1.86325, max_relative = 1e-12);
        assert_eq!(run.report.fraction_in_band, 1.0);
        assert!(run.report.measurement_achieved);
        assert_relative_eq!(run.report.longest_dwell, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn out_of_reach_run_has_no_events() {
        let run = simulate(
            &reference(),
            &reference_spring(),
            &LossModel::default(),
            &SurfaceProfile::flat(0.5).unwrap(),
            &HeaveTrajectory::still(),
            &settings(2.0),
        )
        .unwrap();
        assert!(run.report.events.is_empty());
        assert_eq!(run.report.fraction_in_band, 0.0);
        assert!(!run.report.measurement_achieved);
        assert!(run
            .steps
            .iter()
            .all(|s| s.force == 0.0 && s.theta1.is_none()));
    }

    #[test]
    fn reach_crossing_heave_alternates_contact() {
        // Gap swings 0.1..0.5 across the 0.4 m reach boundary.
        let run = simulate(
            &reference(),
            &reference_spring(),
            &LossModel::lossless(),
            &SurfaceProfile::flat(0.3).unwrap(),
            &HeaveTrajectory::sinusoid(0.0, 0.2, 2.0, 0.0).unwrap(),
            &settings(6.0),
        )
        .unwrap();
        assert!(run.report.events.len() > 1, "{:?}", run.report.events.len());
        assert!(run.report.fraction_in_band < 1.0);
        assert!(run.steps.iter().any(|s| s.force == 0.0));
        assert!(run.steps.iter().any(|s| s.force > 0.0));
    }

    #[test]
    fn saturated_steps_mark_their_event() {
        let run = simulate(
            &reference(),
            &reference_spring(),
            &LossModel::lossless(),
            &SurfaceProfile::flat(0.01).unwrap(),
            &HeaveTrajectory::still(),
            &settings(1.0),
        )
        .unwrap();
        assert!(run.steps.iter().all(|s| s.saturated));
        assert_eq!(run.report.events.len(), 1);
        assert!(run.report.events[0].saturated);
    }

    #[test]
    fn lossless_contact_force_is_gap_invariant() {
        // Stay entirely within the stroke; the force must not move at all.
        let run = simulate(
            &reference(),
            &reference_spring(),
            &LossModel::lossless(),
            &SurfaceProfile::flat(0.25).unwrap(),
            &HeaveTrajectory::sinusoid(0.0, 0.05, 2.0, 0.0).unwrap(),
            &settings(4.0),
        )
        .unwrap();
        let first = run.steps[0].force;
        for step in &run.steps {
            assert_abs_diff_eq!(step.force, first, epsilon = 1e-12);
        }
    }

    #[test]
    fn runs_are_bit_reproducible() {
        let run = || {
            simulate(
                &reference(),
                &reference_spring(),
                &LossModel::default(),
                &SurfaceProfile::flat(0.25).unwrap(),
                &HeaveTrajectory::sinusoid(0.0, 0.05, 2.0, 0.0).unwrap(),
                &settings(2.0),
            )
            .unwrap()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn direction_classification() {
        use MotionDirection::*;
        assert_eq!(classify_direction(Extending, 0.01), Extending);
        assert_eq!(classify_direction(Extending, -0.01), Compressing);
        assert_eq!(classify_direction(Compressing, 0.0), Compressing);
        assert_eq!(classify_direction(Extending, 0.0), Extending);
    }

    #[test]
    fn spring_probe_law_is_linear_in_gap() {
        let probe = SpringProbe {
            stiffness: 100.0,
            preload: 0.0,
            mount_extension: 0.3,
        };
        assert_eq!(probe.force_at_gap(0.35).unwrap(), 0.0);
        assert_eq!(probe.force_at_gap(0.3).unwrap(), 0.0);
        assert_relative_eq!(probe.force_at_gap(0.25).unwrap(), 5.0, max_relative = 1e-12);
        // Force difference between two in-contact gaps is -k * delta_gap.
        let f1 = probe.force_at_gap(0.28).unwrap();
        let f2 = probe.force_at_gap(0.26).unwrap();
        assert_relative_eq!(f2 - f1, 100.0 * 0.02, max_relative = 1e-9);
    }

    #[test]
    fn probe_comparison_over_heave() {
        let comparison = compare_probes(
            &reference(),
            &reference_spring(),
            &LossModel::lossless(),
            &SpringProbe {
                stiffness: 100.0,
                preload: 0.0,
                mount_extension: 0.3,
            },
            &SurfaceProfile::flat(0.25).unwrap(),
            &HeaveTrajectory::sinusoid(0.0, 0.05, 2.0, 0.0).unwrap(),
            &settings(10.0),
        )
        .unwrap();
        // Gap stays in stroke, so the pantograph holds the band everywhere;
        // the baseline sweeps 0..10 N and only grazes it.
        assert_eq!(comparison.pantograph.report.fraction_in_band, 1.0);
        assert!(comparison.pantograph.report.measurement_achieved);
        assert!(comparison.spring_probe.report.fraction_in_band < 1.0);
        assert!(!comparison.spring_probe.report.measurement_achieved);
    }

    #[test]
    fn probe_comparison_static_scenario() {
        let comparison = compare_probes(
            &reference(),
            &reference_spring(),
            &LossModel::lossless(),
            &SpringProbe {
                stiffness: 100.0,
                preload: 0.0,
                mount_extension: 0.3,
            },
            &SurfaceProfile::flat(0.25).unwrap(),
            &HeaveTrajectory::still(),
            &SimulationSettings {
                duration: 2.0,
                dt: 1e-3,
                band: ForceBand {
                    low: 1.0,
                    high: 6.0,
                },
                required_dwell: 1.0,
            },
        )
        .unwrap();
        // Static gap: both laws are constant (1.86 N and 5 N), both in the
        // wide band, both achieve the dwell.
        assert!(comparison.pantograph.report.measurement_achieved);
        assert!(comparison.spring_probe.report.measurement_achieved);
        assert_eq!(comparison.spring_probe.report.events.len(), 1);
        assert_relative_eq!(
            comparison.spring_probe.report.events[0].mean_force,
            5.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn settings_validation() {
        let mut s = settings(1.0);
        s.dt = 0.0;
        assert!(s.validate().is_err());
        let mut s = settings(1.0);
        s.duration = 1e-4;
        assert!(s.validate().is_err());
        let mut s = settings(1.0);
        s.band = ForceBand {
            low: 2.0,
            high: 1.0,
        };
        assert!(s.validate().is_err());
        let mut s = settings(1.0);
        s.required_dwell = -1.0;
        assert!(s.validate().is_err());
    }

    proptest! {
        #[test]
        fn in_stroke_lossless_force_equals_ideal(gap in 0.021f64..0.4) {
            let config = reference();
            let sample = solve_contact(
                &config,
                &reference_spring(),
                &LossModel::lossless(),
                gap,
                MotionDirection::Extending,
            ).unwrap();
            let ideal = ideal_output_force(&config, 14.906).unwrap();
            prop_assert_eq!(sample.force, ideal);
            prop_assert!(!sample.saturated);
        }

        #[test]
        fn beyond_reach_force_is_zero(extra in 1e-9f64..10.0) {
            let config = reference();
            let sample = solve_contact(
                &config,
                &reference_spring(),
                &LossModel::default(),
                config.max_reach() + extra,
                MotionDirection::Extending,
            ).unwrap();
            prop_assert_eq!(sample.force, 0.0);
            prop_assert_eq!(sample.theta1, None);
        }

        #[test]
        fn events_partition_contact_steps(
            amplitude in 0.0f64..0.3,
            period in 0.5f64..5.0,
            surface_height in 0.05f64..0.6,
            seed in 0u64..1000,
        ) {
            let run = simulate(
                &reference(),
                &reference_spring(),
                &LossModel { rng_seed: seed, ..LossModel::default() },
                &SurfaceProfile::flat(surface_height).unwrap(),
                &HeaveTrajectory::sinusoid(0.0, amplitude, period, 0.0).unwrap(),
                &SimulationSettings {
                    duration: 2.0,
                    dt: 1e-2,
                    band: band_10pct(),
                    required_dwell: 1.0,
                },
            ).unwrap();
            let dt = 1e-2;
            // Events are ordered, disjoint, and cover exactly the steps
            // with nonzero force.
            for pair in run.report.events.windows(2) {
                prop_assert!(pair[0].end <= pair[1].start + 1e-12);
            }
            for (k, step) in run.steps.iter().enumerate() {
                let t_mid = (k as f64 + 0.5) * dt;
                let covered = run.report.events.iter().any(
                    |e| e.start <= t_mid && t_mid <= e.end,
                );
                prop_assert_eq!(step.force > 0.0, covered, "step {}", k);
            }
            for event in &run.report.events {
                prop_assert!(event.end > event.start);
                prop_assert!(event.min_force <= event.mean_force + 1e-12);
                prop_assert!(event.mean_force <= event.max_force + 1e-12);
            }
            prop_assert!((0.0..=1.0).contains(&run.report.fraction_in_band));
        }
    }
}
