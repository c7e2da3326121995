//! Torque balance, force transmission, spring and loss models, and the
//! force–height sweep experiment.
//!
//! The input force `f_i` acts on a lever arm of length `r` rigidly attached
//! to the lower bar at the base joint; the contact force `f_o` acts
//! vertically at the endpoint. Balancing torques across the 2:1 joint
//! coupling gives the base/elbow relation `tau1 = 2*tau2` and the
//! transmission law
//!
//! ```text
//! f_o = f_i * r / (2 * l2)
//! ```
//!
//! whose right-hand side contains no joint angle: the contact force is the
//! same everywhere in the stroke. That configuration independence is the
//! whole point of the mechanism and is what the lossy models below perturb.
//!
//! All forces and torques are magnitudes (>= 0); the direction of travel is
//! carried explicitly by [`MotionDirection`] so Coulomb friction knows which
//! way to act.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::Normal;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::linkage::{check_branch, PantographConfig};

/// Which way the endpoint is moving relative to the surface. Coulomb
/// friction opposes motion: it reduces the contact force while the probe
/// extends and raises it while the probe is being pushed back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotionDirection {
    /// Probe moving outward (spring paying out).
    Extending,
    /// Probe being compressed by the surface.
    Compressing,
}

impl std::fmt::Display for MotionDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MotionDirection::Extending => "extending",
            MotionDirection::Compressing => "compressing",
        })
    }
}

/// Force law of the actuation spring as a function of spring travel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpringKind {
    /// Tape-measure style coil delivering a fixed tension over its travel.
    ConstantForce {
        /// Nominal tension, Newtons.
        tension: f64,
    },
    /// Ordinary linear spring, the law behind the simple spring-loaded
    /// probe used as a comparison baseline.
    Linear {
        /// Stiffness, N/m.
        stiffness: f64,
        /// Force at zero travel, Newtons.
        preload: f64,
    },
}

/// A spring with a usable-travel budget.
///
/// Within `travel_limit` the spring follows its kind's law exactly; beyond
/// it the delivered force degrades linearly at `degradation_rate` (clamped
/// at zero), modeling a constant-force coil running out of wrap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpringModel {
    kind: SpringKind,
    travel_limit: f64,
    degradation_rate: f64,
}

impl SpringModel {
    /// Constant-force spring with unlimited travel.
    pub fn constant_force(tension: f64) -> Result<Self> {
        if !tension.is_finite() || tension < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spring tension must be nonnegative and finite, got {tension}"
            )));
        }
        Ok(Self {
            kind: SpringKind::ConstantForce { tension },
            travel_limit: f64::INFINITY,
            degradation_rate: 0.0,
        })
    }

    /// Linear spring with unlimited travel.
    pub fn linear(stiffness: f64, preload: f64) -> Result<Self> {
        if !stiffness.is_finite() || stiffness < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spring stiffness must be nonnegative and finite, got {stiffness}"
            )));
        }
        if !preload.is_finite() || preload < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spring preload must be nonnegative and finite, got {preload}"
            )));
        }
        Ok(Self {
            kind: SpringKind::Linear { stiffness, preload },
            travel_limit: f64::INFINITY,
            degradation_rate: 0.0,
        })
    }

    /// Limit the usable travel, degrading force at `degradation_rate` (N per
    /// meter of travel) beyond `travel_limit`.
    pub fn with_travel_limit(mut self, travel_limit: f64, degradation_rate: f64) -> Result<Self> {
        if travel_limit.is_nan() || travel_limit <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spring travel_limit must be positive, got {travel_limit}"
            )));
        }
        if !degradation_rate.is_finite() || degradation_rate < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spring degradation_rate must be nonnegative and finite, got {degradation_rate}"
            )));
        }
        self.travel_limit = travel_limit;
        self.degradation_rate = degradation_rate;
        Ok(self)
    }

    /// Remove the travel limit (used by lossless evaluation modes).
    pub fn without_degradation(mut self) -> Self {
        self.travel_limit = f64::INFINITY;
        self.degradation_rate = 0.0;
        self
    }

    /// The spring's force law.
    pub fn kind(&self) -> SpringKind {
        self.kind
    }

    /// Usable travel before degradation, meters.
    pub fn travel_limit(&self) -> f64 {
        self.travel_limit
    }

    /// Degradation slope beyond the travel limit, N/m.
    pub fn degradation_rate(&self) -> f64 {
        self.degradation_rate
    }

    /// Force by the kind's law alone, ignoring the travel limit.
    pub fn nominal_force_at_travel(&self, travel: f64) -> f64 {
        match self.kind {
            SpringKind::ConstantForce { tension } => tension,
            SpringKind::Linear { stiffness, preload } => preload + stiffness * travel,
        }
    }

    /// Delivered force at the given travel, including degradation beyond the
    /// travel limit, clamped at zero.
    pub fn force_at_travel(&self, travel: f64) -> f64 {
        let nominal = self.nominal_force_at_travel(travel);
        if travel <= self.travel_limit {
            nominal
        } else {
            (nominal - self.degradation_rate * (travel - self.travel_limit)).max(0.0)
        }
    }
}

/// Imperfections between the spring and the reported contact force:
/// bearing friction at the two joints, rope/pulley transmission loss, and
/// measurement noise on the force readout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossModel {
    /// Coulomb friction torque per joint, N·m.
    pub joint_coulomb: f64,
    /// Rope/pulley transmission efficiency, in (0, 1].
    pub pulley_efficiency: f64,
    /// Standard deviation of the force-readout noise, Newtons.
    pub measurement_noise_sigma: f64,
    /// Seed for the noise generator; fixed seed means reproducible output.
    pub rng_seed: u64,
}

impl Default for LossModel {
    /// Plausible bench values: light bearing friction, a few percent of
    /// rope/pulley loss, and centinewton-scale readout noise. Chosen so the
    /// default sweep stays within ±10% of nominal over the 100–300 mm
    /// heights while clearly degrading above 300 mm.
    fn default() -> Self {
        Self {
            joint_coulomb: 0.005,
            pulley_efficiency: 0.96,
            measurement_noise_sigma: 0.02,
            rng_seed: 42,
        }
    }
}

impl LossModel {
    /// No friction, perfect transmission, no noise: reduces the lossy force
    /// to the ideal law exactly.
    pub fn lossless() -> Self {
        Self {
            joint_coulomb: 0.0,
            pulley_efficiency: 1.0,
            measurement_noise_sigma: 0.0,
            rng_seed: 0,
        }
    }

    /// Check field ranges; call at configuration boundaries.
    pub fn validate(&self) -> Result<()> {
        if !self.joint_coulomb.is_finite() || self.joint_coulomb < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "joint_coulomb must be nonnegative and finite, got {}",
                self.joint_coulomb
            )));
        }
        if !(self.pulley_efficiency > 0.0 && self.pulley_efficiency <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "pulley_efficiency must be in (0, 1], got {}",
                self.pulley_efficiency
            )));
        }
        if !self.measurement_noise_sigma.is_finite() || self.measurement_noise_sigma < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "measurement_noise_sigma must be nonnegative and finite, got {}",
                self.measurement_noise_sigma
            )));
        }
        Ok(())
    }
}

/// Static force balance of the ideal mechanism at one pose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceState {
    /// Input force magnitude at the lever tip, Newtons.
    pub f_i: f64,
    /// Output (contact) force magnitude at the endpoint, Newtons.
    pub f_o: f64,
    /// Base joint torque magnitude, N·m.
    pub tau1: f64,
    /// Elbow joint torque magnitude, N·m.
    pub tau2: f64,
    /// Lever angle `theta1 - pi/2`, radians (nonpositive on the branch).
    pub alpha: f64,
}

impl ForceState {
    /// Evaluate the ideal balance at a pose: torques from both ends of the
    /// chain plus the transmitted force. In this model `tau1 == 2 * tau2`.
    pub fn evaluate(config: &PantographConfig, theta1: f64, f_i: f64) -> Result<Self> {
        let (tau1, alpha) = base_torque(config, theta1, f_i)?;
        let f_o = ideal_output_force(config, f_i)?;
        let tau2 = elbow_torque(config, theta1, f_o)?;
        Ok(Self {
            f_i,
            f_o,
            tau1,
            tau2,
            alpha,
        })
    }
}

fn check_force(name: &str, value: f64) -> Result<()> {
    if !value.is_finite() || value < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be a nonnegative finite magnitude, got {value}"
        )));
    }
    Ok(())
}

/// Torque the contact force exerts about the elbow joint:
/// `tau2 = f_o * l2 * cos(theta1)` (magnitude).
pub fn elbow_torque(config: &PantographConfig, theta1: f64, f_o: f64) -> Result<f64> {
    check_branch(theta1)?;
    check_force("f_o", f_o)?;
    Ok(f_o * config.l2() * theta1.cos())
}

/// Torque the input force exerts about the base joint, with the lever angle.
///
/// The lever arm is perpendicular to the lower bar, so `alpha = theta1 -
/// pi/2` and the torque magnitude is `f_i * r * cos(theta1)`.
pub fn base_torque(config: &PantographConfig, theta1: f64, f_i: f64) -> Result<(f64, f64)> {
    check_branch(theta1)?;
    check_force("f_i", f_i)?;
    let alpha = theta1 - FRAC_PI_2;
    Ok((f_i * config.r() * theta1.cos(), alpha))
}

/// The transmission law: `f_o = f_i * r / (2 * l2)`, independent of pose.
pub fn ideal_output_force(config: &PantographConfig, f_i: f64) -> Result<f64> {
    check_force("f_i", f_i)?;
    Ok(f_i * config.r() / (2.0 * config.l2()))
}

/// The design-point contact force of a mechanism/spring pairing: the ideal
/// transmission of the spring's nominal force, evaluated at mid-branch
/// travel (`theta1 = pi/4`). For constant-force springs the travel point is
/// irrelevant and this is simply `tension * r / (2 * l2)`. Used for default
/// measurement bands and plot annotations.
pub fn nominal_output_force(config: &PantographConfig, spring: &SpringModel) -> f64 {
    let travel = config.r() * std::f64::consts::FRAC_PI_4;
    ideal_output_force(config, spring.nominal_force_at_travel(travel))
        .expect("validated springs deliver nonnegative force")
}

/// Output force computed the long way around, through both joint torques:
/// `tau1` at the base, halved by the 2:1 coupling into `tau2`, then divided
/// back out by the elbow moment arm. Numerically demonstrates that the pose
/// cancels out of the transmission.
pub fn output_force_via_torque_chain(
    config: &PantographConfig,
    theta1: f64,
    f_i: f64,
) -> Result<f64> {
    let (tau1, _alpha) = base_torque(config, theta1, f_i)?;
    let tau2 = tau1 / 2.0;
    Ok(tau2 / (config.l2() * theta1.cos()))
}

/// Contact force of the baseline spring-loaded probe: `preload + stiffness *
/// deflection`.
pub fn spring_probe_force(stiffness: f64, preload: f64, deflection: f64) -> Result<f64> {
    check_force("stiffness", stiffness)?;
    check_force("preload", preload)?;
    if !deflection.is_finite() || deflection < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "deflection must be nonnegative and finite, got {deflection}"
        )));
    }
    Ok(preload + stiffness * deflection)
}

/// Contact force including spring degradation, pulley loss, joint friction,
/// and seeded measurement noise. Creates a fresh noise generator from
/// `loss.rng_seed`; use [`lossy_output_force_with_rng`] to share a generator
/// across many evaluations (sweeps, simulations).
pub fn lossy_output_force(
    config: &PantographConfig,
    theta1: f64,
    spring: &SpringModel,
    loss: &LossModel,
    direction: MotionDirection,
) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(loss.rng_seed);
    lossy_output_force_with_rng(config, theta1, spring, loss, direction, &mut rng)
}

/// [`lossy_output_force`] with a caller-owned noise generator.
///
/// Draws exactly one noise sample per call when `measurement_noise_sigma >
/// 0` and none otherwise, so callers stepping a shared generator get a
/// reproducible sample-per-evaluation alignment.
pub fn lossy_output_force_with_rng<R: Rng + ?Sized>(
    config: &PantographConfig,
    theta1: f64,
    spring: &SpringModel,
    loss: &LossModel,
    direction: MotionDirection,
    rng: &mut R,
) -> Result<f64> {
    check_branch(theta1)?;
    loss.validate()?;

    // Spring travel equals the lever-tip arc length from the folded pose.
    let travel = config.r() * theta1;
    let delivered = spring.force_at_travel(travel) * loss.pulley_efficiency;
    let transmitted = ideal_output_force(config, delivered)?;

    // Reflect the two joints' Coulomb torques to the endpoint through the
    // vertical-motion gain |dy/dtheta1| = (l1 + l2)cos(theta1). The gain
    // vanishes at full extension, so the reflected friction is capped at the
    // transmitted force: friction can cancel the contact force but never
    // reverse it.
    let friction_torque = 2.0 * loss.joint_coulomb;
    let vertical_gain = (config.l1() + config.l2()) * theta1.cos();
    let friction = if friction_torque == 0.0 {
        0.0
    } else {
        (friction_torque / vertical_gain).min(transmitted)
    };
    let force = match direction {
        MotionDirection::Extending => transmitted - friction,
        MotionDirection::Compressing => transmitted + friction,
    };

    let noise = if loss.measurement_noise_sigma > 0.0 {
        let normal = Normal::new(0.0, loss.measurement_noise_sigma)
            .expect("sigma validated finite and nonnegative");
        rng.sample(normal)
    } else {
        0.0
    };
    // The reported value is a magnitude; noise near zero force cannot make
    // the readout negative.
    Ok((force + noise).max(0.0))
}

/// One row of a force–height sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// Endpoint height, meters.
    pub height: f64,
    /// Joint angle realizing that height, radians.
    pub theta1: f64,
    /// Ideal (lossless, undegraded) force, Newtons.
    pub force_ideal: f64,
    /// Force through the loss chain, Newtons.
    pub force_lossy: f64,
}

/// Result of stepping the probe through a list of heights and recording the
/// contact force at each, mirroring the bench protocol of raising the
/// endpoint in fixed increments.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// One row per requested height, in input order.
    pub rows: Vec<SweepRow>,
    /// Mechanism geometry the sweep was run with.
    pub config: PantographConfig,
    /// Actuation spring.
    pub spring: SpringModel,
    /// Loss model (seed included).
    pub loss: LossModel,
    /// Direction of travel assumed for friction.
    pub direction: MotionDirection,
}

/// Run a force–height sweep: inverse kinematics at each height, then the
/// ideal and lossy force laws. Heights must be strictly increasing and
/// within the stroke; the noise generator is seeded once per sweep, drawing
/// one sample per row, so a fixed seed reproduces the sweep bit for bit.
pub fn force_height_sweep(
    config: &PantographConfig,
    spring: &SpringModel,
    loss: &LossModel,
    heights: &[f64],
    direction: MotionDirection,
) -> Result<SweepResult> {
    loss.validate()?;
    if heights.is_empty() {
        return Err(Error::InvalidParameter(
            "sweep needs at least one height".into(),
        ));
    }
    for &height in heights {
        if !height.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "sweep heights must be finite, got {height}"
            )));
        }
    }
    for pair in heights.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::InvalidParameter(format!(
                "sweep heights must be strictly increasing, got {} after {}",
                pair[1], pair[0]
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(loss.rng_seed);
    let mut rows = Vec::with_capacity(heights.len());
    for (index, &height) in heights.iter().enumerate() {
        let theta1 = config
            .inverse_kinematics(height)
            .map_err(|err| match err {
                Error::Unreachable { height, max, .. } => Error::Unreachable {
                    height,
                    max,
                    context: format!(" (sweep height entry {index})"),
                },
                other => other,
            })?
            .theta1;
        let travel = config.r() * theta1;
        let force_ideal = ideal_output_force(config, spring.nominal_force_at_travel(travel))?;
        let force_lossy =
            lossy_output_force_with_rng(config, theta1, spring, loss, direction, &mut rng)?;
        rows.push(SweepRow {
            height,
            theta1,
            force_ideal,
            force_lossy,
        });
    }
    Ok(SweepResult {
        rows,
        config: *config,
        spring: *spring,
        loss: *loss,
        direction,
    })
}
