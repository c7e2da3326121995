//! Self-check suite: every cross-module invariant the library promises,
//! runnable on demand (`pantoprobe verify`) as a quick integrity check of a
//! build or an edited configuration space.
//!
//! Each check is independent, seeded, and deterministic; a check passes
//! with a one-line numeric summary or fails with the first counterexample.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::contact::{
    compare_probes, simulate, solve_contact, HeaveTrajectory, SimulationSettings, SurfaceProfile,
};
use crate::design::{brute_force_design, solve_design, solve_lever};
use crate::linkage::{constrain, JointState, PantographConfig};
use crate::presets;
use crate::statics::{
    force_height_sweep, ideal_output_force, lossy_output_force, output_force_via_torque_chain,
    spring_probe_force, LossModel, MotionDirection, SpringModel,
};

/// Result of one named invariant check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    /// Stable kebab-case check name.
    pub name: &'static str,
    /// Whether the invariant held.
    pub passed: bool,
    /// Numeric summary on success, first counterexample on failure.
    pub detail: String,
}

type Check = std::result::Result<String, String>;

fn outcome(name: &'static str, result: Check) -> CheckOutcome {
    match result {
        Ok(detail) => CheckOutcome {
            name,
            passed: true,
            detail,
        },
        Err(detail) => CheckOutcome {
            name,
            passed: false,
            detail,
        },
    }
}

/// Run every invariant check, in a stable order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        outcome("constraint-closure", constraint_closure()),
        outcome("vertical-line", vertical_line()),
        outcome("horizontal-residual", horizontal_residual()),
        outcome("ik-round-trip", ik_round_trip()),
        outcome("velocity-constraint", velocity_constraint()),
        outcome("jacobian-finite-difference", jacobian_finite_difference()),
        outcome("torque-lever-law", torque_lever_law()),
        outcome(
            "transmission-pose-independence",
            transmission_pose_independence(),
        ),
        outcome("lossless-recovery", lossless_recovery()),
        outcome("loss-monotonicity", loss_monotonicity()),
        outcome("direction-hysteresis", direction_hysteresis()),
        outcome("sweep-determinism", sweep_determinism()),
        outcome("contact-force-invariance", contact_force_invariance()),
        outcome("spring-probe-linearity", spring_probe_linearity()),
        outcome("contact-event-partition", contact_event_partition()),
        outcome("simulation-determinism", simulation_determinism()),
        outcome("reach-boundary", reach_boundary()),
        outcome("lever-round-trip", lever_round_trip()),
        outcome("design-oracle-equivalence", design_oracle_equivalence()),
        outcome("design-round-trip", design_round_trip()),
        outcome("probe-comparison-ordering", probe_comparison_ordering()),
    ]
}

/// True when every check passed.
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

fn grid(n: u32) -> impl Iterator<Item = f64> {
    (1..=n).map(move |k| FRAC_PI_2 * (k as f64 / n as f64))
}

fn constraint_closure() -> Check {
    let mut worst: f64 = 0.0;
    for theta1 in grid(1000) {
        let joints = constrain(theta1).map_err(|e| e.to_string())?;
        worst = worst.max((2.0 * joints.theta1 + joints.theta2 - PI).abs());
    }
    if worst <= 1e-12 {
        Ok(format!(
            "max |2*theta1 + theta2 - pi| = {worst:.2e} over 1000 poses"
        ))
    } else {
        Err(format!("constraint residual {worst:.2e} exceeds 1e-12"))
    }
}

fn vertical_line() -> Check {
    let config = presets::reference_pantograph();
    let budget = 1e-12 * config.max_height();
    let mut worst: f64 = 0.0;
    for theta1 in grid(1000) {
        let p = config.constrained_fk(theta1).map_err(|e| e.to_string())?;
        worst = worst.max(p.x.abs());
    }
    if worst <= budget {
        Ok(format!(
            "max |x| = {worst:.2e} over 1000 poses (budget {budget:.2e})"
        ))
    } else {
        Err(format!("|x| = {worst:.2e} exceeds {budget:.2e}"))
    }
}

fn horizontal_residual() -> Check {
    let config = PantographConfig::new(0.25, 0.15, 0.05).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for theta1 in grid(1000) {
        let p = config.constrained_fk(theta1).map_err(|e| e.to_string())?;
        let expected = (0.25 - 0.15) * theta1.cos();
        worst = worst.max((p.x - expected).abs());
    }
    if worst <= 1e-12 {
        Ok(format!(
            "max |x - (l1 - l2)cos(theta1)| = {worst:.2e} over 1000 poses"
        ))
    } else {
        Err(format!("residual {worst:.2e} exceeds 1e-12"))
    }
}

fn ik_round_trip() -> Check {
    let config = presets::reference_pantograph();
    let mut worst: f64 = 0.0;
    for theta1 in grid(1000) {
        let y = config.constrained_fk(theta1).map_err(|e| e.to_string())?.y;
        let recovered = config
            .inverse_kinematics(y)
            .map_err(|e| e.to_string())?
            .theta1;
        worst = worst.max((recovered - theta1).abs());
    }
    if worst <= 1e-9 {
        Ok(format!(
            "max |theta1 round-trip error| = {worst:.2e} over 1000 poses"
        ))
    } else {
        Err(format!("round-trip error {worst:.2e} exceeds 1e-9"))
    }
}

fn velocity_constraint() -> Check {
    let config = presets::reference_pantograph();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst_rel: f64 = 0.0;
    for _ in 0..100 {
        let theta1 = rng.random_range(1e-3..FRAC_PI_2 - 1e-3);
        let omega1 = rng.random_range(0.1..2.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let (joints, v) = config
            .constrained_velocity(theta1, omega1)
            .map_err(|e| e.to_string())?;
        if joints.omega2 != -2.0 * omega1 {
            return Err(format!("omega2 = {} for omega1 = {omega1}", joints.omega2));
        }
        if v.x.abs() > 1e-12 {
            return Err(format!("horizontal rate {} at theta1 = {theta1}", v.x));
        }
        let h = 1e-6;
        let before = config
            .constrained_fk(theta1 - h * omega1)
            .map_err(|e| e.to_string())?;
        let after = config
            .constrained_fk(theta1 + h * omega1)
            .map_err(|e| e.to_string())?;
        let fd = (after.y - before.y) / (2.0 * h);
        let rel = (v.y - fd).abs() / v.y.abs().max(1e-6);
        worst_rel = worst_rel.max(rel);
    }
    if worst_rel < 1e-4 {
        Ok(format!(
            "omega2 = -2*omega1 exact; max endpoint-rate FD error {worst_rel:.2e} over 100 poses"
        ))
    } else {
        Err(format!(
            "endpoint-rate FD error {worst_rel:.2e} exceeds 1e-4"
        ))
    }
}

fn jacobian_finite_difference() -> Check {
    let config = presets::reference_pantograph();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let step = 1e-6;
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let joints = JointState {
            theta1: rng.random_range(-PI..PI),
            theta2: rng.random_range(-PI..PI),
        };
        let analytic = config.jacobian(joints);
        for (i, j, perturb) in [
            (0usize, 0usize, true),
            (1, 0, true),
            (0, 1, false),
            (1, 1, false),
        ] {
            let plus = config.forward_kinematics(JointState {
                theta1: joints.theta1 + if perturb { step } else { 0.0 },
                theta2: joints.theta2 + if perturb { 0.0 } else { step },
            });
            let minus = config.forward_kinematics(JointState {
                theta1: joints.theta1 - if perturb { step } else { 0.0 },
                theta2: joints.theta2 - if perturb { 0.0 } else { step },
            });
            let numeric = if i == 0 {
                (plus.x - minus.x) / (2.0 * step)
            } else {
                (plus.y - minus.y) / (2.0 * step)
            };
            let rel = (analytic[(i, j)] - numeric).abs() / analytic[(i, j)].abs().max(1e-3);
            worst = worst.max(rel);
        }
    }
    if worst < 1e-6 {
        Ok(format!(
            "max Jacobian FD relative error {worst:.2e} over 100 poses"
        ))
    } else {
        Err(format!(
            "Jacobian FD relative error {worst:.2e} exceeds 1e-6"
        ))
    }
}

fn torque_lever_law() -> Check {
    let config = presets::reference_pantograph();
    let f_i = 14.906;
    let mut worst: f64 = 0.0;
    for theta1 in grid(1000) {
        let (tau1, _) =
            crate::statics::base_torque(&config, theta1, f_i).map_err(|e| e.to_string())?;
        let f_o = ideal_output_force(&config, f_i).map_err(|e| e.to_string())?;
        let tau2 = crate::statics::elbow_torque(&config, theta1, f_o).map_err(|e| e.to_string())?;
        let rel = (tau1 - 2.0 * tau2).abs() / tau1.abs().max(1e-12);
        worst = worst.max(rel);
    }
    if worst <= 1e-12 {
        Ok(format!(
            "max |tau1 - 2*tau2| / tau1 = {worst:.2e} over 1000 poses"
        ))
    } else {
        Err(format!(
            "lever-law relative error {worst:.2e} exceeds 1e-12"
        ))
    }
}

fn transmission_pose_independence() -> Check {
    let config = presets::reference_pantograph();
    let f_i = 14.906;
    let direct = ideal_output_force(&config, f_i).map_err(|e| e.to_string())?;
    let mut low = f64::INFINITY;
    let mut high = f64::NEG_INFINITY;
    for k in 1..=1000u32 {
        let theta1 = (FRAC_PI_2 - 1e-6) * (k as f64 / 1000.0);
        let chained =
            output_force_via_torque_chain(&config, theta1, f_i).map_err(|e| e.to_string())?;
        low = low.min(chained);
        high = high.max(chained);
    }
    let spread = (high - low) / direct;
    if spread <= 1e-9 && (low - direct).abs() / direct <= 1e-9 {
        Ok(format!("relative spread {spread:.2e} over 1000 poses"))
    } else {
        Err(format!("torque-chain spread {spread:.2e} exceeds 1e-9"))
    }
}

fn lossless_recovery() -> Check {
    let config = presets::reference_pantograph();
    let spring = SpringModel::constant_force(14.906).map_err(|e| e.to_string())?;
    let ideal = ideal_output_force(&config, 14.906).map_err(|e| e.to_string())?;
    for theta1 in grid(200) {
        let lossy = lossy_output_force(
            &config,
            theta1,
            &spring,
            &LossModel::lossless(),
            MotionDirection::Extending,
        )
        .map_err(|e| e.to_string())?;
        if lossy != ideal {
            return Err(format!(
                "lossy {lossy} != ideal {ideal} at theta1 = {theta1}"
            ));
        }
    }
    Ok("lossless force equals the ideal value exactly at 200 poses".into())
}

fn loss_monotonicity() -> Check {
    let config = presets::reference_pantograph();
    let spring = SpringModel::constant_force(14.906).map_err(|e| e.to_string())?;
    for theta1 in grid(50) {
        let mut previous = f64::INFINITY;
        for step in 0..=10 {
            let loss = LossModel {
                joint_coulomb: 0.002 * step as f64,
                pulley_efficiency: 0.96,
                measurement_noise_sigma: 0.0,
                rng_seed: 0,
            };
            let force =
                lossy_output_force(&config, theta1, &spring, &loss, MotionDirection::Extending)
                    .map_err(|e| e.to_string())?;
            if force > previous + 1e-12 {
                return Err(format!(
                    "extending force rose from {previous} to {force} as friction grew at theta1 = {theta1}"
                ));
            }
            previous = force;
        }
    }
    Ok("extending force is nonincreasing in joint friction (50 poses x 11 levels)".into())
}

fn direction_hysteresis() -> Check {
    let config = presets::reference_pantograph();
    let spring = presets::reference_spring();
    let loss = LossModel::default();
    for theta1 in grid(200) {
        let ext = lossy_output_force(&config, theta1, &spring, &loss, MotionDirection::Extending)
            .map_err(|e| e.to_string())?;
        let comp = lossy_output_force(
            &config,
            theta1,
            &spring,
            &loss,
            MotionDirection::Compressing,
        )
        .map_err(|e| e.to_string())?;
        if comp < ext - 1e-12 {
            return Err(format!(
                "compressing {comp} below extending {ext} at theta1 = {theta1}"
            ));
        }
    }
    Ok("compressing force >= extending force at 200 poses".into())
}

fn sweep_determinism() -> Check {
    let run = || {
        force_height_sweep(
            &presets::reference_pantograph(),
            &presets::reference_spring(),
            &LossModel::default(),
            &presets::protocol_heights(),
            MotionDirection::Extending,
        )
    };
    let a = run().map_err(|e| e.to_string())?;
    let b = run().map_err(|e| e.to_string())?;
    if a == b {
        Ok("two sweeps with one seed are bit-identical (13 rows)".into())
    } else {
        Err("identical sweeps differ".into())
    }
}

fn contact_force_invariance() -> Check {
    let config = presets::reference_pantograph();
    let spring = SpringModel::constant_force(14.906).map_err(|e| e.to_string())?;
    let lossless = LossModel::lossless();
    let reference = solve_contact(
        &config,
        &spring,
        &lossless,
        0.25,
        MotionDirection::Extending,
    )
    .map_err(|e| e.to_string())?
    .force;
    let mut worst: f64 = 0.0;
    for k in 0..=100 {
        let gap = 0.021 + (0.4 - 0.021) * k as f64 / 100.0;
        let sample = solve_contact(&config, &spring, &lossless, gap, MotionDirection::Extending)
            .map_err(|e| e.to_string())?;
        worst = worst.max((sample.force - reference).abs());
    }
    if worst <= 1e-12 {
        Ok(format!(
            "max in-stroke force deviation {worst:.2e} over 101 gaps"
        ))
    } else {
        Err(format!(
            "in-stroke force deviation {worst:.2e} exceeds 1e-12"
        ))
    }
}

fn spring_probe_linearity() -> Check {
    let k = 100.0;
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let gap_a = 0.05 + 0.004 * i as f64;
        let gap_b = gap_a + 0.002;
        let f_a = spring_probe_force(k, 0.5, 0.3 - gap_a).map_err(|e| e.to_string())?;
        let f_b = spring_probe_force(k, 0.5, 0.3 - gap_b).map_err(|e| e.to_string())?;
        worst = worst.max(((f_a - f_b) - k * 0.002).abs());
    }
    if worst <= 1e-9 {
        Ok(format!(
            "max |delta_f - k*delta_gap| = {worst:.2e} over 50 pairs"
        ))
    } else {
        Err(format!("linearity residual {worst:.2e} exceeds 1e-9"))
    }
}

fn contact_event_partition() -> Check {
    let preset = presets::flat_contact();
    let run = simulate(
        &preset.config,
        &preset.spring,
        &LossModel::default(),
        &SurfaceProfile::flat(0.3).map_err(|e| e.to_string())?,
        &HeaveTrajectory::sinusoid(0.0, 0.2, 2.0, 0.0).map_err(|e| e.to_string())?,
        &SimulationSettings {
            duration: 6.0,
            dt: 1e-3,
            ..preset.settings
        },
    )
    .map_err(|e| e.to_string())?;
    for pair in run.report.events.windows(2) {
        if pair[0].end > pair[1].start {
            return Err(format!(
                "events overlap: {}..{} then {}..{}",
                pair[0].start, pair[0].end, pair[1].start, pair[1].end
            ));
        }
    }
    for (k, step) in run.steps.iter().enumerate() {
        let t_mid = (k as f64 + 0.5) * 1e-3;
        let covered = run
            .report
            .events
            .iter()
            .any(|e| e.start <= t_mid && t_mid <= e.end);
        if (step.force > 0.0) != covered {
            return Err(format!(
                "step {k} (force {}) event coverage mismatch",
                step.force
            ));
        }
    }
    Ok(format!(
        "{} events partition {} steps exactly",
        run.report.events.len(),
        run.steps.len()
    ))
}

fn simulation_determinism() -> Check {
    let preset = presets::probe_comparison();
    let run = || {
        simulate(
            &preset.config,
            &preset.spring,
            &LossModel::default(),
            &preset.surface,
            &preset.heave,
            &preset.settings,
        )
    };
    let a = run().map_err(|e| e.to_string())?;
    let b = run().map_err(|e| e.to_string())?;
    if a == b {
        Ok(format!(
            "two runs with one seed are bit-identical ({} steps)",
            a.steps.len()
        ))
    } else {
        Err("identical runs differ".into())
    }
}

fn reach_boundary() -> Check {
    let config = presets::reference_pantograph();
    let spring = SpringModel::constant_force(14.906).map_err(|e| e.to_string())?;
    let lossless = LossModel::lossless();
    for k in 1..=50 {
        let beyond = config.max_reach() + 0.01 * k as f64;
        let sample = solve_contact(
            &config,
            &spring,
            &lossless,
            beyond,
            MotionDirection::Extending,
        )
        .map_err(|e| e.to_string())?;
        if sample.force != 0.0 {
            return Err(format!(
                "force {} beyond reach at gap {beyond}",
                sample.force
            ));
        }
        let within = 0.021 + (config.max_reach() - 0.021) * (k as f64 / 51.0);
        let sample = solve_contact(
            &config,
            &spring,
            &lossless,
            within,
            MotionDirection::Extending,
        )
        .map_err(|e| e.to_string())?;
        if sample.force <= 0.0 {
            return Err(format!("no force at in-stroke gap {within}"));
        }
    }
    Ok("force zero beyond reach and positive in stroke (50 gaps each)".into())
}

fn lever_round_trip() -> Check {
    let mut worst: f64 = 0.0;
    for i in 1..=20 {
        for j in 1..=20 {
            let f_o = 0.5 * i as f64;
            let f_i = 2.0 * j as f64;
            let l2 = 0.2;
            let r = solve_lever(f_o, f_i, l2).map_err(|e| e.to_string())?;
            let config = PantographConfig::new(l2, l2, r).map_err(|e| e.to_string())?;
            let forward = ideal_output_force(&config, f_i).map_err(|e| e.to_string())?;
            worst = worst.max((forward - f_o).abs() / f_o);
        }
    }
    if worst <= 1e-12 {
        Ok(format!(
            "max round-trip relative error {worst:.2e} over 400 cases"
        ))
    } else {
        Err(format!(
            "round-trip relative error {worst:.2e} exceeds 1e-12"
        ))
    }
}

fn design_oracle_equivalence() -> Check {
    let feasible = presets::design_example();
    let mut infeasible = presets::design_example();
    infeasible.stroke = (0.10, 0.50);
    for (label, spec) in [("feasible", feasible), ("infeasible", infeasible)] {
        let solved = solve_design(&spec).map_err(|e| e.to_string())?;
        let brute = brute_force_design(&spec).map_err(|e| e.to_string())?;
        if solved != brute {
            return Err(format!(
                "{label} spec: solver chose {:?}, enumeration chose {:?}",
                (solved.link_length, solved.lever_arm, solved.tension),
                (brute.link_length, brute.lever_arm, brute.tension)
            ));
        }
    }
    Ok("streaming search equals exhaustive enumeration on both specs".into())
}

fn design_round_trip() -> Check {
    let spec = presets::design_example();
    let solution = solve_design(&spec).map_err(|e| e.to_string())?;
    if !solution.feasible {
        return Err(format!(
            "example spec infeasible: {:?}",
            solution.violations
        ));
    }
    let config = PantographConfig::new(
        solution.link_length,
        solution.link_length,
        solution.lever_arm,
    )
    .map_err(|e| e.to_string())?;
    let forward = ideal_output_force(&config, solution.tension).map_err(|e| e.to_string())?;
    let deviation = (forward - spec.target_force).abs() / spec.target_force;
    if deviation <= spec.force_tolerance {
        Ok(format!(
            "solution reproduces the target within {:.2}% (tolerance {:.0}%)",
            deviation * 100.0,
            spec.force_tolerance * 100.0
        ))
    } else {
        Err(format!(
            "solution misses target by {:.2}% (tolerance {:.0}%)",
            deviation * 100.0,
            spec.force_tolerance * 100.0
        ))
    }
}

fn probe_comparison_ordering() -> Check {
    let preset = presets::probe_comparison();
    let comparison = compare_probes(
        &preset.config,
        &preset.spring,
        &preset.loss,
        &preset.probe.expect("comparison preset has a probe"),
        &preset.surface,
        &preset.heave,
        &preset.settings,
    )
    .map_err(|e| e.to_string())?;
    let pantograph = comparison.pantograph.report.fraction_in_band;
    let baseline = comparison.spring_probe.report.fraction_in_band;
    if pantograph >= baseline {
        Ok(format!(
            "pantograph in-band fraction {pantograph:.3} >= baseline {baseline:.3}"
        ))
    } else {
        Err(format!(
            "pantograph in-band fraction {pantograph:.3} below baseline {baseline:.3}"
        ))
    }
}
