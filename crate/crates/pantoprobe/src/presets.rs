//! Canonical ready-made configurations: the reference mechanism geometry,
//! its bench sweep protocol, and three contact scenarios exercised by the
//! test suite and runnable straight from the CLI and examples.
//!
//! The reference design delivers about 190 gram-force: links of 0.2 m, a
//! 0.05 m lever arm, and a 14.906 N constant-force spring give
//! `14.906 * 0.05 / 0.4 = 1.86325 N`.

use crate::contact::{ForceBand, HeaveTrajectory, SimulationSettings, SpringProbe, SurfaceProfile};
use crate::design::DesignSpec;
use crate::linkage::PantographConfig;
use crate::statics::{ideal_output_force, LossModel, SpringModel};

/// Reference geometry: l1 = l2 = 0.2 m, r = 0.05 m, no tip offset.
pub fn reference_pantograph() -> PantographConfig {
    PantographConfig::new(0.2, 0.2, 0.05).expect("reference geometry is valid")
}

/// Reference actuation spring: 14.906 N constant-force coil whose delivery
/// starts degrading at 20 N/m once the lever-tip travel exceeds 0.043 m —
/// which happens just above the 0.3 m endpoint height, where the bench
/// curve visibly departs from constant.
pub fn reference_spring() -> SpringModel {
    SpringModel::constant_force(14.906)
        .expect("reference tension is valid")
        .with_travel_limit(0.043, 20.0)
        .expect("reference travel limit is valid")
}

/// Ideal contact force of the reference design, Newtons (1.86325).
pub fn reference_force() -> f64 {
    ideal_output_force(&reference_pantograph(), 14.906).expect("reference force is valid")
}

/// The bench sweep protocol: endpoint heights from 100 mm to 400 mm in
/// 25 mm steps (13 points), the full stroke of the reference geometry.
pub fn protocol_heights() -> Vec<f64> {
    (0..13).map(|k| (100 + 25 * k) as f64 / 1000.0).collect()
}

/// The reference design-search problem: hit the reference force ±2% with a
/// catalog of one spring, links between 0.18 m and 0.22 m, lever arms
/// between 0.03 m and 0.08 m, and a 0.30 m deployment hole.
pub fn design_example() -> DesignSpec {
    DesignSpec::new(
        reference_force(),
        (0.10, 0.35),
        0.30,
        vec![14.906],
        (0.18, 0.22),
        (0.03, 0.08),
    )
}

/// Everything needed to run one contact scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ContactPreset {
    /// Mechanism geometry.
    pub config: PantographConfig,
    /// Actuation spring.
    pub spring: SpringModel,
    /// Loss model.
    pub loss: LossModel,
    /// Ice surface.
    pub surface: SurfaceProfile,
    /// Vehicle base motion.
    pub heave: HeaveTrajectory,
    /// Stepping and dwell-scoring parameters.
    pub settings: SimulationSettings,
    /// Baseline probe for comparison runs, when the scenario has one.
    pub probe: Option<SpringProbe>,
}

/// A still vehicle under flat ice well within the stroke: the probe should
/// hold an in-band force continuously and achieve its one-second dwell in a
/// single contact event.
pub fn flat_contact() -> ContactPreset {
    ContactPreset {
        config: reference_pantograph(),
        spring: reference_spring(),
        loss: LossModel::lossless(),
        surface: SurfaceProfile::flat(0.25).expect("preset surface is valid"),
        heave: HeaveTrajectory::still(),
        settings: SimulationSettings {
            duration: 2.0,
            dt: 1e-3,
            band: ForceBand {
                low: 1.7,
                high: 2.0,
            },
            required_dwell: 1.0,
        },
        probe: None,
    }
}

/// Ice hanging beyond the probe's 0.4 m reach: the run must report zero
/// contact events.
pub fn out_of_reach() -> ContactPreset {
    ContactPreset {
        surface: SurfaceProfile::flat(0.5).expect("preset surface is valid"),
        ..flat_contact()
    }
}

/// Head-to-head scenario against the baseline spring probe: ±0.05 m of
/// sinusoidal heave under flat ice at 0.25 m. The gap stays within the
/// pantograph's stroke, so it holds the ±10% band the whole run, while the
/// baseline's force ramps 0–10 N and only grazes it.
pub fn probe_comparison() -> ContactPreset {
    let nominal = reference_force();
    ContactPreset {
        config: reference_pantograph(),
        spring: reference_spring(),
        loss: LossModel::lossless(),
        surface: SurfaceProfile::flat(0.25).expect("preset surface is valid"),
        heave: HeaveTrajectory::sinusoid(0.0, 0.05, 2.0, 0.0).expect("preset heave is valid"),
        settings: SimulationSettings {
            duration: 10.0,
            dt: 1e-3,
            band: ForceBand::around(nominal, 0.10),
            required_dwell: 1.0,
        },
        probe: Some(SpringProbe {
            stiffness: 100.0,
            preload: 0.0,
            mount_extension: 0.3,
        }),
    }
}
