//! Scenario configuration: one strict JSON document describing the
//! mechanism, spring, losses, sweep protocol, contact scenario, and design
//! problem for a CLI run.
//!
//! Parsing is deliberately unforgiving: unknown keys are errors, and every
//! physical quantity carries its unit in the key name (`l1_m`,
//! `tension_n`, `phase_deg`). Forces may be given in Newtons (`*_n`) or
//! gram-force (`*_gf`), but never both at once; angles are degrees in the
//! file and radians everywhere else. Missing sections fall back to the
//! reference scenario of [`crate::presets`].
//!
//! ```json
//! {
//!   "pantograph": { "l1_m": 0.2, "l2_m": 0.2, "r_m": 0.05 },
//!   "spring": { "kind": "constant_force", "tension_gf": 1520.0 },
//!   "loss": { "pulley_efficiency": 0.9 },
//!   "sweep": { "heights_mm": [100, 200, 300], "direction": "extending" },
//!   "rng_seed": 7
//! }
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::contact::{ForceBand, HeaveTrajectory, SimulationSettings, SpringProbe, SurfaceProfile};
use crate::design::DesignSpec;
use crate::error::{Error, Result};
use crate::linkage::PantographConfig;
use crate::presets;
use crate::statics::{nominal_output_force, LossModel, MotionDirection, SpringModel};
use crate::units::gram_force_to_newtons;

/// A fully resolved scenario: every section present, defaults applied.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    /// Mechanism geometry.
    pub pantograph: PantographConfig,
    /// Actuation spring.
    pub spring: SpringModel,
    /// Loss model, already carrying the scenario's seed.
    pub loss: LossModel,
    /// Sweep heights, meters.
    pub sweep_heights: Vec<f64>,
    /// Direction of travel assumed for the sweep.
    pub sweep_direction: MotionDirection,
    /// Ice surface for contact simulation.
    pub surface: SurfaceProfile,
    /// Vehicle base motion for contact simulation.
    pub heave: HeaveTrajectory,
    /// Stepping and dwell-scoring parameters.
    pub settings: SimulationSettings,
    /// Baseline probe for comparison runs.
    pub spring_probe: Option<SpringProbe>,
    /// Design-search problem.
    pub design: DesignSpec,
    /// Output directory, when the file names one.
    pub out_dir: Option<String>,
}

impl ScenarioConfig {
    /// The built-in reference scenario: reference geometry and spring, the
    /// default loss model, the 13-point bench sweep, flat ice at 0.25 m
    /// under a still vehicle, a ±10% measurement band, and the reference
    /// design problem.
    pub fn reference() -> Self {
        let pantograph = presets::reference_pantograph();
        let spring = presets::reference_spring();
        let nominal = nominal_output_force(&pantograph, &spring);
        Self {
            pantograph,
            spring,
            loss: LossModel::default(),
            sweep_heights: presets::protocol_heights(),
            sweep_direction: MotionDirection::Extending,
            surface: SurfaceProfile::flat(0.25).expect("reference surface is valid"),
            heave: HeaveTrajectory::still(),
            settings: SimulationSettings {
                duration: 2.0,
                dt: 1e-3,
                band: ForceBand::around(nominal, 0.10),
                required_dwell: 1.0,
            },
            spring_probe: None,
            design: presets::design_example(),
            out_dir: None,
        }
    }

    /// Parse a scenario document, strictly.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawScenario =
            serde_json::from_str(text).map_err(|err| Error::ConfigParse(err.to_string()))?;
        raw.resolve()
    }

    /// Read and parse a scenario file.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|err| Error::ConfigParse(format!("cannot read {}: {err}", path.display())))?;
        Self::from_json(&text).map_err(|err| match err {
            Error::ConfigParse(msg) => Error::ConfigParse(format!("{}: {msg}", path.display())),
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

/// Exactly one of the Newton/gram-force spellings, converted to Newtons.
fn one_force(key: &str, newtons: Option<f64>, gram_force: Option<f64>) -> Result<f64> {
    match (newtons, gram_force) {
        (Some(n), None) => Ok(n),
        (None, Some(gf)) => Ok(gram_force_to_newtons(gf)),
        (Some(_), Some(_)) => Err(Error::Config(format!(
            "give either {key}_n or {key}_gf, not both"
        ))),
        (None, None) => Err(Error::Config(format!(
            "missing force: give {key}_n or {key}_gf"
        ))),
    }
}

/// Like [`one_force`] but optional: absent keys yield `None`.
fn optional_force(key: &str, newtons: Option<f64>, gram_force: Option<f64>) -> Result<Option<f64>> {
    match (newtons, gram_force) {
        (None, None) => Ok(None),
        _ => one_force(key, newtons, gram_force).map(Some),
    }
}

fn reject_keys(kind: &str, fields: &[(&str, bool)]) -> Result<()> {
    for (name, present) in fields {
        if *present {
            return Err(Error::Config(format!(
                "key {name} does not apply to kind \"{kind}\""
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    pantograph: Option<RawPantograph>,
    spring: Option<RawSpring>,
    loss: Option<RawLoss>,
    sweep: Option<RawSweep>,
    simulation: Option<RawSimulation>,
    design: Option<RawDesign>,
    rng_seed: Option<u64>,
    out_dir: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPantograph {
    l1_m: f64,
    l2_m: f64,
    r_m: f64,
    tip_offset_m: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpring {
    kind: String,
    tension_n: Option<f64>,
    tension_gf: Option<f64>,
    stiffness_n_per_m: Option<f64>,
    preload_n: Option<f64>,
    preload_gf: Option<f64>,
    travel_limit_m: Option<f64>,
    degradation_rate_n_per_m: Option<f64>,
}

impl RawSpring {
    fn resolve(self) -> Result<SpringModel> {
        let base = match self.kind.as_str() {
            "constant_force" => {
                reject_keys(
                    &self.kind,
                    &[
                        ("stiffness_n_per_m", self.stiffness_n_per_m.is_some()),
                        ("preload_n", self.preload_n.is_some()),
                        ("preload_gf", self.preload_gf.is_some()),
                    ],
                )?;
                SpringModel::constant_force(one_force("tension", self.tension_n, self.tension_gf)?)?
            }
            "linear" => {
                reject_keys(
                    &self.kind,
                    &[
                        ("tension_n", self.tension_n.is_some()),
                        ("tension_gf", self.tension_gf.is_some()),
                    ],
                )?;
                let stiffness = self
                    .stiffness_n_per_m
                    .ok_or_else(|| Error::Config("linear spring needs stiffness_n_per_m".into()))?;
                let preload =
                    optional_force("preload", self.preload_n, self.preload_gf)?.unwrap_or(0.0);
                SpringModel::linear(stiffness, preload)?
            }
            other => {
                return Err(Error::Config(format!(
                    "unknown spring kind \"{other}\" (expected constant_force or linear)"
                )))
            }
        };
        match (self.travel_limit_m, self.degradation_rate_n_per_m) {
            (None, None) => Ok(base),
            (Some(limit), rate) => base.with_travel_limit(limit, rate.unwrap_or(0.0)),
            (None, Some(_)) => Err(Error::Config(
                "degradation_rate_n_per_m needs travel_limit_m".into(),
            )),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLoss {
    joint_coulomb_nm: Option<f64>,
    pulley_efficiency: Option<f64>,
    measurement_noise_sigma_n: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    heights_m: Option<Vec<f64>>,
    heights_mm: Option<Vec<f64>>,
    direction: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSurface {
    kind: String,
    height_m: Option<f64>,
    points: Option<Vec<(f64, f64)>>,
}

impl RawSurface {
    fn resolve(self) -> Result<SurfaceProfile> {
        match self.kind.as_str() {
            "flat" => {
                reject_keys(&self.kind, &[("points", self.points.is_some())])?;
                let height = self
                    .height_m
                    .ok_or_else(|| Error::Config("flat surface needs height_m".into()))?;
                SurfaceProfile::flat(height)
            }
            "profile" => {
                reject_keys(&self.kind, &[("height_m", self.height_m.is_some())])?;
                let points = self
                    .points
                    .ok_or_else(|| Error::Config("profile surface needs points".into()))?;
                SurfaceProfile::new(points)
            }
            other => Err(Error::Config(format!(
                "unknown surface kind \"{other}\" (expected flat or profile)"
            ))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHeave {
    kind: String,
    offset_m: Option<f64>,
    mean_m: Option<f64>,
    amplitude_m: Option<f64>,
    period_s: Option<f64>,
    phase_deg: Option<f64>,
    points_t_s_offset_m: Option<Vec<(f64, f64)>>,
}

impl RawHeave {
    fn resolve(self, drift_speed: Option<f64>) -> Result<HeaveTrajectory> {
        let base = match self.kind.as_str() {
            "constant" => {
                reject_keys(
                    &self.kind,
                    &[
                        ("mean_m", self.mean_m.is_some()),
                        ("amplitude_m", self.amplitude_m.is_some()),
                        ("period_s", self.period_s.is_some()),
                        ("phase_deg", self.phase_deg.is_some()),
                        ("points_t_s_offset_m", self.points_t_s_offset_m.is_some()),
                    ],
                )?;
                HeaveTrajectory::constant(self.offset_m.unwrap_or(0.0))?
            }
            "sinusoid" => {
                reject_keys(
                    &self.kind,
                    &[
                        ("offset_m", self.offset_m.is_some()),
                        ("points_t_s_offset_m", self.points_t_s_offset_m.is_some()),
                    ],
                )?;
                let amplitude = self
                    .amplitude_m
                    .ok_or_else(|| Error::Config("sinusoid heave needs amplitude_m".into()))?;
                let period = self
                    .period_s
                    .ok_or_else(|| Error::Config("sinusoid heave needs period_s".into()))?;
                HeaveTrajectory::sinusoid(
                    self.mean_m.unwrap_or(0.0),
                    amplitude,
                    period,
                    self.phase_deg.unwrap_or(0.0).to_radians(),
                )?
            }
            "samples" => {
                reject_keys(
                    &self.kind,
                    &[
                        ("offset_m", self.offset_m.is_some()),
                        ("mean_m", self.mean_m.is_some()),
                        ("amplitude_m", self.amplitude_m.is_some()),
                        ("period_s", self.period_s.is_some()),
                        ("phase_deg", self.phase_deg.is_some()),
                    ],
                )?;
                let points = self.points_t_s_offset_m.ok_or_else(|| {
                    Error::Config("samples heave needs points_t_s_offset_m".into())
                })?;
                HeaveTrajectory::from_samples(points)?
            }
            other => {
                return Err(Error::Config(format!(
                    "unknown heave kind \"{other}\" (expected constant, sinusoid, or samples)"
                )))
            }
        };
        match drift_speed {
            Some(speed) => base.with_drift(speed),
            None => Ok(base),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpringProbe {
    stiffness_n_per_m: f64,
    preload_n: Option<f64>,
    preload_gf: Option<f64>,
    mount_extension_m: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSimulation {
    surface: Option<RawSurface>,
    heave: Option<RawHeave>,
    drift_speed_mps: Option<f64>,
    duration_s: Option<f64>,
    dt_s: Option<f64>,
    band_low_n: Option<f64>,
    band_low_gf: Option<f64>,
    band_high_n: Option<f64>,
    band_high_gf: Option<f64>,
    required_dwell_s: Option<f64>,
    spring_probe: Option<RawSpringProbe>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDesign {
    target_force_n: Option<f64>,
    target_force_gf: Option<f64>,
    stroke_min_m: f64,
    stroke_max_m: f64,
    envelope_diameter_m: Option<f64>,
    tensions_n: Option<Vec<f64>>,
    tensions_gf: Option<Vec<f64>>,
    link_min_m: f64,
    link_max_m: f64,
    lever_min_m: f64,
    lever_max_m: f64,
    margin_m: Option<f64>,
    min_height_fraction: Option<f64>,
    resolution_m: Option<f64>,
    force_tolerance: Option<f64>,
}

impl RawDesign {
    fn resolve(self) -> Result<DesignSpec> {
        let target = one_force("target_force", self.target_force_n, self.target_force_gf)?;
        let tensions = match (self.tensions_n, self.tensions_gf) {
            (Some(n), None) => n,
            (None, Some(gf)) => gf.into_iter().map(gram_force_to_newtons).collect(),
            (Some(_), Some(_)) => {
                return Err(Error::Config(
                    "give either tensions_n or tensions_gf, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::Config(
                    "missing spring catalog: give tensions_n or tensions_gf".into(),
                ))
            }
        };
        let mut spec = DesignSpec::new(
            target,
            (self.stroke_min_m, self.stroke_max_m),
            self.envelope_diameter_m.unwrap_or(0.30),
            tensions,
            (self.link_min_m, self.link_max_m),
            (self.lever_min_m, self.lever_max_m),
        );
        if let Some(margin) = self.margin_m {
            spec.margin = margin;
        }
        if let Some(fraction) = self.min_height_fraction {
            spec.min_height_fraction = fraction;
        }
        if let Some(resolution) = self.resolution_m {
            spec.resolution = resolution;
        }
        if let Some(tolerance) = self.force_tolerance {
            spec.force_tolerance = tolerance;
        }
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_direction(text: &str) -> Result<MotionDirection> {
    match text {
        "extending" => Ok(MotionDirection::Extending),
        "compressing" => Ok(MotionDirection::Compressing),
        other => Err(Error::Config(format!(
            "unknown direction \"{other}\" (expected extending or compressing)"
        ))),
    }
}

impl RawScenario {
    fn resolve(self) -> Result<ScenarioConfig> {
        let mut scenario = ScenarioConfig::reference();

        if let Some(raw) = self.pantograph {
            let mut config = PantographConfig::new(raw.l1_m, raw.l2_m, raw.r_m)?;
            if let Some(offset) = raw.tip_offset_m {
                config = config.with_tip_offset(offset)?;
            }
            scenario.pantograph = config;
        }
        if let Some(raw) = self.spring {
            scenario.spring = raw.resolve()?;
        }
        if let Some(raw) = self.loss {
            let defaults = LossModel::default();
            scenario.loss = LossModel {
                joint_coulomb: raw.joint_coulomb_nm.unwrap_or(defaults.joint_coulomb),
                pulley_efficiency: raw.pulley_efficiency.unwrap_or(defaults.pulley_efficiency),
                measurement_noise_sigma: raw
                    .measurement_noise_sigma_n
                    .unwrap_or(defaults.measurement_noise_sigma),
                rng_seed: defaults.rng_seed,
            };
            scenario.loss.validate()?;
        }
        if let Some(seed) = self.rng_seed {
            scenario.loss.rng_seed = seed;
        }

        // The default band tracks whatever mechanism and spring the file
        // configured; an explicit band below still overrides it.
        let nominal = nominal_output_force(&scenario.pantograph, &scenario.spring);
        scenario.settings.band = ForceBand::around(nominal, 0.10);

        if let Some(raw) = self.sweep {
            match (raw.heights_m, raw.heights_mm) {
                (Some(m), None) => scenario.sweep_heights = m,
                (None, Some(mm)) => {
                    scenario.sweep_heights = mm.into_iter().map(|h| h / 1000.0).collect()
                }
                (Some(_), Some(_)) => {
                    return Err(Error::Config(
                        "give either heights_m or heights_mm, not both".into(),
                    ))
                }
                (None, None) => {}
            }
            if let Some(direction) = raw.direction {
                scenario.sweep_direction = parse_direction(&direction)?;
            }
        }

        if let Some(raw) = self.simulation {
            if let Some(surface) = raw.surface {
                scenario.surface = surface.resolve()?;
            }
            match (raw.heave, raw.drift_speed_mps) {
                (Some(heave), drift) => scenario.heave = heave.resolve(drift)?,
                (None, Some(speed)) => {
                    scenario.heave = scenario.heave.clone().with_drift(speed)?;
                }
                (None, None) => {}
            }
            if let Some(duration) = raw.duration_s {
                scenario.settings.duration = duration;
            }
            if let Some(dt) = raw.dt_s {
                scenario.settings.dt = dt;
            }
            if let Some(low) = optional_force("band_low", raw.band_low_n, raw.band_low_gf)? {
                scenario.settings.band.low = low;
            }
            if let Some(high) = optional_force("band_high", raw.band_high_n, raw.band_high_gf)? {
                scenario.settings.band.high = high;
            }
            if let Some(dwell) = raw.required_dwell_s {
                scenario.settings.required_dwell = dwell;
            }
            scenario.settings.validate()?;
            if let Some(probe) = raw.spring_probe {
                let resolved = SpringProbe {
                    stiffness: probe.stiffness_n_per_m,
                    preload: optional_force("preload", probe.preload_n, probe.preload_gf)?
                        .unwrap_or(0.0),
                    mount_extension: probe.mount_extension_m,
                };
                resolved.validate()?;
                scenario.spring_probe = Some(resolved);
            }
        }

        if let Some(raw) = self.design {
            scenario.design = raw.resolve()?;
        }
        scenario.out_dir = self.out_dir;
        Ok(scenario)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statics::SpringKind;
    use approx::assert_relative_eq;

    #[test]
    fn reference_scenario_is_consistent() {
        let scenario = ScenarioConfig::reference();
        assert_eq!(scenario.sweep_heights.len(), 13);
        assert_relative_eq!(
            scenario.settings.band.low,
            1.86325 * 0.9,
            max_relative = 1e-12
        );
        scenario.settings.validate().unwrap();
        scenario.design.validate().unwrap();
    }

    #[test]
    fn empty_document_yields_reference() {
        let scenario = ScenarioConfig::from_json("{}").unwrap();
        assert_eq!(scenario, ScenarioConfig::reference());
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = ScenarioConfig::from_json(r#"{ "pantograf": {} }"#).unwrap_err();
        assert!(matches!(err, Error::ConfigParse(_)));
        assert!(err.to_string().contains("pantograf"), "{err}");

        let err = ScenarioConfig::from_json(
            r#"{ "pantograph": { "l1_m": 0.2, "l2_m": 0.2, "r_m": 0.05, "color": "red" } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("color"), "{err}");
    }

    #[test]
    fn unit_suffix_must_be_unambiguous() {
        let err = ScenarioConfig::from_json(
            r#"{ "spring": { "kind": "constant_force", "tension_n": 14.9, "tension_gf": 1520 } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("not both"), "{err}");

        let err =
            ScenarioConfig::from_json(r#"{ "spring": { "kind": "constant_force" } }"#).unwrap_err();
        assert!(err.to_string().contains("tension"), "{err}");
    }

    #[test]
    fn gram_force_converts_at_the_boundary() {
        let scenario = ScenarioConfig::from_json(
            r#"{ "spring": { "kind": "constant_force", "tension_gf": 1520.0 } }"#,
        )
        .unwrap();
        match scenario.spring.kind() {
            SpringKind::ConstantForce { tension } => {
                assert_relative_eq!(tension, 14.90610, max_relative = 1e-5);
            }
            other => panic!("unexpected spring {other:?}"),
        }
    }

    #[test]
    fn kind_specific_keys_are_policed() {
        let err = ScenarioConfig::from_json(
            r#"{ "spring": { "kind": "linear", "stiffness_n_per_m": 100.0, "tension_n": 14.9 } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("tension_n"), "{err}");

        let err = ScenarioConfig::from_json(
            r#"{ "simulation": { "surface": { "kind": "flat", "points": [[0, 0.2]] } } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("points"), "{err}");

        let err = ScenarioConfig::from_json(
            r#"{ "simulation": { "heave": { "kind": "constant", "period_s": 2.0 } } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("period_s"), "{err}");
    }

    #[test]
    fn sweep_heights_accept_millimeters() {
        let scenario =
            ScenarioConfig::from_json(r#"{ "sweep": { "heights_mm": [100, 225, 400] } }"#).unwrap();
        assert_eq!(scenario.sweep_heights, vec![0.100, 0.225, 0.400]);

        let err = ScenarioConfig::from_json(
            r#"{ "sweep": { "heights_mm": [100], "heights_m": [0.1] } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("not both"), "{err}");
    }

    #[test]
    fn band_defaults_track_the_configured_mechanism() {
        // Halving the lever arm halves the nominal force and thus the band.
        let scenario = ScenarioConfig::from_json(
            r#"{ "pantograph": { "l1_m": 0.2, "l2_m": 0.2, "r_m": 0.025 } }"#,
        )
        .unwrap();
        assert_relative_eq!(
            scenario.settings.band.high,
            0.5 * 1.86325 * 1.1,
            max_relative = 1e-12
        );
    }

    #[test]
    fn full_document_round_trips() {
        let text = r#"{
            "pantograph": { "l1_m": 0.2, "l2_m": 0.2, "r_m": 0.05, "tip_offset_m": 0.01 },
            "spring": {
                "kind": "constant_force",
                "tension_n": 14.906,
                "travel_limit_m": 0.043,
                "degradation_rate_n_per_m": 20.0
            },
            "loss": {
                "joint_coulomb_nm": 0.004,
                "pulley_efficiency": 0.97,
                "measurement_noise_sigma_n": 0.01
            },
            "sweep": { "heights_mm": [100, 125, 150], "direction": "compressing" },
            "simulation": {
                "surface": { "kind": "profile", "points": [[0.0, 0.25], [2.0, 0.3]] },
                "heave": {
                    "kind": "sinusoid",
                    "amplitude_m": 0.05,
                    "period_s": 2.0,
                    "phase_deg": 90.0
                },
                "drift_speed_mps": 0.1,
                "duration_s": 4.0,
                "dt_s": 0.002,
                "band_low_gf": 171.0,
                "band_high_gf": 209.0,
                "required_dwell_s": 0.5,
                "spring_probe": {
                    "stiffness_n_per_m": 100.0,
                    "preload_gf": 51.0,
                    "mount_extension_m": 0.3
                }
            },
            "design": {
                "target_force_gf": 190.0,
                "stroke_min_m": 0.1,
                "stroke_max_m": 0.35,
                "envelope_diameter_m": 0.3,
                "tensions_n": [14.906, 20.0],
                "link_min_m": 0.18,
                "link_max_m": 0.22,
                "lever_min_m": 0.03,
                "lever_max_m": 0.08,
                "resolution_m": 0.001
            },
            "rng_seed": 7,
            "out_dir": "results"
        }"#;
        let scenario = ScenarioConfig::from_json(text).unwrap();
        assert_eq!(scenario.loss.rng_seed, 7);
        assert_eq!(scenario.sweep_direction, MotionDirection::Compressing);
        assert_eq!(scenario.sweep_heights.len(), 3);
        assert_relative_eq!(scenario.settings.dt, 0.002, max_relative = 1e-12);
        // 90 degrees of phase lands the sinusoid at its crest at t = 0.
        assert_relative_eq!(scenario.heave.offset_at(0.0), 0.05, max_relative = 1e-9);
        assert_relative_eq!(scenario.heave.drift_speed(), 0.1, max_relative = 1e-12);
        let probe = scenario.spring_probe.unwrap();
        assert_relative_eq!(probe.preload, 0.50014, max_relative = 1e-4);
        assert_eq!(scenario.design.tensions.len(), 2);
        assert_eq!(scenario.out_dir.as_deref(), Some("results"));
        assert_relative_eq!(scenario.pantograph.tip_offset(), 0.01, max_relative = 1e-12);
        // Band given in gram-force converts to Newtons.
        assert_relative_eq!(
            scenario.settings.band.low,
            gram_force_to_newtons(171.0),
            max_relative = 1e-12
        );
    }

    #[test]
    fn out_of_range_values_fail_validation() {
        let err =
            ScenarioConfig::from_json(r#"{ "loss": { "pulley_efficiency": 1.5 } }"#).unwrap_err();
        assert!(err.to_string().contains("pulley_efficiency"), "{err}");

        let err = ScenarioConfig::from_json(r#"{ "simulation": { "dt_s": 0.0 } }"#).unwrap_err();
        assert!(err.to_string().contains("dt"), "{err}");

        let err = ScenarioConfig::from_json(
            r#"{ "pantograph": { "l1_m": -0.2, "l2_m": 0.2, "r_m": 0.05 } }"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("l1"), "{err}");
    }
}
