//! Constant-force pantograph probe toolkit: kinematics, statics, quasi-static
//! contact simulation, and grid-search design synthesis for scissor-linkage
//! probes that press an instrument against an overhead surface with a force
//! that stays flat across the stroke.
//!
//! A pantograph probe folds two equal links into a scissor driven by a spring
//! line wound around a base pulley. The geometry cancels the pose dependence
//! of the transmission, so one spring tension maps to one contact force over
//! the whole stroke. This crate models that mechanism end to end:
//!
//! - [`PantographConfig`] — link geometry, forward/inverse kinematics,
//!   Jacobian, and the scissor-constrained pose and velocity laws.
//! - [`SpringModel`], [`LossModel`], and the force laws ([`ideal_output_force`],
//!   [`lossy_output_force`], [`force_height_sweep`]) — from ideal transmission
//!   to the friction/efficiency/noise chain seen on real hardware.
//! - [`solve_contact`], [`simulate`], [`compare_probes`] — quasi-static
//!   contact against a moving surface, dwell-band bookkeeping, and a linear
//!   spring probe baseline for comparison.
//! - [`DesignSpec`] / [`solve_design`] — exhaustive-equivalent grid search for
//!   link length, lever radius, and spring tension under packaging
//!   constraints.
//! - [`scenario::ScenarioConfig`] — strict JSON configuration for the above,
//!   shared by the CLI harness and the examples.
//!
//! ## Examples
//!
//! The `examples/` directory is the front door; each one is a small, runnable
//! study of one capability:
//!
//! - **`kinematics`** — poses, the vertical-line constraint, and velocities
//! - **`constant_force`** — torque balance and pose-independent output force
//! - **`force_sweep`** — the 13-height force protocol with and without losses
//! - **`contact_dwell`** — dwell quality against flat and out-of-reach surfaces
//! - **`probe_comparison`** — pantograph vs. linear spring probe under heave
//! - **`design_search`** — feasible-region search for a target contact force
//!
//! ```bash
//! cargo run --example kinematics
//! cargo run --example constant_force
//! cargo run --example force_sweep
//! cargo run --example contact_dwell
//! cargo run --example probe_comparison
//! cargo run --example design_search
//! ```
//!
//! ## Quick start
//!
//! The reference mechanism (0.2 m links, 0.05 m pulley) turns a 14.906 N
//! spring tension into about 190 gram-force of contact force at any height:
//!
//! ```
//! use pantoprobe::{ideal_output_force, newtons_to_gram_force, PantographConfig};
//!
//! let probe = PantographConfig::new(0.2, 0.2, 0.05)?;
//! let force = ideal_output_force(&probe, 14.906)?;
//!
//! assert!((force - 1.86325).abs() < 1e-12);
//! assert!((newtons_to_gram_force(force) - 190.0).abs() < 0.01);
//! # Ok::<(), pantoprobe::Error>(())
//! ```
//!
//! ## Command-line harness
//!
//! A thin binary wraps the library for batch work; outputs land in `--out`,
//! the config's `out_dir`, `$PANTOPROBE_OUT`, or `./out`, in that order:
//!
//! ```bash
//! pantoprobe sweep --config scenario.json --out results/
//! pantoprobe simulate --config scenario.json --compare-spring-probe
//! pantoprobe design --config scenario.json --brute-force-check
//! pantoprobe verify
//! ```
//!
//! ## Conventions
//!
//! SI units throughout (meters, newtons, newton-meters, radians, seconds);
//! gram-force appears only in reports (1 gf = 9.80665 mN). The working branch
//! keeps the base joint in (0, pi/2], where the probe tip rises straight up.
//! Everything stochastic draws from a seeded generator, so every sweep,
//! simulation, and search is reproducible bit for bit.

#![warn(missing_docs)]

pub mod contact;
pub mod design;
pub mod error;
pub mod linkage;
pub mod plot;
pub mod presets;
pub mod report;
pub mod scenario;
pub mod statics;
pub mod units;
pub mod verify;

pub use contact::{
    compare_probes, simulate, simulate_spring_probe, solve_contact, ContactEvent, ContactSample,
    DwellReport, ForceBand, HeaveKind, HeaveTrajectory, ProbeComparison, SimStep, SimulationRun,
    SimulationSettings, SpringProbe, SurfaceProfile, MIN_STROKE_FRACTION,
};
pub use design::{brute_force_design, solve_design, solve_lever, DesignSolution, DesignSpec};
pub use error::{Error, Result};
pub use linkage::{
    constrain, EndpointState, JointState, JointVelocity, PantographConfig, CONSTRAINT_TOLERANCE,
    EQUAL_LINK_TOLERANCE,
};
pub use scenario::ScenarioConfig;
pub use statics::{
    base_torque, elbow_torque, force_height_sweep, ideal_output_force, lossy_output_force,
    lossy_output_force_with_rng, nominal_output_force, output_force_via_torque_chain,
    spring_probe_force, ForceState, LossModel, MotionDirection, SpringKind, SpringModel,
    SweepResult, SweepRow,
};
pub use units::{gram_force_to_newtons, newtons_to_gram_force, STANDARD_GRAVITY};
