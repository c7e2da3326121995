//! Holding contact long enough to take a measurement.
//!
//! The probe rides under an ice surface while its vehicle heaves; a
//! measurement counts when the contact force stays inside a band around
//! nominal for a required dwell time. Three scenarios: a flat surface in
//! easy reach (clean dwell), a surface too far away (no contact at all),
//! and a heave large enough to break contact each cycle (fragmented dwell).
//!
//! ```bash
//! cargo run --example contact_dwell
//! ```

use pantoprobe::{
    presets, simulate, DwellReport, HeaveTrajectory, Result, SimulationSettings, SurfaceProfile,
};

fn describe(label: &str, report: &DwellReport) {
    println!("{label}");
    println!(
        "  measurement {} | in-band fraction {:.3} | longest in-band dwell {:.3} s of {:.3} s required",
        if report.measurement_achieved { "ACHIEVED" } else { "not achieved" },
        report.fraction_in_band,
        report.longest_dwell,
        report.required_dwell,
    );
    if report.events.is_empty() {
        println!("  no contact events");
    }
    for (i, event) in report.events.iter().enumerate() {
        println!(
            "  event {}: {:.3} s -> {:.3} s, force {:.3}..{:.3} N (mean {:.3}){}",
            i + 1,
            event.start,
            event.end,
            event.min_force,
            event.max_force,
            event.mean_force,
            if event.saturated { ", saturated" } else { "" }
        );
    }
    println!();
}

fn main() -> Result<()> {
    // Flat ice 0.25 m up, vehicle holding station: the probe sits in the
    // middle of its stroke and the force never leaves the band.
    let flat = presets::flat_contact();
    let run = simulate(
        &flat.config,
        &flat.spring,
        &flat.loss,
        &flat.surface,
        &flat.heave,
        &flat.settings,
    )?;
    describe("flat surface at 0.25 m, no heave:", &run.report);

    // Same probe, surface at 0.5 m: beyond the 0.4 m reach, so it never
    // touches and the report is empty.
    let far = presets::out_of_reach();
    let run = simulate(
        &far.config,
        &far.spring,
        &far.loss,
        &far.surface,
        &far.heave,
        &far.settings,
    )?;
    describe("flat surface at 0.5 m (out of reach):", &run.report);

    // A 0.2 m heave against a surface at 0.3 m drags the gap across the
    // reach boundary twice a cycle: contact fragments into short events.
    let run = simulate(
        &flat.config,
        &flat.spring,
        &flat.loss,
        &SurfaceProfile::flat(0.3)?,
        &HeaveTrajectory::sinusoid(0.0, 0.2, 2.0, 0.0)?,
        &SimulationSettings {
            duration: 6.0,
            ..flat.settings
        },
    )?;
    describe("surface at 0.3 m, 0.2 m heave at 0.5 Hz:", &run.report);

    println!("dwell quality is the real currency: a probe can touch often and still");
    println!("never hold the band long enough to finish a measurement.");
    Ok(())
}
