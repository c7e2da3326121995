//! Sizing a probe: search link length, pulley radius, and spring tension.
//!
//! Given a target contact force, a stroke to cover, and a deployment hole to
//! fit through, the solver grids the geometry bounds and the spring catalog,
//! keeps candidates that reach the stroke, fit the hole, and hit the force,
//! and returns the smallest one. Infeasible problems return the closest
//! candidate and its violations instead of an error — "no" is an answer.
//!
//! ```bash
//! cargo run --example design_search
//! ```

use pantoprobe::{brute_force_design, presets, solve_design, DesignSolution, Result};

fn describe(label: &str, solution: &DesignSolution) {
    println!("{label}");
    if solution.feasible {
        println!(
            "  l1 = l2 = {:.3} m, r = {:.3} m, tension = {:.3} N",
            solution.link_length, solution.lever_arm, solution.tension
        );
        println!(
            "  achieved force {:.5} N ({:.1} gf), folded footprint {:.3} m",
            solution.achieved_force, solution.achieved_force_gf, solution.footprint
        );
    } else {
        println!("  infeasible; closest candidate fails because:");
        for violation in &solution.violations {
            println!("    - {violation}");
        }
    }
    println!();
}

fn main() -> Result<()> {
    // Reference problem: ~190 gf of contact force over a 100-350 mm stroke,
    // folding through a 0.30 m hole, with one spring on the shelf.
    let spec = presets::design_example();
    println!(
        "target {:.4} N over stroke {:.2}-{:.2} m, envelope {:.2} m, {} spring(s) available",
        spec.target_force,
        spec.stroke.0,
        spec.stroke.1,
        spec.envelope_diameter,
        spec.tensions.len()
    );
    println!();

    let solution = solve_design(&spec)?;
    describe("best feasible design:", &solution);

    // The streaming search must agree with brute-force enumeration of the
    // whole grid — same candidate, same tie-breaks.
    let brute = brute_force_design(&spec)?;
    assert_eq!(solution, brute);
    println!("cross-check: exhaustive enumeration picks the identical candidate");
    println!();

    // Ask for more stroke than any in-bounds link pair can deliver and the
    // answer flips to a diagnosis.
    let mut impossible = spec.clone();
    impossible.stroke = (0.10, 0.50);
    describe(
        "same problem, stroke stretched to 0.50 m:",
        &solve_design(&impossible)?,
    );

    // Shrink the deployment hole instead: geometry that hits the force can
    // no longer fold through it.
    let mut tight = spec.clone();
    tight.envelope_diameter = 0.10;
    describe(
        "same problem, envelope squeezed to 0.10 m:",
        &solve_design(&tight)?,
    );

    Ok(())
}
