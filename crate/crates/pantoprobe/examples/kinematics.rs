//! Poses, the scissor constraint, and velocities of the pantograph linkage.
//!
//! The probe is a two-link planar chain whose joints are geared together so
//! that the base and elbow angles always satisfy `2*theta1 + theta2 = pi`.
//! That single constraint is what makes the mechanism a probe: the endpoint
//! loses its sideways freedom and travels a straight vertical line.
//!
//! ```bash
//! cargo run --example kinematics
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

use pantoprobe::{constrain, JointState, PantographConfig, Result};

fn main() -> Result<()> {
    // Reference geometry: two 0.2 m links and a 0.05 m drive pulley.
    let probe = PantographConfig::new(0.2, 0.2, 0.05)?;

    println!("unconstrained chain: endpoint goes wherever the two joints say");
    for (theta1, theta2) in [(0.0, 0.0), (FRAC_PI_2, 0.0), (FRAC_PI_3, FRAC_PI_3)] {
        let p = probe.forward_kinematics(JointState { theta1, theta2 });
        println!(
            "  theta1 = {theta1:>6.3} rad, theta2 = {theta2:>6.3} rad  ->  x = {:>7.4} m, y = {:>7.4} m",
            p.x, p.y
        );
    }

    println!();
    println!("scissor-constrained chain: x pinned to zero, y sweeps the stroke");
    println!("  theta1 (rad)   theta2 (rad)         x (m)        y (m)");
    for k in 1..=6 {
        let theta1 = FRAC_PI_2 * k as f64 / 6.0;
        let joints = constrain(theta1)?;
        let p = probe.forward_kinematics(joints);
        println!(
            "  {:>12.4}   {:>12.4}   {:>11.2e}   {:>9.4}",
            joints.theta1, joints.theta2, p.x, p.y
        );
    }

    println!();
    println!("inverse kinematics: pick a height, recover the pose");
    for target in [0.1, 0.25, 0.4] {
        let joints = probe.inverse_kinematics(target)?;
        let back = probe.constrained_fk(joints.theta1)?;
        println!(
            "  y = {target:>5.3} m  ->  theta1 = {:>7.4} rad  ->  y again = {:>7.4} m",
            joints.theta1, back.y
        );
    }

    // Heights outside (0, l1 + l2] have no pose; the error says so.
    let too_high = probe.inverse_kinematics(0.5).unwrap_err();
    println!("  y = 0.500 m  ->  {too_high}");

    println!();
    println!("constrained velocity: the elbow counter-rotates at twice the rate");
    for theta1 in [FRAC_PI_6, FRAC_PI_3, FRAC_PI_2] {
        let (joints, endpoint) = probe.constrained_velocity(theta1, 1.0)?;
        println!(
            "  theta1 = {theta1:>6.4} rad: omega = ({:+.1}, {:+.1}) rad/s, endpoint rate = ({:>8.1e}, {:>7.4}) m/s",
            joints.omega1, joints.omega2, endpoint.x, endpoint.y
        );
    }
    println!("  (the vertical rate dies at theta1 = pi/2: full extension is a singularity)");

    println!();
    println!("Jacobian at theta1 = pi/3 on the constraint:");
    let joints = constrain(FRAC_PI_3)?;
    let j = probe.jacobian(joints);
    println!("  [{:>8.4}  {:>8.4}]", j[(0, 0)], j[(0, 1)]);
    println!("  [{:>8.4}  {:>8.4}]", j[(1, 0)], j[(1, 1)]);

    Ok(())
}
