//! Why the probe pushes with the same force at every height.
//!
//! A cable under constant spring tension wraps a pulley of radius `r` at the
//! base joint, producing a torque that the 2:1 joint coupling relays to the
//! elbow. Both torques carry the same `cos(theta1)` factor as the contact
//! moment arm, so the pose cancels and the contact force is just
//! `f_i * r / (2 * l2)` — a number fixed by geometry and tension alone.
//!
//! ```bash
//! cargo run --example constant_force
//! ```

use pantoprobe::{
    base_torque, elbow_torque, ideal_output_force, newtons_to_gram_force,
    output_force_via_torque_chain, solve_lever, spring_probe_force, PantographConfig, Result,
};

fn main() -> Result<()> {
    let probe = PantographConfig::new(0.2, 0.2, 0.05)?;
    let tension = 14.906; // constant-force spring pull, newtons

    println!("torque balance through the linkage, pose by pose:");
    println!("  theta1 (rad)   tau1 (N*m)   tau2 (N*m)   contact force (N)");
    for k in 1..=5 {
        let theta1 = std::f64::consts::FRAC_PI_2 * k as f64 / 5.0;
        let (tau1, _alpha) = base_torque(&probe, theta1, tension)?;
        let f_o = output_force_via_torque_chain(&probe, theta1, tension)?;
        let tau2 = elbow_torque(&probe, theta1, f_o)?;
        println!("  {theta1:>12.4}   {tau1:>10.5}   {tau2:>10.5}   {f_o:>17.5}");
    }

    let f_o = ideal_output_force(&probe, tension)?;
    println!();
    println!(
        "closed form: f_o = f_i * r / (2 * l2) = {:.3} * {:.2} / {:.1} = {:.5} N = {:.1} gf",
        tension,
        probe.r(),
        2.0 * probe.l2(),
        f_o,
        newtons_to_gram_force(f_o)
    );

    // The transmission is a pure ratio, so scaling tension scales force.
    println!();
    println!("the ratio is fixed, so force tracks tension linearly:");
    for scale in [0.5, 1.0, 2.0, 8.0] {
        let f = ideal_output_force(&probe, scale * tension)?;
        println!(
            "  f_i = {:>8.3} N  ->  f_o = {:>8.5} N ({:>6.1} gf)",
            scale * tension,
            f,
            newtons_to_gram_force(f)
        );
    }

    // Inverting the ratio sizes the pulley for a target force.
    println!();
    let target = 1.86325;
    let r = solve_lever(target, tension, probe.l2())?;
    println!("inverse problem: {target} N from {tension} N tension on 0.2 m links needs r = {r} m");

    // Contrast: a plain linear spring probe. Same preload, but the force
    // grows with deflection instead of holding level.
    println!();
    println!("a linear spring probe (k = 100 N/m, preload = f_o at first touch):");
    for deflection in [0.0, 0.05, 0.10, 0.15] {
        let f = spring_probe_force(100.0, f_o, deflection)?;
        println!(
            "  deflection {:>4.2} m  ->  {:>7.4} N  ({:+5.1}% off nominal)",
            deflection,
            f,
            100.0 * (f - f_o) / f_o
        );
    }
    println!("  (the pantograph holds {f_o:.5} N across that whole range)");

    Ok(())
}
