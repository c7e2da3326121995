//! Command-line harness around the pantoprobe library: force–height sweeps,
//! contact simulations, design solves, and the built-in invariant suite.
//!
//! The binary stays thin — every computation lives in the library; this file
//! only parses arguments, loads configs, resolves the output directory, and
//! maps library errors onto the exit-code contract (0 success, 2 config
//! error, 3 domain/reachability error, 4 internal failure).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pantoprobe::{
    brute_force_design, compare_probes, force_height_sweep, nominal_output_force, plot, report,
    simulate, solve_design, verify, DwellReport, Error, LossModel, MotionDirection, ScenarioConfig,
};

/// Environment variable naming the default output directory.
const OUT_DIR_ENV: &str = "PANTOPROBE_OUT";

#[derive(Parser)]
#[command(
    name = "pantoprobe",
    version,
    about = "Constant-force pantograph probe: sweeps, contact simulation, design search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a force-height sweep; writes sweep.csv and sweep.svg
    Sweep(SweepArgs),
    /// Run a quasi-static contact simulation; writes timeseries.csv and dwell.json
    Simulate(SimulateArgs),
    /// Solve the configured design problem; writes design.json
    Design(DesignArgs),
    /// Run the built-in invariant suite and print a pass/fail table
    Verify,
}

#[derive(Args)]
struct CommonArgs {
    /// Scenario config file (JSON); omit to use the built-in reference scenario
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output directory (overrides the config's out_dir and $PANTOPROBE_OUT; default ./out)
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Override the measurement-noise seed from the config
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
    /// Drop friction, pulley losses, spring degradation, and noise
    #[arg(long)]
    lossless: bool,
    /// Direction of travel for friction hysteresis
    #[arg(long, value_enum, value_name = "DIR")]
    direction: Option<DirectionArg>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Override the measurement-noise seed from the config
    #[arg(long, value_name = "U64")]
    seed: Option<u64>,
    /// Drop friction, pulley losses, spring degradation, and noise
    #[arg(long)]
    lossless: bool,
    /// Also run the linear spring-probe baseline and emit paired reports
    #[arg(long)]
    compare_spring_probe: bool,
}

#[derive(Args)]
struct DesignArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Cross-check the solver against exhaustive enumeration (exit 4 on mismatch)
    #[arg(long)]
    brute_force_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    /// Probe tip moving up, toward the surface
    Extending,
    /// Probe tip being pushed back down
    Compressing,
}

impl From<DirectionArg> for MotionDirection {
    fn from(arg: DirectionArg) -> Self {
        match arg {
            DirectionArg::Extending => MotionDirection::Extending,
            DirectionArg::Compressing => MotionDirection::Compressing,
        }
    }
}

/// A failed run: message for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::InvalidParameter(_) | Error::Config(_) | Error::ConfigParse(_) => 2,
            Error::OutOfBranch { .. }
            | Error::Unreachable { .. }
            | Error::UnequalLinks { .. }
            | Error::Infeasible(_) => 3,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn internal(message: String) -> Failure {
    Failure { code: 4, message }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(args) => run_sweep(args),
        Command::Simulate(args) => run_simulate(args),
        Command::Design(args) => run_design(args),
        Command::Verify => run_verify(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn load_config(path: Option<&PathBuf>) -> Result<ScenarioConfig, Failure> {
    Ok(match path {
        Some(path) => ScenarioConfig::from_file(path)?,
        None => ScenarioConfig::reference(),
    })
}

/// `--lossless` and `--seed` rewrite the loss chain before any computation.
fn apply_overrides(config: &mut ScenarioConfig, seed: Option<u64>, lossless: bool) {
    if lossless {
        config.loss = LossModel::lossless();
        config.spring = config.spring.without_degradation();
    }
    if let Some(seed) = seed {
        config.loss.rng_seed = seed;
    }
}

/// Flag beats config `out_dir` beats `$PANTOPROBE_OUT` beats `./out`.
fn resolve_out_dir(flag: Option<&PathBuf>, config: &ScenarioConfig) -> PathBuf {
    if let Some(dir) = flag {
        return dir.clone();
    }
    if let Some(dir) = &config.out_dir {
        return PathBuf::from(dir);
    }
    if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    PathBuf::from("out")
}

fn write_output(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| internal(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents)
        .map_err(|e| internal(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn run_sweep(args: SweepArgs) -> Result<(), Failure> {
    let mut config = load_config(args.common.config.as_ref())?;
    apply_overrides(&mut config, args.seed, args.lossless);
    if let Some(direction) = args.direction {
        config.sweep_direction = direction.into();
    }

    let result = force_height_sweep(
        &config.pantograph,
        &config.spring,
        &config.loss,
        &config.sweep_heights,
        config.sweep_direction,
    )?;
    let nominal = nominal_output_force(&config.pantograph, &config.spring);

    let out_dir = resolve_out_dir(args.common.out.as_ref(), &config);
    let csv_path = write_output(&out_dir, "sweep.csv", &report::sweep_csv(&result))?;
    let svg_path = write_output(&out_dir, "sweep.svg", &plot::sweep_svg(&result, nominal))?;

    print!("{}", plot::sweep_ascii(&result, nominal));
    println!(
        "{} heights, {} travel; wrote {} and {}",
        result.rows.len(),
        result.direction,
        csv_path.display(),
        svg_path.display()
    );
    Ok(())
}

fn run_simulate(args: SimulateArgs) -> Result<(), Failure> {
    let mut config = load_config(args.common.config.as_ref())?;
    apply_overrides(&mut config, args.seed, args.lossless);
    let out_dir = resolve_out_dir(args.common.out.as_ref(), &config);

    if args.compare_spring_probe {
        let probe = config.spring_probe.ok_or_else(|| {
            Failure::from(Error::Config(
                "--compare-spring-probe needs a `spring_probe` section in the simulation config"
                    .into(),
            ))
        })?;
        let comparison = compare_probes(
            &config.pantograph,
            &config.spring,
            &config.loss,
            &probe,
            &config.surface,
            &config.heave,
            &config.settings,
        )?;
        write_output(
            &out_dir,
            "timeseries.csv",
            &report::timeseries_csv(&comparison.pantograph.steps),
        )?;
        write_output(
            &out_dir,
            "dwell.json",
            &report::dwell_json(&comparison.pantograph.report),
        )?;
        write_output(
            &out_dir,
            "probe_timeseries.csv",
            &report::timeseries_csv(&comparison.spring_probe.steps),
        )?;
        write_output(
            &out_dir,
            "probe_dwell.json",
            &report::dwell_json(&comparison.spring_probe.report),
        )?;
        print_dwell_summary("pantograph  ", &comparison.pantograph.report);
        print_dwell_summary("spring probe", &comparison.spring_probe.report);
        println!("wrote 4 report files to {}", out_dir.display());
    } else {
        let run = simulate(
            &config.pantograph,
            &config.spring,
            &config.loss,
            &config.surface,
            &config.heave,
            &config.settings,
        )?;
        write_output(
            &out_dir,
            "timeseries.csv",
            &report::timeseries_csv(&run.steps),
        )?;
        write_output(&out_dir, "dwell.json", &report::dwell_json(&run.report))?;
        print_dwell_summary("pantograph", &run.report);
        println!("wrote 2 report files to {}", out_dir.display());
    }
    Ok(())
}

fn print_dwell_summary(label: &str, report: &DwellReport) {
    println!(
        "{label}: measurement {} | {} contact event(s) | longest in-band dwell {:.3} s of {:.3} s required | in-band fraction {:.3}",
        if report.measurement_achieved { "achieved" } else { "NOT achieved" },
        report.events.len(),
        report.longest_dwell,
        report.required_dwell,
        report.fraction_in_band,
    );
}

fn run_design(args: DesignArgs) -> Result<(), Failure> {
    let config = load_config(args.common.config.as_ref())?;
    let solution = solve_design(&config.design)?;

    if args.brute_force_check {
        let brute = brute_force_design(&config.design)?;
        if brute != solution {
            return Err(internal(format!(
                "solver and exhaustive enumeration disagree: solver (l={}, r={}, tension={}), enumeration (l={}, r={}, tension={})",
                solution.link_length,
                solution.lever_arm,
                solution.tension,
                brute.link_length,
                brute.lever_arm,
                brute.tension,
            )));
        }
        println!("brute-force check: solver matches exhaustive enumeration");
    }

    let out_dir = resolve_out_dir(args.common.out.as_ref(), &config);
    let path = write_output(&out_dir, "design.json", &report::design_json(&solution))?;

    if solution.feasible {
        println!(
            "feasible: l = {:.4} m, r = {:.4} m, tension = {:.3} N -> {:.5} N ({:.1} gf), footprint {:.4} m",
            solution.link_length,
            solution.lever_arm,
            solution.tension,
            solution.achieved_force,
            solution.achieved_force_gf,
            solution.footprint,
        );
    } else {
        println!("infeasible; closest candidate violates:");
        for violation in &solution.violations {
            println!("  - {violation}");
        }
    }
    println!("wrote {}", path.display());
    Ok(())
}

fn run_verify() -> Result<(), Failure> {
    let outcomes = verify::run_all();
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    for outcome in &outcomes {
        println!(
            "{}  {:width$}  {}",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.name,
            outcome.detail,
        );
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed == 0 {
        println!("all {} checks passed", outcomes.len());
        Ok(())
    } else {
        Err(internal(format!(
            "{failed} of {} checks failed",
            outcomes.len()
        )))
    }
}
