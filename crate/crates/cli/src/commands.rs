//! Subcommand wiring: each command returns its stdout payload; file
//! artifacts are written as side effects.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use infowave_core::analysis::{
    disease_free_equilibrium, endemic_equilibrium, positivity_lower_bound, reproduction_number,
    stability_spectrum, strength_number, Compartment, StabilityClass, SupBounds,
};
use infowave_core::model::ModelParams;
use infowave_core::solvers::{
    integrate_classical, integrate_ffe_with, integrate_ffm_with, integrate_ffp_with, Grid,
    Trajectory,
};

use crate::config::{parse_config, KernelChoice, ScenarioConfig};
use crate::report::{build_run_report, Computed};
use crate::{csv, svg, UsageError};

#[derive(Debug, Parser)]
#[command(
    name = "infowave",
    version,
    about = "Simulate and analyze harmful-information dynamics under fractal-fractional kernels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate the configured scenario, write CSV (and SVG when
    /// configured) and print the run report
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        kernel: Option<KernelChoice>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        eta: Option<f64>,
        #[arg(long)]
        h: Option<f64>,
        #[arg(long = "t-end")]
        t_end: Option<f64>,
    },
    /// Print the disease-free and endemic equilibrium reports
    Equilibria {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print the reproduction and strength numbers
    R0 {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print the stability spectrum at the disease-free point
    Stability {
        #[arg(long)]
        config: PathBuf,
    },
    /// Compare a trajectory against its positivity lower bounds
    Bounds {
        #[arg(long)]
        config: PathBuf,
    },
    /// Append Lyapunov diagnostics along a trajectory
    Lyapunov {
        #[arg(long)]
        config: PathBuf,
    },
    /// Tabulate diagnostics over a one-parameter sweep
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        param: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        steps: usize,
    },
}

/// Runs one command to completion, returning the stdout payload.
pub fn execute(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Simulate {
            config,
            kernel,
            alpha,
            eta,
            h,
            t_end,
        } => simulate(&config, kernel, alpha, eta, h, t_end),
        Command::Equilibria { config } => equilibria(&config),
        Command::R0 { config } => r0(&config),
        Command::Stability { config } => stability(&config),
        Command::Bounds { config } => bounds(&config),
        Command::Lyapunov { config } => lyapunov(&config),
        Command::Sweep {
            config,
            param,
            from,
            to,
            steps,
        } => sweep(&config, &param, from, to, steps),
    }
}

fn kernel_label(kernel: KernelChoice) -> &'static str {
    match kernel {
        KernelChoice::Classical => "classical",
        KernelChoice::Ffp => "ffp",
        KernelChoice::Ffe => "ffe",
        KernelChoice::Ffm => "ffm",
    }
}

fn integrate(config: &ScenarioConfig) -> Result<Trajectory> {
    let params = config.resolved_params();
    let grid = Grid::from_t_end(config.grid.h, config.grid.t_end)?;
    let options = config.solver_options();
    let trajectory = match config.kernel {
        KernelChoice::Classical => integrate_classical(&params, &config.initial, &grid)?,
        KernelChoice::Ffp => integrate_ffp_with(
            &params,
            &config.initial,
            &grid,
            config.alpha,
            config.eta,
            &options,
        )?,
        KernelChoice::Ffe => integrate_ffe_with(
            &params,
            &config.initial,
            &grid,
            config.alpha,
            config.eta,
            &options,
        )?,
        KernelChoice::Ffm => integrate_ffm_with(
            &params,
            &config.initial,
            &grid,
            config.alpha,
            config.eta,
            &options,
        )?,
    };
    Ok(trajectory)
}

fn simulate(
    path: &Path,
    kernel: Option<KernelChoice>,
    alpha: Option<f64>,
    eta: Option<f64>,
    h: Option<f64>,
    t_end: Option<f64>,
) -> Result<String> {
    let mut config = parse_config(path)?;
    if let Some(kernel) = kernel {
        config.kernel = kernel;
    }
    if let Some(alpha) = alpha {
        config.alpha = alpha;
    }
    if let Some(eta) = eta {
        config.eta = eta;
    }
    if let Some(h) = h {
        config.grid.h = h;
    }
    if let Some(t_end) = t_end {
        config.grid.t_end = t_end;
    }
    config
        .validate()
        .context("validating config after command-line overrides")?;

    let started = Instant::now();
    let trajectory = integrate(&config)?;
    let wall = started.elapsed().as_secs_f64();

    let csv_path = config
        .outputs
        .csv_path
        .clone()
        .unwrap_or_else(|| PathBuf::from("trajectory.csv"));
    csv::write_trajectory_csv(&trajectory, &csv_path)?;
    if let Some(svg_path) = &config.outputs.svg_path {
        svg::emit_plot_svg(&trajectory, svg_path, &Compartment::ALL)?;
    }

    let params = config.resolved_params();
    let report = build_run_report(&params, &trajectory, kernel_label(config.kernel), wall);
    let rendered = serde_json::to_string_pretty(&report)?;
    if let Some(report_path) = &config.outputs.report_path {
        std::fs::write(report_path, &rendered)
            .with_context(|| format!("writing report {}", report_path.display()))?;
    }
    Ok(format!("{rendered}\n"))
}

fn equilibria(path: &Path) -> Result<String> {
    let config = parse_config(path)?;
    let params = config.resolved_params();
    let disease_free: Computed<_> = disease_free_equilibrium(&params).into();
    let endemic: Computed<_> = endemic_equilibrium(&params).into();
    let doc = serde_json::json!({
        "disease_free": disease_free,
        "endemic": endemic,
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&doc)?))
}

fn r0(path: &Path) -> Result<String> {
    let config = parse_config(path)?;
    let params = config.resolved_params();
    let r0 = reproduction_number(&params)?;
    let mut out = format!("R0 = {r0:?}\n");
    match strength_number(&params) {
        Ok(sn) => {
            let _ = writeln!(out, "strength_number = {sn:?}");
        }
        Err(e) => {
            let _ = writeln!(out, "strength_number = inapplicable ({e})");
        }
    }
    Ok(out)
}

fn stability(path: &Path) -> Result<String> {
    let config = parse_config(path)?;
    let params = config.resolved_params();
    let report = stability_spectrum(&params)?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&report)?))
}

fn bounds(path: &Path) -> Result<String> {
    let config = parse_config(path)?;
    let params = config.resolved_params();
    let trajectory = integrate(&config)?;
    let sup = SupBounds::from_trajectory(&trajectory);
    let family = config
        .bound_check
        .map(|f| f.family())
        .unwrap_or(infowave_core::analysis::OperatorFamily::Classical);
    let constants = config.kernel_constants();
    let init = config.initial.as_array();

    let mut out = format!("family = {}\n", family.name());
    let mut total = 0usize;
    for compartment in Compartment::ALL {
        let x0 = init[compartment.index()];
        let mut violations = 0usize;
        let mut worst_margin = f64::INFINITY;
        for (t, state) in trajectory.nodes() {
            let bound = positivity_lower_bound(
                family,
                &params,
                &sup,
                compartment,
                x0,
                t,
                config.alpha,
                config.eta,
                &constants,
            )?;
            let margin = state.as_array()[compartment.index()] - bound;
            worst_margin = worst_margin.min(margin);
            if margin < 0.0 {
                violations += 1;
            }
        }
        total += violations;
        let _ = writeln!(
            out,
            "{:<4} violations={violations} worst_margin={worst_margin:.3e}",
            compartment.label()
        );
    }
    let _ = writeln!(out, "total violations = {total}");
    Ok(out)
}

fn lyapunov(path: &Path) -> Result<String> {
    let config = parse_config(path)?;
    let params = config.resolved_params();
    let equilibrium = endemic_equilibrium(&params)
        .context("lyapunov diagnostics need the endemic equilibrium (spreading regime)")?;
    let trajectory = integrate(&config)?;
    let text = csv::lyapunov_csv_string(&trajectory, &params, &equilibrium.point);
    let csv_path = config
        .outputs
        .csv_path
        .clone()
        .unwrap_or_else(|| PathBuf::from("lyapunov.csv"));
    std::fs::write(&csv_path, &text)
        .with_context(|| format!("writing Lyapunov CSV {}", csv_path.display()))?;
    let rows = text.lines().count() - 1;
    Ok(format!(
        "wrote {} ({rows} rows; equilibrium residual {:.3e})\n",
        csv_path.display(),
        equilibrium.residual_norm
    ))
}

fn set_sweep_param(config: &mut ScenarioConfig, name: &str, value: f64) -> Result<()> {
    let p: &mut ModelParams = &mut config.params;
    match name {
        "pi" => p.pi = value,
        "beta" => p.beta = value,
        "sigma" => p.sigma = value,
        "nu" => p.nu = value,
        "gamma1" => p.gamma1 = value,
        "gamma2" => p.gamma2 = value,
        "gamma3" => p.gamma3 = value,
        "gamma4" => p.gamma4 = value,
        "tau" => p.tau = value,
        "tau1" => p.tau1 = value,
        "tau2" => p.tau2 = value,
        "tau3" => p.tau3 = value,
        "tau4" => p.tau4 = value,
        "phi1" => p.phi1 = value,
        "phi2" => p.phi2 = value,
        "alpha" => config.alpha = value,
        "eta" => config.eta = value,
        other => {
            return Err(UsageError(format!("unknown sweep parameter `{other}`")).into());
        }
    }
    Ok(())
}

fn sweep(path: &Path, param: &str, from: f64, to: f64, steps: usize) -> Result<String> {
    if steps < 1 {
        return Err(UsageError("sweep needs at least one step".into()).into());
    }
    let base = parse_config(path)?;
    let mut out = format!("{param},r0,strength_number,final_i,stability\n");
    for k in 0..steps {
        let value = if steps == 1 {
            from
        } else {
            from + (to - from) * k as f64 / (steps - 1) as f64
        };
        let mut config = base.clone();
        set_sweep_param(&mut config, param, value)?;
        config
            .validate()
            .with_context(|| format!("sweep point {param} = {value}"))?;
        let params = config.resolved_params();
        let r0 = reproduction_number(&params)?;
        let sn = match strength_number(&params) {
            Ok(v) => format!("{v:?}"),
            Err(_) => "inapplicable".to_string(),
        };
        let classification = match stability_spectrum(&params)?.classification {
            StabilityClass::LocallyStable => "locally_stable",
            StabilityClass::Unstable => "unstable",
        };
        let final_i = integrate(&config)?.final_state().i;
        let _ = writeln!(out, "{value:?},{r0:?},{sn},{final_i:?},{classification}");
    }
    Ok(out)
}
