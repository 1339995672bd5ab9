//! `rgg`: predicted and empirical critical radii from the command line.
//!
//! Results go to stdout as JSON (or to a CSV file for `simulate`),
//! diagnostics to stderr. Bad flags and unusable inputs exit with status 2.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use rgg_core::asymptotics::{
    boundary_target, integral_lhs, limit_probability, predicted_radius, xi_for, IntegralBreakdown,
    PredictionInput, QuadratureSpec,
};
use rgg_core::geometry::spec::{builtin, load_region, BUILTIN_NAMES};
use rgg_core::montecarlo::{run_experiment, write_summary_csv, write_trials_csv, ExperimentConfig};
use rgg_core::rgg::{radii, RadiusResult};
use rgg_core::sampling::{read_csv, read_json, PointSet, Process};
use rgg_core::ConvexRegion;

#[derive(Parser)]
#[command(
    name = "rgg",
    version,
    about = "Critical transmission radii of random geometric graphs"
)]
struct Cli {
    /// Worker threads (results do not depend on this).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted radius r_n, xi and the limit probability.
    Predict(PredictArgs),
    /// Evaluate the integral whose limit is e^-c, split into interior and boundary parts.
    Integral(IntegralArgs),
    /// Monte Carlo estimate of Pr{rho <= r_n} on a c-grid, written as CSV.
    Simulate(SimulateArgs),
    /// Exact critical radii of a point file (CSV `x,y` or JSON).
    Radius(RadiusArgs),
    /// List the built-in regions.
    Regions,
}

#[derive(Args)]
struct PredictArgs {
    #[arg(long)]
    n: f64,
    /// Order k; the events are delta >= k+1 and kappa >= k+1.
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    c: f64,
    /// Perimeter of the unit-area region.
    #[arg(long, conflicts_with = "region", required_unless_present = "region")]
    perimeter: Option<f64>,
    /// Region file or built-in name; its perimeter is used.
    #[arg(long)]
    region: Option<String>,
}

#[derive(Args)]
struct IntegralArgs {
    /// Region file or built-in name.
    #[arg(long, default_value = "unit-square")]
    region: String,
    #[arg(long)]
    n: f64,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    c: f64,
    /// Evaluate at this radius instead of the predicted one.
    #[arg(long)]
    r: Option<f64>,
    /// Cell sizes as fractions of r: `interior,band`.
    #[arg(long, value_delimiter = ',')]
    cells: Option<Vec<f64>>,
    /// Width of the refined band, in multiples of r.
    #[arg(long)]
    band_width: Option<f64>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Region file or built-in name.
    #[arg(long, default_value = "unit-square")]
    region: String,
    #[arg(long, default_value_t = 2000)]
    n: usize,
    /// Order k; trials compute both radii at k+1.
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "-1,0,1,2",
        allow_hyphen_values = true
    )]
    c_grid: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    reps: usize,
    #[arg(long, env = "RGG_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "uniform")]
    process: Process,
    /// Summary CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Optional per-trial CSV path.
    #[arg(long)]
    trials_out: Option<PathBuf>,
}

#[derive(Args)]
struct RadiusArgs {
    /// Point file: CSV with optional `x,y` header, or a JSON array when the
    /// name ends in `.json`.
    points: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

/// An input problem: reported on stderr with exit status 2.
#[derive(Debug)]
struct ConfigError(String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn config<T>(r: rgg_core::Result<T>, flag: &str) -> Result<T> {
    r.map_err(|e| ConfigError(format!("{flag}: {e}")).into())
}

fn resolve_region(arg: &str) -> Result<ConvexRegion> {
    let path = Path::new(arg);
    if path.exists() {
        return config(load_region(path), "--region");
    }
    if BUILTIN_NAMES.contains(&arg) {
        return config(builtin(arg, &Default::default()), "--region");
    }
    Err(ConfigError(format!(
        "--region: `{arg}` is neither a readable file nor a built-in ({})",
        BUILTIN_NAMES.join(", ")
    ))
    .into())
}

fn unit_area(region: &ConvexRegion) -> Result<()> {
    if (region.area() - 1.0).abs() > 1e-9 {
        return Err(ConfigError(format!(
            "--region: area is {}, the prediction needs unit area (set \"normalize\": true)",
            region.area()
        ))
        .into());
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Prediction {
    n: f64,
    k: usize,
    c: f64,
    perimeter: f64,
    r_n: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    xi: Option<f64>,
    limit_probability: f64,
}

fn predict(a: PredictArgs) -> Result<()> {
    let (l, flag) = match (&a.region, a.perimeter) {
        (Some(name), _) => {
            let region = resolve_region(name)?;
            unit_area(&region)?;
            (region.perimeter(), "--region")
        }
        (None, Some(l)) => (l, "--perimeter"),
        (None, None) => unreachable!("clap requires one of --perimeter/--region"),
    };
    let input = PredictionInput::new(a.n, a.k, a.c, l);
    let flag = if input.n < 2.0 || (a.k >= 1 && input.n.ln().ln() <= 0.0) {
        "--n"
    } else {
        flag
    };
    let r_n = config(predicted_radius(&input), flag)?;
    print_json(&Prediction {
        n: a.n,
        k: a.k,
        c: a.c,
        perimeter: l,
        r_n,
        xi: config(xi_for(&input), flag)?,
        limit_probability: limit_probability(a.c),
    })
}

#[derive(Serialize)]
struct Targets {
    e_minus_c: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_minus_xi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary: Option<f64>,
}

#[derive(Serialize)]
struct IntegralReport {
    region: String,
    n: f64,
    k: usize,
    c: f64,
    r: f64,
    quadrature: QuadratureSpec,
    breakdown: IntegralBreakdown,
    targets: Targets,
}

fn integral(a: IntegralArgs) -> Result<()> {
    let region = resolve_region(&a.region)?;
    let mut quad = QuadratureSpec::default();
    if let Some(cells) = &a.cells {
        if cells.len() != 2 {
            return Err(ConfigError(format!(
                "--cells: expected two values `interior,band`, got {}",
                cells.len()
            ))
            .into());
        }
        quad.interior_cell = cells[0];
        quad.band_cell = cells[1];
    }
    if let Some(w) = a.band_width {
        quad.band_width = w;
    }
    config(quad.validate(), "--cells")?;
    let l = region.perimeter();
    let input = PredictionInput::new(a.n, a.k, a.c, l);
    let r = match a.r {
        Some(r) => r,
        None => {
            unit_area(&region)?;
            config(predicted_radius(&input), "--n")?
        }
    };
    let breakdown = config(integral_lhs(&region, a.n, r, a.k, &quad), "--r")?;
    let xi = if a.k >= 1 {
        config(xi_for(&input), "--region")?
    } else {
        None
    };
    let targets = Targets {
        e_minus_c: (-a.c).exp(),
        e_minus_xi: xi.map(|x| (-x).exp()),
        boundary: if a.k >= 1 {
            Some(config(boundary_target(a.k, l, a.c), "--region")?)
        } else {
            None
        },
    };
    print_json(&IntegralReport {
        region: region.label().to_string(),
        n: a.n,
        k: a.k,
        c: a.c,
        r,
        quadrature: quad,
        breakdown,
        targets,
    })
}

fn simulate(a: SimulateArgs) -> Result<()> {
    let region = resolve_region(&a.region)?;
    let cfg = ExperimentConfig {
        region,
        n: a.n,
        k: a.k,
        c_grid: a.c_grid,
        replications: a.reps,
        seed: a.seed,
        process: a.process,
    };
    config(cfg.validate(), "--n/--k/--reps/--region")?;
    let summary = run_experiment(&cfg).context("simulation failed")?;
    let file = File::create(&a.out)
        .with_context(|| format!("--out: cannot create {}", a.out.display()))?;
    let mut w = BufWriter::new(file);
    write_summary_csv(&summary, &mut w)?;
    w.flush()?;
    if let Some(path) = &a.trials_out {
        let file = File::create(path)
            .with_context(|| format!("--trials-out: cannot create {}", path.display()))?;
        let mut w = BufWriter::new(file);
        write_trials_csv(&summary.trials, &mut w)?;
        w.flush()?;
    }
    eprintln!(
        "{} trials on {}: equal_fraction {:.3}, wrote {}",
        summary.replications,
        summary.region_id,
        summary.equal_fraction,
        a.out.display()
    );
    Ok(())
}

fn radius(a: RadiusArgs) -> Result<()> {
    let is_json = a.points.extension().is_some_and(|e| e == "json");
    let pts = if is_json {
        let text = std::fs::read_to_string(&a.points)
            .map_err(|e| ConfigError(format!("points file {}: {e}", a.points.display())))?;
        config(read_json(&text), "points file")?
    } else {
        let file = File::open(&a.points)
            .map_err(|e| ConfigError(format!("points file {}: {e}", a.points.display())))?;
        config(read_csv(BufReader::new(file)), "points file")?
    };
    let result: RadiusResult = config(radii(&PointSet::from_points(pts), a.k), "--k")?;
    print_json(&result)
}

#[derive(Serialize)]
struct RegionRow {
    name: &'static str,
    label: String,
    area: f64,
    perimeter: f64,
}

fn regions() -> Result<()> {
    let rows = BUILTIN_NAMES
        .iter()
        .map(|&name| {
            let r = builtin(name, &Default::default())?;
            Ok(RegionRow {
                name,
                label: r.label().to_string(),
                area: r.area(),
                perimeter: r.perimeter(),
            })
        })
        .collect::<rgg_core::Result<Vec<_>>>()?;
    print_json(&rows)
}

fn run(cli: Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(ConfigError("--threads: must be >= 1".into()).into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()?;
    }
    match cli.command {
        Command::Predict(a) => predict(a),
        Command::Integral(a) => integral(a),
        Command::Simulate(a) => simulate(a),
        Command::Radius(a) => radius(a),
        Command::Regions => regions(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<ConfigError>() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
