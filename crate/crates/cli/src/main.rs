//! `sdkp`: verification suites, cross-section tables and singular-order queries.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sdkp_core::algebra;
use sdkp_core::cross_sections::{
    tabulate, CrossSectionTable, GridSpec, Polarization, PolarizationChoice, ProcessConfig, Units,
};
use sdkp_core::distributions::{split, DistributionDescriptor, SplitClass};
use sdkp_core::verification::{corrupted_beta_set, run_all};

use config::Defaults;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "sdkp", version, about = "Tree-level scalar DKP electrodynamics")]
struct Cli {
    /// key = value file overriding built-in defaults
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Print the resolved defaults and exit
    #[arg(long, global = true)]
    show_config: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the algebra, trace, projector, singular-order, gauge and cross-section suites
    Verify {
        /// Perturb one β matrix entry; every suite depending on it must fail
        #[arg(long)]
        corrupt_beta: bool,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Tabulate dσ/dΩ over an angular grid
    Xsec(XsecArgs),
    /// Power-count a distribution, e.g. "delta m=1 deg=2 sgn"
    SingularOrder { spec: String },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Process {
    Coulomb,
    Moller,
    Compton,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum UnitsArg {
    /// 1/mass²
    Natural,
    /// millibarn, masses in GeV
    Mb,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolArg {
    InPlane,
    OutOfPlane,
}

impl From<PolArg> for Polarization {
    fn from(p: PolArg) -> Self {
        match p {
            PolArg::InPlane => Polarization::InPlane,
            PolArg::OutOfPlane => Polarization::OutOfPlane,
        }
    }
}

#[derive(Args, Debug)]
struct XsecArgs {
    process: Process,

    /// Nuclear charge number (coulomb)
    #[arg(long = "Z", default_value_t = 1.0)]
    z: f64,
    /// Projectile energies, comma separated (coulomb)
    #[arg(long, value_delimiter = ',')]
    energy: Vec<f64>,
    /// Centre-of-mass energies squared, comma separated (moller)
    #[arg(long, value_delimiter = ',')]
    s: Vec<f64>,
    /// Incoming photon energies, comma separated (compton)
    #[arg(long, value_delimiter = ',')]
    omega_i: Vec<f64>,
    #[arg(long)]
    mass: Option<f64>,
    /// Fine-structure constant
    #[arg(long)]
    alpha: Option<f64>,

    /// Single scattering angle in degrees
    #[arg(long, conflicts_with_all = ["theta_min", "theta_max", "steps"])]
    theta: Option<f64>,
    #[arg(long)]
    theta_min: Option<f64>,
    #[arg(long)]
    theta_max: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Distance in degrees kept from forward/backward poles
    #[arg(long)]
    min_angle: Option<f64>,

    /// Average initial and sum final photon polarizations (compton default)
    #[arg(long, conflicts_with_all = ["pol_initial", "pol_final"])]
    unpolarized: bool,
    #[arg(long, value_enum, requires = "pol_final")]
    pol_initial: Option<PolArg>,
    #[arg(long, value_enum, requires = "pol_initial")]
    pol_final: Option<PolArg>,

    /// Output path, or - for standard output
    #[arg(long)]
    out: Option<String>,
    /// Output format; inferred from the --out extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum, default_value_t = UnitsArg::Natural)]
    units: UnitsArg,
    /// Conversion constant for --units mb, in mb·GeV²
    #[arg(long)]
    mb_gev2: Option<f64>,

    /// Required agreement between amplitude and closed-form routes
    #[arg(long)]
    pipeline_rel: Option<f64>,
    /// Required agreement between Coulomb spinor and trace routes
    #[arg(long)]
    coulomb_pipeline_rel: Option<f64>,
    /// Propagator pole guard
    #[arg(long)]
    pole_guard: Option<f64>,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_IO,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("sdkp: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut defaults = Defaults::from_env();
    if let Some(path) = &cli.config {
        defaults
            .apply_file(path)
            .map_err(|e| io(format!("{}: {e}", path.display())))?
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if cli.show_config {
        print!("{defaults}");
        return Ok(0);
    }
    match cli.command {
        None => Err(usage("no subcommand given; try --help")),
        Some(Command::Verify { corrupt_beta, json }) => verify(corrupt_beta, json, &defaults),
        Some(Command::Xsec(args)) => xsec(args, &defaults),
        Some(Command::SingularOrder { spec }) => singular_order(&spec),
    }
}

fn verify(corrupt_beta: bool, json: bool, defaults: &Defaults) -> Result<u8, Failure> {
    let corrupted;
    let beta = if corrupt_beta {
        corrupted = corrupted_beta_set();
        &corrupted
    } else {
        algebra::standard()
    };
    let report = run_all(beta, &defaults.tolerances);
    if json {
        let text = serde_json::to_string_pretty(&report).map_err(|e| io(e.to_string()))?;
        println!("{text}");
    } else {
        print!("{report}");
    }
    Ok(if report.passed() { 0 } else { EXIT_VERIFY })
}

fn singular_order(spec: &str) -> Result<u8, Failure> {
    let d: DistributionDescriptor = spec.parse().map_err(|e| usage(format!("`{spec}`: {e}")))?;
    let r = split(&d).map_err(|e| usage(e.to_string()))?;
    let class = match r.class {
        SplitClass::Regular => "regular",
        SplitClass::Singular => "singular",
    };
    println!("ω={} {class}, free constants: {}", r.order, r.free_constants());
    Ok(0)
}

fn xsec(a: XsecArgs, defaults: &Defaults) -> Result<u8, Failure> {
    let mass = a.mass.unwrap_or(defaults.mass);
    let alpha = a.alpha.unwrap_or(defaults.alpha);
    let mut tol = defaults.tolerances;
    if let Some(v) = a.pipeline_rel {
        tol.pipeline_rel = v;
    }
    if let Some(v) = a.coulomb_pipeline_rel {
        tol.coulomb_pipeline_rel = v;
    }
    if let Some(v) = a.pole_guard {
        tol.pole_guard = v;
    }

    let (config, energies, flag) = match a.process {
        Process::Coulomb => (
            ProcessConfig::Coulomb {
                charge_number: a.z,
                mass,
                alpha,
            },
            &a.energy,
            "--energy",
        ),
        Process::Moller => (ProcessConfig::Moller { mass, alpha }, &a.s, "--s"),
        Process::Compton => {
            let polarization = match (a.pol_initial, a.pol_final) {
                (Some(i), Some(f)) => Some(PolarizationChoice {
                    initial: i.into(),
                    final_: f.into(),
                }),
                _ => None,
            };
            (
                ProcessConfig::Compton {
                    mass,
                    alpha,
                    polarization,
                },
                &a.omega_i,
                "--omega-i",
            )
        }
    };
    if energies.is_empty() {
        return Err(usage(format!("{:?} needs {flag}", a.process).to_lowercase()));
    }
    for (other, values) in [("--energy", &a.energy), ("--s", &a.s), ("--omega-i", &a.omega_i)] {
        if other != flag && !values.is_empty() {
            return Err(usage(
                format!("{other} does not apply to {:?}", a.process).to_lowercase(),
            ));
        }
    }
    if a.process != Process::Compton && (a.unpolarized || a.pol_initial.is_some()) {
        return Err(usage("polarization flags apply to compton only"));
    }

    let mut grid = match a.theta {
        Some(t) => GridSpec::single(t, 0.0),
        None => GridSpec::new(
            a.theta_min.unwrap_or(defaults.theta_min_deg),
            a.theta_max.unwrap_or(defaults.theta_max_deg),
            a.steps.unwrap_or(defaults.steps),
            Vec::new(),
        ),
    };
    grid.energies = energies.clone();
    grid.min_angle_deg = a.min_angle.unwrap_or(defaults.min_angle_deg);

    let units = match a.units {
        UnitsArg::Natural => Units::Natural,
        UnitsArg::Mb => Units::Millibarn {
            conversion: a.mb_gev2.unwrap_or(defaults.mb_gev2),
        },
    };

    let table = tabulate(&config, &grid, units, &tol).map_err(|e| usage(e.to_string()))?;
    if table.failures() == table.rows.len() {
        return Err(usage(format!(
            "no grid point could be evaluated: {}",
            table.rows[0].status
        )));
    }

    let ext = |f: Format| if f == Format::Json { "json" } else { "csv" };
    let (dest, format) = match a.out.as_deref() {
        Some("-") => (None, a.format.unwrap_or(Format::Csv)),
        Some(path) => {
            let inferred = if path.ends_with(".json") {
                Format::Json
            } else {
                Format::Csv
            };
            (Some(PathBuf::from(path)), a.format.unwrap_or(inferred))
        }
        None => {
            let format = a.format.unwrap_or(Format::Csv);
            let name = format!("{}.{}", config.kind().name(), ext(format));
            (defaults.output_dir.as_ref().map(|d| d.join(name)), format)
        }
    };
    write_table(&table, format, dest.as_ref())?;
    match &dest {
        Some(p) => eprintln!("{}: {} -> {}", config.kind(), table.summary(), p.display()),
        None => eprintln!("{}: {}", config.kind(), table.summary()),
    }
    Ok(0)
}

fn write_table(table: &CrossSectionTable, format: Format, dest: Option<&PathBuf>) -> Result<(), Failure> {
    let text = match format {
        Format::Csv => table.to_csv_string(),
        Format::Json => table.to_json().map(|s| s + "\n"),
    }
    .map_err(|e| io(e.to_string()))?;
    match dest {
        Some(path) => std::fs::write(path, text).map_err(|e| io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| io(e.to_string())),
    }
}
