//! Command-line front end: generation, analysis reports and corpus
//! verification. Exit codes: 0 pass, 1 check failure, 2 usage, 3 I/O.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tessel::generate::{self, GeneratorSpec, LatticeKind, PlatonicSolid};
use tessel::report::{run_report, write_bundle, Sections};
use tessel::surface;
use tessel::TessError;

#[derive(Parser)]
#[command(
    name = "tessel",
    version,
    about = "Tessellations, curvature, growth and spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tessellation and write it in the exchange format.
    Generate(GenerateArgs),
    /// Analyze a tessellation file and write a JSON/CSV report bundle.
    Report(ReportArgs),
    /// Validate and check every .tess file in a corpus directory.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// platonic | prism | antiprism | flat | torus | hyperbolic | kagome |
    /// schedule | cairo | penrose | genus2
    #[arg(long)]
    family: String,
    /// Platonic solid name (tetrahedron, cube, octahedron, dodecahedron,
    /// icosahedron).
    #[arg(long)]
    name: Option<String>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    /// Lattice kind for flat/torus families: square | triangular | hexagonal.
    #[arg(long)]
    lattice: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Even polygon degree of the triangle/polygon family (6 = Kagome).
    #[arg(long)]
    polygon: Option<u32>,
    /// Degree schedule like "6+2r" for the triangulation family.
    #[arg(long)]
    schedule: Option<String>,
    #[arg(long)]
    radius: Option<u32>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated: curvature,geometry,growth,spectrum: or "all".
    #[arg(long, default_value = "all")]
    sections: String,
    /// json | csv | both
    #[arg(long, default_value = "both")]
    format: String,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Residual tolerance for eigensolver certificates.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    corpus: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Report(args) => cmd_report(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                TessError::Io(_) | TessError::Parse { .. } => ExitCode::from(3),
                TessError::BadSpec(_) | TessError::Unsupported(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn need<T>(opt: Option<T>, flag: &str, family: &str) -> Result<T, TessError> {
    opt.ok_or_else(|| TessError::BadSpec(format!("family `{family}` needs --{flag}")))
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, TessError> {
    let family = args.family.as_str();
    let spec = match family {
        "platonic" => GeneratorSpec::Platonic {
            name: PlatonicSolid::parse(&need(args.name, "name", family)?)?,
        },
        "prism" => GeneratorSpec::Prism {
            p: need(args.p, "p", family)?,
        },
        "antiprism" => GeneratorSpec::Antiprism {
            p: need(args.p, "p", family)?,
        },
        "flat" => GeneratorSpec::Flat {
            kind: LatticeKind::parse(&need(args.lattice, "lattice", family)?)?,
            radius: need(args.radius, "radius", family)?,
        },
        "torus" => GeneratorSpec::Torus {
            kind: LatticeKind::parse(&need(args.lattice, "lattice", family)?)?,
            m: need(args.m, "m", family)?,
            n: need(args.n, "n", family)?,
        },
        "hyperbolic" => GeneratorSpec::Hyperbolic {
            p: need(args.p, "p", family)?,
            q: need(args.q, "q", family)?,
            radius: need(args.radius, "radius", family)?,
        },
        "kagome" => GeneratorSpec::Kagome {
            polygon: need(args.polygon, "polygon", family)?,
            radius: need(args.radius, "radius", family)?,
        },
        "schedule" => {
            let (base, slope) =
                generate::parse_schedule(&need(args.schedule, "schedule", family)?)?;
            GeneratorSpec::Schedule {
                base,
                slope,
                radius: need(args.radius, "radius", family)?,
            }
        }
        "cairo" => GeneratorSpec::Cairo,
        "penrose" => GeneratorSpec::Penrose,
        "genus2" => GeneratorSpec::Genus2,
        other => return Err(TessError::BadSpec(format!("unknown family `{other}`"))),
    };
    let built = spec.build()?;
    surface::save(&built, &args.out)?;
    println!("wrote {} ({})", args.out.display(), spec.describe());
    Ok(ExitCode::SUCCESS)
}

fn cmd_report(args: ReportArgs) -> Result<ExitCode, TessError> {
    if !(args.tol > 0.0) {
        return Err(TessError::BadSpec(format!(
            "tolerance must be positive, got {}",
            args.tol
        )));
    }
    if !matches!(args.format.as_str(), "json" | "csv" | "both") {
        return Err(TessError::BadSpec(format!(
            "unknown format `{}`",
            args.format
        )));
    }
    let sections = Sections::parse(&args.sections)?;
    let raw = std::fs::read(&args.input)?;
    let loaded = surface::load(&args.input)?;
    let bundle = run_report(
        &args
            .input
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        &raw,
        &loaded,
        sections,
        args.seed,
        args.tol,
    );
    write_bundle(&bundle, &args.out, &args.format)?;
    for check in &bundle.checks {
        println!(
            "{:<14} {:<12} {}",
            check.tag,
            format!("{:?}", check.status),
            check.details
        );
    }
    if bundle.failed() {
        eprintln!("report contains failing checks");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, TessError> {
    let (lines, ok) = tessel::report::verify_corpus(&args.corpus)?;
    for line in &lines {
        println!("{line}");
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
