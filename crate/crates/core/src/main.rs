use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use tripart::batch::Execution;
use tripart::io::{emit_svg, parse_spec, run, sweep_rows, write_csv, Mode, ProblemSpec, RunError, SpecError, SvgOptions};
use tripart::partition::verify_partition;
use tripart::{Point, Triangle};

#[derive(Parser)]
#[command(name = "tripart", version, about = "Equal-area perpendicular partitions of triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem spec and print the JSON report.
    Solve {
        #[arg(long)]
        input: PathBuf,
        /// Also write an SVG figure.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Relative area tolerance (overrides the spec's solver setting).
        #[arg(long)]
        tol: Option<f64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Include wall-clock timing in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Classify a grid of triangle shapes by their two base angles and write CSV.
    Sweep {
        #[arg(long, default_value_t = 100)]
        resolution: usize,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        sequential: bool,
    },
    /// Check whether a point equipartitions the spec's triangle.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
        point: Point,
        /// Relative tolerance for areas (times |T|) and location (times diam).
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let coord = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    let p = Point::new(coord(x)?, coord(y)?);
    if p.x.is_finite() && p.y.is_finite() {
        Ok(p)
    } else {
        Err("coordinates must be finite".into())
    }
}

enum Failure {
    Run(RunError),
    Io(PathBuf, io::Error),
    Verify(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Run(e) => e.exit_code() as u8,
            Failure::Io(..) => 4,
            Failure::Verify(_) => 3,
        }
    }

    fn to_json(&self) -> String {
        match self {
            Failure::Run(e) => e.to_json(),
            Failure::Io(path, e) => pretty(&json!({
                "error": {"code": "io-error", "message": format!("{}: {e}", path.display())}
            })),
            Failure::Verify(report) => report.clone(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::Run(e.into())
    }
}

impl From<RunError> for Failure {
    fn from(e: RunError) -> Self {
        Failure::Run(e)
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("value serializes")
}

fn read_spec(path: &Path) -> Result<ProblemSpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))?;
    Ok(parse_spec(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn solve(
    input: &Path,
    svg: Option<&Path>,
    tol: Option<f64>,
    output: Option<&Path>,
    timing: bool,
    sequential: bool,
) -> Result<(), Failure> {
    let mut spec = read_spec(input)?;
    if let Some(tol) = tol {
        spec.solver.area_tol_rel = tol;
    }
    let report = run(&spec, execution(sequential), timing)?;
    let mut json = report.to_json();
    json.push('\n');
    match output {
        Some(path) => write_file(path, &json)?,
        None => print!("{json}"),
    }
    if let Some(path) = svg {
        let figure = emit_svg(&report, &SvgOptions::default()).ok_or_else(|| {
            Failure::Run(SpecError::Invalid("sweep reports have no figure".into()).into())
        })?;
        write_file(path, &figure)?;
    }
    Ok(())
}

fn sweep(resolution: usize, output: &Path, sequential: bool) -> Result<(), Failure> {
    let spec = ProblemSpec {
        mode: Mode::Sweep,
        triangle: None,
        polygon: None,
        rays: None,
        targets: None,
        fractions: None,
        resolution: Some(resolution),
        solver: Default::default(),
    }
    .validate()?;
    let rows = sweep_rows(spec.resolution.expect("validated"), execution(sequential));
    let io_err = |e| Failure::Io(output.to_owned(), e);
    let file = File::create(output).map_err(io_err)?;
    let mut out = BufWriter::new(file);
    write_csv(&rows, &mut out).map_err(io_err)?;
    out.flush().map_err(io_err)
}

fn verify(input: &Path, point: Point, tol: f64) -> Result<(), Failure> {
    let spec = read_spec(input)?;
    if spec.mode != Mode::Triangle {
        return Err(SpecError::Invalid("verify needs a triangle spec".into()).into());
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(SpecError::Invalid(format!("tolerance must be positive, got {tol}")).into());
    }
    let tri = Triangle::from_array(spec.triangle.expect("validated")).map_err(SpecError::from)?;
    let report = verify_partition(&tri, point, tol);
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    if report.pass {
        println!("{text}");
        Ok(())
    } else {
        Err(Failure::Verify(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve {
            input,
            svg,
            tol,
            output,
            timing,
            sequential,
        } => solve(input, svg.as_deref(), *tol, output.as_deref(), *timing, *sequential),
        Command::Sweep {
            resolution,
            output,
            sequential,
        } => sweep(*resolution, output, *sequential),
        Command::Verify { input, point, tol } => verify(input, *point, *tol),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.to_json());
            ExitCode::from(f.exit_code())
        }
    }
}
