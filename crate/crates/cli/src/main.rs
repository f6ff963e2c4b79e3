//! `hmeb`: distances, balls and minimum enclosing balls in Hilbert-type
//! polygonal geometries.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 violated
//! geometric precondition, 4 usage error. Failures print a single line
//! `error: <class>: <detail>` on standard error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use hmeb_core::bench::{self, BenchConfig};
use hmeb_core::io::{format_sig12, round12, DocError, InstanceDocument, ResultDocument};
use hmeb_core::svg::Drawing;
use hmeb_core::{ball, distance, solve, Error, MetricKind, Point2, Solver};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hmeb",
    version,
    about = "Hilbert, Thompson and Funk geometry of convex polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distance from P to Q.
    Distance(DistanceArgs),
    /// Print the vertices of the ball of radius R around P.
    Ball(BallArgs),
    /// Solve the minimum enclosing ball of the document's points.
    Meb(MebArgs),
    /// Count solver primitives on random instances; CSV output.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Domain {
    /// Instance document (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Metric, overriding the document.
    #[arg(long)]
    metric: Option<MetricKind>,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    domain: Domain,
    /// Source point, as `x,y`.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    p: Point2,
    /// Target point, as `x,y`.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    q: Point2,
}

#[derive(Args)]
struct BallArgs {
    #[command(flatten)]
    domain: Domain,
    /// Center, as `x,y`.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    p: Point2,
    #[arg(long, short)]
    radius: f64,
    /// Also draw the domain, center and ball to this file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct MebArgs {
    #[command(flatten)]
    domain: Domain,
    /// `lp_type` (Hilbert only) or `bisection`; defaults to `lp_type` for
    /// Hilbert instances and `bisection` otherwise.
    #[arg(long)]
    solver: Option<Solver>,
    /// Shuffle seed, overriding the document.
    #[arg(long)]
    seed: Option<u64>,
    /// Radius bisection width, overriding the document.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Also draw the domain, points and ball to this file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Config document with `n`, `m`, `trials` and `seed`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Point counts, comma separated.
    #[arg(long, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Domain vertex counts, comma separated.
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<usize>>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Leave out the wall-time column, making the output reproducible.
    #[arg(long)]
    no_timing: bool,
}

fn parse_point(s: &str) -> Result<Point2, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y] = parts.as_slice() else {
        return Err(format!("expected `x,y`, got {s:?}"));
    };
    let coord = |t: &str| -> Result<f64, String> {
        t.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("bad coordinate {t:?}"))
    };
    Ok(Point2::new(coord(x)?, coord(y)?))
}

enum Failure {
    Input(String),
    Geometry(Error),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Geometry(_) => 3,
            Failure::Usage(_) => 4,
        }
    }

    fn class(&self) -> &'static str {
        match self {
            Failure::Input(_) => "parse",
            Failure::Geometry(_) => "geometry",
            Failure::Usage(_) => "usage",
        }
    }

    fn detail(&self) -> String {
        let s = match self {
            Failure::Input(s) | Failure::Usage(s) => s.clone(),
            Failure::Geometry(e) => e.to_string(),
        };
        s.split_whitespace().collect::<Vec<_>>().join(" ")
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedMetric(_) => Failure::Usage(e.to_string()),
            e => Failure::Geometry(e),
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        match e {
            DocError::Parse(s) => Failure::Input(s),
            DocError::Geometry(e) => e.into(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(domain: &Domain) -> Result<InstanceDocument, Failure> {
    let mut doc = InstanceDocument::from_json(&read(&domain.input)?)?;
    if let Some(kind) = domain.metric {
        doc.metric = kind.name().to_string();
    }
    Ok(doc)
}

fn pair(p: Point2) -> [f64; 2] {
    [round12(p.x), round12(p.y)]
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn cmd_distance(args: &DistanceArgs) -> Outcome {
    let doc = load(&args.domain)?;
    let kind = doc.metric()?;
    let omega = doc.omega()?;
    let d = distance(&omega, kind, args.p, args.q)?;
    Ok(format_sig12(d))
}

#[derive(Serialize)]
struct BallDocument<'a> {
    metric: &'a str,
    center: [f64; 2],
    radius: f64,
    ball: Vec<[f64; 2]>,
}

fn cmd_ball(args: &BallArgs) -> Outcome {
    let doc = load(&args.domain)?;
    let kind = doc.metric()?;
    let omega = doc.omega()?;
    let b = ball(&omega, kind, args.p, args.radius)?;
    if let Some(path) = &args.svg {
        let mut d = Drawing::new(&omega);
        if kind == MetricKind::Hilbert {
            d.spokes(args.p)?;
        }
        d.ball(&b).point(args.p);
        write(path, &d.finish())?;
    }
    Ok(json(&BallDocument {
        metric: kind.name(),
        center: pair(args.p),
        radius: round12(args.radius),
        ball: b.shape.vertices().into_iter().map(pair).collect(),
    }))
}

fn cmd_meb(args: &MebArgs) -> Outcome {
    let mut doc = load(&args.domain)?;
    if let Some(seed) = args.seed {
        doc.seed = seed;
    }
    if let Some(t) = args.tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Failure::Usage(
                "--tolerance must be a positive number".into(),
            ));
        }
        doc.tolerance = Some(t);
    }
    let kind = doc.metric()?;
    let solver = args.solver.unwrap_or(if kind == MetricKind::Hilbert {
        Solver::LpType
    } else {
        Solver::Bisection
    });
    if solver == Solver::LpType && kind != MetricKind::Hilbert {
        return Err(Failure::Usage(format!(
            "lp_type requires the hilbert metric, not {kind}"
        )));
    }
    let inst = doc.to_instance()?;
    let res = solve(&inst, solver)?;
    if let Some(path) = &args.svg {
        let mut d = Drawing::new(&inst.omega);
        if kind == MetricKind::Hilbert {
            d.spokes(res.value.center)?;
        }
        d.ball(&res.ball).points(&inst.points);
        write(path, &d.finish())?;
    }
    Ok(ResultDocument::from_result(&inst, &res).to_json())
}

fn cmd_bench(args: &BenchArgs) -> Outcome {
    let mut config = match &args.input {
        Some(path) => serde_json::from_str(&read(path)?)
            .map_err(|e| Failure::Input(format!("bench config: {e}")))?,
        None => BenchConfig {
            n: vec![100, 1000, 10000],
            m: vec![8],
            trials: 5,
            seed: 0,
        },
    };
    if let Some(n) = &args.n {
        config.n = n.clone();
    }
    if let Some(m) = &args.m {
        config.m = m.clone();
    }
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    config
        .validate()
        .map_err(|e| Failure::Input(format!("bench config: {e}")))?;
    let rows = bench::run(&config)?;
    Ok(bench::to_csv(&rows, !args.no_timing).trim_end().to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("error: usage: {first}");
            return ExitCode::from(4);
        }
    };
    let out = match &cli.command {
        Command::Distance(a) => cmd_distance(a),
        Command::Ball(a) => cmd_ball(a),
        Command::Meb(a) => cmd_meb(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match out {
        Ok(text) => {
            // A closed pipe downstream is not our failure.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}: {}", f.class(), f.detail());
            ExitCode::from(f.code())
        }
    }
}
