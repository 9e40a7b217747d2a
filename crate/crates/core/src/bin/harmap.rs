#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use harmap::certify::{self, Certificate, Claim};
use harmap::closedform::{h_thm3, q_exact, ClosedForm, Constants, Family};
use harmap::numerics::{shoot, ShootingProblem};
use harmap::radial::{residual_1d, residual_2d, FnProfile, ProfileRow, RadialProfile};
use harmap::{reduce, ConformalMetric, Error, MetricKind, ProfileSample, RadialOde};

const SUBCOMMANDS: [&str; 5] = ["reduce", "solve", "certify", "sample", "verify"];

/// Rotationally symmetric harmonic maps: ODE reduction, solving and certificates.
#[derive(Parser, Debug)]
#[command(name = "harmap", version)]
struct Cli {
    /// key=value file whose entries act as flags; explicit flags win
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the radial ODE for a target metric
    Reduce(ReduceArgs),
    /// Solve a two-point boundary value problem by shooting
    Solve(SolveArgs),
    /// Run a nonexistence or existence certificate
    Certify(CertifyArgs),
    /// Evaluate a closed-form family on a grid
    Sample(SampleArgs),
    /// Check the 2D harmonic map equation for a rotationally symmetric map
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MetricArg {
    Euclidean,
    #[value(alias = "poincare-disc")]
    Poincare,
    #[value(alias = "hyperbolic-punctured-disc")]
    Punctured,
    #[value(alias = "hyperbolic-annulus")]
    Annulus,
}

impl MetricArg {
    fn kind(self) -> MetricKind {
        match self {
            MetricArg::Euclidean => MetricKind::Euclidean,
            MetricArg::Poincare => MetricKind::PoincareDisc,
            MetricArg::Punctured => MetricKind::HyperbolicPuncturedDisc,
            MetricArg::Annulus => MetricKind::HyperbolicAnnulus,
        }
    }
}

#[derive(Args, Debug)]
struct MetricOpts {
    /// Target metric
    #[arg(long, value_enum, default_value = "euclidean")]
    metric: MetricArg,
    /// Annulus modulus: the annulus is e^-a < |z| < 1
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
}

impl MetricOpts {
    fn metric(&self) -> Result<ConformalMetric, Error> {
        match self.metric {
            MetricArg::Annulus => match self.a {
                Some(a) => ConformalMetric::annulus(a),
                None => Err(Error::Config("--metric annulus needs --a".into())),
            },
            m => ConformalMetric::new(m.kind(), None),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
#[command(args_override_self = true)]
struct ReduceArgs {
    #[command(flatten)]
    metric: MetricOpts,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Boundary {
    /// f(e^-a) = 0, f(1) = 1 (Euclidean target)
    Existence,
    /// f(r) = r at both ends of [e^-a, 1], or [0.5, 1] without --a
    Identity,
    /// --r0 --f0 --r1 --f1
    Custom,
}

#[derive(Args, Debug)]
#[command(args_override_self = true)]
struct SolveArgs {
    #[command(flatten)]
    metric: MetricOpts,
    #[arg(long, value_enum, default_value = "existence")]
    bc: Boundary,
    #[arg(long)]
    r0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    f0: Option<f64>,
    #[arg(long)]
    r1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    f1: Option<f64>,
    /// Initial-slope bracket LO,HI
    #[arg(long, value_name = "LO,HI", allow_hyphen_values = true)]
    bracket: Option<String>,
    /// Root tolerance on the initial slope
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
    /// Number of output rows, uniform in r
    #[arg(long, default_value_t = 101)]
    points: usize,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(args_override_self = true)]
struct CertifyArgs {
    /// thm1, thm2, thm3, thm3-existence, prop4 (or the full claim names)
    #[arg(long)]
    claim: String,
    #[arg(long)]
    a: Option<f64>,
    /// Grids are comma lists or log:LO:HI:N; omitted grids use the defaults
    #[arg(long, allow_hyphen_values = true)]
    c0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c4: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c5: Option<String>,
    #[arg(long, allow_negative_numbers = true, default_value_t = certify::DEFAULT_G_PROBE)]
    g_probe: f64,
    #[arg(long, default_value_t = certify::DEFAULT_R_PROBE)]
    r_probe: f64,
    #[arg(long, default_value_t = certify::DEFAULT_THRESHOLD)]
    threshold: f64,
    /// Margin; each claim has its own default
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(args_override_self = true)]
struct SampleArgs {
    /// Family name (thm1-x, thm1-lnr, thm2-lnr-prime, thm2-r, thm3-H, thm3-h,
    /// thm3-q, prop4-vinvsq) or function name (x_thm1, q_exact, v_invsq, ...)
    #[arg(long)]
    family: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c0: Option<f64>,
    #[arg(long)]
    c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c3: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c4: Option<f64>,
    #[arg(long)]
    c5: Option<f64>,
    /// Explicit parameter values, comma separated
    #[arg(long, allow_hyphen_values = true, conflicts_with = "grid")]
    at: Option<String>,
    /// Uniform grid LO:HI:N
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ProfileArg {
    /// The explicit existence solution (needs --a)
    Q,
    /// f(r) = r
    Identity,
    /// |1 + c3 r^2| e^c4 / r (needs --c3, --c4)
    H,
    /// CSV with columns r,f,fprime as written by `solve`
    File,
}

#[derive(Args, Debug)]
#[command(args_override_self = true)]
struct VerifyArgs {
    #[command(flatten)]
    metric: MetricOpts,
    #[arg(long, value_enum, default_value = "q")]
    profile: ProfileArg,
    #[arg(long, allow_negative_numbers = true)]
    c3: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c4: Option<f64>,
    /// Profile CSV for --profile file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Radial support for identity and h profiles
    #[arg(long, default_value_t = 0.5)]
    r_min: f64,
    #[arg(long, default_value_t = 1.0)]
    r_max: f64,
    /// Stencil step
    #[arg(long, default_value_t = harmap::radial::DEFAULT_STENCIL_STEP)]
    h: f64,
    /// Number of interior sample points
    #[arg(long, default_value_t = 20)]
    n: usize,
    /// Largest acceptable |residual|
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Numerical(String),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            Failure::Numerical(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Numeric CSV output. Values use Rust's shortest round-trip formatting,
/// which never depends on locale.
struct Table(csv::Writer<Vec<u8>>);

impl Table {
    fn new(header: &[&str]) -> Result<Self, Failure> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header)?;
        Ok(Table(w))
    }

    fn row(&mut self, values: &[f64]) -> Result<(), Failure> {
        self.0.write_record(values.iter().map(|v| v.to_string()))?;
        Ok(())
    }

    fn finish(self) -> Result<String, Failure> {
        let bytes = self
            .0
            .into_inner()
            .map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("ascii output"))
    }
}

fn main() -> ExitCode {
    let argv = match expand_config(std::env::args_os().collect()) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Reduce(args) => cmd_reduce(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Sample(args) => cmd_sample(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical diagnostic: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verdict) => ExitCode::from(2),
    }
}

/// Removes `--config FILE` from the arguments and splices the file's
/// `key=value` entries in as `--key value` right after the subcommand, so
/// that later explicit flags override them.
fn expand_config(mut argv: Vec<OsString>) -> Result<Vec<OsString>, String> {
    let mut path = None;
    let mut i = 1;
    while i < argv.len() {
        let arg = argv[i].to_string_lossy().into_owned();
        if arg == "--config" {
            if i + 1 >= argv.len() {
                return Err("--config needs a file".into());
            }
            path = Some(PathBuf::from(argv.remove(i + 1)));
            argv.remove(i);
        } else if let Some(p) = arg.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
            argv.remove(i);
        } else {
            i += 1;
        }
    }
    let Some(path) = path else {
        return Ok(argv);
    };
    let entries = read_config(&path)?;
    let Some(at) = argv
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()))
    else {
        return Ok(argv);
    };
    let mut spliced: Vec<OsString> = argv[..=at].to_vec();
    for (k, v) in entries {
        spliced.push(format!("--{k}").into());
        spliced.push(v.into());
    }
    spliced.extend_from_slice(&argv[at + 1..]);
    Ok(spliced)
}

fn read_config(path: &Path) -> Result<Vec<(String, String)>, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut entries = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), n + 1))?;
        let k = k.trim().trim_start_matches("--");
        if k.is_empty() {
            return Err(format!("{}:{}: empty key", path.display(), n + 1));
        }
        entries.push((k.to_string(), v.trim().to_string()));
    }
    Ok(entries)
}

fn emit(output: Option<&Path>, body: &str) -> io::Result<()> {
    match output {
        Some(p) => fs::write(p, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn parse_number(s: &str) -> Result<f64, Failure> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Failure::Usage(format!("not a number: '{s}'")))
}

/// Comma list, or `log:LO:HI:N` for N log-spaced values.
fn parse_grid(spec: &str) -> Result<Vec<f64>, Failure> {
    if let Some(rest) = spec.strip_prefix("log:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(Failure::Usage(format!("bad grid spec '{spec}'")));
        }
        let lo = parse_number(parts[0])?;
        let hi = parse_number(parts[1])?;
        let n: usize = parts[2]
            .parse()
            .map_err(|_| Failure::Usage(format!("bad grid size '{}'", parts[2])))?;
        if !(lo > 0.0 && hi > 0.0) || n < 2 {
            return Err(Failure::Usage(format!("bad log grid '{spec}'")));
        }
        let (l, h) = (lo.ln(), hi.ln());
        return Ok((0..n)
            .map(|i| (l + (h - l) * i as f64 / (n - 1) as f64).exp())
            .collect());
    }
    spec.split(',').map(parse_number).collect()
}

/// `LO:HI:N` uniform grid with both ends included.
fn parse_uniform(spec: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Failure::Usage(format!("expected LO:HI:N, got '{spec}'")));
    }
    let lo = parse_number(parts[0])?;
    let hi = parse_number(parts[1])?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| Failure::Usage(format!("bad grid size '{}'", parts[2])))?;
    Ok(uniform(lo, hi, n))
}

fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i + 1 == n {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

fn grid_or(spec: &Option<String>, default: Vec<f64>) -> Result<Vec<f64>, Failure> {
    match spec {
        Some(s) => parse_grid(s),
        None => Ok(default),
    }
}

fn require_a(a: Option<f64>, what: &str) -> Result<f64, Failure> {
    a.ok_or_else(|| Failure::Usage(format!("{what} needs --a")))
}

fn cmd_reduce(args: ReduceArgs) -> CmdResult {
    let metric = args.metric.metric()?;
    let ode = reduce(metric);
    let domain = metric.radial_domain();
    let body = match args.format {
        Format::Text => format!(
            "metric: {metric}\nequation: {}\nradial domain of f: {domain}\n",
            ode.describe()
        ),
        Format::Json => {
            let v = json!({
                "metric": metric.kind().name(),
                "a": metric.modulus(),
                "equation": ode.describe(),
                "value_domain": {
                    "lo": domain.lo,
                    "hi": if domain.hi.is_finite() { json!(domain.hi) } else { json!("inf") },
                    "lo_closed": domain.lo_closed,
                },
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    emit(args.output.as_deref(), &body)?;
    Ok(())
}

fn cmd_solve(args: SolveArgs) -> CmdResult {
    let metric = args.metric.metric()?;
    let ode = reduce(metric);
    let ((r0, f0), (r1, f1)) = match args.bc {
        Boundary::Existence => {
            if metric.kind() != MetricKind::Euclidean {
                return Err(Failure::Usage(
                    "--bc existence is defined for the euclidean target".into(),
                ));
            }
            let a = require_a(args.metric.a, "--bc existence")?;
            if !(a > 0.0) {
                return Err(Failure::Usage("--a must be positive".into()));
            }
            (((-a).exp(), 0.0), (1.0, 1.0))
        }
        Boundary::Identity => {
            let lo = args.metric.a.map_or(0.5, |a| (-a).exp());
            ((lo, lo), (1.0, 1.0))
        }
        Boundary::Custom => {
            let need = |v: Option<f64>, n: &str| {
                v.ok_or_else(|| Failure::Usage(format!("--bc custom needs --{n}")))
            };
            (
                (need(args.r0, "r0")?, need(args.f0, "f0")?),
                (need(args.r1, "r1")?, need(args.f1, "f1")?),
            )
        }
    };
    let bracket = match &args.bracket {
        Some(s) => {
            let v = parse_grid(s)?;
            if v.len() != 2 {
                return Err(Failure::Usage("--bracket takes LO,HI".into()));
            }
            (v[0], v[1])
        }
        None if args.bc == Boundary::Existence => certify::existence_bracket(-r0.ln()),
        None => {
            let s = (f1 - f0) / (r1 - r0);
            if !(s > 0.0) {
                return Err(Failure::Usage(
                    "no default bracket for non-increasing data; pass --bracket".into(),
                ));
            }
            (0.25 * s, 4.0 * s)
        }
    };
    let problem = ShootingProblem::new(ode, (r0, f0), (r1, f1), bracket, args.tol)?;
    let profile = shoot(&problem)?;
    let (lo, hi) = profile.span();
    let mut table = Table::new(&["r", "f", "fprime", "residual_1d"])?;
    for r in uniform(lo, hi, args.points.max(2)) {
        let (f, fp, fpp) = profile
            .interpolate(r)
            .ok_or_else(|| Failure::Numerical(format!("no profile value at r = {r}")))?;
        let res = residual_1d(&ode, r, f, fp, fpp)?;
        table.row(&[r, f, fp, res])?;
    }
    emit(args.output.as_deref(), &table.finish()?)?;
    Ok(())
}

fn cmd_certify(args: CertifyArgs) -> CmdResult {
    let claim: Claim = args.claim.parse()?;
    let cert: Certificate = match claim {
        Claim::Thm1Nonexistence => certify::certify_thm1(
            require_a(args.a, "thm1")?,
            &grid_or(&args.c0, certify::default_constant_grid(true))?,
            args.tol.unwrap_or(1e-9),
        )?,
        Claim::Thm2Nonexistence => certify::certify_thm2(
            require_a(args.a, "thm2")?,
            &grid_or(&args.c1, certify::default_constant_grid(true))?,
            args.g_probe,
            args.tol.unwrap_or(1e-12),
        )?,
        Claim::Thm3Nonexistence => certify::certify_thm3_nonexistence(
            &grid_or(&args.c3, certify::default_c3_grid())?,
            &grid_or(&args.c4, certify::DEFAULT_C4_GRID.to_vec())?,
            args.r_probe,
            args.threshold,
        )?,
        Claim::Thm3Existence => certify::certify_thm3_existence(
            require_a(args.a, "thm3-existence")?,
            args.tol.unwrap_or(1e-8),
        )?,
        Claim::Prop4Nonexistence => certify::certify_prop4(
            &grid_or(&args.c5, certify::default_constant_grid(true))?,
            args.tol.unwrap_or(1e-9),
        )?,
    };
    emit(args.output.as_deref(), &format!("{}\n", cert.to_json()))?;
    if cert.verdict.is_pass() {
        Ok(())
    } else {
        eprintln!("{}: FAIL", cert.claim);
        Err(Failure::Verdict)
    }
}

fn cmd_sample(args: SampleArgs) -> CmdResult {
    let family: Family = args.family.parse()?;
    let constants = Constants {
        a: args.a,
        c0: args.c0,
        c1: args.c1,
        c3: args.c3,
        c4: args.c4,
        c5: args.c5,
    };
    let form = ClosedForm::new(family, constants)?;
    let params = match (&args.at, &args.grid) {
        (Some(at), _) => parse_grid(at)?,
        (None, Some(g)) => parse_uniform(g)?,
        (None, None) => {
            return Err(Failure::Usage(format!(
                "sample needs --at or --grid (values of {})",
                family.parameter()
            )))
        }
    };
    let mut table = Table::new(&["param", "value"])?;
    for t in params {
        table.row(&[t, form.eval(t)?])?;
    }
    emit(args.output.as_deref(), &table.finish()?)?;
    Ok(())
}

/// Reads `r,f,fprime[,...]` rows and fills in f'' from the ODE.
fn load_profile(path: &Path, ode: &RadialOde) -> Result<ProfileSample, Failure> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let headers = reader.headers()?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Failure::Usage(format!("{}: missing column {name}", path.display())))
    };
    let (ir, i_f, ifp) = (col("r")?, col("f")?, col("fprime")?);
    let mut rows = Vec::new();
    let mut fsecond = Vec::new();
    for record in reader.records() {
        let record = record?;
        let cell = |i: usize| parse_number(record.get(i).unwrap_or(""));
        let row = ProfileRow {
            r: cell(ir)?,
            f: cell(i_f)?,
            fprime: cell(ifp)?,
        };
        fsecond.push(ode.phi(row.r, row.f, row.fprime)?);
        rows.push(row);
    }
    Ok(ProfileSample::new(rows, fsecond)?)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let metric = args.metric.metric()?;
    let a = args.metric.a;
    let profile: Box<dyn RadialProfile> = match args.profile {
        ProfileArg::Q => {
            let a = require_a(a, "--profile q")?;
            if !(a > 0.0) {
                return Err(Failure::Usage("--a must be positive".into()));
            }
            Box::new(FnProfile::new(
                move |r: f64| q_exact(r, a).unwrap_or(f64::NAN),
                (-a).exp(),
                1.0,
            ))
        }
        ProfileArg::Identity => Box::new(FnProfile::new(|r: f64| r, args.r_min, args.r_max)),
        ProfileArg::H => {
            let c3 = args
                .c3
                .ok_or_else(|| Failure::Usage("--profile h needs --c3".into()))?;
            let c4 = args.c4.unwrap_or(0.0);
            Box::new(FnProfile::new(
                move |r: f64| h_thm3(r, c3, c4).unwrap_or(f64::NAN),
                args.r_min,
                args.r_max,
            ))
        }
        ProfileArg::File => {
            let path = args
                .input
                .as_deref()
                .ok_or_else(|| Failure::Usage("--profile file needs --input".into()))?;
            Box::new(load_profile(path, &reduce(metric))?)
        }
    };
    let (lo, hi) = profile.support();
    if !(args.h > 0.0) || hi - lo <= 5.0 * args.h {
        return Err(Failure::Usage(format!(
            "support [{lo}, {hi}] too narrow for stencil step {}",
            args.h
        )));
    }
    let mut table = Table::new(&["x", "y", "re", "im", "abs"])?;
    let mut worst: f64 = 0.0;
    for z in certify::interior_points(lo, hi, args.h, args.n) {
        let res = residual_2d(&metric, profile.as_ref(), z, args.h)?;
        worst = worst.max(res.norm());
        table.row(&[z.re, z.im, res.re, res.im, res.norm()])?;
    }
    emit(args.output.as_deref(), &table.finish()?)?;
    if worst.is_nan() || worst > args.tol {
        eprintln!("max |residual| = {worst} exceeds {}", args.tol);
        return Err(Failure::Verdict);
    }
    Ok(())
}
