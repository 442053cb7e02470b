//! Command-line front end for `sympow`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code. The report goes to `out`; diagnostics go to `err`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sympow_core::bounds::{self, BoundReport, PowerOptions};
use sympow_core::cases::FoldOrder;
use sympow_core::poly::{with_settings, KernelSettings};
use sympow_core::reproduction::{run_case, CaseId, CaseReport, Status};
use sympow_core::text::{self, IdealFile, LookupError};
use sympow_core::{Error, MonomialIdeal, PrimeSelection, SymbolicMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_FAIL: i32 = 5;
pub const EXIT_BUDGET: i32 = 6;

#[derive(Debug, Parser)]
#[command(name = "sympow", version, about = "Symbolic powers of monomial ideals and degree-bound audits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators of the n-th symbolic power.
    Sympow(SympowArgs),
    /// Audit generator-degree bounds on the n-th symbolic power.
    Bounds(BoundsArgs),
    /// Degree sequence d(I^(n)) for n = 1..N.
    Growth(GrowthArgs),
    /// Re-run the built-in worked examples and report each claim.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Squarefree,
    Decomposition,
    Saturation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PrimesArg {
    Min,
    Ass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    Huneke,
    Lcm,
    Sumdeg,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Ex31,
    Ex32,
    Lemma41,
    Lemma42,
    Ex43,
    Ex44,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FoldArg {
    Listed,
    Size,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Ideal file to read.
    #[arg(long)]
    pub file: PathBuf,
    /// Name of the ideal inside the file.
    #[arg(long)]
    pub ideal: String,
}

#[derive(Debug, clap::Args)]
pub struct Route {
    /// Algorithm; defaults to squarefree for squarefree ideals and
    /// decomposition otherwise.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Primes used by the saturation route.
    #[arg(long, value_enum, default_value = "min")]
    pub primes: PrimesArg,
    /// Named decomposition for the decomposition route.
    #[arg(long)]
    pub decomposition: Option<String>,
}

#[derive(Debug, clap::Args)]
pub struct SympowArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub n: u32,
    #[command(flatten)]
    pub route: Route,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub n: u32,
    /// Degree D for the D·n bound; defaults to the largest generator degree.
    #[arg(long = "D")]
    pub d: Option<u64>,
    #[arg(long, value_enum, default_value = "all")]
    pub bound: BoundArg,
    #[command(flatten)]
    pub route: Route,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub input: Input,
    /// Largest n.
    #[arg(long = "N")]
    pub max_n: u32,
    /// Allowed deviation from n·d(I) for the linearity verdict.
    #[arg(long, default_value_t = 0)]
    pub slack: u64,
    #[command(flatten)]
    pub route: Route,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub case: CaseArg,
    /// Wall-clock budget for the whole run.
    #[arg(long = "time-budget", value_name = "SECONDS")]
    pub time_budget: Option<f64>,
    /// Intersection order for the symbolic-square check.
    #[arg(long, value_enum, default_value = "listed")]
    pub fold: FoldArg,
    /// Print progress of long steps to stderr.
    #[arg(long)]
    pub verbose: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::RingMismatch(_) | Error::InvalidRing(_) => EXIT_INPUT,
            Error::NotSquarefree | Error::Precondition(_) | Error::EmptyDecomposition | Error::ExponentOverflow => {
                EXIT_PRECONDITION
            }
            Error::BudgetExhausted(_) => EXIT_BUDGET,
            Error::Internal(_) => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<LookupError> for Failure {
    fn from(e: LookupError) -> Failure {
        let code = match e {
            LookupError::NotMonomial { .. } => EXIT_PRECONDITION,
            LookupError::UnknownIdeal(_) | LookupError::UnknownDecomposition(_) => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Sympow(a) => cmd_sympow(&a, out),
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Growth(a) => cmd_growth(&a, out),
        Command::VerifyPaper(a) => cmd_verify_paper(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(input: &Input) -> std::result::Result<(IdealFile, MonomialIdeal), Failure> {
    let path = input.file.display();
    let content = std::fs::read_to_string(&input.file).map_err(|e| Failure::new(EXIT_INPUT, format!("{path}: {e}")))?;
    let file = text::parse(&content).map_err(|e| Failure::new(EXIT_INPUT, format!("{path}:{e}")))?;
    let ideal = file.monomial_ideal(&input.ideal)?;
    Ok((file, ideal))
}

struct Resolved {
    method: SymbolicMethod,
    primes: PrimeSelection,
    components: Option<Vec<MonomialIdeal>>,
}

impl Resolved {
    fn new(route: &Route, file: &IdealFile, ideal: &MonomialIdeal) -> std::result::Result<Resolved, Failure> {
        let components = route.decomposition.as_deref().map(|d| file.decomposition(d)).transpose()?;
        let method = match route.method {
            Some(MethodArg::Squarefree) => SymbolicMethod::Squarefree,
            Some(MethodArg::Decomposition) => SymbolicMethod::Decomposition,
            Some(MethodArg::Saturation) => SymbolicMethod::Saturation,
            None if components.is_some() => SymbolicMethod::Decomposition,
            None if ideal.is_squarefree() => SymbolicMethod::Squarefree,
            None => SymbolicMethod::Decomposition,
        };
        let primes = match route.primes {
            PrimesArg::Min => PrimeSelection::Min,
            PrimesArg::Ass => PrimeSelection::Ass,
        };
        Ok(Resolved { method, primes, components })
    }

    fn options(&self) -> PowerOptions<'_> {
        PowerOptions { method: self.method, primes: self.primes, components: self.components.as_deref() }
    }
}

fn emit(out: &mut dyn Write, s: &str) -> CmdResult {
    out.write_all(s.as_bytes()).map_err(|e| Failure::new(EXIT_INTERNAL, format!("writing report: {e}")))?;
    Ok(EXIT_OK)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn method_name(m: SymbolicMethod) -> &'static str {
    match m {
        SymbolicMethod::Squarefree => "squarefree",
        SymbolicMethod::Decomposition => "decomposition",
        SymbolicMethod::Saturation => "saturation",
    }
}

pub fn cmd_sympow(args: &SympowArgs, out: &mut dyn Write) -> CmdResult {
    let (file, ideal) = load(&args.input)?;
    let route = Resolved::new(&args.route, &file, &ideal)?;
    let opts = route.options();
    let power = sympow_core::symbolic::symbolic_power(&ideal, args.n, opts.method, opts.primes, opts.components)?;
    let stats = power.degree_stats();
    let gens = power.generator_strings();
    let report = match args.format {
        Format::Json => to_json(&json!({
            "ideal": args.input.ideal,
            "n": args.n,
            "generators": gens,
            "degrees": { "max": stats.max_gen_degree, "beg": stats.beg, "count": stats.count },
        })),
        Format::Text => {
            let mut s = format!("# {}^({}) via {}\n", args.input.ideal, args.n, method_name(route.method));
            s.push_str(&format!("ring: {}\n", ideal.ring().variables().join(" ")));
            s.push_str(&text::monomial_ideal_line(&format!("{}_{}", args.input.ideal, args.n), &power));
            s.push('\n');
            let show = |v: Option<u64>| v.map_or("-".to_string(), |d| d.to_string());
            s.push_str(&format!(
                "# generators {}, max degree {}, beg {}\n",
                stats.count,
                show(stats.max_gen_degree),
                show(stats.beg)
            ));
            s
        }
    };
    emit(out, &report)
}

pub fn cmd_bounds(args: &BoundsArgs, out: &mut dyn Write) -> CmdResult {
    let (file, ideal) = load(&args.input)?;
    let route = Resolved::new(&args.route, &file, &ideal)?;
    let opts = route.options();
    let want = |b: BoundArg| args.bound == b || args.bound == BoundArg::All;
    let mut reports: Vec<BoundReport> = Vec::new();
    let mut params = serde_json::Map::new();
    if want(BoundArg::Huneke) {
        let rep = bounds::huneke_check(&ideal, args.n, args.d, opts)?;
        params.insert("D".into(), json!(rep.bound / args.n.max(1) as u64));
        reports.push(rep);
    }
    if want(BoundArg::Lcm) {
        let lcm = bounds::lcm_bound(&ideal)?;
        params.insert("lcm".into(), json!(lcm.lcm.display(ideal.ring()).to_string()));
        params.insert("lcm_degree".into(), json!(lcm.degree));
        reports.push(bounds::lcm_check(&ideal, args.n, opts)?);
    }
    if want(BoundArg::Sumdeg) {
        params.insert("E".into(), json!(bounds::sum_degree_bound(&ideal)?));
        reports.push(bounds::sum_degree_check(&ideal, args.n, opts)?);
    }
    let report = match args.format {
        Format::Json => to_json(&json!({
            "ideal": args.input.ideal,
            "n": args.n,
            "method": method_name(route.method),
            "parameters": params,
            "reports": reports,
        })),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let kind = serde_json::to_value(r.bound_kind).unwrap();
                s.push_str(&format!(
                    "{} {}: d({}^({})) = {} <= {}\n",
                    if r.satisfied { "PASS" } else { "FAIL" },
                    kind.as_str().unwrap_or_default(),
                    args.input.ideal,
                    r.n,
                    r.d_in,
                    r.bound
                ));
            }
            for (k, v) in &params {
                s.push_str(&format!("# {k} = {v}\n"));
            }
            s
        }
    };
    emit(out, &report)
}

pub fn cmd_growth(args: &GrowthArgs, out: &mut dyn Write) -> CmdResult {
    let (file, ideal) = load(&args.input)?;
    let route = Resolved::new(&args.route, &file, &ideal)?;
    let seq = bounds::degree_sequence(&ideal, args.max_n, route.options(), args.slack)?;
    let report = match args.format {
        Format::Json => to_json(&seq),
        Format::Text => {
            let mut s = String::new();
            for (n, d) in &seq.entries {
                s.push_str(&format!("n = {n}: d = {d}\n"));
            }
            s.push_str(&format!("# slope estimate {}\n", seq.slope_estimate));
            s.push_str(&format!("# linear within {}: {}\n", seq.slack, seq.is_linear_within));
            if let Some(e) = &seq.error {
                s.push_str(&format!("# incomplete: {e}\n"));
            }
            s
        }
    };
    emit(out, &report)?;
    // A partial sequence still prints, but the failure decides the exit code.
    match &seq.error {
        None => Ok(EXIT_OK),
        Some(e) => Err(Failure::new(EXIT_PRECONDITION, e.clone())),
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    cases: &'a [CaseReport],
    passed: bool,
    budget_exhausted: Option<String>,
    seconds: f64,
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Unverified => "UNVERIFIED",
    }
}

pub fn cmd_verify_paper(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let ids: Vec<CaseId> = match args.case {
        CaseArg::All => CaseId::ALL.to_vec(),
        CaseArg::Ex31 => vec![CaseId::Ex31],
        CaseArg::Ex32 => vec![CaseId::Ex32],
        CaseArg::Lemma41 => vec![CaseId::Lemma41],
        CaseArg::Lemma42 => vec![CaseId::Lemma42],
        CaseArg::Ex43 => vec![CaseId::Ex43],
        CaseArg::Ex44 => vec![CaseId::Ex44],
    };
    let fold = match args.fold {
        FoldArg::Listed => FoldOrder::Listed,
        FoldArg::Size => FoldOrder::BySize,
    };
    let budget = match args.time_budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(Failure::new(EXIT_INPUT, "--time-budget must be a non-negative number of seconds"))
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    let start = Instant::now();
    let settings = KernelSettings { deadline: budget.map(|b| start + b), ..Default::default() };
    let verbose = args.verbose;
    let mut progress = |msg: &str| {
        if verbose {
            let _ = writeln!(err, "  .. {msg}");
        }
    };
    let mut reports = Vec::new();
    let mut exhausted = None;
    for id in ids {
        if let Some(b) = budget {
            if start.elapsed() > b {
                exhausted = Some(format!("budget spent before case {id}"));
                break;
            }
        }
        let (result, _) = with_settings(settings, || run_case(id, fold, &mut progress));
        match result {
            Ok(rep) => reports.push(rep),
            Err(Error::BudgetExhausted(stage)) => {
                exhausted = Some(format!("case {id} stopped during {stage}"));
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    let passed = exhausted.is_none() && reports.iter().all(|r| r.passed());
    let seconds = start.elapsed().as_secs_f64();
    let report = match args.format {
        Format::Json => to_json(&VerifyReport { cases: &reports, passed, budget_exhausted: exhausted.clone(), seconds }),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                for c in &r.checks {
                    s.push_str(&format!("{:<10} {:<8} {} ({:.3}s)", status_word(c.status), r.case, c.claim, c.seconds));
                    if !c.detail.is_empty() {
                        s.push_str(&format!(": {}", c.detail));
                    }
                    s.push('\n');
                }
            }
            if let Some(e) = &exhausted {
                s.push_str(&format!("BUDGET     {e}\n"));
            }
            let fails = reports.iter().flat_map(|r| &r.checks).filter(|c| c.status == Status::Fail).count();
            s.push_str(&format!("# {} cases, {} failed claims, {:.3}s\n", reports.len(), fails, seconds));
            s
        }
    };
    emit(out, &report)?;
    Ok(if exhausted.is_some() {
        EXIT_BUDGET
    } else if passed {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}
