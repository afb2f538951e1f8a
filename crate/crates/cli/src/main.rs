use clap::{Args, Parser, Subcommand, ValueEnum};
use rankzeta::classify::{wei_dual_weights, ClassificationReport};
use rankzeta::crosscheck::{self, CrossCheckReport};
use rankzeta::hamming::{BlockSpec, HammingReport};
use rankzeta::invariants::{Analysis, InvariantProfile};
use rankzeta::par::ExecMode;
use rankzeta::qcombinat::rational;
use rankzeta::qcombinat::BigRational;
use rankzeta::random::RandomSpec;
use rankzeta::rmcode::{CodeSpec, GeneratorMode, RankMetricCode};
use rankzeta::zeta::{phi, series_times_phi, zeta_series, BmdReference, ZetaProfile};
use rankzeta::{fixtures, Budget, Error};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rankzeta", version, about = "Exact invariants of matrix rank-metric codes")]
struct Cli {
    /// Cap on every exhaustive enumeration (overrides RANKZETA_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Binomial moments, rank distribution, normalized moments and enumerator.
    Invariants(InvariantsArgs),
    /// Zeta series, zeta polynomial and optional beta expansion.
    Zeta(ZetaArgs),
    /// Weights, dual weights and the MRD/BMD predicates.
    Classify(ClassifyArgs),
    /// Run every fast-versus-brute-force check and print a pass/fail matrix.
    OracleCheck(OracleArgs),
    /// List the bundled fixtures, or print one.
    Fixtures { name: Option<String> },
    /// Generalized Hamming weights and the BMD/MDS predicates of a block code.
    Hamming(HammingArgs),
    /// Zeta data and enumerators of the BMD reference, and the polynomials phi_n.
    Reference(ReferenceArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct CodeArg {
    /// Code file (JSON), or the name of a bundled fixture.
    #[arg(long)]
    code: String,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    code: CodeArg,
    #[arg(long, conflicts_with = "all_i", required_unless_present = "all_i")]
    i: Option<usize>,
    #[arg(long)]
    all_i: bool,
    /// Report the invariants of the dual code.
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ZetaArgs {
    #[command(flatten)]
    code: CodeArg,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    order: Option<usize>,
    /// Reference index for the beta expansion.
    #[arg(long, default_value_t = 1)]
    tau: usize,
    #[arg(long)]
    beta: bool,
    /// Also print the coefficients of Z(T) phi_n(X, Y, T) (table format).
    #[arg(long)]
    phi: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ReferenceArgs {
    #[arg(long, default_value_t = 1)]
    tau: usize,
    #[arg(long)]
    i: usize,
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 8)]
    order: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    code: CodeArg,
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    code: Option<String>,
    /// Random code such as "n=3 m=3 k=4 q=2 seed=7".
    #[arg(long)]
    random: Option<String>,
    /// Stored invariants profile (JSON, one profile or a list) to validate.
    #[arg(long)]
    profile: Option<PathBuf>,
}

#[derive(Args)]
struct HammingArgs {
    /// Block code file (JSON).
    #[arg(long)]
    code: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

enum Fail {
    Usage(String),
    Compute(Error),
    Mismatch(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Shape(_) | Error::InvalidField(_) | Error::DependentGenerators { .. } => {
                Fail::Usage(e.to_string())
            }
            _ => Fail::Compute(e),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn load_code(arg: &str) -> Result<RankMetricCode, Fail> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(text) = fixtures::source(arg) {
            return Ok(CodeSpec::from_json(text)?.build(GeneratorMode::Strict)?);
        }
    }
    let text = read(path)?;
    CodeSpec::from_json(&text)
        .and_then(|s| s.build(GeneratorMode::Strict))
        .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

fn list(v: &[BigRational]) -> String {
    v.iter().map(rational::to_string).collect::<Vec<_>>().join(", ")
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn profile_table(p: &InvariantProfile) -> String {
    table(&[
        ("i", p.i.to_string()),
        ("d_i", p.d_i.to_string()),
        ("B", list(&p.moments)),
        ("A", list(&p.distribution)),
        ("b", list(&p.normalized)),
        ("W", p.enumerator.to_string()),
    ])
}

fn invariants(args: &InvariantsArgs, budget: &Budget) -> Result<String, Fail> {
    let a = Analysis::new(&load_code(&args.code.code)?, budget)?;
    let a = if args.dual { a.swapped() } else { a };
    let indices: Vec<usize> = match args.i {
        Some(i) if i > a.k() => {
            return Err(Fail::Usage(format!("--i {i} exceeds the code dimension {}", a.k())));
        }
        Some(i) => vec![i],
        None => (0..=a.k()).collect(),
    };
    let profiles = indices
        .into_iter()
        .map(|i| InvariantProfile::compute(&a, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match (args.format, args.all_i) {
        (Format::Json, false) => json(&profiles[0]),
        (Format::Json, true) => json(&profiles),
        (Format::Table, _) => profiles.iter().map(profile_table).collect::<Vec<_>>().join("\n\n"),
    })
}

fn zeta(args: &ZetaArgs, budget: &Budget) -> Result<String, Fail> {
    let a = Analysis::new(&load_code(&args.code.code)?, budget)?;
    if args.i > a.k() {
        return Err(Fail::Usage(format!("--i {} exceeds the code dimension {}", args.i, a.k())));
    }
    let z = ZetaProfile::compute(&a, args.i, args.order, args.beta.then_some(args.tau))?;
    Ok(match args.format {
        Format::Json => json(&z),
        Format::Table => {
            let mut rows = vec![
                ("i", z.i.to_string()),
                ("order", z.order.to_string()),
                ("degree bound", z.degree_bound.to_string()),
                ("Z", list(&z.z)),
                ("P", list(&z.p)),
            ];
            if let Some(b) = &z.beta {
                rows.push(("tau", b.tau.to_string()));
                rows.push(("beta", list(&b.values)));
                rows.push(("beta series", list(&b.series)));
            }
            let mut out = table(&rows);
            if args.phi {
                let series = zeta_series(&a, args.i, z.order)?;
                for (t, w) in series_times_phi(&series, a.n(), a.q(), z.order)?.iter().enumerate() {
                    out.push_str(&format!("\nZ phi T^{t}  {w}"));
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct DualReport {
    code: ClassificationReport,
    dual: ClassificationReport,
    wei_duality: bool,
}

fn report_table(r: &ClassificationReport) -> String {
    let idx = |v: &[bool]| {
        let s: Vec<String> = (1..v.len()).filter(|&i| v[i]).map(|i| i.to_string()).collect();
        if s.is_empty() { "none".to_string() } else { s.join(", ") }
    };
    let nums = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    table(&[
        ("n m k", format!("{} {} {}", r.n, r.m, r.k)),
        ("d", r.d.to_string()),
        ("d_perp", r.d_perp.to_string()),
        ("weights", nums(&r.weights)),
        ("dual weights", nums(&r.dual_weights)),
        ("i-MRD", idx(&r.i_mrd)),
        ("i-BMD", idx(&r.bmd)),
        ("minimal BMD", r.minimal_bmd.map_or("none".into(), |i| i.to_string())),
        ("MRD", r.mrd.to_string()),
        ("QMRD", r.qmrd.to_string()),
        ("DQMRD", r.dqmrd.to_string()),
    ])
}

fn classify(args: &ClassifyArgs, budget: &Budget) -> Result<String, Fail> {
    let a = Analysis::new(&load_code(&args.code.code)?, budget)?;
    let report = ClassificationReport::compute(&a);
    if !args.dual {
        return Ok(match args.format {
            Format::Json => json(&report),
            Format::Table => report_table(&report),
        });
    }
    let dual = ClassificationReport::compute(&a.swapped());
    let wei = wei_dual_weights(&a.weights, a.n(), a.m())? == a.dual_weights;
    Ok(match args.format {
        Format::Json => json(&DualReport {
            code: report,
            dual,
            wei_duality: wei,
        }),
        Format::Table => format!(
            "code\n{}\n\ndual\n{}\n\nwei duality  {}",
            report_table(&report),
            report_table(&dual),
            if wei { "PASS" } else { "FAIL" }
        ),
    })
}

fn oracle_check(args: &OracleArgs, budget: &Budget) -> Result<String, Fail> {
    let (label, code) = match (&args.code, &args.random) {
        (Some(c), _) => (c.clone(), load_code(c)?),
        (None, Some(r)) => {
            let spec: RandomSpec = r.parse()?;
            (format!("random {spec}"), spec.build()?)
        }
        (None, None) => return Err(Fail::Usage("one of --code or --random is required".into())),
    };
    let report: CrossCheckReport = crosscheck::run(&code, budget, ExecMode::default())?;
    let mut out = format!("code  {label}\n{report}");
    let mut failed = !report.passed();
    if let Some(path) = &args.profile {
        let text = read(path)?;
        let profiles: Vec<InvariantProfile> = serde_json::from_str::<Vec<InvariantProfile>>(&text)
            .or_else(|_| serde_json::from_str::<InvariantProfile>(&text).map(|p| vec![p]))
            .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
        for p in &profiles {
            match crosscheck::check_profile(&code, p, budget)? {
                None => out.push_str(&format!("\nprofile i = {}  PASS", p.i)),
                Some(identity) => {
                    failed = true;
                    out.push_str(&format!("\nprofile i = {}  FAIL  violated: {identity}", p.i));
                }
            }
        }
    }
    if failed {
        Err(Fail::Mismatch(out))
    } else {
        Ok(out)
    }
}

fn fixtures_cmd(name: &Option<String>) -> Result<String, Fail> {
    match name {
        None => Ok(fixtures::names().join("\n")),
        Some(n) => fixtures::source(n)
            .map(|s| s.trim_end().to_string())
            .ok_or_else(|| Fail::Usage(format!("unknown fixture {n:?}; available: {}", fixtures::names().join(", ")))),
    }
}

#[derive(Serialize)]
struct HammingOutput {
    #[serde(flatten)]
    report: HammingReport,
    bmd_iff_mds: bool,
}

fn hamming(args: &HammingArgs, budget: &Budget) -> Result<String, Fail> {
    let text = read(&args.code)?;
    let code = BlockSpec::from_json(&text)
        .and_then(|s| s.build())
        .map_err(|e| Fail::Usage(format!("{}: {e}", args.code.display())))?;
    let report = HammingReport::compute(&code, budget)?;
    let iff = report.bmd_iff_mds();
    Ok(match args.format {
        Format::Json => json(&HammingOutput {
            report,
            bmd_iff_mds: iff,
        }),
        Format::Table => {
            let nums = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
            let idx = |v: &[bool]| (1..v.len()).filter(|&i| v[i]).map(|i| i.to_string()).collect::<Vec<_>>().join(", ");
            let mut rows = vec![
                ("q n k", format!("{} {} {}", report.q, report.n, report.k)),
                ("weights", nums(&report.weights)),
                ("dual weights", nums(&report.dual_weights)),
                ("i-BMD", idx(&report.bmd)),
                ("i-MDS", idx(&report.mds)),
                ("BMD iff MDS", iff.to_string()),
            ];
            if !report.in_stated_regime {
                rows.push(("note", "q = 2 lies outside the regime q >= 3".into()));
            }
            table(&rows)
        }
    })
}

fn reference(args: &ReferenceArgs) -> Result<String, Fail> {
    let r = BmdReference::new(args.tau, args.i, args.q, args.m, args.n, args.order)?;
    let mut rows = vec![
        ("Z", list(r.z.coeffs())),
        ("P", list(r.p.coeffs())),
    ];
    let labels: Vec<String> = (0..=args.n).map(|u| format!("M_{u}")).collect();
    for (u, label) in labels.iter().enumerate() {
        rows.push((label, r.enumerator(u).to_string()));
    }
    let phis: Vec<String> = (0..=args.n).map(|t| format!("phi T^{t}")).collect();
    for (t, w) in phi(args.n, args.q)?.iter().enumerate() {
        rows.push((&phis[t], w.to_string()));
    }
    Ok(table(&rows))
}

fn run(cli: &Cli) -> Result<String, Fail> {
    let budget = cli.budget.map_or_else(Budget::from_env, Budget::uniform);
    match &cli.command {
        Command::Invariants(a) => invariants(a, &budget),
        Command::Zeta(a) => zeta(a, &budget),
        Command::Classify(a) => classify(a, &budget),
        Command::OracleCheck(a) => oracle_check(a, &budget),
        Command::Fixtures { name } => fixtures_cmd(name),
        Command::Hamming(a) => hamming(a, &budget),
        Command::Reference(a) => reference(a),
    }
}

fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{out}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Fail::Mismatch(out)) => {
            emit(&out);
            ExitCode::from(3)
        }
    }
}
