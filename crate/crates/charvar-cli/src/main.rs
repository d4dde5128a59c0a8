//! `charvar`: compute `ℍ_ω`, run the identity suites, count points over
//! `F_q` and dump Kostka tables.
//!
//! Exit codes: 0 success, 2 a checked identity failed, 3 a census exceeded
//! the budget, 64 malformed input.

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use charvar::exact::{rat, rf_to_json, Rational};
use charvar::hfun::{h_function, specialize_h, HError, Outcome, Specialization, SpecializeMode};
use charvar::macdonald::{kostka_tsv, KostkaKind};
use charvar::oracle::{is_generic, parse_classes, Counts, GroupCensus, OracleError, DEFAULT_BUDGET};
use charvar::partitions::{parse_multipartition, parse_multitype, MultiType, ParseError};
use charvar::quiver::report;
use charvar::verify::{
    suite_convtheo, suite_d4, suite_green, suite_logexp, suite_propmagic, suite_roots, suite_unichar, Check,
    VerifyError,
};

#[derive(Parser)]
#[command(
    name = "charvar",
    version,
    about = "Character variety generating functions and point counts"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest group the point-count census may enumerate.
    #[arg(long, env = "CH_BUDGET", default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    D4,
    Convtheo,
    Logexp,
    Propmagic,
    Green,
    Unichar,
    Roots,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Macdonald,
    ModifiedQ,
    Charge,
}

#[derive(Subcommand)]
enum Cmd {
    /// ℍ_ω(z,w) with its E_ic and pure specializations.
    #[command(group(ArgGroup::new("input").required(true).args(["multitype", "multipartition"])))]
    Hfun {
        /// Multi-type, e.g. "[1][1];[1][1];[2];[2]" or "(2,[1]);(1,[1])(1,[1])".
        #[arg(long)]
        multitype: Option<String>,
        /// Semisimple multi-type given by eigenvalue multiplicities, e.g. "[1,1];[1,1];[1,1];[1,1]".
        #[arg(long)]
        multipartition: Option<String>,
        #[arg(long, default_value_t = 0)]
        g: u32,
        /// Number of punctures; must match the multi-type when given.
        #[arg(long)]
        k: Option<usize>,
        /// Truncation degree (default |ω|).
        #[arg(long = "N")]
        truncation: Option<u32>,
    },
    /// Runs identity suites and reports every check.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Block size for d4.
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Field sizes (repeatable).
        #[arg(long)]
        q: Vec<u64>,
        /// Largest rank or partition size.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random series for logexp.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Truncation degree for logexp.
        #[arg(long = "N", default_value_t = 6)]
        truncation: u32,
    },
    /// Points of the representation variety over F_q by class convolution.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        g: u32,
        /// Classes with eigenvalue tags, e.g. "[1]@1[1]@2;[2]@1".
        #[arg(long)]
        classes: String,
    },
    /// Comet quiver, dimension vector and root classification.
    Quiver {
        #[arg(long)]
        multitype: String,
        #[arg(long, default_value_t = 0)]
        g: u32,
    },
    /// Kostka table as TSV with rows λ and columns μ.
    Kostka {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Kind::Macdonald)]
        kind: Kind,
    },
}

enum Failure {
    Usage(String),
    Assertion(String),
    Budget(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Assertion(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Assertion(m) | Failure::Budget(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.render())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Parse(p) => p.into(),
            OracleError::Budget { .. } => Failure::Budget(e.to_string()),
            OracleError::NoCharacterTable => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<HError> for Failure {
    fn from(e: HError) -> Self {
        match e {
            HError::Truncation { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Oracle(o) => o.into(),
            VerifyError::H(h) => h.into(),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// Integers as JSON numbers, everything else as `"a/b"`.
fn number(c: &Rational) -> Value {
    if c.is_integer() {
        if let Ok(i) = i64::try_from(c.numer()) {
            return json!(i);
        }
    }
    Value::String(c.to_string())
}

fn q_coeffs(s: &Specialization) -> Value {
    match &s.outcome {
        Outcome::Polynomial(p) => match p.univariate_coeffs("q") {
            Some(cs) => Value::Array(cs.iter().map(number).collect()),
            None => Value::String(p.to_string()),
        },
        Outcome::NotPolynomial(f) => Value::String(f.to_string()),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(o) if o.contains_key("num") => {
            let text = |p: &Value| {
                charvar::exact::poly_from_json(p)
                    .map(|p| p.to_string())
                    .unwrap_or_else(|_| p.to_string())
            };
            let (num, den) = (text(&o["num"]), text(&o["den"]));
            if den == "1" {
                num
            } else {
                format!("({num}) / ({den})")
            }
        }
        other => other.to_string(),
    }
}

fn emit(format: Format, v: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Table => {
            let obj = v.as_object().expect("reports are objects");
            let width = obj.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in obj {
                println!("{k:<width$}  {}", cell(v));
            }
        }
    }
}

fn read_multitype(multitype: Option<String>, multipartition: Option<String>) -> Result<MultiType, Failure> {
    match (multitype, multipartition) {
        (Some(s), _) => Ok(parse_multitype(&s)?),
        (None, Some(s)) => Ok(parse_multipartition(&s)?),
        (None, None) => Err(Failure::Usage(
            "one of --multitype or --multipartition is required".into(),
        )),
    }
}

fn cmd_hfun(
    format: Format,
    omega: MultiType,
    g: u32,
    k: Option<usize>,
    truncation: Option<u32>,
) -> Result<(), Failure> {
    if let Some(k) = k {
        if k != omega.types().len() {
            return Err(Failure::Usage(format!(
                "--k {k} but the multi-type has {} components",
                omega.types().len()
            )));
        }
    }
    let h = h_function(&omega, g, truncation.unwrap_or(omega.size()))?;
    let e = specialize_h(&h, SpecializeMode::EIc).map_err(|e| Failure::Internal(e.to_string()))?;
    let p = specialize_h(&h, SpecializeMode::Pure).map_err(|e| Failure::Internal(e.to_string()))?;
    let symmetric = h.is_swap_symmetric() && h.is_sign_symmetric();
    let palindromic = e.palindromic.unwrap_or(false);
    emit(
        format,
        &json!({
            "multitype": omega.to_string(),
            "g": g,
            "d": h.d,
            "H": rf_to_json(&h.value),
            "E_ic": q_coeffs(&e),
            "pure": q_coeffs(&p),
            "palindromic": palindromic,
            "symmetric": symmetric,
        }),
    );
    if !symmetric || !palindromic {
        return Err(Failure::Assertion(format!(
            "ℍ symmetric: {symmetric}, E_ic palindromic polynomial: {palindromic}"
        )));
    }
    Ok(())
}

struct VerifyArgs {
    suite: Suite,
    r: u32,
    q: Vec<u64>,
    n: Option<u32>,
    seed: u64,
    count: usize,
    truncation: u32,
}

fn run_suites(a: &VerifyArgs, budget: u64) -> Result<Vec<Check>, Failure> {
    let want = |s: Suite| a.suite == s || a.suite == Suite::All;
    let qs = |default: &[u64]| if a.q.is_empty() { default.to_vec() } else { a.q.clone() };
    let mut out = Vec::new();
    if want(Suite::D4) {
        out.extend(suite_d4(a.r)?);
    }
    if want(Suite::Convtheo) {
        out.extend(suite_convtheo(&qs(&[3, 5]), a.n.unwrap_or(2), budget)?);
    }
    if want(Suite::Logexp) {
        out.extend(suite_logexp(a.seed, a.count, a.truncation)?);
    }
    if want(Suite::Propmagic) {
        out.extend(suite_propmagic(a.n.unwrap_or(4)));
    }
    if want(Suite::Green) {
        out.extend(suite_green(a.n.unwrap_or(4), &qs(&[2, 3, 5]))?);
    }
    if want(Suite::Unichar) {
        for q in qs(&[3]) {
            out.extend(suite_unichar(q, budget)?);
        }
    }
    if want(Suite::Roots) {
        out.extend(suite_roots(&qs(&[3, 5]), budget)?);
    }
    Ok(out)
}

fn cmd_verify(format: Format, a: VerifyArgs, budget: u64) -> Result<(), Failure> {
    let checks = run_suites(&a, budget)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    match format {
        Format::Json => {
            let v = json!({"passed": checks.len() - failed, "failed": failed, "checks": checks});
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
        Format::Table => {
            for c in &checks {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                if c.pass || c.detail.is_empty() {
                    println!("{mark}  {:<10}{}", c.suite, c.name);
                } else {
                    println!("{mark}  {:<10}{}  {}", c.suite, c.name, c.detail);
                }
            }
            println!("{} passed, {failed} failed", checks.len() - failed);
        }
    }
    if failed > 0 {
        return Err(Failure::Assertion(format!("{failed} checks failed")));
    }
    Ok(())
}

fn cmd_count(format: Format, n: usize, q: u64, g: u32, classes: &str, budget: u64) -> Result<(), Failure> {
    let cs = parse_classes(classes, q)?;
    if let Some(c) = cs.iter().find(|c| c.size() as usize != n) {
        return Err(Failure::Usage(format!(
            "class {c} has size {} but --n is {n}",
            c.size()
        )));
    }
    let census = GroupCensus::build(n, q, budget)?;
    let counts = Counts::compute(&census, g, &cs)?;
    let mut out = Map::new();
    out.insert("raw_count".into(), number(&counts.raw_count));
    out.insert("stack_count".into(), number(&counts.stack_count));
    out.insert("convolution".into(), number(&counts.convolution));
    let generic = is_generic(&cs, q);
    out.insert("generic".into(), json!(generic));
    let matches = if generic {
        let omega = MultiType::new(cs.iter().map(|c| c.ty()).collect()).map_err(Failure::Usage)?;
        let h = h_function(&omega, g, n as u32)?;
        let e = specialize_h(&h, SpecializeMode::EIc).map_err(|e| Failure::Internal(e.to_string()))?;
        let e_at_q = e
            .value
            .eval(&[("q", rat(q as i64))])
            .map_err(|e| Failure::Internal(e.to_string()))?;
        json!(&counts.convolution * rat(q as i64 - 1) == e_at_q)
    } else {
        Value::Null
    };
    out.insert("matches_H".into(), matches);
    emit(format, &Value::Object(out));
    Ok(())
}

fn cmd_quiver(format: Format, multitype: &str, g: u32) -> Result<(), Failure> {
    let omega = parse_multitype(multitype)?;
    let r = report(&omega, g);
    let mut v = serde_json::to_value(&r).map_err(|e| Failure::Internal(e.to_string()))?;
    if let Format::Table = format {
        v["quiver"] = Value::String(format!("g = {}, legs {:?}", r.quiver.g, r.quiver.legs));
        v["dimension_vector"] = Value::String(format!(
            "{} | {:?}",
            r.dimension_vector.central, r.dimension_vector.legs
        ));
    }
    emit(format, &v);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    match cli.cmd {
        Cmd::Hfun {
            multitype,
            multipartition,
            g,
            k,
            truncation,
        } => cmd_hfun(cli.format, read_multitype(multitype, multipartition)?, g, k, truncation),
        Cmd::Verify {
            suite,
            r,
            q,
            n,
            seed,
            count,
            truncation,
        } => cmd_verify(
            cli.format,
            VerifyArgs {
                suite,
                r,
                q,
                n,
                seed,
                count,
                truncation,
            },
            cli.budget,
        ),
        Cmd::Count { n, q, g, classes } => cmd_count(cli.format, n, q, g, &classes, cli.budget),
        Cmd::Quiver { multitype, g } => cmd_quiver(cli.format, &multitype, g),
        Cmd::Kostka { n, kind } => {
            let kind = match kind {
                Kind::Macdonald => KostkaKind::Macdonald,
                Kind::ModifiedQ => KostkaKind::ModifiedQ,
                Kind::Charge => KostkaKind::Charge,
            };
            print!("{}", kostka_tsv(n, kind));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message());
            ExitCode::from(f.code())
        }
    }
}
