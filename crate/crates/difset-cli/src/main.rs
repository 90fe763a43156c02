//! Thin command-line front end over the `difset` library.
//!
//! Every subcommand is an adapter: parse arguments, call the library,
//! serialize the result to stdout as schema-versioned JSON (or raw diagram
//! text for `--emit`). Exit codes are uniform:
//!
//! * 0 — ran, and the primary predicate holds (Sidon / perfect / Found /
//!   certificate produced or valid);
//! * 1 — ran, and it does not (violation / Exhausted / Inconclusive /
//!   invalid certificate);
//! * 2 — usage or input error.
//!
//! With `--cache DIR` (or `DIFSET_CACHE`), every run appends one JSONL
//! record to `DIR/runs.jsonl`.

use std::io::Write as _;
use std::path::PathBuf;
use std::time::{Instant, SystemTime};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use difset::diagram::CircleDiagram;
use difset::modular::{reduce_int_set, Modulus, ResidueSet};
use difset::pds::{
    check_pds_ints, enumerate_pds_with_budget, random_recurrence_pds, singer_pds, CheckMode,
    PdsError, DEFAULT_ENUMERATION_BUDGET,
};
use difset::plane::{baer_report, verify_projective_axioms, CyclicPlane};
use difset::search::{
    certify_non_extension, check_certificate_with_budget, extend_to_pds, sweep_parallel,
    CertificateDocument, CertifyOutcome, ModulusFilter, SearchStatus, CERTIFICATE_VERSION,
    DEFAULT_NODE_BUDGET, DEFAULT_Q_MAX,
};
use difset::sidon::{
    density_profile, extend_to_perfect_ruler, find_difference_violation, find_mod_violation,
    find_sum_violation, mian_chowla, IntegerSet,
};

const SCHEMA: u32 = 1;
const DEFAULT_SEED: u64 = 0;
const CACHE_ENV: &str = "DIFSET_CACHE";

#[derive(Parser)]
#[command(
    name = "difset",
    version,
    about = "Sidon sets, perfect difference sets, cyclic planes, and extension certificates"
)]
struct Cli {
    /// Append a JSONL run record to DIR/runs.jsonl (also via DIFSET_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formulation {
    Diff,
    Sum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Singer,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    Axioms,
    Baer,
    Absolute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitKind {
    Dot,
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Sidon property (difference or sum formulation, optionally
    /// modulo v).
    CheckSidon {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IntegerSet,
        #[arg(long = "mod", value_name = "V")]
        modulus: Option<u64>,
        #[arg(long, value_enum, default_value = "diff")]
        formulation: Formulation,
    },
    /// Check the perfect-difference-set property modulo v.
    CheckPds {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IntegerSet,
        #[arg(long = "mod", value_name = "V")]
        modulus: u64,
        /// Report difference counts even when v is not of the form q²+q+1.
        #[arg(long)]
        lenient: bool,
    },
    /// Construct a perfect difference set of a prime-power order.
    Construct {
        #[arg(long)]
        order: u64,
        #[arg(long, value_enum, default_value = "singer")]
        method: Method,
        /// Seed for the randomized method; omitted means a fixed default,
        /// never wall-clock.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 500)]
        max_tries: u32,
    },
    /// Search for perfect-difference-set extensions of a set.
    Search {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IntegerSet,
        /// Search one plane order.
        #[arg(long, conflicts_with = "sweep")]
        order: Option<u64>,
        /// Search every order up to this bound.
        #[arg(long, value_name = "Q_MAX")]
        sweep: Option<u64>,
        /// Restrict a sweep to prime orders.
        #[arg(long, conflicts_with = "prime_powers_only")]
        primes_only: bool,
        /// Restrict a sweep to prime-power orders.
        #[arg(long)]
        prime_powers_only: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Worker threads for sweeps.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Produce (or, with --check, validate) a non-extension certificate.
    Certify {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IntegerSet,
        /// Validate the certificate document at this path instead of
        /// producing one.
        #[arg(long, value_name = "PATH")]
        check: Option<PathBuf>,
        /// Also write the produced certificate document to this path.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Plane reports and circle diagrams for a difference set.
    Plane {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IntegerSet,
        #[arg(long = "mod", value_name = "V")]
        modulus: u64,
        #[arg(long, value_enum, conflicts_with = "emit")]
        report: Option<ReportKind>,
        #[arg(long, value_enum)]
        emit: Option<EmitKind>,
    },
    /// First n terms of the greedy Sidon sequence.
    MianChowla {
        #[arg(long)]
        count: usize,
        /// Also report |A ∩ [1, n]| / √n at this n.
        #[arg(long, value_name = "N")]
        density_at: Option<u64>,
    },
    /// Greedily extend a Sidon set until every difference 1..=dmax is
    /// realized exactly once.
    Ruler {
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: IntegerSet,
        #[arg(long)]
        dmax: u64,
    },
    /// Enumerate every perfect difference set modulo v.
    Census {
        #[arg(long = "mod", value_name = "V")]
        modulus: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::CheckSidon { .. } => "check-sidon",
            Cmd::CheckPds { .. } => "check-pds",
            Cmd::Construct { .. } => "construct",
            Cmd::Search { .. } => "search",
            Cmd::Certify { .. } => "certify",
            Cmd::Plane { .. } => "plane",
            Cmd::MianChowla { .. } => "mian-chowla",
            Cmd::Ruler { .. } => "ruler",
            Cmd::Census { .. } => "census",
        }
    }
}

fn parse_set(s: &str) -> Result<IntegerSet, String> {
    if let Some(path) = s.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        #[derive(serde::Deserialize)]
        struct SetJson {
            elements: Vec<i64>,
        }
        let parsed: SetJson = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
        return Ok(IntegerSet::new(parsed.elements));
    }
    let mut elements = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        elements.push(part.parse::<i64>().map_err(|e| format!("{part:?}: {e}"))?);
    }
    Ok(IntegerSet::new(elements))
}

fn modulus_arg(v: u64) -> Result<Modulus, CliError> {
    if v == 0 {
        return Err(CliError::input("modulus must be positive"));
    }
    Ok(Modulus::new(v))
}

/// Input / environment error; always exits 2.
struct CliError(String);

impl CliError {
    fn input(msg: impl Into<String>) -> CliError {
        CliError(msg.into())
    }
}

impl From<PdsError> for CliError {
    fn from(e: PdsError) -> CliError {
        CliError(e.to_string())
    }
}

/// What a subcommand produced: a JSON document or raw diagram text, plus
/// the exit code.
struct Output {
    body: Body,
    code: i32,
}

enum Body {
    Json(Value),
    Text(String),
}

impl Output {
    fn json(value: Value, code: i32) -> Output {
        Output {
            body: Body::Json(value),
            code,
        }
    }

    fn text(text: String) -> Output {
        Output {
            body: Body::Text(text),
            code: 0,
        }
    }
}

fn set_value(elements: &[u64], v: u64) -> Value {
    json!({ "elements": elements, "modulus": v })
}

fn run(cmd: &Cmd) -> Result<Output, CliError> {
    match cmd {
        Cmd::CheckSidon {
            set,
            modulus,
            formulation,
        } => {
            let violation = match (modulus, formulation) {
                (Some(v), _) => find_mod_violation(set, modulus_arg(*v)?),
                (None, Formulation::Diff) => find_difference_violation(set),
                (None, Formulation::Sum) => find_sum_violation(set),
            };
            let sidon = violation.is_none();
            let mut doc = json!({ "schema": SCHEMA, "sidon": sidon });
            if let Some(violation) = violation {
                doc["violation"] = serde_json::to_value(violation).expect("serializable");
            }
            Ok(Output::json(doc, i32::from(!sidon)))
        }
        Cmd::CheckPds {
            set,
            modulus,
            lenient,
        } => {
            let mode = if *lenient {
                CheckMode::Lenient
            } else {
                CheckMode::Strict
            };
            let report = check_pds_ints(set, modulus_arg(*modulus)?, mode)?;
            let mut doc = serde_json::to_value(&report).expect("serializable");
            doc["schema"] = json!(SCHEMA);
            Ok(Output::json(doc, i32::from(!report.is_pds)))
        }
        Cmd::Construct {
            order,
            method,
            seed,
            max_tries,
        } => {
            let (pds, extra) = match method {
                Method::Singer => (singer_pds(*order)?, json!({ "method": "singer" })),
                Method::Random => {
                    let seed = seed.unwrap_or(DEFAULT_SEED);
                    match random_recurrence_pds(*order, seed, *max_tries) {
                        Ok(r) => (
                            r.pds,
                            json!({
                                "method": "random",
                                "seed": seed,
                                "tries": r.tries,
                                "coefficients": r.coefficients,
                            }),
                        ),
                        Err(PdsError::BudgetExceeded { budget, .. }) => {
                            return Ok(Output::json(
                                json!({
                                    "schema": SCHEMA,
                                    "status": "budget_exceeded",
                                    "tries": budget,
                                }),
                                1,
                            ))
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            };
            let mut doc = set_value(pds.residues().elements(), pds.modulus().get());
            doc["schema"] = json!(SCHEMA);
            doc["order"] = json!(pds.order());
            for (k, v) in extra.as_object().expect("object").iter() {
                doc[k] = v.clone();
            }
            Ok(Output::json(doc, 0))
        }
        Cmd::Search {
            set,
            order,
            sweep,
            primes_only,
            prime_powers_only,
            budget,
            jobs,
        } => {
            let filter = if *primes_only {
                ModulusFilter::Primes
            } else if *prime_powers_only {
                ModulusFilter::PrimePowers
            } else {
                ModulusFilter::All
            };
            match (order, sweep) {
                (Some(q), None) => {
                    let v = q
                        .checked_mul(*q)
                        .and_then(|s| s.checked_add(q + 1))
                        .ok_or_else(|| CliError::input("order too large"))?;
                    let outcome = extend_to_pds(set, Modulus::new(v), *budget)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    let found = outcome.status == SearchStatus::Found;
                    let mut doc = json!({ "schema": SCHEMA, "q": q, "v": v });
                    doc["outcome"] = serde_json::to_value(&outcome).expect("serializable");
                    Ok(Output::json(doc, i32::from(!found)))
                }
                (None, q_max) => {
                    let q_max = q_max.unwrap_or(DEFAULT_Q_MAX);
                    let outcomes = sweep_parallel(set, q_max, filter, *budget, *jobs)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    let any_found = outcomes.values().any(|o| o.status == SearchStatus::Found);
                    let rows: Vec<Value> = outcomes
                        .iter()
                        .map(|(q, o)| {
                            json!({
                                "q": q,
                                "v": q * q + q + 1,
                                "outcome": serde_json::to_value(o).expect("serializable"),
                            })
                        })
                        .collect();
                    Ok(Output::json(
                        json!({
                            "schema": SCHEMA,
                            "q_max": q_max,
                            "filter": serde_json::to_value(filter).expect("serializable"),
                            "any_found": any_found,
                            "outcomes": rows,
                        }),
                        i32::from(!any_found),
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            }
        }
        Cmd::Certify {
            set,
            check,
            out,
            budget,
        } => {
            if let Some(path) = check {
                let text =
                    std::fs::read_to_string(path).map_err(|e| CliError::input(e.to_string()))?;
                let doc: CertificateDocument = serde_json::from_str(&text)
                    .map_err(|e| CliError::input(format!("certificate parse: {e}")))?;
                let result = check_certificate_with_budget(&doc.certificate, set, *budget);
                let mut body = serde_json::to_value(&result).expect("serializable");
                body["schema"] = json!(SCHEMA);
                return Ok(Output::json(body, i32::from(!result.valid)));
            }
            match certify_non_extension(set, *budget).map_err(|e| CliError::input(e.to_string()))? {
                CertifyOutcome::Certificate(certificate) => {
                    let doc = CertificateDocument {
                        version: CERTIFICATE_VERSION,
                        set: set.clone(),
                        certificate,
                    };
                    let body = serde_json::to_value(&doc).expect("serializable");
                    if let Some(path) = out {
                        let text = serde_json::to_string_pretty(&body).expect("serializable");
                        std::fs::write(path, text + "\n")
                            .map_err(|e| CliError::input(e.to_string()))?;
                    }
                    Ok(Output::json(body, 0))
                }
                CertifyOutcome::Inconclusive { reason } => Ok(Output::json(
                    json!({ "schema": SCHEMA, "status": "inconclusive", "reason": reason }),
                    1,
                )),
            }
        }
        Cmd::Plane {
            set,
            modulus,
            report,
            emit,
        } => {
            let v = modulus_arg(*modulus)?;
            let residues = reduce_int_set(set, v).map_err(|e| CliError::input(e.to_string()))?;
            match (report, emit) {
                (_, Some(kind)) => {
                    let diagram = CircleDiagram::new(&residues);
                    Ok(match kind {
                        EmitKind::Dot => Output::text(diagram.to_dot()),
                        EmitKind::Svg => Output::text(diagram.to_svg()),
                        EmitKind::Json => Output::text(diagram.to_json() + "\n"),
                    })
                }
                (Some(kind), None) => {
                    let plane = CyclicPlane::from_residues(residues)
                        .map_err(|e| CliError::input(e.to_string()))?;
                    match kind {
                        ReportKind::Axioms => {
                            let report = verify_projective_axioms(&plane)
                                .map_err(|e| CliError::input(e.to_string()))?;
                            let ok = report.all_ok();
                            let mut doc = serde_json::to_value(&report).expect("serializable");
                            doc["schema"] = json!(SCHEMA);
                            doc["all_ok"] = json!(ok);
                            Ok(Output::json(doc, i32::from(!ok)))
                        }
                        ReportKind::Baer => {
                            let report =
                                baer_report(&plane).map_err(|e| CliError::input(e.to_string()))?;
                            let ok = report.all_applicable_passed();
                            let mut doc = serde_json::to_value(&report).expect("serializable");
                            doc["schema"] = json!(SCHEMA);
                            doc["all_applicable_passed"] = json!(ok);
                            Ok(Output::json(doc, i32::from(!ok)))
                        }
                        ReportKind::Absolute => {
                            let absolute = plane.absolute_points();
                            Ok(Output::json(
                                json!({
                                    "schema": SCHEMA,
                                    "modulus": plane.v(),
                                    "absolute_points": absolute.elements(),
                                    "absolute_lines": plane.absolute_lines().elements(),
                                }),
                                0,
                            ))
                        }
                    }
                }
                (None, None) => Err(CliError::input("pass --report or --emit")),
            }
        }
        Cmd::MianChowla { count, density_at } => {
            if *count == 0 {
                return Err(CliError::input("--count must be at least 1"));
            }
            let a = mian_chowla(*count);
            let mut doc = json!({ "schema": SCHEMA, "elements": a.elements() });
            if let Some(n) = density_at {
                if *n == 0 {
                    return Err(CliError::input("--density-at must be at least 1"));
                }
                doc["density_at"] = json!(n);
                doc["density_profile"] = json!(density_profile(&a, *n));
            }
            Ok(Output::json(doc, 0))
        }
        Cmd::Ruler { set, dmax } => {
            let ruler =
                extend_to_perfect_ruler(set, *dmax).map_err(|e| CliError::input(e.to_string()))?;
            Ok(Output::json(
                json!({
                    "schema": SCHEMA,
                    "base": ruler.base.elements(),
                    "extended": ruler.extended.elements(),
                    "realized_up_to": ruler.realized_up_to,
                }),
                0,
            ))
        }
        Cmd::Census { modulus, budget } => {
            let v = modulus_arg(*modulus)?;
            let sets = enumerate_pds_with_budget(v, *budget)?;
            Ok(Output::json(
                json!({
                    "schema": SCHEMA,
                    "modulus": v.get(),
                    "count": sets.len(),
                    "sets": sets
                        .iter()
                        .map(|s: &ResidueSet| set_value(s.elements(), v.get()))
                        .collect::<Vec<_>>(),
                }),
                0,
            ))
        }
    }
}

#[derive(Serialize)]
struct RunRecord<'a> {
    schema: u32,
    command: String,
    arguments: Vec<String>,
    version: &'a str,
    outcome: &'a Value,
    exit_code: i32,
    wall_ms: u128,
    timestamp: u64,
}

fn append_cache(dir: &std::path::Path, record: &RunRecord<'_>) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(dir.join("runs.jsonl"))?;
    let line = serde_json::to_string(record).expect("serializable");
    writeln!(file, "{line}")
}

/// Writes to stdout, exiting quietly with the conventional SIGPIPE code
/// when the downstream consumer has closed the pipe (e.g. `… | head`).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if out
        .write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .is_err()
    {
        std::process::exit(141);
    }
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.cmd);
    let wall_ms = start.elapsed().as_millis();

    let (outcome, code) = match result {
        Ok(output) => {
            let value = match &output.body {
                Body::Json(value) => {
                    let mut text = serde_json::to_string_pretty(value).expect("serializable");
                    text.push('\n');
                    emit(&text);
                    value.clone()
                }
                Body::Text(text) => {
                    emit(text);
                    Value::String(text.clone())
                }
            };
            (value, output.code)
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            (json!({ "error": msg }), 2)
        }
    };

    let cache_dir = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    if let Some(dir) = cache_dir {
        let record = RunRecord {
            schema: SCHEMA,
            command: cli.cmd.name().to_string(),
            arguments: argv.get(1..).unwrap_or_default().to_vec(),
            version: env!("CARGO_PKG_VERSION"),
            outcome: &outcome,
            exit_code: code,
            wall_ms,
            timestamp: SystemTime::now()
                .duration_since(SystemTime::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        if let Err(e) = append_cache(&dir, &record) {
            eprintln!("warning: cache append failed: {e}");
        }
    }
    std::process::exit(code);
}
