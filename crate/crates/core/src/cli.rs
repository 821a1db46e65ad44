//! Command-line front end. Every subcommand prints one JSON document on
//! standard output; integers are decimal strings.
//!
//! Exit codes: 0 on success, 1 when a checked property is violated (a sweep
//! mismatch, a failed identity), 2 on usage errors.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::classifier::{classify, expected_period, Classification};
use crate::divisibility::{
    bound_kimberling, bound_weak_order2, bound_weak_orderk, check_converse_div,
    check_coprime_chain, check_div_rp, check_r_divides_even, criterion_ind34, hall_transform,
    hs_criterion, is_strong_divisible, is_weak_divisible,
};
use crate::error::{Error, Result};
use crate::identities::{run_identity_suite, IdentityConfig};
use crate::lucas_fast::{lucas_fast, lucas_gcd};
use crate::periodicity::detect_period;
use crate::recurrence::{
    closed_form_double_root, gen_order_k, gen_sequence, lucas_iter, make_pulse, recover_params,
    LucasParams, OrderKRecurrence, Params,
};
use crate::search::{
    filter_hs, hs_conclusion, sweep, sweep_with_threads, SearchBox, DEFAULT_DEPTH,
};

/// Caps the number of sweep workers.
pub const THREADS_ENV: &str = "SDSEQ_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "sdseq",
    version,
    about = "Strong divisibility sequences of order 2",
    allow_negative_numbers = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TripleArgs {
    #[arg(short = 'P', long = "P", allow_hyphen_values = true)]
    p: BigInt,
    #[arg(short = 'Q', long = "Q", allow_hyphen_values = true)]
    q: BigInt,
    #[arg(short = 'R', long = "R", allow_hyphen_values = true)]
    r: BigInt,
}

impl TripleArgs {
    fn params(&self) -> Params {
        Params::new(self.p.clone(), self.q.clone(), self.r.clone())
    }
}

/// Where a sequence comes from: an order-2 triple, an order-k recurrence, a
/// pulse, or a literal list.
#[derive(Debug, Args)]
struct SourceArgs {
    #[arg(short = 'P', long = "P", allow_hyphen_values = true)]
    p: Option<BigInt>,
    #[arg(short = 'Q', long = "Q", allow_hyphen_values = true)]
    q: Option<BigInt>,
    #[arg(short = 'R', long = "R", allow_hyphen_values = true)]
    r: Option<BigInt>,
    /// Number of terms.
    #[arg(short = 'n', long = "n")]
    n: Option<usize>,
    /// Order-k coefficients a_1,..,a_k.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    coeffs: Option<Vec<BigInt>>,
    /// Order-k initial terms u_1,..,u_k.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    initial: Option<Vec<BigInt>>,
    /// Pulse spacing s (terms equal --value at multiples of s, 1 elsewhere).
    #[arg(long)]
    pulse: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    value: Option<BigInt>,
    /// Literal terms u_1,..,u_N.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["p", "coeffs", "pulse"])]
    values: Option<Vec<BigInt>>,
}

enum Source {
    Order2(Params, usize),
    OrderK(OrderKRecurrence, usize),
    Pulse(usize, BigInt, usize),
    Literal(Vec<BigInt>),
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

impl SourceArgs {
    fn resolve(&self) -> Result<Source> {
        if let Some(values) = &self.values {
            return Ok(Source::Literal(values.clone()));
        }
        let n = || self.n.ok_or_else(|| usage("missing -n <N>"));
        if let Some(s) = self.pulse {
            let t = self
                .value
                .clone()
                .ok_or_else(|| usage("--pulse needs --value"))?;
            return Ok(Source::Pulse(s, t, n()?));
        }
        if let Some(coeffs) = &self.coeffs {
            let initial = self
                .initial
                .clone()
                .ok_or_else(|| usage("--coeffs needs --initial"))?;
            return Ok(Source::OrderK(
                OrderKRecurrence::new(coeffs.clone(), initial)?,
                n()?,
            ));
        }
        match (&self.p, &self.q, &self.r) {
            (Some(p), Some(q), Some(r)) => Ok(Source::Order2(
                Params::new(p.clone(), q.clone(), r.clone()),
                n()?,
            )),
            _ => Err(usage(
                "give -P -Q -R -n, --coeffs/--initial -n, --pulse/--value -n, or --values",
            )),
        }
    }

    fn order_k(&self) -> Result<(OrderKRecurrence, usize)> {
        match self.resolve()? {
            Source::Order2(params, n) => Ok((OrderKRecurrence::order2(&params), n)),
            Source::OrderK(rec, n) => Ok((rec, n)),
            _ => Err(usage(
                "this criterion needs a recurrence (-P -Q -R or --coeffs/--initial)",
            )),
        }
    }
}

fn terms(source: &Source) -> Result<Vec<BigInt>> {
    match source {
        Source::Order2(params, n) => Ok(gen_sequence(params, *n)?.into_values()),
        Source::OrderK(rec, n) => gen_order_k(rec, *n),
        Source::Pulse(s, t, n) => make_pulse(*s, t, *n),
        Source::Literal(values) => Ok(values.clone()),
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    Strong,
    Weak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionKind {
    /// gcd(u3, u4) = 1.
    Ind34,
    /// The index-10 gate sequence and f - 1 divisibility.
    Hs,
    /// gcd(u_n, Q) = gcd(u_n, u_{n+1}) = 1 for n ≤ N.
    Chain,
    /// u_n | R - P implies u_n | u_{kn}.
    Converse,
    /// R | u_{2k} when R | P.
    Reven,
    /// u_n | Q^{n-1}(R - P) on a weak divisibility sequence.
    Bound,
    /// Order-k version of the bound.
    BoundK,
    /// v_n | a_k^n v_0 on the transformed sequence.
    Kimberling,
    /// The transformed sequence v_0..v_N itself.
    Hall,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate terms of a sequence.
    Gen(SourceArgs),
    /// Evaluate U_n(P, Q), or gcd(U_i, U_j) with --gcd.
    Lucas {
        #[arg(short = 'P', long = "P", allow_hyphen_values = true)]
        p: BigInt,
        #[arg(short = 'Q', long = "Q", allow_hyphen_values = true)]
        q: BigInt,
        #[arg(short = 'n', long = "n", required_unless_present = "gcd")]
        n: Option<u64>,
        /// Use direct iteration instead of fast doubling.
        #[arg(long)]
        iter: bool,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        gcd: Option<Vec<u64>>,
    },
    /// Classify (P, Q, R) against the complete list of strong divisibility sequences.
    Classify(TripleArgs),
    /// Brute-force strong or weak divisibility test.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Evaluate one of the divisibility criteria or bounds.
    Criterion {
        #[arg(value_enum)]
        name: CriterionKind,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// The implication u_n | u_{2n} => u_n | R - P.
    Divrp {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(short = 'n', long = "n")]
        n: usize,
    },
    /// Detect eventual periodicity.
    Period(SourceArgs),
    /// Recover (P, Q, R) from u2, u3, u4.
    Recover {
        #[arg(allow_hyphen_values = true)]
        u2: BigInt,
        #[arg(allow_hyphen_values = true)]
        u3: BigInt,
        #[arg(allow_hyphen_values = true)]
        u4: BigInt,
    },
    /// Exhaustive sweep of a parameter box.
    Sweep {
        #[arg(long)]
        pmax: u32,
        #[arg(long)]
        qmax: u32,
        #[arg(long)]
        rmax: u32,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// List the triples meeting the exceptional-family hypotheses instead.
        #[arg(long)]
        hs: bool,
    },
    /// Run the identity self-test suite.
    Identities {
        #[arg(long, default_value_t = IdentityConfig::default().bound)]
        bound: i64,
        #[arg(long, default_value_t = IdentityConfig::default().depth)]
        depth: usize,
    },
}

/// What a subcommand produced: the document and whether a property failed.
struct Outcome {
    document: String,
    violation: bool,
}

impl Outcome {
    fn json<T: Serialize>(value: &T) -> Result<Self> {
        Self::json_flagged(value, false)
    }

    fn json_flagged<T: Serialize>(value: &T, violation: bool) -> Result<Self> {
        let document = serde_json::to_string(value)
            .map_err(|e| Error::InvalidArgument(format!("serialization failed: {e}")))?;
        Ok(Outcome {
            document,
            violation,
        })
    }
}

#[derive(Serialize)]
struct ClassifyOutput<'a> {
    params: &'a Params,
    #[serde(flatten)]
    classification: &'a Classification,
    expected_period: Option<Vec<(usize, usize)>>,
}

fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(usage(format!(
                "{THREADS_ENV} must be a positive integer, got {raw:?}"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn dec(x: &BigInt) -> String {
    x.to_string()
}

fn decs(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(dec).collect()
}

fn execute(command: Command, err: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Gen(source) => {
            let source = source.resolve()?;
            match &source {
                Source::Order2(params, n) => Outcome::json(&gen_sequence(params, *n)?),
                Source::OrderK(rec, n) => Outcome::json(&json!({
                    "coeffs": decs(rec.coeffs()),
                    "initial": decs(rec.initial()),
                    "values": decs(&gen_order_k(rec, *n)?),
                })),
                Source::Pulse(s, t, n) => Outcome::json(&json!({
                    "s": s,
                    "t": dec(t),
                    "values": decs(&make_pulse(*s, t, *n)?),
                })),
                Source::Literal(values) => Outcome::json(&json!({ "values": decs(values) })),
            }
        }
        Command::Lucas { p, q, n, iter, gcd } => {
            let lp = LucasParams::new(p, q);
            if let Some(ij) = gcd {
                let g = lucas_gcd(&lp, ij[0], ij[1])?;
                return Outcome::json(&json!({
                    "lucas": lp, "i": ij[0], "j": ij[1], "gcd": dec(&g),
                }));
            }
            let n = n.expect("clap requires -n without --gcd");
            let (un, un1) = if iter {
                (lucas_iter(&lp, n), lucas_iter(&lp, n + 1))
            } else {
                lucas_fast(&lp, n)
            };
            let closed = closed_form_double_root(&lp, n);
            Outcome::json(&json!({
                "lucas": lp,
                "n": n,
                "U_n": dec(&un),
                "U_n1": dec(&un1),
                "closed_form": closed.as_ref().map(dec),
            }))
        }
        Command::Classify(triple) => {
            let params = triple.params();
            let classification = classify(&params);
            let expected = expected_period(&classification).map(|s| s.into_iter().collect());
            Outcome::json(&ClassifyOutput {
                params: &params,
                classification: &classification,
                expected_period: expected,
            })
        }
        Command::Check { kind, source } => {
            let values = terms(&source.resolve()?)?;
            if values.is_empty() {
                return Err(usage("need at least one term"));
            }
            let report = match kind {
                CheckKind::Strong => is_strong_divisible(&values),
                CheckKind::Weak => is_weak_divisible(&values),
            };
            Outcome::json(&report)
        }
        Command::Criterion { name, source, kmax } => run_criterion(name, &source, kmax),
        Command::Divrp { triple, n } => {
            let params = triple.params();
            let holds = check_div_rp(&params, n)?;
            Outcome::json_flagged(
                &json!({ "criterion": "divrp", "params": params, "n": n, "holds": holds }),
                !holds,
            )
        }
        Command::Period(source) => {
            let values = terms(&source.resolve()?)?;
            Outcome::json(&detect_period(&values)?)
        }
        Command::Recover { u2, u3, u4 } => Outcome::json(&recover_params(&u2, &u3, &u4)),
        Command::Sweep {
            pmax,
            qmax,
            rmax,
            depth,
            format,
            hs,
        } => {
            let search_box = SearchBox::new(pmax, qmax, rmax, depth)?;
            let threads = threads_from_env()?;
            if hs {
                let found = filter_hs(&search_box);
                let all_match = found.iter().all(hs_conclusion);
                return Outcome::json_flagged(
                    &json!({ "box": search_box, "hs_survivors": found, "all_match_conclusion": all_match }),
                    !all_match,
                );
            }
            let start = Instant::now();
            let report = match threads {
                Some(t) => sweep_with_threads(&search_box, t)?,
                None => sweep(&search_box),
            };
            let _ = writeln!(
                err,
                "swept {} triples at depth {} in {:.2?}: {} survivors, {} mismatches",
                report.stats.tested,
                depth,
                start.elapsed(),
                report.survivors.len(),
                report.mismatches.len()
            );
            let violation = !report.mismatches.is_empty();
            match format {
                Format::Json => Outcome::json_flagged(&report, violation),
                Format::Csv => {
                    let mut document = String::from("P,Q,R,families,period");
                    for s in &report.survivors {
                        let families: Vec<String> = s
                            .classification
                            .families
                            .iter()
                            .map(|f| format!("{f:?}"))
                            .collect();
                        let period = s.period.map(|p| p.period.to_string()).unwrap_or_default();
                        document.push_str(&format!(
                            "\n{},{},{},{},{}",
                            s.params.p,
                            s.params.q,
                            s.params.r,
                            families.join(";"),
                            period
                        ));
                    }
                    Ok(Outcome {
                        document,
                        violation,
                    })
                }
            }
        }
        Command::Identities { bound, depth } => {
            if bound < 0 {
                return Err(usage("--bound must be >= 0"));
            }
            let report = run_identity_suite(&IdentityConfig { bound, depth });
            Outcome::json_flagged(&report, !report.all_passed())
        }
    }
}

fn run_criterion(name: CriterionKind, source: &SourceArgs, kmax: usize) -> Result<Outcome> {
    let label = format!("{name:?}").to_lowercase();
    let triple_only = || match (&source.p, &source.q, &source.r) {
        (Some(p), Some(q), Some(r)) => Ok(Params::new(p.clone(), q.clone(), r.clone())),
        _ => Err(usage("this criterion needs -P -Q -R")),
    };
    let triple = || -> Result<(Params, usize)> {
        let n = source.n.ok_or_else(|| usage("missing -n <N>"))?;
        Ok((triple_only()?, n))
    };
    let flagged = |holds: bool, extra: serde_json::Value| {
        let mut doc = json!({ "criterion": label, "holds": holds });
        if let (Some(obj), serde_json::Value::Object(more)) = (doc.as_object_mut(), extra) {
            obj.extend(more);
        }
        Outcome::json_flagged(&doc, !holds)
    };
    match name {
        CriterionKind::Ind34 => {
            let params = triple_only()?;
            let holds = criterion_ind34(&params);
            // A false answer is a verdict, not a violation.
            Outcome::json(&json!({ "criterion": label, "params": params, "holds": holds }))
        }
        CriterionKind::Hs => {
            let report = hs_criterion(&triple_only()?);
            let violation = report.divides_f_minus_one == Some(false);
            Outcome::json_flagged(&report, violation)
        }
        CriterionKind::Chain => {
            let (params, n) = triple()?;
            flagged(
                check_coprime_chain(&params, n)?,
                json!({ "params": params, "n": n }),
            )
        }
        CriterionKind::Converse => {
            let (params, n) = triple()?;
            flagged(
                check_converse_div(&params, n, kmax)?,
                json!({ "params": params, "n": n, "kmax": kmax }),
            )
        }
        CriterionKind::Reven => {
            let params = triple_only()?;
            flagged(
                check_r_divides_even(&params, kmax)?,
                json!({ "params": params, "kmax": kmax }),
            )
        }
        CriterionKind::Bound => {
            let (params, n) = triple()?;
            flagged(
                bound_weak_order2(&params, n)?,
                json!({ "params": params, "n": n }),
            )
        }
        CriterionKind::BoundK => {
            let (rec, n) = source.order_k()?;
            flagged(
                bound_weak_orderk(&rec, n)?,
                json!({ "recurrence": rec, "n": n }),
            )
        }
        CriterionKind::Kimberling => {
            let (rec, n) = source.order_k()?;
            flagged(
                bound_kimberling(&rec, n)?,
                json!({ "recurrence": rec, "n": n }),
            )
        }
        CriterionKind::Hall => {
            let (rec, n) = source.order_k()?;
            let v = hall_transform(&rec, n)?;
            Outcome::json(&json!({ "recurrence": rec, "values": decs(&v) }))
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli.command, err) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.document);
            i32::from(outcome.violation)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn run_main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
