//! Command-line front end. [`run`] does all the work and returns what to
//! print, so it can be driven from tests.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::domain::{DomainElem, DomainHandle, DomainId};
use crate::fuzz::{run_property, Property};
use crate::parse::{parse_expr, print_expr};
use crate::predicates::{
    aq_triple_check, common_nonunit_divisor, gauss_product_check, is_primitive, primal_decompose,
    prime_like_check, AqVerdict, CommonDivisor, Decision, GaussVerdict, PrimalOutcome, PrimeLikeOutcome,
};
use crate::witness::{run_witness, DEFAULT_SEED, NAMES};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "divlab", version, about = "Exact divisibility experiments in a few integral domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct DomainArg {
    /// One of r0, r, z, z5, dk.
    #[arg(long, short)]
    domain: DomainId,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a named witness and report whether it reproduces.
    Witness {
        /// One of mcd-infinite, idf-fails, antimatter, gauss-fails-z5,
        /// x-not-primal, claim-fuzz, aq-z5, prime-like-cases.
        name: String,
        /// Family size, or trial count for fuzzed witnesses.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a seeded property check.
    Fuzz {
        property: Property,
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Is the polynomial with these coefficients primitive?
    Primitive {
        #[command(flatten)]
        domain: DomainArg,
        #[arg(required = true)]
        coefficients: Vec<String>,
    },
    /// Is the product of two primitive polynomials primitive? Polynomials
    /// are comma-separated coefficient lists, constant term first.
    Gauss {
        #[command(flatten)]
        domain: DomainArg,
        f: String,
        g: String,
    },
    /// Does gcd(r,s) = gcd(r,t) = 1 imply gcd(r,st) = 1 here?
    Aq {
        #[command(flatten)]
        domain: DomainArg,
        r: String,
        s: String,
        t: String,
    },
    /// Find a nonunit divisor of p dividing r or s, given p | rs.
    PrimeLike {
        #[command(flatten)]
        domain: DomainArg,
        p: String,
        r: String,
        s: String,
    },
    /// Split p = d d' u with d | a, d' | b and u a unit, given p | ab.
    Primal {
        #[command(flatten)]
        domain: DomainArg,
        p: String,
        a: String,
        b: String,
    },
    /// Parse an expression and print its canonical form.
    Parse {
        #[command(flatten)]
        domain: DomainArg,
        expr: String,
    },
}

/// Exit code and output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(stderr: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::out(EXIT_HOLDS, text)
            };
        }
    };
    match execute(cli.command) {
        Ok(o) => o,
        Err(msg) => Outcome::usage(format!("error: {msg}\n")),
    }
}

fn parse_all(domain: DomainId, texts: &[&str]) -> Result<Vec<DomainElem>, String> {
    texts
        .iter()
        .map(|t| parse_expr(t, domain).map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

fn parse_list(domain: DomainId, list: &str) -> Result<Vec<DomainElem>, String> {
    let parts: Vec<&str> = list.split(',').collect();
    parse_all(domain, &parts)
}

fn verdict_json(verdict: &str, witness: Value, quotients: Value, case: Value, extra: Value) -> String {
    let mut v = json!({
        "verdict": verdict,
        "witness": witness,
        "quotients": quotients,
        "case": case,
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
}

fn decision_code(d: Decision) -> i32 {
    match d {
        Decision::Yes => EXIT_HOLDS,
        Decision::No => EXIT_VIOLATED,
        Decision::Unknown => EXIT_UNKNOWN,
    }
}

fn execute(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Witness { name, n, seed, json } => {
            if !NAMES.contains(&name.as_str()) {
                return Err(format!("unknown witness {name:?}; expected one of {}", NAMES.join(", ")));
            }
            let report = run_witness(&name, n, seed).map_err(|e| e.to_string())?;
            let text = if json { format!("{}\n", report.to_json()) } else { report.to_text() };
            let code = if report.reproduced() { EXIT_HOLDS } else { EXIT_VIOLATED };
            Ok(Outcome::out(code, text))
        }
        Command::Fuzz { property, trials, seed } => {
            let summary = run_property(property, trials, seed);
            let text = format!("{}\n", serde_json::to_string_pretty(&summary).expect("json"));
            Ok(Outcome::out(if summary.ok() { EXIT_HOLDS } else { EXIT_VIOLATED }, text))
        }
        Command::Primitive { domain, coefficients } => {
            let id = domain.domain;
            let refs: Vec<&str> = coefficients.iter().map(String::as_str).collect();
            let cs = parse_all(id, &refs)?;
            let d = DomainHandle::new(id);
            let decision = is_primitive(&d, &cs).map_err(|e| e.to_string())?;
            let witness = match decision {
                Decision::No => {
                    let nonzero: Vec<_> = cs.iter().filter(|c| !c.is_zero()).cloned().collect();
                    match common_nonunit_divisor(id, &nonzero) {
                        CommonDivisor::Found(c) => {
                            let qs: Vec<String> = cs
                                .iter()
                                .map(|x| c.divides(x).ok().flatten().map_or("-".into(), |q| q.to_string()))
                                .collect();
                            (json!(c.to_string()), json!(qs))
                        }
                        _ => (Value::Null, Value::Null),
                    }
                }
                _ => (Value::Null, Value::Null),
            };
            let verdict = match decision {
                Decision::Yes => "primitive",
                Decision::No => "not-primitive",
                Decision::Unknown => "unknown",
            };
            Ok(Outcome::out(
                decision_code(decision),
                verdict_json(verdict, witness.0, witness.1, Value::Null, json!({})),
            ))
        }
        Command::Gauss { domain, f, g } => {
            let id = domain.domain;
            let (f, g) = (parse_list(id, &f)?, parse_list(id, &g)?);
            let rep = gauss_product_check(&DomainHandle::new(id), &f, &g).map_err(|e| e.to_string())?;
            let (verdict, code, witness) = match &rep.verdict {
                GaussVerdict::ProductPrimitive => ("product-primitive", EXIT_HOLDS, Value::Null),
                GaussVerdict::ProductNotPrimitive { common_divisor } => {
                    ("product-not-primitive", EXIT_VIOLATED, json!(common_divisor))
                }
                GaussVerdict::Unknown => ("unknown", EXIT_UNKNOWN, Value::Null),
            };
            let extra = json!({ "product": rep.product });
            Ok(Outcome::out(code, verdict_json(verdict, witness, Value::Null, Value::Null, extra)))
        }
        Command::Aq { domain, r, s, t } => {
            let id = domain.domain;
            let es = parse_all(id, &[&r, &s, &t])?;
            let rep = aq_triple_check(&DomainHandle::new(id), &es[0], &es[1], &es[2]).map_err(|e| e.to_string())?;
            let (verdict, code) = match rep.verdict {
                AqVerdict::Holds => ("holds", EXIT_HOLDS),
                AqVerdict::HypothesisFails => ("hypothesis-fails", EXIT_HOLDS),
                AqVerdict::Violation => ("violation", EXIT_VIOLATED),
                AqVerdict::Unknown => ("unknown", EXIT_UNKNOWN),
            };
            let extra = json!({
                "gcd_r_s_is_1": rep.r_s_coprime,
                "gcd_r_t_is_1": rep.r_t_coprime,
                "gcd_r_st_is_1": rep.r_st_coprime,
            });
            Ok(Outcome::out(code, verdict_json(verdict, Value::Null, Value::Null, Value::Null, extra)))
        }
        Command::PrimeLike { domain, p, r, s } => {
            let id = domain.domain;
            let es = parse_all(id, &[&p, &r, &s])?;
            let out = prime_like_check(&DomainHandle::new(id), &es[0], &es[1], &es[2]).map_err(|e| e.to_string())?;
            Ok(match out {
                PrimeLikeOutcome::Witness {
                    divisor,
                    side,
                    quotients,
                    case,
                } => Outcome::out(
                    EXIT_HOLDS,
                    verdict_json(
                        "witness",
                        json!(print_expr(&divisor)),
                        json!([quotients.0.to_string(), quotients.1.to_string()]),
                        case.map_or(Value::Null, |c| json!(c)),
                        json!({ "divides": side }),
                    ),
                ),
                PrimeLikeOutcome::NoWitness => Outcome::out(
                    EXIT_VIOLATED,
                    verdict_json("no-witness", Value::Null, Value::Null, Value::Null, json!({})),
                ),
                PrimeLikeOutcome::Unknown(why) => Outcome::out(
                    EXIT_UNKNOWN,
                    verdict_json("unknown", Value::Null, Value::Null, Value::Null, json!({ "reason": why })),
                ),
            })
        }
        Command::Primal { domain, p, a, b } => {
            let id = domain.domain;
            let es = parse_all(id, &[&p, &a, &b])?;
            let out = primal_decompose(&DomainHandle::new(id), &es[0], &es[1], &es[2]).map_err(|e| e.to_string())?;
            Ok(match out {
                PrimalOutcome::Decomposed(dec) => Outcome::out(
                    EXIT_HOLDS,
                    verdict_json(
                        "primal",
                        json!([dec.r_part.to_string(), dec.s_part.to_string(), dec.unit_slack.to_string()]),
                        Value::Null,
                        Value::Null,
                        json!({}),
                    ),
                ),
                PrimalOutcome::NotPrimal {
                    r_part,
                    s_part,
                    remainder,
                } => Outcome::out(
                    EXIT_VIOLATED,
                    verdict_json(
                        "not-primal",
                        json!([r_part.to_string(), s_part.to_string(), remainder.to_string()]),
                        Value::Null,
                        Value::Null,
                        json!({}),
                    ),
                ),
                PrimalOutcome::Unknown(why) => Outcome::out(
                    EXIT_UNKNOWN,
                    verdict_json("unknown", Value::Null, Value::Null, Value::Null, json!({ "reason": why })),
                ),
            })
        }
        Command::Parse { domain, expr } => {
            let e = parse_expr(&expr, domain.domain).map_err(|e| e.to_string())?;
            Ok(Outcome::out(EXIT_HOLDS, format!("{}\n", print_expr(&e))))
        }
    }
}
