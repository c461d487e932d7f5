//! `freeprod` — command-line word calculus in free products.
//!
//! Every subcommand loads a group spec (JSON), speaks JSON on stdout
//! (including errors), and uses exit codes 0 = success/pass, 1 = query
//! answered "no" or counterexample found, 2 = usage/parse/spec problems,
//! 3 = resource budget exceeded.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use freeprod_core::classify::{classify, factorize_witness, match_sc_squared, ScSquaredWitness};
use freeprod_core::dudley::{verify_chain, Schedule, ScheduleKind, DEFAULT_LETTER_BUDGET};
use freeprod_core::oracle::{
    enumerate_words, oracle_sc_squared, verify_lemma, Counterexample, EnumBounds, LemmaId,
    LemmaReport,
};
use freeprod_core::word::{cyclic_decompose, power, power_len, Word};
use freeprod_core::{format_word, parse_word, Error, GroupSpec};

/// Environment variable naming a directory against which relative spec
/// paths are resolved when they do not exist as given.
const SPEC_DIR_ENV: &str = "FREEPROD_SPEC_DIR";

/// Hard cap on letters materialized by the `power` subcommand.
const POWER_LETTER_CAP: u128 = 100_000_000;

const DEFAULT_SEED: u64 = 0x5eed_f00d;

#[derive(Parser)]
#[command(name = "freeprod", version, about = "Exact word calculus in free products of groups")]
struct Cli {
    /// Group spec file (JSON); also searched in $FREEPROD_SPEC_DIR.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word expression to its normal form.
    Reduce {
        #[arg(long)]
        word: String,
    },
    /// Report growth class, torsion order, core, and witness form.
    Classify {
        #[arg(long)]
        word: String,
        /// Exit 1 unless the non-growing flag equals this value.
        #[arg(long)]
        expect_sc: Option<bool>,
    },
    /// Raise a word to an integer power.
    Power {
        #[arg(long)]
        word: String,
        #[arg(short = 'n', long)]
        exponent: i64,
    },
    /// Decide whether a word is a product of two conjugates of letters.
    Sc2 {
        #[arg(long)]
        word: String,
        /// Exit 1 unless membership equals this value.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// List every reduced word up to a length, one JSON line each.
    Enumerate {
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        exp_bound: u32,
    },
    /// Run an exhaustive verification suite; nonzero exit on counterexample.
    Verify {
        /// Suite id: 2.1, 2.2, 2.3, 2.5, 2.6, 2.7, 4.2, 4.3 or 4.4.
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        exp_bound: u32,
        #[arg(long, default_value_t = 0)]
        sc_slack: usize,
        /// Extra randomized matcher-vs-oracle probes beyond the ball
        /// (suite 2.3 only).
        #[arg(long, default_value_t = 16)]
        probes: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Build a truncated nested-power sequence and verify its inequality
    /// ledger.
    Simulate {
        /// One of: dudley, dyadic, prime-power, linear.
        #[arg(long)]
        schedule: String,
        /// Prime for the prime-power schedule.
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// Base word expression; repeat for a per-level sequence, or give
        /// one to use at every level.
        #[arg(long = "gamma", required = true)]
        gammas: Vec<String>,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_LETTER_BUDGET)]
        budget: u64,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            emit_error("usage", &e.to_string(), None);
            std::process::exit(2);
        }
    };
    std::process::exit(run(cli));
}

fn emit_error(kind: &str, message: &str, position: Option<usize>) {
    let mut obj = json!({ "kind": kind, "message": message });
    if let Some(p) = position {
        obj["position"] = json!(p);
    }
    println!("{}", json!({ "error": obj }));
}

/// Exit code for an error, after printing it as JSON.
fn report_error(err: &Error) -> i32 {
    match err {
        Error::Parse { offset, message } => {
            emit_error("parse", message, Some(*offset));
            2
        }
        Error::InvalidSpec(_) | Error::MalformedSpec(_) | Error::SpecIo(_) => {
            emit_error("spec", &err.to_string(), None);
            2
        }
        Error::UnknownLemma(_) => {
            emit_error("unknown-lemma", &err.to_string(), None);
            2
        }
        Error::Inapplicable { .. } => {
            emit_error("inapplicable", &err.to_string(), None);
            2
        }
        Error::BudgetExceeded { .. } => {
            emit_error("resource", &err.to_string(), None);
            3
        }
        _ => {
            emit_error("domain", &err.to_string(), None);
            2
        }
    }
}

fn resolve_spec_path(given: &Path) -> PathBuf {
    if given.exists() || given.is_absolute() {
        return given.to_path_buf();
    }
    if let Ok(dir) = std::env::var(SPEC_DIR_ENV) {
        let candidate = Path::new(&dir).join(given);
        if candidate.exists() {
            return candidate;
        }
    }
    given.to_path_buf()
}

fn load_spec(path: &Option<PathBuf>) -> Result<GroupSpec, i32> {
    let Some(path) = path else {
        emit_error("usage", "--spec <FILE> is required", None);
        return Err(2);
    };
    GroupSpec::from_path(resolve_spec_path(path)).map_err(|e| report_error(&e))
}

fn witness_json(spec: &GroupSpec, w: &ScSquaredWitness) -> Value {
    let letter = |l: Option<freeprod_core::Letter>| -> Value {
        match l {
            Some(l) => json!(format_word(spec, &Word::single(l))),
            None => Value::Null,
        }
    };
    json!({
        "form": w.form.to_string(),
        "eta": format_word(spec, &w.eta),
        "mu": format_word(spec, &w.mu),
        "nu": format_word(spec, &w.nu),
        "z0": letter(w.z0),
        "z1": letter(w.z1),
        "delta1": letter(w.delta1),
        "delta2": letter(w.delta2),
        "delta3": letter(w.delta3),
    })
}

fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => report_error(&e),
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Reduce { word } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let w = parse_word(&spec, &word)?;
            println!(
                "{}",
                json!({ "reduced": format_word(&spec, &w), "length": w.len() })
            );
            Ok(0)
        }
        Command::Classify { word, expect_sc } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let w = parse_word(&spec, &word)?;
            let cls = classify(&spec, &w);
            let d = cyclic_decompose(&spec, &w);
            let witness = match_sc_squared(&spec, &w);
            println!(
                "{}",
                json!({
                    "word": format_word(&spec, &w),
                    "length": w.len(),
                    "type": w.type_tag().map(|t| json!([t.first, t.last])).unwrap_or(Value::Null),
                    "conjugator": format_word(&spec, &d.conjugator),
                    "core": format_word(&spec, &d.core),
                    "in_s_complement": cls.in_s_complement,
                    "torsion_order": serde_json::to_value(cls.torsion_order).unwrap(),
                    "in_f_tilde": cls.in_f_tilde,
                    "witness_form": witness.map(|w| json!(w.form.to_string())).unwrap_or(Value::Null),
                })
            );
            Ok(match expect_sc {
                Some(want) if want != cls.in_s_complement => 1,
                _ => 0,
            })
        }
        Command::Power { word, exponent } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let w = parse_word(&spec, &word)?;
            let predicted = power_len(&spec, &w, exponent);
            if predicted > POWER_LETTER_CAP {
                emit_error(
                    "resource",
                    &format!("result would need {predicted} letters (cap {POWER_LETTER_CAP})"),
                    None,
                );
                return Ok(3);
            }
            let p = power(&spec, &w, exponent)?;
            println!(
                "{}",
                json!({
                    "word": format_word(&spec, &w),
                    "exponent": exponent,
                    "result": format_word(&spec, &p),
                    "length": p.len(),
                })
            );
            Ok(0)
        }
        Command::Sc2 { word, expect } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let w = parse_word(&spec, &word)?;
            let witness = match_sc_squared(&spec, &w);
            let member = witness.is_some();
            let mut out = json!({ "word": format_word(&spec, &w), "member": member });
            if let Some(wit) = &witness {
                let (s, t) = factorize_witness(&spec, &w, wit)?;
                out["witness"] = witness_json(&spec, wit);
                out["factors"] = json!([format_word(&spec, &s), format_word(&spec, &t)]);
            }
            println!("{out}");
            Ok(match expect {
                Some(want) if want != member => 1,
                _ => 0,
            })
        }
        Command::Enumerate { max_len, exp_bound } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let bounds = EnumBounds {
                max_len,
                exp_bound,
                sc_slack: 0,
            };
            for w in enumerate_words(&spec, &bounds) {
                println!(
                    "{}",
                    json!({ "word": format_word(&spec, &w), "length": w.len() })
                );
            }
            Ok(0)
        }
        Command::Verify {
            lemma,
            max_len,
            exp_bound,
            sc_slack,
            probes,
            seed,
        } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let lemma: LemmaId = lemma.parse()?;
            let bounds = EnumBounds {
                max_len,
                exp_bound,
                sc_slack,
            };
            let mut report = verify_lemma(&spec, lemma, &bounds)?;
            if lemma == LemmaId::ScSquaredForms && probes > 0 {
                run_probes(&spec, &bounds, probes, seed, &mut report)?;
            }
            let pass = report.pass();
            let mut out = serde_json::to_value(&report).unwrap();
            out["pass"] = json!(pass);
            println!("{out}");
            Ok(if pass { 0 } else { 1 })
        }
        Command::Simulate {
            schedule,
            prime,
            gammas,
            depth,
            budget,
        } => {
            let spec = match load_spec(&cli.spec) {
                Ok(s) => s,
                Err(code) => return Ok(code),
            };
            let kind = match schedule.as_str() {
                "dudley" => ScheduleKind::Dudley,
                "dyadic" => ScheduleKind::Dyadic,
                "prime-power" | "prime_power" => ScheduleKind::PrimePower { p: prime },
                "linear" => ScheduleKind::Linear,
                other => {
                    emit_error(
                        "usage",
                        &format!("unknown schedule `{other}` (dudley, dyadic, prime-power, linear)"),
                        None,
                    );
                    return Ok(2);
                }
            };
            let mut words = Vec::with_capacity(gammas.len());
            for text in &gammas {
                words.push(parse_word(&spec, text)?);
            }
            if words.len() == 1 && depth > 1 {
                words = vec![words[0].clone(); depth];
            }
            let sched = Schedule::new(&spec, kind, &words)?;
            let report = verify_chain(&spec, &words, &sched, depth, budget)?;
            let pass = report.pass();
            let mut out = serde_json::to_value(&report).unwrap();
            out["pass"] = json!(pass);
            println!("{out}");
            Ok(if pass { 0 } else { 1 })
        }
    }
}

/// Randomized differential probes: reduced words just beyond the exhaustive
/// ball, matcher versus oracle. Seeded for reproducibility.
fn run_probes(
    spec: &GroupSpec,
    bounds: &EnumBounds,
    probes: u64,
    seed: u64,
    report: &mut LemmaReport,
) -> Result<(), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = spec.alphabet(bounds.exp_bound);
    let max_probe_len = bounds.max_len + 3;
    for _ in 0..probes {
        let target = rng.gen_range(bounds.max_len + 1..=max_probe_len);
        let mut letters: Vec<freeprod_core::Letter> = Vec::with_capacity(target);
        while letters.len() < target {
            let candidates: Vec<_> = alphabet
                .iter()
                .copied()
                .filter(|l| Some(l.factor()) != letters.last().map(|p| p.factor()))
                .collect();
            letters.push(*candidates.choose(&mut rng).expect("non-trivial alphabet"));
        }
        let w = freeprod_core::reduce(spec, letters)?;
        let probe_bounds = EnumBounds {
            max_len: w.len(),
            ..*bounds
        };
        let fast = match_sc_squared(spec, &w).is_some();
        let slow = oracle_sc_squared(spec, &w, &probe_bounds)?;
        report.instances += 1;
        if fast != slow {
            report.counterexamples.push(Counterexample {
                word: format_word(spec, &w),
                detail: format!("probe disagreement: matcher {fast}, oracle {slow}"),
            });
        }
    }
    report.notes.push(format!(
        "{probes} randomized probes up to length {max_probe_len}, seed {seed}"
    ));
    Ok(())
}
