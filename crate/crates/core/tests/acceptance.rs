//! Acceptance suite.
//!
//! One test per acceptance criterion, each printing a single PASS/FAIL line
//! (visible with `--nocapture`). Bounds and time limits are pinned in the
//! assertions. Run with:
//!
//! ```text
//! cargo test -p freeprod-core --test acceptance -- --nocapture
//! ```

mod common;

use std::time::Instant;

use rayon::prelude::*;

use freeprod_core::classify::match_sc_squared;
use freeprod_core::dudley::{verify_chain, Schedule, ScheduleKind};
use freeprod_core::oracle::{ball, oracle_sc_squared, verify_lemma, EnumBounds, LemmaId};
use freeprod_core::word::{concat, inverse, power, Word};
use freeprod_core::{format_word, parse_word, GroupSpec};

struct Criterion {
    name: &'static str,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str) -> Criterion {
        Criterion {
            name,
            start: Instant::now(),
        }
    }

    fn pass(self, detail: String) {
        println!(
            "ACCEPTANCE {}: PASS ({detail}, {:.1}s)",
            self.name,
            self.start.elapsed().as_secs_f64()
        );
    }

    fn fail(&self, detail: String) -> ! {
        println!("ACCEPTANCE {}: FAIL ({detail})", self.name);
        panic!("{}: {detail}", self.name);
    }

    fn elapsed_secs(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

fn check_report(c: &Criterion, report: &freeprod_core::LemmaReport) -> u64 {
    if !report.pass() {
        c.fail(format!(
            "suite {} on {} found {} counterexamples, first: {:?}",
            report.lemma,
            report.group,
            report.counterexamples.len(),
            report.counterexamples.first()
        ));
    }
    report.instances
}

#[test]
fn matcher_agrees_with_oracle_on_every_small_word() {
    let c = Criterion::new("matcher-oracle-equivalence");
    let mut instances = 0;
    for (g, max_len) in [
        (common::z3z2(), 8),
        (common::z2z2z2(), 6),
        (common::z7z2(), 6),
    ] {
        let report =
            verify_lemma(&g, LemmaId::ScSquaredForms, &EnumBounds::with_max_len(max_len))
                .unwrap();
        instances += check_report(&c, &report);
    }
    assert!(
        c.elapsed_secs() < 300.0,
        "equivalence sweep exceeded five minutes"
    );
    c.pass(format!("{instances} words, 0 discrepancies"));
}

#[test]
fn known_excluded_words_stay_outside_the_product_set() {
    let c = Criterion::new("excluded-words");
    let cases: Vec<(GroupSpec, &str)> = vec![
        (common::z3z2(), "(x y)^3"),
        (common::z7z2(), "x y x^2 y x^3 y"),
        (common::z2z2z2(), "x y z"),
    ];
    for (g, text) in &cases {
        let w = parse_word(g, text).unwrap();
        if match_sc_squared(g, &w).is_some() {
            c.fail(format!("matcher admits {text} in {}", g.describe()));
        }
        let bounds = EnumBounds::with_max_len(w.len());
        if oracle_sc_squared(g, &w, &bounds).unwrap() {
            c.fail(format!("oracle admits {text} in {}", g.describe()));
        }
    }
    c.pass(format!("{} witness families rejected twice", cases.len()));
}

#[test]
fn dihedral_exception_has_odd_length_structure() {
    let c = Criterion::new("dihedral-exception");
    let g = common::z2z2();
    let report =
        verify_lemma(&g, LemmaId::DihedralScStructure, &EnumBounds::with_max_len(10)).unwrap();
    let instances = check_report(&c, &report);
    c.pass(format!(
        "{instances} checks: ball <= 10 all inside, non-growing = odd-length + e"
    ));
}

#[test]
fn powers_shrink_only_by_collapsing() {
    let c = Criterion::new("power-shortening");
    let mut instances = 0;
    for (_, g) in common::configured_groups() {
        let report =
            verify_lemma(&g, LemmaId::PowerShortening, &EnumBounds::with_max_len(6)).unwrap();
        instances += check_report(&c, &report);
    }
    c.pass(format!("{instances} (word, exponent) pairs, 0 counterexamples"));
}

#[test]
fn unbalanced_words_absorb_powers() {
    let c = Criterion::new("unbalanced-suites");
    let g = common::z7z2();
    let excluded = verify_lemma(&g, LemmaId::UnbalancedExcluded, &EnumBounds::with_max_len(6))
        .unwrap();
    let n_excluded = check_report(&c, &excluded);
    assert_eq!(
        n_excluded, 96,
        "expected all 96 unbalanced asymmetric words of length six"
    );
    let reduced = verify_lemma(
        &g,
        LemmaId::UnbalancedPowerOfReduced,
        &EnumBounds::with_max_len(4),
    )
    .unwrap();
    let n_reduced = check_report(&c, &reduced);
    let any = verify_lemma(
        &g,
        LemmaId::UnbalancedPowerOfAny,
        &EnumBounds::with_max_len(4),
    )
    .unwrap();
    let n_any = check_report(&c, &any);
    assert!(
        c.elapsed_secs() < 600.0,
        "unbalanced sweeps exceeded ten minutes"
    );
    c.pass(format!(
        "{n_excluded} excluded + {n_reduced} reduced-power + {n_any} any-power checks"
    ));
}

#[test]
fn nested_power_chains_diverge() {
    let c = Criterion::new("divergence-simulation");
    let budget = 20_000_000;

    // growing base word, rates from the running length sum
    let g = common::z3z2();
    let gamma = parse_word(&g, "(x y)^3").unwrap();
    for n in 1..=6usize {
        let gammas = vec![gamma.clone(); n];
        let schedule = Schedule::new(&g, ScheduleKind::Dudley, &gammas).unwrap();
        let report = verify_chain(&g, &gammas, &schedule, n, budget).unwrap();
        if !report.checks_pass || !report.torsion_free {
            c.fail(format!("depth {n}: per-level checks failed: {report:?}"));
        }
        let bound = report.final_bound.as_ref().unwrap_or_else(|| {
            c.fail(format!("depth {n}: bound withheld"));
        });
        assert_eq!(bound.target, n as i64 - 1);
        if !bound.met {
            c.fail(format!("depth {n}: ||H1|| = {} < {}", bound.h1_len, bound.target));
        }
        // exact length from the exponent recurrence e_m = 3 + e_{m+1} * r_m
        let mut e: u64 = 3;
        for m in (1..n).rev() {
            e = 3 + e * schedule.rate(m).unwrap();
        }
        assert_eq!(bound.h1_len, 2 * e, "depth {n}: exact length mismatch");
    }

    // unbalanced base word, linear rates: every level stays growing
    let h = common::z7z2();
    let xi = parse_word(&h, "x y x^2 y x^3 y").unwrap();
    for n in 1..=4usize {
        let gammas = vec![xi.clone(); n];
        let schedule = Schedule::new(&h, ScheduleKind::Linear, &gammas).unwrap();
        let report = verify_chain(&h, &gammas, &schedule, n, budget).unwrap();
        if !report.pass() {
            c.fail(format!("linear depth {n}: {report:?}"));
        }
        for level in &report.levels {
            if level.in_s_complement {
                c.fail(format!(
                    "linear depth {n}: level {} fell into the non-growing class",
                    level.level
                ));
            }
        }
    }
    c.pass("running-sum depths 1..=6 exact, linear depths 1..=4 all growing".into());
}

#[test]
fn algebra_foundations_hold_exhaustively() {
    let c = Criterion::new("algebra-foundations");
    let mut checks: u64 = 0;
    for (name, g) in common::configured_groups() {
        let words = ball(&g, &EnumBounds::with_max_len(6));

        // length axioms: identity, inverse, subadditivity over all pairs
        assert_eq!(words[0].len(), 0, "{name}: ||e|| = 0");
        for u in &words {
            assert_eq!(inverse(&g, u).len(), u.len(), "{name}: inverse length");
        }
        checks += words.len() as u64;
        for u in &words {
            for v in &words {
                let len = concat(&g, u, v).unwrap().len();
                assert!(
                    len <= u.len() + v.len() && len >= u.len().abs_diff(v.len()),
                    "{name}: length axiom violated on a pair"
                );
            }
        }
        checks += (words.len() * words.len()) as u64;

        // associativity over every triple of the ball
        let failures: u64 = words
            .par_iter()
            .map(|v| {
                let uv: Vec<Word> = words
                    .iter()
                    .map(|u| concat(&g, u, v).unwrap())
                    .collect();
                let vw: Vec<Word> = words
                    .iter()
                    .map(|w| concat(&g, v, w).unwrap())
                    .collect();
                let mut bad = 0;
                for (ui, u) in words.iter().enumerate() {
                    for (wi, w) in words.iter().enumerate() {
                        if concat(&g, &uv[ui], w).unwrap() != concat(&g, u, &vw[wi]).unwrap() {
                            bad += 1;
                        }
                    }
                }
                bad
            })
            .sum();
        if failures > 0 {
            c.fail(format!("{name}: {failures} associativity failures"));
        }
        checks += (words.len() as u64).pow(3);

        // powering equals iterated concatenation on the whole ball
        for u in &words {
            let mut acc = Word::empty();
            for n in 1..=6i64 {
                acc = concat(&g, &acc, u).unwrap();
                assert_eq!(
                    power(&g, u, n).unwrap(),
                    acc,
                    "{name}: {}^{n}",
                    format_word(&g, u)
                );
                assert_eq!(
                    power(&g, u, -n).unwrap(),
                    inverse(&g, &acc),
                    "{name}: {}^-{n}",
                    format_word(&g, u)
                );
            }
        }
        checks += (words.len() * 12) as u64;

        // cyclic decomposition reconstructs uniquely
        let report =
            verify_lemma(&g, LemmaId::CyclicDecomposition, &EnumBounds::with_max_len(6))
                .unwrap();
        checks += check_report(&c, &report);
    }
    c.pass(format!("{checks} exhaustive checks over four groups"));
}
