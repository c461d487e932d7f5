//! Brute-force ground truth.
//!
//! Everything here decides questions by definition: reduced words are
//! enumerated exhaustively, conjugates of letters are constructed directly,
//! and membership in the product set is settled by scanning a bounded ball
//! of candidate factors. The verification suites sweep these decisions
//! against the fast structural classifiers and report every disagreement.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, factorize_witness, is_unbalanced, match_sc_squared, WitnessForm};
use crate::error::Error;
use crate::expr::format_word;
use crate::group::{GroupSpec, Letter, Order};
use crate::word::{
    concat, concat_all, cyclic_decompose, inverse, is_cyclically_reduced, power, Word,
};

/// Bounds for exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBounds {
    /// Enumerate reduced words up to this length.
    pub max_len: usize,
    /// Cap on |exponent| for letters of infinite cyclic factors.
    pub exp_bound: u32,
    /// Extra slack added to the conjugate-ball length limit; the default
    /// limit for a word of length `l` is `3*l + 2`.
    pub sc_slack: usize,
}

impl EnumBounds {
    pub fn with_max_len(max_len: usize) -> EnumBounds {
        EnumBounds {
            max_len,
            exp_bound: 3,
            sc_slack: 0,
        }
    }

    /// Length limit of the conjugate ball searched when deciding whether a
    /// word of length `word_len` is a product of two conjugates of letters.
    pub fn sc_ball_limit(&self, word_len: usize) -> usize {
        3 * word_len + 2 + self.sc_slack
    }
}

/// Deterministic stream of every reduced word of length `<= max_len`, in
/// length-lexicographic order (letters ordered by factor index, then element
/// id ascending). Duplicate-free by construction.
pub fn enumerate_words(spec: &GroupSpec, bounds: &EnumBounds) -> WordEnumerator {
    WordEnumerator {
        alphabet: spec.alphabet(bounds.exp_bound),
        max_len: bounds.max_len,
        frontier: vec![Word::empty()],
        idx: 0,
        current_len: 0,
    }
}

/// Collected ball of all reduced words within the bounds.
pub fn ball(spec: &GroupSpec, bounds: &EnumBounds) -> Vec<Word> {
    enumerate_words(spec, bounds).collect()
}

pub struct WordEnumerator {
    alphabet: Vec<Letter>,
    max_len: usize,
    frontier: Vec<Word>,
    idx: usize,
    current_len: usize,
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            if self.idx < self.frontier.len() {
                let w = self.frontier[self.idx].clone();
                self.idx += 1;
                return Some(w);
            }
            if self.current_len >= self.max_len {
                return None;
            }
            self.current_len += 1;
            let mut next = Vec::new();
            for w in &self.frontier {
                let last_factor = w.last().map(|l| l.factor());
                for &l in &self.alphabet {
                    if Some(l.factor()) != last_factor {
                        let mut letters = w.letters().to_vec();
                        letters.push(l);
                        next.push(Word::from_reduced(letters));
                    }
                }
            }
            if next.is_empty() {
                return None;
            }
            self.frontier = next;
            self.idx = 0;
        }
    }
}

/// All conjugates of single letters of length `<= max_word_len`, plus the
/// identity: the exact set of non-growing words inside that ball (with
/// infinite-cyclic letters truncated to the exponent bound).
pub fn sc_ball(spec: &GroupSpec, max_word_len: usize, exp_bound: u32) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    out.insert(Word::empty());
    if max_word_len == 0 {
        return out;
    }
    let conj_max = (max_word_len - 1) / 2;
    let alphabet = spec.alphabet(exp_bound);
    let conj_bounds = EnumBounds {
        max_len: conj_max,
        exp_bound,
        sc_slack: 0,
    };
    for alpha in enumerate_words(spec, &conj_bounds) {
        let alpha_inv = inverse(spec, &alpha);
        for &x in &alphabet {
            let w = concat_all(spec, [&alpha, &Word::single(x), &alpha_inv])
                .expect("bounded alphabet cannot overflow");
            out.insert(w);
        }
    }
    out
}

fn sc_squared_member(spec: &GroupSpec, u: &Word, ball: &[Word]) -> Result<bool, Error> {
    for s in ball {
        let t = concat(spec, &inverse(spec, s), u)?;
        if classify(spec, &t).in_s_complement {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decide by definition whether `u` is a product of two conjugates of
/// letters: scan every conjugate `s` of length up to `3*||u|| + 2 + slack`
/// and test whether `s^-1 * u` is again a conjugate of a letter.
pub fn oracle_sc_squared(spec: &GroupSpec, u: &Word, bounds: &EnumBounds) -> Result<bool, Error> {
    if u.len() > bounds.max_len {
        return Err(Error::InvalidArgument(format!(
            "word of length {} exceeds the enumeration bound {}",
            u.len(),
            bounds.max_len
        )));
    }
    let limit = bounds.sc_ball_limit(u.len());
    let ball: Vec<Word> = sc_ball(spec, limit, bounds.exp_bound).into_iter().collect();
    sc_squared_member(spec, u, &ball)
}

/// Identifier of one exhaustive verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// 2.1: conjugator/core split is exact, reconstructing, and unique.
    CyclicDecomposition,
    /// 2.2: a power shrinks only by collapsing to the identity, and the
    /// non-growing class is closed under powers.
    PowerShortening,
    /// 2.3: the four-pattern matcher agrees with brute-force membership and
    /// its witnesses factorize.
    ScSquaredForms,
    /// 2.5: matched words with non-multipliable endpoints always carry a
    /// simple-form witness with empty eta.
    AsymmetricSimpleForm,
    /// 2.6: some word lies outside the product of the non-growing class with
    /// itself, except in the order-two dihedral case.
    ScSquaredProper,
    /// 2.7: in the dihedral case the non-growing words are exactly the
    /// odd-length ones plus the identity, and every word is a product of two
    /// of them.
    DihedralScStructure,
    /// 4.2: unbalanced words of asymmetric type and length >= 6 are outside
    /// the product set.
    UnbalancedExcluded,
    /// 4.3: such a word absorbs high powers of cyclically reduced words
    /// without ever landing in the non-growing class.
    UnbalancedPowerOfReduced,
    /// 4.4: likewise for high powers of arbitrary growing words.
    UnbalancedPowerOfAny,
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::CyclicDecomposition,
        LemmaId::PowerShortening,
        LemmaId::ScSquaredForms,
        LemmaId::AsymmetricSimpleForm,
        LemmaId::ScSquaredProper,
        LemmaId::DihedralScStructure,
        LemmaId::UnbalancedExcluded,
        LemmaId::UnbalancedPowerOfReduced,
        LemmaId::UnbalancedPowerOfAny,
    ];

    pub fn wire(&self) -> &'static str {
        match self {
            LemmaId::CyclicDecomposition => "2.1",
            LemmaId::PowerShortening => "2.2",
            LemmaId::ScSquaredForms => "2.3",
            LemmaId::AsymmetricSimpleForm => "2.5",
            LemmaId::ScSquaredProper => "2.6",
            LemmaId::DihedralScStructure => "2.7",
            LemmaId::UnbalancedExcluded => "4.2",
            LemmaId::UnbalancedPowerOfReduced => "4.3",
            LemmaId::UnbalancedPowerOfAny => "4.4",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            LemmaId::CyclicDecomposition => {
                "cyclic decomposition reconstructs exactly and is unique"
            }
            LemmaId::PowerShortening => {
                "powers shrink only to the identity; non-growth is power-closed"
            }
            LemmaId::ScSquaredForms => {
                "four-pattern matcher agrees with the brute-force product search"
            }
            LemmaId::AsymmetricSimpleForm => {
                "matched words with non-multipliable endpoints have a simple witness, empty eta"
            }
            LemmaId::ScSquaredProper => {
                "a word outside the product of two letter conjugates exists (dihedral excepted)"
            }
            LemmaId::DihedralScStructure => {
                "dihedral case: letter conjugates are the odd-length words plus e; their product is everything"
            }
            LemmaId::UnbalancedExcluded => {
                "unbalanced asymmetric words of length >= 6 are outside the product set"
            }
            LemmaId::UnbalancedPowerOfReduced => {
                "xi * lambda^r stays growing for cyclically reduced lambda, r in {4,5}"
            }
            LemmaId::UnbalancedPowerOfAny => {
                "xi * gamma^r stays growing for growing gamma, r in {4,5}"
            }
        }
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.wire())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<LemmaId, Error> {
        LemmaId::ALL
            .iter()
            .copied()
            .find(|id| id.wire() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub word: String,
    pub detail: String,
}

/// Outcome of one verification suite: pass exactly when no counterexample
/// was found.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub description: String,
    pub group: String,
    pub max_len: usize,
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub wall_ms: u128,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Sweep<'a> {
    spec: &'a GroupSpec,
    bounds: EnumBounds,
    instances: u64,
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
}

impl<'a> Sweep<'a> {
    fn ce(&mut self, word: &Word, detail: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            word: format_word(self.spec, word),
            detail: detail.into(),
        });
    }

    /// Run `check` over all words in parallel; `check` returns how many
    /// assertions it made plus any failure detail.
    fn par_sweep(
        &mut self,
        words: &[Word],
        check: impl Fn(&Word) -> (u64, Option<String>) + Sync,
    ) {
        let results: Vec<(u64, Option<String>)> = words.par_iter().map(&check).collect();
        for (u, (count, fail)) in words.iter().zip(results) {
            self.instances += count;
            if let Some(detail) = fail {
                self.ce(u, detail);
            }
        }
    }

    /// Conjugate balls keyed by target word length, shared by the membership
    /// sweeps.
    fn balls_by_len(&self) -> Vec<Vec<Word>> {
        (0..=self.bounds.max_len)
            .map(|l| {
                sc_ball(
                    self.spec,
                    self.bounds.sc_ball_limit(l),
                    self.bounds.exp_bound,
                )
                .into_iter()
                .collect()
            })
            .collect()
    }
}

/// Run one exhaustive suite and report every counterexample found.
pub fn verify_lemma(
    spec: &GroupSpec,
    lemma: LemmaId,
    bounds: &EnumBounds,
) -> Result<LemmaReport, Error> {
    let start = Instant::now();
    let mut sweep = Sweep {
        spec,
        bounds: *bounds,
        instances: 0,
        counterexamples: Vec::new(),
        notes: Vec::new(),
    };
    match lemma {
        LemmaId::CyclicDecomposition => suite_decomposition(&mut sweep),
        LemmaId::PowerShortening => suite_power_shortening(&mut sweep),
        LemmaId::ScSquaredForms => suite_sc_squared_forms(&mut sweep),
        LemmaId::AsymmetricSimpleForm => suite_asymmetric_simple(&mut sweep),
        LemmaId::ScSquaredProper => suite_proper(&mut sweep)?,
        LemmaId::DihedralScStructure => suite_dihedral(&mut sweep)?,
        LemmaId::UnbalancedExcluded => suite_unbalanced_excluded(&mut sweep)?,
        LemmaId::UnbalancedPowerOfReduced => suite_unbalanced_power(&mut sweep, false)?,
        LemmaId::UnbalancedPowerOfAny => suite_unbalanced_power(&mut sweep, true)?,
    }
    Ok(LemmaReport {
        lemma: lemma.wire().to_string(),
        description: lemma.describe().to_string(),
        group: spec.describe(),
        max_len: bounds.max_len,
        instances: sweep.instances,
        counterexamples: sweep.counterexamples,
        notes: sweep.notes,
        wall_ms: start.elapsed().as_millis(),
    })
}

fn cyclically_reduced_slice(spec: &GroupSpec, ls: &[Letter]) -> bool {
    ls.len() <= 1 || ls[0] != spec.inv_letter(ls[ls.len() - 1])
}

fn suite_decomposition(sweep: &mut Sweep) {
    let spec = sweep.spec;
    let words = ball(spec, &sweep.bounds);
    sweep.par_sweep(&words, |u| {
        let d = cyclic_decompose(spec, u);
        let back = concat_all(spec, [&d.conjugator, &d.core, &inverse(spec, &d.conjugator)])
            .expect("bounded");
        if back != *u {
            return (1, Some("decomposition does not reconstruct the word".into()));
        }
        if u.len() != 2 * d.conjugator.len() + d.core.len() {
            return (1, Some("decomposition is not a reduced product".into()));
        }
        if !is_cyclically_reduced(spec, &d.core) {
            return (1, Some("core is not cyclically reduced".into()));
        }
        // uniqueness by brute force over all prefix lengths
        let ls = u.letters();
        let n = ls.len();
        let valid: Vec<usize> = (0..=n.saturating_sub(1) / 2)
            .filter(|&k| {
                (0..k).all(|i| ls[i] == spec.inv_letter(ls[n - 1 - i]))
                    && cyclically_reduced_slice(spec, &ls[k..n - k])
            })
            .collect();
        if valid != vec![d.conjugator.len()] {
            return (
                1,
                Some(format!(
                    "conjugator length not unique: candidates {valid:?}"
                )),
            );
        }
        (1, None)
    });
}

fn suite_power_shortening(sweep: &mut Sweep) {
    let spec = sweep.spec;
    let words = ball(spec, &sweep.bounds);
    sweep.par_sweep(&words, |u| {
        let base = classify(spec, u).in_s_complement;
        for n in 2..=6i64 {
            let pw = power(spec, u, n).expect("bounded");
            let shorter = pw.len() < u.len();
            let collapses = !u.is_empty() && pw.is_empty();
            if shorter != collapses {
                return (
                    (n - 1) as u64,
                    Some(format!("power {n} shrinks without collapsing to e")),
                );
            }
            if crate::classify::power_reduces(spec, u, n).expect("n >= 2") != shorter {
                return ((n - 1) as u64, Some(format!("power_reduces disagrees at n={n}")));
            }
            if !pw.is_empty() && classify(spec, &pw).in_s_complement != base {
                return (
                    (n - 1) as u64,
                    Some(format!("non-growth class not preserved by power {n}")),
                );
            }
        }
        (5, None)
    });
}

fn suite_sc_squared_forms(sweep: &mut Sweep) {
    let spec = sweep.spec;
    let words = ball(spec, &sweep.bounds);
    let balls = sweep.balls_by_len();
    sweep.par_sweep(&words, |u| {
        let fast = match_sc_squared(spec, u);
        let slow = sc_squared_member(spec, u, &balls[u.len()]).expect("bounded");
        match fast {
            None if slow => (1, Some("oracle found a factorization the matcher missed".into())),
            Some(_) if !slow => (1, Some("matcher claims membership the oracle denies".into())),
            Some(w) => {
                // soundness: the witness must factorize back to the word
                match factorize_witness(spec, u, &w) {
                    Err(e) => (1, Some(format!("witness fails integrity: {e}"))),
                    Ok((s, t)) => {
                        if !classify(spec, &s).in_s_complement
                            || !classify(spec, &t).in_s_complement
                        {
                            (1, Some("witness factors are not letter conjugates".into()))
                        } else if concat(spec, &s, &t).expect("bounded") != *u {
                            (1, Some("witness factors do not multiply back".into()))
                        } else {
                            (1, None)
                        }
                    }
                }
            }
            None => (1, None),
        }
    });
}

fn suite_asymmetric_simple(sweep: &mut Sweep) {
    let spec = sweep.spec;
    let words = ball(spec, &sweep.bounds);
    sweep.par_sweep(&words, |u| {
        let asymmetric = u.type_tag().map(|t| !t.is_symmetric()).unwrap_or(false);
        if !asymmetric {
            return (0, None);
        }
        match match_sc_squared(spec, u) {
            Some(w) if w.form != WitnessForm::Simple || !w.eta.is_empty() => (
                1,
                Some(format!(
                    "asymmetric member matched as {} with eta length {}",
                    w.form,
                    w.eta.len()
                )),
            ),
            _ => (1, None),
        }
    });
}

/// Construct the excluded word for this group, mirroring the case split on
/// letter orders, and confirm both decision procedures reject it.
fn suite_proper(sweep: &mut Sweep) -> Result<(), Error> {
    let spec = sweep.spec;
    if spec.is_dihedral_z2_z2() {
        let words = ball(spec, &sweep.bounds);
        let balls = sweep.balls_by_len();
        sweep.par_sweep(&words, |u| {
            let fast = match_sc_squared(spec, u).is_some();
            let slow = sc_squared_member(spec, u, &balls[u.len()]).expect("bounded");
            if fast && slow {
                (1, None)
            } else {
                (1, Some("dihedral word escaped the product set".into()))
            }
        });
        sweep.notes.push(
            "no element outside the product set found: order-two dihedral exception".into(),
        );
        return Ok(());
    }

    let exp_bound = sweep.bounds.exp_bound;
    let gamma = excluded_word(spec, exp_bound)?;
    let bounds = EnumBounds {
        max_len: gamma.0.len().max(sweep.bounds.max_len),
        ..sweep.bounds
    };
    sweep.notes.push(gamma.1.clone());
    sweep.instances += 1;
    if match_sc_squared(spec, &gamma.0).is_some() {
        sweep.ce(&gamma.0, "matcher admits the constructed word");
    }
    if oracle_sc_squared(spec, &gamma.0, &bounds)? {
        sweep.ce(&gamma.0, "oracle admits the constructed word");
    }
    Ok(())
}

/// The three constructed families: a cube of a mixed pair when a letter of
/// order > 2 exists, three distinct involutions against a second factor when
/// some factor is large, or one involution from each of three factors.
fn excluded_word(spec: &GroupSpec, exp_bound: u32) -> Result<(Word, String), Error> {
    let letters_of = |f: usize| spec.factor_letters(f, exp_bound);
    // case 1: some letter of order > 2
    for a in 0..spec.factor_count() {
        if let Some(x) = letters_of(a)
            .into_iter()
            .find(|&l| spec.letter_order(l) > Order::Finite(2))
        {
            let b = if a == 0 { 1 } else { 0 };
            let y = letters_of(b)[0];
            let xy = concat(spec, &Word::single(x), &Word::single(y))?;
            let gamma = power(spec, &xy, 3)?;
            return Ok((gamma, "constructed (x y)^3 with x of order > 2".into()));
        }
    }
    // case 2: all letters involutive, some factor of size >= 4
    for a in 0..spec.factor_count() {
        let ls = letters_of(a);
        if ls.len() >= 3 {
            let b = if a == 0 { 1 } else { 0 };
            let y = letters_of(b)[0];
            let mut parts = Vec::new();
            for &x in ls.iter().take(3) {
                parts.push(Word::single(x));
                parts.push(Word::single(y));
            }
            let gamma = concat_all(spec, parts.iter())?;
            return Ok((
                gamma,
                "constructed x1 y x2 y x3 y from three distinct involutions".into(),
            ));
        }
    }
    // case 3: every factor is order two; need a third factor
    if spec.factor_count() >= 3 {
        let parts: Vec<Word> = (0..3).map(|f| Word::single(letters_of(f)[0])).collect();
        let gamma = concat_all(spec, parts.iter())?;
        return Ok((
            gamma,
            "constructed x y z from involutions in three factors".into(),
        ));
    }
    Err(Error::Inapplicable {
        suite: LemmaId::ScSquaredProper.wire().into(),
        reason: "every word is a product of two letter conjugates here".into(),
    })
}

fn suite_dihedral(sweep: &mut Sweep) -> Result<(), Error> {
    let spec = sweep.spec;
    if !spec.is_dihedral_z2_z2() {
        return Err(Error::Inapplicable {
            suite: LemmaId::DihedralScStructure.wire().into(),
            reason: "needs the free product of two order-two groups".into(),
        });
    }
    let words = ball(spec, &sweep.bounds);
    let balls = sweep.balls_by_len();
    sweep.par_sweep(&words, |u| {
        let in_sc = classify(spec, u).in_s_complement;
        let odd_or_identity = u.len() % 2 == 1 || u.is_empty();
        if in_sc != odd_or_identity {
            return (1, Some("non-growing set is not odd-length plus identity".into()));
        }
        let fast = match_sc_squared(spec, u).is_some();
        let slow = sc_squared_member(spec, u, &balls[u.len()]).expect("bounded");
        if !fast || !slow {
            return (2, Some("word escaped the product set".into()));
        }
        (2, None)
    });
    Ok(())
}

fn require_two_factors(spec: &GroupSpec, suite: LemmaId) -> Result<(), Error> {
    if spec.factor_count() != 2 {
        return Err(Error::Inapplicable {
            suite: suite.wire().into(),
            reason: "unbalanced words need exactly two factors".into(),
        });
    }
    Ok(())
}

fn unbalanced_any(spec: &GroupSpec, u: &Word) -> bool {
    u.len() >= 2
        && (is_unbalanced(spec, u, 0).unwrap_or(false)
            || is_unbalanced(spec, u, 1).unwrap_or(false))
}

fn suite_unbalanced_excluded(sweep: &mut Sweep) -> Result<(), Error> {
    let spec = sweep.spec;
    require_two_factors(spec, LemmaId::UnbalancedExcluded)?;
    let words = ball(spec, &sweep.bounds);
    let balls = sweep.balls_by_len();
    sweep.par_sweep(&words, |u| {
        let asymmetric = u.type_tag().map(|t| !t.is_symmetric()).unwrap_or(false);
        if u.len() < 6 || !asymmetric || !unbalanced_any(spec, u) {
            return (0, None);
        }
        if match_sc_squared(spec, u).is_some() {
            return (1, Some("matcher admits an unbalanced asymmetric word".into()));
        }
        if sc_squared_member(spec, u, &balls[u.len()]).expect("bounded") {
            return (1, Some("oracle admits an unbalanced asymmetric word".into()));
        }
        (1, None)
    });
    if sweep.instances == 0 {
        sweep
            .notes
            .push("no unbalanced asymmetric words of length >= 6 in this ball".into());
    }
    Ok(())
}

/// First unbalanced asymmetric word of length exactly six, in enumeration
/// order; the fixture for the absorption suites.
pub fn unbalanced_fixture(spec: &GroupSpec, exp_bound: u32) -> Result<Word, Error> {
    require_two_factors(spec, LemmaId::UnbalancedPowerOfReduced)?;
    let bounds = EnumBounds {
        max_len: 6,
        exp_bound,
        sc_slack: 0,
    };
    enumerate_words(spec, &bounds)
        .find(|u| {
            u.len() == 6
                && u.type_tag().map(|t| !t.is_symmetric()).unwrap_or(false)
                && unbalanced_any(spec, u)
        })
        .ok_or_else(|| Error::Inapplicable {
            suite: LemmaId::UnbalancedPowerOfReduced.wire().into(),
            reason: "group has no unbalanced asymmetric word of length six".into(),
        })
}

fn suite_unbalanced_power(sweep: &mut Sweep, any_gamma: bool) -> Result<(), Error> {
    let spec = sweep.spec;
    let suite = if any_gamma {
        LemmaId::UnbalancedPowerOfAny
    } else {
        LemmaId::UnbalancedPowerOfReduced
    };
    require_two_factors(spec, suite)?;
    let xi = unbalanced_fixture(spec, sweep.bounds.exp_bound)?;
    sweep
        .notes
        .push(format!("fixture xi = {}", format_word(spec, &xi)));
    let words = ball(spec, &sweep.bounds);
    sweep.par_sweep(&words, |lam| {
        let eligible = if any_gamma {
            !classify(spec, lam).in_s_complement
        } else {
            lam.len() >= 2 && is_cyclically_reduced(spec, lam)
        };
        if !eligible {
            return (0, None);
        }
        for r in [4i64, 5] {
            let w = concat(spec, &xi, &power(spec, lam, r).expect("bounded")).expect("bounded");
            if classify(spec, &w).in_s_complement {
                return (
                    1,
                    Some(format!("xi * (this)^{r} landed in the non-growing class")),
                );
            }
        }
        (2, None)
    });
    Ok(())
}
