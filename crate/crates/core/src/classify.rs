//! Structural classification of words.
//!
//! A word is a conjugate of a single letter exactly when its cyclic core has
//! length at most one; those words (plus the identity) are the ones whose
//! powers fail to grow, and the torsion words are exactly the conjugates of
//! finite-order letters. Products of two conjugates of letters have reduced
//! forms matching one of four letter patterns, with blocks `mu`, `nu`, `eta`
//! allowed to be empty:
//!
//! ```text
//! trivial:  eta z eta^-1
//! simple:   eta mu z0 mu^-1 nu z1 nu^-1 eta^-1
//! mixed:    eta d1 nu z nu^-1 d2 eta^-1          d1,d2 multipliable, d1*d2 != e
//! full:     eta d1 mu z0 mu^-1 d2 nu z1 nu^-1 d3 eta^-1
//!                                                d1,d2,d3 multipliable, d2 = d1^-1*d3^-1
//! ```
//!
//! [`match_sc_squared`] decides membership by exhaustive split-point search
//! over these patterns and returns a parse; [`factorize_witness`] turns a
//! parse back into an explicit pair of conjugates multiplying to the word.

use serde::Serialize;

use crate::error::Error;
use crate::group::{GroupSpec, Letter, Order};
use crate::word::{concat, concat_all, cyclic_decompose, inverse, power_len, Word};

/// Where a word sits relative to the power-growth and torsion hierarchies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Conjugate of a single letter (or the identity): some power fails to
    /// reach length `n`.
    pub in_s_complement: bool,
    /// Order of the element: finite exactly for conjugates of finite-order
    /// letters.
    pub torsion_order: Order,
    /// Powers never get shorter than the word itself; the complement is the
    /// set of non-trivial torsion words.
    pub in_f_tilde: bool,
}

/// Classify through the cyclic decomposition.
pub fn classify(spec: &GroupSpec, u: &Word) -> Classification {
    let d = cyclic_decompose(spec, u);
    match d.core.len() {
        0 => Classification {
            in_s_complement: true,
            torsion_order: Order::Finite(1),
            in_f_tilde: true,
        },
        1 => {
            let ord = spec.letter_order(d.core.letters()[0]);
            Classification {
                in_s_complement: true,
                torsion_order: ord,
                in_f_tilde: ord == Order::Infinite,
            }
        }
        _ => Classification {
            in_s_complement: false,
            torsion_order: Order::Infinite,
            in_f_tilde: true,
        },
    }
}

/// Whether `u^n` is strictly shorter than `u`, for `n >= 2`. Happens exactly
/// when `u` is non-trivial and `u^n = e`.
pub fn power_reduces(spec: &GroupSpec, u: &Word, n: i64) -> Result<bool, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "power_reduces needs n >= 2, got {n}"
        )));
    }
    Ok(power_len(spec, u, n) < u.len() as u128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessForm {
    Trivial,
    Simple,
    Mixed,
    Full,
}

impl std::fmt::Display for WitnessForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WitnessForm::Trivial => "trivial",
            WitnessForm::Simple => "simple",
            WitnessForm::Mixed => "mixed",
            WitnessForm::Full => "full",
        };
        f.write_str(s)
    }
}

/// A parse of a reduced word into one of the four product-of-two-conjugates
/// patterns. The displayed pattern, read left to right with the stored
/// blocks, is letterwise equal to the word it was matched against.
///
/// The identity gets a trivial witness with `z0` absent (it is the product
/// of two identity conjugates); in every other case the pattern letters are
/// present as the form requires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScSquaredWitness {
    pub form: WitnessForm,
    pub eta: Word,
    pub mu: Word,
    pub nu: Word,
    pub z0: Option<Letter>,
    pub z1: Option<Letter>,
    pub delta1: Option<Letter>,
    pub delta2: Option<Letter>,
    pub delta3: Option<Letter>,
}

impl ScSquaredWitness {
    fn blank(form: WitnessForm) -> ScSquaredWitness {
        ScSquaredWitness {
            form,
            eta: Word::empty(),
            mu: Word::empty(),
            nu: Word::empty(),
            z0: None,
            z1: None,
            delta1: None,
            delta2: None,
            delta3: None,
        }
    }
}

/// `block` must be the letterwise inverse-reversal of `of`.
fn is_inverted_reversal(spec: &GroupSpec, of: &[Letter], block: &[Letter]) -> bool {
    of.len() == block.len()
        && block
            .iter()
            .zip(of.iter().rev())
            .all(|(&b, &a)| b == spec.inv_letter(a))
}

fn sub(letters: &[Letter], start: usize, len: usize) -> Word {
    Word::from_reduced(letters[start..start + len].to_vec())
}

fn try_trivial(inner: &[Letter]) -> Option<ScSquaredWitness> {
    if inner.len() != 1 {
        return None;
    }
    let mut w = ScSquaredWitness::blank(WitnessForm::Trivial);
    w.z0 = Some(inner[0]);
    Some(w)
}

fn try_simple(spec: &GroupSpec, inner: &[Letter]) -> Option<ScSquaredWitness> {
    let len = inner.len();
    if len < 2 || len % 2 != 0 {
        return None;
    }
    // Longest mu first; the tie-break is fixed so reports are reproducible.
    for m in (0..=(len - 2) / 2).rev() {
        let nl = (len - 2 - 2 * m) / 2;
        let mu = &inner[..m];
        let mu_inv = &inner[m + 1..2 * m + 1];
        if !is_inverted_reversal(spec, mu, mu_inv) {
            continue;
        }
        let base = 2 * m + 1;
        let nu = &inner[base..base + nl];
        let nu_inv = &inner[base + nl + 1..];
        if !is_inverted_reversal(spec, nu, nu_inv) {
            continue;
        }
        let mut w = ScSquaredWitness::blank(WitnessForm::Simple);
        w.mu = sub(inner, 0, m);
        w.nu = sub(inner, base, nl);
        w.z0 = Some(inner[m]);
        w.z1 = Some(inner[base + nl]);
        return Some(w);
    }
    None
}

fn try_mixed(spec: &GroupSpec, inner: &[Letter]) -> Option<ScSquaredWitness> {
    let len = inner.len();
    if len < 3 || len % 2 != 1 {
        return None;
    }
    let d1 = inner[0];
    let d2 = inner[len - 1];
    if d1.factor() != d2.factor() || spec.mul_letters(d1, d2).ok()?.is_none() {
        return None;
    }
    let nl = (len - 3) / 2;
    let nu = &inner[1..1 + nl];
    let nu_inv = &inner[1 + nl + 1..len - 1];
    if !is_inverted_reversal(spec, nu, nu_inv) {
        return None;
    }
    let mut w = ScSquaredWitness::blank(WitnessForm::Mixed);
    w.nu = sub(inner, 1, nl);
    w.z0 = Some(inner[1 + nl]);
    w.delta1 = Some(d1);
    w.delta2 = Some(d2);
    Some(w)
}

fn try_full(spec: &GroupSpec, inner: &[Letter]) -> Option<ScSquaredWitness> {
    let len = inner.len();
    if len < 5 || len % 2 != 1 {
        return None;
    }
    let d1 = inner[0];
    let d3 = inner[len - 1];
    if d1.factor() != d3.factor() {
        return None;
    }
    // d2 = d1^-1 * d3^-1 must itself be a letter
    let required_d2 = spec
        .mul_letters(spec.inv_letter(d1), spec.inv_letter(d3))
        .ok()??;
    for m in (0..=(len - 5) / 2).rev() {
        let nl = (len - 5 - 2 * m) / 2;
        let d2 = inner[2 * m + 2];
        if d2 != required_d2 {
            continue;
        }
        let mu = &inner[1..1 + m];
        let mu_inv = &inner[m + 2..2 * m + 2];
        if !is_inverted_reversal(spec, mu, mu_inv) {
            continue;
        }
        let nu = &inner[2 * m + 3..2 * m + 3 + nl];
        let nu_inv = &inner[2 * m + 4 + nl..len - 1];
        if !is_inverted_reversal(spec, nu, nu_inv) {
            continue;
        }
        let mut w = ScSquaredWitness::blank(WitnessForm::Full);
        w.mu = sub(inner, 1, m);
        w.nu = sub(inner, 2 * m + 3, nl);
        w.z0 = Some(inner[1 + m]);
        w.z1 = Some(inner[2 * m + 3 + nl]);
        w.delta1 = Some(d1);
        w.delta2 = Some(d2);
        w.delta3 = Some(d3);
        return Some(w);
    }
    None
}

/// Decide whether `u` is a product of two conjugates of letters, returning a
/// pattern parse when it is. Every candidate conjugating prefix `eta` is a
/// run of leading letters pairing off with inverted trailing letters; the
/// interior is then tested against each pattern by enumerating split points.
/// Deterministic: first witness in form order trivial < simple < mixed <
/// full, smallest `eta` first.
pub fn match_sc_squared(spec: &GroupSpec, u: &Word) -> Option<ScSquaredWitness> {
    if u.is_empty() {
        return Some(ScSquaredWitness::blank(WitnessForm::Trivial));
    }
    let ls = u.letters();
    let n = ls.len();
    let max_eta = crate::word::conjugator_run(spec, ls);

    for form in [
        WitnessForm::Trivial,
        WitnessForm::Simple,
        WitnessForm::Mixed,
        WitnessForm::Full,
    ] {
        for h in 0..=max_eta {
            let inner = &ls[h..n - h];
            let found = match form {
                WitnessForm::Trivial => try_trivial(inner),
                WitnessForm::Simple => try_simple(spec, inner),
                WitnessForm::Mixed => try_mixed(spec, inner),
                WitnessForm::Full => try_full(spec, inner),
            };
            if let Some(mut w) = found {
                w.eta = sub(ls, 0, h);
                return Some(w);
            }
        }
    }
    None
}

/// Letter sequence of the displayed pattern, for integrity checking.
fn witness_pattern(spec: &GroupSpec, w: &ScSquaredWitness) -> Result<Vec<Letter>, Error> {
    let need = |l: Option<Letter>, what: &str| {
        l.ok_or_else(|| Error::InvalidWitness(format!("{} missing {what}", w.form)))
    };
    let mut out: Vec<Letter> = Vec::new();
    out.extend_from_slice(w.eta.letters());
    match w.form {
        WitnessForm::Trivial => {
            if let Some(z) = w.z0 {
                out.push(z);
            } else if !w.eta.is_empty() {
                return Err(Error::InvalidWitness(
                    "trivial witness without z denotes the identity and needs empty eta".into(),
                ));
            }
        }
        WitnessForm::Simple => {
            out.extend_from_slice(w.mu.letters());
            out.push(need(w.z0, "z0")?);
            out.extend(w.mu.letters().iter().rev().map(|&l| spec.inv_letter(l)));
            out.extend_from_slice(w.nu.letters());
            out.push(need(w.z1, "z1")?);
            out.extend(w.nu.letters().iter().rev().map(|&l| spec.inv_letter(l)));
        }
        WitnessForm::Mixed => {
            let d1 = need(w.delta1, "delta1")?;
            let d2 = need(w.delta2, "delta2")?;
            if d1.factor() != d2.factor() {
                return Err(Error::InvalidWitness(
                    "mixed witness deltas are not multipliable".into(),
                ));
            }
            if spec.mul_letters(d1, d2)?.is_none() {
                return Err(Error::InvalidWitness(
                    "mixed witness deltas cancel to the identity".into(),
                ));
            }
            out.push(d1);
            out.extend_from_slice(w.nu.letters());
            out.push(need(w.z0, "z")?);
            out.extend(w.nu.letters().iter().rev().map(|&l| spec.inv_letter(l)));
            out.push(d2);
        }
        WitnessForm::Full => {
            let d1 = need(w.delta1, "delta1")?;
            let d2 = need(w.delta2, "delta2")?;
            let d3 = need(w.delta3, "delta3")?;
            if d1.factor() != d2.factor() || d2.factor() != d3.factor() {
                return Err(Error::InvalidWitness(
                    "full witness deltas are not multipliable".into(),
                ));
            }
            let want = spec.mul_letters(spec.inv_letter(d1), spec.inv_letter(d3))?;
            if want != Some(d2) {
                return Err(Error::InvalidWitness(
                    "full witness needs d2 = d1^-1 * d3^-1".into(),
                ));
            }
            out.push(d1);
            out.extend_from_slice(w.mu.letters());
            out.push(need(w.z0, "z0")?);
            out.extend(w.mu.letters().iter().rev().map(|&l| spec.inv_letter(l)));
            out.push(d2);
            out.extend_from_slice(w.nu.letters());
            out.push(need(w.z1, "z1")?);
            out.extend(w.nu.letters().iter().rev().map(|&l| spec.inv_letter(l)));
            out.push(d3);
        }
    }
    out.extend(w.eta.letters().iter().rev().map(|&l| spec.inv_letter(l)));
    Ok(out)
}

/// Turn a witness for `u` into an explicit pair `(s, t)` of conjugates of
/// letters with `s * t = u`. Fails with an integrity error when the witness
/// does not actually parse `u`.
pub fn factorize_witness(
    spec: &GroupSpec,
    u: &Word,
    w: &ScSquaredWitness,
) -> Result<(Word, Word), Error> {
    let pattern = witness_pattern(spec, w)?;
    if pattern != u.letters() {
        return Err(Error::InvalidWitness(format!(
            "{} pattern does not spell the target word",
            w.form
        )));
    }

    let single = |l: Letter| Word::single(l);
    let conj = |spec: &GroupSpec, a: &Word, z: Letter| -> Result<Word, Error> {
        concat_all(spec, [a, &single(z), &inverse(spec, a)])
    };

    match w.form {
        WitnessForm::Trivial => Ok((u.clone(), Word::empty())),
        WitnessForm::Simple => {
            let em = concat(spec, &w.eta, &w.mu)?;
            let en = concat(spec, &w.eta, &w.nu)?;
            Ok((
                conj(spec, &em, w.z0.unwrap())?,
                conj(spec, &en, w.z1.unwrap())?,
            ))
        }
        WitnessForm::Mixed => {
            let d1 = w.delta1.unwrap();
            let d2 = w.delta2.unwrap();
            let merged = spec.mul_letters(d1, d2)?.expect("checked non-cancelling");
            let s = conj(spec, &w.eta, merged)?;
            let arm = concat_all(spec, [&w.eta, &single(spec.inv_letter(d2)), &w.nu])?;
            let t = conj(spec, &arm, w.z0.unwrap())?;
            Ok((s, t))
        }
        WitnessForm::Full => {
            let d1 = w.delta1.unwrap();
            let d3 = w.delta3.unwrap();
            let left = concat_all(spec, [&w.eta, &single(d1), &w.mu])?;
            let right = concat_all(spec, [&w.eta, &single(spec.inv_letter(d3)), &w.nu])?;
            Ok((
                conj(spec, &left, w.z0.unwrap())?,
                conj(spec, &right, w.z1.unwrap())?,
            ))
        }
    }
}

/// A word in a two-factor product is unbalanced (relative to the designated
/// factor) when all its designated-factor letters have order greater than
/// two and no two of them are equal or inverse to each other. The two
/// factors play asymmetric roles, so the designated one is a parameter.
pub fn is_unbalanced(spec: &GroupSpec, u: &Word, designated: usize) -> Result<bool, Error> {
    if spec.factor_count() != 2 {
        return Err(Error::InvalidArgument(format!(
            "unbalanced words are defined for exactly two factors, spec has {}",
            spec.factor_count()
        )));
    }
    if designated > 1 {
        return Err(Error::InvalidArgument(format!(
            "designated factor must be 0 or 1, got {designated}"
        )));
    }
    if u.len() < 2 {
        return Err(Error::InvalidArgument(
            "unbalanced words must have length >= 2".into(),
        ));
    }
    let chosen: Vec<Letter> = u
        .letters()
        .iter()
        .copied()
        .filter(|l| l.factor() == designated)
        .collect();
    for &l in &chosen {
        if let Order::Finite(n) = spec.letter_order(l) {
            if n <= 2 {
                return Ok(false);
            }
        }
    }
    for (i, &a) in chosen.iter().enumerate() {
        for &b in &chosen[i + 1..] {
            if a == b || a == spec.inv_letter(b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_word;
    use crate::group::GroupSpec;
    use crate::word::power;

    fn z3z2() -> GroupSpec {
        GroupSpec::from_json_str(
            r#"{"factors":[{"kind":"cyclic","order":3},{"kind":"cyclic","order":2}],
                "generators":{"x":[0,1],"y":[1,1]}}"#,
        )
        .unwrap()
    }

    fn z7z2() -> GroupSpec {
        GroupSpec::from_json_str(
            r#"{"factors":[{"kind":"cyclic","order":7},{"kind":"cyclic","order":2}],
                "generators":{"x":[0,1],"y":[1,1]}}"#,
        )
        .unwrap()
    }

    fn z2cubed() -> GroupSpec {
        GroupSpec::from_json_str(
            r#"{"factors":[{"kind":"cyclic","order":2},{"kind":"cyclic","order":2},
                           {"kind":"cyclic","order":2}],
                "generators":{"x":[0,1],"y":[1,1],"z":[2,1]}}"#,
        )
        .unwrap()
    }

    #[test]
    fn classify_examples() {
        let g = z3z2();
        let e = classify(&g, &Word::empty());
        assert!(e.in_s_complement);
        assert_eq!(e.torsion_order, Order::Finite(1));
        assert!(e.in_f_tilde);

        let t = classify(&g, &parse_word(&g, "x y x^2").unwrap());
        assert!(t.in_s_complement);
        assert_eq!(t.torsion_order, Order::Finite(2));
        assert!(!t.in_f_tilde);

        let xy = parse_word(&g, "x y").unwrap();
        let c = classify(&g, &xy);
        assert!(!c.in_s_complement);
        assert_eq!(c.torsion_order, Order::Infinite);
        assert!(c.in_f_tilde);
        // growth witnessed directly: ||(xy)^n|| = 2n >= n
        for n in 1..=20 {
            assert_eq!(power(&g, &xy, n).unwrap().len(), 2 * n as usize);
        }
    }

    #[test]
    fn power_reduces_examples() {
        let g = z3z2();
        let t = parse_word(&g, "x y x^2").unwrap();
        assert!(power_reduces(&g, &t, 2).unwrap());
        let xy = parse_word(&g, "x y").unwrap();
        assert!(!power_reduces(&g, &xy, 5).unwrap());
        assert!(!power_reduces(&g, &Word::empty(), 3).unwrap());
        assert!(power_reduces(&g, &xy, 1).is_err());
    }

    #[test]
    fn matcher_rejects_the_three_excluded_families() {
        let g = z3z2();
        assert!(match_sc_squared(&g, &parse_word(&g, "(x y)^3").unwrap()).is_none());

        let h = z7z2();
        let w = parse_word(&h, "x y x^2 y x^3 y").unwrap();
        assert!(match_sc_squared(&h, &w).is_none());

        let k = z2cubed();
        assert!(match_sc_squared(&k, &parse_word(&k, "x y z").unwrap()).is_none());
    }

    #[test]
    fn matcher_finds_the_documented_simple_witness() {
        let g = z3z2();
        // (y x y) * (x y x^2) reduces to y x y x y x^2
        let u = parse_word(&g, "y x y x y x^2").unwrap();
        let w = match_sc_squared(&g, &u).expect("member");
        assert_eq!(w.form, WitnessForm::Simple);
        assert!(w.eta.is_empty());
        assert_eq!(w.mu, parse_word(&g, "y").unwrap());
        assert_eq!(w.z0, Some(g.letter(0, 1).unwrap()));
        assert_eq!(w.nu, parse_word(&g, "x").unwrap());
        assert_eq!(w.z1, Some(g.letter(1, 1).unwrap()));

        let (s, t) = factorize_witness(&g, &u, &w).unwrap();
        assert_eq!(s, parse_word(&g, "y x y").unwrap());
        assert_eq!(t, parse_word(&g, "x y x^2").unwrap());
        assert_eq!(concat(&g, &s, &t).unwrap(), u);
    }

    #[test]
    fn identity_is_a_degenerate_member() {
        let g = z3z2();
        let w = match_sc_squared(&g, &Word::empty()).expect("e = e * e");
        assert_eq!(w.form, WitnessForm::Trivial);
        assert!(w.z0.is_none());
        let (s, t) = factorize_witness(&g, &Word::empty(), &w).unwrap();
        assert!(s.is_empty() && t.is_empty());
    }

    #[test]
    fn trivial_witness_factorizes_to_word_and_identity() {
        let g = z3z2();
        let u = parse_word(&g, "x y x^2").unwrap();
        let w = match_sc_squared(&g, &u).expect("conjugate of y");
        assert_eq!(w.form, WitnessForm::Trivial);
        assert_eq!(w.eta, parse_word(&g, "x").unwrap());
        let (s, t) = factorize_witness(&g, &u, &w).unwrap();
        assert_eq!(s, u);
        assert!(t.is_empty());
    }

    #[test]
    fn mixed_and_full_witnesses_round_trip() {
        let g = z7z2();
        // d1 nu z nu^-1 d2 with d1 = x, d2 = x^3
        let mixed = parse_word(&g, "x y x^2 y x^3").unwrap();
        let w = match_sc_squared(&g, &mixed).expect("mixed member");
        assert_eq!(w.form, WitnessForm::Mixed);
        let (s, t) = factorize_witness(&g, &mixed, &w).unwrap();
        assert!(classify(&g, &s).in_s_complement);
        assert!(classify(&g, &t).in_s_complement);
        assert_eq!(concat(&g, &s, &t).unwrap(), mixed);

        // d1 mu z0 mu^-1 d2 nu z1 nu^-1 d3 with d2 = d1^-1 d3^-1 = x
        let full = parse_word(&g, "x y x^2 y x y x^3 y x^5").unwrap();
        let w = match_sc_squared(&g, &full).expect("full member");
        assert_eq!(w.form, WitnessForm::Full);
        let (s, t) = factorize_witness(&g, &full, &w).unwrap();
        assert!(classify(&g, &s).in_s_complement);
        assert!(classify(&g, &t).in_s_complement);
        assert_eq!(concat(&g, &full, &Word::empty()).unwrap(), full);
        assert_eq!(concat(&g, &s, &t).unwrap(), full);
    }

    #[test]
    fn factorize_rejects_foreign_witness() {
        let g = z3z2();
        let u = parse_word(&g, "x y x^2").unwrap();
        let w = match_sc_squared(&g, &u).unwrap();
        let other = parse_word(&g, "y x y").unwrap();
        assert!(matches!(
            factorize_witness(&g, &other, &w),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn unbalanced_examples() {
        let g = z3z2();
        let xy = parse_word(&g, "x y").unwrap();
        assert!(is_unbalanced(&g, &xy, 0).unwrap());
        assert!(!is_unbalanced(&g, &xy, 1).unwrap(), "y has order two");

        let xyx = parse_word(&g, "x y x").unwrap();
        assert!(!is_unbalanced(&g, &xyx, 0).unwrap(), "x repeats");

        let h = z7z2();
        let w = parse_word(&h, "x y x^2 y x^3 y").unwrap();
        assert!(is_unbalanced(&h, &w, 0).unwrap());
        let v = parse_word(&h, "x y x^6 y").unwrap();
        assert!(!is_unbalanced(&h, &v, 0).unwrap(), "x and x^6 are inverse");
    }

    #[test]
    fn unbalanced_preconditions() {
        let k = z2cubed();
        let w = parse_word(&k, "x y").unwrap();
        assert!(is_unbalanced(&k, &w, 0).is_err(), "three factors");

        let g = z3z2();
        assert!(is_unbalanced(&g, &parse_word(&g, "x").unwrap(), 0).is_err());
        assert!(is_unbalanced(&g, &parse_word(&g, "x y").unwrap(), 2).is_err());
    }
}
