//! Reduced words and the word length calculus.
//!
//! A [`Word`] is a sequence of letters in which no two adjacent letters come
//! from the same factor; the empty word is the group identity. Every
//! operation here preserves that invariant, so a `Word` in circulation is
//! always in normal form and its letter count is the word length.

use std::cmp::Ordering;

use crate::error::Error;
use crate::group::{GroupSpec, Letter};

/// A reduced word. Equality is exact equality of normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn single(letter: Letter) -> Word {
        Word {
            letters: vec![letter],
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Factor indices of the first and last letter; `None` for the empty word.
    pub fn type_tag(&self) -> Option<TypeTag> {
        Some(TypeTag {
            first: self.first()?.factor(),
            last: self.last()?.factor(),
        })
    }

    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Word {
        debug_assert!(letters
            .windows(2)
            .all(|w| w[0].factor() != w[1].factor()));
        Word { letters }
    }
}

/// Words order by length first, then lexicographically by letters. This is
/// the enumeration order used throughout the crate.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The pair (factor of first letter, factor of last letter) of a non-empty
/// word. Symmetric when the two agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeTag {
    pub first: usize,
    pub last: usize,
}

impl TypeTag {
    pub fn is_symmetric(&self) -> bool {
        self.first == self.last
    }
}

/// `conjugator * core * conjugator^-1` is a reduced product reconstructing
/// the original word, with `core` cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub conjugator: Word,
    pub core: Word,
}

fn push_reduced(spec: &GroupSpec, stack: &mut Vec<Letter>, l: Letter) -> Result<(), Error> {
    if let Some(&top) = stack.last() {
        if top.factor() == l.factor() {
            stack.pop();
            if let Some(c) = spec.mul_letters(top, l)? {
                stack.push(c);
            }
            return Ok(());
        }
    }
    stack.push(l);
    Ok(())
}

/// Normal form of an arbitrary letter sequence, with cascading cancellation:
/// adjacent same-factor letters are multiplied, identity products deleted,
/// and the new neighbours re-examined.
pub fn reduce(
    spec: &GroupSpec,
    letters: impl IntoIterator<Item = Letter>,
) -> Result<Word, Error> {
    let mut stack = Vec::new();
    for l in letters {
        push_reduced(spec, &mut stack, l)?;
    }
    Ok(Word { letters: stack })
}

/// Reduced product `u * v`.
pub fn concat(spec: &GroupSpec, u: &Word, v: &Word) -> Result<Word, Error> {
    let mut stack = Vec::with_capacity(u.len() + v.len());
    stack.extend_from_slice(&u.letters);
    for &l in &v.letters {
        push_reduced(spec, &mut stack, l)?;
    }
    Ok(Word { letters: stack })
}

/// Reduced product of several words, left to right.
pub fn concat_all<'a>(
    spec: &GroupSpec,
    words: impl IntoIterator<Item = &'a Word>,
) -> Result<Word, Error> {
    let mut acc = Word::empty();
    for w in words {
        acc = concat(spec, &acc, w)?;
    }
    Ok(acc)
}

/// Letterwise-inverted reversal; `u * inverse(u)` reduces to the empty word.
pub fn inverse(spec: &GroupSpec, u: &Word) -> Word {
    Word {
        letters: u
            .letters
            .iter()
            .rev()
            .map(|&l| spec.inv_letter(l))
            .collect(),
    }
}

/// True when the word has length <= 1 or its first letter differs from the
/// inverse of its last.
pub fn is_cyclically_reduced(spec: &GroupSpec, u: &Word) -> bool {
    if u.len() <= 1 {
        return true;
    }
    let first = u.first().unwrap();
    let last = u.last().unwrap();
    first.factor() != last.factor() || first != spec.inv_letter(last)
}

/// Number of leading letters that pair off with inverted trailing letters,
/// capped so at least one letter of core remains.
pub(crate) fn conjugator_run(spec: &GroupSpec, letters: &[Letter]) -> usize {
    let n = letters.len();
    let mut k = 0;
    while 2 * (k + 1) < n && letters[k] == spec.inv_letter(letters[n - 1 - k]) {
        k += 1;
    }
    k
}

/// Split `u` as `a * core * a^-1` with the maximal conjugator prefix and a
/// cyclically reduced core. The scan peels matching inverse pairs from the
/// two ends and stops early so the core never becomes empty; for a reduced
/// word of odd length the scan may bottom out at a single middle letter.
pub fn cyclic_decompose(spec: &GroupSpec, u: &Word) -> CyclicDecomposition {
    let k = conjugator_run(spec, &u.letters);
    let n = u.len();
    CyclicDecomposition {
        conjugator: Word::from_reduced(u.letters[..k].to_vec()),
        core: Word::from_reduced(u.letters[k..n - k].to_vec()),
    }
}

enum CorePower {
    Identity,
    Single(Letter),
    Asymmetric,
    /// Boundary letter inserted between adjacent copies of the core.
    Symmetric(Letter),
}

fn core_power_shape(spec: &GroupSpec, core: &Word, k: u128) -> Result<CorePower, Error> {
    debug_assert!(k >= 1 && !core.is_empty());
    if core.len() == 1 {
        return Ok(match spec.letter_pow(core.letters[0], k as i128)? {
            None => CorePower::Identity,
            Some(l) => CorePower::Single(l),
        });
    }
    let first = core.first().unwrap();
    let last = core.last().unwrap();
    if first.factor() != last.factor() {
        Ok(CorePower::Asymmetric)
    } else {
        // Cyclically reduced and symmetric: the two boundary letters merge
        // into a single non-identity letter between copies.
        let u = spec
            .mul_letters(last, first)?
            .expect("cyclically reduced core has non-cancelling boundary");
        Ok(CorePower::Symmetric(u))
    }
}

/// `u^n`, equal to the n-fold reduced product (negative `n` through the
/// inverse). Computed via the cyclic decomposition: the core is repeated
/// with at most one boundary multiplication per copy, so the cost is linear
/// in the output instead of quadratic.
pub fn power(spec: &GroupSpec, u: &Word, n: i64) -> Result<Word, Error> {
    if n == 0 || u.is_empty() {
        return Ok(Word::empty());
    }
    let k = (n as i128).unsigned_abs();
    let base = if n < 0 { inverse(spec, u) } else { u.clone() };
    let d = cyclic_decompose(spec, &base);
    let conj = &d.conjugator.letters;
    let core = &d.core.letters;

    let shape = core_power_shape(spec, &d.core, k)?;
    let body_len: u128 = match shape {
        CorePower::Identity => return Ok(Word::empty()),
        CorePower::Single(_) => 1,
        CorePower::Asymmetric => k * core.len() as u128,
        CorePower::Symmetric(_) => k * core.len() as u128 - (k - 1),
    };
    let total = 2 * conj.len() as u128 + body_len;
    let total: usize = usize::try_from(total)
        .map_err(|_| Error::InvalidArgument("power result exceeds addressable size".into()))?;

    let mut letters = Vec::with_capacity(total);
    letters.extend_from_slice(conj);
    match shape {
        CorePower::Identity => unreachable!(),
        CorePower::Single(l) => letters.push(l),
        CorePower::Asymmetric => {
            for _ in 0..k {
                letters.extend_from_slice(core);
            }
        }
        CorePower::Symmetric(u) => {
            // x1 mid (u mid)^(k-1) xN: the boundary letters of adjacent
            // copies merge into u
            let mid = &core[1..core.len() - 1];
            letters.push(core[0]);
            letters.extend_from_slice(mid);
            for _ in 1..k {
                letters.push(u);
                letters.extend_from_slice(mid);
            }
            letters.push(core[core.len() - 1]);
        }
    }
    letters.extend(conj.iter().rev().map(|&l| spec.inv_letter(l)));
    debug_assert_eq!(letters.len(), total);
    Ok(Word { letters })
}

/// Length of `u^n` without materializing the power.
pub fn power_len(spec: &GroupSpec, u: &Word, n: i64) -> u128 {
    if n == 0 || u.is_empty() {
        return 0;
    }
    let k = (n as i128).unsigned_abs();
    let d = cyclic_decompose(spec, u);
    let conj = 2 * d.conjugator.len() as u128;
    let core = &d.core;
    if core.len() == 1 {
        let l = core.letters[0];
        // Sign of the exponent never affects whether a letter power is the
        // identity, nor the resulting length.
        return if letter_pow_is_identity(spec, l, k) {
            0
        } else {
            conj + 1
        };
    }
    let sym = core.first().unwrap().factor() == core.last().unwrap().factor();
    conj + k * core.len() as u128 - if sym { k - 1 } else { 0 }
}

fn letter_pow_is_identity(spec: &GroupSpec, l: Letter, k: u128) -> bool {
    match spec.letter_order(l) {
        crate::group::Order::Infinite => false,
        crate::group::Order::Finite(ord) => k % ord as u128 == 0,
    }
}
