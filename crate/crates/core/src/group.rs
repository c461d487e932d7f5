//! Factor groups and the letter alphabet.
//!
//! A free product is described by an ordered list of factor groups, each
//! either cyclic (finite or infinite) or given by an explicit multiplication
//! table. A [`Letter`] is one non-identity element of one factor; the
//! identity of the whole group is only ever represented by the empty word,
//! never by a letter.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Violation};

/// Infinite-cyclic exponents are kept strictly below this bound so that the
/// product of two valid letters can never overflow an `i64`.
pub const EXPONENT_LIMIT: i64 = 1 << 62;

/// Raw, unvalidated group description as it appears on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawGroupSpec {
    pub factors: Vec<RawFactor>,
    #[serde(default)]
    pub generators: BTreeMap<String, (usize, i64)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RawFactor {
    /// Cyclic group of the given order; order 0 means infinite cyclic.
    Cyclic { order: u64 },
    /// Finite group given by a row-major multiplication table over element
    /// ids `0..size`.
    Table {
        size: usize,
        mul: Vec<usize>,
        identity: usize,
    },
}

/// A validated factor group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// Finite cyclic of order `n >= 2`; non-identity elements are `1..n`.
    Cyclic { order: u64 },
    /// Infinite cyclic; non-identity elements are nonzero integers.
    InfiniteCyclic,
    /// Finite group with an explicit Cayley table.
    Table {
        size: usize,
        mul: Vec<usize>,
        identity: usize,
        inverse: Vec<usize>,
    },
}

impl Factor {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Factor::InfiniteCyclic)
    }

    /// Number of elements, `None` for the infinite cyclic factor.
    pub fn size(&self) -> Option<u64> {
        match self {
            Factor::Cyclic { order } => Some(*order),
            Factor::InfiniteCyclic => None,
            Factor::Table { size, .. } => Some(*size as u64),
        }
    }

    fn contains_non_identity(&self, elem: i64) -> bool {
        match self {
            Factor::Cyclic { order } => elem > 0 && (elem as u64) < *order,
            Factor::InfiniteCyclic => elem != 0 && elem.unsigned_abs() < EXPONENT_LIMIT as u64,
            Factor::Table { size, identity, .. } => {
                elem >= 0 && (elem as usize) < *size && elem as usize != *identity
            }
        }
    }
}

/// The order of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_u64(*n),
            Order::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// One non-identity element of one factor, viewed inside the free product.
///
/// The factor index determines how `elem` is read: an element id for finite
/// factors, a nonzero exponent for infinite cyclic ones. Letters are only
/// handed out by [`GroupSpec`] methods, so a `Letter` in circulation is
/// always valid for the spec that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    factor: u32,
    elem: i64,
}

impl Letter {
    pub fn factor(&self) -> usize {
        self.factor as usize
    }

    pub fn elem(&self) -> i64 {
        self.elem
    }
}

/// A validated free product presentation: at least two non-trivial factors
/// plus optional named generators.
///
/// Immutable after validation; all operations on it are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    factors: Vec<Factor>,
    generators: BTreeMap<String, Letter>,
}

fn valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GroupSpec {
    /// Validate a raw description, reporting every violation found.
    pub fn validate(raw: &RawGroupSpec) -> Result<GroupSpec, Error> {
        let mut violations = Vec::new();
        if raw.factors.len() < 2 {
            violations.push(Violation::TooFewFactors(raw.factors.len()));
        }

        let mut factors = Vec::with_capacity(raw.factors.len());
        for (idx, rf) in raw.factors.iter().enumerate() {
            match rf {
                RawFactor::Cyclic { order: 0 } => factors.push(Factor::InfiniteCyclic),
                RawFactor::Cyclic { order: 1 } => {
                    violations.push(Violation::TrivialFactor { factor: idx, order: 1 });
                    factors.push(Factor::Cyclic { order: 1 });
                }
                RawFactor::Cyclic { order } => factors.push(Factor::Cyclic { order: *order }),
                RawFactor::Table {
                    size,
                    mul,
                    identity,
                } => {
                    factors.push(validate_table(idx, *size, mul, *identity, &mut violations));
                }
            }
        }

        let mut generators = BTreeMap::new();
        for (name, &(factor, elem)) in &raw.generators {
            if !valid_generator_name(name) {
                violations.push(Violation::GeneratorBadName { name: name.clone() });
                continue;
            }
            if factor >= factors.len() {
                violations.push(Violation::GeneratorBadFactor {
                    name: name.clone(),
                    factor,
                });
                continue;
            }
            if !factors[factor].contains_non_identity(elem) {
                violations.push(Violation::GeneratorBadElement {
                    name: name.clone(),
                    factor,
                    elem,
                });
                continue;
            }
            generators.insert(
                name.clone(),
                Letter {
                    factor: factor as u32,
                    elem,
                },
            );
        }

        if violations.is_empty() {
            Ok(GroupSpec {
                factors,
                generators,
            })
        } else {
            Err(Error::InvalidSpec(violations))
        }
    }

    pub fn from_json_str(text: &str) -> Result<GroupSpec, Error> {
        let raw: RawGroupSpec = serde_json::from_str(text)?;
        GroupSpec::validate(&raw)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<GroupSpec, Error> {
        let text = std::fs::read_to_string(path)?;
        GroupSpec::from_json_str(&text)
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, idx: usize) -> &Factor {
        &self.factors[idx]
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, Letter)> {
        self.generators.iter().map(|(n, l)| (n.as_str(), *l))
    }

    pub fn generator(&self, name: &str) -> Option<Letter> {
        self.generators.get(name).copied()
    }

    /// Short human label, e.g. `Z3*Z2` or `T6*Z2` for a table factor.
    pub fn describe(&self) -> String {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Cyclic { order } => format!("Z{order}"),
                Factor::InfiniteCyclic => "Z".to_string(),
                Factor::Table { size, .. } => format!("T{size}"),
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// True when this is the infinite dihedral presentation: exactly two
    /// factors, both of order two.
    pub fn is_dihedral_z2_z2(&self) -> bool {
        self.factors.len() == 2 && self.factors.iter().all(|f| f.size() == Some(2))
    }

    /// Construct a letter, checking it denotes a non-identity element.
    pub fn letter(&self, factor: usize, elem: i64) -> Result<Letter, Error> {
        if factor >= self.factors.len() {
            return Err(Error::InvalidLetter(format!(
                "factor index {factor} out of range ({} factors)",
                self.factors.len()
            )));
        }
        if !self.factors[factor].contains_non_identity(elem) {
            return Err(Error::InvalidLetter(format!(
                "element {elem} is not a non-identity element of factor {factor}"
            )));
        }
        Ok(Letter {
            factor: factor as u32,
            elem,
        })
    }

    /// Product of two letters of the same factor; `None` when the product is
    /// the factor identity.
    pub fn mul_letters(&self, a: Letter, b: Letter) -> Result<Option<Letter>, Error> {
        if a.factor != b.factor {
            return Err(Error::NotMultipliable(a.factor(), b.factor()));
        }
        let elem = match &self.factors[a.factor()] {
            Factor::Cyclic { order } => ((a.elem + b.elem) as u64 % order) as i64,
            // Valid exponents stay below 2^62, so the sum cannot overflow.
            Factor::InfiniteCyclic => a.elem + b.elem,
            Factor::Table {
                size,
                mul,
                identity,
                ..
            } => {
                let p = mul[a.elem as usize * size + b.elem as usize];
                if p == *identity {
                    return Ok(None);
                }
                p as i64
            }
        };
        if elem == 0 {
            return Ok(None);
        }
        if matches!(self.factors[a.factor()], Factor::InfiniteCyclic)
            && elem.unsigned_abs() >= EXPONENT_LIMIT as u64
        {
            return Err(Error::ExponentOverflow);
        }
        Ok(Some(Letter {
            factor: a.factor,
            elem,
        }))
    }

    /// Inverse within the letter's own factor.
    pub fn inv_letter(&self, a: Letter) -> Letter {
        let elem = match &self.factors[a.factor()] {
            Factor::Cyclic { order } => (*order as i64) - a.elem,
            Factor::InfiniteCyclic => -a.elem,
            Factor::Table { inverse, .. } => inverse[a.elem as usize] as i64,
        };
        Letter {
            factor: a.factor,
            elem,
        }
    }

    /// Least `n >= 1` with `a^n = e`, or `Infinite`.
    pub fn letter_order(&self, a: Letter) -> Order {
        match &self.factors[a.factor()] {
            Factor::Cyclic { order } => Order::Finite(order / gcd(*order, a.elem as u64)),
            Factor::InfiniteCyclic => Order::Infinite,
            Factor::Table {
                size,
                mul,
                identity,
                ..
            } => {
                let mut cur = a.elem as usize;
                let mut n = 1u64;
                while cur != *identity {
                    cur = mul[cur * size + a.elem as usize];
                    n += 1;
                }
                Order::Finite(n)
            }
        }
    }

    /// `a^k` within the letter's factor; `None` when that power is the
    /// factor identity, an error when an infinite-cyclic exponent would
    /// leave the supported range.
    pub fn letter_pow(&self, a: Letter, k: i128) -> Result<Option<Letter>, Error> {
        let elem: i64 = match &self.factors[a.factor()] {
            Factor::Cyclic { order } => {
                let r = (a.elem as i128 * k).rem_euclid(*order as i128);
                r as i64
            }
            Factor::InfiniteCyclic => {
                let r = a.elem as i128 * k;
                if r.unsigned_abs() >= EXPONENT_LIMIT as u128 {
                    return Err(Error::ExponentOverflow);
                }
                r as i64
            }
            Factor::Table { .. } => {
                let ord = match self.letter_order(a) {
                    Order::Finite(n) => n,
                    Order::Infinite => unreachable!("table factors are finite"),
                };
                let mut rem = k.rem_euclid(ord as i128) as u64;
                let mut acc: Option<Letter> = None;
                while rem > 0 {
                    acc = match acc {
                        None => Some(a),
                        Some(cur) => self.mul_letters(cur, a)?,
                    };
                    rem -= 1;
                }
                return Ok(acc);
            }
        };
        if elem == 0 {
            Ok(None)
        } else {
            Ok(Some(Letter {
                factor: a.factor,
                elem,
            }))
        }
    }

    /// Non-identity elements of one factor in ascending id order; infinite
    /// cyclic factors are truncated to exponents `-exp_bound..=-1, 1..=exp_bound`.
    pub fn factor_letters(&self, factor: usize, exp_bound: u32) -> Vec<Letter> {
        let f = factor as u32;
        match &self.factors[factor] {
            Factor::Cyclic { order } => (1..*order as i64)
                .map(|elem| Letter { factor: f, elem })
                .collect(),
            Factor::InfiniteCyclic => {
                let b = exp_bound as i64;
                (-b..=b)
                    .filter(|&e| e != 0)
                    .map(|elem| Letter { factor: f, elem })
                    .collect()
            }
            Factor::Table { size, identity, .. } => (0..*size as i64)
                .filter(|&e| e as usize != *identity)
                .map(|elem| Letter { factor: f, elem })
                .collect(),
        }
    }

    /// All letters of the (truncated) alphabet, factors in order.
    pub fn alphabet(&self, exp_bound: u32) -> Vec<Letter> {
        (0..self.factors.len())
            .flat_map(|i| self.factor_letters(i, exp_bound))
            .collect()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn validate_table(
    idx: usize,
    size: usize,
    mul: &[usize],
    identity: usize,
    violations: &mut Vec<Violation>,
) -> Factor {
    let placeholder = Factor::Table {
        size,
        mul: mul.to_vec(),
        identity,
        inverse: vec![0; size],
    };
    if size < 2 {
        violations.push(Violation::TrivialFactor {
            factor: idx,
            order: size,
        });
    }
    if mul.len() != size * size {
        violations.push(Violation::BadTableShape {
            factor: idx,
            got: mul.len(),
            expected: size * size,
        });
        return placeholder;
    }
    let mut shape_ok = true;
    for &id in mul {
        if id >= size {
            violations.push(Violation::ElementOutOfRange {
                factor: idx,
                id,
                size,
            });
            shape_ok = false;
        }
    }
    if identity >= size {
        violations.push(Violation::ElementOutOfRange {
            factor: idx,
            id: identity,
            size,
        });
        shape_ok = false;
    }
    if !shape_ok {
        return placeholder;
    }

    let at = |a: usize, b: usize| mul[a * size + b];
    for i in 0..size {
        if at(identity, i) != i || at(i, identity) != i {
            violations.push(Violation::BadIdentity {
                factor: idx,
                identity,
                id: i,
            });
        }
    }
    let mut inverse = vec![usize::MAX; size];
    for (i, inv) in inverse.iter_mut().enumerate() {
        match (0..size).find(|&j| at(i, j) == identity && at(j, i) == identity) {
            Some(j) => *inv = j,
            None => violations.push(Violation::MissingInverse { factor: idx, id: i }),
        }
    }
    // Report only the first associativity defect; one triple names the bug.
    'assoc: for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                if at(at(a, b), c) != at(a, at(b, c)) {
                    violations.push(Violation::NonAssociative { factor: idx, a, b, c });
                    break 'assoc;
                }
            }
        }
    }

    if inverse.contains(&usize::MAX) {
        placeholder
    } else {
        Factor::Table {
            size,
            mul: mul.to_vec(),
            identity,
            inverse,
        }
    }
}
