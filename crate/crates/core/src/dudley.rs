//! Truncated nested-power sequences.
//!
//! Given words `g_1, g_2, ...` and an increasing rate sequence `r_m`, the
//! truncation at depth `n` is built bottom-up by
//!
//! ```text
//! H[n] = g_n,    H[m] = g_m * H[m+1]^{r_m}
//! ```
//!
//! The interesting behaviour is in the lengths: when every `g_m` is outside
//! the product of two letter conjugates and every level is torsion-free, the
//! per-level power bounds telescope into the lower bound
//! `||H[1]|| >= r_{n-1} - sum ||g_l||`, which diverges for the right rate
//! choices. [`verify_chain`] rechecks the recursion and each inequality on
//! the actual words and reports, level by level, whether the hypotheses and
//! the final bound hold.

use serde::Serialize;

use crate::classify::{classify, match_sc_squared};
use crate::error::Error;
use crate::group::{Factor, GroupSpec, Order};
use crate::word::{concat, power, power_len, Word};

/// Default cap on the total number of letters materialized per run.
pub const DEFAULT_LETTER_BUDGET: u64 = 10_000_000;

/// Recursion rechecks below this size go through the naive fold of
/// concatenations instead of the decomposition-based power.
const NAIVE_RECHECK_CAP: u128 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleKind {
    /// `r_m = m + sum of ||g_l|| for l <= m`.
    Dudley,
    /// `r_m = 2^m`.
    Dyadic,
    /// `r_m = p^(m + m*||g||)`, all `g_m` equal, `p` a prime that is not the
    /// order of any element of the group.
    PrimePower { p: u64 },
    /// `r_m = m + m*||g||`, all `g_m` equal.
    Linear,
}

impl ScheduleKind {
    fn label(&self) -> String {
        match self {
            ScheduleKind::Dudley => "dudley".into(),
            ScheduleKind::Dyadic => "dyadic".into(),
            ScheduleKind::PrimePower { p } => format!("prime-power(p={p})"),
            ScheduleKind::Linear => "linear".into(),
        }
    }
}

/// A validated rate sequence, tied to the lengths of the words it was built
/// from. Rates are strictly increasing for every kind.
#[derive(Debug, Clone)]
pub struct Schedule {
    kind: ScheduleKind,
    gamma_lens: Vec<u64>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Schedule {
    pub fn new(spec: &GroupSpec, kind: ScheduleKind, gammas: &[Word]) -> Result<Schedule, Error> {
        if gammas.is_empty() {
            return Err(Error::InvalidArgument(
                "schedule needs at least one word".into(),
            ));
        }
        if matches!(
            kind,
            ScheduleKind::PrimePower { .. } | ScheduleKind::Linear
        ) && !gammas.iter().all(|g| g == &gammas[0])
        {
            return Err(Error::InvalidArgument(
                "this schedule requires all words in the sequence to be equal".into(),
            ));
        }
        if let ScheduleKind::PrimePower { p } = kind {
            if !is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            for f in 0..spec.factor_count() {
                if matches!(spec.factor(f), Factor::InfiniteCyclic) {
                    continue;
                }
                for l in spec.factor_letters(f, 0) {
                    if spec.letter_order(l) == Order::Finite(p) {
                        return Err(Error::InvalidArgument(format!(
                            "factor {f} has an element of order {p}; pick another prime"
                        )));
                    }
                }
            }
        }
        Ok(Schedule {
            kind,
            gamma_lens: gammas.iter().map(|g| g.len() as u64).collect(),
        })
    }

    pub fn kind(&self) -> ScheduleKind {
        self.kind
    }

    /// `r_m` for 1-based `m`; errors when the rate leaves `u64`.
    pub fn rate(&self, m: usize) -> Result<u64, Error> {
        let too_big = || Error::InvalidArgument(format!("rate r_{m} overflows"));
        if m == 0 || m > self.gamma_lens.len() {
            return Err(Error::InvalidArgument(format!(
                "rate index {m} out of range 1..={}",
                self.gamma_lens.len()
            )));
        }
        match self.kind {
            ScheduleKind::Dudley => {
                let sum: u64 = self.gamma_lens[..m].iter().sum();
                (m as u64).checked_add(sum).ok_or_else(too_big)
            }
            ScheduleKind::Dyadic => 1u64.checked_shl(m as u32).ok_or_else(too_big),
            ScheduleKind::PrimePower { p } => {
                let exp = (m as u64)
                    .checked_mul(1 + self.gamma_lens[0])
                    .ok_or_else(too_big)?;
                let exp = u32::try_from(exp).map_err(|_| too_big())?;
                p.checked_pow(exp).ok_or_else(too_big)
            }
            ScheduleKind::Linear => (m as u64)
                .checked_mul(1 + self.gamma_lens[0])
                .ok_or_else(too_big),
        }
    }
}

fn check_inputs(gammas: &[Word], schedule: &Schedule, n: usize) -> Result<(), Error> {
    if n == 0 || n > gammas.len() {
        return Err(Error::InvalidArgument(format!(
            "depth {n} out of range 1..={}",
            gammas.len()
        )));
    }
    if schedule.gamma_lens.len() != gammas.len()
        || gammas
            .iter()
            .zip(&schedule.gamma_lens)
            .any(|(g, &l)| g.len() as u64 != l)
    {
        return Err(Error::InvalidArgument(
            "schedule was built for a different word sequence".into(),
        ));
    }
    Ok(())
}

fn rate_as_i64(r: u64) -> Result<i64, Error> {
    i64::try_from(r).map_err(|_| Error::InvalidArgument(format!("rate {r} too large to apply")))
}

/// Build all levels `H[1]..H[n]`, bottom-up. The budget caps the total
/// number of letters across the levels; exceeding it reports the level that
/// could not be built.
pub fn build_truncation(
    spec: &GroupSpec,
    gammas: &[Word],
    schedule: &Schedule,
    n: usize,
    budget: u64,
) -> Result<Vec<Word>, Error> {
    check_inputs(gammas, schedule, n)?;
    let mut levels: Vec<Word> = vec![Word::empty(); n];
    let mut used = gammas[n - 1].len() as u64;
    if used > budget {
        return Err(Error::BudgetExceeded {
            level: n,
            used,
            budget,
        });
    }
    levels[n - 1] = gammas[n - 1].clone();
    for m in (1..n).rev() {
        let r = schedule.rate(m)?;
        let predicted =
            gammas[m - 1].len() as u128 + power_len(spec, &levels[m], rate_as_i64(r)?);
        if used as u128 + predicted > budget as u128 {
            return Err(Error::BudgetExceeded {
                level: m,
                used: (used as u128 + predicted).min(u64::MAX as u128) as u64,
                budget,
            });
        }
        let powered = power(spec, &levels[m], rate_as_i64(r)?)?;
        levels[m - 1] = concat(spec, &gammas[m - 1], &powered)?;
        used += levels[m - 1].len() as u64;
    }
    Ok(levels)
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelRecord {
    /// 1-based level index `m`.
    pub level: usize,
    pub len: u64,
    pub in_s_complement: bool,
    pub torsion: bool,
    /// `m < n`: whether `g_m` is a product of two letter conjugates.
    pub gamma_in_sc_squared: Option<bool>,
    /// `m < n`, asserted when `g_m` is outside that set: `H[m]` and `H[m+1]`
    /// are not both non-growing.
    pub pair_ok: Option<bool>,
    /// `m < n`: stored level equals `g_m * H[m+1]^{r_m}`, recomputed.
    pub recursion_ok: Option<bool>,
    /// `m >= 2`: `||H[m]^{r_{m-1}}|| >= r_{m-1}`.
    pub power_bound_ok: Option<bool>,
    /// `m >= 2`: `||H[m]^{r_{m-1}}|| >= ||H[m]||`.
    pub monotone_ok: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRecord {
    pub h1_len: u64,
    /// `r_{n-1} - sum of ||g_l|| for l < n` (0 at depth one), saturated.
    pub target: i64,
    pub met: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimReport {
    pub schedule: String,
    pub depth: usize,
    /// `r_1..r_{n-1}`.
    pub rates: Vec<u64>,
    pub levels: Vec<LevelRecord>,
    /// Every asserted per-level check passed.
    pub checks_pass: bool,
    pub torsion_free: bool,
    /// Asserted only when the run is torsion-free and the checks pass.
    pub final_bound: Option<BoundRecord>,
}

impl SimReport {
    pub fn pass(&self) -> bool {
        self.checks_pass && self.final_bound.as_ref().is_none_or(|b| b.met)
    }
}

/// Recompute `g * h^r` through the naive fold when small enough, otherwise
/// through the decomposition path, and compare with the stored level.
fn recheck_recursion(
    spec: &GroupSpec,
    stored: &Word,
    gamma: &Word,
    h: &Word,
    r: u64,
) -> Result<bool, Error> {
    let expected = if power_len(spec, h, rate_as_i64(r)?) <= NAIVE_RECHECK_CAP {
        let mut acc = Word::empty();
        for _ in 0..r {
            acc = concat(spec, &acc, h)?;
        }
        concat(spec, gamma, &acc)?
    } else {
        concat(spec, gamma, &power(spec, h, rate_as_i64(r)?)?)?
    };
    Ok(expected == *stored)
}

/// Build the truncation and verify the whole inequality ledger on it.
pub fn verify_chain(
    spec: &GroupSpec,
    gammas: &[Word],
    schedule: &Schedule,
    n: usize,
    budget: u64,
) -> Result<SimReport, Error> {
    let levels = build_truncation(spec, gammas, schedule, n, budget)?;
    let mut rates = Vec::with_capacity(n.saturating_sub(1));
    for m in 1..n {
        rates.push(schedule.rate(m)?);
    }

    let mut records = Vec::with_capacity(n);
    let mut checks_pass = true;
    let mut torsion_free = true;
    for m in 1..=n {
        let h = &levels[m - 1];
        let cls = classify(spec, h);
        let torsion = cls.torsion_order.is_finite();
        torsion_free &= !torsion;

        let (gamma_in_sc_squared, pair_ok, recursion_ok) = if m < n {
            let gamma_member = match_sc_squared(spec, &gammas[m - 1]).is_some();
            let pair = if gamma_member {
                None
            } else {
                Some(
                    !(cls.in_s_complement
                        && classify(spec, &levels[m]).in_s_complement),
                )
            };
            let rec = recheck_recursion(spec, h, &gammas[m - 1], &levels[m], rates[m - 1])?;
            (Some(gamma_member), pair, Some(rec))
        } else {
            (None, None, None)
        };

        let (power_bound_ok, monotone_ok) = if m >= 2 {
            let r = rates[m - 2];
            let plen = power_len(spec, h, rate_as_i64(r)?);
            (Some(plen >= r as u128), Some(plen >= h.len() as u128))
        } else {
            (None, None)
        };

        for check in [pair_ok, recursion_ok, power_bound_ok, monotone_ok] {
            if check == Some(false) {
                checks_pass = false;
            }
        }
        records.push(LevelRecord {
            level: m,
            len: h.len() as u64,
            in_s_complement: cls.in_s_complement,
            torsion,
            gamma_in_sc_squared,
            pair_ok,
            recursion_ok,
            power_bound_ok,
            monotone_ok,
        });
    }

    let final_bound = if checks_pass && torsion_free {
        let target: i128 = if n == 1 {
            0
        } else {
            let consumed: i128 = gammas[..n - 1].iter().map(|g| g.len() as i128).sum();
            rates[n - 2] as i128 - consumed
        };
        let h1_len = levels[0].len() as u64;
        Some(BoundRecord {
            h1_len,
            target: target.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
            met: (h1_len as i128) >= target,
        })
    } else {
        None
    };

    Ok(SimReport {
        schedule: schedule.kind.label(),
        depth: n,
        rates,
        levels: records,
        checks_pass,
        torsion_free,
        final_bound,
    })
}
