//! The two concrete reduction rounds.
//!
//! Round 1 works with `Gamma_1 = (l1+l2)·log 10 - n·log alpha + log(d1/(9a))`,
//! round 2 with `Gamma_2 = l2·log 10 - n·log alpha + log(N/(9a))`, where
//! `N = d1·10^l1 - (d1 - d2)`. Both are divided by `log alpha`, giving
//! `tau = log 10 / log alpha`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::algebraic::{CubicData, Precision, RealBall};
use crate::error::{Error, Result};
use crate::published;

use super::{
    dp_reduce, ContinuedFraction, ReductionOutcome, ReductionParams, Selection, Target, MAX_RETRIES,
};

/// Shared data of both rounds: `tau`, its expansion and the bound `M`.
#[derive(Clone, Debug)]
pub struct ReductionSetup {
    pub cubic: Arc<CubicData>,
    pub tau: RealBall,
    pub cf: ContinuedFraction,
    pub m: BigUint,
    pub selection: Selection,
}

/// `log 10 / log alpha`.
pub fn tau(prec: Precision) -> Result<RealBall> {
    let cubic = CubicData::cached(prec)?;
    RealBall::ln_int(10, prec)?.checked_div(&cubic.log_alpha)
}

impl ReductionSetup {
    pub fn new(prec: Precision, selection: Selection) -> Result<Self> {
        let m = decimal_to_biguint(published::REDUCTION_M)
            .ok_or_else(|| Error::InvalidInput("bad reduction bound".into()))?;
        Self::with_bound(prec, m, selection)
    }

    pub fn with_bound(prec: Precision, m: BigUint, selection: Selection) -> Result<Self> {
        let cubic = CubicData::cached(prec)?;
        let tau_ball = tau(prec)?;
        let cf = ContinuedFraction::expand(
            tau,
            &Target::Denominator {
                above: &m * 6u32,
                extra: MAX_RETRIES + 1,
            },
            prec,
        )?;
        Ok(ReductionSetup {
            cubic,
            tau: tau_ball,
            cf,
            m,
            selection,
        })
    }

    pub fn precision(&self) -> Precision {
        self.cubic.precision
    }

    fn params(&self, mu: RealBall, a: RealBall, b: RealBall) -> ReductionParams {
        ReductionParams {
            tau: self.tau.clone(),
            mu,
            a,
            b,
            m: self.m.clone(),
        }
    }
}

/// Parses `"8e48"`-style integers exactly.
fn decimal_to_biguint(s: &str) -> Option<BigUint> {
    let (m, e) = crate::algebraic::parse_decimal_parts(s).ok()?;
    let m = m.to_biguint()?;
    if e >= 0 {
        Some(m * BigUint::from(10u32).pow(e as u32))
    } else {
        let d = BigUint::from(10u32).pow((-e) as u32);
        (&m % &d == BigUint::from(0u32)).then(|| m / d)
    }
}

#[derive(Clone, Debug)]
pub struct Round1Entry {
    pub d1: u8,
    pub outcome: ReductionOutcome,
}

#[derive(Clone, Debug)]
pub struct Round1Report {
    pub entries: Vec<Round1Entry>,
    pub min_epsilon: RealBall,
    /// Largest `l1` not excluded for any `d1`.
    pub l1_bound: u64,
    /// `30/10^2`, which must be below `1/2` for `|e^x - 1| < y ⇒ |x| < 2y`.
    pub rhs_at_two: RealBall,
}

/// Bounds `l1`: `(u, v, w) = (l1 + l2, n, l1)`, `mu = log(d1/(9a))/log alpha`,
/// `A = 60/log alpha`, `B = 10`.
pub fn reduction_round1(setup: &ReductionSetup) -> Result<Round1Report> {
    let prec = setup.precision();
    let cubic = &setup.cubic;
    let rhs_at_two = RealBall::from_ratio(&30.into(), &100.into(), prec)?;
    if !rhs_at_two.certainly_lt(&RealBall::one(prec).mul_pow2(-1)) {
        return Err(Error::Precondition("30/10^l1 < 1/2 fails at l1 = 2".into()));
    }
    let log_9a = cubic.a.mul_int(9).ln()?;
    let a = RealBall::from_int(60, prec).checked_div(&cubic.log_alpha)?;
    let b = RealBall::from_int(10, prec);
    let mut entries = Vec::with_capacity(9);
    for d1 in 1..=9u8 {
        let mu = (&RealBall::ln_int(d1, prec)? - &log_9a).checked_div(&cubic.log_alpha)?;
        let outcome = dp_reduce(
            &setup.params(mu, a.clone(), b.clone()),
            &setup.cf,
            setup.selection,
        )?;
        entries.push(Round1Entry { d1, outcome });
    }
    let min_epsilon = min_ball(entries.iter().map(|e| &e.outcome.epsilon));
    let w_max = entries.iter().map(|e| e.outcome.w_bound).max().unwrap_or(1);
    Ok(Round1Report {
        entries,
        min_epsilon,
        l1_bound: w_max.max(1) as u64,
        rhs_at_two,
    })
}

/// Which `d2` accompany each `d1` in the round-2 sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoundTwoDigits {
    /// All ten `d2`, including `d2 = d1`: 90 digit pairs per `l1`.
    #[default]
    AllPairs,
    /// Only `d2 != d1`: 81 digit pairs per `l1`.
    Distinct,
}

/// Default digit sweep of round 2.
pub const ROUND2_SWEEP: RoundTwoDigits = RoundTwoDigits::AllPairs;

#[derive(Clone, Debug)]
pub struct Round2Entry {
    pub d1: u8,
    pub d2: u8,
    pub l1: u64,
    pub outcome: ReductionOutcome,
}

#[derive(Clone, Debug)]
pub struct Round2Report {
    pub digits: RoundTwoDigits,
    pub l1_max: u64,
    pub entries: Vec<Round2Entry>,
    pub min_epsilon: RealBall,
    /// Largest `n` not excluded by any instance.
    pub n_bound: u64,
    /// `4/alpha^n` at the search cutoff plus one; must be below `1/2`.
    pub rhs_at_cutoff: RealBall,
}

impl Round2Report {
    pub fn instance_count(&self) -> usize {
        self.entries.len()
    }

    /// The entry attaining [`n_bound`](Self::n_bound).
    pub fn worst(&self) -> &Round2Entry {
        self.entries
            .iter()
            .max_by_key(|e| e.outcome.w_bound)
            .expect("non-empty sweep")
    }

    /// How often each convergent ordinal was used.
    pub fn ordinal_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for e in &self.entries {
            *h.entry(e.outcome.convergent_index).or_insert(0) += 1;
        }
        h
    }
}

/// Logarithms shared by every round-2 instance.
struct MuContext<'a> {
    cubic: &'a CubicData,
    log_9a: RealBall,
    log_10: RealBall,
    /// `log d` for `d = 1..=9` at index `d - 1`.
    log_digits: Vec<RealBall>,
}

impl<'a> MuContext<'a> {
    fn new(cubic: &'a CubicData) -> Result<Self> {
        let prec = cubic.precision;
        Ok(MuContext {
            cubic,
            log_9a: cubic.a.mul_int(9).ln()?,
            log_10: RealBall::ln_int(10, prec)?,
            log_digits: (1..=9u32)
                .map(|d| RealBall::ln_int(d, prec))
                .collect::<Result<_>>()?,
        })
    }

    /// `log N = log d1 + l1·log 10 + log(1 - (d1-d2)/(d1·10^l1))`; the last
    /// logarithm has an argument near 1 and converges quickly.
    fn mu(&self, d1: u8, d2: u8, l1: u64) -> Result<RealBall> {
        let prec = self.cubic.precision;
        let lead = BigInt::from(d1) * BigInt::from(10).pow(l1 as u32);
        let n = &lead - (i32::from(d1) - i32::from(d2));
        let ratio = RealBall::from_ratio(&n, &lead, prec)?;
        let log_n =
            &(&self.log_digits[usize::from(d1) - 1] + &self.log_10.mul_int(l1)) + &ratio.ln()?;
        (&log_n - &self.log_9a).checked_div(&self.cubic.log_alpha)
    }
}

/// `mu = log(N/(9a))/log alpha` for one round-2 instance.
pub fn round2_mu(d1: u8, d2: u8, l1: u64, cubic: &CubicData) -> Result<RealBall> {
    if !(1..=9).contains(&d1) || d2 > 9 || l1 == 0 {
        return Err(Error::InvalidInput(format!(
            "bad instance ({d1}, {d2}, {l1})"
        )));
    }
    MuContext::new(cubic)?.mu(d1, d2, l1)
}

/// Bounds `n`: `(u, v, w) = (l2, n, n)`, `A = 8/log alpha`, `B = alpha`,
/// over every digit pair and `1 <= l1 <= l1_max`, in parallel.
pub fn reduction_round2(
    setup: &ReductionSetup,
    l1_max: u64,
    digits: RoundTwoDigits,
) -> Result<Round2Report> {
    if l1_max == 0 {
        return Err(Error::InvalidInput("l1_max must be positive".into()));
    }
    let prec = setup.precision();
    let cubic = &setup.cubic;
    let cutoff = published::SEARCH_CUTOFF as i64 + 1;
    let rhs_at_cutoff = RealBall::from_int(4, prec).checked_div(&cubic.alpha.powi(cutoff)?)?;
    if !rhs_at_cutoff.certainly_lt(&RealBall::one(prec).mul_pow2(-1)) {
        return Err(Error::Precondition(
            "4/alpha^n < 1/2 fails at the cutoff".into(),
        ));
    }
    let ctx = MuContext::new(cubic)?;
    let a = RealBall::from_int(8, prec).checked_div(&cubic.log_alpha)?;
    let b = cubic.alpha.clone();
    let mut instances = Vec::new();
    for d1 in 1..=9u8 {
        for d2 in 0..=9u8 {
            if d1 == d2 && digits == RoundTwoDigits::Distinct {
                continue;
            }
            for l1 in 1..=l1_max {
                instances.push((d1, d2, l1));
            }
        }
    }
    let entries = instances
        .par_iter()
        .map(|&(d1, d2, l1)| {
            let mu = ctx.mu(d1, d2, l1)?;
            let outcome = dp_reduce(
                &setup.params(mu, a.clone(), b.clone()),
                &setup.cf,
                setup.selection,
            )?;
            Ok(Round2Entry {
                d1,
                d2,
                l1,
                outcome,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let min_epsilon = min_ball(entries.iter().map(|e| &e.outcome.epsilon));
    let n_bound = entries
        .iter()
        .map(|e| e.outcome.w_bound)
        .max()
        .unwrap_or(0)
        .max(0) as u64;
    Ok(Round2Report {
        digits,
        l1_max,
        entries,
        min_epsilon,
        n_bound,
        rhs_at_cutoff,
    })
}

/// Encloses the minimum of a non-empty family of balls.
fn min_ball<'a>(mut balls: impl Iterator<Item = &'a RealBall>) -> RealBall {
    let first = balls.next().expect("non-empty").clone();
    balls.fold(first, |acc, b| -(&(-&acc).max(&-b)))
}
