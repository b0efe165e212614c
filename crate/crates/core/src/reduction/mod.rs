//! Continued fractions and the Baker–Davenport reduction in the
//! Dujella–Pethő form.
//!
//! For `u <= M`, a convergent denominator `q > 6M` of `tau`, and
//! `epsilon = ||mu·q|| - M·||tau·q|| > 0`, the inequality
//! `0 < |u·tau - v + mu| < A·B^-w` has no solution with
//! `w >= log(A·q/epsilon)/log B`.

mod cf;
mod rounds;

pub use cf::{ContinuedFraction, Convergent, Target};
pub use rounds::{
    reduction_round1, reduction_round2, round2_mu, tau, ReductionSetup, Round1Entry, Round1Report,
    Round2Entry, Round2Report, RoundTwoDigits, ROUND2_SWEEP,
};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::{Precision, RealBall};
use crate::error::{Error, Result};

/// Working precision of `log(A·q/epsilon)/log B`.
const THRESHOLD_BITS: u32 = 192;

/// Convergents tried after the first one with `q > 6M`.
pub const MAX_RETRIES: usize = 10;

/// Encloses `||x||`, the distance from `x` to the nearest integer.
///
/// `||.||` is 1-Lipschitz, so `||x|| ∈ ||mid|| ± rad`, clipped to `[0, 1/2]`.
pub fn nearest_int_distance(x: &RealBall) -> RealBall {
    let prec = x.precision();
    let mid = x.midpoint();
    let nearest = mid.mul_pow2(1).floor_lower() + 1;
    // round(mid) = floor(mid + 1/2) = floor((2·mid + 1)/2)
    let nearest = RealBall::from_int(
        num_integer::Integer::div_floor(&nearest, &BigInt::from(2)),
        prec,
    );
    let d_mid = (&mid - &nearest).abs();
    let half = RealBall::one(prec).mul_pow2(-1);
    let lo = (&d_mid - &x.radius()).lower_point();
    let hi = (&d_mid + &x.radius()).upper_point();
    let lo = if lo.is_negative() {
        RealBall::zero(prec)
    } else {
        lo
    };
    let hi = if hi.certainly_gt(&half) { half } else { hi };
    lo.hull(&hi)
}

#[derive(Clone, Debug)]
pub struct ReductionParams {
    pub tau: RealBall,
    pub mu: RealBall,
    pub a: RealBall,
    pub b: RealBall,
    /// Bound on `u`.
    pub m: BigUint,
}

impl ReductionParams {
    pub fn validate(&self) -> Result<()> {
        if !self.a.is_positive() {
            return Err(Error::InvalidInput("A must be positive".into()));
        }
        if !self.b.certainly_gt(&RealBall::one(self.b.precision())) {
            return Err(Error::InvalidInput("B must exceed 1".into()));
        }
        if self.m.is_zero() {
            return Err(Error::InvalidInput("M must be at least 1".into()));
        }
        Ok(())
    }
}

/// Which admissible convergent supplies the bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Selection {
    /// The first convergent with `q > 6M` and certified `epsilon > 0`.
    FirstPositive,
    /// Among the first convergent with `q > 6M` and the next
    /// [`MAX_RETRIES`], the one giving the smallest bound.
    #[default]
    Tightest,
}

impl std::fmt::Display for Selection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Selection::FirstPositive => "first-positive",
            Selection::Tightest => "tightest",
        })
    }
}

impl std::str::FromStr for Selection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-positive" => Ok(Selection::FirstPositive),
            "tightest" => Ok(Selection::Tightest),
            other => Err(Error::InvalidInput(format!("unknown selection {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionOutcome {
    pub q_used: BigUint,
    pub epsilon: RealBall,
    /// Largest `w` not excluded.
    pub w_bound: i64,
    /// 1-based ordinal of the convergent used.
    pub convergent_index: usize,
    /// Enclosure of `log(A·q/epsilon)/log B`.
    pub threshold: RealBall,
    /// Ordinals skipped because `epsilon > 0` was not certified.
    pub rejected: Vec<usize>,
}

enum Verdict {
    Positive {
        epsilon: RealBall,
        threshold: RealBall,
        w_bound: i64,
    },
    NonPositive,
    Undecided,
}

fn try_convergent(params: &ReductionParams, q: &BigUint, log_b: &RealBall) -> Result<Verdict> {
    let qi = BigInt::from(q.clone());
    let m = BigInt::from(params.m.clone());
    let mu_q = nearest_int_distance(&params.mu.mul_int(qi.clone()));
    let tau_q = nearest_int_distance(&params.tau.mul_int(qi.clone()));
    let epsilon = &mu_q - &tau_q.mul_int(m);
    if !epsilon.is_positive() {
        let zero = RealBall::zero(epsilon.precision());
        return Ok(if epsilon.certainly_le(&zero) {
            Verdict::NonPositive
        } else {
            Verdict::Undecided
        });
    }
    // Only a few digits of the threshold matter; rounding outward to a
    // short precision keeps the enclosure and makes the logarithm cheap.
    let short = Precision::from_bits(THRESHOLD_BITS.min(epsilon.precision().bits()));
    let threshold = params
        .a
        .mul_int(qi)
        .checked_div(&epsilon)?
        .at_precision(short)
        .ln()?
        .checked_div(&log_b.at_precision(short))?;
    let w_bound: BigInt = threshold.ceil_upper() - 1;
    let w_bound = w_bound
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("reduced bound out of range".into()))?;
    Ok(Verdict::Positive {
        epsilon,
        threshold,
        w_bound,
    })
}

/// Applies the reduction with the convergents of `cf`, which must expand
/// `params.tau`.
pub fn dp_reduce(
    params: &ReductionParams,
    cf: &ContinuedFraction,
    selection: Selection,
) -> Result<ReductionOutcome> {
    params.validate()?;
    let six_m = &params.m * 6u32;
    let first =
        cf.first_denominator_above(&six_m)
            .ok_or_else(|| Error::InsufficientConvergents {
                bound: six_m.to_string(),
                available: cf.convergents.len(),
            })?;
    let last = (first + MAX_RETRIES).min(cf.convergents.len());
    let log_b = params.b.ln()?;
    let mut rejected = Vec::new();
    let mut undecided = false;
    let mut best: Option<ReductionOutcome> = None;
    for ordinal in first..=last {
        let q = &cf.nth_convergent(ordinal).expect("ordinal in range").q;
        match try_convergent(params, q, &log_b)? {
            Verdict::NonPositive => rejected.push(ordinal),
            Verdict::Undecided => {
                undecided = true;
                rejected.push(ordinal);
            }
            Verdict::Positive {
                epsilon,
                threshold,
                w_bound,
            } => {
                if best.as_ref().is_some_and(|b| b.w_bound <= w_bound) {
                    continue;
                }
                best = Some(ReductionOutcome {
                    q_used: q.clone(),
                    epsilon,
                    w_bound,
                    convergent_index: ordinal,
                    threshold,
                    rejected: rejected.clone(),
                });
                if selection == Selection::FirstPositive {
                    break;
                }
            }
        }
    }
    match best {
        Some(outcome) => Ok(outcome),
        None if undecided => Err(Error::undecided(
            format!("sign of epsilon at convergents {first}..={last}"),
            params.mu.precision().bits(),
        )),
        None => Err(Error::EpsilonNonPositive { first, last }),
    }
}
