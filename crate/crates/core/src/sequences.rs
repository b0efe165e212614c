//! Exact Padovan numbers and certified checks of their analytic estimates.
//!
//! `P_0 = 0, P_1 = P_2 = 1, P_{n+3} = P_{n+1} + P_n`. Terms are always
//! generated by the integer recurrence; the Binet form is only used to
//! certify inequalities.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};

use crate::algebraic::{with_escalation, CubicData, Precision, RealBall};
use crate::error::{Error, Result};

/// Append-only, thread-safe table of Padovan numbers.
#[derive(Debug)]
pub struct PadovanCache {
    terms: RwLock<Vec<BigUint>>,
}

impl Default for PadovanCache {
    fn default() -> Self {
        Self::new()
    }
}

impl PadovanCache {
    pub fn new() -> Self {
        PadovanCache {
            terms: RwLock::new(vec![0u32.into(), 1u32.into(), 1u32.into()]),
        }
    }

    /// Number of cached terms.
    pub fn len(&self) -> usize {
        self.terms.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Extends the table so that index `n` is present.
    pub fn ensure(&self, n: usize) {
        if n < self.len() {
            return;
        }
        let mut terms = self.terms.write().unwrap();
        while terms.len() <= n {
            let k = terms.len();
            let next = &terms[k - 2] + &terms[k - 3];
            terms.push(next);
        }
    }

    pub fn get(&self, n: usize) -> BigUint {
        self.ensure(n);
        self.terms.read().unwrap()[n].clone()
    }

    /// Copies of `P_0 ..= P_n`.
    pub fn prefix(&self, n: usize) -> Vec<BigUint> {
        self.ensure(n);
        self.terms.read().unwrap()[..=n].to_vec()
    }
}

fn global() -> &'static PadovanCache {
    static CACHE: OnceLock<PadovanCache> = OnceLock::new();
    CACHE.get_or_init(PadovanCache::new)
}

/// `P_n`, memoized in a process-wide cache.
pub fn padovan(n: u64) -> BigUint {
    global().get(n as usize)
}

/// Certified comparison of `e(n) = P_n - a·alpha^n` against `alpha^(-n/2)`.
#[derive(Clone, Debug)]
pub struct BinetErrorCertificate {
    pub n: u64,
    /// Enclosure of `e(n)`.
    pub error: RealBall,
    /// Enclosure of `alpha^(-n/2)`.
    pub bound: RealBall,
    /// `|e(n)| < alpha^(-n/2)` was certified; `false` means it was certified
    /// to fail.
    pub holds: bool,
    pub precision: Precision,
}

pub fn binet_error(n: u64, cubic: &CubicData) -> Result<BinetErrorCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("binet_error needs n >= 1".into()));
    }
    let prec = cubic.precision;
    let p_n = RealBall::from_int(BigInt::from(padovan(n)), prec);
    let error = &p_n - &(&cubic.a * &cubic.alpha.powi(n as i64)?);
    let bound = cubic.alpha_neg_half_power(n)?;
    let abs = error.abs();
    let holds = if abs.certainly_lt(&bound) {
        true
    } else if abs.certainly_ge(&bound) {
        false
    } else {
        return Err(Error::undecided(
            format!("|e({n})| against alpha^(-{n}/2)"),
            prec.bits(),
        ));
    };
    Ok(BinetErrorCertificate {
        n,
        error,
        bound,
        holds,
        precision: prec,
    })
}

/// [`binet_error`] with precision escalation from `start`.
pub fn certify_binet_error(n: u64, start: Precision) -> Result<BinetErrorCertificate> {
    with_escalation(start, |prec| binet_error(n, &*CubicData::cached(prec)?))
}

/// Certified `alpha^(n-3) <= P_n <= alpha^(n-1)`.
#[derive(Clone, Debug)]
pub struct SandwichCertificate {
    pub n: u64,
    /// `P_n - alpha^(n-3)`.
    pub lower_margin: RealBall,
    /// `alpha^(n-1) - P_n`.
    pub upper_margin: RealBall,
    pub holds: bool,
    pub precision: Precision,
}

pub fn power_sandwich(n: u64, cubic: &CubicData) -> Result<SandwichCertificate> {
    if n == 0 {
        return Err(Error::InvalidInput("power_sandwich needs n >= 1".into()));
    }
    let prec = cubic.precision;
    let p_n = RealBall::from_int(BigInt::from(padovan(n)), prec);
    let low = cubic.alpha.powi(n as i64 - 3)?;
    let high = cubic.alpha.powi(n as i64 - 1)?;
    let holds = if low.certainly_le(&p_n) && p_n.certainly_le(&high) {
        true
    } else if low.certainly_gt(&p_n) || p_n.certainly_gt(&high) {
        false
    } else {
        return Err(Error::undecided(
            format!("power sandwich at n = {n}"),
            prec.bits(),
        ));
    };
    Ok(SandwichCertificate {
        n,
        lower_margin: &p_n - &low,
        upper_margin: &high - &p_n,
        holds,
        precision: prec,
    })
}

/// [`power_sandwich`] with precision escalation from `start`.
pub fn certify_power_sandwich(n: u64, start: Precision) -> Result<SandwichCertificate> {
    with_escalation(start, |prec| power_sandwich(n, &*CubicData::cached(prec)?))
}
