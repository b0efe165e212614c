//! Logarithm and exponential on balls.
//!
//! Both are evaluated with a few dozen guard bits by a Taylor-type series in
//! ball arithmetic, so rounding in the partial sums is tracked by the radius.
//! The truncated tail is bounded explicitly and added to the radius.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};

use super::ball::{Precision, RealBall};
use crate::error::{Error, Result};

const GUARD_BITS: u32 = 64;

/// Series terms whose magnitude drops to this many ulps end the summation.
const STOP_ULPS: u32 = 4;

/// `atanh(z) = z + z^3/3 + z^5/5 + ...` for a ball with `|z| <= 1/2`.
///
/// The tail after the last summed power `z^(2i+1)` is at most
/// `|z|^(2i+3) / (1 - z^2) <= |z|^(2i+1) / 3`, which the loop exit bounds by
/// the magnitude of the last power.
fn atanh_series(z: &RealBall) -> RealBall {
    let prec = z.precision();
    debug_assert!(z.mag_upper_ulps() <= (BigUint::from(1u32) << (prec.bits() - 1)));
    let z2 = z.square();
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut k: u64 = 1;
    loop {
        power = &power * &z2;
        k += 2;
        sum = &sum + &power.div_int(k).expect("odd divisor");
        if power.mag_upper_ulps() <= BigUint::from(STOP_ULPS) {
            break;
        }
    }
    let tail = power.mag_upper_ulps();
    sum.inflate(&tail)
}

/// `exp(y)` for `|y| <= 2^-10`. The tail after term `y^k/k!` is at most that
/// term times `|y|/(k+1) / (1-|y|)`, which is below the term itself.
fn exp_series(y: &RealBall) -> RealBall {
    let prec = y.precision();
    let mut term = RealBall::one(prec);
    let mut sum = term.clone();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = (&term * y).div_int(k).expect("positive divisor");
        sum = &sum + &term;
        if term.mag_upper_ulps() <= BigUint::from(STOP_ULPS) {
            break;
        }
    }
    let tail = term.mag_upper_ulps();
    sum.inflate(&tail)
}

fn ln2_cache() -> &'static Mutex<HashMap<u32, RealBall>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, RealBall>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `log 2 = 2·atanh(1/3)`, cached per precision.
pub fn ln2(prec: Precision) -> RealBall {
    if let Some(v) = ln2_cache().lock().unwrap().get(&prec.bits()) {
        return v.clone();
    }
    let w = prec.plus_bits(GUARD_BITS);
    let third = RealBall::from_ratio(&BigInt::from(1), &BigInt::from(3), w).unwrap();
    let value = atanh_series(&third).mul_int(2).at_precision(prec);
    ln2_cache()
        .lock()
        .unwrap()
        .insert(prec.bits(), value.clone());
    value
}

impl RealBall {
    /// Natural logarithm. The ball must be certainly positive.
    pub fn ln(&self) -> Result<RealBall> {
        if self.is_negative() || (self.is_exact() && !self.is_positive()) {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        if !self.is_positive() {
            return Err(Error::undecided(
                "logarithm argument straddles zero",
                self.precision().bits(),
            ));
        }
        let prec = self.precision();
        let w = prec.plus_bits(GUARD_BITS);
        let x = self.at_precision(w);
        // Scale into [1, 2) by the bit length of the midpoint, then into
        // [1/sqrt2, sqrt2] so that |z| <= 0.1716.
        let mut k = x.mid_ulps().bits() as i64 - 1 - w.bits() as i64;
        let mut y = x.mul_pow2(-k);
        let sqrt2_ulps = (BigInt::from(14143) << w.bits()) / BigInt::from(10000);
        if y.mid_ulps() > &sqrt2_ulps {
            k += 1;
            y = y.mul_pow2(-1);
        }
        let one = RealBall::one(w);
        let z = (&y - &one).checked_div(&(&y + &one))?;
        let log_y = atanh_series(&z).mul_int(2);
        let result = &log_y + &ln2(w).mul_int(k);
        Ok(result.at_precision(prec))
    }

    /// Exponential.
    pub fn exp(&self) -> Result<RealBall> {
        let prec = self.precision();
        let upper = self.upper_ulps();
        let mag = self.mag_upper_ulps();
        // |x| < 2^int_bits
        let int_bits = mag.bits() as i64 - prec.bits() as i64;
        if int_bits > 40 {
            return Err(Error::InvalidInput("exponent argument too large".into()));
        }
        let halvings = (int_bits + 10).max(0) as u32;
        // Fixed-point output: large results need extra absolute bits.
        let growth_bits = if upper.is_positive() {
            let x_up = self.upper_point().to_f64();
            (x_up * std::f64::consts::LOG2_E)
                .ceil()
                .to_u32()
                .unwrap_or(0)
                + 2
        } else {
            0
        };
        let w = prec.plus_bits(GUARD_BITS + halvings + growth_bits);
        let y = self.at_precision(w).mul_pow2(-(halvings as i64));
        let mut e = exp_series(&y);
        for _ in 0..halvings {
            e = &e * &e;
        }
        Ok(e.at_precision(prec))
    }

    /// `self^exponent` for a positive base.
    pub fn pow(&self, exponent: &RealBall) -> Result<RealBall> {
        (exponent * &self.ln()?).exp()
    }

    /// Natural logarithm of a positive integer.
    pub fn ln_int<T: Into<BigInt>>(n: T, prec: Precision) -> Result<RealBall> {
        RealBall::from_int(n, prec).ln()
    }
}
