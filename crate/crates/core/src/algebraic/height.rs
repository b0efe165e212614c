//! Logarithmic heights. For an algebraic `eta` of degree `d` with primitive
//! minimal polynomial `a0·prod(x - eta_i)`,
//! `h(eta) = (log a0 + sum log max(|eta_i|, 1)) / d`.
//! The estimates below use the usual calculus
//! `h(x ± y) <= h(x) + h(y) + log 2`, `h(x·y^±1) <= h(x) + h(y)`,
//! `h(x^s) = |s|·h(x)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ball::{Precision, RealBall};
use crate::error::{Error, Result};

/// `h(p/q) = log max(|p|, q)` for coprime `p`, `q > 0`.
pub fn log_height_rational(p: &BigInt, q: &BigInt, prec: Precision) -> Result<RealBall> {
    if !q.is_positive() {
        return Err(Error::InvalidInput(
            "height: denominator must be positive".into(),
        ));
    }
    if !p.gcd(q).is_one() {
        return Err(Error::InvalidInput(format!(
            "height: {p}/{q} is not in lowest terms"
        )));
    }
    let top = std::cmp::max(p.abs(), q.clone());
    RealBall::from_int(top, prec).ln()
}

fn h_int(n: i64, prec: Precision) -> Result<RealBall> {
    if n == 0 {
        return Ok(RealBall::zero(prec));
    }
    log_height_rational(&n.into(), &1.into(), prec)
}

/// `h(a) = log(23)/3`: the minimal polynomial of `a` is `23x^3 - 5x - 1` and
/// all three of its zeros lie inside the unit disc.
pub fn height_a(prec: Precision) -> Result<RealBall> {
    RealBall::ln_int(23, prec)?.div_int(3)
}

fn check_digit(d: u8, allow_zero: bool) -> Result<()> {
    if d > 9 || (!allow_zero && d == 0) {
        return Err(Error::InvalidInput(format!("digit {d} out of range")));
    }
    Ok(())
}

/// Upper bound for `h(9a/d1) <= h(9) + h(a) + h(d1)`.
pub fn height_eta1_step1(d1: u8, prec: Precision) -> Result<RealBall> {
    check_digit(d1, false)?;
    Ok(&(&h_int(9, prec)? + &height_a(prec)?) + &h_int(d1 as i64, prec)?)
}

/// The chain for `h((d1·10^l1 - (d1 - d2)) / (9a))` with the actual digits:
/// `h(d1) + l1·log 10 + h(d1) + h(d2) + h(9) + h(a) + 2 log 2`.
pub fn height_eta1_step2(d1: u8, d2: u8, l1: u64, prec: Precision) -> Result<RealBall> {
    check_digit(d1, false)?;
    check_digit(d2, true)?;
    if d1 == d2 || l1 == 0 {
        return Err(Error::InvalidInput("need d1 != d2 and l1 >= 1".into()));
    }
    let l1_log10 = RealBall::ln_int(10, prec)?.mul_int(l1);
    let digits = &(&h_int(d1 as i64, prec)?.mul_int(2) + &h_int(d2 as i64, prec)?) + &l1_log10;
    let rest = &(&h_int(9, prec)? + &height_a(prec)?) + &super::ln2(prec).mul_int(2);
    Ok(&digits + &rest)
}

/// The same chain with every digit height replaced by `log 9` and
/// `l1·log 10` replaced by a supplied upper bound:
/// `bound + 4 log 9 + log(23)/3 + 2 log 2`.
pub fn height_eta1_step2_uniform(l1_log10_bound: &RealBall) -> Result<RealBall> {
    let prec = l1_log10_bound.precision();
    let rest = &(&h_int(9, prec)?.mul_int(4) + &height_a(prec)?) + &super::ln2(prec).mul_int(2);
    Ok(l1_log10_bound + &rest)
}

/// A direct bound `h(N/9) + h(a)` with `N = d1·10^l1 - (d1 - d2)` and `N/9`
/// reduced to lowest terms. Never larger than [`height_eta1_step2`].
pub fn height_eta1_step2_direct(d1: u8, d2: u8, l1: u64, prec: Precision) -> Result<RealBall> {
    check_digit(d1, false)?;
    check_digit(d2, true)?;
    if d1 == d2 || l1 == 0 {
        return Err(Error::InvalidInput("need d1 != d2 and l1 >= 1".into()));
    }
    let n =
        BigInt::from(d1) * BigInt::from(10).pow(l1 as u32) - BigInt::from(d1 as i64 - d2 as i64);
    let nine = BigInt::from(9);
    let g = n.gcd(&nine);
    debug_assert!(!g.is_zero());
    Ok(&log_height_rational(&(&n / &g), &(&nine / &g), prec)? + &height_a(prec)?)
}
