//! Midpoint-radius arithmetic over dyadic fixed-point numbers.
//!
//! A [`RealBall`] stores an integer midpoint `m` and a non-negative integer
//! radius `r`, both in units of `2^-prec`. The ball encloses every real in
//! `[(m - r)·2^-prec, (m + r)·2^-prec]`. Every operation rounds outward, so
//! an enclosure of the inputs always yields an enclosure of the result.

use std::cmp::{max, Ordering};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision, counted in fractional bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Precision(u32);

impl Precision {
    pub const fn from_bits(bits: u32) -> Self {
        Precision(bits)
    }

    /// Enough bits to resolve `digits` decimal places.
    pub fn from_digits(digits: u32) -> Self {
        Precision((digits as f64 * LOG2_10).ceil() as u32)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn digits(self) -> u32 {
        (self.0 as f64 / LOG2_10).floor() as u32
    }

    pub const fn doubled(self) -> Self {
        Precision(self.0 * 2)
    }

    pub const fn plus_bits(self, extra: u32) -> Self {
        Precision(self.0 + extra)
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} bits (~{} digits)", self.0, self.digits())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBall {
    mid: BigInt,
    rad: BigUint,
    prec: u32,
}

pub(crate) fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

fn pow2u(k: u32) -> BigUint {
    BigUint::one() << k
}

/// `x / 2^s` rounded to nearest, plus whether any bits were discarded.
fn round_shr(x: &BigInt, s: u32) -> (BigInt, bool) {
    if s == 0 {
        return (x.clone(), false);
    }
    let inexact = low_bits_nonzero(x.magnitude(), s);
    let q = (x + pow2(s - 1)).div_floor(&pow2(s));
    (q, inexact)
}

fn ceil_shr(x: &BigUint, s: u32) -> BigUint {
    if s == 0 {
        return x.clone();
    }
    (x + pow2u(s) - 1u32) >> s
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

fn low_bits_nonzero(x: &BigUint, s: u32) -> bool {
    match x.trailing_zeros() {
        None => false,
        Some(tz) => tz < s as u64,
    }
}

impl RealBall {
    pub(crate) fn from_parts(mid: BigInt, rad: BigUint, prec: u32) -> Self {
        RealBall { mid, rad, prec }
    }

    /// Ball covering the ulp interval `[lo, hi]`.
    pub(crate) fn from_ulp_bounds(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        let rad = (&hi - &mid).magnitude().clone();
        RealBall { mid, rad, prec }
    }

    pub fn zero(prec: Precision) -> Self {
        RealBall {
            mid: BigInt::zero(),
            rad: BigUint::zero(),
            prec: prec.bits(),
        }
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_int(1, prec)
    }

    pub fn from_int<T: Into<BigInt>>(n: T, prec: Precision) -> Self {
        RealBall {
            mid: n.into() << prec.bits(),
            rad: BigUint::zero(),
            prec: prec.bits(),
        }
    }

    /// Enclosure of `p / q`.
    pub fn from_ratio(p: &BigInt, q: &BigInt, prec: Precision) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Domain("ratio with zero denominator".into()));
        }
        let num = p << prec.bits();
        let (quot, rem) = num.div_mod_floor(q);
        Ok(RealBall {
            mid: quot,
            rad: if rem.is_zero() {
                BigUint::zero()
            } else {
                BigUint::one()
            },
            prec: prec.bits(),
        })
    }

    /// Enclosure of a decimal literal such as `-12.5`, `1.46e30` or `7e-3`.
    pub fn parse_decimal(s: &str, prec: Precision) -> Result<Self> {
        let (num, exp10) = parse_decimal_parts(s)?;
        if exp10 >= 0 {
            Ok(Self::from_int(
                num * BigInt::from(10).pow(exp10 as u32),
                prec,
            ))
        } else {
            Self::from_ratio(&num, &BigInt::from(10).pow((-exp10) as u32), prec)
        }
    }

    pub fn precision(&self) -> Precision {
        Precision(self.prec)
    }

    pub(crate) fn mid_ulps(&self) -> &BigInt {
        &self.mid
    }

    pub(crate) fn rad_ulps(&self) -> &BigUint {
        &self.rad
    }

    pub(crate) fn lower_ulps(&self) -> BigInt {
        &self.mid - BigInt::from(self.rad.clone())
    }

    pub(crate) fn upper_ulps(&self) -> BigInt {
        &self.mid + BigInt::from(self.rad.clone())
    }

    /// Upper bound on `|x|` over the ball, in ulps.
    pub(crate) fn mag_upper_ulps(&self) -> BigUint {
        self.mid.magnitude() + &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Exact ball at the lower endpoint.
    pub fn lower_point(&self) -> RealBall {
        RealBall::from_parts(self.lower_ulps(), BigUint::zero(), self.prec)
    }

    /// Exact ball at the upper endpoint. Useful when a certified upper bound
    /// is to be carried forward as a fixed constant.
    pub fn upper_point(&self) -> RealBall {
        RealBall::from_parts(self.upper_ulps(), BigUint::zero(), self.prec)
    }

    pub fn midpoint(&self) -> RealBall {
        RealBall::from_parts(self.mid.clone(), BigUint::zero(), self.prec)
    }

    /// Widens the radius by `extra` ulps.
    pub(crate) fn inflate(mut self, extra: &BigUint) -> Self {
        self.rad += extra;
        self
    }

    /// Re-expresses the ball with `bits` fractional bits, rounding outward
    /// when bits are dropped.
    pub fn at_precision(&self, prec: Precision) -> RealBall {
        let bits = prec.bits();
        match bits.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = bits - self.prec;
                RealBall {
                    mid: &self.mid << s,
                    rad: &self.rad << s,
                    prec: bits,
                }
            }
            Ordering::Less => {
                let s = self.prec - bits;
                let (mid, inexact) = round_shr(&self.mid, s);
                let mut rad = ceil_shr(&self.rad, s);
                if inexact {
                    rad += 1u32;
                }
                RealBall {
                    mid,
                    rad,
                    prec: bits,
                }
            }
        }
    }

    fn aligned<'a>(
        a: &'a RealBall,
        b: &'a RealBall,
    ) -> (
        std::borrow::Cow<'a, RealBall>,
        std::borrow::Cow<'a, RealBall>,
        u32,
    ) {
        use std::borrow::Cow;
        let p = max(a.prec, b.prec);
        let a = if a.prec == p {
            Cow::Borrowed(a)
        } else {
            Cow::Owned(a.at_precision(Precision(p)))
        };
        let b = if b.prec == p {
            Cow::Borrowed(b)
        } else {
            Cow::Owned(b.at_precision(Precision(p)))
        };
        (a, b, p)
    }

    fn add_impl(a: &RealBall, b: &RealBall, negate_b: bool) -> RealBall {
        let (a, b, p) = Self::aligned(a, b);
        let mid = if negate_b {
            &a.mid - &b.mid
        } else {
            &a.mid + &b.mid
        };
        RealBall {
            mid,
            rad: &a.rad + &b.rad,
            prec: p,
        }
    }

    fn mul_impl(a: &RealBall, b: &RealBall) -> RealBall {
        let (a, b, p) = Self::aligned(a, b);
        let prod = &a.mid * &b.mid;
        let (mid, inexact) = round_shr(&prod, p);
        let err = a.mid.magnitude() * &b.rad + b.mid.magnitude() * &a.rad + &a.rad * &b.rad;
        let mut rad = ceil_shr(&err, p);
        if inexact {
            rad += 1u32;
        }
        RealBall { mid, rad, prec: p }
    }

    /// Quotient; fails as undecided when the divisor ball touches zero.
    pub fn checked_div(&self, other: &RealBall) -> Result<RealBall> {
        let (a, b, p) = Self::aligned(self, other);
        let ay = b.mid.magnitude();
        if ay <= &b.rad {
            return Err(Error::undecided("divisor ball contains zero", p));
        }
        let num = &a.mid << p;
        let (quot, rem) = num.div_mod_floor(&b.mid);
        let numer = (&a.rad * ay + a.mid.magnitude() * &b.rad) << p;
        let denom = ay * (ay - &b.rad);
        let mut rad = ceil_div(&numer, &denom);
        if !rem.is_zero() {
            rad += 1u32;
        }
        Ok(RealBall {
            mid: quot,
            rad,
            prec: p,
        })
    }

    pub fn recip(&self) -> Result<RealBall> {
        RealBall::one(self.precision()).checked_div(self)
    }

    pub fn mul_int<T: Into<BigInt>>(&self, k: T) -> RealBall {
        let k = k.into();
        RealBall {
            mid: &self.mid * &k,
            rad: &self.rad * k.magnitude(),
            prec: self.prec,
        }
    }

    /// Division by a nonzero integer.
    pub fn div_int<T: Into<BigInt>>(&self, k: T) -> Result<RealBall> {
        let k = k.into();
        if k.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let (quot, rem) = self.mid.div_mod_floor(&k);
        let mut rad = ceil_div(&self.rad, k.magnitude());
        if !rem.is_zero() {
            rad += 1u32;
        }
        Ok(RealBall {
            mid: quot,
            rad,
            prec: self.prec,
        })
    }

    /// Multiplies by `2^e`.
    pub fn mul_pow2(&self, e: i64) -> RealBall {
        if e >= 0 {
            RealBall {
                mid: &self.mid << e as u32,
                rad: &self.rad << e as u32,
                prec: self.prec,
            }
        } else {
            RealBall {
                mid: self.mid.clone(),
                rad: self.rad.clone(),
                prec: self.prec + (-e) as u32,
            }
            .at_precision(Precision(self.prec))
        }
    }

    pub fn abs(&self) -> RealBall {
        let lo = self.lower_ulps();
        let hi = self.upper_ulps();
        if !lo.is_negative() {
            self.clone()
        } else if !hi.is_positive() {
            -self
        } else {
            // Centre at ceil(top/2) so the lower endpoint stays at zero.
            let top = max(lo.abs(), hi);
            let mid: BigInt = Integer::div_ceil(&top, &BigInt::from(2));
            let rad = mid.magnitude().clone();
            RealBall {
                mid,
                rad,
                prec: self.prec,
            }
        }
    }

    pub fn square(&self) -> RealBall {
        // |x|^2 keeps the lower endpoint non-negative for balls around zero.
        let a = self.abs();
        &a * &a
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// the reciprocal. `x^0` is exactly one.
    pub fn powi(&self, e: i64) -> Result<RealBall> {
        if e < 0 {
            return self.powi(-e)?.recip();
        }
        let mut result = RealBall::one(self.precision());
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Square root; the ball must be certainly non-negative.
    pub fn sqrt(&self) -> Result<RealBall> {
        self.nth_root(2)
    }

    /// Real `n`-th root of a non-negative ball, computed from the endpoints.
    pub fn nth_root(&self, n: u32) -> Result<RealBall> {
        if n == 0 {
            return Err(Error::Domain("zeroth root".into()));
        }
        let lo = self.lower_ulps();
        let hi = self.upper_ulps();
        if hi.is_negative() {
            return Err(Error::Domain("root of a negative number".into()));
        }
        if lo.is_negative() {
            return Err(Error::undecided("root argument straddles zero", self.prec));
        }
        let shift = self.prec * (n - 1);
        let root_floor = |v: &BigInt| -> (BigUint, bool) {
            let arg = v.magnitude() << shift;
            let r = arg.nth_root(n);
            let exact = r.pow(n) == arg;
            (r, exact)
        };
        let (lo_root, _) = root_floor(&lo);
        let (mut hi_root, exact) = root_floor(&hi);
        if !exact {
            hi_root += 1u32;
        }
        Ok(RealBall::from_ulp_bounds(
            BigInt::from(lo_root),
            BigInt::from(hi_root),
            self.prec,
        ))
    }

    pub fn is_positive(&self) -> bool {
        self.lower_ulps().is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.upper_ulps().is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    /// Three-way comparison that only answers when the enclosures are
    /// disjoint, or both exact.
    pub fn cmp_certain(&self, other: &RealBall) -> Option<Ordering> {
        let (a, b, _) = Self::aligned(self, other);
        if a.upper_ulps() < b.lower_ulps() {
            Some(Ordering::Less)
        } else if a.lower_ulps() > b.upper_ulps() {
            Some(Ordering::Greater)
        } else if a.is_exact() && b.is_exact() && a.mid == b.mid {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn certainly_lt(&self, other: &RealBall) -> bool {
        self.cmp_certain(other) == Some(Ordering::Less)
    }

    pub fn certainly_gt(&self, other: &RealBall) -> bool {
        self.cmp_certain(other) == Some(Ordering::Greater)
    }

    /// Every point of `self` is `<=` every point of `other`.
    pub fn certainly_le(&self, other: &RealBall) -> bool {
        let (a, b, _) = Self::aligned(self, other);
        a.upper_ulps() <= b.lower_ulps()
    }

    pub fn certainly_ge(&self, other: &RealBall) -> bool {
        other.certainly_le(self)
    }

    /// `other` lies entirely inside `self`.
    pub fn contains(&self, other: &RealBall) -> bool {
        let (a, b, _) = Self::aligned(self, other);
        a.lower_ulps() <= b.lower_ulps() && b.upper_ulps() <= a.upper_ulps()
    }

    pub fn overlaps(&self, other: &RealBall) -> bool {
        let (a, b, _) = Self::aligned(self, other);
        a.lower_ulps() <= b.upper_ulps() && b.lower_ulps() <= a.upper_ulps()
    }

    pub fn intersect(&self, other: &RealBall) -> Option<RealBall> {
        let (a, b, p) = Self::aligned(self, other);
        let lo = max(a.lower_ulps(), b.lower_ulps());
        let hi = std::cmp::min(a.upper_ulps(), b.upper_ulps());
        (lo <= hi).then(|| RealBall::from_ulp_bounds(lo, hi, p))
    }

    pub fn hull(&self, other: &RealBall) -> RealBall {
        let (a, b, p) = Self::aligned(self, other);
        let lo = std::cmp::min(a.lower_ulps(), b.lower_ulps());
        let hi = max(a.upper_ulps(), b.upper_ulps());
        RealBall::from_ulp_bounds(lo, hi, p)
    }

    /// Encloses `max(x, y)` for `x` in `self`, `y` in `other`.
    pub fn max(&self, other: &RealBall) -> RealBall {
        let (a, b, p) = Self::aligned(self, other);
        let lo = max(a.lower_ulps(), b.lower_ulps());
        let hi = max(a.upper_ulps(), b.upper_ulps());
        RealBall::from_ulp_bounds(lo, hi, p)
    }

    /// The floor, when every point of the ball shares it.
    pub fn floor(&self) -> Option<BigInt> {
        let lo = self.floor_lower();
        (lo == self.upper_ulps().div_floor(&pow2(self.prec))).then_some(lo)
    }

    pub fn floor_lower(&self) -> BigInt {
        self.lower_ulps().div_floor(&pow2(self.prec))
    }

    /// Smallest integer `>=` every point of the ball.
    pub fn ceil_upper(&self) -> BigInt {
        let hi = self.upper_ulps();
        let (q, r) = hi.div_mod_floor(&pow2(self.prec));
        if r.is_zero() {
            q
        } else {
            q + 1
        }
    }

    /// Width of the enclosure as a real ball.
    pub fn radius(&self) -> RealBall {
        RealBall::from_parts(BigInt::from(self.rad.clone()), BigUint::zero(), self.prec)
    }

    /// Midpoint as an `f64`, for display and heuristics only.
    pub fn to_f64(&self) -> f64 {
        scaled_to_f64(&self.mid, self.prec)
    }

    pub fn radius_f64(&self) -> f64 {
        scaled_to_f64(&BigInt::from(self.rad.clone()), self.prec)
    }

    /// Midpoint rounded to `frac` decimal places.
    pub fn to_fixed(&self, frac: u32) -> String {
        let scaled = &self.mid * BigInt::from(10).pow(frac);
        let (q, _) = round_shr(&scaled, self.prec);
        format_fixed(&q, frac)
    }

    /// Midpoint in scientific notation with `sig` significant digits.
    pub fn to_sci(&self, sig: usize) -> String {
        format_sci(&self.mid, self.prec, sig.max(1))
    }

    /// A short decimal string that is an upper bound for the radius plus
    /// `extra_ulps`, e.g. `"1234e-310"`.
    pub(crate) fn radius_upper_decimal(&self, extra_ulps: &BigUint) -> String {
        let r = &self.rad + extra_ulps;
        if r.is_zero() {
            return "0".to_string();
        }
        let log10 = (r.bits() as f64 - self.prec as f64) * std::f64::consts::LOG10_2;
        let e0 = log10.floor() as i64 - 4;
        let denom = pow2u(self.prec);
        let m = if e0 <= 0 {
            ceil_div(&(r * BigUint::from(10u32).pow((-e0) as u32)), &denom)
        } else {
            ceil_div(&r, &(denom * BigUint::from(10u32).pow(e0 as u32)))
        };
        format!("{m}e{e0}")
    }
}

fn scaled_to_f64(m: &BigInt, prec: u32) -> f64 {
    if m.is_zero() {
        return 0.0;
    }
    let bits = m.bits() as i64;
    let shift = (bits - 60).max(0);
    let top = (m >> shift as u32).to_f64().unwrap_or(f64::NAN);
    let mut e = shift - prec as i64;
    let mut v = top;
    // Scale in steps to stay within the exponent range.
    while e > 0 {
        let step = e.min(1000);
        v *= 2f64.powi(step as i32);
        e -= step;
    }
    while e < 0 {
        let step = (-e).min(1000);
        v /= 2f64.powi(step as i32);
        e += step;
    }
    v
}

fn format_fixed(q: &BigInt, frac: u32) -> String {
    let neg = q.is_negative();
    let digits = q.magnitude().to_str_radix(10);
    let frac = frac as usize;
    let padded = if digits.len() <= frac {
        format!("{}{}", "0".repeat(frac + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = padded.len() - frac;
    let sign = if neg { "-" } else { "" };
    if frac == 0 {
        format!("{sign}{padded}")
    } else {
        format!("{sign}{}.{}", &padded[..split], &padded[split..])
    }
}

fn format_sci(m: &BigInt, prec: u32, sig: usize) -> String {
    if m.is_zero() {
        return "0".to_string();
    }
    let est = ((m.bits() as f64 - prec as f64) * std::f64::consts::LOG10_2).floor() as i64;
    // Try the estimated exponent and its neighbour; the estimate is off by at
    // most one.
    for e in [est, est + 1, est - 1] {
        let scale = sig as i64 - 1 - e;
        let scaled = if scale >= 0 {
            m * BigInt::from(10).pow(scale as u32)
        } else {
            m.clone()
        };
        let (mut q, _) = round_shr(&scaled, prec);
        if scale < 0 {
            q = div_round(&q, &BigInt::from(10).pow((-scale) as u32));
        }
        let digits = q.magnitude().to_str_radix(10);
        if digits.len() == sig {
            let sign = if q.is_negative() { "-" } else { "" };
            let mant = if sig > 1 {
                format!("{}.{}", &digits[..1], &digits[1..])
            } else {
                digits.clone()
            };
            return format!("{sign}{mant}e{e}");
        }
    }
    format!("{}", scaled_to_f64(m, prec))
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let num: BigInt = a * 2 + b;
    num.div_floor(&(b * 2))
}

/// Splits a decimal literal into an integer and a power of ten.
pub(crate) fn parse_decimal_parts(s: &str) -> Result<(BigInt, i64)> {
    let bad = || Error::InvalidInput(format!("not a decimal number: {s:?}"));
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(bad)?;
    if neg {
        num = -num;
    }
    Ok((num, exp - frac_part.len() as i64))
}

impl fmt::Display for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(17);
        write!(
            f,
            "{} +/- {}",
            self.to_sci(sig),
            format_sci(&BigInt::from(self.rad.clone()), self.prec, 2)
        )
    }
}

impl Neg for &RealBall {
    type Output = RealBall;
    fn neg(self) -> RealBall {
        RealBall {
            mid: -&self.mid,
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }
}

impl Neg for RealBall {
    type Output = RealBall;
    fn neg(self) -> RealBall {
        -&self
    }
}

macro_rules! ball_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&RealBall> for &RealBall {
            type Output = RealBall;
            fn $method(self, rhs: &RealBall) -> RealBall {
                $body(self, rhs)
            }
        }
        impl $trait<RealBall> for RealBall {
            type Output = RealBall;
            fn $method(self, rhs: RealBall) -> RealBall {
                $body(&self, &rhs)
            }
        }
        impl $trait<&RealBall> for RealBall {
            type Output = RealBall;
            fn $method(self, rhs: &RealBall) -> RealBall {
                $body(&self, rhs)
            }
        }
        impl $trait<RealBall> for &RealBall {
            type Output = RealBall;
            fn $method(self, rhs: RealBall) -> RealBall {
                $body(self, &rhs)
            }
        }
    };
}

ball_binop!(Add, add, |a, b| RealBall::add_impl(a, b, false));
ball_binop!(Sub, sub, |a, b| RealBall::add_impl(a, b, true));
ball_binop!(Mul, mul, RealBall::mul_impl);

/// Serialized form of a ball: decimal midpoint, decimal radius upper bound,
/// and the number of decimal digits the midpoint was printed with.
///
/// The radius already accounts for rounding the midpoint to decimal, so
/// [`BallRecord::to_ball`] encloses the ball the record was made from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallRecord {
    pub midpoint: String,
    pub radius: String,
    pub digits: u32,
}

impl BallRecord {
    pub fn new(ball: &RealBall, digits: u32) -> Self {
        let midpoint = ball.to_fixed(digits);
        // Decimal rounding moves the midpoint by at most 10^-digits / 2.
        let rounding = ceil_div(
            &pow2u(ball.prec),
            &(BigUint::from(2u32) * BigUint::from(10u32).pow(digits)),
        ) + 1u32;
        BallRecord {
            midpoint,
            radius: ball.radius_upper_decimal(&rounding),
            digits,
        }
    }

    pub fn to_ball(&self, prec: Precision) -> Result<RealBall> {
        let mid = RealBall::parse_decimal(&self.midpoint, prec)?;
        let rad = RealBall::parse_decimal(&self.radius, prec)?;
        let rad_ulps = rad.upper_ulps();
        if rad_ulps.is_negative() {
            return Err(Error::InvalidInput("negative radius".into()));
        }
        Ok(mid.inflate(rad_ulps.magnitude()))
    }
}

impl From<&RealBall> for BallRecord {
    fn from(ball: &RealBall) -> Self {
        BallRecord::new(ball, ball.precision().digits())
    }
}
