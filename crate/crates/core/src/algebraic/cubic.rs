use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;

use super::ball::{pow2, Precision, RealBall};
use crate::error::{Error, Result};

/// Requests below this many bits are rejected by [`compute_cubic`].
pub const MIN_PRECISION_BITS: u32 = 64;

const GUARD_BITS: u32 = 32;
const NEWTON_MAX_STEPS: usize = 200;

/// The root system of `x^3 - x - 1` and the Binet coefficients of the
/// Padovan sequence, `P_n = a·alpha^n + b·beta^n + c·gamma^n`.
///
/// The complex pair `beta`, `gamma = conj(beta)` and `b`, `c = conj(b)` enter
/// only through their moduli. Since `alpha·beta·gamma = 1`, `|beta|^2 = 1/alpha`;
/// since `a`, `b`, `c` are the zeros of `23x^3 - 5x - 1`, `|b|^2 = 1/(23a)`.
#[derive(Clone, Debug)]
pub struct CubicData {
    pub alpha: RealBall,
    pub beta_abs: RealBall,
    pub a: RealBall,
    pub b_abs: RealBall,
    pub log_alpha: RealBall,
    pub precision: Precision,
}

fn psi(x: &RealBall) -> RealBall {
    &(&x.powi(3).expect("non-negative exponent") - x) - &RealBall::one(x.precision())
}

/// Exact sign of `x^3 - x - 1` at the dyadic point `x_ulps · 2^-bits`.
fn psi_sign_at(x_ulps: &BigInt, bits: u32) -> Ordering {
    let v = x_ulps.pow(3) - (x_ulps << (2 * bits)) - pow2(3 * bits);
    match v.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// Isolates the real root of `x^3 - x - 1` in `[1.3, 1.4]` by interval
/// Newton, certifying the final enclosure by exact endpoint signs.
fn isolate_alpha(prec: Precision) -> Result<RealBall> {
    let bits = prec.bits();
    let scale = pow2(bits);
    let lo = Integer::div_floor(&(&scale * 13), &BigInt::from(10));
    let hi = Integer::div_ceil(&(&scale * 14), &BigInt::from(10));
    if psi_sign_at(&lo, bits) != Ordering::Less || psi_sign_at(&hi, bits) != Ordering::Greater {
        return Err(Error::RootIsolation(
            "no sign change of x^3 - x - 1 on [1.3, 1.4]".into(),
        ));
    }
    let mut x = RealBall::from_ulp_bounds(lo, hi, bits);
    let three = RealBall::from_int(3, prec);
    let one = RealBall::one(prec);
    for _ in 0..NEWTON_MAX_STEPS {
        let m = x.midpoint();
        let slope = &(&three * &x.square()) - &one;
        if !slope.is_positive() {
            return Err(Error::RootIsolation(
                "derivative enclosure not positive".into(),
            ));
        }
        let step = psi(&m).checked_div(&slope)?;
        let newton = &m - &step;
        let next = x
            .intersect(&newton)
            .ok_or_else(|| Error::RootIsolation("empty Newton intersection".into()))?;
        let progressed = next.rad_ulps() < x.rad_ulps();
        x = next;
        if !progressed || x.rad_ulps() <= &1u32.into() {
            break;
        }
    }
    let (lo, hi) = (x.lower_ulps(), x.upper_ulps());
    if psi_sign_at(&lo, bits) != Ordering::Less || psi_sign_at(&hi, bits) != Ordering::Greater {
        return Err(Error::undecided("final root enclosure not certified", bits));
    }
    Ok(x)
}

fn ratio(p: i64, q: i64, prec: Precision) -> RealBall {
    RealBall::from_ratio(&p.into(), &q.into(), prec).expect("nonzero denominator")
}

fn inside(x: &RealBall, lo: (i64, i64), hi: (i64, i64), name: &str) -> Result<()> {
    let prec = x.precision();
    if x.certainly_gt(&ratio(lo.0, lo.1, prec)) && x.certainly_lt(&ratio(hi.0, hi.1, prec)) {
        Ok(())
    } else {
        Err(Error::undecided(
            format!("{name} = {x} not certified inside its estimate bracket"),
            prec.bits(),
        ))
    }
}

/// Computes and certifies the cubic data at `prec`.
pub fn compute_cubic(prec: Precision) -> Result<CubicData> {
    if prec.bits() < MIN_PRECISION_BITS {
        return Err(Error::InvalidInput(format!(
            "precision {} below the {MIN_PRECISION_BITS}-bit floor",
            prec.bits()
        )));
    }
    let w = prec.plus_bits(GUARD_BITS);
    let alpha = isolate_alpha(w)?;
    let one = RealBall::one(w);
    let a = (&alpha * &(&alpha + &one))
        .checked_div(&(&alpha.mul_int(2) + &RealBall::from_int(3, w)))?;
    let beta_abs = alpha.sqrt()?.recip()?;
    let b_abs = a.mul_int(23).recip()?.sqrt()?;
    let log_alpha = alpha.ln()?;
    let data = CubicData {
        alpha: alpha.at_precision(prec),
        beta_abs: beta_abs.at_precision(prec),
        a: a.at_precision(prec),
        b_abs: b_abs.at_precision(prec),
        log_alpha: log_alpha.at_precision(prec),
        precision: prec,
    };
    data.verify()?;
    Ok(data)
}

impl CubicData {
    /// Shared, lazily computed data for `prec`.
    pub fn cached(prec: Precision) -> Result<Arc<CubicData>> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CubicData>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(d) = cache.lock().unwrap().get(&prec.bits()) {
            return Ok(d.clone());
        }
        let d = Arc::new(compute_cubic(prec)?);
        cache.lock().unwrap().insert(prec.bits(), d.clone());
        Ok(d)
    }

    /// Re-checks every stored invariant.
    pub fn verify(&self) -> Result<()> {
        let prec = self.precision;
        let bits = prec.bits();
        inside(&self.alpha, (132, 100), (133, 100), "alpha")?;
        inside(&self.beta_abs, (86, 100), (87, 100), "|beta|")?;
        inside(&self.a, (54, 100), (55, 100), "a")?;
        inside(&self.b_abs, (28, 100), (29, 100), "|b|")?;

        if !psi(&self.alpha).contains_zero() {
            return Err(Error::RootIsolation("psi(alpha) excludes zero".into()));
        }
        let (lo, hi) = (self.alpha.lower_ulps(), self.alpha.upper_ulps());
        if psi_sign_at(&lo, bits) != Ordering::Less || psi_sign_at(&hi, bits) != Ordering::Greater {
            return Err(Error::undecided("no sign change across alpha", bits));
        }
        let a = &self.a;
        let min_poly_a = &(&a.powi(3)?.mul_int(23) - &a.mul_int(5)) - &RealBall::one(prec);
        if !min_poly_a.contains_zero() {
            return Err(Error::RootIsolation("23a^3 - 5a - 1 excludes zero".into()));
        }
        let one = RealBall::one(prec);
        let alpha = &self.alpha;
        let a_from_alpha = (alpha * &(alpha + &one))
            .checked_div(&(&alpha.mul_int(2) + &RealBall::from_int(3, prec)))?;
        if !a_from_alpha.overlaps(a) {
            return Err(Error::RootIsolation(
                "a != alpha(alpha+1)/(2alpha+3)".into(),
            ));
        }
        if !(&self.beta_abs.square() * alpha).overlaps(&one) {
            return Err(Error::RootIsolation("|beta|^2 alpha != 1".into()));
        }
        Ok(())
    }

    /// `alpha^(-n/2) = |beta|^n`.
    pub fn alpha_neg_half_power(&self, n: u64) -> Result<RealBall> {
        self.beta_abs.powi(n as i64)
    }
}

/// The Cardano expression `(r1 + r2)/6` with `r1, r2 = cbrt(108 ± 12·sqrt(69))`,
/// as an independent enclosure of alpha.
pub fn cardano_alpha(prec: Precision) -> Result<RealBall> {
    let w = prec.plus_bits(GUARD_BITS);
    let s = RealBall::from_int(69, w).sqrt()?.mul_int(12);
    let c = RealBall::from_int(108, w);
    let r1 = (&c + &s).nth_root(3)?;
    let r2 = (&c - &s).nth_root(3)?;
    Ok((&r1 + &r2).div_int(6)?.at_precision(prec))
}
