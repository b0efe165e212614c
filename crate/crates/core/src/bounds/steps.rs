//! The two linear forms
//!
//! `Lambda_1 = (9a/d1)·alpha^n·10^-(l1+l2) - 1`, with `|Lambda_1| < 30/10^l1`,
//! `Lambda_2 = ((d1·10^l1 - (d1-d2))/(9a))·alpha^-n·10^l2 - 1`, with
//! `|Lambda_2| < 4/alpha^n`,
//!
//! and the chain that turns their Matveev lower bounds into absolute bounds
//! on `n` and `l1 + l2`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebraic::{
    height_eta1_step1, height_eta1_step2_uniform, parse_decimal_parts, CubicData, Precision,
    RealBall,
};
use crate::error::{Error, Result};
use crate::published;

use super::matveev::{guzman_luca, matveev_bound, ExponentBound, MatveevInput};
use super::{Mode, SymbolicBound};

/// A constant as derived from its inputs, the published value (in
/// [`Mode::Published`]), and the value actually carried forward.
#[derive(Clone, Debug)]
pub struct TrackedConstant {
    pub name: &'static str,
    pub derived: RealBall,
    pub published: Option<RealBall>,
    pub used: RealBall,
}

impl TrackedConstant {
    fn new(name: &'static str, derived: RealBall, published: &str, mode: Mode) -> Result<Self> {
        let prec = derived.precision();
        match mode {
            Mode::Certified => Ok(TrackedConstant {
                name,
                used: derived.upper_point(),
                derived,
                published: None,
            }),
            Mode::Published => {
                let value = RealBall::parse_decimal(published, prec)?;
                if !derived.certainly_le(&value) {
                    return Err(Error::PublishedBoundViolated {
                        name,
                        published: published.to_string(),
                        derived: derived.to_sci(8),
                    });
                }
                Ok(TrackedConstant {
                    name,
                    derived,
                    published: Some(value.clone()),
                    used: value,
                })
            }
        }
    }

    /// `factor · base`. In [`Mode::Published`] the comparison with the
    /// published value is made exactly on the two decimal literals, since the
    /// published multiple is often equal to the derived one.
    fn multiple(
        name: &'static str,
        factor: u32,
        base: &TrackedConstant,
        base_published: &str,
        published: &str,
        mode: Mode,
    ) -> Result<Self> {
        let derived = base.used.mul_int(factor);
        match mode {
            Mode::Certified => TrackedConstant::new(name, derived, published, mode),
            Mode::Published => {
                if !decimal_multiple_le(factor, base_published, published)? {
                    return Err(Error::PublishedBoundViolated {
                        name,
                        published: published.to_string(),
                        derived: format!("{factor}·{base_published}"),
                    });
                }
                let value = RealBall::parse_decimal(published, derived.precision())?;
                Ok(TrackedConstant {
                    name,
                    derived,
                    published: Some(value.clone()),
                    used: value,
                })
            }
        }
    }
}

/// Exact test of `factor · lhs <= rhs` for decimal literals.
fn decimal_multiple_le(factor: u32, lhs: &str, rhs: &str) -> Result<bool> {
    let (a, ea) = parse_decimal_parts(lhs)?;
    let (b, eb) = parse_decimal_parts(rhs)?;
    let a = a * factor;
    let e = ea.min(eb);
    let scale = |m: BigInt, ex: i64| m * BigInt::from(10).pow((ex - e) as u32);
    Ok(scale(a, ea) <= scale(b, eb))
}

/// Inclusive range of `n` allowed by
/// `(l1+l2)·log 10 - 3 < n·log alpha < (l1+l2)·log 10 + 1`.
/// Endpoints are rounded outward, so the range can only be too wide.
pub fn size_relation(l_total: u64, cubic: &CubicData) -> Result<(u64, u64)> {
    if l_total < 2 {
        return Err(Error::InvalidInput("l1 + l2 must be at least 2".into()));
    }
    let prec = cubic.precision;
    let l_log10 = RealBall::ln_int(10, prec)?.mul_int(l_total);
    let low = (&l_log10 - &RealBall::from_int(3, prec)).checked_div(&cubic.log_alpha)?;
    let high = (&l_log10 + &RealBall::one(prec)).checked_div(&cubic.log_alpha)?;
    let n_min: BigInt = low.floor_lower() + 1;
    let n_max: BigInt = high.ceil_upper() - 1;
    let to_u64 = |v: BigInt| {
        v.to_u64()
            .ok_or_else(|| Error::InvalidInput("size relation out of range".into()))
    };
    Ok((to_u64(n_min.max(BigInt::from(0)))?, to_u64(n_max)?))
}

/// Smallest `n0` such that `(n·log alpha + 3)/log 10 < n` for all `n >= n0`,
/// i.e. the size relation forces `l1 + l2 < n` from there on.
pub fn l_total_below_n_from(cubic: &CubicData) -> Result<u64> {
    let prec = cubic.precision;
    let gap = &RealBall::ln_int(10, prec)? - &cubic.log_alpha;
    let threshold = RealBall::from_int(3, prec).checked_div(&gap)?;
    threshold
        .floor_lower()
        .to_u64()
        .map(|f| f + 1)
        .ok_or_else(|| Error::InvalidInput("threshold out of range".into()))
}

/// `((1 + log n0)/log n0)^2`, the factor with `(1 + log n)^2 <= F·(log n)^2`
/// for every `n >= n0`.
pub fn absorption_factor(n0: u64, prec: Precision) -> Result<RealBall> {
    let l = RealBall::ln_int(n0, prec)?;
    (&l + &RealBall::one(prec))
        .checked_div(&l)
        .map(|r| r.square())
}

#[derive(Clone, Debug)]
pub struct Step1Report {
    pub mode: Mode,
    /// Uniform bound on `h(9a/d1)`.
    pub height: TrackedConstant,
    pub a1: TrackedConstant,
    pub a2: RealBall,
    pub a3: RealBall,
    /// Coefficient of `(1 + log n)` in the Matveev bound.
    pub matveev: TrackedConstant,
    /// Coefficient `c` in `l1·log 10 < c·(1 + log n)`.
    pub l1_log10: TrackedConstant,
}

impl Step1Report {
    pub fn l1_bound(&self) -> SymbolicBound {
        SymbolicBound::one_plus_log(self.l1_log10.used.clone(), 1)
    }
}

/// Bounds `l1·log 10` through `Lambda_1`.
pub fn step1_l1_bound(mode: Mode, cubic: &CubicData) -> Result<Step1Report> {
    let prec = cubic.precision;
    let ln10 = RealBall::ln_int(10, prec)?;

    // h(9a/d1) <= h(9) + h(a) + h(d1) is largest at d1 = 9.
    let mut h = height_eta1_step1(1, prec)?;
    for d1 in 2..=9 {
        h = h.max(&height_eta1_step1(d1, prec)?);
    }
    let height = TrackedConstant::new("step1.height", h, published::STEP1_HEIGHT, mode)?;
    let a1 = TrackedConstant::multiple(
        "step1.A1",
        3,
        &height,
        published::STEP1_HEIGHT,
        published::STEP1_A1,
        mode,
    )?;
    for d1 in 1..=9u32 {
        let eta1 = cubic.a.mul_int(9).div_int(d1)?;
        if !eta1.ln()?.abs().certainly_le(&a1.used) {
            return Err(Error::Precondition(format!(
                "A_1 does not dominate |log(9a/{d1})|"
            )));
        }
    }
    let a2 = cubic.log_alpha.upper_point();
    let a3 = ln10.mul_int(3).upper_point();

    let input = MatveevInput {
        t: 3,
        degree: 3,
        b: ExponentBound::SymbolicN,
        a: vec![
            SymbolicBound::constant(a1.used.clone()),
            SymbolicBound::constant(a2.clone()),
            SymbolicBound::constant(a3.clone()),
        ],
    };
    let v = matveev_bound(&input, prec)?;
    debug_assert_eq!(v.log_power, 1);
    let matveev = TrackedConstant::new(
        "step1.matveev",
        v.coefficient,
        published::STEP1_MATVEEV,
        mode,
    )?;

    // l1·log 10 < log 30 + V·(1 + log n) <= (V + log 30)·(1 + log n).
    let derived = SymbolicBound::one_plus_log(matveev.used.clone(), 1)
        .absorb(&RealBall::ln_int(30, prec)?)?
        .coefficient;
    let l1_log10 =
        TrackedConstant::new("step1.l1_log10", derived, published::STEP1_L1_LOG10, mode)?;

    Ok(Step1Report {
        mode,
        height,
        a1,
        a2,
        a3,
        matveev,
        l1_log10,
    })
}

#[derive(Clone, Debug)]
pub struct Step2Report {
    pub mode: Mode,
    /// Coefficient of `(1 + log n)` bounding `h(eta_1)`.
    pub height: TrackedConstant,
    /// Coefficient of `(1 + log n)` bounding `|log eta_1|`.
    pub log_eta1: RealBall,
    pub a1: TrackedConstant,
    /// Coefficient of `(1 + log n)^2` in the Matveev bound.
    pub matveev: TrackedConstant,
    /// `F` with `(1 + log n)^2 <= F·(log n)^2` for `n > 500`.
    pub absorption: RealBall,
    /// Coefficient `c` in `n < c·(log n)^2`.
    pub n_coefficient: TrackedConstant,
}

impl Step2Report {
    pub fn n_bound(&self) -> SymbolicBound {
        SymbolicBound::log(self.n_coefficient.used.clone(), 2)
    }
}

/// Bounds `n` through `Lambda_2`, given the step-1 bound on `l1·log 10`.
pub fn step2_n_bound(step1: &Step1Report, cubic: &CubicData) -> Result<Step2Report> {
    let mode = step1.mode;
    let prec = cubic.precision;
    let c1 = &step1.l1_log10.used;
    let ln2 = crate::algebraic::ln2(prec);
    let ln9 = RealBall::ln_int(9, prec)?;

    let height = TrackedConstant::new(
        "step2.height",
        height_eta1_step2_uniform(c1)?,
        published::STEP2_HEIGHT,
        mode,
    )?;
    // |log eta_1| <= l1·log 10 + log d1 + |log(1 - (d1-d2)/(d1·10^l1))| + |log 9a|
    //            <= c1·(1 + log n) + log 9 + log 2 + |log 9a|.
    let log_9a = cubic.a.mul_int(9).ln()?.abs();
    let log_eta1 = &(&(c1 + &ln9) + &ln2) + &log_9a;
    if !log_eta1.certainly_lt(&height.used.mul_int(3)) {
        return Err(Error::Precondition(
            "D·h(eta_1) bound does not dominate |log eta_1|".into(),
        ));
    }
    let a1 = TrackedConstant::multiple(
        "step2.A1",
        3,
        &height,
        published::STEP2_HEIGHT,
        published::STEP2_A1,
        mode,
    )?;
    let input = MatveevInput {
        t: 3,
        degree: 3,
        b: ExponentBound::SymbolicN,
        a: vec![
            SymbolicBound::one_plus_log(a1.used.clone(), 1),
            SymbolicBound::constant(step1.a2.clone()),
            SymbolicBound::constant(step1.a3.clone()),
        ],
    };
    let v = matveev_bound(&input, prec)?;
    debug_assert_eq!(v.log_power, 2);
    let matveev = TrackedConstant::new(
        "step2.matveev",
        v.coefficient,
        published::STEP2_MATVEEV,
        mode,
    )?;

    // n·log alpha - log 4 < V·(1 + log n)^2, and for n >= 501:
    // n < ((V·F + log 4/(log 501)^2) / log alpha)·(log n)^2.
    let n0 = published::SEARCH_CUTOFF + 1;
    let absorption = absorption_factor(n0, prec)?;
    let log4_term =
        RealBall::ln_int(4, prec)?.checked_div(&RealBall::ln_int(n0, prec)?.square())?;
    let derived = (&(&matveev.used * &absorption) + &log4_term).checked_div(&cubic.log_alpha)?;
    let n_coefficient = TrackedConstant::new("step2.n", derived, published::STEP2_N, mode)?;

    Ok(Step2Report {
        mode,
        height,
        log_eta1,
        a1,
        matveev,
        absorption,
        n_coefficient,
    })
}

#[derive(Clone, Debug)]
pub struct InitialBounds {
    pub mode: Mode,
    pub step1: Step1Report,
    pub step2: Step2Report,
    pub n_max: TrackedConstant,
    pub l_total_max: TrackedConstant,
}

/// Chains both steps, the Gúzman Sánchez–Luca collapse with `r = 2` and the
/// size relation into absolute bounds on `n` and `l1 + l2`.
pub fn initial_bounds(mode: Mode, cubic: &CubicData) -> Result<InitialBounds> {
    let prec = cubic.precision;
    let step1 = step1_l1_bound(mode, cubic)?;
    let step2 = step2_n_bound(&step1, cubic)?;
    let n_max = TrackedConstant::new(
        "n_max",
        guzman_luca(2, &step2.n_coefficient.used)?,
        published::N_MAX,
        mode,
    )?;
    // (l1 + l2)·log 10 - 3 < n·log alpha
    let l_total = (&(&n_max.used * &cubic.log_alpha) + &RealBall::from_int(3, prec))
        .checked_div(&RealBall::ln_int(10, prec)?)?;
    let l_total_max = TrackedConstant::new("l_total_max", l_total, published::L_TOTAL_MAX, mode)?;
    Ok(InitialBounds {
        mode,
        step1,
        step2,
        n_max,
        l_total_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> std::sync::Arc<CubicData> {
        CubicData::cached(Precision::from_digits(60)).unwrap()
    }

    #[test]
    fn exact_decimal_multiples() {
        assert!(decimal_multiple_le(3, "5.44", "16.32").unwrap());
        assert!(decimal_multiple_le(3, "1.48e30", "4.44e30").unwrap());
        assert!(!decimal_multiple_le(3, "1.48e30", "4.43e30").unwrap());
        assert!(decimal_multiple_le(2, "0.5", "1").unwrap());
    }

    #[test]
    fn size_relation_examples() {
        let c = cubic();
        let (lo, hi) = size_relation(2, &c).unwrap();
        assert!(lo <= 11 && 11 <= hi);
        // (2 log 10 - 3)/log alpha ~ 5.71, (2 log 10 + 1)/log alpha ~ 19.93
        assert_eq!((lo, hi), (6, 19));
        let (lo, hi) = size_relation(3, &c).unwrap();
        assert!(lo <= 19 && 19 <= hi);
        assert!(size_relation(1, &c).is_err());
    }

    #[test]
    fn l_total_below_n() {
        assert_eq!(l_total_below_n_from(&cubic()).unwrap(), 2);
    }

    #[test]
    fn absorption_at_501() {
        let f = absorption_factor(501, Precision::from_digits(30)).unwrap();
        assert!(f.certainly_le(&RealBall::parse_decimal("1.35", f.precision()).unwrap()));
        let f500 = absorption_factor(500, Precision::from_digits(30)).unwrap();
        assert!(f.certainly_lt(&f500));
    }

    #[test]
    fn published_mode_reuses_reference_values() {
        let c = cubic();
        let s1 = step1_l1_bound(Mode::Published, &c).unwrap();
        assert_eq!(s1.l1_log10.used.to_sci(3), "1.46e30");
        assert_eq!(s1.l1_bound().log_power, 1);
        let s2 = step2_n_bound(&s1, &c).unwrap();
        assert_eq!(s2.n_coefficient.used.to_sci(3), "1.70e44");
        assert_eq!(s2.n_bound().log_power, 2);
    }

    #[test]
    fn certified_mode_is_tighter() {
        let c = cubic();
        let cert = initial_bounds(Mode::Certified, &c).unwrap();
        let paper = initial_bounds(Mode::Published, &c).unwrap();
        assert!(cert.n_max.used.certainly_le(&paper.n_max.used));
        assert!(cert.l_total_max.used.certainly_le(&paper.l_total_max.used));
        assert!(cert
            .step1
            .matveev
            .used
            .certainly_le(&paper.step1.matveev.used));
    }
}
