use crate::algebraic::{Precision, RealBall};
use crate::error::{Error, Result};

use super::SymbolicBound;

/// Bound `B >= max |b_i|` on the exponents.
#[derive(Clone, Debug)]
pub enum ExponentBound {
    Value(RealBall),
    /// `B = n`, kept symbolic: contributes a factor `1 + log n`.
    SymbolicN,
}

/// Data for the Matveev-type lower bound
/// `log |eta_1^b_1 ··· eta_t^b_t - 1| > -1.4·30^(t+3)·t^4.5·D^2·(1 + log D)(1 + log B)·A_1···A_t`.
#[derive(Clone, Debug)]
pub struct MatveevInput {
    pub t: u32,
    /// Degree `D` of the real number field containing the `eta_i`.
    pub degree: u32,
    pub b: ExponentBound,
    /// `A_i >= max(D·h(eta_i), |log eta_i|, 0.16)`, possibly growing with `n`.
    pub a: Vec<SymbolicBound>,
}

impl MatveevInput {
    pub fn validate(&self) -> Result<()> {
        if self.t == 0 || self.degree == 0 {
            return Err(Error::InvalidInput("t and D must be positive".into()));
        }
        if self.a.len() != self.t as usize {
            return Err(Error::InvalidInput(format!(
                "expected {} values A_i, got {}",
                self.t,
                self.a.len()
            )));
        }
        for (i, a) in self.a.iter().enumerate() {
            let floor = RealBall::parse_decimal("0.16", a.coefficient.precision())?;
            if a.coefficient.certainly_lt(&floor) {
                return Err(Error::InvalidInput(format!(
                    "A_{} = {} is below 0.16",
                    i + 1,
                    a.coefficient
                )));
            }
            if a.log_power > 0 && a.form != super::LogForm::OnePlusLog {
                return Err(Error::InvalidInput(
                    "A_i must grow like (1 + log n)^k".into(),
                ));
            }
        }
        if let ExponentBound::Value(b) = &self.b {
            if !b.certainly_ge(&RealBall::one(b.precision())) {
                return Err(Error::InvalidInput("B must be >= 1".into()));
            }
        }
        Ok(())
    }
}

/// `1.4·30^(t+3)·t^4.5·D^2·(1 + log D)`.
pub fn matveev_constant(t: u32, degree: u32, prec: Precision) -> Result<RealBall> {
    if t == 0 || degree == 0 {
        return Err(Error::InvalidInput("t and D must be positive".into()));
    }
    let c = RealBall::parse_decimal("1.4", prec)?;
    let thirty = RealBall::from_int(30, prec).powi(t as i64 + 3)?;
    let tb = RealBall::from_int(t, prec);
    let t_pow = &tb.powi(4)? * &tb.sqrt()?;
    let d = RealBall::from_int(degree, prec);
    let d_factor = &d.square() * &(&RealBall::one(prec) + &d.ln()?);
    Ok(&(&(&c * &thirty) * &t_pow) * &d_factor)
}

/// The value `V` with `log |Lambda| > -V`, as a bound in `(1 + log n)`.
pub fn matveev_bound(input: &MatveevInput, prec: Precision) -> Result<SymbolicBound> {
    input.validate()?;
    let constant = matveev_constant(input.t, input.degree, prec)?;
    let mut acc = SymbolicBound::constant(constant);
    match &input.b {
        ExponentBound::Value(b) => {
            let factor = &RealBall::one(prec) + &b.ln()?;
            acc = acc.mul(&SymbolicBound::constant(factor))?;
        }
        ExponentBound::SymbolicN => {
            acc = acc.mul(&SymbolicBound::one_plus_log(RealBall::one(prec), 1))?;
        }
    }
    let floor = RealBall::parse_decimal("0.16", prec)?;
    for a in &input.a {
        // A ball straddling 0.16 (e.g. the literal itself) is replaced by a
        // point that dominates both.
        let a = if a.coefficient.certainly_ge(&floor) {
            a.clone()
        } else {
            SymbolicBound {
                coefficient: a.coefficient.hull(&floor).upper_point(),
                ..a.clone()
            }
        };
        acc = acc.mul(&a)?;
    }
    Ok(acc)
}

/// For `r >= 1` and `H > (4r^2)^r`, every `L` with `H > L / (log L)^r`
/// satisfies `L < 2^r·H·(log H)^r`. Returns that bound.
pub fn guzman_luca(r: u32, h: &RealBall) -> Result<RealBall> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    let prec = h.precision();
    let threshold = RealBall::from_int(4u64 * (r as u64).pow(2), prec).powi(r as i64)?;
    if !h.certainly_gt(&threshold) {
        return Err(Error::Precondition(format!(
            "H = {} is not certified > (4r^2)^r = {}",
            h.to_sci(6),
            threshold.to_sci(6)
        )));
    }
    let two_r = RealBall::from_int(2, prec).powi(r as i64)?;
    Ok(&(&two_r * h) * &h.ln()?.powi(r as i64)?)
}
