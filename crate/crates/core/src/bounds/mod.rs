//! Lower bounds for linear forms in logarithms and the initial bounds on
//! `n` and `l1 + l2` that they imply.

mod matveev;
mod steps;

pub use matveev::{guzman_luca, matveev_bound, matveev_constant, ExponentBound, MatveevInput};
pub use steps::{
    absorption_factor, initial_bounds, l_total_below_n_from, size_relation, step1_l1_bound,
    step2_n_bound, InitialBounds, Step1Report, Step2Report, TrackedConstant,
};

use serde::{Deserialize, Serialize};

use crate::algebraic::RealBall;
use crate::error::{Error, Result};

/// Which constants a pipeline run carries forward.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Certified upper bounds computed from the inputs.
    #[default]
    #[serde(rename = "certified")]
    Certified,
    /// The published reference constants, each checked against the value
    /// derived from its own inputs.
    #[serde(rename = "paper", alias = "paper-replication")]
    Published,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Certified => "certified",
            Mode::Published => "paper",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "certified" => Ok(Mode::Certified),
            "paper" | "paper-replication" => Ok(Mode::Published),
            other => Err(Error::InvalidInput(format!("unknown mode {other:?}"))),
        }
    }
}

/// Whether the logarithmic factor is `1 + log n` or `log n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogForm {
    OnePlusLog,
    Log,
}

/// `coefficient · (1 + log n)^log_power`, or `coefficient · (log n)^log_power`
/// for [`LogForm::Log`], as a function of `n`.
#[derive(Clone, Debug)]
pub struct SymbolicBound {
    pub coefficient: RealBall,
    pub log_power: u32,
    pub form: LogForm,
}

impl SymbolicBound {
    pub fn constant(coefficient: RealBall) -> Self {
        SymbolicBound {
            coefficient,
            log_power: 0,
            form: LogForm::OnePlusLog,
        }
    }

    pub fn one_plus_log(coefficient: RealBall, log_power: u32) -> Self {
        SymbolicBound {
            coefficient,
            log_power,
            form: LogForm::OnePlusLog,
        }
    }

    pub fn log(coefficient: RealBall, log_power: u32) -> Self {
        SymbolicBound {
            coefficient,
            log_power,
            form: LogForm::Log,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.log_power == 0
    }

    pub fn eval_at(&self, n: &RealBall) -> Result<RealBall> {
        let log_n = n.ln()?;
        let base = match self.form {
            LogForm::OnePlusLog => &log_n + &RealBall::one(n.precision()),
            LogForm::Log => log_n,
        };
        Ok(&self.coefficient * &base.powi(self.log_power as i64)?)
    }

    /// Product of two bounds of the same form (or where one is constant).
    pub fn mul(&self, other: &SymbolicBound) -> Result<SymbolicBound> {
        let form = match (self.is_constant(), other.is_constant()) {
            (true, _) => other.form,
            (_, true) => self.form,
            _ if self.form == other.form => self.form,
            _ => {
                return Err(Error::InvalidInput(
                    "cannot multiply bounds in (1 + log n) and log n".into(),
                ))
            }
        };
        Ok(SymbolicBound {
            coefficient: &self.coefficient * &other.coefficient,
            log_power: self.log_power + other.log_power,
            form,
        })
    }

    /// `c·(1+log n)^k + extra <= (c + extra)·(1+log n)^k` for `n >= 1`,
    /// `extra >= 0`.
    pub fn absorb(&self, extra: &RealBall) -> Result<SymbolicBound> {
        if self.form != LogForm::OnePlusLog {
            return Err(Error::InvalidInput(
                "absorb needs a (1 + log n) form".into(),
            ));
        }
        if extra.is_negative() {
            return Err(Error::InvalidInput(
                "absorbed term must be non-negative".into(),
            ));
        }
        Ok(SymbolicBound {
            coefficient: &self.coefficient + extra,
            ..self.clone()
        })
    }
}

impl std::fmt::Display for SymbolicBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = self.coefficient.to_sci(4);
        match (self.log_power, self.form) {
            (0, _) => write!(f, "{c}"),
            (1, LogForm::OnePlusLog) => write!(f, "{c}·(1 + log n)"),
            (k, LogForm::OnePlusLog) => write!(f, "{c}·(1 + log n)^{k}"),
            (1, LogForm::Log) => write!(f, "{c}·log n"),
            (k, LogForm::Log) => write!(f, "{c}·(log n)^{k}"),
        }
    }
}
