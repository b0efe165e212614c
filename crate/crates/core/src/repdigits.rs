//! Two-block repdigit concatenations: `d1` repeated `l1` times followed by
//! `d2` repeated `l2` times, with `d1 != d2` and `d1 >= 1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawConcat")]
pub struct RepdigitConcat {
    d1: u8,
    d2: u8,
    l1: u64,
    l2: u64,
}

#[derive(Deserialize)]
struct RawConcat {
    d1: u8,
    d2: u8,
    l1: u64,
    l2: u64,
}

impl TryFrom<RawConcat> for RepdigitConcat {
    type Error = Error;
    fn try_from(r: RawConcat) -> Result<Self> {
        RepdigitConcat::new(r.d1, r.d2, r.l1, r.l2)
    }
}

impl RepdigitConcat {
    pub fn new(d1: u8, d2: u8, l1: u64, l2: u64) -> Result<Self> {
        if !(1..=9).contains(&d1) {
            return Err(Error::InvalidInput(format!(
                "leading digit {d1} not in 1..=9"
            )));
        }
        if d2 > 9 {
            return Err(Error::InvalidInput(format!("digit {d2} not in 0..=9")));
        }
        if d1 == d2 {
            return Err(Error::InvalidInput(
                "the two blocks need distinct digits".into(),
            ));
        }
        if l1 == 0 || l2 == 0 {
            return Err(Error::InvalidInput("block lengths must be positive".into()));
        }
        Ok(RepdigitConcat { d1, d2, l1, l2 })
    }

    pub fn d1(&self) -> u8 {
        self.d1
    }

    pub fn d2(&self) -> u8 {
        self.d2
    }

    pub fn l1(&self) -> u64 {
        self.l1
    }

    pub fn l2(&self) -> u64 {
        self.l2
    }

    /// `d1·(10^l1 - 1)/9 · 10^l2 + d2·(10^l2 - 1)/9`.
    pub fn value(&self) -> BigUint {
        let ten = BigUint::from(10u32);
        let rep = |d: u8, l: u64| (ten.pow(l as u32) - 1u32) / 9u32 * d;
        rep(self.d1, self.l1) * ten.pow(self.l2 as u32) + rep(self.d2, self.l2)
    }

    /// Decimal length of [`value`](Self::value).
    pub fn size_of_value(&self) -> u64 {
        self.l1 + self.l2
    }
}

impl fmt::Display for RepdigitConcat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}^{} {}^{})", self.d1, self.l1, self.d2, self.l2)
    }
}

/// Recognizes `n` as a two-block concatenation by run-length encoding its
/// decimal string. Run boundaries are digit changes, so a match is unique.
pub fn parse_concat(n: &BigUint) -> Option<RepdigitConcat> {
    if n.is_zero() {
        return None;
    }
    let s = n.to_str_radix(10);
    let bytes = s.as_bytes();
    let mut runs: Vec<(u8, u64)> = Vec::with_capacity(2);
    for &b in bytes {
        match runs.last_mut() {
            Some((d, len)) if *d == b => *len += 1,
            _ => {
                if runs.len() == 2 {
                    return None;
                }
                runs.push((b, 1));
            }
        }
    }
    match runs.as_slice() {
        [(a, la), (b, lb)] => RepdigitConcat::new(a - b'0', b - b'0', *la, *lb).ok(),
        _ => None,
    }
}
