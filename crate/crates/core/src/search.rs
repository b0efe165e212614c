//! Exhaustive search over small indices and closure of the argument.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repdigits::{parse_concat, RepdigitConcat};
use crate::sequences::padovan;

/// `P_n` together with its two-block decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FlatRecord", into = "FlatRecord")]
pub struct SolutionRecord {
    pub n: u64,
    pub concat: RepdigitConcat,
    pub value: BigUint,
}

/// Serialized form: `{n, d1, d2, l1, l2, value}` with `value` a decimal
/// string.
#[derive(Clone, Serialize, Deserialize)]
struct FlatRecord {
    n: u64,
    d1: u8,
    d2: u8,
    l1: u64,
    l2: u64,
    value: String,
}

impl From<SolutionRecord> for FlatRecord {
    fn from(r: SolutionRecord) -> Self {
        FlatRecord {
            n: r.n,
            d1: r.concat.d1(),
            d2: r.concat.d2(),
            l1: r.concat.l1(),
            l2: r.concat.l2(),
            value: r.value.to_string(),
        }
    }
}

impl TryFrom<FlatRecord> for SolutionRecord {
    type Error = Error;
    fn try_from(f: FlatRecord) -> Result<Self> {
        let concat = RepdigitConcat::new(f.d1, f.d2, f.l1, f.l2)?;
        let value: BigUint = f
            .value
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad value {:?}", f.value)))?;
        if value != concat.value() {
            return Err(Error::InvalidInput(format!(
                "value {value} does not match {concat}"
            )));
        }
        Ok(SolutionRecord {
            n: f.n,
            concat,
            value,
        })
    }
}

/// Every `n` in `0..=n_max` with `P_n` a two-block concatenation, in
/// ascending order of `n`.
pub fn brute_force(n_max: u64) -> Vec<SolutionRecord> {
    // Fill the cache once so the parallel scan only reads.
    padovan(n_max);
    (0..=n_max)
        .into_par_iter()
        .filter_map(|n| {
            let value = padovan(n);
            parse_concat(&value).map(|concat| SolutionRecord { n, concat, value })
        })
        .collect()
}

/// `P_n = value(rc)`.
pub fn verify_solution(n: u64, rc: &RepdigitConcat) -> bool {
    padovan(n) == rc.value()
}

/// The reduced bound lies inside the searched range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Closure {
    pub n_reduced: u64,
    pub n_search: u64,
    pub closed: bool,
}

/// Succeeds when `n_reduced < n_search`: every solution then has
/// `n <= n_search` and was found by the search.
pub fn closure_check(n_reduced: u64, n_search: u64) -> Result<Closure> {
    if n_reduced >= n_search {
        return Err(Error::ClosureGap {
            reduced: n_reduced,
            cutoff: n_search,
        });
    }
    Ok(Closure {
        n_reduced,
        n_search,
        closed: true,
    })
}
