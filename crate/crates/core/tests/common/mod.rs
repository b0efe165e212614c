//! Independent oracles shared by the integration tests and the acceptance
//! runner.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use padrep::algebraic::CubicData;
use padrep::bounds::guzman_luca;
use padrep::reduction::{dp_reduce, ContinuedFraction, ReductionParams, Selection, Target};
use padrep::sequences::{binet_error, power_sandwich};
use padrep::{Error, Precision, RealBall, RepdigitConcat};

/// Every two-block concatenation with value at most `limit`, built from
/// the digits rather than parsed.
pub fn enumerate_concats(limit: &BigUint) -> Vec<RepdigitConcat> {
    let digits = limit.to_string().len() as u64;
    let mut out = Vec::new();
    for total in 2..=digits {
        for l1 in 1..total {
            for d1 in 1..=9u8 {
                for d2 in 0..=9u8 {
                    if d1 == d2 {
                        continue;
                    }
                    let rc = RepdigitConcat::new(d1, d2, l1, total - l1).unwrap();
                    if &rc.value() <= limit {
                        out.push(rc);
                    }
                }
            }
        }
    }
    out
}

/// Compares `parse_concat` on `lo..=hi` with a string-based recognizer.
/// Returns the mismatching integers.
pub fn recognition_cross_check(lo: u64, hi: u64) -> Vec<u64> {
    let table: BTreeMap<u64, RepdigitConcat> = enumerate_concats(&BigUint::from(hi))
        .into_iter()
        .map(|rc| (rc.value().try_into().unwrap(), rc))
        .collect();
    (lo..=hi)
        .filter(|&n| {
            let parsed = padrep::parse_concat(&BigUint::from(n));
            parsed != table.get(&n).copied()
                || parsed.is_some_and(|rc| rc.value() != BigUint::from(n))
        })
        .collect()
}

/// Indices in `1..=n_max` where either analytic estimate fails to certify.
pub fn binet_and_sandwich_failures(n_max: u64) -> Vec<(u64, String)> {
    let cubic = CubicData::cached(Precision::from_digits(300)).unwrap();
    let mut failures = Vec::new();
    for n in 1..=n_max {
        match binet_error(n, &cubic) {
            Ok(c) if c.holds => {}
            Ok(_) => failures.push((n, "Binet error bound fails".into())),
            Err(e) => failures.push((n, e.to_string())),
        }
        match power_sandwich(n, &cubic) {
            Ok(c) if c.holds => {}
            Ok(_) => failures.push((n, "power sandwich fails".into())),
            Err(e) => failures.push((n, e.to_string())),
        }
    }
    failures
}

#[derive(Debug)]
pub enum GuzmanLucaCase {
    /// The precondition `H > (4r^2)^r` fails and the bound was refused.
    Refused { r: u32, h: u64 },
    /// Every integer `L` in `2..=scanned` with `H > L/(log L)^r` satisfied
    /// `L < bound`, except the listed ones.
    Checked {
        r: u32,
        h: u64,
        bound: f64,
        scanned: u64,
        counterexamples: Vec<u64>,
    },
}

/// `H > L/(log L)^r`, decided in ball arithmetic.
fn gl_hypothesis(r: u32, h: u64, l: u64) -> bool {
    let p = Precision::from_bits(128);
    let lhs = RealBall::from_int(h, p);
    let rhs = RealBall::from_int(l, p)
        .checked_div(&RealBall::ln_int(l, p).unwrap().powi(r as i64).unwrap())
        .unwrap();
    match lhs.cmp_certain(&rhs) {
        Some(std::cmp::Ordering::Greater) => true,
        Some(_) => false,
        None => panic!("undecided comparison at L = {l}"),
    }
}

/// Scans integer `L` for the cases `r ∈ {1, 2}`, `H ∈ {20, 50, 300}`.
///
/// `L/(log L)^r` increases for `L > e^r`, so scanning to ten times the
/// bound covers every `L` satisfying the hypothesis.
pub fn guzman_luca_scan() -> Vec<GuzmanLucaCase> {
    let mut cases = Vec::new();
    for r in [1u32, 2] {
        for h in [20u64, 50, 300] {
            let ball = RealBall::from_int(h, Precision::from_bits(128));
            match guzman_luca(r, &ball) {
                Err(Error::Precondition(_)) => cases.push(GuzmanLucaCase::Refused { r, h }),
                Err(e) => panic!("unexpected error {e}"),
                Ok(bound) => {
                    let bound_f = bound.upper_point().to_f64();
                    let scanned = (bound_f * 10.0).ceil() as u64;
                    let bound_int = bound.floor_lower();
                    let counterexamples = (2..=scanned)
                        .filter(|&l| {
                            // Only values near the bound need the exact test.
                            BigInt::from(l) >= bound_int && gl_hypothesis(r, h, l)
                        })
                        .collect();
                    cases.push(GuzmanLucaCase::Checked {
                        r,
                        h,
                        bound: bound_f,
                        scanned,
                        counterexamples,
                    });
                }
            }
        }
    }
    cases
}

/// One toy reduction checked by exhaustive scan.
#[derive(Debug)]
pub struct DpToyReport {
    pub description: String,
    pub w_bound: i64,
    pub pairs_checked: u64,
    /// `(u, v)` with `0 < |u·tau - v + mu| < A·B^-(w_bound+1)`.
    pub violations: Vec<(u64, i64)>,
}

pub struct DpToy {
    pub description: String,
    pub tau: Box<dyn Fn(Precision) -> padrep::Result<RealBall>>,
    pub mu: (i64, i64),
    pub a: u32,
    pub b: u32,
    pub m: u32,
}

/// Runs the reduction on `toy`, then checks every `u <= M` and the integers
/// `v` next to `u·tau + mu`: none may satisfy `|Gamma| < A·B^-(w_bound+1)`.
/// Farther `v` give `|Gamma| > 1/2`, and the exclusion then holds for all
/// larger `w` as well. `None` when no admissible convergent has `epsilon > 0`.
pub fn dp_toy_check(toy: &DpToy) -> Option<DpToyReport> {
    let p = Precision::from_bits(256);
    let tau = (toy.tau)(p).unwrap();
    let cf = ContinuedFraction::expand(&toy.tau, &Target::Terms(60), p).unwrap();
    let mu = RealBall::from_ratio(&toy.mu.0.into(), &toy.mu.1.into(), p).unwrap();
    let params = ReductionParams {
        tau: tau.clone(),
        mu: mu.clone(),
        a: RealBall::from_int(toy.a, p),
        b: RealBall::from_int(toy.b, p),
        m: BigUint::from(toy.m),
    };
    let outcome = match dp_reduce(&params, &cf, Selection::Tightest) {
        Ok(o) => o,
        Err(Error::EpsilonNonPositive { .. }) => return None,
        Err(e) => panic!("{}: {e}", toy.description),
    };
    let w = outcome.w_bound + 1;
    let a = RealBall::from_int(toy.a, p);
    let threshold = if w >= 0 {
        a.checked_div(&RealBall::from_int(toy.b, p).powi(w).unwrap())
            .unwrap()
    } else {
        &a * &RealBall::from_int(toy.b, p).powi(-w).unwrap()
    };
    let mut violations = Vec::new();
    let mut pairs = 0;
    for u in 0..=u64::from(toy.m) {
        let x = &tau.mul_int(u) + &mu;
        let centre = x.floor_lower();
        for dv in -1i64..=2 {
            let v = &centre + dv;
            let gamma = (&x - &RealBall::from_int(v.clone(), p)).abs();
            pairs += 1;
            if gamma.contains_zero() {
                // Gamma = 0 is outside the lemma's scope; it cannot happen
                // for irrational tau and non-integral mu unless u = 0.
                assert!(!gamma.is_positive());
                continue;
            }
            match gamma.cmp_certain(&threshold) {
                Some(std::cmp::Ordering::Less) => {
                    violations.push((u, i64::try_from(v).unwrap()));
                }
                Some(_) => {}
                None => panic!("undecided comparison at u = {u}"),
            }
        }
    }
    Some(DpToyReport {
        description: toy.description.clone(),
        w_bound: outcome.w_bound,
        pairs_checked: pairs,
        violations,
    })
}

/// `sqrt(k)` for a non-square `k`, or the real cube root of a non-cube.
fn random_algebraic(
    rng: &mut StdRng,
) -> (String, Box<dyn Fn(Precision) -> padrep::Result<RealBall>>) {
    loop {
        let k: u32 = rng.gen_range(2..=60);
        if rng.gen_bool(0.5) {
            let s = (k as f64).sqrt().round() as u32;
            if s * s != k {
                return (
                    format!("sqrt({k})"),
                    Box::new(move |p| RealBall::from_int(k, p).sqrt()),
                );
            }
        } else {
            let c = (k as f64).cbrt().round() as u32;
            if c * c * c != k {
                return (
                    format!("cbrt({k})"),
                    Box::new(move |p| RealBall::from_int(k, p).nth_root(3)),
                );
            }
        }
    }
}

/// `count` random toy reductions with `M <= 100`, from a fixed seed.
/// Instances where no admissible convergent has `epsilon > 0` are redrawn.
pub fn dp_random_toys(seed: u64, count: usize) -> (Vec<DpToyReport>, usize) {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut reports = Vec::new();
    let mut redrawn = 0;
    while reports.len() < count {
        let (name, tau) = random_algebraic(&mut rng);
        let den: i64 = rng.gen_range(2..=11);
        let num: i64 = loop {
            let n = rng.gen_range(-20..=20);
            if n % den != 0 {
                break n;
            }
        };
        let toy = DpToy {
            description: String::new(),
            tau,
            mu: (num, den),
            a: rng.gen_range(1..=20),
            b: rng.gen_range(2..=10),
            m: rng.gen_range(5..=100),
        };
        let toy = DpToy {
            description: format!(
                "tau={name} mu={num}/{den} A={} B={} M={}",
                toy.a, toy.b, toy.m
            ),
            ..toy
        };
        match dp_toy_check(&toy) {
            Some(r) => reports.push(r),
            None => redrawn += 1,
        }
        assert!(redrawn < 100, "too many instances without positive epsilon");
    }
    (reports, redrawn)
}
