//! Continued fractions with exactly certified partial quotients.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::{with_escalation, Precision, RealBall};
use crate::error::{Error, Result};

/// Exact convergent `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convergent {
    #[serde(with = "crate::bigint_serde::signed")]
    pub p: BigInt,
    #[serde(with = "crate::bigint_serde::unsigned")]
    pub q: BigUint,
}

/// How far to expand.
#[derive(Clone, Debug)]
pub enum Target {
    /// At least this many partial quotients.
    Terms(usize),
    /// Up to the first denominator strictly above `above`, then `extra`
    /// further convergents.
    Denominator { above: BigUint, extra: usize },
}

/// `[a_0; a_1, a_2, ...]` and its convergents. Convergents are addressed by
/// 1-based ordinal: ordinal 1 is `a_0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub quotients: Vec<BigInt>,
    pub convergents: Vec<Convergent>,
    /// Precision at which the quotients were certified; `None` for an exact
    /// rational expansion.
    pub source_precision: Option<Precision>,
    /// True when the expansion is the complete expansion of a rational.
    pub terminated: bool,
}

/// Euclid on `num/den` (`den > 0`), at most `limit` quotients. The flag is
/// true when the expansion terminated.
fn euclid(num: &BigInt, den: &BigInt, limit: usize) -> (Vec<BigInt>, bool) {
    let (mut a, mut b) = (num.clone(), den.clone());
    let mut out = Vec::new();
    while !b.is_zero() {
        if out.len() == limit {
            return (out, false);
        }
        let (q, r) = a.div_mod_floor(&b);
        out.push(q);
        a = b;
        b = r;
    }
    (out, true)
}

impl ContinuedFraction {
    fn from_quotients(
        quotients: Vec<BigInt>,
        source_precision: Option<Precision>,
        terminated: bool,
    ) -> Self {
        let mut convergents = Vec::with_capacity(quotients.len());
        let (mut p2, mut p1) = (BigInt::zero(), BigInt::one());
        let (mut q2, mut q1) = (BigInt::one(), BigInt::zero());
        for a in &quotients {
            let p = a * &p1 + &p2;
            let q = a * &q1 + &q2;
            convergents.push(Convergent {
                p: p.clone(),
                q: q.to_biguint().expect("denominators are positive"),
            });
            (p2, p1) = (p1, p);
            (q2, q1) = (q1, q);
        }
        ContinuedFraction {
            quotients,
            convergents,
            source_precision,
            terminated,
        }
    }

    /// Complete expansion of `p/q`.
    pub fn from_rational(p: &BigInt, q: &BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let (p, q) = if q.is_negative() {
            (-p, -q)
        } else {
            (p.clone(), q.clone())
        };
        let (quotients, _) = euclid(&p, &q, usize::MAX);
        Ok(Self::from_quotients(quotients, None, true))
    }

    /// The quotients shared by every real in `x`.
    ///
    /// Both endpoints are exact dyadic rationals. If their expansions agree
    /// on `a_0..a_k` and both continue past `a_k`, then both endpoints lie in
    /// the open cylinder of that prefix; cylinders are intervals, so every
    /// point of `x` has the same prefix.
    pub fn certified_prefix(x: &RealBall, limit: usize) -> Self {
        let den = BigInt::from_biguint(Sign::Plus, BigUint::one() << x.precision().bits());
        let (lo, lo_done) = euclid(&x.lower_ulps(), &den, limit.saturating_add(1));
        if x.is_exact() {
            let mut q = lo;
            let done = lo_done && q.len() <= limit;
            q.truncate(limit);
            return Self::from_quotients(q, Some(x.precision()), done);
        }
        let (hi, _) = euclid(&x.upper_ulps(), &den, limit.saturating_add(1));
        let mut common = lo.iter().zip(&hi).take_while(|(a, b)| a == b).count();
        // The last shared quotient is certified only if both expansions go on.
        if common == lo.len() || common == hi.len() {
            common = common.saturating_sub(1);
        }
        let quotients = lo[..common.min(limit)].to_vec();
        Self::from_quotients(quotients, Some(x.precision()), false)
    }

    fn meets(&self, target: &Target) -> bool {
        if self.terminated {
            return true;
        }
        match target {
            Target::Terms(n) => self.quotients.len() >= *n,
            Target::Denominator { above, extra } => self
                .convergents
                .iter()
                .position(|c| &c.q > above)
                .is_some_and(|i| self.convergents.len() > i + extra),
        }
    }

    /// Expands the real number computed by `x_at` until `target` is met,
    /// doubling the precision from `start` when too few quotients are
    /// certified.
    pub fn expand(
        x_at: impl Fn(Precision) -> Result<RealBall>,
        target: &Target,
        start: Precision,
    ) -> Result<Self> {
        with_escalation(start, |prec| {
            let x = x_at(prec)?;
            // Each quotient of a typical real costs a few bits; this cap is
            // far above what the precision can support.
            let cf = Self::certified_prefix(&x, prec.bits() as usize);
            if cf.meets(target) {
                Ok(cf)
            } else {
                Err(Error::undecided(
                    format!("only {} certified partial quotients", cf.quotients.len()),
                    prec.bits(),
                ))
            }
        })
    }

    /// Convergent by 1-based ordinal.
    pub fn nth_convergent(&self, ordinal: usize) -> Option<&Convergent> {
        ordinal.checked_sub(1).and_then(|i| self.convergents.get(i))
    }

    /// 1-based ordinal of the first convergent with `q > bound`.
    pub fn first_denominator_above(&self, bound: &BigUint) -> Option<usize> {
        self.convergents
            .iter()
            .position(|c| &c.q > bound)
            .map(|i| i + 1)
    }

    /// Checks the recurrences, coprimality and monotone denominators.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidInput(msg));
        let (mut p2, mut p1) = (BigInt::zero(), BigInt::one());
        let (mut q2, mut q1) = (BigInt::one(), BigInt::zero());
        for (k, (a, c)) in self.quotients.iter().zip(&self.convergents).enumerate() {
            if k > 0 && !a.is_positive() {
                return fail(format!("quotient {k} is not positive"));
            }
            let p = a * &p1 + &p2;
            let q = a * &q1 + &q2;
            if c.p != p || BigInt::from(c.q.clone()) != q {
                return fail(format!("convergent {} breaks the recurrence", k + 1));
            }
            if !c.p.gcd(&q).is_one() {
                return fail(format!("convergent {} is not reduced", k + 1));
            }
            if k >= 2 && q <= q1 {
                return fail(format!("denominator {} does not increase", k + 1));
            }
            (p2, p1) = (p1, p);
            (q2, q1) = (q1, q);
        }
        if self.quotients.len() != self.convergents.len() {
            return fail("quotient and convergent counts differ".into());
        }
        Ok(())
    }
}
