//! The analytic chain and the reductions, checked against reference values
//! and independent recomputation.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use padrep::algebraic::CubicData;
use padrep::bounds::{initial_bounds, matveev_bound, step1_l1_bound, ExponentBound, MatveevInput};
use padrep::published::{
    ROUND1_EPSILON, ROUND1_L1_BOUND, ROUND2_N_BOUND, TAU_CONVERGENT_ORDINAL, TAU_CONVERGENT_P,
    TAU_CONVERGENT_Q, TAU_QUOTIENTS,
};
use padrep::reduction::{
    dp_reduce, reduction_round1, round2_mu, tau, ContinuedFraction, ReductionParams,
    ReductionSetup, Target,
};
use padrep::{Mode, Precision, RealBall, Selection, SymbolicBound};

fn prec() -> Precision {
    Precision::from_digits(300)
}

fn matveev_value(input: &MatveevInput) -> f64 {
    let v = matveev_bound(input, Precision::from_bits(128)).unwrap();
    v.coefficient.to_f64()
}

#[test]
fn matveev_is_monotone_in_every_input() {
    let p = Precision::from_bits(128);
    let ball = |x: f64| RealBall::parse_decimal(&format!("{x:.6}"), p).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let t = rng.gen_range(1..=4u32);
        let degree = rng.gen_range(1..=6u32);
        let b = rng.gen_range(1.0..1e6f64);
        let a: Vec<f64> = (0..t).map(|_| rng.gen_range(0.16..1e3f64)).collect();
        let input = |t: u32, degree: u32, b: f64, a: &[f64]| MatveevInput {
            t,
            degree,
            b: ExponentBound::Value(ball(b)),
            a: a.iter()
                .map(|&x| SymbolicBound::constant(ball(x)))
                .collect(),
        };
        let base = matveev_value(&input(t, degree, b, &a));
        assert!(base > 0.0);
        assert!(matveev_value(&input(t, degree + 1, b, &a)) >= base);
        assert!(matveev_value(&input(t, degree, b * 2.0, &a)) >= base);
        let i = rng.gen_range(0..a.len());
        let mut bigger = a.clone();
        bigger[i] *= 1.5;
        assert!(matveev_value(&input(t, degree, b, &bigger)) >= base);
        let mut longer = a.clone();
        longer.push(0.16);
        assert!(matveev_value(&input(t + 1, degree, b, &longer)) >= base);
    }
}

#[test]
fn step1_product_matches_direct_evaluation() {
    let cubic = CubicData::cached(prec()).unwrap();
    let step1 = step1_l1_bound(Mode::Published, &cubic).unwrap();
    let log_alpha = cubic.log_alpha.to_f64();
    let direct = 1.4
        * 30f64.powi(6)
        * 3f64.powf(4.5)
        * 9.0
        * (1.0 + 3f64.ln())
        * 16.32
        * log_alpha
        * (3.0 * 10f64.ln());
    let derived = step1.matveev.derived.to_f64();
    assert!(
        (derived / direct - 1.0).abs() < 1e-12,
        "{derived} vs {direct}"
    );
    assert!((direct - 8.5727e13).abs() / 8.5727e13 < 1e-4);
    assert_eq!(step1.matveev.used.to_sci(3), "1.45e30");
}

#[test]
fn initial_bounds_in_both_modes() {
    let cubic = CubicData::cached(prec()).unwrap();
    let paper = initial_bounds(Mode::Published, &cubic).unwrap();
    assert_eq!(paper.n_max.used.to_sci(3), "7.38e48");
    assert_eq!(paper.l_total_max.used.to_sci(3), "9.15e47");
    assert!(paper.n_max.derived.certainly_le(&paper.n_max.used));
    assert!(paper
        .l_total_max
        .derived
        .certainly_le(&paper.l_total_max.used));
    let certified = initial_bounds(Mode::Certified, &cubic).unwrap();
    assert!(certified.n_max.used.certainly_le(&paper.n_max.used));
    assert!(certified
        .l_total_max
        .used
        .certainly_le(&paper.l_total_max.used));
    assert!(certified
        .step2
        .n_coefficient
        .used
        .certainly_le(&paper.step2.n_coefficient.used));
    // Both fit under the reduction bound M = 8e48.
    let m = RealBall::parse_decimal("8e48", prec()).unwrap();
    assert!(paper.l_total_max.used.certainly_le(&m));
    assert!(paper.n_max.used.certainly_le(&m));
}

#[test]
fn tau_expansion_matches_reference() {
    let cf = ContinuedFraction::expand(tau, &Target::Terms(120), prec()).unwrap();
    cf.verify().unwrap();
    let leading: Vec<String> = cf.quotients[..31].iter().map(|a| a.to_string()).collect();
    let reference: Vec<String> = TAU_QUOTIENTS.iter().map(|a| a.to_string()).collect();
    assert_eq!(leading, reference);
    let c = cf.nth_convergent(TAU_CONVERGENT_ORDINAL).unwrap();
    assert_eq!(c.p.to_string(), TAU_CONVERGENT_P);
    assert_eq!(c.q.to_string(), TAU_CONVERGENT_Q);
    assert_eq!(c.p.to_string().len(), 51);
    assert_eq!(c.q.to_string().len(), 50);
}

#[test]
fn convergents_approximate_tau() {
    // |tau - p_k/q_k| < 1/(q_k·q_{k+1}), decided in ball arithmetic.
    let p = prec();
    let x = tau(p).unwrap();
    let cf = ContinuedFraction::expand(tau, &Target::Terms(120), p).unwrap();
    for (k, pair) in cf.convergents.windows(2).enumerate() {
        let (c, next) = (&pair[0], &pair[1]);
        let q = RealBall::from_int(c.q.clone(), p);
        let err = (&x - &RealBall::from_ratio(&c.p, &c.q.clone().into(), p).unwrap()).abs();
        let limit = q.mul_int(next.q.clone()).recip().unwrap();
        assert!(err.certainly_lt(&limit), "convergent {}", k + 1);
        // Alternating sides.
        let side =
            (&RealBall::from_ratio(&c.p, &c.q.clone().into(), p).unwrap() - &x).is_positive();
        assert_eq!(side, k % 2 == 1, "convergent {}", k + 1);
    }
}

#[test]
fn expansion_is_deterministic_across_precisions() {
    let a =
        ContinuedFraction::expand(tau, &Target::Terms(100), Precision::from_digits(120)).unwrap();
    let b = ContinuedFraction::expand(tau, &Target::Terms(100), prec()).unwrap();
    let n = a.quotients.len().min(b.quotients.len());
    assert!(n >= 100);
    assert_eq!(a.quotients[..n], b.quotients[..n]);
    assert_eq!(
        a,
        ContinuedFraction::expand(tau, &Target::Terms(100), Precision::from_digits(120)).unwrap()
    );
}

#[test]
fn reference_convergent_is_below_the_admissibility_threshold() {
    // q_106 < 6M with M = 8e48, so the reduction must look further out.
    let setup = ReductionSetup::new(prec(), Selection::Tightest).unwrap();
    let q106 = &setup.cf.nth_convergent(TAU_CONVERGENT_ORDINAL).unwrap().q;
    let six_m = &setup.m * 6u32;
    assert!(q106 < &six_m);
    assert_eq!(setup.cf.first_denominator_above(&six_m), Some(107));
}

#[test]
fn round1_bounds_l1() {
    let epsilon = RealBall::parse_decimal(ROUND1_EPSILON, prec()).unwrap();
    for selection in [Selection::Tightest, Selection::FirstPositive] {
        let setup = ReductionSetup::new(prec(), selection).unwrap();
        let r1 = reduction_round1(&setup).unwrap();
        assert_eq!(r1.entries.len(), 9);
        assert!(r1.min_epsilon.certainly_gt(&epsilon), "{selection}");
        assert_eq!(r1.l1_bound, ROUND1_L1_BOUND, "{selection}");
        for e in &r1.entries {
            assert!(e.outcome.convergent_index >= 107);
            assert!(e.outcome.epsilon.is_positive());
        }
    }
}

#[test]
fn round2_sample_instances() {
    let setup = ReductionSetup::new(prec(), Selection::Tightest).unwrap();
    let a = RealBall::from_int(8, prec())
        .checked_div(&setup.cubic.log_alpha)
        .unwrap();
    for (d1, d2, l1) in [(1, 0, 1), (1, 2, 1), (9, 3, 43), (5, 5, 20), (9, 8, 53)] {
        let mu = round2_mu(d1, d2, l1, &setup.cubic).unwrap();
        let params = ReductionParams {
            tau: setup.tau.clone(),
            mu,
            a: a.clone(),
            b: setup.cubic.alpha.clone(),
            m: setup.m.clone(),
        };
        let outcome = dp_reduce(&params, &setup.cf, Selection::Tightest).unwrap();
        assert!(outcome.epsilon.is_positive());
        assert!(
            outcome.w_bound as u64 <= ROUND2_N_BOUND,
            "({d1},{d2},{l1}) gives {}",
            outcome.w_bound
        );
    }
}

#[test]
fn reduction_rejects_an_insufficient_expansion() {
    let p = Precision::from_digits(60);
    let cf = ContinuedFraction::expand(tau, &Target::Terms(10), p).unwrap();
    let params = ReductionParams {
        tau: tau(p).unwrap(),
        mu: RealBall::from_ratio(&1.into(), &3.into(), p).unwrap(),
        a: RealBall::from_int(10, p),
        b: RealBall::from_int(2, p),
        m: BigUint::from(10u32).pow(40),
    };
    assert!(dp_reduce(&params, &cf, Selection::Tightest).is_err());
    let zero_m = ReductionParams {
        m: BigUint::zero(),
        ..params.clone()
    };
    assert!(dp_reduce(&zero_m, &cf, Selection::Tightest).is_err());
    let bad_b = ReductionParams {
        b: RealBall::one(p),
        m: BigUint::one(),
        ..params
    };
    assert!(dp_reduce(&bad_b, &cf, Selection::Tightest).is_err());
}
