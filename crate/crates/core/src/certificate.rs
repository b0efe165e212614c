//! The full pipeline and its machine-readable record.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebraic::{with_escalation, BallRecord, CubicData, Precision, RealBall};
use crate::bounds::{initial_bounds, InitialBounds, Mode, TrackedConstant};
use crate::error::{Error, Result};
use crate::published;
use crate::reduction::{
    reduction_round1, reduction_round2, ReductionOutcome, ReductionSetup, Round1Report,
    Round2Report, RoundTwoDigits, Selection, ROUND2_SWEEP,
};
use crate::search::{brute_force, closure_check, Closure, SolutionRecord};

pub const SCHEMA_VERSION: u32 = 1;

/// Decimal digits printed for headline values.
const RECORD_DIGITS: u32 = 30;

/// Decimal digits printed for per-instance values.
const INSTANCE_DIGITS: u32 = 12;

/// Default working precision in decimal digits.
pub const DEFAULT_PRECISION_DIGITS: u32 = 300;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProveConfig {
    pub mode: Mode,
    pub precision_digits: u32,
    /// Indices `0..=n_search` are searched exhaustively.
    pub n_search: u64,
    pub selection: Selection,
    pub round2_digits: RoundTwoDigits,
}

impl Default for ProveConfig {
    fn default() -> Self {
        ProveConfig {
            mode: Mode::Certified,
            precision_digits: DEFAULT_PRECISION_DIGITS,
            n_search: published::SEARCH_CUTOFF,
            selection: Selection::default(),
            round2_digits: ROUND2_SWEEP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSection {
    pub n_max: u64,
    pub solutions: Vec<SolutionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantRecord {
    pub name: String,
    pub derived: BallRecord,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub published: Option<BallRecord>,
    pub used: BallRecord,
}

impl From<&TrackedConstant> for ConstantRecord {
    fn from(c: &TrackedConstant) -> Self {
        ConstantRecord {
            name: c.name.to_string(),
            derived: BallRecord::new(&c.derived, RECORD_DIGITS),
            published: c
                .published
                .as_ref()
                .map(|p| BallRecord::new(p, RECORD_DIGITS)),
            used: BallRecord::new(&c.used, RECORD_DIGITS),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialBoundsSection {
    pub constants: Vec<ConstantRecord>,
    pub n_max: BallRecord,
    pub l_total_max: BallRecord,
}

impl From<&InitialBounds> for InitialBoundsSection {
    fn from(b: &InitialBounds) -> Self {
        let constants = [
            &b.step1.height,
            &b.step1.a1,
            &b.step1.matveev,
            &b.step1.l1_log10,
            &b.step2.height,
            &b.step2.a1,
            &b.step2.matveev,
            &b.step2.n_coefficient,
            &b.n_max,
            &b.l_total_max,
        ]
        .into_iter()
        .map(ConstantRecord::from)
        .collect();
        InitialBoundsSection {
            constants,
            n_max: BallRecord::new(&b.n_max.used, RECORD_DIGITS),
            l_total_max: BallRecord::new(&b.l_total_max.used, RECORD_DIGITS),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub convergent: usize,
    pub q: String,
    pub epsilon: BallRecord,
    pub w_bound: i64,
}

impl OutcomeRecord {
    fn new(o: &ReductionOutcome, digits: u32) -> Self {
        OutcomeRecord {
            convergent: o.convergent_index,
            q: o.q_used.to_string(),
            epsilon: BallRecord::new(&o.epsilon, digits),
            w_bound: o.w_bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round1Digit {
    pub d1: u8,
    #[serde(flatten)]
    pub outcome: OutcomeRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round1Section {
    pub m: String,
    pub per_d1: Vec<Round1Digit>,
    pub min_epsilon: BallRecord,
    pub l1_bound: u64,
}

impl Round1Section {
    fn new(r: &Round1Report, setup: &ReductionSetup) -> Self {
        Round1Section {
            m: setup.m.to_string(),
            per_d1: r
                .entries
                .iter()
                .map(|e| Round1Digit {
                    d1: e.d1,
                    outcome: OutcomeRecord::new(&e.outcome, RECORD_DIGITS),
                })
                .collect(),
            min_epsilon: BallRecord::new(&r.min_epsilon, RECORD_DIGITS),
            l1_bound: r.l1_bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round2Instance {
    pub d1: u8,
    pub d2: u8,
    pub l1: u64,
    #[serde(flatten)]
    pub outcome: OutcomeRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round2Section {
    pub digits: RoundTwoDigits,
    pub l1_max: u64,
    pub instance_count: usize,
    pub min_epsilon: BallRecord,
    pub n_bound: u64,
    pub worst: Round2Instance,
    /// Number of instances settled by each convergent ordinal.
    pub convergents_used: BTreeMap<usize, usize>,
    pub instances: Vec<Round2Instance>,
}

impl From<&Round2Report> for Round2Section {
    fn from(r: &Round2Report) -> Self {
        let instance = |e: &crate::reduction::Round2Entry| Round2Instance {
            d1: e.d1,
            d2: e.d2,
            l1: e.l1,
            outcome: OutcomeRecord::new(&e.outcome, INSTANCE_DIGITS),
        };
        Round2Section {
            digits: r.digits,
            l1_max: r.l1_max,
            instance_count: r.instance_count(),
            min_epsilon: BallRecord::new(&r.min_epsilon, RECORD_DIGITS),
            n_bound: r.n_bound,
            worst: instance(r.worst()),
            convergents_used: r.ordinal_histogram(),
            instances: r.entries.iter().map(instance).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// `precision`, `closure-gap`, `published-bound`, or `other`.
    pub kind: String,
    pub message: String,
}

impl Failure {
    fn from_error(e: &Error) -> Self {
        let kind = match e {
            _ if e.is_precision() => "precision",
            Error::ClosureGap { .. } => "closure-gap",
            Error::PublishedBoundViolated { .. } => "published-bound",
            Error::InvalidInput(_) => "invalid-input",
            _ => "other",
        };
        Failure {
            kind: kind.to_string(),
            message: e.to_string(),
        }
    }

    pub fn is_precision(&self) -> bool {
        self.kind == "precision"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofCertificate {
    pub schema_version: u32,
    pub tool_version: String,
    pub generated_at_unix: u64,
    pub mode: Mode,
    pub selection: Selection,
    /// Requested working precision in decimal digits.
    pub precision_digits: u32,
    /// Precision at which the analytic part succeeded, after escalation.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub precision_used_digits: Option<u32>,
    pub search: SearchSection,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub initial_bounds: Option<InitialBoundsSection>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub round1: Option<Round1Section>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub round2: Option<Round2Section>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub closure_detail: Option<Closure>,
    pub closure: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<Failure>,
}

/// Seconds since the epoch, or `SOURCE_DATE_EPOCH` when set, so that
/// reproducible builds produce identical certificates.
fn timestamp() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        })
}

struct Analytic {
    precision: Precision,
    bounds: InitialBounds,
    setup: ReductionSetup,
    round1: Round1Report,
    round2: Round2Report,
}

fn run_analytic(config: &ProveConfig, prec: Precision) -> Result<Analytic> {
    let cubic = CubicData::cached(prec)?;
    cubic.verify()?;
    let bounds = initial_bounds(config.mode, &cubic)?;
    let setup = ReductionSetup::new(prec, config.selection)?;
    let m = RealBall::from_int(num_bigint::BigInt::from(setup.m.clone()), prec);
    if !bounds.l_total_max.used.certainly_le(&m) {
        return Err(Error::Precondition(format!(
            "M = {} does not dominate l1 + l2 < {}",
            setup.m,
            bounds.l_total_max.used.to_sci(4)
        )));
    }
    let round1 = reduction_round1(&setup)?;
    let round2 = reduction_round2(&setup, round1.l1_bound, config.round2_digits)?;
    Ok(Analytic {
        precision: prec,
        bounds,
        setup,
        round1,
        round2,
    })
}

/// Runs search, initial bounds, both reduction rounds and the closure
/// check. Failures are recorded in the certificate, which is then not
/// closed.
pub fn prove(config: &ProveConfig) -> ProofCertificate {
    let solutions = brute_force(config.n_search);
    let mut cert = ProofCertificate {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        generated_at_unix: timestamp(),
        mode: config.mode,
        selection: config.selection,
        precision_digits: config.precision_digits,
        precision_used_digits: None,
        search: SearchSection {
            n_max: config.n_search,
            solutions,
        },
        initial_bounds: None,
        round1: None,
        round2: None,
        closure_detail: None,
        closure: false,
        failure: None,
    };
    if config.precision_digits == 0 {
        cert.failure = Some(Failure::from_error(&Error::InvalidInput(
            "precision must be positive".into(),
        )));
        return cert;
    }
    let start = Precision::from_digits(config.precision_digits);
    let analytic = match with_escalation(start, |prec| run_analytic(config, prec)) {
        Ok(a) => a,
        Err(e) => {
            cert.failure = Some(Failure::from_error(&e));
            return cert;
        }
    };
    cert.precision_used_digits = Some(analytic.precision.digits());
    cert.initial_bounds = Some(InitialBoundsSection::from(&analytic.bounds));
    cert.round1 = Some(Round1Section::new(&analytic.round1, &analytic.setup));
    cert.round2 = Some(Round2Section::from(&analytic.round2));
    // The analytic argument assumes n > SEARCH_CUTOFF, so the search must
    // reach that far and the reduced bound must fall below it.
    let covered = config.n_search.min(published::SEARCH_CUTOFF);
    match closure_check(analytic.round2.n_bound, covered) {
        Ok(c) => {
            cert.closure = c.closed;
            cert.closure_detail = Some(c);
        }
        Err(e) => cert.failure = Some(Failure::from_error(&e)),
    }
    cert
}

impl ProofCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    /// Human-readable summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(
            w,
            "padrep proof certificate (schema {})",
            self.schema_version
        );
        let _ = writeln!(w, "tool version      {}", self.tool_version);
        let _ = writeln!(w, "mode              {}", self.mode);
        let _ = writeln!(w, "selection         {}", self.selection);
        let _ = writeln!(
            w,
            "precision         {} digits requested",
            self.precision_digits
        );
        if let Some(p) = self.precision_used_digits {
            let _ = writeln!(w, "precision used    {p} digits");
        }
        let _ = writeln!(
            w,
            "\nsearch 0 <= n <= {}: {} solutions",
            self.search.n_max,
            self.search.solutions.len()
        );
        for s in &self.search.solutions {
            let _ = writeln!(
                w,
                "  P_{:<4} = {:<8} d1={} d2={} l1={} l2={}",
                s.n,
                s.value,
                s.concat.d1(),
                s.concat.d2(),
                s.concat.l1(),
                s.concat.l2()
            );
        }
        if let Some(b) = &self.initial_bounds {
            let _ = writeln!(w, "\ninitial bounds");
            for c in &b.constants {
                let _ = writeln!(
                    w,
                    "  {:<16} used {}  derived {}",
                    c.name,
                    short(&c.used),
                    short(&c.derived)
                );
            }
            let _ = writeln!(w, "  n < {}", short(&b.n_max));
            let _ = writeln!(w, "  l1 + l2 < {}", short(&b.l_total_max));
        }
        if let Some(r) = &self.round1 {
            let _ = writeln!(w, "\nround 1 (M = {})", r.m);
            for d in &r.per_d1 {
                let _ = writeln!(
                    w,
                    "  d1={} convergent {} epsilon {} l1 <= {}",
                    d.d1,
                    d.outcome.convergent,
                    short(&d.outcome.epsilon),
                    d.outcome.w_bound
                );
            }
            let _ = writeln!(w, "  min epsilon {}", short(&r.min_epsilon));
            let _ = writeln!(w, "  l1 <= {}", r.l1_bound);
        }
        if let Some(r) = &self.round2 {
            let _ = writeln!(
                w,
                "\nround 2 ({} instances, l1 <= {})",
                r.instance_count, r.l1_max
            );
            let _ = writeln!(w, "  min epsilon {}", short(&r.min_epsilon));
            let _ = writeln!(
                w,
                "  worst instance d1={} d2={} l1={}: n <= {}",
                r.worst.d1, r.worst.d2, r.worst.l1, r.worst.outcome.w_bound
            );
            let used: Vec<String> = r
                .convergents_used
                .iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            let _ = writeln!(w, "  convergents used {}", used.join(" "));
            let _ = writeln!(w, "  n <= {}", r.n_bound);
        }
        let _ = writeln!(w, "\nclosed            {}", self.closure);
        if let Some(f) = &self.failure {
            let _ = writeln!(w, "failure           [{}] {}", f.kind, f.message);
        }
        out
    }
}

/// A record's value to a few significant digits.
fn short(r: &BallRecord) -> String {
    r.to_ball(Precision::from_digits(r.digits.max(40) + 60))
        .map(|b| b.to_sci(8))
        .unwrap_or_else(|_| r.midpoint.clone())
}
