use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use padrep::bounds::{guzman_luca, matveev_bound, ExponentBound, MatveevInput};
use padrep::certificate::DEFAULT_PRECISION_DIGITS;
use padrep::published::SEARCH_CUTOFF;
use padrep::reduction::{tau, Target};
use padrep::{
    brute_force, prove, ContinuedFraction, Error, Mode, Precision, ProveConfig, RealBall,
    Selection, SymbolicBound,
};

use crate::args::{CfArgs, Format, GuzmanLucaArgs, MatveevArgs, ProveArgs, SearchArgs};
use crate::config::FileConfig;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NOT_CLOSED: i32 = 2;
    pub const PRECISION: i32 = 3;
    pub const BAD_INPUT: i32 = 4;
}

/// A failed command: message and exit status.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl Failure {
    pub fn bad_input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: exit::BAD_INPUT,
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            message: format!("cannot write {}: {e}", path.display()),
            code: 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_precision() {
            exit::PRECISION
        } else {
            match e {
                Error::ClosureGap { .. } | Error::EpsilonNonPositive { .. } => exit::NOT_CLOSED,
                _ => exit::BAD_INPUT,
            }
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

type CmdResult = Result<i32, Failure>;

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn precision(flag: Option<u32>, config: &FileConfig) -> Result<Precision, Failure> {
    match flag
        .or(config.precision)
        .unwrap_or(DEFAULT_PRECISION_DIGITS)
    {
        0 => Err(Failure::bad_input("precision must be positive")),
        d => Ok(Precision::from_digits(d)),
    }
}

pub fn search(args: &SearchArgs, config: &FileConfig) -> CmdResult {
    let n_max = args.n_max.or(config.n_max).unwrap_or(SEARCH_CUTOFF);
    let records = brute_force(n_max);
    let format = args.out.format.or(config.format).unwrap_or(Format::Text);
    let text = match format {
        Format::Json => to_json(&records),
        Format::Text => {
            let mut s = format!(
                "{:>5}  {:>2} {:>2} {:>3} {:>3}  value\n",
                "n", "d1", "d2", "l1", "l2"
            );
            for r in &records {
                s += &format!(
                    "{:>5}  {:>2} {:>2} {:>3} {:>3}  {}\n",
                    r.n,
                    r.concat.d1(),
                    r.concat.d2(),
                    r.concat.l1(),
                    r.concat.l2(),
                    r.value
                );
            }
            s += &format!("{} solutions with n <= {n_max}\n", records.len());
            s
        }
    };
    emit(
        &text,
        args.out.output.as_deref().or(config.output.as_deref()),
    )?;
    Ok(exit::OK)
}

/// `cert.json` -> `cert.txt`; other names get `.txt` appended.
fn text_path(json: &Path) -> PathBuf {
    if json.extension().is_some_and(|e| e == "json") {
        json.with_extension("txt")
    } else {
        let mut s = json.as_os_str().to_owned();
        s.push(".txt");
        PathBuf::from(s)
    }
}

pub fn prove_cmd(args: &ProveArgs, config: &FileConfig) -> CmdResult {
    let mode: Mode = args
        .mode
        .as_deref()
        .or(config.mode.as_deref())
        .unwrap_or("certified")
        .parse()
        .map_err(|e: Error| Failure::bad_input(e.to_string()))?;
    let selection: Selection = args
        .selection
        .as_deref()
        .or(config.selection.as_deref())
        .unwrap_or("tightest")
        .parse()
        .map_err(|e: Error| Failure::bad_input(e.to_string()))?;
    let precision_digits = args
        .precision
        .or(config.precision)
        .unwrap_or(DEFAULT_PRECISION_DIGITS);
    if precision_digits == 0 {
        return Err(Failure::bad_input("precision must be positive"));
    }
    let prove_config = ProveConfig {
        mode,
        precision_digits,
        n_search: args.n_max.or(config.n_max).unwrap_or(SEARCH_CUTOFF),
        selection,
        ..ProveConfig::default()
    };
    let cert = prove(&prove_config);
    let json = to_json(&cert);
    let text = cert.render_text();
    if let Some(path) = args.output.as_deref().or(config.output.as_deref()) {
        std::fs::write(path, &json).map_err(|e| Failure::io(path, e))?;
        let txt = text_path(path);
        std::fs::write(&txt, &text).map_err(|e| Failure::io(&txt, e))?;
    }
    match args.format.or(config.format).unwrap_or(Format::Text) {
        Format::Json => print!("{json}"),
        Format::Text => print!("{text}"),
    }
    if cert.closure {
        return Ok(exit::OK);
    }
    Ok(match &cert.failure {
        Some(f) if f.is_precision() => exit::PRECISION,
        Some(f) if f.kind == "invalid-input" => exit::BAD_INPUT,
        _ => exit::NOT_CLOSED,
    })
}

enum Constant {
    Tau,
    Rational(BigInt, BigInt),
}

fn parse_constant(s: &str) -> Result<Constant, Failure> {
    if s == "tau" {
        return Ok(Constant::Tau);
    }
    let body = s.strip_prefix("rational:").ok_or_else(|| {
        Failure::bad_input(format!("unknown constant {s:?}; use tau or rational:P/Q"))
    })?;
    let (p, q) = body
        .split_once('/')
        .ok_or_else(|| Failure::bad_input(format!("expected P/Q, got {body:?}")))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Failure::bad_input(format!("not an integer: {x:?}")))
    };
    Ok(Constant::Rational(parse(p)?, parse(q)?))
}

/// Default number of partial quotients listed by `cf`.
const DEFAULT_TERMS: usize = 31;

pub fn cf(args: &CfArgs, config: &FileConfig) -> CmdResult {
    let constant = parse_constant(&args.constant)?;
    let terms = args.terms.unwrap_or(DEFAULT_TERMS);
    let needed = args.index.iter().copied().max().unwrap_or(0).max(terms);
    if args.index.contains(&0) {
        return Err(Failure::bad_input("convergent ordinals start at 1"));
    }
    let (name, expansion) = match &constant {
        Constant::Tau => (
            "log 10 / log alpha".to_string(),
            ContinuedFraction::expand(
                tau,
                &Target::Terms(needed),
                precision(args.precision, config)?,
            )?,
        ),
        Constant::Rational(p, q) => (format!("{p}/{q}"), ContinuedFraction::from_rational(p, q)?),
    };
    let shown = terms.min(expansion.quotients.len());
    let mut convergents = Vec::new();
    for &k in &args.index {
        let c = expansion.nth_convergent(k).ok_or_else(|| {
            Failure::bad_input(format!(
                "the expansion has only {} convergents",
                expansion.convergents.len()
            ))
        })?;
        convergents.push((k, c.clone()));
    }
    let format = args.out.format.or(config.format).unwrap_or(Format::Text);
    let text = match format {
        Format::Json => to_json(&json!({
            "constant": name,
            "precision_digits": expansion.source_precision.map(|p| p.digits()),
            "quotients": expansion.quotients[..shown].iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "convergents": convergents.iter().map(|(k, c)| json!({
                "index": k,
                "p": c.p.to_string(),
                "q": c.q.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let q: Vec<String> = expansion.quotients[..shown]
                .iter()
                .map(|a| a.to_string())
                .collect();
            let listing = match q.split_first() {
                Some((a0, [])) => format!("[{a0}]"),
                Some((a0, rest)) => format!("[{a0}; {}]", rest.join(", ")),
                None => "[]".to_string(),
            };
            let mut s = format!("{name}\nquotients ({shown}): {listing}\n");
            for (k, c) in &convergents {
                s += &format!("convergent {k}\n  p = {}\n  q = {}\n", c.p, c.q);
            }
            s
        }
    };
    emit(
        &text,
        args.out.output.as_deref().or(config.output.as_deref()),
    )?;
    Ok(exit::OK)
}

fn parse_ball(s: &str, prec: Precision) -> Result<RealBall, Failure> {
    RealBall::parse_decimal(s, prec).map_err(|e| Failure::bad_input(e.to_string()))
}

fn print_value(label: &str, value: &str, format: Option<Format>, extra: serde_json::Value) {
    match format.unwrap_or(Format::Text) {
        Format::Text => println!("{label} {value}"),
        Format::Json => {
            let mut obj = extra;
            obj["value"] = json!(value);
            print!("{}", to_json(&obj));
        }
    }
}

pub fn matveev(args: &MatveevArgs, config: &FileConfig) -> CmdResult {
    let prec = precision(args.precision, config)?;
    let b = match args.b.as_str() {
        "n" => ExponentBound::SymbolicN,
        v => ExponentBound::Value(parse_ball(v, prec)?),
    };
    let a = args
        .a
        .iter()
        .map(|v| parse_ball(v, prec).map(SymbolicBound::constant))
        .collect::<Result<Vec<_>, _>>()?;
    let input = MatveevInput {
        t: args.t,
        degree: args.degree,
        b,
        a,
    };
    let v = matveev_bound(&input, prec)?;
    let shown = SymbolicBound {
        coefficient: v.coefficient.upper_point(),
        ..v.clone()
    };
    print_value(
        "log |Lambda| > -",
        &shown.to_string(),
        args.format.or(config.format),
        json!({"coefficient": v.coefficient.upper_point().to_sci(12), "log_power": v.log_power}),
    );
    Ok(exit::OK)
}

pub fn guzman_luca_cmd(args: &GuzmanLucaArgs, config: &FileConfig) -> CmdResult {
    let prec = precision(args.precision, config)?;
    let h = parse_ball(&args.h, prec)?;
    let l = guzman_luca(args.r, &h)?;
    print_value(
        "L <",
        &l.upper_point().to_sci(12),
        args.format.or(config.format),
        json!({"r": args.r, "h": args.h}),
    );
    Ok(exit::OK)
}
