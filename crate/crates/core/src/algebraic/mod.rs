//! Certified real arithmetic and the algebraic constants of the Padovan
//! characteristic polynomial.

mod ball;
mod cubic;
mod elementary;
mod height;

pub use ball::{BallRecord, Precision, RealBall};
pub use cubic::{cardano_alpha, compute_cubic, CubicData, MIN_PRECISION_BITS};
pub use elementary::ln2;
pub use height::{
    height_a, height_eta1_step1, height_eta1_step2, height_eta1_step2_direct,
    height_eta1_step2_uniform, log_height_rational,
};

pub(crate) use ball::parse_decimal_parts;

use crate::error::{Error, Result};

/// How many times precision is doubled before giving up.
pub const MAX_DOUBLINGS: u32 = 4;

/// Runs `f` at `start`, doubling the precision on undecided outcomes up to
/// [`MAX_DOUBLINGS`] times.
pub fn with_escalation<T>(
    start: Precision,
    mut f: impl FnMut(Precision) -> Result<T>,
) -> Result<T> {
    let mut prec = start;
    for attempt in 0..=MAX_DOUBLINGS {
        match f(prec) {
            Err(e) if e.is_precision() => {
                if attempt == MAX_DOUBLINGS {
                    return Err(Error::PrecisionInsufficient {
                        what: e.to_string(),
                        bits: prec.bits(),
                    });
                }
                prec = prec.doubled();
            }
            other => return other,
        }
    }
    unreachable!()
}
