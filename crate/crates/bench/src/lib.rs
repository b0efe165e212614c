//! Shared fixtures for the benchmarks.

use padrep::reduction::ReductionSetup;
use padrep::{Precision, Selection};

/// Working precision of the reduction benchmarks, in decimal digits.
pub const DIGITS: u32 = 300;

/// The reduction setup at [`DIGITS`], as used by `prove`.
pub fn reduction_setup() -> ReductionSetup {
    ReductionSetup::new(Precision::from_digits(DIGITS), Selection::Tightest)
        .expect("the default precision suffices")
}
