//! Padovan numbers that are concatenations of two repdigits.
//!
//! The crate determines every `n` with `P_n` equal to a block of a digit
//! `d1` followed by a block of a different digit `d2`. Small indices are
//! searched exhaustively. For large ones, lower bounds for linear forms in
//! logarithms give an astronomically large bound on `n`, and two rounds of
//! Baker–Davenport reduction bring it back inside the searched range. Every
//! real number involved is handled in certified ball arithmetic.
//!
//! ```
//! use padrep::search::brute_force;
//!
//! let values: Vec<String> = brute_force(30).iter().map(|r| r.value.to_string()).collect();
//! assert_eq!(values, ["12", "16", "21", "28", "37", "49", "65", "86", "114", "200"]);
//! ```

pub mod algebraic;
pub mod bigint_serde;
pub mod bounds;
pub mod certificate;
pub mod error;
pub mod published;
pub mod reduction;
pub mod repdigits;
pub mod search;
pub mod sequences;

pub use algebraic::{BallRecord, CubicData, Precision, RealBall};
pub use bounds::{Mode, SymbolicBound};
pub use certificate::{prove, ProofCertificate, ProveConfig};
pub use error::{Error, Result};
pub use reduction::{ContinuedFraction, ReductionOutcome, ReductionParams, Selection};
pub use repdigits::{parse_concat, RepdigitConcat};
pub use search::{brute_force, closure_check, verify_solution, SolutionRecord};
pub use sequences::padovan;
