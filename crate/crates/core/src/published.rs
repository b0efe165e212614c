//! Reference constants from the published proof.
//!
//! In [`Mode::Published`](crate::Mode::Published) these values are carried
//! forward verbatim, after checking that each one dominates the value derived
//! from its inputs.

pub const STEP1_HEIGHT: &str = "5.44";
pub const STEP1_A1: &str = "16.32";
pub const STEP1_MATVEEV: &str = "1.45e30";
pub const STEP1_L1_LOG10: &str = "1.46e30";

pub const STEP2_HEIGHT: &str = "1.48e30";
pub const STEP2_A1: &str = "4.44e30";
pub const STEP2_MATVEEV: &str = "2.38e43";
pub const STEP2_N: &str = "1.70e44";

pub const N_MAX: &str = "7.38e48";
pub const L_TOTAL_MAX: &str = "9.15e47";

/// Bound on `u` used in both reduction rounds.
pub const REDUCTION_M: &str = "8e48";

pub const ROUND1_EPSILON: &str = "0.0375413";
pub const ROUND1_L1_BOUND: u64 = 53;
pub const ROUND2_EPSILON: &str = "0.0000903006";
pub const ROUND2_N_BOUND: u64 = 446;

/// Indices `n <= SEARCH_CUTOFF` are settled by exhaustive search.
pub const SEARCH_CUTOFF: u64 = 500;

/// The 1-based ordinal of the convergent printed with the reduction, and
/// its exact numerator and denominator.
pub const TAU_CONVERGENT_ORDINAL: usize = 106;
pub const TAU_CONVERGENT_P: &str = "177652856036642165557187989663314255133456297895465";
pub const TAU_CONVERGENT_Q: &str = "21695574963444524513646677911090250505443859600601";

/// Leading partial quotients of `log 10 / log alpha`.
pub const TAU_QUOTIENTS: [u32; 31] = [
    8, 5, 3, 3, 1, 5, 1, 8, 4, 6, 1, 4, 1, 1, 1, 9, 1, 4, 4, 9, 1, 5, 1, 1, 1, 5, 1, 1, 1, 2, 1,
];

/// The Padovan numbers that are concatenations of two distinct repdigits.
pub const SOLUTION_VALUES: [u32; 10] = [12, 16, 21, 28, 37, 49, 65, 86, 114, 200];
