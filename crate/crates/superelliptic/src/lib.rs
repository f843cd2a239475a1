//! Exact arithmetic for superelliptic fibrations.
//!
//! A cyclic cover `y^n = F(x)` of the projective line, with `F` separable of
//! degree `alpha0 >= 3`, determines a curve of genus `g` together with a rich
//! collection of integers and rationals: the eigenspace ranks of its Hodge
//! bundle, the relative invariants of a semi-stable family of such curves,
//! slope constants, and bounds on the rank of the ample part of the Higgs
//! field.  This crate computes every one of those quantities in exact
//! rational arithmetic — no floats anywhere — and combines them into an
//! exclusion engine: given `(n, alpha0)` it mechanically checks whether the
//! numeric constraints rule out a non-isotrivial family over a Shimura curve
//! with that datum.
//!
//! Modules:
//!
//! * [`arith`] — rational newtype over arbitrary-precision integers,
//!   floor/fractional-part splitting, Euler's totient, unit-group orbits.
//! * [`cover`] — the cover datum `(n, alpha0)` and its derived exponents,
//!   genus, branch data, cyclic quotients.
//! * [`hodge`] — eigenspace ranks of the Hodge bundle, the
//!   Chevalley–Weil-style dimension formula, and validation of candidate
//!   ample/flat rank decompositions.
//! * [`family`] — singularity index tables of semi-stable fibrations, the
//!   exact relative invariants `omega^2`, `deg`, `delta`, slope constants and
//!   slope deficits, and the rank bounds they induce.
//! * [`fracparts`] — the fractional-part sums `H(k)` attached to residue
//!   sequences mod a prime, and an exhaustive verifier for the bound
//!   `theta <= floor(p/(beta-1))`.
//! * [`exclusion`] — the case engine: rank statistics under the standard
//!   vanishing assumptions, the `nu` table, the prime-degree two-step
//!   analysis, candidate enumeration for composite degrees, and
//!   [`run_exclusion`] producing replayable JSON reports.
//!
//! Every comparison that feeds a verdict is recorded as a [`Step`] with an
//! opaque constraint label (its `anchor`), so a report can be re-checked
//! line by line with the public operations of this crate.

pub mod arith;
pub mod cover;
pub mod exclusion;
pub mod family;
pub mod fracparts;
pub mod hodge;

pub use arith::{euler_phi, floor_and_frac, unit_orbits, Rational};
pub use cover::{
    branch_datum, feasible_alpha0, genus, quotient_genus, quotient_index_map, BranchDatum,
    SuperellipticDatum,
};
pub use exclusion::{
    alpha0_four_survivors, assumed_ample_rank, compact_endgame, composite_candidates,
    fibration_constraints, nu_statistic, nu_table, phi_genus_bound, prime_step1, run_exclusion,
    Cmp, EndgameOutcome, ExclusionReport, HalfMode, NuCell, Outcome, Step, Verdict,
};
pub use family::{
    b_gamma, degenerate_quotient_bound, delta_decomposition, irregular_feasible, lambda_compact,
    lambda_noncompact, rank_a_upper_bound, relative_invariants, slope_deficit, validate_indices,
    DeltaDecomposition, IndexEntry, IrregularFeasibility, Regime, RelativeInvariants,
    SingularityIndexTable,
};
pub use fracparts::{
    h_value, theta_of, verify_unit_fraction_lemma, LemmaReport, PerBeta, ResidueSequence,
};
pub use hodge::{
    cw_dimension, eigen_rank, eigen_rank_vector, orbit_trivial_constraint, validate_higgs,
    EigenRankVector, HiggsRankDecomposition, Violation,
};

/// Errors shared by every operation in the crate.
///
/// `InvalidInput` covers domain violations (preconditions on arguments,
/// malformed tables); `IdentityFailure` is reserved for internal consistency
/// checks that can only fail through an implementation bug — for example the
/// Noether identity `12·deg = omega^2 + delta`, which is re-verified on
/// every invariant computation and aborts loudly rather than returning a
/// silently wrong table.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The arguments violate a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An internal identity that must hold for all valid inputs failed.
    #[error("internal identity failure: {0}")]
    IdentityFailure(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn identity(msg: impl Into<String>) -> Self {
        Error::IdentityFailure(msg.into())
    }
}
