//! Exact computation of SU(n) Verlinde numbers — section counts of
//! prequantum line bundles on moduli spaces of flat SU(n) connections with a
//! central twist, with or without marked points — by two fully independent
//! methods that must agree to the integer:
//!
//! 1. **Alcove sums** ([`alcove`]): S-matrix sums over the level-k alcove,
//!    carried out exactly in cyclotomic fields `Q(zeta_N)` with big-rational
//!    coefficients.
//! 2. **Iterated residues** ([`residue`]): truncated multivariate Laurent
//!    expansions of equivalent residue integrands, extracted variable by
//!    variable under a fixed dominance order, over exact rationals.
//!
//! The two pipelines share nothing beyond the root-system tables of
//! [`root_system`], so exact agreement of their integer outputs is a strong
//! end-to-end correctness check. Supporting layers: [`cyclotomic`] (exact
//! arithmetic in `Q(zeta_N)`), [`series`] (truncated Laurent series),
//! [`bigfixed`] (high-precision fixed-point floats for diagnostics and the
//! floating backend), and [`report`] (batch driver with machine-readable
//! reports, used by the `verlinde` binary).

pub mod alcove;
pub mod bigfixed;
pub mod cyclotomic;
pub mod error;
pub mod report;
pub mod residue;
pub mod root_system;
pub mod series;

/// Exact rational scalar used throughout the crate.
pub type Rat = num::BigRational;

pub use alcove::{
    alcove_sum_exact, alcove_sum_float, central_phase, parabolic_multi_point, parabolic_one_point,
    s_pair, s_zero, verlinde_number, ProblemSpec,
};
pub use bigfixed::{BigFixed, ComplexFixed};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use report::{run, sweep, Backend, JobConfig, Method, Report};
pub use residue::{
    intersection_pairing, torus_integral_constant, verlinde_by_residue, verlinde_residue_at_cap,
    vsz_identity_check, TauPoly,
};
pub use root_system::{
    build_root_system, central_element, chamber_valid, enumerate_alcove,
    reduce_to_fundamental_domain, Root, RootSystem, TVector, Weight, WeylElement,
};
pub use series::{expand_factor, Factor, LaurentSeries, Window};
