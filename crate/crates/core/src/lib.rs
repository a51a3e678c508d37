//! Exact-arithmetic elimination toolkit: classical multivariate resultants,
//! generalized characteristic polynomials (GCP), and perturbed resultants
//! (PRes) of polynomial systems homogeneous in a distinguished variable block.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point is used anywhere. Results that are only defined up to a constant
//! factor are reported as [`NormalizedPoly`] (integer coefficients, content 1,
//! positive leading coefficient).

pub mod det;
pub mod error;
pub mod gcd;
pub mod gcp;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod pres;
pub mod printer;
pub mod report;
pub mod resultant;
pub mod system;
pub mod vars;

pub use det::{det_fraction_free, det_integer, det_rational};
pub use error::{Error, Result};
pub use gcd::{content_primitive, gcd_poly, squarefree_decomposition, squarefree_part};
pub use gcp::{
    gcp, is_admissible, random_admissible_perturbation, AdmissibilityCheck, GcpResult,
    PerturbationVector, Provenance,
};
pub use monomial::Monomial;
pub use parse::{parse_expr, parse_system};
pub use poly::{normalize, NormalizedPoly, Poly};
pub use pres::{planar_oracle, pres, zero_set_equal, PlanarZeroSet, PresResult, TrialRecord};
pub use printer::{format_factored, format_poly};
pub use report::{system_hash, OutputDoc};
pub use resultant::{
    binary_form_resultant, macaulay_resultant, resultant, sylvester_resultant, Method,
    ResultantValue,
};
pub use system::{System, SystemSource};
pub use vars::{VarOrder, VarSet};

/// Default seed used by seeded entry points when the caller does not supply
/// one. Fixed so that repeated runs are reproducible.
pub const DEFAULT_SEED: u64 = 1730;
