//! Numerical semigroup invariants built around Wilf's inequality `e·|L| ≥ c`.
//!
//! - [`semigroup`]: construction from generators, membership, primitives,
//!   Apéry sets, and the left part `L`.
//! - [`invariants`]: the level partition `S_j`, profile, Apéry levels, `W`,
//!   `W₀`, and structural checks on sums of levels.
//! - [`macaulay`]: binomial representations, Macaulay's growth bound, exact
//!   real binomial inversion, and Hilbert functions of sumset algebras.
//! - [`tree`]: enumeration of the semigroup tree by genus, census of `q`, and
//!   scans for small `W₀`.

pub mod bitset;
pub mod error;
pub mod invariants;
pub mod macaulay;
pub mod semigroup;
pub mod tree;

pub use error::{InvariantError, MacaulayError, SemigroupError, TreeError};
pub use invariants::{
    check_gcd_left, check_packed_left_primitives, check_true_grading, check_weak_grading, decompose, profile,
    wilf_report, GcdCheck, GradingCheck, LevelDecomposition, WilfReport,
};
pub use macaulay::{
    averaging_bound_ok, binomial_inverse, binomial_real, binomial_representation, condensed_bounds,
    hilbert_from_sumsets, macaulay_growth_ok, macaulay_step, quotient_dims, BinomialRep, HilbertSequence,
    RealBinomialQuery,
};
pub use semigroup::{build, ElementSet, GeneratorSpec, NumericalSemigroup};
pub use tree::{
    census, children, enumerate, scan, scan_w0, subtree_is_finite, CensusTable, EnumerationConfig, ScanHit, ScanTarget,
};
