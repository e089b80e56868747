//! Highest weight Harish-Chandra modules over the seven Hermitian families:
//! exact root data, the poset of positive noncompact roots, diagrams of
//! highest weights, associated-variety orbit indices, Gelfand-Kirillov
//! dimensions, and an independent Robinson-Schensted cross-check.
//!
//! All arithmetic is exact: weights are vectors of [`Rat`] (rationals over
//! `i64`) and root coordinates are stored as doubled integers. There is no
//! floating point anywhere in the crate, because the central predicate
//! everywhere is "is this pairing a nonpositive *integer*".
//!
//! Entry points:
//!
//! * [`root_data::build_root_data`] constructs the root system of a family.
//! * [`diagram::HermitianContext`] bundles root data with the noncompact
//!   poset; most pipelines start here.
//! * [`avcore::associated_variety`] runs the full computation for one weight.
//! * [`rs_oracle::k_prime`] recomputes the orbit index by a completely
//!   different route (Robinson-Schensted insertion / antichain tests).
//! * [`census::width_census`] enumerates all lower order ideals of a poset
//!   and buckets them by width.
//!
//! The `examples/` directory has one runnable example per capability; the
//! `hwhc` binary exposes the same operations as subcommands.

#![forbid(unsafe_code)]

pub mod avcore;
pub mod census;
pub mod cli;
pub mod diagram;
pub mod poset;
pub mod root_data;
pub mod rs_oracle;

/// Exact rational scalar used for all weight coordinates and pairings.
pub type Rat = num_rational::Ratio<i64>;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameter out of bounds for {family}: {detail}")]
    ParameterOutOfBounds { family: String, detail: String },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight is not k-dominant: pairing with compact root {root} is {value}")]
    NotKDominant { root: String, value: String },

    #[error("operation requires an integral weight (classified as {class})")]
    NonIntegralWeight { class: String },

    #[error("{family} has no distinguished antichains: no height constant for non-simply-laced types")]
    UnsupportedType { family: String },

    #[error("census infeasible for {family}: {bound}")]
    InfeasibleCensus { family: String, bound: String },

    #[error("input is not strictly decreasing at position {position}")]
    NonMonotoneInput { position: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub use diagram::HermitianContext;
pub use root_data::{build_root_data, HermitianType, Root, RootSystemData, Weight};
