//! Exact combinatorics for the category 𝒪𝓛𝒜 of the finitary Lie algebras
//! sl(∞), o(∞) and sp(∞).
//!
//! The crate computes stable Jordan–Hölder multiplicities of parabolically
//! induced modules, simple multiplicities of standard objects, standard
//! filtrations of indecomposable injectives, the orders `≤_fin` / `≤_inf`,
//! block labels and primitive-ideal labels. Everything is exact: weights
//! carry rational coefficients, Kazhdan–Lusztig polynomials and counts use
//! arbitrary-precision integers.
//!
//! Core types are generic over their scalar; the aliases below pin the
//! defaults used by the command-line front end.

pub mod annihilator;
pub mod engine;
pub mod error;
pub mod kl;
pub mod mult;
pub mod order;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod scalar;
pub mod weight;

mod arrange;

pub use annihilator::{
    annihilator_of_integrable, is_nonzero_annihilator_guaranteed, weight_from_label,
    PrimitiveIdealLabel,
};
pub use engine::{Config, Engine, EngineStats};
pub use error::{Error, Result};
pub use kl::KlCache;
pub use mult::{MultTable, OrbitDatum};
pub use order::{fin_up_set, leq_fin, InfComparison, OrderCert, OrderKind, StepTag};
pub use partition::{Composition, KostkaTable, Partition};
pub use perm::Permutation;
pub use poly::Polynomial;
pub use scalar::Coefficient;
pub use weight::{
    block_label, degree, is_b_dominant, is_nonneg_simple_combination, rho, BlockLabel, Chain,
    LieFlavor, Weight,
};

/// Arbitrary-precision rational, the default weight coefficient.
pub type Rational = num_rational::BigRational;
/// Machine-word rational for callers that know their weights stay small.
pub type Rational64 = num_rational::Rational64;
/// Weight with arbitrary-precision rational coefficients.
pub type RationalWeight = Weight<Rational>;
/// Weight with `i64`-backed rational coefficients.
pub type Weight64 = Weight<Rational64>;
/// Kazhdan–Lusztig polynomial with arbitrary-precision coefficients.
pub type KlPolynomial = Polynomial<num_bigint::BigInt>;
/// Nonnegative counts: Kostka numbers and composition multiplicities.
pub type Multiplicity = num_bigint::BigUint;
