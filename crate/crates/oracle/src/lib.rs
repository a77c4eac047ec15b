//! Slow, independent reference implementations used to validate `ola-core`,
//! and the acceptance suite built on them.
//!
//! Nothing here shares memoization or algorithms with the fast paths.

pub mod acceptance;
mod kl;
mod kostka;
mod verma;

pub use kl::{kl_oracle, r_oracle, MAX_WINDOW as KL_ORACLE_MAX_WINDOW};
pub use kostka::{kostka_oracle, MAX_CELLS as KOSTKA_ORACLE_MAX_CELLS};
pub use verma::low_rank_verma_oracle;
