//! Shared computation context: configuration plus the Kostka and KL memo
//! tables. Every method taking `&self` is safe to call from several threads.

use serde::Serialize;

use crate::kl::KlCache;
use crate::partition::KostkaTable;
use crate::Multiplicity;

/// Resource limits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Largest symmetric-group window for which KL polynomials are computed.
    pub max_window: usize,
    /// Entry bound for each memo table; a full table is cleared.
    pub cache_limit: usize,
    /// Largest number of weights visited by an order search.
    pub max_search_states: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_window: 8, cache_limit: 1 << 20, max_search_states: 2_000_000 }
    }
}

/// Cache occupancy, reported as diagnostics by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct EngineStats {
    pub kl_columns: usize,
    pub kostka_entries: usize,
}

pub struct Engine {
    pub(crate) config: Config,
    pub(crate) kl: KlCache,
    pub(crate) kostka: KostkaTable<Multiplicity>,
}

impl Engine {
    pub fn new(config: Config) -> Self {
        Engine {
            kl: KlCache::new(config.max_window, config.cache_limit),
            kostka: KostkaTable::new(config.cache_limit),
            config,
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn kl(&self) -> &KlCache {
        &self.kl
    }

    pub fn kostka_table(&self) -> &KostkaTable<Multiplicity> {
        &self.kostka
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats { kl_columns: self.kl.cached_columns(), kostka_entries: self.kostka.cached_entries() }
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Config::default())
    }
}

mod api {
    use super::Engine;
    use crate::error::Result;
    use crate::partition::{self, Composition, Partition};
    use crate::perm::Permutation;
    use crate::scalar::Coefficient;
    use crate::weight::{LieFlavor, Weight};
    use crate::{KlPolynomial, Multiplicity};

    impl Engine {
        /// Kostka number `K(shape, content)`.
        pub fn kostka(&self, shape: &Partition, content: &Composition) -> Multiplicity {
            self.kostka.kostka(shape, content)
        }

        /// Weight multiplicity `c_k(γ)` of the `k`-th layer module.
        pub fn c_coeff<Q: Coefficient>(&self, k: u32, gamma: &Weight<Q>) -> Result<Multiplicity> {
            partition::c_coeff_with(&self.kostka, k, gamma)
        }

        /// `ℛ_k` restricted to positions `1..=window` on every chain.
        pub fn enumerate_r_k_in_window<Q: Coefficient>(
            &self,
            flavor: LieFlavor,
            k: u32,
            window: usize,
        ) -> Result<Vec<Weight<Q>>> {
            partition::enumerate_r_k_in_window_with(&self.kostka, flavor, k, window)
        }

        /// `ℛ_k` restricted to per-chain windows.
        pub fn enumerate_r_k_in_windows<Q: Coefficient>(
            &self,
            flavor: LieFlavor,
            k: u32,
            windows: &[usize],
        ) -> Result<Vec<Weight<Q>>> {
            partition::enumerate_r_k_in_windows_with(&self.kostka, flavor, k, windows)
        }

        pub fn kl_poly(&self, x: &Permutation, w: &Permutation) -> Result<KlPolynomial> {
            self.kl.kl_poly(x, w)
        }

        pub fn product_kl(&self, xs: &[Permutation], ws: &[Permutation]) -> Result<KlPolynomial> {
            self.kl.product_kl(xs, ws)
        }
    }
}
