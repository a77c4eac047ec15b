//! Composition multiplicities: finite Verma multiplicities, stable
//! multiplicities `m(λ, μ)`, standard multiplicities `[W(λ) : L(ν)]`,
//! standard filtrations of injectives, and canonical-filtration layers.
//!
//! Degree convention: `γ ∈ ℛ_k` has `d(γ) = −k`, so the `k`-th layer of
//! `W(λ)` lives in degree `d(λ) − k`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arrange::rearrangements;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::order::{fin_up_set, leq_fin};
use crate::perm::Permutation;
use crate::scalar::Coefficient;
use crate::weight::{block_label, degree, LieFlavor, Weight};
use crate::Multiplicity;

/// Dot-orbit bookkeeping of one chain window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainOrbit {
    pub window: usize,
    /// Entries of `weight + ρ`, weakly increasing (the antidominant point).
    pub sorted: Vec<i64>,
    /// Sizes of the runs of equal entries in `sorted` (stabilizer blocks).
    pub blocks: Vec<usize>,
    /// Shortest `π` with `(weight + ρ)_i = sorted[π(i)]`.
    pub perm: Permutation,
}

impl ChainOrbit {
    /// From mirrored coordinates of `weight + ρ`.
    fn from_shifted(v: &[i64]) -> Self {
        let mut sorted = v.to_vec();
        sorted.sort_unstable();
        let blocks = sorted.chunk_by(|a, b| a == b).map(<[i64]>::len).collect();
        let one_line: Vec<u8> = (0..v.len())
            .map(|i| {
                let below = v.iter().filter(|&&x| x < v[i]).count();
                let earlier_ties = v[..i].iter().filter(|&&x| x == v[i]).count();
                (below + earlier_ties) as u8
            })
            .collect();
        ChainOrbit { window: v.len(), sorted, blocks, perm: Permutation::from_zero_based(one_line) }
    }

    /// `weight + ρ` recovered from the antidominant point and `perm`.
    pub fn reproduce(&self) -> Vec<i64> {
        self.perm.one_line().iter().map(|&j| self.sorted[j - 1]).collect()
    }

    /// `σ = w₀ π`: rank of each entry in decreasing order, later ties ranked
    /// first. `σ = e` exactly for dominant weights.
    pub fn dominance_perm(&self) -> Permutation {
        let n = self.window as u8;
        Permutation::from_zero_based(self.perm.zero_based().iter().map(|&j| n - 1 - j).collect())
    }
}

/// Per-chain dot-orbit data of an integral weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDatum {
    pub chains: Vec<ChainOrbit>,
}

impl OrbitDatum {
    /// From factor vectors in chain coordinates (ρ is `−p` at position `p`).
    pub fn from_factors(factors: &[Vec<i64>]) -> Self {
        OrbitDatum {
            chains: factors
                .iter()
                .map(|f| {
                    let shifted: Vec<i64> = f.iter().enumerate().map(|(p, x)| x - (p as i64 + 1)).collect();
                    ChainOrbit::from_shifted(&shifted)
                })
                .collect(),
        }
    }

    pub fn of_weight<Q: Coefficient>(w: &Weight<Q>, windows: &[usize]) -> Result<Self> {
        Ok(Self::from_factors(&int_factors(w, windows)?))
    }

    pub fn same_orbit(&self, other: &Self) -> bool {
        self.chains.len() == other.chains.len()
            && self.chains.iter().zip(&other.chains).all(|(a, b)| a.sorted == b.sorted)
    }
}

fn int_factors<Q: Coefficient>(w: &Weight<Q>, windows: &[usize]) -> Result<Vec<Vec<i64>>> {
    if !w.is_integral() {
        return Err(Error::precondition(format!("weight `{w}` is not integral")));
    }
    w.flavor()
        .chains()
        .iter()
        .zip(windows)
        .map(|(&c, &n)| {
            w.int_chain_vector(c, n)
                .ok_or_else(|| Error::ResourceBound("coefficient out of i64 range".into()))
        })
        .collect()
}

/// Multiplicities indexed by weight, relative to a base weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable<Q: Coefficient> {
    pub base: Weight<Q>,
    pub entries: BTreeMap<Weight<Q>, Multiplicity>,
}

impl<Q: Coefficient> MultTable<Q> {
    pub fn new(base: Weight<Q>) -> Self {
        MultTable { base, entries: BTreeMap::new() }
    }

    pub fn get(&self, w: &Weight<Q>) -> Multiplicity {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    /// Exactly `{base ↦ 1}`.
    pub fn is_base_singleton(&self) -> bool {
        self.entries.len() == 1 && self.get(&self.base).is_one()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub(crate) struct AsNumber<'a>(pub &'a BigUint);

impl Serialize for AsNumber<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.collect_str(self.0),
        }
    }
}

struct Entries<'a, Q: Coefficient>(&'a BTreeMap<Weight<Q>, Multiplicity>);

impl<Q: Coefficient> Serialize for Entries<'_, Q> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (w, v) in self.0 {
            m.serialize_entry(&w.to_string(), &AsNumber(v))?;
        }
        m.end()
    }
}

/// `{"base": "<weight>", "entries": {"<weight>": n, …}}`.
impl<Q: Coefficient> Serialize for MultTable<Q> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("base", &self.base)?;
        m.serialize_entry("entries", &Entries(&self.entries))?;
        m.end()
    }
}

/// One summand `c_k(γ) · m(λ + γ, ν)` of a standard multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTerm<Q: Coefficient> {
    pub gamma: Weight<Q>,
    pub c: Multiplicity,
    pub m: Multiplicity,
}

fn require_integral<Q: Coefficient>(ws: &[&Weight<Q>]) -> Result<()> {
    if let Some(w) = ws.iter().find(|w| !w.is_integral()) {
        return Err(Error::precondition(format!("weight `{w}` is not integral")));
    }
    if let Some(w) = ws.iter().find(|w| w.flavor() != ws[0].flavor()) {
        return Err(Error::precondition(format!("flavor mismatch: {} vs {}", ws[0].flavor(), w.flavor())));
    }
    Ok(())
}

fn to_u32<Q: Coefficient>(q: &Q) -> Result<u32> {
    q.as_i64()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| Error::ResourceBound(format!("{q} does not fit in u32")))
}

impl Engine {
    /// `[M(λ) : L(μ)]` in a product of type-A algebras.
    ///
    /// Each factor lists the entries of the weight at positions `1..=n` of
    /// one chain (ρ is `−p` at position `p`). The value is the product over
    /// factors of `P_{σ_λ, σ_μ}(1)`, where `σ` ranks the entries of
    /// `weight + ρ` decreasingly; it is 0 unless every factor lies in one
    /// dot-orbit.
    pub fn finite_verma_mult(&self, lam_fin: &[Vec<i64>], mu_fin: &[Vec<i64>]) -> Result<Multiplicity> {
        if lam_fin.len() != mu_fin.len() || lam_fin.iter().zip(mu_fin).any(|(a, b)| a.len() != b.len()) {
            return Err(Error::precondition("λ and μ must have the same factor shapes"));
        }
        let lo = OrbitDatum::from_factors(lam_fin);
        let mo = OrbitDatum::from_factors(mu_fin);
        if !lo.same_orbit(&mo) {
            return Ok(Multiplicity::zero());
        }
        let mut total = Multiplicity::one();
        for ((a, b), (lf, mf)) in lo.chains.iter().zip(&mo.chains).zip(lam_fin.iter().zip(mu_fin)) {
            if lf == mf {
                continue;
            }
            let p = self.kl.kl_poly(&a.dominance_perm(), &b.dominance_perm())?;
            let v = p.eval(&One::one());
            if !v.is_positive() {
                return Ok(Multiplicity::zero());
            }
            total *= v.magnitude();
        }
        Ok(total)
    }

    /// Stable multiplicity `m(λ, μ) = [M_n(λ) : L(μ)]` for large `n`.
    pub fn stable_mult<Q: Coefficient>(&self, lam: &Weight<Q>, mu: &Weight<Q>) -> Result<Multiplicity> {
        self.stable_mult_in_window(lam, mu, 0)
    }

    /// `m(λ, μ)` evaluated on windows `extra` positions larger than minimal.
    pub fn stable_mult_in_window<Q: Coefficient>(
        &self,
        lam: &Weight<Q>,
        mu: &Weight<Q>,
        extra: usize,
    ) -> Result<Multiplicity> {
        require_integral(&[lam, mu])?;
        if lam == mu {
            return Ok(Multiplicity::one());
        }
        if !leq_fin(mu, lam)? {
            return Ok(Multiplicity::zero());
        }
        let windows: Vec<usize> = lam
            .support_bounds()
            .iter()
            .zip(mu.support_bounds())
            .map(|(a, b)| *a.max(&b) + extra)
            .collect();
        self.finite_verma_mult(&int_factors(lam, &windows)?, &int_factors(mu, &windows)?)
    }

    /// The nonzero summands of `[W(λ) : L(ν)]`.
    pub fn standard_mult_terms<Q: Coefficient>(
        &self,
        lam: &Weight<Q>,
        nu: &Weight<Q>,
    ) -> Result<Vec<StandardTerm<Q>>> {
        require_integral(&[lam, nu])?;
        let gap = degree(lam) - degree(nu);
        if !gap.is_integral() || gap.is_negative() || block_label(lam) != block_label(nu) {
            return Ok(Vec::new());
        }
        let k = to_u32(&gap)?;
        let mut terms = Vec::new();
        for kappa in fin_up_set(nu) {
            let gamma = &kappa - lam;
            let c = self.c_coeff(k, &gamma)?;
            if c.is_zero() {
                continue;
            }
            let m = self.stable_mult(&kappa, nu)?;
            if !m.is_zero() {
                terms.push(StandardTerm { gamma, c, m });
            }
        }
        Ok(terms)
    }

    /// `[W(λ) : L(ν)] = Σ_γ c_k(γ) m(λ + γ, ν)` with `k = d(λ) − d(ν)`.
    pub fn standard_mult<Q: Coefficient>(&self, lam: &Weight<Q>, nu: &Weight<Q>) -> Result<Multiplicity> {
        Ok(self
            .standard_mult_terms(lam, nu)?
            .into_iter()
            .map(|t| t.c * t.m)
            .sum())
    }

    /// Standard filtration multiplicities `(I(μ) : W(λ)) = m(λ, μ)` over `λ ∈ μ⁺_fin`.
    pub fn injective_filtration<Q: Coefficient>(&self, mu: &Weight<Q>) -> Result<MultTable<Q>> {
        require_integral(&[mu])?;
        let mut table = MultTable::new(mu.clone());
        for lam in fin_up_set(mu) {
            let m = self.stable_mult(&lam, mu)?;
            if !m.is_zero() {
                table.entries.insert(lam, m);
            }
        }
        Ok(table)
    }

    /// Simple constituents `ν` of the `k`-th canonical-filtration layer of
    /// `W(λ)` whose support lies in positions `1..=windows[c]` of each chain.
    ///
    /// The full layer is infinite in general, hence the explicit windows.
    pub fn layer_mults<Q: Coefficient>(&self, lam: &Weight<Q>, k: u32, windows: &[usize]) -> Result<MultTable<Q>> {
        require_integral(&[lam])?;
        let flavor = lam.flavor();
        if windows.len() != flavor.chains().len() {
            return Err(Error::precondition("one window per chain"));
        }
        let budget = match flavor {
            LieFlavor::Sl => k as usize,
            LieFlavor::O | LieFlavor::Sp => 2 * k as usize,
        };
        // Every contributing γ is supported below these bounds.
        let gamma_windows: Vec<usize> = flavor
            .chains()
            .iter()
            .zip(windows)
            .map(|(&c, &w)| {
                let n = lam.support_bound(c);
                let neg_min = lam
                    .shifted_chain_vector(c, n)
                    .iter()
                    .min()
                    .and_then(|m| (-m.clone()).as_i64())
                    .map_or(0, |m| m.max(0) as usize);
                (w.max(n).max(neg_min) + budget.saturating_sub(1)).max(1)
            })
            .collect();
        let gammas: Vec<Weight<Q>> = if k == 0 {
            vec![Weight::zero(flavor)]
        } else {
            self.enumerate_r_k_in_windows(flavor, k, &gamma_windows)?
        };
        let mut candidates = BTreeSet::new();
        for gamma in gammas {
            let kappa = lam + &gamma;
            let per_chain: Vec<Vec<Vec<i64>>> = flavor
                .chains()
                .iter()
                .zip(windows.iter().zip(&gamma_windows))
                .map(|(&c, (&w, &gw))| {
                    let r = gw.max(w).max(kappa.support_bound(c));
                    let base: Vec<i64> = kappa
                        .int_chain_vector(c, r)
                        .ok_or_else(|| Error::ResourceBound("coefficient out of i64 range".into()))?
                        .iter()
                        .enumerate()
                        .map(|(p, x)| x - (p as i64 + 1))
                        .collect();
                    let mut out = Vec::new();
                    rearrangements(
                        &base,
                        |p, v: &i64, d: &i64| *d <= 0 && (p < w || *v == -(p as i64 + 1)),
                        |y| out.push(y.iter().take(w).enumerate().map(|(p, v)| v + p as i64 + 1).collect()),
                    );
                    Ok(out)
                })
                .collect::<Result<_>>()?;
            for vs in itertools::Itertools::multi_cartesian_product(per_chain.into_iter()) {
                candidates.insert(Weight::<Q>::from_int_chain_vectors(flavor, &vs));
            }
        }
        let mut table = MultTable::new(lam.clone());
        for nu in candidates {
            let m = self.standard_mult(lam, &nu)?;
            if !m.is_zero() {
                table.entries.insert(nu, m);
            }
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type W = Weight<Rational64>;

    fn w(f: LieFlavor, s: &str) -> W {
        W::parse(f, s).unwrap()
    }

    fn n(v: u64) -> Multiplicity {
        Multiplicity::from(v)
    }

    #[test]
    fn orbit_datum_reproduces() {
        let o = OrbitDatum::from_factors(&[vec![0, 1, 1, -3], vec![2, 0]]);
        for (c, f) in o.chains.iter().zip([vec![0i64, 1, 1, -3], vec![2, 0]]) {
            let shifted: Vec<i64> = f.iter().enumerate().map(|(p, x)| x - (p as i64 + 1)).collect();
            assert_eq!(c.reproduce(), shifted);
            assert_eq!(c.blocks.iter().sum::<usize>(), c.window);
        }
        assert_eq!(o.chains[0].blocks, vec![1, 1, 2]);
        let dom = OrbitDatum::from_factors(&[vec![2, 1, 0]]);
        assert_eq!(dom.chains[0].dominance_perm(), Permutation::identity(3));
    }

    #[test]
    fn finite_verma_examples() {
        let e = Engine::default();
        assert_eq!(e.finite_verma_mult(&[vec![0, 0]], &[vec![0, 0]]).unwrap(), n(1));
        assert_eq!(e.finite_verma_mult(&[vec![0, 0]], &[vec![-1, 1]]).unwrap(), n(1));
        assert_eq!(e.finite_verma_mult(&[vec![-1, 1]], &[vec![0, 0]]).unwrap(), n(0));
        assert_eq!(e.finite_verma_mult(&[vec![0, 0]], &[vec![1, 0]]).unwrap(), n(0));
        assert!(e.finite_verma_mult(&[vec![0, 0]], &[vec![0]]).is_err());
    }

    /// In sl(4) the dominant Verma module contains some simple twice, and the
    /// antidominant simple occurs exactly once in every Verma module.
    #[test]
    fn sl4_regular_block() {
        let e = Engine::default();
        // ρ-shifted entries (−1,−2,−3,−4) are dominant for λ = 0.
        let raw_of = |p: &Permutation| -> Vec<i64> {
            p.one_line().iter().enumerate().map(|(i, &v)| (i as i64 + 1) - v as i64).collect()
        };
        let lam0 = vec![0i64; 4];
        let w0 = Permutation::longest(4);
        let mut max = n(0);
        for y in Permutation::all(4) {
            let wy = raw_of(&y);
            let m_anti = e.finite_verma_mult(std::slice::from_ref(&wy), &[raw_of(&w0)]).unwrap();
            assert_eq!(m_anti, n(1), "antidominant simple in M({y})");
            max = max.max(e.finite_verma_mult(std::slice::from_ref(&lam0), &[wy]).unwrap());
        }
        assert_eq!(max, n(2));
    }

    #[test]
    fn stable_mult_examples() {
        let e = Engine::default();
        let sl = LieFlavor::Sl;
        let zero = W::zero(sl);
        let a = w(sl, "1:-1,2:1");
        assert_eq!(e.stable_mult(&a, &a).unwrap(), n(1));
        assert_eq!(e.stable_mult(&zero, &a).unwrap(), n(1));
        assert_eq!(e.stable_mult(&zero, &w(sl, "1:1")).unwrap(), n(0));
        assert_eq!(e.stable_mult_in_window(&zero, &a, 2).unwrap(), n(1));
        assert!(e.stable_mult(&zero, &w(sl, "1:1/2")).is_err());
    }

    #[test]
    fn standard_mult_examples() {
        let e = Engine::default();
        let sl = LieFlavor::Sl;
        let zero = W::zero(sl);
        assert_eq!(e.standard_mult(&zero, &zero).unwrap(), n(1));
        assert_eq!(e.standard_mult(&zero, &w(sl, "1:-1,-1:1")).unwrap(), n(1));
        let a = w(sl, "1:-1,2:1");
        assert_eq!(e.standard_mult(&zero, &a).unwrap(), e.stable_mult(&zero, &a).unwrap());
        assert_eq!(e.standard_mult(&w(sl, "1:-1,-1:1"), &zero).unwrap(), n(0));
    }

    #[test]
    fn injective_filtration_examples() {
        let e = Engine::default();
        let sl = LieFlavor::Sl;
        let a = w(sl, "1:-1,2:1");
        let t = e.injective_filtration(&a).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(&a), n(1));
        assert_eq!(t.get(&W::zero(sl)), n(1));
        let dom = w(sl, "1:2,-1:-1");
        assert!(e.injective_filtration(&dom).unwrap().is_base_singleton());
    }

    #[test]
    fn layer_zero_contains_base() {
        let e = Engine::default();
        let sl = LieFlavor::Sl;
        let zero = W::zero(sl);
        let t = e.layer_mults(&zero, 0, &[2, 1]).unwrap();
        assert_eq!(t.get(&zero), n(1));
        assert_eq!(t.get(&w(sl, "1:-1,2:1")), n(1));
        assert_eq!(t.len(), 2);
        let t1 = e.layer_mults(&zero, 1, &[1, 1]).unwrap();
        assert_eq!(t1.get(&w(sl, "1:-1,-1:1")), n(1));
        for nu in t1.entries.keys() {
            assert_eq!(block_label(nu), block_label(&zero));
        }
    }
}
