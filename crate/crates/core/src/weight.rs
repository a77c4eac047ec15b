//! Weights on the index chain, the ρ-shift, degree, dominance, finite-root
//! decomposability and block labels.
//!
//! Internally every chain is read in "mirrored" coordinates: position
//! `p = 1, 2, …` along the chain, where the left chain is the index `p` and
//! the right chain of sl(∞) is the index `−p` with its coefficient negated.
//! In these coordinates every chain looks like the left chain: ρ has entry
//! `−p`, simple roots are `e_p − e_{p+1}`, and dominance means "is a
//! partition".

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use itertools::Itertools;
use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// The three finitary Lie algebras. `O` is o(∞) in its D∞ form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LieFlavor {
    Sl,
    O,
    Sp,
}

impl LieFlavor {
    pub fn chains(self) -> &'static [Chain] {
        match self {
            LieFlavor::Sl => &[Chain::Left, Chain::Right],
            LieFlavor::O | LieFlavor::Sp => &[Chain::Left],
        }
    }

    pub fn is_valid_index(self, index: i64) -> bool {
        match self {
            LieFlavor::Sl => index != 0,
            LieFlavor::O | LieFlavor::Sp => index > 0,
        }
    }
}

impl fmt::Display for LieFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieFlavor::Sl => "sl",
            LieFlavor::O => "o",
            LieFlavor::Sp => "sp",
        })
    }
}

impl FromStr for LieFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl" => Ok(LieFlavor::Sl),
            "o" => Ok(LieFlavor::O),
            "sp" => Ok(LieFlavor::Sp),
            other => Err(Error::parse(format!("unknown flavor `{other}` (expected sl, o or sp)"))),
        }
    }
}

/// One side of the index set: `Left` holds the positive indices, `Right`
/// the negative indices of sl(∞), ordered `⋯ ≺ −2 ≺ −1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chain {
    Left,
    Right,
}

impl Chain {
    /// Index at 1-based position `p` of this chain.
    pub fn index(self, p: usize) -> i64 {
        match self {
            Chain::Left => p as i64,
            Chain::Right => -(p as i64),
        }
    }
}

/// A finitely supported weight with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is weight
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight<Q = BigRational> {
    flavor: LieFlavor,
    entries: BTreeMap<i64, Q>,
}

impl<Q: Coefficient> Weight<Q> {
    pub fn zero(flavor: LieFlavor) -> Self {
        Weight { flavor, entries: BTreeMap::new() }
    }

    /// Builds a weight from `(index, coefficient)` pairs; repeated indices add.
    pub fn from_entries<I>(flavor: LieFlavor, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Q)>,
    {
        let mut w = Weight::zero(flavor);
        for (i, c) in entries {
            if !flavor.is_valid_index(i) {
                return Err(Error::precondition(format!("index {i} is not valid for {flavor}")));
            }
            let v = w.coeff(i) + c;
            w.set(i, v);
        }
        Ok(w)
    }

    pub fn from_int_entries<I>(flavor: LieFlavor, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_entries(flavor, entries.into_iter().map(|(i, c)| (i, Q::from_integer(c))))
    }

    /// Builds a weight from mirrored chain vectors (one per chain of the flavor).
    pub fn from_chain_vectors(flavor: LieFlavor, vectors: &[Vec<Q>]) -> Self {
        assert_eq!(vectors.len(), flavor.chains().len(), "one vector per chain");
        let mut w = Weight::zero(flavor);
        for (&chain, v) in flavor.chains().iter().zip(vectors) {
            for (p, c) in v.iter().enumerate() {
                let value = match chain {
                    Chain::Left => c.clone(),
                    Chain::Right => -c.clone(),
                };
                w.set(chain.index(p + 1), value);
            }
        }
        w
    }

    pub fn from_int_chain_vectors(flavor: LieFlavor, vectors: &[Vec<i64>]) -> Self {
        let vs: Vec<Vec<Q>> = vectors
            .iter()
            .map(|v| v.iter().map(|&c| Q::from_integer(c)).collect())
            .collect();
        Self::from_chain_vectors(flavor, &vs)
    }

    pub fn flavor(&self) -> LieFlavor {
        self.flavor
    }

    pub fn coeff(&self, index: i64) -> Q {
        self.entries.get(&index).cloned().unwrap_or_else(Q::zero)
    }

    fn set(&mut self, index: i64, value: Q) {
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    /// Nonzero entries, left chain ascending then right chain by `|index|`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, &Q)> + '_ {
        let left = self.entries.range(1..).map(|(&i, c)| (i, c));
        let right = self.entries.range(..0).rev().map(|(&i, c)| (i, c));
        left.chain(right)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(Coefficient::is_integral)
    }

    /// Largest chain position carrying a nonzero entry (0 if none).
    pub fn support_bound(&self, chain: Chain) -> usize {
        let last = match chain {
            Chain::Left => self.entries.range(1..).next_back().map(|(&i, _)| i),
            Chain::Right => self.entries.range(..0).next().map(|(&i, _)| i),
        };
        last.map_or(0, |i| i.unsigned_abs() as usize)
    }

    /// Support bounds of all chains of the flavor.
    pub fn support_bounds(&self) -> Vec<usize> {
        self.flavor.chains().iter().map(|&c| self.support_bound(c)).collect()
    }

    /// Mirrored coefficients at positions `1..=len` of `chain`.
    pub fn chain_vector(&self, chain: Chain, len: usize) -> Vec<Q> {
        (1..=len)
            .map(|p| {
                let c = self.coeff(chain.index(p));
                match chain {
                    Chain::Left => c,
                    Chain::Right => -c,
                }
            })
            .collect()
    }

    /// Mirrored integer coefficients, or `None` if some entry is not an `i64`.
    pub fn int_chain_vector(&self, chain: Chain, len: usize) -> Option<Vec<i64>> {
        self.chain_vector(chain, len).iter().map(Coefficient::as_i64).collect()
    }

    /// Mirrored coordinates of `self + ρ` at positions `1..=len`.
    pub fn shifted_chain_vector(&self, chain: Chain, len: usize) -> Vec<Q> {
        self.chain_vector(chain, len)
            .into_iter()
            .enumerate()
            .map(|(p, c)| c - Q::from_integer(p as i64 + 1))
            .collect()
    }

    pub fn coefficient_sum(&self) -> Q {
        self.entries.values().fold(Q::zero(), |acc, c| acc + c.clone())
    }

    fn require_same_flavor(&self, other: &Self) -> Result<()> {
        if self.flavor == other.flavor {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "flavor mismatch: {} vs {}",
                self.flavor, other.flavor
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_same_flavor(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.entries {
            let v = out.coeff(i) + c.clone();
            out.set(i, v);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Parses `index:coefficient` pairs separated by commas; the empty string
    /// is the zero weight.
    pub fn parse(flavor: LieFlavor, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Weight::zero(flavor));
        }
        let mut entries = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for item in text.split(',') {
            let (i, c) = item
                .split_once(':')
                .ok_or_else(|| Error::parse(format!("weight entry `{item}` is not index:coefficient")))?;
            let i: i64 = i
                .trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad weight index `{}`", i.trim())))?;
            let c = Q::parse_coefficient(c)
                .ok_or_else(|| Error::parse(format!("bad coefficient `{}`", c.trim())))?;
            if !seen.insert(i) {
                return Err(Error::parse(format!("index {i} given twice")));
            }
            entries.push((i, c));
        }
        Self::from_entries(flavor, entries).map_err(|e| match e {
            Error::Precondition(m) => Error::Parse(m),
            other => other,
        })
    }

    /// Canonical display order key: support (in display order), then coefficients.
    fn sort_key(&self) -> (Vec<i64>, Vec<&Q>) {
        self.entries().unzip()
    }
}

impl<Q: Coefficient> fmt::Display for Weight<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries().map(|(i, c)| format!("{i}:{c}")).join(","))
    }
}

impl<Q: Coefficient> PartialOrd for Weight<Q> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical output order: flavor, then support, then coefficients.
impl<Q: Coefficient> Ord for Weight<Q> {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, ca) = self.sort_key();
        let (sb, cb) = other.sort_key();
        self.flavor
            .cmp(&other.flavor)
            .then_with(|| sa.len().cmp(&sb.len()))
            .then_with(|| sa.cmp(&sb))
            .then_with(|| ca.cmp(&cb))
    }
}

impl<Q: Coefficient> Serialize for Weight<Q> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<Q: Coefficient> Neg for &Weight<Q> {
    type Output = Weight<Q>;

    fn neg(self) -> Weight<Q> {
        Weight {
            flavor: self.flavor,
            entries: self.entries.iter().map(|(&i, c)| (i, -c.clone())).collect(),
        }
    }
}

/// Panics on flavor mismatch; use [`Weight::checked_add`] for untrusted input.
impl<Q: Coefficient> Add for &Weight<Q> {
    type Output = Weight<Q>;

    fn add(self, rhs: &Weight<Q>) -> Weight<Q> {
        self.checked_add(rhs).expect("adding weights of different flavors")
    }
}

/// Panics on flavor mismatch; use [`Weight::checked_sub`] for untrusted input.
impl<Q: Coefficient> Sub for &Weight<Q> {
    type Output = Weight<Q>;

    fn sub(self, rhs: &Weight<Q>) -> Weight<Q> {
        self.checked_sub(rhs).expect("subtracting weights of different flavors")
    }
}

/// The ρ coefficient at `index`: `−i` on the left chain, `+j` at index `−j`.
pub fn rho<Q: Coefficient>(flavor: LieFlavor, index: i64) -> Result<Q> {
    if !flavor.is_valid_index(index) {
        return Err(Error::precondition(format!("index {index} is not valid for {flavor}")));
    }
    Ok(Q::from_integer(-index.abs() * index.signum()))
}

/// `d(λ)`: half the sum of mirrored coefficients over all chains.
pub fn degree<Q: Coefficient>(w: &Weight<Q>) -> Q {
    let signed = w.entries.iter().fold(Q::zero(), |acc, (&i, c)| {
        if i > 0 {
            acc + c.clone()
        } else {
            acc - c.clone()
        }
    });
    signed / Q::from_integer(2)
}

fn is_partition<Q: Coefficient>(v: &[Q]) -> bool {
    v.iter().all(|c| c.is_integral() && !c.is_negative()) && v.iter().tuple_windows().all(|(a, b)| a >= b)
}

/// Every mirrored chain vector is a partition.
pub fn is_b_dominant<Q: Coefficient>(w: &Weight<Q>) -> bool {
    w.flavor
        .chains()
        .iter()
        .all(|&c| is_partition(&w.chain_vector(c, w.support_bound(c))))
}

/// `diff` is a nonnegative integral combination of simple finite roots.
pub fn is_nonneg_simple_combination<Q: Coefficient>(diff: &Weight<Q>) -> bool {
    diff.flavor.chains().iter().all(|&chain| {
        let v = diff.chain_vector(chain, diff.support_bound(chain));
        let mut prefix = Q::zero();
        for c in v {
            prefix = prefix + c;
            if !prefix.is_integral() || prefix.is_negative() {
                return false;
            }
        }
        prefix.is_zero()
    })
}

/// Coset of a weight modulo the root lattice.
///
/// `fractional` maps each index with a non-integral coefficient to its
/// fractional part; `class` is the exact coefficient sum (sl) or the sum
/// reduced into `[0, 2)` (o, sp).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(bound = "Q: Coefficient")]
pub struct BlockLabel<Q = BigRational> {
    pub flavor: LieFlavor,
    #[serde(serialize_with = "serialize_fractional")]
    pub fractional: BTreeMap<i64, Q>,
    #[serde(serialize_with = "serialize_display")]
    pub class: Q,
}

fn serialize_fractional<Q: Coefficient, S: Serializer>(
    m: &BTreeMap<i64, Q>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(i, q)| (i.to_string(), q.to_string())))
}

fn serialize_display<Q: Coefficient, S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

impl<Q: Coefficient> BlockLabel<Q> {
    pub fn is_integral(&self) -> bool {
        self.fractional.is_empty()
    }
}

pub fn block_label<Q: Coefficient>(w: &Weight<Q>) -> BlockLabel<Q> {
    let fractional = w
        .entries
        .iter()
        .filter(|(_, c)| !c.is_integral())
        .map(|(&i, c)| (i, c.fract_part()))
        .collect();
    let sum = w.coefficient_sum();
    let class = match w.flavor {
        LieFlavor::Sl => sum,
        LieFlavor::O | LieFlavor::Sp => {
            let two = Q::from_integer(2);
            let q = (sum.clone() / two.clone()).floor();
            sum - q * two
        }
    };
    BlockLabel { flavor: w.flavor, fractional, class }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type W = Weight<Rational64>;

    fn w(f: LieFlavor, s: &str) -> W {
        W::parse(f, s).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho::<Rational64>(LieFlavor::O, 3).unwrap(), Rational64::from_integer(-3));
        assert_eq!(rho::<Rational64>(LieFlavor::Sl, 1).unwrap(), Rational64::from_integer(-1));
        assert_eq!(rho::<Rational64>(LieFlavor::Sl, -2).unwrap(), Rational64::from_integer(2));
        assert!(rho::<Rational64>(LieFlavor::O, -1).is_err());
        assert!(rho::<Rational64>(LieFlavor::Sl, 0).is_err());
    }

    #[test]
    fn degree_values() {
        assert_eq!(degree(&W::zero(LieFlavor::Sl)), Rational64::from_integer(0));
        assert_eq!(degree(&w(LieFlavor::Sl, "1:1")), Rational64::new(1, 2));
        assert_eq!(degree(&w(LieFlavor::O, "1:1,2:1")), Rational64::from_integer(1));
        assert_eq!(degree(&w(LieFlavor::Sl, "-1:-1")), Rational64::new(1, 2));
    }

    #[test]
    fn dominance() {
        assert!(is_b_dominant(&W::zero(LieFlavor::Sl)));
        assert!(is_b_dominant(&w(LieFlavor::Sl, "1:2,2:1,-1:-1")));
        assert!(!is_b_dominant(&w(LieFlavor::Sl, "2:1")));
        assert!(!is_b_dominant(&w(LieFlavor::Sl, "-1:1")));
        assert!(!is_b_dominant(&w(LieFlavor::O, "1:1/2")));
    }

    #[test]
    fn simple_combinations() {
        assert!(is_nonneg_simple_combination(&W::zero(LieFlavor::Sl)));
        assert!(is_nonneg_simple_combination(&w(LieFlavor::Sl, "1:1,2:-1")));
        assert!(!is_nonneg_simple_combination(&w(LieFlavor::Sl, "1:1")));
        assert!(!is_nonneg_simple_combination(&w(LieFlavor::Sl, "1:-1,2:1")));
        // ε₋₂ − ε₋₁ is the simple root between −2 and −1.
        assert!(is_nonneg_simple_combination(&w(LieFlavor::Sl, "-2:1,-1:-1")));
        assert!(!is_nonneg_simple_combination(&w(LieFlavor::Sl, "-2:-1,-1:1")));
    }

    #[test]
    fn block_labels() {
        let sl = LieFlavor::Sl;
        let l = w(sl, "1:3,2:1/2,-1:-2");
        let root = w(sl, "1:1,-1:-1");
        assert_eq!(block_label(&l), block_label(&(&l + &root)));
        assert_ne!(block_label(&w(LieFlavor::O, "1:1")), block_label(&W::zero(LieFlavor::O)));
        assert_ne!(block_label(&w(sl, "1:1")), block_label(&W::zero(sl)));
        assert_ne!(block_label(&w(sl, "1:1/2")), block_label(&w(sl, "2:1/2")));
        assert_eq!(block_label(&w(LieFlavor::Sp, "1:3")), block_label(&w(LieFlavor::Sp, "2:-1")));
    }

    #[test]
    fn parse_display_roundtrip() {
        let l = w(LieFlavor::Sl, "-1:-2,1:3,2:1");
        assert_eq!(l.to_string(), "1:3,2:1,-1:-2");
        assert_eq!(w(LieFlavor::Sl, &l.to_string()), l);
        assert_eq!(w(LieFlavor::O, "").to_string(), "");
        assert!(W::parse(LieFlavor::O, "-1:1").is_err());
        assert!(W::parse(LieFlavor::O, "1:x").is_err());
        assert!(W::parse(LieFlavor::O, "1:1,1:2").is_err());
        assert_eq!(w(LieFlavor::O, "1:0"), W::zero(LieFlavor::O));
    }

    #[test]
    fn chain_vectors() {
        let l = w(LieFlavor::Sl, "1:3,2:1,-1:-2");
        assert_eq!(l.int_chain_vector(Chain::Right, 2).unwrap(), vec![2, 0]);
        assert_eq!(l.support_bounds(), vec![2, 1]);
        let back = W::from_int_chain_vectors(LieFlavor::Sl, &[vec![3, 1], vec![2]]);
        assert_eq!(back, l);
        let shifted = l.shifted_chain_vector(Chain::Left, 3);
        assert_eq!(shifted, vec![2.into(), (-1).into(), (-3).into()]);
    }
}
