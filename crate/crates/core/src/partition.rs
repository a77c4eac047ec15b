//! Partitions, Kostka numbers, and the weight multiplicities `c_k(γ)` of the
//! layer modules `R(∞, k)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::weight::{LieFlavor, Weight};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::precondition("partition parts must be positive"));
        }
        if parts.iter().tuple_windows().any(|(a, b)| a < b) {
            return Err(Error::precondition("partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// `self` dominates `other` (both of the same size).
    pub fn dominates(&self, other: &[u32]) -> bool {
        dominates(&self.0, other)
    }
}

fn dominates(shape: &[u32], content_desc: &[u32]) -> bool {
    let mut a = 0u64;
    let mut b = 0u64;
    for i in 0..content_desc.len().max(shape.len()) {
        a += u64::from(shape.get(i).copied().unwrap_or(0));
        b += u64::from(content_desc.get(i).copied().unwrap_or(0));
        if b > a {
            return false;
        }
    }
    a == b
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s).trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::parse(format!("bad entry `{}`", t.trim()))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1,1]` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?).map_err(|e| Error::parse(e.to_string()))
    }
}

/// A finite list of nonnegative integers, used as tableau content.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All compositions of `total` into exactly `slots` nonnegative parts.
    pub fn all_of(total: u32, slots: usize) -> Vec<Composition> {
        fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if slots == 1 {
                cur.push(rest);
                out.push(Composition(cur.clone()));
                cur.pop();
                return;
            }
            for first in (0..=rest).rev() {
                cur.push(first);
                go(rest - first, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        match slots {
            0 if total == 0 => out.push(Composition(Vec::new())),
            0 => {}
            _ => go(total, slots, &mut Vec::new(), &mut out),
        }
        out
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `1,1,1` or `[1,1,1]`.
    fn from_str(s: &str) -> Result<Self> {
        parse_list(s).map(Composition)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

type KostkaKey = (Vec<u32>, Vec<u32>);

/// Memoized Kostka numbers `K(shape, content)`, generic over the count type.
///
/// Content is normalized (zeros dropped, sorted) before lookup, so the table
/// is shared across all permutations of a content vector. The cache is
/// cleared wholesale once it holds `limit` entries.
pub struct KostkaTable<C = BigUint> {
    memo: Mutex<HashMap<KostkaKey, C>>,
    limit: usize,
}

impl<C> KostkaTable<C>
where
    C: Clone + Zero + One + Send,
{
    pub fn new(limit: usize) -> Self {
        KostkaTable { memo: Mutex::new(HashMap::new()), limit: limit.max(1) }
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.lock().expect("kostka cache poisoned").len()
    }

    pub fn kostka(&self, shape: &Partition, content: &Composition) -> C {
        let mut c: Vec<u32> = content.0.iter().copied().filter(|&x| x > 0).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        if shape.size() != c.iter().sum::<u32>() {
            return C::zero();
        }
        let mut memo = self.memo.lock().expect("kostka cache poisoned");
        if memo.len() >= self.limit {
            memo.clear();
        }
        kostka_rec(&mut memo, shape.parts(), &c)
    }
}

impl<C: Clone + Zero + One + Send> Default for KostkaTable<C> {
    fn default() -> Self {
        Self::new(1 << 20)
    }
}

/// `content` is sorted decreasingly with no zeros and has the same size as `shape`.
fn kostka_rec<C: Clone + Zero + One>(memo: &mut HashMap<KostkaKey, C>, shape: &[u32], content: &[u32]) -> C {
    if content.is_empty() {
        return if shape.is_empty() { C::one() } else { C::zero() };
    }
    if !dominates(shape, content) {
        return C::zero();
    }
    if content.len() == 1 {
        return C::one();
    }
    let key = (shape.to_vec(), content.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (&last, rest) = content.split_last().expect("nonempty");
    let mut total = C::zero();
    for inner in horizontal_strip_removals(shape, last) {
        total = total + kostka_rec(memo, &inner, rest);
    }
    memo.insert(key, total.clone());
    total
}

/// All `ν ⊆ shape` such that `shape / ν` is a horizontal strip of size `r`.
fn horizontal_strip_removals(shape: &[u32], r: u32) -> Vec<Vec<u32>> {
    fn go(shape: &[u32], i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == shape.len() {
            if rest == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let max_remove = (shape[i] - below).min(rest);
        for take in 0..=max_remove {
            cur.push(shape[i] - take);
            go(shape, i + 1, rest - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, r, &mut Vec::new(), &mut out);
    out
}

/// Partitions indexing the irreducible summands of the `k`-th layer module:
/// all partitions of `k` (sl), even partitions of `2k` (o), partitions of
/// `2k` with even conjugate (sp).
pub fn layer_shapes(flavor: LieFlavor, k: u32) -> Vec<Partition> {
    match flavor {
        LieFlavor::Sl => Partition::all_of(k),
        LieFlavor::O => Partition::all_of(k)
            .into_iter()
            .map(|p| Partition(p.0.iter().map(|x| 2 * x).collect()))
            .collect(),
        LieFlavor::Sp => Partition::all_of(k)
            .into_iter()
            .map(|p| Partition(p.0.iter().map(|x| 2 * x).collect()).conjugate())
            .collect(),
    }
}

/// Negated mirrored chain vectors of `γ` as contents, if `γ ∈ ℛ_k` region
/// (entries ≤ 0 in mirrored coordinates, prescribed chain totals).
pub(crate) fn layer_contents<Q: Coefficient>(k: u32, gamma: &Weight<Q>) -> Result<Option<Vec<Composition>>> {
    if !gamma.is_integral() {
        return Err(Error::precondition("c_k(γ) needs an integral γ"));
    }
    let flavor = gamma.flavor();
    let target = match flavor {
        LieFlavor::Sl => i64::from(k),
        LieFlavor::O | LieFlavor::Sp => 2 * i64::from(k),
    };
    let mut out = Vec::new();
    for &chain in flavor.chains() {
        let v = gamma
            .int_chain_vector(chain, gamma.support_bound(chain))
            .ok_or_else(|| Error::ResourceBound("γ coefficient out of i64 range".into()))?;
        if v.iter().any(|&c| c > 0) || v.iter().map(|c| -c).sum::<i64>() != target {
            return Ok(None);
        }
        let parts = v
            .iter()
            .map(|&c| u32::try_from(-c).map_err(|_| Error::ResourceBound("γ entry too large".into())))
            .collect::<Result<Vec<u32>>>()?;
        out.push(Composition(parts));
    }
    Ok(Some(out))
}

/// `c_k(γ)` using the given Kostka table.
pub fn c_coeff_with<Q, C>(table: &KostkaTable<C>, k: u32, gamma: &Weight<Q>) -> Result<C>
where
    Q: Coefficient,
    C: Clone + Zero + One + Send,
{
    let Some(contents) = layer_contents(k, gamma)? else {
        return Ok(C::zero());
    };
    let flavor = gamma.flavor();
    let mut total = C::zero();
    for shape in layer_shapes(flavor, k) {
        let mut term = C::one();
        for content in &contents {
            term = term * table.kostka(&shape, content);
            if term.is_zero() {
                break;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// All `γ ∈ ℛ_k` supported in positions `1..=windows[c]` of each chain `c`,
/// with `c_k(γ) ≥ 1`, in canonical order.
pub fn enumerate_r_k_in_windows_with<Q, C>(
    table: &KostkaTable<C>,
    flavor: LieFlavor,
    k: u32,
    windows: &[usize],
) -> Result<Vec<Weight<Q>>>
where
    Q: Coefficient,
    C: Clone + Zero + One + Send,
{
    if windows.len() != flavor.chains().len() {
        return Err(Error::precondition("one window per chain"));
    }
    if windows.contains(&0) {
        return Err(Error::precondition("window must be at least 1"));
    }
    let per_chain_total = match flavor {
        LieFlavor::Sl => k,
        LieFlavor::O | LieFlavor::Sp => 2 * k,
    };
    let per_chain: Vec<Vec<Vec<i64>>> = windows
        .iter()
        .map(|&w| {
            Composition::all_of(per_chain_total, w)
                .into_iter()
                .map(|c| c.0.iter().map(|&x| -i64::from(x)).collect())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for v in per_chain.into_iter().multi_cartesian_product() {
        let gamma = Weight::<Q>::from_int_chain_vectors(flavor, &v);
        if !c_coeff_with(table, k, &gamma)?.is_zero() {
            out.push(gamma);
        }
    }
    out.sort();
    Ok(out)
}

/// All `γ ∈ ℛ_k` supported in positions `1..=window` of every chain.
pub fn enumerate_r_k_in_window_with<Q, C>(
    table: &KostkaTable<C>,
    flavor: LieFlavor,
    k: u32,
    window: usize,
) -> Result<Vec<Weight<Q>>>
where
    Q: Coefficient,
    C: Clone + Zero + One + Send,
{
    enumerate_r_k_in_windows_with(table, flavor, k, &vec![window; flavor.chains().len()])
}
