//! Permutations of a finite window `{1..n}` in one-line notation.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored 0-based in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub const MAX_WINDOW: usize = 64;

    pub fn identity(n: usize) -> Self {
        assert!(n <= Self::MAX_WINDOW);
        Permutation { one_line: (0..n as u8).collect() }
    }

    /// Longest element `w₀` of `S_n`.
    pub fn longest(n: usize) -> Self {
        assert!(n <= Self::MAX_WINDOW);
        Permutation { one_line: (0..n as u8).rev().collect() }
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        p
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n > Self::MAX_WINDOW {
            return Err(Error::ResourceBound(format!("window {n} exceeds {}", Self::MAX_WINDOW)));
        }
        let mut seen = vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::precondition(format!(
                    "[{}] is not a permutation of 1..{n}",
                    values.iter().join(",")
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line: values.iter().map(|&v| (v - 1) as u8).collect() })
    }

    pub(crate) fn from_zero_based(one_line: Vec<u8>) -> Self {
        Permutation { one_line }
    }

    pub(crate) fn zero_based(&self) -> &[u8] {
        &self.one_line
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&v| usize::from(v) + 1).collect()
    }

    pub fn window(&self) -> usize {
        self.one_line.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        usize::from(self.one_line[i - 1]) + 1
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&b| b < v[i]).count())
            .sum()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.one_line.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[usize::from(v)] = i as u8;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.require_same_window(other)?;
        Ok(Permutation {
            one_line: other.one_line.iter().map(|&v| self.one_line[usize::from(v)]).collect(),
        })
    }

    /// `s_i · self`: swaps the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation {
            one_line: self
                .one_line
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// `self · s_i`: swaps the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.one_line.swap(i - 1, i);
        p
    }

    /// `s_i · self < self`, i.e. `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.one_line.iter().position(|&x| x == v);
        pos(i as u8) < pos((i - 1) as u8)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.window()).filter(|&i| self.has_left_descent(i)).collect()
    }

    fn require_same_window(&self, other: &Self) -> Result<()> {
        if self.window() == other.window() {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "window mismatch: {} vs {}",
                self.window(),
                other.window()
            )))
        }
    }

    /// Bruhat order by the rank-matrix criterion:
    /// `x ≤ w` iff `#{a ≤ i : x(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j}` for all `i, j`.
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool> {
        self.require_same_window(w)?;
        Ok(bruhat_leq_raw(&self.one_line, &w.one_line))
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n as u8).permutations(n).map(|one_line| Permutation { one_line })
    }
}

pub(crate) fn bruhat_leq_raw(x: &[u8], w: &[u8]) -> bool {
    let n = x.len();
    let mut cx = vec![0i32; n + 1];
    let mut cw = vec![0i32; n + 1];
    for (&a, &b) in x.iter().zip(w) {
        // After processing a prefix, c[j] = #{entries in it with value ≥ j}.
        cx[..=usize::from(a)].iter_mut().for_each(|c| *c += 1);
        cw[..=usize::from(b)].iter_mut().for_each(|c| *c += 1);
        if (0..n).any(|j| cx[j] > cw[j]) {
            return false;
        }
    }
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `[2,1,3]` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s).trim();
        let values = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad entry `{}`", t.trim()))))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::from_one_line(&values).map_err(|e| match e {
            Error::Precondition(m) => Error::Parse(m),
            other => other,
        })
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
