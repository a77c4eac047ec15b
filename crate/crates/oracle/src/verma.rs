//! Verma multiplicities in sl(2) and sl(3) from strong linkage.
//!
//! Weights are given by their entries at positions `1..=n` of a `gl(n)`
//! weight, with `ρ` equal to `−p` at position `p`. In rank at most 2 every
//! Kazhdan–Lusztig polynomial is 1, so `[M(λ) : L(μ)]` is 1 exactly when
//! `μ + ρ` is reached from `λ + ρ` by swapping entries `v_i > v_j` (`i < j`)
//! with integral difference, and 0 otherwise.

use std::collections::BTreeSet;

use num_rational::Rational64;
use ola_core::{Error, Result};

fn shifted(w: &[Rational64]) -> Vec<Rational64> {
    w.iter().enumerate().map(|(p, x)| x - Rational64::from_integer(p as i64 + 1)).collect()
}

fn lowers(a: &Rational64, b: &Rational64) -> bool {
    let d = a - b;
    d.is_integer() && d > Rational64::from_integer(0)
}

/// `[M(λ) : L(μ)]` for `sl(rank + 1)`, `rank ∈ {1, 2}`.
pub fn low_rank_verma_oracle(rank: usize, lam: &[Rational64], mu: &[Rational64]) -> Result<u64> {
    if rank == 0 {
        return Err(Error::Precondition("rank must be 1 or 2".into()));
    }
    if rank > 2 {
        return Err(Error::ResourceBound(format!("rank {rank} exceeds the oracle bound 2")));
    }
    if lam.len() != rank + 1 || mu.len() != rank + 1 {
        return Err(Error::Precondition(format!("weights must have {} entries", rank + 1)));
    }
    if lam == mu {
        return Ok(1);
    }
    let v = shifted(lam);
    let u = shifted(mu);
    if rank == 1 {
        // s·λ lies below λ iff ⟨λ + ρ, α^∨⟩ is a positive integer.
        return Ok(u64::from(lowers(&v[0], &v[1]) && u == [v[1], v[0]]));
    }
    let mut seen = BTreeSet::from([v.clone()]);
    let mut stack = vec![v];
    while let Some(cur) = stack.pop() {
        for i in 0..cur.len() {
            for j in i + 1..cur.len() {
                if lowers(&cur[i], &cur[j]) {
                    let mut next = cur.clone();
                    next.swap(i, j);
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    Ok(u64::from(seen.contains(&u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<Rational64> {
        v.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn sl2_closed_form() {
        assert_eq!(low_rank_verma_oracle(1, &r(&[0, 0]), &r(&[0, 0])).unwrap(), 1);
        assert_eq!(low_rank_verma_oracle(1, &r(&[0, 0]), &r(&[-1, 1])).unwrap(), 1);
        assert_eq!(low_rank_verma_oracle(1, &r(&[-1, 1]), &r(&[0, 0])).unwrap(), 0);
        let half = Rational64::new(1, 2);
        let lam = [half, Rational64::from_integer(0)];
        let mu = [Rational64::from_integer(-1) + Rational64::new(1, 2), Rational64::from_integer(1)];
        assert_eq!(low_rank_verma_oracle(1, &lam, &mu).unwrap(), 0);
    }

    #[test]
    fn sl3_regular_orbit() {
        // λ = 0: every weight of the dot-orbit occurs once.
        let mut count = 0;
        for a in -4..=4 {
            for b in -4..=4 {
                for c in -4..=4 {
                    count += low_rank_verma_oracle(2, &r(&[0, 0, 0]), &r(&[a, b, c])).unwrap();
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn rank_bounds() {
        assert!(matches!(low_rank_verma_oracle(3, &r(&[0; 4]), &r(&[0; 4])), Err(Error::ResourceBound(_))));
        assert!(low_rank_verma_oracle(0, &r(&[0]), &r(&[0])).is_err());
        assert!(low_rank_verma_oracle(1, &r(&[0, 0, 0]), &r(&[0, 0])).is_err());
    }
}
