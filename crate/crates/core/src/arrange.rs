//! Depth-first enumeration of rearrangements of a multiset with a pruning
//! predicate on running prefix-sum differences.

use std::ops::{Add, Sub};

/// Calls `emit` on every rearrangement `y` of `base` such that, for each
/// position `p`, `allow(p, y_p, Σ_{q≤p} y_q − Σ_{q≤p} base_q)` holds.
pub(crate) fn rearrangements<T, F, G>(base: &[T], mut allow: F, mut emit: G)
where
    T: Clone + Ord + Add<Output = T> + Sub<Output = T>,
    F: FnMut(usize, &T, &T) -> bool,
    G: FnMut(&[T]),
{
    let mut values: Vec<T> = base.to_vec();
    values.sort_by(|a, b| b.cmp(a));
    values.dedup();
    let mut counts: Vec<usize> = values.iter().map(|v| base.iter().filter(|b| *b == v).count()).collect();
    let mut cur: Vec<T> = Vec::with_capacity(base.len());
    if base.is_empty() {
        emit(&cur);
        return;
    }
    let zero = base[0].clone() - base[0].clone();
    go(base, &values, &mut counts, &mut cur, zero, &mut allow, &mut emit);
}

fn go<T, F, G>(
    base: &[T],
    values: &[T],
    counts: &mut [usize],
    cur: &mut Vec<T>,
    diff: T,
    allow: &mut F,
    emit: &mut G,
) where
    T: Clone + Ord + Add<Output = T> + Sub<Output = T>,
    F: FnMut(usize, &T, &T) -> bool,
    G: FnMut(&[T]),
{
    let pos = cur.len();
    if pos == base.len() {
        emit(cur);
        return;
    }
    for k in 0..values.len() {
        if counts[k] == 0 {
            continue;
        }
        let d = diff.clone() + values[k].clone() - base[pos].clone();
        if !allow(pos, &values[k], &d) {
            continue;
        }
        counts[k] -= 1;
        cur.push(values[k].clone());
        go(base, values, counts, cur, d, allow, emit);
        cur.pop();
        counts[k] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_multiset_permutations() {
        let mut n = 0;
        rearrangements(&[1i64, 1, 2, 3], |_, _, _| true, |_| n += 1);
        assert_eq!(n, 12);
    }

    #[test]
    fn majorizing_arrangements() {
        let mut out = Vec::new();
        rearrangements(&[-2i64, -1, -3], |_, _, d| *d >= 0, |y| out.push(y.to_vec()));
        assert_eq!(out, vec![vec![-1, -2, -3], vec![-2, -1, -3]]);
    }
}
