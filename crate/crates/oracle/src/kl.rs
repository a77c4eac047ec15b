//! Kazhdan–Lusztig polynomials from R-polynomials and the inversion formula
//! `q^{ℓ(w)−ℓ(x)} P_{x,w}(q⁻¹) = Σ_{x≤y≤w} R_{x,y}(q) P_{y,w}(q)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use ola_core::{Error, KlPolynomial, Permutation, Result};

/// Largest window the oracle accepts.
pub const MAX_WINDOW: usize = 5;

type Perm = Vec<usize>;
type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// Tableau criterion: for every prefix, sorted entries of `x` are ≤ those of `w`.
fn bruhat(x: &[usize], w: &[usize]) -> bool {
    (1..x.len()).all(|k| {
        let mut a = x[..k].to_vec();
        let mut b = w[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(u, v)| u <= v)
    })
}

fn swapped(p: &[usize], s: usize) -> Perm {
    let mut q = p.to_vec();
    q.swap(s, s + 1);
    q
}

fn all_perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n);
            out.push(q);
        }
    }
    out
}

#[derive(Default)]
struct Solver {
    r: HashMap<(Perm, Perm), Poly>,
}

impl Solver {
    fn r_poly(&mut self, x: &Perm, w: &Perm) -> Poly {
        if x == w {
            return vec![1];
        }
        if !bruhat(x, w) {
            return Vec::new();
        }
        if let Some(p) = self.r.get(&(x.clone(), w.clone())) {
            return p.clone();
        }
        let s = (0..w.len() - 1).find(|&i| w[i] > w[i + 1]).expect("w ≠ x has a descent");
        let ws = swapped(w, s);
        let xs = swapped(x, s);
        let out = if x[s] > x[s + 1] {
            self.r_poly(&xs, &ws)
        } else {
            let a = mul(&[-1, 1], &self.r_poly(x, &ws));
            let b = mul(&[0, 1], &self.r_poly(&xs, &ws));
            add(&a, &b)
        };
        self.r.insert((x.clone(), w.clone()), out.clone());
        out
    }

    fn p_poly(&mut self, x: &Perm, w: &Perm) -> Poly {
        if !bruhat(x, w) {
            return Vec::new();
        }
        let mut below: Vec<Perm> = all_perms(w.len()).into_iter().filter(|y| bruhat(x, y) && bruhat(y, w)).collect();
        below.sort_by_key(|y| std::cmp::Reverse(inversions(y)));
        let lw = inversions(w);
        let mut p: HashMap<Perm, Poly> = HashMap::new();
        for y in &below {
            if y == w {
                p.insert(y.clone(), vec![1]);
                continue;
            }
            let d = lw - inversions(y);
            let mut sum = Vec::new();
            for (z, pz) in &p {
                if bruhat(y, z) {
                    sum = add(&sum, &mul(&self.r_poly(y, z), pz));
                }
            }
            let keep = (d - 1) / 2 + 1;
            let low: Poly = sum.iter().take(keep).map(|c| -c).collect();
            p.insert(y.clone(), trim(low));
        }
        p.remove(x).unwrap_or_default()
    }
}

/// `P_{x,w}` for permutations of one window `≤ MAX_WINDOW`.
pub fn kl_oracle(x: &Permutation, w: &Permutation) -> Result<KlPolynomial> {
    if x.window() != w.window() {
        return Err(Error::Precondition(format!("windows differ: {} vs {}", x.window(), w.window())));
    }
    if w.window() > MAX_WINDOW {
        return Err(Error::ResourceBound(format!("window {} exceeds the oracle bound {MAX_WINDOW}", w.window())));
    }
    let p = Solver::default().p_poly(&x.one_line(), &w.one_line());
    Ok(KlPolynomial::from_coeffs(p.into_iter().map(BigInt::from).collect()))
}

/// `R_{x,w}` as a coefficient list (constant term first).
pub fn r_oracle(x: &Permutation, w: &Permutation) -> Result<Vec<i64>> {
    if x.window() != w.window() || w.window() > MAX_WINDOW {
        return Err(Error::Precondition("windows must agree and be at most 5".into()));
    }
    Ok(Solver::default().r_poly(&x.one_line(), &w.one_line()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn coeffs(p: &KlPolynomial) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn r_polynomials_of_s2_and_s3() {
        assert_eq!(r_oracle(&perm("[1,2]"), &perm("[2,1]")).unwrap(), vec![-1, 1]);
        assert_eq!(r_oracle(&perm("[1,2,3]"), &perm("[3,2,1]")).unwrap(), vec![-1, 2, -2, 1]);
        assert_eq!(r_oracle(&perm("[2,1,3]"), &perm("[1,3,2]")).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn known_polynomials() {
        let all3 = all_perms(3);
        for x in &all3 {
            for w in &all3 {
                let p = Solver::default().p_poly(x, w);
                assert_eq!(p, if bruhat(x, w) { vec![1] } else { vec![] });
            }
        }
        assert_eq!(coeffs(&kl_oracle(&perm("[1,3,2,4]"), &perm("[3,4,1,2]")).unwrap()), vec![1, 1]);
        assert_eq!(coeffs(&kl_oracle(&perm("[2,1,4,3]"), &perm("[4,2,3,1]")).unwrap()), vec![1, 1]);
        assert_eq!(coeffs(&kl_oracle(&perm("[3,2,1]"), &perm("[3,2,1]")).unwrap()), vec![1]);
    }

    #[test]
    fn bounds() {
        assert!(matches!(
            kl_oracle(&Permutation::identity(6), &Permutation::identity(6)),
            Err(Error::ResourceBound(_))
        ));
        assert!(kl_oracle(&Permutation::identity(2), &Permutation::identity(3)).is_err());
    }
}
