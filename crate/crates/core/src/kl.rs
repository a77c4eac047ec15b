//! Kazhdan–Lusztig polynomials of symmetric groups.
//!
//! Columns `x ↦ P_{x,w}` are built by the standard recursion over a left
//! descent `s` of `w` (smallest index first) and memoized per window size.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{bruhat_leq_raw, Permutation};
use crate::KlPolynomial;

/// Lehmer-code rank of a 0-based one-line permutation (lexicographic index).
fn rank(v: &[u8]) -> u32 {
    let n = v.len();
    let mut r: u64 = 0;
    for i in 0..n {
        let smaller_after = v[i + 1..].iter().filter(|&&b| b < v[i]).count() as u64;
        r = r * (n - i) as u64 + smaller_after;
    }
    r as u32
}

fn unrank(mut r: u32, n: usize) -> Vec<u8> {
    let mut digits = vec![0u32; n];
    for i in (0..n).rev() {
        let base = (n - i) as u32;
        digits[i] = r % base;
        r /= base;
    }
    let mut avail: Vec<u8> = (0..n as u8).collect();
    digits.iter().map(|&d| avail.remove(d as usize)).collect()
}

fn length(v: &[u8]) -> u32 {
    (0..v.len()).map(|i| v[i + 1..].iter().filter(|&&b| b < v[i]).count() as u32).sum()
}

fn left_mul(v: &[u8], i: usize) -> Vec<u8> {
    let (a, b) = ((i - 1) as u8, i as u8);
    v.iter().map(|&x| if x == a { b } else if x == b { a } else { x }).collect()
}

fn has_left_descent(v: &[u8], i: usize) -> bool {
    let pa = v.iter().position(|&x| x == (i - 1) as u8);
    let pb = v.iter().position(|&x| x == i as u8);
    pb < pa
}

struct Column {
    polys: HashMap<u32, KlPolynomial>,
    /// `(z, μ(z, w))` for `z < w` with nonzero μ.
    mu: Vec<(u32, BigInt)>,
}

struct GroupTable {
    n: usize,
    columns: HashMap<u32, Arc<Column>>,
}

impl GroupTable {
    fn new(n: usize) -> Self {
        GroupTable { n, columns: HashMap::new() }
    }

    fn column(&mut self, w: u32) -> Arc<Column> {
        if let Some(c) = self.columns.get(&w) {
            return c.clone();
        }
        let wv = unrank(w, self.n);
        let col = match (1..self.n).find(|&i| has_left_descent(&wv, i)) {
            None => Column { polys: HashMap::from([(w, KlPolynomial::one())]), mu: Vec::new() },
            Some(s) => self.build_column(&wv, s),
        };
        let col = Arc::new(col);
        self.columns.insert(w, col.clone());
        col
    }

    /// One application of the recursion with the left descent `s` of `w`.
    fn build_column(&mut self, wv: &[u8], s: usize) -> Column {
        let lw = length(wv);
        let v = rank(&left_mul(wv, s));
        let cv = self.column(v);
        let n = self.n;
        let below: Vec<(u32, BigInt)> =
            cv.mu.iter().filter(|(z, _)| has_left_descent(&unrank(*z, n), s)).cloned().collect();
        let zs: Vec<(BigInt, Arc<Column>, u32)> = below
            .into_iter()
            .map(|(z, m)| (m, self.column(z), length(&unrank(z, n))))
            .collect();
        let mut xs: HashSet<u32> = HashSet::new();
        for &x in cv.polys.keys() {
            xs.insert(x);
            xs.insert(rank(&left_mul(&unrank(x, self.n), s)));
        }
        let zero = KlPolynomial::zero();
        let mut polys = HashMap::with_capacity(xs.len());
        for x in xs {
            let xv = unrank(x, self.n);
            let sxv = left_mul(&xv, s);
            let sx = rank(&sxv);
            let p_sx = cv.polys.get(&sx).unwrap_or(&zero);
            let p_x = cv.polys.get(&x).unwrap_or(&zero);
            let mut p = if length(&sxv) < length(&xv) {
                p_sx + &p_x.shift(1)
            } else {
                &p_sx.shift(1) + p_x
            };
            for (m, zc, lz) in &zs {
                if let Some(pxz) = zc.polys.get(&x) {
                    p = &p - &pxz.scale(m).shift(((lw - lz) / 2) as usize);
                }
            }
            if !p.is_zero() {
                polys.insert(x, p);
            }
        }
        let w = rank(wv);
        let mu = polys
            .iter()
            .filter(|(&x, _)| x != w)
            .filter_map(|(&x, p)| {
                let d = lw - length(&unrank(x, self.n));
                (d % 2 == 1).then(|| (x, p.coeff(((d - 1) / 2) as usize))).filter(|(_, c)| !c.is_zero())
            })
            .collect();
        Column { polys, mu }
    }
}

/// Thread-safe memo of KL polynomials, one table per window size.
///
/// Once a table holds more than `limit` columns it is dropped and rebuilt
/// on demand.
pub struct KlCache {
    tables: Mutex<HashMap<usize, GroupTable>>,
    limit: usize,
    max_window: usize,
}

impl KlCache {
    pub fn new(max_window: usize, limit: usize) -> Self {
        KlCache { tables: Mutex::new(HashMap::new()), limit: limit.max(1), max_window }
    }

    pub fn max_window(&self) -> usize {
        self.max_window
    }

    /// Number of memoized columns across all windows.
    pub fn cached_columns(&self) -> usize {
        self.tables.lock().expect("kl cache poisoned").values().map(|t| t.columns.len()).sum()
    }

    fn check(&self, x: &Permutation, w: &Permutation) -> Result<()> {
        if x.window() != w.window() {
            return Err(Error::precondition(format!(
                "window mismatch: {} vs {}",
                x.window(),
                w.window()
            )));
        }
        if w.window() > self.max_window {
            return Err(Error::ResourceBound(format!(
                "KL window {} exceeds max window {}",
                w.window(),
                self.max_window
            )));
        }
        Ok(())
    }

    fn with_table<T>(&self, n: usize, f: impl FnOnce(&mut GroupTable) -> T) -> T {
        let mut tables = self.tables.lock().expect("kl cache poisoned");
        let table = tables.entry(n).or_insert_with(|| GroupTable::new(n));
        if table.columns.len() > self.limit {
            table.columns.clear();
        }
        f(table)
    }

    /// `P_{x,w}`; the zero polynomial unless `x ≤ w`.
    pub fn kl_poly(&self, x: &Permutation, w: &Permutation) -> Result<KlPolynomial> {
        self.check(x, w)?;
        let (xv, wv) = (x.zero_based(), w.zero_based());
        if !bruhat_leq_raw(xv, wv) {
            return Ok(KlPolynomial::zero());
        }
        let n = w.window();
        if x == w || w == &Permutation::longest(n) || length(wv) - length(xv) <= 2 {
            return Ok(KlPolynomial::one());
        }
        let (xr, wr) = (rank(xv), rank(wv));
        Ok(self.with_table(n, |t| t.column(wr).polys.get(&xr).cloned().unwrap_or_default()))
    }

    /// `P_{x,w}` recomputed through the left descent `s` of `w` instead of the default one.
    pub fn kl_poly_via_descent(&self, x: &Permutation, w: &Permutation, s: usize) -> Result<KlPolynomial> {
        self.check(x, w)?;
        if !w.has_left_descent(s) {
            return Err(Error::precondition(format!("s{s} is not a left descent of {w}")));
        }
        let (xr, n) = (rank(x.zero_based()), w.window());
        Ok(self.with_table(n, |t| {
            t.build_column(w.zero_based(), s).polys.get(&xr).cloned().unwrap_or_default()
        }))
    }

    /// The μ-coefficient: the coefficient of `q^{(ℓ(w)−ℓ(x)−1)/2}` in `P_{x,w}`.
    pub fn mu(&self, x: &Permutation, w: &Permutation) -> Result<BigInt> {
        let p = self.kl_poly(x, w)?;
        let (lx, lw) = (x.length(), w.length());
        if lw <= lx || (lw - lx) % 2 == 0 {
            return Ok(BigInt::zero());
        }
        Ok(p.coeff((lw - lx - 1) / 2))
    }

    /// Product of componentwise KL polynomials.
    pub fn product_kl(&self, xs: &[Permutation], ws: &[Permutation]) -> Result<KlPolynomial> {
        if xs.len() != ws.len() {
            return Err(Error::precondition(format!(
                "factor count mismatch: {} vs {}",
                xs.len(),
                ws.len()
            )));
        }
        let mut acc = KlPolynomial::one();
        for (x, w) in xs.iter().zip(ws) {
            acc = &acc * &self.kl_poly(x, w)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

impl Default for KlCache {
    fn default() -> Self {
        KlCache::new(8, 1 << 16)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(v: &[i64]) -> KlPolynomial {
        KlPolynomial::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn rank_roundtrip() {
        for (i, w) in Permutation::all(5).enumerate() {
            assert_eq!(rank(w.zero_based()) as usize, i);
            assert_eq!(unrank(i as u32, 5), w.zero_based());
        }
    }

    #[test]
    fn s3_all_one() {
        let kl = KlCache::default();
        for w in Permutation::all(3) {
            for x in Permutation::all(3) {
                let expected = if x.bruhat_leq(&w).unwrap() { poly(&[1]) } else { poly(&[]) };
                assert_eq!(kl.kl_poly(&x, &w).unwrap(), expected);
            }
        }
    }

    #[test]
    fn classic_s4_value() {
        let kl = KlCache::default();
        // s₂ = [1,3,2,4]; s₂s₁s₃s₂ = [3,4,1,2].
        let x = p("[1,3,2,4]");
        let w = p("[3,4,1,2]");
        assert_eq!(kl.kl_poly(&x, &w).unwrap(), poly(&[1, 1]));
        assert_eq!(kl.kl_poly(&p("[1,2,3,4]"), &w).unwrap(), poly(&[1, 1]));
        assert_eq!(kl.mu(&x, &w).unwrap(), BigInt::from(1));
        let sq = kl.product_kl(&[x.clone(), x.clone()], &[w.clone(), w.clone()]).unwrap();
        assert_eq!(sq, poly(&[1, 2, 1]));
        assert!(kl.product_kl(&[x], &[]).is_err());
    }

    #[test]
    fn inverse_symmetry_and_descent_independence_s4() {
        let kl = KlCache::default();
        for w in Permutation::all(4) {
            for x in Permutation::all(4) {
                let pxw = kl.kl_poly(&x, &w).unwrap();
                assert_eq!(pxw, kl.kl_poly(&x.inverse(), &w.inverse()).unwrap());
                for s in w.left_descents() {
                    assert_eq!(pxw, kl.kl_poly_via_descent(&x, &w, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_bound_and_constant_term_s5() {
        let kl = KlCache::default();
        let w0 = Permutation::longest(5);
        for w in Permutation::all(5).step_by(7) {
            for x in Permutation::all(5) {
                let pxw = kl.kl_poly(&x, &w).unwrap();
                if x.bruhat_leq(&w).unwrap() {
                    assert_eq!(pxw.coeff(0), BigInt::from(1));
                    if x != w {
                        assert!(2 * pxw.degree().unwrap() < w.length() - x.length());
                    }
                } else {
                    assert!(pxw.is_zero());
                }
            }
            assert_eq!(kl.kl_poly(&w, &w0).unwrap(), KlPolynomial::one());
        }
    }

    #[test]
    fn resource_bound() {
        let kl = KlCache::new(4, 100);
        let w = Permutation::longest(5);
        assert!(matches!(kl.kl_poly(&w, &w), Err(Error::ResourceBound(_))));
    }
}
