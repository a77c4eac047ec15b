use num_bigint::BigUint;
use ola_core::partition::Composition;
use ola_core::{Engine, Partition};

/// GL(n) dimension by the hook-content formula.
fn hook_content_dim(mu: &Partition, n: u32) -> BigUint {
    let conj = mu.conjugate();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i64 - i as i64;
            let factor = i64::from(n) + content;
            if factor <= 0 {
                return BigUint::from(0u32);
            }
            num *= factor as u64;
            let hook = (row as usize - j - 1) + (conj.parts()[j] as usize - i - 1) + 1;
            den *= hook as u64;
        }
    }
    num / den
}

#[test]
fn kostka_sums_to_gl_dimension() {
    let e = Engine::default();
    for size in 0..=5u32 {
        for mu in Partition::all_of(size) {
            for n in 1..=4usize {
                let total: BigUint = Composition::all_of(size, n).iter().map(|c| e.kostka(&mu, c)).sum();
                assert_eq!(total, hook_content_dim(&mu, n as u32), "{mu} n={n}");
            }
        }
    }
}
