use num_rational::Rational64;
use ola_core::{
    block_label, degree, is_nonneg_simple_combination, rho, Chain, LieFlavor, Weight,
};
use proptest::prelude::*;

type W = Weight<Rational64>;

const FLAVORS: [LieFlavor; 3] = [LieFlavor::Sl, LieFlavor::O, LieFlavor::Sp];

fn arb_flavor() -> impl Strategy<Value = LieFlavor> {
    prop::sample::select(FLAVORS.to_vec())
}

/// Weights with support in positions 1..=6 of each chain and small rational entries.
fn arb_weight(flavor: LieFlavor, integral: bool) -> impl Strategy<Value = W> {
    let chains = flavor.chains().len();
    let denom = if integral { 1i64..=1 } else { 1i64..=3 };
    prop::collection::vec(prop::collection::vec((-4i64..=4, denom), 6), chains).prop_map(move |vs| {
        let vs: Vec<Vec<Rational64>> = vs
            .into_iter()
            .map(|v| v.into_iter().map(|(n, d)| Rational64::new(n, d)).collect())
            .collect();
        W::from_chain_vectors(flavor, &vs)
    })
}

fn arb_pair(integral: bool) -> impl Strategy<Value = (W, W)> {
    arb_flavor().prop_flat_map(move |f| (arb_weight(f, integral), arb_weight(f, integral)))
}

/// Root-lattice membership by reducing with actual root vectors.
fn in_root_lattice(diff: &W) -> bool {
    if !diff.is_integral() {
        return false;
    }
    let mut v: Vec<(i64, i64)> = diff.entries().map(|(i, c)| (i, *c.numer())).collect();
    loop {
        v.retain(|&(_, c)| c != 0);
        match v.len() {
            0 => return true,
            1 => {
                let c = v[0].1;
                return match diff.flavor() {
                    LieFlavor::Sl => false,
                    // 2ε_i = (ε_i + ε_j) + (ε_i − ε_j) for any j.
                    LieFlavor::O | LieFlavor::Sp => c % 2 == 0,
                };
            }
            _ => {
                let (a, b) = (v[0].1, v[1].1);
                match diff.flavor() {
                    // subtract ±(ε_i − ε_j) moving mass from one to the other
                    LieFlavor::Sl => {
                        v[0].1 -= a.signum();
                        v[1].1 += a.signum();
                    }
                    // ±ε_i ± ε_j are roots
                    LieFlavor::O | LieFlavor::Sp => {
                        v[0].1 -= a.signum();
                        v[1].1 -= b.signum();
                    }
                }
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_simple_coroots() {
    for flavor in FLAVORS {
        for &chain in flavor.chains() {
            for p in 1..=50usize {
                // Simple root e_p − e_{p+1} in mirrored coordinates.
                let (hi, lo) = match chain {
                    Chain::Left => (chain.index(p), chain.index(p + 1)),
                    Chain::Right => (chain.index(p + 1), chain.index(p)),
                };
                let pairing: Rational64 = rho::<Rational64>(flavor, hi).unwrap() - rho::<Rational64>(flavor, lo).unwrap();
                assert_eq!(pairing, Rational64::from_integer(1), "{flavor} {chain:?} {p}");
            }
        }
    }
}

proptest! {
    #[test]
    fn degree_is_additive((a, b) in arb_pair(false)) {
        prop_assert_eq!(degree(&(&a + &b)), degree(&a) + degree(&b));
    }

    #[test]
    fn simple_combinations_have_degree_zero((a, b) in arb_pair(true)) {
        let d = &a - &b;
        if is_nonneg_simple_combination(&d) {
            prop_assert_eq!(degree(&d), Rational64::from_integer(0));
        }
    }

    #[test]
    fn block_label_detects_root_lattice((a, b) in arb_pair(false)) {
        prop_assert_eq!(block_label(&a) == block_label(&b), in_root_lattice(&(&a - &b)));
    }

    #[test]
    fn block_label_on_integral_pairs((a, b) in arb_pair(true)) {
        prop_assert_eq!(block_label(&a) == block_label(&b), in_root_lattice(&(&a - &b)));
    }

    #[test]
    fn text_roundtrip(a in arb_flavor().prop_flat_map(|f| arb_weight(f, false))) {
        prop_assert_eq!(W::parse(a.flavor(), &a.to_string()).unwrap(), a);
    }
}
