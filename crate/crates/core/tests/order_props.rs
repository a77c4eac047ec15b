use num_rational::Rational64;
use ola_core::order::leq_fin_cert;
use ola_core::{block_label, degree, fin_up_set, leq_fin, Engine, LieFlavor, Weight};
use proptest::prelude::*;

type W = Weight<Rational64>;

fn arb_flavor() -> impl Strategy<Value = LieFlavor> {
    prop::sample::select(vec![LieFlavor::Sl, LieFlavor::O, LieFlavor::Sp])
}

fn arb_weight(flavor: LieFlavor, support: usize) -> impl Strategy<Value = W> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, support), flavor.chains().len())
        .prop_map(move |vs| W::from_int_chain_vectors(flavor, &vs))
}

/// `(μ, λ)` with `μ = μ' + γ` for `γ ∈ ℛ_k` (k ≤ 2) and `λ ∈ μ'⁺_fin`, so `μ ≤_inf λ`.
fn arb_comparable() -> impl Strategy<Value = (W, W)> {
    arb_flavor()
        .prop_flat_map(|f| (arb_weight(f, 2), 0u32..=2, any::<prop::sample::Index>(), any::<prop::sample::Index>()))
        .prop_map(|(base, k, gi, ui)| {
            let e = Engine::default();
            let gammas: Vec<W> = e.enumerate_r_k_in_window(base.flavor(), k, 2).unwrap();
            let up = fin_up_set(&base);
            let lam = up[ui.index(up.len())].clone();
            let mu = &base + &gammas[gi.index(gammas.len())];
            (mu, lam)
        })
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg(128))]

    #[test]
    fn up_set_members_dominate(mu in arb_flavor().prop_flat_map(|f| arb_weight(f, 3))) {
        let up = fin_up_set(&mu);
        prop_assert!(up.contains(&mu));
        for lam in &up {
            prop_assert!(leq_fin(&mu, lam).unwrap());
            prop_assert_eq!(degree(lam), degree(&mu));
            // transitivity: λ⁺_fin ⊆ μ⁺_fin
            for kappa in fin_up_set(lam) {
                prop_assert!(up.contains(&kappa), "{} above {} but missing", kappa, lam);
            }
        }
    }

    #[test]
    fn up_set_is_exactly_the_fin_majorizers(mu in arb_flavor().prop_flat_map(|f| arb_weight(f, 2))) {
        // Brute force over a box of weights on a generous window.
        let up = fin_up_set(&mu);
        let f = mu.flavor();
        let window = 3;
        let per_chain: Vec<Vec<Vec<i64>>> = (0..f.chains().len())
            .map(|_| {
                itertools::Itertools::multi_cartesian_product((0..window).map(|_| -2i64..=2)).collect()
            })
            .collect();
        for vs in itertools::Itertools::multi_cartesian_product(per_chain.into_iter()) {
            let lam = W::from_int_chain_vectors(f, &vs);
            prop_assert_eq!(leq_fin(&mu, &lam).unwrap(), up.contains(&lam), "{}", lam);
        }
    }

    #[test]
    fn fin_implies_inf_and_antisymmetry(mu in arb_flavor().prop_flat_map(|f| arb_weight(f, 2))) {
        let e = Engine::default();
        for lam in fin_up_set(&mu) {
            let r = e.leq_inf(&mu, &lam, None).unwrap();
            prop_assert!(r.holds);
            prop_assert!(e.verify_cert(r.cert.as_ref().unwrap()).unwrap());
            prop_assert!(e.verify_cert(&leq_fin_cert(&mu, &lam).unwrap().unwrap()).unwrap());
            if leq_fin(&lam, &mu).unwrap() {
                prop_assert_eq!(&lam, &mu);
            }
        }
    }

    #[test]
    fn comparable_pairs_have_certificates((mu, lam) in arb_comparable()) {
        let e = Engine::default();
        let r = e.leq_inf(&mu, &lam, None).unwrap();
        prop_assert!(r.holds, "{} ≤ {}", mu, lam);
        let cert = r.cert.unwrap();
        prop_assert!(e.verify_cert(&cert).unwrap());
        prop_assert_eq!(cert.chain.first(), Some(&mu));
        prop_assert_eq!(cert.chain.last(), Some(&lam));
        if mu != lam {
            prop_assert!(!e.leq_inf(&lam, &mu, None).unwrap().holds);
        }
    }

    #[test]
    fn intervals_are_stable_and_graded((mu, lam) in arb_comparable()) {
        let e = Engine::default();
        let iv = e.inf_interval(&mu, &lam).unwrap();
        prop_assert!(iv.contains(&mu) && iv.contains(&lam));
        prop_assert_eq!(&iv, &e.inf_interval_widened(&mu, &lam, 2).unwrap());
        for kappa in &iv {
            prop_assert_eq!(block_label(kappa), block_label(&lam));
            prop_assert!(degree(&mu) <= degree(kappa) && degree(kappa) <= degree(&lam));
            prop_assert!(e.leq_inf(&mu, kappa, None).unwrap().holds);
            prop_assert!(e.leq_inf(kappa, &lam, None).unwrap().holds);
        }
    }

    #[test]
    fn degree_and_block_obstructions((a, b) in arb_flavor().prop_flat_map(|f| (arb_weight(f, 2), arb_weight(f, 2)))) {
        let e = Engine::default();
        let r = e.leq_inf(&a, &b, None).unwrap();
        if degree(&a) > degree(&b) || block_label(&a) != block_label(&b) {
            prop_assert!(!r.holds);
        }
        if r.holds {
            prop_assert!(e.verify_cert(r.cert.as_ref().unwrap()).unwrap());
        }
    }
}
