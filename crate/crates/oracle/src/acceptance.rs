//! The acceptance suite: one check per criterion, shared by the test target
//! and the `selftest` command.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Zero};
use ola_core::{
    annihilator_of_integrable, block_label, degree, fin_up_set, is_b_dominant, leq_fin, weight_from_label,
    Composition, Engine, LieFlavor, Partition, Permutation, PrimitiveIdealLabel, Weight,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::{kl_oracle, kostka_oracle, low_rank_verma_oracle};

type W = Weight<Rational64>;

const FLAVORS: [LieFlavor; 3] = [LieFlavor::Sl, LieFlavor::O, LieFlavor::Sp];

/// Outcome of one criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Fails exactly in the documented way (see `detail`).
    KnownDefect,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::KnownDefect => "FAIL (known defect)",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: u8,
    pub title: &'static str,
    pub status: Status,
    pub checked: usize,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<34} {} ({} checks, {:.2?}){}",
            self.id,
            self.title,
            self.status.label(),
            self.checked,
            self.elapsed,
            if self.detail.is_empty() { String::new() } else { format!(": {}", self.detail) }
        )
    }
}

/// Accumulates checks; keeps the first few failure messages.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(msg());
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.check(false, || msg);
    }

    fn finish(self, id: u8, title: &'static str, start: Instant, budget: Option<Duration>) -> Report {
        let elapsed = start.elapsed();
        let mut detail = if self.failed == 0 {
            String::new()
        } else {
            format!("{} failures, e.g. {}", self.failed, self.failures.join("; "))
        };
        let mut status = if self.failed == 0 { Status::Pass } else { Status::Fail };
        if let Some(b) = budget.filter(|b| elapsed > *b) {
            status = Status::Fail;
            detail = format!("exceeded the {b:?} budget. {detail}");
        }
        Report { id, title, status, checked: self.checked, detail, elapsed }
    }
}

/// Weight text with `0` for the zero weight.
fn show(w: &W) -> String {
    if w.is_zero() {
        "0".into()
    } else {
        w.to_string()
    }
}

fn random_weight(rng: &mut StdRng, flavor: LieFlavor, support: usize, range: i64) -> W {
    let vs: Vec<Vec<i64>> = flavor
        .chains()
        .iter()
        .map(|_| {
            let len = rng.gen_range(0..=support);
            (0..len).map(|_| rng.gen_range(-range..=range)).collect()
        })
        .collect();
    W::from_int_chain_vectors(flavor, &vs)
}

fn random_partition(rng: &mut StdRng, max_len: usize, max_part: i64) -> Vec<i64> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..=max_part)).sorted().rev().collect()
}

fn random_dominant(rng: &mut StdRng, flavor: LieFlavor) -> W {
    let vs: Vec<Vec<i64>> = flavor.chains().iter().map(|_| random_partition(rng, 3, 3)).collect();
    W::from_int_chain_vectors(flavor, &vs)
}

fn pick<'a, T>(rng: &mut StdRng, xs: &'a [T]) -> &'a T {
    xs.choose(rng).expect("non-empty")
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<Report> {
    (1..=10).map(run).collect()
}

/// Runs one criterion (`1..=10`).
pub fn run(id: u8) -> Report {
    let e = Engine::default();
    match id {
        1 => kostka_agreement(),
        2 => kl_agreement(&e),
        3 => verma_agreement(&e),
        4 => window_stability(&e),
        5 => vanishing_order(&e),
        6 => standard_diagonal(&e),
        7 => bgg_structure(&e),
        8 => interval_finiteness(&e),
        9 => block_parametrization(),
        10 => annihilator_labels(),
        _ => panic!("no criterion {id}"),
    }
}

fn kostka_agreement() -> Report {
    let start = Instant::now();
    let e = Engine::default();
    let mut t = Tally::default();
    for n in 0..=6u32 {
        for shape in Partition::all_of(n) {
            for slots in 0..=n as usize {
                for content in Composition::all_of(n, slots) {
                    let fast = e.kostka(&shape, &content);
                    match kostka_oracle(&shape, &content) {
                        Ok(slow) => t.check(fast == BigUint::from(slow), || {
                            format!("K({shape}, {content}): {fast} vs {slow}")
                        }),
                        Err(err) => t.fail(format!("oracle error {err}")),
                    }
                }
            }
        }
    }
    t.finish(1, "Kostka agreement", start, Some(Duration::from_secs(60)))
}

fn kl_agreement(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let compare = |t: &mut Tally, x: &Permutation, w: &Permutation| match (e.kl_poly(x, w), kl_oracle(x, w)) {
        (Ok(a), Ok(b)) => t.check(a == b, || format!("P_{{{x},{w}}}: {a} vs {b}")),
        (a, b) => t.fail(format!("P_{{{x},{w}}} errored: {a:?} / {b:?}")),
    };
    let s4: Vec<Permutation> = Permutation::all(4).collect();
    for w in &s4 {
        for x in &s4 {
            if x.bruhat_leq(w).unwrap() {
                compare(&mut t, x, w);
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(2);
    let s5: Vec<Permutation> = Permutation::all(5).collect();
    let mut sampled = 0;
    while sampled < 200 {
        let (a, b) = (pick(&mut rng, &s5), pick(&mut rng, &s5));
        let (x, w) = if a.bruhat_leq(b).unwrap() {
            (a, b)
        } else if b.bruhat_leq(a).unwrap() {
            (b, a)
        } else {
            continue;
        };
        compare(&mut t, x, w);
        sampled += 1;
    }
    let x: Permutation = "[1,3,2,4]".parse().unwrap();
    let w: Permutation = "[3,4,1,2]".parse().unwrap();
    let expected = ola_core::KlPolynomial::from_coeffs(vec![1.into(), 1.into()]);
    t.check(e.kl_poly(&x, &w).ok() == Some(expected.clone()), || "P_{s2,s2s1s3s2} ≠ 1+q".into());
    t.check(kl_oracle(&x, &w).ok() == Some(expected), || "oracle P_{s2,s2s1s3s2} ≠ 1+q".into());
    t.finish(2, "Kazhdan-Lusztig agreement", start, None)
}

fn verma_agreement(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    for n in [2usize, 3] {
        let box_: Vec<Vec<i64>> = (0..n).map(|_| -4i64..=4).multi_cartesian_product().collect();
        // Group by dot-orbit: the multiset of entries of weight + ρ.
        let mut orbits: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
        for v in &box_ {
            let key = v.iter().enumerate().map(|(p, x)| x - p as i64 - 1).sorted().collect();
            orbits.entry(key).or_default().push(v.clone());
        }
        for members in orbits.values() {
            for lam in members {
                for mu in members {
                    let fast = e.finite_verma_mult(std::slice::from_ref(lam), std::slice::from_ref(mu));
                    let q = |v: &[i64]| v.iter().map(|&x| Rational64::from_integer(x)).collect::<Vec<_>>();
                    let slow = low_rank_verma_oracle(n - 1, &q(lam), &q(mu));
                    match (fast, slow) {
                        (Ok(a), Ok(b)) => {
                            t.check(a == BigUint::from(b), || format!("[M({lam:?}):L({mu:?})]: {a} vs {b}"))
                        }
                        (a, b) => t.fail(format!("errors {a:?} / {b:?}")),
                    }
                }
            }
        }
        // Different orbits never meet.
        if n == 2 {
            for lam in &box_ {
                for mu in &box_ {
                    let same = lam.iter().sum::<i64>() == mu.iter().sum::<i64>();
                    if !same {
                        let a = e.finite_verma_mult(std::slice::from_ref(lam), std::slice::from_ref(mu)).unwrap();
                        t.check(a.is_zero(), || format!("cross-orbit {lam:?} {mu:?}"));
                    }
                }
            }
        }
    }
    t.finish(3, "low-rank Verma agreement", start, None)
}

fn window_stability(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(4);
    let mut nontrivial = 0;
    while t.checked < 120 {
        let flavor = *pick(&mut rng, &FLAVORS);
        let mu = random_weight(&mut rng, flavor, 4, 2);
        // Mostly strictly comparable pairs, some arbitrary ones.
        let lam = if t.checked < 100 {
            let up: Vec<W> = fin_up_set(&mu).into_iter().filter(|l| *l != mu).collect();
            if up.is_empty() {
                continue;
            }
            pick(&mut rng, &up).clone()
        } else {
            random_weight(&mut rng, flavor, 4, 2)
        };
        let a = e.stable_mult(&lam, &mu).unwrap();
        let b = e.stable_mult_in_window(&lam, &mu, 2).unwrap();
        if !a.is_zero() && lam != mu {
            nontrivial += 1;
        }
        t.check(a == b, || format!("m({}, {}): {a} vs {b} on a wider window", show(&lam), show(&mu)));
    }
    t.check(nontrivial >= 50, || format!("only {nontrivial} nonzero off-diagonal pairs"));
    t.finish(4, "window stability", start, Some(Duration::from_secs(120)))
}

/// Dot-orbit of `mu` on its support window: all rearrangements of each shifted chain vector.
fn dot_orbit(mu: &W) -> Vec<W> {
    let f = mu.flavor();
    let window = mu.support_bounds().into_iter().max().unwrap_or(0).max(1);
    f.chains()
        .iter()
        .map(|&c| {
            let v = mu.int_chain_vector(c, window).unwrap();
            let s: Vec<i64> = v.iter().enumerate().map(|(p, x)| x - p as i64 - 1).collect();
            s.iter()
                .copied()
                .permutations(window)
                .unique()
                .map(|y| y.iter().enumerate().map(|(p, x)| x + p as i64 + 1).collect::<Vec<i64>>())
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .map(|vs| W::from_int_chain_vectors(f, &vs))
        .collect()
}

fn vanishing_order(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..50 {
        let flavor = *pick(&mut rng, &FLAVORS);
        let mu = random_weight(&mut rng, flavor, 3, 2);
        let window = mu.support_bounds().into_iter().max().unwrap_or(0).max(1);
        let factors =
            |w: &W| -> Vec<Vec<i64>> { flavor.chains().iter().map(|&c| w.int_chain_vector(c, window).unwrap()).collect() };
        let family: BTreeSet<W> = fin_up_set(&mu).into_iter().chain(dot_orbit(&mu)).collect();
        for lam in &family {
            let raw = e.finite_verma_mult(&factors(lam), &factors(&mu)).unwrap();
            let stable = e.stable_mult(lam, &mu).unwrap();
            let below = leq_fin(&mu, lam).unwrap();
            t.check(raw.is_zero() || below, || format!("[M({lam}):L({mu})] = {raw} without μ ≤_fin λ"));
            t.check(stable.is_zero() || below, || format!("m({lam}, {mu}) = {stable} without μ ≤_fin λ"));
        }
    }
    t.finish(5, "vanishing order", start, None)
}

fn standard_diagonal(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..50 {
        let flavor = *pick(&mut rng, &FLAVORS);
        let lam = random_weight(&mut rng, flavor, 3, 3);
        let s = e.standard_mult(&lam, &lam).unwrap();
        t.check(s.is_one(), || format!("[W({lam}):L({lam})] = {s}"));
    }
    // `[W(λ):L(λ+γ)]` over γ ∈ ℛ₁. For o, a root γ = −2ε_i can also be
    // reached from λ + γ' with γ' = −ε_i − ε_j, giving 2; that is the only
    // admissible deviation.
    let mut defects = 0;
    let mut unexpected = Tally::default();
    for i in 0..30 {
        let flavor = FLAVORS[i % 3];
        let lam = if i < 3 { W::zero(flavor) } else { random_dominant(&mut rng, flavor) };
        for gamma in e.enumerate_r_k_in_window::<Rational64>(flavor, 1, 3).unwrap() {
            let nu = &lam + &gamma;
            let s = e.standard_mult(&lam, &nu).unwrap();
            t.check(s.is_one(), || format!("[W({}):L({} + {gamma})] = {s}", show(&lam), show(&lam)));
            if !s.is_one() {
                let doubled_root = gamma.entries().count() == 1;
                let two = BigUint::from(2u32);
                let explained = flavor == LieFlavor::O
                    && doubled_root
                    && s == two
                    && e.standard_mult_terms(&lam, &nu).unwrap().iter().all(|term| term.c.is_one() && term.m.is_one());
                if explained {
                    defects += 1;
                } else {
                    unexpected.fail(format!("[W({}):L({} + {gamma})] = {s}", show(&lam), show(&lam)));
                }
            }
        }
    }
    let mut report = t.finish(6, "standard diagonal", start, None);
    if report.status == Status::Fail && unexpected.failed == 0 {
        report.status = Status::KnownDefect;
        report.detail = format!(
            "{defects} o-cases with γ = −2ε_i give 2, not 1 (a second summand γ' = −ε_i − ε_j); \
             all sl and sp cases give 1. {}",
            report.detail
        );
    }
    report
}

fn bgg_structure(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(7);
    let mut sampled = 0;
    let mut nontrivial = 0;
    while sampled < 30 {
        let flavor = *pick(&mut rng, &FLAVORS);
        let mu = random_weight(&mut rng, flavor, 3, 2);
        let up: BTreeSet<W> = fin_up_set(&mu).into_iter().collect();
        if up.len() > 6 {
            continue;
        }
        sampled += 1;
        if up.len() > 1 {
            nontrivial += 1;
        }
        let table = e.injective_filtration(&mu).unwrap();
        t.check(table.get(&mu).is_one(), || format!("(I({mu}):W({mu})) = {}", table.get(&mu)));
        for lam in table.entries.keys() {
            t.check(up.contains(lam), || format!("{lam} in I({mu}) but not above μ"));
        }
    }
    t.check(nontrivial >= 10, || format!("only {nontrivial} non-singleton up-sets"));
    for i in 0..15 {
        let mu = random_dominant(&mut rng, FLAVORS[i % 3]);
        let table = e.injective_filtration(&mu).unwrap();
        t.check(table.is_base_singleton(), || format!("I({mu}) is not {{μ ↦ 1}}"));
    }
    t.finish(7, "BGG reciprocity structure", start, None)
}

fn interval_finiteness(e: &Engine) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(8);
    for i in 0..30 {
        let flavor = FLAVORS[i % 3];
        let k = (i % 4) as u32;
        let base = random_weight(&mut rng, flavor, 2, 2);
        let up = fin_up_set(&base);
        let lam = pick(&mut rng, &up).clone();
        let gammas: Vec<W> = if k == 0 {
            vec![W::zero(flavor)]
        } else {
            e.enumerate_r_k_in_window(flavor, k, 2).unwrap()
        };
        let mu = &base + pick(&mut rng, &gammas);
        let iv = match e.inf_interval(&mu, &lam) {
            Ok(iv) => iv,
            Err(err) => {
                t.fail(format!("[{mu}, {lam}]: {err}"));
                continue;
            }
        };
        t.check(iv.contains(&mu) && iv.contains(&lam), || format!("[{mu}, {lam}] misses an endpoint"));
        let wide = e.inf_interval_widened(&mu, &lam, 2).unwrap();
        t.check(wide == iv, || format!("[{mu}, {lam}] changes under widening: {} vs {}", iv.len(), wide.len()));
        for kappa in &iv {
            t.check(block_label(kappa) == block_label(&lam), || format!("{kappa} leaves the block"));
            t.check(degree(&mu) <= degree(kappa) && degree(kappa) <= degree(&lam), || {
                format!("{kappa} breaks degree monotonicity in [{mu}, {lam}]")
            });
        }
    }
    t.finish(8, "interval finiteness", start, None)
}

fn same_invariant(a: &W, b: &W) -> bool {
    let sum = |w: &W| w.entries().map(|(_, c)| *c).sum::<Rational64>();
    match a.flavor() {
        LieFlavor::Sl => sum(a) == sum(b),
        LieFlavor::O | LieFlavor::Sp => (sum(a) - sum(b)).to_integer().rem_euclid(2) == 0,
    }
}

fn block_parametrization() -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(9);
    let (mut same, mut different) = (0, 0);
    for _ in 0..500 {
        let flavor = *pick(&mut rng, &FLAVORS);
        let a = random_weight(&mut rng, flavor, 3, 2);
        let b = random_weight(&mut rng, flavor, 3, 2);
        // A root-lattice translate of `a`.
        let mut shift = W::zero(flavor);
        for _ in 0..3 {
            let p = rng.gen_range(1..=3i64);
            let chain = *pick(&mut rng, flavor.chains());
            let root = W::from_int_chain_vectors(
                flavor,
                &flavor
                    .chains()
                    .iter()
                    .map(|&c| {
                        let mut v = vec![0i64; p as usize + 1];
                        if c == chain {
                            v[p as usize - 1] = 1;
                            v[p as usize] = -1;
                        }
                        v
                    })
                    .collect::<Vec<_>>(),
            );
            shift = if rng.gen_bool(0.5) { &shift + &root } else { &shift - &root };
        }
        let c = &a + &shift;
        for other in [&b, &c] {
            let labels_equal = block_label(&a) == block_label(other);
            if labels_equal {
                same += 1;
            } else {
                different += 1;
            }
            t.check(labels_equal == same_invariant(&a, other), || format!("{a} vs {other}"));
        }
    }
    t.check(same > 100 && different > 100, || format!("unbalanced sample: {same} same, {different} different"));
    t.finish(9, "block parametrization", start, None)
}

fn annihilator_labels() -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..20 {
        let l = random_partition(&mut rng, 4, 4);
        let r = random_partition(&mut rng, 4, 4);
        let lam = W::from_int_chain_vectors(LieFlavor::Sl, &[l.clone(), r.clone()]);
        let part = |v: &[i64]| Partition::from_unsorted(v.iter().map(|&x| x as u32).filter(|&x| x > 0).collect());
        let expected = PrimitiveIdealLabel { x: 0, y: 0, yl: part(&l), yr: part(&r) };
        match annihilator_of_integrable(&lam) {
            Ok(label) => {
                t.check(label == expected, || format!("Ann L({lam}) = {label}, expected {expected}"));
                let back: Result<PrimitiveIdealLabel, _> = label.to_string().parse();
                t.check(back.as_ref().ok() == Some(&label), || format!("{label} does not round-trip"));
            }
            Err(err) => t.fail(format!("Ann L({lam}): {err}")),
        }
    }
    for _ in 0..20 {
        let x = rng.gen_range(1..=3u32);
        let a: Vec<Rational64> = (1..=x as i64).map(|i| Rational64::new(i, i64::from(x) + 1)).collect();
        let yl = part_of(&random_partition(&mut rng, 3, 3));
        let yr = part_of(&random_partition(&mut rng, 3, 3));
        match weight_from_label(x, &yl, &yr, &a) {
            Ok(w) => t.check(!is_b_dominant(&w), || format!("weight_from_label gave dominant {w}")),
            Err(err) => t.fail(format!("weight_from_label({x}): {err}")),
        }
        let label = PrimitiveIdealLabel { x, y: 0, yl, yr };
        let back: Result<PrimitiveIdealLabel, _> = label.to_string().parse();
        t.check(back.as_ref().ok() == Some(&label), || format!("{label} does not round-trip"));
    }
    t.finish(10, "annihilator labels", start, None)
}

fn part_of(v: &[i64]) -> Partition {
    Partition::from_unsorted(v.iter().map(|&x| x as u32).filter(|&x| x > 0).collect())
}
