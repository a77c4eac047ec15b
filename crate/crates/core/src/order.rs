//! The orders `≤_fin` and `≤_inf`, finite up-sets `μ⁺_fin`, and `≤_inf`
//! intervals.
//!
//! Searches run on per-chain windows of mirrored coordinates. Writing
//! `x̃ = x + ρ`, two quantities are monotone along both kinds of steps:
//! the prefix sums of `x̃` and `f_x(t) = #{p : x̃_p ≥ t} − #{p : −p ≥ t}`.
//! Sandwiching them between the endpoints bounds every weight of an
//! interval to positions `1..=R`, where `R = max(N, −min x̃)` over both
//! endpoints and `N` is their joint support bound.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use itertools::Itertools;
use num_traits::Zero;
use serde::Serialize;

use crate::arrange::rearrangements;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::weight::{block_label, degree, is_nonneg_simple_combination, LieFlavor, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Fin,
    Inf,
}

/// How one weight of a witness chain sits below the next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "lowercase")]
pub enum StepTag {
    /// `lower ≤_fin upper`.
    Fin,
    /// `lower = upper + γ` with `γ ∈ ℛ_k`.
    Gamma { k: u32 },
}

/// A witness chain `chain[0] ≤ chain[1] ≤ … ≤ chain[last]`; `steps[i]`
/// relates `chain[i]` to `chain[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "Q: Coefficient")]
pub struct OrderCert<Q: Coefficient> {
    pub kind: OrderKind,
    pub chain: Vec<Weight<Q>>,
    pub steps: Vec<StepTag>,
}

/// Result of a `≤_inf` query.
#[derive(Clone, Debug, Serialize)]
#[serde(bound = "Q: Coefficient")]
pub struct InfComparison<Q: Coefficient> {
    pub holds: bool,
    pub cert: Option<OrderCert<Q>>,
    /// Per-chain search windows (empty when decided without a search).
    pub windows: Vec<usize>,
    pub visited: usize,
}

impl<Q: Coefficient> InfComparison<Q> {
    fn decided(holds: bool, cert: Option<OrderCert<Q>>) -> Self {
        InfComparison { holds, cert, windows: Vec::new(), visited: 0 }
    }
}

fn same_flavor<Q: Coefficient>(a: &Weight<Q>, b: &Weight<Q>) -> Result<()> {
    if a.flavor() == b.flavor() {
        Ok(())
    } else {
        Err(Error::precondition(format!("flavor mismatch: {} vs {}", a.flavor(), b.flavor())))
    }
}

fn sorted<Q: Ord>(mut v: Vec<Q>) -> Vec<Q> {
    v.sort();
    v
}

/// `μ ≤_fin λ`. A non-integral difference gives `false`.
pub fn leq_fin<Q: Coefficient>(mu: &Weight<Q>, lam: &Weight<Q>) -> Result<bool> {
    same_flavor(mu, lam)?;
    if mu == lam {
        return Ok(true);
    }
    let diff = lam - mu;
    if !diff.is_integral() || !is_nonneg_simple_combination(&diff) {
        return Ok(false);
    }
    Ok(mu.flavor().chains().iter().all(|&chain| {
        let n = mu.support_bound(chain).max(lam.support_bound(chain));
        sorted(mu.shifted_chain_vector(chain, n)) == sorted(lam.shifted_chain_vector(chain, n))
    }))
}

fn ceil_neg_min<Q: Coefficient>(values: &[Q]) -> usize {
    values
        .iter()
        .min()
        .map(|m| (-m.clone()).ceil())
        .filter(|c| c.is_positive())
        .and_then(|c| c.as_i64())
        .map_or(0, |c| c as usize)
}

/// Per-chain windows containing every element of `μ⁺_fin`.
pub fn fin_up_windows<Q: Coefficient>(mu: &Weight<Q>) -> Vec<usize> {
    mu.flavor()
        .chains()
        .iter()
        .map(|&chain| {
            let n = mu.support_bound(chain);
            n.max(ceil_neg_min(&mu.shifted_chain_vector(chain, n)))
        })
        .collect()
}

/// `μ⁺_fin = {λ : μ ≤_fin λ}`, in canonical order.
pub fn fin_up_set<Q: Coefficient>(mu: &Weight<Q>) -> Vec<Weight<Q>> {
    let flavor = mu.flavor();
    let per_chain: Vec<Vec<Vec<Q>>> = flavor
        .chains()
        .iter()
        .zip(fin_up_windows(mu))
        .map(|(&chain, r)| {
            let base = mu.shifted_chain_vector(chain, r);
            let mut out = Vec::new();
            rearrangements(
                &base,
                |_, _, d: &Q| d.is_integral() && !d.is_negative(),
                |y| {
                    out.push(
                        y.iter()
                            .enumerate()
                            .map(|(p, v)| v.clone() + Q::from_integer(p as i64 + 1))
                            .collect(),
                    )
                },
            );
            out
        })
        .collect();
    let mut out: Vec<Weight<Q>> = per_chain
        .into_iter()
        .multi_cartesian_product()
        .map(|vs| Weight::from_chain_vectors(flavor, &vs))
        .collect();
    out.sort();
    out
}

type State = Vec<Vec<i64>>;

fn prefix_sums(v: &[i64]) -> Vec<i64> {
    v.iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

fn shifted(v: &[i64]) -> Vec<i64> {
    v.iter().enumerate().map(|(p, &x)| x - (p as i64 + 1)).collect()
}

fn shifted_sorted_desc(v: &[i64]) -> Vec<i64> {
    let mut s = shifted(v);
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn unshift(y: &[i64]) -> Vec<i64> {
    y.iter().enumerate().map(|(p, v)| v + p as i64 + 1).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    /// From `λ` down towards `μ`.
    Down,
    /// From `μ` up towards `λ`.
    Up,
}

/// Search from one endpoint of an interval towards the other inside fixed
/// windows, pruned by the far endpoint.
struct Explorer {
    flavor: LieFlavor,
    dir: Direction,
    bound_prefix: Vec<Vec<i64>>,
    bound_sorted: Vec<Vec<i64>>,
    gammas: Vec<(u32, State)>,
    max_states: usize,
}

impl Explorer {
    fn within(&self, a: i64, b: i64) -> bool {
        match self.dir {
            Direction::Down => a >= b,
            Direction::Up => a <= b,
        }
    }

    fn admissible(&self, y: &State) -> bool {
        y.iter().enumerate().all(|(c, v)| {
            prefix_sums(v).iter().zip(&self.bound_prefix[c]).all(|(a, b)| self.within(*a, *b))
                && shifted_sorted_desc(v).iter().zip(&self.bound_sorted[c]).all(|(a, b)| self.within(*a, *b))
        })
    }

    /// All admissible fin-moves from `x`, rearranging every chain at once.
    /// The set is transitively closed: it contains the moves of each member.
    fn fin_moves(&self, x: &State) -> Vec<State> {
        let per_chain: Vec<Vec<Vec<i64>>> = x
            .iter()
            .enumerate()
            .map(|(c, xc)| {
                let px = prefix_sums(xc);
                let bound = &self.bound_prefix[c];
                let mut out = Vec::new();
                rearrangements(
                    &shifted(xc),
                    |p, _, d: &i64| match self.dir {
                        Direction::Down => *d <= 0 && px[p] + d >= bound[p],
                        Direction::Up => *d >= 0 && px[p] + d <= bound[p],
                    },
                    |y| out.push(unshift(y)),
                );
                out
            })
            .collect();
        per_chain.into_iter().multi_cartesian_product().filter(|s| s != x).collect()
    }

    fn gamma_moves(&self, x: &State) -> Vec<(State, u32)> {
        self.gammas
            .iter()
            .filter_map(|(k, g)| {
                let s: State = x
                    .iter()
                    .zip(g)
                    .map(|(a, b)| {
                        a.iter()
                            .zip(b)
                            .map(|(p, q)| match self.dir {
                                Direction::Down => p + q,
                                Direction::Up => p - q,
                            })
                            .collect()
                    })
                    .collect();
                self.admissible(&s).then_some((s, *k))
            })
            .collect()
    }

    /// Every state reachable from `start`. A state first reached by a
    /// fin-move needs no fin-expansion of its own.
    fn closure(&self, start: State) -> Result<HashSet<State>> {
        let mut seen = HashSet::from([start.clone()]);
        let mut stack = vec![(start, true)];
        while let Some((x, expand)) = stack.pop() {
            if expand {
                for y in self.fin_moves(&x) {
                    if seen.insert(y.clone()) {
                        stack.push((y, false));
                    }
                }
            }
            for (y, _) in self.gamma_moves(&x) {
                if seen.insert(y.clone()) {
                    stack.push((y, true));
                }
            }
            self.too_many(seen.len())?;
        }
        Ok(seen)
    }

    fn to_weight<Q: Coefficient>(&self, s: &State) -> Weight<Q> {
        Weight::from_int_chain_vectors(self.flavor, s)
    }

    fn too_many(&self, n: usize) -> Result<()> {
        if n > self.max_states {
            Err(Error::ResourceBound(format!("order search exceeded {} states", self.max_states)))
        } else {
            Ok(())
        }
    }
}

struct Visit {
    cost: u32,
    parent: Option<(State, StepTag)>,
    by_fin: bool,
}

/// Outcome of the cheap pre-checks shared by `leq_inf` and `inf_interval`.
enum Gate {
    Equal,
    Never,
    Search { gap: u32 },
}

fn gate<Q: Coefficient>(mu: &Weight<Q>, lam: &Weight<Q>) -> Result<Gate> {
    same_flavor(mu, lam)?;
    if mu == lam {
        return Ok(Gate::Equal);
    }
    if !mu.is_integral() || !lam.is_integral() || block_label(mu) != block_label(lam) {
        return Ok(Gate::Never);
    }
    let gap = degree(lam) - degree(mu);
    if !gap.is_integral() || gap.is_negative() {
        return Ok(Gate::Never);
    }
    let gap = gap
        .as_i64()
        .and_then(|g| u32::try_from(g).ok())
        .ok_or_else(|| Error::ResourceBound("degree gap too large".into()))?;
    Ok(Gate::Search { gap })
}

/// Per-chain windows containing every weight of the interval `[μ, λ]`.
pub fn inf_windows<Q: Coefficient>(mu: &Weight<Q>, lam: &Weight<Q>) -> Vec<usize> {
    mu.flavor()
        .chains()
        .iter()
        .map(|&chain| {
            let n = mu.support_bound(chain).max(lam.support_bound(chain));
            let mut vals = mu.shifted_chain_vector(chain, n);
            vals.extend(lam.shifted_chain_vector(chain, n));
            n.max(ceil_neg_min(&vals))
        })
        .collect()
}

impl Engine {
    fn explorer<Q: Coefficient>(
        &self,
        far: &Weight<Q>,
        windows: &[usize],
        ks: impl IntoIterator<Item = u32>,
        dir: Direction,
    ) -> Result<Explorer> {
        let flavor = far.flavor();
        let far_state = int_state(far, windows)?;
        let mut gammas = Vec::new();
        for k in ks {
            for g in self.enumerate_r_k_in_windows::<Q>(flavor, k, windows)? {
                gammas.push((k, int_state(&g, windows)?));
            }
        }
        Ok(Explorer {
            flavor,
            dir,
            bound_prefix: far_state.iter().map(|v| prefix_sums(v)).collect(),
            bound_sorted: far_state.iter().map(|v| shifted_sorted_desc(v)).collect(),
            gammas,
            max_states: self.config.max_search_states,
        })
    }

    /// `μ ≤_inf λ` with at most `max_depth` γ-steps (default: the degree gap,
    /// which is always enough). Returns a witness chain when it holds.
    pub fn leq_inf<Q: Coefficient>(
        &self,
        mu: &Weight<Q>,
        lam: &Weight<Q>,
        max_depth: Option<u32>,
    ) -> Result<InfComparison<Q>> {
        let gap = match gate(mu, lam)? {
            Gate::Equal => {
                let cert = OrderCert { kind: OrderKind::Inf, chain: vec![lam.clone()], steps: Vec::new() };
                return Ok(InfComparison::decided(true, Some(cert)));
            }
            Gate::Never => return Ok(InfComparison::decided(false, None)),
            Gate::Search { gap } => gap,
        };
        let depth = max_depth.unwrap_or(gap);
        if gap > 0 && depth == 0 {
            return Ok(InfComparison::decided(false, None));
        }
        let ks: Vec<u32> = match gap {
            0 => Vec::new(),
            _ if depth >= gap => vec![1],
            _ => (1..=gap).collect(),
        };
        let windows = inf_windows(mu, lam);
        let ex = self.explorer(mu, &windows, ks, Direction::Down)?;
        let start = int_state(lam, &windows)?;
        let target = int_state(mu, &windows)?;

        // 0-1 BFS: fin-moves cost 0, γ-moves cost 1.
        let mut best: HashMap<State, Visit> = HashMap::new();
        best.insert(start.clone(), Visit { cost: 0, parent: None, by_fin: false });
        let mut queue = VecDeque::from([(start, 0u32)]);
        let mut found = false;
        while let Some((x, cost)) = queue.pop_front() {
            let by_fin = match best.get(&x) {
                Some(v) if v.cost < cost => continue,
                Some(v) => v.by_fin,
                None => false,
            };
            if x == target {
                found = true;
                break;
            }
            if !by_fin {
                for y in ex.fin_moves(&x) {
                    if best.get(&y).is_none_or(|b| b.cost > cost) {
                        best.insert(y.clone(), Visit { cost, parent: Some((x.clone(), StepTag::Fin)), by_fin: true });
                        queue.push_front((y, cost));
                    }
                }
            }
            if cost < depth {
                for (y, k) in ex.gamma_moves(&x) {
                    let c = cost + 1;
                    if best.get(&y).is_none_or(|b| b.cost > c) {
                        let parent = Some((x.clone(), StepTag::Gamma { k }));
                        best.insert(y.clone(), Visit { cost: c, parent, by_fin: false });
                        queue.push_back((y, c));
                    }
                }
            }
            ex.too_many(best.len())?;
        }
        let visited = best.len();
        if !found {
            return Ok(InfComparison { holds: false, cert: None, windows, visited });
        }
        let mut chain = vec![ex.to_weight::<Q>(&target)];
        let mut steps = Vec::new();
        let mut cur = target;
        while let Some(Visit { parent: Some((parent, tag)), .. }) = best.get(&cur) {
            chain.push(ex.to_weight(parent));
            steps.push(*tag);
            cur = parent.clone();
        }
        let cert = OrderCert { kind: OrderKind::Inf, chain, steps };
        Ok(InfComparison { holds: true, cert: Some(cert), windows, visited })
    }

    /// `{κ : μ ≤_inf κ ≤_inf λ}` in canonical order (empty if `μ ≰_inf λ`).
    pub fn inf_interval<Q: Coefficient>(&self, mu: &Weight<Q>, lam: &Weight<Q>) -> Result<Vec<Weight<Q>>> {
        self.inf_interval_widened(mu, lam, 0)
    }

    /// [`Engine::inf_interval`] searched on windows enlarged by `extra` on every chain.
    pub fn inf_interval_widened<Q: Coefficient>(
        &self,
        mu: &Weight<Q>,
        lam: &Weight<Q>,
        extra: usize,
    ) -> Result<Vec<Weight<Q>>> {
        let gap = match gate(mu, lam)? {
            Gate::Equal => return Ok(vec![lam.clone()]),
            Gate::Never => return Ok(Vec::new()),
            Gate::Search { gap } => gap,
        };
        let windows: Vec<usize> = inf_windows(mu, lam).iter().map(|w| w + extra).collect();
        let ks = (gap > 0).then_some(1);
        let down = self.explorer(mu, &windows, ks, Direction::Down)?;
        let top = int_state(lam, &windows)?;
        let bottom = int_state(mu, &windows)?;
        let below_top = down.closure(top)?;
        if !below_top.contains(&bottom) {
            return Ok(Vec::new());
        }
        let up = self.explorer(lam, &windows, ks, Direction::Up)?;
        let above_bottom = up.closure(bottom)?;
        let mut out: Vec<Weight<Q>> = below_top
            .iter()
            .filter(|x| above_bottom.contains(*x))
            .map(|x| down.to_weight(x))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Checks every step of a witness chain against its defining relation.
    pub fn verify_cert<Q: Coefficient>(&self, cert: &OrderCert<Q>) -> Result<bool> {
        if cert.chain.is_empty() || cert.steps.len() + 1 != cert.chain.len() {
            return Ok(false);
        }
        for ((lower, upper), step) in cert.chain.iter().tuple_windows().zip(&cert.steps) {
            let ok = match step {
                StepTag::Fin => leq_fin(lower, upper)?,
                StepTag::Gamma { k } => {
                    cert.kind == OrderKind::Inf && !self.c_coeff(*k, &lower.checked_sub(upper)?)?.is_zero()
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Integer mirrored chain vectors of `w` on the given windows.
fn int_state<Q: Coefficient>(w: &Weight<Q>, windows: &[usize]) -> Result<State> {
    w.flavor()
        .chains()
        .iter()
        .zip(windows)
        .map(|(&chain, &n)| {
            if w.support_bound(chain) > n {
                return Err(Error::precondition("weight exceeds search window"));
            }
            w.int_chain_vector(chain, n)
                .ok_or_else(|| Error::ResourceBound("coefficient out of i64 range".into()))
        })
        .collect()
}

/// `μ ≤_fin λ` together with a one-step certificate.
pub fn leq_fin_cert<Q: Coefficient>(mu: &Weight<Q>, lam: &Weight<Q>) -> Result<Option<OrderCert<Q>>> {
    Ok(leq_fin(mu, lam)?.then(|| {
        let (chain, steps) = if mu == lam {
            (vec![lam.clone()], Vec::new())
        } else {
            (vec![mu.clone(), lam.clone()], vec![StepTag::Fin])
        };
        OrderCert { kind: OrderKind::Fin, chain, steps }
    }))
}

/// `BTreeSet` view used by tests and the CLI.
pub fn as_set<Q: Coefficient>(ws: &[Weight<Q>]) -> BTreeSet<Weight<Q>> {
    ws.iter().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type W = Weight<Rational64>;

    fn w(f: LieFlavor, s: &str) -> W {
        W::parse(f, s).unwrap()
    }

    fn strs(ws: &[W]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn leq_fin_examples() {
        let sl = LieFlavor::Sl;
        let zero = W::zero(sl);
        assert!(leq_fin(&zero, &zero).unwrap());
        assert!(leq_fin(&w(sl, "1:-1,2:1"), &zero).unwrap());
        assert!(!leq_fin(&zero, &w(sl, "1:-1,2:1")).unwrap());
        assert!(!leq_fin(&w(sl, "1:1"), &zero).unwrap());
        assert!(!leq_fin(&w(sl, "1:1/2"), &zero).unwrap());
        // Right chain: −(ε₋₂ − ε₋₁) is below 0.
        assert!(leq_fin(&w(sl, "-2:-1,-1:1"), &zero).unwrap());
        assert!(leq_fin(&zero, &W::zero(LieFlavor::O)).is_err());
    }

    #[test]
    fn fin_up_set_examples() {
        let sl = LieFlavor::Sl;
        assert_eq!(fin_up_set(&W::zero(sl)), vec![W::zero(sl)]);
        assert_eq!(strs(&fin_up_set(&w(sl, "1:-1,2:1"))), vec!["", "1:-1,2:1"]);
        let dom = w(sl, "1:3,2:1,-1:-2");
        assert_eq!(fin_up_set(&dom), vec![dom.clone()]);
        // The up-set can reach beyond the support of μ.
        let o = w(LieFlavor::O, "1:-5");
        let up = fin_up_set(&o);
        assert!(up.contains(&w(LieFlavor::O, "1:-1,2:-1,3:-1,4:-1,5:-1")));
        for l in &up {
            assert!(leq_fin(&o, l).unwrap());
        }
    }

    #[test]
    fn leq_inf_examples() {
        let e = Engine::default();
        let sl = LieFlavor::Sl;
        let zero = W::zero(sl);
        let g = w(sl, "1:-1,-1:1");
        let r = e.leq_inf(&g, &zero, None).unwrap();
        assert!(r.holds);
        let cert = r.cert.unwrap();
        assert_eq!(cert.steps, vec![StepTag::Gamma { k: 1 }]);
        assert!(e.verify_cert(&cert).unwrap());
        assert!(e.leq_inf(&g, &g, None).unwrap().holds);
        assert!(!e.leq_inf(&zero, &g, None).unwrap().holds);
        assert!(!e.leq_inf(&g, &zero, Some(0)).unwrap().holds);
    }

    #[test]
    fn deeper_search_with_mixed_steps() {
        let e = Engine::default();
        let o = LieFlavor::O;
        let lam = W::zero(o);
        let mu = w(o, "1:-1,2:-3");
        let r = e.leq_inf(&mu, &lam, None).unwrap();
        assert!(r.holds);
        let cert = r.cert.unwrap();
        assert!(e.verify_cert(&cert).unwrap());
        assert_eq!(cert.chain.first(), Some(&mu));
        assert_eq!(cert.chain.last(), Some(&lam));
        // One ℛ₂ step is allowed when the depth is restricted.
        let r1 = e.leq_inf(&mu, &lam, Some(1)).unwrap();
        assert!(r1.holds);
        assert!(e.verify_cert(r1.cert.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn interval_examples() {
        let e = Engine::default();
        let sl = LieFlavor::Sl;
        let zero = W::zero(sl);
        let g = w(sl, "1:-1,-1:1");
        assert_eq!(e.inf_interval(&zero, &zero).unwrap(), vec![zero.clone()]);
        // Besides the endpoints: −α₁, −α₋₁ and their sum, each ≤_fin 0 and
        // one ℛ₁-step above γ.
        assert_eq!(
            strs(&e.inf_interval(&g, &zero).unwrap()),
            vec!["", "-1:1,-2:-1", "1:-1,-1:1", "1:-1,2:1", "1:-1,2:1,-1:1,-2:-1"]
        );
        assert!(e.inf_interval(&zero, &g).unwrap().is_empty());
        let mu = w(sl, "1:-2,-1:2");
        let iv = e.inf_interval(&mu, &zero).unwrap();
        assert_eq!(iv, e.inf_interval_widened(&mu, &zero, 2).unwrap());
        assert!(iv.contains(&g));
    }
}
