//! Primitive-ideal labels `I(x, y, Y_l, Y_r)` for simple objects over sl(∞).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Coefficient;
use crate::weight::{is_b_dominant, Chain, LieFlavor, Weight};

/// A primitive ideal of `U(sl(∞))`: rank `x`, Grassmann number `y`, and two
/// partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimitiveIdealLabel {
    pub x: u32,
    pub y: u32,
    pub yl: Partition,
    pub yr: Partition,
}

impl fmt::Display for PrimitiveIdealLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I(x={}, y={}, Yl={}, Yr={})", self.x, self.y, self.yl, self.yr)
    }
}

/// Splits on commas that are not inside brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl FromStr for PrimitiveIdealLabel {
    type Err = Error;

    /// Parses `I(x=1, y=0, Yl=[1], Yr=[])`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad label `{s}`, expected I(x=.., y=.., Yl=[..], Yr=[..])"));
        let inner = s.trim().strip_prefix("I(").and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (mut x, mut y, mut yl, mut yr) = (None, None, None, None);
        for field in split_top_level(inner) {
            let (key, value) = field.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "x" => x = Some(value.parse::<u32>().map_err(|_| bad())?),
                "y" => y = Some(value.parse::<u32>().map_err(|_| bad())?),
                "Yl" => yl = Some(value.parse::<Partition>()?),
                "Yr" => yr = Some(value.parse::<Partition>()?),
                _ => return Err(bad()),
            }
        }
        Ok(PrimitiveIdealLabel {
            x: x.ok_or_else(bad)?,
            y: y.ok_or_else(bad)?,
            yl: yl.ok_or_else(bad)?,
            yr: yr.ok_or_else(bad)?,
        })
    }
}

fn chain_partition<Q: Coefficient>(w: &Weight<Q>, chain: Chain) -> Result<Partition> {
    let v = w
        .int_chain_vector(chain, w.support_bound(chain))
        .ok_or_else(|| Error::precondition("weight is not integral"))?;
    let parts = v
        .iter()
        .map(|&c| u32::try_from(c).map_err(|_| Error::precondition("weight is not dominant")))
        .collect::<Result<Vec<u32>>>()?;
    Partition::new(parts)
}

/// `Ann L(λ) = I(0, 0, λ¹, λ²)` for an integrable (𝔟-dominant) sl(∞) weight.
pub fn annihilator_of_integrable<Q: Coefficient>(lam: &Weight<Q>) -> Result<PrimitiveIdealLabel> {
    if lam.flavor() != LieFlavor::Sl {
        return Err(Error::precondition("annihilator labels are defined for sl only"));
    }
    if !is_b_dominant(lam) {
        return Err(Error::precondition(format!("weight `{lam}` is not dominant, so L(λ) is not integrable")));
    }
    Ok(PrimitiveIdealLabel {
        x: 0,
        y: 0,
        yl: chain_partition(lam, Chain::Left)?,
        yr: chain_partition(lam, Chain::Right)?,
    })
}

/// The weight `λ` with `Ann L(λ) = I(x, 0, Y_l, Y_r)`:
/// `λ = Σ_{i≤x} a_i ε_i + Σ_i (Y_l)_i ε_{x+i} − Σ_i (Y_r)_i ε_{−i}`.
///
/// Every `a_i` and every difference `a_i − a_j` must be non-integral.
pub fn weight_from_label<Q: Coefficient>(
    x: u32,
    yl: &Partition,
    yr: &Partition,
    a: &[Q],
) -> Result<Weight<Q>> {
    if a.len() != x as usize {
        return Err(Error::precondition(format!("expected {x} parameters a_i, got {}", a.len())));
    }
    if let Some(ai) = a.iter().find(|ai| ai.is_integral()) {
        return Err(Error::precondition(format!("a_i = {ai} is an integer")));
    }
    for (i, ai) in a.iter().enumerate() {
        for aj in &a[i + 1..] {
            if (ai.clone() - aj.clone()).is_integral() {
                return Err(Error::precondition(format!("a_i − a_j = {ai} − {aj} is an integer")));
            }
        }
    }
    let x = i64::from(x);
    let left = a.iter().cloned().enumerate().map(|(i, c)| (i as i64 + 1, c));
    let yl_part = yl.parts().iter().enumerate().map(|(i, &c)| (x + i as i64 + 1, Q::from_integer(i64::from(c))));
    let yr_part = yr.parts().iter().enumerate().map(|(i, &c)| (-(i as i64 + 1), Q::from_integer(-i64::from(c))));
    Weight::from_entries(LieFlavor::Sl, left.chain(yl_part).chain(yr_part))
}

/// Every object of finite length over sl(∞) has nonzero annihilator.
pub fn is_nonzero_annihilator_guaranteed(module_length: u64) -> Result<bool> {
    if module_length == 0 {
        return Err(Error::precondition("module length must be positive"));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type W = Weight<Rational64>;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn integrable_labels() {
        let sl = LieFlavor::Sl;
        let l = annihilator_of_integrable(&W::zero(sl)).unwrap();
        assert_eq!(l.to_string(), "I(x=0, y=0, Yl=[], Yr=[])");
        let l = annihilator_of_integrable(&W::parse(sl, "1:2,2:1,-1:-1").unwrap()).unwrap();
        assert_eq!((l.yl.clone(), l.yr.clone()), (p("[2,1]"), p("[1]")));
        let l = annihilator_of_integrable(&W::parse(sl, "1:1").unwrap()).unwrap();
        assert_eq!(l.yl, p("[1]"));
        assert!(annihilator_of_integrable(&W::parse(sl, "2:1").unwrap()).is_err());
        assert!(annihilator_of_integrable(&W::zero(LieFlavor::O)).is_err());
    }

    #[test]
    fn weights_from_labels() {
        let empty = Partition::empty();
        assert_eq!(weight_from_label::<Rational64>(0, &empty, &empty, &[]).unwrap(), W::zero(LieFlavor::Sl));
        let l = weight_from_label::<Rational64>(0, &p("[1]"), &p("[2]"), &[]).unwrap();
        assert_eq!(l.to_string(), "1:1,-1:-2");
        let l = weight_from_label(1, &p("[1]"), &empty, &[Rational64::new(1, 2)]).unwrap();
        assert_eq!(l.to_string(), "1:1/2,2:1");
        assert!(!is_b_dominant(&l));
        assert!(weight_from_label(1, &empty, &empty, &[Rational64::from_integer(1)]).is_err());
        let halves = [Rational64::new(1, 2), Rational64::new(3, 2)];
        assert!(weight_from_label(2, &empty, &empty, &halves).is_err());
        assert!(weight_from_label::<Rational64>(1, &empty, &empty, &[]).is_err());
    }

    #[test]
    fn x_zero_inverts_integrable_case() {
        let yl = p("[3,1,1]");
        let yr = p("[2,2]");
        let l = weight_from_label::<Rational64>(0, &yl, &yr, &[]).unwrap();
        assert!(is_b_dominant(&l));
        let label = annihilator_of_integrable(&l).unwrap();
        assert_eq!((label.yl, label.yr), (yl, yr));
    }

    #[test]
    fn label_roundtrip() {
        let l = PrimitiveIdealLabel { x: 1, y: 0, yl: p("[2,1]"), yr: p("[]") };
        assert_eq!(l.to_string().parse::<PrimitiveIdealLabel>().unwrap(), l);
        assert!("I(x=1)".parse::<PrimitiveIdealLabel>().is_err());
        assert!("J(x=1, y=0, Yl=[], Yr=[])".parse::<PrimitiveIdealLabel>().is_err());
    }

    #[test]
    fn nonzero_annihilator() {
        assert!(is_nonzero_annihilator_guaranteed(1).unwrap());
        assert!(is_nonzero_annihilator_guaranteed(5).unwrap());
        assert!(is_nonzero_annihilator_guaranteed(0).is_err());
    }
}
