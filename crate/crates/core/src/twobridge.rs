//! Two-bridge knots in Schubert normal form and the Lisca classification of
//! the ribbon ones.
//!
//! `K(p,q)` with `p` odd, `0 < q < p`, `gcd(p,q) = 1`. Two forms describe the
//! same unoriented knot iff `p` agrees and `q' ≡ q^{±1} (mod p)`; the mirror
//! image is `K(p, p − q)`.
//!
//! A two-bridge knot is ribbon iff it is equivalent to some `K(m², q)` with
//! `m` odd and `q` in one of
//!
//! 1. `mk ± 1`, `m > k > 0`, `gcd(m,k) = 1`;
//! 2. `d(m ± 1)`, `d > 1`, `d | 2m ∓ 1`;
//! 3. `d(m ± 1)`, `d > 1` odd, `d | m ± 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cfcore::ContinuedFraction;
use crate::error::{Error, Result};
use crate::scalar::{add, lit, mul, parse_int, sub, Scalar};
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridge<T> {
    p: T,
    q: T,
}

/// Normalisation result: fractions `±1/q` are the unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Knot<T> {
    Unknot,
    TwoBridge(TwoBridge<T>),
}

impl<T: Scalar> Knot<T> {
    pub fn two_bridge(self) -> Option<TwoBridge<T>> {
        match self {
            Knot::Unknot => None,
            Knot::TwoBridge(k) => Some(k),
        }
    }
}

impl<T: Scalar> fmt::Display for Knot<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot::Unknot => f.write_str("unknot"),
            Knot::TwoBridge(k) => k.fmt(f),
        }
    }
}

impl<T: Scalar> TwoBridge<T> {
    /// Canonical constructor; rejects anything that is not already in
    /// Schubert normal form.
    pub fn new(p: T, q: T) -> Result<Self> {
        if p.is_even() {
            return Err(Error::Link(format!("K({p},{q})")));
        }
        if p < lit(3) || !q.is_positive() || q >= p {
            return Err(Error::Domain(format!(
                "K({p},{q}) is not a Schubert normal form (need odd p ≥ 3, 0 < q < p)"
            )));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::Domain(format!("gcd({p},{q}) ≠ 1")));
        }
        Ok(TwoBridge { p, q })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// `K(p, p − q)`.
    pub fn mirror(&self) -> Self {
        TwoBridge {
            p: self.p.clone(),
            q: sub(&self.p, &self.q),
        }
    }

    /// `K(p, q⁻¹ mod p)`, the same knot viewed from the other end.
    pub fn flip(&self) -> Self {
        TwoBridge {
            p: self.p.clone(),
            q: inverse_mod(&self.q, &self.p).expect("canonical form is coprime"),
        }
    }

    /// The residues `q'` with `K(p,q') ≅ K(p,q)`, sorted and deduplicated.
    pub fn representatives(&self, up_to_mirror: bool) -> Vec<T> {
        let inv = self.flip().q;
        let mut reps = vec![self.q.clone(), inv.clone()];
        if up_to_mirror {
            reps.push(sub(&self.p, &self.q));
            reps.push(sub(&self.p, &inv));
        }
        reps.sort();
        reps.dedup();
        reps
    }

    pub fn equivalent(&self, other: &Self, up_to_mirror: bool) -> bool {
        self.p == other.p && residues_equivalent(&self.p, &self.q, &other.q, up_to_mirror)
    }
}

impl<T: Scalar> fmt::Display for TwoBridge<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.p, self.q)
    }
}

/// Parse `K(p,q)` and normalise it.
pub fn parse_knot<T: Scalar>(s: &str) -> Result<Knot<T>> {
    let bad = || Error::Parse(format!("expected K(p,q), got {s:?}"));
    let inner = s
        .trim()
        .strip_prefix('K')
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.trim_end().strip_suffix(')'))
        .ok_or_else(bad)?;
    let (p, q) = inner.split_once(',').ok_or_else(bad)?;
    let p: T = parse_int(p).ok_or_else(bad)?;
    let q: T = parse_int(q).ok_or_else(bad)?;
    if p.is_even() && !p.is_zero() {
        return Err(Error::Link(format!("K({p},{q})")));
    }
    normalize(p, q)
}

/// `K(p,q)` text; the unknot is rejected.
impl<T: Scalar> FromStr for TwoBridge<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_knot(s)?
            .two_bridge()
            .ok_or_else(|| Error::Domain(format!("{s} is the unknot")))
    }
}

/// Schubert normalisation of a coprime pair `num/den`.
pub fn normalize<T: Scalar>(num: T, den: T) -> Result<Knot<T>> {
    if num.is_zero() {
        return Err(Error::Domain("numerator 0 does not describe a knot".into()));
    }
    if !num.gcd(&den).is_one() {
        return Err(Error::Domain(format!("gcd({num},{den}) ≠ 1")));
    }
    let p = num.abs();
    if p.is_one() {
        return Ok(Knot::Unknot);
    }
    if p.is_even() {
        return Err(Error::Link(format!("{num}/{den}")));
    }
    let q = if num.is_negative() { -den } else { den };
    let q = q.mod_floor(&p);
    Ok(Knot::TwoBridge(TwoBridge { p, q }))
}

/// `r ∈ (0, p)` with `q·r ≡ 1 (mod p)`; `q` is reduced mod `p` first.
pub fn inverse_mod<T: Scalar>(q: &T, p: &T) -> Result<T> {
    if !p.is_positive() {
        return Err(Error::Domain(format!("modulus {p} must be positive")));
    }
    let ext = q.mod_floor(p).extended_gcd(p);
    if !ext.gcd.is_one() {
        return Err(Error::Domain(format!("{q} is not invertible mod {p}")));
    }
    Ok(ext.x.mod_floor(p))
}

/// Fraction-level Schubert equivalence of `p/q1` and `p/q2` for any
/// modulus `p ≥ 2` (odd or even), with both residues invertible.
pub fn residues_equivalent<T: Scalar>(p: &T, q1: &T, q2: &T, up_to_mirror: bool) -> bool {
    let (a, b) = (q1.mod_floor(p), q2.mod_floor(p));
    let Ok(inv) = inverse_mod(&a, p) else {
        return false;
    };
    let neg = |x: &T| (-x.clone()).mod_floor(p);
    let mut candidates = vec![a.clone(), inv.clone()];
    if up_to_mirror {
        candidates.push(neg(&a));
        candidates.push(neg(&inv));
    }
    candidates.contains(&b)
}

pub fn equivalent<T: Scalar>(a: &TwoBridge<T>, b: &TwoBridge<T>, up_to_mirror: bool) -> bool {
    a.equivalent(b, up_to_mirror)
}

pub fn mirror<T: Scalar>(k: &TwoBridge<T>) -> TwoBridge<T> {
    k.mirror()
}

/// Knot of the Conway form `C(a₁,…,aₙ)`.
pub fn from_cf<T: Scalar>(cf: &ContinuedFraction<T>) -> Result<Knot<T>> {
    let value = cf.eval();
    if value.is_infinite() || value.is_zero() {
        return Err(Error::Domain(format!(
            "{cf} evaluates to {value}, not a knot"
        )));
    }
    normalize(value.numer().clone(), value.denom().clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    F1,
    F2,
    F3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F1 => "F1",
            Family::F2 => "F2",
            Family::F3 => "F3",
        })
    }
}

/// Certificate that `K(m², representative_q)` lies in a Lisca family.
/// `aux` is `k` for F1 and `d` for F2/F3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonWitness<T> {
    pub family: Family,
    pub m: T,
    pub aux: T,
    pub sign: Sign,
    pub representative_q: T,
}

impl<T: Scalar> RibbonWitness<T> {
    /// Re-derive `representative_q` and the family side conditions.
    pub fn regenerates(&self) -> bool {
        let (m, aux, s) = (&self.m, &self.aux, self.sign.to_scalar::<T>());
        let one = T::one();
        let q = match self.family {
            Family::F1 => {
                if !(m > aux && aux.is_positive() && m.gcd(aux).is_one()) {
                    return false;
                }
                add(&mul(m, aux), &s)
            }
            Family::F2 => {
                let target = sub(&mul(&lit(2), m), &s);
                if !(aux > &one && target.is_multiple_of(aux)) {
                    return false;
                }
                mul(aux, &add(m, &s))
            }
            Family::F3 => {
                if !(aux > &one && aux.is_odd() && add(m, &s).is_multiple_of(aux)) {
                    return false;
                }
                mul(aux, &add(m, &s))
            }
        };
        m.is_odd() && q == self.representative_q && q.is_positive() && q < mul(m, m)
    }
}

impl<T: Scalar> fmt::Display for RibbonWitness<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let aux = if self.family == Family::F1 { "k" } else { "d" };
        write!(
            f,
            "{}(m={}, {}={}, sign={}, q'={})",
            self.family, self.m, aux, self.aux, self.sign, self.representative_q
        )
    }
}

/// Every member of the three families for a given odd `m ≥ 3`, restricted to
/// `0 < q < m²`, in (family, aux, sign) order.
pub fn family_members<T: Scalar>(m: &T) -> Vec<RibbonWitness<T>> {
    let one = T::one();
    let two: T = lit(2);
    let square = mul(m, m);
    let mut out = Vec::new();
    let mut push = |family, aux: T, sign: Sign, q: T| {
        if q.is_positive() && q < square {
            out.push(RibbonWitness {
                family,
                m: m.clone(),
                aux,
                sign,
                representative_q: q,
            });
        }
    };

    let mut k = one.clone();
    while &k < m {
        if m.gcd(&k).is_one() {
            for sign in [Sign::Minus, Sign::Plus] {
                push(
                    Family::F1,
                    k.clone(),
                    sign,
                    add(&mul(m, &k), &sign.to_scalar()),
                );
            }
        }
        k = add(&k, &one);
    }

    for sign in [Sign::Minus, Sign::Plus] {
        let s = sign.to_scalar::<T>();
        let target = sub(&mul(&two, m), &s);
        for d in divisors_above_one(&target) {
            let q = mul(&d, &add(m, &s));
            push(Family::F2, d, sign, q);
        }
    }

    for sign in [Sign::Minus, Sign::Plus] {
        let shifted = add(m, &sign.to_scalar());
        for d in divisors_above_one(&shifted)
            .into_iter()
            .filter(|d| d.is_odd())
        {
            let q = mul(&d, &shifted);
            push(Family::F3, d, sign, q);
        }
    }

    out.sort();
    out
}

fn divisors_above_one<T: Scalar>(n: &T) -> Vec<T> {
    let one = T::one();
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = add(&one, &one);
    while d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
        }
        d = add(&d, &one);
    }
    out
}

/// `Some(m)` when `p = m²` with `m` odd and at least 3.
pub fn odd_square_root<T: Scalar>(p: &T) -> Option<T> {
    if !p.is_positive() {
        return None;
    }
    let m = p.sqrt();
    (mul(&m, &m) == *p && m.is_odd() && m > T::one()).then_some(m)
}

fn witnesses_among<T: Scalar>(
    members: &[RibbonWitness<T>],
    knot: &TwoBridge<T>,
    up_to_mirror: bool,
) -> Vec<RibbonWitness<T>> {
    let reps = knot.representatives(up_to_mirror);
    members
        .iter()
        .filter(|w| reps.contains(&w.representative_q))
        .cloned()
        .collect()
}

/// All Lisca witnesses for `knot`, searched over its equivalence class
/// (`q`, `q⁻¹`, and the mirrors of both when `up_to_mirror`).
pub fn lisca_ribbon_witnesses<T: Scalar>(
    knot: &TwoBridge<T>,
    up_to_mirror: bool,
) -> Vec<RibbonWitness<T>> {
    let Some(m) = odd_square_root(&knot.p) else {
        return Vec::new();
    };
    let found = witnesses_among(&family_members(&m), knot, up_to_mirror);
    debug_assert!(found.iter().all(RibbonWitness::regenerates));
    found
}

/// Ribbon up to mirror image.
pub fn is_ribbon<T: Scalar>(knot: &TwoBridge<T>) -> bool {
    !lisca_ribbon_witnesses(knot, true).is_empty()
}

/// Every ribbon `K(p,q)` in normal form with `p ≤ p_max`, sorted by `(p, q)`,
/// with its witnesses (up to mirror). Distinct `p` are handled in parallel on
/// the current rayon pool.
pub fn enumerate_ribbon<T: Scalar>(p_max: &T) -> Vec<(TwoBridge<T>, Vec<RibbonWitness<T>>)> {
    let mut roots = Vec::new();
    let mut m: T = lit(3);
    while &mul(&m, &m) <= p_max {
        roots.push(m.clone());
        m = add(&m, &lit(2));
    }
    roots
        .par_iter()
        .flat_map_iter(|m| {
            let p = mul(m, m);
            let members = family_members(m);
            let mut qs = BTreeSet::new();
            for w in &members {
                let k = TwoBridge {
                    p: p.clone(),
                    q: w.representative_q.clone(),
                };
                qs.extend(k.representatives(true));
            }
            qs.into_iter()
                .map(|q| {
                    let k = TwoBridge { p: p.clone(), q };
                    let ws = witnesses_among(&members, &k, true);
                    (k, ws)
                })
                .collect::<Vec<_>>()
        })
        .collect()
}
