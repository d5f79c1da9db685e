use crate::cfcore::{ContinuedFraction, ExtendedRational};
use crate::error::{Error, Result};
use crate::scalar::{add, lit, mul, sub, Scalar};
use crate::sign::Sign;
use crate::twobridge::{
    from_cf, lisca_ribbon_witnesses, normalize, residues_equivalent, Family, Knot, RibbonWitness,
    TwoBridge,
};

use super::{FamilyTag, Provenance, SymmetricUnionPresentation, TwistInsertion};

/// The closed forms of one family-2/3 sub-case at `(s, t)`, evaluated exactly.
///
/// Nothing here requires `m` to be odd, and negative parameters are accepted
/// as long as every continued-fraction entry stays nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyIdentity<T> {
    pub tag: FamilyTag,
    pub s: T,
    pub t: T,
    pub d: T,
    pub m: T,
    pub full_cf: ContinuedFraction<T>,
    pub partial_cf: ContinuedFraction<T>,
    pub full_value: ExtendedRational<T>,
    pub partial_value: ExtendedRational<T>,
}

impl<T: Scalar> FamilyIdentity<T> {
    /// `m² / (d(m ± 1))`.
    pub fn expected_full(&self) -> ExtendedRational<T> {
        let sign = self.tag.sign().expect("lisca tag");
        let den = mul(&self.d, &add(&self.m, &sign.to_scalar()));
        ExtendedRational::new(mul(&self.m, &self.m), den).expect("m ≠ 0")
    }

    pub fn expected_partial(&self) -> ExtendedRational<T> {
        ExtendedRational::new(self.m.clone(), self.d.clone()).expect("d ≠ 0")
    }

    pub fn full_holds(&self) -> bool {
        self.full_value == self.expected_full()
    }

    /// The partial fraction is literally `m/d`.
    pub fn partial_exact(&self) -> bool {
        self.partial_value == self.expected_partial()
    }

    /// The partial fraction describes `K(m, d)` up to `q ↦ q⁻¹` and mirror.
    pub fn partial_equivalent(&self) -> bool {
        let v = &self.partial_value;
        if v.is_infinite() || v.numer().abs() != self.m.abs() {
            return false;
        }
        residues_equivalent(&self.m.abs(), v.denom(), &self.d, true)
    }
}

/// Evaluate the closed forms of a family-2/3 sub-case.
pub fn family_identity<T: Scalar>(tag: FamilyTag, s: &T, t: &T) -> Result<FamilyIdentity<T>> {
    let n = |x: i64| -> T { lit(x) };
    let st2 = mul(&n(2), &mul(s, t));
    let lin =
        |cs: i64, ct: i64, c: i64| add(&add(&st2, &mul(&n(cs), s)), &add(&mul(&n(ct), t), &n(c)));
    let d = add(&mul(&n(2), s), &n(3));
    let plus = |x: &T, c: i64| add(x, &n(c));
    let neg = |x: T| -x;

    let (m, full, partial) = match tag {
        FamilyTag::F1 => {
            return Err(Error::Domain("family 1 has no (s,t) closed form".into()));
        }
        // 2m − 1 = d(2t + 3)
        FamilyTag::F2Plus => (
            lin(3, 3, 5),
            vec![plus(t, 1), n(2), plus(s, 1), plus(t, 1), n(2), plus(s, 1)],
            vec![plus(t, 1), n(2), neg(plus(s, 2))],
        ),
        // 2m + 1 = d(2t + 3)
        FamilyTag::F2Minus => (
            lin(3, 3, 4),
            vec![
                plus(t, 2),
                n(-2),
                neg(plus(s, 1)),
                plus(t, 2),
                n(-2),
                neg(plus(s, 1)),
            ],
            vec![plus(s, 1), n(2), plus(t, 1)],
        ),
        // m + 1 = d(t + 2)
        FamilyTag::F3Plus => (
            lin(4, 3, 5),
            vec![
                plus(t, 2),
                neg(plus(s, 1)),
                n(-2),
                plus(t, 2),
                n(2),
                plus(s, 1),
            ],
            vec![plus(t, 2), neg(d.clone())],
        ),
        // m − 1 = d(t + 1)
        FamilyTag::F3Minus => (
            lin(2, 3, 4),
            vec![
                plus(t, 1),
                plus(s, 1),
                n(2),
                plus(t, 1),
                n(-2),
                neg(plus(s, 1)),
            ],
            vec![plus(t, 1), d.clone()],
        ),
    };
    let full_cf = ContinuedFraction::new(full)?;
    let partial_cf = ContinuedFraction::new(partial)?;
    Ok(FamilyIdentity {
        tag,
        s: s.clone(),
        t: t.clone(),
        d,
        m,
        full_value: full_cf.eval(),
        partial_value: partial_cf.eval(),
        full_cf,
        partial_cf,
    })
}

fn two_bridge<T: Scalar>(knot: Knot<T>, what: &str) -> Result<TwoBridge<T>> {
    knot.two_bridge()
        .ok_or_else(|| Error::Verification(format!("{what} normalised to the unknot")))
}

/// Family 1: `K(m², mk + sign)` with partial knot `K(m, k)`.
///
/// The partial fraction is the positive expansion of `m/k` (length `n`) and
/// `ε = sign·(−1)ⁿ`, which makes the normalised `q` exactly `mk + sign`.
pub fn present_family1<T: Scalar>(
    m: &T,
    k: &T,
    sign: Sign,
) -> Result<SymmetricUnionPresentation<T>> {
    if m.is_even() {
        return Err(Error::EvenDeterminantRoot(m.to_string()));
    }
    if !(k.is_positive() && k < m && m.gcd(k).is_one()) {
        return Err(Error::Domain(format!(
            "family 1 needs m > k > 0 and gcd(m,k) = 1, got m = {m}, k = {k}"
        )));
    }
    let partial_cf = ContinuedFraction::expand(&ExtendedRational::new(m.clone(), k.clone())?)?;
    let epsilon = sign * Sign::parity(partial_cf.len());
    let full_cf = partial_cf.symmetric(epsilon)?;
    partial_cf.symmetric_identity(epsilon)?;

    let partial_knot = two_bridge(from_cf(&partial_cf)?, "partial fraction")?;
    let result = two_bridge(from_cf(&full_cf)?, "full fraction")?;
    let expected = TwoBridge::new(mul(m, m), add(&mul(m, k), &sign.to_scalar()))?;
    if result != expected {
        return Err(Error::Verification(format!(
            "{full_cf} normalises to {result}, expected {expected}"
        )));
    }
    Ok(SymmetricUnionPresentation {
        partial_cf,
        partial_knot,
        insertion: TwistInsertion::new(Some(epsilon)),
        full_cf,
        result,
        provenance: Provenance {
            tag: FamilyTag::F1,
            m: m.clone(),
            aux: k.clone(),
            sign,
            s: None,
            t: None,
        },
        mirror_taken: false,
    })
}

/// Families 2 and 3 at parameters `(s, t)`, both nonnegative.
pub fn present_lisca<T: Scalar>(
    tag: FamilyTag,
    s: &T,
    t: &T,
) -> Result<SymmetricUnionPresentation<T>> {
    if s.is_negative() || t.is_negative() {
        return Err(Error::Domain(format!(
            "need s, t ≥ 0, got s = {s}, t = {t}"
        )));
    }
    let id = family_identity(tag, s, t)?;
    let sign = tag.sign().expect("lisca tag");
    if id.m.is_even() {
        return Err(Error::EvenDeterminantRoot(id.m.to_string()));
    }
    if !id.full_holds() {
        return Err(Error::Verification(format!(
            "{} = {}, expected {}",
            id.full_cf,
            id.full_value,
            id.expected_full()
        )));
    }
    let target_partial = two_bridge(normalize(id.m.clone(), id.d.clone())?, "K(m,d)")?;
    let partial_knot = two_bridge(from_cf(&id.partial_cf)?, "partial fraction")?;
    if !partial_knot.equivalent(&target_partial, true) {
        return Err(Error::Verification(format!(
            "partial {} gives {partial_knot}, not equivalent to {target_partial}",
            id.partial_cf
        )));
    }
    let result = two_bridge(from_cf(&id.full_cf)?, "full fraction")?;
    let expected = TwoBridge::new(
        mul(&id.m, &id.m),
        mul(&id.d, &add(&id.m, &sign.to_scalar())),
    )?;
    if result != expected {
        return Err(Error::Verification(format!(
            "{} normalises to {result}, expected {expected}",
            id.full_cf
        )));
    }
    Ok(SymmetricUnionPresentation {
        partial_cf: id.partial_cf,
        partial_knot,
        insertion: TwistInsertion::new(None),
        full_cf: id.full_cf,
        result,
        provenance: Provenance {
            tag,
            m: id.m,
            aux: id.d,
            sign,
            s: Some(s.clone()),
            t: Some(t.clone()),
        },
        mirror_taken: false,
    })
}

/// `K(m², d(m ± 1))` with `d | 2m ∓ 1`.
pub fn present_family2<T: Scalar>(
    sign: Sign,
    s: &T,
    t: &T,
) -> Result<SymmetricUnionPresentation<T>> {
    present_lisca(FamilyTag::from_family(Family::F2, sign), s, t)
}

/// `K(m², d(m ± 1))` with `d` odd and `d | m ± 1`.
pub fn present_family3<T: Scalar>(
    sign: Sign,
    s: &T,
    t: &T,
) -> Result<SymmetricUnionPresentation<T>> {
    present_lisca(FamilyTag::from_family(Family::F3, sign), s, t)
}

fn exact_div<T: Scalar>(a: &T, b: &T) -> Result<T> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Verification(format!(
            "parameter inversion: {b} does not divide {a}"
        )))
    }
}

/// Recover `(s, t)` from a family-2/3 witness.
fn invert_parameters<T: Scalar>(w: &RibbonWitness<T>) -> Result<(T, T)> {
    let (m, d) = (&w.m, &w.aux);
    let two: T = lit(2);
    let s = exact_div(&sub(d, &lit(3)), &two)?;
    let t = match (w.family, w.sign) {
        (Family::F2, sign) => {
            // 2m ∓ 1 = d(2t + 3)
            let quotient = exact_div(&sub(&mul(&two, m), &sign.to_scalar()), d)?;
            exact_div(&sub(&quotient, &lit(3)), &two)?
        }
        (Family::F3, Sign::Plus) => sub(&exact_div(&add(m, &T::one()), d)?, &two),
        (Family::F3, Sign::Minus) => sub(&exact_div(&sub(m, &T::one()), d)?, &T::one()),
        (Family::F1, _) => unreachable!("family 1 has no (s,t)"),
    };
    if s.is_negative() || t.is_negative() {
        return Err(Error::Verification(format!(
            "parameter inversion of {w} gave s = {s}, t = {t}"
        )));
    }
    Ok((s, t))
}

/// Build a presentation for any ribbon two-bridge knot.
///
/// Witnesses are ranked by family (F1 before F2 before F3), then smallest
/// `k`/`d`, then preferring ones that need no mirror and that hit `q`
/// itself; the first is realised. The result is checked to be equivalent to
/// `knot` up to mirror.
pub fn find_presentation<T: Scalar>(knot: &TwoBridge<T>) -> Result<SymmetricUnionPresentation<T>> {
    let direct = knot.representatives(false);
    let witness = lisca_ribbon_witnesses(knot, true)
        .into_iter()
        .min_by_key(|w| {
            (
                w.family,
                w.aux.clone(),
                !direct.contains(&w.representative_q),
                &w.representative_q != knot.q(),
                w.sign,
                w.representative_q.clone(),
            )
        })
        .ok_or_else(|| Error::NotRibbon(knot.to_string()))?;

    let mut pres = match witness.family {
        Family::F1 => present_family1(&witness.m, &witness.aux, witness.sign)?,
        family => {
            let (s, t) = invert_parameters(&witness)?;
            present_lisca(FamilyTag::from_family(family, witness.sign), &s, &t)?
        }
    };
    if pres.provenance.m != witness.m || pres.result.q() != &witness.representative_q {
        return Err(Error::Verification(format!(
            "witness {witness} realised as {} with m = {}",
            pres.result, pres.provenance.m
        )));
    }
    if !pres.result.equivalent(knot, true) {
        return Err(Error::Verification(format!(
            "{} is not equivalent to {knot}",
            pres.result
        )));
    }
    pres.mirror_taken = !direct.contains(&witness.representative_q);
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cf(xs: &[i64]) -> ContinuedFraction<BigInt> {
        ContinuedFraction::from_i64s(xs).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn knot(p: i64, q: i64) -> TwoBridge<BigInt> {
        TwoBridge::new(big(p), big(q)).unwrap()
    }

    #[test]
    fn family1_examples() {
        let pres = present_family1(&big(3), &big(1), Sign::Minus).unwrap();
        assert_eq!(pres.partial_cf, cf(&[3]));
        assert_eq!(pres.insertion.epsilon, Some(Sign::Plus));
        assert_eq!(pres.full_cf, cf(&[3, 1, -3]));
        assert_eq!(pres.result, knot(9, 2));

        let pres = present_family1(&big(5), &big(3), Sign::Plus).unwrap();
        assert_eq!(pres.partial_cf, cf(&[1, 1, 2]));
        assert_eq!(pres.insertion.epsilon, Some(Sign::Minus));
        assert_eq!(pres.full_cf, cf(&[1, 1, 2, -1, -2, -1, -1]));
        assert_eq!(pres.result, knot(25, 16));

        let pres = present_family1(&big(3), &big(2), Sign::Plus).unwrap();
        assert_eq!(pres.partial_cf, cf(&[1, 2]));
        assert_eq!(pres.insertion.epsilon, Some(Sign::Plus));
        assert_eq!(pres.full_cf, cf(&[1, 2, 1, -2, -1]));
        assert_eq!(pres.result, knot(9, 7));
    }

    #[test]
    fn family1_errors() {
        assert!(matches!(
            present_family1(&big(4), &big(1), Sign::Plus),
            Err(Error::EvenDeterminantRoot(_))
        ));
        assert!(matches!(
            present_family1(&big(9), &big(3), Sign::Plus),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            present_family1(&big(5), &big(5), Sign::Plus),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            present_family1(&big(5), &big(0), Sign::Plus),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn family2_examples() {
        let pres = present_family2(Sign::Plus, &big(0), &big(0)).unwrap();
        assert_eq!(pres.provenance.m, big(5));
        assert_eq!(pres.provenance.aux, big(3));
        assert_eq!(pres.full_cf, cf(&[1, 2, 1, 1, 2, 1]));
        assert_eq!(pres.partial_cf, cf(&[1, 2, -2]));
        assert_eq!(pres.partial_knot, knot(5, 3));
        assert_eq!(pres.result, knot(25, 18));

        assert!(matches!(
            present_family2(Sign::Plus, &big(0), &big(1)),
            Err(Error::EvenDeterminantRoot(m)) if m == "8"
        ));
    }

    #[test]
    fn family2_minus_partial_is_inverse_form() {
        let id = family_identity(FamilyTag::F2Minus, &big(1), &big(0)).unwrap();
        assert_eq!((id.d.clone(), id.m.clone()), (big(5), big(7)));
        assert_eq!(id.full_cf, cf(&[2, -2, -2, 2, -2, -2]));
        assert_eq!(id.full_value.to_string(), "49/30");
        assert!(id.full_holds());
        assert_eq!(id.partial_cf, cf(&[2, 2, 1]));
        assert_eq!(id.partial_value.to_string(), "7/3");
        assert!(!id.partial_exact());
        assert!(id.partial_equivalent());

        let pres = present_family2(Sign::Minus, &big(1), &big(0)).unwrap();
        assert_eq!(pres.result, knot(49, 30));
        assert!(pres.partial_knot.equivalent(&knot(7, 5), false));
    }

    #[test]
    fn family3_examples() {
        let pres = present_family3(Sign::Plus, &big(0), &big(0)).unwrap();
        assert_eq!(pres.full_cf, cf(&[2, -1, -2, 2, 2, 1]));
        assert_eq!(pres.partial_cf, cf(&[2, -3]));
        assert_eq!(pres.partial_cf.eval().to_string(), "5/3");
        assert_eq!(pres.result, knot(25, 18));

        let pres = present_family3(Sign::Minus, &big(0), &big(1)).unwrap();
        assert_eq!(pres.provenance.m, big(7));
        assert_eq!(pres.full_cf, cf(&[2, 1, 2, 2, -2, -1]));
        assert_eq!(pres.full_cf.eval().to_string(), "49/18");
        assert_eq!(pres.partial_cf, cf(&[2, 3]));
        assert_eq!(pres.result, knot(49, 18));

        assert!(matches!(
            present_family3(Sign::Minus, &big(0), &big(0)),
            Err(Error::EvenDeterminantRoot(m)) if m == "4"
        ));
        assert!(matches!(
            present_family3(Sign::Plus, &big(-1), &big(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn negative_parameters_reproduce_25_over_18() {
        // (s,t) = (−3,0) in the F2− closed form gives (m,d) = (−5,−3).
        let id = family_identity(FamilyTag::F2Minus, &big(-3), &big(0)).unwrap();
        assert_eq!(id.full_cf, cf(&[2, -2, 2, 2, -2, 2]));
        assert_eq!((id.m.clone(), id.d.clone()), (big(-5), big(-3)));
        assert_eq!(id.full_value.to_string(), "25/18");
        assert!(id.full_holds());
        assert_eq!(id.partial_cf, cf(&[-2, 2, 1]));
        assert_eq!(id.partial_value.to_string(), "-5/3");
        assert!(!id.partial_exact());
        assert!(id.partial_equivalent());
    }

    #[test]
    fn find_presentation_examples() {
        let pres = find_presentation(&knot(9, 2)).unwrap();
        assert_eq!(pres.provenance.tag, FamilyTag::F1);
        assert_eq!(
            (pres.provenance.m.clone(), pres.provenance.aux.clone()),
            (big(3), big(1))
        );
        assert_eq!(pres.provenance.sign, Sign::Minus);
        assert_eq!(pres.partial_knot, knot(3, 1));
        assert_eq!(pres.partial_cf, cf(&[3]));
        assert!(!pres.mirror_taken);

        let pres = find_presentation(&knot(25, 18)).unwrap();
        assert_eq!(pres.provenance.tag, FamilyTag::F2Plus);
        assert_eq!(pres.partial_knot, knot(5, 3));
        assert_eq!(pres.result, knot(25, 18));

        let pres = find_presentation(&knot(25, 16)).unwrap();
        assert_eq!(pres.provenance.tag, FamilyTag::F1);
        assert!(pres.partial_knot.equivalent(&knot(5, 3), true));
        assert!(pres.result.equivalent(&knot(25, 16), false));

        assert!(matches!(
            find_presentation(&knot(25, 2)),
            Err(Error::NotRibbon(_))
        ));
        assert!(matches!(
            find_presentation(&knot(9, 1)),
            Err(Error::NotRibbon(_))
        ));
    }

    #[test]
    fn find_presentation_through_mirror() {
        // K(9,4) is reached by F1 directly (4 = 3·1 + 1); its mirror K(9,5) too.
        let pres = find_presentation(&knot(9, 4)).unwrap();
        assert!(!pres.mirror_taken);
        // K(49,19) is the mirror of K(49,30) ≅ K(49,18); no family value lies in
        // {19, 19⁻¹}, so a mirror is needed.
        let target = knot(49, 30).mirror();
        let pres = find_presentation(&target).unwrap();
        assert!(pres.mirror_taken);
        assert!(pres.result.equivalent(&target, true));
        assert!(!pres.result.equivalent(&target, false));
    }
}
