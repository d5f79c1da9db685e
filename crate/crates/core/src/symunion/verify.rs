use std::fmt;

use crate::cfcore::{matrix_matches, ContinuedFraction, ExtendedRational};
use crate::scalar::{add, mul, Scalar};
use crate::sign::Sign;
use crate::twobridge::{from_cf, normalize, Knot, RibbonWitness, TwoBridge};

use super::families::family_identity;
use super::{FamilyTag, SymmetricUnionPresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn record(&mut self, name: &'static str, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        self.checks.push(CheckOutcome {
            name,
            passed,
            detail,
        });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "[{mark}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn expect_knot<T: Scalar>(
    knot: Result<Knot<T>, crate::Error>,
    want: &TwoBridge<T>,
) -> Result<String, String> {
    match knot {
        Ok(Knot::TwoBridge(k)) if &k == want => Ok(k.to_string()),
        Ok(other) => Err(format!("got {other}, expected {want}")),
        Err(e) => Err(format!("{e}, expected {want}")),
    }
}

/// Fold route: evaluate right to left and normalise.
fn fold_check<T: Scalar>(cf: &ContinuedFraction<T>, want: &TwoBridge<T>) -> Result<String, String> {
    expect_knot(from_cf(cf), want).map(|k| format!("{cf} = {} ⇒ {k}", cf.eval()))
}

/// Matrix route: multiply letters left to right, read the first column,
/// normalise; determinant must be (−1)^len and the column must agree with the
/// fold up to sign.
fn matrix_check<T: Scalar>(
    cf: &ContinuedFraction<T>,
    want: &TwoBridge<T>,
) -> Result<String, String> {
    let mat = cf.to_matrix();
    let (a, c) = mat.first_column();
    if mat.det() != Sign::parity(cf.len()).to_scalar() {
        return Err(format!("det = {}, expected (−1)^{}", mat.det(), cf.len()));
    }
    if !matrix_matches(&mat, &cf.eval(), cf.len()) {
        return Err(format!(
            "column ({a},{c}) disagrees with fold value {}",
            cf.eval()
        ));
    }
    expect_knot(normalize(a.clone(), c.clone()), want).map(|k| format!("column ±({a},{c}) ⇒ {k}"))
}

fn shape_check<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> Result<String, String> {
    let prov = &pres.provenance;
    if pres.insertion.count_infinity != 1 {
        return Err(format!("μ = {}, expected 1", pres.insertion.count_infinity));
    }
    match prov.tag {
        FamilyTag::F1 => {
            let epsilon = pres.insertion.epsilon.ok_or("family 1 needs ε")?;
            let want_eps = prov.sign * Sign::parity(pres.partial_cf.len());
            if epsilon != want_eps {
                return Err(format!("ε = {epsilon}, expected sign·(−1)^n = {want_eps}"));
            }
            let expansion = ExtendedRational::new(prov.m.clone(), prov.aux.clone())
                .and_then(|r| ContinuedFraction::expand(&r))
                .map_err(|e| e.to_string())?;
            if pres.partial_cf != expansion {
                return Err(format!(
                    "partial {} is not the expansion {expansion}",
                    pres.partial_cf
                ));
            }
            let sym = pres
                .partial_cf
                .symmetric(epsilon)
                .map_err(|e| e.to_string())?;
            if pres.full_cf != sym {
                return Err(format!("full {} ≠ symmetric {sym}", pres.full_cf));
            }
            Ok(format!("full = [partial, {epsilon}, −reverse(partial)]"))
        }
        tag => {
            let (Some(s), Some(t)) = (&prov.s, &prov.t) else {
                return Err("families 2/3 need s and t".into());
            };
            if tag.sign() != Some(prov.sign) {
                return Err(format!("sign {} disagrees with tag {tag}", prov.sign));
            }
            let id = family_identity(tag, s, t).map_err(|e| e.to_string())?;
            if pres.full_cf != id.full_cf || pres.partial_cf != id.partial_cf {
                return Err(format!(
                    "expected full {} and partial {} for {tag} at (s,t) = ({s},{t})",
                    id.full_cf, id.partial_cf
                ));
            }
            if prov.m != id.m || prov.aux != id.d {
                return Err(format!(
                    "(m,d) = ({},{}) but (s,t) give ({},{})",
                    prov.m, prov.aux, id.m, id.d
                ));
            }
            Ok(format!("{tag} closed form at (s,t) = ({s},{t})"))
        }
    }
}

fn parameter_check<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> Result<String, String> {
    let prov = &pres.provenance;
    let (m, aux, sign) = (&prov.m, &prov.aux, prov.sign);
    let q = match prov.tag {
        FamilyTag::F1 => add(&mul(m, aux), &sign.to_scalar()),
        _ => mul(aux, &add(m, &sign.to_scalar())),
    };
    let witness = RibbonWitness {
        family: prov.tag.family(),
        m: m.clone(),
        aux: aux.clone(),
        sign,
        representative_q: q.clone(),
    };
    if !witness.regenerates() {
        return Err(format!("{witness} violates its family conditions"));
    }
    let want = TwoBridge::new(mul(m, m), q).map_err(|e| e.to_string())?;
    if pres.result != want {
        return Err(format!("result {} but parameters give {want}", pres.result));
    }
    Ok(witness.to_string())
}

fn partial_family_check<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> Result<String, String> {
    let prov = &pres.provenance;
    let want = match normalize(prov.m.clone(), prov.aux.clone()) {
        Ok(Knot::TwoBridge(k)) => k,
        Ok(Knot::Unknot) => return Err("K(m,k/d) is the unknot".into()),
        Err(e) => return Err(e.to_string()),
    };
    if pres.partial_knot.equivalent(&want, true) {
        Ok(format!("{} ≅ {want} (up to mirror)", pres.partial_knot))
    } else {
        Err(format!("{} is not equivalent to {want}", pres.partial_knot))
    }
}

fn determinant_check<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> Result<String, String> {
    let p = pres.partial_knot.p();
    if pres.result.p() == &mul(p, p) {
        Ok(format!("{} = {p}²", pres.result.p()))
    } else {
        Err(format!("{} ≠ {p}²", pres.result.p()))
    }
}

/// Re-check a presentation from its stored fields only.
///
/// Both continued fractions go through the fold and the matrix routes
/// independently. The family shape, the family parameters, the partial knot's
/// relation to `K(m, k)` or `K(m, d)`, and the determinant square law are
/// checked separately, so a tampered field shows up under a named check.
pub fn verify_presentation<T: Scalar>(pres: &SymmetricUnionPresentation<T>) -> VerificationReport {
    let mut report = VerificationReport::default();
    report.record("full_fold", fold_check(&pres.full_cf, &pres.result));
    report.record("full_matrix", matrix_check(&pres.full_cf, &pres.result));
    report.record(
        "partial_fold",
        fold_check(&pres.partial_cf, &pres.partial_knot),
    );
    report.record(
        "partial_matrix",
        matrix_check(&pres.partial_cf, &pres.partial_knot),
    );
    report.record("shape", shape_check(pres));
    report.record("parameters", parameter_check(pres));
    report.record("partial_family", partial_family_check(pres));
    report.record("determinant_square", determinant_check(pres));
    report
}
