//! Powers of full twists as truncated series and their q-adic distance to
//! the Jones-Wenzl projectors.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::braids::{evaluate_word, full_twist_word, BraidFamily};
use crate::coefficients::{rational_json, LaurentPoly, Series, Valuation};
use crate::error::{invalid, Result};
use crate::jones_wenzl::{jw_type_a, jw_type_d};
use crate::tl_algebra::TlElement;

pub type SeriesElement = TlElement<Series>;

fn check_family(family: BraidFamily) -> Result<()> {
    if family == BraidFamily::B1 {
        return invalid("convergence is studied for families A and D");
    }
    Ok(())
}

fn truncate(x: &SeriesElement, p: i64) -> Result<SeriesElement> {
    x.map_coeffs(|c| Ok(c.truncate(p)))
}

/// The evaluated full twist as a series element.
pub fn twist(family: BraidFamily, n: usize, precision: i64) -> Result<SeriesElement> {
    check_family(family)?;
    if precision <= 0 {
        return invalid("precision must be positive");
    }
    let t: TlElement<LaurentPoly> = evaluate_word(&full_twist_word(family, n)?)?;
    t.map_coeffs(|c| Ok(Series::from_laurent(c).truncate(precision)))
}

/// `[twist]^m` with every coefficient known below `precision`.
pub fn twist_power(family: BraidFamily, n: usize, m: u32, precision: i64) -> Result<SeriesElement> {
    Ok(twist_powers(family, n, m, precision)?.pop().unwrap())
}

/// `[twist]^0 ..= [twist]^m`.
pub fn twist_powers(family: BraidFamily, n: usize, m: u32, precision: i64) -> Result<Vec<SeriesElement>> {
    let t = twist(family, n, precision)?;
    let mut out = vec![truncate(&SeriesElement::one(n), precision)?];
    for _ in 0..m {
        let next = out.last().unwrap().checked_mul(&t)?;
        out.push(truncate(&next, precision)?);
    }
    Ok(out)
}

/// The limit projector: `a_{n-1}` for type A, `d_n` for type D.
pub fn target_projector(family: BraidFamily, n: usize, precision: i64) -> Result<SeriesElement> {
    check_family(family)?;
    let p = if family == BraidFamily::A { jw_type_a(n)? } else { jw_type_d(n)? };
    p.convert(Some(precision))
}

/// Minimum coefficient valuation of `a - b`, with the uncertified sentinel.
pub fn qadic_distance(a: &SeriesElement, b: &SeriesElement) -> Result<(Valuation, BigRational)> {
    let diff = a.checked_sub(b)?;
    let mut finite: Option<i64> = None;
    let mut bound: Option<i64> = None;
    for (_, c) in diff.terms() {
        match c.valuation() {
            Valuation::Finite(v) => finite = Some(finite.map_or(v, |f| f.min(v))),
            Valuation::AtLeast(v) => bound = Some(bound.map_or(v, |f| f.min(v))),
            Valuation::Infinite => {}
        }
    }
    let v = match (finite, bound) {
        (Some(f), Some(b)) if b < f => Valuation::AtLeast(b),
        (Some(f), _) => Valuation::Finite(f),
        (None, Some(b)) => Valuation::AtLeast(b),
        (None, None) => Valuation::Infinite,
    };
    Ok((v, v.norm()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvergenceStatus {
    Achieved,
    NotReached,
    /// the precision cannot certify the target
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct ConvergenceEntry {
    pub m: u32,
    pub valuation: Valuation,
    pub norm: BigRational,
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub n: usize,
    pub target_valuation: i64,
    pub precision: i64,
    pub entries: Vec<ConvergenceEntry>,
    pub achieved_at: Option<u32>,
    pub status: ConvergenceStatus,
}

impl ConvergenceReport {
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let v = match e.valuation {
                    Valuation::Finite(v) => json!(v),
                    Valuation::AtLeast(v) => json!(format!(">={v}")),
                    Valuation::Infinite => json!("inf"),
                };
                json!({"m": e.m, "valuation": v, "norm": rational_json(&e.norm)})
            })
            .collect();
        let status = match self.status {
            ConvergenceStatus::Achieved => "achieved",
            ConvergenceStatus::NotReached => "not-reached",
            ConvergenceStatus::Inconclusive => "inconclusive",
        };
        json!({
            "n": self.n,
            "target": self.target_valuation,
            "precision": self.precision,
            "entries": entries,
            "achieved_at": self.achieved_at,
            "status": status,
        })
    }
}

/// Distances of `[delta_n]^m` to `d_n` for `m = 1..`, stopping at the target.
pub fn converge(n: usize, target_valuation: i64, max_power: u32, precision: i64) -> Result<ConvergenceReport> {
    if n < 2 {
        return invalid("convergence needs n >= 2");
    }
    let t = twist(BraidFamily::D, n, precision)?;
    let d = target_projector(BraidFamily::D, n, precision)?;
    let mut power = truncate(&SeriesElement::one(n), precision)?;
    let mut entries = Vec::new();
    let mut status = ConvergenceStatus::NotReached;
    let mut achieved_at = None;
    for m in 1..=max_power {
        power = truncate(&power.checked_mul(&t)?, precision)?;
        let (valuation, norm) = qadic_distance(&power, &d)?;
        entries.push(ConvergenceEntry { m, valuation, norm });
        match valuation {
            Valuation::Finite(v) if v >= target_valuation => {}
            Valuation::Infinite => {}
            Valuation::AtLeast(v) if v >= target_valuation => {}
            Valuation::AtLeast(_) => {
                status = ConvergenceStatus::Inconclusive;
                break;
            }
            Valuation::Finite(_) => continue,
        }
        status = ConvergenceStatus::Achieved;
        achieved_at = Some(m);
        break;
    }
    if status == ConvergenceStatus::NotReached && precision <= target_valuation {
        status = ConvergenceStatus::Inconclusive;
    }
    Ok(ConvergenceReport { n, target_valuation, precision, entries, achieved_at, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Diagram;

    #[test]
    fn delta_two_squared() {
        let p = twist_power(BraidFamily::D, 2, 2, 10).unwrap();
        let u = Diagram::u(1, 2).unwrap();
        let want = LaurentPoly::from_terms([(1, -1), (3, 1), (5, -1), (7, 1)]);
        assert_eq!(p.coeff(&u).to_laurent().unwrap(), want);
        assert_eq!(p.coeff(&Diagram::identity(2)).to_laurent().unwrap(), LaurentPoly::one());
    }

    #[test]
    fn distances() {
        let x = twist(BraidFamily::D, 2, 20).unwrap();
        assert_eq!(qadic_distance(&x, &x).unwrap().0, Valuation::AtLeast(20));
        let e = SeriesElement::one(2);
        assert_eq!(qadic_distance(&e, &e).unwrap().0, Valuation::Infinite);
        let d = target_projector(BraidFamily::D, 2, 20).unwrap();
        assert_eq!(qadic_distance(&x, &d).unwrap().0, Valuation::Finite(5));
    }

    #[test]
    fn converge_two() {
        let r = converge(2, 9, 4, 32).unwrap();
        assert_eq!(r.achieved_at, Some(2));
        let r = converge(2, 5, 4, 32).unwrap();
        assert_eq!(r.achieved_at, Some(1));
        let r = converge(2, 40, 4, 16).unwrap();
        assert_eq!(r.status, ConvergenceStatus::Inconclusive);
    }
}
