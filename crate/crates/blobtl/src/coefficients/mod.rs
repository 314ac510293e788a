//! Exact coefficient rings: integer Laurent polynomials, the field of
//! rational functions in `q`, and truncated Laurent series in `q`.

mod laurent;
mod poly;
mod ratfunc;
mod series;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub use laurent::{delta, q_sum, quantum_integer, LaurentPoly};
pub use ratfunc::{ratio, RationalFunction};
pub use series::{expand_to_series, Series, Valuation};

pub(crate) use laurent::{mul_mod, pow_mod};

/// Which coefficient ring an element lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Laurent,
    RatFunc,
    Series,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Laurent => "laurent",
            Ring::RatFunc => "ratfunc",
            Ring::Series => "series",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A commutative coefficient ring containing `Z[q, q^-1]`.
///
/// The accumulator lets the algebra layer sum many products `a*b*delta^k`
/// without normalizing after every step.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const RING: Ring;
    type Acc: Default;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_laurent(p: &LaurentPoly) -> Self;
    /// None if the ring cannot hold this rational number.
    fn from_rational(r: &BigRational) -> Option<Self>;
    fn to_json(&self) -> Value;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// `acc += a * b * p` where `p` is a Laurent polynomial (a power of delta).
    fn acc_add(acc: &mut Self::Acc, a: &Self, b: &Self, p: &LaurentPoly);
    fn acc_finish(acc: Self::Acc) -> Self;
}

impl Coefficient for LaurentPoly {
    const RING: Ring = Ring::Laurent;
    type Acc = LaurentPoly;

    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        p.clone()
    }
    fn from_rational(r: &BigRational) -> Option<Self> {
        r.is_integer().then(|| LaurentPoly::constant(r.numer().clone()))
    }
    fn to_json(&self) -> Value {
        json!({"kind": "laurent", "terms": laurent_terms_json(self)})
    }
    fn acc_add(acc: &mut Self::Acc, a: &Self, b: &Self, p: &LaurentPoly) {
        let t = &(a * b) * p;
        *acc = &*acc + &t;
    }
    fn acc_finish(acc: Self::Acc) -> Self {
        acc
    }
}

impl Coefficient for RationalFunction {
    const RING: Ring = Ring::RatFunc;
    /// numerators summed per denominator
    type Acc = HashMap<LaurentPoly, LaurentPoly>;

    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        RationalFunction::from_laurent(p.clone())
    }
    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(RationalFunction::from_rational(r))
    }
    fn to_json(&self) -> Value {
        json!({
            "kind": "ratfunc",
            "num": self.numerator().to_json(),
            "den": self.denominator().to_json(),
        })
    }
    fn acc_add(acc: &mut Self::Acc, a: &Self, b: &Self, p: &LaurentPoly) {
        let num = &(a.numerator() * b.numerator()) * p;
        let den = if b.denominator().is_one() {
            a.denominator().clone()
        } else if a.denominator().is_one() {
            b.denominator().clone()
        } else {
            a.denominator() * b.denominator()
        };
        let slot = acc.entry(den).or_default();
        *slot = &*slot + &num;
    }
    fn acc_finish(acc: Self::Acc) -> Self {
        let mut parts: Vec<(LaurentPoly, LaurentPoly)> = acc.into_iter().filter(|(_, n)| !n.is_zero()).collect();
        // fixed order keeps the arithmetic deterministic
        parts.sort_by_key(|(d, _)| (d.dense().len(), d.to_string()));
        let mut total = RationalFunction::zero();
        for (den, num) in parts {
            total = &total + &RationalFunction::normalized(num, den).unwrap();
        }
        total
    }
}

impl Coefficient for Series {
    const RING: Ring = Ring::Series;
    type Acc = Option<Series>;

    fn zero() -> Self {
        Series::zero()
    }
    fn one() -> Self {
        Series::one()
    }
    /// Exact zero only; a sentinel zero still carries information.
    fn is_zero(&self) -> bool {
        Series::is_zero(self) && self.is_exact()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        Series::from_laurent(p)
    }
    fn from_rational(r: &BigRational) -> Option<Self> {
        Some(Series::from_rational(r))
    }
    fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.dense_coeffs().iter().map(rational_json).collect();
        json!({
            "kind": "series",
            "lowest": self.lowest(),
            "coeffs": coeffs,
            "precision": self.precision(),
        })
    }
    fn acc_add(acc: &mut Self::Acc, a: &Self, b: &Self, p: &LaurentPoly) {
        let mut t = a * b;
        if !p.is_one() {
            t = &t * &Series::from_laurent(p);
        }
        *acc = Some(match acc.take() {
            None => t,
            Some(s) => &s + &t,
        });
    }
    fn acc_finish(acc: Self::Acc) -> Self {
        acc.unwrap_or_else(Series::zero)
    }
}

impl LaurentPoly {
    pub fn to_json(&self) -> Value {
        json!({"kind": "laurent", "terms": laurent_terms_json(self)})
    }
}

fn laurent_terms_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, bigint_json(c)])).collect())
}

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
pub fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    if r.is_integer() {
        bigint_json(r.numer())
    } else {
        json!(r.to_string())
    }
}

/// Parse the JSON produced by `Coefficient::to_json` for Laurent polynomials.
pub fn laurent_from_json(v: &Value) -> Option<LaurentPoly> {
    let terms = v.get("terms")?.as_array()?;
    let mut out = Vec::new();
    for t in terms {
        let t = t.as_array()?;
        let e = t.first()?.as_i64()?;
        let c = match t.get(1)? {
            Value::Number(n) => BigInt::from(n.as_i64()?),
            Value::String(s) => s.parse().ok()?,
            _ => return None,
        };
        out.push((e, c));
    }
    Some(LaurentPoly::from_terms(out))
}

pub fn ratfunc_from_json(v: &Value) -> Option<RationalFunction> {
    match v.get("kind")?.as_str()? {
        "laurent" => Some(RationalFunction::from_laurent(laurent_from_json(v)?)),
        "ratfunc" => RationalFunction::new(laurent_from_json(v.get("num")?)?, laurent_from_json(v.get("den")?)?).ok(),
        _ => None,
    }
}

/// Convert a rational function into a ring that may not contain it.
pub trait FromRatFunc: Coefficient {
    fn from_ratfunc(r: &RationalFunction, precision: Option<i64>) -> crate::Result<Self>;
}

impl FromRatFunc for RationalFunction {
    fn from_ratfunc(r: &RationalFunction, _: Option<i64>) -> crate::Result<Self> {
        Ok(r.clone())
    }
}

impl FromRatFunc for LaurentPoly {
    fn from_ratfunc(r: &RationalFunction, _: Option<i64>) -> crate::Result<Self> {
        r.as_laurent()
            .cloned()
            .ok_or_else(|| crate::Error::UnsupportedRing(format!("{r} is not a Laurent polynomial")))
    }
}

impl FromRatFunc for Series {
    fn from_ratfunc(r: &RationalFunction, precision: Option<i64>) -> crate::Result<Self> {
        match (r.as_laurent(), precision) {
            (Some(p), None) => Ok(Series::from_laurent(p)),
            (Some(p), Some(prec)) => Ok(Series::from_laurent(p).truncate(prec)),
            (None, Some(prec)) => expand_to_series(r, prec),
            (None, None) => Err(crate::Error::UnsupportedRing("series conversion needs a precision".into())),
        }
    }
}
