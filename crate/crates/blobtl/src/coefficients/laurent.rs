use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly;

/// Integer Laurent polynomial in `q`, stored densely from the lowest
/// nonzero exponent. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeffs[k]` is the coefficient of `q^(low + k)`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn normalize(&mut self) {
        poly::trim(&mut self.coeffs);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub(crate) fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub(crate) fn low(&self) -> i64 {
        self.low
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                Self::from_dense(-d, c)
            }
        }
    }

    /// Exact quotient, if `d` divides `self` in Z[q, q^-1].
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = poly::div_exact(&self.coeffs, &d.coeffs)?;
        Some(Self::from_dense(self.low - d.low, q))
    }

    /// Drop every term of exponent `>= bound`.
    pub fn truncate(&self, bound: i64) -> Self {
        if self.is_zero() || bound <= self.low {
            return Self::zero();
        }
        let keep = ((bound - self.low) as usize).min(self.coeffs.len());
        Self::from_dense(self.low, self.coeffs[..keep].to_vec())
    }

    /// Evaluate at `q = x` modulo the prime `p`; `x` must be a unit.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let xm = x % p;
        let inv = pow_mod(xm, p - 2, p);
        let base = if self.low >= 0 { pow_mod(xm, self.low as u64, p) } else { pow_mod(inv, (-self.low) as u64, p) };
        let mut acc = 0u64;
        let mut pw = base;
        for c in &self.coeffs {
            acc = (acc + mul_mod(residue(c, p), pw, p)) % p;
            pw = mul_mod(pw, xm, p);
        }
        acc
    }

    pub fn to_i64_coeffs(&self) -> Option<Vec<(i64, i64)>> {
        self.terms().map(|(e, c)| c.to_i64().map(|c| (e, c))).collect()
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn residue(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((c % &m) + &m) % &m;
    r.to_u64().unwrap()
}

/// Balanced quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`.
pub fn quantum_integer(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.abs();
    let sign: i64 = if n < 0 { -1 } else { 1 };
    LaurentPoly::from_terms((0..m).map(|k| (m - 1 - 2 * k, sign)))
}

/// `q + q^-1`, the loop value.
pub fn delta() -> LaurentPoly {
    quantum_integer(2)
}

/// `q^k + q^-k`.
pub fn q_sum(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::constant(2);
    }
    LaurentPoly::from_terms([(k, 1), (-k, 1)])
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.degree().unwrap().max(o.degree().unwrap());
        let mut c = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, x) in self.coeffs.iter().enumerate() {
            c[(self.low - low) as usize + k] += x;
        }
        for (k, x) in o.coeffs.iter().enumerate() {
            c[(o.low - low) as usize + k] += x;
        }
        LaurentPoly::from_dense(low, c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + o.low, c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

pub(crate) fn fmt_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, std::borrow::Cow<'a, str>, bool)>,
) -> fmt::Result {
    // terms arrive in decreasing exponent order: (exp, |coeff| text, negative)
    let mut first = true;
    for (e, mag, neg) in terms {
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag == "1";
        match e {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "q")?,
            1 => write!(f, "{mag}*q")?,
            _ if unit => write!(f, "q^{e}")?,
            _ => write!(f, "{mag}*q^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        fmt_terms(
            f,
            terms.into_iter().rev().map(|(e, c)| (e, std::borrow::Cow::Owned(c.abs().to_string()), c.is_negative())),
        )
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer(2), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(quantum_integer(4), LaurentPoly::from_terms([(3, 1), (1, 1), (-1, 1), (-3, 1)]));
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(-3), -quantum_integer(3));
    }

    #[test]
    fn quantum_integer_is_the_quotient() {
        let denom = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        for n in -6..=6 {
            let num = LaurentPoly::from_terms([(n, 1), (-n, -1)]);
            assert_eq!(num.div_exact(&denom).unwrap(), quantum_integer(n));
        }
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(3, 1), (1, -2), (-1, 1)]);
        assert_eq!(p.to_string(), "q^3 - 2*q + q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(0, -1)]).to_string(), "-1");
    }

    #[test]
    fn bar_and_truncate() {
        let p = LaurentPoly::from_terms([(3, 1), (-1, 2)]);
        assert_eq!(p.bar(), LaurentPoly::from_terms([(-3, 1), (1, 2)]));
        assert_eq!(p.truncate(3), LaurentPoly::from_terms([(-1, 2)]));
    }

    #[test]
    fn eval_mod_matches_integer_value() {
        // q^2 - 3 + 2q^-1 at q = 2 is 4 - 3 + 1 = 2
        let p = LaurentPoly::from_terms([(2, 1), (0, -3), (-1, 2)]);
        assert_eq!(p.eval_mod(2, 1_000_003), 2);
    }
}
