use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;
use crate::error::{invalid, Result};

/// q-adic valuation of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    /// Every known coefficient vanishes; the true valuation is at least this.
    AtLeast(i64),
    /// The exact zero series.
    Infinite,
}

impl Valuation {
    /// Lower bound usable in comparisons; `None` means +infinity.
    pub fn lower_bound(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) | Valuation::AtLeast(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// True when the valuation is certainly at least `k`.
    pub fn certainly_at_least(self, k: i64) -> bool {
        self.lower_bound().map_or(true, |v| v >= k)
    }

    /// `|s|_q = 2^-v` as an exact rational (0 for the zero series).
    pub fn norm(self) -> BigRational {
        match self {
            Valuation::Infinite => BigRational::zero(),
            Valuation::Finite(v) | Valuation::AtLeast(v) => {
                let two = BigInt::from(2);
                let p = two.pow(v.unsigned_abs() as u32);
                if v >= 0 {
                    BigRational::new(BigInt::one(), p)
                } else {
                    BigRational::from_integer(p)
                }
            }
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, ">={v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Truncated Laurent series `(1/den) * sum c_k q^(low+k)` with rational
/// coefficients held over a common positive denominator.
///
/// With `precision = Some(P)` the coefficients of `q^e` are known for
/// `e < P` and nothing is claimed beyond; `None` means the series is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    low: i64,
    nums: Vec<BigInt>,
    den: BigInt,
    precision: Option<i64>,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Series {
    pub fn zero() -> Self {
        Self { low: 0, nums: Vec::new(), den: BigInt::one(), precision: None }
    }

    pub fn one() -> Self {
        Self::from_laurent(&LaurentPoly::one())
    }

    /// Zero known only below `precision`: the "valuation >= P" state.
    pub fn unknown_from(precision: i64) -> Self {
        Self { low: 0, nums: Vec::new(), den: BigInt::one(), precision: Some(precision) }
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let low = p.valuation().unwrap_or(0);
        Self::build(low, p.dense().to_vec(), BigInt::one(), None)
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::build(0, vec![r.numer().clone()], r.denom().clone(), None)
    }

    fn build(low: i64, nums: Vec<BigInt>, den: BigInt, precision: Option<i64>) -> Self {
        let mut s = Self { low, nums, den, precision };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if let Some(p) = self.precision {
            let keep = (p - self.low).clamp(0, self.nums.len() as i64) as usize;
            self.nums.truncate(keep);
        }
        while self.nums.last().is_some_and(|c| c.is_zero()) {
            self.nums.pop();
        }
        let lead = self.nums.iter().take_while(|c| c.is_zero()).count();
        self.nums.drain(..lead);
        self.low += lead as i64;
        if self.nums.is_empty() {
            self.low = 0;
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            self.nums.iter_mut().for_each(|c| *c = -&*c);
        }
        if !self.den.is_one() {
            let mut g = self.den.clone();
            for c in &self.nums {
                g = g.gcd(c);
                if g.is_one() {
                    return;
                }
            }
            self.den = &self.den / &g;
            self.nums.iter_mut().for_each(|c| *c = &*c / &g);
        }
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// True if no known coefficient is nonzero (exact zero or sentinel).
    pub fn is_zero(&self) -> bool {
        self.nums.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        match (self.nums.is_empty(), self.precision) {
            (false, _) => Valuation::Finite(self.low),
            (true, None) => Valuation::Infinite,
            (true, Some(p)) => Valuation::AtLeast(p),
        }
    }

    /// `(valuation, norm)`; the sentinel case is reported as `AtLeast`.
    pub fn valuation_and_norm(&self) -> (Valuation, BigRational) {
        let v = self.valuation();
        (v, v.norm())
    }

    /// Coefficient of `q^e`, or None if `e` lies beyond the precision.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if self.precision.is_some_and(|p| e >= p) {
            return None;
        }
        let k = e - self.low;
        let n = if k < 0 || k as usize >= self.nums.len() { BigInt::zero() } else { self.nums[k as usize].clone() };
        Some(BigRational::new(n, self.den.clone()))
    }

    /// Known nonzero terms in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigRational)> {
        self.nums
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.low + k as i64, BigRational::new(c.clone(), self.den.clone())))
            .collect()
    }

    /// Coefficients from `lowest()` up to the last known nonzero one.
    pub fn dense_coeffs(&self) -> Vec<BigRational> {
        self.nums.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn lowest(&self) -> i64 {
        self.low
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Forget every coefficient at or beyond `p`.
    pub fn truncate(&self, p: i64) -> Self {
        Self::build(self.low, self.nums.clone(), self.den.clone(), min_prec(self.precision, Some(p)))
    }

    /// The known part as a Laurent polynomial, if all coefficients are integers.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_integral().then(|| LaurentPoly::from_dense(self.low, self.nums.clone()))
    }

    fn lower_valuation(&self) -> Option<i64> {
        self.valuation().lower_bound()
    }
}

/// Expansion of `r` at `q = 0`, keeping the exponents below `precision`.
pub fn expand_to_series(r: &RationalFunction, precision: i64) -> Result<Series> {
    let num = r.numerator();
    let den = r.denominator();
    if den.is_zero() {
        return invalid("zero denominator");
    }
    if num.is_zero() {
        return Ok(Series::zero());
    }
    let d = den.dense();
    let d0 = d[0].clone();
    let shift = num.low() - den.low();
    let n = num.dense();
    // exponents e = shift + k with e < precision
    let len = if precision > shift { (precision - shift) as usize } else { 0 };
    // x = n / d over Z[1/d0]: scale the k-th coefficient by d0^(k+1)
    let mut x: Vec<BigInt> = Vec::with_capacity(len);
    let mut d0_pow = vec![BigInt::one()];
    for k in 0..len {
        let mut acc = if k < n.len() { &n[k] * &d0_pow[k] } else { BigInt::zero() };
        for j in 1..d.len().min(k + 1) {
            // x[k-j] carries d0^(k-j+1); lift it to d0^k
            acc -= &d[j] * &x[k - j] * &d0_pow[j - 1];
        }
        x.push(acc);
        d0_pow.push(&d0_pow[k] * &d0);
    }
    // x[k] / d0^(k+1) is the true coefficient; bring to a common denominator
    let big = d0_pow[len].clone();
    let nums: Vec<BigInt> = x.iter().enumerate().map(|(k, c)| c * &d0_pow[len - k - 1]).collect();
    Ok(Series::build(shift, nums, big, Some(precision)))
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        let prec = min_prec(self.precision, o.precision);
        if self.nums.is_empty() {
            return o.truncate_opt(prec);
        }
        if o.nums.is_empty() {
            return self.truncate_opt(prec);
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.nums.len() as i64).max(o.low + o.nums.len() as i64);
        let high = prec.map_or(high, |p| high.min(p));
        if high <= low {
            return Series::unknown_from(prec.unwrap());
        }
        let mut c = vec![BigInt::zero(); (high - low) as usize];
        let (fa, fb) = if self.den == o.den { (BigInt::one(), BigInt::one()) } else { (o.den.clone(), self.den.clone()) };
        for (k, v) in self.nums.iter().enumerate() {
            let e = self.low + k as i64;
            if e < high {
                c[(e - low) as usize] += v * &fa;
            }
        }
        for (k, v) in o.nums.iter().enumerate() {
            let e = o.low + k as i64;
            if e < high {
                c[(e - low) as usize] += v * &fb;
            }
        }
        let den = if self.den == o.den { self.den.clone() } else { &self.den * &o.den };
        Series::build(low, c, den, prec)
    }
}

impl Series {
    fn truncate_opt(&self, p: Option<i64>) -> Series {
        match p {
            Some(p) => self.truncate(p),
            None => self.clone(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { low: self.low, nums: self.nums.iter().map(|c| -c).collect(), den: self.den.clone(), precision: self.precision }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        self + &(-o)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        let exact_zero = |s: &Series| s.nums.is_empty() && s.precision.is_none();
        if exact_zero(self) || exact_zero(o) {
            return Series::zero();
        }
        let (v1, v2) = (self.lower_valuation().unwrap(), o.lower_valuation().unwrap());
        let prec = min_prec(self.precision.map(|p| p + v2), o.precision.map(|p| p + v1));
        if self.nums.is_empty() || o.nums.is_empty() {
            return Series::unknown_from(prec.unwrap());
        }
        let low = self.low + o.low;
        let full = self.nums.len() + o.nums.len() - 1;
        let len = prec.map_or(full, |p| full.min((p - low).max(0) as usize));
        let mut c = vec![BigInt::zero(); len];
        for (i, a) in self.nums.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.nums.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Series::build(low, c, &self.den * &o.den, prec)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            match self.precision {
                None => write!(f, "0")?,
                Some(p) => write!(f, "O(q^{p})")?,
            }
            return Ok(());
        }
        let mut first = true;
        for (e, c) in terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                _ if unit => write!(f, "q^{e}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        if let Some(p) = self.precision {
            write!(f, " + O(q^{p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::laurent::{q_sum, quantum_integer as qi};
    use crate::coefficients::ratfunc::ratio;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn inverse_of_two() {
        let s = expand_to_series(&ratio(&LaurentPoly::one(), &qi(2)), 9).unwrap();
        assert_eq!(s.to_laurent().unwrap(), lp(&[(1, 1), (3, -1), (5, 1), (7, -1)]));
        assert_eq!(s.coeff(9), None);
    }

    #[test]
    fn ratio_k_equals_one() {
        let s = expand_to_series(&ratio(&q_sum(1), &q_sum(2)), 9).unwrap();
        assert_eq!(s.to_laurent().unwrap(), lp(&[(1, 1), (3, 1), (5, -1), (7, -1)]));
    }

    #[test]
    fn rational_fallback() {
        // 1/(2 - q) = 1/2 + q/4 + q^2/8 + ...
        let r = RationalFunction::new(LaurentPoly::one(), lp(&[(0, 2), (1, -1)])).unwrap();
        let s = expand_to_series(&r, 3).unwrap();
        assert_eq!(s.coeff(2).unwrap(), BigRational::new(1.into(), 8.into()));
        assert!(!s.is_integral());
    }

    #[test]
    fn valuations() {
        let a = Series::from_laurent(&lp(&[(1, 1), (3, -1)]));
        assert_eq!(a.valuation(), Valuation::Finite(1));
        assert_eq!(a.valuation().norm(), BigRational::new(1.into(), 2.into()));
        assert_eq!(Series::zero().valuation(), Valuation::Infinite);
        let b = Series::from_laurent(&lp(&[(-2, 1), (0, 5)]));
        assert_eq!(b.valuation_and_norm(), (Valuation::Finite(-2), BigRational::from_integer(4.into())));
        let c = &expand_to_series(&ratio(&LaurentPoly::one(), &qi(2)), 3).unwrap() - &Series::from_laurent(&lp(&[(1, 1)]));
        assert_eq!(c.valuation(), Valuation::AtLeast(3));
    }

    #[test]
    fn product_precision_is_pessimistic() {
        let a = expand_to_series(&ratio(&LaurentPoly::one(), &qi(2)), 10).unwrap();
        let b = Series::from_laurent(&lp(&[(2, 1)])).truncate(6);
        assert_eq!((&a * &b).precision(), Some(7));
    }
}
