use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::laurent::{mul_mod, pow_mod, LaurentPoly};
use super::poly;
use crate::error::{invalid, Result};

/// Element of Q(q) in normal form.
///
/// The denominator is an honest polynomial with nonzero constant term and
/// positive leading coefficient, numerator and denominator are coprime in
/// Q[q], and their integer coefficients have no common factor. Two values
/// are equal iff their representations are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::normalized(LaurentPoly::constant(r.numer().clone()), LaurentPoly::constant(r.denom().clone()))
            .expect("nonzero denominator")
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        Self::normalized(num, den)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// Build the normal form of `num / den`.
    pub fn normalized(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return invalid("zero denominator");
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low() - den.low();
        let mut n = num.dense().to_vec();
        let mut d = den.dense().to_vec();
        if d.len() > 1 {
            let g = poly::gcd(&n, &d);
            if g.len() > 1 {
                n = poly::div_exact(&n, &g).expect("gcd divides");
                d = poly::div_exact(&d, &g).expect("gcd divides");
            }
        }
        let c = poly::content(&n).gcd(&poly::content(&d));
        poly::div_scalar(&mut n, &c);
        poly::div_scalar(&mut d, &c);
        if d.last().unwrap().is_negative() {
            n.iter_mut().for_each(|x| *x = -&*x);
            d.iter_mut().for_each(|x| *x = -&*x);
        }
        Ok(Self { num: LaurentPoly::from_dense(shift, n), den: LaurentPoly::from_dense(0, d) })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return invalid("division by zero");
        }
        Self::normalized(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return invalid("division by zero");
        }
        Self::normalized(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if self.is_laurent() {
            return Self::from_laurent(&self.num * p);
        }
        Self::normalized(&self.num * p, self.den.clone()).unwrap()
    }

    pub fn pow(&self, e: u32) -> Self {
        // normal form is preserved under powers
        Self { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Evaluate at `q = x` modulo `p`; None if the denominator vanishes there.
    pub fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(x, p);
        if d == 0 {
            return None;
        }
        Some(mul_mod(self.num.eval_mod(x, p), pow_mod(d, p - 2, p), p))
    }

    /// Value at q = 1 if the denominator does not vanish there.
    pub fn at_one(&self) -> Option<BigRational> {
        let n: BigInt = self.num.dense().iter().sum();
        let d: BigInt = self.den.dense().iter().sum();
        (!d.is_zero()).then(|| BigRational::new(n, d))
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let c = |p: &LaurentPoly| (p.low() == 0 && p.dense().len() == 1).then(|| p.dense()[0].clone());
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        Some(BigRational::new(c(&self.num)?, c(&self.den)?))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RationalFunction::from_laurent(&self.num + &o.num);
            }
            return RationalFunction::normalized(&self.num + &o.num, self.den.clone()).unwrap();
        }
        RationalFunction::normalized(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &o.num);
        }
        RationalFunction::normalized(&self.num * &o.num, &self.den * &o.den).unwrap()
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self.checked_div(o).expect("division by zero")
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.terms().count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// `a / b` for Laurent polynomials, normalized.
pub fn ratio(a: &LaurentPoly, b: &LaurentPoly) -> RationalFunction {
    RationalFunction::normalized(a.clone(), b.clone()).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::laurent::quantum_integer as qi;

    #[test]
    fn cancels_common_factor() {
        let a = LaurentPoly::from_terms([(2, 1), (-2, -1)]);
        let b = LaurentPoly::from_terms([(4, 1), (-4, -1)]);
        assert_eq!(ratio(&a, &b), ratio(&qi(2), &qi(4)));
    }

    #[test]
    fn remark_identity() {
        let lhs = ratio(&(&qi(2) * &qi(2)), &qi(4));
        let rhs = ratio(&qi(2), &(&qi(3) - &qi(1)));
        assert_eq!(lhs, rhs);
        let sum = ratio(&LaurentPoly::from_terms([(1, 1), (-1, 1)]), &LaurentPoly::from_terms([(2, 1), (-2, 1)]));
        assert_eq!(sum, lhs);
    }

    #[test]
    fn self_ratio_is_one() {
        let x = ratio(&qi(3), &qi(5));
        assert_eq!(&x / &x, RationalFunction::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn denominator_sign_and_content() {
        let r = RationalFunction::new(LaurentPoly::constant(2), LaurentPoly::constant(-4)).unwrap();
        assert_eq!(r.numerator(), &LaurentPoly::constant(-1));
        assert_eq!(r.denominator(), &LaurentPoly::constant(2));
    }
}
