//! Linear combinations of dotted diagrams and the algebra product.
//!
//! A closed undotted loop is worth `delta = q + q^-1`, a closed dotted loop
//! kills the term. Elements may be morphisms between different point counts
//! (cups and caps); the usual algebra elements have `bottom == top`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::coefficients::{delta, Coefficient, FromRatFunc, LaurentPoly, RationalFunction};
use crate::diagrams::Diagram;
use crate::error::{invalid, Result};

mod expr;
pub use expr::parse_element;

#[derive(Clone, PartialEq)]
pub struct TlElement<C> {
    bottom: usize,
    top: usize,
    terms: BTreeMap<Diagram, C>,
}

impl<C: Coefficient> TlElement<C> {
    pub fn zero(n: usize) -> Self {
        Self::zero_hom(n, n)
    }

    pub fn zero_hom(bottom: usize, top: usize) -> Self {
        Self { bottom, top, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_diagram(Diagram::identity(n))
    }

    pub fn scalar(c: C, n: usize) -> Self {
        Self::monomial(c, Diagram::identity(n))
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::monomial(C::one(), d)
    }

    pub fn monomial(c: C, d: Diagram) -> Self {
        let mut out = Self::zero_hom(d.bottom(), d.top());
        if !c.is_zero() {
            out.terms.insert(d, c);
        }
        out
    }

    /// Build from `(diagram, coefficient)` pairs; repeated diagrams are summed.
    pub fn from_terms(bottom: usize, top: usize, terms: impl IntoIterator<Item = (Diagram, C)>) -> Result<Self> {
        let mut out = Self::zero_hom(bottom, top);
        for (d, c) in terms {
            if d.bottom() != bottom || d.top() != top {
                return invalid(format!("diagram {d} does not fit {bottom} -> {top}"));
            }
            out.add_term(d, c);
        }
        Ok(out)
    }

    pub fn u(i: usize, n: usize) -> Result<Self> {
        Ok(Self::from_diagram(Diagram::u(i, n)?))
    }

    pub fn u0(n: usize) -> Result<Self> {
        Ok(Self::from_diagram(Diagram::u0(n)?))
    }

    pub fn s0(n: usize) -> Result<Self> {
        Ok(Self::from_diagram(Diagram::s0(n)?))
    }

    pub fn cap(n: usize, i: usize, dotted: bool) -> Result<Self> {
        Ok(Self::from_diagram(Diagram::cap(n, i, dotted)?))
    }

    pub fn cup(n: usize, i: usize, dotted: bool) -> Result<Self> {
        Ok(Self::from_diagram(Diagram::cup(n, i, dotted)?))
    }

    /// Strand count of an endomorphism.
    pub fn n(&self) -> usize {
        debug_assert!(self.is_endo());
        self.bottom
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_endo(&self) -> bool {
        self.bottom == self.top
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, d: Diagram, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if (self.bottom, self.top) != (o.bottom, o.top) {
            return invalid(format!(
                "shape mismatch: {}->{} versus {}->{}",
                self.bottom, self.top, o.bottom, o.top
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let mut out = self.clone();
        for (d, c) in &o.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero_hom(self.bottom, self.top);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v.mul(c));
        }
        out
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        self.scale(&C::from_laurent(p))
    }

    /// `self` stacked on top of `o`: `o` acts first.
    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.bottom != o.top {
            return invalid(format!(
                "cannot multiply: {} strands on top of {} strands",
                self.bottom, o.top
            ));
        }
        let mut acc: HashMap<Diagram, C::Acc> = HashMap::new();
        let mut dpow: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                let out = Diagram::compose_raw(d1, d2)?;
                if out.dotted_loop_seen {
                    continue;
                }
                while dpow.len() <= out.undotted_loops {
                    let next = dpow.last().unwrap() * &delta();
                    dpow.push(next);
                }
                C::acc_add(acc.entry(out.result).or_default(), c1, c2, &dpow[out.undotted_loops]);
            }
        }
        let mut terms = BTreeMap::new();
        for (d, a) in acc {
            let c = C::acc_finish(a);
            if !c.is_zero() {
                terms.insert(d, c);
            }
        }
        Ok(Self { bottom: o.bottom, top: self.top, terms })
    }

    /// Product of factors left to right.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut acc = Self::one(n);
        for f in factors {
            acc = acc.checked_mul(f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, m: u32) -> Result<Self> {
        if !self.is_endo() {
            return invalid("power of a non-square element");
        }
        let mut acc = Self::one(self.bottom);
        for _ in 0..m {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, o: &Self) -> Self {
        let mut out = Self::zero_hom(self.bottom + o.bottom, self.top + o.top);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                out.add_term(d1.tensor(d2), c1.mul(c2));
            }
        }
        out
    }

    /// Append `k` identity strands on the right.
    pub fn pad_right(&self, k: usize) -> Self {
        self.tensor(&Self::one(k))
    }

    /// Upside-down mirror image; an anti-automorphism.
    pub fn flip(&self) -> Self {
        let terms = self.terms.iter().map(|(d, c)| (d.flip(), c.clone())).collect();
        Self { bottom: self.top, top: self.bottom, terms }
    }

    /// The involution sending `s0` to `-s0`.
    pub fn phi(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.clone(), if d.dot_count() % 2 == 1 { c.neg() } else { c.clone() }))
            .collect();
        Self { bottom: self.bottom, top: self.top, terms }
    }

    /// Supported on diagrams with an even number of dots, i.e. lies in TL(D_n).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|d| d.dot_count() % 2 == 0)
    }

    /// `a = x*1 + y*s0 + r` with `r` in the ideal generated by the `U_i`.
    pub fn split_identity_ideal(&self) -> (C, C, Self) {
        let (mut x, mut y) = (C::zero(), C::zero());
        let mut rest = Self::zero_hom(self.bottom, self.top);
        for (d, c) in &self.terms {
            if d.is_identity_shaped() {
                if d.is_undotted() {
                    x = c.clone();
                } else {
                    y = c.clone();
                }
            } else {
                rest.terms.insert(d.clone(), c.clone());
            }
        }
        (x, y, rest)
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<TlElement<D>> {
        let mut out = TlElement::zero_hom(self.bottom, self.top);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(d, c)| json!({"diagram": d.to_json(), "coeff": c.to_json()})).collect();
        if self.is_endo() {
            json!({"n": self.bottom, "ring": C::RING.name(), "terms": terms})
        } else {
            json!({"bottom": self.bottom, "top": self.top, "ring": C::RING.name(), "terms": terms})
        }
    }
}

impl TlElement<RationalFunction> {
    /// Move into another ring, expanding as series where needed.
    pub fn convert<C: FromRatFunc>(&self, precision: Option<i64>) -> Result<TlElement<C>> {
        self.map_coeffs(|c| C::from_ratfunc(c, precision))
    }
}

impl TlElement<LaurentPoly> {
    pub fn to_ratfunc(&self) -> TlElement<RationalFunction> {
        self.map_coeffs(|c| Ok(RationalFunction::from_laurent(c.clone()))).unwrap()
    }
}

impl<'a, C: Coefficient> Add for &'a TlElement<C> {
    type Output = TlElement<C>;
    fn add(self, o: Self) -> TlElement<C> {
        self.checked_add(o).expect("shape mismatch in addition")
    }
}

impl<'a, C: Coefficient> Sub for &'a TlElement<C> {
    type Output = TlElement<C>;
    fn sub(self, o: Self) -> TlElement<C> {
        self.checked_sub(o).expect("shape mismatch in subtraction")
    }
}

impl<'a, C: Coefficient> Neg for &'a TlElement<C> {
    type Output = TlElement<C>;
    fn neg(self) -> TlElement<C> {
        let terms = self.terms.iter().map(|(d, c)| (d.clone(), c.neg())).collect();
        TlElement { bottom: self.bottom, top: self.top, terms }
    }
}

impl<'a, C: Coefficient> Mul for &'a TlElement<C> {
    type Output = TlElement<C>;
    fn mul(self, o: Self) -> TlElement<C> {
        self.checked_mul(o).expect("shape mismatch in product")
    }
}

impl<C: Coefficient> fmt::Display for TlElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[{c}] {d}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for TlElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TlElement[{}->{}] {{", self.bottom, self.top)?;
        for (d, c) in &self.terms {
            write!(f, " ({c}) {d};")?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::quantum_integer;

    type L = TlElement<LaurentPoly>;

    fn q(k: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, k)
    }

    #[test]
    fn crossing_inverse() {
        let u = L::u(1, 2).unwrap();
        let a = &L::one(2) - &u.scale(&q(1));
        let b = &L::one(2) - &u.scale(&q(-1));
        assert_eq!(&a * &b, L::one(2));
    }

    #[test]
    fn basic_relations() {
        let (u1, u2) = (L::u(1, 3).unwrap(), L::u(2, 3).unwrap());
        assert_eq!(&(&u1 * &u2) * &u1, u1);
        assert_eq!(&u1 * &u1, u1.scale(&quantum_integer(2)));
        let u0 = L::u0(2).unwrap();
        let u = L::u(1, 2).unwrap();
        assert!((&u * &u0).is_zero());
        let s = L::s0(2).unwrap();
        assert_eq!(&(&s * &u) * &s, u0);
        assert!((&(&u * &s) * &u).is_zero());
    }

    #[test]
    fn phi_flips_sign_of_s0() {
        let s = L::s0(3).unwrap();
        assert_eq!(s.phi(), -&s);
        assert!(L::u0(3).unwrap().is_even());
    }

    #[test]
    fn split_parts() {
        let s = L::s0(2).unwrap();
        let u = L::u(1, 2).unwrap();
        let x = &(&L::one(2) + &s.scale(&q(2))) + &u;
        let (a, b, r) = x.split_identity_ideal();
        assert_eq!((a, b), (LaurentPoly::one(), q(2)));
        assert_eq!(r, u);
    }

    #[test]
    fn size_mismatch_errors() {
        assert!(L::one(2).checked_mul(&L::one(3)).is_err());
        assert!(L::one(2).checked_add(&L::one(3)).is_err());
    }
}
