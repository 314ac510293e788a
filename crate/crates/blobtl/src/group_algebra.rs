//! The rational group algebra of W(B_n) and type B Young symmetrizers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::coefficients::rational_json;
use crate::error::{invalid, Error, Result};
use crate::weyl_group::{all_elements, Bipartition, DottedPermutation, Gen};

/// Largest n accepted without an explicit override.
pub const DEFAULT_MAX_N: usize = 4;

#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<DottedPermutation, BigRational>,
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(DottedPermutation::identity(n))
    }

    pub fn basis(g: DottedPermutation) -> Self {
        let n = g.n();
        let mut t = BTreeMap::new();
        t.insert(g, BigRational::one());
        Self { n, terms: t }
    }

    pub fn generator(g: Gen, n: usize) -> Result<Self> {
        Ok(Self::basis(DottedPermutation::generator(g, n)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DottedPermutation, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &DottedPermutation) -> BigRational {
        self.terms.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, g: DottedPermutation, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return invalid("sizes differ");
        }
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.n);
        for (g, v) in &self.terms {
            out.add_term(g.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return invalid("sizes differ");
        }
        let mut acc: BTreeMap<DottedPermutation, BigRational> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &o.terms {
                *acc.entry(g.mul(h)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { n: self.n, terms: acc })
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(g, c)| json!({"element": g.to_json(), "coeff": rational_json(c)})).collect();
        json!({"n": self.n, "terms": terms})
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{c} {g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlgebraElement({} terms)", self.terms.len())
    }
}

/// A filling of the boxes of a bipartition by `+-1..+-n`, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numbering {
    pub lambda: Vec<Vec<i64>>,
    pub mu: Vec<Vec<i64>>,
}

impl Numbering {
    /// `1..n` in reading order, first through `lambda`, then `mu`.
    pub fn standard(bp: &Bipartition) -> Self {
        let mut next = 0;
        let mut fill = |p: &[usize]| -> Vec<Vec<i64>> {
            p.iter()
                .map(|&len| {
                    (0..len)
                        .map(|_| {
                            next += 1;
                            next
                        })
                        .collect()
                })
                .collect()
        };
        let lambda = fill(&bp.lambda);
        let mu = fill(&bp.mu);
        Self { lambda, mu }
    }

    pub fn explicit(bp: &Bipartition, lambda: Vec<Vec<i64>>, mu: Vec<Vec<i64>>) -> Result<Self> {
        let shape = |t: &[Vec<i64>]| t.iter().map(Vec::len).collect::<Vec<_>>();
        if shape(&lambda) != bp.lambda || shape(&mu) != bp.mu {
            return invalid("numbering does not have the shape of the bipartition");
        }
        let n = bp.size();
        let mut seen = vec![false; n + 1];
        for &x in lambda.iter().chain(&mu).flatten() {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return invalid(format!("entry {x} repeats or is out of range"));
            }
            seen[a] = true;
        }
        Ok(Self { lambda, mu })
    }

    fn n(&self) -> usize {
        self.lambda.iter().chain(&self.mu).map(Vec::len).sum()
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.lambda.iter().chain(&self.mu).map(|r| r.iter().map(|x| x.unsigned_abs() as usize).collect()).collect()
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for t in [&self.lambda, &self.mu] {
            let width = t.first().map_or(0, Vec::len);
            for c in 0..width {
                out.push(t.iter().filter(|r| r.len() > c).map(|r| r[c].unsigned_abs() as usize).collect());
            }
        }
        out
    }

    /// labels (one-based, unsigned) appearing in `mu`
    pub fn mu_labels(&self) -> Vec<usize> {
        self.mu.iter().flatten().map(|x| x.unsigned_abs() as usize).collect()
    }

    pub fn lambda_labels(&self) -> Vec<usize> {
        self.lambda.iter().flatten().map(|x| x.unsigned_abs() as usize).collect()
    }
}

/// Elements whose permutation maps every block to itself, dots arbitrary.
fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<DottedPermutation> {
    let mut block_of = vec![usize::MAX; n + 1];
    for (b, blk) in blocks.iter().enumerate() {
        for &x in blk {
            block_of[x] = b;
        }
    }
    all_elements(n)
        .into_iter()
        .filter(|g| g.sigma().iter().enumerate().all(|(i, &s)| block_of[i + 1] == block_of[s]))
        .collect()
}

fn mu_sign(g: &DottedPermutation, mu: &[usize]) -> i64 {
    let d = g.dots();
    if mu.iter().filter(|&&i| d[i - 1] == 1).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `q_T = r_T c_T / 2^n`; its identity coefficient is 1.
pub fn young_symmetrizer(bp: &Bipartition, numbering: &Numbering) -> Result<GroupAlgebraElement> {
    young_symmetrizer_capped(bp, numbering, DEFAULT_MAX_N)
}

pub fn young_symmetrizer_capped(bp: &Bipartition, numbering: &Numbering, max_n: usize) -> Result<GroupAlgebraElement> {
    let n = bp.size();
    if numbering.n() != n {
        return invalid("numbering size differs from the bipartition");
    }
    if n > max_n {
        return invalid(format!("n = {n} exceeds the cap {max_n}"));
    }
    let mu = numbering.mu_labels();
    let mut r = GroupAlgebraElement::zero(n);
    for g in block_group(n, &numbering.rows()) {
        let s = mu_sign(&g, &mu);
        r.add_term(g, rat(s, 1));
    }
    let mut c = GroupAlgebraElement::zero(n);
    for g in block_group(n, &numbering.columns()) {
        let s = mu_sign(&g, &mu) * g.sign();
        c.add_term(g, rat(s, 1));
    }
    Ok(r.mul(&c)?.scale(&rat(1, 1 << n)))
}

/// Young symmetrizer for the standard numbering.
pub fn standard_symmetrizer(bp: &Bipartition) -> Result<GroupAlgebraElement> {
    young_symmetrizer(bp, &Numbering::standard(bp))
}

/// The scalar `n` with `q^2 = n q`.
pub fn quasi_idempotent_scalar(q: &GroupAlgebraElement) -> Result<BigRational> {
    let q2 = q.mul(q)?;
    let Some((g, c)) = q.terms().next() else {
        return Err(Error::NotQuasiIdempotent("zero element".into()));
    };
    let s = q2.coeff(g) / c;
    if q2 != q.scale(&s) {
        return Err(Error::NotQuasiIdempotent("square is not a multiple".into()));
    }
    Ok(s)
}

/// `e = q / n`, an idempotent.
pub fn normalized_idempotent(bp: &Bipartition) -> Result<GroupAlgebraElement> {
    let q = standard_symmetrizer(bp)?;
    let s = quasi_idempotent_scalar(&q)?;
    Ok(q.scale(&(BigRational::one() / s)))
}

/// `dim span{ g q : g in W(B_n) }`, by exact elimination.
pub fn left_ideal_dimension(q: &GroupAlgebraElement) -> Result<usize> {
    let group = all_elements(q.n());
    let index: BTreeMap<&DottedPermutation, usize> = group.iter().enumerate().map(|(i, g)| (g, i)).collect();
    // reduced rows with their pivot columns
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for g in &group {
        let gq = GroupAlgebraElement::basis(g.clone()).mul(q)?;
        let mut v = vec![BigRational::zero(); group.len()];
        for (h, c) in gq.terms() {
            v[index[h]] = c.clone();
        }
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = BigRational::one() / &v[p];
            v.iter_mut().for_each(|x| *x *= &inv);
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            basis.push((p, v));
        }
    }
    Ok(basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(l: &[usize], m: &[usize]) -> Bipartition {
        Bipartition::new(l, m).unwrap()
    }

    #[test]
    fn one_strand_minus() {
        let e = normalized_idempotent(&bp(&[], &[1])).unwrap();
        let want = GroupAlgebraElement::one(1)
            .sub(&GroupAlgebraElement::generator(Gen::S0, 1).unwrap())
            .unwrap()
            .scale(&rat(1, 2));
        assert_eq!(e, want);
    }

    #[test]
    fn two_row_eight_terms() {
        let e = normalized_idempotent(&bp(&[2], &[])).unwrap();
        assert_eq!(e.len(), 8);
        assert!(e.terms().all(|(_, c)| *c == rat(1, 8)));
    }

    #[test]
    fn worked_example() {
        let b = bp(&[1, 1], &[1]);
        let q = standard_symmetrizer(&b).unwrap();
        assert_eq!(q.coeff(&DottedPermutation::identity(3)), rat(1, 1));
        assert_eq!(q.len(), 16);
        assert_eq!(quasi_idempotent_scalar(&q).unwrap(), rat(16, 1));
        assert_eq!(left_ideal_dimension(&q).unwrap(), 3);
    }

    #[test]
    fn identity_is_trivially_quasi_idempotent() {
        let one = GroupAlgebraElement::one(2);
        assert_eq!(quasi_idempotent_scalar(&one).unwrap(), rat(1, 1));
        assert_eq!(left_ideal_dimension(&one).unwrap(), 8);
    }
}
