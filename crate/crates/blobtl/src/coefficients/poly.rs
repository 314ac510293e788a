//! Dense integer polynomials, ascending coefficients. Only what the
//! rational-function normal form needs: content, exact division, gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn div_scalar(p: &mut [BigInt], c: &BigInt) {
    if c.is_one() {
        return;
    }
    for x in p.iter_mut() {
        *x = &*x / c;
    }
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&p);
    if !c.is_zero() {
        div_scalar(&mut p, &c);
    }
    p
}

/// Remainder of `a` by `b` after enough scaling by lc(b) to stay in Z[x].
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = degree(b);
    let lb = b[db].clone();
    while !a.is_empty() && a.len() > db {
        let da = degree(&a);
        let la = a[da].clone();
        let shift = da - db;
        for x in a.iter_mut() {
            *x *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            a[i + shift] -= &la * c;
        }
        trim(&mut a);
        // keep coefficient growth down
        let c = content(&a);
        if !c.is_zero() && !c.is_one() {
            div_scalar(&mut a, &c);
        }
    }
    a
}

/// Gcd in Z[x] with positive leading coefficient. Both inputs nonzero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    let c = content(&a).gcd(&content(&b));
    a = primitive(a);
    b = primitive(b);
    while !b.is_empty() {
        if b.len() == 1 {
            a = vec![BigInt::one()];
            break;
        }
        let r = pseudo_rem(a, &b);
        a = b;
        b = primitive(r);
    }
    let mut g = primitive(a);
    if g.last().is_some_and(|x| x.is_negative()) {
        for x in g.iter_mut() {
            *x = -&*x;
        }
    }
    for x in g.iter_mut() {
        *x *= &c;
    }
    g
}

/// Exact quotient a / b in Z[x]; None if b does not divide a.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = degree(b);
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (quo, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &quo * c;
        }
        q[k] = quo;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x+1)(x-2) and (x+1)(2x+3)
        let a = p(&[-2, -1, 1]);
        let b = p(&[3, 5, 2]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(gcd(&p(&[4, 4]), &p(&[6, 6])), p(&[2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-2, -1, 1]);
        assert_eq!(div_exact(&a, &p(&[1, 1])), Some(p(&[-2, 1])));
        assert_eq!(div_exact(&a, &p(&[1, 2])), None);
    }
}
