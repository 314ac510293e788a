//! Linear algebra over F_p with `q` specialized to a fixed residue.
//!
//! Used to certify ranks: a rank mod p at one value of `q` is a lower bound
//! for the generic rank, and a kernel dimension is an upper bound.

use crate::coefficients::{mul_mod, pow_mod, LaurentPoly, RationalFunction};

pub(crate) const P: u64 = (1 << 61) - 1;
/// arbitrary point avoiding the zeros of small quantum integers
pub(crate) const Q_AT: u64 = 1_234_567_891;

pub(crate) fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub(crate) fn sub(a: u64, b: u64) -> u64 {
    add(a, P - b)
}

pub(crate) fn mul(a: u64, b: u64) -> u64 {
    mul_mod(a, b, P)
}

pub(crate) fn inv(a: u64) -> u64 {
    pow_mod(a, P - 2, P)
}

pub(crate) fn eval_laurent(p: &LaurentPoly) -> u64 {
    p.eval_mod(Q_AT, P)
}

pub(crate) fn eval_ratfunc(r: &RationalFunction) -> u64 {
    r.eval_mod(Q_AT, P).expect("denominator vanishes at the chosen point")
}

/// Row-reduce in place; returns the rank.
pub(crate) fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let iv = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = mul(*x, iv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = sub(*x, mul(f, *y));
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![1, 2], vec![0, 4]]), 2);
        assert_eq!(mul(inv(7), 7), 1);
    }
}
