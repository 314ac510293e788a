//! Text syntax for elements: sums of products of generators and scalars.
//!
//! ```text
//! 1 - q^-1 U1 + [2] s0 U1 s0
//! (1 + U1)^2 * {(b0-t0)* (b1-t1)}
//! ```
//!
//! Factors are integers, `q^k`, quantum integers `[k]`, `U<i>` (with `U0`
//! the dotted cup-cap), `s0`, a diagram literal in braces, or a bracketed
//! subexpression; any factor may carry `^k`.

use crate::coefficients::{quantum_integer, LaurentPoly};
use crate::diagrams::Diagram;
use crate::error::{Error, Result};

use super::TlElement;

type L = TlElement<LaurentPoly>;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let r = self.rest();
        let sign = usize::from(r.starts_with('-'));
        let len = sign + r[sign..].chars().take_while(char::is_ascii_digit).count();
        if len == sign {
            return self.err("expected an integer");
        }
        let v = r[..len].parse().or_else(|_| self.err("integer out of range"))?;
        self.pos += len;
        Ok(v)
    }

    fn expr(&mut self) -> Result<L> {
        let mut acc = L::zero(self.n);
        let mut negate = self.eat('-');
        if !negate {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = if negate { acc.checked_sub(&t)? } else { acc.checked_add(&t)? };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<L> {
        let mut acc = self.factor()?;
        loop {
            let explicit = self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_digit() || "q[Us{(".contains(c) => {
                    let f = self.factor()?;
                    acc = acc.checked_mul(&f)?;
                }
                _ if explicit => return self.err("expected a factor after '*'"),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<L> {
        let n = self.n;
        let c = self.peek().ok_or_else(|| Error::Parse { pos: self.pos, msg: "unexpected end".into() })?;
        let start = self.pos;
        if c == 'q' {
            self.pos += 1;
            let k = if self.eat('^') { self.int()? } else { 1 };
            return Ok(L::scalar(LaurentPoly::monomial(1, k), n));
        }
        let base = match c {
            '0'..='9' => L::scalar(LaurentPoly::constant(self.int()?), n),
            '[' => {
                self.pos += 1;
                let k = self.int()?;
                if !self.eat(']') {
                    return self.err("expected ']'");
                }
                L::scalar(quantum_integer(k), n)
            }
            'U' => {
                self.pos += 1;
                let i = self.int()?;
                let r = match usize::try_from(i) {
                    Ok(0) => L::u0(n),
                    Ok(i) => L::u(i, n),
                    Err(_) => return self.err("negative generator index"),
                };
                r.map_err(|e| Error::Parse { pos: start, msg: e.to_string() })?
            }
            's' => {
                if !self.rest().starts_with("s0") {
                    return self.err("expected s0");
                }
                self.pos += 2;
                L::s0(n).map_err(|e| Error::Parse { pos: start, msg: e.to_string() })?
            }
            '{' => {
                self.pos += 1;
                let Some(close) = self.rest().find('}') else {
                    return self.err("unclosed '{'");
                };
                let text = &self.rest()[..close];
                let d = Diagram::parse(text, n).map_err(|e| Error::Parse { pos: self.pos, msg: e.to_string() })?;
                self.pos += close + 1;
                L::from_diagram(d)
            }
            '(' => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                e
            }
            _ => return self.err(format!("unexpected {c:?}")),
        };
        if self.eat('^') {
            let k = self.int()?;
            let Ok(k) = u32::try_from(k) else {
                return self.err("negative power of an element");
            };
            return base.pow(k);
        }
        Ok(base)
    }
}

/// Parse an element on `n` strands with Laurent polynomial coefficients.
pub fn parse_element(text: &str, n: usize) -> Result<L> {
    let mut p = Parser { src: text, pos: 0, n };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_products() {
        let u = L::u(1, 2).unwrap();
        let got = parse_element("1 - q^-1 U1", 2).unwrap();
        let want = L::one(2).checked_sub(&u.scale(&LaurentPoly::monomial(1, -1))).unwrap();
        assert_eq!(got, want);
        assert_eq!(parse_element("U1 U1", 2).unwrap(), u.scale(&quantum_integer(2)));
        assert_eq!(parse_element("U1^2", 2).unwrap(), parse_element("[2]*U1", 2).unwrap());
        assert!(parse_element("U1 s0 U1", 2).unwrap().is_zero());
        assert_eq!(parse_element("{(b0-b1) (t0-t1)}", 2).unwrap(), u);
        assert_eq!(parse_element("-(1 + U1) + 1", 2).unwrap(), -&u);
    }

    #[test]
    fn reports_positions() {
        match parse_element("1 + U7", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_element("U1 +", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("U1)", 2), Err(Error::Parse { .. })));
    }
}
