//! Jones-Wenzl projectors of types A, B and D, and the higher projectors
//! `e_eps`, `f_eps` labelled by sign sequences.
//!
//! Everything is computed over `Q(q)` and memoized; use
//! [`TlElement::convert`] to move a result into another ring.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::coefficients::{q_sum, quantum_integer, ratio, LaurentPoly, RationalFunction};
use crate::diagrams::{enumerate_basis, Family};
use crate::error::{invalid, Error, Result};
use crate::modp;
use crate::tl_algebra::TlElement;

pub type RatElement = TlElement<RationalFunction>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn of(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// A nonempty sequence of signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Epsilon(Vec<i8>);

impl Epsilon {
    pub fn new(entries: &[i64]) -> Result<Self> {
        if entries.is_empty() {
            return invalid("sign sequence must be nonempty");
        }
        if entries.iter().any(|&e| e != 1 && e != -1) {
            return invalid(format!("entries must be 1 or -1, got {entries:?}"));
        }
        Ok(Self(entries.iter().map(|&e| e as i8).collect()))
    }

    /// All sequences of length n, in lexicographic order with +1 first.
    pub fn all(n: usize) -> Vec<Self> {
        (0..1u32 << n)
            .map(|mask| Self((0..n).map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 }).collect()))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().map(|&e| e as i64)
    }

    pub fn weight(&self) -> i64 {
        self.entries().sum()
    }

    pub fn negate(&self) -> Self {
        Self(self.0.iter().map(|e| -e).collect())
    }
}

impl std::str::FromStr for Epsilon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: std::result::Result<Vec<i64>, _> =
            s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(str::parse).collect();
        Self::new(&v.map_err(|_| Error::InvalidArgument(format!("bad sign sequence {s:?}")))?)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    A(usize),
    B(usize, Sign),
    D(usize),
    T(Epsilon),
    E(Epsilon),
}

fn cache() -> &'static Mutex<HashMap<Key, RatElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, RatElement>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memo(key: Key, build: impl FnOnce() -> Result<RatElement>) -> Result<RatElement> {
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    // built outside the lock: recursion re-enters the cache
    let v = build()?;
    cache().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn rf(p: LaurentPoly) -> RationalFunction {
    RationalFunction::from_laurent(p)
}

fn half() -> RationalFunction {
    ratio(&LaurentPoly::one(), &LaurentPoly::constant(2))
}

/// `x - c * x U_k x` with `x` padded by one strand.
fn extend(prev: &RatElement, k: usize, c: &RationalFunction) -> Result<RatElement> {
    let x = prev.pad_right(1);
    let u = RatElement::u(k, k + 1)?;
    let xux = &(&x * &u) * &x;
    Ok(&x - &xux.scale(c))
}

/// `(q^(k-1) + q^-(k-1)) / (q^k + q^-k)`
fn type_b_coefficient(k: usize) -> RationalFunction {
    ratio(&q_sum(k as i64 - 1), &q_sum(k as i64))
}

/// The type A projector on n strands (killing U_1..U_{n-1}).
pub fn jw_type_a(n: usize) -> Result<RatElement> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    memo(Key::A(n), || {
        if n == 1 {
            return Ok(RatElement::one(1));
        }
        let k = n - 1;
        let c = ratio(&quantum_integer(k as i64), &quantum_integer(n as i64));
        extend(&jw_type_a(k)?, k, &c)
    })
}

/// `b_{n,+}` or `b_{n,-}`; `n = 0` gives the empty identity.
pub fn jw_type_b(n: usize, sign: Sign) -> Result<RatElement> {
    memo(Key::B(n, sign), || match n {
        0 => Ok(RatElement::one(0)),
        1 => {
            let s = RatElement::s0(1)?.scale(&rf(LaurentPoly::constant(sign.value())));
            Ok((&RatElement::one(1) + &s).scale(&half()))
        }
        _ => extend(&jw_type_b(n - 1, sign)?, n - 1, &type_b_coefficient(n - 1)),
    })
}

/// `d_n`, the type D projector.
pub fn jw_type_d(n: usize) -> Result<RatElement> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    memo(Key::D(n), || match n {
        1 => Ok(RatElement::one(1)),
        2 => {
            let inv2 = ratio(&LaurentPoly::one(), &quantum_integer(2));
            let cups = &RatElement::u(1, 2)? + &RatElement::u0(2)?;
            Ok(&RatElement::one(2) - &cups.scale(&inv2))
        }
        _ => extend(&jw_type_d(n - 1)?, n - 1, &type_b_coefficient(n - 1)),
    })
}

/// `t_eps`, a map from `|weight|` points to `len` points.
pub fn t_epsilon(eps: &Epsilon) -> Result<RatElement> {
    memo(Key::T(eps.clone()), || {
        let entries: Vec<i64> = eps.entries().collect();
        let last = Sign::of(*entries.last().unwrap());
        if entries.len() == 1 {
            return jw_type_b(1, last);
        }
        let prefix = Epsilon::new(&entries[..entries.len() - 1])?;
        let t = t_epsilon(&prefix)?;
        let w = prefix.weight();
        let k = w.unsigned_abs() as usize;
        if w == 0 {
            return Ok(t.tensor(&jw_type_b(1, last)?));
        }
        let side = Sign::of(w);
        let lifted = t.pad_right(1);
        let below = if side == last {
            jw_type_b(k + 1, side)?
        } else {
            jw_type_b(k - 1, side)?.tensor(&RatElement::cup(2, 1, false)?)
        };
        lifted.checked_mul(&below)
    })
}

/// The quasi-idempotent `t_eps t_eps^flip` and its scalar.
pub fn quasi_idempotent(eps: &Epsilon) -> Result<(RatElement, RationalFunction)> {
    let t = t_epsilon(eps)?;
    let q = t.checked_mul(&t.flip())?;
    let q2 = q.checked_mul(&q)?;
    let (d, c) = q.terms().next().ok_or_else(|| Error::NotQuasiIdempotent("t_eps t_eps^flip vanished".into()))?;
    let scalar = q2.coeff(d).checked_div(c)?;
    if q2 != q.scale(&scalar) {
        return Err(Error::NotQuasiIdempotent(format!("square of q_{eps} is not a multiple of it")));
    }
    Ok((q, scalar))
}

/// `e_eps` (kind B) or `f_eps = e_eps + e_{-eps}` (kind D).
pub fn higher_projector(eps: &Epsilon, family: Family) -> Result<RatElement> {
    let e = memo(Key::E(eps.clone()), || {
        let (q, n) = quasi_idempotent(eps)?;
        Ok(q.scale(&n.inv()?))
    })?;
    match family {
        Family::B => Ok(e),
        Family::D => Ok(&e + &higher_projector(&eps.negate(), Family::B)?),
        Family::A => invalid("higher projectors are of kind B or D"),
    }
}

/// Which characterization to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    A,
    BPlus,
    BMinus,
    D,
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Kind::A),
            "b+" | "B+" => Ok(Kind::BPlus),
            "b-" | "B-" => Ok(Kind::BMinus),
            "d" | "D" => Ok(Kind::D),
            _ => invalid(format!("unknown projector kind {s:?}")),
        }
    }
}

/// The projector of a kind on n strands.
pub fn projector(kind: Kind, n: usize) -> Result<RatElement> {
    match kind {
        Kind::A => jw_type_a(n),
        Kind::BPlus => jw_type_b(n, Sign::Plus),
        Kind::BMinus => jw_type_b(n, Sign::Minus),
        Kind::D => jw_type_d(n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub idempotent: bool,
    pub nonzero: bool,
    /// `U x = 0 = x U` for every generator of the kind
    pub kills_generators: bool,
    /// `s0 x = +-x = x s0` (kinds B only)
    pub s0_eigen: Option<bool>,
    /// supported on even-dot diagrams (kind D only)
    pub in_type_d: Option<bool>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> bool {
        self.idempotent && self.nonzero && self.kills_generators && self.s0_eigen != Some(false) && self.in_type_d != Some(false)
    }
}

/// Check the defining properties of a projector of the given kind.
pub fn verify_characterization(x: &RatElement, kind: Kind) -> Result<CharacterizationReport> {
    if !x.is_endo() {
        return invalid("projectors are endomorphisms");
    }
    let n = x.n();
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(RatElement::u(i, n)?);
    }
    if kind == Kind::D && n >= 2 {
        gens.push(RatElement::u0(n)?);
    }
    let kills = gens.iter().all(|u| (u * x).is_zero() && (x * u).is_zero());
    let s0_eigen = match kind {
        Kind::BPlus | Kind::BMinus => {
            let s = RatElement::s0(n)?;
            let target = if kind == Kind::BPlus { x.clone() } else { -x };
            Some(&s * x == target && x * &s == target)
        }
        _ => None,
    };
    Ok(CharacterizationReport {
        idempotent: &(x * x) == x,
        nonzero: !x.is_zero(),
        kills_generators: kills,
        s0_eigen,
        in_type_d: (kind == Kind::D).then(|| x.is_even()),
    })
}

/// Dimension of `{x : U_i x = 0 = x U_i, i = 0..n-1}` inside TL(B_n) or TL(D_n),
/// bounded above by a computation at one value of `q` modulo a large prime.
pub fn killing_space_dimension(n: usize, family: Family) -> Result<usize> {
    let basis = enumerate_basis(n, family)?;
    let mut gens: Vec<TlElement<LaurentPoly>> = (1..n).map(|i| TlElement::u(i, n)).collect::<Result<_>>()?;
    if n >= 2 {
        gens.push(TlElement::u0(n)?);
    }
    // each condition is a linear functional: coefficient of one diagram in U x or x U
    let mut columns: Vec<HashMap<(usize, bool, crate::diagrams::Diagram), u64>> = Vec::new();
    for d in &basis {
        let x = TlElement::<LaurentPoly>::from_diagram(d.clone());
        let mut col = HashMap::new();
        for (g, u) in gens.iter().enumerate() {
            for (left, prod) in [(true, u * &x), (false, &x * u)] {
                for (e, c) in prod.terms() {
                    col.insert((g, left, e.clone()), modp::eval_laurent(c));
                }
            }
        }
        columns.push(col);
    }
    let mut keys: Vec<_> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<u64>> = keys.iter().map(|k| columns.iter().map(|c| c.get(k).copied().unwrap_or(0)).collect()).collect();
    Ok(basis.len() - modp::rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Diagram;

    fn qi(n: i64) -> LaurentPoly {
        quantum_integer(n)
    }

    #[test]
    fn a1_and_a2() {
        let a1 = jw_type_a(2).unwrap();
        assert_eq!(a1.coeff(&Diagram::u(1, 2).unwrap()), -ratio(&LaurentPoly::one(), &qi(2)));
        let a2 = jw_type_a(3).unwrap();
        assert_eq!(a2.len(), 5);
        let u1u2 = Diagram::compose(&Diagram::u(1, 3).unwrap(), &Diagram::u(2, 3).unwrap()).unwrap().result;
        assert_eq!(a2.coeff(&u1u2), ratio(&LaurentPoly::one(), &qi(3)));
        assert_eq!(a2.coeff(&Diagram::u(2, 3).unwrap()), -ratio(&qi(2), &qi(3)));
    }

    #[test]
    fn d2_is_sum_of_b2() {
        let d = jw_type_d(2).unwrap();
        assert_eq!(d.len(), 3);
        let sum = &jw_type_b(2, Sign::Plus).unwrap() + &jw_type_b(2, Sign::Minus).unwrap();
        assert_eq!(sum, d);
    }

    #[test]
    fn characterizations_small() {
        for n in 1..=3 {
            assert!(verify_characterization(&jw_type_a(n).unwrap(), Kind::A).unwrap().passed());
            assert!(verify_characterization(&jw_type_b(n, Sign::Plus).unwrap(), Kind::BPlus).unwrap().passed());
            assert!(verify_characterization(&jw_type_b(n, Sign::Minus).unwrap(), Kind::BMinus).unwrap().passed());
            assert!(verify_characterization(&jw_type_d(n).unwrap(), Kind::D).unwrap().passed());
        }
        let one = RatElement::one(2);
        assert!(!verify_characterization(&one, Kind::D).unwrap().kills_generators);
        let d = jw_type_d(2).unwrap();
        assert_eq!(verify_characterization(&d, Kind::BPlus).unwrap().s0_eigen, Some(false));
    }

    #[test]
    fn e_one_minus_one() {
        let e = higher_projector(&Epsilon::new(&[1, -1]).unwrap(), Family::B).unwrap();
        let c = ratio(&LaurentPoly::one(), &(&qi(2) * &LaurentPoly::constant(2)));
        let u = RatElement::u(1, 2).unwrap();
        let s = RatElement::s0(2).unwrap();
        let want = &(&(&u + &(&u * &s)) + &(&s * &u)) + &(&(&s * &u) * &s);
        assert_eq!(e, want.scale(&c));
        let e11 = higher_projector(&Epsilon::new(&[1, 1]).unwrap(), Family::B).unwrap();
        assert_eq!(e11, jw_type_b(2, Sign::Plus).unwrap());
    }

    #[test]
    fn killing_space_sizes() {
        assert_eq!(killing_space_dimension(2, Family::D).unwrap(), 1);
        assert_eq!(killing_space_dimension(2, Family::B).unwrap(), 2);
    }
}
