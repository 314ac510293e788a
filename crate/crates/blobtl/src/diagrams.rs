//! Dotted planar diagrams.
//!
//! A diagram with `bottom` lower and `top` upper endpoints is a perfect
//! matching of the points `b0..b{bottom-1}` (indices `0..bottom`) and
//! `t0..t{top-1}` (indices `bottom..bottom+top`), with a dot parity on each
//! arc. Endomorphism diagrams (`bottom == top == n`) form the basis of
//! TL(B_n); unequal counts give the hom-spaces used for cups and caps.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};

/// An arc between endpoints `a < b`, possibly carrying a dot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub a: u8,
    pub b: u8,
    pub dot: bool,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    bottom: u8,
    top: u8,
    /// sorted by first endpoint
    arcs: Vec<Arc>,
}

/// Diagram families: undotted (A), all valid dottings (B), even dot count (D).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            _ => invalid(format!("unknown family {s:?}")),
        }
    }
}

/// Why a candidate diagram is not a valid dotted diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invalidity {
    /// arcs `i` and `j` cross
    Crossing(Arc, Arc),
    /// the dotted arc cannot be reached from the left wall
    HiddenDot(Arc),
}

impl fmt::Display for Invalidity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invalidity::Crossing(x, y) => write!(f, "arcs {x:?} and {y:?} cross"),
            Invalidity::HiddenDot(x) => write!(f, "dot on {x:?} is not reachable from the left"),
        }
    }
}

/// Result of stacking two diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionOutcome {
    pub undotted_loops: usize,
    pub dotted_loop_seen: bool,
    pub result: Diagram,
}

impl Diagram {
    /// Checked constructor from `(p, q, dotted)` triples.
    pub fn new(bottom: usize, top: usize, arcs: &[(usize, usize, bool)]) -> Result<Self> {
        let d = Self::raw(bottom, top, arcs)?;
        if let Err(why) = d.check() {
            return invalid(format!("not a valid diagram: {why}"));
        }
        Ok(d)
    }

    /// Only checks that the arcs form a perfect matching; planarity and dot
    /// exposure are not enforced. Needed for intermediate composites.
    pub fn raw(bottom: usize, top: usize, arcs: &[(usize, usize, bool)]) -> Result<Self> {
        let total = bottom + top;
        if total > 254 {
            return invalid("too many endpoints");
        }
        let mut seen = vec![false; total];
        let mut out = Vec::with_capacity(arcs.len());
        for &(p, q, dot) in arcs {
            if p >= total || q >= total || p == q || seen[p] || seen[q] {
                return invalid(format!("arcs do not form an involution at ({p}, {q})"));
            }
            seen[p] = true;
            seen[q] = true;
            out.push(Arc { a: p.min(q) as u8, b: p.max(q) as u8, dot });
        }
        if seen.iter().any(|s| !s) {
            return invalid("some endpoint is unmatched");
        }
        Ok(Self::from_arcs(bottom, top, out))
    }

    fn from_arcs(bottom: usize, top: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        Self { bottom: bottom as u8, top: top as u8, arcs }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_arcs(n, n, (0..n).map(|i| Arc { a: i as u8, b: (n + i) as u8, dot: false }).collect())
    }

    /// `U_i`, cup-cap at strands `i, i+1` (1-based i).
    pub fn u(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return invalid(format!("U{i} needs 1 <= i <= n-1 (n = {n})"));
        }
        Ok(Self::u_shape(i, n, false))
    }

    /// `U_0 = s0 U_1 s0`: dotted cup and dotted cap on the first two strands.
    pub fn u0(n: usize) -> Result<Self> {
        if n < 2 {
            return invalid("U0 needs n >= 2");
        }
        Ok(Self::u_shape(1, n, true))
    }

    fn u_shape(i: usize, n: usize, dot: bool) -> Self {
        let mut arcs = Vec::with_capacity(n);
        for k in 0..n {
            if k == i - 1 {
                arcs.push(Arc { a: k as u8, b: (k + 1) as u8, dot });
                arcs.push(Arc { a: (n + k) as u8, b: (n + k + 1) as u8, dot });
            } else if k != i {
                arcs.push(Arc { a: k as u8, b: (n + k) as u8, dot: false });
            }
        }
        Self::from_arcs(n, n, arcs)
    }

    /// `s0`: identity with a dot on the first strand.
    pub fn s0(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("s0 needs n >= 1");
        }
        let mut d = Self::identity(n);
        d.arcs[0].dot = true;
        Ok(d)
    }

    /// Identity with dots on the given 1-based strands (may be invalid).
    pub fn dotted_identity(n: usize, strands: &[usize]) -> Result<Self> {
        let arcs: Vec<_> = (0..n).map(|k| (k, n + k, strands.contains(&(k + 1)))).collect();
        Self::raw(n, n, &arcs)
    }

    /// Cap joining bottom strands `i, i+1` (1-based): a map from n to n-2 points.
    pub fn cap(n: usize, i: usize, dotted: bool) -> Result<Self> {
        if n < 2 || i == 0 || i >= n {
            return invalid(format!("cap{i} needs 1 <= i <= n-1 (n = {n})"));
        }
        let m = n - 2;
        let mut arcs = Vec::with_capacity(n - 1);
        let mut t = 0;
        for k in 0..n {
            if k == i - 1 {
                arcs.push((k, k + 1, dotted));
            } else if k != i {
                arcs.push((k, n + t, false));
                t += 1;
            }
        }
        if dotted {
            Self::raw(n, m, &arcs)
        } else {
            Self::new(n, m, &arcs)
        }
    }

    /// Cup creating top strands `i, i+1`: a map from n-2 to n points.
    pub fn cup(n: usize, i: usize, dotted: bool) -> Result<Self> {
        Ok(Self::cap(n, i, dotted)?.flip())
    }

    pub fn bottom(&self) -> usize {
        self.bottom as usize
    }

    pub fn top(&self) -> usize {
        self.top as usize
    }

    pub fn is_endo(&self) -> bool {
        self.bottom == self.top
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn dot_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.dot).count()
    }

    pub fn is_undotted(&self) -> bool {
        self.dot_count() == 0
    }

    /// Endpoint label, `b3` or `t0`.
    pub fn point_name(&self, p: usize) -> String {
        if p < self.bottom() {
            format!("b{p}")
        } else {
            format!("t{}", p - self.bottom())
        }
    }

    /// Every arc goes straight up: identity or s0 shape.
    pub fn is_identity_shaped(&self) -> bool {
        self.is_endo() && self.arcs.iter().enumerate().all(|(k, a)| a.a as usize == k && a.b as usize == k + self.bottom())
    }

    /// partner and dot parity per endpoint
    fn tables(&self) -> (Vec<u8>, Vec<bool>) {
        let total = self.bottom() + self.top();
        let mut partner = vec![0u8; total];
        let mut dot = vec![false; total];
        for a in &self.arcs {
            partner[a.a as usize] = a.b;
            partner[a.b as usize] = a.a;
            dot[a.a as usize] = a.dot;
            dot[a.b as usize] = a.dot;
        }
        (partner, dot)
    }

    /// Mirror top and bottom.
    pub fn flip(&self) -> Self {
        let (b, t) = (self.bottom(), self.top());
        let m = |p: u8| {
            let p = p as usize;
            if p < b {
                t + p
            } else {
                p - b
            }
        };
        let arcs = self
            .arcs
            .iter()
            .map(|x| {
                let (p, q) = (m(x.a), m(x.b));
                Arc { a: p.min(q) as u8, b: p.max(q) as u8, dot: x.dot }
            })
            .collect();
        Self::from_arcs(t, b, arcs)
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, o: &Diagram) -> Self {
        let (b1, t1, b2) = (self.bottom(), self.top(), o.bottom());
        let m1 = |p: u8| if (p as usize) < b1 { p as usize } else { p as usize + b2 };
        let m2 = |p: u8| if (p as usize) < b2 { p as usize + b1 } else { p as usize + b1 + t1 };
        let mut arcs: Vec<Arc> = self.arcs.iter().map(|x| Arc { a: m1(x.a) as u8, b: m1(x.b) as u8, dot: x.dot }).collect();
        arcs.extend(o.arcs.iter().map(|x| Arc { a: m2(x.a) as u8, b: m2(x.b) as u8, dot: x.dot }));
        Self::from_arcs(b1 + b2, t1 + o.top(), arcs)
    }

    /// Validity: planar, and every dot reachable from the left wall.
    ///
    /// Mirror the picture across the left wall. A dotted arc becomes the two
    /// chords joining each endpoint to the mirror image of the other, an
    /// undotted arc becomes itself plus its mirror copy. The diagram is valid
    /// iff the only crossing chords are the two halves of a dotted arc.
    pub fn check(&self) -> std::result::Result<(), Invalidity> {
        let (b, t) = (self.bottom() as i64, self.top() as i64);
        // cyclic positions: unfolded bottom left to right, then top right to left
        let pos = |p: u8, mirror: bool| -> i64 {
            let p = p as i64;
            if p < b {
                if mirror {
                    b - 1 - p
                } else {
                    b + p
                }
            } else {
                let j = p - b;
                let x = if mirror { t - 1 - j } else { t + j };
                2 * b + (2 * t - 1 - x)
            }
        };
        let mut chords: Vec<(i64, i64, usize)> = Vec::with_capacity(2 * self.arcs.len());
        for (k, x) in self.arcs.iter().enumerate() {
            if x.dot {
                chords.push((pos(x.a, false), pos(x.b, true), k));
                chords.push((pos(x.a, true), pos(x.b, false), k));
            } else {
                chords.push((pos(x.a, false), pos(x.b, false), k));
                chords.push((pos(x.a, true), pos(x.b, true), k));
            }
        }
        for c in chords.iter_mut() {
            if c.0 > c.1 {
                std::mem::swap(&mut c.0, &mut c.1);
            }
        }
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                let (a, bb, ki) = chords[i];
                let (c, d, kj) = chords[j];
                let cross = (a < c && c < bb && bb < d) || (c < a && a < d && d < bb);
                if cross && ki != kj {
                    let (x, y) = (self.arcs[ki], self.arcs[kj]);
                    return Err(if x.dot || y.dot {
                        Invalidity::HiddenDot(if x.dot { x } else { y })
                    } else {
                        Invalidity::Crossing(x, y)
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// The symmetric matching on the mirrored picture, as pairs of signed
    /// endpoints: `+k` is point `k`, `-k` its mirror image (points 1-based).
    pub fn unfold(&self) -> Vec<(i64, i64)> {
        let s = |p: u8| p as i64 + 1;
        let mut out = Vec::new();
        for x in &self.arcs {
            if x.dot {
                out.push((s(x.a), -s(x.b)));
                out.push((-s(x.a), s(x.b)));
            } else {
                out.push((s(x.a), s(x.b)));
                out.push((-s(x.a), -s(x.b)));
            }
        }
        for p in out.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        out.sort_unstable();
        out
    }

    /// Inverse of [`Diagram::unfold`].
    pub fn fold(bottom: usize, top: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        let mut arcs = Vec::new();
        for &(x, y) in pairs {
            if x > 0 && y > 0 {
                arcs.push(((x - 1) as usize, (y - 1) as usize, false));
            } else if x < 0 && y > 0 && -x < y {
                arcs.push(((-x - 1) as usize, (y - 1) as usize, true));
            } else if x < 0 && y > 0 && y < -x {
                // the other half of the same dotted arc, already recorded
            } else if x < 0 && y < 0 {
                // mirror copy of an undotted arc
            } else {
                return invalid("pairs are not a symmetric matching");
            }
        }
        Self::new(bottom, top, &arcs)
    }

    /// Stack `top` above `bottom`, checking that the result is valid.
    pub fn compose(top: &Diagram, bottom: &Diagram) -> Result<CompositionOutcome> {
        let out = Self::compose_raw(top, bottom)?;
        if let Err(why) = out.result.check() {
            return invalid(format!("composite is not a valid diagram: {why}"));
        }
        Ok(out)
    }

    /// Stack `top` above `bottom` without validating the composite.
    pub fn compose_raw(top: &Diagram, bottom: &Diagram) -> Result<CompositionOutcome> {
        if top.bottom != bottom.top {
            return invalid(format!("cannot stack: {} points meet {} points", bottom.top, top.bottom));
        }
        Ok(compose_tables(top, bottom))
    }

    pub fn to_json(&self) -> Value {
        let name = |p: u8| self.point_name(p as usize);
        let arcs: Vec<Value> = self.arcs.iter().filter(|x| !x.dot).map(|x| json!([name(x.a), name(x.b)])).collect();
        let dots: Vec<Value> = self.arcs.iter().filter(|x| x.dot).map(|x| json!([name(x.a), name(x.b)])).collect();
        if self.is_endo() {
            json!({"n": self.bottom, "arcs": arcs, "dots": dots})
        } else {
            json!({"bottom": self.bottom, "top": self.top, "arcs": arcs, "dots": dots})
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed diagram JSON: {v}"));
        let (b, t) = match v.get("n").and_then(Value::as_u64) {
            Some(n) => (n as usize, n as usize),
            None => (
                v.get("bottom").and_then(Value::as_u64).ok_or_else(bad)? as usize,
                v.get("top").and_then(Value::as_u64).ok_or_else(bad)? as usize,
            ),
        };
        let mut arcs = Vec::new();
        for (key, dot) in [("arcs", false), ("dots", true)] {
            for pair in v.get(key).and_then(Value::as_array).map(|a| a.as_slice()).unwrap_or(&[]) {
                let pair = pair.as_array().ok_or_else(bad)?;
                if pair.len() != 2 {
                    return Err(bad());
                }
                let p = parse_point(pair[0].as_str().ok_or_else(bad)?, b, t)?;
                let q = parse_point(pair[1].as_str().ok_or_else(bad)?, b, t)?;
                arcs.push((p, q, dot));
            }
        }
        Self::new(b, t, &arcs)
    }

    /// Parse the text notation `(b0-t0) (b1-b2)* ...` for an n-strand diagram.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut arcs = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return invalid(format!("expected '(' in {text:?}"));
            };
            let close = stripped.find(')').ok_or_else(|| Error::InvalidArgument(format!("unclosed arc in {text:?}")))?;
            let inner = &stripped[..close];
            let mut after = &stripped[close + 1..];
            let dot = after.starts_with('*');
            if dot {
                after = &after[1..];
            }
            let (p, q) = inner.split_once('-').ok_or_else(|| Error::InvalidArgument(format!("bad arc {inner:?}")))?;
            arcs.push((parse_point(p.trim(), n, n)?, parse_point(q.trim(), n, n)?, dot));
            rest = after.trim_start();
        }
        Self::new(n, n, &arcs)
    }
}

fn parse_point(s: &str, bottom: usize, top: usize) -> Result<usize> {
    let (side, idx) = s.split_at(1.min(s.len()));
    let k: usize = idx.parse().map_err(|_| Error::InvalidArgument(format!("bad endpoint {s:?}")))?;
    match side {
        "b" if k < bottom => Ok(k),
        "t" if k < top => Ok(bottom + k),
        _ => invalid(format!("bad endpoint {s:?}")),
    }
}

fn compose_tables(top: &Diagram, bottom: &Diagram) -> CompositionOutcome {
    let (n, k, m) = (bottom.bottom(), bottom.top(), top.top());
    let (pb, db) = bottom.tables();
    let (pt, dt) = top.tables();
    // middle point j is bottom's n+j and top's j
    let mut mid_seen = vec![false; k];
    let mut arcs = Vec::with_capacity((n + m) / 2);
    let mut done = vec![false; n + m];

    // walk from an outer endpoint; returns (outer endpoint reached, parity)
    let walk = |start_in_top: bool, start: usize, mid_seen: &mut Vec<bool>| -> (usize, bool) {
        let mut in_top = start_in_top;
        let mut p = start;
        let mut parity = false;
        loop {
            if in_top {
                parity ^= dt[p];
                let q = pt[p] as usize;
                if q >= k {
                    return (n + q - k, parity);
                }
                mid_seen[q] = true;
                in_top = false;
                p = n + q;
            } else {
                parity ^= db[p];
                let q = pb[p] as usize;
                if q < n {
                    return (q, parity);
                }
                mid_seen[q - n] = true;
                in_top = true;
                p = q - n;
            }
        }
    };

    for s in 0..n + m {
        if done[s] {
            continue;
        }
        let (end, parity) = if s < n { walk(false, s, &mut mid_seen) } else { walk(true, k + s - n, &mut mid_seen) };
        done[s] = true;
        done[end] = true;
        arcs.push(Arc { a: s.min(end) as u8, b: s.max(end) as u8, dot: parity });
    }

    let mut loops = 0;
    let mut dotted_loop = false;
    for j in 0..k {
        if mid_seen[j] {
            continue;
        }
        // closed component through middle point j
        let mut parity = false;
        let mut cur = j;
        loop {
            mid_seen[cur] = true;
            parity ^= dt[cur];
            let up = pt[cur] as usize;
            mid_seen[up] = true;
            parity ^= db[n + up];
            let down = pb[n + up] as usize - n;
            if down == j {
                break;
            }
            cur = down;
        }
        if parity {
            dotted_loop = true;
        } else {
            loops += 1;
        }
    }
    CompositionOutcome { undotted_loops: loops, dotted_loop_seen: dotted_loop, result: Diagram::from_arcs(n, m, arcs) }
}

/// Noncrossing perfect matchings of `points` listed in cyclic order.
fn noncrossing(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..points.len()).step_by(2) {
        let inner = noncrossing(&points[1..k]);
        let outer = noncrossing(&points[k + 1..]);
        for i in &inner {
            for o in &outer {
                let mut m = Vec::with_capacity(points.len() / 2);
                m.push((points[0], points[k]));
                m.extend_from_slice(i);
                m.extend_from_slice(o);
                out.push(m);
            }
        }
    }
    out
}

/// All valid diagrams from `bottom` to `top` points of the family, sorted.
pub fn enumerate_hom(bottom: usize, top: usize, family: Family) -> Vec<Diagram> {
    if (bottom + top) % 2 == 1 {
        return Vec::new();
    }
    let cyclic: Vec<usize> = (0..bottom).chain((bottom..bottom + top).rev()).collect();
    let mut out = Vec::new();
    for m in noncrossing(&cyclic) {
        let arcs: Vec<Arc> = m.iter().map(|&(p, q)| Arc { a: p.min(q) as u8, b: p.max(q) as u8, dot: false }).collect();
        let base = Diagram::from_arcs(bottom, top, arcs);
        if family == Family::A {
            out.push(base);
            continue;
        }
        let r = base.arcs.len();
        for mask in 0u32..(1 << r) {
            if family == Family::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let mut d = base.clone();
            for (i, a) in d.arcs.iter_mut().enumerate() {
                a.dot = mask >> i & 1 == 1;
            }
            if d.is_valid() {
                out.push(d);
            }
        }
    }
    out.sort();
    out
}

/// The diagram basis of TL(A_{n-1}), TL(B_n) or TL(D_n).
pub fn enumerate_basis(n: usize, family: Family) -> Result<Vec<Diagram>> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    if family == Family::D && n < 2 {
        return invalid("type D needs n >= 2");
    }
    Ok(enumerate_hom(n, n, family))
}

/// Checked validity of a candidate, with the reason on failure.
pub fn validate(d: &Diagram) -> std::result::Result<(), Invalidity> {
    d.check()
}

/// Generator diagrams by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Identity,
    U(usize),
    S0,
    U0,
}

pub fn generator_diagram(kind: Generator, n: usize) -> Result<Diagram> {
    match kind {
        Generator::Identity => Ok(Diagram::identity(n)),
        Generator::U(i) => Diagram::u(i, n),
        Generator::S0 => Diagram::s0(n),
        Generator::U0 => Diagram::u0(n),
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.arcs {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "({}-{})", self.point_name(x.a as usize), self.point_name(x.b as usize))?;
            if x.dot {
                write!(f, "*")?;
            }
        }
        if first {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram[{}->{}]({self})", self.bottom, self.top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_basis(2, Family::B).unwrap().len(), 6);
        assert_eq!(enumerate_basis(3, Family::D).unwrap().len(), 10);
        assert_eq!(enumerate_basis(3, Family::B).unwrap().len(), 20);
        for n in 1..=5 {
            assert_eq!(enumerate_basis(n, Family::A).unwrap().len() as u64, binom(2 * n as u64, n as u64) / (n as u64 + 1));
        }
    }

    #[test]
    fn two_strand_basis() {
        let got = enumerate_basis(2, Family::B).unwrap();
        let want = [
            Diagram::identity(2),
            Diagram::s0(2).unwrap(),
            Diagram::u(1, 2).unwrap(),
            Diagram::u0(2).unwrap(),
            Diagram::new(2, 2, &[(0, 1, false), (2, 3, true)]).unwrap(),
            Diagram::new(2, 2, &[(0, 1, true), (2, 3, false)]).unwrap(),
        ];
        assert_eq!(got.len(), 6);
        for w in &want {
            assert!(got.contains(w), "{w} missing");
        }
    }

    #[test]
    fn validity_examples() {
        assert!(Diagram::s0(2).unwrap().is_valid());
        let hidden = Diagram::dotted_identity(2, &[2]).unwrap();
        assert!(matches!(hidden.check(), Err(Invalidity::HiddenDot(_))));
        assert!(!Diagram::dotted_identity(2, &[1, 2]).unwrap().is_valid());
        assert!(Diagram::u0(2).unwrap().is_valid());
        assert!(Diagram::raw(2, 2, &[(0, 3, false), (1, 2, false)]).unwrap().check().is_err());
        assert!(Diagram::raw(2, 2, &[(0, 1, false), (0, 2, false)]).is_err());
    }

    #[test]
    fn generator_pictures() {
        let u1 = Diagram::u(1, 3).unwrap();
        assert_eq!(u1.to_string(), "(b0-b1) (b2-t2) (t0-t1)");
        assert_eq!(Diagram::s0(1).unwrap().to_string(), "(b0-t0)*");
        assert_eq!(Diagram::u0(2).unwrap().to_string(), "(b0-b1)* (t0-t1)*");
        assert!(Diagram::u(3, 3).is_err());
    }

    #[test]
    fn composition_rules() {
        let u1 = Diagram::u(1, 2).unwrap();
        let out = Diagram::compose(&u1, &u1).unwrap();
        assert_eq!((out.undotted_loops, out.dotted_loop_seen), (1, false));
        assert_eq!(out.result, u1);

        let s0 = Diagram::s0(2).unwrap();
        let out = Diagram::compose(&s0, &s0).unwrap();
        assert_eq!(out.result, Diagram::identity(2));
        assert_eq!(out.undotted_loops, 0);

        let u0 = Diagram::u0(2).unwrap();
        assert!(Diagram::compose(&u0, &u1).unwrap().dotted_loop_seen);
        assert!(Diagram::compose(&Diagram::identity(3), &u1).is_err());
    }

    #[test]
    fn text_and_json_round_trip() {
        for d in enumerate_basis(3, Family::B).unwrap() {
            assert_eq!(Diagram::parse(&d.to_string(), 3).unwrap(), d);
            assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
        }
    }

    #[test]
    fn fold_unfold() {
        for d in enumerate_basis(4, Family::B).unwrap() {
            assert_eq!(Diagram::fold(4, 4, &d.unfold()).unwrap(), d);
        }
    }

    #[test]
    fn caps_and_cups() {
        let c = Diagram::cap(3, 2, false).unwrap();
        assert_eq!((c.bottom(), c.top()), (3, 1));
        assert_eq!(c.to_string(), "(b0-t0) (b1-b2)");
        let cup = Diagram::cup(3, 1, false).unwrap();
        let out = Diagram::compose(&c, &cup).unwrap();
        assert_eq!(out.result, Diagram::identity(1));
        assert!(Diagram::cap(3, 2, true).unwrap().check().is_err());
        assert!(Diagram::cap(3, 1, true).unwrap().is_valid());
    }
}
