//! The hyperoctahedral group W(B_n) as dotted permutations.
//!
//! A dotted permutation `(sigma, eps)` sends bottom strand `i` to top
//! position `sigma(i)` and carries a dot at the bottom of strand `i` when
//! `eps[i]` is set. `x * y` stacks `x` on top of `y`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DottedPermutation {
    /// zero-based images
    sigma: Vec<u8>,
    dots: Vec<bool>,
}

/// Coxeter generators: `s0`, `s0' = s0 s1 s0`, and `s_i` for `1 <= i < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    S0,
    S0Prime,
    S(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::S0 => write!(f, "s0"),
            Gen::S0Prime => write!(f, "s0'"),
            Gen::S(i) => write!(f, "s{i}"),
        }
    }
}

impl DottedPermutation {
    /// `sigma` one-based, `dots` as 0/1.
    pub fn new(sigma: &[usize], dots: &[u8]) -> Result<Self> {
        let n = sigma.len();
        if dots.len() != n {
            return invalid("sigma and dots differ in length");
        }
        let mut seen = vec![false; n];
        for &s in sigma {
            if s == 0 || s > n || seen[s - 1] {
                return invalid(format!("{sigma:?} is not a permutation"));
            }
            seen[s - 1] = true;
        }
        if dots.iter().any(|&d| d > 1) {
            return invalid("dots must be 0 or 1");
        }
        Ok(Self { sigma: sigma.iter().map(|&s| (s - 1) as u8).collect(), dots: dots.iter().map(|&d| d == 1).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self { sigma: (0..n as u8).collect(), dots: vec![false; n] }
    }

    pub fn generator(g: Gen, n: usize) -> Result<Self> {
        let mut x = Self::identity(n);
        match g {
            Gen::S0 if n >= 1 => x.dots[0] = true,
            Gen::S0Prime if n >= 2 => {
                let s0 = Self::generator(Gen::S0, n)?;
                let s1 = Self::generator(Gen::S(1), n)?;
                x = s0.mul(&s1).mul(&s0);
            }
            Gen::S(i) if i >= 1 && i < n => x.sigma.swap(i - 1, i),
            _ => return invalid(format!("generator {g} does not exist for n = {n}")),
        }
        Ok(x)
    }

    /// Product of a word, leftmost letter on top.
    pub fn from_word(word: &[Gen], n: usize) -> Result<Self> {
        let mut x = Self::identity(n);
        for &g in word {
            x = x.mul(&Self::generator(g, n)?);
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    /// One-based images.
    pub fn sigma(&self) -> Vec<usize> {
        self.sigma.iter().map(|&s| s as usize + 1).collect()
    }

    pub fn dots(&self) -> Vec<u8> {
        self.dots.iter().map(|&d| d as u8).collect()
    }

    pub fn dot_count(&self) -> usize {
        self.dots.iter().filter(|&&d| d).count()
    }

    /// `x` on top of `y`. Panics on size mismatch; see [`Self::checked_mul`].
    pub fn mul(&self, y: &Self) -> Self {
        self.checked_mul(y).expect("size mismatch")
    }

    pub fn checked_mul(&self, y: &Self) -> Result<Self> {
        if self.n() != y.n() {
            return invalid(format!("sizes {} and {} differ", self.n(), y.n()));
        }
        let sigma = y.sigma.iter().map(|&j| self.sigma[j as usize]).collect();
        let dots = y.sigma.iter().zip(&y.dots).map(|(&j, &d)| d ^ self.dots[j as usize]).collect();
        Ok(Self { sigma, dots })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut sigma = vec![0u8; n];
        let mut dots = vec![false; n];
        for i in 0..n {
            let j = self.sigma[i] as usize;
            sigma[j] = i as u8;
            dots[j] = self.dots[i];
        }
        Self { sigma, dots }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n())
    }

    /// Sign of the underlying permutation.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.n()];
        let mut s = 1;
        for i in 0..self.n() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.sigma[j] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        s
    }

    /// Images of `1..=n` as signed integers; `w(-i) = -w(i)`.
    pub fn to_signed_permutation(&self) -> Vec<i64> {
        self.sigma
            .iter()
            .zip(&self.dots)
            .map(|(&s, &d)| if d { -(s as i64 + 1) } else { s as i64 + 1 })
            .collect()
    }

    pub fn from_signed_permutation(w: &[i64]) -> Result<Self> {
        let sigma: Vec<usize> = w.iter().map(|x| x.unsigned_abs() as usize).collect();
        let dots: Vec<u8> = w.iter().map(|&x| (x < 0) as u8).collect();
        Self::new(&sigma, &dots)
    }

    pub fn to_json(&self) -> Value {
        json!({"sigma": self.sigma(), "dots": self.dots()})
    }
}

impl fmt::Display for DottedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.to_signed_permutation().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", w.join(" "))
    }
}

impl fmt::Debug for DottedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DottedPermutation{self}")
    }
}

/// `J_i`: the identity with a dot on strand `i` (one-based).
pub fn jucys_murphy(i: usize, n: usize) -> Result<DottedPermutation> {
    if i == 0 || i > n {
        return invalid(format!("J{i} needs 1 <= i <= n = {n}"));
    }
    let mut x = DottedPermutation::identity(n);
    x.dots[i - 1] = true;
    Ok(x)
}

/// The word `s_{i-1} ... s_1 s0 s_1 ... s_{i-1}` for `J_i`.
pub fn jucys_murphy_word(i: usize) -> Vec<Gen> {
    let mut w: Vec<Gen> = (1..i).rev().map(Gen::S).collect();
    w.push(Gen::S0);
    w.extend((1..i).map(Gen::S));
    w
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylType {
    B,
    D,
}

/// Longest element with its standard reduced word.
pub fn longest_element(ty: WeylType, n: usize) -> Result<(DottedPermutation, Vec<Gen>)> {
    let word: Vec<Gen> = match ty {
        WeylType::B => {
            if n == 0 {
                return invalid("n must be at least 1");
            }
            (1..=n).flat_map(jucys_murphy_word).collect()
        }
        WeylType::D => {
            if n < 2 {
                return invalid("type D needs n >= 2");
            }
            let block: Vec<Gen> = std::iter::once(Gen::S0Prime).chain((1..n).map(Gen::S)).collect();
            block.iter().cycle().take(block.len() * (n - 1)).copied().collect()
        }
    };
    Ok((DottedPermutation::from_word(&word, n)?, word))
}

/// `|W(B_n)| = 2^n n!`, `|W(D_n)| = 2^(n-1) n!`.
pub fn group_order(ty: WeylType, n: usize) -> Result<u128> {
    if n == 0 || n > 30 {
        return invalid("n must be between 1 and 30");
    }
    let fact: u128 = (1..=n as u128).product();
    Ok(match ty {
        WeylType::B => fact << n,
        WeylType::D => fact << (n - 1),
    })
}

impl std::str::FromStr for WeylType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(WeylType::B),
            "D" | "d" => Ok(WeylType::D),
            _ => invalid(format!("unknown Weyl type {s:?}")),
        }
    }
}

/// All `2^n n!` elements, sorted.
pub fn all_elements(n: usize) -> Vec<DottedPermutation> {
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0u32..1 << n {
            out.push(DottedPermutation { sigma: p.clone(), dots: (0..n).map(|i| mask >> i & 1 == 1).collect() });
        }
    }
    out.sort();
    out
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, (n - 1) as u8);
            out.push(q);
        }
    }
    out
}

/// A pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bipartition {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl Bipartition {
    pub fn new(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        for p in [lambda, mu] {
            if p.iter().any(|&x| x == 0) || p.windows(2).any(|w| w[0] < w[1]) {
                return invalid(format!("{p:?} is not a partition"));
            }
        }
        Ok(Self { lambda: lambda.to_vec(), mu: mu.to_vec() })
    }

    pub fn size(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.mu.iter().sum::<usize>()
    }

    pub fn to_json(&self) -> Value {
        json!({"lambda": self.lambda, "mu": self.mu})
    }

    fn sort_key(&self) -> (std::cmp::Reverse<usize>, Vec<usize>, Vec<usize>) {
        (std::cmp::Reverse(self.lambda.iter().sum()), self.lambda.clone(), self.mu.clone())
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Bipartition {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&o.sort_key())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "(({}),({}))", p(&self.lambda), p(&self.mu))
    }
}

impl std::str::FromStr for Bipartition {
    type Err = Error;
    /// Accepts `2,1|1` or `((2,1),(1))`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (l, m) = if let Some((l, m)) = t.split_once('|') {
            (l.to_string(), m.to_string())
        } else if let Some(inner) = t.strip_prefix("((").and_then(|x| x.strip_suffix("))")) {
            let (l, m) = inner.split_once("),(").ok_or_else(|| Error::InvalidArgument(format!("bad bipartition {s:?}")))?;
            (l.to_string(), m.to_string())
        } else {
            return invalid(format!("bad bipartition {s:?}"));
        };
        let parse = |x: &str| -> Result<Vec<usize>> {
            x.split(',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| Error::InvalidArgument(format!("bad part {p:?}"))))
                .collect()
        };
        Self::new(&parse(&l)?, &parse(&m)?)
    }
}

/// Partitions of k, largest first part first.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=k.min(max)).rev() {
            prefix.push(p);
            go(k - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn bipartitions_of(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for l in partitions(k) {
            for m in partitions(n - k) {
                out.push(Bipartition { lambda: l.clone(), mu: m });
            }
        }
    }
    out.sort();
    out
}

/// Conjugacy class label: cycles with an even number of dots give parts of
/// `lambda`, cycles with an odd number give parts of `mu`.
pub fn conjugacy_bipartition(w: &DottedPermutation) -> Bipartition {
    let n = w.n();
    let mut seen = vec![false; n];
    let (mut lambda, mut mu) = (Vec::new(), Vec::new());
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let (mut len, mut dots, mut j) = (0, 0, i);
        while !seen[j] {
            seen[j] = true;
            dots += w.dots[j] as usize;
            j = w.sigma[j] as usize;
            len += 1;
        }
        if dots % 2 == 0 {
            lambda.push(len);
        } else {
            mu.push(len);
        }
    }
    lambda.sort_unstable_by(|a, b| b.cmp(a));
    mu.sort_unstable_by(|a, b| b.cmp(a));
    Bipartition { lambda, mu }
}

/// Conjugacy classes by orbit enumeration.
pub fn conjugacy_classes(n: usize) -> Vec<Vec<DottedPermutation>> {
    let group = all_elements(n);
    let mut done: BTreeSet<DottedPermutation> = BTreeSet::new();
    let mut classes = Vec::new();
    for x in &group {
        if done.contains(x) {
            continue;
        }
        let class: BTreeSet<_> = group.iter().map(|g| g.mul(x).mul(&g.inverse())).collect();
        done.extend(class.iter().cloned());
        classes.push(class.into_iter().collect());
    }
    classes
}

fn hook_product(p: &[usize]) -> u128 {
    let mut prod = 1u128;
    for (r, &len) in p.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = p[r + 1..].iter().filter(|&&l| l > c).count();
            prod *= (arm + leg + 1) as u128;
        }
    }
    prod
}

/// `n! / (hooks of lambda * hooks of mu)`.
pub fn specht_dimension_hook(bp: &Bipartition) -> u128 {
    let n = bp.size() as u128;
    let fact: u128 = (1..=n).product();
    fact / (hook_product(&bp.lambda) * hook_product(&bp.mu))
}

/// Number of monotone paths from the empty bipartition in the branching graph.
pub fn specht_dimension_paths(bp: &Bipartition) -> u128 {
    fn go(bp: &Bipartition, memo: &mut HashMap<Bipartition, u128>) -> u128 {
        if bp.size() == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(bp) {
            return v;
        }
        let v = branching_neighbors(bp, Direction::Down).iter().map(|b| go(b, memo)).sum();
        memo.insert(bp.clone(), v);
        v
    }
    go(bp, &mut HashMap::new())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

fn removals(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..p.len() {
        if r + 1 == p.len() || p[r + 1] < p[r] {
            let mut q = p.to_vec();
            q[r] -= 1;
            if q[r] == 0 {
                q.pop();
            }
            out.push(q);
        }
    }
    out
}

fn additions(p: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for r in 0..=p.len() {
        if r == p.len() || r == 0 || p[r - 1] > p[r] {
            let mut q = p.to_vec();
            if r == p.len() {
                q.push(1);
            } else {
                q[r] += 1;
            }
            out.push(q);
        }
    }
    out
}

/// Bipartitions one box larger or smaller; `lambda` changes listed first.
pub fn branching_neighbors(bp: &Bipartition, dir: Direction) -> Vec<Bipartition> {
    let step = if dir == Direction::Up { additions } else { removals };
    let mut out: Vec<Bipartition> = step(&bp.lambda).into_iter().map(|l| Bipartition { lambda: l, mu: bp.mu.clone() }).collect();
    out.extend(step(&bp.mu).into_iter().map(|m| Bipartition { lambda: bp.lambda.clone(), mu: m }));
    out
}
