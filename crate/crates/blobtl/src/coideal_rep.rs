//! The tensor space V^n of the coideal at rank one, with the commuting
//! actions of TL(B_n) and of the coideal elements B and C.
//!
//! Basis words in {x, y} are indexed by integers: factor 1 is the most
//! significant bit and x is 0, so the index order is the lexicographic one.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::coefficients::{quantum_integer, Coefficient, LaurentPoly, RationalFunction};
use crate::diagrams::{enumerate_basis, Diagram, Family};
use crate::error::{invalid, Error, Result};
use crate::jones_wenzl::{higher_projector, jw_type_b, jw_type_d, Epsilon, RatElement, Sign};
use crate::modp;

pub const DEFAULT_MAX_N: usize = 6;

/// Matrix entries: exact rational functions, or residues mod p at a fixed `q`.
pub trait Entry: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
    fn from_laurent(p: &LaurentPoly) -> Self;
    fn from_ratfunc(r: &RationalFunction) -> Self;
    fn residue(&self) -> u64;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl Entry for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        RationalFunction::inv(self).expect("inverting zero")
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        RationalFunction::from_laurent(p.clone())
    }
    fn from_ratfunc(r: &RationalFunction) -> Self {
        r.clone()
    }
    fn residue(&self) -> u64 {
        modp::eval_ratfunc(self)
    }
}

/// An element of F_p, standing for an entry evaluated at the fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp(pub u64);

impl Entry for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp(modp::add(self.0, o.0))
    }
    fn neg(&self) -> Self {
        Fp(modp::sub(0, self.0))
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(modp::mul(self.0, o.0))
    }
    fn inv(&self) -> Self {
        Fp(modp::inv(self.0))
    }
    fn from_laurent(p: &LaurentPoly) -> Self {
        Fp(modp::eval_laurent(p))
    }
    fn from_ratfunc(r: &RationalFunction) -> Self {
        Fp(modp::eval_ratfunc(r))
    }
    fn residue(&self) -> u64 {
        self.0
    }
}

fn qpow<E: Entry>(k: i64) -> E {
    E::from_laurent(&LaurentPoly::monomial(1, k))
}

fn check_n(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    if n > cap {
        return invalid(format!("n = {n} exceeds the cap {cap}"));
    }
    Ok(())
}

fn bit(word: usize, n: usize, factor: usize) -> usize {
    (word >> (n - factor)) & 1
}

fn flip(word: usize, n: usize, factor: usize) -> usize {
    word ^ (1 << (n - factor))
}

pub fn word_name(word: usize, n: usize) -> String {
    (1..=n).map(|f| if bit(word, n, f) == 0 { 'x' } else { 'y' }).collect()
}

/// A vector in V^n.
#[derive(Clone, Debug, PartialEq)]
pub struct RepVector<E = RationalFunction> {
    n: usize,
    coeffs: Vec<E>,
}

impl<E: Entry> RepVector<E> {
    pub fn zero(n: usize) -> Self {
        RepVector { n, coeffs: vec![E::zero(); 1 << n] }
    }

    pub fn basis(n: usize, word: usize) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[word] = E::one();
        v
    }

    /// `x + a y` in V.
    fn pair(a: E) -> Self {
        RepVector { n: 1, coeffs: vec![E::one(), a] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Entry::is_zero)
    }

    pub fn tensor(&self, o: &Self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * o.coeffs.len());
        for a in &self.coeffs {
            for b in &o.coeffs {
                coeffs.push(a.mul(b));
            }
        }
        RepVector { n: self.n + o.n, coeffs }
    }

    pub fn scale(&self, c: &E) -> Self {
        RepVector { n: self.n, coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect();
        RepVector { n: self.n, coeffs }
    }
}

impl RepVector<RationalFunction> {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| json!({"word": word_name(w, self.n), "coeff": Coefficient::to_json(c)}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }
}

impl fmt::Display for RepVector<RationalFunction> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}){}", word_name(w, self.n))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A dense operator on V^n, acting on the left.
#[derive(Clone, Debug, PartialEq)]
pub struct RepOperator<E = RationalFunction> {
    n: usize,
    rows: Vec<Vec<E>>,
}

impl<E: Entry> RepOperator<E> {
    pub fn zero(n: usize) -> Self {
        let d = 1 << n;
        RepOperator { n, rows: vec![vec![E::zero(); d]; d] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for (i, row) in m.rows.iter_mut().enumerate() {
            row[i] = E::one();
        }
        m
    }

    fn from_sparse(s: &Sparse<E>) -> Self {
        let mut m = Self::zero(s.n);
        for (j, col) in s.cols.iter().enumerate() {
            for (i, c) in col {
                m.rows[*i][j] = m.rows[*i][j].add(c);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &E {
        &self.rows[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Entry::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, E::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, E::sub)
    }

    fn zip(&self, o: &Self, f: impl Fn(&E, &E) -> E) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        RepOperator { n: self.n, rows }
    }

    pub fn scale(&self, c: &E) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|x| x.mul(c)).collect()).collect();
        RepOperator { n: self.n, rows }
    }

    /// `self` after `o`.
    pub fn compose(&self, o: &Self) -> Self {
        let d = self.dim();
        let mut rows = vec![vec![E::zero(); d]; d];
        for (i, row) in rows.iter_mut().enumerate() {
            for (k, a) in self.rows[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (x, b) in row.iter_mut().zip(&o.rows[k]) {
                    if !b.is_zero() {
                        *x = x.add(&a.mul(b));
                    }
                }
            }
        }
        RepOperator { n: self.n, rows }
    }

    pub fn apply(&self, v: &RepVector<E>) -> RepVector<E> {
        let coeffs = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&v.coeffs)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(E::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect();
        RepVector { n: self.n, coeffs }
    }

    /// Rank at the fixed evaluation point mod p.
    pub fn rank(&self) -> usize {
        modp::rank(self.rows.iter().map(|r| r.iter().map(Entry::residue).collect()).collect())
    }

    fn flat_residues(&self) -> Vec<u64> {
        self.rows.iter().flatten().map(Entry::residue).collect()
    }
}

impl RepOperator<RationalFunction> {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Coefficient::to_json).collect()))
            .collect();
        json!({"n": self.n, "rows": rows})
    }
}

/// Column lists: column j holds the image of basis word j.
#[derive(Clone, Debug)]
struct Sparse<E> {
    n: usize,
    cols: Vec<Vec<(usize, E)>>,
}

impl<E: Entry> Sparse<E> {
    fn build(n: usize, image: impl Fn(usize) -> Vec<(usize, E)>) -> Self {
        Sparse { n, cols: (0..1usize << n).map(image).collect() }
    }

    /// `self * m`
    fn left_mul(&self, m: &RepOperator<E>) -> RepOperator<E> {
        let mut out = RepOperator::<E>::zero(self.n);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col {
                let src = &m.rows[j];
                for (x, y) in out.rows[*i].iter_mut().zip(src) {
                    if !y.is_zero() {
                        *x = x.add(&c.mul(y));
                    }
                }
            }
        }
        out
    }

    /// `m * self`
    fn right_mul(&self, m: &RepOperator<E>) -> RepOperator<E> {
        let mut out = RepOperator::<E>::zero(self.n);
        for (j, col) in self.cols.iter().enumerate() {
            for (r, c) in col {
                for (row_out, row_in) in out.rows.iter_mut().zip(&m.rows) {
                    if !row_in[*r].is_zero() {
                        row_out[j] = row_out[j].add(&row_in[*r].mul(c));
                    }
                }
            }
        }
        out
    }
}

/// Operators with explicit matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepGenerator {
    S0,
    U(usize),
    H(usize),
    B,
    C,
}

impl FromStr for RepGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let index = |rest: &str| {
            rest.parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad generator {s:?}")))
        };
        match s {
            "s0" => Ok(RepGenerator::S0),
            "B" | "b" => Ok(RepGenerator::B),
            "C" | "c" => Ok(RepGenerator::C),
            _ if s.starts_with('U') || s.starts_with('u') => Ok(RepGenerator::U(index(&s[1..])?)),
            _ if s.starts_with('H') || s.starts_with('h') => Ok(RepGenerator::H(index(&s[1..])?)),
            _ => invalid(format!("bad generator {s:?}")),
        }
    }
}

fn generator_sparse<E: Entry>(g: RepGenerator, n: usize) -> Result<Sparse<E>> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let pair_index = |i: usize| {
        if i == 0 || i >= n {
            invalid(format!("index {i} out of range for n = {n}"))
        } else {
            Ok(i)
        }
    };
    Ok(match g {
        RepGenerator::S0 => Sparse::build(n, |w| vec![(flip(w, n, 1), E::one())]),
        RepGenerator::U(i) => {
            let i = pair_index(i)?;
            Sparse::build(n, |w| {
                let sw = flip(flip(w, n, i), n, i + 1);
                match (bit(w, n, i), bit(w, n, i + 1)) {
                    (0, 1) => vec![(w, qpow(-1)), (sw, E::one().neg())],
                    (1, 0) => vec![(sw, E::one().neg()), (w, qpow(1))],
                    _ => vec![],
                }
            })
        }
        RepGenerator::H(i) => {
            let i = pair_index(i)?;
            Sparse::build(n, |w| {
                let sw = flip(flip(w, n, i), n, i + 1);
                match (bit(w, n, i), bit(w, n, i + 1)) {
                    (0, 1) => vec![(sw, E::one())],
                    (1, 0) => vec![(sw, E::one()), (w, qpow::<E>(-1).sub(&qpow(1)))],
                    _ => vec![(w, qpow(-1))],
                }
            })
        }
        RepGenerator::B => Sparse::build(n, |w| {
            (1..=n)
                .map(|i| {
                    // K^{-1} on the later factors: q^{-1} on x, q on y
                    let k: i64 = (i + 1..=n).map(|f| if bit(w, n, f) == 0 { -1 } else { 1 }).sum();
                    (flip(w, n, i), qpow(k))
                })
                .collect()
        }),
        RepGenerator::C => Sparse::build(n, |w| vec![(w, qpow(n as i64))]),
    })
}

pub fn generator_operator(g: RepGenerator, n: usize) -> Result<RepOperator> {
    generator_operator_in(g, n)
}

pub fn generator_operator_in<E: Entry>(g: RepGenerator, n: usize) -> Result<RepOperator<E>> {
    Ok(RepOperator::from_sparse(&generator_sparse(g, n)?))
}

/// The image of every TL(B_n) basis diagram, reached from the identity by
/// left multiplication with `s0` and the `U_i`.
pub fn diagram_operators<E: Entry>(n: usize) -> Result<HashMap<Diagram, RepOperator<E>>> {
    check_n(n, usize::MAX)?;
    let gens: Vec<(Diagram, Sparse<E>)> = std::iter::once((Diagram::s0(n)?, generator_sparse(RepGenerator::S0, n)?))
        .chain((1..n).map(|i| Ok((Diagram::u(i, n)?, generator_sparse(RepGenerator::U(i), n)?))).collect::<Result<Vec<_>>>()?)
        .collect();
    let inv_delta = E::from_laurent(&crate::coefficients::delta()).inv();
    let mut seen: HashMap<Diagram, RepOperator<E>> = HashMap::new();
    let id = Diagram::identity(n);
    seen.insert(id.clone(), RepOperator::identity(n));
    let mut queue = VecDeque::from([id]);
    while let Some(d) = queue.pop_front() {
        for (gd, gs) in &gens {
            let out = Diagram::compose_raw(gd, &d)?;
            if out.dotted_loop_seen || seen.contains_key(&out.result) {
                continue;
            }
            let mut op = gs.left_mul(&seen[&d]);
            for _ in 0..out.undotted_loops {
                op = op.scale(&inv_delta);
            }
            seen.insert(out.result.clone(), op);
            queue.push_back(out.result);
        }
    }
    let expected = enumerate_basis(n, Family::B)?.len();
    if seen.len() != expected {
        return invalid(format!("generators reached {} of {expected} diagrams", seen.len()));
    }
    Ok(seen)
}

/// The action of a TL(B_n) element.
pub fn element_to_operator(a: &RatElement) -> Result<RepOperator> {
    element_to_operator_in(a)
}

pub fn element_to_operator_in<E: Entry>(a: &RatElement) -> Result<RepOperator<E>> {
    if !a.is_endo() {
        return invalid("only endomorphisms act on V^n");
    }
    let n = a.n();
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let ops = diagram_operators::<E>(n)?;
    let mut out = RepOperator::zero(n);
    for (d, c) in a.terms() {
        let op = ops.get(d).ok_or_else(|| Error::InvalidArgument(format!("{d} is not a TL(B_n) diagram")))?;
        out = out.add(&op.scale(&E::from_ratfunc(c)));
    }
    Ok(out)
}

/// `x + q^m y` for a plus sign, `x - q^{-m} y` for a minus sign.
pub fn factor_vector<E: Entry>(sign: Sign, m: i64) -> RepVector<E> {
    match sign {
        Sign::Plus => RepVector::pair(qpow(m)),
        Sign::Minus => RepVector::pair(qpow::<E>(-m).neg()),
    }
}

/// The tensor eigenvector labelled by a sign sequence; its B-eigenvalue is
/// the quantum integer of the total weight.
pub fn eigenvector<E: Entry>(eps: &Epsilon) -> RepVector<E> {
    let mut m = 0;
    let mut out: Option<RepVector<E>> = None;
    for e in eps.entries() {
        let f = factor_vector(Sign::of(e), m);
        out = Some(match out {
            None => f,
            Some(v) => v.tensor(&f),
        });
        m += e;
    }
    out.unwrap_or(RepVector { n: 0, coeffs: vec![E::one()] })
}

#[derive(Clone, Debug)]
pub struct EigenSpace {
    /// the eigenvalue is the quantum integer `[index]`
    pub index: i64,
    pub multiplicity: usize,
    pub vectors: Vec<(Epsilon, RepVector)>,
    /// every vector was checked against B exactly
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub struct EigenReport {
    pub n: usize,
    pub spaces: Vec<EigenSpace>,
    /// rank of all eigenvectors together, mod p
    pub rank: usize,
}

impl EigenReport {
    pub fn complete(&self) -> bool {
        self.rank == 1 << self.n && self.spaces.iter().all(|s| s.verified)
    }

    pub fn to_json(&self, with_vectors: bool) -> Value {
        let spaces: Vec<Value> = self
            .spaces
            .iter()
            .map(|s| {
                let mut v = json!({
                    "eigenvalue": s.index,
                    "multiplicity": s.multiplicity,
                    "labels": s.vectors.iter().map(|(e, _)| e.to_string()).collect::<Vec<_>>(),
                    "verified": s.verified,
                });
                if with_vectors {
                    v["vectors"] = s.vectors.iter().map(|(_, x)| x.to_json()).collect();
                }
                v
            })
            .collect();
        json!({"n": self.n, "rank": self.rank, "spaces": spaces})
    }
}

pub fn eigen_decomposition(n: usize) -> Result<EigenReport> {
    check_n(n, DEFAULT_MAX_N)?;
    let b = generator_operator(RepGenerator::B, n)?;
    let mut by_index: HashMap<i64, Vec<(Epsilon, RepVector)>> = HashMap::new();
    for eps in Epsilon::all(n) {
        let v = eigenvector::<RationalFunction>(&eps);
        by_index.entry(eps.weight()).or_default().push((eps, v));
    }
    let mut spaces: Vec<EigenSpace> = by_index
        .into_iter()
        .map(|(index, vectors)| {
            let lambda = RationalFunction::from_laurent(quantum_integer(index));
            let verified = vectors.iter().all(|(_, v)| b.apply(v) == v.scale(&lambda));
            EigenSpace { index, multiplicity: vectors.len(), vectors, verified }
        })
        .collect();
    spaces.sort_by(|a, b| b.index.cmp(&a.index));
    let rows = Epsilon::all(n)
        .iter()
        .map(|e| eigenvector::<Fp>(e).coeffs.iter().map(|c| c.0).collect())
        .collect();
    Ok(EigenReport { n, spaces, rank: modp::rank(rows) })
}

/// Projectors whose images are checked against eigenvectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImageKind {
    BPlus,
    BMinus,
    D,
    E(Epsilon),
}

impl ImageKind {
    pub fn projector(&self, n: usize) -> Result<RatElement> {
        match self {
            ImageKind::BPlus => jw_type_b(n, Sign::Plus),
            ImageKind::BMinus => jw_type_b(n, Sign::Minus),
            ImageKind::D => jw_type_d(n),
            ImageKind::E(eps) => {
                if eps.len() != n {
                    return invalid(format!("sign sequence {eps} has length {}, expected {n}", eps.len()));
                }
                higher_projector(eps, Family::B)
            }
        }
    }

    /// Sign sequences whose eigenvectors should span the image.
    pub fn labels(&self, n: usize) -> Vec<Epsilon> {
        let constant = |v: i64| Epsilon::new(&vec![v; n]).expect("signs are valid");
        match self {
            ImageKind::BPlus => vec![constant(1)],
            ImageKind::BMinus => vec![constant(-1)],
            ImageKind::D => vec![constant(1), constant(-1)],
            ImageKind::E(eps) => vec![eps.clone()],
        }
    }
}

impl FromStr for ImageKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "b+" => Ok(ImageKind::BPlus),
            "b-" => Ok(ImageKind::BMinus),
            "d" => Ok(ImageKind::D),
            _ => {
                let inner = s
                    .strip_prefix("e(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("e:"))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown projector kind {s:?}")))?;
                Ok(ImageKind::E(inner.parse()?))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ImageReport {
    pub n: usize,
    pub rank: usize,
    pub idempotent: bool,
    pub labels: Vec<Epsilon>,
    /// each labelled eigenvector is fixed by the projector
    pub fixes_labels: bool,
}

impl ImageReport {
    pub fn holds(&self) -> bool {
        self.idempotent && self.fixes_labels && self.rank == self.labels.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "rank": self.rank,
            "idempotent": self.idempotent,
            "image": self.labels.iter().map(|e| eigenvector::<RationalFunction>(e).to_json()).collect::<Vec<_>>(),
            "labels": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "holds": self.holds(),
        })
    }
}

pub fn projector_image_check(kind: &ImageKind, n: usize) -> Result<ImageReport> {
    check_n(n, DEFAULT_MAX_N)?;
    let p = element_to_operator(&kind.projector(n)?)?;
    let labels = kind.labels(n);
    let fixes_labels = labels.iter().all(|e| {
        let v = eigenvector(e);
        p.apply(&v) == v
    });
    Ok(ImageReport { n, rank: p.rank(), idempotent: p.compose(&p) == p, labels, fixes_labels })
}

/// Rank of the span of all diagram operators, mod p.
pub fn schur_weyl_rank(n: usize) -> Result<usize> {
    schur_weyl_rank_capped(n, DEFAULT_MAX_N)
}

pub fn schur_weyl_rank_capped(n: usize, cap: usize) -> Result<usize> {
    check_n(n, cap)?;
    let ops = diagram_operators::<Fp>(n)?;
    Ok(modp::rank(ops.values().map(RepOperator::flat_residues).collect()))
}

/// Whether every diagram operator commutes exactly with B.
pub fn commutes_with_coideal(n: usize) -> Result<bool> {
    check_n(n, DEFAULT_MAX_N)?;
    let b = generator_sparse::<RationalFunction>(RepGenerator::B, n)?;
    let ops = diagram_operators::<RationalFunction>(n)?;
    Ok(ops.values().all(|m| b.left_mul(m) == b.right_mul(m)))
}

/// Dimension of the space of operators commuting with B, mod p.
pub fn commutant_dimension(n: usize) -> Result<usize> {
    check_n(n, DEFAULT_MAX_N)?;
    let b = generator_operator_in::<Fp>(RepGenerator::B, n)?;
    let d = 1 << n;
    // unknown X[i][j] at column i*d + j; equation (XB - BX)[i][j] = 0
    let mut rows = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut row = vec![0u64; d * d];
            for k in 0..d {
                let bkj = b.rows[k][j].0;
                if bkj != 0 {
                    row[i * d + k] = modp::add(row[i * d + k], bkj);
                }
                let bik = b.rows[i][k].0;
                if bik != 0 {
                    row[k * d + j] = modp::sub(row[k * d + j], bik);
                }
            }
            rows.push(row);
        }
    }
    Ok(d * d - modp::rank(rows))
}

/// The type I coevaluation vector `x y - q y x`.
pub fn cup_vector() -> RepVector {
    let mut v = RepVector::zero(2);
    v.coeffs[0b01] = RationalFunction::one();
    v.coeffs[0b10] = -RationalFunction::from_laurent(LaurentPoly::q());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(g: RepGenerator, n: usize) -> RepOperator {
        generator_operator(g, n).unwrap()
    }

    fn q(k: i64) -> RationalFunction {
        qpow(k)
    }

    #[test]
    fn b_flips_on_v() {
        let b = op(RepGenerator::B, 1);
        assert_eq!(b.apply(&RepVector::basis(1, 0)), RepVector::basis(1, 1));
        assert_eq!(b.apply(&RepVector::basis(1, 1)), RepVector::basis(1, 0));
    }

    #[test]
    fn h_is_shifted_u() {
        for n in 2..=3 {
            for i in 1..n {
                let h = op(RepGenerator::H(i), n);
                let u = op(RepGenerator::U(i), n);
                let want = RepOperator::identity(n).scale(&q(-1)).sub(&u);
                assert_eq!(h, want);
            }
        }
        let h = op(RepGenerator::H(1), 2);
        assert_eq!(h.apply(&RepVector::basis(2, 0)), RepVector::basis(2, 0).scale(&q(-1)));
    }

    #[test]
    fn c_is_scalar() {
        assert_eq!(op(RepGenerator::C, 3), RepOperator::identity(3).scale(&q(3)));
    }

    #[test]
    fn hecke_relations() {
        let id = RepOperator::identity(3);
        let h0 = op(RepGenerator::S0, 3);
        let h1 = op(RepGenerator::H(1), 3);
        let h2 = op(RepGenerator::H(2), 3);
        for h in [&h1, &h2] {
            let quad = h.sub(&id.scale(&q(-1))).compose(&h.add(&id.scale(&q(1))));
            assert!(quad.is_zero());
        }
        let lhs = h0.compose(&h1).compose(&h0).compose(&h1);
        let rhs = h1.compose(&h0).compose(&h1).compose(&h0);
        assert_eq!(lhs, rhs);
        assert_eq!(h1.compose(&h2).compose(&h1), h2.compose(&h1).compose(&h2));
    }

    #[test]
    fn rho_is_multiplicative() {
        for n in 1..=3 {
            let basis = enumerate_basis(n, Family::B).unwrap();
            let ops = diagram_operators::<RationalFunction>(n).unwrap();
            for a in &basis {
                for b in &basis {
                    let x = RatElement::from_diagram(a.clone());
                    let y = RatElement::from_diagram(b.clone());
                    let prod = element_to_operator(&x.checked_mul(&y).unwrap()).unwrap();
                    assert_eq!(prod, ops[a].compose(&ops[b]), "{a} * {b}");
                }
            }
        }
    }

    #[test]
    fn u_relations() {
        let u = element_to_operator(&RatElement::u(1, 2).unwrap()).unwrap();
        let s = element_to_operator(&RatElement::s0(2).unwrap()).unwrap();
        assert!(u.compose(&s).compose(&u).is_zero());
        let two = RationalFunction::from_laurent(quantum_integer(2));
        assert_eq!(u.compose(&u), u.scale(&two));
        assert_eq!(u.rank(), 1);
        assert_eq!(element_to_operator(&RatElement::one(2)).unwrap(), RepOperator::identity(2));
    }

    #[test]
    fn eigen_small() {
        let r = eigen_decomposition(1).unwrap();
        assert!(r.complete());
        assert_eq!(r.spaces[0].vectors[0].1, RepVector::pair(RationalFunction::one()));
        let r = eigen_decomposition(2).unwrap();
        assert!(r.complete());
        let top = &r.spaces[0];
        assert_eq!(top.index, 2);
        let mut want = RepVector::zero(2);
        want.coeffs = vec![RationalFunction::one(), q(1), RationalFunction::one(), q(1)];
        assert_eq!(top.vectors[0].1, want);
        let r = eigen_decomposition(3).unwrap();
        let mult: Vec<_> = r.spaces.iter().map(|s| (s.index, s.multiplicity)).collect();
        assert_eq!(mult, vec![(3, 1), (1, 3), (-1, 3), (-3, 1)]);
        assert!(r.complete());
    }

    #[test]
    fn images() {
        let r = projector_image_check(&ImageKind::BPlus, 3).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(projector_image_check(&ImageKind::BMinus, 2).unwrap().holds());
        let r = projector_image_check(&ImageKind::D, 2).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.holds());
        let r = projector_image_check(&"e(1,-1)".parse().unwrap(), 2).unwrap();
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn faithful() {
        assert_eq!(schur_weyl_rank(1).unwrap(), 2);
        assert_eq!(schur_weyl_rank(2).unwrap(), 6);
        assert_eq!(schur_weyl_rank(3).unwrap(), 20);
        assert_eq!(commutant_dimension(2).unwrap(), 6);
        assert_eq!(commutant_dimension(3).unwrap(), 20);
        assert!(commutes_with_coideal(3).unwrap());
    }

    #[test]
    fn cup_is_killed() {
        assert!(op(RepGenerator::B, 2).apply(&cup_vector()).is_zero());
    }
}
