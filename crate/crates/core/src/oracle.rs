//! Brute-force deciders and example generators.
//!
//! Everything here works by enumeration straight from the definitions and
//! shares no code with the game or Macaulay pipelines, so it can be used to
//! cross-check them. All routines are exponential and meant for tiny inputs.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::game::{GameGraph, Winner};
use crate::linsys::{Relation, TropMatrix};
use crate::macaulay::{vector_from_fn, MonomialIndex, Semiring};
use crate::poly::{MinPlusPolynomial, Point, TropicalPolynomial};
use crate::value::{rat, Exponent, ExtValue, Rational};

// ---------------------------------------------------------------------------
// Fourier–Motzkin

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cmp {
    /// `= 0`
    Eq,
    /// `≥ 0`
    Ge,
    /// `> 0`
    Gt,
}

/// `coeffs · x + constant ⋈ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub cmp: Cmp,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, cmp: Cmp) -> Self {
        Constraint { coeffs, constant, cmp }
    }

    /// `lhs ⋈ rhs` for affine forms given as `(coeffs, constant)`.
    pub fn compare(lhs: &Affine, cmp: Cmp, rhs: &Affine) -> Self {
        let coeffs = lhs.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect();
        Constraint { coeffs, constant: &lhs.1 - &rhs.1, cmp }
    }

    /// `lhs ≤ rhs`, `lhs < rhs` and `lhs = rhs` are the common cases.
    pub fn le(lhs: &Affine, rhs: &Affine) -> Self {
        Self::compare(rhs, Cmp::Ge, lhs)
    }

    pub fn lt(lhs: &Affine, rhs: &Affine) -> Self {
        Self::compare(rhs, Cmp::Gt, lhs)
    }

    pub fn eq(lhs: &Affine, rhs: &Affine) -> Self {
        Self::compare(lhs, Cmp::Eq, rhs)
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let v: Rational = self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum::<Rational>() + &self.constant;
        match self.cmp {
            Cmp::Eq => v.is_zero(),
            Cmp::Ge => !v.is_negative(),
            Cmp::Gt => v.is_positive(),
        }
    }

    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(p) = self.coeffs.iter().find(|c| !c.is_zero()).map(Rational::abs) {
            for c in &mut self.coeffs {
                *c /= &p;
            }
            self.constant /= &p;
        }
        self
    }
}

/// An affine form `coeffs · x + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine(pub Vec<Rational>, pub Rational);

impl Affine {
    /// The value `c + ⟨I, x⟩` of the monomial `c ⊙ x^I` at finite `x`.
    pub fn monomial(c: &Rational, e: &Exponent) -> Self {
        Affine(e.0.iter().map(|&k| rat(k as i64)).collect(), c.clone())
    }

    /// `c + x_j` for a single variable.
    pub fn var_plus(n: usize, j: usize, c: &Rational) -> Self {
        let mut v = vec![Rational::zero(); n];
        v[j] = Rational::one();
        Affine(v, c.clone())
    }
}

/// Exact feasibility of a conjunction of affine constraints over `ℚⁿ`,
/// returning a witness. Equalities are split into two `≥`.
pub fn fm_feasible(n: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    let mut current: Vec<Constraint> = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), n, "constraint dimension");
        match c.cmp {
            Cmp::Eq => {
                current.push(Constraint::new(c.coeffs.clone(), c.constant.clone(), Cmp::Ge));
                current.push(Constraint::new(c.coeffs.iter().map(|v| -v).collect(), -&c.constant, Cmp::Ge));
            }
            _ => current.push(c.clone()),
        }
    }
    current = tidy(current)?;
    let mut levels = Vec::with_capacity(n);
    for k in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in &current {
            match c.coeffs[k].partial_cmp(&Rational::zero()).expect("total order") {
                core::cmp::Ordering::Greater => pos.push(c),
                core::cmp::Ordering::Less => neg.push(c),
                core::cmp::Ordering::Equal => rest.push(c.clone()),
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (&p.coeffs[k], -&q.coeffs[k]);
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(u, v)| u * &b + v * a).collect();
                let constant = &p.constant * &b + &q.constant * a;
                let cmp = if p.cmp == Cmp::Gt || q.cmp == Cmp::Gt { Cmp::Gt } else { Cmp::Ge };
                rest.push(Constraint::new(coeffs, constant, cmp));
            }
        }
        levels.push(current);
        current = tidy(rest)?;
    }
    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        x[k] = pick(k, &levels[k], &x);
    }
    debug_assert!(constraints.iter().all(|c| c.holds_at(&x)));
    Some(x)
}

/// Drops trivial constraints (failing on a false one), normalizes and dedupes.
fn tidy(cs: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut out = BTreeSet::new();
    for c in cs {
        if c.coeffs.iter().all(Zero::is_zero) {
            let ok = match c.cmp {
                Cmp::Eq => c.constant.is_zero(),
                Cmp::Ge => !c.constant.is_negative(),
                Cmp::Gt => c.constant.is_positive(),
            };
            if !ok {
                return None;
            }
            continue;
        }
        out.insert(c.normalized());
    }
    // A strict and a weak copy of the same bound: keep the strict one.
    let strict: BTreeSet<(Vec<Rational>, Rational)> =
        out.iter().filter(|c| c.cmp == Cmp::Gt).map(|c| (c.coeffs.clone(), c.constant.clone())).collect();
    Some(
        out.into_iter()
            .filter(|c| c.cmp != Cmp::Ge || !strict.contains(&(c.coeffs.clone(), c.constant.clone())))
            .collect(),
    )
}

/// Chooses `x_k` given `x_{k+1..}` from the constraints that were live when
/// `x_k` was eliminated.
fn pick(k: usize, cs: &[Constraint], x: &[Rational]) -> Rational {
    let mut lo: Option<(Rational, bool)> = None;
    let mut hi: Option<(Rational, bool)> = None;
    for c in cs {
        let a = &c.coeffs[k];
        if a.is_zero() {
            continue;
        }
        let rest: Rational = c.coeffs.iter().zip(x).skip(k + 1).map(|(u, v)| u * v).sum::<Rational>() + &c.constant;
        let bound = -rest / a;
        let strict = c.cmp == Cmp::Gt;
        if a.is_positive() {
            if lo.as_ref().map_or(true, |(b, s)| bound > *b || (bound == *b && strict && !s)) {
                lo = Some((bound, strict));
            }
        } else if hi.as_ref().map_or(true, |(b, s)| bound < *b || (bound == *b && strict && !s)) {
            hi = Some((bound, strict));
        }
    }
    match (lo, hi) {
        (Some((l, _)), Some((h, _))) => (l + h) / rat(2),
        (Some((l, _)), None) => l + Rational::one(),
        (None, Some((h, _))) => h - Rational::one(),
        (None, None) => Rational::zero(),
    }
}

/// Depth-first search over one choice per slot, pruning with `fm_feasible`
/// on the partial constraint set.
fn search(n: usize, slots: &[Vec<Vec<Constraint>>], acc: &mut Vec<Constraint>, depth: usize) -> Option<Vec<Rational>> {
    if depth == slots.len() {
        return fm_feasible(n, acc);
    }
    for choice in &slots[depth] {
        let before = acc.len();
        acc.extend(choice.iter().cloned());
        if fm_feasible(n, acc).is_some() {
            if let Some(x) = search(n, slots, acc, depth + 1) {
                return Some(x);
            }
        }
        acc.truncate(before);
    }
    None
}

fn masks(n: usize, semiring: Semiring) -> Vec<Vec<bool>> {
    match semiring {
        Semiring::R => vec![vec![true; n]],
        // Fewest infinite coordinates first.
        Semiring::RInf => {
            let mut all: Vec<Vec<bool>> = (0u32..1 << n).map(|m| (0..n).map(|j| m >> j & 1 == 0).collect()).collect();
            all.sort_by_key(|f| f.iter().filter(|b| !**b).count());
            all
        }
    }
}

fn point_from(x: Vec<Rational>, finite: &[bool]) -> Point {
    x.into_iter().zip(finite).map(|(v, &f)| if f { ExtValue::Finite(v) } else { ExtValue::Infinity }).collect()
}

/// Monomials that survive when the variables outside `finite` are `∞`.
fn surviving(p: &TropicalPolynomial, finite: &[bool]) -> Vec<Affine> {
    p.phi().iter().filter(|(e, _)| e.support().all(|j| finite[j])).map(|(e, c)| Affine::monomial(c, e)).collect()
}

/// Choices making `terms[p] = terms[q]` the minimum of `terms`.
fn tie_choices(terms: &[Affine]) -> Vec<Vec<Constraint>> {
    let mut out = Vec::new();
    for p in 0..terms.len() {
        for q in p + 1..terms.len() {
            let mut cs = vec![Constraint::eq(&terms[p], &terms[q])];
            cs.extend((0..terms.len()).filter(|&r| r != p && r != q).map(|r| Constraint::le(&terms[p], &terms[r])));
            out.push(cs);
        }
    }
    out
}

/// Choices making `l[p] = r[q]` the minimum of both sides.
fn meet_choices(l: &[Affine], r: &[Affine]) -> Vec<Vec<Constraint>> {
    let mut out = Vec::new();
    for p in 0..l.len() {
        for q in 0..r.len() {
            let mut cs = vec![Constraint::eq(&l[p], &r[q])];
            cs.extend((0..l.len()).filter(|&s| s != p).map(|s| Constraint::le(&l[p], &l[s])));
            cs.extend((0..r.len()).filter(|&s| s != q).map(|s| Constraint::le(&r[q], &r[s])));
            out.push(cs);
        }
    }
    out
}

/// A root of a tropical system by enumeration of tying pairs.
pub fn oracle_solve_tropical(system: &[TropicalPolynomial], n: usize, semiring: Semiring) -> Option<Point> {
    'mask: for finite in masks(n, semiring) {
        let mut slots = Vec::new();
        for p in system {
            let terms = surviving(p, &finite);
            match terms.len() {
                0 => {}
                1 => continue 'mask,
                _ => slots.push(tie_choices(&terms)),
            }
        }
        if let Some(x) = search(n, &slots, &mut Vec::new(), 0) {
            return Some(point_from(x, &finite));
        }
    }
    None
}

/// A root of a min-plus system by enumeration of the minimizing monomials.
pub fn oracle_solve_minplus(system: &[MinPlusPolynomial], n: usize, semiring: Semiring) -> Option<Point> {
    'mask: for finite in masks(n, semiring) {
        let mut slots = Vec::new();
        for p in system {
            let (l, r) = (surviving(&p.lhs, &finite), surviving(&p.rhs, &finite));
            match (l.is_empty(), r.is_empty()) {
                (true, true) => {}
                (true, false) | (false, true) => continue 'mask,
                (false, false) => slots.push(meet_choices(&l, &r)),
            }
        }
        if let Some(x) = search(n, &slots, &mut Vec::new(), 0) {
            return Some(point_from(x, &finite));
        }
    }
    None
}

fn row_terms(m: &TropMatrix, i: usize, finite: &[bool]) -> Vec<Affine> {
    m.row(i).iter().filter(|(j, _)| finite[*j]).map(|(j, c)| Affine::var_plus(m.cols(), *j, c)).collect()
}

/// Solutions of `A ⊙ x ⋈ B ⊙ x` (with `∞ < ∞` accepted for `<`) whose
/// pattern of finite coordinates passes `accept`.
pub fn oracle_minplus_linear(
    lhs: &TropMatrix,
    rhs: &TropMatrix,
    relation: Relation,
    accept: &dyn Fn(&[bool]) -> bool,
) -> Option<Point> {
    assert_eq!(lhs.shape(), rhs.shape());
    let n = lhs.cols();
    'mask: for finite in masks(n, Semiring::RInf) {
        if !accept(&finite) {
            continue;
        }
        let mut slots = Vec::new();
        for i in 0..lhs.rows() {
            let (l, r) = (row_terms(lhs, i, &finite), row_terms(rhs, i, &finite));
            match relation {
                Relation::Eq => match (l.is_empty(), r.is_empty()) {
                    (true, true) => {}
                    (true, false) | (false, true) => continue 'mask,
                    (false, false) => slots.push(meet_choices(&l, &r)),
                },
                Relation::Leq | Relation::Lt => {
                    if r.is_empty() {
                        continue;
                    }
                    if l.is_empty() {
                        continue 'mask;
                    }
                    let below = |p: &Affine| {
                        r.iter()
                            .map(|q| if relation == Relation::Lt { Constraint::lt(p, q) } else { Constraint::le(p, q) })
                            .collect()
                    };
                    slots.push(l.iter().map(below).collect());
                }
            }
        }
        if let Some(x) = search(n, &slots, &mut Vec::new(), 0) {
            return Some(point_from(x, &finite));
        }
    }
    None
}

/// Solutions of the tropical linear system `A ⊙ x` whose finite pattern passes `accept`.
pub fn oracle_tropical_linear(a: &TropMatrix, accept: &dyn Fn(&[bool]) -> bool) -> Option<Point> {
    let n = a.cols();
    'mask: for finite in masks(n, Semiring::RInf) {
        if !accept(&finite) {
            continue;
        }
        let mut slots = Vec::new();
        for i in 0..a.rows() {
            let terms = row_terms(a, i, &finite);
            match terms.len() {
                0 => {}
                1 => continue 'mask,
                _ => slots.push(tie_choices(&terms)),
            }
        }
        if let Some(x) = search(n, &slots, &mut Vec::new(), 0) {
            return Some(point_from(x, &finite));
        }
    }
    None
}

/// Vectors `z` over the rows of `A` such that every row of `Aᵀ ⊙ z` is `∞` or
/// has a unique minimum, the minimizing columns are pairwise distinct, and the
/// set of finite rows passes `accept`.
pub fn oracle_tropical_dual(a: &TropMatrix, accept: &dyn Fn(&[bool]) -> bool) -> Option<Point> {
    let at = a.transpose();
    let m = a.rows();
    for finite in masks(m, Semiring::RInf) {
        let mut rows_finite = vec![false; at.rows()];
        let mut candidates = Vec::new();
        for (i, rf) in rows_finite.iter_mut().enumerate() {
            let idx: Vec<usize> = at.row(i).iter().map(|(j, _)| *j).filter(|&j| finite[j]).collect();
            *rf = !idx.is_empty();
            if *rf {
                candidates.push((i, idx));
            }
        }
        if !accept(&rows_finite) {
            continue;
        }
        let mut used = vec![false; m];
        let mut acc = Vec::new();
        if let Some(z) = dual_search(&at, &candidates, &finite, &mut used, &mut acc, 0) {
            return Some(point_from(z, &finite));
        }
    }
    None
}

fn dual_search(
    at: &TropMatrix,
    candidates: &[(usize, Vec<usize>)],
    finite: &[bool],
    used: &mut [bool],
    acc: &mut Vec<Constraint>,
    depth: usize,
) -> Option<Vec<Rational>> {
    let m = at.cols();
    if depth == candidates.len() {
        return fm_feasible(m, acc);
    }
    let (i, idx) = &candidates[depth];
    let term = |j: usize| {
        let c = at.row(*i).iter().find(|(k, _)| *k == j).expect("entry present").1.clone();
        Affine::var_plus(m, j, &c)
    };
    for &p in idx {
        if used[p] {
            continue;
        }
        let before = acc.len();
        let tp = term(p);
        acc.extend(idx.iter().filter(|&&q| q != p).map(|&q| Constraint::lt(&tp, &term(q))));
        used[p] = true;
        if fm_feasible(m, acc).is_some() {
            if let Some(z) = dual_search(at, candidates, finite, used, acc, depth + 1) {
                return Some(z);
            }
        }
        used[p] = false;
        acc.truncate(before);
    }
    None
}

// ---------------------------------------------------------------------------
// Games

/// Positional strategies: one successor index per vertex (`None` when stuck).
fn strategies(edges: &[Vec<(usize, Rational)>]) -> Vec<Vec<Option<usize>>> {
    let mut out: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    for es in edges {
        let opts: Vec<Option<usize>> = if es.is_empty() { vec![None] } else { (0..es.len()).map(Some).collect() };
        out = out
            .into_iter()
            .flat_map(|s| {
                opts.iter().map(move |&o| {
                    let mut t = s.clone();
                    t.push(o);
                    t
                })
            })
            .collect();
    }
    out
}

/// `+1` column wins, `0` draw, `−1` row wins, for the play from `start`
/// (vertex ids: rows first, then columns).
fn play(g: &GameGraph, sigma: &[Option<usize>], tau: &[Option<usize>], start: usize) -> i8 {
    let r = g.rows();
    let mut seen = vec![usize::MAX; g.vertex_count()];
    let mut path: Vec<(usize, Rational)> = Vec::new();
    let mut v = start;
    loop {
        if seen[v] != usize::MAX {
            let total: Rational = path[seen[v]..].iter().map(|(_, w)| w.clone()).sum();
            return if total.is_positive() {
                1
            } else if total.is_zero() {
                0
            } else {
                -1
            };
        }
        seen[v] = path.len();
        let (next, w) = if v < r {
            match sigma[v] {
                None => return -1,
                Some(k) => {
                    let (j, w) = &g.row_edges(v)[k];
                    (r + j, w.clone())
                }
            }
        } else {
            match tau[v - r] {
                None => return 1,
                Some(k) => {
                    let (i, w) = &g.col_edges(v - r)[k];
                    (*i, w.clone())
                }
            }
        };
        path.push((v, w));
        v = next;
    }
}

/// Winner from every vertex by enumerating positional strategy pairs.
pub fn oracle_game(g: &GameGraph) -> (Vec<Winner>, Vec<Winner>) {
    let row_adj: Vec<Vec<(usize, Rational)>> = (0..g.rows()).map(|i| g.row_edges(i).to_vec()).collect();
    let col_adj: Vec<Vec<(usize, Rational)>> = (0..g.cols()).map(|j| g.col_edges(j).to_vec()).collect();
    let sigmas = strategies(&row_adj);
    let taus = strategies(&col_adj);
    let value = |start: usize| {
        sigmas
            .iter()
            .map(|s| taus.iter().map(|t| play(g, s, t, start)).min().expect("nonempty"))
            .max()
            .expect("nonempty")
    };
    let class = |v: i8| match v {
        1 => Winner::Column,
        0 => Winner::Draw,
        _ => Winner::Row,
    };
    let rows = (0..g.rows()).map(|i| class(value(i))).collect();
    let cols = (0..g.cols()).map(|j| class(value(g.rows() + j))).collect();
    (rows, cols)
}

// ---------------------------------------------------------------------------
// Fixtures

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureError {
    UnknownName(String),
    BadParams(&'static str),
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::UnknownName(n) => write!(f, "unknown fixture {n:?}"),
            FixtureError::BadParams(m) => f.write_str(m),
        }
    }
}

impl core::error::Error for FixtureError {}

/// A named system together with the facts it is known to satisfy.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub semiring: Semiring,
    pub num_vars: usize,
    pub tropical: Vec<TropicalPolynomial>,
    /// The min-plus twin, when the family has one.
    pub minplus: Vec<MinPlusPolynomial>,
    pub has_root: Option<bool>,
    /// Degree `N` of the Macaulay system solved by `witness`.
    pub witness_degree: u64,
    /// A vector over the columns of `M_N` (graded column order) solving it.
    pub witness: Point,
    /// The witness has a finite constant coordinate.
    pub nonhomogeneous: bool,
}

pub const FIXTURE_NAMES: [&str; 4] = ["lmp", "inf_family", "stepped_pyramid", "stripes"];

pub fn generate_fixture(name: &str, params: &[u64]) -> Result<Fixture, FixtureError> {
    let nd = || match params {
        [n, d] if *n >= 2 && *d >= 2 => Ok((*n as usize, *d as u32)),
        _ => Err(FixtureError::BadParams("expected parameters n ≥ 2 and d ≥ 2")),
    };
    match name {
        "lmp" => {
            let (n, d) = nd()?;
            Ok(lmp(n, d))
        }
        "inf_family" => {
            let (n, d) = nd()?;
            Ok(inf_family(n, d))
        }
        "stepped_pyramid" => match params {
            [big_n] => Ok(stepped_pyramid(*big_n, 10)),
            [big_n, w] if *w >= 1 => Ok(stepped_pyramid(*big_n, *w)),
            _ => Err(FixtureError::BadParams("expected parameters N [ring width ≥ 1]")),
        },
        "stripes" => match params {
            [big_n] => Ok(stripes(*big_n)),
            _ => Err(FixtureError::BadParams("expected parameter N")),
        },
        other => Err(FixtureError::UnknownName(other.to_string())),
    }
}

fn mono(n: usize, c: i64, powers: &[(usize, u32)]) -> (Exponent, ExtValue) {
    let mut e = Exponent::zero(n);
    for &(j, k) in powers {
        e.0[j] += k;
    }
    (e, ExtValue::int(c))
}

fn poly(n: usize, terms: Vec<(Exponent, ExtValue)>) -> TropicalPolynomial {
    TropicalPolynomial::new(n, terms).expect("fixture polynomial")
}

fn twin(n: usize, l: (Exponent, ExtValue), r: (Exponent, ExtValue)) -> MinPlusPolynomial {
    MinPlusPolynomial::new(poly(n, vec![l]), poly(n, vec![r])).expect("same arity")
}

/// `w(x_i) = d^{i−1}` on exponent vectors.
fn weight(e: &Exponent, d: u32) -> u64 {
    e.0.iter().enumerate().map(|(i, &k)| k as u64 * (d as u64).pow(i as u32)).sum()
}

/// `0 ⊕ 0⊙x₁`, `0⊙x_i^d ⊕ 0⊙x_{i+1}`, `0 ⊕ 1⊙x_n`: no root, yet
/// `M_{(d−1)(n−1)}` is solvable.
pub fn lmp(n: usize, d: u32) -> Fixture {
    let mut tropical = vec![poly(n, vec![mono(n, 0, &[]), mono(n, 0, &[(0, 1)])])];
    let mut minplus = vec![twin(n, mono(n, 0, &[]), mono(n, 0, &[(0, 1)]))];
    for i in 0..n - 1 {
        tropical.push(poly(n, vec![mono(n, 0, &[(i, d)]), mono(n, 0, &[(i + 1, 1)])]));
        minplus.push(twin(n, mono(n, 0, &[(i, d)]), mono(n, 0, &[(i + 1, 1)])));
    }
    tropical.push(poly(n, vec![mono(n, 0, &[]), mono(n, 1, &[(n - 1, 1)])]));
    minplus.push(twin(n, mono(n, 0, &[]), mono(n, 1, &[(n - 1, 1)])));
    let big_n = (d as u64 - 1) * (n as u64 - 1);
    let top = (d as u64).pow(n as u32 - 1);
    let index = MonomialIndex::new(n, big_n);
    let witness = vector_from_fn(&index, |e| ExtValue::int(-((weight(e, d) / top) as i64)));
    Fixture {
        name: alloc::format!("lmp({n},{d})"),
        semiring: Semiring::R,
        num_vars: n,
        tropical,
        minplus,
        has_root: Some(false),
        witness_degree: big_n,
        witness,
        nonhomogeneous: true,
    }
}

/// Variables `x₁..x_n, y`: `0⊙x₁⊙y ⊕ 0`, `0⊙x_i^d ⊕ 0⊙x_{i+1}`,
/// `0⊙x_{n−1}^d ⊕ 1⊙x_n`. No root over `ℝ∞`; the non-homogeneous
/// `M_{d^{n−1}−1}` is solved by `0` on monomials whose `y`-degree equals their
/// weight and `∞` elsewhere.
pub fn inf_family(n: usize, d: u32) -> Fixture {
    let v = n + 1;
    let y = n;
    let mut tropical = vec![poly(v, vec![mono(v, 0, &[(0, 1), (y, 1)]), mono(v, 0, &[])])];
    let mut minplus = vec![twin(v, mono(v, 0, &[(0, 1), (y, 1)]), mono(v, 0, &[]))];
    for i in 0..n - 1 {
        tropical.push(poly(v, vec![mono(v, 0, &[(i, d)]), mono(v, 0, &[(i + 1, 1)])]));
        minplus.push(twin(v, mono(v, 0, &[(i, d)]), mono(v, 0, &[(i + 1, 1)])));
    }
    tropical.push(poly(v, vec![mono(v, 0, &[(n - 2, d)]), mono(v, 1, &[(n - 1, 1)])]));
    minplus.push(twin(v, mono(v, 0, &[(n - 2, d)]), mono(v, 1, &[(n - 1, 1)])));
    let big_n = (d as u64).pow(n as u32 - 1) - 1;
    let index = MonomialIndex::new(v, big_n);
    let witness = vector_from_fn(&index, |e| {
        let xs = Exponent(e.0[..n].to_vec());
        if e.0[y] as u64 == weight(&xs, d) {
            ExtValue::zero()
        } else {
            ExtValue::Infinity
        }
    });
    Fixture {
        name: alloc::format!("inf_family({n},{d})"),
        semiring: Semiring::RInf,
        num_vars: v,
        tropical,
        minplus,
        has_root: Some(false),
        witness_degree: big_n,
        witness,
        nonhomogeneous: true,
    }
}

/// The 4×4 grid polynomial with coefficient `−1` on the inner 2×2 square.
pub fn pyramid_polynomial() -> TropicalPolynomial {
    let mut terms = Vec::new();
    for i in 0..4u32 {
        for j in 0..4u32 {
            let inner = (1..=2).contains(&i) && (1..=2).contains(&j);
            terms.push((Exponent(vec![i, j]), ExtValue::int(if inner { -1 } else { 0 })));
        }
    }
    poly(2, terms)
}

/// The ring function: constant on odd rings, `−r + C` on even rings,
/// continuous, where `r = max(|x|, |y|)` and rings have the given width.
pub fn pyramid_candidate(e: &Exponent, width: u64) -> i64 {
    let r = e.0.iter().copied().max().unwrap_or(0) as u64;
    let ring = if r == 0 { 0 } else { (r - 1) / width };
    let w = width as i64;
    let full_ramps = (ring / 2) as i64;
    let h = if ring % 2 == 0 { full_ramps * w } else { full_ramps * w + (r as i64 - ring as i64 * w) };
    -h
}

/// The stepped pyramid: a single polynomial and a Macaulay solution at degree
/// `N` that is constant and affine on alternating square rings.
pub fn stepped_pyramid(big_n: u64, width: u64) -> Fixture {
    let index = MonomialIndex::new(2, big_n);
    let witness = vector_from_fn(&index, |e| ExtValue::int(pyramid_candidate(e, width)));
    Fixture {
        name: alloc::format!("stepped_pyramid({big_n},{width})"),
        semiring: Semiring::R,
        num_vars: 2,
        tropical: vec![pyramid_polynomial()],
        minplus: Vec::new(),
        has_root: Some(true),
        witness_degree: big_n,
        witness,
        nonhomogeneous: true,
    }
}

/// The prism polynomial: exponents `{0,1} × {0,1,2}`, coefficient `−1` in the middle layer.
pub fn stripes_polynomial() -> TropicalPolynomial {
    let mut terms = Vec::new();
    for i in 0..2u32 {
        for j in 0..3u32 {
            terms.push((Exponent(vec![i, j]), ExtValue::int(if j == 1 { -1 } else { 0 })));
        }
    }
    poly(2, terms)
}

/// `ψ(x, y) = y` when `⌊x/2⌋` is even and `−y` otherwise.
pub fn stripes_candidate(e: &Exponent) -> i64 {
    let (x, y) = (e.0[0] as i64, e.0[1] as i64);
    if (x / 2) % 2 == 0 {
        y
    } else {
        -y
    }
}

pub fn stripes(big_n: u64) -> Fixture {
    let index = MonomialIndex::new(2, big_n);
    let witness = vector_from_fn(&index, |e| ExtValue::int(stripes_candidate(e)));
    Fixture {
        name: alloc::format!("stripes({big_n})"),
        semiring: Semiring::R,
        num_vars: 2,
        tropical: vec![stripes_polynomial()],
        minplus: Vec::new(),
        has_root: Some(true),
        witness_degree: big_n,
        witness,
        nonhomogeneous: true,
    }
}
