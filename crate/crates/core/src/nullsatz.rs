//! Root-or-certificate decisions for polynomial systems.
//!
//! Over `R` the Macaulay system at the degree bound is solved and a root is
//! read off the solution; when some truncation has no solution, the dual
//! witness of the linear alternative is unpacked into an algebraic
//! combination that certifies the absence of roots.
//!
//! Over `R∞` the theoretical bound is far beyond desk scale, so the driver
//! climbs through truncations up to a column budget, trying extraction along
//! the way, and finishes with an exact enumeration of the `∞`-patterns of a
//! root when nothing smaller settles the question.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use crate::duality::{minplus_alternative, tropical_alternative, DualityOutcome, Flavor};
use crate::geometry::{extract_root, GeometryError};
use crate::macaulay::{
    build_macaulay_minplus, build_macaulay_tropical, column_count, degree_bound, MacaulayError, MacaulaySystem,
    Semiring,
};
use crate::poly::{
    chi_on, is_root_system, sing_set, CoeffFn, MinPlusPolynomial, Point, Polynomial, TropicalPolynomial,
};
use crate::value::{Exponent, ExtValue, Rational};

/// A system of one kind of polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System {
    pub num_vars: usize,
    pub polys: Polys,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polys {
    Tropical(Vec<TropicalPolynomial>),
    MinPlus(Vec<MinPlusPolynomial>),
}

impl System {
    pub fn tropical(num_vars: usize, polys: Vec<TropicalPolynomial>) -> Self {
        System { num_vars, polys: Polys::Tropical(polys) }
    }

    pub fn minplus(num_vars: usize, polys: Vec<MinPlusPolynomial>) -> Self {
        System { num_vars, polys: Polys::MinPlus(polys) }
    }

    pub fn len(&self) -> usize {
        match &self.polys {
            Polys::Tropical(p) => p.len(),
            Polys::MinPlus(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_minplus(&self) -> bool {
        matches!(self.polys, Polys::MinPlus(_))
    }

    pub fn degrees(&self) -> Vec<u64> {
        match &self.polys {
            Polys::Tropical(p) => p.iter().map(|f| f.degree()).collect(),
            Polys::MinPlus(p) => p.iter().map(|f| f.degree()).collect(),
        }
    }

    pub fn is_root(&self, a: &[ExtValue]) -> bool {
        if a.len() != self.num_vars {
            return false;
        }
        match &self.polys {
            Polys::Tropical(p) => is_root_system(p, a).unwrap_or(false),
            Polys::MinPlus(p) => is_root_system(p, a).unwrap_or(false),
        }
    }
}

/// One shifted copy `coef ⊙ x^shift ⊙ f_poly` in a combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub poly: usize,
    pub shift: Exponent,
    pub coef: Rational,
    /// For min-plus pairs: the copy enters as `(g, f)` instead of `(f, g)`.
    pub swapped: bool,
}

/// A tropical combination in which every monomial has a unique cheapest part,
/// and different monomials have different cheapest parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonsingularCombination {
    pub semiring: Semiring,
    pub degree: u64,
    pub parts: Vec<Part>,
    /// Each monomial of the sum and the index (into `parts`) attaining it.
    pub witness: Vec<(Exponent, usize)>,
}

/// A min-plus combination `(f, g)` with every coefficient of `f` strictly
/// above the corresponding coefficient of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatedCombination {
    pub semiring: Semiring,
    pub degree: u64,
    pub parts: Vec<Part>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Nonsingular(NonsingularCombination),
    Dominated(DominatedCombination),
}

impl Certificate {
    pub fn parts(&self) -> &[Part] {
        match self {
            Certificate::Nonsingular(c) => &c.parts,
            Certificate::Dominated(c) => &c.parts,
        }
    }

    pub fn degree(&self) -> u64 {
        match self {
            Certificate::Nonsingular(c) => c.degree,
            Certificate::Dominated(c) => c.degree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Root(Point),
    /// No root; the certificate is absent only when the answer came from the
    /// exhaustive pattern search over `R∞`.
    NoRoot(Option<Certificate>),
}

impl Decision {
    pub fn has_root(&self) -> bool {
        matches!(self, Decision::Root(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NullsatzError {
    Macaulay(MacaulayError),
    Extraction(GeometryError),
    /// A restricted root failed verification.
    Restriction {
        point: Point,
    },
    /// The input has no polynomial with a finite constant term.
    NoFiniteConstant,
    Overflow,
    /// A certificate was requested for a system that has a root.
    HasRoot(Point),
    /// No certificate exists within the column budget.
    BeyondBudget {
        columns: u128,
    },
}

impl fmt::Display for NullsatzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NullsatzError::Macaulay(e) => write!(f, "macaulay: {e}"),
            NullsatzError::Extraction(e) => write!(f, "root extraction: {e}"),
            NullsatzError::Restriction { point } => write!(f, "restricted point {point:?} is not a root"),
            NullsatzError::NoFiniteConstant => f.write_str("no polynomial has a finite constant term"),
            NullsatzError::Overflow => f.write_str("construction constants overflow"),
            NullsatzError::HasRoot(_) => f.write_str("the system has a root"),
            NullsatzError::BeyondBudget { columns } => write!(f, "no certificate within {columns} columns"),
        }
    }
}

impl core::error::Error for NullsatzError {}

impl From<MacaulayError> for NullsatzError {
    fn from(e: MacaulayError) -> Self {
        NullsatzError::Macaulay(e)
    }
}

/// Limits for the `R∞` driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest Macaulay column count tried before the pattern search.
    pub max_columns: u128,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_columns: 600 }
    }
}

/// Polynomials with a Macaulay construction.
pub trait Kind: Polynomial {
    fn macaulay(f: &[Self], max_degree: u64) -> Result<MacaulaySystem, MacaulayError>;
}

impl Kind for TropicalPolynomial {
    fn macaulay(f: &[Self], max_degree: u64) -> Result<MacaulaySystem, MacaulayError> {
        build_macaulay_tropical(f, max_degree)
    }
}

impl Kind for MinPlusPolynomial {
    fn macaulay(f: &[Self], max_degree: u64) -> Result<MacaulaySystem, MacaulayError> {
        build_macaulay_minplus(f, max_degree)
    }
}

enum Solved {
    Solution(Point),
    Dual(Point),
}

/// Solves `M ⊙ y` (or `Ml ⊙ y = Mr ⊙ y`) with `y` finite on `s`.
fn solve_macaulay(m: &MacaulaySystem, s: &[usize]) -> Solved {
    let out = match &m.rhs {
        None => tropical_alternative(&m.lhs, s, Flavor::FinAll),
        Some(r) => minplus_alternative(&m.lhs.vstack(r), &r.vstack(&m.lhs), s, Flavor::FinAll),
    };
    match out {
        DualityOutcome::Primal(y) => Solved::Solution(y),
        DualityOutcome::Dual(z) => Solved::Dual(z),
    }
}

/// Decides `M_N` with the finiteness set of the semiring: every column over
/// `R`, the constant column over `R∞`.
pub fn macaulay_outcome(m: &MacaulaySystem, semiring: Semiring) -> DualityOutcome {
    let s: Vec<usize> = match semiring {
        Semiring::R => (0..m.index.len()).collect(),
        Semiring::RInf => vec![m.constant_column()],
    };
    match solve_macaulay(m, &s) {
        Solved::Solution(y) => DualityOutcome::Primal(y),
        Solved::Dual(z) => DualityOutcome::Dual(z),
    }
}

fn certificate_from_dual<P: Polynomial>(
    m: &MacaulaySystem,
    z: &[ExtValue],
    kept: &[usize],
    all: &[P],
    semiring: Semiring,
    degree: u64,
) -> Certificate {
    let rows = m.rows.len();
    let mut parts = Vec::new();
    for (r, v) in z.iter().enumerate() {
        let Some(c) = v.finite() else { continue };
        let label = &m.rows[r % rows];
        parts.push(Part { poly: kept[label.poly], shift: label.shift.clone(), coef: c.clone(), swapped: r >= rows });
    }
    if m.is_minplus() {
        Certificate::Dominated(DominatedCombination { semiring, degree, parts })
    } else {
        let phis: Vec<CoeffFn> =
            all.iter().map(|p| p.colored().into_iter().map(|(e, (c, _))| (e, c)).collect()).collect();
        let witness = nonsingular_witness(&phis, &parts).unwrap_or_default();
        Certificate::Nonsingular(NonsingularCombination { semiring, degree, parts, witness })
    }
}

fn nonempty<P: Polynomial>(f: &[P]) -> Vec<usize> {
    (0..f.len()).filter(|&i| f[i].monomial_count() > 0).collect()
}

fn pick<P: Clone>(f: &[P], idx: &[usize]) -> Vec<P> {
    idx.iter().map(|&i| f[i].clone()).collect()
}

fn max_degree<P: Polynomial>(f: &[P]) -> u64 {
    f.iter().map(|p| p.degree()).max().unwrap_or(0)
}

/// Decides whether the system has a root with all coordinates finite.
pub fn decide_dual_r(f: &System) -> Result<Decision, NullsatzError> {
    match &f.polys {
        Polys::Tropical(p) => decide_r(p, f.num_vars),
        Polys::MinPlus(p) => decide_r(p, f.num_vars),
    }
}

/// Decides whether the system has a root in `Q ∪ {∞}`.
pub fn decide_dual_rinf(f: &System, opts: &Options) -> Result<Decision, NullsatzError> {
    match &f.polys {
        Polys::Tropical(p) => decide_rinf(p, f.num_vars, opts),
        Polys::MinPlus(p) => decide_rinf(p, f.num_vars, opts),
    }
}

pub fn decide(f: &System, semiring: Semiring, opts: &Options) -> Result<Decision, NullsatzError> {
    match semiring {
        Semiring::R => decide_dual_r(f),
        Semiring::RInf => decide_dual_rinf(f, opts),
    }
}

fn decide_r<P: Kind>(f: &[P], n: usize) -> Result<Decision, NullsatzError> {
    let kept = nonempty(f);
    if kept.is_empty() {
        return Ok(Decision::Root(vec![ExtValue::zero(); n]));
    }
    let sys = pick(f, &kept);
    let degrees: Vec<u64> = sys.iter().map(|p| p.degree()).collect();
    let bound = degree_bound(Semiring::R, n, &degrees)?;
    let mut big_n = max_degree(&sys).min(bound);
    loop {
        let m = P::macaulay(&sys, big_n)?;
        let all: Vec<usize> = (0..m.index.len()).collect();
        log::debug!("R: N = {big_n}, {} x {}", m.rows.len(), m.index.len());
        match solve_macaulay(&m, &all) {
            Solved::Dual(z) => {
                return Ok(Decision::NoRoot(Some(certificate_from_dual(&m, &z, &kept, f, Semiring::R, big_n))));
            }
            Solved::Solution(y) if big_n == bound => {
                let root = extract_root(&sys, &m.index, &y).map_err(NullsatzError::Extraction)?;
                return Ok(Decision::Root(root));
            }
            Solved::Solution(_) => big_n = (big_n * 2).max(1).min(bound),
        }
    }
}

fn restrict<P: Polynomial>(f: &[P], vars: &[usize], n: usize) -> Vec<P> {
    let mut keep = vec![false; n];
    for &j in vars {
        keep[j] = true;
    }
    f.iter().map(|p| p.restrict_support(&keep).project_vars(vars)).collect()
}

fn lift(b: &[ExtValue], vars: &[usize], n: usize) -> Point {
    let mut out = vec![ExtValue::Infinity; n];
    for (k, &j) in vars.iter().enumerate() {
        out[j] = b[k].clone();
    }
    out
}

fn decide_rinf<P: Kind>(f: &[P], n: usize, opts: &Options) -> Result<Decision, NullsatzError> {
    let kept = nonempty(f);
    if kept.iter().all(|&i| f[i].constant_term().is_infinite()) {
        // Every remaining polynomial is `∞` at the all-`∞` point.
        return Ok(Decision::Root(vec![ExtValue::Infinity; n]));
    }
    let sys = pick(f, &kept);
    let degrees: Vec<u64> = sys.iter().map(|p| p.degree()).collect();
    let bound_r = degree_bound(Semiring::R, n, &degrees)?;
    let bound_inf = degree_bound(Semiring::RInf, n, &degrees).unwrap_or(u64::MAX);
    let mut tried: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut big_n = max_degree(&sys);
    while column_count(n, big_n) <= opts.max_columns {
        let m = P::macaulay(&sys, big_n)?;
        log::debug!("R∞: N = {big_n}, {} x {}", m.rows.len(), m.index.len());
        match solve_macaulay(&m, &[m.constant_column()]) {
            Solved::Dual(z) => {
                return Ok(Decision::NoRoot(Some(certificate_from_dual(&m, &z, &kept, f, Semiring::RInf, big_n))));
            }
            Solved::Solution(y) => {
                if big_n >= bound_r {
                    match extract_root(&sys, &m.index, &y) {
                        Ok(root) => return Ok(Decision::Root(root)),
                        Err(e) => log::debug!("R∞: no extraction at N = {big_n}: {e}"),
                    }
                }
                let mut support = vec![false; n];
                for (col, e) in m.index.exponents().iter().enumerate() {
                    if y[col].is_finite() {
                        for j in e.support() {
                            support[j] = true;
                        }
                    }
                }
                let vars: Vec<usize> = (0..n).filter(|&j| support[j]).collect();
                if vars.len() < n && tried.insert(vars.clone()) {
                    let restricted = restrict(&sys, &vars, n);
                    if let Decision::Root(b) = decide_rinf(&restricted, vars.len(), opts)? {
                        let point = lift(&b, &vars, n);
                        if is_root_system(f, &point).unwrap_or(false) {
                            return Ok(Decision::Root(point));
                        }
                    }
                }
                if big_n == bound_inf {
                    if let Some(point) = f_prime_route(&sys, n, opts)? {
                        return Ok(Decision::Root(point));
                    }
                    break;
                }
            }
        }
        if big_n == bound_inf {
            break;
        }
        big_n = big_n.saturating_mul(2).max(1).min(bound_inf);
    }
    pattern_search(&sys, n)
}

/// Tries every set of finite coordinates, largest first, deciding the
/// restricted system over `R`.
fn pattern_search<P: Kind>(sys: &[P], n: usize) -> Result<Decision, NullsatzError> {
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
    for mask in masks {
        let vars: Vec<usize> = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
        let restricted = restrict(sys, &vars, n);
        if let Decision::Root(b) = decide_r(&restricted, vars.len())? {
            let point = lift(&b, &vars, n);
            if !is_root_system(sys, &point).unwrap_or(false) {
                return Err(NullsatzError::Restriction { point });
            }
            return Ok(Decision::Root(point));
        }
    }
    Ok(Decision::NoRoot(None))
}

/// Where a polynomial of the finite-constant system came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// The base polynomial (input index).
    Base(usize),
    /// `f₁ ⊕ g_{i1} ⊕ … ⊕ g_{in}` for input index `i`.
    Sum(usize),
    /// The same with the `j`-th component lowered by one.
    Lowered(usize, usize),
}

/// A system in which every polynomial has a finite constant term and whose
/// roots restrict to roots of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPrimeSystem<P> {
    pub polys: Vec<P>,
    pub provenance: Vec<Provenance>,
    /// Input index of the base polynomial.
    pub first: usize,
    pub delta: Rational,
    pub c: Rational,
    pub alpha: u32,
    pub d: u64,
    pub k_count: usize,
    pub d_prime: u64,
}

fn normalized<P: Polynomial>(p: &P) -> P {
    let n = p.num_vars();
    match p.colored().values().map(|(c, _)| c).min() {
        Some(m) => p.mul_monomial(&-m.clone(), &Exponent::zero(n)),
        None => p.clone(),
    }
}

/// Builds the finite-constant system around the first polynomial with a
/// finite constant term. `Δ` and `d` are floored at 1.
pub fn build_f_prime<P: Polynomial>(f: &[P]) -> Result<FPrimeSystem<P>, NullsatzError> {
    let first = f.iter().position(|p| p.constant_term().is_finite()).ok_or(NullsatzError::NoFiniteConstant)?;
    let n = f[first].num_vars();
    let k = f.len();
    let norm: Vec<P> = f.iter().map(normalized).collect();
    let delta = norm
        .iter()
        .flat_map(|p| p.colored().into_values().map(|(c, _)| c))
        .max()
        .filter(|d| *d >= Rational::one())
        .unwrap_or_else(Rational::one);
    let d = max_degree(f).max(1);
    let m = n.min(k) as u32;
    let base = d.checked_mul(4).ok_or(NullsatzError::Overflow)?;
    let alpha64 = base.checked_pow(m + 2).ok_or(NullsatzError::Overflow)?;
    let alpha = u32::try_from(alpha64).map_err(|_| NullsatzError::Overflow)?;
    let scale = base.checked_pow(2 * m + 2).ok_or(NullsatzError::Overflow)?;
    let c = Rational::from_integer(2.into()) * &delta * Rational::from_integer(scale.into());
    let f1 = norm[first].clone();
    let component = |i: usize, j: usize, extra: bool| {
        let mut shift = Exponent::zero(n);
        shift.0[j] = alpha;
        let coef = if extra { -&c - Rational::one() } else { -c.clone() };
        norm[i].mul_monomial(&coef, &shift)
    };
    let others: Vec<usize> = (0..k).filter(|&i| i != first).collect();
    let mut polys = vec![f1.clone()];
    let mut provenance = vec![Provenance::Base(first)];
    for &i in &others {
        let mut s = f1.clone();
        for j in 0..n {
            s = s.oplus(&component(i, j, false));
        }
        polys.push(s);
        provenance.push(Provenance::Sum(i));
    }
    for &i in &others {
        for j in 0..n {
            let mut s = f1.clone();
            for jj in 0..n {
                s = s.oplus(&component(i, jj, jj == j));
            }
            polys.push(s);
            provenance.push(Provenance::Lowered(i, j));
        }
    }
    let k_count = polys.len();
    Ok(FPrimeSystem { polys, provenance, first, delta, c, alpha, d, k_count, d_prime: alpha64 + max_degree(f) })
}

/// Outcome of turning a finite root of the finite-constant system into a
/// point over `R∞` for the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictReport {
    pub point: Point,
    /// The coordinate sets `S_0 ⊆ S_1 ⊆ …`.
    pub sets: Vec<Vec<usize>>,
    /// Whether every large negative `b_j` in some `S_l` was matched by a large
    /// positive one, as the construction predicts.
    pub claim_holds: bool,
    pub verified: bool,
}

fn domain<P: Polynomial>(p: &P) -> CoeffFn {
    p.colored().into_iter().map(|(e, (c, _))| (e, c)).collect()
}

/// Keeps the coordinates that the singular sets force to stay finite and
/// sends the others to `∞`.
///
/// `root` is a finite root of the finite-constant system; with `b = −root`,
/// `S_0` is the support of `Sing(χ_b, φ_first)`, and `S_l` grows by the
/// support of `Sing(χ_b, φ_i)` for the first `i` whose singular set leaves
/// `S_l` while its domain meets it.
pub fn infinity_restrict<P: Polynomial>(
    f: &[P],
    first: usize,
    root: &[Rational],
    delta: &Rational,
    d: u64,
) -> RestrictReport {
    let n = root.len();
    let phis: Vec<CoeffFn> = f.iter().map(domain).collect();
    let sing: Vec<Vec<Exponent>> = phis.iter().map(|phi| sing_set(&chi_on(root, phi.keys()), phi).points).collect();
    let within = |e: &Exponent, s: &[bool]| e.support().all(|j| s[j]);
    let mut set = vec![false; n];
    for e in &sing[first] {
        for j in e.support() {
            set[j] = true;
        }
    }
    let as_list = |s: &[bool]| (0..n).filter(|&j| s[j]).collect::<Vec<usize>>();
    let mut sets = vec![as_list(&set)];
    loop {
        let next = (0..f.len()).find(|&i| {
            let inside = sing[i].iter().filter(|e| within(e, &set)).count();
            sing[i].len() > inside && phis[i].keys().any(|e| within(e, &set))
        });
        let Some(i) = next else { break };
        for e in &sing[i] {
            for j in e.support() {
                set[j] = true;
            }
        }
        sets.push(as_list(&set));
    }
    let b: Vec<Rational> = root.iter().map(|r| -r.clone()).collect();
    let four_d = Rational::from_integer((4 * d.max(1)).into());
    let mut claim_holds = true;
    let mut pow = Rational::one();
    for s in &sets {
        let threshold = -Rational::from_integer(2.into()) * delta * &pow;
        let next_pow = &pow * &four_d;
        for &j in s {
            if b[j] <= threshold {
                let need = b[j].abs() / &next_pow;
                if !s.iter().any(|&jj| b[jj] >= need) {
                    claim_holds = false;
                }
            }
        }
        pow = next_pow;
    }
    let point: Point =
        (0..n).map(|j| if set[j] { ExtValue::Finite(root[j].clone()) } else { ExtValue::Infinity }).collect();
    let verified = is_root_system(f, &point).unwrap_or(false);
    RestrictReport { point, sets, claim_holds, verified }
}

/// Builds the finite-constant system, finds a finite root of it at the
/// bound `(n+2)·K·d′`, and restricts it. `None` when the Macaulay matrix
/// exceeds the column budget or has no solution.
fn f_prime_route<P: Kind>(sys: &[P], n: usize, opts: &Options) -> Result<Option<Point>, NullsatzError> {
    let fp = build_f_prime(sys)?;
    let big_n = (n as u64 + 2)
        .checked_mul(fp.k_count as u64)
        .and_then(|v| v.checked_mul(fp.d_prime))
        .ok_or(NullsatzError::Overflow)?;
    if column_count(n, big_n) > opts.max_columns {
        log::info!("finite-constant system needs N = {big_n}, over the column budget");
        return Ok(None);
    }
    let m = P::macaulay(&fp.polys, big_n)?;
    let all: Vec<usize> = (0..m.index.len()).collect();
    let Solved::Solution(y) = solve_macaulay(&m, &all) else { return Ok(None) };
    let b = extract_root(&fp.polys, &m.index, &y).map_err(NullsatzError::Extraction)?;
    let root: Vec<Rational> = b.iter().map(|v| v.finite().expect("finite root").clone()).collect();
    let report = infinity_restrict(sys, fp.first, &root, &fp.delta, fp.d);
    if !report.verified {
        return Err(NullsatzError::Restriction { point: report.point });
    }
    Ok(Some(report.point))
}

/// The finite-constant route on its own: a root over `R∞`, or `None`.
pub fn decide_via_f_prime(f: &System, opts: &Options) -> Result<Option<Point>, NullsatzError> {
    match &f.polys {
        Polys::Tropical(p) => f_prime_route(&pick(p, &nonempty(p)), f.num_vars, opts),
        Polys::MinPlus(p) => f_prime_route(&pick(p, &nonempty(p)), f.num_vars, opts),
    }
}

/// A certificate of no root: the dual witness of the first unsolvable truncation.
pub fn extract_primary(f: &System, semiring: Semiring, opts: &Options) -> Result<Certificate, NullsatzError> {
    match decide(f, semiring, opts)? {
        Decision::NoRoot(Some(c)) => Ok(c),
        Decision::NoRoot(None) => Err(NullsatzError::BeyondBudget { columns: opts.max_columns }),
        Decision::Root(p) => Err(NullsatzError::HasRoot(p)),
    }
}

fn shifted<'a>(phi: &'a CoeffFn, part: &Part) -> impl Iterator<Item = (Exponent, Rational)> + 'a {
    let coef = part.coef.clone();
    let shift = part.shift.clone();
    phi.iter().map(move |(e, c)| (e.add(&shift), c + &coef))
}

/// The monomial-to-part map of a tropical combination, when every monomial
/// has a unique cheapest part.
fn nonsingular_witness(phis: &[CoeffFn], parts: &[Part]) -> Option<Vec<(Exponent, usize)>> {
    let mut best: BTreeMap<Exponent, (Rational, Vec<usize>)> = BTreeMap::new();
    for (k, part) in parts.iter().enumerate() {
        for (e, v) in shifted(phis.get(part.poly)?, part) {
            match best.get_mut(&e) {
                Some((b, who)) if v < *b => {
                    *b = v;
                    *who = vec![k];
                }
                Some((b, who)) if v == *b => who.push(k),
                Some(_) => {}
                None => {
                    best.insert(e, (v, vec![k]));
                }
            }
        }
    }
    best.into_iter().map(|(e, (_, who))| (who.len() == 1).then(|| (e, who[0]))).collect()
}

fn applicable_bound(f: &System, semiring: Semiring) -> u64 {
    let degrees: Vec<u64> = match &f.polys {
        Polys::Tropical(p) => nonempty(p).iter().map(|&i| p[i].degree()).collect(),
        Polys::MinPlus(p) => nonempty(p).iter().map(|&i| p[i].degree()).collect(),
    };
    degree_bound(semiring, f.num_vars, &degrees).unwrap_or(u64::MAX)
}

/// Recomputes the combination from `f` and checks every condition.
pub fn verify_primary(f: &System, cert: &Certificate) -> bool {
    let parts = cert.parts();
    if parts.is_empty() || cert.degree() > applicable_bound(f, semiring_of(cert)) {
        return false;
    }
    let degrees = f.degrees();
    for p in parts {
        if p.poly >= f.len() || p.shift.dim() != f.num_vars || p.shift.degree() + degrees[p.poly] > cert.degree() {
            return false;
        }
    }
    let zero = Exponent::zero(f.num_vars);
    match (cert, &f.polys) {
        (Certificate::Nonsingular(c), Polys::Tropical(polys)) => {
            if parts.iter().any(|p| p.swapped) {
                return false;
            }
            let phis: Vec<CoeffFn> = polys.iter().map(|p| p.phi().clone()).collect();
            let Some(witness) = nonsingular_witness(&phis, parts) else { return false };
            if witness.is_empty() {
                return false;
            }
            let mut used = vec![false; parts.len()];
            for (_, k) in &witness {
                if core::mem::replace(&mut used[*k], true) {
                    return false;
                }
            }
            if c.semiring == Semiring::RInf && !witness.iter().any(|(e, _)| *e == zero) {
                return false;
            }
            c.witness.is_empty() || c.witness == witness
        }
        (Certificate::Dominated(c), Polys::MinPlus(polys)) => {
            let mut big: BTreeMap<Exponent, Rational> = BTreeMap::new();
            let mut small: BTreeMap<Exponent, Rational> = BTreeMap::new();
            for part in parts {
                let pair = &polys[part.poly];
                let (hi, lo) = if part.swapped { (&pair.rhs, &pair.lhs) } else { (&pair.lhs, &pair.rhs) };
                for (map, side) in [(&mut big, hi), (&mut small, lo)] {
                    for (e, v) in shifted(side.phi(), part) {
                        let slot = map.entry(e).or_insert_with(|| v.clone());
                        if v < *slot {
                            *slot = v;
                        }
                    }
                }
            }
            if small.is_empty() {
                return false;
            }
            if c.semiring == Semiring::RInf && !small.contains_key(&zero) {
                return false;
            }
            let dominated = big.keys().chain(small.keys()).all(|e| match (big.get(e), small.get(e)) {
                (Some(b), Some(s)) => b > s,
                (None, Some(_)) => true,
                _ => false,
            });
            dominated
        }
        _ => false,
    }
}

fn semiring_of(cert: &Certificate) -> Semiring {
    match cert {
        Certificate::Nonsingular(c) => c.semiring,
        Certificate::Dominated(c) => c.semiring,
    }
}
