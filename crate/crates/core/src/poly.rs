//! Tropical and min-plus polynomials, root predicates, coefficient functions
//! and singularity sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::value::{Exponent, ExtValue, Rational};

/// A candidate root `a ∈ K^n`.
pub type Point = Vec<ExtValue>;

/// A partial function from exponents to finite rationals (`φ`, `ψ`, `χ_a`, ...).
pub type CoeffFn = BTreeMap<Exponent, Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    DimensionMismatch { expected: usize, found: usize },
    DuplicateExponent(Exponent),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} coordinates, found {found}")
            }
            PolyError::DuplicateExponent(e) => write!(f, "exponent {e} appears twice"),
        }
    }
}

impl core::error::Error for PolyError {}

/// `min_I (c_I ⊙ x^I)`; only finite coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalPolynomial {
    num_vars: usize,
    terms: CoeffFn,
}

impl TropicalPolynomial {
    /// Builds a polynomial; `∞` coefficients are dropped.
    pub fn new<I>(num_vars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, ExtValue)>,
    {
        let mut map = CoeffFn::new();
        let mut seen = BTreeSet::new();
        for (e, c) in terms {
            if e.dim() != num_vars {
                return Err(PolyError::DimensionMismatch { expected: num_vars, found: e.dim() });
            }
            if !seen.insert(e.clone()) {
                return Err(PolyError::DuplicateExponent(e));
            }
            if let ExtValue::Finite(r) = c {
                map.insert(e, r);
            }
        }
        Ok(TropicalPolynomial { num_vars, terms: map })
    }

    /// Builds from a coefficient function directly.
    pub fn from_fn(num_vars: usize, terms: CoeffFn) -> Self {
        debug_assert!(terms.keys().all(|e| e.dim() == num_vars));
        TropicalPolynomial { num_vars, terms }
    }

    /// Convenience constructor from `(coefficient, exponent)` integer pairs.
    pub fn from_ints(num_vars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::new(num_vars, terms.iter().map(|(c, e)| (Exponent(e.to_vec()), ExtValue::int(*c))))
            .expect("well-formed literal polynomial")
    }

    /// The polynomial with no monomials, equal to `∞` everywhere.
    pub fn infinity(num_vars: usize) -> Self {
        TropicalPolynomial { num_vars, terms: CoeffFn::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// The coefficient function `φ_f`.
    pub fn phi(&self) -> &CoeffFn {
        &self.terms
    }

    pub fn coefficient(&self, e: &Exponent) -> ExtValue {
        self.terms.get(e).cloned().map_or(ExtValue::Infinity, ExtValue::Finite)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Exponent::degree).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> ExtValue {
        self.coefficient(&Exponent::zero(self.num_vars))
    }

    fn check_dim(&self, a: &[ExtValue]) -> Result<(), PolyError> {
        if a.len() != self.num_vars {
            return Err(PolyError::DimensionMismatch { expected: self.num_vars, found: a.len() });
        }
        Ok(())
    }

    /// Value at `a` and the exponents attaining it (empty when the value is `∞`).
    pub fn eval(&self, a: &[ExtValue]) -> Result<(ExtValue, Vec<Exponent>), PolyError> {
        self.check_dim(a)?;
        let mut best = ExtValue::Infinity;
        let mut argmin = Vec::new();
        for (e, c) in &self.terms {
            let v = e.pair(a).shift(c);
            if v.is_infinite() {
                continue;
            }
            if v < best {
                best = v;
                argmin.clear();
                argmin.push(e.clone());
            } else if v == best {
                argmin.push(e.clone());
            }
        }
        Ok((best, argmin))
    }

    pub fn value(&self, a: &[ExtValue]) -> Result<ExtValue, PolyError> {
        self.eval(a).map(|(v, _)| v)
    }

    /// Minimum attained at least twice, or equal to `∞`.
    pub fn is_root(&self, a: &[ExtValue]) -> Result<bool, PolyError> {
        let (v, argmin) = self.eval(a)?;
        Ok(v.is_infinite() || argmin.len() >= 2)
    }

    /// `c ⊙ x^J ⊙ f`.
    pub fn mul_monomial(&self, c: &Rational, j: &Exponent) -> Self {
        let terms = self.terms.iter().map(|(e, v)| (e.add(j), v + c)).collect();
        TropicalPolynomial { num_vars: self.num_vars, terms }
    }

    /// Tropical sum of two polynomials (coefficientwise minimum).
    pub fn oplus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.get_mut(e) {
                Some(old) if *old <= *c => {}
                Some(old) => *old = c.clone(),
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        TropicalPolynomial { num_vars: self.num_vars, terms }
    }

    /// Drops monomials that use a variable outside `keep`.
    pub fn restrict_support(&self, keep: &[bool]) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.support().all(|i| keep[i]))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        TropicalPolynomial { num_vars: self.num_vars, terms }
    }

    /// Re-indexes the variables: new variable `i` is old variable `map[i]`.
    /// Monomials using a dropped variable must have been removed first.
    pub fn project_vars(&self, map: &[usize]) -> Self {
        let terms =
            self.terms.iter().map(|(e, c)| (Exponent(map.iter().map(|&o| e.0[o]).collect()), c.clone())).collect();
        TropicalPolynomial { num_vars: map.len(), terms }
    }

    /// Adds the same constant to every coefficient.
    pub fn add_constant(&self, c: &Rational) -> Self {
        self.mul_monomial(c, &Exponent::zero(self.num_vars))
    }
}

/// Which side of a min-plus polynomial attains a coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color {
    pub black: bool,
    pub white: bool,
}

impl Color {
    pub const BLACK: Color = Color { black: true, white: false };
    pub const WHITE: Color = Color { black: false, white: true };
    pub const NONE: Color = Color { black: false, white: false };

    pub fn union(self, other: Color) -> Color {
        Color { black: self.black || other.black, white: self.white || other.white }
    }
}

/// A coefficient function with colors, for min-plus polynomials.
pub type ColoredFn = BTreeMap<Exponent, (Rational, Color)>;

/// A pair `(f, g)`; a root is a point with `f(a) = g(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinPlusPolynomial {
    pub lhs: TropicalPolynomial,
    pub rhs: TropicalPolynomial,
}

impl MinPlusPolynomial {
    pub fn new(lhs: TropicalPolynomial, rhs: TropicalPolynomial) -> Result<Self, PolyError> {
        if lhs.num_vars() != rhs.num_vars() {
            return Err(PolyError::DimensionMismatch { expected: lhs.num_vars(), found: rhs.num_vars() });
        }
        Ok(MinPlusPolynomial { lhs, rhs })
    }

    pub fn num_vars(&self) -> usize {
        self.lhs.num_vars()
    }

    pub fn degree(&self) -> u64 {
        self.lhs.degree().max(self.rhs.degree())
    }

    pub fn is_root(&self, a: &[ExtValue]) -> Result<bool, PolyError> {
        Ok(self.lhs.value(a)? == self.rhs.value(a)?)
    }

    /// `φ(I) = min(f_I, g_I)`, black when attained by `f`, white when by `g`.
    pub fn colored_phi(&self) -> ColoredFn {
        let mut out = ColoredFn::new();
        for (e, c) in self.lhs.phi() {
            out.insert(e.clone(), (c.clone(), Color::BLACK));
        }
        for (e, c) in self.rhs.phi() {
            match out.get_mut(e) {
                Some((old, col)) => {
                    if *c < *old {
                        *old = c.clone();
                        *col = Color::WHITE;
                    } else if *c == *old {
                        *col = col.union(Color::WHITE);
                    }
                }
                None => {
                    out.insert(e.clone(), (c.clone(), Color::WHITE));
                }
            }
        }
        out
    }

    pub fn mul_monomial(&self, c: &Rational, j: &Exponent) -> Self {
        MinPlusPolynomial { lhs: self.lhs.mul_monomial(c, j), rhs: self.rhs.mul_monomial(c, j) }
    }

    pub fn restrict_support(&self, keep: &[bool]) -> Self {
        MinPlusPolynomial { lhs: self.lhs.restrict_support(keep), rhs: self.rhs.restrict_support(keep) }
    }

    pub fn project_vars(&self, map: &[usize]) -> Self {
        MinPlusPolynomial { lhs: self.lhs.project_vars(map), rhs: self.rhs.project_vars(map) }
    }

    pub fn constant_term(&self) -> ExtValue {
        self.lhs.constant_term().oplus(&self.rhs.constant_term())
    }
}

/// Common interface used by the generic drivers.
pub trait Polynomial: Clone + fmt::Debug {
    const COLORED: bool;
    fn num_vars(&self) -> usize;
    fn degree(&self) -> u64;
    fn is_root(&self, a: &[ExtValue]) -> Result<bool, PolyError>;
    /// Coefficient function with colors (all black for tropical polynomials).
    fn colored(&self) -> ColoredFn;
    fn mul_monomial(&self, c: &Rational, j: &Exponent) -> Self;
    fn restrict_support(&self, keep: &[bool]) -> Self;
    fn project_vars(&self, map: &[usize]) -> Self;
    fn constant_term(&self) -> ExtValue;
    /// Tropical sum; for min-plus pairs, side by side.
    fn oplus(&self, other: &Self) -> Self;
    /// Number of monomials with finite coefficients on either side.
    fn monomial_count(&self) -> usize {
        self.colored().len()
    }
}

impl Polynomial for TropicalPolynomial {
    const COLORED: bool = false;
    fn num_vars(&self) -> usize {
        self.num_vars
    }
    fn degree(&self) -> u64 {
        TropicalPolynomial::degree(self)
    }
    fn is_root(&self, a: &[ExtValue]) -> Result<bool, PolyError> {
        TropicalPolynomial::is_root(self, a)
    }
    fn colored(&self) -> ColoredFn {
        self.terms.iter().map(|(e, c)| (e.clone(), (c.clone(), Color::BLACK))).collect()
    }
    fn mul_monomial(&self, c: &Rational, j: &Exponent) -> Self {
        TropicalPolynomial::mul_monomial(self, c, j)
    }
    fn restrict_support(&self, keep: &[bool]) -> Self {
        TropicalPolynomial::restrict_support(self, keep)
    }
    fn project_vars(&self, map: &[usize]) -> Self {
        TropicalPolynomial::project_vars(self, map)
    }
    fn constant_term(&self) -> ExtValue {
        TropicalPolynomial::constant_term(self)
    }
    fn oplus(&self, other: &Self) -> Self {
        TropicalPolynomial::oplus(self, other)
    }
}

impl Polynomial for MinPlusPolynomial {
    const COLORED: bool = true;
    fn num_vars(&self) -> usize {
        MinPlusPolynomial::num_vars(self)
    }
    fn degree(&self) -> u64 {
        MinPlusPolynomial::degree(self)
    }
    fn is_root(&self, a: &[ExtValue]) -> Result<bool, PolyError> {
        MinPlusPolynomial::is_root(self, a)
    }
    fn colored(&self) -> ColoredFn {
        self.colored_phi()
    }
    fn mul_monomial(&self, c: &Rational, j: &Exponent) -> Self {
        MinPlusPolynomial::mul_monomial(self, c, j)
    }
    fn restrict_support(&self, keep: &[bool]) -> Self {
        MinPlusPolynomial::restrict_support(self, keep)
    }
    fn project_vars(&self, map: &[usize]) -> Self {
        MinPlusPolynomial::project_vars(self, map)
    }
    fn constant_term(&self) -> ExtValue {
        MinPlusPolynomial::constant_term(self)
    }
    fn oplus(&self, other: &Self) -> Self {
        MinPlusPolynomial { lhs: self.lhs.oplus(&other.lhs), rhs: self.rhs.oplus(&other.rhs) }
    }
}

/// Conjunction of the root predicate over a system.
pub fn is_root_system<P: Polynomial>(system: &[P], a: &[ExtValue]) -> Result<bool, PolyError> {
    for p in system {
        if !p.is_root(a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Sing(φ, ψ)`: the shift `t` and the points where `φ + t` touches `ψ` from below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularitySet {
    pub shift: Option<Rational>,
    pub points: Vec<Exponent>,
    /// Colors of `ψ` at each point, for colored singularity.
    pub colors: Option<Vec<Color>>,
}

impl SingularitySet {
    /// `|Sing(φ,ψ)| ≠ 1`.
    pub fn is_singular(&self) -> bool {
        self.points.len() != 1
    }

    /// Empty, or both a black and a white point are present.
    pub fn is_singular_colored(&self) -> bool {
        if self.points.is_empty() {
            return true;
        }
        let all =
            self.colors.as_ref().map(|cs| cs.iter().fold(Color::NONE, |a, &c| a.union(c))).unwrap_or(Color::BLACK);
        all.black && all.white
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn sing_core<V, F>(phi: &CoeffFn, psi: &BTreeMap<Exponent, V>, value: F) -> (Option<Rational>, Vec<Exponent>)
where
    F: Fn(&V) -> &Rational,
{
    let mut best: Option<Rational> = None;
    let mut points = Vec::new();
    for (e, p) in phi {
        let Some(q) = psi.get(e) else { continue };
        let d = value(q) - p;
        match &best {
            Some(b) if d > *b => {}
            Some(b) if d == *b => points.push(e.clone()),
            _ => {
                best = Some(d);
                points.clear();
                points.push(e.clone());
            }
        }
    }
    (best, points)
}

/// Singularity set of a pair of partial functions.
pub fn sing_set(phi: &CoeffFn, psi: &CoeffFn) -> SingularitySet {
    let (shift, points) = sing_core(phi, psi, |r| r);
    SingularitySet { shift, points, colors: None }
}

/// Singularity set against a colored function; colors are read from `psi`.
pub fn sing_set_colored(phi: &CoeffFn, psi: &ColoredFn) -> SingularitySet {
    let (shift, points) = sing_core(phi, psi, |(r, _)| r);
    let colors = points.iter().map(|e| psi[e].1).collect();
    SingularitySet { shift, points, colors: Some(colors) }
}

/// `χ_a(I) = −⟨a, I⟩` on a given finite domain.
pub fn chi_on<'a, I>(a: &[Rational], domain: I) -> CoeffFn
where
    I: IntoIterator<Item = &'a Exponent>,
{
    domain.into_iter().map(|e| (e.clone(), -e.dot(a))).collect()
}
