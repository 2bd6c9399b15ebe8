//! Truncated Macaulay matrices and degree bounds.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::linsys::TropMatrix;
use crate::poly::{CoeffFn, MinPlusPolynomial, Point, TropicalPolynomial};
use crate::value::{Exponent, ExtValue, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semiring {
    /// Roots with all coordinates finite.
    R,
    /// Roots in `Q ∪ {∞}`.
    RInf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MacaulayError {
    EmptySystem,
    DimensionMismatch,
    Overflow,
}

impl fmt::Display for MacaulayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MacaulayError::EmptySystem => f.write_str("empty system"),
            MacaulayError::DimensionMismatch => f.write_str("polynomials disagree on the number of variables"),
            MacaulayError::Overflow => f.write_str("degree bound overflows 64 bits"),
        }
    }
}

impl core::error::Error for MacaulayError {}

/// `(n+2)·Σd_i` over `R`, `2(n+2)²k(4d)^{min(n,k)+2}` with `d = max d_i` over `R∞`.
pub fn degree_bound(semiring: Semiring, n: usize, degrees: &[u64]) -> Result<u64, MacaulayError> {
    if degrees.is_empty() {
        return Err(MacaulayError::EmptySystem);
    }
    let n2 = (n as u64).checked_add(2).ok_or(MacaulayError::Overflow)?;
    match semiring {
        Semiring::R => {
            let sum = degrees.iter().try_fold(0u64, |a, &d| a.checked_add(d)).ok_or(MacaulayError::Overflow)?;
            n2.checked_mul(sum).ok_or(MacaulayError::Overflow)
        }
        Semiring::RInf => {
            let k = degrees.len() as u64;
            let d = *degrees.iter().max().expect("nonempty");
            let base = d.checked_mul(4).ok_or(MacaulayError::Overflow)?;
            let exp = (n.min(degrees.len()) as u32) + 2;
            let pow = base.checked_pow(exp).ok_or(MacaulayError::Overflow)?;
            [2, n2, n2, k, pow].iter().try_fold(1u64, |a, &b| a.checked_mul(b)).ok_or(MacaulayError::Overflow)
        }
    }
}

/// `C(N + n, n)`, saturating.
pub fn column_count(n: usize, max_degree: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=n as u128 {
        c = c.saturating_mul(max_degree as u128 + i) / i;
    }
    c
}

/// The exponents of degree at most `N`, graded, each degree in decreasing
/// lexicographic order, so the constant monomial is column 0 and `x_1`
/// comes before `x_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIndex {
    num_vars: usize,
    max_degree: u64,
    exps: Vec<Exponent>,
    lookup: BTreeMap<Exponent, usize>,
}

fn push_degree(n: usize, t: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
    if prefix.len() + 1 == n {
        prefix.push(t);
        out.push(Exponent(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in (0..=t).rev() {
        prefix.push(first);
        push_degree(n, t - first, prefix, out);
        prefix.pop();
    }
}

impl MonomialIndex {
    pub fn new(num_vars: usize, max_degree: u64) -> Self {
        let mut exps = Vec::new();
        if num_vars == 0 {
            exps.push(Exponent(Vec::new()));
        } else {
            for t in 0..=max_degree as u32 {
                push_degree(num_vars, t, &mut Vec::new(), &mut exps);
            }
        }
        let lookup = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialIndex { num_vars, max_degree, exps, lookup }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> u64 {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn index(&self, e: &Exponent) -> Option<usize> {
        self.lookup.get(e).copied()
    }

    pub fn exponent(&self, id: usize) -> &Exponent {
        &self.exps[id]
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn constant_column(&self) -> usize {
        0
    }

    /// Exponents of degree at most `t`, in column order.
    pub fn up_to(&self, t: u64) -> impl Iterator<Item = &Exponent> + '_ {
        self.exps.iter().take_while(move |e| e.degree() <= t)
    }
}

/// Row label `(j, J)`: polynomial `j` multiplied by `x^J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowLabel {
    pub poly: usize,
    pub shift: Exponent,
}

/// A truncated Macaulay matrix; `rhs` is present for min-plus systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulaySystem {
    pub index: MonomialIndex,
    pub rows: Vec<RowLabel>,
    pub lhs: TropMatrix,
    pub rhs: Option<TropMatrix>,
}

impl MacaulaySystem {
    pub fn constant_column(&self) -> usize {
        self.index.constant_column()
    }

    pub fn is_minplus(&self) -> bool {
        self.rhs.is_some()
    }

    /// The entry `φ_j(I − J)` of one side, for the independent recomputation.
    pub fn entry(&self, row: usize, col: usize) -> (ExtValue, Option<ExtValue>) {
        (self.lhs.get(row, col), self.rhs.as_ref().map(|r| r.get(row, col)))
    }
}

fn check_dims(n: usize, vars: impl Iterator<Item = usize>) -> Result<(), MacaulayError> {
    let mut any = false;
    for v in vars {
        any = true;
        if v != n {
            return Err(MacaulayError::DimensionMismatch);
        }
    }
    if any {
        Ok(())
    } else {
        Err(MacaulayError::EmptySystem)
    }
}

fn shifted_row(index: &MonomialIndex, phi: &CoeffFn, shift: &Exponent) -> Vec<(usize, Rational)> {
    let mut row: Vec<(usize, Rational)> = phi
        .iter()
        .map(|(e, c)| (index.index(&e.add(shift)).expect("shifted monomial within degree bound"), c.clone()))
        .collect();
    row.sort_by_key(|(j, _)| *j);
    row
}

fn build(n: usize, max_degree: u64, sides: &[(u64, &CoeffFn, Option<&CoeffFn>)], minplus: bool) -> MacaulaySystem {
    let index = MonomialIndex::new(n, max_degree);
    let mut labels = Vec::new();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (j, (deg, l, r)) in sides.iter().enumerate() {
        if *deg > max_degree {
            continue;
        }
        for shift in index.up_to(max_degree - deg) {
            labels.push(RowLabel { poly: j, shift: shift.clone() });
            lhs.push(shifted_row(&index, l, shift));
            if let Some(r) = r {
                rhs.push(shifted_row(&index, r, shift));
            }
        }
    }
    let cols = index.len();
    MacaulaySystem {
        index,
        rows: labels,
        lhs: TropMatrix::from_sparse_rows(cols, lhs),
        rhs: minplus.then(|| TropMatrix::from_sparse_rows(cols, rhs)),
    }
}

/// Row `(j, J)` for every `|J| ≤ N − deg f_j`, with entries `φ_j(I − J)`.
pub fn build_macaulay_tropical(f: &[TropicalPolynomial], max_degree: u64) -> Result<MacaulaySystem, MacaulayError> {
    let n = f.first().ok_or(MacaulayError::EmptySystem)?.num_vars();
    check_dims(n, f.iter().map(|p| p.num_vars()))?;
    let sides: Vec<_> = f.iter().map(|p| (p.degree(), p.phi(), None)).collect();
    Ok(build(n, max_degree, &sides, false))
}

/// The paired matrices `(Ml, Mr)` of a min-plus system.
pub fn build_macaulay_minplus(f: &[MinPlusPolynomial], max_degree: u64) -> Result<MacaulaySystem, MacaulayError> {
    let n = f.first().ok_or(MacaulayError::EmptySystem)?.num_vars();
    check_dims(n, f.iter().map(|p| p.num_vars()))?;
    let sides: Vec<_> = f.iter().map(|p| (p.degree(), p.lhs.phi(), Some(p.rhs.phi()))).collect();
    Ok(build(n, max_degree, &sides, true))
}

/// `y_I = ⟨a, I⟩`, the Macaulay solution induced by a root `a`.
pub fn monomial_vector(index: &MonomialIndex, a: &[ExtValue]) -> Point {
    index.exponents().iter().map(|e| e.pair(a)).collect()
}

/// Number of rows: `Σ_j C(N − d_j + n, n)` over `d_j ≤ N`.
pub fn row_count(n: usize, max_degree: u64, degrees: &[u64]) -> u128 {
    degrees.iter().filter(|&&d| d <= max_degree).map(|&d| column_count(n, max_degree - d)).sum()
}

/// Helper for dense construction in tests and fixtures.
pub fn columns_as_points(index: &MonomialIndex) -> Vec<Vec<u32>> {
    index.exponents().iter().map(|e| e.0.clone()).collect()
}

/// Builds a vector over the columns from a function on exponents.
pub fn vector_from_fn(index: &MonomialIndex, f: impl Fn(&Exponent) -> ExtValue) -> Point {
    index.exponents().iter().map(f).collect()
}
