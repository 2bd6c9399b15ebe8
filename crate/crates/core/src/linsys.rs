//! Tropical and min-plus linear systems over `Q ∪ {∞}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::value::{ExtValue, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeError {
    pub expected: (usize, usize),
    pub found: (usize, usize),
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "shape mismatch: expected {}x{}, found {}x{}",
            self.expected.0, self.expected.1, self.found.0, self.found.1
        )
    }
}

impl core::error::Error for ShapeError {}

/// A sparse `m × n` matrix; absent entries are `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    /// Finite entries of each row, sorted by column.
    data: Vec<Vec<(usize, Rational)>>,
}

impl TropMatrix {
    /// The all-`∞` matrix.
    pub fn new(rows: usize, cols: usize) -> Self {
        TropMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_dense(entries: &[Vec<ExtValue>]) -> Result<Self, ShapeError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut m = TropMatrix::new(rows, cols);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(ShapeError { expected: (rows, cols), found: (rows, row.len()) });
            }
            for (j, v) in row.iter().enumerate() {
                if let ExtValue::Finite(r) = v {
                    m.data[i].push((j, r.clone()));
                }
            }
        }
        Ok(m)
    }

    /// Integer literal helper; `None` stands for `∞`.
    pub fn from_ints(entries: &[&[Option<i64>]]) -> Self {
        let dense: Vec<Vec<ExtValue>> =
            entries.iter().map(|r| r.iter().map(|v| v.map_or(ExtValue::Infinity, ExtValue::int)).collect()).collect();
        Self::from_dense(&dense).expect("rectangular literal")
    }

    /// Builds from sparse rows; entries must be sorted by column and in range.
    pub fn from_sparse_rows(cols: usize, data: Vec<Vec<(usize, Rational)>>) -> Self {
        debug_assert!(data.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(data.iter().flatten().all(|(j, _)| *j < cols));
        TropMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> ExtValue {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => ExtValue::Finite(self.data[i][k].1.clone()),
            Err(_) => ExtValue::Infinity,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExtValue) {
        let row = &mut self.data[i];
        match (row.binary_search_by_key(&j, |(c, _)| *c), v) {
            (Ok(k), ExtValue::Finite(r)) => row[k].1 = r,
            (Ok(k), ExtValue::Infinity) => {
                row.remove(k);
            }
            (Err(k), ExtValue::Finite(r)) => row.insert(k, (j, r)),
            (Err(_), ExtValue::Infinity) => {}
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<ExtValue>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    /// All finite entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        TropMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &TropMatrix) -> TropMatrix {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        TropMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// `[self other]`.
    pub fn hstack(&self, other: &TropMatrix) -> TropMatrix {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.cols, v.clone())));
                r
            })
            .collect();
        TropMatrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// Keeps the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> TropMatrix {
        TropMatrix { rows: rows.len(), cols: self.cols, data: rows.iter().map(|&i| self.data[i].clone()).collect() }
    }

    /// Keeps the listed columns, renumbered in order.
    pub fn select_cols(&self, cols: &[usize]) -> TropMatrix {
        let mut new_index = vec![usize::MAX; self.cols];
        for (k, &j) in cols.iter().enumerate() {
            new_index[j] = k;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut row: Vec<(usize, Rational)> = r
                    .iter()
                    .filter(|(j, _)| new_index[*j] != usize::MAX)
                    .map(|(j, v)| (new_index[*j], v.clone()))
                    .collect();
                row.sort_by_key(|(j, _)| *j);
                row
            })
            .collect();
        TropMatrix { rows: self.rows, cols: cols.len(), data }
    }

    fn check_vector(&self, x: &[ExtValue]) -> Result<(), ShapeError> {
        if x.len() != self.cols {
            return Err(ShapeError { expected: (self.cols, 1), found: (x.len(), 1) });
        }
        Ok(())
    }

    /// `(A ⊙ x)_i` together with the columns attaining it.
    pub fn row_eval(&self, i: usize, x: &[ExtValue]) -> (ExtValue, Vec<usize>) {
        let mut best = ExtValue::Infinity;
        let mut at = Vec::new();
        for (j, a) in &self.data[i] {
            let v = x[*j].shift(a);
            if v.is_infinite() {
                continue;
            }
            if v < best {
                best = v;
                at.clear();
                at.push(*j);
            } else if v == best {
                at.push(*j);
            }
        }
        (best, at)
    }

    /// `A ⊙ x`.
    pub fn apply(&self, x: &[ExtValue]) -> Result<Vec<ExtValue>, ShapeError> {
        self.check_vector(x)?;
        Ok((0..self.rows).map(|i| self.row_eval(i, x).0).collect())
    }

    /// True when row `i` has no finite entry.
    pub fn row_is_infinite(&self, i: usize) -> bool {
        self.data[i].is_empty()
    }

    pub fn finite_values(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.data.iter().flatten().map(|(_, v)| v)
    }
}

/// A row of a tropical system holds when its minimum is attained twice or is `∞`.
pub fn check_tropical_solution(a: &TropMatrix, x: &[ExtValue]) -> Result<bool, ShapeError> {
    a.check_vector(x)?;
    Ok((0..a.rows()).all(|i| {
        let (v, at) = a.row_eval(i, x);
        v.is_infinite() || at.len() >= 2
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Leq,
    Lt,
}

/// `A ⊙ x  R  B ⊙ x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPlusSystem {
    pub lhs: TropMatrix,
    pub rhs: TropMatrix,
    pub relation: Relation,
}

impl MinPlusSystem {
    pub fn new(lhs: TropMatrix, rhs: TropMatrix, relation: Relation) -> Result<Self, ShapeError> {
        if lhs.shape() != rhs.shape() {
            return Err(ShapeError { expected: lhs.shape(), found: rhs.shape() });
        }
        Ok(MinPlusSystem { lhs, rhs, relation })
    }

    pub fn rows(&self) -> usize {
        self.lhs.rows()
    }

    pub fn cols(&self) -> usize {
        self.lhs.cols()
    }

    /// Does row `i` hold at `x`? For `Lt` a row with both sides `∞` holds.
    pub fn row_holds(&self, i: usize, x: &[ExtValue]) -> bool {
        let l = self.lhs.row_eval(i, x).0;
        let r = self.rhs.row_eval(i, x).0;
        match self.relation {
            Relation::Eq => l == r,
            Relation::Leq => l <= r,
            Relation::Lt => l < r || (l.is_infinite() && r.is_infinite()),
        }
    }
}

pub fn check_minplus_solution(s: &MinPlusSystem, x: &[ExtValue]) -> Result<bool, ShapeError> {
    s.lhs.check_vector(x)?;
    Ok((0..s.rows()).all(|i| s.row_holds(i, x)))
}

/// `A ⊙ x = B ⊙ x` as `[A; B] ⊙ x ≤ [B; A] ⊙ x`.
pub fn eq_to_ineq(s: &MinPlusSystem) -> MinPlusSystem {
    assert_eq!(s.relation, Relation::Eq, "eq_to_ineq expects an equation system");
    MinPlusSystem { lhs: s.lhs.vstack(&s.rhs), rhs: s.rhs.vstack(&s.lhs), relation: Relation::Leq }
}

/// The stacked system whose block `l` is `(A + εC_l) ⊙ x ≤ A ⊙ x`.
///
/// `x` solves the tropical system `A ⊙ x` iff it solves the stacked one, for
/// every fixed `ε > 0`.
pub fn tropical_to_minplus_linear(a: &TropMatrix, eps: &Rational) -> MinPlusSystem {
    let (m, n) = a.shape();
    let mut lhs = Vec::with_capacity(m * n);
    for l in 0..n {
        for i in 0..m {
            lhs.push(a.row(i).iter().map(|(j, v)| (*j, if *j == l { v + eps } else { v.clone() })).collect());
        }
    }
    let rhs = (0..n).flat_map(|_| (0..m).map(|i| a.row(i).to_vec())).collect();
    MinPlusSystem {
        lhs: TropMatrix::from_sparse_rows(n, lhs),
        rhs: TropMatrix::from_sparse_rows(n, rhs),
        relation: Relation::Leq,
    }
}

/// The rows of [`tropical_to_minplus_linear`] that are not identical on both
/// sides: block `l` keeps row `i` only when `a_il` is finite. Rows are ordered
/// by block, then by row.
pub fn tropical_to_minplus_linear_pruned(a: &TropMatrix, eps: &Rational) -> MinPlusSystem {
    let at = a.transpose();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for l in 0..a.cols() {
        for (i, _) in at.row(l) {
            let row = a.row(*i);
            lhs.push(row.iter().map(|(j, v)| (*j, if *j == l { v + eps } else { v.clone() })).collect());
            rhs.push(row.to_vec());
        }
    }
    MinPlusSystem {
        lhs: TropMatrix::from_sparse_rows(a.cols(), lhs),
        rhs: TropMatrix::from_sparse_rows(a.cols(), rhs),
        relation: Relation::Leq,
    }
}

/// Drops `≤` rows whose two sides coincide, since they hold for every `x`.
/// Returns the reduced system and the kept row indices.
pub fn prune_identical_rows(s: &MinPlusSystem) -> (MinPlusSystem, Vec<usize>) {
    if s.relation == Relation::Lt {
        return (s.clone(), (0..s.rows()).collect());
    }
    let kept: Vec<usize> = (0..s.rows()).filter(|&i| s.lhs.row(i) != s.rhs.row(i)).collect();
    let out = MinPlusSystem { lhs: s.lhs.select_rows(&kept), rhs: s.rhs.select_rows(&kept), relation: s.relation };
    (out, kept)
}

/// Appends the fixed constant coordinate `0` at position `const_col`.
pub fn homogenize_point(x: &[ExtValue], const_col: usize) -> Vec<ExtValue> {
    let mut out = x.to_vec();
    out.insert(const_col, ExtValue::zero());
    out
}

/// Turns a homogeneous solution into a non-homogeneous one by subtracting the
/// constant coordinate; `None` when that coordinate is `∞`.
pub fn dehomogenize_point(x: &[ExtValue], const_col: usize) -> Option<Vec<ExtValue>> {
    let c = x[const_col].finite()?.clone();
    let neg = -c;
    Some(x.iter().enumerate().filter(|(j, _)| *j != const_col).map(|(_, v)| v.shift(&neg)).collect())
}

/// Normalizes a homogeneous solution so its constant coordinate is `0`.
pub fn normalize_constant(x: &[ExtValue], const_col: usize) -> Option<Vec<ExtValue>> {
    let c = x[const_col].finite()?.clone();
    let neg = -c;
    Some(x.iter().map(|v| v.shift(&neg)).collect())
}

/// Checks `A ⊙ (x, 0)`, where the constant column sits at `const_col`.
pub fn check_nonhomogeneous(a: &TropMatrix, const_col: usize, x: &[ExtValue]) -> Result<bool, ShapeError> {
    check_tropical_solution(a, &homogenize_point(x, const_col))
}

/// A matrix with its all-`∞` rows and columns removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub matrix: TropMatrix,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
    pub deleted_rows: Vec<usize>,
    pub deleted_cols: Vec<usize>,
}

impl Normalized {
    /// Lifts a solution of the reduced system back; deleted coordinates get `fill`.
    pub fn lift(&self, x: &[ExtValue], fill: &ExtValue) -> Vec<ExtValue> {
        let mut out = vec![fill.clone(); self.kept_cols.len() + self.deleted_cols.len()];
        for (k, &j) in self.kept_cols.iter().enumerate() {
            out[j] = x[k].clone();
        }
        out
    }
}

/// Deletes all-`∞` rows and columns, recording the deleted indices.
pub fn normalize(a: &TropMatrix) -> Normalized {
    let mut col_used = vec![false; a.cols()];
    for (_, j, _) in a.entries() {
        col_used[j] = true;
    }
    let (kept_rows, deleted_rows): (Vec<usize>, Vec<usize>) = (0..a.rows()).partition(|&i| !a.row_is_infinite(i));
    let (kept_cols, deleted_cols): (Vec<usize>, Vec<usize>) = (0..a.cols()).partition(|&j| col_used[j]);
    let matrix = a.select_rows(&kept_rows).select_cols(&kept_cols);
    Normalized { matrix, kept_rows, kept_cols, deleted_rows, deleted_cols }
}
