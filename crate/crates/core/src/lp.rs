//! Exact linear programming: a dense two-phase simplex with Bland's rule.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::value::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Le,
    Eq,
    Ge,
}

/// `minimize c·x` subject to rows `a·x ⋈ b`; variables are `≥ 0` unless marked free.
#[derive(Clone, Debug, Default)]
pub struct Lp {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub rows: Vec<(Vec<Rational>, RowKind, Rational)>,
    pub free: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

impl Lp {
    pub fn new(num_vars: usize) -> Self {
        Lp { num_vars, objective: vec![Rational::zero(); num_vars], rows: Vec::new(), free: vec![false; num_vars] }
    }

    pub fn row(&mut self, coeffs: Vec<Rational>, kind: RowKind, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "row width");
        self.rows.push((coeffs, kind, rhs));
        self
    }

    pub fn minimize(&self) -> LpOutcome {
        Tableau::build(self).solve(self)
    }

    /// Maximizes by minimizing the negated objective.
    pub fn maximize(&self) -> LpOutcome {
        let mut neg = self.clone();
        for c in &mut neg.objective {
            *c = -c.clone();
        }
        match neg.minimize() {
            LpOutcome::Optimal { x, value } => LpOutcome::Optimal { x, value: -value },
            other => other,
        }
    }
}

struct Tableau {
    /// Rows of `[A | b]` in the standard-form column space.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Standard column of each original variable: `(plus, minus)`.
    map: Vec<(usize, Option<usize>)>,
    artificial_from: usize,
    width: usize,
}

enum Pivoting {
    Done,
    Unbounded,
}

impl Tableau {
    fn build(lp: &Lp) -> Self {
        let mut map = Vec::with_capacity(lp.num_vars);
        let mut col = 0;
        for j in 0..lp.num_vars {
            if lp.free[j] {
                map.push((col, Some(col + 1)));
                col += 2;
            } else {
                map.push((col, None));
                col += 1;
            }
        }
        let slack_count = lp.rows.iter().filter(|r| r.1 != RowKind::Eq).count();
        let artificial_from = col + slack_count;
        let m = lp.rows.len();
        let width = artificial_from + m;
        let mut t = Vec::with_capacity(m);
        let mut slack = col;
        for (i, (coeffs, kind, rhs)) in lp.rows.iter().enumerate() {
            let mut row = vec![Rational::zero(); width + 1];
            for (j, c) in coeffs.iter().enumerate() {
                let (p, q) = map[j];
                row[p] = c.clone();
                if let Some(q) = q {
                    row[q] = -c.clone();
                }
            }
            match kind {
                RowKind::Le => {
                    row[slack] = Rational::from_integer(1.into());
                    slack += 1;
                }
                RowKind::Ge => {
                    row[slack] = Rational::from_integer((-1).into());
                    slack += 1;
                }
                RowKind::Eq => {}
            }
            row[width] = rhs.clone();
            if rhs.is_negative() {
                for v in &mut row {
                    *v = -v.clone();
                }
            }
            row[artificial_from + i] = Rational::from_integer(1.into());
            t.push(row);
        }
        let basis = (0..m).map(|i| artificial_from + i).collect();
        Tableau { t, basis, map, artificial_from, width }
    }

    fn pivot(&mut self, obj: &mut [Rational], r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for v in &mut self.t[r] {
            *v /= &p;
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        if !obj[c].is_zero() {
            let f = obj[c].clone();
            for (v, pv) in obj.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index entering column, lowest-index leaving basis.
    fn run(&mut self, obj: &mut [Rational], allowed: usize) -> Pivoting {
        loop {
            let Some(c) = (0..allowed).find(|&j| obj[j].is_negative()) else { return Pivoting::Done };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.t.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else { return Pivoting::Unbounded };
            self.pivot(obj, r, c);
        }
    }

    fn solve(mut self, lp: &Lp) -> LpOutcome {
        let w = self.width;
        // Phase one: minimize the sum of artificials.
        let mut obj = vec![Rational::zero(); w + 1];
        for row in &self.t {
            for (j, v) in row.iter().enumerate() {
                if j < self.artificial_from || j == w {
                    obj[j] -= v;
                }
            }
        }
        if let Pivoting::Unbounded = self.run(&mut obj, self.artificial_from) {
            unreachable!("phase one is bounded below by zero");
        }
        if !obj[w].is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive artificials out of the basis; rows where that fails are redundant.
        let mut i = 0;
        while i < self.t.len() {
            if self.basis[i] >= self.artificial_from {
                if let Some(c) = (0..self.artificial_from).find(|&j| !self.t[i][j].is_zero()) {
                    self.pivot(&mut obj, i, c);
                } else {
                    self.t.remove(i);
                    self.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
        // Phase two.
        let mut obj = vec![Rational::zero(); w + 1];
        for (j, c) in lp.objective.iter().enumerate() {
            let (p, q) = self.map[j];
            obj[p] = c.clone();
            if let Some(q) = q {
                obj[q] = -c.clone();
            }
        }
        for (r, &b) in self.basis.iter().enumerate() {
            if obj[b].is_zero() {
                continue;
            }
            let f = obj[b].clone();
            for (v, tv) in obj.iter_mut().zip(&self.t[r]) {
                *v -= &f * tv;
            }
        }
        if let Pivoting::Unbounded = self.run(&mut obj, self.artificial_from) {
            return LpOutcome::Unbounded;
        }
        let mut std_x = vec![Rational::zero(); w];
        for (r, &b) in self.basis.iter().enumerate() {
            std_x[b] = self.t[r][w].clone();
        }
        let x: Vec<Rational> = self
            .map
            .iter()
            .map(|&(p, q)| match q {
                Some(q) => &std_x[p] - &std_x[q],
                None => std_x[p].clone(),
            })
            .collect();
        let value = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        LpOutcome::Optimal { x, value }
    }
}
