//! Alternatives for min-plus and tropical linear systems.
//!
//! Each decision returns one side of an exclusive pair together with a
//! witness, and every witness is checked before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::game::{build_game, min_credits, solve_strict};
use crate::linsys::{
    check_minplus_solution, check_tropical_solution, normalize, tropical_to_minplus_linear_pruned, MinPlusSystem,
    Relation, TropMatrix,
};
use crate::poly::Point;
use crate::value::{ExtValue, Rational};

/// Which finiteness requirement the primal side carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Primal: `x_i` finite for all `i ∈ S`. Dual: some `i ∈ S` finite.
    FinAll,
    /// Primal: `x_i` finite for some `i ∈ S`. Dual: all `i ∈ S` finite.
    FinSome,
}

impl Flavor {
    fn primal_ok(self, finite: impl Fn(usize) -> bool, s: &[usize]) -> bool {
        match self {
            Flavor::FinAll => s.iter().all(|&i| finite(i)),
            Flavor::FinSome => s.iter().any(|&i| finite(i)),
        }
    }

    fn dual_ok(self, finite: impl Fn(usize) -> bool, s: &[usize]) -> bool {
        match self {
            Flavor::FinAll => s.iter().any(|&i| finite(i)),
            Flavor::FinSome => s.iter().all(|&i| finite(i)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityOutcome {
    Primal(Point),
    Dual(Point),
}

impl DualityOutcome {
    pub fn is_primal(&self) -> bool {
        matches!(self, DualityOutcome::Primal(_))
    }
}

/// `A ⊙ x ≤ B ⊙ x` with the primal finiteness condition on `x`.
pub fn verify_minplus_primal(a: &TropMatrix, b: &TropMatrix, x: &[ExtValue], s: &[usize], flavor: Flavor) -> bool {
    let Ok(sys) = MinPlusSystem::new(a.clone(), b.clone(), Relation::Leq) else { return false };
    check_minplus_solution(&sys, x).unwrap_or(false) && flavor.primal_ok(|i| x[i].is_finite(), s)
}

/// `Bᵀ ⊙ y < Aᵀ ⊙ y` with the dual finiteness condition on `Bᵀ ⊙ y`.
pub fn verify_minplus_dual(a: &TropMatrix, b: &TropMatrix, y: &[ExtValue], s: &[usize], flavor: Flavor) -> bool {
    let Ok(sys) = MinPlusSystem::new(b.transpose(), a.transpose(), Relation::Lt) else { return false };
    if !check_minplus_solution(&sys, y).unwrap_or(false) {
        return false;
    }
    flavor.dual_ok(|i| sys.lhs.row_eval(i, y).0.is_finite(), s)
}

/// Decides which of the two min-plus alternatives holds for `(A, B, S)`.
///
/// Rows with identical sides hold for every `x` and are dropped from the
/// primal game; in the dual they are columns contributing equally to both
/// sides, so their `y` coordinate is set to `∞`.
pub fn minplus_alternative(a: &TropMatrix, b: &TropMatrix, s: &[usize], flavor: Flavor) -> DualityOutcome {
    assert_eq!(a.shape(), b.shape(), "minplus_alternative needs equal shapes");
    let kept: Vec<usize> = (0..a.rows()).filter(|&i| a.row(i) != b.row(i)).collect();
    let (ak, bk) = (a.select_rows(&kept), b.select_rows(&kept));
    let primal = MinPlusSystem::new(ak.clone(), bk.clone(), Relation::Leq).expect("same shape");
    let x = min_credits(&build_game(&primal)).cols;
    if flavor.primal_ok(|i| x[i].is_finite(), s) {
        assert!(verify_minplus_primal(a, b, &x, s, flavor), "primal credits fail verification");
        return DualityOutcome::Primal(x);
    }
    let required: Vec<usize> = match flavor {
        Flavor::FinAll => vec![*s.iter().find(|&&i| x[i].is_infinite()).expect("some required column is lost")],
        Flavor::FinSome => s.to_vec(),
    };
    let dual = MinPlusSystem::new(bk.transpose(), ak.transpose(), Relation::Lt).expect("same shape");
    let yk = solve_strict(&dual, &[], &required).expect("duality: neither alternative found");
    let mut y = vec![ExtValue::Infinity; a.rows()];
    for (k, &i) in kept.iter().enumerate() {
        y[i] = yk[k].clone();
    }
    assert!(verify_minplus_dual(a, b, &y, s, flavor), "dual witness fails verification");
    DualityOutcome::Dual(y)
}

/// Literal check of the tropical dual conditions on `Aᵀ ⊙ z`: every row has a
/// unique finite minimum or is `∞`, finite minima of different rows sit in
/// different columns, and the finiteness condition on `S` holds.
pub fn verify_tropical_dual(a: &TropMatrix, z: &[ExtValue], s: &[usize], flavor: Flavor) -> bool {
    if z.len() != a.rows() {
        return false;
    }
    let at = a.transpose();
    let mut used = vec![false; a.rows()];
    let mut finite = vec![false; at.rows()];
    for i in 0..at.rows() {
        let (v, at_cols) = at.row_eval(i, z);
        if v.is_infinite() {
            continue;
        }
        if at_cols.len() != 1 || used[at_cols[0]] {
            return false;
        }
        used[at_cols[0]] = true;
        finite[i] = true;
    }
    flavor.dual_ok(|i| finite[i], s)
}

/// `A ⊙ x` solved with the primal finiteness condition on `x`.
pub fn verify_tropical_primal(a: &TropMatrix, x: &[ExtValue], s: &[usize], flavor: Flavor) -> bool {
    check_tropical_solution(a, x).unwrap_or(false) && flavor.primal_ok(|i| x[i].is_finite(), s)
}

/// Decides which tropical alternative holds for `(A, S)`.
///
/// Runs the min-plus alternative on the stacked `ε`-system, keeping only the
/// rows whose sides differ. A dual `y` is indexed by (block, row of `A`); for
/// each column `i` of `A` whose dual row is finite the minimum sits in block
/// `i` at some row `j_i`, and `z_{j_i} = y_{i, j_i}`.
pub fn tropical_alternative(a: &TropMatrix, s: &[usize], flavor: Flavor) -> DualityOutcome {
    let norm = normalize(a);
    let mut col_pos = vec![usize::MAX; a.cols()];
    for (k, &j) in norm.kept_cols.iter().enumerate() {
        col_pos[j] = k;
    }
    // Deleted columns are free: any finite value keeps the system solved.
    let deleted_in_s = s.iter().any(|&j| col_pos[j] == usize::MAX);
    let lift_primal = |x: &[ExtValue]| norm.lift(x, &ExtValue::zero());
    if flavor == Flavor::FinSome && deleted_in_s {
        let x = lift_primal(&vec![ExtValue::Infinity; norm.kept_cols.len()]);
        assert!(verify_tropical_primal(a, &x, s, flavor));
        return DualityOutcome::Primal(x);
    }
    let s_red: Vec<usize> = s.iter().filter_map(|&j| (col_pos[j] != usize::MAX).then_some(col_pos[j])).collect();
    let m = &norm.matrix;
    let (rows, cols) = m.shape();
    let mt = m.transpose();
    let mut offset = vec![0usize; cols + 1];
    for i in 0..cols {
        offset[i + 1] = offset[i] + mt.row(i).len();
    }
    let mut eps = Rational::one();
    for _ in 0..64 {
        let stacked = tropical_to_minplus_linear_pruned(m, &eps);
        match minplus_alternative(&stacked.lhs, &stacked.rhs, &s_red, flavor) {
            DualityOutcome::Primal(x) => {
                let x = lift_primal(&x);
                assert!(verify_tropical_primal(a, &x, s, flavor), "stacked primal is not a tropical solution");
                return DualityOutcome::Primal(x);
            }
            DualityOutcome::Dual(y) => {
                let mut z_red = vec![ExtValue::Infinity; rows];
                for i in 0..cols {
                    let mut best: Option<(ExtValue, usize, usize)> = None;
                    for (k, (j, aji)) in mt.row(i).iter().enumerate() {
                        let v = y[offset[i] + k].shift(aji);
                        if v.is_finite() && best.as_ref().map_or(true, |(b, _, _)| v < *b) {
                            best = Some((v, *j, k));
                        }
                    }
                    if let Some((_, j, k)) = best {
                        z_red[j] = y[offset[i] + k].clone();
                    }
                }
                let mut z = vec![ExtValue::Infinity; a.rows()];
                for (k, &r) in norm.kept_rows.iter().enumerate() {
                    z[r] = z_red[k].clone();
                }
                if verify_tropical_dual(a, &z, s, flavor) {
                    return DualityOutcome::Dual(z);
                }
                log::debug!("tropical dual unpacking failed at eps = {}, halving", eps);
                eps /= Rational::from_integer(2.into());
            }
        }
    }
    panic!("tropical duality: no verified alternative");
}
