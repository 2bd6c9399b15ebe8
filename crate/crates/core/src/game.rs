//! Mean payoff games encoding `A ⊙ x ≤ B ⊙ x`, solved through minimal energy credits.
//!
//! Row vertex `r_i` belongs to the column player, who moves to `c_j` along an
//! edge of weight `−a_ij`. Column vertex `c_j` belongs to the row player, who
//! moves to `r_i` along an edge of weight `b_ij`. The column player wants the
//! running sum of weights to stay bounded below.
//!
//! Credits are computed as the least fixed point of the clamped Bellman
//! operator by worklist lifting on integer-scaled weights. Lifting alone climbs
//! slowly through the row player's winning region, so it is interleaved with
//! strategy improvement for the row player: with the row player held to a
//! fixed reply per column, the column player's one-player game is solved
//! exactly (lost rows are those that cannot reach a cycle of weight `≥ 0` or a
//! dead end) and its credits are merged in. Credits under a restricted row
//! player never exceed the true ones, so the result is the exact least fixed
//! point.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::linsys::{check_minplus_solution, prune_identical_rows, MinPlusSystem, Relation};
use crate::poly::Point;
use crate::value::{denominator_lcm, ExtValue, Rational};

/// The bipartite game of a pair `(A, B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameGraph {
    rows: usize,
    cols: usize,
    /// `r_i → c_j` with weight `−a_ij`.
    row_edges: Vec<Vec<(usize, Rational)>>,
    /// `c_j → r_i` with weight `b_ij`.
    col_edges: Vec<Vec<(usize, Rational)>>,
}

impl GameGraph {
    /// Builds a graph from explicit edge lists; indices must be in range.
    pub fn from_edges(
        rows: usize,
        cols: usize,
        row_edges: Vec<Vec<(usize, Rational)>>,
        col_edges: Vec<Vec<(usize, Rational)>>,
    ) -> Self {
        assert_eq!(row_edges.len(), rows);
        assert_eq!(col_edges.len(), cols);
        assert!(row_edges.iter().flatten().all(|(j, _)| *j < cols));
        assert!(col_edges.iter().flatten().all(|(i, _)| *i < rows));
        GameGraph { rows, cols, row_edges, col_edges }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_edges(&self, i: usize) -> &[(usize, Rational)] {
        &self.row_edges[i]
    }

    pub fn col_edges(&self, j: usize) -> &[(usize, Rational)] {
        &self.col_edges[j]
    }

    pub fn vertex_count(&self) -> usize {
        self.rows + self.cols
    }

    pub fn edge_count(&self) -> usize {
        self.row_edges.iter().map(Vec::len).sum::<usize>() + self.col_edges.iter().map(Vec::len).sum::<usize>()
    }

    /// Edge list, one edge per line: `r<i> c<j> <weight>` or `c<j> r<i> <weight>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, es) in self.row_edges.iter().enumerate() {
            for (j, w) in es {
                let _ = writeln!(out, "r{} c{} {}", i, j, ExtValue::Finite(w.clone()));
            }
        }
        for (j, es) in self.col_edges.iter().enumerate() {
            for (i, w) in es {
                let _ = writeln!(out, "c{} r{} {}", j, i, ExtValue::Finite(w.clone()));
            }
        }
        out
    }
}

/// The game of `A ⊙ x R B ⊙ x`; the relation does not change the graph.
pub fn build_game(s: &MinPlusSystem) -> GameGraph {
    let row_edges = (0..s.rows()).map(|i| s.lhs.row(i).iter().map(|(j, a)| (*j, -a)).collect()).collect();
    let mut col_edges = vec![Vec::new(); s.cols()];
    for (i, j, b) in s.rhs.entries() {
        col_edges[j].push((i, b.clone()));
    }
    GameGraph { rows: s.rows(), cols: s.cols(), row_edges, col_edges }
}

/// Minimal credits per vertex; `∞` marks the row player's winning positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreditVector {
    pub rows: Vec<ExtValue>,
    pub cols: Vec<ExtValue>,
}

const INF: i128 = i128::MAX;
const IMPROVEMENT_ROUNDS: usize = 64;

#[derive(Clone, Debug)]
struct IntGame {
    rows: usize,
    cols: usize,
    row_adj: Vec<Vec<(u32, i128)>>,
    col_adj: Vec<Vec<(u32, i128)>>,
}

impl IntGame {
    /// Scales all weights by the LCM of their denominators.
    fn from_graph(g: &GameGraph) -> (IntGame, BigInt) {
        let all: Vec<ExtValue> =
            g.row_edges.iter().chain(&g.col_edges).flatten().map(|(_, w)| ExtValue::Finite(w.clone())).collect();
        let scale = denominator_lcm(&all);
        let conv = |w: &Rational| -> i128 {
            let s = w * Rational::from_integer(scale.clone());
            debug_assert!(s.is_integer());
            s.to_integer().to_i128().expect("scaled game weight exceeds 128 bits")
        };
        let row_adj = g.row_edges.iter().map(|es| es.iter().map(|(j, w)| (*j as u32, conv(w))).collect()).collect();
        let col_adj = g.col_edges.iter().map(|es| es.iter().map(|(i, w)| (*i as u32, conv(w))).collect()).collect();
        (IntGame { rows: g.rows, cols: g.cols, row_adj, col_adj }, scale)
    }

    /// `w ↦ V·w − 1`, which turns "value > 0" into "non-losing".
    fn strict_transform(&self) -> IntGame {
        let v = (self.rows + self.cols) as i128;
        let map = |adj: &Vec<Vec<(u32, i128)>>| -> Vec<Vec<(u32, i128)>> {
            adj.iter().map(|es| es.iter().map(|(u, w)| (*u, v * w - 1)).collect()).collect()
        };
        IntGame { rows: self.rows, cols: self.cols, row_adj: map(&self.row_adj), col_adj: map(&self.col_adj) }
    }

    fn cutoff(&self) -> i128 {
        let w_max = self.row_adj.iter().chain(&self.col_adj).flatten().map(|(_, w)| w.abs()).max().unwrap_or(0);
        let v = (self.rows + self.cols) as i128;
        (v - 1).max(0) * w_max
    }

    fn edge_count(&self) -> usize {
        self.row_adj.iter().chain(&self.col_adj).map(Vec::len).sum()
    }
}

struct Lifter<'a> {
    g: &'a IntGame,
    cutoff: i128,
    er: Vec<i128>,
    ec: Vec<i128>,
    /// For each row, the columns with an edge into it.
    row_preds: Vec<Vec<u32>>,
    /// For each column, the rows with an edge into it.
    col_preds: Vec<Vec<u32>>,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
}

impl<'a> Lifter<'a> {
    fn new(g: &'a IntGame) -> Self {
        let mut row_preds = vec![Vec::new(); g.rows];
        let mut col_preds = vec![Vec::new(); g.cols];
        for (i, es) in g.row_adj.iter().enumerate() {
            for (j, _) in es {
                col_preds[*j as usize].push(i as u32);
            }
        }
        for (j, es) in g.col_adj.iter().enumerate() {
            for (i, _) in es {
                row_preds[*i as usize].push(j as u32);
            }
        }
        let n = g.rows + g.cols;
        Lifter {
            g,
            cutoff: g.cutoff(),
            er: vec![0; g.rows],
            ec: vec![0; g.cols],
            row_preds,
            col_preds,
            queue: (0..n).collect(),
            queued: vec![true; n],
        }
    }

    fn clamp(&self, v: i128) -> i128 {
        if v == INF || v > self.cutoff {
            INF
        } else {
            v.max(0)
        }
    }

    fn row_value(&self, r: usize) -> i128 {
        let mut best = INF;
        for (c, w) in &self.g.row_adj[r] {
            let e = self.ec[*c as usize];
            if e != INF {
                best = best.min(e - w);
            }
        }
        self.clamp(best)
    }

    fn col_value(&self, c: usize) -> i128 {
        let mut best = 0;
        for (r, w) in &self.g.col_adj[c] {
            let e = self.er[*r as usize];
            if e == INF {
                return INF;
            }
            best = best.max(e - w);
        }
        self.clamp(best)
    }

    fn push(&mut self, v: usize) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push_back(v);
        }
    }

    fn push_preds(&mut self, v: usize) {
        let rows = self.g.rows;
        if v < rows {
            for k in 0..self.row_preds[v].len() {
                let c = self.row_preds[v][k] as usize;
                self.push(rows + c);
            }
        } else {
            for k in 0..self.col_preds[v - rows].len() {
                let r = self.col_preds[v - rows][k] as usize;
                self.push(r);
            }
        }
    }

    fn raise(&mut self, v: usize, value: i128) {
        let rows = self.g.rows;
        let cur = if v < rows { &mut self.er[v] } else { &mut self.ec[v - rows] };
        if value > *cur {
            *cur = value;
            self.push_preds(v);
        }
    }

    /// Processes up to `budget` vertices; true once the fixed point is reached.
    fn lift(&mut self, budget: usize) -> bool {
        let rows = self.g.rows;
        for _ in 0..budget {
            let Some(v) = self.queue.pop_front() else { return true };
            self.queued[v] = false;
            let value = if v < rows { self.row_value(v) } else { self.col_value(v - rows) };
            self.raise(v, value);
        }
        self.queue.is_empty()
    }

    /// The row player's current best reply at each column, with its weight.
    fn best_replies(&self) -> Vec<Option<(u32, i128)>> {
        self.g
            .col_adj
            .iter()
            .map(|es| {
                let mut best: Option<(u32, i128, i128)> = None;
                for &(r, w) in es {
                    let e = self.er[r as usize];
                    let score = if e == INF { INF } else { e - w };
                    if best.map_or(true, |(_, _, s)| score > s) {
                        best = Some((r, w, score));
                    }
                }
                best.map(|(r, w, _)| (r, w))
            })
            .collect()
    }

    /// Rows the column player loses from when the row player answers with `tau`.
    fn lost_rows(&self, tau: &[Option<(u32, i128)>]) -> Vec<bool> {
        let rows = self.g.rows;
        let dead: Vec<bool> = self.er.iter().map(|&e| e == INF).collect();
        let mut good = vec![false; rows];
        let mut adj: Vec<Vec<(u32, i128)>> = vec![Vec::new(); rows];
        for r in 0..rows {
            if dead[r] {
                continue;
            }
            for &(c, w1) in &self.g.row_adj[r] {
                if self.ec[c as usize] == INF {
                    continue;
                }
                match tau[c as usize] {
                    None => good[r] = true,
                    Some((r2, w2)) if !dead[r2 as usize] => adj[r].push((r2, w1 + w2)),
                    Some(_) => {}
                }
            }
        }
        let alive = rows - dead.iter().filter(|&&d| d).count();
        let factor = alive as i128 + 1;
        let (comp, members) = strongly_connected(&adj, &dead);
        let mut scratch = vec![0usize; rows];
        for (cid, m) in members.iter().enumerate() {
            if good[m[0] as usize] && m.len() == 1 {
                continue;
            }
            if has_nonnegative_cycle(m, cid as u32, &comp, &adj, factor, &mut scratch) {
                for &v in m {
                    good[v as usize] = true;
                }
            }
        }
        let mut radj: Vec<Vec<u32>> = vec![Vec::new(); rows];
        for (u, es) in adj.iter().enumerate() {
            for (v, _) in es {
                radj[*v as usize].push(u as u32);
            }
        }
        let mut stack: Vec<u32> = (0..rows as u32).filter(|&r| good[r as usize]).collect();
        while let Some(v) = stack.pop() {
            for &u in &radj[v as usize] {
                if !good[u as usize] {
                    good[u as usize] = true;
                    stack.push(u);
                }
            }
        }
        (0..rows).map(|r| dead[r] || !good[r]).collect()
    }

    /// Credits of the game in which the row player is held to `tau`, lifted
    /// from the current values. These never exceed the true credits.
    fn restricted_credits(&self, tau: &[Option<(u32, i128)>]) -> (Vec<i128>, Vec<i128>) {
        let lost = self.lost_rows(tau);
        let restricted = IntGame {
            rows: self.g.rows,
            cols: self.g.cols,
            row_adj: self.g.row_adj.clone(),
            col_adj: tau.iter().map(|t| t.iter().copied().collect()).collect(),
        };
        let mut inner = Lifter::new(&restricted);
        inner.cutoff = self.cutoff;
        for r in 0..self.g.rows {
            inner.er[r] = if lost[r] { INF } else { self.er[r] };
        }
        for (c, t) in tau.iter().enumerate() {
            inner.ec[c] = match t {
                Some((r, _)) if lost[*r as usize] => INF,
                _ => self.ec[c],
            };
        }
        inner.lift(usize::MAX);
        (inner.er, inner.ec)
    }

    /// Switches each column to a strictly better reply; false if none exists.
    fn improve(&self, tau: &mut [Option<(u32, i128)>]) -> bool {
        let score = |r: u32, w: i128| {
            let e = self.er[r as usize];
            if e == INF {
                INF
            } else {
                e - w
            }
        };
        let mut switched = false;
        for (c, t) in tau.iter_mut().enumerate() {
            let Some((r, w)) = *t else { continue };
            let mut best = (score(r, w), r, w);
            for &(r2, w2) in &self.g.col_adj[c] {
                let s2 = score(r2, w2);
                if s2 > best.0 {
                    best = (s2, r2, w2);
                }
            }
            if best.1 != r {
                *t = Some((best.1, best.2));
                switched = true;
            }
        }
        switched
    }

    /// Strategy improvement for the row player, merging each restricted
    /// solution into the current values. Returns whether anything rose.
    fn accelerate(&mut self) -> bool {
        let mut tau = self.best_replies();
        let mut changed = false;
        for _ in 0..IMPROVEMENT_ROUNDS {
            let (er, ec) = self.restricted_credits(&tau);
            let rows = self.g.rows;
            let mut rose = false;
            for (r, v) in er.into_iter().enumerate() {
                if v > self.er[r] {
                    self.raise(r, v);
                    rose = true;
                }
            }
            for (c, v) in ec.into_iter().enumerate() {
                if v > self.ec[c] {
                    self.raise(rows + c, v);
                    rose = true;
                }
            }
            changed |= rose;
            if !self.improve(&mut tau) && !rose {
                break;
            }
        }
        changed
    }

    fn run(mut self) -> (Vec<i128>, Vec<i128>) {
        for r in 0..self.g.rows {
            if self.g.row_adj[r].is_empty() {
                self.er[r] = INF;
            }
        }
        let mut interval = self.g.rows + self.g.cols + self.g.edge_count();
        let mut rounds = 0usize;
        while !self.lift(interval) {
            rounds += 1;
            if !self.accelerate() {
                interval = interval.saturating_mul(2);
            }
        }
        log::debug!(
            "game {}x{}: {} acceleration rounds, {} lost columns",
            self.g.rows,
            self.g.cols,
            rounds,
            self.ec.iter().filter(|&&e| e == INF).count()
        );
        (self.er, self.ec)
    }
}

/// Tarjan's algorithm over the non-dead vertices, iteratively.
/// Returns the component of each vertex and the members of each component.
fn strongly_connected(adj: &[Vec<(u32, i128)>], dead: &[bool]) -> (Vec<u32>, Vec<Vec<u32>>) {
    let n = adj.len();
    const NONE: u32 = u32::MAX;
    let mut index = vec![NONE; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![NONE; n];
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    let mut next = 0u32;
    let mut call: Vec<(u32, usize)> = Vec::new();
    for root in 0..n {
        if dead[root] || index[root] != NONE {
            continue;
        }
        call.push((root as u32, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root as u32);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut k)) = call.last_mut() {
            let vu = v as usize;
            if *k < adj[vu].len() {
                let w = adj[vu][*k].0 as usize;
                *k += 1;
                if dead[w] {
                    continue;
                }
                if index[w] == NONE {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, 0));
                } else if on_stack[w] {
                    low[vu] = low[vu].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p as usize] = low[p as usize].min(low[vu]);
                }
                if low[vu] == index[vu] {
                    let cid = members.len() as u32;
                    let mut m = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w as usize] = false;
                        comp[w as usize] = cid;
                        m.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.push(m);
                }
            }
        }
    }
    (comp, members)
}

/// Whether the component contains a cycle of total weight `≥ 0`.
///
/// With `w'' = factor·w + 1` and `factor` above the longest cycle length, a
/// cycle has weight `≥ 0` iff its `w''` weight is positive, which a longest-path
/// label-correcting search detects as a cycle among its predecessor links.
fn has_nonnegative_cycle(
    members: &[u32],
    cid: u32,
    comp: &[u32],
    adj: &[Vec<(u32, i128)>],
    factor: i128,
    pos: &mut [usize],
) -> bool {
    let k = members.len();
    let mut internal_edges = 0usize;
    for (i, &v) in members.iter().enumerate() {
        pos[v as usize] = i;
        internal_edges += adj[v as usize].iter().filter(|(u, _)| comp[*u as usize] == cid).count();
    }
    if internal_edges == 0 {
        return false;
    }
    let limit = k.saturating_mul(internal_edges).saturating_add(1);
    let mut dist = vec![0i128; k];
    let mut pred = vec![usize::MAX; k];
    let mut queued = vec![true; k];
    let mut queue: VecDeque<usize> = (0..k).collect();
    let mut relaxations = 0usize;
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        for &(v, w) in &adj[members[u] as usize] {
            if comp[v as usize] != cid {
                continue;
            }
            let lv = pos[v as usize];
            let nd = dist[u] + factor * w + 1;
            if nd > dist[lv] {
                dist[lv] = nd;
                pred[lv] = u;
                relaxations += 1;
                if relaxations > limit || (relaxations % k == 0 && pred_has_cycle(&pred)) {
                    return true;
                }
                if !queued[lv] {
                    queued[lv] = true;
                    queue.push_back(lv);
                }
            }
        }
    }
    false
}

fn pred_has_cycle(pred: &[usize]) -> bool {
    let k = pred.len();
    let mut mark = vec![0usize; k];
    for start in 0..k {
        if mark[start] != 0 {
            continue;
        }
        let walk = start + 1;
        let mut v = start;
        while v != usize::MAX && mark[v] == 0 {
            mark[v] = walk;
            v = pred[v];
        }
        if v != usize::MAX && mark[v] == walk {
            return true;
        }
    }
    false
}

fn to_ext(v: i128, denom: &BigInt) -> ExtValue {
    if v == INF {
        ExtValue::Infinity
    } else {
        ExtValue::Finite(Rational::new(BigInt::from(v), denom.clone()))
    }
}

fn credits_scaled(g: &IntGame, denom: &BigInt) -> CreditVector {
    let (er, ec) = Lifter::new(g).run();
    CreditVector {
        rows: er.iter().map(|&v| to_ext(v, denom)).collect(),
        cols: ec.iter().map(|&v| to_ext(v, denom)).collect(),
    }
}

/// Least fixed point of the clamped Bellman operator.
pub fn min_credits(g: &GameGraph) -> CreditVector {
    let (ig, scale) = IntGame::from_graph(g);
    credits_scaled(&ig, &scale)
}

/// Credits of the `V·w − 1` game, divided by `V`; finite exactly where the
/// column player wins outright.
pub fn strict_credits(g: &GameGraph) -> CreditVector {
    let (ig, scale) = IntGame::from_graph(g);
    let v = BigInt::from(g.vertex_count().max(1));
    credits_scaled(&ig.strict_transform(), &(scale * v))
}

fn satisfies(x: &Point, s: &MinPlusSystem, s_fin: &[usize], r_fin: &[usize]) -> bool {
    s_fin.iter().all(|&j| x[j].is_finite()) && r_fin.iter().all(|&i| s.lhs.row_eval(i, x).0.is_finite())
}

/// Solves `A ⊙ x ≤ B ⊙ x` with `x_j` finite for `j ∈ s_fin` and `(A ⊙ x)_i`
/// finite for `i ∈ r_fin`. The minimal credits have the largest finite
/// support of all solutions, so `None` means no such solution exists.
pub fn solve_nonstrict(s: &MinPlusSystem, s_fin: &[usize], r_fin: &[usize]) -> Option<Point> {
    assert_eq!(s.relation, Relation::Leq, "solve_nonstrict expects a ≤ system");
    let (pruned, _) = prune_identical_rows(s);
    let x = min_credits(&build_game(&pruned)).cols;
    assert!(check_minplus_solution(s, &x).unwrap_or(false), "credit vector fails the system");
    satisfies(&x, s, s_fin, r_fin).then_some(x)
}

/// Solves `A ⊙ x < B ⊙ x` (rows with both sides `∞` allowed) under the same
/// finiteness requirements, through the strict transform.
pub fn solve_strict(s: &MinPlusSystem, s_fin: &[usize], r_fin: &[usize]) -> Option<Point> {
    assert_eq!(s.relation, Relation::Lt, "solve_strict expects a < system");
    let x = strict_credits(&build_game(s)).cols;
    assert!(check_minplus_solution(s, &x).unwrap_or(false), "strict credit vector fails the system");
    satisfies(&x, s, s_fin, r_fin).then_some(x)
}

/// Outcome of the mean payoff game from one starting vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Winner {
    /// Mean payoff `> 0`.
    Column,
    /// Mean payoff `= 0`.
    Draw,
    /// Mean payoff `< 0`.
    Row,
}

/// Winner per row vertex and per column vertex.
pub fn winners(g: &GameGraph) -> (Vec<Winner>, Vec<Winner>) {
    let weak = min_credits(g);
    let strong = strict_credits(g);
    let classify = |w: &ExtValue, s: &ExtValue| match (w.is_finite(), s.is_finite()) {
        (_, true) => Winner::Column,
        (true, false) => Winner::Draw,
        (false, false) => Winner::Row,
    };
    (
        weak.rows.iter().zip(&strong.rows).map(|(w, s)| classify(w, s)).collect(),
        weak.cols.iter().zip(&strong.cols).map(|(w, s)| classify(w, s)).collect(),
    )
}

impl CreditVector {
    pub fn is_zero_everywhere(&self) -> bool {
        self.rows.iter().chain(&self.cols).all(|v| v.finite().map_or(false, Zero::is_zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linsys::TropMatrix;
    use crate::value::rat;

    const I: Option<i64> = None;

    fn sys(a: &[&[Option<i64>]], b: &[&[Option<i64>]], rel: Relation) -> MinPlusSystem {
        MinPlusSystem::new(TropMatrix::from_ints(a), TropMatrix::from_ints(b), rel).unwrap()
    }

    fn pt(v: &[Option<i64>]) -> Point {
        v.iter().map(|x| x.map_or(ExtValue::Infinity, ExtValue::int)).collect()
    }

    #[test]
    fn encoding() {
        let g = build_game(&sys(&[&[Some(0)]], &[&[Some(1)]], Relation::Leq));
        assert_eq!(g.row_edges(0), &[(0, rat(0))]);
        assert_eq!(g.col_edges(0), &[(0, rat(1))]);
        let g = build_game(&sys(&[&[Some(0), I]], &[&[Some(0), Some(0)]], Relation::Leq));
        assert_eq!(g.row_edges(0).len(), 1);
        assert_eq!(g.dump(), "r0 c0 0\nc0 r0 0\nc1 r0 0\n");
    }

    #[test]
    fn one_by_one_credits() {
        let c = |a, b| min_credits(&build_game(&sys(&[&[Some(a)]], &[&[Some(b)]], Relation::Leq))).cols[0].clone();
        assert_eq!(c(0, 1), ExtValue::zero());
        assert_eq!(c(1, 0), ExtValue::Infinity);
        assert_eq!(c(0, 0), ExtValue::zero());
    }

    #[test]
    fn stuck_vertices() {
        // c1 has no outgoing edge, r0 reaches only c1.
        let g = build_game(&sys(&[&[I, Some(5)]], &[&[Some(0), I]], Relation::Leq));
        let e = min_credits(&g);
        assert_eq!(e.cols[1], ExtValue::zero());
        assert_eq!(e.rows[0], ExtValue::int(5));
        // r0 has no outgoing edge.
        let g = build_game(&sys(&[&[I]], &[&[Some(0)]], Relation::Leq));
        let e = min_credits(&g);
        assert_eq!(e.rows[0], ExtValue::Infinity);
        assert_eq!(e.cols[0], ExtValue::Infinity);
    }

    #[test]
    fn nonstrict_solutions() {
        let s = sys(&[&[Some(0)]], &[&[Some(1)]], Relation::Leq);
        assert_eq!(solve_nonstrict(&s, &[0], &[]), Some(pt(&[Some(0)])));
        let s = sys(&[&[Some(1)]], &[&[Some(0)]], Relation::Leq);
        assert_eq!(solve_nonstrict(&s, &[0], &[]), None);
        assert_eq!(solve_nonstrict(&s, &[], &[]), Some(pt(&[I])));
        let s = sys(
            &[&[Some(0), Some(1)], &[Some(1), Some(0)]],
            &[&[Some(0), Some(1)], &[Some(1), Some(0)]],
            Relation::Leq,
        );
        assert_eq!(solve_nonstrict(&s, &[0, 1], &[]), Some(pt(&[Some(0), Some(0)])));
    }

    #[test]
    fn credits_need_positive_values() {
        // x0 + 2 <= x1 and x1 <= x0 + 3 (as min-plus rows).
        let s = sys(&[&[Some(2), I], &[I, Some(0)]], &[&[I, Some(0)], &[Some(3), I]], Relation::Leq);
        let x = solve_nonstrict(&s, &[0, 1], &[]).unwrap();
        assert_eq!(x, pt(&[Some(0), Some(2)]));
    }

    #[test]
    fn fractional_weights() {
        let a = TropMatrix::from_dense(&[vec![ExtValue::ratio(1, 2), ExtValue::Infinity]]).unwrap();
        let b = TropMatrix::from_dense(&[vec![ExtValue::Infinity, ExtValue::zero()]]).unwrap();
        let s = MinPlusSystem::new(a, b, Relation::Leq).unwrap();
        let x = solve_nonstrict(&s, &[0, 1], &[]).unwrap();
        assert_eq!(x, vec![ExtValue::zero(), ExtValue::ratio(1, 2)]);
    }

    #[test]
    fn strict_solutions() {
        let s = sys(&[&[Some(0)]], &[&[Some(1)]], Relation::Lt);
        let x = solve_strict(&s, &[0], &[]).unwrap();
        assert!(x[0].is_finite());
        let s = sys(&[&[Some(0)]], &[&[Some(0)]], Relation::Lt);
        assert_eq!(solve_strict(&s, &[0], &[]), None);
        assert_eq!(solve_strict(&s, &[], &[]), Some(pt(&[I])));
        let s = sys(&[&[Some(0), I]], &[&[I, Some(0)]], Relation::Lt);
        let x = solve_strict(&s, &[], &[]).unwrap();
        assert!(check_minplus_solution(&s, &x).unwrap());
    }

    #[test]
    fn winner_classes() {
        let w = |a, b| winners(&build_game(&sys(&[&[Some(a)]], &[&[Some(b)]], Relation::Leq))).1[0];
        assert_eq!(w(0, 1), Winner::Column);
        assert_eq!(w(1, 0), Winner::Row);
        assert_eq!(w(0, 0), Winner::Draw);
    }

    #[test]
    fn long_losing_chain_is_accelerated() {
        // A cycle through 200 rows that loses 1 per lap with large positive
        // detours available only at a losing price.
        let n = 200;
        let mut a = vec![vec![None; n]; n];
        let mut b = vec![vec![None; n]; n];
        for i in 0..n {
            a[i][i] = Some(1000);
            b[(i + 1) % n][i] = Some(999);
        }
        let ar: Vec<&[Option<i64>]> = a.iter().map(|r| r.as_slice()).collect();
        let br: Vec<&[Option<i64>]> = b.iter().map(|r| r.as_slice()).collect();
        let s = sys(&ar, &br, Relation::Leq);
        let e = min_credits(&build_game(&s));
        assert!(e.cols.iter().all(ExtValue::is_infinite));
    }
}
