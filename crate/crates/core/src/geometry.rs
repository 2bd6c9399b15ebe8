//! Extended Newton polytopes and root extraction from Macaulay solutions.
//!
//! A polytope is kept as a finite set of lifted generators `(v, h)`; every
//! point above a generator belongs to it as well. All questions about the
//! polytope (its bottom, faces and supporting hyperplanes) are answered by
//! exact linear programs over the generators.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::lp::{Lp, LpOutcome, RowKind};
use crate::macaulay::MonomialIndex;
use crate::poly::{is_root_system, Color, Point, Polynomial};
use crate::value::{Exponent, ExtValue, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    /// No integer point lies in both domains.
    EmptyDomain,
    /// The face has no non-vertical supporting hyperplane.
    VerticalFace { face: Vec<usize> },
    /// The extracted point fails the root check.
    NotARoot { point: Point },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::EmptyDomain => f.write_str("the solution and the bottom have no common domain point"),
            GeometryError::VerticalFace { face } => write!(f, "face {face:?} has only vertical supporting hyperplanes"),
            GeometryError::NotARoot { point } => {
                f.write_str("extracted point is not a root: ")?;
                for (i, v) in point.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for GeometryError {}

/// Generators of a polytope in `ℝⁿ × ℝ`, closed upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedPointSet {
    pub dim: usize,
    pub points: Vec<(Vec<Rational>, Rational)>,
    pub colors: Option<Vec<Color>>,
}

fn exp_point(e: &Exponent) -> Vec<Rational> {
    e.0.iter().map(|&i| Rational::from_integer(i.into())).collect()
}

impl LiftedPointSet {
    /// Deduplicates horizontal positions, keeping the lowest height.
    pub fn new(dim: usize, points: impl IntoIterator<Item = (Vec<Rational>, Rational)>) -> Self {
        let mut best: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
        for (v, h) in points {
            assert_eq!(v.len(), dim, "generator dimension");
            match best.get_mut(&v) {
                Some(old) if *old <= h => {}
                Some(old) => *old = h,
                None => {
                    best.insert(v, h);
                }
            }
        }
        LiftedPointSet { dim, points: best.into_iter().collect(), colors: None }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Dilation about the origin.
    pub fn scale(&self, k: &Rational) -> Self {
        let points = self.points.iter().map(|(v, h)| (v.iter().map(|x| x * k).collect(), h * k)).collect();
        LiftedPointSet { dim: self.dim, points, colors: self.colors.clone() }
    }

    pub fn minkowski_sum(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "summand dimension");
        let mut out = Vec::with_capacity(self.len() * other.len());
        for (v, h) in &self.points {
            for (w, g) in &other.points {
                out.push((v.iter().zip(w).map(|(a, b)| a + b).collect(), h + g));
            }
        }
        LiftedPointSet::new(self.dim, out)
    }

    /// Drops generators that are not vertices of the lower hull.
    pub fn reduced(&self) -> Self {
        let mut keep: Vec<bool> = vec![true; self.len()];
        for i in 0..self.len() {
            keep[i] = false;
            let others = self.subset(&keep);
            let (v, h) = &self.points[i];
            if !matches!(bottom(&others, v), Some(b) if b <= *h) {
                keep[i] = true;
            }
        }
        self.subset(&keep)
    }

    fn subset(&self, keep: &[bool]) -> Self {
        let pick = |i: &usize| keep[*i];
        let idx: Vec<usize> = (0..self.len()).filter(pick).collect();
        LiftedPointSet {
            dim: self.dim,
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
            colors: self.colors.as_ref().map(|c| idx.iter().map(|&i| c[i]).collect()),
        }
    }

    /// One generator per line: coordinates, then the height.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (v, h) in &self.points {
            for x in v {
                s.push_str(&format!("{x} "));
            }
            s.push_str(&format!("{h}\n"));
        }
        s
    }
}

/// The graph points `(I, φ(I))`, colored by side for min-plus polynomials.
pub fn newton<P: Polynomial>(f: &P) -> LiftedPointSet {
    let phi = f.colored();
    let points = phi.iter().map(|(e, (c, _))| (exp_point(e), c.clone())).collect();
    let colors = P::COLORED.then(|| phi.values().map(|(_, col)| *col).collect());
    LiftedPointSet { dim: f.num_vars(), points, colors }
}

/// `(n+2)·(P₁ + … + P_k)` with every pairwise sum kept.
pub fn envelope(sets: &[LiftedPointSet], n: usize) -> LiftedPointSet {
    assert!(!sets.is_empty(), "envelope of no polytopes");
    let mut acc = sets[0].clone();
    acc.colors = None;
    for s in &sets[1..] {
        acc = acc.minkowski_sum(s);
    }
    acc.scale(&Rational::from_integer((n as i64 + 2).into()))
}

/// The same polytope as [`envelope`], with only lower-hull vertices as generators.
pub fn envelope_reduced(sets: &[LiftedPointSet], n: usize) -> LiftedPointSet {
    assert!(!sets.is_empty(), "envelope of no polytopes");
    let mut acc = sets[0].reduced();
    acc.colors = None;
    for s in &sets[1..] {
        acc = acc.minkowski_sum(&s.reduced()).reduced();
    }
    acc.scale(&Rational::from_integer((n as i64 + 2).into()))
}

/// `β_P(x)`: the lowest height over `x`, or `None` outside the projection.
pub fn bottom(p: &LiftedPointSet, x: &[Rational]) -> Option<Rational> {
    if p.is_empty() {
        return None;
    }
    let g = p.len();
    let mut lp = Lp::new(g);
    lp.objective = p.points.iter().map(|(_, h)| h.clone()).collect();
    for k in 0..p.dim {
        lp.row(p.points.iter().map(|(v, _)| v[k].clone()).collect(), RowKind::Eq, x[k].clone());
    }
    lp.row(vec![Rational::one(); g], RowKind::Eq, Rational::one());
    match lp.minimize() {
        LpOutcome::Optimal { value, .. } => Some(value),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("convex weights are bounded"),
    }
}

/// A face given by the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub generators: Vec<usize>,
    pub dim: usize,
}

/// The smallest face containing the bottom point `(x, height)`.
///
/// A generator lies on that face iff it carries positive weight in some
/// convex representation of the point, so one LP maximizing `Σ min(μ_g, 1)`
/// over scaled representations `μ` finds all of them.
pub fn minimal_face(p: &LiftedPointSet, x: &[Rational], height: &Rational) -> Face {
    let g = p.len();
    // Variables: μ (g), z (g), σ.
    let width = 2 * g + 1;
    let mut lp = Lp::new(width);
    for i in 0..g {
        lp.objective[g + i] = -Rational::one();
        let mut row = vec![Rational::zero(); width];
        row[g + i] = Rational::one();
        row[i] = -Rational::one();
        lp.row(row.clone(), RowKind::Le, Rational::zero());
        row[i] = Rational::zero();
        lp.row(row, RowKind::Le, Rational::one());
    }
    let mut constraint = |coef: &dyn Fn(usize) -> Rational, target: &Rational| {
        let mut row = vec![Rational::zero(); width];
        for (i, r) in row.iter_mut().enumerate().take(g) {
            *r = coef(i);
        }
        row[2 * g] = -target.clone();
        lp.row(row, RowKind::Eq, Rational::zero());
    };
    for k in 0..p.dim {
        constraint(&|i| p.points[i].0[k].clone(), &x[k]);
    }
    constraint(&|_| Rational::one(), &Rational::one());
    constraint(&|i| p.points[i].1.clone(), height);
    let LpOutcome::Optimal { x: sol, .. } = lp.minimize() else {
        panic!("minimal_face: point is not in the polytope");
    };
    let generators: Vec<usize> = (0..g).filter(|&i| sol[g + i].is_positive()).collect();
    let dim = affine_rank(generators.iter().map(|&i| {
        let (v, h) = &p.points[i];
        let mut w = v.clone();
        w.push(h.clone());
        w
    }));
    Face { generators, dim }
}

fn affine_rank(points: impl Iterator<Item = Vec<Rational>>) -> usize {
    let pts: Vec<Vec<Rational>> = points.collect();
    let Some(first) = pts.first() else { return 0 };
    let mut rows: Vec<Vec<Rational>> =
        pts[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    let cols = first.len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, piv);
        let pr = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pr[c];
                for (v, pv) in row.iter_mut().zip(&pr) {
                    *v -= &f * pv;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A non-vertical hyperplane `h = ⟨s, v⟩ + c` below every generator and
/// through every generator of `face`, with `s` lexicographically minimal.
///
/// A coordinate unbounded below takes `max − 1` when the maximum exists and
/// `0` when the coordinate is free.
pub fn support_hyperplane(p: &LiftedPointSet, face: &Face) -> Result<(Vec<Rational>, Rational), GeometryError> {
    let n = p.dim;
    let on_face: Vec<bool> = (0..p.len()).map(|i| face.generators.contains(&i)).collect();
    let mut fixed: Vec<Rational> = Vec::with_capacity(n);
    let base = |fixed: &[Rational]| {
        let mut lp = Lp::new(n + 1);
        lp.free = vec![true; n + 1];
        for (i, (v, h)) in p.points.iter().enumerate() {
            let mut row = v.clone();
            row.push(Rational::one());
            lp.row(row, if on_face[i] { RowKind::Eq } else { RowKind::Le }, h.clone());
        }
        for (j, s) in fixed.iter().enumerate() {
            let mut row = vec![Rational::zero(); n + 1];
            row[j] = Rational::one();
            lp.row(row, RowKind::Eq, s.clone());
        }
        lp
    };
    let vertical = || GeometryError::VerticalFace { face: face.generators.clone() };
    for j in 0..n {
        let mut lp = base(&fixed);
        lp.objective[j] = Rational::one();
        let v = match lp.minimize() {
            LpOutcome::Optimal { value, .. } => value,
            LpOutcome::Infeasible => return Err(vertical()),
            LpOutcome::Unbounded => match lp.maximize() {
                LpOutcome::Optimal { value, .. } => value - Rational::one(),
                LpOutcome::Unbounded => Rational::zero(),
                LpOutcome::Infeasible => return Err(vertical()),
            },
        };
        fixed.push(v);
    }
    let lp = base(&fixed);
    let LpOutcome::Optimal { x, .. } = lp.minimize() else { return Err(vertical()) };
    if let Some(&g) = face.generators.first() {
        let (v, h) = &p.points[g];
        let c = h - v.iter().zip(&fixed).map(|(a, b)| a * b).sum::<Rational>();
        return Ok((fixed, c));
    }
    Ok((fixed, x[n].clone()))
}

/// `β_{P₀}` on the columns of a Macaulay index, where defined.
pub fn bottom_on_index(p0: &LiftedPointSet, index: &MonomialIndex) -> Vec<Option<Rational>> {
    index.exponents().iter().map(|e| bottom(p0, &exp_point(e))).collect()
}

/// The envelope of a system's Newton polytopes.
pub fn system_envelope<P: Polynomial>(system: &[P]) -> LiftedPointSet {
    let n = system.first().map(|p| p.num_vars()).unwrap_or(0);
    let parts: Vec<LiftedPointSet> = system.iter().map(newton).collect();
    envelope_reduced(&parts, n)
}

/// Recovers a root from a Macaulay solution `y` (with `y_I = ⟨a, I⟩` for a root `a`).
///
/// Takes the points of `Sing(−y, β₀)`, i.e. the minimizers of `β₀(I) + y_I`,
/// picks one whose minimal face has the largest dimension (ties: smallest
/// exponent), and reads the root off a supporting hyperplane of that face.
pub fn extract_root<P: Polynomial>(
    system: &[P],
    index: &MonomialIndex,
    y: &[ExtValue],
) -> Result<Point, GeometryError> {
    let p0 = system_envelope(system);
    extract_root_with(system, &p0, index, y)
}

pub fn extract_root_with<P: Polynomial>(
    system: &[P],
    p0: &LiftedPointSet,
    index: &MonomialIndex,
    y: &[ExtValue],
) -> Result<Point, GeometryError> {
    let mut best: Option<Rational> = None;
    let mut sing: Vec<(usize, Rational)> = Vec::new();
    for (col, e) in index.exponents().iter().enumerate() {
        let Some(yv) = y[col].finite() else { continue };
        let Some(b) = bottom(p0, &exp_point(e)) else { continue };
        let d = &b + yv;
        match &best {
            Some(m) if d > *m => {}
            Some(m) if d == *m => sing.push((col, b)),
            _ => {
                best = Some(d);
                sing.clear();
                sing.push((col, b));
            }
        }
    }
    if sing.is_empty() {
        return Err(GeometryError::EmptyDomain);
    }
    let mut chosen: Option<(usize, &Exponent, Face)> = None;
    for (col, b) in &sing {
        let e = index.exponent(*col);
        let face = minimal_face(p0, &exp_point(e), b);
        let better = match &chosen {
            None => true,
            Some((_, ce, cf)) => face.dim > cf.dim || (face.dim == cf.dim && e.0 < ce.0),
        };
        if better {
            chosen = Some((*col, e, face));
        }
    }
    let (_, e, face) = chosen.expect("nonempty singular set");
    log::debug!("extract_root: point {:?} on a face of dimension {}", e.0, face.dim);
    let (s, _) = support_hyperplane(p0, &face)?;
    let root: Point = s.iter().map(|v| ExtValue::Finite(-v.clone())).collect();
    if is_root_system(system, &root).unwrap_or(false) {
        Ok(root)
    } else {
        Err(GeometryError::NotARoot { point: root })
    }
}

/// Finds a shift `(α, t)` with `P_j + (α, t) ⊆ P₀` passing through the bottom
/// point over `x`, such that every generator of the shifted copy that meets
/// the bottom shares a bottom segment with that point.
pub fn touching_translation(
    pj: &LiftedPointSet,
    p0: &LiftedPointSet,
    x: &[Rational],
) -> Option<(Vec<Rational>, Rational)> {
    let hq = bottom(p0, x)?;
    let two = Rational::from_integer(2.into());
    'candidates: for (g, hg) in &pj.points {
        let alpha: Vec<Rational> = x.iter().zip(g).map(|(a, b)| a - b).collect();
        let t = &hq - hg;
        for (v, h) in &pj.points {
            let v2: Vec<Rational> = v.iter().zip(&alpha).map(|(a, b)| a + b).collect();
            let h2 = h + &t;
            let Some(b) = bottom(p0, &v2) else { continue 'candidates };
            if b > h2 {
                continue 'candidates;
            }
            if b == h2 {
                let mid: Vec<Rational> = v2.iter().zip(x).map(|(a, b)| (a + b) / &two).collect();
                let mh = (&h2 + &hq) / &two;
                if bottom(p0, &mid) != Some(mh) {
                    continue 'candidates;
                }
            }
        }
        return Some((alpha, t));
    }
    None
}
