//! Translations between tropical and min-plus systems.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::{CoeffFn, MinPlusPolynomial, Point, TropicalPolynomial};
use crate::value::{Exponent, ExtValue, Rational};

/// Each `f = min(l_1, …, l_m)` becomes the equations `f = min_{p ≠ i} l_p`.
/// A single monomial is compared with the empty minimum `∞`.
pub fn tropical_to_minplus(t: &[TropicalPolynomial]) -> Vec<MinPlusPolynomial> {
    let mut out = Vec::new();
    for f in t {
        for e in f.phi().keys() {
            let mut rest = f.phi().clone();
            rest.remove(e);
            let rhs = TropicalPolynomial::from_fn(f.num_vars(), rest);
            out.push(MinPlusPolynomial { lhs: f.clone(), rhs });
        }
    }
    out
}

/// `H(a) = (a, a)`.
pub fn embed(a: &[ExtValue]) -> Point {
    a.iter().chain(a).cloned().collect()
}

/// The inverse of [`embed`] on its image.
pub fn unembed(p: &[ExtValue]) -> Option<Point> {
    if p.len() % 2 != 0 {
        return None;
    }
    let (a, b) = p.split_at(p.len() / 2);
    (a == b).then(|| a.to_vec())
}

fn left(e: &Exponent) -> Exponent {
    let mut v = e.0.clone();
    v.resize(2 * e.dim(), 0);
    Exponent(v)
}

fn right(e: &Exponent) -> Exponent {
    let mut v = vec![0; e.dim()];
    v.extend_from_slice(&e.0);
    Exponent(v)
}

fn insert_min(terms: &mut CoeffFn, e: Exponent, c: &Rational) {
    match terms.get_mut(&e) {
        Some(old) if *old <= *c => {}
        Some(old) => *old = c.clone(),
        None => {
            terms.insert(e, c.clone());
        }
    }
}

/// The polynomial `min(d(x), d(x′) for d in doubled, s(x) for s in single)`
/// over `2n` variables, as one or more tropical polynomials.
///
/// A doubled constant `c` cannot appear twice in one polynomial. If the
/// single side has a smaller constant, `c` never attains the minimum and is
/// dropped; otherwise the polynomial is multiplied by `x_i` (one copy of `c`
/// by `x_i`, the other by `x_i′`) for each `i`, which keeps every tie at
/// points with some finite `x_i = x_i′` and at the all-`∞` point.
fn doubled_min(n: usize, doubled: &CoeffFn, single: &CoeffFn) -> Vec<TropicalPolynomial> {
    let zero = Exponent::zero(n);
    let c_doubled = doubled.get(&zero);
    let c_single = single.get(&zero);
    if c_doubled.is_some_and(|c| c_single.is_none_or(|s| s >= c)) {
        let mut out = Vec::new();
        for i in 0..n {
            let ui = Exponent::unit(2 * n, i);
            let ui2 = Exponent::unit(2 * n, n + i);
            let mut terms = CoeffFn::new();
            for (e, c) in doubled {
                insert_min(&mut terms, left(e).add(&ui), c);
                insert_min(&mut terms, right(e).add(&ui2), c);
            }
            for (e, c) in single {
                insert_min(&mut terms, left(e).add(&ui), c);
            }
            out.push(TropicalPolynomial::from_fn(2 * n, terms));
        }
        return out;
    }
    let mut terms = CoeffFn::new();
    for (e, c) in doubled {
        if e.is_zero() {
            continue;
        }
        insert_min(&mut terms, left(e), c);
        insert_min(&mut terms, right(e), c);
    }
    for (e, c) in single {
        insert_min(&mut terms, left(e), c);
    }
    vec![TropicalPolynomial::from_fn(2 * n, terms)]
}

/// A tropical system in `2n` variables whose roots are exactly `H(a)` for the
/// roots `a` of the min-plus system.
///
/// For `(min_j m_j, min_p l_p)`: `x_i ⊕ x_i′` for every `i`, then
/// `min(m_1(x), m_1(x′), …, m_k(x), m_k(x′), l_p(x))` for every `p` and
/// `min(l_1(x), l_1(x′), …, m_j(x))` for every `j`.
pub fn minplus_to_tropical(a: &[MinPlusPolynomial], n: usize) -> Vec<TropicalPolynomial> {
    let mut out = Vec::new();
    for i in 0..n {
        let terms = [(Exponent::unit(2 * n, i), ExtValue::zero()), (Exponent::unit(2 * n, n + i), ExtValue::zero())];
        out.push(TropicalPolynomial::new(2 * n, terms).expect("distinct units"));
    }
    for pair in a {
        let (m, l) = (pair.lhs.phi(), pair.rhs.phi());
        for (e, c) in l {
            let single: CoeffFn = [(e.clone(), c.clone())].into_iter().collect();
            out.extend(doubled_min(n, m, &single));
        }
        for (e, c) in m {
            let single: CoeffFn = [(e.clone(), c.clone())].into_iter().collect();
            out.extend(doubled_min(n, l, &single));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::is_root_system;

    fn grid() -> Vec<ExtValue> {
        let mut g: Vec<ExtValue> = (-2..=3).map(ExtValue::int).collect();
        g.push(ExtValue::Infinity);
        g
    }

    #[test]
    fn tropical_side_keeps_roots() {
        let f = TropicalPolynomial::from_ints(1, &[(0, &[0]), (0, &[1])]);
        let m = tropical_to_minplus(&[f.clone()]);
        assert_eq!(m.len(), 2);
        for x in grid() {
            assert_eq!(is_root_system(&m, &[x.clone()]).unwrap(), f.is_root(&[x]).unwrap());
        }
        let single = TropicalPolynomial::from_ints(1, &[(0, &[1])]);
        let m = tropical_to_minplus(&[single]);
        assert!(m[0].rhs.is_empty());
        assert!(is_root_system(&m, &[ExtValue::Infinity]).unwrap());
        assert!(!is_root_system(&m, &[ExtValue::int(0)]).unwrap());
    }

    #[test]
    fn minplus_side_example() {
        // x = 1.
        let a = [MinPlusPolynomial::new(
            TropicalPolynomial::from_ints(1, &[(0, &[1])]),
            TropicalPolynomial::from_ints(1, &[(1, &[0])]),
        )
        .unwrap()];
        let t = minplus_to_tropical(&a, 1);
        let mut roots = Vec::new();
        for x in grid() {
            for y in grid() {
                if is_root_system(&t, &[x.clone(), y.clone()]).unwrap() {
                    roots.push((x.clone(), y));
                }
            }
        }
        assert_eq!(roots, vec![(ExtValue::int(1), ExtValue::int(1))]);
    }

    #[test]
    fn constants_on_both_sides() {
        // (0, 0) holds everywhere, (0, 1) nowhere.
        let c = |v: i64| TropicalPolynomial::from_ints(1, &[(v, &[0])]);
        let always = minplus_to_tropical(&[MinPlusPolynomial::new(c(0), c(0)).unwrap()], 1);
        let never = minplus_to_tropical(&[MinPlusPolynomial::new(c(0), c(1)).unwrap()], 1);
        for x in grid() {
            let p = embed(&[x]);
            assert!(is_root_system(&always, &p).unwrap());
            assert!(!is_root_system(&never, &p).unwrap());
        }
    }

    #[test]
    fn embedding_round_trip() {
        let a = vec![ExtValue::int(2), ExtValue::Infinity];
        assert_eq!(unembed(&embed(&a)), Some(a));
        assert_eq!(unembed(&[ExtValue::int(0), ExtValue::int(1)]), None);
    }
}
