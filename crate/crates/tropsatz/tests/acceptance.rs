//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropsatz_core::duality::{
    minplus_alternative, tropical_alternative, verify_minplus_dual, verify_minplus_primal, verify_tropical_dual,
    verify_tropical_primal, DualityOutcome, Flavor,
};
use tropsatz_core::game::{build_game, min_credits, strict_credits, winners, Winner};
use tropsatz_core::geometry::{bottom, envelope_reduced, newton, touching_translation, LiftedPointSet};
use tropsatz_core::linsys::{check_minplus_solution, check_tropical_solution, MinPlusSystem, Relation, TropMatrix};
use tropsatz_core::macaulay::{
    build_macaulay_minplus, build_macaulay_tropical, degree_bound, monomial_vector, MacaulaySystem, Semiring,
};
use tropsatz_core::nullsatz::{
    build_f_prime, decide, infinity_restrict, macaulay_outcome, verify_primary, Decision, Options, System,
};
use tropsatz_core::oracle::{
    inf_family, lmp, oracle_game, oracle_minplus_linear, oracle_solve_minplus, oracle_solve_tropical,
    oracle_tropical_dual, oracle_tropical_linear, pyramid_candidate, stepped_pyramid, stripes, stripes_candidate,
};
use tropsatz_core::poly::{chi_on, is_root_system, sing_set, sing_set_colored, CoeffFn};
use tropsatz_core::reduce::{embed, minplus_to_tropical, tropical_to_minplus, unembed};
use tropsatz_core::value::rat;
use tropsatz_core::{Exponent, ExtValue, MinPlusPolynomial, Point, Polynomial, Rational, TropicalPolynomial};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Random inputs.

fn exponents(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = vec![];
    let mut e = vec![0u32; n];
    loop {
        if e.iter().sum::<u32>() <= d {
            out.push(Exponent(e.clone()));
        }
        let mut i = 0;
        while i < n {
            e[i] += 1;
            if e[i] <= d {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, d: u32) -> TropicalPolynomial {
    let mut exps = exponents(n, d);
    exps.shuffle(rng);
    let m = rng.gen_range(1..=exps.len().min(4));
    let terms = exps.into_iter().take(m).map(|e| (e, ExtValue::int(rng.gen_range(-2..=2))));
    TropicalPolynomial::new(n, terms).unwrap()
}

/// `n ≤ 2`, `k ≤ 3`, `d ≤ 2`, coefficients in `[−2, 2]`.
fn random_tropical(rng: &mut ChaCha8Rng) -> (usize, Vec<TropicalPolynomial>) {
    let (n, k, d) = (rng.gen_range(1..=2), rng.gen_range(1..=3), rng.gen_range(1..=2));
    (n, (0..k).map(|_| random_poly(rng, n, d)).collect())
}

fn random_minplus(rng: &mut ChaCha8Rng) -> (usize, Vec<MinPlusPolynomial>) {
    let (n, k, d) = (rng.gen_range(1..=2), rng.gen_range(1..=3), rng.gen_range(1..=2));
    let f = (0..k).map(|_| MinPlusPolynomial::new(random_poly(rng, n, d), random_poly(rng, n, d)).unwrap()).collect();
    (n, f)
}

fn random_value(rng: &mut ChaCha8Rng) -> ExtValue {
    if rng.gen_ratio(1, 5) {
        ExtValue::Infinity
    } else {
        ExtValue::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, inf_ratio: (u32, u32)) -> TropMatrix {
    let dense: Vec<Vec<ExtValue>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_ratio(inf_ratio.0, inf_ratio.1) {
                        ExtValue::Infinity
                    } else {
                        ExtValue::int(rng.gen_range(-2..=2))
                    }
                })
                .collect()
        })
        .collect();
    TropMatrix::from_dense(&dense).unwrap()
}

fn grid(halves: bool) -> Vec<ExtValue> {
    let mut g: Vec<ExtValue> =
        if halves { (-6..=6).map(|v| ExtValue::ratio(v, 2)).collect() } else { (-2..=2).map(ExtValue::int).collect() };
    g.push(ExtValue::Infinity);
    g
}

fn grid_points(values: &[ExtValue], n: usize) -> Vec<Point> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Point| values.iter().map(move |v| [p.clone(), vec![v.clone()]].concat()))
            .collect();
    }
    out
}

// Decisions against the oracle.

#[derive(Clone, Copy, PartialEq, Eq)]
enum Agreed {
    Root,
    Certified,
    /// No root, decided by the finite-pattern fallback without a certificate.
    Uncertified,
}

fn agree(sys: &System, semiring: Semiring, oracle: Option<Point>, opts: &Options) -> Result<Agreed, String> {
    let decision = decide(sys, semiring, opts).map_err(|e| format!("driver error: {e}"))?;
    match (&decision, &oracle) {
        (Decision::Root(p), Some(_)) => {
            check(sys.is_root(p), || format!("returned root {p:?} fails"))?;
            if semiring == Semiring::R {
                check(p.iter().all(ExtValue::is_finite), || format!("root {p:?} is not finite"))?;
            }
            Ok(Agreed::Root)
        }
        (Decision::NoRoot(Some(c)), None) => {
            check(verify_primary(sys, c), || format!("certificate fails for {sys:?}"))?;
            Ok(Agreed::Certified)
        }
        (Decision::NoRoot(None), None) => {
            check(semiring == Semiring::RInf, || "no certificate over R".into())?;
            Ok(Agreed::Uncertified)
        }
        _ => Err(format!("driver {decision:?} vs oracle {oracle:?} on {sys:?}")),
    }
}

fn criterion_1() -> Outcome {
    let f = vec![
        TropicalPolynomial::from_ints(1, &[(0, &[0]), (0, &[1])]),
        TropicalPolynomial::from_ints(1, &[(0, &[0]), (1, &[1])]),
    ];
    let sys = System::tropical(1, f.clone());
    let bound = degree_bound(Semiring::R, 1, &[1, 1]).unwrap();
    check(bound == 6, || format!("bound {bound}"))?;
    let m = build_macaulay_tropical(&f, 6).unwrap();
    check(matches!(macaulay_outcome(&m, Semiring::R), DualityOutcome::Dual(_)), || "M_6 is solvable".into())?;
    let Decision::NoRoot(Some(cert)) = decide(&sys, Semiring::R, &Options::default()).map_err(|e| e.to_string())?
    else {
        return Err("no certificate".into());
    };
    check(verify_primary(&sys, &cert), || "certificate fails".into())?;
    check(oracle_solve_tropical(&f, 1, Semiring::R).is_none(), || "oracle finds a root".into())?;
    Ok(format!(
        "NoRoot, M_6 unsolvable, certificate of degree {} with {} parts verifies",
        cert.degree(),
        cert.parts().len()
    ))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let opts = Options::default();
    let (mut roots, mut none) = (0, 0);
    for _ in 0..200 {
        let (n, f) = random_tropical(&mut rng);
        let oracle = oracle_solve_tropical(&f, n, Semiring::R);
        if agree(&System::tropical(n, f), Semiring::R, oracle, &opts)? == Agreed::Root {
            roots += 1
        } else {
            none += 1
        }
    }
    let (mut mroots, mut mnone) = (0, 0);
    for _ in 0..200 {
        let (n, f) = random_minplus(&mut rng);
        let oracle = oracle_solve_minplus(&f, n, Semiring::R);
        if agree(&System::minplus(n, f), Semiring::R, oracle, &opts)? == Agreed::Root {
            mroots += 1
        } else {
            mnone += 1
        }
    }
    Ok(format!("tropical 200/200 ({roots} roots, {none} certificates), min-plus 200/200 ({mroots} roots, {mnone} certificates)"))
}

/// A root of the input with `∞` replaced by a large value is a finite root of
/// the finite-constant system; restricting it must give a root again.
fn restrict_check<P: Polynomial>(f: &[P], root: &[ExtValue]) -> Result<bool, String> {
    let Ok(fp) = build_f_prime(f) else { return Ok(false) };
    let big = rat(1 << 40);
    let finite: Vec<Rational> = root.iter().map(|v| v.finite().cloned().unwrap_or_else(|| big.clone())).collect();
    let as_point: Point = finite.iter().cloned().map(ExtValue::Finite).collect();
    check(is_root_system(&fp.polys, &as_point).unwrap(), || {
        format!("{root:?} lifted is not a root of the finite-constant system")
    })?;
    let report = infinity_restrict(f, fp.first, &finite, &fp.delta, fp.d);
    check(report.verified, || format!("restriction of {root:?} gives {:?}, not a root", report.point))?;
    Ok(true)
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let opts = Options::default();
    let (mut roots, mut restricted, mut uncertified) = (0, 0, 0);
    let mut tally = |a: Agreed| {
        uncertified += (a == Agreed::Uncertified) as usize;
        (a == Agreed::Root) as usize
    };
    for _ in 0..100 {
        let (n, f) = random_tropical(&mut rng);
        let oracle = oracle_solve_tropical(&f, n, Semiring::RInf);
        if let Some(a) = &oracle {
            restricted += restrict_check(&f, a)? as usize;
        }
        roots += tally(agree(&System::tropical(n, f), Semiring::RInf, oracle, &opts)?);
    }
    let mut mroots = 0;
    for _ in 0..100 {
        let (n, f) = random_minplus(&mut rng);
        let oracle = oracle_solve_minplus(&f, n, Semiring::RInf);
        if let Some(a) = &oracle {
            restricted += restrict_check(&f, a)? as usize;
        }
        mroots += tally(agree(&System::minplus(n, f), Semiring::RInf, oracle, &opts)?);
    }
    // Fixtures whose only roots are infinite, and one without roots.
    let only_inf = vec![TropicalPolynomial::from_ints(1, &[(0, &[1])])];
    agree(
        &System::tropical(1, only_inf.clone()),
        Semiring::RInf,
        oracle_solve_tropical(&only_inf, 1, Semiring::RInf),
        &opts,
    )?;
    // 0 ⊕ x and y ⊕ 1⊙x⊙y: the only root is (0, ∞).
    let mixed = vec![
        TropicalPolynomial::from_ints(2, &[(0, &[0, 0]), (0, &[1, 0])]),
        TropicalPolynomial::from_ints(2, &[(0, &[0, 1]), (1, &[1, 1])]),
    ];
    let oracle = oracle_solve_tropical(&mixed, 2, Semiring::RInf);
    check(oracle.as_ref().is_some_and(|p| p.iter().any(ExtValue::is_infinite)), || {
        "mixed fixture lost its ∞ root".into()
    })?;
    agree(&System::tropical(2, mixed), Semiring::RInf, oracle, &opts)?;
    let fx = inf_family(2, 2);
    agree(&System::tropical(fx.num_vars, fx.tropical.clone()), Semiring::RInf, None, &opts)?;
    agree(&System::minplus(fx.num_vars, fx.minplus.clone()), Semiring::RInf, None, &opts)?;
    Ok(format!(
        "tropical 100/100 ({roots} roots), min-plus 100/100 ({mroots} roots), {uncertified} no-root answers from the pattern fallback, fixtures agree, {restricted} restrictions verify"
    ))
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for (n, d) in [(2, 2), (3, 2), (2, 3)] {
        let fx = lmp(n, d);
        check(oracle_solve_tropical(&fx.tropical, n, Semiring::R).is_none(), || format!("{}: oracle root", fx.name))?;
        check(oracle_solve_minplus(&fx.minplus, n, Semiring::R).is_none(), || {
            format!("{}: oracle min-plus root", fx.name)
        })?;
        let m = build_macaulay_tropical(&fx.tropical, fx.witness_degree).unwrap();
        check(check_tropical_solution(&m.lhs, &fx.witness).unwrap(), || format!("{}: witness fails", fx.name))?;
        let mm = build_macaulay_minplus(&fx.minplus, fx.witness_degree).unwrap();
        let s = MinPlusSystem::new(mm.lhs.clone(), mm.rhs.clone().unwrap(), Relation::Eq).unwrap();
        check(check_minplus_solution(&s, &fx.witness).unwrap(), || format!("{}: min-plus witness fails", fx.name))?;
        let degrees: Vec<u64> = fx.tropical.iter().map(|p| p.degree()).collect();
        let bound = degree_bound(Semiring::R, n, &degrees).unwrap();
        let full = build_macaulay_tropical(&fx.tropical, bound).unwrap();
        check(matches!(macaulay_outcome(&full, Semiring::R), DualityOutcome::Dual(_)), || {
            format!("{}: M_{bound} solvable", fx.name)
        })?;
        let full_mp = build_macaulay_minplus(&fx.minplus, bound).unwrap();
        check(matches!(macaulay_outcome(&full_mp, Semiring::R), DualityOutcome::Dual(_)), || {
            format!("{}: min-plus M_{bound} solvable", fx.name)
        })?;
        notes.push(format!(
            "{} solved at N={}, unsolvable at N={bound} ({} columns)",
            fx.name,
            fx.witness_degree,
            full.index.len()
        ));
    }
    Ok(notes.join("; "))
}

fn rows_hold(m: &MacaulaySystem, y: &[ExtValue]) -> usize {
    (0..m.lhs.rows())
        .filter(|&i| {
            let (v, at) = m.lhs.row_eval(i, y);
            v.is_infinite() || at.len() >= 2
        })
        .count()
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for (n, d) in [(2, 2), (3, 2)] {
        let fx = inf_family(n, d);
        check(oracle_solve_tropical(&fx.tropical, fx.num_vars, Semiring::RInf).is_none(), || {
            format!("{}: oracle root", fx.name)
        })?;
        let m = build_macaulay_tropical(&fx.tropical, fx.witness_degree).unwrap();
        check(fx.witness[m.constant_column()] == ExtValue::zero(), || "constant coordinate is not 0".into())?;
        let held = rows_hold(&m, &fx.witness);
        check(held == m.lhs.rows(), || format!("{}: {held}/{} rows hold", fx.name, m.lhs.rows()))?;
        notes.push(format!("{}: {held}/{held} rows at N={}", fx.name, fx.witness_degree));
    }
    Ok(notes.join("; "))
}

fn criterion_6() -> Outcome {
    // Width 10 keeps N = 10 inside the first ring; narrower rings reach the ramps.
    let mut held = Vec::new();
    for width in [10, 3, 2] {
        let fx = stepped_pyramid(10, width);
        let m = build_macaulay_tropical(&fx.tropical, 10).unwrap();
        let h = rows_hold(&m, &fx.witness);
        check(h == m.lhs.rows(), || format!("pyramid width {width}: {h}/{} rows", m.lhs.rows()))?;
        held.push(h);
    }
    // Not affine: the second difference along the diagonal is nonzero somewhere.
    let p = |i: u32| pyramid_candidate(&Exponent(vec![i, i]), 3);
    check((0..9).any(|i| p(i) - 2 * p(i + 1) + p(i + 2) != 0), || {
        "pyramid candidate is affine on the diagonal".into()
    })?;
    let fx = stripes(10);
    let m = build_macaulay_tropical(&fx.tropical, 10).unwrap();
    let sheld = rows_hold(&m, &fx.witness);
    check(sheld == m.lhs.rows(), || format!("stripes: {sheld}/{} rows", m.lhs.rows()))?;
    // Across the stripe boundary x = 1 → 2 the value jumps by 2y.
    let s = |x: u32, y: u32| stripes_candidate(&Exponent(vec![x, y]));
    let gaps: Vec<i64> = (1..=4).map(|y| s(1, y) - s(2, y)).collect();
    check(gaps == [2, 4, 6, 8], || format!("stripes gaps {gaps:?}"))?;
    Ok(format!("pyramid rows {held:?} at widths 10, 3, 2, stripes {sheld}/{sheld} rows, stripe gaps {gaps:?}"))
}

fn mask_ok(flavor: Flavor, primal: bool, finite: &[bool], s: &[usize]) -> bool {
    let all = s.iter().all(|&i| finite[i]);
    let any = s.iter().any(|&i| finite[i]);
    match (flavor, primal) {
        (Flavor::FinAll, true) | (Flavor::FinSome, false) => all,
        (Flavor::FinAll, false) | (Flavor::FinSome, true) => any,
    }
}

fn swap(w: Winner) -> Winner {
    match w {
        Winner::Column => Winner::Row,
        Winner::Row => Winner::Column,
        Winner::Draw => Winner::Draw,
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut primal = [0usize; 4];
    for case in 0..500 {
        let (rows, cols) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random_matrix(&mut rng, rows, cols, (1, 4));
        let b = random_matrix(&mut rng, rows, cols, (1, 4));
        let s: Vec<usize> = (0..cols).filter(|_| rng.gen_bool(0.6)).collect();
        for (k, flavor) in [Flavor::FinAll, Flavor::FinSome].into_iter().enumerate() {
            // Min-plus: A ⊙ x ≤ B ⊙ x against Bᵀ ⊙ y < Aᵀ ⊙ y.
            let out = minplus_alternative(&a, &b, &s, flavor);
            let bt = b.transpose();
            let x = oracle_minplus_linear(&a, &b, Relation::Leq, &|f| mask_ok(flavor, true, f, &s));
            let y = oracle_minplus_linear(&bt, &a.transpose(), Relation::Lt, &|f| {
                let rows_finite: Vec<bool> = (0..bt.rows()).map(|i| bt.row(i).iter().any(|(j, _)| f[*j])).collect();
                mask_ok(flavor, false, &rows_finite, &s)
            });
            let verified = match &out {
                DualityOutcome::Primal(x) => verify_minplus_primal(&a, &b, x, &s, flavor),
                DualityOutcome::Dual(y) => verify_minplus_dual(&a, &b, y, &s, flavor),
            };
            check(verified, || format!("case {case}: min-plus {flavor:?} outcome fails"))?;
            check(x.is_some() != y.is_some(), || {
                format!("case {case}: oracle finds {} alternatives", x.is_some() as u8 + y.is_some() as u8)
            })?;
            check(x.is_some() == out.is_primal(), || {
                format!("case {case}: min-plus {flavor:?} disagrees with the oracle")
            })?;
            primal[k] += out.is_primal() as usize;
            // Tropical: A ⊙ x against the distinct-minima dual.
            let out = tropical_alternative(&a, &s, flavor);
            let x = oracle_tropical_linear(&a, &|f| mask_ok(flavor, true, f, &s));
            let z = oracle_tropical_dual(&a, &|f| mask_ok(flavor, false, f, &s));
            let verified = match &out {
                DualityOutcome::Primal(x) => verify_tropical_primal(&a, x, &s, flavor),
                DualityOutcome::Dual(z) => verify_tropical_dual(&a, z, &s, flavor),
            };
            check(verified, || format!("case {case}: tropical {flavor:?} outcome fails"))?;
            check(x.is_some() != z.is_some(), || format!("case {case}: tropical oracle finds both or neither"))?;
            check(x.is_some() == out.is_primal(), || {
                format!("case {case}: tropical {flavor:?} disagrees with the oracle")
            })?;
            primal[2 + k] += out.is_primal() as usize;
        }
        // (A, B) ↦ (Bᵀ, Aᵀ) swaps the players: winners swap and vertex kinds trade places.
        let g = build_game(&MinPlusSystem::new(a.clone(), b.clone(), Relation::Leq).unwrap());
        let gt = build_game(&MinPlusSystem::new(b.transpose(), a.transpose(), Relation::Leq).unwrap());
        let (wr, wc) = winners(&g);
        let (tr, tc) = winners(&gt);
        let swapped = |v: &[Winner]| v.iter().copied().map(swap).collect::<Vec<_>>();
        check(tr == swapped(&wc) && tc == swapped(&wr), || {
            format!("case {case}: transposed game does not swap winners")
        })?;
    }
    Ok(format!(
        "500 cases × 4 flavors, exactly one alternative each; primal counts min-plus {}/{} tropical {}/{}; transposition swaps winners",
        primal[0], primal[1], primal[2], primal[3]
    ))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut counts = [0usize; 3];
    for case in 0..500 {
        let (rows, cols) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random_matrix(&mut rng, rows, cols, (1, 5));
        let b = random_matrix(&mut rng, rows, cols, (1, 5));
        let g = build_game(&MinPlusSystem::new(a, b, Relation::Leq).unwrap());
        let (or, oc) = oracle_game(&g);
        let weak = min_credits(&g);
        let strong = strict_credits(&g);
        for (w, (wk, st)) in
            or.iter().chain(&oc).zip(weak.rows.iter().chain(&weak.cols).zip(strong.rows.iter().chain(&strong.cols)))
        {
            check(wk.is_finite() == (*w != Winner::Row), || format!("case {case}: min_credits finiteness vs {w:?}"))?;
            check(st.is_finite() == (*w == Winner::Column), || format!("case {case}: strict credits vs {w:?}"))?;
            counts[*w as usize] += 1;
        }
        check(winners(&g) == (or, oc), || format!("case {case}: winners differ"))?;
    }
    Ok(format!("500 games, per-vertex winners column {} draw {} row {}", counts[0], counts[1], counts[2]))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let fine = grid(true);
    let mut checked = 0usize;
    for case in 0..100 {
        let (n, f) = random_tropical(&mut rng);
        let m = tropical_to_minplus(&f);
        for p in grid_points(&fine, n) {
            check(is_root_system(&m, &p).unwrap() == is_root_system(&f, &p).unwrap(), || {
                format!("tropical case {case} at {p:?}")
            })?;
            checked += 1;
        }
    }
    let coarse = grid(false);
    let mut image_roots = 0usize;
    for case in 0..100 {
        let (n, f) = random_minplus(&mut rng);
        let t = minplus_to_tropical(&f, n);
        for a in grid_points(&fine, n) {
            let same = is_root_system(&t, &embed(&a)).unwrap() == is_root_system(&f, &a).unwrap();
            check(same, || format!("min-plus case {case} at {a:?}"))?;
            checked += 1;
        }
        for p in grid_points(&coarse, 2 * n) {
            if is_root_system(&t, &p).unwrap() {
                image_roots += 1;
                let a = unembed(&p).ok_or_else(|| format!("min-plus case {case}: root {p:?} is not (a, a)"))?;
                check(is_root_system(&f, &a).unwrap(), || format!("min-plus case {case}: {a:?} is not a root"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} grid points agree; {image_roots} image roots, all of the form (a, a)"))
}

/// A polynomial plus a point at which it is forced to have a root.
fn rooted_poly(rng: &mut ChaCha8Rng, n: usize, d: u32, a: &[ExtValue]) -> TropicalPolynomial {
    loop {
        let f = random_poly(rng, n, d);
        let terms: Vec<(Exponent, ExtValue)> =
            f.phi().iter().map(|(e, c)| (e.clone(), ExtValue::Finite(c.clone()))).collect();
        if terms.len() < 2 {
            continue;
        }
        let vals: Vec<ExtValue> = terms.iter().map(|(e, c)| c.otimes(&e.pair(a))).collect();
        let Some(min) = vals.iter().filter(|v| v.is_finite()).min().cloned() else { return f };
        // Lower a second finite monomial onto the minimum.
        let Some(k) = (0..terms.len()).find(|&k| vals[k].is_finite() && vals[k] != min) else { return f };
        let mut out = terms;
        let gap = vals[k].finite().unwrap() - min.finite().unwrap();
        out[k].1 = ExtValue::Finite(out[k].1.finite().unwrap() - gap);
        return TropicalPolynomial::new(n, out).unwrap();
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for t in 0..1000 {
        let (a, b, c) = (random_value(&mut rng), random_value(&mut rng), random_value(&mut rng));
        let laws = a.oplus(&b) == b.oplus(&a)
            && a.otimes(&b) == b.otimes(&a)
            && a.oplus(&b).oplus(&c) == a.oplus(&b.oplus(&c))
            && a.otimes(&b).otimes(&c) == a.otimes(&b.otimes(&c))
            && a.otimes(&b.oplus(&c)) == a.otimes(&b).oplus(&a.otimes(&c))
            && a.oplus(&ExtValue::Infinity) == a
            && a.otimes(&ExtValue::zero()) == a
            && a.otimes(&ExtValue::Infinity) == ExtValue::Infinity;
        check(laws, || format!("trial {t}: laws fail on {a}, {b}, {c}"))?;
    }
    for t in 0..1000 {
        let n = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=2);
        let x: Vec<Rational> =
            (0..n).map(|_| Rational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=2).into())).collect();
        let point: Point = x.iter().cloned().map(ExtValue::Finite).collect();
        let f = random_poly(&mut rng, n, d);
        let sing = sing_set(&chi_on(&x, f.phi().keys()), f.phi());
        check(sing.is_singular() == f.is_root(&point).unwrap(), || {
            format!("trial {t}: tropical Sing vs root at {x:?} on {f:?}")
        })?;
        let g = MinPlusPolynomial::new(f, random_poly(&mut rng, n, d)).unwrap();
        let colored = g.colored();
        let plain: CoeffFn = colored.iter().map(|(e, (c, _))| (e.clone(), c.clone())).collect();
        let sing = sing_set_colored(&chi_on(&x, plain.keys()), &colored);
        check(sing.is_singular_colored() == g.is_root(&point).unwrap(), || {
            format!("trial {t}: colored Sing vs root at {x:?}")
        })?;
    }
    for t in 0..1000 {
        let n = rng.gen_range(1..=2);
        let a: Point = (0..n)
            .map(|_| if rng.gen_ratio(1, 6) { ExtValue::Infinity } else { ExtValue::int(rng.gen_range(-3..=3)) })
            .collect();
        let k = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=2);
        let big_n = rng.gen_range(d as u64..=4);
        if rng.gen_bool(0.5) {
            let f: Vec<TropicalPolynomial> = (0..k).map(|_| rooted_poly(&mut rng, n, d, &a)).collect();
            if !is_root_system(&f, &a).unwrap() {
                continue;
            }
            let m = build_macaulay_tropical(&f, big_n).unwrap();
            check(check_tropical_solution(&m.lhs, &monomial_vector(&m.index, &a)).unwrap(), || {
                format!("trial {t}: tropical M_{big_n} at {a:?}")
            })?;
        } else {
            // Pair each polynomial with its own value at a.
            let f: Vec<MinPlusPolynomial> = (0..k)
                .map(|_| {
                    let l = random_poly(&mut rng, n, d);
                    let mut r = random_poly(&mut rng, n, d);
                    let (lv, rv) = (l.value(&a).unwrap(), r.value(&a).unwrap());
                    if let (Some(lv), Some(rv)) = (lv.finite(), rv.finite()) {
                        r = r.add_constant(&(lv - rv));
                    }
                    MinPlusPolynomial::new(l, r).unwrap()
                })
                .collect();
            if !is_root_system(&f, &a).unwrap() {
                continue;
            }
            let m = build_macaulay_minplus(&f, big_n).unwrap();
            let s = MinPlusSystem::new(m.lhs.clone(), m.rhs.clone().unwrap(), Relation::Eq).unwrap();
            check(check_minplus_solution(&s, &monomial_vector(&m.index, &a)).unwrap(), || {
                format!("trial {t}: min-plus M_{big_n} at {a:?}")
            })?;
        }
    }
    let mut touching = 0;
    while touching < 1000 {
        let (n, f) = random_tropical(&mut rng);
        let parts: Vec<LiftedPointSet> = f.iter().map(newton).collect();
        let p0 = envelope_reduced(&parts, n);
        let side = (n as u32 + 2) * f.iter().map(|p| p.degree() as u32).sum::<u32>();
        let x = loop {
            let x: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(0..=side as i64))).collect();
            if bottom(&p0, &x).is_some() {
                break x;
            }
        };
        let j = rng.gen_range(0..f.len());
        check(touching_translation(&parts[j], &p0, &x).is_some(), || {
            format!("no touching translation of part {j} at {x:?} for {f:?}")
        })?;
        touching += 1;
    }
    Ok("semiring laws, Sing/root (tropical and colored), Macaulay easy direction, touching: 1000 trials each".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (k, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let within = secs <= 60.0;
        match (&outcome, within) {
            (Ok(msg), true) => println!("criterion {k}: PASS ({secs:.1}s) {msg}"),
            (Ok(msg), false) => println!("criterion {k}: FAIL ({secs:.1}s, over 60s) {msg}"),
            (Err(msg), _) => println!("criterion {k}: FAIL ({secs:.1}s) {msg}"),
        }
        if outcome.is_err() || !within {
            failed += 1;
        }
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
