//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p mdspairs --test acceptance -- --nocapture` to see
//! the per-criterion lines.
//!
//! A1 is split in two. The strict reading of the feasibility condition at
//! length q+1 admits the containment tuples {k1, k2} = {l, l+1}; for most of
//! those no pair can exist: a pair would extend a (q+1)-point arc to a
//! (q+2)-point arc in PG(l, q), i.e. produce a [q+2, l+1] MDS code, and such
//! codes exist only over even q at dimensions 1, 3, q-1 and q+1. The
//! `a1_condition_i_literal_sweep` test enumerates the stated condition
//! verbatim and therefore fails on exactly that family, documenting the
//! defect; `a1_feasible_verdict_sweep` shows every constructible tuple is
//! built and verified with zero failures.

#![allow(clippy::manual_is_multiple_of)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mdspairs::code::{
    grs_encode, mds_weight_distribution, EvalPoint, GrsSpec, LinearCode,
};
use mdspairs::construct::{
    construct_pair, factor_prime_power, feasibility, length_q_plus_2_mds_exists,
    ConstructConfig, FeasibilityVerdict, PairRequest, Route,
};
use mdspairs::field::{Field, FieldElement};
use mdspairs::matrix::{stack_rank_intersection, Matrix};
use mdspairs::poly::{count_irreducibles, count_irreducibles_exhaustive};
use mdspairs::quantum::{build_pure_mds_aeaqecc, derive_params, weight_outside_equals_min_distance};
use mdspairs::Error;

const SWEEP_FIELDS: [u64; 6] = [3, 4, 5, 7, 8, 9];
const DIM_CAP: usize = 6;

fn cfg() -> ConstructConfig {
    ConstructConfig::default()
}

fn req(q: u64, n: usize, k1: usize, k2: usize, l: usize) -> PairRequest {
    PairRequest::new(q, n, k1, k2, l).unwrap()
}

/// All tuples with n <= q+1 and dims <= min(n-1, DIM_CAP) satisfying the
/// stated existence condition: the two bounds plus only the two stated
/// exclusions at (q+1, 2, 1, 1) and (q+1, 1, 2, 1).
fn condition_i_tuples(q: u64) -> Vec<(usize, usize, usize, usize)> {
    let qu = q as usize;
    let mut out = Vec::new();
    for n in 1..=qu + 1 {
        let dmax = DIM_CAP.min(n - 1);
        for k1 in 0..=dmax {
            for k2 in 0..=dmax {
                let lo = (k1 + k2).saturating_sub(n);
                for l in lo..=k1.min(k2) {
                    if n == qu + 1 && l == 1 && ((k1, k2) == (2, 1) || (k1, k2) == (1, 2)) {
                        continue;
                    }
                    out.push((n, k1, k2, l));
                }
            }
        }
    }
    out
}

/// The containment tuples inside the stated condition for which no pair can
/// exist (no [q+2, l+1] MDS code over GF(q)).
fn predicted_impossible(q: u64) -> BTreeSet<(usize, usize, usize, usize)> {
    let n = q as usize + 1;
    let dmax = DIM_CAP.min(n - 1);
    let mut out = BTreeSet::new();
    for l in 1..dmax {
        if l == 1 {
            continue; // (1, 2, 1) and (2, 1, 1) are already excluded by the condition
        }
        if length_q_plus_2_mds_exists(q, l + 1) {
            continue;
        }
        out.insert((n, l, l + 1, l));
        out.insert((n, l + 1, l, l));
    }
    out
}

#[test]
fn a1_condition_i_literal_sweep() {
    let mut verified = 0usize;
    let mut impossible: Vec<(u64, usize, usize, usize, usize, String)> = Vec::new();
    let mut unexpected: Vec<(u64, usize, usize, usize, usize, String)> = Vec::new();
    for &q in &SWEEP_FIELDS {
        let predicted = predicted_impossible(q);
        for (n, k1, k2, l) in condition_i_tuples(q) {
            match construct_pair(&req(q, n, k1, k2, l), &cfg()) {
                Ok(pair) => {
                    assert_eq!(pair.l_verified, l);
                    assert_eq!(pair.dim_by_parity_rank, l);
                    assert_eq!(pair.dim_by_stacked_rank, l);
                    verified += 1;
                }
                Err(Error::Infeasible(reason)) if predicted.contains(&(n, k1, k2, l)) => {
                    impossible.push((q, n, k1, k2, l, reason));
                }
                Err(e) => unexpected.push((q, n, k1, k2, l, e.to_string())),
            }
        }
    }
    assert!(
        unexpected.is_empty(),
        "tuples failed for reasons other than the documented impossibility: {unexpected:?}"
    );
    if impossible.is_empty() {
        println!("[A1] full length<=q+1 sweep, literal condition: PASS ({verified} tuples verified)");
    } else {
        println!(
            "[A1] full length<=q+1 sweep, literal condition: FAIL \
             ({verified} tuples verified; {} tuples satisfy the stated condition but are provably infeasible)",
            impossible.len()
        );
        for (q, n, k1, k2, l, reason) in &impossible {
            println!("     q={q} (n,k1,k2,l)=({n},{k1},{k2},{l}): {reason}");
        }
    }
    assert!(
        impossible.is_empty(),
        "the stated existence condition admits {} containment tuples {{k1,k2}} = {{l, l+1}} at \
         n = q+1 for which no pair exists: such a pair is equivalent to a [q+2, l+1] MDS code \
         over GF(q) (arc extension), and those exist only over even q at dimensions 3 and q-1. \
         Affected: {:?}",
        impossible.len(),
        impossible
            .iter()
            .map(|(q, n, k1, k2, l, _)| (*q, *n, *k1, *k2, *l))
            .collect::<Vec<_>>()
    );
}

#[test]
fn a1_feasible_verdict_sweep() {
    let mut verified = 0usize;
    let mut failures = Vec::new();
    for &q in &SWEEP_FIELDS {
        for (n, k1, k2, l) in condition_i_tuples(q) {
            let r = req(q, n, k1, k2, l);
            if !matches!(feasibility(&r), FeasibilityVerdict::Feasible(_)) {
                continue;
            }
            match construct_pair(&r, &cfg()) {
                Ok(pair) => {
                    assert_eq!(pair.l_verified, l);
                    assert_eq!(pair.dim_by_parity_rank, l);
                    assert_eq!(pair.dim_by_stacked_rank, l);
                    verified += 1;
                }
                Err(e) => failures.push((q, n, k1, k2, l, e.to_string())),
            }
        }
    }
    println!(
        "[A1*] length<=q+1 sweep over feasible verdicts: {} ({verified} tuples verified, {} failures)",
        if failures.is_empty() { "PASS" } else { "FAIL" },
        failures.len()
    );
    assert!(failures.is_empty(), "{failures:?}");
}

fn length_q_plus_2_tuples(q: u64) -> Vec<(usize, usize, usize, usize, Route)> {
    let qu = q as usize;
    let n = qu + 2;
    let mut out = Vec::new();
    if q == 4 {
        for l in 0..=3 {
            out.push((n, 3, 3, l, Route::Theorem5));
        }
        return out;
    }
    for l in 0..=3usize {
        out.push((n, 3, 3, l, Route::Theorem6));
        out.push((n, 3, qu - 1, l, Route::Theorem7));
        out.push((n, qu - 1, 3, l, Route::Theorem7));
    }
    for l in qu - 4..=qu - 1 {
        out.push((n, qu - 1, qu - 1, l, Route::Theorem5));
    }
    out
}

#[test]
fn a2_length_q_plus_2_routes() {
    let mut verified = 0usize;
    for &q in &[4u64, 8] {
        for (n, k1, k2, l, route) in length_q_plus_2_tuples(q) {
            let r = req(q, n, k1, k2, l);
            assert_eq!(
                feasibility(&r),
                FeasibilityVerdict::Feasible(route),
                "tuple ({q}, {n}, {k1}, {k2}, {l})"
            );
            let pair = construct_pair(&r, &cfg()).unwrap_or_else(|e| {
                panic!("construction failed for ({q}, {n}, {k1}, {k2}, {l}): {e}")
            });
            assert_eq!(pair.l_verified, l);
            assert_eq!(pair.dim_by_parity_rank, l);
            assert_eq!(pair.dim_by_stacked_rank, l);
            assert_eq!(pair.route, route);
            verified += 1;
        }
    }
    println!("[A2] length q+2 routes over GF(4) and GF(8): PASS ({verified} tuples verified)");
}

#[test]
fn a3_weight_census_matches_formula() {
    let mut checked = 0usize;
    for &q in &SWEEP_FIELDS {
        let mut tuples: Vec<(usize, usize, usize, usize)> = condition_i_tuples(q);
        if q == 4 || q == 8 {
            tuples.extend(
                length_q_plus_2_tuples(q)
                    .iter()
                    .map(|&(n, k1, k2, l, _)| (n, k1, k2, l)),
            );
        }
        for (n, k1, k2, l) in tuples {
            let r = req(q, n, k1, k2, l);
            if !matches!(feasibility(&r), FeasibilityVerdict::Feasible(_)) {
                continue;
            }
            let pair = construct_pair(&r, &cfg()).expect("feasible tuple must build");
            for code in [&pair.c1, &pair.c2] {
                let size = (q as u128).checked_pow(code.k() as u32);
                if size.is_none() || size.unwrap() > 1 << 16 {
                    continue;
                }
                let census = code.weight_census(1 << 16).unwrap();
                let formula = mds_weight_distribution(code.n(), code.k(), q);
                let census_big: Vec<BigUint> =
                    census.iter().map(|&v| BigUint::from(v)).collect();
                assert_eq!(
                    census_big, formula.counts,
                    "census mismatch for [{}, {}] over GF({q})",
                    code.n(),
                    code.k()
                );
                assert_eq!(
                    formula.total(),
                    BigUint::from(q).pow(code.k() as u32),
                    "total count must be q^k"
                );
                checked += 1;
            }
        }
    }
    println!("[A3] exhaustive weight censuses equal the closed form: PASS ({checked} codes)");
}

#[test]
fn a4_no_full_weight_codeword_in_q_plus_1_2() {
    for &q in &SWEEP_FIELDS {
        let n = q as usize + 1;
        // Closed form: the full-length count vanishes.
        let dist = mds_weight_distribution(n, 2, q);
        assert_eq!(dist.counts[n], BigUint::from(0u32), "A_(q+1) for q = {q}");

        // Exhaustive scan of one explicit instance.
        let (p, m) = factor_prime_power(q).unwrap();
        let field = Field::new(p, m).unwrap();
        let mut points: Vec<EvalPoint> = field.elements().map(EvalPoint::Finite).collect();
        points.push(EvalPoint::Infinity);
        let code =
            grs_encode(&GrsSpec::with_unit_multipliers(&field, points.clone(), 2)).unwrap();
        assert!(matches!(
            code.full_weight_codeword(1 << 20),
            Err(Error::NoFullWeightCodeword)
        ));

        // Random multipliers cannot rescue a full-weight codeword either.
        if q <= 5 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + q);
            for _ in 0..25 {
                let multipliers: Vec<FieldElement> = (0..n)
                    .map(|_| {
                        field
                            .element(rng.gen_range(1..field.q()) as u64)
                            .unwrap()
                    })
                    .collect();
                let code = grs_encode(&GrsSpec {
                    field: field.clone(),
                    points: points.clone(),
                    multipliers,
                    k: 2,
                    denominator: None,
                })
                .unwrap();
                assert!(code.full_weight_codeword(1 << 20).is_err());
            }
        }
    }
    println!("[A4] [q+1, 2, q] codes have no full-weight codeword (formula + scans): PASS");
}

/// Pipeline tuples with both dual dimensions small enough to enumerate.
fn pipeline_tuples(q: u64) -> Vec<(usize, usize, usize, usize)> {
    let qu = q as usize;
    let bound: u128 = 1 << 23;
    let fits = |k: usize| (q as u128).checked_pow(k as u32).is_some_and(|v| v <= bound);
    let mut out = BTreeSet::new();
    // Lengths up to q+1.
    for n in 2..=qu + 1 {
        for k1 in 1..n.min(DIM_CAP + 2) {
            for k2 in 1..n.min(DIM_CAP + 2) {
                if n - k1 > 5 || n - k2 > 5 || !fits(k2) || !fits(n - k1) {
                    continue;
                }
                let lo = (k1 + k2).saturating_sub(n);
                for l in lo..k1.min(k2) {
                    out.insert((n, k1, k2, l));
                }
            }
        }
    }
    // Length q+2 shapes over even q.
    if q % 2 == 0 && q >= 4 {
        let n = qu + 2;
        let shapes = [(3, qu - 1), (qu - 1, 3), (3, 3), (qu - 1, qu - 1)];
        for (k1, k2) in shapes {
            if n - k1 > 5 || n - k2 > 5 || !fits(k2) || !fits(n - k1) {
                continue;
            }
            let (lo, hi) = if (k1, k2) == (qu - 1, qu - 1) {
                (qu - 4, qu - 2)
            } else {
                (0, 2)
            };
            for l in lo..=hi.min(k1.min(k2) - 1) {
                out.insert((n, k1, k2, l));
            }
        }
    }
    out.into_iter().collect()
}

#[test]
fn a5_quantum_pipeline_matches_claims() {
    let cfg = ConstructConfig {
        enum_bound: 1 << 23,
        ..ConstructConfig::default()
    };
    for &q in &[4u64, 5, 7, 8] {
        let tuples = pipeline_tuples(q);
        assert!(
            tuples.len() >= 25,
            "need at least 25 pipeline tuples for q = {q}, found {}",
            tuples.len()
        );
        for &(n, k1, k2, l) in &tuples {
            let (pair, params) = build_pure_mds_aeaqecc(&req(q, n, k1, k2, l), &cfg)
                .unwrap_or_else(|e| panic!("pipeline failed for ({q}, {n}, {k1}, {k2}, {l}): {e}"));
            assert_eq!(pair.l_verified, l);
            assert_eq!(params.k, k2 - l, "logical dimension");
            assert_eq!(params.dz, k1 + 1, "phase-flip distance");
            assert_eq!(params.dx, n - k2 + 1, "qudit-flip distance");
            assert_eq!(params.c, k1 - l, "entanglement count");
            assert!(params.pure, "purity flag");
            assert_eq!(params.dx + params.dz, n - params.k + params.c + 2);
        }
        println!(
            "[A5] quantum pipeline q={q}: PASS ({} tuples, distances by brute force)",
            tuples.len()
        );
    }
}

fn random_grs(field: &Field, rng: &mut ChaCha8Rng, n: usize, k: usize) -> LinearCode {
    let mut elems: Vec<FieldElement> = field.elements().collect();
    elems.shuffle(rng);
    let points: Vec<EvalPoint> = elems[..n].iter().copied().map(EvalPoint::Finite).collect();
    let multipliers: Vec<FieldElement> = (0..n)
        .map(|_| field.element(rng.gen_range(1..field.q()) as u64).unwrap())
        .collect();
    grs_encode(&GrsSpec {
        field: field.clone(),
        points,
        multipliers,
        k,
        denominator: None,
    })
    .unwrap()
}

#[test]
fn a6_outside_weight_equals_distance_on_random_mds_pairs() {
    for &q in &[4u64, 5, 7, 8] {
        let (p, m) = factor_prime_power(q).unwrap();
        let field = Field::new(p, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2000 + q);
        let mut done = 0;
        while done < 200 {
            let n = rng.gen_range(2..=q.min(8) as usize);
            let kc = rng.gen_range(1..n.min(6));
            let kd = rng.gen_range(1..n.min(6));
            let c = random_grs(&field, &mut rng, n, kc);
            let d = random_grs(&field, &mut rng, n, kd);
            if c.is_subcode_of(&d) {
                continue;
            }
            assert!(
                weight_outside_equals_min_distance(&c, &d, 1 << 20).unwrap(),
                "q={q} n={n} kc={kc} kd={kd}"
            );
            done += 1;
        }
    }
    println!("[A6] min weight outside a second code equals the MDS distance: PASS (200 pairs x 4 fields)");
}

#[test]
fn a7_parity_rank_equals_stacked_rank_on_random_pairs() {
    for &q in &[2u64, 3, 4, 5, 7, 8, 9] {
        let (p, m) = factor_prime_power(q).unwrap();
        let field = Field::new(p, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3000 + q);
        let mut done = 0;
        while done < 1000 {
            let n = rng.gen_range(2..=8usize);
            let k1 = rng.gen_range(1..=n);
            let k2 = rng.gen_range(1..=n);
            let mut sample = |k: usize| {
                let mut g = Matrix::zeros(&field, k, n);
                for r in 0..k {
                    for c in 0..n {
                        g.set(
                            r,
                            c,
                            field.element(rng.gen_range(0..field.q()) as u64).unwrap(),
                        );
                    }
                }
                g
            };
            let g1 = sample(k1);
            let g2 = sample(k2);
            if g1.rank() != k1 || g2.rank() != k2 {
                continue;
            }
            let h2 = g2.kernel();
            let via_parity = k1 - g1.mul(&h2.transpose()).rank();
            let via_stack = stack_rank_intersection(&g1, &g2).unwrap();
            assert_eq!(via_parity, via_stack, "q={q} n={n} k1={k1} k2={k2}");
            done += 1;
        }
    }
    println!("[A7] parity-rank and stacked-rank intersection dimensions agree: PASS (1000 pairs x 7 fields)");
}

#[test]
fn a8_irreducible_counts() {
    for &q in &[2u64, 3, 4, 5, 7, 8, 9] {
        let (p, m) = factor_prime_power(q).unwrap();
        let field = Field::new(p, m).unwrap();
        let mut weighted = Vec::new();
        for n in 1..=6u32 {
            let formula = count_irreducibles(&field, n).unwrap();
            let exhaustive = count_irreducibles_exhaustive(&field, n);
            assert_eq!(
                formula,
                BigUint::from(exhaustive),
                "irreducible count mismatch at q={q} n={n}"
            );
            weighted.push(formula);
        }
        // sum over d | n of d * N_q(d) = q^n.
        for n in 1..=6u32 {
            let mut total = BigUint::from(0u32);
            for d in 1..=n {
                if n % d == 0 {
                    total += BigUint::from(d) * weighted[d as usize - 1].clone();
                }
            }
            assert_eq!(total, BigUint::from(q).pow(n), "degree identity at q={q} n={n}");
        }
    }
    println!("[A8] irreducible counts match exhaustive enumeration, degree identity holds: PASS (q <= 9, n <= 6)");
}

#[test]
fn a9_degenerate_pair_signals_empty_distance() {
    // l = k2 = min makes the second code a subcode of the first, so the dual
    // of derive_params' second argument is contained in the first code.
    let pair = construct_pair(&req(5, 5, 3, 2, 2), &cfg()).unwrap();
    assert!(pair.c2.is_subcode_of(&pair.c1));
    let c2 = pair.c2.dual();
    match derive_params(&pair.c1, &c2, 1 << 20) {
        Err(Error::DegenerateDistance { which, .. }) => {
            assert_eq!(which, "d_x");
            println!("[A9] degenerate pair reports the empty-distance signal for d_x: PASS");
        }
        other => panic!("[A9] FAIL: expected the empty-distance signal, got {other:?}"),
    }
}

/// Supporting evidence for the A1 analysis: exhaustive search of the largest
/// arc in PG(2, q). Odd q tops out at q+1 points, q = 4 reaches q+2; the
/// containment tuples at l = 2 are feasible exactly in the latter case.
#[test]
fn arc_extension_search_small_fields() {
    for &(q, expected) in &[(3u64, 4usize), (4, 6), (5, 6)] {
        let (p, m) = factor_prime_power(q).unwrap();
        let field = Field::new(p, m).unwrap();
        let points = pg2_points(&field);
        assert_eq!(points.len(), (q * q + q + 1) as usize);
        let mut best = 0;
        let mut chosen = Vec::new();
        extend_arc(&field, &points, 0, &mut chosen, &mut best);
        assert_eq!(best, expected, "largest arc in PG(2, {q})");
    }
    println!("[supplement] largest arcs in PG(2, q): 4 points over GF(3), 6 over GF(4), 6 over GF(5): PASS");
}

fn pg2_points(field: &Field) -> Vec<[FieldElement; 3]> {
    // Normalized representatives: first nonzero coordinate equals 1.
    let mut pts = Vec::new();
    let one = field.one();
    let zero = field.zero();
    pts.push([one, zero, zero]);
    for y in field.elements() {
        pts.push([y, one, zero]);
    }
    for y in field.elements() {
        for z in field.elements() {
            pts.push([y, z, one]);
        }
    }
    pts
}

fn det3(f: &Field, a: &[FieldElement; 3], b: &[FieldElement; 3], c: &[FieldElement; 3]) -> FieldElement {
    let m = |x: FieldElement, y: FieldElement| f.mul(x, y);
    let term = |x: FieldElement, p: FieldElement, q: FieldElement, r: FieldElement, s: FieldElement| {
        m(x, f.sub(m(p, q), m(r, s)))
    };
    let t1 = term(a[0], b[1], c[2], b[2], c[1]);
    let t2 = term(a[1], b[0], c[2], b[2], c[0]);
    let t3 = term(a[2], b[0], c[1], b[1], c[0]);
    f.add(f.sub(t1, t2), t3)
}

fn extend_arc(
    field: &Field,
    points: &[[FieldElement; 3]],
    start: usize,
    chosen: &mut Vec<[FieldElement; 3]>,
    best: &mut usize,
) {
    *best = (*best).max(chosen.len());
    for i in start..points.len() {
        let cand = points[i];
        let ok = chosen.len() < 2
            || chosen.iter().enumerate().all(|(a, pa)| {
                chosen[a + 1..]
                    .iter()
                    .all(|pb| !det3(field, pa, pb, &cand).is_zero())
            });
        if ok {
            chosen.push(cand);
            extend_arc(field, points, i + 1, chosen, best);
            chosen.pop();
        }
    }
}
