//! Parameters of asymmetric entanglement-assisted quantum codes derived from
//! a pair of classical codes, and the pipeline that builds pure MDS instances
//! from verified intersection pairs.
//!
//! Distances are always computed by exhaustive enumeration of the relevant
//! dual codes and compared against the claimed closed forms; nothing is
//! assumed.

use crate::code::LinearCode;
use crate::construct::{construct_pair, ConstructConfig, IntersectionPair, PairRequest};
use crate::matrix::stack_rank_intersection;
use crate::{Error, Result};

/// The `[[n, k, dz/dx, c]]` parameter record plus purity and MDS flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AeaqeccParams {
    pub n: usize,
    /// Logical dimension n - k1 - k2 + c.
    pub k: usize,
    /// Phase-flip distance: minimum weight of dual(C1) outside C2.
    pub dz: usize,
    /// Qudit-flip distance: minimum weight of dual(C2) outside C1.
    pub dx: usize,
    /// Maximally entangled states: rank(G1 G2^T).
    pub c: usize,
    /// Both distances equal the corresponding dual minimum weights.
    pub pure: bool,
    /// dx + dz = n - k + c + 2.
    pub mds: bool,
}

/// Derives the quantum parameters of the pair (C1, C2).
///
/// The entanglement count is computed both as rank(G1 G2^T) and as
/// k1 - dim(C1 meet dual(C2)); a mismatch is an internal defect. A contained
/// dual makes the corresponding distance undefined and raises
/// [`Error::DegenerateDistance`] rather than reporting 0.
pub fn derive_params(c1: &LinearCode, c2: &LinearCode, bound: u128) -> Result<AeaqeccParams> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    if c1.n() != c2.n() {
        return Err(Error::DimensionMismatch(
            "codes have different lengths".into(),
        ));
    }
    let n = c1.n();
    let c_by_rank = c1.generator().mul(&c2.generator().transpose()).rank();
    let c2_dual = c2.dual();
    let meet = stack_rank_intersection(c1.generator(), c2_dual.generator())?;
    let c_by_dim = c1.k() - meet;
    if c_by_rank != c_by_dim {
        return Err(Error::VerificationFailed(format!(
            "entanglement count mismatch: rank route {c_by_rank}, dimension route {c_by_dim}"
        )));
    }

    // Containment of one dual is equivalent to containment of the other, so
    // both distances degenerate together; the qudit-flip one is reported.
    let (dx_outside, dx_overall) = c2_dual.min_weight_outside_detail(c1, bound)?;
    let dx = dx_outside.ok_or_else(|| Error::DegenerateDistance {
        which: "d_x",
        detail: "the dual of the second code is contained in the first code".into(),
    })?;
    let c1_dual = c1.dual();
    let (dz_outside, dz_overall) = c1_dual.min_weight_outside_detail(c2, bound)?;
    let dz = dz_outside.ok_or_else(|| Error::DegenerateDistance {
        which: "d_z",
        detail: "the dual of the first code is contained in the second code".into(),
    })?;

    let k = n + c_by_rank - c1.k() - c2.k();
    let pure = dz_overall == Some(dz) && dx_overall == Some(dx);
    let mds = dx + dz == n - k + c_by_rank + 2;
    Ok(AeaqeccParams {
        n,
        k,
        dz,
        dx,
        c: c_by_rank,
        pure,
        mds,
    })
}

/// The parameters the construction pipeline must reproduce.
pub fn claimed_params(n: usize, k1: usize, k2: usize, l: usize) -> AeaqeccParams {
    AeaqeccParams {
        n,
        k: k2 - l,
        dz: k1 + 1,
        dx: n - k2 + 1,
        c: k1 - l,
        pure: true,
        mds: true,
    }
}

fn admissible_pipeline_request(req: &PairRequest) -> Result<()> {
    let q = req.q as usize;
    let (n, k1, k2, l) = (req.n, req.k1, req.k2, req.l);
    if l >= k1.min(k2) {
        return Err(Error::Degenerate(format!(
            "l = {l} >= min(k1, k2): either no entanglement is needed or the \
             qudit-flip distance is an empty minimum; require l < min(k1, k2)"
        )));
    }
    let cond_i = n <= q + 1 && k1 < n && k2 < n && k1 + k2 <= n + l;
    let shape = |k: usize| k == 3 || k == q - 1;
    let cond_ii = req.characteristic() == 2
        && q >= 4
        && n == q + 2
        && shape(k1)
        && shape(k2)
        && (k1 == 3 || k2 == 3)
        && l <= 2;
    let cond_iii = req.characteristic() == 2
        && q >= 4
        && n == q + 2
        && k1 == q - 1
        && k2 == q - 1
        && l + 4 >= q
        && l <= q - 2;
    if cond_i || cond_ii || cond_iii {
        Ok(())
    } else {
        Err(Error::OutOfScope(format!(
            "no pure MDS construction covers (q, n, k1, k2, l) = ({}, {n}, {k1}, {k2}, {l})",
            req.q
        )))
    }
}

/// Builds a verified l-intersection pair (C1, D), feeds (C1, dual(D)) into
/// the parameter derivation, and checks the result against the closed-form
/// claim: [[n, k2 - l, (k1+1)/(n-k2+1), k1 - l]], pure and MDS.
pub fn build_pure_mds_aeaqecc(
    req: &PairRequest,
    cfg: &ConstructConfig,
) -> Result<(IntersectionPair, AeaqeccParams)> {
    admissible_pipeline_request(req)?;
    let pair = construct_pair(req, cfg)?;
    // The second constructed MDS code plays the role of dual(C2).
    let c2 = pair.c2.dual();
    let params = derive_params(&pair.c1, &c2, cfg.enum_bound)?;
    let want = claimed_params(req.n, req.k1, req.k2, req.l);
    if params != want {
        return Err(Error::VerificationFailed(format!(
            "derived parameters {params:?} differ from the claim {want:?}"
        )));
    }
    Ok((pair, params))
}

/// For MDS codes C not contained in D, the minimum weight outside D equals
/// the minimum distance of C.
pub fn weight_outside_equals_min_distance(
    c: &LinearCode,
    d: &LinearCode,
    bound: u128,
) -> Result<bool> {
    let outside = c.min_weight_outside(d, bound)?;
    Ok(outside == c.n() - c.k() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{grs_encode, EvalPoint, GrsSpec};
    use crate::field::Field;

    const B: u128 = 1 << 20;

    fn cfg() -> ConstructConfig {
        ConstructConfig::default()
    }

    fn req(q: u64, n: usize, k1: usize, k2: usize, l: usize) -> PairRequest {
        PairRequest::new(q, n, k1, k2, l).unwrap()
    }

    fn grs(f: &Field, n: usize, k: usize) -> LinearCode {
        let points = f.elements().take(n).map(EvalPoint::Finite).collect();
        grs_encode(&GrsSpec::with_unit_multipliers(f, points, k)).unwrap()
    }

    #[test]
    fn dual_containing_pair_needs_no_entanglement() {
        // C1 strictly inside dual(C2) still means C1 meet dual(C2) = C1 and
        // c = 0, while both distances stay defined.
        let f = Field::new(5, 1).unwrap();
        let c1 = grs(&f, 5, 2);
        let d = grs(&f, 5, 3); // contains c1
        assert!(c1.is_subcode_of(&d));
        let c2 = d.dual();
        let params = derive_params(&c1, &c2, B).unwrap();
        assert_eq!(params.c, 0);
        assert_eq!(params.k, 5 - 2 - 2);
    }

    #[test]
    fn trivial_meet_gives_full_entanglement() {
        // dual(C2) supported on coordinates C1 avoids: the meet is zero and
        // c = k1.
        let f = Field::new(5, 1).unwrap();
        let c1 = {
            let rows = vec![vec![
                f.one(),
                f.one(),
                f.zero(),
                f.zero(),
                f.zero(),
            ]];
            LinearCode::from_generator(crate::matrix::Matrix::from_rows(&f, rows)).unwrap()
        };
        let d = {
            let rows = vec![vec![
                f.zero(),
                f.zero(),
                f.zero(),
                f.one(),
                f.element(2).unwrap(),
            ]];
            LinearCode::from_generator(crate::matrix::Matrix::from_rows(&f, rows)).unwrap()
        };
        let c2 = d.dual();
        let params = derive_params(&c1, &c2, B).unwrap();
        assert_eq!(params.c, c1.k());
    }

    #[test]
    fn pipeline_example_gf5() {
        let (pair, params) = build_pure_mds_aeaqecc(&req(5, 6, 2, 3, 1), &cfg()).unwrap();
        assert_eq!(pair.l_verified, 1);
        assert_eq!(
            params,
            AeaqeccParams {
                n: 6,
                k: 2,
                dz: 3,
                dx: 4,
                c: 1,
                pure: true,
                mds: true
            }
        );
    }

    #[test]
    fn pipeline_example_gf8_length_10() {
        // Distances here need messages beyond the default bound: the dual
        // of the second code has dimension 7 over GF(8).
        let cfg = ConstructConfig {
            enum_bound: 1 << 22,
            ..ConstructConfig::default()
        };
        let (_, params) = build_pure_mds_aeaqecc(&req(8, 10, 3, 7, 2), &cfg).unwrap();
        assert_eq!(
            params,
            AeaqeccParams {
                n: 10,
                k: 5,
                dz: 4,
                dx: 4,
                c: 1,
                pure: true,
                mds: true
            }
        );
    }

    #[test]
    fn degenerate_requests_are_rejected() {
        // l = min(k1, k2) never enters the pipeline.
        assert!(matches!(
            build_pure_mds_aeaqecc(&req(5, 6, 2, 3, 2), &cfg()),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            build_pure_mds_aeaqecc(&req(8, 10, 3, 3, 3), &cfg()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn degenerate_pair_reports_empty_distance() {
        // dual(C2) = C1 exactly: the qudit-flip minimum ranges over an empty
        // set and must surface as a signal, never as 0.
        let f = Field::new(5, 1).unwrap();
        let c1 = grs(&f, 5, 2);
        let c2 = c1.dual(); // dual(c2) = c1
        match derive_params(&c1, &c2, B) {
            Err(Error::DegenerateDistance { which, .. }) => assert_eq!(which, "d_x"),
            other => panic!("expected a degenerate distance, got {other:?}"),
        }

        // dual(C2) strictly inside C1 degenerates the same way.
        let c1 = grs(&f, 5, 3);
        let d = grs(&f, 5, 2);
        assert!(d.is_subcode_of(&c1));
        let c2 = d.dual();
        match derive_params(&c1, &c2, B) {
            Err(Error::DegenerateDistance { which, .. }) => assert_eq!(which, "d_x"),
            other => panic!("expected a degenerate distance, got {other:?}"),
        }
    }

    #[test]
    fn entanglement_formulas_agree_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let fields: Vec<Field> = [(3u64, 1u32), (5, 1), (2, 2), (7, 1)]
            .iter()
            .map(|&(p, m)| Field::new(p, m).unwrap())
            .collect();
        let mut done = 0;
        while done < 400 {
            let f = &fields[rng.gen_range(0..fields.len())];
            let n = rng.gen_range(2..=6);
            let k1 = rng.gen_range(1..n);
            let k2 = rng.gen_range(1..n);
            let mut rand_code = |k: usize| {
                let mut m = crate::matrix::Matrix::zeros(f, k, n);
                for r in 0..k {
                    for c in 0..n {
                        m.set(r, c, f.element(rng.gen_range(0..f.q()) as u64).unwrap());
                    }
                }
                LinearCode::from_generator(m)
            };
            let (Ok(c1), Ok(c2)) = (rand_code(k1), rand_code(k2)) else {
                continue;
            };
            // derive_params internally asserts the two formulas agree; a
            // degenerate distance is fine, a verification failure is not.
            match derive_params(&c1, &c2, B) {
                Ok(_) | Err(Error::DegenerateDistance { .. }) => {}
                Err(e) => panic!("unexpected failure: {e}"),
            }
            done += 1;
        }
    }

    #[test]
    fn outside_weight_matches_distance_for_mds_pairs() {
        let f = Field::new(7, 1).unwrap();
        let c = grs(&f, 6, 3);
        let d = grs(&f, 6, 2);
        // d is a subcode of c, so check the other direction only.
        assert!(weight_outside_equals_min_distance(&c, &d, B).unwrap());
        let z = LinearCode::zero_code(&f, 6);
        assert!(weight_outside_equals_min_distance(&c, &z, B).unwrap());
        assert!(matches!(
            weight_outside_equals_min_distance(&d, &c, B),
            Err(Error::EmptyDifference)
        ));
    }
}
