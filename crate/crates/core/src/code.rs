//! Linear codes as row spaces: GRS and extended-GRS encoders (including the
//! denominator form with an evaluation at infinity), duals, exact minimum
//! distances by exhaustive message enumeration, structural MDS certificates,
//! and the closed-form weight distribution of an MDS code.

use std::ops::ControlFlow;

use num_bigint::{BigInt, BigUint, Sign};

use crate::field::{Field, FieldElement};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// An evaluation point: an ordinary field element or the point at infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvalPoint {
    Finite(FieldElement),
    Infinity,
}

/// Evaluation data for a (possibly extended) GRS code.
///
/// `points` may contain at most one [`EvalPoint::Infinity`]. When a
/// `denominator` P(x) is present the code is the rational form: the last
/// point must be infinity, the remaining points must avoid the roots of P,
/// and deg(P) equals the dimension.
#[derive(Clone, Debug)]
pub struct GrsSpec {
    pub field: Field,
    pub points: Vec<EvalPoint>,
    pub multipliers: Vec<FieldElement>,
    pub k: usize,
    pub denominator: Option<Polynomial>,
}

impl GrsSpec {
    /// Plain or extended GRS with all multipliers one.
    pub fn with_unit_multipliers(field: &Field, points: Vec<EvalPoint>, k: usize) -> GrsSpec {
        let n = points.len();
        GrsSpec {
            field: field.clone(),
            points,
            multipliers: vec![field.one(); n],
            k,
            denominator: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.points.len();
        if n == 0 {
            return Err(Error::InvalidGrsSpec("no evaluation points".into()));
        }
        if self.multipliers.len() != n {
            return Err(Error::InvalidGrsSpec(
                "multiplier count differs from point count".into(),
            ));
        }
        if self.multipliers.iter().any(|v| v.is_zero()) {
            return Err(Error::InvalidGrsSpec("zero multiplier".into()));
        }
        if self.k > n {
            return Err(Error::InvalidGrsSpec("dimension exceeds length".into()));
        }
        let mut seen = vec![false; self.field.q() as usize];
        let mut inf = 0;
        for p in &self.points {
            match p {
                EvalPoint::Infinity => inf += 1,
                EvalPoint::Finite(a) => {
                    if seen[a.value() as usize] {
                        return Err(Error::InvalidGrsSpec("repeated evaluation point".into()));
                    }
                    seen[a.value() as usize] = true;
                }
            }
        }
        if inf > 1 {
            return Err(Error::InvalidGrsSpec("more than one infinite point".into()));
        }
        Ok(())
    }
}

/// A linear code stored with its as-constructed generator plus the derived
/// parity-check matrix; `d` is filled in once the exact minimum distance is
/// certified.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    gen: Matrix,
    parity: Matrix,
    d: Option<usize>,
}

impl LinearCode {
    /// Builds a code from a full-row-rank generator matrix.
    pub fn from_generator(gen: Matrix) -> Result<LinearCode> {
        let k = gen.rows();
        let n = gen.cols();
        if n == 0 {
            return Err(Error::InvalidInput("code length must be positive".into()));
        }
        if gen.rank() != k {
            return Err(Error::RankDeficient);
        }
        let parity = gen.kernel();
        Ok(LinearCode {
            field: gen.field().clone(),
            n,
            k,
            gen,
            parity,
            d: None,
        })
    }

    /// Builds a code from a full-row-rank parity-check matrix; the stored
    /// parity matrix is the one given, the generator is its kernel basis.
    pub fn from_parity(parity: Matrix) -> Result<LinearCode> {
        let n = parity.cols();
        if n == 0 {
            return Err(Error::InvalidInput("code length must be positive".into()));
        }
        if parity.rank() != parity.rows() {
            return Err(Error::RankDeficient);
        }
        let gen = parity.kernel();
        Ok(LinearCode {
            field: parity.field().clone(),
            n,
            k: gen.rows(),
            gen,
            parity,
            d: None,
        })
    }

    /// The zero code of length n.
    pub fn zero_code(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            field: field.clone(),
            n,
            k: 0,
            gen: Matrix::empty(field, n),
            parity: Matrix::identity(field, n),
            d: None,
        }
    }

    /// The one-dimensional code spanned by `v` (which must be nonzero).
    pub fn span(field: &Field, v: Vec<FieldElement>) -> Result<LinearCode> {
        Self::from_generator(Matrix::from_rows(field, vec![v]))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity(&self) -> &Matrix {
        &self.parity
    }

    pub fn d(&self) -> Option<usize> {
        self.d
    }

    pub fn set_distance(&mut self, d: usize) {
        self.d = Some(d);
    }

    /// The dual code; generator and parity matrices swap roles.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            gen: self.parity.clone(),
            parity: self.gen.clone(),
            d: None,
        }
    }

    /// Membership via the parity-check matrix.
    pub fn contains(&self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.n);
        let f = &self.field;
        for r in 0..self.parity.rows() {
            let row = self.parity.row(r);
            let mut acc = f.zero();
            for (a, b) in row.iter().zip(v) {
                acc = f.add(acc, f.mul(*a, *b));
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    /// Whether every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        (0..self.k).all(|r| other.contains(self.gen.row(r)))
    }

    /// Visits every nonzero codeword once, in the deterministic message
    /// order. The codeword buffer is updated incrementally.
    pub(crate) fn for_each_nonzero_codeword<F>(&self, bound: u128, mut visit: F) -> Result<()>
    where
        F: FnMut(&[FieldElement]) -> ControlFlow<()>,
    {
        let needed = message_count(self.field.q(), self.k);
        if needed > bound {
            return Err(Error::EnumerationBound { needed, bound });
        }
        let f = &self.field;
        let q = f.q();
        let k = self.k;
        let mut digits = vec![0u32; k];
        let mut cw = vec![f.zero(); self.n];
        'outer: loop {
            let mut j = 0;
            loop {
                if j == k {
                    break 'outer;
                }
                let old = digits[j];
                let row = self.gen.row(j);
                if old + 1 == q {
                    digits[j] = 0;
                    let delta = f.neg(f.elem(q - 1));
                    add_scaled(f, &mut cw, row, delta);
                    j += 1;
                } else {
                    digits[j] = old + 1;
                    let delta = f.sub(f.elem(old + 1), f.elem(old));
                    add_scaled(f, &mut cw, row, delta);
                    break;
                }
            }
            if visit(&cw).is_break() {
                break;
            }
        }
        Ok(())
    }

    /// Exact minimum distance by exhaustive enumeration of all q^k messages.
    pub fn min_distance(&self, bound: u128) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::EmptyCode);
        }
        let mut best = usize::MAX;
        self.for_each_nonzero_codeword(bound, |cw| {
            let w = weight(cw);
            if w < best {
                best = w;
                if best == 1 {
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
        Ok(best)
    }

    /// Exhaustive weight census A_0..A_n.
    pub fn weight_census(&self, bound: u128) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; self.n + 1];
        counts[0] = 1;
        self.for_each_nonzero_codeword(bound, |cw| {
            counts[weight(cw)] += 1;
            ControlFlow::Continue(())
        })?;
        Ok(counts)
    }

    /// Structural MDS certificate: every k x k column submatrix of the
    /// generator is nonsingular. Falls back to the exhaustive distance when
    /// there are too many column subsets.
    pub fn is_mds(&self, subset_limit: u128, enum_bound: u128) -> Result<bool> {
        if self.k == 0 || self.k == self.n {
            return Ok(true);
        }
        if binomial_u128(self.n, self.k) <= subset_limit {
            let mut idx: Vec<usize> = (0..self.k).collect();
            loop {
                if self.gen.columns_submatrix(&idx).rank() != self.k {
                    return Ok(false);
                }
                if !next_combination(&mut idx, self.n) {
                    return Ok(true);
                }
            }
        }
        Ok(self.min_distance(enum_bound)? == self.n - self.k + 1)
    }

    /// First codeword of full weight n in message order.
    pub fn full_weight_codeword(&self, bound: u128) -> Result<Vec<FieldElement>> {
        let mut found = None;
        self.for_each_nonzero_codeword(bound, |cw| {
            if weight(cw) == self.n {
                found = Some(cw.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        found.ok_or(Error::NoFullWeightCodeword)
    }

    /// Minimum weight over codewords of `self` that are not in `other`;
    /// errors with [`Error::EmptyDifference`] when `self` is contained
    /// in `other`.
    pub fn min_weight_outside(&self, other: &LinearCode, bound: u128) -> Result<usize> {
        self.min_weight_outside_detail(other, bound)?
            .0
            .ok_or(Error::EmptyDifference)
    }

    /// As [`Self::min_weight_outside`], but also reports the overall minimum
    /// weight of `self`, so one enumeration answers both questions.
    pub(crate) fn min_weight_outside_detail(
        &self,
        other: &LinearCode,
        bound: u128,
    ) -> Result<(Option<usize>, Option<usize>)> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(
                "codes have different lengths".into(),
            ));
        }
        let mut best_outside: Option<usize> = None;
        let mut best_overall: Option<usize> = None;
        self.for_each_nonzero_codeword(bound, |cw| {
            let w = weight(cw);
            if best_overall.is_none_or(|b| w < b) {
                best_overall = Some(w);
            }
            if best_outside.is_none_or(|b| w < b) && !other.contains(cw) {
                best_outside = Some(w);
            }
            ControlFlow::Continue(())
        })?;
        Ok((best_outside, best_overall))
    }
}

fn add_scaled(f: &Field, acc: &mut [FieldElement], row: &[FieldElement], delta: FieldElement) {
    for (a, r) in acc.iter_mut().zip(row) {
        *a = f.add(*a, f.mul(delta, *r));
    }
}

/// Hamming weight.
pub fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

pub(crate) fn message_count(q: u32, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = match acc.checked_mul(q as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Encodes the monomial basis 1, x, ..., x^(k-1) over the spec's points:
/// row j carries v_i * a_i^j at finite points and v_i * [j = k-1] at the
/// point at infinity.
pub fn grs_encode(spec: &GrsSpec) -> Result<LinearCode> {
    if spec.denominator.is_some() {
        return Err(Error::InvalidGrsSpec(
            "denominator form must use the rational encoder".into(),
        ));
    }
    spec.validate()?;
    let f = &spec.field;
    let n = spec.points.len();
    let mut rows = Vec::with_capacity(spec.k);
    for j in 0..spec.k {
        let mut row = Vec::with_capacity(n);
        for (i, p) in spec.points.iter().enumerate() {
            let v = spec.multipliers[i];
            let e = match p {
                EvalPoint::Finite(a) => f.mul(v, f.pow(*a, j as u64)),
                EvalPoint::Infinity => {
                    if j + 1 == spec.k {
                        v
                    } else {
                        f.zero()
                    }
                }
            };
            row.push(e);
        }
        rows.push(row);
    }
    let gen = if rows.is_empty() {
        Matrix::empty(f, n)
    } else {
        Matrix::from_rows(f, rows)
    };
    LinearCode::from_generator(gen)
}

/// Rational-form encoder: basis polynomial x^j maps to
/// (v_i * a_i^j / P(a_i), ..., v_n * (x * x^j / P)(infinity)), so the last
/// coordinate is nonzero only for j = k-1, where it equals v_n / lc(P).
pub fn grs_infty_encode(spec: &GrsSpec) -> Result<LinearCode> {
    let p = spec
        .denominator
        .as_ref()
        .ok_or_else(|| Error::InvalidGrsSpec("missing denominator".into()))?;
    spec.validate()?;
    let f = &spec.field;
    let n = spec.points.len();
    if spec.points.last() != Some(&EvalPoint::Infinity) {
        return Err(Error::InvalidGrsSpec(
            "rational form requires the last point to be infinity".into(),
        ));
    }
    if p.is_zero() || p.degree() != Some(spec.k) {
        return Err(Error::InvalidGrsSpec(
            "denominator degree must equal the dimension".into(),
        ));
    }
    let mut inv_at = Vec::with_capacity(n - 1);
    for pt in &spec.points[..n - 1] {
        let EvalPoint::Finite(a) = pt else {
            return Err(Error::InvalidGrsSpec(
                "only the last point may be infinity".into(),
            ));
        };
        let val = p.eval(*a);
        if val.is_zero() {
            return Err(Error::InvalidGrsSpec(
                "denominator vanishes at an evaluation point".into(),
            ));
        }
        inv_at.push(f.inv(val)?);
    }
    let lc_inv = f.inv(p.leading_coefficient().expect("nonzero denominator"))?;
    let mut rows = Vec::with_capacity(spec.k);
    for j in 0..spec.k {
        let mut row = Vec::with_capacity(n);
        for (i, pt) in spec.points[..n - 1].iter().enumerate() {
            let EvalPoint::Finite(a) = pt else { unreachable!() };
            row.push(f.mul(spec.multipliers[i], f.mul(f.pow(*a, j as u64), inv_at[i])));
        }
        row.push(if j + 1 == spec.k {
            f.mul(spec.multipliers[n - 1], lc_inv)
        } else {
            f.zero()
        });
        rows.push(row);
    }
    let gen = if rows.is_empty() {
        Matrix::empty(f, n)
    } else {
        Matrix::from_rows(f, rows)
    };
    LinearCode::from_generator(gen)
}

/// Weight distribution A_0..A_n as exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

fn big_binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Closed-form weight distribution of an [n, k] MDS code over GF(q):
/// A_0 = 1, A_i = 0 below d = n-k+1, and for d <= i <= n
/// A_i = C(n,i) (q-1) * sum_{j=0}^{i-d} (-1)^j C(i-1,j) q^(i-d-j).
pub fn mds_weight_distribution(n: usize, k: usize, q: u64) -> WeightDistribution {
    assert!(k <= n, "dimension exceeds length");
    let mut counts = vec![BigUint::from(0u32); n + 1];
    counts[0] = BigUint::from(1u32);
    if k == 0 {
        return WeightDistribution { counts };
    }
    let d = n - k + 1;
    let q = BigInt::from(q);
    for (i, slot) in counts.iter_mut().enumerate().skip(d) {
        let mut sum = BigInt::from(0);
        for j in 0..=(i - d) {
            let term = BigInt::from_biguint(
                if j % 2 == 0 { Sign::Plus } else { Sign::Minus },
                big_binomial(i - 1, j),
            ) * q.pow((i - d - j) as u32);
            sum += term;
        }
        let a: BigInt = BigInt::from_biguint(Sign::Plus, big_binomial(n, i)) * (q.clone() - 1) * sum;
        let (sign, mag) = a.into_parts();
        assert_ne!(sign, Sign::Minus, "weight distribution went negative");
        *slot = mag;
    }
    WeightDistribution { counts }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> Field {
        Field::new(p, m).unwrap()
    }

    const B: u128 = 1 << 20;

    fn finite_points(f: &Field, num: usize) -> Vec<EvalPoint> {
        f.elements().take(num).map(EvalPoint::Finite).collect()
    }

    fn grs(f: &Field, n: usize, k: usize) -> LinearCode {
        grs_encode(&GrsSpec::with_unit_multipliers(f, finite_points(f, n), k)).unwrap()
    }

    #[test]
    fn repetition_code_via_grs() {
        let f = gf(7, 1);
        let c = grs(&f, 6, 1);
        assert_eq!((c.n(), c.k()), (6, 1));
        assert_eq!(c.min_distance(B).unwrap(), 6);
        assert!(c.is_mds(1 << 20, B).unwrap());
    }

    #[test]
    fn grs_5_3_over_gf5_is_mds() {
        let f = gf(5, 1);
        let c = grs(&f, 5, 3);
        assert_eq!(c.min_distance(B).unwrap(), 3);
        assert!(c.is_mds(1 << 20, B).unwrap());
        // The two MDS certificates must agree on a non-MDS code too.
        let f2 = gf(2, 1);
        let bad = LinearCode::from_generator(Matrix::from_rows(
            &f2,
            vec![
                vec![f2.one(), f2.zero(), f2.one(), f2.zero()],
                vec![f2.zero(), f2.one(), f2.zero(), f2.one()],
            ],
        ))
        .unwrap();
        assert_eq!(bad.min_distance(B).unwrap(), 2); // < n-k+1 = 3
        assert!(!bad.is_mds(1 << 20, B).unwrap());
    }

    #[test]
    fn extended_grs_matches_displayed_generator() {
        // Points F_5^* followed by infinity, dimension l+1 = 3: the infinity
        // column is the unit vector on the last basis row.
        let f = gf(5, 1);
        let mut points: Vec<EvalPoint> = f.nonzero_elements().map(EvalPoint::Finite).collect();
        points.push(EvalPoint::Infinity);
        let c = grs_encode(&GrsSpec::with_unit_multipliers(&f, points, 3)).unwrap();
        let a: Vec<u32> = f.nonzero_elements().map(|e| e.value()).collect();
        assert_eq!(a, vec![1, 2, 4, 3]);
        for j in 0..3 {
            for (i, &ai) in a.iter().enumerate() {
                let want = f.pow(f.element(ai as u64).unwrap(), j as u64);
                assert_eq!(c.generator().get(j, i), want);
            }
            let inf = c.generator().get(j, 4);
            assert_eq!(inf.is_zero(), j != 2);
        }
        assert!(c.is_mds(1 << 20, B).unwrap());
    }

    #[test]
    fn rational_form_infinity_coordinate() {
        let f = gf(5, 1);
        // Four finite points (1, 2, 4, 3) avoid the root of P(x) = x.
        let mut points = finite_points(&f, 4);
        points.push(EvalPoint::Infinity);
        let p = Polynomial::from_values(&f, &[0, 1]).unwrap();
        let spec = GrsSpec {
            field: f.clone(),
            points: points.clone(),
            multipliers: vec![f.one(); 5],
            k: 1,
            denominator: Some(p),
        };
        let c = grs_infty_encode(&spec).unwrap();
        assert_eq!((c.n(), c.k()), (5, 1));
        assert_eq!(c.min_distance(B).unwrap(), 5);

        // Dimension 3 with a monic cubic: infinity coordinate is zero on all
        // but the top basis row, where it equals the last multiplier.
        let p3 = crate::poly::pick_irreducible(&f, 3, &[], &[]).unwrap();
        let spec3 = GrsSpec {
            field: f.clone(),
            points,
            multipliers: vec![f.one(); 5],
            k: 3,
            denominator: Some(p3),
        };
        let c3 = grs_infty_encode(&spec3).unwrap();
        assert!(c3.generator().get(0, 4).is_zero());
        assert!(c3.generator().get(1, 4).is_zero());
        assert_eq!(c3.generator().get(2, 4), f.one());
        assert!(c3.is_mds(1 << 20, B).unwrap());
    }

    #[test]
    fn rational_form_rejects_vanishing_denominator() {
        let f = gf(5, 1);
        let mut points = finite_points(&f, 4);
        points.push(EvalPoint::Infinity);
        // x - 1 vanishes at the first point.
        let p = Polynomial::linear_root(&f, f.one());
        let spec = GrsSpec {
            field: f.clone(),
            points,
            multipliers: vec![f.one(); 5],
            k: 1,
            denominator: Some(p),
        };
        assert!(grs_infty_encode(&spec).is_err());
    }

    #[test]
    fn dual_examples() {
        let f = gf(5, 1);
        let rep = grs(&f, 5, 1);
        let dual = rep.dual();
        assert_eq!((dual.n(), dual.k()), (5, 4));
        assert_eq!(dual.min_distance(B).unwrap(), 2);
        assert!(dual.is_mds(1 << 20, B).unwrap());
        // G H^T = 0 and double dual preserves the row space.
        assert!(rep.generator().mul(&rep.parity().transpose()).is_zero());
        let dd = dual.dual();
        assert_eq!(
            dd.generator().rref().matrix.row_vecs(),
            rep.generator().rref().matrix.row_vecs()
        );
        // Dual of an MDS code is MDS.
        let c = grs(&f, 5, 3);
        assert!(c.dual().is_mds(1 << 20, B).unwrap());
        assert_eq!(c.dual().min_distance(B).unwrap(), 4);
    }

    #[test]
    fn weight_distribution_examples() {
        // [5,3,3] over GF(5): counts frozen from the exhaustive census.
        let w = mds_weight_distribution(5, 3, 5);
        let expect: Vec<BigUint> = [1u32, 0, 0, 40, 40, 44]
            .iter()
            .map(|&v| BigUint::from(v))
            .collect();
        assert_eq!(w.counts, expect);
        assert_eq!(w.total(), BigUint::from(125u32));

        // A_d = C(n,d)(q-1).
        let w = mds_weight_distribution(6, 2, 7);
        assert_eq!(w.counts[5], BigUint::from(6u32 * 6));

        // A_{q+1} of a [q+1, 2, q] code vanishes for every q.
        for q in [3u64, 4, 5, 7, 8, 9] {
            let n = q as usize + 1;
            let w = mds_weight_distribution(n, 2, q);
            assert_eq!(w.counts[n], BigUint::from(0u32));
            assert_eq!(w.total(), BigUint::from(q * q));
        }
    }

    #[test]
    fn census_matches_formula_for_constructed_codes() {
        for &(p, m, n, k) in &[
            (5u64, 1u32, 5usize, 3usize),
            (7, 1, 6, 2),
            (2, 2, 4, 2),
            (3, 2, 9, 2),
            (2, 3, 8, 3),
        ] {
            let f = gf(p, m);
            let c = grs(&f, n, k);
            let census = c.weight_census(B).unwrap();
            let formula = mds_weight_distribution(n, k, f.q() as u64);
            let census_big: Vec<BigUint> = census.iter().map(|&v| BigUint::from(v)).collect();
            assert_eq!(census_big, formula.counts, "q={} n={n} k={k}", f.q());
        }
    }

    #[test]
    fn full_weight_codeword_examples() {
        let f = gf(5, 1);
        // Repetition code: a scaled all-ones row.
        let rep = grs(&f, 5, 1);
        let cw = rep.full_weight_codeword(B).unwrap();
        assert_eq!(weight(&cw), 5);

        // [6, 2, 5] over GF(5): no full-weight codeword exists.
        let mut points: Vec<EvalPoint> = f.elements().map(EvalPoint::Finite).collect();
        points.push(EvalPoint::Infinity);
        let c2 = grs_encode(&GrsSpec::with_unit_multipliers(&f, points.clone(), 2)).unwrap();
        assert!(matches!(
            c2.full_weight_codeword(B),
            Err(Error::NoFullWeightCodeword)
        ));

        // Dimension 3 restores full-weight codewords.
        let c3 = grs_encode(&GrsSpec::with_unit_multipliers(&f, points, 3)).unwrap();
        let cw = c3.full_weight_codeword(B).unwrap();
        assert_eq!(weight(&cw), 6);
        assert!(c3.contains(&cw));
    }

    #[test]
    fn min_weight_outside_examples() {
        let f = gf(5, 1);
        let c = grs(&f, 5, 3);
        // Nothing removed when the other code is zero.
        let z = LinearCode::zero_code(&f, 5);
        assert_eq!(
            c.min_weight_outside(&z, B).unwrap(),
            c.min_distance(B).unwrap()
        );
        // Contained code yields the empty signal.
        let sub = grs(&f, 5, 2);
        assert!(sub.is_subcode_of(&c));
        assert!(matches!(
            sub.min_weight_outside(&c, B),
            Err(Error::EmptyDifference)
        ));
        // MDS code not contained in the other: minimum stays n-k+1.
        assert_eq!(c.min_weight_outside(&sub, B).unwrap(), 3);
    }

    #[test]
    fn zero_code_behaviour() {
        let f = gf(3, 1);
        let z = LinearCode::zero_code(&f, 4);
        assert!(matches!(z.min_distance(B), Err(Error::EmptyCode)));
        assert!(z.is_mds(1 << 20, B).unwrap());
        assert_eq!(z.weight_census(B).unwrap(), vec![1, 0, 0, 0, 0]);
        let d = z.dual();
        assert_eq!(d.k(), 4);
        assert_eq!(d.min_distance(B).unwrap(), 1);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let f = gf(5, 1);
        let c = grs(&f, 5, 3);
        assert!(matches!(
            c.min_distance(100),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn grs_spec_validation() {
        let f = gf(5, 1);
        let mut points = finite_points(&f, 3);
        points.push(points[0]);
        assert!(grs_encode(&GrsSpec::with_unit_multipliers(&f, points, 2)).is_err());
        let mut spec = GrsSpec::with_unit_multipliers(&f, finite_points(&f, 3), 2);
        spec.multipliers[1] = f.zero();
        assert!(grs_encode(&spec).is_err());
        let spec = GrsSpec::with_unit_multipliers(&f, finite_points(&f, 3), 4);
        assert!(grs_encode(&spec).is_err());
    }

    #[test]
    fn singleton_bound_on_grs_family() {
        for &(p, m) in &[(3u64, 1u32), (5, 1), (2, 2), (2, 3)] {
            let f = gf(p, m);
            let q = f.q() as usize;
            for n in 2..=q.min(6) {
                for k in 1..n {
                    let c = grs(&f, n, k);
                    let d = c.min_distance(B).unwrap();
                    assert!(d <= n - k + 1);
                    assert_eq!(d, n - k + 1); // GRS meets the bound
                }
            }
        }
    }
}
