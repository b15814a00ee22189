//! Polynomials over a [`Field`]: arithmetic, irreducibility, the count of
//! monic irreducibles of a given degree, and a deterministic picker for the
//! constraint-satisfying irreducibles the pair constructions need.

use num_bigint::{BigInt, BigUint, Sign};

use crate::field::{prime_factors, Field, FieldElement};
use crate::{Error, Result};

/// Coefficients stored constant term first, no trailing zeros; the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, v) => write!(f, "{v}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn zero(field: &Field) -> Self {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: FieldElement) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(field: &Field, c: FieldElement, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x - a`
    pub fn linear_root(field: &Field, a: FieldElement) -> Self {
        Self::from_coeffs(field, vec![field.neg(a), field.one()])
    }

    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_values(field: &Field, values: &[u64]) -> Result<Self> {
        let coeffs = values
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients constant term first (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `None` marks the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn leading_coefficient(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient() == Some(self.field.one())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "cross-field polynomial arithmetic");
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::from_coeffs(f, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "cross-field polynomial arithmetic");
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Polynomial::from_coeffs(f, coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "cross-field polynomial arithmetic");
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(f);
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Polynomial::from_coeffs(f, coeffs)
    }

    pub fn mul_scalar(&self, c: FieldElement) -> Polynomial {
        let f = &self.field;
        Polynomial::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        assert_eq!(self.field, divisor.field, "cross-field polynomial arithmetic");
        let f = &self.field;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = f.inv(divisor.leading_coefficient().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let deg = rem.len() - 1;
            let c = *rem.last().unwrap();
            if !c.is_zero() {
                let factor = f.mul(c, lead_inv);
                quot[deg - dd] = factor;
                for (j, &bc) in divisor.coeffs.iter().enumerate() {
                    let idx = deg - dd + j;
                    rem[idx] = f.sub(rem[idx], f.mul(factor, bc));
                }
            }
            rem.pop();
        }
        Ok((
            Polynomial::from_coeffs(f, quot),
            Polynomial::from_coeffs(f, rem),
        ))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.mul_scalar(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.field, other.field, "cross-field polynomial arithmetic");
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor checked nonzero");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// `self^e mod modulus` by square and multiply.
    pub fn powmod(&self, mut e: u64, modulus: &Polynomial) -> Result<Polynomial> {
        let mut base = self.rem(modulus)?;
        let mut acc = Polynomial::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

/// Irreducibility of a monic polynomial via the finite-field criterion:
/// f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(f, x^(q^(n/t)) - x) = 1 for every prime t dividing n.
pub fn is_irreducible(f: &Polynomial) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::InvalidInput(
            "irreducibility test requires a monic polynomial".into(),
        ));
    }
    let n = f.degree().unwrap();
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let field = f.field();
    let q = field.q() as u64;
    let x = Polynomial::monomial(field, field.one(), 1);
    let checkpoints: Vec<usize> = prime_factors(n as u64)
        .iter()
        .map(|&t| n / t as usize)
        .collect();
    let mut h = x.rem(f)?;
    for j in 1..=n {
        h = h.powmod(q, f)?;
        if checkpoints.contains(&j) {
            let g = h.sub(&x).gcd(f);
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
    }
    Ok(h == x.rem(f)?)
}

/// The Möbius function: 1 at 1, (-1)^r on squarefree products of r distinct
/// primes, 0 when a square divides n.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::InvalidInput("mobius(0) is undefined".into()));
    }
    let mut n = n;
    let mut r = 0u32;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return Ok(0);
            }
            r += 1;
        }
        d += 1;
    }
    if n > 1 {
        r += 1;
    }
    Ok(if r % 2 == 0 { 1 } else { -1 })
}

/// Number of monic irreducible polynomials of degree n over the field:
/// N_q(n) = (1/n) * sum over d | n of mobius(d) * q^(n/d).
pub fn count_irreducibles(field: &Field, n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidInput("degree must be >= 1".into()));
    }
    let q = BigInt::from(field.q());
    let mut total = BigInt::from(0);
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = mobius(d as u64)?;
        if mu == 0 {
            continue;
        }
        total += BigInt::from(mu) * q.pow(n / d);
    }
    let (sign, mag) = (total / BigInt::from(n)).into_parts();
    debug_assert_ne!(sign, Sign::Minus);
    Ok(mag)
}

/// Enumerates monic polynomials of degree `d` in the canonical total order:
/// coefficients compared from the highest-degree term down, each coefficient
/// ordered by its canonical integer.
pub fn monic_polynomials(field: &Field, d: usize) -> impl Iterator<Item = Polynomial> + '_ {
    let q = field.q() as u128;
    let count = q.checked_pow(d as u32).expect("degree too large to enumerate");
    (0..count).map(move |t| {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = field.one();
        let mut v = t;
        for c in coeffs.iter_mut().take(d) {
            *c = field.elem((v % q) as u32);
            v /= q;
        }
        Polynomial::from_coeffs(field, coeffs)
    })
}

/// Exhaustive count of monic irreducibles of degree n by trial division
/// against all lower-degree monic irreducibles; the slow reference path for
/// [`count_irreducibles`].
pub fn count_irreducibles_exhaustive(field: &Field, n: u32) -> u64 {
    if n == 1 {
        return field.q() as u64;
    }
    let lower = irreducibles_by_trial_division_up_to(field, (n / 2) as usize);
    monic_polynomials(field, n as usize)
        .filter(|f| !has_divisor_in(f, &lower))
        .count() as u64
}

fn has_divisor_in(f: &Polynomial, tables: &[Vec<Polynomial>]) -> bool {
    tables
        .iter()
        .flatten()
        .any(|g| f.rem(g).expect("nonzero divisor").is_zero())
}

fn irreducibles_by_trial_division_up_to(field: &Field, max_deg: usize) -> Vec<Vec<Polynomial>> {
    let mut tables: Vec<Vec<Polynomial>> = Vec::new();
    for d in 1..=max_deg {
        let half = (d / 2).min(tables.len());
        let irr: Vec<Polynomial> = monic_polynomials(field, d)
            .filter(|f| !has_divisor_in(f, &tables[..half]))
            .collect();
        tables.push(irr);
    }
    tables
}

/// First monic irreducible of degree `d` (in the canonical order) with no
/// root in `forbidden_roots` and not equal to any polynomial in `excluded`.
/// Degree 0 yields the constant 1.
pub fn pick_irreducible(
    field: &Field,
    d: usize,
    forbidden_roots: &[FieldElement],
    excluded: &[Polynomial],
) -> Result<Polynomial> {
    if d == 0 {
        return Ok(Polynomial::one(field));
    }
    for f in monic_polynomials(field, d) {
        if excluded.contains(&f) {
            continue;
        }
        if forbidden_roots.iter().any(|&r| f.eval(r).is_zero()) {
            continue;
        }
        if is_irreducible(&f)? {
            return Ok(f);
        }
    }
    Err(Error::IrreducibleExhausted { degree: d })
}
