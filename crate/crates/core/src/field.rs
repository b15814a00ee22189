//! Arithmetic in GF(p^m) with a reproducible element enumeration.
//!
//! Elements are encoded as base-p integers of their coefficient tuple
//! (constant term least significant), multiplication goes through log/antilog
//! tables built once at construction, and the nonzero elements are enumerated
//! as successive powers of a fixed primitive element. Two fields compare equal
//! exactly when they have the same (p, m, modulus) triple.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Default cap on p^m.
pub const DEFAULT_FIELD_SIZE_BOUND: u64 = 1 << 16;

const LOG_ZERO: u32 = u32::MAX;

/// An element of some [`Field`], stored as its canonical integer in `[0, q)`.
///
/// Elements do not carry a field reference; all arithmetic goes through the
/// owning `Field`, and containers (polynomials, matrices, codes) guard
/// against mixing fields.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Repr {
    p: u32,
    m: u32,
    q: u32,
    /// Modulus over GF(p), constant term first, length m+1, monic.
    modulus: Vec<u32>,
    generator: u32,
    /// exp[i] = g^i for 0 <= i < q-1.
    exp: Vec<u32>,
    /// log[v] with log[0] = sentinel.
    log: Vec<u32>,
}

/// A concrete GF(p^m) with fixed modulus, generator and element enumeration.
#[derive(Clone)]
pub struct Field(Arc<Repr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.q)
        } else {
            write!(f, "GF({}) = GF({}^{})", self.0.q, self.0.p, self.0.m)
        }
    }
}

impl Field {
    /// Builds GF(p^m) with the default size bound.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        Self::with_size_bound(p, m, DEFAULT_FIELD_SIZE_BOUND)
    }

    /// Builds GF(p^m), selecting the lexicographically smallest monic
    /// primitive modulus (coefficients compared from the highest degree down).
    pub fn with_size_bound(p: u64, m: u32, bound: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::InvalidInput("extension degree must be >= 1".into()));
        }
        let q = checked_pow(p, m, bound)?;
        let p = p as u32;
        let q = q as u32;

        if m == 1 {
            let generator = smallest_primitive_root(p);
            // The lex-smallest primitive linear polynomial x + c: the residue
            // class of x is p - c, which must be a primitive root.
            let mut modulus = vec![0u32, 1];
            for c in 1..p {
                if is_primitive_root(p - c, p) {
                    modulus[0] = c;
                    break;
                }
            }
            return Self::assemble(p, 1, q, modulus, generator);
        }

        let prime_factors = prime_factors(q as u64 - 1);
        let mut coeffs = vec![0u32; m as usize + 1];
        coeffs[m as usize] = 1;
        for t in 0..q as u64 {
            // Digit j of t is the coefficient of x^j, so ascending t walks the
            // candidates in lex order with the high coefficient compared first.
            let mut v = t;
            for c in coeffs.iter_mut().take(m as usize) {
                *c = (v % p as u64) as u32;
                v /= p as u64;
            }
            if !gfp_is_irreducible(&coeffs, p) {
                continue;
            }
            if gfp_x_is_primitive(&coeffs, p, q, &prime_factors) {
                return Self::assemble(p, m, q, coeffs, p);
            }
        }
        Err(Error::InvalidModulus(format!(
            "no primitive polynomial of degree {m} over GF({p})"
        )))
    }

    /// Rebuilds a field from serialized parts, validating the modulus.
    pub fn from_parts(p: u64, m: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = checked_pow(p, m, DEFAULT_FIELD_SIZE_BOUND)? as u32;
        let p = p as u32;
        if modulus.len() != m as usize + 1 || modulus[m as usize] != 1 {
            return Err(Error::InvalidModulus(
                "modulus must be monic of degree m".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus("coefficient out of range".into()));
        }
        if m == 1 {
            return Self::assemble(p, 1, q, modulus.to_vec(), smallest_primitive_root(p));
        }
        if !gfp_is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus("modulus is reducible".into()));
        }
        // Prefer the residue class of x as generator; fall back to the
        // smallest element of multiplicative order q-1.
        let factors = prime_factors(q as u64 - 1);
        let mut generator = None;
        if gfp_x_is_primitive(modulus, p, q, &factors) {
            generator = Some(p);
        } else {
            for v in 2..q {
                if residue_order_is_full(v, modulus, p, q, &factors) {
                    generator = Some(v);
                    break;
                }
            }
        }
        match generator {
            Some(g) => Self::assemble(p, m, q, modulus.to_vec(), g),
            None => Err(Error::InvalidModulus("no primitive element found".into())),
        }
    }

    fn assemble(p: u32, m: u32, q: u32, modulus: Vec<u32>, generator: u32) -> Result<Field> {
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut log = vec![LOG_ZERO; q as usize];
        let mut cur = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = cur;
            if log[cur as usize] != LOG_ZERO {
                return Err(Error::InvalidModulus(format!(
                    "generator {generator} does not have order {}",
                    q - 1
                )));
            }
            log[cur as usize] = i as u32;
            cur = gfp_mul_residue(cur, generator, &modulus, p);
        }
        if cur != 1 {
            return Err(Error::InvalidModulus(format!(
                "generator {generator} does not have order {}",
                q - 1
            )));
        }
        Ok(Field(Arc::new(Repr {
            p,
            m,
            q,
            modulus,
            generator,
            exp,
            log,
        })))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients over GF(p), constant term first.
    pub fn modulus_coeffs(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    #[inline]
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.0.generator)
    }

    /// Checked constructor for an element from its canonical integer.
    pub fn element(&self, v: u64) -> Result<FieldElement> {
        if v < self.0.q as u64 {
            Ok(FieldElement(v as u32))
        } else {
            Err(Error::InvalidInput(format!(
                "{v} is not a canonical element of {self}"
            )))
        }
    }

    #[inline]
    pub(crate) fn elem(&self, v: u32) -> FieldElement {
        debug_assert!(v < self.0.q);
        FieldElement(v)
    }

    /// The fixed enumeration a_1, ..., a_{q-1}, 0 with a_i = g^{i-1}.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.0
            .exp
            .iter()
            .map(|&v| FieldElement(v))
            .chain(std::iter::once(FieldElement(0)))
    }

    /// The nonzero elements a_1, ..., a_{q-1} in enumeration order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.0.exp.iter().map(|&v| FieldElement(v))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = &*self.0;
        debug_assert!(a.0 < r.q && b.0 < r.q);
        if r.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if r.m == 1 {
            return FieldElement((a.0 + b.0) % r.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut acc = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            acc += (x % r.p + y % r.p) % r.p * place;
            x /= r.p;
            y /= r.p;
            place *= r.p;
        }
        FieldElement(acc)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let r = &*self.0;
        debug_assert!(a.0 < r.q);
        if r.p == 2 {
            return a;
        }
        if r.m == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { r.p - a.0 });
        }
        let mut x = a.0;
        let mut acc = 0u32;
        let mut place = 1u32;
        while x > 0 {
            let d = x % r.p;
            if d != 0 {
                acc += (r.p - d) * place;
            }
            x /= r.p;
            place *= r.p;
        }
        FieldElement(acc)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = &*self.0;
        debug_assert!(a.0 < r.q && b.0 < r.q);
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let n = r.q as u64 - 1;
        let i = (r.log[a.0 as usize] as u64 + r.log[b.0 as usize] as u64) % n;
        FieldElement(r.exp[i as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let r = &*self.0;
        debug_assert!(a.0 < r.q);
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = r.q - 1;
        let i = (n - r.log[a.0 as usize]) % n;
        Ok(FieldElement(r.exp[i as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        let r = &*self.0;
        debug_assert!(a.0 < r.q);
        if a.0 == 0 {
            return if e == 0 { FieldElement(1) } else { FieldElement(0) };
        }
        let n = r.q as u64 - 1;
        let i = (r.log[a.0 as usize] as u64 % n) * (e % n) % n;
        FieldElement(r.exp[i as usize])
    }
}

fn checked_pow(p: u64, m: u32, bound: u64) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q
            .checked_mul(p)
            .filter(|&q| q <= bound)
            .ok_or(Error::FieldTooLarge {
                q: u64::MAX,
                bound,
            })?;
    }
    if q > bound {
        return Err(Error::FieldTooLarge { q, bound });
    }
    Ok(q)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod_u64(mut base: u64, mut e: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        e >>= 1;
    }
    acc
}

fn is_primitive_root(g: u32, p: u32) -> bool {
    if p == 2 {
        return g == 1;
    }
    if g == 0 {
        return false;
    }
    prime_factors(p as u64 - 1)
        .iter()
        .all(|&r| pow_mod_u64(g as u64, (p as u64 - 1) / r, p as u64) != 1)
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| is_primitive_root(g, p))
        .expect("every prime field has a primitive root")
}

// --- polynomial residues over GF(p), used only to bootstrap the tables ---

fn digits(mut v: u32, p: u32, out: &mut [u32]) {
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    let mut acc = 0u32;
    for &d in ds.iter().rev() {
        acc = acc * p + d;
    }
    acc
}

/// Multiplies two residues modulo a monic modulus over GF(p).
fn gfp_mul_residue(a: u32, b: u32, modulus: &[u32], p: u32) -> u32 {
    let m = modulus.len() - 1;
    let mut da = vec![0u32; m];
    let mut db = vec![0u32; m];
    digits(a, p, &mut da);
    digits(b, p, &mut db);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] += x as u64 * y as u64;
        }
    }
    let mut prod: Vec<u32> = prod.iter().map(|&v| (v % p as u64) as u32).collect();
    // Reduce by the monic modulus from the top down.
    for i in (m..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &mc) in modulus.iter().enumerate().take(m) {
            let idx = i - m + j;
            prod[idx] = (prod[idx] + p - c * mc % p) % p;
        }
    }
    undigits(&prod[..m], p)
}

fn gfp_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    let lead_inv = {
        // b monic in all our uses, but stay general.
        let mut inv = 0;
        for x in 1..p {
            if x * b[db] % p == 1 {
                inv = x;
                break;
            }
        }
        inv
    };
    while r.len() > db {
        let c = *r.last().unwrap() % p;
        let deg = r.len() - 1;
        if c != 0 {
            let f = c * lead_inv % p;
            for (j, &bc) in b.iter().enumerate() {
                let idx = deg - db + j;
                r[idx] = (r[idx] + p - f * bc % p) % p;
            }
        }
        r.pop();
        while r.len() > 1 && *r.last().unwrap() == 0 {
            r.pop();
        }
        if r.iter().all(|&c| c == 0) {
            return vec![0];
        }
    }
    r
}

/// Irreducibility over GF(p) by trial division; fine for the degrees a
/// field modulus can have (p^m stays within the size bound).
fn gfp_is_irreducible(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    for d in 1..=m / 2 {
        // All monic divisor candidates of degree d.
        let count = (p as u64).pow(d as u32);
        let mut g = vec![0u32; d + 1];
        g[d] = 1;
        for t in 0..count {
            let mut v = t;
            for c in g.iter_mut().take(d) {
                *c = (v % p as u64) as u32;
                v /= p as u64;
            }
            let r = gfp_poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn residue_pow(mut base: u32, mut e: u64, modulus: &[u32], p: u32) -> u32 {
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = gfp_mul_residue(acc, base, modulus, p);
        }
        base = gfp_mul_residue(base, base, modulus, p);
        e >>= 1;
    }
    acc
}

fn residue_order_is_full(v: u32, modulus: &[u32], p: u32, q: u32, factors: &[u64]) -> bool {
    let n = q as u64 - 1;
    if residue_pow(v, n, modulus, p) != 1 {
        return false;
    }
    factors.iter().all(|&r| residue_pow(v, n / r, modulus, p) != 1)
}

fn gfp_x_is_primitive(modulus: &[u32], p: u32, q: u32, factors: &[u64]) -> bool {
    residue_order_is_full(p, modulus, p, q, factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> Field {
        Field::new(p, m).unwrap()
    }

    #[test]
    fn make_field_rejects_bad_input() {
        assert!(matches!(Field::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(
            Field::new(2, 17),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(Field::new(2, 16).is_ok());
    }

    #[test]
    fn gf2_generator_is_one() {
        let f = gf(2, 1);
        assert_eq!(f.generator().value(), 1);
        assert_eq!(f.q(), 2);
    }

    #[test]
    fn gf4_modulus_is_the_unique_irreducible_quadratic() {
        let f = gf(2, 2);
        // x^2 + x + 1, constant term first.
        assert_eq!(f.modulus_coeffs(), &[1, 1, 1]);
        assert_eq!(f.generator().value(), 2);
        // g * g = g + 1.
        let g = f.generator();
        assert_eq!(f.mul(g, g), f.add(g, f.one()));
    }

    #[test]
    fn gf3_generator_is_two() {
        let f = gf(3, 1);
        assert_eq!(f.generator().value(), 2);
        // order of 2 mod 3 is 2 = q - 1
        assert_eq!(f.mul(f.generator(), f.generator()), f.one());
    }

    #[test]
    fn gf8_and_gf9_moduli() {
        assert_eq!(gf(2, 3).modulus_coeffs(), &[1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(gf(3, 2).modulus_coeffs(), &[2, 1, 1]); // x^2 + x + 2
    }

    #[test]
    fn identities_and_inverses() {
        for &(p, m) in &[(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = gf(p, m);
            for x in f.elements() {
                assert_eq!(f.add(x, f.zero()), x);
                assert_eq!(f.mul(x, f.one()), x);
                if !x.is_zero() {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
                }
            }
            assert!(matches!(f.inv(f.zero()), Err(Error::DivisionByZero)));
        }
    }

    #[test]
    fn exhaustive_field_axioms_small() {
        for &(p, m) in &[(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = gf(p, m);
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, f.neg(a)), f.zero());
                    for &c in &all {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generator_order_is_exactly_q_minus_1() {
        for &(p, m) in &[(2u64, 2u32), (2, 4), (3, 2), (5, 2), (7, 1), (13, 1), (2, 8)] {
            let f = gf(p, m);
            let g = f.generator();
            let mut cur = f.one();
            for k in 1..f.q() {
                cur = f.mul(cur, g);
                if k < f.q() - 1 {
                    assert_ne!(cur, f.one(), "g^{k} = 1 too early in {f}");
                }
            }
            assert_eq!(cur, f.one());
        }
    }

    #[test]
    fn enumeration_lists_every_element_once() {
        for &(p, m) in &[(2u64, 1u32), (3, 2), (2, 4), (5, 1), (13, 1)] {
            let f = gf(p, m);
            let mut seen = vec![false; f.q() as usize];
            let order: Vec<_> = f.elements().collect();
            assert_eq!(order.len(), f.q() as usize);
            assert_eq!(*order.last().unwrap(), f.zero());
            for (i, e) in order.iter().enumerate() {
                assert!(!seen[e.value() as usize]);
                seen[e.value() as usize] = true;
                if i < f.q() as usize - 1 {
                    assert_eq!(*e, f.pow(f.generator(), i as u64));
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for &(p, m) in &[(2u64, 3u32), (3, 2), (5, 2), (2, 8)] {
            let f = gf(p, m);
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.pow(f.add(a, b), p),
                        f.add(f.pow(a, p), f.pow(b, p))
                    );
                }
            }
        }
    }

    #[test]
    fn sampled_axioms_on_large_fields() {
        use proptest::prelude::*;
        let fields: Vec<Field> = vec![gf(2, 10), gf(3, 5), gf(251, 1), gf(2, 16)];
        proptest!(ProptestConfig::with_cases(200), |(fi in 0usize..4, a in 0u64..1 << 16, b in 0u64..1 << 16, c in 0u64..1 << 16)| {
            let f = &fields[fi];
            let q = f.q() as u64;
            let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        });
    }

    #[test]
    fn from_parts_round_trips_and_validates() {
        for &(p, m) in &[(2u64, 3u32), (3, 2), (5, 1), (7, 2)] {
            let f = gf(p, m);
            let g = Field::from_parts(p, m, f.modulus_coeffs()).unwrap();
            assert_eq!(f, g);
            assert_eq!(f.generator(), g.generator());
        }
        // x^2 + 2 = (x-1)(x+1) over GF(3): reducible.
        assert!(Field::from_parts(3, 2, &[2, 0, 1]).is_err());
        // Non-monic.
        assert!(Field::from_parts(3, 2, &[2, 1, 2]).is_err());
    }

    #[test]
    fn from_parts_accepts_irreducible_non_primitive_modulus() {
        // x^2 + 1 over GF(3) is irreducible but x has order 4, not 8, so the
        // generator must be some other element of full order.
        let f = Field::from_parts(3, 2, &[1, 0, 1]).unwrap();
        assert_ne!(f.generator().value(), 3);
        let g = f.generator();
        let mut cur = g;
        let mut order = 1;
        while cur != f.one() {
            cur = f.mul(cur, g);
            order += 1;
        }
        assert_eq!(order, 8);
    }
}
