//! Exact arithmetic in GF(p^k) via an irreducible modulus polynomial, and
//! cubic extensions GF(q³)/GF(q) built as towers.
//!
//! Polynomials and field elements are coefficient sequences with the
//! constant term first. Deterministic choices (modulus polynomial,
//! primitive element) follow the element's integer index
//! `Σ cᵢ·pⁱ` — the constant term is the least significant digit — so that
//! repeated runs produce identical objects.
//!
//! Prime fields are represented uniformly with modulus polynomial `x`, so
//! every code path is the same for k = 1 and k > 1.

use std::sync::Arc;

use thiserror::Error;

/// Hard cap on created field sizes. The toolkit refuses to build anything
/// larger rather than degrade; all desk-scale constructions stay far below.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {0} exceeds the configured cap {MAX_FIELD_SIZE}")]
    TooLarge(u128),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
}

/// Deterministic trial-division primality check.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The unique `(p, k)` with `q = p^k`, or `None` when `q` is not a prime
/// power. `q ≥ 2` required.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            return (rest == 1).then_some((p, k));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Distinct prime factors of `n`, ascending.
pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

// ------------------------------------------------------------------
// polynomials over GF(p), constant term first
// ------------------------------------------------------------------

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod `p`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "divisor must be monic");
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= dm {
        r.resize(dm, 0);
        return r;
    }
    for i in (dm..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            r[i] = 0;
            for j in 0..dm {
                r[i - dm + j] = (r[i - dm + j] + (p - m[j]) % p * c) % p;
            }
        }
    }
    r.truncate(dm);
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Trial-division irreducibility over GF(p): a monic polynomial of degree k
/// is reducible iff some monic polynomial of degree `1..=k/2` divides it.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        let mut divisor = vec![0u64; d + 1];
        divisor[d] = 1;
        for t in 0..count {
            let mut t = t;
            for c in divisor.iter_mut().take(d) {
                *c = t % p;
                t /= p;
            }
            if poly_is_zero(&poly_rem(poly, &divisor, p)) {
                return false;
            }
        }
    }
    true
}

// ------------------------------------------------------------------
// GF(p^k)
// ------------------------------------------------------------------

#[derive(Debug, PartialEq, Eq)]
struct SpecInner {
    p: u64,
    k: u32,
    size: u64,
    modulus_poly: Vec<u64>,
}

/// GF(p^k), described by its characteristic, degree, and a monic
/// irreducible modulus polynomial. Cheap to clone and share.
#[derive(Debug, Clone)]
pub struct FieldSpec(Arc<SpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds GF(p^k) with the deterministic modulus polynomial: the monic
    /// irreducible of degree k whose non-leading coefficient index
    /// `Σ cᵢ·pⁱ` is smallest. For k = 1 that is the polynomial `x`.
    pub fn new(p: u64, k: u32) -> Result<FieldSpec, FieldError> {
        assert!(k >= 1, "degree must be at least 1");
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let size = (p as u128)
            .checked_pow(k)
            .filter(|&s| s <= MAX_FIELD_SIZE as u128);
        let size = match size {
            Some(s) => s as u64,
            None => return Err(FieldError::TooLarge((p as u128).pow(k))),
        };
        let mut modulus_poly = vec![0u64; k as usize + 1];
        modulus_poly[k as usize] = 1;
        if k > 1 {
            let mut found = false;
            for t in 0..size {
                let mut t = t;
                for c in modulus_poly.iter_mut().take(k as usize) {
                    *c = t % p;
                    t /= p;
                }
                if is_irreducible(&modulus_poly, p) {
                    found = true;
                    break;
                }
            }
            debug_assert!(found, "an irreducible polynomial of every degree exists");
        }
        Ok(FieldSpec(Arc::new(SpecInner {
            p,
            k,
            size,
            modulus_poly,
        })))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Number of elements, `p^k`.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    /// Monic modulus polynomial, constant term first, length k+1.
    pub fn modulus_poly(&self) -> &[u64] {
        &self.0.modulus_poly
    }

    pub fn zero(&self) -> FieldElement {
        self.element_from_index(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element_from_index(1)
    }

    /// The element whose coefficient sequence is the base-p digits of
    /// `index` (constant term = least significant digit).
    pub fn element_from_index(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.size());
        let mut coeffs = vec![0u64; self.k() as usize];
        let mut t = index;
        for c in coeffs.iter_mut() {
            *c = t % self.p();
            t /= self.p();
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn element_from_coeffs(&self, coeffs: Vec<u64>) -> FieldElement {
        assert_eq!(coeffs.len(), self.k() as usize);
        assert!(coeffs.iter().all(|&c| c < self.p()));
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |i| self.element_from_index(i))
    }
}

/// An element of GF(p^k): a coefficient sequence of length k over GF(p),
/// constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn index(&self) -> u64 {
        let p = self.field.p();
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same_field(other)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p();
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same_field(other)?;
        let p = self.field.p();
        let k = self.field.k() as usize;
        let mut buf = vec![0u64; 2 * k - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                buf[i + j] = (buf[i + j] + a * b) % p;
            }
        }
        let m = self.field.modulus_poly();
        for i in (k..buf.len()).rev() {
            let c = buf[i];
            if c != 0 {
                buf[i] = 0;
                for j in 0..k {
                    buf[i - k + j] = (buf[i - k + j] + (p - m[j]) % p * c) % p;
                }
            }
        }
        buf.truncate(k);
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: buf,
        })
    }

    /// Square-and-multiply exponentiation; `a^0 = 1` for every `a`.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }
}

/// Least `e ≥ 1` with `a^e = 1`; divides `|F| − 1`.
pub fn multiplicative_order(a: &FieldElement) -> Result<u64, FieldError> {
    if a.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    let group = a.field().size() - 1;
    let one = a.field().one();
    let mut e = group;
    for r in distinct_prime_factors(group) {
        while e.is_multiple_of(r) && a.pow(e / r) == one {
            e /= r;
        }
    }
    debug_assert_eq!(a.pow(e), one);
    Ok(e)
}

/// The element of multiplicative order `|F| − 1` with the smallest index.
pub fn primitive_element(f: &FieldSpec) -> FieldElement {
    let group = f.size() - 1;
    for i in 1..f.size() {
        let a = f.element_from_index(i);
        if multiplicative_order(&a).expect("nonzero") == group {
            return a;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

// ------------------------------------------------------------------
// cubic extensions GF(q³)/GF(q)
// ------------------------------------------------------------------

/// An element of a cubic extension: `c₀ + c₁·y + c₂·y²` with base-field
/// coefficients.
pub type CubicElement = [FieldElement; 3];

/// GF(q³) as a tower over GF(q), reduced by the deterministic monic
/// irreducible cubic `y³ + g₂y² + g₁y + g₀` of smallest coefficient index.
/// A cubic over a field is irreducible exactly when it has no root there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicExtension {
    base: FieldSpec,
    g: [FieldElement; 3],
}

impl CubicExtension {
    pub fn new(base: &FieldSpec) -> Result<CubicExtension, FieldError> {
        let q = base.size() as u128;
        if q * q * q > MAX_FIELD_SIZE as u128 {
            return Err(FieldError::TooLarge(q * q * q));
        }
        let q = base.size();
        for t in 0..q * q * q {
            let g = [
                base.element_from_index(t % q),
                base.element_from_index(t / q % q),
                base.element_from_index(t / (q * q)),
            ];
            if Self::cubic_has_no_root(base, &g) {
                return Ok(CubicExtension {
                    base: base.clone(),
                    g,
                });
            }
        }
        unreachable!("irreducible cubics exist over every finite field")
    }

    fn cubic_has_no_root(base: &FieldSpec, g: &[FieldElement; 3]) -> bool {
        base.elements().all(|e| {
            let e2 = e.mul(&e).unwrap();
            let e3 = e2.mul(&e).unwrap();
            let val = e3
                .add(&g[2].mul(&e2).unwrap())
                .unwrap()
                .add(&g[1].mul(&e).unwrap())
                .unwrap()
                .add(&g[0])
                .unwrap();
            !val.is_zero()
        })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    /// Non-leading coefficients `[g₀, g₁, g₂]` of the modulus cubic.
    pub fn modulus_cubic(&self) -> &[FieldElement; 3] {
        &self.g
    }

    /// Number of elements, `q³`.
    pub fn size(&self) -> u64 {
        let q = self.base.size();
        q * q * q
    }

    pub fn zero(&self) -> CubicElement {
        [self.base.zero(), self.base.zero(), self.base.zero()]
    }

    pub fn one(&self) -> CubicElement {
        [self.base.one(), self.base.zero(), self.base.zero()]
    }

    /// Digits of `index` base q, least significant = constant coefficient.
    pub fn element_from_index(&self, index: u64) -> CubicElement {
        let q = self.base.size();
        [
            self.base.element_from_index(index % q),
            self.base.element_from_index(index / q % q),
            self.base.element_from_index(index / (q * q)),
        ]
    }

    pub fn add(&self, a: &CubicElement, b: &CubicElement) -> CubicElement {
        [
            a[0].add(&b[0]).unwrap(),
            a[1].add(&b[1]).unwrap(),
            a[2].add(&b[2]).unwrap(),
        ]
    }

    pub fn mul(&self, a: &CubicElement, b: &CubicElement) -> CubicElement {
        let zero = self.base.zero();
        let mut buf = [zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero];
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                buf[i + j] = buf[i + j].add(&a[i].mul(&b[j]).unwrap()).unwrap();
            }
        }
        // y³ = −(g₂y² + g₁y + g₀)
        for i in (3..5).rev() {
            let c = buf[i].clone();
            if c.is_zero() {
                continue;
            }
            buf[i] = self.base.zero();
            for j in 0..3 {
                buf[i - 3 + j] = buf[i - 3 + j].sub(&c.mul(&self.g[j]).unwrap()).unwrap();
            }
        }
        [buf[0].clone(), buf[1].clone(), buf[2].clone()]
    }

    pub fn pow(&self, a: &CubicElement, mut e: u64) -> CubicElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &CubicElement) -> bool {
        a.iter().all(FieldElement::is_zero)
    }

    /// Least `e ≥ 1` with `a^e = 1` in the extension field.
    pub fn order(&self, a: &CubicElement) -> Result<u64, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::ZeroElement);
        }
        let group = self.size() - 1;
        let one = self.one();
        let mut e = group;
        for r in distinct_prime_factors(group) {
            while e.is_multiple_of(r) && self.pow(a, e / r) == one {
                e /= r;
            }
        }
        Ok(e)
    }

    /// The generator of GF(q³)* with the smallest index.
    pub fn primitive_element(&self) -> CubicElement {
        let group = self.size() - 1;
        for i in 1..self.size() {
            let a = self.element_from_index(i);
            if self.order(&a).expect("nonzero") == group {
                return a;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    /// Coefficients `(a₁, a₂, a₃)` of the minimal polynomial
    /// `x³ − a₁x² − a₂x − a₃` of `gamma` over the base field.
    ///
    /// A generator of GF(q³)* lies in no proper subfield containing GF(q),
    /// so its degree over GF(q) is exactly 3 and the minimal polynomial is
    /// the characteristic polynomial of multiplication by `gamma`:
    /// `x³ − tr·x² + σ₂·x − det`.
    pub fn min_poly_of(&self, gamma: &CubicElement) -> (FieldElement, FieldElement, FieldElement) {
        let y = self.element_from_index(self.base.size());
        let y2 = self.mul(&y, &y);
        // columns of the multiplication matrix in the basis {1, y, y²}
        let cols = [gamma.clone(), self.mul(gamma, &y), self.mul(gamma, &y2)];
        let m = |i: usize, j: usize| -> &FieldElement { &cols[j][i] };
        let mul = |a: &FieldElement, b: &FieldElement| a.mul(b).unwrap();
        let sub = |a: &FieldElement, b: &FieldElement| a.sub(b).unwrap();
        let add = |a: &FieldElement, b: &FieldElement| a.add(b).unwrap();

        let trace = add(&add(m(0, 0), m(1, 1)), m(2, 2));
        // principal 2×2 minors on index pairs {0,1}, {0,2}, {1,2}
        let minor = |i: usize, j: usize| sub(&mul(m(i, i), m(j, j)), &mul(m(i, j), m(j, i)));
        let sigma2 = add(&add(&minor(0, 1), &minor(0, 2)), &minor(1, 2));
        let det = {
            let a = mul(
                m(0, 0),
                &sub(&mul(m(1, 1), m(2, 2)), &mul(m(1, 2), m(2, 1))),
            );
            let b = mul(
                m(0, 1),
                &sub(&mul(m(1, 0), m(2, 2)), &mul(m(1, 2), m(2, 0))),
            );
            let c = mul(
                m(0, 2),
                &sub(&mul(m(1, 0), m(2, 1)), &mul(m(1, 1), m(2, 0))),
            );
            add(&sub(&a, &b), &c)
        };
        (trace, sigma2.neg(), det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    fn prime_power_recognition() {
        assert_eq!(is_prime_power(8), Some((2, 3)));
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(2), Some((2, 1)));
        assert_eq!(is_prime_power(1), None);
        assert_eq!(is_prime_power(1024), Some((2, 10)));
        for q in 2..2000u64 {
            match is_prime_power(q) {
                Some((p, k)) => {
                    assert!(is_prime(p));
                    assert_eq!(p.pow(k), q);
                }
                None => assert!((2..q).filter(|d| q % d == 0).count() > 0),
            }
        }
    }

    #[test]
    fn deterministic_moduli() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.modulus_poly(), &[0, 1]); // the polynomial x

        let f = FieldSpec::new(2, 3).unwrap();
        assert_eq!(f.modulus_poly(), &[1, 1, 0, 1]); // x³ + x + 1

        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.modulus_poly(), &[1, 0, 1]); // x² + 1

        // repeated construction gives the identical polynomial
        assert_eq!(FieldSpec::new(2, 3).unwrap(), FieldSpec::new(2, 3).unwrap());
        assert!(matches!(FieldSpec::new(6, 1), Err(FieldError::NotPrime(6))));
        assert!(matches!(
            FieldSpec::new(2, 21),
            Err(FieldError::TooLarge(_))
        ));
    }

    /// Long-division oracle for the GF(8) reduction example.
    #[test]
    fn gf8_reduction_matches_long_division() {
        let f = FieldSpec::new(2, 3).unwrap();
        let x = f.element_from_index(2);
        // x·x·x reduced by x³ + x + 1 is x + 1
        let x3 = x.mul(&x).unwrap().mul(&x).unwrap();
        assert_eq!(x3.coeffs(), &[1, 1, 0]);
        // oracle: divide x³ (coeffs [0,0,0,1]) by the modulus directly
        let rem = poly_rem(&[0, 0, 0, 1], f.modulus_poly(), 2);
        assert_eq!(x3.coeffs(), rem.as_slice());
    }

    #[test]
    fn small_field_arithmetic() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let two = f3.element_from_index(2);
        assert_eq!(two.add(&two).unwrap(), f3.one()); // 2 + 2 = 1 in GF(3)

        let f8 = FieldSpec::new(2, 3).unwrap();
        for a in f8.elements() {
            assert_eq!(a.mul(&f8.one()).unwrap(), a); // a · 1 = a
            assert_eq!(a.add(&a.neg()).unwrap(), f8.zero());
        }

        let other = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f3.one().add(&other.one()), Err(FieldError::FieldMismatch));
    }

    #[test]
    fn fermat_for_all_small_fields() {
        for (p, k) in [
            (2, 1),
            (2, 3),
            (2, 5),
            (3, 1),
            (3, 2),
            (5, 1),
            (5, 2),
            (7, 1),
            (2, 8),
        ] {
            let f = FieldSpec::new(p, k).unwrap();
            let group = f.size() - 1;
            for a in f.elements().skip(1) {
                assert_eq!(a.pow(group), f.one(), "p={p} k={k} a={:?}", a.coeffs());
                assert_eq!(group % multiplicative_order(&a).unwrap(), 0);
            }
        }
    }

    #[test]
    fn orders_and_primitive_elements() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(multiplicative_order(&f7.one()).unwrap(), 1);
        // oracle: brute-force powers of 3 modulo 7
        let three = f7.element_from_index(3);
        let mut acc = f7.one();
        let mut order = 0;
        for e in 1..=6 {
            acc = acc.mul(&three).unwrap();
            if acc == f7.one() {
                order = e;
                break;
            }
        }
        assert_eq!(order, 6);
        assert_eq!(multiplicative_order(&three).unwrap(), 6);
        assert_eq!(primitive_element(&f7), three);

        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(primitive_element(&f2), f2.one());

        let f8 = FieldSpec::new(2, 3).unwrap();
        let x = f8.element_from_index(2);
        // oracle: enumerate x¹..x⁷
        let mut seen_one_before_7 = false;
        let mut acc = f8.one();
        for _ in 1..7 {
            acc = acc.mul(&x).unwrap();
            seen_one_before_7 |= acc == f8.one();
        }
        assert!(!seen_one_before_7);
        assert_eq!(multiplicative_order(&x).unwrap(), 7);
        assert_eq!(primitive_element(&f8), x);

        assert_eq!(
            multiplicative_order(&f8.zero()),
            Err(FieldError::ZeroElement)
        );
    }

    #[test]
    fn primitive_element_generates_whole_group() {
        for (p, k) in [(2, 3), (3, 2), (5, 1), (7, 1), (13, 1), (2, 4), (3, 3)] {
            let f = FieldSpec::new(p, k).unwrap();
            let g = primitive_element(&f);
            let mut seen = std::collections::HashSet::new();
            let mut acc = f.one();
            for _ in 0..f.size() - 1 {
                assert!(seen.insert(acc.index()));
                acc = acc.mul(&g).unwrap();
            }
            assert_eq!(seen.len() as u64, f.size() - 1);
        }
    }

    #[test]
    fn cubic_extension_gf2() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let ext = CubicExtension::new(&f2).unwrap();
        // modulus cubic y³ + y + 1 (first irreducible in index order)
        let g = ext.modulus_cubic();
        assert_eq!([g[0].index(), g[1].index(), g[2].index()], [1, 1, 0]);
        assert_eq!(ext.size(), 8);
        let gamma = ext.primitive_element();
        assert_eq!(ext.order(&gamma).unwrap(), 7);
        // γ = y, whose minimal polynomial is the modulus itself:
        // x³ = 0·x² + 1·x + 1
        let (a1, a2, a3) = ext.min_poly_of(&gamma);
        assert_eq!([a1.index(), a2.index(), a3.index()], [0, 1, 1]);
    }

    #[test]
    fn cubic_extension_min_poly_annihilates() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let base = FieldSpec::new(p, k).unwrap();
            let ext = CubicExtension::new(&base).unwrap();
            let gamma = ext.primitive_element();
            assert_eq!(ext.order(&gamma).unwrap(), ext.size() - 1);
            let (a1, a2, a3) = ext.min_poly_of(&gamma);
            // γ³ − a₁γ² − a₂γ − a₃ must vanish
            let g2 = ext.mul(&gamma, &gamma);
            let g3 = ext.mul(&g2, &gamma);
            let lift = |c: &FieldElement| [c.clone(), base.zero(), base.zero()];
            let rhs = ext.add(
                &ext.add(&ext.mul(&lift(&a1), &g2), &ext.mul(&lift(&a2), &gamma)),
                &lift(&a3),
            );
            assert_eq!(g3, rhs, "p={p} k={k}");
        }
    }
}
