//! Finite fields GF(3^m) for odd m, each carrying its Tits endomorphism.
//!
//! An element is stored as the integer `sum c_i 3^i` of its polynomial-basis
//! coordinates `c_0, ..., c_{m-1}`. Elements hold no reference to the field
//! they belong to; every operation goes through a [`FieldContext`].
//!
//! The context precomputes addition, negation, log/antilog and theta tables.
//! The log tables are seeded from a schoolbook multiply-and-reduce routine
//! ([`FieldContext::mul_reference`]) that stays available as a cross-check.

use std::fmt;

use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported field degree {0}: expected one of 1, 3, 5, 7")]
    UnsupportedDegree(u32),
    #[error("modulus {0:?} is not irreducible over GF(3)")]
    Reducible(Vec<u8>),
    #[error("element index {index} is out of range for GF({order})")]
    OutOfRange { index: u32, order: u32 },
    #[error("coefficient vector has length {got}, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("coefficient {0} is not in {{0, 1, 2}}")]
    BadCoefficient(u8),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// An element of GF(3^m), as its base-3 coordinate index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The base-3 index `sum c_i 3^i`.
    #[inline]
    pub fn index(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0)
    }
}

/// Operations shared by the numeric fields and the symbolic polynomial ring:
/// a commutative ring of characteristic 3 with an endomorphism `theta` whose
/// square is cubing.
///
/// Implementors are ring *objects*; elements are plain values.
pub trait ThetaRing {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// The image of an integer (reduced mod 3).
    fn int(&self, k: i64) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn theta(&self, x: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    /// `k * x` for an integer `k`.
    fn scale(&self, k: i64, x: &Self::Elem) -> Self::Elem {
        match k.rem_euclid(3) {
            0 => self.zero(),
            1 => x.clone(),
            _ => self.neg(x),
        }
    }

    fn pow(&self, x: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `x^(c1*theta + c0)`, i.e. `theta(x)^c1 * x^c0`.
    fn pow_theta_linear(&self, x: &Self::Elem, c0: u32, c1: u32) -> Self::Elem {
        let t = self.pow(&self.theta(x), c1);
        self.mul(&t, &self.pow(x, c0))
    }

    fn sum<I: IntoIterator<Item = Self::Elem>>(&self, terms: I) -> Self::Elem {
        terms
            .into_iter()
            .fold(self.zero(), |acc, t| self.add(&acc, &t))
    }
}

/// Default monic moduli, constant term first. All four are primitive.
pub fn default_modulus(m: u32) -> Option<Vec<u8>> {
    match m {
        1 => Some(vec![1, 1]),                   // t + 1
        3 => Some(vec![1, 2, 0, 1]),             // t^3 + 2t + 1
        5 => Some(vec![1, 2, 0, 0, 0, 1]),       // t^5 + 2t + 1
        7 => Some(vec![1, 0, 2, 0, 0, 0, 0, 1]), // t^7 + 2t^2 + 1
        _ => None,
    }
}

/// GF(3^m) together with its theta endomorphism `x -> x^(3^((m+1)/2))`.
pub struct FieldContext {
    degree: u32,
    order: u32,
    modulus: Vec<u8>,
    theta_exponent: u32,
    generator: FieldElement,
    add: Vec<u16>,
    neg: Vec<u16>,
    log: Vec<u16>,
    // exp[i] = g^i for 0 <= i < 2(q-1), so log sums need no reduction
    exp: Vec<u16>,
    theta: Vec<u16>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Build GF(3^m) with the default modulus.
pub fn make_field(m: u32) -> Result<FieldContext, FieldError> {
    let modulus = default_modulus(m).ok_or(FieldError::UnsupportedDegree(m))?;
    FieldContext::with_modulus(m, modulus)
}

impl FieldContext {
    /// Build GF(3^m) from a monic modulus given constant term first.
    pub fn with_modulus(m: u32, modulus: Vec<u8>) -> Result<Self, FieldError> {
        if m.is_multiple_of(2) || m > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(m));
        }
        if modulus.len() != m as usize + 1 {
            return Err(FieldError::BadLength {
                got: modulus.len(),
                expected: m as usize + 1,
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c > 2) {
            return Err(FieldError::BadCoefficient(c));
        }
        if modulus[m as usize] != 1 || !is_irreducible(&modulus) {
            return Err(FieldError::Reducible(modulus));
        }
        let order = 3u32.pow(m);
        let q = order as usize;
        let mut ctx = FieldContext {
            degree: m,
            order,
            modulus,
            theta_exponent: 3u32.pow(m.div_ceil(2)),
            generator: FieldElement::ONE,
            add: Vec::new(),
            neg: Vec::new(),
            log: Vec::new(),
            exp: Vec::new(),
            theta: Vec::new(),
        };

        ctx.neg = (0..q)
            .map(|x| digitwise(x as u32, 0, m, |a, _| (3 - a) % 3) as u16)
            .collect();
        ctx.add = Vec::with_capacity(q * q);
        for x in 0..q as u32 {
            for y in 0..q as u32 {
                ctx.add.push(digitwise(x, y, m, |a, b| (a + b) % 3) as u16);
            }
        }

        let generator = (1..order)
            .map(|i| FieldElement(i as u16))
            .find(|&g| ctx.reference_order(g) == order - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        ctx.generator = generator;
        let n = q - 1;
        ctx.exp = Vec::with_capacity(2 * n);
        ctx.log = vec![0; q];
        let mut x = FieldElement::ONE;
        for i in 0..2 * n {
            ctx.exp.push(x.0);
            if i < n {
                ctx.log[x.0 as usize] = i as u16;
            }
            x = ctx.mul_reference(x, generator);
        }

        // theta = (m+1)/2 successive cubings
        let cubings = m.div_ceil(2);
        ctx.theta = (0..q)
            .map(|i| {
                let mut x = FieldElement(i as u16);
                for _ in 0..cubings {
                    x = ctx.cube(x);
                }
                x.0
            })
            .collect();
        Ok(ctx)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The exponent `e` with `theta(x) = x^e`.
    pub fn theta_exponent(&self) -> u32 {
        self.theta_exponent
    }

    /// A generator of the multiplicative group (the smallest by index).
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order).map(|i| FieldElement(i as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.order).map(|i| FieldElement(i as u16))
    }

    /// The element with the given base-3 index.
    pub fn element(&self, index: u32) -> Result<FieldElement, FieldError> {
        if index < self.order {
            Ok(FieldElement(index as u16))
        } else {
            Err(FieldError::OutOfRange {
                index,
                order: self.order,
            })
        }
    }

    /// Validate an element against this field.
    pub fn check(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        self.element(x.index())
    }

    pub fn from_coeffs(&self, coeffs: &[u8]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.degree as usize {
            return Err(FieldError::BadLength {
                got: coeffs.len(),
                expected: self.degree as usize,
            });
        }
        let mut index = 0u32;
        for &c in coeffs.iter().rev() {
            if c > 2 {
                return Err(FieldError::BadCoefficient(c));
            }
            index = index * 3 + c as u32;
        }
        Ok(FieldElement(index as u16))
    }

    /// Polynomial-basis coordinates, constant term first; always `m` entries.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u8> {
        let mut v = x.0 as u32;
        (0..self.degree)
            .map(|_| {
                let c = (v % 3) as u8;
                v /= 3;
                c
            })
            .collect()
    }

    /// Coordinates joined by `:` (or the lone digit in GF(3)).
    pub fn render(&self, x: FieldElement) -> String {
        self.coeffs(x)
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }

    /// Parse either a `c0:c1:...` coordinate list or a plain base-3 index.
    pub fn parse(&self, s: &str) -> Result<FieldElement, String> {
        let s = s.trim();
        if s.contains(':') {
            let coeffs = s
                .split(':')
                .map(|c| c.trim().parse::<u8>().map_err(|e| format!("{c:?}: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            self.from_coeffs(&coeffs).map_err(|e| e.to_string())
        } else {
            let index = s.parse::<u32>().map_err(|e| format!("{s:?}: {e}"))?;
            self.element(index).map_err(|e| e.to_string())
        }
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        FieldElement(self.add[x.0 as usize * self.order as usize + y.0 as usize])
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.neg[x.0 as usize])
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let i = self.log[x.0 as usize] as usize + self.log[y.0 as usize] as usize;
        FieldElement(self.exp[i])
    }

    /// `x^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.0 == 0 {
            return FieldElement::ZERO;
        }
        let n = (self.order - 1) as u64;
        let i = (self.log[x.0 as usize] as u64 * (e % n)) % n;
        FieldElement(self.exp[i as usize])
    }

    /// `x^e` on the multiplicative group, for any integer `e`.
    pub fn pow_signed(&self, x: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        if x.is_zero() {
            return if e > 0 {
                Ok(FieldElement::ZERO)
            } else {
                Err(FieldError::ZeroInverse)
            };
        }
        let n = (self.order - 1) as i64;
        Ok(self.pow(x, e.rem_euclid(n) as u64))
    }

    /// `x^(q-2)`.
    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        if x.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(x, self.order as u64 - 2))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    #[inline]
    pub fn theta(&self, x: FieldElement) -> FieldElement {
        FieldElement(self.theta[x.0 as usize])
    }

    /// `x^(c1*theta + c0) = theta(x)^c1 * x^c0`.
    pub fn pow_theta_linear(&self, x: FieldElement, c0: u32, c1: u32) -> FieldElement {
        self.mul(self.pow(self.theta(x), c1 as u64), self.pow(x, c0 as u64))
    }

    /// The exponent `c1*theta + c0` as an integer mod `q - 1`, for use on `K*`.
    pub fn theta_linear_exponent(&self, c0: i64, c1: i64) -> u64 {
        let n = (self.order - 1) as i64;
        (c1 * self.theta_exponent as i64 + c0).rem_euclid(n) as u64
    }

    #[inline]
    pub fn cube(&self, x: FieldElement) -> FieldElement {
        self.mul(self.mul(x, x), x)
    }

    /// Schoolbook product of coordinate vectors reduced by the modulus.
    pub fn mul_reference(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let m = self.degree as usize;
        let a = self.coeffs(x);
        let b = self.coeffs(y);
        let mut r = vec![0u8; 2 * m - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + ai * bj) % 3;
            }
        }
        for d in (m..2 * m - 1).rev() {
            let c = r[d];
            if c != 0 {
                for k in 0..=m {
                    r[d - m + k] = (r[d - m + k] + 3 * 3 - c * self.modulus[k]) % 3;
                }
            }
        }
        r.truncate(m);
        self.from_coeffs(&r).expect("reduced coefficients")
    }

    fn reference_order(&self, g: FieldElement) -> u32 {
        let mut x = g;
        let mut k = 1;
        while x != FieldElement::ONE {
            x = self.mul_reference(x, g);
            k += 1;
            if k > self.order {
                return 0;
            }
        }
        k
    }
}

impl ThetaRing for FieldContext {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }
    fn one(&self) -> FieldElement {
        FieldElement::ONE
    }
    fn int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(3) as u16)
    }
    fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldContext::add(self, *x, *y)
    }
    fn neg(&self, x: &FieldElement) -> FieldElement {
        FieldContext::neg(self, *x)
    }
    fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldContext::sub(self, *x, *y)
    }
    fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldContext::mul(self, *x, *y)
    }
    fn theta(&self, x: &FieldElement) -> FieldElement {
        FieldContext::theta(self, *x)
    }
    fn is_zero(&self, x: &FieldElement) -> bool {
        x.is_zero()
    }
    fn pow(&self, x: &FieldElement, e: u32) -> FieldElement {
        FieldContext::pow(self, *x, e as u64)
    }
    fn pow_theta_linear(&self, x: &FieldElement, c0: u32, c1: u32) -> FieldElement {
        FieldContext::pow_theta_linear(self, *x, c0, c1)
    }
}

fn digitwise(mut x: u32, mut y: u32, m: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += f(x % 3, y % 3) * place;
        x /= 3;
        y /= 3;
        place *= 3;
    }
    out
}

/// Exhaustive trial division by every monic polynomial of degree at most m/2.
pub fn is_irreducible(modulus: &[u8]) -> bool {
    let m = modulus.len() - 1;
    if m == 0 {
        return false;
    }
    for d in 1..=m / 2 {
        for low in 0..3usize.pow(d as u32) {
            let mut divisor: Vec<u8> = (0..d)
                .map(|i| ((low / 3usize.pow(i as u32)) % 3) as u8)
                .collect();
            divisor.push(1);
            if poly_rem_gf3(modulus, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` by a monic `b` over GF(3), coefficient vectors constant term first.
pub fn poly_rem_gf3(a: &[u8], b: &[u8]) -> Vec<u8> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - db;
            for k in 0..db {
                r[shift + k] = (r[shift + k] + 3 * 3 - lead * b[k]) % 3;
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    // Extended Euclid over GF(3)[t], independent of the log tables.
    fn trim(mut p: Vec<i32>) -> Vec<i32> {
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
        p
    }

    fn poly_divmod(a: &[i32], b: &[i32]) -> (Vec<i32>, Vec<i32>) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = b[db]; // 1 and 2 are self-inverse mod 3
        let mut quot = vec![0; r.len().max(1)];
        while r.len() > db && !(r.len() == 1 && r[0] == 0) {
            let dr = r.len() - 1;
            let c = (r[dr] * lead_inv).rem_euclid(3);
            let shift = dr - db;
            quot[shift] = c;
            for k in 0..=db {
                r[shift + k] = (r[shift + k] - c * b[k]).rem_euclid(3);
            }
            r = trim(r);
            if dr == 0 {
                break;
            }
        }
        (trim(quot), r)
    }

    fn poly_mul(a: &[i32], b: &[i32]) -> Vec<i32> {
        let mut r = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y).rem_euclid(3);
            }
        }
        trim(r)
    }

    fn poly_sub(a: &[i32], b: &[i32]) -> Vec<i32> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    (a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0)).rem_euclid(3)
                })
                .collect(),
        )
    }

    fn euclid_inverse(ctx: &FieldContext, x: FieldElement) -> FieldElement {
        let modulus: Vec<i32> = ctx.modulus().iter().map(|&c| c as i32).collect();
        let mut r0 = modulus.clone();
        let mut r1 = trim(ctx.coeffs(x).iter().map(|&c| c as i32).collect());
        let mut s0 = vec![0];
        let mut s1 = vec![1];
        while !(r1.len() == 1 && r1[0] == 0) {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant c; inverse is s0 / c
        let c = r0[0];
        let s: Vec<i32> = s0.iter().map(|v| (v * c).rem_euclid(3)).collect();
        let (_, s) = poly_divmod(&s, &modulus);
        let mut coeffs: Vec<u8> = s.iter().map(|&v| v as u8).collect();
        coeffs.resize(ctx.degree() as usize, 0);
        ctx.from_coeffs(&coeffs).unwrap()
    }

    #[test]
    fn rejects_even_and_large_degrees() {
        for m in [0, 2, 4, 9] {
            assert_eq!(make_field(m).unwrap_err(), FieldError::UnsupportedDegree(m));
        }
        assert!(matches!(
            FieldContext::with_modulus(3, vec![0, 0, 0, 1]),
            Err(FieldError::Reducible(_))
        ));
    }

    #[test]
    fn default_moduli_are_irreducible_and_primitive() {
        for m in [1, 3, 5, 7] {
            let modulus = default_modulus(m).unwrap();
            assert!(is_irreducible(&modulus), "m = {m}");
            let ctx = make_field(m).unwrap();
            // the class of t itself generates K* (t = 2 when m = 1)
            let t = if m == 1 {
                ctx.element(2).unwrap()
            } else {
                ctx.element(3).unwrap()
            };
            assert_eq!(ctx.reference_order(t), ctx.order() - 1, "m = {m}");
        }
    }

    #[test]
    fn gf3_basics() {
        let k = make_field(1).unwrap();
        let (one, two) = (k.element(1).unwrap(), k.element(2).unwrap());
        assert_eq!(k.add(one, two), FieldElement::ZERO);
        assert_eq!(k.inv(two).unwrap(), two);
        assert_eq!(k.inv(one).unwrap(), one);
        assert_eq!(k.inv(FieldElement::ZERO), Err(FieldError::ZeroInverse));
        for x in k.elements() {
            assert_eq!(k.theta(x), x);
        }
        assert_eq!(k.theta_exponent(), 3);
        // x^(theta+1) at x = 2 is 4 = 1
        assert_eq!(k.pow_theta_linear(two, 1, 1), one);
    }

    #[test]
    fn theta_exponents() {
        assert_eq!(make_field(3).unwrap().theta_exponent(), 9);
        assert_eq!(make_field(5).unwrap().theta_exponent(), 27);
        assert_eq!(make_field(7).unwrap().theta_exponent(), 81);
    }

    #[test]
    fn theta_squared_is_cubing_exhaustively() {
        for m in [1, 3, 5, 7] {
            let k = make_field(m).unwrap();
            for x in k.elements() {
                assert_eq!(k.theta(k.theta(x)), k.cube(x), "m = {m}, x = {x:?}");
                assert_eq!(k.theta(x), k.pow(x, k.theta_exponent() as u64));
            }
            assert_eq!(k.theta(FieldElement::ZERO), FieldElement::ZERO);
            assert_eq!(k.theta(FieldElement::ONE), FieldElement::ONE);
        }
    }

    #[test]
    fn table_multiplication_matches_reference() {
        let k = make_field(3).unwrap();
        for x in k.elements() {
            for y in k.elements() {
                assert_eq!(k.mul(x, y), k.mul_reference(x, y));
            }
        }
        let k = make_field(5).unwrap();
        for x in k.elements() {
            for y in k.elements().step_by(7) {
                assert_eq!(k.mul(x, y), k.mul_reference(x, y));
            }
        }
    }

    #[test]
    fn generator_order_in_gf27() {
        let k = make_field(3).unwrap();
        let g = k.generator();
        assert_eq!(k.mul(g, k.pow(g, 26 - 1)), FieldElement::ONE);
        let mut x = g;
        for i in 1..26 {
            assert_ne!(x, FieldElement::ONE, "g^{i} = 1");
            x = k.mul(x, g);
        }
        assert_eq!(x, FieldElement::ONE);
    }

    #[test]
    fn inverse_by_power_matches_extended_euclid() {
        for m in [3, 5] {
            let k = make_field(m).unwrap();
            for x in k.nonzero_elements() {
                let inv = k.inv(x).unwrap();
                assert_eq!(k.mul(x, inv), FieldElement::ONE);
                assert_eq!(inv, euclid_inverse(&k, x), "m = {m}, x = {x:?}");
            }
        }
    }

    #[test]
    fn theta_is_a_ring_endomorphism() {
        let k = make_field(3).unwrap();
        for x in k.elements() {
            for y in k.elements() {
                assert_eq!(k.theta(k.add(x, y)), k.add(k.theta(x), k.theta(y)));
                assert_eq!(k.theta(k.mul(x, y)), k.mul(k.theta(x), k.theta(y)));
            }
        }
        let k = make_field(5).unwrap();
        for x in k.elements().step_by(3) {
            for y in k.elements().step_by(5) {
                assert_eq!(k.theta(k.add(x, y)), k.add(k.theta(x), k.theta(y)));
                assert_eq!(k.theta(k.mul(x, y)), k.mul(k.theta(x), k.theta(y)));
            }
        }
    }

    #[test]
    fn two_plus_theta_and_two_minus_theta_are_inverse_exponents() {
        for m in [1, 3, 5] {
            let k = make_field(m).unwrap();
            let plus = k.theta_linear_exponent(2, 1);
            let minus = k.theta_linear_exponent(2, -1);
            for x in k.nonzero_elements() {
                assert_eq!(k.pow(k.pow(x, plus), minus), x);
                assert_eq!(k.pow(k.pow(x, minus), plus), x);
            }
        }
    }

    #[test]
    fn frobenius_is_bijective() {
        for m in [1, 3, 5, 7] {
            let k = make_field(m).unwrap();
            let mut seen = vec![false; k.order() as usize];
            for x in k.elements() {
                seen[k.cube(x).index() as usize] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn additive_order_three() {
        let k = make_field(5).unwrap();
        for x in k.elements() {
            assert_eq!(k.add(k.add(x, x), x), FieldElement::ZERO);
            assert_eq!(k.coeffs(x).len(), 5);
        }
    }

    #[test]
    fn coordinates_round_trip_and_parse() {
        let k = make_field(3).unwrap();
        for x in k.elements() {
            assert_eq!(k.from_coeffs(&k.coeffs(x)).unwrap(), x);
            assert_eq!(k.parse(&k.render(x)).unwrap(), x);
            assert_eq!(k.parse(&x.index().to_string()).unwrap(), x);
        }
        assert!(k.parse("27").is_err());
        assert!(k.parse("1:3:0").is_err());
        assert!(k.parse("1:0").is_err());
    }

    #[test]
    fn pow_theta_linear_doubling() {
        use rand::{Rng, SeedableRng};
        let k = make_field(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = k.element(rng.gen_range(0..27)).unwrap();
            let half = k.pow_theta_linear(x, 2, 1);
            assert_eq!(k.pow_theta_linear(x, 4, 2), k.mul(half, half));
        }
    }
}
