//! Exact polynomials over GF(3) in paired variables `v` and `v^theta`, with
//! the formal endomorphism `v -> v^theta -> v^3`.
//!
//! Every symbol `v` in a [`Universe`] contributes two ring variables: `v0 = v`
//! and `v1 = v^theta`. The ring is free in those variables, so two
//! polynomials are equal exactly when their canonical term maps agree. An
//! identity that expands to zero here holds in every field of characteristic
//! 3 with a Tits endomorphism.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldContext, FieldElement, ThetaRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("theta power must be 0 or 1, got {0}")]
    BadThetaPower(u8),
    #[error("polynomials belong to different symbol universes")]
    UniverseMismatch,
    #[error("no value assigned to symbol {0:?}")]
    MissingAssignment(String),
}

/// An ordered list of symbols. Fixes the variable and term order.
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    symbols: Vec<String>,
}

impl Universe {
    pub fn new<S: AsRef<str>>(symbols: &[S]) -> Arc<Universe> {
        Arc::new(Universe {
            symbols: symbols.iter().map(|s| s.as_ref().to_owned()).collect(),
        })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    fn position(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    fn width(&self) -> usize {
        2 * self.symbols.len()
    }
}

/// Exponent vector: entry `2k` is the power of symbol `k`, entry `2k+1` the
/// power of its theta image.
pub type Monomial = Box<[u16]>;

#[derive(Clone)]
pub struct TwistedPoly {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, u8>,
}

impl PartialEq for TwistedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for TwistedPoly {}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl TwistedPoly {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        TwistedPoly {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(universe: &Arc<Universe>, k: i64) -> Self {
        let mut p = Self::zero(universe);
        let c = k.rem_euclid(3) as u8;
        if c != 0 {
            p.terms.insert(vec![0; universe.width()].into(), c);
        }
        p
    }

    /// `symbol` (theta_power 0) or `symbol^theta` (theta_power 1).
    pub fn var(universe: &Arc<Universe>, symbol: &str, theta_power: u8) -> Result<Self, PolyError> {
        if theta_power > 1 {
            return Err(PolyError::BadThetaPower(theta_power));
        }
        let k = universe
            .position(symbol)
            .ok_or_else(|| PolyError::UnknownSymbol(symbol.to_owned()))?;
        let mut exps = vec![0u16; universe.width()];
        exps[2 * k + theta_power as usize] = 1;
        let mut p = Self::zero(universe);
        p.terms.insert(exps.into(), 1);
        Ok(p)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u8)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(PolyError::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            accumulate(&mut out.terms, m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, u8> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb.iter()).map(|(x, y)| x + y).collect();
                let e = acc.entry(m).or_insert(0);
                *e = (*e + ca * cb) % 3;
            }
        }
        Ok(TwistedPoly {
            universe: self.universe.clone(),
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TwistedPoly {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), 3 - c))
                .collect(),
        }
    }

    /// The endomorphism `v -> v^theta`, `v^theta -> v^3`, identity on GF(3).
    pub fn theta(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut image = vec![0u16; m.len()];
            for k in 0..m.len() / 2 {
                image[2 * k + 1] = m[2 * k];
                image[2 * k] = 3 * m[2 * k + 1];
            }
            accumulate(&mut terms, image.into(), c);
        }
        TwistedPoly {
            universe: self.universe.clone(),
            terms,
        }
    }

    /// Evaluate with `v^theta` read as `theta(value of v)`.
    pub fn eval(
        &self,
        assignment: &HashMap<&str, FieldElement>,
        ctx: &FieldContext,
    ) -> Result<FieldElement, PolyError> {
        let mut values = Vec::with_capacity(self.universe.width());
        for s in &self.universe.symbols {
            let x = match assignment.get(s.as_str()) {
                Some(&x) => x,
                None if self.mentions(s) => return Err(PolyError::MissingAssignment(s.clone())),
                None => FieldElement::ZERO,
            };
            values.push(x);
            values.push(ctx.theta(x));
        }
        let mut acc = FieldElement::ZERO;
        for (m, &c) in &self.terms {
            let mut t = <FieldContext as ThetaRing>::int(ctx, c as i64);
            for (x, &e) in values.iter().zip(m.iter()) {
                if e > 0 {
                    t = ctx.mul(t, ctx.pow(*x, e as u64));
                }
            }
            acc = ctx.add(acc, t);
        }
        Ok(acc)
    }

    fn mentions(&self, symbol: &str) -> bool {
        match self.universe.position(symbol) {
            Some(k) => self.terms.keys().any(|m| m[2 * k] > 0 || m[2 * k + 1] > 0),
            None => false,
        }
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, u8>, m: Monomial, c: u8) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = (*o.get() + c) % 3;
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Renders as e.g. `2*a^theta*b^2 + c`; `(a^theta)^2` for powers of theta
/// variables.
impl fmt::Display for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, &c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            for (k, s) in self.universe.symbols.iter().enumerate() {
                match m[2 * k] {
                    0 => {}
                    1 => factors.push(s.clone()),
                    e => factors.push(format!("{s}^{e}")),
                }
                match m[2 * k + 1] {
                    0 => {}
                    1 => factors.push(format!("{s}^theta")),
                    e => factors.push(format!("({s}^theta)^{e}")),
                }
            }
            match (c, factors.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", factors.join("*"))?,
                (_, false) => write!(f, "{c}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The polynomial ring over a universe, as a [`ThetaRing`].
///
/// The trait methods panic on universe mismatch; use the `try_*` methods on
/// [`TwistedPoly`] for the checked variants.
#[derive(Clone, Debug)]
pub struct PolyRing {
    universe: Arc<Universe>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(symbols: &[S]) -> Self {
        PolyRing {
            universe: Universe::new(symbols),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// `symbol` as a ring element. Panics on an unknown symbol.
    pub fn var(&self, symbol: &str) -> TwistedPoly {
        TwistedPoly::var(&self.universe, symbol, 0).expect("symbol in universe")
    }

    pub fn var_theta(&self, symbol: &str) -> TwistedPoly {
        TwistedPoly::var(&self.universe, symbol, 1).expect("symbol in universe")
    }
}

impl ThetaRing for PolyRing {
    type Elem = TwistedPoly;

    fn zero(&self) -> TwistedPoly {
        TwistedPoly::zero(&self.universe)
    }
    fn one(&self) -> TwistedPoly {
        TwistedPoly::constant(&self.universe, 1)
    }
    fn int(&self, k: i64) -> TwistedPoly {
        TwistedPoly::constant(&self.universe, k)
    }
    fn add(&self, x: &TwistedPoly, y: &TwistedPoly) -> TwistedPoly {
        x.try_add(y).expect("universe mismatch")
    }
    fn neg(&self, x: &TwistedPoly) -> TwistedPoly {
        x.neg()
    }
    fn mul(&self, x: &TwistedPoly, y: &TwistedPoly) -> TwistedPoly {
        x.try_mul(y).expect("universe mismatch")
    }
    fn theta(&self, x: &TwistedPoly) -> TwistedPoly {
        x.theta()
    }
    fn is_zero(&self, x: &TwistedPoly) -> bool {
        x.is_zero()
    }
}

impl std::ops::Add for &TwistedPoly {
    type Output = TwistedPoly;
    fn add(self, rhs: &TwistedPoly) -> TwistedPoly {
        self.try_add(rhs).expect("universe mismatch")
    }
}

impl std::ops::Sub for &TwistedPoly {
    type Output = TwistedPoly;
    fn sub(self, rhs: &TwistedPoly) -> TwistedPoly {
        self.try_sub(rhs).expect("universe mismatch")
    }
}

impl std::ops::Mul for &TwistedPoly {
    type Output = TwistedPoly;
    fn mul(self, rhs: &TwistedPoly) -> TwistedPoly {
        self.try_mul(rhs).expect("universe mismatch")
    }
}

impl std::ops::Neg for &TwistedPoly {
    type Output = TwistedPoly;
    fn neg(self) -> TwistedPoly {
        TwistedPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use proptest::prelude::*;

    fn ring() -> PolyRing {
        PolyRing::new(&["a", "b"])
    }

    // random polynomial: up to 6 terms, small exponents
    fn arb_poly(r: PolyRing) -> impl Strategy<Value = TwistedPoly> {
        prop::collection::vec((1u8..3, prop::collection::vec(0u16..3, 4)), 0..6).prop_map(
            move |terms| {
                let mut p = r.zero();
                for (c, e) in terms {
                    let mut t = r.int(c as i64);
                    for (k, s) in ["a", "b"].iter().enumerate() {
                        t = r.mul(&t, &r.pow(&r.var(s), e[2 * k] as u32));
                        t = r.mul(&t, &r.pow(&r.var_theta(s), e[2 * k + 1] as u32));
                    }
                    p = r.add(&p, &t);
                }
                p
            },
        )
    }

    #[test]
    fn variables_and_theta_images() {
        let r = ring();
        let a0 = TwistedPoly::var(r.universe(), "a", 0).unwrap();
        let a1 = TwistedPoly::var(r.universe(), "a", 1).unwrap();
        assert_eq!(a0.to_string(), "a");
        assert_eq!(a1.to_string(), "a^theta");
        assert_eq!((&a0 * &a1).to_string(), "a*a^theta");
        assert_eq!(a0.theta(), a1);
        assert_eq!(a1.theta(), r.pow(&a0, 3));
        assert_eq!(
            TwistedPoly::var(r.universe(), "z", 0),
            Err(PolyError::UnknownSymbol("z".into()))
        );
        assert_eq!(
            TwistedPoly::var(r.universe(), "a", 2),
            Err(PolyError::BadThetaPower(2))
        );
    }

    #[test]
    fn characteristic_three() {
        let r = ring();
        let (a, b) = (r.var("a"), r.var("b"));
        let s = &a + &b;
        assert!((&(&s + &s) + &s).is_zero());
        assert_eq!(r.pow(&s, 3), &r.pow(&a, 3) + &r.pow(&b, 3));
        assert_eq!(&(&a - &b) * &s, &(&a * &a) - &(&b * &b));
        assert_eq!(s.theta().theta(), &r.pow(&a, 3) + &r.pow(&b, 3));
    }

    #[test]
    fn universe_mismatch_is_reported() {
        let p = PolyRing::new(&["a"]).var("a");
        let q = PolyRing::new(&["b"]).var("b");
        assert_eq!(p.try_add(&q), Err(PolyError::UniverseMismatch));
        assert_eq!(p.try_mul(&q), Err(PolyError::UniverseMismatch));
        // structurally equal universes are compatible
        let p2 = PolyRing::new(&["a"]).var("a");
        assert!(p.try_add(&p2).is_ok());
    }

    #[test]
    fn evaluation_basics() {
        let k = make_field(1).unwrap();
        let r = ring();
        let a = r.var("a");
        let p = &a * &a.theta();
        let two = k.element(2).unwrap();
        let env = HashMap::from([("a", two)]);
        assert_eq!(p.eval(&env, &k).unwrap(), FieldElement::ONE);
        assert_eq!(
            r.zero().eval(&HashMap::new(), &k).unwrap(),
            FieldElement::ZERO
        );
        assert_eq!(
            p.eval(&HashMap::new(), &k),
            Err(PolyError::MissingAssignment("a".into()))
        );
    }

    #[test]
    fn evaluation_is_exhaustively_a_homomorphism_over_gf3() {
        let k = make_field(1).unwrap();
        let r = ring();
        let (a, b) = (r.var("a"), r.var("b"));
        let p = &(&a * &b.theta()) + &r.int(2);
        let q = &(&a.theta() * &a) - &b;
        for x in k.elements() {
            for y in k.elements() {
                let env = HashMap::from([("a", x), ("b", y)]);
                let (pv, qv) = (p.eval(&env, &k).unwrap(), q.eval(&env, &k).unwrap());
                assert_eq!((&p + &q).eval(&env, &k).unwrap(), k.add(pv, qv));
                assert_eq!((&p * &q).eval(&env, &k).unwrap(), k.mul(pv, qv));
                assert_eq!(p.theta().eval(&env, &k).unwrap(), k.theta(pv));
            }
        }
    }

    #[test]
    fn display_is_stable() {
        let r = ring();
        let p = &(&r.int(2) * &r.pow(&r.var_theta("a"), 2)) + &r.var("b");
        assert_eq!(p.to_string(), p.clone().to_string());
        assert!(p.to_string().contains("2*(a^theta)^2"));
        assert_eq!(r.zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn additive_inverse_cancels(p in arb_poly(ring())) {
            prop_assert!(p.try_add(&p.neg()).unwrap().is_zero());
        }

        #[test]
        fn theta_is_an_endomorphism(p in arb_poly(ring()), q in arb_poly(ring())) {
            prop_assert_eq!((&p + &q).theta(), &p.theta() + &q.theta());
            prop_assert_eq!((&p * &q).theta(), &p.theta() * &q.theta());
            let r = ring();
            prop_assert_eq!(p.theta().theta(), r.pow(&p, 3));
        }

        #[test]
        fn evaluation_commutes_with_theta(p in arb_poly(ring()), x in 0u32..27, y in 0u32..27) {
            let k = make_field(3).unwrap();
            let env = HashMap::from([("a", k.element(x).unwrap()), ("b", k.element(y).unwrap())]);
            prop_assert_eq!(p.theta().eval(&env, &k).unwrap(), k.theta(p.eval(&env, &k).unwrap()));
        }
    }
}
