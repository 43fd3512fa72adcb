//! Runtime checks of the field and polynomial layers, so a report certifies
//! the arithmetic it was computed with.

use std::collections::HashMap;

use rand::Rng;
use serde_json::json;

use crate::field::{is_irreducible, FieldContext, FieldElement, ThetaRing};
use crate::report::Outcome;
use crate::sampling::Sampling;
use crate::twisted::{PolyRing, TwistedPoly};

/// Pairs to scan: all of them up to `q = 27`, seeded samples beyond.
fn pairs(f: &FieldContext, sampling: &Sampling, stream: &str) -> Vec<(FieldElement, FieldElement)> {
    if f.order() <= 27 {
        f.elements()
            .flat_map(|x| f.elements().map(move |y| (x, y)))
            .collect()
    } else {
        let mut rng = sampling.rng(stream);
        (0..sampling.samples)
            .map(|_| {
                (
                    f.element(rng.gen_range(0..f.order())).unwrap(),
                    f.element(rng.gen_range(0..f.order())).unwrap(),
                )
            })
            .collect()
    }
}

fn first_failure<T>(
    scanned: u64,
    items: impl IntoIterator<Item = T>,
    test: impl Fn(&T) -> Option<(&'static str, serde_json::Value)>,
) -> Outcome {
    for item in items {
        if let Some((msg, witness)) = test(&item) {
            return Outcome::fail(scanned, msg, witness);
        }
    }
    Outcome::pass(scanned)
}

/// The modulus is irreducible and `θ = x ↦ x^(3^((m+1)/2))`.
pub fn field_modulus(f: &FieldContext) -> Outcome {
    let m = f.degree();
    if !is_irreducible(f.modulus()) {
        return Outcome::fail(1, "modulus is reducible", json!(f.modulus()));
    }
    if f.theta_exponent() != 3u32.pow(m.div_ceil(2)) {
        return Outcome::fail(
            1,
            "theta exponent is not 3^((m+1)/2)",
            json!(f.theta_exponent()),
        );
    }
    Outcome::pass(1)
}

/// `θ(θ(x)) = x³` for every `x`; `θ` is additive and multiplicative.
pub fn field_theta(f: &FieldContext, sampling: &Sampling) -> Outcome {
    let squares = first_failure(f.order() as u64, f.elements(), |&x| {
        (f.theta(f.theta(x)) != f.cube(x)).then(|| ("theta(theta(x)) != x^3", json!(f.coeffs(x))))
    });
    let ps = pairs(f, sampling, "field.theta");
    let hom = first_failure(ps.len() as u64, ps, |&(x, y)| {
        if f.theta(f.add(x, y)) != f.add(f.theta(x), f.theta(y)) {
            Some(("theta is not additive", json!([f.coeffs(x), f.coeffs(y)])))
        } else if f.theta(f.mul(x, y)) != f.mul(f.theta(x), f.theta(y)) {
            Some((
                "theta is not multiplicative",
                json!([f.coeffs(x), f.coeffs(y)]),
            ))
        } else {
            None
        }
    });
    Outcome::merge([squares, hom])
}

/// Table multiplication against schoolbook reduction, inverses by two
/// routes, and `3x = 0`.
pub fn field_arithmetic(f: &FieldContext, sampling: &Sampling) -> Outcome {
    let ps = pairs(f, sampling, "field.arith");
    let mul = first_failure(ps.len() as u64, ps, |&(x, y)| {
        (f.mul(x, y) != f.mul_reference(x, y)).then(|| {
            (
                "table product differs from reduction",
                json!([f.coeffs(x), f.coeffs(y)]),
            )
        })
    });
    if f.inv(FieldElement::ZERO).is_ok() {
        return Outcome::fail(1, "inverse of zero did not fail", json!(null));
    }
    let q = f.order() as u64;
    let inv = first_failure(q, f.elements(), |&x| {
        if f.add(f.add(x, x), x) != FieldElement::ZERO {
            return Some(("x + x + x != 0", json!(f.coeffs(x))));
        }
        if x.is_zero() {
            return None;
        }
        let i = f.inv(x).ok()?;
        (f.mul(x, i) != FieldElement::ONE || f.pow(x, q - 2) != i)
            .then(|| ("inverse check fails", json!(f.coeffs(x))))
    });
    Outcome::merge([mul, inv])
}

/// `x ↦ x^(2+θ)` and `x ↦ x^(2-θ)` are inverse on `K*`, and cubing is a
/// bijection.
pub fn field_exponents(f: &FieldContext) -> Outcome {
    let plus = f.theta_linear_exponent(2, 1);
    let minus = f.theta_linear_exponent(2, -1);
    let inverse = first_failure(f.order() as u64 - 1, f.nonzero_elements(), |&x| {
        (f.pow(f.pow(x, plus), minus) != x)
            .then(|| ("(x^(2+theta))^(2-theta) != x", json!(f.coeffs(x))))
    });
    let mut seen = vec![false; f.order() as usize];
    for x in f.elements() {
        seen[f.cube(x).index() as usize] = true;
    }
    let frob = match seen.iter().position(|s| !s) {
        None => Outcome::pass(f.order() as u64),
        Some(i) => Outcome::fail(f.order() as u64, "cubing is not onto", json!(i)),
    };
    Outcome::merge([inverse, frob])
}

/// A seeded random polynomial in `a, b, a^θ, b^θ`.
fn random_poly(r: &PolyRing, rng: &mut impl Rng) -> TwistedPoly {
    let mut p = r.zero();
    for _ in 0..rng.gen_range(0..6) {
        let mut t = r.int(rng.gen_range(1..3));
        for s in ["a", "b"] {
            t = r.mul(&t, &r.pow(&r.var(s), rng.gen_range(0..3)));
            t = r.mul(&t, &r.pow(&r.var_theta(s), rng.gen_range(0..3)));
        }
        p = r.add(&p, &t);
    }
    p
}

/// Canonical cancellation, the endomorphism laws of `θ`, and evaluation as
/// a homomorphism commuting with `θ`, on seeded random polynomials.
pub fn poly_laws(f: &FieldContext, sampling: &Sampling) -> Outcome {
    let r = PolyRing::new(&["a", "b"]);
    let mut rng = sampling.rng("poly.laws");
    let n = sampling.samples.min(500);
    for _ in 0..n {
        let (p, q) = (random_poly(&r, &mut rng), random_poly(&r, &mut rng));
        let env = HashMap::from([
            ("a", f.element(rng.gen_range(0..f.order())).unwrap()),
            ("b", f.element(rng.gen_range(0..f.order())).unwrap()),
        ]);
        let ev = |x: &TwistedPoly| x.eval(&env, f).expect("every symbol is assigned");
        let (pv, qv) = (ev(&p), ev(&q));
        let failure = if !r.add(&p, &r.neg(&p)).is_zero() {
            Some("p + (-p) is not zero")
        } else if r.theta(&r.add(&p, &q)) != r.add(&r.theta(&p), &r.theta(&q)) {
            Some("theta is not additive")
        } else if r.theta(&r.mul(&p, &q)) != r.mul(&r.theta(&p), &r.theta(&q)) {
            Some("theta is not multiplicative")
        } else if r.theta(&r.theta(&p)) != r.pow(&p, 3) {
            Some("theta(theta(p)) != p^3")
        } else if ev(&r.add(&p, &q)) != f.add(pv, qv) || ev(&r.mul(&p, &q)) != f.mul(pv, qv) {
            Some("evaluation is not a ring homomorphism")
        } else if ev(&r.theta(&p)) != f.theta(pv) {
            Some("evaluation does not commute with theta")
        } else {
            None
        };
        if let Some(msg) = failure {
            return Outcome::fail(n, msg, json!({ "p": p.to_string(), "q": q.to_string() }));
        }
    }
    Outcome::pass(n)
}
