//! The group `U₊ = U₁U₂⋯U₆` in normal form, by collection.
//!
//! An element is the tuple `(t₁, …, t₆)` standing for `x₁(t₁)x₂(t₂)⋯x₆(t₆)`.
//! Positions are zero-based in code: slot `k` holds the `x_{k+1}` coordinate.
//! Everything is generic over [`ThetaRing`], so the same engine runs on
//! field elements and on twisted polynomials.

use crate::field::ThetaRing;
use crate::group::Triple;

pub type UPlus<T> = [T; 6];

pub fn identity<R: ThetaRing>(r: &R) -> UPlus<R::Elem> {
    std::array::from_fn(|_| r.zero())
}

/// `x_{k+1}(s)` as a tuple.
pub fn root<R: ThetaRing>(r: &R, k: usize, s: R::Elem) -> UPlus<R::Elem> {
    let mut g = identity(r);
    g[k] = s;
    g
}

/// The factors of `[x_{i+1}(s), x_{j+1}(t)]` for `i < j`, in increasing
/// position. Only three pairs have nontrivial commutators.
pub fn commutator_factors<R: ThetaRing>(
    r: &R,
    i: usize,
    j: usize,
    s: &R::Elem,
    t: &R::Elem,
) -> Vec<(usize, R::Elem)> {
    debug_assert!(i < j && j < 6);
    match (i, j) {
        (0, 4) => vec![(2, r.neg(&r.mul(s, t)))],
        (1, 5) => vec![(3, r.mul(s, t))],
        (0, 5) => {
            let (st, tt) = (r.theta(s), r.theta(t));
            vec![
                (1, r.neg(&r.mul(&st, t))),
                (2, r.neg(&r.mul(&r.mul(s, s), &tt))),
                (3, r.mul(&st, &r.mul(t, t))),
                (4, r.mul(s, &tt)),
            ]
        }
        _ => Vec::new(),
    }
}

/// `[x_{i+1}(s), x_{j+1}(t)]` as a tuple.
pub fn commutator_values<R: ThetaRing>(
    r: &R,
    i: usize,
    j: usize,
    s: &R::Elem,
    t: &R::Elem,
) -> UPlus<R::Elem> {
    let mut g = identity(r);
    for (k, x) in commutator_factors(r, i, j, s, t) {
        g[k] = x;
    }
    g
}

/// Right-multiply the normal form `n` by `x_{k+1}(s)`.
///
/// The tail `x_{k+2}(…)⋯x₆(…)` is lifted off, `s` is absorbed at slot `k`,
/// and each tail factor is pushed back conjugated by `x_{k+1}(s)`:
/// `x_j(n)^{x_k(s)} = x_j(n)[x_j(n), x_k(s)]`. Commutator values lie in the
/// abelian group `U₂⋯U₅`, so inverting one negates each factor.
pub fn push<R: ThetaRing>(r: &R, n: &mut UPlus<R::Elem>, k: usize, s: R::Elem) {
    if r.is_zero(&s) {
        return;
    }
    let mut tail = Vec::new();
    for j in k + 1..6 {
        if !r.is_zero(&n[j]) {
            tail.push((j, std::mem::replace(&mut n[j], r.zero())));
        }
    }
    n[k] = r.add(&n[k], &s);
    for (j, x) in tail {
        let factors = commutator_factors(r, k, j, &s, &x);
        push(r, n, j, x);
        for (l, y) in factors {
            push(r, n, l, r.neg(&y));
        }
    }
}

pub fn mul<R: ThetaRing>(r: &R, g: &UPlus<R::Elem>, h: &UPlus<R::Elem>) -> UPlus<R::Elem> {
    let mut n = g.clone();
    for (k, x) in h.iter().enumerate() {
        push(r, &mut n, k, x.clone());
    }
    n
}

/// `x₆(-t₆)x₅(-t₅)⋯x₁(-t₁)`, collected.
pub fn inv<R: ThetaRing>(r: &R, g: &UPlus<R::Elem>) -> UPlus<R::Elem> {
    let mut n = identity(r);
    for k in (0..6).rev() {
        push(r, &mut n, k, r.neg(&g[k]));
    }
    n
}

/// The automorphism `x_i(t) ↦ x_{7-i}(t)`.
pub fn rho<R: ThetaRing>(r: &R, g: &UPlus<R::Elem>) -> UPlus<R::Elem> {
    let mut n = identity(r);
    for k in 0..6 {
        push(r, &mut n, 5 - k, g[k].clone());
    }
    n
}

/// `φ(a,b,c) = x₁(a)x₂(b)x₃(c-ab+a^(θ+2))x₄(c+ab)x₅(b-a^(θ+1))x₆(a)`.
pub fn phi<R: ThetaRing>(r: &R, g: &Triple<R::Elem>) -> UPlus<R::Elem> {
    let ab = r.mul(&g.a, &g.b);
    [
        g.a.clone(),
        g.b.clone(),
        r.add(&r.sub(&g.c, &ab), &r.pow_theta_linear(&g.a, 2, 1)),
        r.add(&g.c, &ab),
        r.sub(&g.b, &r.pow_theta_linear(&g.a, 1, 1)),
        g.a.clone(),
    ]
}

/// Exponents `(c0, c1)` of `t^(c1 θ + c0)` scaling each root group under the
/// torus: `(1, θ+1, θ+2, θ+2, θ+1, 1)`.
pub const TORUS_EXPONENTS: [(u32, u32); 6] = [(1, 0), (1, 1), (2, 1), (2, 1), (1, 1), (1, 0)];

/// The lift of `h_t` to `U₊`: `x_i(s) ↦ x_i(t^(e_i) s)`.
pub fn lift_torus<R: ThetaRing>(r: &R, t: &R::Elem, g: &UPlus<R::Elem>) -> UPlus<R::Elem> {
    std::array::from_fn(|k| {
        let (c0, c1) = TORUS_EXPONENTS[k];
        r.mul(&r.pow_theta_linear(t, c0, c1), &g[k])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, FieldContext, FieldElement};
    use crate::group::ReeGroup;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn fe(f: &FieldContext, k: u32) -> FieldElement {
        f.element(k).unwrap()
    }

    #[test]
    fn commutator_table_over_gf3() {
        let f = make_field(1).unwrap();
        let one = FieldElement::ONE;
        let two = fe(&f, 2);
        let z = FieldElement::ZERO;
        assert_eq!(
            commutator_values(&f, 0, 4, &one, &one),
            [z, z, two, z, z, z]
        );
        assert_eq!(commutator_values(&f, 1, 2, &one, &one), identity(&f));
        assert_eq!(
            commutator_values(&f, 0, 5, &one, &one),
            [z, two, two, one, one, z]
        );
    }

    #[test]
    fn collection_reproduces_commutators() {
        // [a, b] = (ba)^-1 (ab)
        let f = make_field(1).unwrap();
        for i in 0..6 {
            for j in i + 1..6 {
                for s in f.elements() {
                    for t in f.elements() {
                        let a = root(&f, i, s);
                        let b = root(&f, j, t);
                        let c = mul(&f, &inv(&f, &mul(&f, &b, &a)), &mul(&f, &a, &b));
                        assert_eq!(c, commutator_values(&f, i, j, &s, &t), "i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn phi_of_generator() {
        let f = make_field(1).unwrap();
        let g = Triple::new(FieldElement::ONE, FieldElement::ZERO, FieldElement::ZERO);
        let one = FieldElement::ONE;
        let z = FieldElement::ZERO;
        assert_eq!(phi(&f, &g), [one, z, one, z, fe(&f, 2), one]);
    }

    #[test]
    fn rho_and_inverse_basics() {
        let f = make_field(1).unwrap();
        assert_eq!(
            rho(&f, &root(&f, 0, FieldElement::ONE)),
            root(&f, 5, FieldElement::ONE)
        );
        assert_eq!(inv(&f, &identity(&f)), identity(&f));
        assert_eq!(
            inv(&f, &root(&f, 2, FieldElement::ONE)),
            root(&f, 2, fe(&f, 2))
        );
    }

    #[test]
    fn phi_reverses_products_over_gf3() {
        let group = ReeGroup::new(Arc::new(make_field(1).unwrap()));
        let f = group.field();
        let mut images = std::collections::HashSet::new();
        let mut order_kept = true;
        for g in group.elements() {
            assert!(images.insert(phi(f, &g)));
            assert_eq!(rho(f, &phi(f, &g)), phi(f, &g));
            for h in group.elements() {
                let collected = mul(f, &phi(f, &g), &phi(f, &h));
                assert_eq!(phi(f, &group.u_mul(&h, &g)), collected);
                order_kept &= phi(f, &group.u_mul(&g, &h)) == collected;
            }
        }
        // U is not abelian, so the reversed order is really different
        assert!(!order_kept);
    }

    fn gf27_tuple() -> impl Strategy<Value = [u32; 6]> {
        prop::array::uniform6(0u32..27)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn group_axioms_over_gf27(a in gf27_tuple(), b in gf27_tuple(), c in gf27_tuple()) {
            let f = make_field(3).unwrap();
            let t = |x: [u32; 6]| x.map(|k| fe(&f, k));
            let (g, h, k) = (t(a), t(b), t(c));
            prop_assert_eq!(mul(&f, &mul(&f, &g, &h), &k), mul(&f, &g, &mul(&f, &h, &k)));
            prop_assert_eq!(mul(&f, &g, &inv(&f, &g)), identity(&f));
            prop_assert_eq!(mul(&f, &inv(&f, &g), &g), identity(&f));
            prop_assert_eq!(rho(&f, &rho(&f, &g)), g);
            prop_assert_eq!(rho(&f, &mul(&f, &g, &h)), mul(&f, &rho(&f, &g), &rho(&f, &h)));
        }
    }
}
