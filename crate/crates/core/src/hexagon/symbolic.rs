//! Identities of `U₊` certified as zero polynomials, run through the same
//! collection engine as the numeric code.

use super::uplus::{self, UPlus};
use crate::field::ThetaRing;
use crate::group::symbolic::expect_zero;
use crate::group::{ReeLaw, Triple};
use crate::report::Outcome;
use crate::twisted::{PolyRing, TwistedPoly};

fn tuple_diff(
    name: &str,
    r: &PolyRing,
    lhs: &UPlus<TwistedPoly>,
    rhs: &UPlus<TwistedPoly>,
) -> Vec<(String, TwistedPoly)> {
    (0..6)
        .map(|k| (format!("{name}.x{}", k + 1), r.sub(&lhs[k], &rhs[k])))
        .collect()
}

/// `(x_j(t) x_i(s))⁻¹ (x_i(s) x_j(t))` equals the tabulated commutator for
/// every pair `i < j`.
pub fn collection_commutators() -> Outcome {
    let r = PolyRing::new(&["s", "t"]);
    let (s, t) = (r.var("s"), r.var("t"));
    let mut comps = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let a = uplus::root(&r, i, s.clone());
            let b = uplus::root(&r, j, t.clone());
            let lhs = uplus::mul(
                &r,
                &uplus::inv(&r, &uplus::mul(&r, &b, &a)),
                &uplus::mul(&r, &a, &b),
            );
            comps.extend(tuple_diff(
                &format!("[x{}(s),x{}(t)]", i + 1, j + 1),
                &r,
                &lhs,
                &uplus::commutator_values(&r, i, j, &s, &t),
            ));
        }
    }
    expect_zero(comps)
}

/// The torus lift `x_i(s) ↦ x_i(t^(e_i) s)` maps every commutator relation
/// to a relation.
pub fn torus_lift_relations() -> Outcome {
    let r = PolyRing::new(&["t", "s", "u"]);
    let (t, s, u) = (r.var("t"), r.var("s"), r.var("u"));
    let mut comps = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let scale = |k: usize, x: &TwistedPoly| {
                let (c0, c1) = uplus::TORUS_EXPONENTS[k];
                r.mul(&r.pow_theta_linear(&t, c0, c1), x)
            };
            let lhs = uplus::lift_torus(&r, &t, &uplus::commutator_values(&r, i, j, &s, &u));
            let rhs = uplus::commutator_values(&r, i, j, &scale(i, &s), &scale(j, &u));
            comps.extend(tuple_diff(
                &format!("lift[x{}(s),x{}(u)]", i + 1, j + 1),
                &r,
                &lhs,
                &rhs,
            ));
        }
    }
    expect_zero(comps)
}

/// `φ(h_t(g)) = lift_t(φ(g))`.
pub fn phi_intertwines_torus(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["t", "a", "b", "c"]);
    let t = r.var("t");
    let g = Triple::new(r.var("a"), r.var("b"), r.var("c"));
    let lhs = uplus::phi(&r, &law.torus(&r, &t, &g));
    let rhs = uplus::lift_torus(&r, &t, &uplus::phi(&r, &g));
    expect_zero(tuple_diff("phi(h_t g) - lift(phi g)", &r, &lhs, &rhs))
}

/// `φ(gh) = φ(g)φ(h)`, the right side collected in `U₊`.
///
/// Under the commutator relations as stated this does not hold: the `x₂`
/// coordinates differ by `a^θ x - a x^θ`. See [`phi_reverses_products`].
pub fn phi_homomorphism(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c", "x", "y", "z"]);
    let g = Triple::new(r.var("a"), r.var("b"), r.var("c"));
    let h = Triple::new(r.var("x"), r.var("y"), r.var("z"));
    let lhs = uplus::phi(&r, &law.mul(&r, &g, &h));
    let rhs = uplus::mul(&r, &uplus::phi(&r, &g), &uplus::phi(&r, &h));
    expect_zero(tuple_diff("phi(gh) - phi(g)phi(h)", &r, &lhs, &rhs))
}

/// `φ(hg) = φ(g)φ(h)`: `φ` is an anti-homomorphism, so `g ↦ φ(g⁻¹)` is a
/// homomorphism with the same image.
pub fn phi_reverses_products(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c", "x", "y", "z"]);
    let g = Triple::new(r.var("a"), r.var("b"), r.var("c"));
    let h = Triple::new(r.var("x"), r.var("y"), r.var("z"));
    let lhs = uplus::phi(&r, &law.mul(&r, &h, &g));
    let rhs = uplus::mul(&r, &uplus::phi(&r, &g), &uplus::phi(&r, &h));
    expect_zero(tuple_diff("phi(hg) - phi(g)phi(h)", &r, &lhs, &rhs))
}

/// `ρ(φ(g)) = φ(g)`.
pub fn phi_image_is_rho_fixed() -> Outcome {
    let r = PolyRing::new(&["a", "b", "c"]);
    let g = Triple::new(r.var("a"), r.var("b"), r.var("c"));
    let p = uplus::phi(&r, &g);
    expect_zero(tuple_diff(
        "rho(phi g) - phi g",
        &r,
        &uplus::rho(&r, &p),
        &p,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FormulaSite;

    #[test]
    fn standard_identities_vanish() {
        let law = ReeLaw::standard();
        for (name, o) in [
            ("collection", collection_commutators()),
            ("lift", torus_lift_relations()),
            ("phi_torus", phi_intertwines_torus(&law)),
            ("phi_rev", phi_reverses_products(&law)),
            ("phi_rho", phi_image_is_rho_fixed()),
        ] {
            assert!(o.is_pass(), "{name}: {:?}", o.failure);
        }
    }

    #[test]
    fn phi_does_not_preserve_product_order() {
        let o = phi_homomorphism(&ReeLaw::standard());
        let w = o
            .failure
            .expect("order-preserving form should fail")
            .witness;
        assert_eq!(w["component"], "phi(gh) - phi(g)phi(h).x2");
        assert_eq!(w["residual"], "a^theta*x + 2*a*x^theta");
    }

    #[test]
    fn perturbed_product_breaks_phi() {
        for site in FormulaSite::all() {
            if matches!(
                site,
                FormulaSite::ProductA(_) | FormulaSite::ProductB(_) | FormulaSite::ProductC(_)
            ) {
                assert!(
                    !phi_reverses_products(&ReeLaw::perturbed(site)).is_pass(),
                    "{site}"
                );
            }
        }
    }
}
