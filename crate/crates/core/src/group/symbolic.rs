//! Identities of `U` certified as zero polynomials.
//!
//! Every check builds both sides over a [`PolyRing`] with formal symbols and
//! expands their difference. A nonzero residual is reported verbatim.

use serde_json::json;

use super::law::{ReeLaw, Triple};
use crate::field::ThetaRing;
use crate::report::Outcome;
use crate::twisted::{PolyRing, TwistedPoly};

const RESIDUAL_PREVIEW: usize = 400;

/// Pass iff every named difference is the zero polynomial.
pub fn expect_zero(components: Vec<(String, TwistedPoly)>) -> Outcome {
    let n = components.len() as u64;
    for (name, p) in components {
        if !p.is_zero() {
            let mut text = p.to_string();
            if text.len() > RESIDUAL_PREVIEW {
                text.truncate(RESIDUAL_PREVIEW);
                text.push_str(" ...");
            }
            return Outcome::fail(
                n,
                format!("{name} does not vanish ({} terms)", p.num_terms()),
                json!({ "component": name, "residual": text }),
            );
        }
    }
    Outcome::pass(n)
}

pub fn triple_diff(
    name: &str,
    r: &PolyRing,
    lhs: &Triple<TwistedPoly>,
    rhs: &Triple<TwistedPoly>,
) -> Vec<(String, TwistedPoly)> {
    ["a", "b", "c"]
        .iter()
        .zip(lhs.as_array().into_iter().zip(rhs.as_array()))
        .map(|(coord, (x, y))| (format!("{name}.{coord}"), r.sub(x, y)))
        .collect()
}

fn sym_triple(r: &PolyRing, a: &str, b: &str, c: &str) -> Triple<TwistedPoly> {
    Triple::new(r.var(a), r.var(b), r.var(c))
}

pub fn associativity(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c", "x", "y", "z", "d", "e", "f"]);
    let g = sym_triple(&r, "a", "b", "c");
    let h = sym_triple(&r, "x", "y", "z");
    let k = sym_triple(&r, "d", "e", "f");
    let left = law.mul(&r, &law.mul(&r, &g, &h), &k);
    let right = law.mul(&r, &g, &law.mul(&r, &h, &k));
    expect_zero(triple_diff("(gh)k - g(hk)", &r, &left, &right))
}

pub fn inverse(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c"]);
    let g = sym_triple(&r, "a", "b", "c");
    let zero = Triple::new(r.zero(), r.zero(), r.zero());
    let gi = law.inv(&r, &g);
    let mut comps = triple_diff("g*g^-1", &r, &law.mul(&r, &g, &gi), &zero);
    comps.extend(triple_diff("g^-1*g", &r, &law.mul(&r, &gi, &g), &zero));
    expect_zero(comps)
}

/// `h_t` respects products and `h_t h_s = h_(ts)`.
pub fn torus_automorphism(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["t", "s", "a", "b", "c", "x", "y", "z"]);
    let (t, s) = (r.var("t"), r.var("s"));
    let g = sym_triple(&r, "a", "b", "c");
    let h = sym_triple(&r, "x", "y", "z");
    let lhs = law.mul(&r, &law.torus(&r, &t, &g), &law.torus(&r, &t, &h));
    let rhs = law.torus(&r, &t, &law.mul(&r, &g, &h));
    let mut comps = triple_diff("h_t(g)h_t(h) - h_t(gh)", &r, &lhs, &rhs);
    let composed = law.torus(&r, &s, &law.torus(&r, &t, &g));
    let direct = law.torus(&r, &r.mul(&t, &s), &g);
    comps.extend(triple_diff("h_s(h_t(g)) - h_ts(g)", &r, &composed, &direct));
    expect_zero(comps)
}

/// `w = a v + b u + c^2`.
pub fn curious_identity(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c"]);
    let g = sym_triple(&r, "a", "b", "c");
    let aux = law.aux(&r, &g);
    let rhs = r.sum([r.mul(&g.a, &aux.v), r.mul(&g.b, &aux.u), r.mul(&g.c, &g.c)]);
    expect_zero(vec![("w - (av + bu + c^2)".into(), r.sub(&aux.w, &rhs))])
}

/// `N(Omega(g)) = N(g)^(2 theta + 3)`.
pub fn norm_of_omega_big(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c"]);
    let g = sym_triple(&r, "a", "b", "c");
    let lhs = law.norm(&r, &law.omega_big(&r, &g));
    let rhs = r.pow_theta_linear(&law.norm(&r, &g), 3, 2);
    expect_zero(vec![(
        "N(Omega(g)) - N(g)^(2theta+3)".into(),
        r.sub(&lhs, &rhs),
    )])
}

/// Homogeneity of `N`, `v` and `u` under `h_t`.
pub fn torus_degrees(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["t", "a", "b", "c"]);
    let t = r.var("t");
    let g = sym_triple(&r, "a", "b", "c");
    let tg = law.torus(&r, &t, &g);
    let (aux, taux) = (law.aux(&r, &g), law.aux(&r, &tg));
    expect_zero(vec![
        (
            "N(t.g) - t^(2theta+4) N(g)".into(),
            r.sub(&taux.w, &r.mul(&r.pow_theta_linear(&t, 4, 2), &aux.w)),
        ),
        (
            "v(t.g) - t^(2theta+3) v(g)".into(),
            r.sub(&taux.v, &r.mul(&r.pow_theta_linear(&t, 3, 2), &aux.v)),
        ),
        (
            "u(t.g) - t^(theta+3) u(g)".into(),
            r.sub(&taux.u, &r.mul(&r.pow_theta_linear(&t, 3, 1), &aux.u)),
        ),
    ])
}

/// `N(g^-1) = N(g)`.
pub fn norm_of_inverse(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["a", "b", "c"]);
    let g = sym_triple(&r, "a", "b", "c");
    let lhs = law.norm(&r, &law.inv(&r, &g));
    expect_zero(vec![(
        "N(g^-1) - N(g)".into(),
        r.sub(&lhs, &law.norm(&r, &g)),
    )])
}

/// `[h_t, g] = h_t(g^-1) g` on the three coordinate subgroups.
pub fn torus_commutators(law: &ReeLaw) -> Outcome {
    let r = PolyRing::new(&["t", "a", "b", "c"]);
    let (t, a, b, c) = (r.var("t"), r.var("a"), r.var("b"), r.var("c"));
    let z = r.zero();
    let comm = |g: Triple<TwistedPoly>| law.mul(&r, &law.torus(&r, &t, &law.inv(&r, &g)), &g);
    let one = r.one();

    let lhs_a = comm(Triple::new(a.clone(), z.clone(), z.clone()));
    let rhs_a = Triple::new(
        r.mul(&r.sub(&one, &t), &a),
        r.mul(
            &r.mul(&r.sub(&t, &one), &r.theta(&t)),
            &r.pow_theta_linear(&a, 1, 1),
        ),
        z.clone(),
    );
    let lhs_b = comm(Triple::new(z.clone(), b.clone(), z.clone()));
    let rhs_b = Triple::new(
        z.clone(),
        r.mul(&r.sub(&one, &r.pow_theta_linear(&t, 1, 1)), &b),
        z.clone(),
    );
    let lhs_c = comm(Triple::new(z.clone(), z.clone(), c.clone()));
    let rhs_c = Triple::new(
        z.clone(),
        z.clone(),
        r.mul(&r.sub(&one, &r.pow_theta_linear(&t, 2, 1)), &c),
    );

    let mut comps = triple_diff("[h_t,(a,0,0)]", &r, &lhs_a, &rhs_a);
    comps.extend(triple_diff("[h_t,(0,b,0)]", &r, &lhs_b, &rhs_b));
    comps.extend(triple_diff("[h_t,(0,0,c)]", &r, &lhs_c, &rhs_c));
    expect_zero(comps)
}
