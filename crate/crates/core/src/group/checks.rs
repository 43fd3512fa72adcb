//! Numeric scans over `U` and `X` for a concrete field.

use rayon::prelude::*;
use serde_json::json;

use super::{MoufangPoint, ReeGroup, TorusElement, Triple, UTriple};
use crate::field::FieldElement;
use crate::report::Outcome;
use crate::sampling::Sampling;

/// Largest `q` for which the suite enumerates all of `U` by default.
pub const EXHAUSTIVE_LIMIT: u32 = 27;

/// `N(g) = 0` only at `g = 0`, over every triple.
pub fn anisotropy(group: &ReeGroup) -> Outcome {
    let n = group.order() as u32;
    if !group.norm(&group.identity()).is_zero() {
        return Outcome::fail(1, "N(0) is not zero", group.witness(&group.identity()));
    }
    let root = (1..n)
        .into_par_iter()
        .by_uniform_blocks(4096)
        .find_first(|&i| group.norm(&group.triple_at(i)).is_zero());
    match root {
        None => Outcome::pass(n as u64),
        Some(i) => {
            let g = group.triple_at(i);
            Outcome::fail(
                i as u64 + 1,
                "nonzero triple with vanishing norm",
                group.witness(&g),
            )
        }
    }
}

/// Elements to scan: all of `U` when small, otherwise a seeded sample.
fn scan_set(group: &ReeGroup, sampling: &Sampling, stream: &str) -> Vec<UTriple> {
    if group.field().order() <= EXHAUSTIVE_LIMIT {
        group.elements().collect()
    } else {
        sampling
            .indices(stream, group.order() as u64)
            .into_iter()
            .map(|i| group.triple_at(i as u32))
            .collect()
    }
}

fn sample_triples(
    group: &ReeGroup,
    sampling: &Sampling,
    stream: &str,
    k: usize,
) -> Vec<Vec<UTriple>> {
    let idx = Sampling {
        samples: sampling.samples * k as u64,
        ..*sampling
    }
    .indices(stream, group.order() as u64);
    idx.chunks(k)
        .map(|c| c.iter().map(|&i| group.triple_at(i as u32)).collect())
        .collect()
}

/// `(gh)k = g(hk)`: all triples of triples at `q = 3`, sampled otherwise.
pub fn associativity(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let cases: Vec<Vec<UTriple>> = if group.field().order() == 3 {
        let all: Vec<UTriple> = group.elements().collect();
        let mut v = Vec::with_capacity(all.len().pow(3));
        for g in &all {
            for h in &all {
                for k in &all {
                    v.push(vec![*g, *h, *k]);
                }
            }
        }
        v
    } else {
        sample_triples(group, sampling, "group.associativity", 3)
    };
    let bad = cases.par_iter().find_first(|c| {
        let (g, h, k) = (&c[0], &c[1], &c[2]);
        group.u_mul(&group.u_mul(g, h), k) != group.u_mul(g, &group.u_mul(h, k))
    });
    match bad {
        None => Outcome::pass(cases.len() as u64),
        Some(c) => Outcome::fail(
            cases.len() as u64,
            "(gh)k != g(hk)",
            json!(c.iter().map(|g| group.witness(g)).collect::<Vec<_>>()),
        ),
    }
}

/// Identity and inverse laws.
pub fn inverses(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let set = scan_set(group, sampling, "group.inverses");
    let e = group.identity();
    let bad = set.par_iter().find_first(|g| {
        let gi = group.u_inv(g);
        group.u_mul(g, &gi) != e
            || group.u_mul(&gi, g) != e
            || group.u_inv(&gi) != **g
            || group.u_mul(g, &e) != **g
            || group.u_mul(&e, g) != **g
    });
    match bad {
        None => Outcome::pass(set.len() as u64),
        Some(g) => Outcome::fail(set.len() as u64, "inverse law fails", group.witness(g)),
    }
}

/// `w = a v + b u + c^2` and `N(Omega(g)) = N(g)^(2 theta + 3)` numerically.
pub fn norm_identities(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let f = group.field();
    let set = scan_set(group, sampling, "group.norm_identities");
    let bad = set.par_iter().find_first(|g| {
        let aux = group.aux_uvw(g);
        let rhs = f.add(f.add(f.mul(g.a, aux.v), f.mul(g.b, aux.u)), f.mul(g.c, g.c));
        aux.w != rhs || group.norm(&group.omega_big(g)) != f.pow_theta_linear(aux.w, 3, 2)
    });
    match bad {
        None => Outcome::pass(set.len() as u64),
        Some(g) => Outcome::fail(set.len() as u64, "norm identity fails", group.witness(g)),
    }
}

fn omega_twice(group: &ReeGroup, p: &MoufangPoint) -> Result<MoufangPoint, String> {
    let once = group.omega_apply(p).map_err(|e| e.to_string())?;
    group.omega_apply(&once).map_err(|e| e.to_string())
}

/// `omega^2 = 1` on `X`; exhaustive for `q <= 27`, sampled beyond.
pub fn omega_involution(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    if group.omega_apply(&MoufangPoint::Infinity) != Ok(MoufangPoint::ZERO)
        || group.omega_apply(&MoufangPoint::ZERO) != Ok(MoufangPoint::Infinity)
    {
        return Outcome::fail(2, "omega does not swap inf and 0", json!("inf"));
    }
    let set = scan_set(group, sampling, "group.omega_involution");
    let bad = set.par_iter().find_map_first(|g| {
        let p = MoufangPoint::Finite(*g);
        match omega_twice(group, &p) {
            Ok(back) if back == p => None,
            Ok(_) => Some((*g, "omega(omega(g)) != g".to_owned())),
            Err(e) => Some((*g, e)),
        }
    });
    match bad {
        None => Outcome::pass(set.len() as u64 + 1),
        Some((g, msg)) => Outcome::fail(set.len() as u64, msg, group.witness(&g)),
    }
}

/// `omega(t.g) = t^-1 . omega(g)`: all pairs at `q = 3`, sampled otherwise.
pub fn equivariance(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let f = group.field();
    let pairs: Vec<(UTriple, FieldElement)> = if f.order() == 3 {
        group
            .elements()
            .skip(1)
            .flat_map(|g| f.nonzero_elements().map(move |t| (g, t)))
            .collect()
    } else {
        let mut rng = sampling.rng("group.equivariance");
        use rand::Rng;
        (0..sampling.samples)
            .map(|_| {
                let g = group.triple_at(rng.gen_range(1..group.order() as u32));
                let t = f.element(rng.gen_range(1..f.order())).unwrap();
                (g, t)
            })
            .collect()
    };
    let bad = pairs.par_iter().find_map_first(|&(g, t)| {
        let th = TorusElement::new(t).unwrap();
        let t_inv = TorusElement::new(f.inv(t).unwrap()).unwrap();
        let lhs = group.omega_apply(&MoufangPoint::Finite(group.h_apply(th, &g)));
        let rhs = group
            .omega_apply(&MoufangPoint::Finite(g))
            .map(|p| group.torus_point(t_inv, &p));
        match (lhs, rhs) {
            (Ok(x), Ok(y)) if x == y => None,
            (Ok(_), Ok(_)) => Some((g, t, "omega(t.g) != t^-1.omega(g)".to_owned())),
            (Err(e), _) | (_, Err(e)) => Some((g, t, e.to_string())),
        }
    });
    match bad {
        None => Outcome::pass(pairs.len() as u64),
        Some((g, t, msg)) => Outcome::fail(
            pairs.len() as u64,
            msg,
            json!({ "g": group.witness(&g), "t": f.coeffs(t) }),
        ),
    }
}

/// `U` acts regularly on `X \ {∞}`: `h = g^-1 g'` solves `g h = g'`, and at
/// `q = 3` left multiplication by every `g` is injective.
pub fn regular_action(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let pairs = sample_triples(group, sampling, "group.regular_action", 2);
    let bad = pairs.par_iter().find_first(|p| {
        let h = group.u_mul(&group.u_inv(&p[0]), &p[1]);
        group.u_mul(&p[0], &h) != p[1]
    });
    if let Some(p) = bad {
        return Outcome::fail(
            pairs.len() as u64,
            "g * (g^-1 g') != g'",
            json!([group.witness(&p[0]), group.witness(&p[1])]),
        );
    }
    let mut scanned = pairs.len() as u64;
    if group.field().order() == 3 {
        let n = group.order();
        for g in group.elements() {
            let mut seen = vec![false; n];
            for h in group.elements() {
                seen[group.triple_index(&group.u_mul(&g, &h)) as usize] = true;
            }
            scanned += n as u64;
            if !seen.iter().all(|&s| s) {
                return Outcome::fail(
                    scanned,
                    "left multiplication is not a bijection",
                    group.witness(&g),
                );
            }
        }
    }
    Outcome::pass(scanned)
}

/// The norms generate all of `K*`, and `N(0,0,c) = c^2`.
pub fn norm_subgroup(group: &ReeGroup) -> Outcome {
    let f = group.field();
    for c in f.elements() {
        let g = Triple::new(FieldElement::ZERO, FieldElement::ZERO, c);
        if group.norm(&g) != f.mul(c, c) {
            return Outcome::fail(c.index() as u64, "N(0,0,c) != c^2", group.witness(&g));
        }
    }
    let member = group.norm_subgroup();
    match f.nonzero_elements().find(|x| !member[x.index() as usize]) {
        None => Outcome::pass(group.order() as u64),
        Some(x) => Outcome::fail(
            group.order() as u64,
            "element of K* outside the norm subgroup",
            json!(f.coeffs(x)),
        ),
    }
}

/// The hat and tilde quantities of the three-step computation of
/// `omega = (m1 m6)^3` on a generic point, checked against the identities
/// that link them, and the decoded image against the closed formula.
pub fn omega_derivation(group: &ReeGroup) -> Outcome {
    let set: Vec<UTriple> = group
        .elements()
        .skip(1)
        .filter(|g| !g.b.is_zero())
        .collect();
    let results: Vec<Result<u64, (UTriple, String)>> = set
        .par_iter()
        .map(|g| derivation_at(group, g).map_err(|e| (*g, e)))
        .collect();
    let mut scanned = 0;
    for r in results {
        match r {
            Ok(n) => scanned += n,
            Err((g, msg)) => return Outcome::fail(scanned, msg, group.witness(&g)),
        }
    }
    Outcome::pass(scanned)
}

/// Returns the number of identities checked at `g` (which must have `b != 0`).
fn derivation_at(group: &ReeGroup, g: &UTriple) -> Result<u64, String> {
    let f = group.field();
    let (a, b, c) = (g.a, g.b, g.c);
    let inv = |x: FieldElement, what: &str| f.inv(x).map_err(|_| format!("{what} vanishes"));
    let th = |x| f.theta(x);
    let add = |xs: &[FieldElement]| xs.iter().fold(FieldElement::ZERO, |acc, &x| f.add(acc, x));
    let mul = |xs: &[FieldElement]| xs.iter().fold(FieldElement::ONE, |acc, &x| f.mul(acc, x));
    let neg = |x| f.neg(x);
    let sq = |x| f.mul(x, x);
    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(format!("identity fails: {what}"))
        }
    };

    let aux = group.aux_uvw(g);
    let (v, u, w) = (aux.v, aux.u, aux.w);
    let bi = inv(b, "b")?;
    let bti = inv(th(b), "b^theta")?; // b^-theta
    let a_t1 = f.pow_theta_linear(a, 1, 1);
    let a_t2 = f.pow_theta_linear(a, 2, 1);
    let a_t3 = f.pow_theta_linear(a, 3, 1);
    let a_2t3 = f.pow_theta_linear(a, 3, 2);
    let a_2t4 = f.pow_theta_linear(a, 4, 2);

    // first application of m1 m6
    let v_hat = add(&[
        mul(&[bi, th(c)]),
        neg(mul(&[th(a), th(b), bi])),
        mul(&[a_2t3, bi]),
        neg(c),
        neg(mul(&[a, b])),
    ]);
    let u_hat = add(&[
        b,
        neg(a_t1),
        mul(&[bti, sq(c)]),
        mul(&[sq(a), bti, sq(b)]),
        mul(&[a_2t4, bti]),
        mul(&[a, bti, b, c]),
        neg(mul(&[a_t2, bti, c])),
        mul(&[a_t3, bti, b]),
    ]);
    let r_hat = add(&[
        mul(&[sq(bi), th(c)]),
        neg(mul(&[th(a), th(b), sq(bi)])),
        mul(&[a_2t3, sq(bi)]),
        mul(&[bi, c]),
        neg(a),
    ]);
    let s_hat = add(&[
        neg(mul(&[bti, c])),
        mul(&[a, bti, b]),
        neg(mul(&[a_t2, bti])),
    ]);
    let t_hat = bi;

    check(
        w == f.sub(mul(&[b, th(u_hat)]), mul(&[v_hat, f.sub(v_hat, c)])),
        "w = b u^theta - v(v - c)",
    )?;
    check(mul(&[b, r_hat]) == f.sub(v_hat, c), "b r = v - c")?;
    check(
        mul(&[b, th(s_hat)]) == f.sub(neg(a), mul(&[bi, f.add(v_hat, c)])),
        "b s^theta = -a - b^-1 (v + c)",
    )?;
    check(v_hat == neg(mul(&[bi, v])), "v_hat = -b^-1 v")?;
    if v.is_zero() {
        return Ok(4);
    }

    // second application
    let vhi = inv(v_hat, "v_hat")?;
    let vhti = inv(th(v_hat), "v_hat^theta")?;
    let v_tl = f.sub(mul(&[th(u_hat), vhi]), r_hat);
    let u_tl = f.add(s_hat, mul(&[sq(u_hat), vhti]));
    let r_tl = add(&[mul(&[th(u_hat), sq(vhi)]), mul(&[vhi, r_hat]), t_hat]);
    let s_tl = neg(mul(&[u_hat, vhti]));
    let t_tl = vhi;
    let vi = inv(v, "v")?;

    check(v_tl == neg(mul(&[w, vi])), "v_tilde = -w/v")?;
    check(v_tl == mul(&[bi, vhi, w]), "v_tilde = b^-1 v_hat^-1 w")?;
    check(
        mul(&[sq(b), sq(th(u_hat)), sq(vhi)])
            == add(&[
                mul(&[sq(b), sq(r_hat)]),
                neg(mul(&[b, r_hat, vhi, w])),
                mul(&[sq(vhi), sq(w)]),
            ]),
        "b^2 u^2theta v^-2 = b^2 r^2 - b r v^-1 w + v^-2 w^2",
    )?;
    check(
        r_tl == add(&[mul(&[bi, sq(vhi), w]), neg(mul(&[r_hat, vhi])), bi]),
        "r_tilde = b^-1 v^-2 w - r v^-1 + b^-1",
    )?;
    check(
        mul(&[b, r_tl, w]) == add(&[mul(&[sq(vhi), sq(w)]), neg(mul(&[b, r_hat, vhi, w])), w]),
        "b r_tilde w = v^-2 w^2 - b r v^-1 w + w",
    )?;
    check(
        mul(&[sq(b), th(s_hat), v_hat])
            == add(&[
                neg(mul(&[a, b, v_hat])),
                neg(sq(v_hat)),
                neg(mul(&[v_hat, c])),
            ]),
        "b^2 s^theta v = -a b v - v^2 - v c",
    )?;

    // third application
    let vti = inv(v_tl, "v_tilde (so w)")?;
    let vtti = inv(th(v_tl), "v_tilde^theta")?;
    let v_dd = f.sub(mul(&[th(u_tl), vti]), r_tl);
    let u_dd = f.add(s_tl, mul(&[sq(u_tl), vtti]));
    let r_dd = add(&[mul(&[th(u_tl), sq(vti)]), mul(&[vti, r_tl]), t_tl]);
    let s_dd = neg(mul(&[u_tl, vtti]));
    let t_dd = vti;

    let wi = inv(w, "w")?;
    let (p, qq) = (neg(mul(&[v, wi])), neg(mul(&[u, wi])));
    check(t_dd == p, "t'' = -v/w")?;
    check(v_dd == qq, "v'' = -u/w")?;
    check(
        r_dd == f.add(neg(mul(&[c, wi])), mul(&[p, qq])),
        "r'' = -c/w + (v/w)(u/w)",
    )?;

    // the image vertex is U1 phi(g') for g' = (t'', v'', r'' - v'' t'')
    let image = Triple::new(t_dd, v_dd, f.sub(r_dd, mul(&[v_dd, t_dd])));
    let phi3 = add(&[
        image.c,
        neg(mul(&[image.a, image.b])),
        f.pow_theta_linear(image.a, 2, 1),
    ]);
    let phi5 = f.sub(image.b, f.pow_theta_linear(image.a, 1, 1));
    check(
        u_dd == phi3 && s_dd == phi5,
        "image vertex lies on an edge of X",
    )?;
    match group.omega_apply(&MoufangPoint::Finite(*g)) {
        Ok(MoufangPoint::Finite(h)) if h == image => Ok(17),
        Ok(_) => Err("decoded image differs from the closed formula".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::make_field;
    use crate::group::{FormulaSite, ReeLaw};

    fn gf(m: u32) -> ReeGroup {
        ReeGroup::new(Arc::new(make_field(m).unwrap()))
    }

    #[test]
    fn anisotropy_small_fields() {
        assert_eq!(anisotropy(&gf(1)), Outcome::pass(27));
        assert_eq!(anisotropy(&gf(3)), Outcome::pass(19683));
    }

    #[test]
    fn scans_pass_over_gf3_and_gf27() {
        let s = Sampling {
            seed: 1,
            samples: 500,
        };
        for m in [1, 3] {
            let g = gf(m);
            for (name, o) in [
                ("assoc", associativity(&g, &s)),
                ("inv", inverses(&g, &s)),
                ("norm", norm_identities(&g, &s)),
                ("omega", omega_involution(&g, &s)),
                ("equiv", equivariance(&g, &s)),
                ("regular", regular_action(&g, &s)),
                ("subgroup", norm_subgroup(&g)),
                ("derivation", omega_derivation(&g)),
            ] {
                assert!(o.is_pass(), "m={m} {name}: {:?}", o.failure);
            }
        }
    }

    #[test]
    fn derivation_covers_the_v_zero_branch() {
        let g = gf(1);
        let f = g.field();
        let x = Triple::new(FieldElement::ZERO, FieldElement::ONE, FieldElement::ONE);
        assert!(g.aux_uvw(&x).v.is_zero());
        assert_eq!(derivation_at(&g, &x), Ok(4));
        let generic = g
            .elements()
            .filter(|h| !h.b.is_zero() && !g.aux_uvw(h).v.is_zero())
            .count();
        assert!(generic > 0 && generic <= 18);
        let _ = f;
    }

    #[test]
    fn perturbed_norm_is_caught_by_anisotropy_or_derivation() {
        for i in 0..7 {
            let g = ReeGroup::with_law(
                Arc::new(make_field(1).unwrap()),
                ReeLaw::perturbed(FormulaSite::Norm(i)),
            );
            let caught = !anisotropy(&g).is_pass() || !omega_derivation(&g).is_pass();
            assert!(caught, "norm[{i}]");
        }
    }
}
