//! The defining formulas of `U`, written once over any [`ThetaRing`].
//!
//! Each formula is a signed sum of fixed monomials. The signs live in
//! [`ReeLaw`] so that a single coefficient can be perturbed to check that the
//! verification suite notices.

use std::fmt;

use serde::Serialize;

use crate::field::ThetaRing;

/// An element `(a, b, c)` of `U` over some ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Triple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T> Triple<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Triple { a, b, c }
    }

    pub fn map<S>(self, mut f: impl FnMut(T) -> S) -> Triple<S> {
        Triple::new(f(self.a), f(self.b), f(self.c))
    }

    pub fn as_array(&self) -> [&T; 3] {
        [&self.a, &self.b, &self.c]
    }
}

/// The auxiliary values `v`, `u` and `w = N(a, b, c)` attached to a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormTriple<T> {
    pub v: T,
    pub u: T,
    pub w: T,
}

/// One coefficient of one formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "formula", content = "term", rename_all = "snake_case")]
pub enum FormulaSite {
    /// Product, first coordinate: `a + x`.
    ProductA(u8),
    /// Product, second coordinate: `b + y + a^theta x`.
    ProductB(u8),
    /// Product, third coordinate: `c + z - a y + b x - a^(theta+1) x`.
    ProductC(u8),
    /// Norm, seven terms in display order.
    Norm(u8),
    /// `v = a^theta b^theta - c^theta + a b^2 + b c - a^(2theta+3)`.
    V(u8),
    /// `u = a^2 b - a c + b^theta - a^(theta+3)`.
    U(u8),
    /// The three signs in `(-v/w, -u/w, -c/w)`.
    OmegaSign(u8),
}

impl FormulaSite {
    /// Every perturbable coefficient.
    pub fn all() -> Vec<FormulaSite> {
        let mut out = Vec::new();
        out.extend((0..2).map(FormulaSite::ProductA));
        out.extend((0..3).map(FormulaSite::ProductB));
        out.extend((0..5).map(FormulaSite::ProductC));
        out.extend((0..7).map(FormulaSite::Norm));
        out.extend((0..5).map(FormulaSite::V));
        out.extend((0..4).map(FormulaSite::U));
        out.extend((0..3).map(FormulaSite::OmegaSign));
        out
    }
}

impl fmt::Display for FormulaSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaSite::ProductA(i) => write!(f, "product.a[{i}]"),
            FormulaSite::ProductB(i) => write!(f, "product.b[{i}]"),
            FormulaSite::ProductC(i) => write!(f, "product.c[{i}]"),
            FormulaSite::Norm(i) => write!(f, "norm[{i}]"),
            FormulaSite::V(i) => write!(f, "v[{i}]"),
            FormulaSite::U(i) => write!(f, "u[{i}]"),
            FormulaSite::OmegaSign(i) => write!(f, "omega[{i}]"),
        }
    }
}

/// Signed coefficients of the group law, the norm and the involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReeLaw {
    product_a: [i8; 2],
    product_b: [i8; 3],
    product_c: [i8; 5],
    norm: [i8; 7],
    v: [i8; 5],
    u: [i8; 4],
    omega: [i8; 3],
}

impl Default for ReeLaw {
    fn default() -> Self {
        ReeLaw::standard()
    }
}

impl ReeLaw {
    pub const fn standard() -> Self {
        ReeLaw {
            product_a: [1, 1],
            product_b: [1, 1, 1],
            product_c: [1, 1, -1, 1, -1],
            norm: [-1, 1, -1, -1, 1, 1, -1],
            v: [1, -1, 1, 1, -1],
            u: [1, -1, 1, -1],
            omega: [-1, -1, -1],
        }
    }

    /// The standard law with one coefficient shifted by +1 (mod 3).
    pub fn perturbed(site: FormulaSite) -> Self {
        let mut law = ReeLaw::standard();
        let slot = match site {
            FormulaSite::ProductA(i) => &mut law.product_a[i as usize],
            FormulaSite::ProductB(i) => &mut law.product_b[i as usize],
            FormulaSite::ProductC(i) => &mut law.product_c[i as usize],
            FormulaSite::Norm(i) => &mut law.norm[i as usize],
            FormulaSite::V(i) => &mut law.v[i as usize],
            FormulaSite::U(i) => &mut law.u[i as usize],
            FormulaSite::OmegaSign(i) => &mut law.omega[i as usize],
        };
        *slot = (*slot + 1 + 3) % 3;
        law
    }

    pub fn is_standard(&self) -> bool {
        *self == ReeLaw::standard()
    }

    pub fn omega_signs(&self) -> [i8; 3] {
        self.omega
    }

    /// `(a,b,c)(x,y,z) = (a+x, b+y+a^theta x, c+z-ay+bx-a^(theta+1) x)`.
    pub fn mul<R: ThetaRing>(
        &self,
        r: &R,
        g: &Triple<R::Elem>,
        h: &Triple<R::Elem>,
    ) -> Triple<R::Elem> {
        let (a, b, c) = (&g.a, &g.b, &g.c);
        let (x, y, z) = (&h.a, &h.b, &h.c);
        let k = &self.product_a;
        let na = signed_sum(r, &[(k[0], a.clone()), (k[1], x.clone())]);
        let k = &self.product_b;
        let nb = signed_sum(
            r,
            &[
                (k[0], b.clone()),
                (k[1], y.clone()),
                (k[2], r.mul(&r.theta(a), x)),
            ],
        );
        let k = &self.product_c;
        let nc = signed_sum(
            r,
            &[
                (k[0], c.clone()),
                (k[1], z.clone()),
                (k[2], r.mul(a, y)),
                (k[3], r.mul(b, x)),
                (k[4], r.mul(&r.pow_theta_linear(a, 1, 1), x)),
            ],
        );
        Triple::new(na, nb, nc)
    }

    /// `(a,b,c)^-1 = (-a, -b + a^(theta+1), -c)`.
    pub fn inv<R: ThetaRing>(&self, r: &R, g: &Triple<R::Elem>) -> Triple<R::Elem> {
        Triple::new(
            r.neg(&g.a),
            r.add(&r.neg(&g.b), &r.pow_theta_linear(&g.a, 1, 1)),
            r.neg(&g.c),
        )
    }

    pub fn norm<R: ThetaRing>(&self, r: &R, g: &Triple<R::Elem>) -> R::Elem {
        let (a, b, c) = (&g.a, &g.b, &g.c);
        let k = &self.norm;
        signed_sum(
            r,
            &[
                (k[0], r.mul(a, &r.theta(c))),
                (k[1], r.mul(&r.pow_theta_linear(a, 1, 1), &r.theta(b))),
                (k[2], r.mul(&r.pow_theta_linear(a, 3, 1), b)),
                (k[3], r.mul(&r.mul(a, a), &r.mul(b, b))),
                (k[4], r.pow_theta_linear(b, 1, 1)),
                (k[5], r.mul(c, c)),
                (k[6], r.pow_theta_linear(a, 4, 2)),
            ],
        )
    }

    pub fn v<R: ThetaRing>(&self, r: &R, g: &Triple<R::Elem>) -> R::Elem {
        let (a, b, c) = (&g.a, &g.b, &g.c);
        let k = &self.v;
        signed_sum(
            r,
            &[
                (k[0], r.mul(&r.theta(a), &r.theta(b))),
                (k[1], r.theta(c)),
                (k[2], r.mul(a, &r.mul(b, b))),
                (k[3], r.mul(b, c)),
                (k[4], r.pow_theta_linear(a, 3, 2)),
            ],
        )
    }

    pub fn u<R: ThetaRing>(&self, r: &R, g: &Triple<R::Elem>) -> R::Elem {
        let (a, b, c) = (&g.a, &g.b, &g.c);
        let k = &self.u;
        signed_sum(
            r,
            &[
                (k[0], r.mul(&r.mul(a, a), b)),
                (k[1], r.mul(a, c)),
                (k[2], r.theta(b)),
                (k[3], r.pow_theta_linear(a, 3, 1)),
            ],
        )
    }

    pub fn aux<R: ThetaRing>(&self, r: &R, g: &Triple<R::Elem>) -> NormTriple<R::Elem> {
        NormTriple {
            v: self.v(r, g),
            u: self.u(r, g),
            w: self.norm(r, g),
        }
    }

    /// `Omega(a,b,c) = (-v, -u w^theta, -c w^(theta+1))`.
    pub fn omega_big<R: ThetaRing>(&self, r: &R, g: &Triple<R::Elem>) -> Triple<R::Elem> {
        let NormTriple { v, u, w } = self.aux(r, g);
        Triple::new(
            r.neg(&v),
            r.neg(&r.mul(&u, &r.theta(&w))),
            r.neg(&r.mul(&g.c, &r.pow_theta_linear(&w, 1, 1))),
        )
    }

    /// `h_t(a,b,c) = (t a, t^(theta+1) b, t^(theta+2) c)`.
    pub fn torus<R: ThetaRing>(&self, r: &R, t: &R::Elem, g: &Triple<R::Elem>) -> Triple<R::Elem> {
        Triple::new(
            r.mul(t, &g.a),
            r.mul(&r.pow_theta_linear(t, 1, 1), &g.b),
            r.mul(&r.pow_theta_linear(t, 2, 1), &g.c),
        )
    }
}

fn signed_sum<R: ThetaRing>(r: &R, terms: &[(i8, R::Elem)]) -> R::Elem {
    let mut acc = r.zero();
    for (k, t) in terms {
        acc = r.add(&acc, &r.scale(*k as i64, t));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbation_changes_exactly_one_coefficient() {
        let sites = FormulaSite::all();
        assert_eq!(sites.len(), 29);
        for s in sites {
            let p = ReeLaw::perturbed(s);
            assert!(!p.is_standard(), "{s}");
        }
    }
}
