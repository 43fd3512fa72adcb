//! The Moufang set `X` as the `ρ`-fixed edges of `Γ`, and `ω` computed
//! geometrically as `(m₁m₆)³`.

use rayon::prelude::*;

use super::graph::HexGraph;
use super::{uplus, HexVertex, Hexagon};
use crate::error::InvariantViolation;
use crate::group::{MoufangPoint, Triple, UTriple};

impl Hexagon {
    /// The edge of `Γ` standing for a point of `X`: `{U₁φ(g), U₆φ(g)}` for
    /// `g ∈ U`, and `{•, ★}` for `∞`. Returned as (class 5 or `•`, class 6 or `★`).
    pub fn x_edge(&self, p: &MoufangPoint) -> (HexVertex, HexVertex) {
        match p {
            MoufangPoint::Infinity => (HexVertex::Bullet, HexVertex::Star),
            MoufangPoint::Finite(g) => {
                let e = uplus::phi(self.field(), g);
                (self.coset_vertex(5, &e), self.coset_vertex(6, &e))
            }
        }
    }

    /// Read `g` off the class-5 endpoint `U₁ x₂(v)x₃(u)x₄(r)x₅(s)x₆(t)`:
    /// `g = (t, v, r - vt)`.
    pub fn decode(&self, v: &HexVertex) -> Option<UTriple> {
        if v.class() != Some(5) {
            return None;
        }
        let f = self.field();
        let (b, r, a) = (self.x(v, 2), self.x(v, 4), self.x(v, 6));
        Some(Triple::new(a, b, f.sub(r, f.mul(b, a))))
    }

    /// The point of `X` an edge stands for, if it is one.
    pub fn edge_point(&self, x: &HexVertex, y: &HexVertex) -> Option<MoufangPoint> {
        let (x, y) = if x.class() <= y.class() && *x != HexVertex::Star {
            (x, y)
        } else {
            (y, x)
        };
        match (x, y) {
            (HexVertex::Bullet, HexVertex::Star) => Some(MoufangPoint::Infinity),
            _ => {
                let p = MoufangPoint::Finite(self.decode(x)?);
                (self.x_edge(&p) == (*x, *y)).then_some(p)
            }
        }
    }

    /// `ω = (m₁m₆)³` applied to both endpoints of the edge of `p`.
    pub fn omega_hex(&self, p: &MoufangPoint) -> Result<MoufangPoint, InvariantViolation> {
        let (x, y) = self.x_edge(p);
        let (ox, oy) = (self.omega_vertex(&x), self.omega_vertex(&y));
        self.edge_point(&ox, &oy).ok_or_else(|| {
            InvariantViolation::new(
                "image of an X-edge under (m1 m6)^3 is not an X-edge",
                format!(
                    "{} -> {{{}, {}}}",
                    self.word(&x),
                    self.word(&ox),
                    self.word(&oy)
                ),
            )
        })
    }

    /// Every edge of a built graph fixed setwise by `ρ`.
    pub fn fixed_edges_in(&self, graph: &HexGraph) -> Vec<(HexVertex, HexVertex)> {
        graph
            .edges()
            .map(|(a, b)| (graph.vertices[a as usize], graph.vertices[b as usize]))
            .filter(|(x, y)| self.rho_vertex(x) == *y && self.rho_vertex(y) == *x)
            .collect()
    }

    /// Class-5 vertices `x` with `{x, ρ(x)}` an edge, by scanning all of `W₅`
    /// (`q⁵` vertices). Returns the count and the first one that does not
    /// decode to an `X`-edge.
    pub fn scan_fixed_edges(&self) -> (u64, Option<HexVertex>) {
        let f = self.field();
        let q = f.order() as u64;
        let total = q.pow(5);
        let results: Vec<(u64, Option<HexVertex>)> = (0..total)
            .into_par_iter()
            .fold(
                || (0u64, None),
                |(n, bad), idx| {
                    let mut g = [crate::field::FieldElement::ZERO; 6];
                    let mut k = idx;
                    for slot in (1..6).rev() {
                        g[slot] = f.element((k % q) as u32).unwrap();
                        k /= q;
                    }
                    let x = self.coset_vertex(5, &g);
                    let y = self.rho_vertex(&x);
                    if !self.adjacent(&x, &y) {
                        return (n, bad);
                    }
                    let bad = bad.or_else(|| self.edge_point(&x, &y).is_none().then_some(x));
                    (n + 1, bad)
                },
            )
            .collect();
        results
            .into_iter()
            .fold((0, None), |(n, bad), (m, b)| (n + m, bad.or(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::group::ReeGroup;
    use std::sync::Arc;

    #[test]
    fn omega_swaps_infinity_and_zero() {
        let hex = Hexagon::new(Arc::new(make_field(1).unwrap()));
        assert_eq!(
            hex.omega_hex(&MoufangPoint::Infinity),
            Ok(MoufangPoint::ZERO)
        );
        assert_eq!(
            hex.omega_hex(&MoufangPoint::ZERO),
            Ok(MoufangPoint::Infinity)
        );
    }

    #[test]
    fn geometric_omega_matches_formula_over_gf3() {
        let field = Arc::new(make_field(1).unwrap());
        let hex = Hexagon::new(field.clone());
        let group = ReeGroup::new(field);
        for g in group.elements() {
            let p = MoufangPoint::Finite(g);
            assert_eq!(
                hex.omega_hex(&p),
                group.omega_apply(&p),
                "{}",
                group.render(&g)
            );
        }
    }

    #[test]
    fn fixed_edges_over_gf3() {
        let hex = Hexagon::new(Arc::new(make_field(1).unwrap()));
        let graph = HexGraph::build(&hex).unwrap();
        let fixed = hex.fixed_edges_in(&graph);
        assert_eq!(fixed.len(), 28);
        assert!(fixed.iter().all(|(x, y)| hex.edge_point(x, y).is_some()));
        assert_eq!(hex.scan_fixed_edges(), (27, None));
    }
}
