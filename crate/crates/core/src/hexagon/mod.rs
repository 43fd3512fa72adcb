//! The mixed Moufang hexagon `Γ` built from right cosets in `U₊`, the
//! automorphisms `ρ`, `m₁`, `m₆`, `m₁m₆`, and the Moufang set `X` of
//! `ρ`-fixed edges.
//!
//! Vertices of class `i ≤ 5` are cosets `U_{1,6-i} g`, represented by the
//! `x_{7-i},…,x₆` coordinates of `g`. Vertices of class `i ≥ 6` are cosets
//! `U_{12-i,6} g`, represented by the unique `h ∈ U_{1,11-i}` with
//! `g ∈ U_{12-i,6} h`. Automorphisms act on the right.

pub mod checks;
pub mod graph;
pub mod moufang;
pub mod symbolic;
pub mod tables;
pub mod uplus;

use std::fmt;
use std::sync::Arc;

use crate::field::{FieldContext, FieldElement};
pub use tables::{TableId, TableMutation};
pub use uplus::UPlus;

/// A vertex of `Γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HexVertex {
    Bullet,
    Star,
    /// `class` in `1..=10`; `rep` holds the representative coordinates,
    /// zero-padded to five entries.
    Coset {
        class: u8,
        rep: [FieldElement; 5],
    },
}

impl HexVertex {
    pub fn class(&self) -> Option<u8> {
        match self {
            HexVertex::Coset { class, .. } => Some(*class),
            _ => None,
        }
    }

    /// The representative coordinates actually in use.
    pub fn rep(&self) -> &[FieldElement] {
        match self {
            HexVertex::Coset { class, rep } => &rep[..rep_len(*class)],
            _ => &[],
        }
    }

    /// Parity class for the bipartition: `•` with the odd classes.
    pub fn side(&self) -> bool {
        match self {
            HexVertex::Bullet => false,
            HexVertex::Star => true,
            HexVertex::Coset { class, .. } => class % 2 == 1,
        }
    }
}

/// Number of representative coordinates of a class.
pub fn rep_len(class: u8) -> usize {
    if class <= 5 {
        class as usize
    } else {
        11 - class as usize
    }
}

/// First `U₊` slot (zero-based) covered by the representative.
fn rep_start(class: u8) -> usize {
    if class <= 5 {
        6 - class as usize
    } else {
        0
    }
}

/// Slots of the subgroup whose right cosets form the class.
pub fn subgroup_slots(class: u8) -> std::ops::Range<usize> {
    if class <= 5 {
        0..6 - class as usize
    } else {
        11 - class as usize..6
    }
}

/// Name of the coset of the identity in a class: `U15`, …, `U1`, `U6`, …, `U26`.
pub fn class_name(class: u8) -> String {
    match class {
        5 => "U1".to_owned(),
        6 => "U6".to_owned(),
        1..=4 => format!("U1{}", 6 - class),
        _ => format!("U{}6", 12 - class),
    }
}

/// `Γ` over a fixed field, optionally with one corrupted table row.
#[derive(Clone, Debug)]
pub struct Hexagon {
    field: Arc<FieldContext>,
    mutation: Option<TableMutation>,
}

impl Hexagon {
    pub fn new(field: Arc<FieldContext>) -> Self {
        Hexagon {
            field,
            mutation: None,
        }
    }

    pub fn with_mutation(field: Arc<FieldContext>, mutation: TableMutation) -> Self {
        Hexagon {
            field,
            mutation: Some(mutation),
        }
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn mutation(&self) -> Option<TableMutation> {
        self.mutation
    }

    pub fn mul(&self, g: &UPlus<FieldElement>, h: &UPlus<FieldElement>) -> UPlus<FieldElement> {
        uplus::mul(&*self.field, g, h)
    }

    pub fn inv(&self, g: &UPlus<FieldElement>) -> UPlus<FieldElement> {
        uplus::inv(&*self.field, g)
    }

    pub fn root(&self, slot: usize, s: FieldElement) -> UPlus<FieldElement> {
        uplus::root(&*self.field, slot, s)
    }

    /// The vertex containing `g` in class `class`.
    pub fn coset_vertex(&self, class: u8, g: &UPlus<FieldElement>) -> HexVertex {
        assert!((1..=10).contains(&class), "class {class} out of range");
        let mut rep = [FieldElement::ZERO; 5];
        let n = rep_len(class);
        if class <= 5 {
            rep[..n].copy_from_slice(&g[6 - n..]);
        } else {
            // g = u h with u ∈ U_{12-i,6}, h ∈ U_{1,11-i}; h^-1 is the prefix of g^-1
            let mut prefix = self.inv(g);
            for x in &mut prefix[n..] {
                *x = FieldElement::ZERO;
            }
            rep[..n].copy_from_slice(&self.inv(&prefix)[..n]);
        }
        HexVertex::Coset { class, rep }
    }

    /// The coset written as in the tables, e.g. `U14 x5(s) x6(t)` is
    /// `coset(2, &[(5, s), (6, t)])`. Indices are the 1-based root indices
    /// and must lie in the representative range of the class.
    pub fn coset(&self, class: u8, factors: &[(usize, FieldElement)]) -> HexVertex {
        let start = rep_start(class);
        let mut rep = [FieldElement::ZERO; 5];
        for &(i, x) in factors {
            let k = i - 1;
            assert!(
                k >= start && k < start + rep_len(class),
                "x{i} outside class {class}"
            );
            rep[k - start] = x;
        }
        HexVertex::Coset { class, rep }
    }

    /// The representative of a coset vertex as an element of `U₊`.
    pub fn element(&self, v: &HexVertex) -> Option<UPlus<FieldElement>> {
        match v {
            HexVertex::Coset { class, rep } => {
                let mut g = [FieldElement::ZERO; 6];
                let (start, n) = (rep_start(*class), rep_len(*class));
                g[start..start + n].copy_from_slice(&rep[..n]);
                Some(g)
            }
            _ => None,
        }
    }

    /// Coordinate `x_i` (1-based) of a coset vertex's representative.
    pub fn x(&self, v: &HexVertex, i: usize) -> FieldElement {
        self.element(v)
            .map(|g| g[i - 1])
            .unwrap_or(FieldElement::ZERO)
    }

    pub fn adjacent(&self, x: &HexVertex, y: &HexVertex) -> bool {
        use HexVertex::*;
        match (x, y) {
            (Bullet, Star) | (Star, Bullet) => true,
            (Bullet, v) | (v, Bullet) => v.class() == Some(1),
            (Star, v) | (v, Star) => v.class() == Some(10),
            _ => {
                let (lo, hi) = if x.class() < y.class() {
                    (x, y)
                } else {
                    (y, x)
                };
                let (cl, ch) = (lo.class().unwrap(), hi.class().unwrap());
                if ch != cl + 1 {
                    return false;
                }
                let (elo, ehi) = (self.element(lo).unwrap(), self.element(hi).unwrap());
                match cl {
                    1..=4 => self.coset_vertex(cl, &ehi) == *lo,
                    5 => {
                        // U₁g ∩ U₆h ≠ ∅ iff x₆(s)h ∈ U₁g, with s forced to g's x₆ coordinate
                        let e = self.mul(&self.root(5, elo[5]), &ehi);
                        self.coset_vertex(5, &e) == *lo
                    }
                    _ => self.coset_vertex(ch, &elo) == *hi,
                }
            }
        }
    }

    /// All `q + 1` neighbours of a vertex.
    pub fn neighbors(&self, v: &HexVertex) -> Vec<HexVertex> {
        let f = &*self.field;
        let mut out = Vec::with_capacity(f.order() as usize + 1);
        match v {
            HexVertex::Bullet => {
                out.push(HexVertex::Star);
                out.extend(f.elements().map(|a| self.coset(1, &[(6, a)])));
            }
            HexVertex::Star => {
                out.push(HexVertex::Bullet);
                out.extend(f.elements().map(|a| self.coset(10, &[(1, a)])));
            }
            HexVertex::Coset { class, .. } => {
                let class = *class;
                let g = self.element(v).unwrap();
                match class {
                    1..=4 => {
                        out.push(if class == 1 {
                            HexVertex::Bullet
                        } else {
                            self.coset_vertex(class - 1, &g)
                        });
                        let slot = 5 - class as usize;
                        out.extend(f.elements().map(|a| {
                            let mut h = g;
                            h[slot] = a;
                            self.coset_vertex(class + 1, &h)
                        }));
                    }
                    5 => {
                        out.push(self.coset_vertex(4, &g));
                        out.extend(
                            f.elements()
                                .map(|a| self.coset_vertex(6, &self.mul(&self.root(0, a), &g))),
                        );
                    }
                    _ => {
                        out.push(if class == 10 {
                            HexVertex::Star
                        } else {
                            self.coset_vertex(class + 1, &g)
                        });
                        let slot = 11 - class as usize;
                        out.extend(f.elements().map(|a| {
                            self.coset_vertex(class - 1, &self.mul(&self.root(slot, a), &g))
                        }));
                    }
                }
            }
        }
        out
    }

    /// `ρ` on vertices: `• ↔ ★` and class `i ↔ 11 - i`.
    pub fn rho_vertex(&self, v: &HexVertex) -> HexVertex {
        match v {
            HexVertex::Bullet => HexVertex::Star,
            HexVertex::Star => HexVertex::Bullet,
            HexVertex::Coset { class, .. } => {
                let g = uplus::rho(&*self.field, &self.element(v).unwrap());
                self.coset_vertex(11 - class, &g)
            }
        }
    }

    /// Apartment vertices by name (`U15`, `•`, …), the rest as
    /// `class:i rep:[…]`.
    pub fn render_vertex(&self, v: &HexVertex) -> String {
        match v {
            HexVertex::Bullet => "•".to_owned(),
            HexVertex::Star => "★".to_owned(),
            HexVertex::Coset { class, .. } if v.rep().iter().all(|x| x.is_zero()) => {
                class_name(*class)
            }
            HexVertex::Coset { class, .. } => {
                let coords: Vec<String> = v.rep().iter().map(|&x| self.field.render(x)).collect();
                format!("class:{} rep:[{}]", class, coords.join(","))
            }
        }
    }

    /// The vertex in the word notation of the tables, e.g. `U14 x5(1) x6(2)`.
    pub fn word(&self, v: &HexVertex) -> String {
        match v {
            HexVertex::Coset { class, .. } => {
                let g = self.element(v).unwrap();
                let start = rep_start(*class);
                let mut s = class_name(*class);
                for (k, x) in g.iter().enumerate().skip(start).take(rep_len(*class)) {
                    s.push_str(&format!(" x{}({})", k + 1, self.field.render(*x)));
                }
                s
            }
            _ => self.render_vertex(v),
        }
    }

    pub fn vertex_witness(&self, v: &HexVertex) -> serde_json::Value {
        serde_json::Value::String(self.word(v))
    }
}

impl fmt::Display for HexVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HexVertex::Bullet => write!(f, "•"),
            HexVertex::Star => write!(f, "★"),
            HexVertex::Coset { class, .. } => {
                let idx: Vec<String> = self.rep().iter().map(|x| x.index().to_string()).collect();
                write!(f, "class:{} rep:[{}]", class, idx.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use proptest::prelude::*;

    fn hex(m: u32) -> Hexagon {
        Hexagon::new(Arc::new(make_field(m).unwrap()))
    }

    #[test]
    fn apartment_names() {
        let h = hex(1);
        let names: Vec<String> = (1..=10).map(class_name).collect();
        assert_eq!(
            names,
            ["U15", "U14", "U13", "U12", "U1", "U6", "U56", "U46", "U36", "U26"]
        );
        let e = uplus::identity(h.field());
        assert_eq!(h.render_vertex(&h.coset_vertex(5, &e)), "U1");
    }

    #[test]
    fn coset_of_root_in_class_one() {
        let h = hex(1);
        let one = FieldElement::ONE;
        assert_eq!(h.coset_vertex(1, &h.root(5, one)), h.coset(1, &[(6, one)]));
        assert_eq!(h.word(&h.coset(2, &[(5, one)])), "U14 x5(1) x6(0)");
    }

    #[test]
    fn bullet_and_star() {
        let h = hex(1);
        assert!(h.adjacent(&HexVertex::Bullet, &HexVertex::Star));
        for v in h.neighbors(&HexVertex::Bullet) {
            assert!(h.adjacent(&HexVertex::Bullet, &v));
        }
        assert_eq!(h.rho_vertex(&HexVertex::Bullet), HexVertex::Star);
    }

    #[test]
    fn neighbours_are_adjacent_and_symmetric_over_gf3() {
        let h = hex(1);
        let f = h.field();
        let mut stack = vec![HexVertex::Bullet];
        let mut seen = std::collections::HashSet::new();
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            let ns = h.neighbors(&v);
            assert_eq!(ns.len(), f.order() as usize + 1);
            for w in ns {
                assert!(h.adjacent(&v, &w), "{} ~ {}", h.word(&v), h.word(&w));
                assert!(h.neighbors(&w).contains(&v));
                stack.push(w);
            }
        }
        assert_eq!(seen.len(), 728);
    }

    fn gf27_tuple() -> impl Strategy<Value = [u32; 6]> {
        prop::array::uniform6(0u32..27)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn cosets_are_well_defined(class in 1u8..=10, g in gf27_tuple(), u in gf27_tuple()) {
            let h = hex(3);
            let f = h.field();
            let g = g.map(|k| f.element(k).unwrap());
            let mut s = [FieldElement::ZERO; 6];
            for k in subgroup_slots(class) {
                s[k] = f.element(u[k]).unwrap();
            }
            prop_assert_eq!(h.coset_vertex(class, &h.mul(&s, &g)), h.coset_vertex(class, &g));
            let v = h.coset_vertex(class, &g);
            prop_assert_eq!(h.coset_vertex(class, &h.element(&v).unwrap()), v);
        }

        #[test]
        fn rho_is_an_involution_preserving_adjacency(class in 1u8..=10, g in gf27_tuple()) {
            let h = hex(3);
            let f = h.field();
            let v = h.coset_vertex(class, &g.map(|k| f.element(k).unwrap()));
            prop_assert_eq!(h.rho_vertex(&h.rho_vertex(&v)), v);
            for w in h.neighbors(&v) {
                prop_assert!(h.adjacent(&h.rho_vertex(&v), &h.rho_vertex(&w)));
            }
        }
    }
}
