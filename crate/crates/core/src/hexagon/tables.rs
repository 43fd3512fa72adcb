//! `m₁`, `m₆` and `m₁m₆` as explicit tables.
//!
//! Each row is keyed by the vertex class and the zero/nonzero case split and
//! reads its variables off the canonical representative. Rows are numbered
//! in table order so a single row can be corrupted on purpose.

use serde::Serialize;

use super::{HexVertex, Hexagon};
use crate::field::{FieldContext, FieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableId {
    M1,
    M6,
    M16,
}

impl TableId {
    pub fn rows(self) -> u8 {
        match self {
            TableId::M1 | TableId::M6 => 17,
            TableId::M16 => 22,
        }
    }
}

/// Corrupt one row: coset outputs get `+1` on their last representative
/// coordinate, `•` and `★` outputs are swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TableMutation {
    pub table: TableId,
    pub row: u8,
}

impl TableMutation {
    pub fn all() -> Vec<TableMutation> {
        [TableId::M1, TableId::M6, TableId::M16]
            .into_iter()
            .flat_map(|table| (0..table.rows()).map(move |row| TableMutation { table, row }))
            .collect()
    }
}

impl std::fmt::Display for TableMutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}[{}]", self.table, self.row)
    }
}

#[derive(Clone, Copy)]
struct Ops<'a>(&'a FieldContext);

impl Ops<'_> {
    fn add(self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.0.add(x, y)
    }
    fn sub(self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.0.sub(x, y)
    }
    fn mul(self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.0.mul(x, y)
    }
    fn neg(self, x: FieldElement) -> FieldElement {
        self.0.neg(x)
    }
    fn th(self, x: FieldElement) -> FieldElement {
        self.0.theta(x)
    }
    fn sq(self, x: FieldElement) -> FieldElement {
        self.0.mul(x, x)
    }
    /// Only called on branches where the argument is nonzero.
    fn inv(self, x: FieldElement) -> FieldElement {
        self.0
            .inv(x)
            .expect("table branch guarantees a nonzero argument")
    }
    /// `x^-θ`
    fn inv_th(self, x: FieldElement) -> FieldElement {
        self.inv(self.th(x))
    }
}

impl Hexagon {
    fn finish(&self, table: TableId, row: u8, out: HexVertex) -> HexVertex {
        if self.mutation != Some(TableMutation { table, row }) {
            return out;
        }
        match out {
            HexVertex::Bullet => HexVertex::Star,
            HexVertex::Star => HexVertex::Bullet,
            HexVertex::Coset { class, mut rep } => {
                let last = super::rep_len(class) - 1;
                rep[last] = self.field.add(rep[last], FieldElement::ONE);
                HexVertex::Coset { class, rep }
            }
        }
    }

    /// `m₁`: the reflection fixing `★` and `U₁`.
    pub fn m1(&self, v: &HexVertex) -> HexVertex {
        let o = Ops(&self.field);
        let x = |i| self.x(v, i);
        let (row, out) = match v.class() {
            None if *v == HexVertex::Star => (0, HexVertex::Star),
            None => (1, self.coset(10, &[])),
            Some(1) => (2, self.coset(9, &[(2, x(6))])),
            Some(2) => {
                let (s, t) = (x(5), x(6));
                (3, self.coset(8, &[(2, t), (3, s)]))
            }
            Some(3) => {
                let (r, s, t) = (x(4), x(5), x(6));
                (4, self.coset(7, &[(2, t), (3, s), (4, r)]))
            }
            Some(4) => {
                let (u, r, s, t) = (x(3), x(4), x(5), x(6));
                (5, self.coset(6, &[(2, t), (3, s), (4, r), (5, o.neg(u))]))
            }
            Some(5) => {
                let (v, u, r, s, t) = (x(2), x(3), x(4), x(5), x(6));
                let out = self.coset(
                    5,
                    &[
                        (2, t),
                        (3, s),
                        (4, o.add(r, o.mul(v, t))),
                        (5, o.neg(u)),
                        (6, o.neg(v)),
                    ],
                );
                (6, out)
            }
            Some(6) => {
                let (s, t, r, u, v) = (x(1), x(2), x(3), x(4), x(5));
                if s.is_zero() {
                    (
                        7,
                        self.coset(4, &[(3, v), (4, u), (5, o.neg(r)), (6, o.neg(t))]),
                    )
                } else {
                    let (si, sti) = (o.inv(s), o.inv_th(s));
                    let out = self.coset(
                        6,
                        &[
                            (1, o.neg(si)),
                            (2, o.neg(o.mul(sti, t))),
                            (3, o.add(v, o.mul(o.sq(si), o.th(t)))),
                            (4, o.sub(u, o.mul(sti, o.sq(t)))),
                            (5, o.sub(o.mul(si, o.th(t)), r)),
                        ],
                    );
                    (8, out)
                }
            }
            Some(7) => {
                let (s, t, r, u) = (x(1), x(2), x(3), x(4));
                if s.is_zero() {
                    (9, self.coset(3, &[(4, u), (5, o.neg(r)), (6, o.neg(t))]))
                } else {
                    let (si, sti) = (o.inv(s), o.inv_th(s));
                    let out = self.coset(
                        7,
                        &[
                            (1, o.neg(si)),
                            (2, o.neg(o.mul(sti, t))),
                            (3, o.sub(o.neg(o.mul(si, r)), o.mul(o.sq(si), o.th(t)))),
                            (4, o.sub(u, o.mul(sti, o.sq(t)))),
                        ],
                    );
                    (10, out)
                }
            }
            Some(8) => {
                let (s, t, r) = (x(1), x(2), x(3));
                if s.is_zero() {
                    (11, self.coset(2, &[(5, o.neg(r)), (6, o.neg(t))]))
                } else {
                    let (si, sti) = (o.inv(s), o.inv_th(s));
                    let out = self.coset(
                        8,
                        &[
                            (1, o.neg(si)),
                            (2, o.neg(o.mul(sti, t))),
                            (3, o.sub(o.neg(o.mul(si, r)), o.mul(o.sq(si), o.th(t)))),
                        ],
                    );
                    (12, out)
                }
            }
            Some(9) => {
                let (s, t) = (x(1), x(2));
                if s.is_zero() {
                    (13, self.coset(1, &[(6, o.neg(t))]))
                } else {
                    (
                        14,
                        self.coset(
                            9,
                            &[(1, o.neg(o.inv(s))), (2, o.neg(o.mul(o.inv_th(s), t)))],
                        ),
                    )
                }
            }
            _ => {
                let s = x(1);
                if s.is_zero() {
                    (15, HexVertex::Bullet)
                } else {
                    (16, self.coset(10, &[(1, o.neg(o.inv(s)))]))
                }
            }
        };
        self.finish(TableId::M1, row, out)
    }

    /// `m₆`: the reflection fixing `•` and `U₆`.
    pub fn m6(&self, v: &HexVertex) -> HexVertex {
        let o = Ops(&self.field);
        let x = |i| self.x(v, i);
        let (row, out) = match v.class() {
            None if *v == HexVertex::Star => (0, self.coset(1, &[])),
            None => (1, HexVertex::Bullet),
            Some(1) => {
                let w = x(6);
                if w.is_zero() {
                    (2, HexVertex::Star)
                } else {
                    (3, self.coset(1, &[(6, o.neg(o.inv(w)))]))
                }
            }
            Some(2) => {
                let (v, w) = (x(5), x(6));
                if w.is_zero() {
                    (4, self.coset(10, &[(1, o.neg(v))]))
                } else {
                    (
                        5,
                        self.coset(
                            2,
                            &[(5, o.neg(o.mul(v, o.inv_th(w)))), (6, o.neg(o.inv(w)))],
                        ),
                    )
                }
            }
            Some(3) => {
                let (u, v, w) = (x(4), x(5), x(6));
                if w.is_zero() {
                    (6, self.coset(9, &[(1, o.neg(v)), (2, o.neg(u))]))
                } else {
                    let (wi, wti) = (o.inv(w), o.inv_th(w));
                    let out = self.coset(
                        3,
                        &[
                            (4, o.sub(o.neg(o.mul(o.th(v), o.sq(wi))), o.mul(wi, u))),
                            (5, o.neg(o.mul(v, wti))),
                            (6, o.neg(wi)),
                        ],
                    );
                    (7, out)
                }
            }
            Some(4) => {
                let (r, u, v, w) = (x(3), x(4), x(5), x(6));
                if w.is_zero() {
                    (8, self.coset(8, &[(1, o.neg(v)), (2, o.neg(u)), (3, r)]))
                } else {
                    let (wi, wti) = (o.inv(w), o.inv_th(w));
                    let out = self.coset(
                        4,
                        &[
                            (3, o.sub(r, o.mul(o.sq(v), wti))),
                            (4, o.sub(o.neg(o.mul(o.th(v), o.sq(wi))), o.mul(wi, u))),
                            (5, o.neg(o.mul(v, wti))),
                            (6, o.neg(wi)),
                        ],
                    );
                    (9, out)
                }
            }
            Some(5) => {
                let (t, r, u, v, w) = (x(2), x(3), x(4), x(5), x(6));
                if w.is_zero() {
                    (
                        10,
                        self.coset(7, &[(1, o.neg(v)), (2, o.neg(u)), (3, r), (4, t)]),
                    )
                } else {
                    let (wi, wti) = (o.inv(w), o.inv_th(w));
                    let out = self.coset(
                        5,
                        &[
                            (2, o.sub(o.sub(o.mul(o.th(v), wi), u), o.mul(t, w))),
                            (3, o.sub(r, o.mul(o.sq(v), wti))),
                            (4, o.sub(o.neg(o.mul(o.th(v), o.sq(wi))), o.mul(wi, u))),
                            (5, o.neg(o.mul(v, wti))),
                            (6, o.neg(wi)),
                        ],
                    );
                    (11, out)
                }
            }
            Some(6) => {
                let (s, t, r, u, v) = (x(1), x(2), x(3), x(4), x(5));
                let out = self.coset(
                    6,
                    &[
                        (1, o.neg(v)),
                        (2, o.neg(u)),
                        (3, o.sub(r, o.mul(s, v))),
                        (4, t),
                        (5, s),
                    ],
                );
                (12, out)
            }
            Some(7) => {
                let (s, t, r, u) = (x(1), x(2), x(3), x(4));
                (13, self.coset(5, &[(2, o.neg(u)), (3, r), (4, t), (5, s)]))
            }
            Some(8) => {
                let (s, t, r) = (x(1), x(2), x(3));
                (14, self.coset(4, &[(3, r), (4, t), (5, s)]))
            }
            Some(9) => {
                let (s, t) = (x(1), x(2));
                (15, self.coset(3, &[(4, t), (5, s)]))
            }
            _ => (16, self.coset(2, &[(5, x(1))])),
        };
        self.finish(TableId::M6, row, out)
    }

    /// `m₁m₆` as tabulated (not computed as a composition).
    pub fn m16(&self, v: &HexVertex) -> HexVertex {
        let o = Ops(&self.field);
        let x = |i| self.x(v, i);
        let (row, out) = match v.class() {
            None if *v == HexVertex::Star => (0, self.coset(1, &[])),
            None => (1, self.coset(2, &[])),
            Some(1) => (2, self.coset(3, &[(4, x(6))])),
            Some(2) => {
                let (s, t) = (x(5), x(6));
                (3, self.coset(4, &[(3, s), (4, t)]))
            }
            Some(3) => {
                let (r, s, t) = (x(4), x(5), x(6));
                (4, self.coset(5, &[(2, o.neg(r)), (3, s), (4, t)]))
            }
            Some(4) => {
                let (u, r, s, t) = (x(3), x(4), x(5), x(6));
                (5, self.coset(6, &[(1, u), (2, o.neg(r)), (3, s), (4, t)]))
            }
            Some(5) => {
                let (v, u, r, s, t) = (x(2), x(3), x(4), x(5), x(6));
                if v.is_zero() {
                    (6, self.coset(7, &[(1, u), (2, o.neg(r)), (3, s), (4, t)]))
                } else {
                    let (vi, vti) = (o.inv(v), o.inv_th(v));
                    let out = self.coset(
                        5,
                        &[
                            (2, o.sub(o.mul(o.th(u), vi), r)),
                            (3, o.add(s, o.mul(o.sq(u), vti))),
                            (4, o.add(o.add(o.mul(o.th(u), o.sq(vi)), o.mul(vi, r)), t)),
                            (5, o.neg(o.mul(u, vti))),
                            (6, vi),
                        ],
                    );
                    (7, out)
                }
            }
            Some(6) => {
                let (s, t, r, u, v) = (x(1), x(2), x(3), x(4), x(5));
                if s.is_zero() && t.is_zero() {
                    (8, self.coset(8, &[(1, r), (2, o.neg(u)), (3, v)]))
                } else if s.is_zero() {
                    let (ti, tti) = (o.inv(t), o.inv_th(t));
                    let out = self.coset(
                        4,
                        &[
                            (3, o.add(v, o.mul(o.sq(r), tti))),
                            (4, o.add(o.mul(o.th(r), o.sq(ti)), o.mul(ti, u))),
                            (5, o.neg(o.mul(r, tti))),
                            (6, ti),
                        ],
                    );
                    (9, out)
                } else {
                    let (si, sti) = (o.inv(s), o.inv_th(s));
                    let out = self.coset(
                        6,
                        &[
                            (1, o.sub(r, o.mul(si, o.th(t)))),
                            (2, o.sub(o.mul(sti, o.sq(t)), u)),
                            (3, o.sub(o.sub(v, o.mul(o.sq(si), o.th(t))), o.mul(si, r))),
                            (4, o.neg(o.mul(sti, t))),
                            (5, o.neg(si)),
                        ],
                    );
                    (10, out)
                }
            }
            Some(7) => {
                let (s, t, r, u) = (x(1), x(2), x(3), x(4));
                if s.is_zero() && t.is_zero() {
                    (11, self.coset(9, &[(1, r), (2, o.neg(u))]))
                } else if s.is_zero() {
                    let (ti, tti) = (o.inv(t), o.inv_th(t));
                    let out = self.coset(
                        3,
                        &[
                            (4, o.add(o.mul(o.th(r), o.sq(ti)), o.mul(ti, u))),
                            (5, o.neg(o.mul(r, tti))),
                            (6, ti),
                        ],
                    );
                    (12, out)
                } else {
                    let (si, sti) = (o.inv(s), o.inv_th(s));
                    let out = self.coset(
                        5,
                        &[
                            (2, o.add(o.neg(u), o.mul(sti, o.sq(t)))),
                            (3, o.sub(o.neg(o.mul(si, r)), o.mul(o.sq(si), o.th(t)))),
                            (4, o.neg(o.mul(sti, t))),
                            (5, o.neg(si)),
                        ],
                    );
                    (13, out)
                }
            }
            Some(8) => {
                let (s, t, r) = (x(1), x(2), x(3));
                if s.is_zero() && t.is_zero() {
                    (14, self.coset(10, &[(1, r)]))
                } else if s.is_zero() {
                    let (ti, tti) = (o.inv(t), o.inv_th(t));
                    (15, self.coset(2, &[(5, o.neg(o.mul(r, tti))), (6, ti)]))
                } else {
                    let (si, sti) = (o.inv(s), o.inv_th(s));
                    let out = self.coset(
                        4,
                        &[
                            (3, o.sub(o.neg(o.mul(si, r)), o.mul(o.sq(si), o.th(t)))),
                            (4, o.neg(o.mul(sti, t))),
                            (5, o.neg(si)),
                        ],
                    );
                    (16, out)
                }
            }
            Some(9) => {
                let (s, t) = (x(1), x(2));
                if s.is_zero() && t.is_zero() {
                    (17, HexVertex::Star)
                } else if s.is_zero() {
                    (18, self.coset(1, &[(6, o.inv(t))]))
                } else {
                    (
                        19,
                        self.coset(
                            3,
                            &[(4, o.neg(o.mul(o.inv_th(s), t))), (5, o.neg(o.inv(s)))],
                        ),
                    )
                }
            }
            _ => {
                let s = x(1);
                if s.is_zero() {
                    (20, HexVertex::Bullet)
                } else {
                    (21, self.coset(2, &[(5, o.neg(o.inv(s)))]))
                }
            }
        };
        self.finish(TableId::M16, row, out)
    }

    /// `ω = (m₁m₆)³` on vertices.
    pub fn omega_vertex(&self, v: &HexVertex) -> HexVertex {
        self.m16(&self.m16(&self.m16(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use std::sync::Arc;

    #[test]
    fn row_counts() {
        assert_eq!(TableMutation::all().len(), 56);
    }

    #[test]
    fn reflections_fix_their_apartment_vertices() {
        let h = Hexagon::new(Arc::new(make_field(1).unwrap()));
        assert_eq!(h.m1(&HexVertex::Star), HexVertex::Star);
        assert_eq!(h.m1(&HexVertex::Bullet), h.coset(10, &[]));
        assert_eq!(h.m1(&h.coset(5, &[])), h.coset(5, &[]));
        assert_eq!(h.m6(&HexVertex::Bullet), HexVertex::Bullet);
        assert_eq!(h.m6(&h.coset(6, &[])), h.coset(6, &[]));
    }

    #[test]
    fn mutation_changes_exactly_the_chosen_row() {
        let f = Arc::new(make_field(1).unwrap());
        let clean = Hexagon::new(f.clone());
        let bad = Hexagon::with_mutation(
            f,
            TableMutation {
                table: TableId::M1,
                row: 0,
            },
        );
        assert_eq!(bad.m1(&HexVertex::Star), HexVertex::Bullet);
        assert_eq!(bad.m1(&HexVertex::Bullet), clean.m1(&HexVertex::Bullet));
    }
}
