//! Numeric checks on `U₊`, `Γ`, the tables and the Moufang set.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::graph::HexGraph;
use super::{subgroup_slots, uplus, HexVertex, Hexagon, UPlus};
use crate::field::FieldElement;
use crate::group::{MoufangPoint, ReeGroup};
use crate::report::Outcome;
use crate::sampling::Sampling;

/// Bipartite, `(q+1)`-regular, girth 12, diameter 6, and the expected class sizes.
pub fn graph_axioms(hex: &Hexagon, graph: &HexGraph) -> Outcome {
    let q = hex.field().order() as usize;
    let s = graph.stats();
    let sizes: Vec<usize> = (1..=10u32)
        .map(|i| q.pow(if i <= 5 { i } else { 11 - i }))
        .collect();
    let checks = [
        (graph.is_symmetric(), "neighbour lists are not symmetric"),
        (
            s.class_sizes.as_slice() == sizes.as_slice(),
            "class sizes differ from q^i",
        ),
        (s.sides.0 == s.sides.1, "bipartition is unbalanced"),
        (s.bipartite, "graph is not bipartite"),
        (s.degree == Some(q + 1), "graph is not (q+1)-regular"),
        (s.girth == Some(12), "girth is not 12"),
        (s.diameter == Some(6), "diameter is not 6"),
    ];
    let stats = json!({
        "vertices": s.vertices, "edges": s.edges, "class_sizes": s.class_sizes,
        "sides": [s.sides.0, s.sides.1], "degree": s.degree, "girth": s.girth, "diameter": s.diameter,
    });
    match checks.iter().find(|(ok, _)| !ok) {
        None => Outcome::pass(s.vertices as u64),
        Some((_, msg)) => Outcome::fail(s.vertices as u64, *msg, stats),
    }
}

fn all_tuples(hex: &Hexagon) -> Vec<UPlus<FieldElement>> {
    let f = hex.field();
    let q = f.order();
    (0..q.pow(6))
        .map(|mut i| {
            let mut g = [FieldElement::ZERO; 6];
            for x in g.iter_mut().rev() {
                *x = f.element(i % q).unwrap();
                i /= q;
            }
            g
        })
        .collect()
}

fn tuple_index(q: u32, g: &UPlus<FieldElement>) -> u32 {
    g.iter().fold(0, |acc, x| acc * q + x.index())
}

/// Independent oracle for the edge set at `q = 3`: cosets are built as
/// explicit sets `{u g : u ∈ subgroup}` and two consecutive classes are
/// joined when some element of `U₊` lies in both. The result must be the
/// graph produced by the neighbour rules.
pub fn coset_oracle(hex: &Hexagon, graph: &HexGraph) -> Outcome {
    let q = hex.field().order();
    let all = all_tuples(hex);
    // label[class][element] = smallest element index in its coset
    let labels: Vec<Vec<u32>> = (1..=10u8)
        .into_par_iter()
        .map(|class| {
            let sub: Vec<_> = all
                .iter()
                .filter(|g| {
                    g.iter()
                        .enumerate()
                        .all(|(k, x)| subgroup_slots(class).contains(&k) || x.is_zero())
                })
                .collect();
            all.iter()
                .map(|g| {
                    sub.iter()
                        .map(|u| tuple_index(q, &hex.mul(u, g)))
                        .min()
                        .unwrap()
                })
                .collect()
        })
        .collect();
    let vertex_label = |v: &HexVertex| -> Option<(u8, u32)> {
        let c = v.class()?;
        Some((
            c,
            labels[c as usize - 1][tuple_index(q, &hex.element(v).unwrap()) as usize],
        ))
    };
    let mut oracle: HashSet<((u8, u32), (u8, u32))> = HashSet::new();
    for (e, _) in all.iter().enumerate() {
        for c in 1..10u8 {
            oracle.insert((
                (c, labels[c as usize - 1][e]),
                (c + 1, labels[c as usize][e]),
            ));
        }
    }
    let mut built = HashSet::new();
    for (a, b) in graph.edges() {
        let (x, y) = (graph.vertices[a as usize], graph.vertices[b as usize]);
        if let (Some(lx), Some(ly)) = (vertex_label(&x), vertex_label(&y)) {
            built.insert(if lx.0 < ly.0 { (lx, ly) } else { (ly, lx) });
        }
    }
    let distinct: HashSet<_> = graph.vertices.iter().filter_map(vertex_label).collect();
    let cosets = graph
        .vertices
        .iter()
        .filter(|v| v.class().is_some())
        .count();
    if distinct.len() != cosets {
        return Outcome::fail(
            cosets as u64,
            "two vertices name the same coset",
            json!(null),
        );
    }
    match oracle.symmetric_difference(&built).next() {
        None => Outcome::pass(oracle.len() as u64),
        Some(e) => Outcome::fail(
            oracle.len() as u64,
            "edge sets differ from the coset-intersection oracle",
            json!(format!("{e:?}")),
        ),
    }
}

type VertexMap<'a> = (&'static str, &'a (dyn Fn(&HexVertex) -> HexVertex + Sync));

fn check_automorphism(
    hex: &Hexagon,
    graph: &HexGraph,
    name: &str,
    m: &(dyn Fn(&HexVertex) -> HexVertex + Sync),
) -> Outcome {
    let images: Vec<HexVertex> = graph.vertices.par_iter().map(m).collect();
    let mut seen = HashMap::new();
    for (i, img) in images.iter().enumerate() {
        if !graph.index.contains_key(img) {
            return Outcome::fail(
                i as u64,
                format!("{name} leaves the vertex set"),
                hex.vertex_witness(&graph.vertices[i]),
            );
        }
        if let Some(j) = seen.insert(*img, i) {
            return Outcome::fail(
                i as u64,
                format!("{name} is not injective"),
                json!([hex.word(&graph.vertices[j]), hex.word(&graph.vertices[i])]),
            );
        }
    }
    let edges: Vec<(u32, u32)> = graph.edges().collect();
    let bad = edges
        .par_iter()
        .find_first(|(a, b)| !hex.adjacent(&images[*a as usize], &images[*b as usize]));
    match bad {
        None => Outcome::pass((graph.len() + edges.len()) as u64),
        Some((a, b)) => {
            let (x, y) = (graph.vertices[*a as usize], graph.vertices[*b as usize]);
            Outcome::fail(
                edges.len() as u64,
                format!("{name} breaks an edge"),
                json!({
                    "edge": [hex.word(&x), hex.word(&y)],
                    "image": [hex.word(&images[*a as usize]), hex.word(&images[*b as usize])],
                }),
            )
        }
    }
}

/// `m₁`, `m₆`, `m₁m₆` and `ρ` are bijections preserving every edge.
pub fn table_automorphisms(hex: &Hexagon, graph: &HexGraph) -> Outcome {
    let maps: [VertexMap; 4] = [
        ("m1", &|v| hex.m1(v)),
        ("m6", &|v| hex.m6(v)),
        ("m1m6", &|v| hex.m16(v)),
        ("rho", &|v| hex.rho_vertex(v)),
    ];
    Outcome::merge(
        maps.iter()
            .map(|(name, m)| check_automorphism(hex, graph, name, *m)),
    )
}

/// Every vertex: tabulated `m₁m₆` equals `m₁` followed by `m₆`.
pub fn table_composition(hex: &Hexagon, vertices: &[HexVertex]) -> Outcome {
    let bad = vertices
        .par_iter()
        .find_first(|v| hex.m16(v) != hex.m6(&hex.m1(v)));
    match bad {
        None => Outcome::pass(vertices.len() as u64),
        Some(v) => Outcome::fail(
            vertices.len() as u64,
            "m1m6 table differs from m1 then m6",
            json!({
                "vertex": hex.word(v),
                "table": hex.word(&hex.m16(v)),
                "composed": hex.word(&hex.m6(&hex.m1(v))),
            }),
        ),
    }
}

/// `ω = (m₁m₆)³` and `ρ` are involutions that commute.
pub fn omega_rho(hex: &Hexagon, vertices: &[HexVertex]) -> Outcome {
    let bad = vertices.par_iter().find_map_first(|v| {
        let w = hex.omega_vertex(v);
        if hex.omega_vertex(&w) != *v {
            Some((*v, "omega^2 != 1"))
        } else if hex.rho_vertex(&hex.rho_vertex(v)) != *v {
            Some((*v, "rho^2 != 1"))
        } else if hex.rho_vertex(&w) != hex.omega_vertex(&hex.rho_vertex(v)) {
            Some((*v, "omega rho != rho omega"))
        } else {
            None
        }
    });
    match bad {
        None => Outcome::pass(vertices.len() as u64),
        Some((v, msg)) => Outcome::fail(vertices.len() as u64, msg, hex.vertex_witness(&v)),
    }
}

fn special_cases(
    hex: &Hexagon,
    cases: &dyn Fn(FieldElement) -> Vec<(&'static str, HexVertex, HexVertex)>,
) -> Outcome {
    let f = hex.field();
    let mut scanned = 0;
    for t in f.elements() {
        for (what, got, want) in cases(t) {
            scanned += 1;
            if got != want {
                return Outcome::fail(
                    scanned,
                    format!("special value fails: {what}"),
                    json!({ "t": f.coeffs(t), "table": hex.word(&got), "expected": hex.word(&want) }),
                );
            }
        }
    }
    Outcome::pass(scanned)
}

/// The reflections fix their apartment vertices, and three of the worked
/// special values of `m₁`, `m₆` hold for every `t`.
pub fn special_values(hex: &Hexagon) -> Outcome {
    let (u1, u6) = (hex.coset(5, &[]), hex.coset(6, &[]));
    let fixed = [
        ("m1 fixes ★", hex.m1(&HexVertex::Star) == HexVertex::Star),
        ("m1 fixes U1", hex.m1(&u1) == u1),
        (
            "m6 fixes •",
            hex.m6(&HexVertex::Bullet) == HexVertex::Bullet,
        ),
        ("m6 fixes U6", hex.m6(&u6) == u6),
    ];
    if let Some((what, _)) = fixed.iter().find(|(_, ok)| !ok) {
        return Outcome::fail(4, format!("reflection property fails: {what}"), json!(what));
    }
    let rest = special_cases(hex, &|t| {
        vec![
            (
                "(U15 x6(t))^m1 = U36 x2(t)",
                hex.m1(&hex.coset(1, &[(6, t)])),
                hex.coset(9, &[(2, t)]),
            ),
            (
                "(U14 x5(t))^m1 = U46 x3(t)",
                hex.m1(&hex.coset(2, &[(5, t)])),
                hex.coset(8, &[(3, t)]),
            ),
            (
                "(U36 x2(t))^m6 = U13 x4(t)",
                hex.m6(&hex.coset(9, &[(2, t)])),
                hex.coset(3, &[(4, t)]),
            ),
        ]
    });
    Outcome::merge([Outcome::pass(4), rest])
}

/// `(U₂₆ x₁(t))^{m₆} = U₁₄ x₅(-t)`, the remaining worked value, as stated.
///
/// The `m₆` table sends this vertex to `U₁₄ x₅(t)`, so this fails for
/// every `t ≠ 0`. See [`m6_on_class10_by_table`].
pub fn m6_on_class10_as_stated(hex: &Hexagon) -> Outcome {
    let f = hex.field();
    special_cases(hex, &|t| {
        vec![(
            "(U26 x1(t))^m6 = U14 x5(-t)",
            hex.m6(&hex.coset(10, &[(1, t)])),
            hex.coset(2, &[(5, f.neg(t))]),
        )]
    })
}

/// `(U₂₆ x₁(t))^{m₆} = U₁₄ x₅(t)`, the value the `m₆` table gives.
pub fn m6_on_class10_by_table(hex: &Hexagon) -> Outcome {
    special_cases(hex, &|t| {
        vec![(
            "(U26 x1(t))^m6 = U14 x5(t)",
            hex.m6(&hex.coset(10, &[(1, t)])),
            hex.coset(2, &[(5, t)]),
        )]
    })
}

/// A uniformly random class (or `•`/`★`) with a random representative.
pub fn random_vertex(hex: &Hexagon, rng: &mut impl Rng) -> HexVertex {
    let f = hex.field();
    match rng.gen_range(0..12u8) {
        0 => HexVertex::Bullet,
        11 => HexVertex::Star,
        class => {
            let g: UPlus<FieldElement> =
                std::array::from_fn(|_| f.element(rng.gen_range(0..f.order())).unwrap());
            hex.coset_vertex(class, &g)
        }
    }
}

/// Random vertices and all their incident edges: the three tables and `ρ`
/// preserve each edge, the tables compose, and `ω`, `ρ` are commuting
/// involutions.
pub fn sampled_tables(hex: &Hexagon, sampling: &Sampling) -> Outcome {
    let mut rng = sampling.rng("hexagon.sampled_tables");
    let vertices: Vec<HexVertex> = (0..sampling.samples)
        .map(|_| random_vertex(hex, &mut rng))
        .collect();
    let maps: [VertexMap; 4] = [
        ("m1", &|v| hex.m1(v)),
        ("m6", &|v| hex.m6(v)),
        ("m1m6", &|v| hex.m16(v)),
        ("rho", &|v| hex.rho_vertex(v)),
    ];
    let bad = vertices.par_iter().find_map_first(|v| {
        hex.neighbors(v).into_iter().find_map(|w| {
            maps.iter()
                .find(|(_, m)| !hex.adjacent(&m(v), &m(&w)))
                .map(|(name, _)| (*v, w, *name))
        })
    });
    if let Some((v, w, name)) = bad {
        return Outcome::fail(
            sampling.samples,
            format!("{name} breaks an edge"),
            json!([hex.word(&v), hex.word(&w)]),
        );
    }
    let incident = sampling.samples * (hex.field().order() as u64 + 1);
    Outcome::merge([
        Outcome::pass(incident),
        table_composition(hex, &vertices),
        omega_rho(hex, &vertices),
    ])
}

/// Over `GF(3)` the centralizer of `ρ` in `U₊` has exactly `q³` elements and
/// is the image of `φ`.
pub fn rho_centralizer(hex: &Hexagon, group: &ReeGroup) -> Outcome {
    let f = hex.field();
    let fixed: HashSet<UPlus<FieldElement>> = all_tuples(hex)
        .into_iter()
        .filter(|g| uplus::rho(f, g) == *g)
        .collect();
    let image: HashSet<UPlus<FieldElement>> = group.elements().map(|g| uplus::phi(f, &g)).collect();
    let scanned = (f.order() as u64).pow(6);
    if image.len() != group.order() {
        return Outcome::fail(scanned, "phi is not injective", json!(image.len()));
    }
    if fixed != image {
        return Outcome::fail(
            scanned,
            "centralizer of rho differs from the image of phi",
            json!({ "centralizer": fixed.len(), "image": image.len() }),
        );
    }
    Outcome::pass(scanned)
}

fn phi_pairs(
    group: &ReeGroup,
    sampling: &Sampling,
    stream: &str,
) -> Vec<(crate::group::UTriple, crate::group::UTriple)> {
    if group.field().order() == 3 {
        group
            .elements()
            .flat_map(|g| group.elements().map(move |h| (g, h)))
            .collect()
    } else {
        let n = group.order() as u64;
        let idx = Sampling {
            samples: 2 * sampling.samples,
            ..*sampling
        }
        .indices(stream, n);
        idx.chunks(2)
            .map(|c| (group.triple_at(c[0] as u32), group.triple_at(c[1] as u32)))
            .collect()
    }
}

fn phi_pair_scan(
    group: &ReeGroup,
    pairs: &[(crate::group::UTriple, crate::group::UTriple)],
    test: &(dyn Fn(
        &UPlus<FieldElement>,
        &UPlus<FieldElement>,
        &crate::group::UTriple,
        &crate::group::UTriple,
    ) -> Option<&'static str>
          + Sync),
) -> Outcome {
    let f = group.field();
    let bad = pairs.par_iter().find_map_first(|(g, h)| {
        test(&uplus::phi(f, g), &uplus::phi(f, h), g, h).map(|m| (*g, *h, m))
    });
    match bad {
        None => Outcome::pass(pairs.len() as u64),
        Some((g, h, msg)) => Outcome::fail(
            pairs.len() as u64,
            msg,
            json!([group.witness(&g), group.witness(&h)]),
        ),
    }
}

/// `φ` is an injective anti-homomorphism into the `ρ`-fixed points:
/// `φ(hg) = φ(g)φ(h)`. All pairs at `q = 3`, sampled otherwise.
pub fn phi_scan(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let f = group.field();
    let pairs = phi_pairs(group, sampling, "hexagon.phi");
    phi_pair_scan(group, &pairs, &|pg, ph, g, h| {
        if uplus::phi(f, &group.u_mul(h, g)) != uplus::mul(f, pg, ph) {
            Some("phi(hg) != phi(g)phi(h)")
        } else if uplus::rho(f, pg) != *pg {
            Some("rho does not fix phi(g)")
        } else if g != h && pg == ph {
            Some("phi is not injective")
        } else {
            None
        }
    })
}

/// `φ(gh) = φ(g)φ(h)` as stated. With `[a,b] = a⁻¹b⁻¹ab` the products come
/// out in reverse order, so any non-commuting pair is a counterexample.
pub fn phi_homomorphism_as_stated(group: &ReeGroup, sampling: &Sampling) -> Outcome {
    let f = group.field();
    let pairs = phi_pairs(group, sampling, "hexagon.phi_stated");
    phi_pair_scan(group, &pairs, &|pg, ph, g, h| {
        (uplus::phi(f, &group.u_mul(g, h)) != uplus::mul(f, pg, ph))
            .then_some("phi(gh) != phi(g)phi(h)")
    })
}

/// Associativity, identity and inverses in `U₊` on random tuples.
pub fn uplus_axioms(hex: &Hexagon, sampling: &Sampling) -> Outcome {
    let f = hex.field();
    let mut rng = sampling.rng("hexagon.uplus_axioms");
    let mut tuple = || -> UPlus<FieldElement> {
        std::array::from_fn(|_| f.element(rng.gen_range(0..f.order())).unwrap())
    };
    let triples: Vec<[UPlus<FieldElement>; 3]> = (0..sampling.samples)
        .map(|_| [tuple(), tuple(), tuple()])
        .collect();
    let e = uplus::identity(f);
    let bad = triples.par_iter().find_map_first(|[g, h, k]| {
        if hex.mul(&hex.mul(g, h), k) != hex.mul(g, &hex.mul(h, k)) {
            Some((*g, "(gh)k != g(hk)"))
        } else if hex.mul(g, &hex.inv(g)) != e
            || hex.mul(&hex.inv(g), g) != e
            || hex.mul(g, &e) != *g
        {
            Some((*g, "inverse or identity law fails"))
        } else {
            None
        }
    });
    match bad {
        None => Outcome::pass(triples.len() as u64),
        Some((g, msg)) => Outcome::fail(triples.len() as u64, msg, json!(g.map(|x| f.coeffs(x)))),
    }
}

/// `ω` by the closed formula and by `(m₁m₆)³` agree on every point of `X`
/// (for `q ≤ 27`; on a seeded sample beyond).
pub fn omega_cross_oracle(group: &ReeGroup, hex: &Hexagon, sampling: &Sampling) -> Outcome {
    let f = group.field();
    let points: Vec<MoufangPoint> = if f.order() <= crate::group::checks::EXHAUSTIVE_LIMIT {
        (0..group.order() + 1).map(|i| group.point_at(i)).collect()
    } else {
        let mut v = vec![MoufangPoint::Infinity, MoufangPoint::ZERO];
        v.extend(
            sampling
                .indices("hexagon.omega_cross_oracle", group.order() as u64)
                .into_iter()
                .map(|i| MoufangPoint::Finite(group.triple_at(i as u32))),
        );
        v
    };
    let bad = points.par_iter().find_map_first(|p| {
        let formula = group.omega_apply(p);
        let geometric = hex.omega_hex(p);
        match (&formula, &geometric) {
            (Ok(a), Ok(b)) if a == b => None,
            _ => Some((*p, formula, geometric)),
        }
    });
    match bad {
        None => Outcome::pass(points.len() as u64),
        Some((p, a, b)) => {
            let show = |r: &Result<MoufangPoint, _>| match r {
                Ok(x) => group.render_point(x),
                Err(e) => format!("{e}"),
            };
            Outcome::fail(
                points.len() as u64,
                "closed formula and hexagon disagree",
                json!({ "point": group.point_witness(&p), "formula": show(&a), "hexagon": show(&b) }),
            )
        }
    }
}

/// `q³ + 1` fixed edges, in bijection with `X` via `φ`.
///
/// With a built graph every edge is inspected. Otherwise each `g ∈ U` is
/// checked to give a distinct `ρ`-fixed edge, and with `scan` all of `W₅` is
/// searched for fixed edges as well.
pub fn fixed_edges(
    hex: &Hexagon,
    group: &ReeGroup,
    graph: Option<&HexGraph>,
    scan: bool,
) -> Outcome {
    let q = group.field().order() as u64;
    let expected = q.pow(3) + 1;
    if let Some(graph) = graph {
        let fixed = hex.fixed_edges_in(graph);
        let points: HashSet<MoufangPoint> = fixed
            .iter()
            .filter_map(|(x, y)| hex.edge_point(x, y))
            .collect();
        if fixed.len() as u64 != expected || points.len() as u64 != expected {
            return Outcome::fail(
                graph.edges().count() as u64,
                "fixed-edge count is not q^3 + 1",
                json!({ "fixed": fixed.len(), "decoded": points.len(), "expected": expected }),
            );
        }
        return Outcome::pass(graph.edges().count() as u64);
    }
    let points: Vec<MoufangPoint> = (0..group.order() + 1).map(|i| group.point_at(i)).collect();
    let bad = points.par_iter().find_first(|p| {
        let (x, y) = hex.x_edge(p);
        !hex.adjacent(&x, &y) || hex.rho_vertex(&x) != y || hex.edge_point(&x, &y) != Some(**p)
    });
    if let Some(p) = bad {
        return Outcome::fail(
            points.len() as u64,
            "point does not give a rho-fixed edge",
            group.point_witness(p),
        );
    }
    let distinct: HashSet<HexVertex> = points.par_iter().map(|p| hex.x_edge(p).0).collect();
    if distinct.len() as u64 != expected {
        return Outcome::fail(
            points.len() as u64,
            "distinct points share an edge",
            json!(distinct.len()),
        );
    }
    if scan {
        let (count, bad) = hex.scan_fixed_edges();
        if let Some(v) = bad {
            return Outcome::fail(
                q.pow(5),
                "fixed edge outside the image of phi",
                hex.vertex_witness(&v),
            );
        }
        if count + 1 != expected {
            return Outcome::fail(
                q.pow(5),
                "fixed-edge count is not q^3 + 1",
                json!({ "found": count + 1, "expected": expected }),
            );
        }
        return Outcome::pass(points.len() as u64 + q.pow(5));
    }
    Outcome::pass(points.len() as u64)
}
