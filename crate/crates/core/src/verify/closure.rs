//! The permutation group generated by `ω`, the translations of `U` and the
//! torus, as a subgroup of `Sym(X)`.
//!
//! Points of `X` are numbered as in [`ReeGroup::point_index`]: `∞` first, then
//! triples in lexicographic order.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde_json::json;

use crate::error::InvariantViolation;
use crate::field::FieldElement;
use crate::group::{MoufangPoint, ReeGroup, TorusElement, Triple};
use crate::report::Outcome;

/// A permutation of `X`, acting on the right: `x^(pq) = (x^p)^q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.0)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// Validates that `images` is a bijection of `0..n`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if std::mem::replace(slot, true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }
}

/// The permutation of `X` induced by a point map.
pub fn point_permutation(
    group: &ReeGroup,
    map: impl Fn(&MoufangPoint) -> Result<MoufangPoint, InvariantViolation>,
) -> Result<Permutation, InvariantViolation> {
    let n = group.order() + 1;
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        images.push(group.point_index(&map(&group.point_at(i))?) as u32);
    }
    Permutation::from_images(images).ok_or_else(|| {
        InvariantViolation::new(
            "point map is not a bijection of X",
            format!("q = {}", group.field().order()),
        )
    })
}

pub fn omega_permutation(group: &ReeGroup) -> Result<Permutation, InvariantViolation> {
    point_permutation(group, |p| group.omega_apply(p))
}

/// Which side `U` multiplies on when acting on `X ∖ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `x ↦ x·g`, the action as stated.
    Right,
    /// `x ↦ g·x`.
    Left,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => Err(format!("expected right or left, got {s:?}")),
        }
    }
}

pub fn translation(group: &ReeGroup, side: Side, g: &Triple<FieldElement>) -> Permutation {
    point_permutation(group, |p| {
        Ok(match (side, p) {
            (Side::Right, _) => group.translate(p, g),
            (Side::Left, MoufangPoint::Finite(x)) => MoufangPoint::Finite(group.u_mul(g, x)),
            (Side::Left, MoufangPoint::Infinity) => MoufangPoint::Infinity,
        })
    })
    .expect("translations are bijections")
}

pub fn torus(group: &ReeGroup, t: TorusElement) -> Permutation {
    point_permutation(group, |p| Ok(group.torus_point(t, p)))
        .expect("torus elements are bijections")
}

/// Every element of `⟨gens⟩`, by breadth-first search from the identity.
/// Gives up (returning `None`) past `limit` elements.
pub fn closure(n: usize, gens: &[Permutation], limit: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Some(order)
}

/// `[G, G]`, closed from the distinct commutators of all pairs.
pub fn derived_subgroup(elements: &[Permutation]) -> Vec<Permutation> {
    let n = elements.first().map_or(0, Permutation::len);
    let mut comms: HashSet<Permutation> = HashSet::new();
    for x in elements {
        let xi = x.inverse();
        for y in elements {
            let c = xi.then(&y.inverse()).then(x).then(y);
            if !c.is_identity() {
                comms.insert(c);
            }
        }
    }
    let mut gens: Vec<Permutation> = comms.into_iter().collect();
    gens.sort_by(|a, b| a.0.cmp(&b.0));
    closure(n, &gens, elements.len()).expect("a subgroup is no larger than the group")
}

/// What the closure run at `q = 3` found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureData {
    pub order: usize,
    pub derived: usize,
    /// `|G_∞|`, the stabilizer of `∞`.
    pub stabilizer: usize,
    /// `|BωB|` with `B = G_∞`.
    pub double_coset: usize,
    /// Order of `⟨U, ω⟩` without the torus generator.
    pub without_torus: usize,
}

pub struct Generators {
    pub omega: Permutation,
    pub translations: Vec<Permutation>,
    pub torus: Permutation,
}

/// `ω`, the translations by every nonidentity element of `U`, and `h_t` for
/// `t` the field generator.
pub fn generators(group: &ReeGroup, side: Side) -> Result<Generators, InvariantViolation> {
    let f = group.field();
    let t = TorusElement::new(f.generator()).expect("generator is nonzero");
    Ok(Generators {
        omega: omega_permutation(group)?,
        translations: group
            .elements()
            .skip(1)
            .map(|g| translation(group, side, &g))
            .collect(),
        torus: torus(group, t),
    })
}

/// Closure, derived subgroup and the Bruhat decomposition `G = B ∪ BωB`.
/// Returns `None` if the closure exceeds `limit` elements.
pub fn closure_data(
    group: &ReeGroup,
    side: Side,
    limit: usize,
) -> Result<Option<ClosureData>, InvariantViolation> {
    let gens = generators(group, side)?;
    let n = group.order() + 1;
    let mut all = gens.translations.clone();
    all.push(gens.omega.clone());
    let Some(without) = closure(n, &all, limit) else {
        return Ok(None);
    };
    all.push(gens.torus.clone());
    let Some(elements) = closure(n, &all, limit) else {
        return Ok(None);
    };
    let derived = derived_subgroup(&elements);
    let b: Vec<&Permutation> = elements.iter().filter(|p| p.apply(0) == 0).collect();
    let mut double: HashSet<Permutation> = HashSet::new();
    for x in &b {
        let xw = x.then(&gens.omega);
        for y in &b {
            double.insert(xw.then(y));
        }
    }
    let bset: HashSet<&Permutation> = b.iter().copied().collect();
    let disjoint = double.iter().all(|p| !bset.contains(p));
    Ok(Some(ClosureData {
        order: elements.len(),
        derived: derived.len(),
        stabilizer: b.len(),
        double_coset: if disjoint { double.len() } else { 0 },
        without_torus: without.len(),
    }))
}

/// Order of `⟨U, ω, h⟩`: `q³(q³+1)(q-1)`, with derived subgroup of index 3,
/// `|G_∞| = q³(q-1)`, `|BωB| = |G| - |B|`, and `⟨U, ω⟩` already everything.
///
/// With [`Side::Right`] and the closed formula for `ω` the generated group is
/// far larger (at `q = 3` it is all of `Alt(X)`), and the closure gives up
/// at four times the expected order.
pub fn closure_check(group: &ReeGroup, side: Side) -> Outcome {
    let q = group.field().order() as usize;
    let expected = q.pow(3) * (q.pow(3) + 1) * (q - 1);
    let data = match closure_data(group, side, 4 * expected) {
        Err(e) => return Outcome::fail(0, e.what.clone(), json!(e.witness)),
        Ok(None) => {
            return Outcome::fail(
                4 * expected as u64,
                "closure exceeds four times the expected order",
                json!({ "expected": expected }),
            )
        }
        Ok(Some(d)) => d,
    };
    let b = q.pow(3) * (q - 1);
    let witness = json!({
        "order": data.order, "derived": data.derived, "stabilizer": data.stabilizer,
        "double_coset": data.double_coset, "without_torus": data.without_torus, "expected": expected,
    });
    let checks = [
        (
            data.order == expected,
            "group order differs from q^3 (q^3 + 1)(q - 1)",
        ),
        (
            data.derived * 3 == data.order,
            "derived subgroup does not have index 3",
        ),
        (
            data.stabilizer == b,
            "stabilizer of infinity differs from |U||H|",
        ),
        (
            data.double_coset + data.stabilizer == data.order,
            "G is not B ∪ BωB as a disjoint union",
        ),
        (
            data.without_torus == data.order,
            "<U, omega> without the torus is a proper subgroup",
        ),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        None => Outcome::pass(data.order as u64),
        Some((_, msg)) => Outcome::fail(data.order as u64, *msg, witness),
    }
}

/// A small generating set: `ω`, `h_t`, and translations by `(e, 0, 0)` for
/// `e` running over the polynomial basis.
pub fn small_generators(
    group: &ReeGroup,
    side: Side,
) -> Result<Vec<Permutation>, InvariantViolation> {
    let f = group.field();
    let t = TorusElement::new(f.generator()).expect("generator is nonzero");
    let mut gens = vec![omega_permutation(group)?, torus(group, t)];
    for k in 0..f.degree() {
        let e = f.element(3u32.pow(k)).expect("basis element");
        gens.push(translation(
            group,
            side,
            &Triple::new(e, FieldElement::ZERO, FieldElement::ZERO),
        ));
    }
    Ok(gens)
}

/// Size of the orbit of the ordered pair `(∞, 0)` under `gens`.
///
/// Pairs are numbered `x·n + y`. The visited set and the two BFS frontiers
/// are bitsets, so the memory is three bits per ordered pair.
pub fn pair_orbit(n: usize, gens: &[Permutation], start: (u32, u32)) -> u64 {
    let total = n * n;
    let words = total.div_ceil(64);
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let set = |bits: &mut [u64], i: usize| -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = bits[w] & b == 0;
        bits[w] |= b;
        fresh
    };
    let s = start.0 as usize * n + start.1 as usize;
    set(&mut seen, s);
    set(&mut frontier, s);
    let mut count = 1u64;
    loop {
        let mut next = vec![0u64; words];
        let mut grew = false;
        for (w, &word) in frontier.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let i = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (x, y) = (i / n, i % n);
                for g in gens {
                    let j = g.apply(x as u32) as usize * n + g.apply(y as u32) as usize;
                    if set(&mut seen, j) {
                        set(&mut next, j);
                        count += 1;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return count;
        }
        frontier = next;
    }
}

/// `G` is 2-transitive on `X`: the orbit of `(∞, 0)` is every ordered pair
/// of distinct points.
pub fn two_transitivity(group: &ReeGroup, side: Side) -> Outcome {
    let n = group.order() + 1;
    let expected = (n * (n - 1)) as u64;
    let gens = match small_generators(group, side) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(0, e.what.clone(), json!(e.witness)),
    };
    let orbit = pair_orbit(n, &gens, (0, 1));
    if orbit == expected {
        Outcome::pass(orbit)
    } else {
        Outcome::fail(
            orbit,
            "orbit of (inf, 0) misses some ordered pairs",
            json!({ "orbit": orbit, "pairs": expected }),
        )
    }
}
