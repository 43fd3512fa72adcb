//! The full verification suite and its configuration.

pub mod closure;
pub mod selfcheck;

pub use closure::Side;

use std::fmt;
use std::sync::Arc;

use crate::field::{make_field, FieldContext};
use crate::group::{self, FormulaSite, ReeGroup, ReeLaw};
use crate::hexagon::graph::HexGraph;
use crate::hexagon::{Hexagon, TableMutation};
use crate::report::{run_check, CheckRecord, CheckReport, Outcome, RunConfig};
use crate::sampling::Sampling;

pub const SUITE_NAME: &str = "ree-verify";

/// Field orders the suite accepts.
pub const SUPPORTED_ORDERS: [u32; 4] = [3, 27, 243, 2187];

/// A single deliberate corruption, for checking that the suite notices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    Formula(FormulaSite),
    Table(TableMutation),
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mutation::Formula(s) => write!(f, "formula {s}"),
            Mutation::Table(t) => write!(f, "table {t}"),
        }
    }
}

impl Mutation {
    /// Every formula coefficient, then every table row.
    pub fn all() -> Vec<Mutation> {
        let mut out: Vec<Mutation> = FormulaSite::all()
            .into_iter()
            .map(Mutation::Formula)
            .collect();
        out.extend(TableMutation::all().into_iter().map(Mutation::Table));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Field orders `q` for the per-field suites.
    pub fields: Vec<u32>,
    pub sampling: Sampling,
    /// Adds the `q = 243` anisotropy scan, the `q = 27` pair orbit and the
    /// full fixed-edge scan over `W₅`.
    pub slow: bool,
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            fields: vec![3, 27],
            sampling: Sampling::default(),
            slow: false,
            mutation: None,
        }
    }
}

/// `q = 3^m` to `m`, for the supported orders only.
pub fn degree_of_order(q: u32) -> Option<u32> {
    SUPPORTED_ORDERS.contains(&q).then(|| q.ilog(3))
}

struct Ctx {
    config: SuiteConfig,
    law: ReeLaw,
    table: Option<TableMutation>,
    records: Vec<CheckRecord>,
}

impl Ctx {
    fn run(&mut self, id: &str, anchor: &str, field: Option<u32>, f: impl FnOnce() -> Outcome) {
        self.records.push(run_check(id, anchor, field, f));
    }

    fn group(&self, field: &Arc<FieldContext>) -> ReeGroup {
        ReeGroup::with_law(field.clone(), self.law.clone())
    }

    fn hexagon(&self, field: &Arc<FieldContext>) -> Hexagon {
        match self.table {
            Some(m) => Hexagon::with_mutation(field.clone(), m),
            None => Hexagon::new(field.clone()),
        }
    }
}

/// Run everything, in order: field and polynomial self-checks, symbolic
/// identities, per-field numeric suites, the hexagon at `q = 3`, and the
/// permutation group at `q = 3`.
///
/// Panics on an unsupported field order; validate with [`degree_of_order`].
pub fn run_suite(config: &SuiteConfig) -> CheckReport {
    let (law, table) = match config.mutation {
        Some(Mutation::Formula(site)) => (ReeLaw::perturbed(site), None),
        Some(Mutation::Table(t)) => (ReeLaw::standard(), Some(t)),
        None => (ReeLaw::standard(), None),
    };
    let mut ctx = Ctx {
        config: config.clone(),
        law,
        table,
        records: Vec::new(),
    };
    let mut orders = config.fields.clone();
    orders.sort_unstable();
    orders.dedup();
    let fields: Vec<(u32, Arc<FieldContext>)> = orders
        .iter()
        .map(|&q| {
            let m = degree_of_order(q).unwrap_or_else(|| panic!("unsupported field order {q}"));
            (q, Arc::new(make_field(m).expect("supported degree")))
        })
        .collect();
    let gf3 = Arc::new(make_field(1).expect("GF(3)"));

    field_section(&mut ctx, &fields);
    symbolic_section(&mut ctx);
    let graph = HexGraph::build(&ctx.hexagon(&gf3)).expect("the q = 3 hexagon is small");
    for (q, field) in &fields {
        numeric_section(&mut ctx, *q, field, (*q == 3).then_some(&graph));
    }
    if config.slow && !orders.contains(&243) {
        let field = Arc::new(make_field(5).expect("GF(243)"));
        let g = ctx.group(&field);
        ctx.run(
            "u.anisotropy",
            "N vanishes only at the identity",
            Some(243),
            || group::checks::anisotropy(&g),
        );
    }
    hexagon_section(&mut ctx, &gf3, &graph);
    closure_section(&mut ctx, &gf3);

    let run = RunConfig {
        fields: orders,
        seed: config.sampling.seed,
        samples: config.sampling.samples,
        slow: config.slow,
        mutation: config.mutation.map(|m| m.to_string()),
    };
    CheckReport::new(SUITE_NAME, run, ctx.records)
}

fn field_section(ctx: &mut Ctx, fields: &[(u32, Arc<FieldContext>)]) {
    let s = ctx.config.sampling;
    for (q, f) in fields {
        let q = Some(*q);
        ctx.run(
            "field.modulus",
            "irreducible modulus and theta exponent",
            q,
            || selfcheck::field_modulus(f),
        );
        ctx.run(
            "field.theta",
            "theta(theta(x)) = x^3, theta a ring endomorphism",
            q,
            || selfcheck::field_theta(f, &s),
        );
        ctx.run(
            "field.arithmetic",
            "table products and two inverse routes",
            q,
            || selfcheck::field_arithmetic(f, &s),
        );
        ctx.run(
            "field.exponents",
            "x^(2+theta) and x^(2-theta) inverse, Frobenius onto",
            q,
            || selfcheck::field_exponents(f),
        );
        ctx.run(
            "poly.laws",
            "canonical form, theta laws, evaluation",
            q,
            || selfcheck::poly_laws(f, &s),
        );
    }
}

fn symbolic_section(ctx: &mut Ctx) {
    use crate::group::symbolic as g;
    use crate::hexagon::symbolic as h;
    let law = ctx.law.clone();
    ctx.run(
        "symbolic.associativity",
        "associativity of the product on U",
        None,
        || g::associativity(&law),
    );
    ctx.run("symbolic.inverse", "inverse law", None, || g::inverse(&law));
    ctx.run(
        "symbolic.torus_automorphism",
        "h_t is an automorphism of U",
        None,
        || g::torus_automorphism(&law),
    );
    ctx.run(
        "symbolic.curious_identity",
        "w = av + bu + c^2",
        None,
        || g::curious_identity(&law),
    );
    ctx.run(
        "symbolic.norm_of_omega",
        "N(Omega(g)) = N(g)^(2theta+3)",
        None,
        || g::norm_of_omega_big(&law),
    );
    ctx.run(
        "symbolic.torus_degrees",
        "N(t.g) = t^(2theta+4) N(g)",
        None,
        || g::torus_degrees(&law),
    );
    ctx.run("symbolic.norm_of_inverse", "N(g^-1) = N(g)", None, || {
        g::norm_of_inverse(&law)
    });
    ctx.run(
        "symbolic.torus_commutators",
        "commutators of h_t with the coordinate subgroups",
        None,
        || g::torus_commutators(&law),
    );
    ctx.run(
        "symbolic.collection",
        "collection reproduces the commutator relations",
        None,
        h::collection_commutators,
    );
    ctx.run(
        "symbolic.torus_lift",
        "the lift of h_t preserves the commutator relations",
        None,
        h::torus_lift_relations,
    );
    ctx.run(
        "symbolic.phi_torus",
        "phi intertwines h_t and its lift",
        None,
        || h::phi_intertwines_torus(&law),
    );
    ctx.run(
        "symbolic.phi_reverses_products",
        "phi(hg) = phi(g) phi(h)",
        None,
        || h::phi_reverses_products(&law),
    );
    ctx.run(
        "symbolic.phi_homomorphism",
        "phi(gh) = phi(g) phi(h) as stated",
        None,
        || h::phi_homomorphism(&law),
    );
    ctx.run(
        "symbolic.phi_rho_fixed",
        "rho fixes the image of phi",
        None,
        h::phi_image_is_rho_fixed,
    );
}

fn numeric_section(ctx: &mut Ctx, q: u32, field: &Arc<FieldContext>, graph: Option<&HexGraph>) {
    use crate::group::checks as g;
    use crate::hexagon::checks as h;
    let s = ctx.config.sampling;
    let slow = ctx.config.slow;
    let grp = ctx.group(field);
    let hex = ctx.hexagon(field);
    let f = Some(q);
    ctx.run("u.anisotropy", "N vanishes only at the identity", f, || {
        g::anisotropy(&grp)
    });
    ctx.run(
        "u.associativity",
        "associativity of the product on U",
        f,
        || g::associativity(&grp, &s),
    );
    ctx.run("u.inverses", "inverse law", f, || g::inverses(&grp, &s));
    ctx.run(
        "u.regular_action",
        "U regular on X minus infinity",
        f,
        || g::regular_action(&grp, &s),
    );
    ctx.run(
        "norm.identities",
        "w = av + bu + c^2 and N(Omega(g))",
        f,
        || g::norm_identities(&grp, &s),
    );
    ctx.run("norm.subgroup", "norms generate K*", f, || {
        g::norm_subgroup(&grp)
    });
    ctx.run("omega.involution", "omega^2 = 1", f, || {
        g::omega_involution(&grp, &s)
    });
    ctx.run(
        "omega.equivariance",
        "omega(t.g) = t^-1 . omega(g)",
        f,
        || g::equivariance(&grp, &s),
    );
    ctx.run(
        "omega.derivation",
        "hat, tilde and double-dot identities of the omega computation",
        f,
        || g::omega_derivation(&grp),
    );
    ctx.run(
        "uplus.axioms",
        "U+ is a group and rho an automorphism",
        f,
        || h::uplus_axioms(&hex, &s),
    );
    ctx.run(
        "phi.anti_homomorphism",
        "phi injective, rho-fixed, phi(hg) = phi(g) phi(h)",
        f,
        || h::phi_scan(&grp, &s),
    );
    ctx.run(
        "phi.homomorphism",
        "phi(gh) = phi(g) phi(h) as stated",
        f,
        || h::phi_homomorphism_as_stated(&grp, &s),
    );
    if graph.is_none() {
        ctx.run(
            "hexagon.sampled_tables",
            "tables preserve edges, compose, omega and rho commute",
            f,
            || h::sampled_tables(&hex, &s),
        );
    }
    ctx.run(
        "moufang.fixed_edges",
        "q^3 + 1 rho-fixed edges, the image of phi",
        f,
        || h::fixed_edges(&hex, &grp, graph, slow && graph.is_none()),
    );
    ctx.run(
        "omega.cross_oracle",
        "closed formula for omega agrees with (m1 m6)^3",
        f,
        || h::omega_cross_oracle(&grp, &hex, &s),
    );
    if slow && q == 27 {
        ctx.run(
            "closure.two_transitivity",
            "orbit of (inf, 0) is every ordered pair",
            f,
            || closure::two_transitivity(&grp, Side::Left),
        );
    }
}

fn hexagon_section(ctx: &mut Ctx, field: &Arc<FieldContext>, graph: &HexGraph) {
    use crate::hexagon::checks as h;
    let hex = ctx.hexagon(field);
    let grp = ctx.group(field);
    let f = Some(3);
    ctx.run(
        "hexagon.axioms",
        "bipartite, (q+1)-regular, girth 12, diameter 6",
        f,
        || h::graph_axioms(&hex, graph),
    );
    ctx.run(
        "hexagon.coset_oracle",
        "edges are the nonempty coset intersections",
        f,
        || h::coset_oracle(&hex, graph),
    );
    ctx.run(
        "hexagon.automorphisms",
        "m1, m6, m1m6 and rho preserve every edge",
        f,
        || h::table_automorphisms(&hex, graph),
    );
    ctx.run(
        "hexagon.composition",
        "the m1m6 table is m1 followed by m6",
        f,
        || h::table_composition(&hex, &graph.vertices),
    );
    ctx.run(
        "hexagon.omega_rho",
        "omega and rho are commuting involutions",
        f,
        || h::omega_rho(&hex, &graph.vertices),
    );
    ctx.run(
        "hexagon.special_values",
        "reflections fix their apartment and the worked values",
        f,
        || h::special_values(&hex),
    );
    ctx.run(
        "hexagon.m6_on_w10",
        "(U26 x1(t))^m6 = U14 x5(t) by the table",
        f,
        || h::m6_on_class10_by_table(&hex),
    );
    ctx.run(
        "hexagon.m6_on_w10_as_stated",
        "(U26 x1(t))^m6 = U14 x5(-t) as stated",
        f,
        || h::m6_on_class10_as_stated(&hex),
    );
    ctx.run(
        "hexagon.rho_centralizer",
        "centralizer of rho in U+ is the image of phi",
        f,
        || h::rho_centralizer(&hex, &grp),
    );
}

fn closure_section(ctx: &mut Ctx, field: &Arc<FieldContext>) {
    let grp = ctx.group(field);
    let f = Some(3);
    ctx.run(
        "closure.order",
        "|<U, omega, h>| = q^3 (q^3+1)(q-1) with U acting on the right",
        f,
        || closure::closure_check(&grp, Side::Right),
    );
    ctx.run(
        "closure.order_left",
        "the same with U acting on the left: order, derived index 3, G = B u BwB",
        f,
        || closure::closure_check(&grp, Side::Left),
    );
    ctx.run(
        "closure.two_transitivity",
        "orbit of (inf, 0) is every ordered pair",
        f,
        || closure::two_transitivity(&grp, Side::Left),
    );
}
