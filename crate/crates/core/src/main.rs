use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use ree_core::field::{make_field, FieldContext};
use ree_core::group::{MoufangPoint, ReeGroup, Triple, UTriple};
use ree_core::hexagon::checks::graph_axioms;
use ree_core::hexagon::graph::HexGraph;
use ree_core::hexagon::Hexagon;
use ree_core::sampling::Sampling;
use ree_core::verify::{self, closure, Side, SuiteConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Ree groups of type 2G2 in characteristic 3.
///
/// Field elements are written as `c0:c1:...` (polynomial-basis coefficients,
/// constant first) or as a base-3 index. `norm` and `omega` take the field
/// degree `m`; `verify`, `hexagon` and `closure` take the order `q = 3^m`.
#[derive(Parser)]
#[command(name = "ree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite.
    Verify {
        /// Field orders to run the per-field suites on.
        #[arg(long, value_delimiter = ',', default_value = "3,27")]
        fields: Vec<u32>,
        /// Add the q = 243 anisotropy scan, the q = 27 pair orbit and the W5 scan.
        #[arg(long)]
        slow: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print N(a,b,c), v and u.
    Norm {
        /// `A,B,C` or three separate coordinates.
        #[arg(num_args = 1..=3, required = true)]
        coords: Vec<String>,
        /// Field degree m (q = 3^m).
        #[arg(long)]
        field: u32,
    },
    /// Apply omega to a point of X (`inf` for the point at infinity).
    Omega {
        #[arg(num_args = 1..=3, required = true)]
        coords: Vec<String>,
        /// Field degree m (q = 3^m).
        #[arg(long)]
        field: u32,
        #[arg(long, value_enum, default_value_t = Via::Formula)]
        via: Via,
    },
    /// Build the hexagon, check its axioms, optionally export adjacency lists.
    Hexagon {
        /// Field order q.
        #[arg(long, default_value_t = 3)]
        field: u32,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Order of the permutation group generated by omega, U and the torus.
    Closure {
        /// Field order q.
        #[arg(long, default_value_t = 3)]
        field: u32,
        /// Side on which U multiplies. `right` is the action as usually
        /// written; it generates far more than the Ree group.
        #[arg(long, default_value = "left")]
        translations: Side,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Formula,
    Hexagon,
}

enum Failure {
    Usage(String),
    Check(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(EXIT_FAIL)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn field_of_degree(m: u32) -> Result<Arc<FieldContext>, Failure> {
    make_field(m)
        .map(Arc::new)
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn field_of_order(q: u32) -> Result<Arc<FieldContext>, Failure> {
    let m = verify::degree_of_order(q).ok_or_else(|| {
        Failure::Usage(format!(
            "unsupported field order {q}; use one of 3, 27, 243, 2187"
        ))
    })?;
    field_of_degree(m)
}

/// One argument `A,B,C`, or three arguments each a single element (whose
/// coefficients may then also be separated by commas).
fn parse_point(group: &ReeGroup, coords: &[String]) -> Result<MoufangPoint, Failure> {
    let usage = |e: String| Failure::Usage(e);
    match coords {
        [one] => group.parse_point(one).map_err(usage),
        [a, b, c] => {
            let f = group.field();
            let el = |s: &String| f.parse(&s.replace(',', ":")).map_err(usage);
            Ok(MoufangPoint::Finite(Triple::new(el(a)?, el(b)?, el(c)?)))
        }
        _ => Err(Failure::Usage("expected A,B,C or three coordinates".into())),
    }
}

fn finite(p: MoufangPoint) -> Result<UTriple, Failure> {
    match p {
        MoufangPoint::Finite(g) => Ok(g),
        MoufangPoint::Infinity => Err(Failure::Usage(
            "the norm is defined on U, not at infinity".into(),
        )),
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Verify {
            fields,
            slow,
            seed,
            samples,
            json,
        } => {
            for &q in &fields {
                field_of_order(q)?;
            }
            if samples == 0 {
                return Err(Failure::Usage("--samples must be positive".into()));
            }
            let config = SuiteConfig {
                fields,
                sampling: Sampling { seed, samples },
                slow,
                mutation: None,
            };
            let report = verify::run_suite(&config);
            for c in report.checks() {
                println!("{}", c.summary_line());
            }
            let failed = report.failures().count();
            println!("{} checks, {} failed", report.checks().len(), failed);
            if let Some(path) = json {
                let text =
                    serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
                if path.as_os_str() == "-" {
                    println!("{text}");
                } else {
                    std::fs::write(&path, text + "\n")
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check(String::new()))
            }
        }
        Command::Norm { coords, field } => {
            let group = ReeGroup::new(field_of_degree(field)?);
            let g = finite(parse_point(&group, &coords)?)?;
            let aux = group.aux_uvw(&g);
            let f = group.field();
            println!(
                "N={} v={} u={}",
                f.render(aux.w),
                f.render(aux.v),
                f.render(aux.u)
            );
            Ok(())
        }
        Command::Omega { coords, field, via } => {
            let field = field_of_degree(field)?;
            let group = ReeGroup::new(field.clone());
            let p = parse_point(&group, &coords)?;
            let image = match via {
                Via::Formula => group.omega_apply(&p),
                Via::Hexagon => Hexagon::new(field).omega_hex(&p),
            };
            let image = image.map_err(|e| Failure::Check(e.to_string()))?;
            println!("{}", group.render_point(&image));
            Ok(())
        }
        Command::Hexagon { field, export } => {
            let hex = Hexagon::new(field_of_order(field)?);
            let graph = HexGraph::build(&hex).map_err(|e| Failure::Usage(e.to_string()))?;
            let s = graph.stats();
            println!(
                "vertices={} edges={} sides={}+{} degree={} girth={} diameter={}",
                s.vertices,
                s.edges,
                s.sides.0,
                s.sides.1,
                show(s.degree),
                show(s.girth),
                show(s.diameter)
            );
            if let Some(path) = export {
                std::fs::write(&path, graph.export(&hex))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let o = graph_axioms(&hex, &graph);
            match o.failure {
                None => Ok(()),
                Some(f) => Err(Failure::Check(format!("{}: {}", f.message, f.witness))),
            }
        }
        Command::Closure {
            field,
            translations,
        } => {
            if field != 3 {
                return Err(Failure::Usage("closure is only run at q = 3".into()));
            }
            let group = ReeGroup::new(field_of_order(field)?);
            let expected = 1512;
            match closure::closure_data(&group, translations, 4 * expected) {
                Err(e) => Err(Failure::Check(e.to_string())),
                Ok(None) => {
                    println!("order>{} derived=?", 4 * expected);
                    Err(Failure::Check(format!(
                        "closure stopped past {} elements; expected {expected}",
                        4 * expected
                    )))
                }
                Ok(Some(d)) => {
                    println!("order={} derived={}", d.order, d.derived);
                    if closure::closure_check(&group, translations).is_pass() {
                        Ok(())
                    } else {
                        Err(Failure::Check(format!("{d:?}")))
                    }
                }
            }
        }
    }
}

fn show(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}
