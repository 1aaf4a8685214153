//! Command-line surface. Every invocation prints one JSON envelope on
//! stdout (deterministic key order, counts as decimal strings, matchings as
//! canonical literals) and a short human-readable summary on stderr; the
//! `export-dot` subcommand emits raw DOT instead. Exit codes: 0 on success
//! and passing verifications, 1 on usage or resource errors, 2 on
//! verification failures.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::geodesics::{
    count_cycle_factorizations, cycle_geodesics_closed, cycle_geodesics_recurrence,
    cycle_geodesics_weighted, enumerate_geodesics, geodesic_count, labeled_tree_count,
    DEFAULT_GEODESIC_CAP,
};
use crate::graph::MatchingGraph;
use crate::matching::{Matching, DEFAULT_ENUM_CAP};
use crate::metric::{antipode_count, antipodes, distance};
use crate::noncrossing::{
    boundary_pair, catalan, is_noncrossing, noncrossing_geodesic_count, verify_unique_maximal_pair,
};
use crate::verify::run_suite;

/// Largest `m` for which the graph is materialized unless `MATCHGEO_MAX_M`
/// overrides it.
pub const DEFAULT_MAX_GRAPH_M: usize = 6;

#[derive(Parser)]
#[command(
    name = "matchgeo",
    version,
    about = "Distances, geodesic counts and enumeration in the flip graph of perfect matchings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two matchings and the cycle decomposition of their union
    Dist {
        /// Number of edges per matching; checked against the literals
        #[arg(long)]
        m: Option<u64>,
        /// First matching literal, e.g. 1-2,3-4
        #[arg(long)]
        a: String,
        /// Second matching literal
        #[arg(long)]
        b: String,
    },
    /// Exact geodesic count between two matchings with the cycle profile
    Count {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// List every geodesic between two matchings
    Enumerate {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Refuse when the closed-form count exceeds this many paths
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Antipodes of a matching: partners whose union with it is one cycle
    Antipodes {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        a: String,
        /// Report the count only, skipping the listing
        #[arg(long)]
        count_only: bool,
    },
    /// Geodesic count across a single alternating cycle with k matched pairs
    P2k {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Which of the four equivalent routes to evaluate
        #[arg(long, value_enum, default_value_t = P2kMethod::Closed)]
        method: P2kMethod,
    },
    /// Count factorizations of a full n-cycle into n-1 transpositions
    Hurwitz {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Operations restricted to non-crossing matchings
    Noncross {
        #[command(subcommand)]
        command: NoncrossCommand,
    },
    /// Brute-force verification suites
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Render the flip graph (or its non-crossing subgraph) as DOT
    ExportDot {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Restrict to the induced subgraph of non-crossing matchings
        #[arg(long)]
        noncrossing: bool,
    },
}

#[derive(Subcommand)]
enum NoncrossCommand {
    /// Sweep all non-crossing pairs for the unique maximal geodesic count
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
    },
    /// Geodesics between two non-crossing matchings staying non-crossing
    Count {
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        cap: Option<u64>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Run the full oracle suite for one size
    All {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum P2kMethod {
    Recurrence,
    Weighted,
    Closed,
    Trees,
}

impl P2kMethod {
    fn name(self) -> &'static str {
        match self {
            P2kMethod::Recurrence => "recurrence",
            P2kMethod::Weighted => "weighted",
            P2kMethod::Closed => "closed",
            P2kMethod::Trees => "trees",
        }
    }
}

#[derive(Serialize)]
struct Envelope {
    command: String,
    parameters: BTreeMap<String, String>,
    result: Value,
    exact: bool,
}

struct Outcome {
    stdout: String,
    human: Vec<String>,
    code: i32,
}

impl Outcome {
    fn envelope_with_code(
        command: &str,
        parameters: BTreeMap<String, String>,
        result: Value,
        code: i32,
        human: Vec<String>,
    ) -> Outcome {
        let env = Envelope {
            command: command.to_string(),
            parameters,
            result,
            exact: true,
        };
        let mut stdout =
            serde_json::to_string_pretty(&env).expect("envelope serialization cannot fail");
        stdout.push('\n');
        Outcome {
            stdout,
            human,
            code,
        }
    }
}

/// Runs the command line against explicit output streams and returns the
/// exit code.
pub fn run_captured<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv =
        std::iter::once("matchgeo".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 1;
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            for line in &outcome.human {
                let _ = writeln!(err, "{line}");
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs the command line against the process streams.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_captured(args, &mut stdout.lock(), &mut stderr.lock())
}

fn parse_matching(literal: &str, m: Option<u64>) -> Result<Matching, Error> {
    let parsed: Matching = literal.parse()?;
    if let Some(m) = m {
        if parsed.m() as u64 != m {
            return Err(Error::WrongEdgeCount {
                expected: m as usize,
                got: parsed.m(),
            });
        }
    }
    Ok(parsed)
}

fn max_graph_m() -> usize {
    std::env::var("MATCHGEO_MAX_M")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_GRAPH_M)
}

fn check_materialization(m: usize) -> Result<(), Error> {
    let cap = max_graph_m();
    if m > cap {
        return Err(Error::ResourceLimit {
            what: "graph materialization m (set MATCHGEO_MAX_M to raise)",
            needed: BigUint::from(m),
            cap: cap as u64,
        });
    }
    Ok(())
}

fn cycles_json(a: &Matching, b: &Matching) -> Result<(Value, usize, usize), Error> {
    let dec = a.decompose_union(b)?;
    let cycles: Vec<Value> = dec
        .cycles()
        .iter()
        .map(|c| Value::from(c.vertices().to_vec()))
        .collect();
    let l = dec.cycle_count();
    let d = a.m() - l;
    Ok((Value::from(cycles), l, d))
}

fn execute(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Dist { m, a, b } => {
            let a = parse_matching(&a, m)?;
            let b = parse_matching(&b, m)?;
            let (cycles, l, d) = cycles_json(&a, &b)?;
            let params = BTreeMap::from([
                ("a".to_string(), a.to_string()),
                ("b".to_string(), b.to_string()),
                ("m".to_string(), a.m().to_string()),
            ]);
            let result = json!({
                "cycles": cycles,
                "distance": d,
                "l": l,
                "m": a.m(),
            });
            let human = vec![format!("d({a}, {b}) = {d} with {l} alternating cycle(s)")];
            Ok(Outcome::envelope_with_code("dist", params, result, 0, human))
        }
        Command::Count { m, a, b } => {
            let a = parse_matching(&a, m)?;
            let b = parse_matching(&b, m)?;
            let dec = a.decompose_union(&b)?;
            let profile = dec.profile();
            let count = geodesic_count(&a, &b)?;
            let d = a.m() - dec.cycle_count();
            let params = BTreeMap::from([
                ("a".to_string(), a.to_string()),
                ("b".to_string(), b.to_string()),
                ("m".to_string(), a.m().to_string()),
            ]);
            let result = json!({
                "count": count.to_string(),
                "cycle_profile": profile,
                "distance": d,
                "l": dec.cycle_count(),
                "m": a.m(),
            });
            let human = vec![format!("{count} geodesic(s) between {a} and {b}")];
            Ok(Outcome::envelope_with_code("count", params, result, 0, human))
        }
        Command::Enumerate { m, a, b, cap } => {
            let a = parse_matching(&a, m)?;
            let b = parse_matching(&b, m)?;
            let cap = cap.unwrap_or(DEFAULT_GEODESIC_CAP);
            let d = distance(&a, &b)?;
            let paths: Vec<String> = enumerate_geodesics(&a, &b, cap)?
                .map(|p| p.to_string())
                .collect();
            let params = BTreeMap::from([
                ("a".to_string(), a.to_string()),
                ("b".to_string(), b.to_string()),
                ("cap".to_string(), cap.to_string()),
                ("m".to_string(), a.m().to_string()),
            ]);
            let result = json!({
                "count": paths.len().to_string(),
                "distance": d,
                "m": a.m(),
                "paths": paths,
            });
            let mut human = vec![format!("{} geodesic(s) of {d} hop(s):", paths.len())];
            human.extend(paths.iter().cloned());
            Ok(Outcome::envelope_with_code(
                "enumerate",
                params,
                result,
                0,
                human,
            ))
        }
        Command::Antipodes { m, a, count_only } => {
            let a = parse_matching(&a, m)?;
            let count = antipode_count(a.m());
            let params = BTreeMap::from([
                ("a".to_string(), a.to_string()),
                ("count_only".to_string(), count_only.to_string()),
                ("m".to_string(), a.m().to_string()),
            ]);
            let result = if count_only {
                json!({"count": count.to_string(), "m": a.m()})
            } else {
                if count > BigUint::from(DEFAULT_ENUM_CAP) {
                    return Err(Error::ResourceLimit {
                        what: "antipode listing",
                        needed: count,
                        cap: DEFAULT_ENUM_CAP,
                    });
                }
                let mut listing: Vec<Matching> = antipodes(&a).collect();
                listing.sort();
                let listing: Vec<String> = listing.iter().map(|m| m.to_string()).collect();
                json!({
                    "antipodes": listing,
                    "count": count.to_string(),
                    "m": a.m(),
                })
            };
            let human = vec![format!("{count} antipode(s) of {a}")];
            Ok(Outcome::envelope_with_code(
                "antipodes",
                params,
                result,
                0,
                human,
            ))
        }
        Command::P2k { k, method } => {
            let k = k as usize;
            let value = match method {
                P2kMethod::Recurrence => cycle_geodesics_recurrence(k),
                P2kMethod::Weighted => cycle_geodesics_weighted(k),
                P2kMethod::Closed => cycle_geodesics_closed(k),
                P2kMethod::Trees => labeled_tree_count(k),
            };
            let params = BTreeMap::from([
                ("k".to_string(), k.to_string()),
                ("method".to_string(), method.name().to_string()),
            ]);
            let result = json!({
                "k": k,
                "method": method.name(),
                "value": value.to_string(),
            });
            let human = vec![format!(
                "geodesics across one cycle with {k} matched pairs: {value}"
            )];
            Ok(Outcome::envelope_with_code("p2k", params, result, 0, human))
        }
        Command::Hurwitz { n } => {
            let n = n as usize;
            let count = count_cycle_factorizations(n)?;
            let closed = cycle_geodesics_closed(n);
            let matches = count == closed;
            let params = BTreeMap::from([("n".to_string(), n.to_string())]);
            let result = json!({
                "closed_form": closed.to_string(),
                "count": count.to_string(),
                "matches": matches,
                "n": n,
            });
            let human = vec![format!(
                "{count} factorization(s) of the full {n}-cycle into {} transpositions",
                n - 1
            )];
            Ok(Outcome::envelope_with_code(
                "hurwitz", params, result, 0, human,
            ))
        }
        Command::Noncross { command } => match command {
            NoncrossCommand::Verify { m } => {
                let m = m as usize;
                check_materialization(m)?;
                let report = verify_unique_maximal_pair(m, DEFAULT_GEODESIC_CAP)?;
                let holds = report.holds();
                let params = BTreeMap::from([("m".to_string(), m.to_string())]);
                let pairs: Vec<Value> = report
                    .maximal_pairs
                    .iter()
                    .map(|(x, y)| json!([x.to_string(), y.to_string()]))
                    .collect();
                let result = json!({
                    "boundary_pair": [
                        report.expected_pair.0.to_string(),
                        report.expected_pair.1.to_string(),
                    ],
                    "catalan": catalan(m).to_string(),
                    "expected_count": report.expected_count.to_string(),
                    "holds": holds,
                    "m": m,
                    "max_count": report.max_count.to_string(),
                    "maximal_pairs": pairs,
                    "noncrossing_count": report.noncrossing_count.to_string(),
                });
                let human = vec![
                    format!(
                        "{} non-crossing matchings, maximal geodesic count {}",
                        report.noncrossing_count, report.max_count
                    ),
                    if holds {
                        "unique maximal pair is the boundary pair".to_string()
                    } else {
                        format!(
                            "maximal count attained by {} pair(s), expected only the boundary pair",
                            report.maximal_pairs.len()
                        )
                    },
                ];
                let code = if holds { 0 } else { 2 };
                Ok(Outcome::envelope_with_code(
                    "noncross verify",
                    params,
                    result,
                    code,
                    human,
                ))
            }
            NoncrossCommand::Count { m, a, b, cap } => {
                let a = parse_matching(&a, m)?;
                let b = parse_matching(&b, m)?;
                let cap = cap.unwrap_or(DEFAULT_GEODESIC_CAP);
                let count = noncrossing_geodesic_count(&a, &b, cap)?;
                let ambient = geodesic_count(&a, &b)?;
                let d = distance(&a, &b)?;
                let params = BTreeMap::from([
                    ("a".to_string(), a.to_string()),
                    ("b".to_string(), b.to_string()),
                    ("cap".to_string(), cap.to_string()),
                    ("m".to_string(), a.m().to_string()),
                ]);
                let result = json!({
                    "ambient_count": ambient.to_string(),
                    "count": count.to_string(),
                    "distance": d,
                    "m": a.m(),
                });
                let human = vec![format!(
                    "{count} of {ambient} geodesic(s) stay non-crossing between {a} and {b}"
                )];
                Ok(Outcome::envelope_with_code(
                    "noncross count",
                    params,
                    result,
                    0,
                    human,
                ))
            }
        },
        Command::Verify { command } => match command {
            VerifyCommand::All { m } => {
                let m = m as usize;
                check_materialization(m)?;
                let report = run_suite(m)?;
                let passed = report.passed();
                let params = BTreeMap::from([("m".to_string(), m.to_string())]);
                let checks: Vec<Value> = report
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "detail": c.detail,
                            "name": c.name,
                            "passed": c.passed,
                        })
                    })
                    .collect();
                let result = json!({
                    "checks": checks,
                    "m": m,
                    "passed": passed,
                });
                let mut human = Vec::new();
                for c in &report.checks {
                    human.push(format!(
                        "{} {} - {}",
                        if c.passed { "ok  " } else { "FAIL" },
                        c.name,
                        c.detail
                    ));
                }
                if let Some(first) = report.first_failure() {
                    human.push(format!("first failure: {} - {}", first.name, first.detail));
                }
                let code = if passed { 0 } else { 2 };
                Ok(Outcome::envelope_with_code(
                    "verify all",
                    params,
                    result,
                    code,
                    human,
                ))
            }
        },
        Command::ExportDot { m, noncrossing } => {
            let m = m as usize;
            check_materialization(m)?;
            let graph = MatchingGraph::build(m, DEFAULT_ENUM_CAP)?;
            let graph = if noncrossing {
                graph.induced(is_noncrossing)
            } else {
                graph
            };
            let human = vec![format!(
                "m={m}{}: {} vertices, {} edges",
                if noncrossing { " non-crossing" } else { "" },
                graph.vertex_count(),
                graph.edge_count()
            )];
            Ok(Outcome {
                stdout: graph.to_dot(),
                human,
                code: 0,
            })
        }
    }
}

// keep the helper visible to integration tests without exporting clap types
#[doc(hidden)]
pub fn boundary_pair_literals(m: usize) -> (String, String) {
    let (a, b) = boundary_pair(m);
    (a.to_string(), b.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_strings(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_captured(args.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn p2k_envelope() {
        let (code, out, _) = run_to_strings(&["p2k", "--k", "5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "p2k");
        assert_eq!(v["result"]["value"], "125");
        assert_eq!(v["exact"], true);
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = run_to_strings(&["dist", "--a", "1-2,3-4"]);
        assert_eq!(code, 1);
        assert!(err.contains("--b"));
        let (code, _, err) = run_to_strings(&["dist", "--a", "1-2,3-4", "--b", "oops"]);
        assert_eq!(code, 1);
        assert!(err.contains("oops"));
        let (code, _, _) = run_to_strings(&["nope"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn mismatched_m_is_flagged() {
        let (code, _, err) = run_to_strings(&[
            "dist", "--m", "4", "--a", "1-2,3-4", "--b", "1-3,2-4",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("expected 4 pairs"));
    }

    #[test]
    fn mixed_sizes_surface_as_errors() {
        let (code, _, err) = run_to_strings(&["count", "--a", "1-2,3-4", "--b", "1-2,3-4,5-6"]);
        assert_eq!(code, 1);
        assert!(err.contains("different sizes"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_to_strings(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("matchgeo"));
    }
}
