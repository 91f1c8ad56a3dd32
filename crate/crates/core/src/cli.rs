//! The `turan2d` command line.
//!
//! Every JSON report carries `"schema": 1`, the tool version, the full
//! parameter set and a statement of what was computed. Exit status is 0 on
//! success, 1 when a check finds a counterexample, 2 on a usage error.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::constructions::{build, expected_stats, named, ConstructionSpec};
use crate::density::{d2, forbidden_family, is_strictly_2_balanced, m2, reduce_to_strictly_2_balanced};
use crate::enumerate::{
    enumerate_alpha_bounded, enumerate_alpha_bounded_cached, min_edges_under_m2_cap, min_m2, Profile,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::invariants::{
    clique_number, degeneracy, independence_number, local_independence_at_least, local_independence_number,
    LOCAL_ALPHA_FULL_LIMIT,
};
use crate::rational::Rational;
use crate::sampler::{dyadic_threshold, experiment, sample_lll, verify_local, LocalVerdict, SampleParams};
use crate::verify::{run_check, CheckId, CheckParams};

pub const SCHEMA: u32 = 1;
pub const CACHE_ENV: &str = "TURAN2D_CACHE";

#[derive(Parser, Debug)]
#[command(name = "turan2d", version, about = "Exact 2-density Turán computations on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Class cache directory; the TURAN2D_CACHE variable takes precedence.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock time in JSON reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    G6,
    Csv,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long, conflicts_with = "spec")]
    g6: Option<String>,
    /// Construction string such as odd-optimal:k=5, or a named graph.
    #[arg(long)]
    spec: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Independence, clique and local independence numbers of a graph.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// 2-density, a maximising subgraph and the strictly 2-balanced reduction.
    M2 {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Build a named construction.
    Construct {
        #[arg(long)]
        spec: String,
    },
    /// Isomorphism classes on m vertices with no independent set of size r,
    /// or the forbidden family for (m, r).
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        family: bool,
    },
    /// Exhaustive minimum of m2 over m-vertex graphs with independence number below r.
    SearchM2 {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        /// default, clique-cap, clique-cap=C, triangle-free or min-degree=D.
        #[arg(long, default_value = "default")]
        profile: String,
    },
    /// Exhaustive minimum edge count under a strict m2 cap.
    SearchEdges {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        /// Rational "p/q"; defaults to (k+1)/2 with k = ceil(m/(r-1)).
        #[arg(long)]
        cap: Option<String>,
    },
    /// Run a finite check of a graph-theoretic statement.
    Verify {
        check: String,
        /// Largest class order (the exact order for equivalence-7-3).
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated k values (turan-ub, up-bip).
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        /// Comma-separated alpha values (turan-ub).
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<usize>>,
        /// Random samples (triangle-nbhd).
        #[arg(long)]
        reps: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Run the weakened statement, which is expected to fail.
        #[arg(long)]
        mutated: bool,
    },
    /// One random graph at the local-lemma edge density.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Acceptance rate and independence numbers of random graphs over a grid of orders.
    Experiment {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

struct Report {
    command: &'static str,
    params: Value,
    citation: String,
    result: Value,
    failed: bool,
    /// Replaces the JSON envelope for g6 and csv output.
    text: Option<String>,
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let pool = match cli.global.jobs {
        Some(0) => return Outcome::usage("error: --jobs must be at least 1\n".into()),
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("error: cannot start worker pool: {e}\n")),
    };
    let start = Instant::now();
    let report = match pool.install(|| dispatch(&cli)) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    let body = match &report.text {
        Some(t) => t.clone(),
        None => {
            let mut env = Map::new();
            env.insert("schema".into(), json!(SCHEMA));
            env.insert("tool".into(), json!("turan2d"));
            env.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
            env.insert("command".into(), json!(report.command));
            env.insert("params".into(), report.params);
            env.insert("citation".into(), json!(report.citation));
            env.insert("result".into(), report.result);
            if cli.global.timing {
                env.insert("wall_time".into(), json!(start.elapsed().as_secs_f64()));
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(env)).expect("json");
            s.push('\n');
            s
        }
    };
    let code = if report.failed { 1 } else { 0 };
    match &cli.global.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => Outcome {
            code,
            stdout: body,
            stderr: String::new(),
        },
    }
}

fn read_graph(input: &GraphInput) -> Result<(Graph, Value)> {
    match (&input.g6, &input.spec) {
        (Some(g6), None) => Ok((parse_graph6(g6)?, json!({ "g6": g6 }))),
        (None, Some(spec)) => {
            let g = match named(spec) {
                Some(g) => g,
                None => build(&spec.parse::<ConstructionSpec>()?)?,
            };
            Ok((g, json!({ "spec": spec })))
        }
        _ => Err(Error::InvalidParameter("exactly one of --g6 or --spec is required".into())),
    }
}

fn format_is(cli: &Cli, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&cli.global.format) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "--format {:?} is not available for {command}",
            cli.global.format
        )))
    }
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| cli.global.cache.clone())
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn default_cap(m: usize, r: usize) -> Rational {
    let k = m.div_ceil(r.saturating_sub(1).max(1));
    Rational::new(k as i64 + 1, 2)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let fmt = cli.global.format;
    match &cli.command {
        Command::Invariants { input, m, r } => {
            format_is(cli, &[Format::Json], "invariants")?;
            let (g, src) = read_graph(input)?;
            let mut result = json!({
                "graph6": to_graph6(&g),
                "vertices": g.n(),
                "edges": g.edge_count(),
                "alpha": independence_number(&g),
                "omega": clique_number(&g),
                "degeneracy": degeneracy(&g),
            });
            match (m, r) {
                (Some(m), Some(r)) => {
                    let (ok, w) = local_independence_at_least(&g, *m, *r)?;
                    result["alpha_m_at_least_r"] = json!(ok);
                    result["violating_subset"] = json!(w);
                }
                (Some(m), None) => {
                    if g.n() > LOCAL_ALPHA_FULL_LIMIT {
                        return Err(Error::Infeasible(format!(
                            "alpha_m without --r supports n <= {LOCAL_ALPHA_FULL_LIMIT}; pass --r to test a threshold"
                        )));
                    }
                    result["alpha_m"] = json!(local_independence_number(&g, *m)?);
                }
                (None, Some(_)) => return Err(Error::InvalidParameter("--r needs --m".into())),
                (None, None) => {}
            }
            Ok(Report {
                command: "invariants",
                params: merge(src, json!({ "m": m, "r": r })),
                citation: "alpha is the largest independent set; alpha_m is the minimum of alpha over induced subgraphs on m vertices".into(),
                result,
                failed: false,
                text: None,
            })
        }
        Command::M2 { input } => {
            format_is(cli, &[Format::Json], "m2")?;
            let (g, src) = read_graph(input)?;
            let best = m2(&g)?;
            let reduced = reduce_to_strictly_2_balanced(&g)?;
            Ok(Report {
                command: "m2",
                params: src,
                citation: "m2(H) is the maximum of (e(H')-1)/(|H'|-2) over subgraphs H' with at least 3 vertices".into(),
                result: json!({
                    "graph6": to_graph6(&g),
                    "value": best.value,
                    "d2": d2(&g)?,
                    "witness": best.witness,
                    "maximiser_sizes": best.sizes,
                    "strictly_2_balanced": is_strictly_2_balanced(&g)?,
                    "reduced": to_graph6(&reduced),
                }),
                failed: false,
                text: None,
            })
        }
        Command::Construct { spec } => {
            format_is(cli, &[Format::Json, Format::G6], "construct")?;
            let parsed: ConstructionSpec = spec.parse()?;
            let g = build(&parsed)?;
            let key = to_graph6(&g);
            let text = (fmt == Format::G6).then(|| format!("{key}\n"));
            let expected = expected_stats(&parsed)?;
            let measured_m2 = match m2(&g) {
                Ok(v) => Some(v.value),
                Err(Error::Infeasible(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(Report {
                command: "construct",
                params: json!({ "spec": parsed.to_string() }),
                citation: "closed-form vertex count, edge count, independence bound and m2 of the construction, checked against the built graph".into(),
                result: json!({
                    "graph6": key,
                    "vertices": g.n(),
                    "edges": g.edge_count(),
                    "alpha": independence_number(&g),
                    "omega": clique_number(&g),
                    "m2": measured_m2,
                    "expected": expected,
                }),
                failed: false,
                text,
            })
        }
        Command::Enumerate { m, r, family } => {
            format_is(cli, &[Format::Json, Format::G6], "enumerate")?;
            if *r < 2 {
                return Err(Error::InvalidParameter(format!("--r must be at least 2, got {r}")));
            }
            let cache = cache_dir(cli);
            let params = json!({
                "m": m,
                "r": r,
                "family": family,
                "cache": cache.as_ref().map(|p| p.display().to_string()),
            });
            if *family {
                let fam = forbidden_family(*m, *r)?;
                let g6: Vec<String> = fam.members.iter().map(to_graph6).collect();
                let text = (fmt == Format::G6).then(|| g6.iter().map(|s| format!("{s}\n")).collect());
                return Ok(Report {
                    command: "enumerate",
                    params,
                    citation: "an m-vertex graph with no independent set of size r contains a member of this family; the smallest member m2 is M(m, r)".into(),
                    result: json!({ "t": fam.t(), "family": fam }),
                    failed: false,
                    text,
                });
            }
            let classes = match &cache {
                Some(dir) => enumerate_alpha_bounded_cached(*m, *r - 1, dir)?,
                None => enumerate_alpha_bounded(*m, *r - 1)?,
            };
            let g6: Vec<String> = classes.iter().map(to_graph6).collect();
            let text = (fmt == Format::G6).then(|| g6.iter().map(|s| format!("{s}\n")).collect());
            Ok(Report {
                command: "enumerate",
                params,
                citation: "every isomorphism class on m vertices with independence number at most r-1, once each".into(),
                result: json!({ "count": g6.len(), "graphs": g6 }),
                failed: false,
                text,
            })
        }
        Command::SearchM2 { m, r, profile } => {
            format_is(cli, &[Format::Json], "search-m2")?;
            let p = Profile::parse(profile, *m, *r)?;
            let out = min_m2(*m, *r, &p)?;
            Ok(Report {
                command: "search-m2",
                params: json!({ "m": m, "r": r, "profile": p.id() }),
                citation: "M(m, r) is the minimum m2 over m-vertex graphs with no independent set of size r".into(),
                result: serde_json::to_value(&out).expect("json"),
                failed: false,
                text: None,
            })
        }
        Command::SearchEdges { m, r, cap } => {
            format_is(cli, &[Format::Json], "search-edges")?;
            let cap = match cap {
                Some(c) => c.parse::<Rational>()?,
                None => default_cap(*m, *r),
            };
            let out = min_edges_under_m2_cap(*m, *r, cap)?;
            Ok(Report {
                command: "search-edges",
                params: json!({ "m": m, "r": r, "cap": cap }),
                citation: "e(m, r) is the minimum edge count over m-vertex graphs with no independent set of size r and m2 strictly below the cap".into(),
                result: serde_json::to_value(&out).expect("json"),
                failed: false,
                text: None,
            })
        }
        Command::Verify {
            check,
            n,
            k,
            alpha,
            reps,
            seed,
            mutated,
        } => {
            format_is(cli, &[Format::Json], "verify")?;
            let id: CheckId = check.parse()?;
            let mut p = CheckParams::defaults(id);
            if let Some(n) = n {
                p.n_max = *n;
            }
            if let Some(k) = k {
                p.k_grid = k.clone();
            }
            if let Some(a) = alpha {
                p.alpha_grid = a.clone();
            }
            if let Some(s) = reps {
                p.samples = *s;
            }
            if let Some(s) = seed {
                p.seed = *s;
            }
            p.mutated = *mutated;
            let report = run_check(id, &p)?;
            Ok(Report {
                command: "verify",
                params: json!({ "check": id.as_str(), "parameters": report.parameters, "mutated": mutated }),
                citation: id.citation().into(),
                failed: !report.passed,
                result: serde_json::to_value(&report).expect("json"),
                text: None,
            })
        }
        Command::Sample { n, m, r, seed } => {
            format_is(cli, &[Format::Json, Format::G6], "sample")?;
            let params = SampleParams::new(*n, *m, *r, *seed)?;
            let p = params.probability()?;
            let g = sample_lll(&params)?;
            let key = to_graph6(&g);
            let text = (fmt == Format::G6).then(|| format!("{key}\n"));
            let verdict = verify_local(&g, &params.family)?;
            let (status, member, witness) = match &verdict {
                LocalVerdict::FamilyFree => ("family-free", None, None),
                LocalVerdict::MemberOnly { member, .. } => ("member-only", Some(*member), None),
                LocalVerdict::Violated { member, witness, .. } => ("violated", Some(*member), Some(witness.clone())),
            };
            Ok(Report {
                command: "sample",
                params: json!({ "n": n, "m": m, "r": r, "seed": seed }),
                citation: "G(n, p) with p = 1/(48 t n^(1/M)), t the number of forbidden graphs and M their least m2".into(),
                result: json!({
                    "graph6": key,
                    "edges": g.edge_count(),
                    "p": p,
                    "threshold": dyadic_threshold(p),
                    "t": params.family.t(),
                    "M": params.family.min_density,
                    "local_property": verdict.holds(),
                    "verdict": status,
                    "member": member,
                    "witness": witness,
                }),
                failed: false,
                text,
            })
        }
        Command::Experiment { m, r, n, reps, seed } => {
            format_is(cli, &[Format::Json, Format::Csv], "experiment")?;
            let rep = experiment(*m, *r, n, *reps, *seed)?;
            let text = (fmt == Format::Csv).then(|| rep.to_csv());
            Ok(Report {
                command: "experiment",
                params: json!({ "m": m, "r": r, "n": n, "reps": reps, "seed": seed }),
                citation: "random graphs at p = 1/(48 t n^(1/M)) have alpha_m >= r with positive probability and alpha at most n^(1/M + o(1))".into(),
                result: serde_json::to_value(&rep).expect("json"),
                failed: false,
                text,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("turan2d").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(go(&[]).code, 2);
        assert_eq!(go(&["bogus"]).code, 2);
        let o = go(&["search-m2", "--m", "7", "--bad"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("--bad"));
        let o = go(&["m2", "--g6", "A_"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("3 vertices"), "{}", o.stderr);
    }

    #[test]
    fn search_m2_reports_value() {
        let o = go(&["search-m2", "--m", "7", "--r", "3"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["result"]["value"], "2/1");
        assert_eq!(v["params"]["profile"], "default");
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(go(&["verify", "equivalence-7-3"]).code, 0);
        assert_eq!(go(&["verify", "equivalence-7-3", "--mutated"]).code, 1);
        assert_eq!(go(&["verify", "no-such-check"]).code, 2);
    }

    #[test]
    fn construct_g6() {
        let o = go(&["construct", "--spec", "cycle:n=5", "--format", "g6"]);
        assert_eq!(o.stdout, "Dhc\n");
        assert_eq!(go(&["construct", "--spec", "cycle:n=5", "--format", "csv"]).code, 2);
    }
}
