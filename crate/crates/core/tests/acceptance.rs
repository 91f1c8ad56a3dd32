//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --release --test acceptance`.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan2d::constructions::{build, h7, ConstructionSpec};
use turan2d::density::{forbidden_family, m2_value};
use turan2d::enumerate::{generate, min_edges_under_m2_cap, min_m2, Constraints, Extremum, Profile};
use turan2d::graph6::{parse_graph6, to_graph6};
use turan2d::invariants::{clique_number, independence_number, local_independence_at_least};
use turan2d::sampler::{experiment, sample_lll, verify_local, SampleParams};
use turan2d::subgraph::contains_subgraph;
use turan2d::verify::{check_equivalence_7_3, equivalence_violations, run_check, CheckId, CheckParams};
use turan2d::{Graph, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

// time budgets
const C1_BUDGET: Duration = Duration::from_secs(1);
const C2_BUDGET: Duration = Duration::from_secs(35 * 60);
const C3_BUDGET: Duration = Duration::from_secs(5 * 60);
const C4_BUDGET: Duration = Duration::from_secs(60);
const C5_BUDGET: Duration = Duration::from_secs(2 * 60);
const C6_BUDGET: Duration = Duration::from_secs(60);
const C7_BUDGET: Duration = Duration::from_secs(30 * 60);
const C8_BUDGET: Duration = Duration::from_secs(5 * 60);
const C9_BUDGET: Duration = Duration::from_secs(10 * 60);
const C10_BUDGET: Duration = Duration::from_secs(5 * 60);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: turan2d::Error) -> String {
    e.to_string()
}

fn density(v: Option<Extremum>) -> Result<Rational, String> {
    match v {
        Some(Extremum::Density(d)) => Ok(d),
        other => Err(format!("expected a density, got {other:?}")),
    }
}

fn c1() -> Outcome {
    for r in 2..=10i64 {
        let c = build(&ConstructionSpec::Cycle { n: 2 * r as usize - 1 }).map_err(err)?;
        let want = Rational::int(1) + Rational::new(1, 2 * r - 3);
        let got = m2_value(&c).map_err(err)?;
        ensure(got == want, || format!("m2(C_{}) = {got}, want {want}", 2 * r - 1))?;
    }
    Ok("m2(C_{2r-1}) = 1 + 1/(2r-3) for r = 2..10".into())
}

fn c2() -> Outcome {
    let want = [(5, "4/3"), (6, "2"), (7, "2"), (8, "5/2"), (9, "8/3"), (10, "3")];
    let mut seen = Vec::new();
    for (m, w) in want {
        let profile = if m == 10 { Profile::CliqueCap(5) } else { Profile::Default };
        let t = Instant::now();
        let out = min_m2(m, 3, &profile).map_err(err)?;
        let got = density(out.value)?;
        let w: Rational = w.parse().map_err(err)?;
        ensure(got == w && out.exact, || format!("M({m},3) = {got} (exact={}), want {w}", out.exact))?;
        let budget = if m <= 9 { 5 * 60 } else { 30 * 60 };
        ensure(t.elapsed().as_secs() < budget, || format!("M({m},3) took {:?}", t.elapsed()))?;
        seen.push(got.to_string());
    }
    Ok(format!("M(5..10, 3) = {}", seen.join(", ")))
}

fn c3() -> Outcome {
    let out = min_edges_under_m2_cap(9, 3, Rational::int(3)).map_err(err)?;
    ensure(out.value == Some(Extremum::Edges(19)), || format!("e(9,3) = {:?}", out.value))?;
    ensure(!out.witnesses.is_empty(), || "no witness".into())?;
    for w in &out.witnesses {
        let g = parse_graph6(w).map_err(err)?;
        ensure(common::alpha(&g) <= 2, || format!("{w} has alpha > 2"))?;
        ensure(m2_value(&g).map_err(err)? < Rational::int(3), || format!("{w} has m2 >= 3"))?;
        ensure(g.edge_count() == 19, || format!("{w} has {} edges", g.edge_count()))?;
    }
    Ok(format!("e(9,3) = 19 with {} re-verified witnesses", out.witnesses.len()))
}

fn c4() -> Outcome {
    let plain = check_equivalence_7_3(7, false).map_err(err)?;
    ensure(plain.passed && plain.instances_checked == 1044, || {
        format!("passed={} over {}", plain.passed, plain.instances_checked)
    })?;
    let mutated = check_equivalence_7_3(7, true).map_err(err)?;
    ensure(!mutated.passed, || "mutated claim passed".into())?;
    let c7_bar = build(&ConstructionSpec::Cycle { n: 7 }).map_err(err)?.complement();
    let mut has_c7_bar = false;
    for c in &mutated.counterexamples {
        let g = parse_graph6(&c.graph6).map_err(err)?;
        ensure(!equivalence_violations(&g, true).is_empty(), || format!("{} does not re-verify", c.graph6))?;
        ensure(clique_number(&g) < 4 && common::local_alpha(&g, 7) < 3, || format!("{} is not a witness", c.graph6))?;
        has_c7_bar |= turan2d::canon::is_isomorphic(&g, &c7_bar);
    }
    ensure(has_c7_bar, || "complement of C_7 missing from the witnesses".into())?;
    Ok(format!(
        "1044 classes pass; mutated form fails with {} witnesses incl. complement of C_7",
        mutated.total_counterexamples
    ))
}

/// `(k+1)/2 - max_t min(t/(k-2), ((k+1)/2 - (t-1)^2)/(2k-3))` and the first maximising `t`.
fn odd_formula(k: i64) -> (Rational, i64) {
    let half = Rational::new(k + 1, 2);
    let gap = |t: i64| {
        let a = Rational::new(t, k - 2);
        let b = (half - Rational::int((t - 1) * (t - 1))) / Rational::int(2 * k - 3);
        if a < b {
            a
        } else {
            b
        }
    };
    let best_t = (1..=k - 2).fold(1, |b, t| if gap(t) > gap(b) { t } else { b });
    (half - gap(best_t), best_t)
}

fn c5() -> Outcome {
    for k in 4..=12usize {
        let g = build(&ConstructionSpec::OddOptimal { k }).map_err(err)?;
        let (bound, a) = odd_formula(k as i64);
        let a = a as usize;
        let edges = k * (k - 1) + (a - 1) * (a - 1) - 1;
        ensure(g.n() == 2 * k - 1, || format!("k={k}: {} vertices", g.n()))?;
        ensure(g.edge_count() == edges, || format!("k={k}: {} edges, want {edges}", g.edge_count()))?;
        ensure(independence_number(&g) == 2, || format!("k={k}: alpha != 2"))?;
        let got = m2_value(&g).map_err(err)?;
        ensure(got == bound, || format!("k={k}: m2 {got}, want {bound}"))?;
    }
    for k in 3..=12usize {
        let g = build(&ConstructionSpec::DisjointCliques(vec![k, k])).map_err(err)?;
        let got = m2_value(&g).map_err(err)?;
        ensure(got == Rational::new(k as i64 + 1, 2), || format!("2K_{k}: m2 {got}"))?;
    }
    Ok("OddOptimal(4..12) sizes, edges, alpha, m2 exact; m2(2K_k) = (k+1)/2 for k = 3..12".into())
}

fn c6() -> Outcome {
    for (parts, a) in [(vec![5, 5, 5], 3), (vec![5, 5, 5, 5], 4)] {
        let g = build(&ConstructionSpec::DisjointCliques(parts.clone())).map_err(err)?;
        ensure(independence_number(&g) == a, || format!("{parts:?}: alpha"))?;
        ensure(m2_value(&g).map_err(err)? == Rational::int(3), || format!("{parts:?}: m2"))?;
    }
    let g = build(&ConstructionSpec::CyclePower { n: 8, d: 2 }).map_err(err)?;
    ensure(clique_number(&g) < 4, || "C_8^2 contains K_4".into())?;
    ensure(independence_number(&g) == 2, || "alpha(C_8^2) != 2".into())?;
    let v = m2_value(&g).map_err(err)?;
    ensure(v == Rational::new(5, 2), || format!("m2(C_8^2) = {v}"))?;
    Ok("3K_5: alpha 3, m2 3; 4K_5: alpha 4, m2 3; C_8^2: K_4-free, alpha 2, m2 5/2".into())
}

fn c7() -> Outcome {
    let mut parts = Vec::new();
    for id in [
        CheckId::TuranLb,
        CheckId::TuranUb,
        CheckId::Switching,
        CheckId::DisjointUnion,
        CheckId::SparseTfBound,
        CheckId::UpBip,
        CheckId::TriangleNbhd,
    ] {
        let p = CheckParams::defaults(id);
        let r = run_check(id, &p).map_err(err)?;
        ensure(r.passed && r.total_counterexamples == 0, || {
            format!("{id}: {} counterexamples, first {:?}", r.total_counterexamples, r.counterexamples.first())
        })?;
        parts.push(format!("{id} {}", r.instances_checked));
    }
    Ok(format!("zero counterexamples ({})", parts.join(", ")))
}

fn c8() -> Outcome {
    for m in [6i64, 8, 10] {
        let k = m / 2;
        let bound = Rational::new(k, 2) + Rational::new(k - 1, m - 2);
        ensure(bound == Rational::new(k + 1, 2), || format!("m={m}: k/2 + (k-1)/(m-2) = {bound}"))?;
        let profile = if m == 10 { Profile::CliqueCap(5) } else { Profile::Default };
        let got = density(min_m2(m as usize, 3, &profile).map_err(err)?.value)?;
        ensure(got == bound, || format!("m={m}: search {got}, bound {bound}"))?;
    }
    Ok("min_m2(m,3) = k/2 + (k-1)/(m-2) = (k+1)/2 at m = 6, 8, 10".into())
}

fn dense_sample(n: usize, seed: u64, stream: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let p: f64 = rng.random_range(0.05..0.75);
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

fn c9() -> Outcome {
    let want = [(5, 3, "4/3"), (6, 3, "2"), (7, 3, "2")];
    let mut violated = 0;
    for (m, r, w) in want {
        let fam = forbidden_family(m, r).map_err(err)?;
        let w: Rational = w.parse().map_err(err)?;
        ensure(fam.min_density == w, || format!("family ({m},{r}) has M = {}", fam.min_density))?;
        for i in 0..200u64 {
            let n = m + (i as usize % (15 - m));
            // half at the local-lemma density, half denser
            let g = if i % 2 == 0 {
                sample_lll(&SampleParams::with_family(n, 1000 + i, fam.clone()).map_err(err)?).map_err(err)?
            } else {
                dense_sample(n, 77, i)
            };
            let screened = verify_local(&g, &fam).map_err(err)?.holds();
            let direct = local_independence_at_least(&g, m, r).map_err(err)?.0;
            ensure(screened == direct, || format!("({m},{r}) sample {i} {}: disagree", to_graph6(&g)))?;
            ensure(direct == (common::local_alpha(&g, m) >= r), || format!("({m},{r}) sample {i}: oracle"))?;
            violated += usize::from(!direct);
        }
        let rep = experiment(m, r, &[64, 128, 256, 512], 50, 9).map_err(err)?;
        for row in &rep.rows {
            ensure(row.acceptance_rate > 0.0, || format!("({m},{r}) n={}: acceptance 0", row.n))?;
        }
        for s in rep.samples.iter().filter(|s| s.accepted) {
            let g = sample_lll(&SampleParams::with_family(s.n, s.seed, fam.clone()).map_err(err)?).map_err(err)?;
            ensure(verify_local(&g, &fam).map_err(err)?.holds(), || format!("n={} rep={} re-check", s.n, s.rep))?;
        }
    }
    Ok(format!(
        "M = 4/3, 2, 2; 600 samples agree ({violated} below threshold); acceptance > 0 on n = 64..512 x 50 reps"
    ))
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_turan2d"))
        .args(args)
        .env_remove("TURAN2D_CACHE")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn c10() -> Outcome {
    let runs: [&[&str]; 5] = [
        &["search-m2", "--m", "8", "--r", "3"],
        &["search-edges", "--m", "9", "--r", "3", "--cap", "3"],
        &["verify", "triangle-nbhd", "--n", "7", "--reps", "200", "--seed", "4"],
        &["experiment", "--m", "5", "--r", "3", "--n", "64,256", "--reps", "20", "--seed", "2"],
        &["sample", "--n", "300", "--m", "6", "--r", "3", "--seed", "11"],
    ];
    for args in runs {
        let mut outputs = Vec::new();
        for jobs in ["1", "4", "1", "4"] {
            let mut a = args.to_vec();
            a.extend(["--jobs", jobs]);
            outputs.push(cli(&a)?);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{args:?}: reports differ"))?;
    }
    let mut classes = 0;
    for n in 0..=6 {
        for g in generate(n, &Constraints::default()).map_err(err)?.graphs {
            let key = to_graph6(&g);
            let back = parse_graph6(&key).map_err(err)?;
            ensure(back == g && to_graph6(&back) == key, || format!("round trip {key}"))?;
            classes += 1;
        }
    }
    ensure(!contains_subgraph(&h7(), &Graph::complete(4).unwrap()), || "H_7 contains K_4".into())?;
    Ok(format!("5 commands byte-identical at --jobs 1 and 4; graph6 round trip on {classes} classes"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("odd-cycle m2", C1_BUDGET, c1),
        ("exhaustive M(m,3)", C2_BUDGET, c2),
        ("edge minimum e(9,3)", C3_BUDGET, c3),
        ("equivalence-7-3 check", C4_BUDGET, c4),
        ("construction self-checks", C5_BUDGET, c5),
        ("benchmark upper bounds", C6_BUDGET, c6),
        ("property suites", C7_BUDGET, c7),
        ("divisible-bound consistency", C8_BUDGET, c8),
        ("sampler soundness", C9_BUDGET, c9),
        ("determinism and round trip", C10_BUDGET, c10),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut res = f();
        let took = t.elapsed();
        if res.is_ok() && took > *budget {
            res = Err(format!("took {took:.2?}, budget {budget:?}"));
        }
        match res {
            Ok(detail) => println!("PASS {:2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:2} {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
