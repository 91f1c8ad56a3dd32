//! Builds the extremal constructions and compares them with their closed forms.
use turan2d::constructions::{build, expected_stats, ConstructionSpec};
use turan2d::density::m2_value;
use turan2d::invariants::independence_number;

fn main() -> turan2d::Result<()> {
    let specs = [
        "odd-optimal:k=5",
        "h2k-1:k=4",
        "disjoint-cliques:5,5,5",
        "cycle-power:n=8,d=2",
        "turan-complement:m=10,parts=2",
        "general-example:m=13,r=5",
    ];
    for s in specs {
        let spec: ConstructionSpec = s.parse()?;
        let g = build(&spec)?;
        let want = expected_stats(&spec)?;
        println!(
            "{s:32} n={:2} e={:3} (expected {:3}) alpha={} m2={} (expected {})",
            g.n(),
            g.edge_count(),
            want.edges,
            independence_number(&g),
            m2_value(&g)?,
            want.m2.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
        );
    }
    Ok(())
}
