//! Independence, clique and local independence numbers of a few graphs.
use turan2d::constructions::{build, petersen, ConstructionSpec};
use turan2d::invariants::{clique_number, independence_number, local_independence_number};

fn main() -> turan2d::Result<()> {
    let graphs = [
        ("C_7", build(&ConstructionSpec::Cycle { n: 7 })?),
        ("Petersen", petersen()),
        ("H_7", build(&ConstructionSpec::H2kMinus1 { k: 4 })?),
    ];
    for (name, g) in &graphs {
        println!(
            "{name:9} n={:2} e={:2} alpha={} omega={} alpha_5={}",
            g.n(),
            g.edge_count(),
            independence_number(g),
            clique_number(g),
            local_independence_number(g, 5)?
        );
    }
    Ok(())
}
