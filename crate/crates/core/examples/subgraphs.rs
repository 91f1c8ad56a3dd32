//! Subgraph containment, as used by the forbidden-family screen.
use turan2d::constructions::{build, h7, petersen, ConstructionSpec};
use turan2d::subgraph::find_subgraph;

fn main() -> turan2d::Result<()> {
    let c5 = build(&ConstructionSpec::Cycle { n: 5 })?;
    println!("C_5 in Petersen at {:?}", find_subgraph(&petersen(), &c5));
    let k4 = build(&ConstructionSpec::Clique { k: 4 })?;
    println!("K_4 in H_7: {:?}", find_subgraph(&h7(), &k4));
    let big = build(&ConstructionSpec::OddOptimal { k: 6 })?;
    println!("H_7 in odd-optimal:k=6: {:?}", find_subgraph(&big, &h7()));
    Ok(())
}
