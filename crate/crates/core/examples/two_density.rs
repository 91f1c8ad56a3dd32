//! m2 of small graphs and their strictly 2-balanced reductions.
use turan2d::constructions::{build, ConstructionSpec};
use turan2d::density::{d2, m2, reduce_to_strictly_2_balanced};
use turan2d::graph6::{parse_graph6, to_graph6};

fn main() -> turan2d::Result<()> {
    for r in 2..=6 {
        let c = build(&ConstructionSpec::Cycle { n: 2 * r - 1 })?;
        println!("m2(C_{}) = {}", 2 * r - 1, m2(&c)?.value);
    }
    // the diamond: K_4 minus an edge
    let diamond = parse_graph6("C~")?.without_edge(0, 1)?;
    let best = m2(&diamond)?;
    println!("diamond: d2={} m2={} witness={:?}", d2(&diamond)?, best.value, best.witness);
    println!("reduced to {}", to_graph6(&reduce_to_strictly_2_balanced(&diamond)?));
    Ok(())
}
