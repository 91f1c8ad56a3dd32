//! Strictly 2-balanced graphs forced into every graph with small local independence.
use turan2d::density::forbidden_family;
use turan2d::graph6::to_graph6;

fn main() -> turan2d::Result<()> {
    for (m, r) in [(5, 3), (6, 3), (7, 3), (7, 4)] {
        let fam = forbidden_family(m, r)?;
        let keys: Vec<String> = fam.members.iter().map(to_graph6).collect();
        println!("({m},{r}): t={} M={} members={keys:?}", fam.t(), fam.min_density);
    }
    Ok(())
}
