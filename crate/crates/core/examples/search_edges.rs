//! Fewest edges of a 9-vertex graph with alpha <= 2 and m2 < 3.
use turan2d::density::m2_value;
use turan2d::enumerate::min_edges_under_m2_cap;
use turan2d::graph6::parse_graph6;
use turan2d::invariants::independence_number;
use turan2d::Rational;

fn main() -> turan2d::Result<()> {
    let out = min_edges_under_m2_cap(9, 3, Rational::int(3))?;
    println!("e(9,3) = {:?}", out.value);
    for w in &out.witnesses {
        let g = parse_graph6(w)?;
        println!("  {w}: alpha={} m2={}", independence_number(&g), m2_value(&g)?);
    }
    Ok(())
}
