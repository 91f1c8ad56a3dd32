//! graph6 encoding and canonical labelling.
use turan2d::canon::{canonical_form, is_isomorphic};
use turan2d::constructions::petersen;
use turan2d::graph6::{parse_graph6, to_graph6};

fn main() -> turan2d::Result<()> {
    let g = petersen();
    let key = to_graph6(&g);
    println!("Petersen: {key}");
    assert_eq!(parse_graph6(&key)?, g);
    let shuffled = g.permuted(&[3, 7, 1, 9, 0, 4, 8, 2, 6, 5]);
    println!("relabelled: {}", to_graph6(&shuffled));
    println!("canonical forms agree: {}", canonical_form(&g) == canonical_form(&shuffled));
    println!("isomorphic: {}", is_isomorphic(&g, &shuffled));
    Ok(())
}
