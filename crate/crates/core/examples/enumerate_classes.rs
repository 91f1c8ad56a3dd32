//! Counts isomorphism classes, all of them and those with small independence number.
use turan2d::enumerate::{count_classes, enumerate_alpha_bounded};

fn main() -> turan2d::Result<()> {
    for m in 1..=7 {
        println!(
            "n={m}: {:5} classes, {:4} with alpha <= 2",
            count_classes(m)?,
            enumerate_alpha_bounded(m, 2)?.len()
        );
    }
    Ok(())
}
