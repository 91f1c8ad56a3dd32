//! Exhaustive values of M(m, 3) for small m.
use turan2d::enumerate::{min_m2, Profile};

fn main() -> turan2d::Result<()> {
    for m in 5..=9 {
        let out = min_m2(m, 3, &Profile::Default)?;
        let value = out.value.map(|v| v.to_string()).unwrap_or_default();
        println!("M({m},3) = {value:5} exact={} witnesses={:?}", out.exact, out.witnesses);
    }
    let k = 10usize.div_ceil(2);
    let out = min_m2(10, 3, &Profile::CliqueCap(k))?;
    println!("M(10,3) = {} under {}", out.value.map(|v| v.to_string()).unwrap_or_default(), out.profile);
    Ok(())
}
