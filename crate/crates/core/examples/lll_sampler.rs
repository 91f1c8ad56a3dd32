//! Random graphs at the local-lemma density and their independence numbers.
use turan2d::sampler::{experiment, sample_lll, verify_local, SampleParams};

fn main() -> turan2d::Result<()> {
    let params = SampleParams::new(200, 5, 3, 7)?;
    let g = sample_lll(&params)?;
    println!(
        "n=200 p={:.3e}: {} edges, {:?}",
        params.probability()?,
        g.edge_count(),
        verify_local(&g, &params.family)?
    );
    let rep = experiment(5, 3, &[64, 128, 256, 512], 20, 3)?;
    for row in &rep.rows {
        println!(
            "n={:3} accepted {:.2} alpha median {:?} vs n^(1/M) ln n = {:.1}",
            row.n, row.acceptance_rate, row.alpha_median, row.predicted_scale
        );
    }
    Ok(())
}
