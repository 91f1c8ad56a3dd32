//! Runs every finite check, then its mutated form.
use turan2d::verify::{run_check, CheckId, CheckParams};

fn main() -> turan2d::Result<()> {
    for id in CheckId::ALL {
        let mut p = CheckParams::defaults(id);
        if id == CheckId::TriangleNbhd {
            // keep the demo quick
            p.n_max = 8;
            p.samples = 100;
        }
        let plain = run_check(id, &p)?;
        p.mutated = true;
        let mutated = run_check(id, &p)?;
        println!(
            "{id:16} passed={:5} over {:6} instances; mutated: {} counterexamples",
            plain.passed, plain.instances_checked, mutated.total_counterexamples
        );
    }
    Ok(())
}
