//! Hill-climbing search that tries to shrink the margin of the open bounds.

use rball::verify::explore::{explore_conjectures, ExploreParams};

fn main() -> rball::Result<()> {
    for conjecture in [1, 2] {
        let rep = explore_conjectures(&ExploreParams {
            conjecture,
            iterations: 150,
            restarts: 3,
            seed: 5,
            ..ExploreParams::default()
        })?;
        println!(
            "{}: smallest margin {:.4e} over {} restarts, {} fail",
            rep.suite, rep.summary.min_margin, rep.summary.trials, rep.summary.fail
        );
    }
    Ok(())
}
