//! Runs a few verification suites and prints their summaries.

use rball::verify::{run_suite, SuiteParams};

fn main() -> rball::Result<()> {
    let runs = [
        SuiteParams {
            trials: 200,
            ..SuiteParams::new("theorem1")
        },
        SuiteParams {
            trials: 200,
            k: Some(1),
            ..SuiteParams::new("theorem2")
        },
        SuiteParams {
            trials: 200,
            ..SuiteParams::new("theorem3")
        },
        SuiteParams {
            trials: 20,
            dim: 3,
            ..SuiteParams::new("theorem1")
        },
        SuiteParams {
            trials: 100,
            ..SuiteParams::new("minkowski-identity")
        },
        SuiteParams {
            trials: 100,
            ..SuiteParams::new("symmetral-2d")
        },
    ];
    for p in runs {
        let rep = run_suite(&SuiteParams { seed: 1, ..p })?;
        let s = &rep.summary;
        println!(
            "{:20} d={} {:4} trials: {} pass, {} fail, {} inconclusive, min margin {:.3e}",
            rep.suite, rep.parameters["dim"], s.trials, s.pass, s.fail, s.inconclusive, s.min_margin
        );
    }
    Ok(())
}
