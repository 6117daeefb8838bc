// The cofiber `C_d(R^m)` of `Gr_d(R^{m-1}) → Gr_d(R^m)`: its reduced
// `Q_n` homology, the connecting map, and the twisted-complex model.

use std::error::Error;

use grqn::cli::{cofiber_report, DEFAULT_CELL_LIMIT};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (n, d, m) in [(1, 2, 5), (1, 2, 7), (1, 2, 9), (1, 3, 8), (2, 3, 11), (2, 4, 11)] {
        let r = cofiber_report(n, d, m, DEFAULT_CELL_LIMIT)?;
        println!(
            "n={n} C_{d}(R^{m}): k = {} (predicted {}), rank δ = {} (predicted {}), rank p* = {}, twisted model {}",
            r.reduced_k,
            r.predicted_cofiber_k,
            r.connecting_rank,
            r.predicted_delta_rank,
            r.inclusion_rank,
            if r.twisted_agrees { "agrees" } else { "DISAGREES" }
        );
        if !r.twisted_agrees {
            return Err("twisted complex disagrees".into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
