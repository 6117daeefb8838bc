// Closed-form predictions, including cells far beyond direct computation.

use std::error::Error;

use grqn::formulas::{
    c4_representation, decompose, fixed_point_count, predict_cell, predicted_k,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (n, d, c) in [(1u32, 3u64, 3u64), (2, 7, 7), (3, 5, 11), (4, 50, 50)] {
        let cell = predict_cell(n, d, d + c)?;
        println!("n={n} d={d} c={c}: {} ({:?})", cell.value, cell.kind);
    }
    let (n, d, m) = (2u32, 6u64, 21u64);
    let (eps, l) = decompose(n, m).ok_or("m below 2^{n+1} - 1")?;
    let fixed = fixed_point_count(&c4_representation(n, eps, l), d);
    println!("n={n} d={d} m={m}: fixed points {fixed}, prediction {}", predicted_k(n, d, m)?);
    assert_eq!(fixed, predicted_k(n, d, m)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
