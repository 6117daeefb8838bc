// Lenart's border-strip rule for `Q_n(s_λ)`, one coefficient at a time
// and as a full expansion.

use std::error::Error;

use grqn::schubert::{lenart_qn, Grid};
use grqn::young::{classify_strip, corners, lenart_coefficient, skew, Partition};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let lambda = Partition::new(vec![1])?;
    let grid = Grid::new(2, 4);
    for mu in [vec![4], vec![3, 1], vec![2, 2]] {
        let mu = Partition::new(mu)?;
        let shape = skew(&mu, &lambda)?;
        println!(
            "{mu}/{lambda}: {:?}, corners {:?}, coefficient {}",
            classify_strip(&shape),
            corners(&shape)?,
            u8::from(lenart_coefficient(&lambda, &mu)?)
        );
    }
    let q1 = lenart_qn(1, &lambda, grid);
    println!("Q_1(s{lambda}) in {grid} = {q1:?}");
    assert_eq!(q1.num_classes(), 2);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
