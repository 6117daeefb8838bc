// Builds the `Q_n` matrix twice, from Lenart's formula and from the
// Stiefel–Whitney derivation, and checks they agree bit for bit.

use std::error::Error;

use grqn::homology::qn_homology;
use grqn::schubert::{derivation_qn_matrix, lenart_qn_matrix, Grid};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 0..=2 {
        for (d, c) in [(2, 3), (3, 3), (3, 4), (4, 4)] {
            let grid = Grid::new(d, c);
            let lenart = lenart_qn_matrix(n, grid);
            let derivation = derivation_qn_matrix(n, grid);
            if lenart != derivation {
                return Err(format!("methods disagree for n={n} on {grid}").into());
            }
            let h = qn_homology(&lenart)?;
            println!("n={n} {grid}: {} basis classes, k = {}", lenart.total_dim(), h.total);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
