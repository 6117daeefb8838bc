// Steenrod squares and Milnor primitives on Stiefel–Whitney classes.

use std::error::Error;

use grqn::schubert::{polynomial_to_schubert, Grid};
use grqn::steenrod::{alpha, dual_class, milnor_q, sq_generator, Polynomial};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let d = 3;
    println!("Sq^1 w_2 = {}", sq_generator(1, 2, d));
    println!("Sq^2 w_3 = {}", sq_generator(2, 3, d));
    for n in 0..=2 {
        println!("Q_{n}(w_2) = {}", milnor_q(n, &Polynomial::w(2, 2)));
        println!("alpha_{n} for d = {d}: {}", alpha(n, d));
    }
    println!("dual w_4 = {}", dual_class(4, d));
    let grid = Grid::new(3, 3);
    let x = milnor_q(1, &(&Polynomial::w(1, 3) * &Polynomial::w(2, 3)));
    println!("Q_1(w_1 w_2) in {grid} = {:?}", polynomial_to_schubert(&x, grid)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
