pub mod cli;
pub mod formulas;
pub mod homology;
pub mod schubert;
pub mod steenrod;
pub mod young;
