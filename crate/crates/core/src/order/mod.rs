//! Finite posets and bounded lattices.

pub mod gen;
mod lattice;
mod poset;

pub use lattice::{FinLattice, IntervalLattice, SymmetryClass, DEFAULT_LATTICE_LIMIT};
pub use poset::FinPoset;

#[cfg(test)]
mod tests;
