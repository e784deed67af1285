//! Orthomodular structures built from finite lattices, rings, sets and
//! product decompositions, together with certificates that intervals of these
//! structures are again structures of the same kind.

pub mod corpus;
pub mod error;
pub mod field;
pub mod finset;
pub mod io;
pub mod lattice_fact;
pub mod order;
pub mod ortho;
pub mod report;
pub mod ring;
pub mod setfact;
pub mod suite;

pub use error::{Error, Result};
pub use report::Report;
