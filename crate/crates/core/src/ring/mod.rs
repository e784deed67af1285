//! Finite rings with unit, the idempotent orthomodular poset E(R), and
//! corner rings.

mod idem;
mod table;

pub use idem::{
    build_er, corner_ring, idempotents, ring_section, ring_section_with, Corner, IdempotentOmp,
    RingSection,
};
pub use table::{check_ring, mat, mat_id, product_zn, zn, FinRing, RING_LIMIT};

#[cfg(test)]
mod tests;
