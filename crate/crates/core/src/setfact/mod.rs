//! Equivalence relations on finite sets, factor pairs, Fact X, and the
//! bridge to categorical decompositions.

mod bridge;
mod eqrel;
mod factx;

pub use bridge::{
    bridge_with, decomposition_to_pair, factx_section, factx_section_with, factx_vs_decompositions,
    pair_to_decomposition, BridgeCertificate, KernelConvention, SetSection, KERNEL_CONVENTION,
};
pub use eqrel::{all_partitions, permute, rel_compose, rel_meet, EqRel, Relation};
pub use factx::{
    build_factx, build_factx_limited, factor_pairs, factor_pairs_limited, FactX, FactorPair,
    DEFAULT_SET_LIMIT,
};
pub(crate) use factx::{set_guard, uniform_partitions};
