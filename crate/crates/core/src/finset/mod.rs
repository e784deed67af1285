//! Product decompositions of non-empty finite sets: pushouts, the
//! orthoalgebra 𝒟(A), honesty checks, and the section certificate.

mod decomp;
mod honesty;
mod map;
mod section;

pub use decomp::{enumerate_d, enumerate_d_limited, is_product, Decomposition, DecompositionOa};
pub use honesty::{
    claims_check, claims_check_on, honesty_spot_check, is_disjoint_product, ternary_square,
    Sampling, SAMPLED_SET_LIMIT,
};
pub use map::{is_pushout, pushout, FinMap, Pushout, PushoutSquare};
pub use section::{cat_section, cat_section_for, CatSection};
