//! Radical chains, nested sets of normal radical extensions, and the group
//! side of solvability by radicals.
//!
//! A chain `ℚ = R_0 ⊂ R_1 ⊂ … ⊂ R_n` adjoins at each step an element `a_i`
//! with `a_i^{k_i} ∈ R_{i-1}`. Such a chain is usually not normal over ℚ, so
//! [`normalize_chain`] builds a normal tower `E_0 ⊂ E_1 ⊂ … ⊂ E_{n+1}` with
//! `E_1` cyclotomic and every further step a Kummer layer, together with
//! explicit embeddings `R_i ⊂ E_{i+1}`. The Galois group of the top field
//! then has a chain of normal subgroups with abelian quotients.

mod chain;
mod normal;
mod verdict;

pub use chain::{realize_chain, RadicalChain, RadicalSpec, RadicalStage, MAX_CHARACTERISTIC_DEGREE};
pub use normal::{
    associated_group_chain, layer_embeddings, normalize_chain, verify_nested_normal_radical, AssociatedChain,
    Check, KummerLayer, LayerEmbedding, NormalRadicalTower, RadicalImage, TowerReport,
};
pub use verdict::{
    necessary_condition_verdict, quintic_group_witness, FrobeniusObservation, QuinticConclusion, QuinticWitness,
    TransitiveQuintic, Verdict, VerdictKind, VerdictMethod,
};
