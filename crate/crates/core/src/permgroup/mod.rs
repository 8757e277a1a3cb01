//! Finite permutation groups by full enumeration: closure, normality, derived
//! series, abelian-quotient chains, unit groups and embeddings into small
//! abelian groups.

mod abelian;
mod chain;
mod group;
mod perm;

pub use abelian::{
    aut_cyclic, find_embedding, unit_group, CyclicAutomorphism, CyclicGroupZ, Embedding,
    EmbeddingTarget, UnitGroup,
};
pub use chain::{solvable_via_abelian_chain, ChainCertificate, StepWitness};
pub use group::{PermGroup, DEFAULT_ORDER_BOUND};
pub use perm::Permutation;
