//! The Birkhoff graph `B_n`: permutations of `S_n`, adjacent when their
//! quotient `σ τ⁻¹` is a single cycle.
//!
//! Brute-force oracles on small `n`, the class-function characters `χ^λ(φ_A)`
//! of explicit sets, pseudorandomness and density increments, and the
//! recursive product constructions of independent sets and colorings.
//!
//! The API is 0-based; the text formats of [`PermSet`] and [`Coloring`] are 1-based.

mod brute;
mod classfn;
mod construct;
mod density;
mod perm;
mod set;

pub use brute::{brute_alpha, BRUTE_LIMIT};
pub use classfn::{
    count_edges, count_edges_ell, is_birkhoff_edge, lp1_assignment, parseval_check, parseval_sides,
    phi_char, phi_chars, quotient_class_counts, ParsevalSides,
};
pub use construct::{
    closed_form_palette, closed_form_size, coloring_palette, construct_coloring,
    construct_independent, independent_size, verify_coloring, verify_independent, COLORING_LIMIT,
    INDEPENDENT_LIMIT,
};
pub use density::{density_increment_step, full_density_increment, pseudorandom_witness, Witness};
pub use perm::{all_permutations, Permutation};
pub use set::{Coloring, PermSet};

use thiserror::Error;

use crate::characters::CharacterError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BirkhoffError {
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("expected ground set of size {expected}, got {got}")]
    GroundSetMismatch { expected: usize, got: usize },
    #[error("permutation {0} listed twice")]
    Duplicate(String),
    #[error("the set is empty")]
    Empty,
    #[error("{0}")]
    Range(String),
    #[error("n = {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Character(#[from] CharacterError),
}
