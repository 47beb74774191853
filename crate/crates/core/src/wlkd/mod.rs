//! Bilabelled graphs whose labels remember their place in a pebbled tree
//! cover, the finite generator family they are composed from, their
//! augmented homomorphism matrices, and the two certificate checks for
//! k-WL after d rounds: a pseudo-stochastic intertwiner and a word search
//! over sums of entries.

mod augmented;
mod certificates;
mod decompose;
mod element;
mod generators;
mod random;

pub use augmented::{augmented_matrix, augmented_matrix_with, tag_index, AugmentedMatrix, Block};
pub use certificates::{
    pseudo_stochastic_feasible, pseudo_stochastic_feasible_with, word_soe_test, word_soe_test_with,
    Letter, PseudoStochasticVerdict, Word, WordVerdict,
};
pub use decompose::decompose;
pub use element::{series_compose_wlkd, Axiom, CoveredBigraph, Validation, WlkdElement};
pub use generators::{
    compose_generators, enumerate_generators, enumerate_generators_with, GeneratorId, GeneratorKind,
};
pub use random::random_element;

#[cfg(test)]
mod tests;
