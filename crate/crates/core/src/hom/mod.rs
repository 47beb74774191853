//! Homomorphism counts, homomorphism matrices of bilabelled graphs and the
//! contracted-forest pattern class.

mod bilabelled;
mod count;
mod iso;
mod matrix;
pub mod tplus;

pub(crate) use bilabelled::identify;
pub use bilabelled::BilabelledGraph;
pub use count::{forest_hom_count, hom_count, hom_count_backtrack, hom_count_with};
pub(crate) use iso::isomorphic_unchecked;
pub use iso::{brute_isomorphic, brute_isomorphic_with};
pub use matrix::HomMatrix;
pub use tplus::{
    enumerate_tplus, hom_indist_tplus, hom_indist_tplus_with, tplus_affine_probe, TPlusGenerator,
    TPlusPattern, TPlusVerdict,
};
