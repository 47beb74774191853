//! Graph matrix maps, their spectra and eigenprojections, the Fürer
//! invariant and commute distances.

mod commute;
mod equitable;
mod fuerer;
mod maps;
mod spectrum;

pub use commute::{
    commute_distances, commute_kernel, commute_multiset_equal, hitting_times, power_distances,
    CommuteResult,
};
pub use equitable::{
    averaging_matrix, e1_deviation, entry_colour_consistency_check, EntryConsistency,
};
pub use fuerer::{fuerer_invariant, fuerer_invariant_with, FuererInvariant};
pub use maps::{evaluate, evaluate_with, integer_maps, MapExpr, MatrixMapId, MatrixValue};
pub use spectrum::{
    cospectral, cospectral_with, eigenprojections, spectrum, spectrum_of, spectrum_with,
    Eigenvalue, SpectralTolerance, SpectrumSummary,
};
