use crate::error::Result;
use crate::graph::Graph;

use super::maps::{evaluate_with, MatrixMapId};
use super::spectrum::{eigenprojections, spectrum_of, SpectralTolerance};

/// Adjacency spectrum plus, for every vertex `v`, the entries `p_vv` of the
/// eigenprojections and the multiset of `p_vw` over all `w`. Reals are
/// stored as multiples of the rounding grid so the invariant compares with
/// `==`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuererInvariant {
    /// `(rounded eigenvalue, multiplicity)` ascending.
    pub spectrum: Vec<(i64, usize)>,
    /// Sorted multiset over vertices of `(p_vv, sorted p_vw tuples)`. Every
    /// tuple has one entry per distinct eigenvalue in ascending order.
    pub per_vertex: Vec<(Vec<i64>, Vec<Vec<i64>>)>,
    pub grid: u64,
}

pub fn fuerer_invariant(g: &Graph) -> Result<FuererInvariant> {
    fuerer_invariant_with(g, &SpectralTolerance::default())
}

pub fn fuerer_invariant_with(g: &Graph, tol: &SpectralTolerance) -> Result<FuererInvariant> {
    let a = evaluate_with(&MatrixMapId::Adjacency, g, tol)?;
    let spec = spectrum_of(&a, tol)?;
    let projections = eigenprojections(&a, tol)?;
    let n = g.order();
    let tuple = |v: usize, w: usize| -> Vec<i64> {
        projections
            .iter()
            .map(|(_, p)| tol.round(p[(v, w)]))
            .collect()
    };
    let mut per_vertex: Vec<(Vec<i64>, Vec<Vec<i64>>)> = (0..n)
        .map(|v| {
            let mut off: Vec<Vec<i64>> = (0..n).map(|w| tuple(v, w)).collect();
            off.sort();
            (tuple(v, v), off)
        })
        .collect();
    per_vertex.sort();
    Ok(FuererInvariant {
        spectrum: spec
            .eigenvalues
            .iter()
            .map(|e| (tol.round(e.value), e.multiplicity))
            .collect(),
        per_vertex,
        grid: (1.0 / tol.grid).round() as u64,
    })
}
