//! Checks that a matrix map commutes with the averaging matrices of
//! individualised colourings and that its entries depend only on
//! (1,1)-WL pair colours.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{individualise, Graph};
use crate::linalg::{to_f64, QMatrix, Q};
use crate::wl::{wl11_indistinguishable, wl11_joint_pair_colours, wl1_refine};

use super::maps::{evaluate_with, MatrixMapId, MatrixValue};
use super::spectrum::SpectralTolerance;

/// Averaging matrix of a vertex colouring: `M(x, y) = 1/|C|` when `x` and
/// `y` share the class `C`, else 0.
pub fn averaging_matrix(colours: &[u32]) -> QMatrix {
    let mut sizes: BTreeMap<u32, i64> = BTreeMap::new();
    for &c in colours {
        *sizes.entry(c).or_default() += 1;
    }
    let n = colours.len();
    QMatrix::from_fn(n, n, |i, j| {
        if colours[i] == colours[j] {
            Q::new(1.into(), sizes[&colours[i]].into())
        } else {
            Q::zero()
        }
    })
}

/// Largest entry of `M^v phi(G) - phi(G) M^v` over all vertices `v`, where
/// `M^v` averages over the stable colouring of `G` with `v` individualised.
/// Exact maps give an exact zero or a positive value.
pub fn e1_deviation(id: &MatrixMapId, g: &Graph, tol: &SpectralTolerance) -> Result<f64> {
    let phi = evaluate_with(id, g, tol)?;
    let mut worst = 0f64;
    for v in 0..g.order() {
        let (colouring, _) = wl1_refine(&individualise(g, v)?, None);
        let m = averaging_matrix(colouring.colours());
        let dev = match &phi {
            MatrixValue::Exact(p) => {
                let diff = m.mul(p).sub(&p.mul(&m));
                max_abs(&diff)
            }
            MatrixValue::Float(p) => {
                let mf = m.to_f64();
                (&mf * p - p * &mf).amax()
            }
        };
        worst = worst.max(dev);
    }
    Ok(worst)
}

fn max_abs(m: &QMatrix) -> f64 {
    let mut best = Q::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let a = m.get(i, j).abs();
            if a > best {
                best = a;
            }
        }
    }
    to_f64(&best)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntryConsistency {
    pub map: MatrixMapId,
    /// Whether both matrices were evaluated exactly.
    pub exact: bool,
    /// Largest spread of entries inside one joint pair-colour class.
    pub max_deviation: f64,
}

/// For (1,1)-WL indistinguishable `g` and `h`, entries of a map on pairs of
/// the same joint (1,1)-WL colour must agree. Reports the largest spread per
/// map.
pub fn entry_colour_consistency_check(
    g: &Graph,
    h: &Graph,
    ids: &[MatrixMapId],
    tol: &SpectralTolerance,
) -> Result<Vec<EntryConsistency>> {
    if !wl11_indistinguishable(g, h).verdict.indistinguishable {
        return Err(Error::Contract(
            "entry consistency needs (1,1)-WL indistinguishable graphs".into(),
        ));
    }
    let n = g.order();
    let (cg, ch) = wl11_joint_pair_colours(g, h);
    let mut report = Vec::new();
    for id in ids {
        let a = evaluate_with(id, g, tol)?;
        let b = evaluate_with(id, h, tol)?;
        let max_deviation = match (a.as_exact(), b.as_exact()) {
            (Some(x), Some(y)) => {
                let mut first: BTreeMap<u32, &Q> = BTreeMap::new();
                let mut worst = Q::zero();
                for (colours, m) in [(&cg, x), (&ch, y)] {
                    for i in 0..n {
                        for j in 0..n {
                            let e = m.get(i, j);
                            let f = *first.entry(colours[i * n + j]).or_insert(e);
                            let d = (e - f).abs();
                            if d > worst {
                                worst = d;
                            }
                        }
                    }
                }
                to_f64(&worst)
            }
            _ => float_spread(&cg, &ch, &a.to_float(), &b.to_float(), n),
        };
        report.push(EntryConsistency {
            map: id.clone(),
            exact: a.is_exact() && b.is_exact(),
            max_deviation,
        });
    }
    Ok(report)
}

fn float_spread(cg: &[u32], ch: &[u32], a: &DMatrix<f64>, b: &DMatrix<f64>, n: usize) -> f64 {
    let mut range: BTreeMap<u32, (f64, f64)> = BTreeMap::new();
    for (colours, m) in [(cg, a), (ch, b)] {
        for i in 0..n {
            for j in 0..n {
                let e = m[(i, j)];
                let r = range.entry(colours[i * n + j]).or_insert((e, e));
                r.0 = r.0.min(e);
                r.1 = r.1.max(e);
            }
        }
    }
    range.values().map(|(lo, hi)| hi - lo).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::spectral::maps::{integer_maps, MapExpr};

    fn all_maps() -> Vec<MatrixMapId> {
        let mut ids = integer_maps();
        ids.extend([
            MatrixMapId::RandomWalk,
            MatrixMapId::SymLaplacian,
            MatrixMapId::HeatKernel(0.7),
            MatrixMapId::Projection {
                base: Box::new(MatrixMapId::Adjacency),
                lambda: 0.0,
            },
        ]);
        ids
    }

    #[test]
    fn e1_holds_on_random_graphs() {
        let tol = SpectralTolerance::default();
        for seed in 0..6 {
            let g = random_gnp(7, 0.5, seed);
            for id in all_maps() {
                match e1_deviation(&id, &g, &tol) {
                    Ok(dev) => {
                        let bound = if evaluate_with(&id, &g, &tol).unwrap().is_exact() {
                            0.0
                        } else {
                            1e-8
                        };
                        assert!(dev <= bound, "{id} deviates by {dev}");
                    }
                    Err(Error::Singular { .. }) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn e1_holds_for_composites() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(31);
        let leaves = integer_maps();
        let tol = SpectralTolerance::default();
        for round in 0..15 {
            let mut expr = MapExpr::map(leaves[rng.gen_range(0..leaves.len())].clone());
            for _ in 0..3 {
                let other = MapExpr::map(leaves[rng.gen_range(0..leaves.len())].clone());
                expr = match rng.gen_range(0..4) {
                    0 => MapExpr::sum(expr, other),
                    1 => MapExpr::product(expr, other),
                    2 => MapExpr::transpose(expr),
                    _ => MapExpr::scale(rng.gen_range(-3..4), expr),
                };
            }
            let g = random_gnp(6, 0.5, round);
            let dev = e1_deviation(&expr.clone().into(), &g, &tol).unwrap();
            assert_eq!(dev, 0.0, "{expr}");
        }
    }

    #[test]
    fn self_consistency() {
        let tol = SpectralTolerance::default();
        let g = random_gnp(7, 0.5, 1);
        let r = entry_colour_consistency_check(&g, &g, &[MatrixMapId::Adjacency], &tol).unwrap();
        assert_eq!(r[0].max_deviation, 0.0);
        assert!(matches!(
            entry_colour_consistency_check(
                &cycle(6),
                &two_triangles(),
                &[MatrixMapId::Adjacency],
                &tol
            ),
            Err(Error::Contract(_))
        ));
    }
}
