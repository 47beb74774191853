use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{q, QMatrix, Q};

use super::spectrum::{eigenprojections, SpectralTolerance};

/// A graph matrix map. Integer maps and `RandomWalk` evaluate exactly, the
/// spectral constructions in floating point.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixMapId {
    Adjacency,
    Degree,
    /// `D - A`.
    Laplacian,
    /// `D + A`.
    SignlessLaplacian,
    /// `J - A - I`.
    ComplementAdjacency,
    /// `J - I - 2A`.
    Seidel,
    /// `D^-1 A`.
    RandomWalk,
    /// `D^-1/2 L D^-1/2`.
    SymLaplacian,
    /// `sum_l exp(-l t) L_l` over the Laplacian eigenprojections.
    HeatKernel(f64),
    /// Projection onto the eigenspace of `base` for eigenvalue `lambda`.
    Projection {
        base: Box<MatrixMapId>,
        lambda: f64,
    },
    Identity,
    /// All-ones matrix `J`.
    AllOnes,
    Composite(Box<MapExpr>),
}

/// Expression tree over matrix maps.
#[derive(Clone, Debug, PartialEq)]
pub enum MapExpr {
    Map(MatrixMapId),
    Sum(Box<MapExpr>, Box<MapExpr>),
    Product(Box<MapExpr>, Box<MapExpr>),
    Transpose(Box<MapExpr>),
    Scale(i64, Box<MapExpr>),
    /// Matrix inverse; a singular matrix maps to zero.
    Inverse(Box<MapExpr>),
}

impl MapExpr {
    pub fn map(id: MatrixMapId) -> Self {
        MapExpr::Map(id)
    }

    pub fn sum(a: MapExpr, b: MapExpr) -> Self {
        MapExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn product(a: MapExpr, b: MapExpr) -> Self {
        MapExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn transpose(a: MapExpr) -> Self {
        MapExpr::Transpose(Box::new(a))
    }

    pub fn scale(c: i64, a: MapExpr) -> Self {
        MapExpr::Scale(c, Box::new(a))
    }

    pub fn inverse(a: MapExpr) -> Self {
        MapExpr::Inverse(Box::new(a))
    }
}

impl From<MapExpr> for MatrixMapId {
    fn from(e: MapExpr) -> Self {
        match e {
            MapExpr::Map(id) => id,
            other => MatrixMapId::Composite(Box::new(other)),
        }
    }
}

/// The value of a map at a graph.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixValue {
    Exact(QMatrix),
    Float(DMatrix<f64>),
}

impl MatrixValue {
    pub fn order(&self) -> usize {
        match self {
            MatrixValue::Exact(m) => m.rows(),
            MatrixValue::Float(m) => m.nrows(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, MatrixValue::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&QMatrix> {
        match self {
            MatrixValue::Exact(m) => Some(m),
            MatrixValue::Float(_) => None,
        }
    }

    pub fn to_float(&self) -> DMatrix<f64> {
        match self {
            MatrixValue::Exact(m) => m.to_f64(),
            MatrixValue::Float(m) => m.clone(),
        }
    }

    fn combine(
        a: MatrixValue,
        b: MatrixValue,
        exact: impl FnOnce(&QMatrix, &QMatrix) -> QMatrix,
        float: impl FnOnce(&DMatrix<f64>, &DMatrix<f64>) -> DMatrix<f64>,
    ) -> MatrixValue {
        match (&a, &b) {
            (MatrixValue::Exact(x), MatrixValue::Exact(y)) => MatrixValue::Exact(exact(x, y)),
            _ => MatrixValue::Float(float(&a.to_float(), &b.to_float())),
        }
    }
}

fn integer_matrix(g: &Graph, f: impl Fn(usize, usize) -> i64) -> QMatrix {
    QMatrix::from_fn(g.order(), g.order(), |i, j| q(f(i, j)))
}

fn check_no_isolated(g: &Graph, map: &MatrixMapId) -> Result<()> {
    match g.isolated_vertices().next() {
        Some(vertex) => Err(Error::Singular {
            vertex,
            map: map.to_string(),
        }),
        None => Ok(()),
    }
}

/// Evaluates a map at `g` with the default tolerances.
pub fn evaluate(id: &MatrixMapId, g: &Graph) -> Result<MatrixValue> {
    evaluate_with(id, g, &SpectralTolerance::default())
}

pub fn evaluate_with(id: &MatrixMapId, g: &Graph, tol: &SpectralTolerance) -> Result<MatrixValue> {
    let a = |i: usize, j: usize| g.has_edge(i, j) as i64;
    let d = |i: usize, j: usize| if i == j { g.degree(i) as i64 } else { 0 };
    let eye = |i: usize, j: usize| (i == j) as i64;
    Ok(match id {
        MatrixMapId::Adjacency => MatrixValue::Exact(integer_matrix(g, a)),
        MatrixMapId::Degree => MatrixValue::Exact(integer_matrix(g, d)),
        MatrixMapId::Laplacian => MatrixValue::Exact(integer_matrix(g, |i, j| d(i, j) - a(i, j))),
        MatrixMapId::SignlessLaplacian => {
            MatrixValue::Exact(integer_matrix(g, |i, j| d(i, j) + a(i, j)))
        }
        MatrixMapId::ComplementAdjacency => {
            MatrixValue::Exact(integer_matrix(g, |i, j| 1 - a(i, j) - eye(i, j)))
        }
        MatrixMapId::Seidel => {
            MatrixValue::Exact(integer_matrix(g, |i, j| 1 - eye(i, j) - 2 * a(i, j)))
        }
        MatrixMapId::Identity => MatrixValue::Exact(integer_matrix(g, eye)),
        MatrixMapId::AllOnes => MatrixValue::Exact(integer_matrix(g, |_, _| 1)),
        MatrixMapId::RandomWalk => {
            check_no_isolated(g, id)?;
            MatrixValue::Exact(QMatrix::from_fn(g.order(), g.order(), |i, j| {
                if g.has_edge(i, j) {
                    Q::new(1.into(), (g.degree(i) as i64).into())
                } else {
                    Q::zero()
                }
            }))
        }
        MatrixMapId::SymLaplacian => {
            check_no_isolated(g, id)?;
            let n = g.order();
            MatrixValue::Float(DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    1.0
                } else if g.has_edge(i, j) {
                    -1.0 / ((g.degree(i) * g.degree(j)) as f64).sqrt()
                } else {
                    0.0
                }
            }))
        }
        MatrixMapId::HeatKernel(t) => {
            let l = evaluate_with(&MatrixMapId::Laplacian, g, tol)?;
            let n = g.order();
            let mut out = DMatrix::zeros(n, n);
            for (lambda, p) in eigenprojections(&l, tol)? {
                out += p * (-lambda * t).exp();
            }
            MatrixValue::Float(out)
        }
        MatrixMapId::Projection { base, lambda } => {
            let b = evaluate_with(base, g, tol)?;
            let n = g.order();
            let hit = eigenprojections(&b, tol)?
                .into_iter()
                .find(|(mu, _)| tol.same(*mu, *lambda));
            MatrixValue::Float(hit.map_or_else(|| DMatrix::zeros(n, n), |(_, p)| p))
        }
        MatrixMapId::Composite(expr) => evaluate_expr(expr, g, tol)?,
    })
}

fn evaluate_expr(expr: &MapExpr, g: &Graph, tol: &SpectralTolerance) -> Result<MatrixValue> {
    Ok(match expr {
        MapExpr::Map(id) => evaluate_with(id, g, tol)?,
        MapExpr::Sum(a, b) => MatrixValue::combine(
            evaluate_expr(a, g, tol)?,
            evaluate_expr(b, g, tol)?,
            |x, y| x.add(y),
            |x, y| x + y,
        ),
        MapExpr::Product(a, b) => MatrixValue::combine(
            evaluate_expr(a, g, tol)?,
            evaluate_expr(b, g, tol)?,
            |x, y| x.mul(y),
            |x, y| x * y,
        ),
        MapExpr::Transpose(a) => match evaluate_expr(a, g, tol)? {
            MatrixValue::Exact(m) => MatrixValue::Exact(m.transpose()),
            MatrixValue::Float(m) => MatrixValue::Float(m.transpose()),
        },
        MapExpr::Scale(c, a) => match evaluate_expr(a, g, tol)? {
            MatrixValue::Exact(m) => MatrixValue::Exact(m.scale(&q(*c))),
            MatrixValue::Float(m) => MatrixValue::Float(m * (*c as f64)),
        },
        MapExpr::Inverse(a) => match evaluate_expr(a, g, tol)? {
            MatrixValue::Exact(m) => {
                let n = m.rows();
                MatrixValue::Exact(m.inverse().unwrap_or_else(|| QMatrix::zeros(n, n)))
            }
            MatrixValue::Float(m) => {
                let n = m.nrows();
                // Treat numerically singular matrices as singular.
                let svd = m.clone().svd(false, false);
                let smax = svd.singular_values.max();
                let smin = svd.singular_values.min();
                if n == 0 || smin <= tol.relative * smax.max(1.0) {
                    MatrixValue::Float(DMatrix::zeros(n, n))
                } else {
                    MatrixValue::Float(m.try_inverse().unwrap_or_else(|| DMatrix::zeros(n, n)))
                }
            }
        },
    })
}

impl fmt::Display for MatrixMapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixMapId::Adjacency => f.write_str("adjacency"),
            MatrixMapId::Degree => f.write_str("degree"),
            MatrixMapId::Laplacian => f.write_str("laplacian"),
            MatrixMapId::SignlessLaplacian => f.write_str("signless-laplacian"),
            MatrixMapId::ComplementAdjacency => f.write_str("complement-adjacency"),
            MatrixMapId::Seidel => f.write_str("seidel"),
            MatrixMapId::RandomWalk => f.write_str("random-walk"),
            MatrixMapId::SymLaplacian => f.write_str("sym-laplacian"),
            MatrixMapId::HeatKernel(t) => write!(f, "heat-kernel:{t}"),
            MatrixMapId::Projection { base, lambda } => write!(f, "projection:{base}:{lambda}"),
            MatrixMapId::Identity => f.write_str("identity"),
            MatrixMapId::AllOnes => f.write_str("all-ones"),
            MatrixMapId::Composite(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Display for MapExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapExpr::Map(id) => write!(f, "{id}"),
            MapExpr::Sum(a, b) => write!(f, "({a} + {b})"),
            MapExpr::Product(a, b) => write!(f, "({a} * {b})"),
            MapExpr::Transpose(a) => write!(f, "({a})^T"),
            MapExpr::Scale(c, a) => write!(f, "{c}{a}"),
            MapExpr::Inverse(a) => write!(f, "({a})^-1"),
        }
    }
}

/// Parses the names printed by `Display` for the non-composite maps.
impl FromStr for MatrixMapId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("unknown matrix map `{s}`"));
        let parse_f64 = |x: &str| x.parse::<f64>().map_err(|_| bad());
        Ok(match s {
            "adjacency" | "A" => MatrixMapId::Adjacency,
            "degree" | "D" => MatrixMapId::Degree,
            "laplacian" | "L" => MatrixMapId::Laplacian,
            "signless-laplacian" | "signless" => MatrixMapId::SignlessLaplacian,
            "complement-adjacency" | "complement" => MatrixMapId::ComplementAdjacency,
            "seidel" | "S" => MatrixMapId::Seidel,
            "random-walk" | "rw" => MatrixMapId::RandomWalk,
            "sym-laplacian" | "normalized-laplacian" => MatrixMapId::SymLaplacian,
            "identity" | "I" => MatrixMapId::Identity,
            "all-ones" | "J" => MatrixMapId::AllOnes,
            _ => {
                if let Some(t) = s.strip_prefix("heat-kernel:") {
                    MatrixMapId::HeatKernel(parse_f64(t)?)
                } else if let Some(rest) = s.strip_prefix("projection:") {
                    let (base, lambda) = rest.rsplit_once(':').ok_or_else(bad)?;
                    MatrixMapId::Projection {
                        base: Box::new(base.parse()?),
                        lambda: parse_f64(lambda)?,
                    }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// The maps that evaluate on any graph (no inverse degrees).
pub fn integer_maps() -> Vec<MatrixMapId> {
    vec![
        MatrixMapId::Adjacency,
        MatrixMapId::Degree,
        MatrixMapId::Laplacian,
        MatrixMapId::SignlessLaplacian,
        MatrixMapId::ComplementAdjacency,
        MatrixMapId::Seidel,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use num_traits::One;

    fn exact(id: MatrixMapId, g: &Graph) -> QMatrix {
        evaluate(&id, g).unwrap().as_exact().unwrap().clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(
            exact(MatrixMapId::Seidel, &complete(2)),
            QMatrix::from_integers(&[vec![0, -1], vec![-1, 0]])
        );
        assert_eq!(
            exact(MatrixMapId::Laplacian, &complete(3)),
            QMatrix::from_integers(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
        );
        let p = evaluate(
            &MatrixMapId::Projection {
                base: Box::new(MatrixMapId::Adjacency),
                lambda: 1.0,
            },
            &complete(2),
        )
        .unwrap()
        .to_float();
        for x in p.iter() {
            assert!((x - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn projection_off_spectrum_is_zero() {
        let p = evaluate(
            &MatrixMapId::Projection {
                base: Box::new(MatrixMapId::Adjacency),
                lambda: 0.3,
            },
            &cycle(5),
        )
        .unwrap();
        assert!(p.to_float().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn isolated_vertices_fail_for_inverse_degrees() {
        let g = cycle_plus_isolated();
        for id in [MatrixMapId::RandomWalk, MatrixMapId::SymLaplacian] {
            match evaluate(&id, &g) {
                Err(Error::Singular { vertex, .. }) => assert_eq!(vertex, 4),
                other => panic!("expected a singularity error, got {other:?}"),
            }
        }
    }

    #[test]
    fn random_walk_rows_sum_to_one() {
        let m = exact(MatrixMapId::RandomWalk, &path(4));
        for i in 0..4 {
            let s: Q = (0..4).map(|j| m.get(i, j).clone()).sum();
            assert!(s.is_one());
        }
    }

    #[test]
    fn singular_inverse_is_zero() {
        let e = MatrixMapId::from(MapExpr::inverse(MapExpr::map(MatrixMapId::Laplacian)));
        assert!(exact(e, &cycle(4)).is_zero());
        let e = MatrixMapId::from(MapExpr::inverse(MapExpr::map(
            MatrixMapId::SignlessLaplacian,
        )));
        let m = exact(e, &cycle(5));
        assert_eq!(
            m.mul(&exact(MatrixMapId::SignlessLaplacian, &cycle(5))),
            QMatrix::identity(5)
        );
    }

    #[test]
    fn names_round_trip() {
        let ids = [
            MatrixMapId::Seidel,
            MatrixMapId::HeatKernel(0.5),
            MatrixMapId::Projection {
                base: Box::new(MatrixMapId::Laplacian),
                lambda: 2.0,
            },
        ];
        for id in ids {
            assert_eq!(id.to_string().parse::<MatrixMapId>().unwrap(), id);
        }
        assert!("nope".parse::<MatrixMapId>().is_err());
    }
}
