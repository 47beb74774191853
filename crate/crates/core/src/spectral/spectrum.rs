use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Q;

use super::maps::{evaluate_with, MatrixMapId, MatrixValue};

/// Numeric policy for floating point spectra.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralTolerance {
    /// Two eigenvalues are equal when they differ by at most
    /// `relative * max(1, |a|, |b|)`.
    pub relative: f64,
    /// Grid used to round reals before multiset comparison.
    pub grid: f64,
}

impl Default for SpectralTolerance {
    fn default() -> Self {
        SpectralTolerance {
            relative: 1e-7,
            grid: 1e-6,
        }
    }
}

impl SpectralTolerance {
    pub fn same(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.relative * 1f64.max(a.abs()).max(b.abs())
    }

    pub fn round(&self, x: f64) -> i64 {
        (x / self.grid).round() as i64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub value: f64,
    /// Imaginary part, zero for the symmetric maps.
    pub imag: f64,
    /// Geometric multiplicity (dimension of the eigenspace) for real
    /// eigenvalues, algebraic multiplicity for non-real ones.
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSummary {
    /// Sorted by real part, then imaginary part.
    pub eigenvalues: Vec<Eigenvalue>,
    pub tolerance: f64,
    /// `det(xI - M)` from the constant term up, for exactly evaluated maps.
    pub charpoly: Option<Vec<Q>>,
}

impl SpectrumSummary {
    /// Compares grouped eigenvalues within the tolerance.
    pub fn approx_eq(&self, other: &Self, tol: &SpectralTolerance) -> bool {
        self.eigenvalues.len() == other.eigenvalues.len()
            && self
                .eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .all(|(a, b)| {
                    a.multiplicity == b.multiplicity
                        && tol.same(a.value, b.value)
                        && tol.same(a.imag, b.imag)
                })
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }
}

fn symmetric(m: &DMatrix<f64>) -> bool {
    let scale = m.amax().max(1.0);
    m.nrows() == m.ncols() && (m - m.transpose()).amax() <= 1e-12 * scale
}

fn check_finite(m: &DMatrix<f64>, what: &str) -> Result<()> {
    if m.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::Numeric(format!("{what} has non-finite entries")))
    }
}

/// Groups sorted values whose neighbours are within tolerance; returns the
/// group means and sizes.
fn group(sorted: &[(f64, f64)], tol: &SpectralTolerance) -> Vec<(f64, f64, usize)> {
    let mut groups: Vec<(f64, f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        let split = i == sorted.len()
            || !tol.same(sorted[i - 1].0, sorted[i].0)
            || !tol.same(sorted[i - 1].1, sorted[i].1);
        if split {
            let chunk = &sorted[start..i];
            let k = chunk.len();
            let re = chunk.iter().map(|x| x.0).sum::<f64>() / k as f64;
            let im = chunk.iter().map(|x| x.1).sum::<f64>() / k as f64;
            groups.push((re, if im.abs() <= tol.relative { 0.0 } else { im }, k));
            start = i;
        }
    }
    groups
}

/// Eigenvalues of `m` grouped within tolerance as `(re, im, algebraic
/// multiplicity)`, sorted.
fn grouped_eigenvalues(
    m: &DMatrix<f64>,
    tol: &SpectralTolerance,
) -> Result<Vec<(f64, f64, usize)>> {
    check_finite(m, "matrix")?;
    let mut values: Vec<(f64, f64)> = if symmetric(m) {
        m.clone()
            .symmetric_eigenvalues()
            .iter()
            .map(|&x| (x, 0.0))
            .collect()
    } else {
        let schur = m
            .clone()
            .try_schur(1e-14, 10_000)
            .ok_or_else(|| Error::Numeric("Schur iteration did not converge".into()))?;
        schur
            .complex_eigenvalues()
            .iter()
            .map(|z| (z.re, z.im))
            .collect()
    };
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    // Snap tiny imaginary parts so conjugate pairs of a real value group.
    for v in &mut values {
        if v.1.abs() <= tol.relative * 1f64.max(v.0.abs()) {
            v.1 = 0.0;
        }
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(group(&values, tol))
}

fn rank(m: &DMatrix<f64>, tol: &SpectralTolerance) -> usize {
    let svd = m.clone().svd(false, false);
    let scale = svd.singular_values.max().max(1.0);
    svd.singular_values
        .iter()
        .filter(|&&s| s > tol.relative * 10.0 * scale)
        .count()
}

/// Spectrum of an already evaluated matrix.
pub fn spectrum_of(value: &MatrixValue, tol: &SpectralTolerance) -> Result<SpectrumSummary> {
    let m = value.to_float();
    let n = m.nrows();
    let sym = symmetric(&m);
    let eigenvalues = grouped_eigenvalues(&m, tol)?
        .into_iter()
        .map(|(value, imag, alg)| {
            let multiplicity = if sym || imag != 0.0 {
                alg
            } else {
                n - rank(&(&m - DMatrix::identity(n, n) * value), tol)
            };
            Eigenvalue {
                value,
                imag,
                multiplicity,
            }
        })
        .collect();
    Ok(SpectrumSummary {
        eigenvalues,
        tolerance: tol.relative,
        charpoly: value.as_exact().map(|q| q.charpoly()),
    })
}

pub fn spectrum(id: &MatrixMapId, g: &Graph) -> Result<SpectrumSummary> {
    spectrum_with(id, g, &SpectralTolerance::default())
}

pub fn spectrum_with(
    id: &MatrixMapId,
    g: &Graph,
    tol: &SpectralTolerance,
) -> Result<SpectrumSummary> {
    spectrum_of(&evaluate_with(id, g, tol)?, tol)
}

/// Equal spectra. Exactly evaluated maps compare characteristic
/// polynomials; the others compare grouped eigenvalues.
pub fn cospectral(id: &MatrixMapId, g: &Graph, h: &Graph) -> Result<bool> {
    cospectral_with(id, g, h, &SpectralTolerance::default())
}

pub fn cospectral_with(
    id: &MatrixMapId,
    g: &Graph,
    h: &Graph,
    tol: &SpectralTolerance,
) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let a = evaluate_with(id, g, tol)?;
    let b = evaluate_with(id, h, tol)?;
    if let (Some(x), Some(y)) = (a.as_exact(), b.as_exact()) {
        return Ok(x.charpoly() == y.charpoly());
    }
    Ok(spectrum_of(&a, tol)?.approx_eq(&spectrum_of(&b, tol)?, tol))
}

/// The real eigenvalues of `value` with the projections onto their
/// eigenspaces, ascending. Symmetric matrices use orthonormal eigenvectors;
/// other matrices are assumed diagonalisable and use the Lagrange
/// interpolation product over the other eigenvalues.
pub fn eigenprojections(
    value: &MatrixValue,
    tol: &SpectralTolerance,
) -> Result<Vec<(f64, DMatrix<f64>)>> {
    let m = value.to_float();
    check_finite(&m, "matrix")?;
    let n = m.nrows();
    if symmetric(&m) {
        let eig = m.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
        let mut out: Vec<(f64, DMatrix<f64>, usize)> = Vec::new();
        for i in order {
            let lambda = eig.eigenvalues[i];
            let v = eig.eigenvectors.column(i);
            let p = v * v.transpose();
            match out.last_mut() {
                Some((mu, acc, count)) if tol.same(*mu, lambda) => {
                    *acc += p;
                    *mu = (*mu * *count as f64 + lambda) / (*count + 1) as f64;
                    *count += 1;
                }
                _ => out.push((lambda, p, 1)),
            }
        }
        return Ok(out.into_iter().map(|(l, p, _)| (l, p)).collect());
    }
    let groups = grouped_eigenvalues(&m, tol)?;
    let eye = DMatrix::<f64>::identity(n, n);
    let mut out = Vec::new();
    for &(lambda, imag, _) in &groups {
        if imag != 0.0 {
            continue;
        }
        let mut p = eye.clone();
        for &(mu, nu, _) in &groups {
            if mu == lambda && nu == imag {
                continue;
            }
            if nu == 0.0 {
                p = p * (&m - &eye * mu) / (lambda - mu);
            } else if nu > 0.0 {
                // Conjugate pair as one real quadratic factor.
                let quad = &m * &m - &m * (2.0 * mu) + &eye * (mu * mu + nu * nu);
                let denom = (lambda - mu).powi(2) + nu * nu;
                p = p * quad / denom;
            }
        }
        out.push((lambda, p));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::linalg::q;
    use crate::spectral::maps::evaluate;

    fn values(s: &SpectrumSummary) -> Vec<(f64, usize)> {
        s.eigenvalues
            .iter()
            .map(|e| ((e.value * 1e6).round() / 1e6, e.multiplicity))
            .collect()
    }

    #[test]
    fn documented_spectra() {
        let l = spectrum(&MatrixMapId::Laplacian, &complete(3)).unwrap();
        assert_eq!(values(&l), vec![(0.0, 1), (3.0, 2)]);
        assert_eq!(l.charpoly.unwrap(), vec![q(0), q(9), q(-6), q(1)]);
        let c6 = spectrum(&MatrixMapId::Adjacency, &cycle(6)).unwrap();
        assert_eq!(values(&c6), vec![(-2.0, 1), (-1.0, 2), (1.0, 2), (2.0, 1)]);
        let t = spectrum(&MatrixMapId::Adjacency, &two_triangles()).unwrap();
        assert_eq!(values(&t), vec![(-1.0, 4), (2.0, 2)]);
        let e = spectrum(&MatrixMapId::Adjacency, &Graph::empty(4)).unwrap();
        assert_eq!(values(&e), vec![(0.0, 4)]);
    }

    #[test]
    fn documented_cospectrality() {
        let (g, h) = (cycle_plus_isolated(), star(4));
        assert!(cospectral(&MatrixMapId::Adjacency, &g, &h).unwrap());
        // x^5 - 4x^3
        let p = spectrum(&MatrixMapId::Adjacency, &h)
            .unwrap()
            .charpoly
            .unwrap();
        assert_eq!(p, vec![q(0), q(0), q(0), q(-4), q(0), q(1)]);
        assert!(!cospectral(&MatrixMapId::Laplacian, &cycle(6), &two_triangles()).unwrap());
        assert!(!cospectral(&MatrixMapId::Adjacency, &cycle(6), &two_triangles()).unwrap());
    }

    #[test]
    fn random_walk_spectrum_is_real_and_complete() {
        let g = random_gnp(8, 0.5, 3);
        if g.isolated_vertices().next().is_some() {
            return;
        }
        let s = spectrum(&MatrixMapId::RandomWalk, &g).unwrap();
        assert!(s.eigenvalues.iter().all(|e| e.imag == 0.0));
        assert_eq!(s.multiplicity_sum(), 8);
    }

    #[test]
    fn projections_are_idempotent_and_complete() {
        let tol = SpectralTolerance::default();
        let maps = [
            MatrixMapId::Adjacency,
            MatrixMapId::Laplacian,
            MatrixMapId::RandomWalk,
            MatrixMapId::Seidel,
        ];
        for seed in 0..6 {
            let g = random_gnp(7, 0.5, seed);
            for id in &maps {
                let Ok(value) = evaluate(id, &g) else {
                    continue;
                };
                let m = value.to_float();
                let projections = eigenprojections(&value, &tol).unwrap();
                let mut sum = DMatrix::<f64>::zeros(7, 7);
                for (lambda, p) in &projections {
                    assert!((p * p - p).amax() < 1e-8, "{id} not idempotent");
                    assert!((p * &m - p * *lambda).amax() < 1e-8);
                    // Trace gives the eigenspace dimension.
                    let tr = p.trace();
                    assert!((tr - tr.round()).abs() < 1e-6);
                    sum += p;
                }
                assert!(
                    (sum - DMatrix::<f64>::identity(7, 7)).amax() < 1e-8,
                    "{id} incomplete"
                );
            }
        }
    }
}
