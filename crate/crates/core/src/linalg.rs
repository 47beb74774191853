//! Exact rational linear algebra: dense matrices for graph matrix maps and a
//! sparse incremental solver for affine systems.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Q::one() } else { Q::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(rows.len(), cols, |i, j| q(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        QMatrix { data, ..*self }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        QMatrix { data, ..*self }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let data = self.data.iter().map(|a| a * c).collect();
        QMatrix { data, ..*self }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(t, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        self.solve(&Self::identity(self.rows))
    }

    /// Solves `self * X = rhs` for square non-singular `self`.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert!(self.is_square());
        assert_eq!(self.rows, rhs.rows, "dimension mismatch in solve");
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut x = rhs.clone();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                for j in 0..m {
                    x.data.swap(pivot * m + j, col * m + j);
                }
            }
            let p = a.get(col, col).recip();
            for j in 0..n {
                a.data[col * n + j] *= &p;
            }
            for j in 0..m {
                x.data[col * m + j] *= &p;
            }
            for r in (0..n).filter(|&r| r != col) {
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let d = &a.data[col * n + j] * &f;
                    a.data[r * n + j] -= d;
                }
                for j in 0..m {
                    let d = &x.data[col * m + j] * &f;
                    x.data[r * m + j] -= d;
                }
            }
        }
        Some(x)
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from the
    /// constant term up to the leading 1 (Faddeev-LeVerrier).
    pub fn charpoly(&self) -> Vec<Q> {
        assert!(self.is_square());
        if self.is_integral() {
            let ints: Vec<BigInt> = self.data.iter().map(|x| x.to_integer()).collect();
            return charpoly_integer(self.rows, &ints)
                .into_iter()
                .map(Q::from_integer)
                .collect();
        }
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m);
            for i in 0..n {
                next.data[i * n + i] += &coeffs[n + 1 - k];
            }
            m = next;
            let am = self.mul(&m);
            coeffs[n - k] = -am.trace() / q(k as i64);
        }
        coeffs
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| to_f64(self.get(i, j)))
    }
}

fn charpoly_integer(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let mul = |x: &[BigInt], y: &[BigInt]| {
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for t in 0..n {
                let p = &x[i * n + t];
                if p.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let q = &y[t * n + j];
                    if !q.is_zero() {
                        out[i * n + j] += p * q;
                    }
                }
            }
        }
        out
    };
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut next = mul(a, &m);
        for i in 0..n {
            next[i * n + i] += &coeffs[n + 1 - k];
        }
        m = next;
        let am = mul(a, &m);
        let trace: BigInt = (0..n).map(|i| am[i * n + i].clone()).sum();
        // Exact: the coefficients of an integer matrix are integers.
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    coeffs
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Ratio of huge integers: scale both down to a common magnitude.
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// An affine system `sum_j a_ij x_j = b_i` over the rationals, kept in
/// reduced row echelon form while equations are added.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    vars: usize,
    /// Pivot row of each variable, if any.
    pivot_row: Vec<Option<usize>>,
    rows: Vec<Row>,
    inconsistent: bool,
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    coeffs: BTreeMap<usize, Q>,
    rhs: Q,
}

impl AffineSystem {
    pub fn new(vars: usize) -> Self {
        AffineSystem {
            vars,
            pivot_row: vec![None; vars],
            rows: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    /// Adds one equation. Repeated variables are summed.
    pub fn add_equation(&mut self, terms: impl IntoIterator<Item = (usize, Q)>, rhs: Q) {
        if self.inconsistent {
            return;
        }
        let mut coeffs: BTreeMap<usize, Q> = BTreeMap::new();
        for (v, c) in terms {
            assert!(v < self.vars, "variable {v} out of range");
            *coeffs.entry(v).or_insert_with(Q::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        let mut rhs = rhs;

        let pivots: Vec<usize> = coeffs
            .keys()
            .copied()
            .filter(|&v| self.pivot_row[v].is_some())
            .collect();
        for v in pivots {
            let Some(f) = coeffs.remove(&v) else { continue };
            let row = &self.rows[self.pivot_row[v].unwrap()];
            for (&w, c) in &row.coeffs {
                if w == v {
                    continue;
                }
                let e = coeffs.entry(w).or_insert_with(Q::zero);
                *e -= &f * c;
                if e.is_zero() {
                    coeffs.remove(&w);
                }
            }
            rhs -= &f * &row.rhs;
        }

        // Pick the pivot with the smallest coefficient to limit growth.
        let Some((&pivot, _)) = coeffs
            .iter()
            .min_by_key(|(&v, c)| (c.numer().bits() + c.denom().bits(), v))
        else {
            if !rhs.is_zero() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = coeffs[&pivot].recip();
        for c in coeffs.values_mut() {
            *c *= &inv;
        }
        rhs *= &inv;

        // Keep the echelon form reduced: clear the new pivot elsewhere.
        for row in &mut self.rows {
            let Some(f) = row.coeffs.remove(&pivot) else {
                continue;
            };
            for (&w, c) in &coeffs {
                if w == pivot {
                    continue;
                }
                let e = row.coeffs.entry(w).or_insert_with(Q::zero);
                *e -= &f * c;
                if e.is_zero() {
                    row.coeffs.remove(&w);
                }
            }
            row.rhs -= &f * &rhs;
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(Row { pivot, coeffs, rhs });
    }

    /// A solution with all free variables set to zero, or `None` if the
    /// system is inconsistent.
    pub fn solve(&self) -> Option<Vec<Q>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![Q::zero(); self.vars];
        for row in &self.rows {
            x[row.pivot] = row.rhs.clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let a = QMatrix::from_integers(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMatrix::identity(3));
        assert!(QMatrix::from_integers(&[vec![1, 2], vec![2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn charpoly_small() {
        // K3 Laplacian: x (x - 3)^2 = x^3 - 6x^2 + 9x.
        let l = QMatrix::from_integers(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(l.charpoly(), vec![q(0), q(9), q(-6), q(1)]);
        let half = l.scale(&Q::new(1.into(), 2.into()));
        // Eigenvalues 0, 3/2, 3/2.
        assert_eq!(
            half.charpoly(),
            vec![q(0), Q::new(9.into(), 4.into()), q(-3), q(1)]
        );
        assert_eq!(QMatrix::zeros(0, 0).charpoly(), vec![q(1)]);
    }

    #[test]
    fn charpoly_matches_determinant_oracle() {
        // det(xI - A) at integer points against cofactor expansion.
        fn det(m: &[Vec<Q>]) -> Q {
            if m.is_empty() {
                return Q::one();
            }
            let n = m.len();
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<Q>> = m[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|&(c, _)| c != j)
                                .map(|(_, v)| v.clone())
                                .collect()
                        })
                        .collect();
                    let s = if j % 2 == 0 { q(1) } else { q(-1) };
                    s * &m[0][j] * det(&minor)
                })
                .sum()
        }
        let a = QMatrix::from_integers(&[
            vec![0, 1, 1, 0],
            vec![1, 0, 2, -1],
            vec![1, 2, 0, 1],
            vec![0, -1, 1, 3],
        ]);
        let p = a.charpoly();
        for x in -3..=3 {
            let m: Vec<Vec<Q>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            if i == j {
                                q(x) - a.get(i, j)
                            } else {
                                -a.get(i, j)
                            }
                        })
                        .collect()
                })
                .collect();
            let val: Q = p
                .iter()
                .enumerate()
                .map(|(i, c)| c * q(x).pow(i as i32))
                .sum();
            assert_eq!(val, det(&m));
        }
    }

    #[test]
    fn affine_solver() {
        // x + y = 3, x - y = 1 -> (2, 1); a free third variable stays 0.
        let mut s = AffineSystem::new(3);
        s.add_equation([(0, q(1)), (1, q(1))], q(3));
        s.add_equation([(0, q(1)), (1, q(-1))], q(1));
        s.add_equation([(0, q(2)), (1, q(2))], q(6));
        assert_eq!(s.rank(), 2);
        assert_eq!(s.solve().unwrap(), vec![q(2), q(1), q(0)]);
        s.add_equation([(0, q(1)), (1, q(1))], q(4));
        assert!(s.solve().is_none());
    }

    #[test]
    fn affine_solver_random_consistent() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for _ in 0..20 {
            let vars = 6;
            let truth: Vec<Q> = (0..vars).map(|_| q(rng.gen_range(-3..4))).collect();
            let mut s = AffineSystem::new(vars);
            let mut eqs = Vec::new();
            for _ in 0..4 {
                let row: Vec<(usize, Q)> =
                    (0..vars).map(|v| (v, q(rng.gen_range(-2..3)))).collect();
                let rhs: Q = row.iter().map(|(v, c)| c * &truth[*v]).sum();
                s.add_equation(row.clone(), rhs.clone());
                eqs.push((row, rhs));
            }
            let x = s.solve().unwrap();
            for (row, rhs) in eqs {
                let lhs: Q = row.iter().map(|(v, c)| c * &x[*v]).sum();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
