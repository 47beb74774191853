use crate::error::{Error, Result};

fn overflow() -> Error {
    Error::Numeric("homomorphism count overflows u128".into())
}

/// Sparse non-negative integer matrix. Rows hold `(column, value)` pairs
/// sorted by column with no zero values, so equal matrices compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, u128)>>,
}

impl HomMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        HomMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        HomMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triples; duplicates add up.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, u128)>,
    ) -> Result<Self> {
        let mut data: Vec<Vec<(usize, u128)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of range");
            data[r].push((c, v));
        }
        for row in &mut data {
            row.sort_unstable_by_key(|&(c, _)| c);
            let mut merged: Vec<(usize, u128)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = lv.checked_add(v).ok_or_else(overflow)?,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|&(_, v)| v != 0);
            *row = merged;
        }
        Ok(HomMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u128 {
        self.data[r]
            .binary_search_by_key(&c, |&(col, _)| col)
            .map_or(0, |i| self.data[r][i].1)
    }

    pub fn row(&self, r: usize) -> &[(usize, u128)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.data
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().all(|&(c, _)| c == r))
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, u128)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, u128)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            data[c].push((r, v));
        }
        HomMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut data = Vec::with_capacity(self.rows);
        let mut acc = vec![0u128; other.cols];
        let mut touched = Vec::new();
        for row in &self.data {
            for &(t, a) in row {
                for &(c, b) in &other.data[t] {
                    if acc[c] == 0 {
                        touched.push(c);
                    }
                    let p = a.checked_mul(b).ok_or_else(overflow)?;
                    acc[c] = acc[c].checked_add(p).ok_or_else(overflow)?;
                }
            }
            touched.sort_unstable();
            data.push(
                touched
                    .iter()
                    .map(|&c| (c, std::mem::take(&mut acc[c])))
                    .collect(),
            );
            touched.clear();
        }
        Ok(HomMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let triplets: Result<Vec<_>> = self
            .triplets()
            .filter_map(|(r, c, a)| {
                let b = other.get(r, c);
                (b != 0).then(|| a.checked_mul(b).map(|p| (r, c, p)).ok_or_else(overflow))
            })
            .collect();
        Self::from_triplets(self.rows, self.cols, triplets?)
    }

    /// Sum of all entries.
    pub fn soe(&self) -> Result<u128> {
        self.triplets()
            .try_fold(0u128, |s, (_, _, v)| s.checked_add(v))
            .ok_or_else(overflow)
    }

    pub fn to_dense(&self) -> Vec<Vec<u128>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v;
        }
        out
    }
}
