use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::hom::HomMatrix;
use crate::limits::Limits;

use super::element::WlkdElement;

/// Index of a pebble tuple `p: [k+d] -> 0..=k` among all such tuples in
/// lexicographic order.
pub fn tag_index(p: &[usize], k: usize) -> usize {
    p.iter().fold(0, |acc, &x| acc * (k + 1) + x)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub matrix: HomMatrix,
    pub p_in: Vec<usize>,
    pub p_out: Vec<usize>,
}

/// The homomorphism matrix of an element tensored with the indicator of
/// its `(p_in, p_out)` pair, stored as the single non-zero block. Rows and
/// columns of the materialised matrix are `tuple * T + tag` with
/// `T = (k+1)^(k+d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AugmentedMatrix {
    n: usize,
    k: usize,
    d: usize,
    block: Option<Block>,
}

impl AugmentedMatrix {
    pub fn zero(n: usize, k: usize, d: usize) -> Self {
        AugmentedMatrix {
            n,
            k,
            d,
            block: None,
        }
    }

    pub fn block(&self) -> Option<&Block> {
        self.block.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.block.as_ref().is_none_or(|b| b.matrix.is_zero())
    }

    pub fn tuples(&self) -> usize {
        self.n.pow((self.k + self.d) as u32)
    }

    pub fn tags(&self) -> usize {
        (self.k + 1).pow((self.k + self.d) as u32)
    }

    /// Side length of the materialised matrix.
    pub fn dim(&self) -> usize {
        self.tuples() * self.tags()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.n, self.k, self.d) != (other.n, other.k, other.d) {
            return Err(Error::Argument(
                "augmented matrices of different shapes".into(),
            ));
        }
        Ok(())
    }

    /// Block product: zero unless the inner pebble tuples agree.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let block = match (&self.block, &other.block) {
            (Some(a), Some(b)) if a.p_out == b.p_in => Some(Block {
                matrix: a.matrix.mul(&b.matrix)?,
                p_in: a.p_in.clone(),
                p_out: b.p_out.clone(),
            }),
            _ => None,
        };
        Ok(AugmentedMatrix { block, ..*self })
    }

    pub fn transpose(&self) -> Self {
        AugmentedMatrix {
            block: self.block.as_ref().map(|b| Block {
                matrix: b.matrix.transpose(),
                p_in: b.p_out.clone(),
                p_out: b.p_in.clone(),
            }),
            ..*self
        }
    }

    pub fn soe(&self) -> Result<u128> {
        self.block.as_ref().map_or(Ok(0), |b| b.matrix.soe())
    }

    pub fn get(&self, row: usize, col: usize) -> u128 {
        let t = self.tags();
        match &self.block {
            Some(b)
                if row % t == tag_index(&b.p_in, self.k)
                    && col % t == tag_index(&b.p_out, self.k) =>
            {
                b.matrix.get(row / t, col / t)
            }
            _ => 0,
        }
    }

    /// The full `dim x dim` sparse matrix.
    pub fn to_hom_matrix(&self) -> Result<HomMatrix> {
        let t = self.tags();
        let dim = self.dim();
        match &self.block {
            None => Ok(HomMatrix::zeros(dim, dim)),
            Some(b) => {
                let (ti, to) = (tag_index(&b.p_in, self.k), tag_index(&b.p_out, self.k));
                HomMatrix::from_triplets(
                    dim,
                    dim,
                    b.matrix
                        .triplets()
                        .map(|(r, c, v)| (r * t + ti, c * t + to, v)),
                )
            }
        }
    }
}

pub fn augmented_matrix(e: &WlkdElement, g: &Graph, k: usize, d: usize) -> Result<AugmentedMatrix> {
    augmented_matrix_with(e, g, k, d, &Limits::default())
}

/// `k` and `d` are needed to size the zero matrix of ⊥; they must match the
/// element otherwise.
pub fn augmented_matrix_with(
    e: &WlkdElement,
    g: &Graph,
    k: usize,
    d: usize,
    limits: &Limits,
) -> Result<AugmentedMatrix> {
    let n = g.order();
    let tuples = (n as u128).checked_pow((k + d) as u32).unwrap_or(u128::MAX);
    check_cap("augmented tuples n^(k+d)", tuples, limits.augmented_cap)?;
    match e {
        WlkdElement::Bottom => Ok(AugmentedMatrix::zero(n, k, d)),
        WlkdElement::Element(x) => {
            if (x.k(), x.d()) != (k, d) {
                return Err(Error::Argument(format!(
                    "element has (k, d) = ({}, {}), expected ({k}, {d})",
                    x.k(),
                    x.d()
                )));
            }
            Ok(AugmentedMatrix {
                n,
                k,
                d,
                block: Some(Block {
                    matrix: x.bigraph().hom_matrix_with(g, limits)?,
                    p_in: x.p_in().to_vec(),
                    p_out: x.p_out().to_vec(),
                }),
            })
        }
    }
}
