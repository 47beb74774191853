//! Weisfeiler–Leman colour refinement: 1-WL, k-WL for a given number of
//! iterations or to stability, and the (1,1)-WL comparison of
//! vertex-individualised graphs.
//!
//! Cross-graph comparisons refine the disjoint union of the graphs' tuple
//! universes in one run, so colour ids are directly comparable between the
//! graphs without any universal colour encoding.

mod atp;
mod kwl;
mod oneone;
mod refine;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use atp::{atp, AtomicType, PairRelation};
pub use kwl::{
    adjacency_algebra_dimension, wlk_colour, wlk_colour_with, wlk_indistinguishable,
    wlk_indistinguishable_with,
};
pub use oneone::{
    wl11_colour_classes, wl11_indistinguishable, wl11_joint_pair_colours, Wl11Verdict,
};
pub use refine::wl1_refine;

pub(crate) use refine::{rank, refine};

use crate::error::Error;

/// Number of refinement rounds to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Depth {
    Finite(usize),
    /// Refine until the partition no longer changes.
    Stable,
}

impl Depth {
    pub(crate) fn max_rounds(self) -> Option<usize> {
        match self {
            Depth::Finite(d) => Some(d),
            Depth::Stable => None,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{d}"),
            Depth::Stable => f.write_str("inf"),
        }
    }
}

impl FromStr for Depth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Depth::Stable),
            _ => s
                .parse()
                .map(Depth::Finite)
                .map_err(|_| Error::Argument(format!("`{s}` is neither an integer nor `inf`"))),
        }
    }
}

/// A colouring of `V^k`, stored densely in lexicographic tuple order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    arity: usize,
    n: usize,
    colours: Vec<u32>,
    num_classes: usize,
}

impl Colouring {
    pub(crate) fn new(arity: usize, n: usize, colours: Vec<u32>, num_classes: usize) -> Self {
        debug_assert_eq!(colours.len(), n.pow(arity as u32));
        Colouring {
            arity,
            n,
            colours,
            num_classes,
        }
    }

    /// Renumbers the used ids to `0..c` preserving their order.
    pub(crate) fn compacted(arity: usize, n: usize, colours: Vec<u32>) -> Self {
        let (ids, classes) = rank(&colours);
        Colouring::new(arity, n, ids, classes)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    /// Colour ids in lexicographic tuple order.
    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn get(&self, tuple: &[usize]) -> u32 {
        assert_eq!(tuple.len(), self.arity);
        self.colours[tuple.iter().fold(0, |acc, &v| acc * self.n + v)]
    }

    /// Class sizes indexed by colour id.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.num_classes];
        for &c in &self.colours {
            h[c as usize] += 1;
        }
        h
    }

    /// Number of colours used by pairs `(v, w)` with `v != w`. Only defined
    /// for colourings of pairs.
    pub fn off_diagonal_classes(&self) -> usize {
        assert_eq!(self.arity, 2, "off-diagonal classes need a pair colouring");
        let mut seen = vec![false; self.num_classes];
        for v in 0..self.n {
            for w in (0..self.n).filter(|&w| w != v) {
                seen[self.colours[v * self.n + w] as usize] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Colouring) -> bool {
        if self.colours.len() != coarser.colours.len() {
            return false;
        }
        let mut image = vec![u32::MAX; self.num_classes];
        self.colours
            .iter()
            .zip(&coarser.colours)
            .all(|(&c, &d)| match image[c as usize] {
                u32::MAX => {
                    image[c as usize] = d;
                    true
                }
                prev => prev == d,
            })
    }
}

/// A colour class whose size differs between the two compared graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourWitness {
    pub colour: usize,
    pub count_g: usize,
    pub count_h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlVerdict {
    pub indistinguishable: bool,
    pub iterations_used: usize,
    /// Present iff `indistinguishable` is false.
    pub witness: Option<ColourWitness>,
}

impl WlVerdict {
    /// Compares two class-size histograms over a shared id space.
    pub(crate) fn from_histograms(
        hist_g: &[usize],
        hist_h: &[usize],
        iterations_used: usize,
    ) -> Self {
        let len = hist_g.len().max(hist_h.len());
        let at = |h: &[usize], i: usize| h.get(i).copied().unwrap_or(0);
        let witness = (0..len)
            .find(|&i| at(hist_g, i) != at(hist_h, i))
            .map(|i| ColourWitness {
                colour: i,
                count_g: at(hist_g, i),
                count_h: at(hist_h, i),
            });
        WlVerdict {
            indistinguishable: witness.is_none(),
            iterations_used,
            witness,
        }
    }
}
