use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relation between two tuple entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum PairRelation {
    Equal = 0,
    Adjacent = 1,
    NonAdjacent = 2,
}

impl PairRelation {
    #[inline]
    pub fn of(g: &Graph, u: usize, v: usize) -> Self {
        if u == v {
            PairRelation::Equal
        } else if g.has_edge(u, v) {
            PairRelation::Adjacent
        } else {
            PairRelation::NonAdjacent
        }
    }
}

/// Atomic type of a vertex tuple: which positions hold the same vertex and
/// which positions are joined by an edge.
///
/// Two tuples have equal atomic types exactly when mapping one onto the other
/// position by position is a partial isomorphism. Positions are 1-based in the
/// public fields to match the usual notation for tuple positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomicType {
    /// Partition of `1..=len` into blocks of equal vertices, blocks sorted by
    /// first element.
    pub equality: Vec<Vec<usize>>,
    /// Pairs `(i, j)`, `i < j`, whose vertices are adjacent.
    pub edges: Vec<(usize, usize)>,
}

impl AtomicType {
    /// Compact key: one relation per position pair `(i, j)`, `i < j`, in
    /// lexicographic order. Equal keys iff equal atomic types.
    pub fn key(g: &Graph, tuple: &[usize]) -> Vec<PairRelation> {
        let mut key = Vec::with_capacity(tuple.len() * tuple.len().saturating_sub(1) / 2);
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                key.push(PairRelation::of(g, tuple[i], tuple[j]));
            }
        }
        key
    }
}

pub fn atp(g: &Graph, tuple: &[usize]) -> Result<AtomicType> {
    if let Some(&v) = tuple.iter().find(|&&v| v >= g.order()) {
        return Err(Error::Argument(format!(
            "vertex {v} out of range for {} vertices",
            g.order()
        )));
    }
    let mut equality: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![usize::MAX; tuple.len()];
    for i in 0..tuple.len() {
        if block_of[i] != usize::MAX {
            continue;
        }
        let block: Vec<usize> = (i..tuple.len()).filter(|&j| tuple[j] == tuple[i]).collect();
        for &j in &block {
            block_of[j] = equality.len();
        }
        equality.push(block.iter().map(|j| j + 1).collect());
    }
    let mut edges = Vec::new();
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] != tuple[j] && g.has_edge(tuple[i], tuple[j]) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Ok(AtomicType { equality, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn documented_examples() {
        let k2 = complete(2);
        assert_eq!(
            atp(&k2, &[0, 1]).unwrap(),
            AtomicType {
                equality: vec![vec![1], vec![2]],
                edges: vec![(1, 2)]
            }
        );
        assert_eq!(
            atp(&k2, &[0, 0]).unwrap(),
            AtomicType {
                equality: vec![vec![1, 2]],
                edges: vec![]
            }
        );
        assert_eq!(
            atp(&cycle(6), &[0, 3]).unwrap(),
            AtomicType {
                equality: vec![vec![1], vec![2]],
                edges: vec![]
            }
        );
        assert!(atp(&k2, &[0, 2]).is_err());
    }

    #[test]
    fn invariant_under_automorphisms() {
        let g = cycle(6);
        let rotate = |v: usize| (v + 2) % 6;
        let reflect = |v: usize| (6 - v) % 6;
        for t in [[0, 1, 3], [2, 2, 5], [1, 4, 0]] {
            let base = atp(&g, &t).unwrap();
            assert_eq!(atp(&g, &t.map(rotate)).unwrap(), base);
            assert_eq!(atp(&g, &t.map(reflect)).unwrap(), base);
            assert_eq!(
                AtomicType::key(&g, &t),
                AtomicType::key(&g, &t.map(reflect))
            );
        }
    }

    #[test]
    fn key_agrees_with_partial_isomorphism() {
        // Exhaustive over all triples of two small graphs: equal keys iff the
        // positionwise map is a partial isomorphism.
        let graphs = [path(4), star(3)];
        let partial_iso = |g: &Graph, x: &[usize], h: &Graph, y: &[usize]| {
            (0..3).all(|i| {
                (0..3).all(|j| {
                    (x[i] == x[j]) == (y[i] == y[j])
                        && g.has_edge(x[i], x[j]) == h.has_edge(y[i], y[j])
                })
            })
        };
        let triples: Vec<[usize; 3]> = (0..64).map(|c| [c / 16, (c / 4) % 4, c % 4]).collect();
        for x in &triples {
            for y in &triples {
                let same = atp(&graphs[0], x).unwrap() == atp(&graphs[1], y).unwrap();
                assert_eq!(same, partial_iso(&graphs[0], x, &graphs[1], y));
            }
        }
    }
}
