//! Patterns obtained from a forest by contracting a non-empty vertex set to a
//! single vertex, and the five 2-bilabelled graphs acting on their
//! 2-labelled versions.

use std::collections::HashMap;

use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::linalg::{q, AffineSystem};

use super::bilabelled::BilabelledGraph;
use super::count::hom_count_with;
use super::iso::{invariant, isomorphic_unchecked};

/// A forest together with the contracted set `B` and the resulting graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPlusPattern {
    pub forest: Graph,
    pub contracted: Vec<usize>,
    pub graph: Graph,
}

/// `T/B`: all of `contracted` becomes one vertex, loops and parallel edges
/// are dropped. The merged vertex takes the smallest id in `contracted`
/// and the others are renumbered in order.
pub fn contract(forest: &Graph, contracted: &[usize]) -> Graph {
    assert!(!contracted.is_empty(), "contracted set must be non-empty");
    let target = *contracted.iter().min().unwrap();
    let mut id = vec![usize::MAX; forest.order()];
    let mut next = 0;
    for v in 0..forest.order() {
        if v == target || !contracted.contains(&v) {
            id[v] = next;
            next += 1;
        }
    }
    for &v in contracted {
        id[v] = id[target];
    }
    let edges = forest
        .edges()
        .iter()
        .map(|&(u, v)| (id[u], id[v]))
        .filter(|(u, v)| u != v);
    Graph::new(next, edges).expect("contraction stays in range")
}

/// Keeps one representative per isomorphism class, bucketed by a cheap
/// invariant.
struct IsoSet {
    buckets: HashMap<(usize, usize, Vec<(usize, Vec<usize>)>), Vec<usize>>,
}

impl IsoSet {
    fn new() -> Self {
        IsoSet {
            buckets: HashMap::new(),
        }
    }

    /// Returns true when `g` is new; `index` is recorded for it.
    fn insert(&mut self, g: &Graph, index: usize, all: &[Graph]) -> bool {
        let bucket = self.buckets.entry(invariant(g)).or_default();
        if bucket.iter().any(|&i| isomorphic_unchecked(&all[i], g)) {
            return false;
        }
        bucket.push(index);
        true
    }
}

/// All forests with `1..=max_vertices` vertices up to isomorphism, grown by
/// adding an isolated vertex or a leaf.
pub fn forests_up_to(max_vertices: usize) -> Vec<Graph> {
    let mut all: Vec<Graph> = Vec::new();
    let mut layer = vec![Graph::empty(1)];
    while let Some(first) = layer.first() {
        if first.order() > max_vertices {
            break;
        }
        all.extend(layer.iter().cloned());
        let n = first.order();
        let mut next: Vec<Graph> = Vec::new();
        let mut seen = IsoSet::new();
        for f in &layer {
            let mut candidates = vec![Graph::new(n + 1, f.edges().iter().copied()).unwrap()];
            for v in 0..n {
                candidates
                    .push(Graph::new(n + 1, f.edges().iter().copied().chain([(v, n)])).unwrap());
            }
            for c in candidates {
                if seen.insert(&c, next.len(), &next) {
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    all
}

/// Every graph `T/B` for a forest `T` on at most `max_vertices` vertices and
/// non-empty `B`, one per isomorphism class, ordered by forest size first.
pub fn enumerate_tplus(max_vertices: usize) -> Result<Vec<TPlusPattern>> {
    enumerate_tplus_with(max_vertices, &Limits::default())
}

pub fn enumerate_tplus_with(max_vertices: usize, limits: &Limits) -> Result<Vec<TPlusPattern>> {
    check_cap(
        "T+ forest order",
        max_vertices as u128,
        limits.tplus_cap as u128,
    )?;
    let mut patterns: Vec<TPlusPattern> = Vec::new();
    let mut graphs: Vec<Graph> = Vec::new();
    let mut seen = IsoSet::new();
    for forest in forests_up_to(max_vertices) {
        let n = forest.order();
        for mask in 1u32..(1 << n) {
            let contracted: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let graph = contract(&forest, &contracted);
            if seen.insert(&graph, graphs.len(), &graphs) {
                graphs.push(graph.clone());
                patterns.push(TPlusPattern {
                    forest: forest.clone(),
                    contracted,
                    graph,
                });
            }
        }
    }
    Ok(patterns)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TPlusVerdict {
    /// Every pattern up to the bound has equal counts.
    EqualUpToBound { patterns: usize },
    Distinguished {
        pattern: TPlusPattern,
        count_g: u128,
        count_h: u128,
    },
}

/// Compares homomorphism counts from every enumerated pattern.
pub fn hom_indist_tplus(g: &Graph, h: &Graph, max_vertices: usize) -> Result<TPlusVerdict> {
    hom_indist_tplus_with(g, h, max_vertices, &Limits::default())
}

pub fn hom_indist_tplus_with(
    g: &Graph,
    h: &Graph,
    max_vertices: usize,
    limits: &Limits,
) -> Result<TPlusVerdict> {
    let patterns = enumerate_tplus_with(max_vertices, limits)?;
    let total = patterns.len();
    for pattern in patterns {
        let count_g = hom_count_with(&pattern.graph, g, limits)?;
        let count_h = hom_count_with(&pattern.graph, h, limits)?;
        if count_g != count_h {
            return Ok(TPlusVerdict::Distinguished {
                pattern,
                count_g,
                count_h,
            });
        }
    }
    Ok(TPlusVerdict::EqualUpToBound { patterns: total })
}

/// The five (2,2)-bilabelled graphs: identity, connect, forget, edge and
/// merge. Each keeps the first label fixed under composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TPlusGenerator {
    Identity,
    Connect,
    Forget,
    Edge,
    Merge,
}

impl TPlusGenerator {
    pub const ALL: [TPlusGenerator; 5] = [
        TPlusGenerator::Identity,
        TPlusGenerator::Connect,
        TPlusGenerator::Forget,
        TPlusGenerator::Edge,
        TPlusGenerator::Merge,
    ];

    pub fn bilabelled(self) -> BilabelledGraph {
        let (graph, ins, outs) = match self {
            TPlusGenerator::Identity => (Graph::empty(2), vec![0, 1], vec![0, 1]),
            TPlusGenerator::Connect => (Graph::new(3, [(1, 2)]).unwrap(), vec![0, 1], vec![0, 2]),
            TPlusGenerator::Forget => (Graph::empty(3), vec![0, 1], vec![0, 2]),
            TPlusGenerator::Edge => (Graph::new(2, [(0, 1)]).unwrap(), vec![0, 1], vec![0, 1]),
            TPlusGenerator::Merge => (Graph::empty(1), vec![0, 0], vec![0, 0]),
        };
        BilabelledGraph::new(graph, ins, outs).unwrap()
    }
}

/// Affine relaxation of the doubly-stochastic certificate: is there a
/// rational `X` indexed by `V(H)^2 x V(G)^2` with unit row and column sums
/// and `X B_G = B_H X` for the five generators? Sign constraints are
/// dropped, so `false` proves the graphs differ on some pattern while
/// `true` is inconclusive.
pub fn tplus_affine_probe(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    let (ng, nh) = (g.order() * g.order(), h.order() * h.order());
    check_cap(
        "certificate side",
        ng.max(nh) as u128,
        limits.certificate_cap,
    )?;
    let mats_g: Vec<_> = TPlusGenerator::ALL
        .iter()
        .map(|b| b.bilabelled().hom_matrix(g))
        .collect::<Result<_>>()?;
    let mats_h: Vec<_> = TPlusGenerator::ALL
        .iter()
        .map(|b| b.bilabelled().hom_matrix(h))
        .collect::<Result<_>>()?;
    intertwiner_feasible(&mats_g, &mats_h, ng, nh)
}

/// Solves `X A_i = B_i X` plus unit row and column sums over the rationals.
/// Diagonal pairs `(A_i, B_i)` force `X(a, b) = 0` unless the diagonal
/// entries agree, which removes most unknowns before elimination.
pub(crate) fn intertwiner_feasible(
    mats_g: &[super::HomMatrix],
    mats_h: &[super::HomMatrix],
    ng: usize,
    nh: usize,
) -> Result<bool> {
    Ok(intertwiner_solution(mats_g, mats_h, ng, nh)?.is_some())
}

/// Like [`intertwiner_feasible`] but returns the solution as a sparse list
/// `(row, col, value)` of non-zero entries.
pub(crate) fn intertwiner_solution(
    mats_g: &[super::HomMatrix],
    mats_h: &[super::HomMatrix],
    ng: usize,
    nh: usize,
) -> Result<Option<Vec<(usize, usize, crate::linalg::Q)>>> {
    let diagonal: Vec<usize> = (0..mats_g.len())
        .filter(|&i| mats_g[i].is_diagonal() && mats_h[i].is_diagonal())
        .collect();
    let signature = |m: &[super::HomMatrix], x: usize| -> Vec<u128> {
        diagonal.iter().map(|&i| m[i].get(x, x)).collect()
    };
    let mut by_sig: HashMap<Vec<u128>, Vec<usize>> = HashMap::new();
    for b in 0..ng {
        by_sig.entry(signature(mats_g, b)).or_default().push(b);
    }
    // Unknown ids for allowed (row of X over H, column of X over G) pairs.
    let mut var: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs = Vec::new();
    for a in 0..nh {
        if let Some(cols) = by_sig.get(&signature(mats_h, a)) {
            for &b in cols {
                var.insert((a, b), pairs.len());
                pairs.push((a, b));
            }
        }
    }
    let mut system = AffineSystem::new(pairs.len());
    let mut row_terms: Vec<Vec<usize>> = vec![Vec::new(); nh];
    let mut col_terms: Vec<Vec<usize>> = vec![Vec::new(); ng];
    for (id, &(a, b)) in pairs.iter().enumerate() {
        row_terms[a].push(id);
        col_terms[b].push(id);
    }
    for terms in row_terms.iter().chain(&col_terms) {
        system.add_equation(terms.iter().map(|&v| (v, q(1))), q(1));
        if !system.is_consistent() {
            return Ok(None);
        }
    }
    let transposes: Vec<_> = mats_h.iter().map(|m| m.transpose()).collect();
    for i in (0..mats_g.len()).filter(|i| !diagonal.contains(i)) {
        // (X A)(a, c) - (B X)(a, c) = 0 for every (a, c).
        let mut equations: HashMap<(usize, usize), HashMap<usize, i128>> = HashMap::new();
        for (id, &(a, b)) in pairs.iter().enumerate() {
            for &(c, w) in mats_g[i].row(b) {
                *equations.entry((a, c)).or_default().entry(id).or_default() += w as i128;
            }
            // X(a, b) appears in (B X)(a', b) with weight B(a', a).
            for &(a2, w) in transposes[i].row(a) {
                *equations.entry((a2, b)).or_default().entry(id).or_default() -= w as i128;
            }
        }
        let mut keys: Vec<_> = equations.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let terms = &equations[&key];
            let mut terms: Vec<(usize, i128)> = terms
                .iter()
                .map(|(&v, &c)| (v, c))
                .filter(|&(_, c)| c != 0)
                .collect();
            if terms.is_empty() {
                continue;
            }
            terms.sort_unstable();
            system.add_equation(
                terms
                    .into_iter()
                    .map(|(v, c)| (v, crate::linalg::Q::from_integer(c.into()))),
                q(0),
            );
            if !system.is_consistent() {
                return Ok(None);
            }
        }
    }
    Ok(system.solve().map(|x| {
        x.into_iter()
            .enumerate()
            .filter(|(_, v)| !num_traits::Zero::is_zero(v))
            .map(|(id, v)| (pairs[id].0, pairs[id].1, v))
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::hom::iso::brute_isomorphic;

    /// Oracle: every acyclic edge set on exactly `n` labelled vertices.
    fn labelled_forests(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        (0u32..(1 << pairs.len()))
            .map(|mask| {
                Graph::new(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &e)| e),
                )
                .unwrap()
            })
            .filter(|g| g.is_forest())
            .collect()
    }

    fn distinct_by_oracle(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
        let mut reps: Vec<Graph> = Vec::new();
        for g in graphs {
            if !reps.iter().any(|r| brute_isomorphic(r, &g).unwrap()) {
                reps.push(g);
            }
        }
        reps
    }

    #[test]
    fn forest_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|m| forests_up_to(m).iter().filter(|f| f.order() == m).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 3, 6, 10, 20, 37, 76]);
        for m in 1..=4 {
            let oracle = distinct_by_oracle(labelled_forests(m));
            assert_eq!(oracle.len(), counts[m - 1]);
        }
    }

    #[test]
    fn small_bounds_match_oracle() {
        for max in 1..=4 {
            let oracle = distinct_by_oracle((1..=max).flat_map(|m| {
                labelled_forests(m).into_iter().flat_map(move |t| {
                    (1u32..(1 << m)).map(move |mask| {
                        let b: Vec<usize> = (0..m).filter(|&v| mask & (1 << v) != 0).collect();
                        contract(&t, &b)
                    })
                })
            }));
            assert_eq!(
                enumerate_tplus(max).unwrap().len(),
                oracle.len(),
                "bound {max}"
            );
        }
        assert_eq!(enumerate_tplus(3).unwrap().len(), 6);
    }

    #[test]
    fn contains_documented_patterns() {
        let two = enumerate_tplus(2).unwrap();
        assert!(two.iter().any(|p| p.graph == Graph::empty(1)));
        assert!(two.iter().any(|p| p.graph == complete(2)));
        let four = enumerate_tplus(4).unwrap();
        assert!(four
            .iter()
            .any(|p| brute_isomorphic(&p.graph, &cycle(3)).unwrap()));
        assert_eq!(contract(&path(4), &[0, 3]), cycle(3));
    }

    #[test]
    fn verdicts() {
        assert!(matches!(
            hom_indist_tplus(&cycle(6), &two_triangles(), 6).unwrap(),
            TPlusVerdict::Distinguished { .. }
        ));
        let g = random_gnp(6, 0.5, 2);
        assert!(matches!(
            hom_indist_tplus(&g, &g, 5).unwrap(),
            TPlusVerdict::EqualUpToBound { .. }
        ));
        assert!(enumerate_tplus(9).is_err());
    }

    #[test]
    fn generator_matrices() {
        let k2 = complete(2);
        let e = TPlusGenerator::Edge.bilabelled().hom_matrix(&k2).unwrap();
        // Pairs are indexed x1 * n + x2.
        assert_eq!(e.triplets().collect::<Vec<_>>(), vec![(1, 1, 1), (2, 2, 1)]);
        let g = random_gnp(4, 0.5, 7);
        let i = TPlusGenerator::Identity
            .bilabelled()
            .hom_matrix(&g)
            .unwrap();
        assert_eq!(i, crate::hom::HomMatrix::identity(16));
        let m = TPlusGenerator::Merge.bilabelled().hom_matrix(&g).unwrap();
        assert!(m.triplets().all(|(r, c, _)| r == c && r / 4 == r % 4));
        // Every generator fixes the first label.
        for b in TPlusGenerator::ALL {
            let mat = b.bilabelled().hom_matrix(&g).unwrap();
            assert!(mat.triplets().all(|(r, c, _)| r / 4 == c / 4));
        }
    }

    #[test]
    fn affine_probe() {
        let limits = Limits::default();
        let g = random_gnp(5, 0.5, 1);
        assert!(tplus_affine_probe(&g, &g, &limits).unwrap());
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(4);
        let (p, _) = random_permutation_of(&g, &mut rng);
        assert!(tplus_affine_probe(&g, &p, &limits).unwrap());
        assert!(!tplus_affine_probe(&complete(3), &path(3), &limits).unwrap());
    }
}
