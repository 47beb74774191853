//! k-dimensional Weisfeiler–Leman on `V^k`.
//!
//! Round 0 colours each tuple by its atomic type. A round maps a tuple `t` to
//! its previous colour together with the multiset, over all vertices `w`, of
//! the atomic type of `t w` and the previous colours of `t[1/w], ..., t[k/w]`.
//! Since the previous colour already fixes the atomic type of `t`, the atomic
//! type of `t w` is recorded by the relations of `w` to each entry of `t`.

use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::limits::Limits;

use super::atp::{AtomicType, PairRelation};
use super::{rank, Colouring, Depth, WlVerdict};

pub(crate) struct JointKwl {
    pub colours: Vec<Vec<u32>>,
    pub classes: usize,
    pub rounds: usize,
}

fn decode(mut idx: usize, n: usize, k: usize, out: &mut [usize]) {
    for i in (0..k).rev() {
        out[i] = idx % n;
        idx /= n;
    }
}

/// Refines the tuple universes of all `graphs` jointly.
pub(crate) fn kwl_joint(
    graphs: &[&Graph],
    k: usize,
    depth: Depth,
    limits: &Limits,
) -> Result<JointKwl> {
    assert!(k >= 1, "k-WL needs k >= 1");
    let mut offsets = Vec::with_capacity(graphs.len() + 1);
    let mut total = 0usize;
    for g in graphs {
        let tuples = (g.order() as u128).pow(k as u32);
        check_cap("n^k tuples", tuples, limits.tuple_cap)?;
        offsets.push(total);
        total += tuples as usize;
    }
    offsets.push(total);

    let mut tuple = vec![0usize; k];
    let mut initial = Vec::with_capacity(total);
    for g in graphs {
        let n = g.order();
        for idx in 0..n.pow(k as u32) {
            decode(idx, n, k, &mut tuple);
            initial.push(AtomicType::key(g, &tuple));
        }
    }
    let (mut colours, mut classes) = rank(&initial);
    drop(initial);

    let max_rounds = depth.max_rounds();
    let mut rounds = 0;
    let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); total];
    let mut elems: Vec<Vec<u32>> = Vec::new();
    while total > 0 && max_rounds.is_none_or(|m| rounds < m) {
        for (gi, g) in graphs.iter().enumerate() {
            let n = g.order();
            let base = offsets[gi];
            let weights: Vec<usize> = (0..k).map(|i| n.pow((k - 1 - i) as u32)).collect();
            for idx in 0..n.pow(k as u32) {
                decode(idx, n, k, &mut tuple);
                elems.clear();
                for w in 0..n {
                    let mut e = Vec::with_capacity(k + 1);
                    let rel = tuple
                        .iter()
                        .fold(0u32, |acc, &v| acc * 3 + PairRelation::of(g, v, w) as u32);
                    e.push(rel);
                    for i in 0..k {
                        let j = idx - tuple[i] * weights[i] + w * weights[i];
                        e.push(colours[base + j]);
                    }
                    elems.push(e);
                }
                elems.sort_unstable();
                let sig = &mut sigs[base + idx];
                sig.clear();
                sig.push(colours[base + idx]);
                for e in &elems {
                    sig.extend_from_slice(e);
                }
            }
        }
        let (next, next_classes) = rank(&sigs);
        rounds += 1;
        let stable = next_classes == classes;
        colours = next;
        classes = next_classes;
        if stable {
            break;
        }
    }

    let per_graph = (0..graphs.len())
        .map(|gi| colours[offsets[gi]..offsets[gi + 1]].to_vec())
        .collect();
    Ok(JointKwl {
        colours: per_graph,
        classes,
        rounds,
    })
}

/// The k-WL colouring of `V(g)^k` after `depth` rounds.
pub fn wlk_colour(g: &Graph, k: usize, depth: Depth) -> Result<Colouring> {
    wlk_colour_with(g, k, depth, &Limits::default())
}

pub fn wlk_colour_with(g: &Graph, k: usize, depth: Depth, limits: &Limits) -> Result<Colouring> {
    let mut joint = kwl_joint(&[g], k, depth, limits)?;
    let colours = joint.colours.pop().unwrap();
    Ok(Colouring::new(k, g.order(), colours, joint.classes))
}

/// Whether `g` and `h` have equal k-WL colour histograms after `depth`
/// rounds.
pub fn wlk_indistinguishable(g: &Graph, h: &Graph, k: usize, depth: Depth) -> Result<WlVerdict> {
    wlk_indistinguishable_with(g, h, k, depth, &Limits::default())
}

pub fn wlk_indistinguishable_with(
    g: &Graph,
    h: &Graph,
    k: usize,
    depth: Depth,
    limits: &Limits,
) -> Result<WlVerdict> {
    let joint = kwl_joint(&[g, h], k, depth, limits)?;
    let hist = |cs: &[u32]| {
        let mut out = vec![0usize; joint.classes];
        for &c in cs {
            out[c as usize] += 1;
        }
        out
    };
    Ok(WlVerdict::from_histograms(
        &hist(&joint.colours[0]),
        &hist(&joint.colours[1]),
        joint.rounds,
    ))
}

/// Dimension of the adjacency algebra: the number of stable 2-WL classes on
/// `V^2`.
pub fn adjacency_algebra_dimension(g: &Graph) -> Result<usize> {
    Ok(wlk_colour(g, 2, Depth::Stable)?.num_classes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::VertexColouredGraph;
    use crate::wl::wl1_refine;

    #[test]
    fn k1_matches_colour_refinement_round_by_round() {
        for g in [
            path(7),
            star(4),
            random_gnp(9, 0.4, 3),
            cycle_plus_isolated(),
        ] {
            for d in 0..5 {
                let a = wlk_colour(&g, 1, Depth::Finite(d)).unwrap();
                // Atomic types of single vertices are all equal, so the
                // uncoloured start matches.
                let (b, _) = wl1_refine(&VertexColouredGraph::uncoloured(g.clone()), Some(d));
                assert!(a.refines(&b) && b.refines(&a), "d = {d}");
            }
        }
    }

    #[test]
    fn round_zero_is_atomic_type() {
        let c = wlk_colour(&cycle(5), 2, Depth::Finite(0)).unwrap();
        // equal, adjacent, non-adjacent
        assert_eq!(c.num_classes(), 3);
    }

    #[test]
    fn two_wl_separates_hexagon_from_triangles() {
        let v = wlk_indistinguishable(&cycle(6), &two_triangles(), 2, Depth::Stable).unwrap();
        assert!(!v.indistinguishable);
        assert!(v.witness.is_some());
        let v = wlk_indistinguishable(&cycle(6), &two_triangles(), 1, Depth::Stable).unwrap();
        assert!(v.indistinguishable);
    }

    #[test]
    fn identical_graphs_are_indistinguishable() {
        let g = random_gnp(8, 0.5, 11);
        for k in 1..=3 {
            assert!(
                wlk_indistinguishable(&g, &g, k, Depth::Stable)
                    .unwrap()
                    .indistinguishable
            );
        }
    }

    #[test]
    fn small_adjacency_algebras() {
        assert_eq!(adjacency_algebra_dimension(&complete(2)).unwrap(), 2);
        // Strongly regular: diagonal, edges, non-edges.
        assert_eq!(adjacency_algebra_dimension(&cycle(5)).unwrap(), 3);
    }

    #[test]
    fn size_cap() {
        let limits = Limits {
            tuple_cap: 100,
            ..Limits::default()
        };
        assert!(matches!(
            wlk_colour_with(&cycle(11), 2, Depth::Stable, &limits),
            Err(crate::Error::SizeCap { .. })
        ));
    }

    #[test]
    fn partitions_refine_monotonically() {
        let g = random_gnp(8, 0.3, 5);
        let mut prev = wlk_colour(&g, 2, Depth::Finite(0)).unwrap();
        for d in 1..6 {
            let next = wlk_colour(&g, 2, Depth::Finite(d)).unwrap();
            assert!(next.refines(&prev));
            assert!(next.num_classes() >= prev.num_classes());
            prev = next;
        }
    }
}
