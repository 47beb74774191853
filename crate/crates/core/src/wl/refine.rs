//! Colour refinement (1-WL) over an explicit vertex universe.
//!
//! Colour ids are canonical: each round sorts the signatures and ranks them,
//! so identical inputs give identical ids and no hash collisions can merge
//! classes.

use crate::graph::VertexColouredGraph;

use super::Colouring;

/// Ranks `sigs` by sorted order. Returns the rank of every entry and the
/// number of distinct values.
pub(crate) fn rank<T: Ord>(sigs: &[T]) -> (Vec<u32>, usize) {
    let mut order: Vec<usize> = (0..sigs.len()).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    let mut ids = vec![0u32; sigs.len()];
    let mut next = 0u32;
    for (pos, &i) in order.iter().enumerate() {
        if pos > 0 && sigs[order[pos - 1]] != sigs[i] {
            next += 1;
        }
        ids[i] = next;
    }
    let classes = if sigs.is_empty() {
        0
    } else {
        next as usize + 1
    };
    (ids, classes)
}

/// Result of refining a universe of vertices.
#[derive(Clone, Debug)]
pub(crate) struct Refinement {
    pub colours: Vec<u32>,
    pub classes: usize,
    /// Rounds executed, including the final round that confirmed stability.
    pub rounds: usize,
}

/// Refines `initial` over the graph given by `adj` until stable or until
/// `max_rounds` rounds were executed.
pub(crate) fn refine(adj: &[Vec<usize>], initial: &[u32], max_rounds: Option<usize>) -> Refinement {
    let (mut colours, mut classes) = rank(initial);
    let mut rounds = 0;
    if adj.is_empty() {
        return Refinement {
            colours,
            classes,
            rounds,
        };
    }
    let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); adj.len()];
    loop {
        if max_rounds.is_some_and(|m| rounds >= m) {
            break;
        }
        for (v, sig) in sigs.iter_mut().enumerate() {
            sig.clear();
            sig.push(colours[v]);
            let start = sig.len();
            sig.extend(adj[v].iter().map(|&w| colours[w]));
            sig[start..].sort_unstable();
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
    Refinement {
        colours,
        classes,
        rounds,
    }
}

/// Classic colour refinement from the input colouring. Returns the colouring
/// and the number of rounds executed.
pub fn wl1_refine(g: &VertexColouredGraph, max_iters: Option<usize>) -> (Colouring, usize) {
    let graph = g.graph();
    let adj: Vec<Vec<usize>> = (0..graph.order())
        .map(|v| graph.neighbours(v).to_vec())
        .collect();
    let initial: Vec<u32> = g.colours().iter().map(|&c| c as u32).collect();
    let r = refine(&adj, &initial, max_iters);
    (
        Colouring::new(1, graph.order(), r.colours, r.classes),
        r.rounds,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::{disjoint_union, individualise};

    #[test]
    fn rank_is_canonical() {
        let (ids, c) = rank(&["b", "a", "b", "c"]);
        assert_eq!(ids, vec![1, 0, 1, 2]);
        assert_eq!(c, 3);
        assert_eq!(rank::<u8>(&[]).1, 0);
    }

    #[test]
    fn hexagon_is_one_class() {
        let (c, iters) = wl1_refine(&VertexColouredGraph::uncoloured(cycle(6)), None);
        assert_eq!(c.num_classes(), 1);
        assert_eq!(iters, 1);
    }

    #[test]
    fn hexagon_and_two_triangles_merge() {
        let (u, _) = disjoint_union(&cycle(6), &two_triangles());
        let (c, _) = wl1_refine(&VertexColouredGraph::uncoloured(u), None);
        assert_eq!(c.num_classes(), 1);
    }

    #[test]
    fn individualised_path_middle() {
        // Hand refinement: middle has colour 1 and two colour-0 neighbours,
        // the ends have colour 0 and one colour-1 neighbour. Nothing splits.
        let (c, iters) = wl1_refine(&individualise(&path(3), 1).unwrap(), None);
        assert_eq!(c.num_classes(), 2);
        assert_eq!(c.get(&[0]), c.get(&[2]));
        assert_ne!(c.get(&[0]), c.get(&[1]));
        assert_eq!(iters, 1);
    }

    #[test]
    fn max_iters_stops_early() {
        // Path on 7 vertices needs several rounds to separate positions.
        let g = VertexColouredGraph::uncoloured(path(7));
        let (c1, it1) = wl1_refine(&g, Some(1));
        assert_eq!(it1, 1);
        assert_eq!(c1.num_classes(), 2);
        let (c, it) = wl1_refine(&g, None);
        assert_eq!(c.num_classes(), 4);
        assert!(it <= 7);
    }

    #[test]
    fn empty_graph() {
        let (c, it) = wl1_refine(
            &VertexColouredGraph::uncoloured(crate::Graph::empty(0)),
            None,
        );
        assert_eq!((c.num_classes(), it), (0, 0));
    }
}
