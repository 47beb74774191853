//! (1,1)-WL: compare the families of vertex-individualised graphs.
//!
//! All individualised copies of all input graphs are refined together, so the
//! stable colour of `w` in the copy individualising `v` is comparable across
//! copies and across graphs. A copy's signature is its sorted colour list;
//! two copies are 1-WL indistinguishable iff their signatures agree.
//!
//! Since that relation is an equivalence, `G` and `H` admit a
//! colour-preserving bijection iff their signature multisets coincide, and any
//! signature-respecting matching is one.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::refine::Refinement;
use super::{rank, refine, Colouring, WlVerdict};

/// Refines `n` individualised copies of each graph jointly. Returns, per
/// graph, the pair colours in row-major `(v, w)` order.
fn joint_individualised(graphs: &[&Graph]) -> (Vec<Vec<u32>>, Refinement) {
    let mut adj = Vec::new();
    let mut initial = Vec::new();
    let mut offsets = Vec::new();
    for g in graphs {
        let n = g.order();
        offsets.push(adj.len());
        for v in 0..n {
            let base = adj.len();
            for w in 0..n {
                adj.push(
                    g.neighbours(w)
                        .iter()
                        .map(|&x| base + x)
                        .collect::<Vec<_>>(),
                );
                initial.push(u32::from(v == w));
            }
        }
    }
    offsets.push(adj.len());
    let r = refine(&adj, &initial, None);
    let per_graph = (0..graphs.len())
        .map(|i| r.colours[offsets[i]..offsets[i + 1]].to_vec())
        .collect();
    (per_graph, r)
}

/// Outcome of a (1,1)-WL comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wl11Verdict {
    /// The witness colour is the index of an individualised-copy signature
    /// class; the counts are how many vertices of each graph fall into it.
    pub verdict: WlVerdict,
    /// A colour-preserving bijection `V(G) -> V(H)` when indistinguishable.
    pub bijection: Option<Vec<usize>>,
}

pub fn wl11_indistinguishable(g: &Graph, h: &Graph) -> Wl11Verdict {
    let (pairs, r) = joint_individualised(&[g, h]);
    let signature = |cs: &[u32], n: usize, v: usize| {
        let mut s = cs[v * n..(v + 1) * n].to_vec();
        s.sort_unstable();
        s
    };
    let mut sigs = Vec::with_capacity(g.order() + h.order());
    sigs.extend((0..g.order()).map(|v| signature(&pairs[0], g.order(), v)));
    sigs.extend((0..h.order()).map(|v| signature(&pairs[1], h.order(), v)));
    let (class, classes) = rank(&sigs);
    let (class_g, class_h) = class.split_at(g.order());

    let mut hist_g = vec![0; classes];
    let mut hist_h = vec![0; classes];
    class_g.iter().for_each(|&c| hist_g[c as usize] += 1);
    class_h.iter().for_each(|&c| hist_h[c as usize] += 1);
    let verdict = WlVerdict::from_histograms(&hist_g, &hist_h, r.rounds);

    let bijection = verdict.indistinguishable.then(|| {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); classes];
        for (x, &c) in class_h.iter().enumerate() {
            buckets[c as usize].push(x);
        }
        for b in &mut buckets {
            b.reverse();
        }
        class_g
            .iter()
            .map(|&c| buckets[c as usize].pop().expect("histograms agree"))
            .collect()
    });
    Wl11Verdict { verdict, bijection }
}

/// Pair colouring `(v, w) -> colour of w in G_v`, canonical across all
/// individualised copies of `g`.
pub fn wl11_colour_classes(g: &Graph) -> Colouring {
    let (mut pairs, _) = joint_individualised(&[g]);
    Colouring::compacted(2, g.order(), pairs.pop().unwrap())
}

/// Pair colourings of `g` and `h` over one shared colour id space.
pub fn wl11_joint_pair_colours(g: &Graph, h: &Graph) -> (Vec<u32>, Vec<u32>) {
    let (mut pairs, _) = joint_individualised(&[g, h]);
    let ph = pairs.pop().unwrap();
    let pg = pairs.pop().unwrap();
    (pg, ph)
}
