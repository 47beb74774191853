use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::BilabelledGraph;

use super::element::{CoveredBigraph, WlkdElement};

/// A random valid element with at most `max_vertices` vertices.
///
/// The first `k` labels sit on a chain of distinct vertices (consecutive
/// labels may share one). Below the last of them grows a tree whose leaves
/// all lie `d` levels down: a first path, then further paths branching off
/// random vertices while the budget lasts. The label paths end in a pair of
/// leaves with the fewest common ancestors, pebbles are random but distinct
/// on the chain, and each comparable pair becomes an edge with probability
/// one half when the pebbling allows it.
pub fn random_element<R: Rng + ?Sized>(
    k: usize,
    d: usize,
    max_vertices: usize,
    rng: &mut R,
) -> Result<WlkdElement> {
    if k == 0 || max_vertices < d + 1 {
        return Err(Error::Argument(format!(
            "need k >= 1 and at least d + 1 = {} vertices",
            d + 1
        )));
    }
    let chain_len = rng.gen_range(1..=k.min(max_vertices - d));
    // Cut points of the first k positions into chain_len runs.
    let mut cuts: Vec<usize> = (1..k).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(chain_len - 1).collect();
    cuts.sort_unstable();

    let mut parent: Vec<Option<usize>> = (0..chain_len).map(|x| x.checked_sub(1)).collect();
    let mut level: Vec<usize> = vec![0; chain_len];
    let top = chain_len - 1;
    let add_path = |from: usize, parent: &mut Vec<Option<usize>>, level: &mut Vec<usize>| {
        let mut cur = from;
        while level[cur] < d {
            parent.push(Some(cur));
            level.push(level[cur] + 1);
            cur = parent.len() - 1;
        }
    };
    add_path(top, &mut parent, &mut level);
    loop {
        let inner: Vec<usize> = std::iter::once(top)
            .chain((chain_len..parent.len()).filter(|&x| level[x] < d))
            .collect();
        let from = *inner.choose(rng).unwrap();
        let cost = d - level[from];
        if d == 0 || parent.len() + cost > max_vertices || rng.gen_bool(0.3) {
            break;
        }
        add_path(from, &mut parent, &mut level);
    }
    let n = parent.len();

    let ancestors = |x: usize| {
        let mut out = vec![x];
        let mut cur = x;
        while let Some(p) = parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    };
    let leaves: Vec<usize> = (0..n).filter(|&x| !parent.contains(&Some(x))).collect();
    let gca = |x: usize, y: usize| {
        let ay = ancestors(y);
        ancestors(x)
            .into_iter()
            .filter(|z| level[*z] > 0 && *z >= chain_len && ay.contains(z))
            .count()
    };
    let least = leaves
        .iter()
        .flat_map(|&x| leaves.iter().map(move |&y| (x, y)))
        .map(|(x, y)| gca(x, y))
        .min()
        .unwrap();
    let pairs: Vec<(usize, usize)> = leaves
        .iter()
        .flat_map(|&x| leaves.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| gca(x, y) == least)
        .collect();
    let (end_in, end_out) = *pairs.choose(rng).unwrap();

    let mut pebbles: Vec<usize> = (0..=k).collect();
    pebbles.shuffle(rng);
    let pebbling: Vec<usize> = (0..n)
        .map(|x| {
            if x < chain_len {
                pebbles[x]
            } else {
                rng.gen_range(0..=k)
            }
        })
        .collect();

    let mut edges = Vec::new();
    for b in 0..n {
        let path = ancestors(b);
        for (i, &a) in path.iter().enumerate().skip(1) {
            let allowed = path[..i].iter().all(|&x| pebbling[x] != pebbling[a]);
            if allowed && rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }

    let run_of = |pos: usize| cuts.iter().filter(|&&c| c <= pos).count();
    let labels = |end: usize| {
        let mut t: Vec<usize> = (0..k).map(run_of).collect();
        let mut below: Vec<usize> = ancestors(end)
            .into_iter()
            .filter(|&z| z >= chain_len)
            .collect();
        below.reverse();
        t.extend(below);
        t
    };
    let (u, v) = (labels(end_in), labels(end_out));
    let p_in = u.iter().map(|&x| pebbling[x]).collect();
    let p_out = v.iter().map(|&x| pebbling[x]).collect();
    let bigraph = BilabelledGraph::new(Graph::new(n, edges)?, u, v)?;
    Ok(CoveredBigraph::new(k, d, bigraph, parent, pebbling, p_in, p_out)?.into())
}
