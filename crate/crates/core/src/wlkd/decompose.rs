use crate::error::{Error, Result};

use super::element::{CoveredBigraph, WlkdElement};
use super::generators::{GeneratorId, GeneratorKind};

/// Splits a valid element into generators whose series composition has
/// the same augmented matrix on every graph.
///
/// A chain cover becomes the identity followed by one adjacency generator
/// per edge. Otherwise the element splits as `F' · J^ℓ · F''`, where `F'` is
/// the root path to the last in-label and `F''` drops the part of that path
/// not shared with a leaf `x` chosen as follows: among the other leaves
/// with the most common ancestors with the last in-label, the one with the
/// fewest common ancestors with the last out-label, ties to the smallest
/// vertex id.
pub fn decompose(e: &WlkdElement) -> Result<Vec<GeneratorId>> {
    let x = e
        .as_element()
        .ok_or_else(|| Error::Contract("⊥ has no decomposition".into()))?;
    let v = x.validate();
    if !v.passes() {
        let failed: Vec<String> = v.failed().iter().map(|a| a.to_string()).collect();
        return Err(Error::Contract(format!(
            "element fails {}",
            failed.join(", ")
        )));
    }
    let mut out = Vec::new();
    split(x, &mut out)?;
    Ok(out)
}

/// `h[i]`: the first position (1-based) whose label sits on the vertex of
/// position `i`.
fn label_pattern(labels: &[usize], k: usize) -> Vec<usize> {
    (0..k)
        .map(|i| labels[..k].iter().position(|&y| y == labels[i]).unwrap() + 1)
        .collect()
}

fn split(e: &CoveredBigraph, out: &mut Vec<GeneratorId>) -> Result<()> {
    let k = e.k();
    let w = k + e.d();
    let u = e.in_labels().to_vec();
    let v = e.out_labels().to_vec();
    let h = label_pattern(&u, k);
    let leaves = e.leaves();

    if leaves.len() == 1 {
        let name = |vertex: usize| -> usize {
            let pos = u
                .iter()
                .position(|&y| y == vertex)
                .expect("chain vertices are labelled");
            if pos < k {
                h[pos]
            } else {
                pos + 1
            }
        };
        let p = e.p_in().to_vec();
        out.push(GeneratorId {
            kind: GeneratorKind::Identity,
            h: h.clone(),
            p_in: p.clone(),
            p_out: p.clone(),
        });
        let mut edges: Vec<(usize, usize)> = e
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (i, j) = (name(a), name(b));
                (i.min(j), i.max(j))
            })
            .collect();
        edges.sort_unstable();
        for (i, j) in edges {
            out.push(GeneratorId {
                kind: GeneratorKind::Adjacency(i, j),
                h: h.clone(),
                p_in: p.clone(),
                p_out: p.clone(),
            });
        }
        return Ok(());
    }

    let last_in = u[w - 1];
    let last_out = v[w - 1];
    let others: Vec<usize> = leaves.iter().copied().filter(|&y| y != last_in).collect();
    let best = others
        .iter()
        .map(|&y| e.gca(last_in, y))
        .max()
        .expect("several leaves");
    let x = others
        .iter()
        .copied()
        .filter(|&y| e.gca(last_in, y) == best)
        .min_by_key(|&y| (e.gca(y, last_out), y))
        .unwrap();

    let n = e.order();
    let spine = e.path_to_root(last_in);
    let dropped: Vec<usize> = spine
        .iter()
        .copied()
        .filter(|&z| !e.comparable(z, x))
        .collect();

    // F': the root path to the last in-label, labelled by u on both sides.
    let mut keep_first: Vec<usize> = spine.clone();
    keep_first.sort_unstable();
    let first = e.restrict(&keep_first, &u, &u, e.p_in().to_vec(), e.p_in().to_vec())?;

    // F'': everything but the dropped part, in-labels along the path to x.
    let to_x = e.path_to_root(x);
    let mut xs = u[..k].to_vec();
    let depth_of = |y: usize| to_x.len() - 1 - to_x.iter().position(|&z| z == y).unwrap();
    let uk_depth = depth_of(u[k - 1]);
    let mut below: Vec<usize> = to_x
        .iter()
        .copied()
        .filter(|&z| depth_of(z) > uk_depth)
        .collect();
    below.reverse();
    xs.extend(below);
    if xs.len() != w {
        return Err(Error::Contract("leaf path has the wrong length".into()));
    }
    let keep_second: Vec<usize> = (0..n).filter(|z| !dropped.contains(z)).collect();
    let p_mid: Vec<usize> = xs.iter().map(|&z| e.pebbling()[z]).collect();
    let second = e.restrict(&keep_second, &xs, &v, p_mid.clone(), e.p_out().to_vec())?;

    let l = (0..w).rev().find(|&i| xs[i] == u[i]).unwrap() + 1;

    split(&first, out)?;
    out.push(GeneratorId {
        kind: GeneratorKind::Join(l),
        h,
        p_in: e.p_in().to_vec(),
        p_out: p_mid,
    });
    split(&second, out)
}
