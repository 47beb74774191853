//! Homomorphism counts by backtracking and, for forests, by tree dynamic
//! programming.

use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

fn overflow() -> Error {
    Error::Numeric("homomorphism count overflows u128".into())
}

/// Counts homomorphisms of the vertices `order` of `f` into `g` extending the
/// partial map `fixed` (`usize::MAX` means unassigned). Vertices are assigned
/// in the given order and every edge to an already assigned vertex is checked.
pub(crate) fn count_extensions(
    f: &Graph,
    g: &Graph,
    order: &[usize],
    fixed: &mut [usize],
) -> Result<u128> {
    fn go(f: &Graph, g: &Graph, order: &[usize], map: &mut [usize]) -> Result<u128> {
        let Some((&v, rest)) = order.split_first() else {
            return Ok(1);
        };
        // Candidates come from the neighbourhood of an assigned neighbour.
        let anchor = f.neighbours(v).iter().find(|&&u| map[u] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(&u) => g.neighbours(map[u]).to_vec(),
            None => (0..g.order()).collect(),
        };
        let mut total = 0u128;
        for x in candidates {
            if f.neighbours(v)
                .iter()
                .all(|&u| map[u] == usize::MAX || g.has_edge(map[u], x))
            {
                map[v] = x;
                let c = go(f, g, rest, map)?;
                total = total.checked_add(c).ok_or_else(overflow)?;
                map[v] = usize::MAX;
            }
        }
        Ok(total)
    }
    go(f, g, order, fixed)
}

/// BFS order over a vertex set, starting from vertices adjacent to already
/// fixed ones when possible.
pub(crate) fn search_order(f: &Graph, vertices: &[usize], fixed: &[bool]) -> Vec<usize> {
    let mut inside = vec![false; f.order()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut seen = fixed.to_vec();
    let mut order = Vec::with_capacity(vertices.len());
    let mut queue = std::collections::VecDeque::new();
    // Seed with vertices touching fixed ones, then any remaining.
    let seeds: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| f.neighbours(v).iter().any(|&u| fixed[u]))
        .chain(vertices.iter().copied())
        .collect();
    for s in seeds {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in f.neighbours(v) {
                if inside[u] && !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

/// Number of homomorphisms `f -> g` by backtracking, one connected
/// component at a time.
pub fn hom_count_backtrack(f: &Graph, g: &Graph) -> Result<u128> {
    let mut total = 1u128;
    for comp in f.components() {
        let order = search_order(f, &comp, &vec![false; f.order()]);
        let mut map = vec![usize::MAX; f.order()];
        let c = count_extensions(f, g, &order, &mut map)?;
        total = total.checked_mul(c).ok_or_else(overflow)?;
        if total == 0 {
            break;
        }
    }
    Ok(total)
}

/// Number of homomorphisms from a forest `f` into `g`: root every tree and
/// count, bottom up, the images of each subtree given the image of its root.
pub fn forest_hom_count(f: &Graph, g: &Graph) -> Result<u128> {
    assert!(f.is_forest(), "tree DP needs a forest pattern");
    let n = g.order();
    let mut total = 1u128;
    for comp in f.components() {
        let root = comp[0];
        // BFS order with parents; children are processed before parents by
        // walking the order backwards.
        let mut parent = vec![usize::MAX; f.order()];
        let mut order = vec![root];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &u in f.neighbours(v) {
                if u != root && parent[u] == usize::MAX && u != parent[v] {
                    parent[u] = v;
                    order.push(u);
                }
            }
            i += 1;
        }
        let mut table: Vec<Vec<u128>> = vec![Vec::new(); f.order()];
        for &v in order.iter().rev() {
            let mut counts = vec![1u128; n];
            for &c in f.neighbours(v) {
                if parent[c] != v {
                    continue;
                }
                let child = std::mem::take(&mut table[c]);
                for (x, slot) in counts.iter_mut().enumerate() {
                    let s = g
                        .neighbours(x)
                        .iter()
                        .try_fold(0u128, |acc, &y| acc.checked_add(child[y]))
                        .ok_or_else(overflow)?;
                    *slot = slot.checked_mul(s).ok_or_else(overflow)?;
                }
            }
            table[v] = counts;
        }
        let c = table[root]
            .iter()
            .try_fold(0u128, |acc, &x| acc.checked_add(x))
            .ok_or_else(overflow)?;
        total = total.checked_mul(c).ok_or_else(overflow)?;
    }
    Ok(total)
}

/// Number of homomorphisms `f -> g`.
pub fn hom_count(f: &Graph, g: &Graph) -> Result<u128> {
    hom_count_with(f, g, &Limits::default())
}

pub fn hom_count_with(f: &Graph, g: &Graph, limits: &Limits) -> Result<u128> {
    check_cap(
        "pattern order",
        f.order() as u128,
        limits.pattern_cap as u128,
    )?;
    if f.is_forest() {
        forest_hom_count(f, g)
    } else {
        hom_count_backtrack(f, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Oracle: try every map `V(f) -> V(g)`.
    fn brute(f: &Graph, g: &Graph) -> u128 {
        let (p, n) = (f.order(), g.order());
        let total = n.pow(p as u32);
        (0..total)
            .filter(|&code| {
                let map: Vec<usize> = (0..p).map(|i| (code / n.pow(i as u32)) % n).collect();
                f.edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]))
            })
            .count() as u128
    }

    #[test]
    fn documented_counts() {
        assert_eq!(hom_count(&Graph::empty(1), &cycle(6)).unwrap(), 6);
        assert_eq!(hom_count(&cycle(3), &two_triangles()).unwrap(), 12);
        assert_eq!(hom_count(&cycle(3), &cycle(6)).unwrap(), 0);
        assert_eq!(hom_count(&complete(2), &complete(3)).unwrap(), 6);
    }

    #[test]
    fn agrees_with_brute_force() {
        let targets = [cycle(5), random_gnp(5, 0.5, 1), star(3), Graph::empty(3)];
        let patterns = [
            cycle(4),
            path(4),
            complete(3),
            two_triangles(),
            random_gnp(5, 0.4, 8),
        ];
        for f in &patterns {
            for g in &targets {
                assert_eq!(hom_count(f, g).unwrap(), brute(f, g));
                assert_eq!(hom_count_backtrack(f, g).unwrap(), brute(f, g));
            }
        }
    }

    #[test]
    fn tree_dp_matches_backtracking() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        let targets: Vec<Graph> = (0..5).map(|s| random_gnp(6, 0.5, s)).collect();
        for _ in 0..40 {
            let n = rng.gen_range(1..=8);
            // Random labelled tree by attaching each vertex to an earlier one.
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            let t = Graph::new(n, edges).unwrap();
            for g in &targets {
                assert_eq!(
                    forest_hom_count(&t, g).unwrap(),
                    hom_count_backtrack(&t, g).unwrap()
                );
            }
        }
    }

    #[test]
    fn multiplicative_over_disjoint_union() {
        let (u, _) = crate::graph::disjoint_union(&cycle(3), &path(3));
        let g = random_gnp(6, 0.6, 3);
        assert_eq!(
            hom_count(&u, &g).unwrap(),
            hom_count(&cycle(3), &g).unwrap() * hom_count(&path(3), &g).unwrap()
        );
    }

    #[test]
    fn pattern_cap() {
        assert!(matches!(
            hom_count(&path(11), &cycle(4)),
            Err(Error::SizeCap { .. })
        ));
    }
}
