use crate::error::{check_cap, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// Cheap isomorphism invariant: order, size and the sorted list of
/// (degree, sorted neighbour degrees).
pub(crate) fn invariant(g: &Graph) -> (usize, usize, Vec<(usize, Vec<usize>)>) {
    let mut profile: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbours(v).iter().map(|&u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    profile.sort();
    (g.order(), g.size(), profile)
}

/// Decides isomorphism by backtracking over vertex maps that preserve
/// degrees and adjacency to already mapped vertices.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    brute_isomorphic_with(g, h, &Limits::default())
}

pub fn brute_isomorphic_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    check_cap(
        "isomorphism test order",
        g.order().max(h.order()) as u128,
        limits.iso_cap as u128,
    )?;
    Ok(isomorphic_unchecked(g, h))
}

pub(crate) fn isomorphic_unchecked(g: &Graph, h: &Graph) -> bool {
    if invariant(g) != invariant(h) {
        return false;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == g.order() {
            return true;
        }
        for x in 0..h.order() {
            if used[x] || h.degree(x) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], x)) {
                map[v] = x;
                used[x] = true;
                if go(g, h, v + 1, map, used) {
                    return true;
                }
                used[x] = false;
            }
        }
        false
    }
    go(g, h, 0, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn small_cases() {
        assert!(!brute_isomorphic(&cycle(6), &two_triangles()).unwrap());
        assert!(!brute_isomorphic(&cycle_plus_isolated(), &star(4)).unwrap());
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for seed in 0..10 {
            let g = random_gnp(8, 0.4, seed);
            let (p, _) = random_permutation_of(&g, &mut rng);
            assert!(brute_isomorphic(&g, &p).unwrap());
        }
    }

    #[test]
    fn cap() {
        assert!(brute_isomorphic(&cycle(11), &cycle(11)).is_err());
    }
}
