//! Commute distances of the simple random walk, computed exactly over the
//! rationals one connected component at a time.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{q, QMatrix, Q};

/// `kappa[s][t]` and `hitting[s][t]`; `None` stands for infinity (the
/// vertices lie in different components).
#[derive(Clone, Debug, PartialEq)]
pub struct CommuteResult {
    pub kappa: Vec<Vec<Option<Q>>>,
    pub hitting: Vec<Vec<Option<Q>>>,
}

impl CommuteResult {
    pub fn kappa_f64(&self, s: usize, t: usize) -> f64 {
        self.kappa[s][t]
            .as_ref()
            .map_or(f64::INFINITY, crate::linalg::to_f64)
    }

    /// `kappa(s, t)` for `s < t`, sorted with infinities last.
    pub fn multiset(&self) -> Vec<Option<Q>> {
        let n = self.kappa.len();
        let mut out: Vec<Option<Q>> = (0..n)
            .flat_map(|s| (s + 1..n).map(move |t| (s, t)))
            .map(|(s, t)| self.kappa[s][t].clone())
            .collect();
        out.sort_by(|a, b| match (a, b) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => std::cmp::Ordering::Equal,
        });
        out
    }
}

/// `K = (I - D^-1 A + J D / 2m)^-1 (2m D^-1 - J)` for a connected graph with
/// at least one edge.
pub fn commute_kernel(g: &Graph) -> Result<QMatrix> {
    let n = g.order();
    let two_m = q(2 * g.size() as i64);
    let inv_deg: Vec<Q> = (0..n)
        .map(|v| Q::new(1.into(), (g.degree(v) as i64).into()))
        .collect();
    let lhs = QMatrix::from_fn(n, n, |i, j| {
        let walk = if g.has_edge(i, j) {
            inv_deg[i].clone()
        } else {
            Q::zero()
        };
        let jd = q(g.degree(j) as i64) / &two_m;
        q((i == j) as i64) - walk + jd
    });
    let rhs = QMatrix::from_fn(n, n, |i, j| {
        let d = if i == j {
            &two_m * &inv_deg[i]
        } else {
            Q::zero()
        };
        d - q(1)
    });
    lhs.solve(&rhs)
        .ok_or_else(|| Error::Numeric("commute kernel is singular on a connected component".into()))
}

/// Hitting times `H(s, t)` of a connected graph: for each target `t` solve
/// `(D - A) h = d` off `t` with `h(t) = 0`.
pub fn hitting_times(g: &Graph) -> Result<QMatrix> {
    let n = g.order();
    let mut out = QMatrix::zeros(n, n);
    for t in 0..n {
        let system = QMatrix::from_fn(n, n, |i, j| {
            if i == t {
                q((i == j) as i64)
            } else if i == j {
                q(g.degree(i) as i64)
            } else if g.has_edge(i, j) {
                q(-1)
            } else {
                Q::zero()
            }
        });
        let rhs = QMatrix::from_fn(n, 1, |i, _| {
            if i == t {
                Q::zero()
            } else {
                q(g.degree(i) as i64)
            }
        });
        let h = system
            .solve(&rhs)
            .ok_or_else(|| Error::Numeric("hitting-time system is singular".into()))?;
        for s in 0..n {
            out.set(s, t, h.get(s, 0).clone());
        }
    }
    Ok(out)
}

/// Commute distances from the kernel formula, cross-checked against the
/// hitting times. Pairs in different components are infinite.
pub fn commute_distances(g: &Graph) -> Result<CommuteResult> {
    let n = g.order();
    let mut kappa = vec![vec![None; n]; n];
    let mut hitting = vec![vec![None; n]; n];
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        if comp.len() == 1 {
            let v = comp[0];
            kappa[v][v] = Some(Q::zero());
            hitting[v][v] = Some(Q::zero());
            continue;
        }
        let k = commute_kernel(&sub)?;
        let h = hitting_times(&sub)?;
        for (i, &s) in comp.iter().enumerate() {
            for (j, &t) in comp.iter().enumerate() {
                let from_kernel = k.get(i, i) + k.get(j, j) - k.get(i, j) - k.get(j, i);
                let from_hitting = h.get(i, j) + h.get(j, i);
                if from_kernel != from_hitting {
                    return Err(Error::Numeric(format!(
                        "commute distance ({s}, {t}): kernel gives {from_kernel}, hitting times give {from_hitting}"
                    )));
                }
                kappa[s][t] = Some(from_kernel);
                hitting[s][t] = Some(h.get(i, j).clone());
            }
        }
    }
    Ok(CommuteResult { kappa, hitting })
}

/// Equal multisets of commute distances over unordered pairs.
pub fn commute_multiset_equal(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        return Ok(false);
    }
    Ok(commute_distances(g)?.multiset() == commute_distances(h)?.multiset())
}

/// `min { i : A^i(s, t) != 0 }` from boolean powers of the adjacency
/// matrix; `None` when no power reaches.
pub fn power_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut dist = vec![vec![None; n]; n];
    // reach[s] is the support of row s of A^i.
    let mut reach: Vec<Vec<bool>> = (0..n).map(|s| (0..n).map(|t| s == t).collect()).collect();
    for i in 0..=n {
        for s in 0..n {
            for t in 0..n {
                if reach[s][t] && dist[s][t].is_none() {
                    dist[s][t] = Some(i);
                }
            }
        }
        reach = reach
            .iter()
            .map(|row| {
                (0..n)
                    .map(|t| g.neighbours(t).iter().any(|&w| row[w]))
                    .collect()
            })
            .collect();
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn small_graphs() {
        let k2 = commute_distances(&complete(2)).unwrap();
        assert_eq!(k2.kappa[0][1], Some(q(2)));
        let k3 = commute_distances(&complete(3)).unwrap();
        for s in 0..3 {
            for t in 0..3 {
                assert_eq!(k3.kappa[s][t], Some(q(if s == t { 0 } else { 4 })));
            }
        }
        let (g, _) = crate::graph::disjoint_union(&cycle(6), &Graph::empty(1));
        let c = commute_distances(&g).unwrap();
        for s in 0..6 {
            assert_eq!(c.kappa[s][6], None);
            assert_eq!(c.kappa[6][s], None);
            assert!(c.kappa_f64(s, 6).is_infinite());
        }
        assert_eq!(c.kappa[6][6], Some(q(0)));
    }

    #[test]
    fn path_hitting_times() {
        // End to end of P_n takes (n-1)^2 steps.
        let c = commute_distances(&path(5)).unwrap();
        assert_eq!(c.hitting[0][4], Some(q(16)));
        assert_eq!(c.kappa[0][4], Some(q(32)));
    }

    #[test]
    fn multisets() {
        assert!(!commute_multiset_equal(&cycle(6), &two_triangles()).unwrap());
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(2);
        let g = random_gnp(8, 0.4, 6);
        let (p, _) = random_permutation_of(&g, &mut rng);
        assert!(commute_multiset_equal(&g, &p).unwrap());
    }

    #[test]
    fn power_distance_is_bfs() {
        for seed in 0..10 {
            let g = random_gnp(9, 0.25, seed);
            let d = power_distances(&g);
            for s in 0..9 {
                assert_eq!(d[s], g.bfs_distances(s));
            }
        }
    }
}
