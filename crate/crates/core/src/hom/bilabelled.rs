use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

use super::count::{count_extensions, search_order};
use super::matrix::HomMatrix;

/// A graph with a tuple of in-labelled and a tuple of out-labelled vertices.
/// Labels may repeat. A graph with only in-labels is a labelled graph whose
/// homomorphism "matrix" has a single column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilabelledGraph {
    graph: Graph,
    in_labels: Vec<usize>,
    out_labels: Vec<usize>,
}

impl BilabelledGraph {
    pub fn new(graph: Graph, in_labels: Vec<usize>, out_labels: Vec<usize>) -> Result<Self> {
        let n = graph.order();
        if let Some(&v) = in_labels.iter().chain(&out_labels).find(|&&v| v >= n) {
            return Err(Error::Argument(format!(
                "label on vertex {v} but graph has {n} vertices"
            )));
        }
        Ok(BilabelledGraph {
            graph,
            in_labels,
            out_labels,
        })
    }

    /// A labelled graph, i.e. one with no out-labels.
    pub fn labelled(graph: Graph, labels: Vec<usize>) -> Result<Self> {
        Self::new(graph, labels, Vec::new())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn in_labels(&self) -> &[usize] {
        &self.in_labels
    }

    pub fn out_labels(&self) -> &[usize] {
        &self.out_labels
    }

    pub fn reverse(&self) -> Self {
        BilabelledGraph {
            graph: self.graph.clone(),
            in_labels: self.out_labels.clone(),
            out_labels: self.in_labels.clone(),
        }
    }

    /// Glues the out-labels of `self` onto the in-labels of `other`.
    pub fn series_compose(&self, other: &Self) -> Result<Self> {
        if self.out_labels.len() != other.in_labels.len() {
            return Err(Error::Argument(format!(
                "cannot compose {} out-labels with {} in-labels",
                self.out_labels.len(),
                other.in_labels.len()
            )));
        }
        let pairs: Vec<(usize, usize)> = self
            .out_labels
            .iter()
            .zip(&other.in_labels)
            .map(|(&a, &b)| (a, b))
            .collect();
        let (graph, first, second) = identify(&self.graph, &other.graph, &pairs)?;
        Ok(BilabelledGraph {
            graph,
            in_labels: self.in_labels.iter().map(|&v| first[v]).collect(),
            out_labels: other.out_labels.iter().map(|&v| second[v]).collect(),
        })
    }

    /// Identifies in-labels with in-labels and out-labels with out-labels.
    /// The homomorphism matrix of the result is the entrywise product.
    pub fn gluing_product(&self, other: &Self) -> Result<Self> {
        if self.in_labels.len() != other.in_labels.len()
            || self.out_labels.len() != other.out_labels.len()
        {
            return Err(Error::Argument("gluing needs equal label arities".into()));
        }
        let pairs: Vec<(usize, usize)> = self
            .in_labels
            .iter()
            .zip(&other.in_labels)
            .chain(self.out_labels.iter().zip(&other.out_labels))
            .map(|(&a, &b)| (a, b))
            .collect();
        let (graph, first, _) = identify(&self.graph, &other.graph, &pairs)?;
        Ok(BilabelledGraph {
            graph,
            in_labels: self.in_labels.iter().map(|&v| first[v]).collect(),
            out_labels: self.out_labels.iter().map(|&v| first[v]).collect(),
        })
    }

    /// The homomorphism matrix into `g`, rows indexed by images of the
    /// in-labels and columns by images of the out-labels, both in
    /// lexicographic order (first label most significant).
    pub fn hom_matrix(&self, g: &Graph) -> Result<HomMatrix> {
        self.hom_matrix_with(g, &Limits::default())
    }

    pub fn hom_matrix_with(&self, g: &Graph, limits: &Limits) -> Result<HomMatrix> {
        let n = g.order();
        let rows = tuple_count(n, self.in_labels.len(), limits)?;
        let cols = tuple_count(n, self.out_labels.len(), limits)?;
        let f = &self.graph;

        let mut labelled: Vec<usize> = self
            .in_labels
            .iter()
            .chain(&self.out_labels)
            .copied()
            .collect();
        labelled.sort_unstable();
        labelled.dedup();
        let assignments = tuple_count(n, labelled.len(), limits)?;
        let unlabelled: Vec<usize> = (0..f.order())
            .filter(|v| labelled.binary_search(v).is_err())
            .collect();
        check_cap(
            "pattern order",
            unlabelled.len() as u128,
            limits.pattern_cap as u128,
        )?;

        let mut is_labelled = vec![false; f.order()];
        for &v in &labelled {
            is_labelled[v] = true;
        }
        let inner_edges: Vec<(usize, usize)> = f
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| is_labelled[u] && is_labelled[v])
            .collect();
        let free_order = {
            let rest = f.induced_subgraph(&unlabelled);
            let mut orders = Vec::new();
            for comp in rest.components() {
                let comp: Vec<usize> = comp.into_iter().map(|i| unlabelled[i]).collect();
                orders.push(search_order(f, &comp, &is_labelled));
            }
            orders
        };

        let mut map = vec![usize::MAX; f.order()];
        let mut triplets = Vec::new();
        for code in 0..assignments as usize {
            let mut c = code;
            for &v in labelled.iter().rev() {
                map[v] = c % n;
                c /= n;
            }
            if !inner_edges.iter().all(|&(u, v)| g.has_edge(map[u], map[v])) {
                continue;
            }
            let mut count = 1u128;
            for order in &free_order {
                count = count
                    .checked_mul(count_extensions(f, g, order, &mut map)?)
                    .ok_or_else(|| Error::Numeric("homomorphism count overflows u128".into()))?;
                if count == 0 {
                    break;
                }
            }
            if count != 0 {
                triplets.push((
                    tuple_index(&map, &self.in_labels, n),
                    tuple_index(&map, &self.out_labels, n),
                    count,
                ));
            }
        }
        HomMatrix::from_triplets(rows as usize, cols as usize, triplets)
    }

    /// The homomorphism vector of a labelled graph (out-labels ignored).
    pub fn hom_vector(&self, g: &Graph) -> Result<Vec<u128>> {
        let labelled = BilabelledGraph {
            graph: self.graph.clone(),
            in_labels: self.in_labels.clone(),
            out_labels: Vec::new(),
        };
        Ok(labelled
            .hom_matrix(g)?
            .to_dense()
            .into_iter()
            .map(|r| r[0])
            .collect())
    }
}

fn tuple_count(n: usize, len: usize, limits: &Limits) -> Result<u128> {
    let size = (n as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    check_cap("label tuples", size, limits.augmented_cap)?;
    Ok(size)
}

fn tuple_index(map: &[usize], labels: &[usize], n: usize) -> usize {
    labels.iter().fold(0, |acc, &v| acc * n + map[v])
}

/// Disjoint union of `a` and `b` with `pairs[i].0` of `a` identified with
/// `pairs[i].1` of `b`. Returns the glued graph and the vertex maps of both
/// sides. Parallel edges collapse; an edge inside one class is an error.
pub(crate) fn identify(
    a: &Graph,
    b: &Graph,
    pairs: &[(usize, usize)],
) -> Result<(Graph, Vec<usize>, Vec<usize>)> {
    let na = a.order();
    let total = na + b.order();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(x, y) in pairs {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, na + y));
        if rx != ry {
            parent[rx.max(ry)] = rx.min(ry);
        }
    }
    let mut id = vec![usize::MAX; total];
    let mut next = 0;
    let mut class = vec![0; total];
    for v in 0..total {
        let r = find(&mut parent, v);
        if id[r] == usize::MAX {
            id[r] = next;
            next += 1;
        }
        class[v] = id[r];
    }
    let mut edges = Vec::with_capacity(a.size() + b.size());
    for &(u, v) in a.edges() {
        edges.push((class[u], class[v]));
    }
    for &(u, v) in b.edges() {
        edges.push((class[na + u], class[na + v]));
    }
    if let Some(&(u, _)) = edges.iter().find(|(u, v)| u == v) {
        return Err(Error::LoopCreated(u));
    }
    let graph = Graph::new(next, edges)?;
    let second = class.split_off(na);
    Ok((graph, class, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Oracle: enumerate every map `V(F) -> V(G)` and bucket by label images.
    fn brute_matrix(f: &BilabelledGraph, g: &Graph) -> Vec<Vec<u128>> {
        let (p, n) = (f.graph().order(), g.order());
        let rows = n.pow(f.in_labels().len() as u32);
        let cols = n.pow(f.out_labels().len() as u32);
        let mut out = vec![vec![0u128; cols]; rows];
        for code in 0..n.pow(p as u32) {
            let map: Vec<usize> = (0..p).map(|i| (code / n.pow(i as u32)) % n).collect();
            if f.graph()
                .edges()
                .iter()
                .all(|&(u, v)| g.has_edge(map[u], map[v]))
            {
                out[tuple_index(&map, f.in_labels(), n)][tuple_index(&map, f.out_labels(), n)] += 1;
            }
        }
        out
    }

    fn edge() -> BilabelledGraph {
        BilabelledGraph::new(complete(2), vec![0], vec![1]).unwrap()
    }

    fn dense_mul(a: &[Vec<u128>], b: &[Vec<u128>]) -> Vec<Vec<u128>> {
        a.iter()
            .map(|row| {
                (0..b[0].len())
                    .map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum())
                    .collect()
            })
            .collect()
    }

    fn random_bilabelled(rng: &mut impl rand::Rng, k: usize, l: usize) -> BilabelledGraph {
        let n = rng.gen_range(1..=4);
        let g = random_gnp_with(n, 0.5, rng);
        let ins = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let outs = (0..l).map(|_| rng.gen_range(0..n)).collect();
        BilabelledGraph::new(g, ins, outs).unwrap()
    }

    #[test]
    fn edge_gives_adjacency_and_vertex_gives_identity() {
        let g = cycle(5);
        let a = edge().hom_matrix(&g).unwrap().to_dense();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(a[u][v], g.has_edge(u, v) as u128);
            }
        }
        let one = BilabelledGraph::new(Graph::empty(1), vec![0], vec![0]).unwrap();
        assert_eq!(one.hom_matrix(&g).unwrap(), HomMatrix::identity(5));
    }

    #[test]
    fn matches_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let g = random_gnp(4, 0.6, 2);
        for _ in 0..30 {
            let f = random_bilabelled(&mut rng, 2, 1);
            assert_eq!(f.hom_matrix(&g).unwrap().to_dense(), brute_matrix(&f, &g));
        }
    }

    #[test]
    fn product_law() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(9);
        let targets = [complete(3), cycle(4), random_gnp(5, 0.5, 4), path(3)];
        let mut checked = 0;
        for _ in 0..60 {
            let f1 = random_bilabelled(&mut rng, 2, 2);
            let f2 = random_bilabelled(&mut rng, 2, 1);
            let Ok(comp) = f1.series_compose(&f2) else {
                continue;
            };
            for g in &targets {
                let lhs = comp.hom_matrix(g).unwrap();
                let rhs = f1
                    .hom_matrix(g)
                    .unwrap()
                    .mul(&f2.hom_matrix(g).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(comp.reverse().hom_matrix(g).unwrap(), lhs.transpose());
            }
            checked += 1;
        }
        assert!(checked > 20);
    }

    #[test]
    fn squared_adjacency() {
        let aa = edge().series_compose(&edge()).unwrap();
        let g = complete(3);
        let a = edge().hom_matrix(&g).unwrap();
        assert_eq!(aa.hom_matrix(&g).unwrap(), a.mul(&a).unwrap());
        assert_eq!(
            aa.hom_matrix(&g).unwrap().to_dense(),
            dense_mul(&a.to_dense(), &a.to_dense())
        );
    }

    #[test]
    fn unit_and_involution() {
        let f = BilabelledGraph::new(path(3), vec![0, 2], vec![1]).unwrap();
        let unit = BilabelledGraph::new(Graph::empty(1), vec![0], vec![0]).unwrap();
        assert_eq!(f.series_compose(&unit).unwrap(), f);
        assert_eq!(f.reverse().reverse(), f);
        assert_eq!(
            edge().reverse().hom_matrix(&cycle(4)).unwrap(),
            edge().hom_matrix(&cycle(4)).unwrap()
        );
        let g = BilabelledGraph::new(star(2), vec![1], vec![0, 2]).unwrap();
        let lhs = f.series_compose(&g).unwrap().reverse();
        let rhs = g.reverse().series_compose(&f.reverse()).unwrap();
        assert_eq!(
            lhs.hom_matrix(&cycle(4)).unwrap(),
            rhs.hom_matrix(&cycle(4)).unwrap()
        );
    }

    #[test]
    fn loops_are_rejected() {
        let both = BilabelledGraph::new(complete(2), vec![0, 1], vec![0, 1]).unwrap();
        let merge = BilabelledGraph::new(Graph::empty(1), vec![0, 0], vec![0, 0]).unwrap();
        assert!(matches!(
            both.series_compose(&merge),
            Err(Error::LoopCreated(_))
        ));
    }

    #[test]
    fn gluing_is_entrywise_product() {
        let labelled_edge = BilabelledGraph::labelled(complete(2), vec![0]).unwrap();
        let glued = labelled_edge.gluing_product(&labelled_edge).unwrap();
        assert_eq!(glued.hom_vector(&complete(3)).unwrap(), vec![4, 4, 4]);
        let unit = BilabelledGraph::labelled(Graph::empty(1), vec![0]).unwrap();
        let g = random_gnp(6, 0.5, 1);
        assert_eq!(
            unit.gluing_product(&labelled_edge)
                .unwrap()
                .hom_vector(&g)
                .unwrap(),
            labelled_edge.hom_vector(&g).unwrap()
        );

        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(23);
        for _ in 0..20 {
            let f1 = random_bilabelled(&mut rng, 1, 1);
            let f2 = random_bilabelled(&mut rng, 1, 1);
            let Ok(glued) = f1.gluing_product(&f2) else {
                continue;
            };
            let lhs = glued.hom_matrix(&g).unwrap();
            let rhs = f1
                .hom_matrix(&g)
                .unwrap()
                .hadamard(&f2.hom_matrix(&g).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            let swapped = f2.gluing_product(&f1).unwrap();
            assert_eq!(swapped.hom_matrix(&g).unwrap(), lhs);
        }
    }
}
