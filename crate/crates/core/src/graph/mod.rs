//! Simple undirected graphs with vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Equality is equality of the vertex
//! count and the sorted edge list; isomorphism is a separate question (see
//! [`crate::hom::brute_isomorphic`]).

mod edgelist;
pub mod families;
mod graph6;

pub use edgelist::{parse_edge_list, serialize_edge_list};
pub use graph6::{parse_graph6, serialize_graph6};

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored with `u < v`.
    edges: Vec<(usize, usize)>,
    neighbours: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges collapse, loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Argument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Argument(format!("loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbours = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for &(u, v) in &edges {
            neighbours[u].push(v);
            neighbours[v].push(u);
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        for list in &mut neighbours {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            neighbours,
            matrix,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    /// 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| i64::from(self.has_edge(u, v)))
                    .collect()
            })
            .collect()
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.degree(v) == 0)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Argument(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Argument("not a permutation".into()));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_sorted(self.n, edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbours(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbours(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.n
    }
}

/// Disjoint union; vertices of `g2` are shifted by `g1.order()`, which is
/// also returned so colourings can be split again.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> (Graph, usize) {
    let offset = g1.order();
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (u + offset, v + offset)))
        .collect();
    (Graph::from_sorted(offset + g2.order(), edges), offset)
}

/// A graph together with a vertex colouring by contiguous ids `0..c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColouredGraph {
    graph: Graph,
    colours: Vec<usize>,
}

impl VertexColouredGraph {
    /// Colour values are renumbered to `0..c` preserving their order.
    pub fn new(graph: Graph, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != graph.order() {
            return Err(Error::Argument(format!(
                "{} colours for {} vertices",
                colours.len(),
                graph.order()
            )));
        }
        let mut values = colours.clone();
        values.sort_unstable();
        values.dedup();
        let colours = colours
            .iter()
            .map(|c| values.binary_search(c).unwrap())
            .collect();
        Ok(VertexColouredGraph { graph, colours })
    }

    pub fn uncoloured(graph: Graph) -> Self {
        let colours = vec![0; graph.order()];
        VertexColouredGraph { graph, colours }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }
}

/// Colours `v` with 1 and every other vertex with 0.
pub fn individualise(g: &Graph, v: usize) -> Result<VertexColouredGraph> {
    if v >= g.order() {
        return Err(Error::Argument(format!(
            "vertex {v} out of range for {} vertices",
            g.order()
        )));
    }
    let mut colours = vec![0; g.order()];
    colours[v] = 1;
    Ok(VertexColouredGraph {
        graph: g.clone(),
        colours,
    })
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        let g = Graph::new(3, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn adjacency_is_symmetric_01() {
        let g = cycle(5);
        let a = g.adjacency_matrix();
        for u in 0..5 {
            assert_eq!(a[u][u], 0);
            for v in 0..5 {
                assert_eq!(a[u][v], a[v][u]);
            }
        }
    }

    #[test]
    fn individualise_examples() {
        assert_eq!(individualise(&complete(2), 0).unwrap().colours(), &[1, 0]);
        assert_eq!(
            individualise(&cycle(6), 3).unwrap().colours(),
            &[0, 0, 0, 1, 0, 0]
        );
        assert_eq!(individualise(&Graph::empty(1), 0).unwrap().colours(), &[1]);
        assert!(individualise(&cycle(3), 3).is_err());
    }

    #[test]
    fn disjoint_union_examples() {
        let (g, off) = disjoint_union(&complete(2), &complete(2));
        assert_eq!(off, 2);
        assert_eq!(g, Graph::new(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(disjoint_union(&Graph::empty(0), &cycle(3)).0, cycle(3));
        assert_eq!(disjoint_union(&cycle(3), &cycle(3)).0, two_triangles());
    }

    #[test]
    fn components_and_distances() {
        let (g, _) = disjoint_union(&cycle(6), &Graph::empty(1));
        assert_eq!(g.components().len(), 2);
        let d = g.bfs_distances(0);
        assert_eq!(d[3], Some(3));
        assert_eq!(d[6], None);
        assert!(path(4).is_forest());
        assert!(!cycle(4).is_forest());
    }

    #[test]
    fn colours_are_renumbered() {
        let g = VertexColouredGraph::new(path(3), vec![7, 3, 7]).unwrap();
        assert_eq!(g.colours(), &[1, 0, 1]);
    }
}
