//! Standard graph families and the named fixtures shipped with the crate.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{disjoint_union, parse_graph6, Graph};

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v)))).unwrap()
}

/// The star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

/// Two disjoint triangles, `2C_3`.
pub fn two_triangles() -> Graph {
    disjoint_union(&cycle(3), &cycle(3)).0
}

/// `C_4` plus an isolated vertex, cospectral with `K_{1,4}`.
pub fn cycle_plus_isolated() -> Graph {
    disjoint_union(&cycle(4), &Graph::empty(1)).0
}

/// Gadget attached to a backbone vertex of the counterexample pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gadget {
    /// Six-cycle.
    Hexagon,
    /// Two disjoint triangles.
    Triangles,
}

impl Gadget {
    fn graph(self) -> Graph {
        match self {
            Gadget::Hexagon => cycle(6),
            Gadget::Triangles => two_triangles(),
        }
    }
}

fn backbone_with_gadgets(order: [Gadget; 4]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
    for (slot, gadget) in order.into_iter().enumerate() {
        let base = 4 + 6 * slot;
        edges.extend(
            gadget
                .graph()
                .edges()
                .iter()
                .map(|&(u, v)| (base + u, base + v)),
        );
        edges.extend((0..6).map(|i| (slot, base + i)));
    }
    Graph::new(28, edges).unwrap()
}

/// The pair `(G, H)` that is (1,1)-WL indistinguishable but 2-WL
/// distinguishable.
///
/// Both graphs consist of a backbone 4-cycle on vertices `0..4` in cyclic
/// order. Backbone vertex `i` is joined to every vertex of a six-vertex
/// gadget occupying vertices `4 + 6i .. 10 + 6i`. In `G` the gadgets along the
/// cycle are hexagon, hexagon, triangles, triangles; in `H` they alternate
/// hexagon, triangles, hexagon, triangles.
pub fn counterexample_pair() -> (Graph, Graph) {
    use Gadget::*;
    (
        backbone_with_gadgets([Hexagon, Hexagon, Triangles, Triangles]),
        backbone_with_gadgets([Hexagon, Triangles, Hexagon, Triangles]),
    )
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// found by filtering all edge subsets with the brute-force isomorphism
/// test. Meant for `n <= 5`.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if !reps.iter().any(|r| crate::hom::isomorphic_unchecked(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Erdős–Rényi `G(n, p)` from a seeded generator.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    random_gnp_with(n, p, &mut rng)
}

pub fn random_gnp_with<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A uniformly random relabelling of `g`.
pub fn random_permutation_of<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> (Graph, Vec<usize>) {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    (g.permute(&perm).unwrap(), perm)
}

const FIXTURE_FILES: &[(&str, &str)] = &[
    ("k2", include_str!("../../fixtures/k2.g6")),
    ("k3", include_str!("../../fixtures/k3.g6")),
    ("p3", include_str!("../../fixtures/p3.g6")),
    ("c4", include_str!("../../fixtures/c4.g6")),
    ("c6", include_str!("../../fixtures/c6.g6")),
    ("two-c3", include_str!("../../fixtures/two-c3.g6")),
    ("c4-plus-k1", include_str!("../../fixtures/c4-plus-k1.g6")),
    ("star-k1-4", include_str!("../../fixtures/star-k1-4.g6")),
    (
        "counterexample-g",
        include_str!("../../fixtures/counterexample-g.g6"),
    ),
    (
        "counterexample-h",
        include_str!("../../fixtures/counterexample-h.g6"),
    ),
];

/// Names of the shipped fixtures, in listing order.
pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURE_FILES.iter().map(|(name, _)| *name)
}

/// The graph6 text of a shipped fixture.
pub fn fixture_text(name: &str) -> Option<&'static str> {
    FIXTURE_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

pub fn fixture(name: &str) -> Option<Graph> {
    fixture_text(name).map(|text| parse_graph6(text.trim()).expect("shipped fixture parses"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::serialize_graph6;

    #[test]
    fn counterexample_sizes() {
        let (g, h) = counterexample_pair();
        for x in [&g, &h] {
            assert_eq!(x.order(), 28);
            assert_eq!(x.size(), 4 + 2 * 6 + 2 * 6 + 4 * 6);
            for v in 0..4 {
                assert_eq!(x.degree(v), 8);
            }
            for v in 4..28 {
                assert_eq!(x.degree(v), 3);
            }
        }
        assert_ne!(g, h);
    }

    #[test]
    fn counterexample_gadget_placement() {
        let (g, h) = counterexample_pair();
        // Backbone neighbours of a hexagon slot in G: slot 0 touches slots 1 and 3.
        let triangle_at = |x: &Graph, slot: usize| {
            let b = 4 + 6 * slot;
            x.has_edge(b, b + 2)
        };
        assert_eq!(
            (0..4).map(|s| triangle_at(&g, s)).collect::<Vec<_>>(),
            [false, false, true, true]
        );
        assert_eq!(
            (0..4).map(|s| triangle_at(&h, s)).collect::<Vec<_>>(),
            [false, true, false, true]
        );
    }

    #[test]
    fn shipped_fixtures_match_constructions() {
        let (g, h) = counterexample_pair();
        let expected = [
            ("k2", complete(2)),
            ("k3", complete(3)),
            ("p3", path(3)),
            ("c4", cycle(4)),
            ("c6", cycle(6)),
            ("two-c3", two_triangles()),
            ("c4-plus-k1", cycle_plus_isolated()),
            ("star-k1-4", star(4)),
            ("counterexample-g", g),
            ("counterexample-h", h),
        ];
        assert_eq!(fixture_names().count(), expected.len());
        for (name, graph) in expected {
            assert_eq!(fixture(name).unwrap(), graph, "{name}");
            assert_eq!(fixture_text(name).unwrap().trim(), serialize_graph6(&graph));
        }
        assert!(fixture("nope").is_none());
    }
}
