use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hom::{identify, BilabelledGraph};

/// A `(k+d, k+d)`-bilabelled graph together with a tree cover, a pebbling
/// with pebbles `0..=k` and the pebbles seen at the in- and out-labels.
///
/// The constructor only checks shapes; [`CoveredBigraph::validate`] checks
/// the axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoveredBigraph {
    k: usize,
    d: usize,
    bigraph: BilabelledGraph,
    parent: Vec<Option<usize>>,
    pebbling: Vec<usize>,
    p_in: Vec<usize>,
    p_out: Vec<usize>,
}

/// An element of the labelled class, or the absorbing element ⊥.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WlkdElement {
    Bottom,
    Element(CoveredBigraph),
}

/// The axioms checked by [`CoveredBigraph::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// The parent map is a rooted tree and every edge joins comparable
    /// vertices.
    TreeCover,
    /// Along every edge `u <= v`, no vertex strictly after `u` up to `v`
    /// reuses the pebble of `u`.
    Pebbling,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::TreeCover,
        Axiom::Pebbling,
        Axiom::B1,
        Axiom::B2,
        Axiom::B3,
        Axiom::B4,
        Axiom::B5,
        Axiom::B6,
        Axiom::B7,
        Axiom::B8,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::TreeCover => "tree-cover",
            Axiom::Pebbling => "pebbling",
            Axiom::B1 => "B1",
            Axiom::B2 => "B2",
            Axiom::B3 => "B3",
            Axiom::B4 => "B4",
            Axiom::B5 => "B5",
            Axiom::B6 => "B6",
            Axiom::B7 => "B7",
            Axiom::B8 => "B8",
        };
        f.write_str(s)
    }
}

/// Pass/fail per axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub results: Vec<(Axiom, bool)>,
}

impl Validation {
    pub fn passes(&self) -> bool {
        self.results.iter().all(|&(_, ok)| ok)
    }

    pub fn failed(&self) -> Vec<Axiom> {
        self.results
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(a, _)| a)
            .collect()
    }
}

impl CoveredBigraph {
    pub fn new(
        k: usize,
        d: usize,
        bigraph: BilabelledGraph,
        parent: Vec<Option<usize>>,
        pebbling: Vec<usize>,
        p_in: Vec<usize>,
        p_out: Vec<usize>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("k must be at least 1".into()));
        }
        let n = bigraph.graph().order();
        let width = k + d;
        if bigraph.in_labels().len() != width || bigraph.out_labels().len() != width {
            return Err(Error::Argument(format!(
                "expected {width} in- and out-labels"
            )));
        }
        if p_in.len() != width || p_out.len() != width {
            return Err(Error::Argument(format!(
                "expected pebble tuples of length {width}"
            )));
        }
        if parent.len() != n || pebbling.len() != n {
            return Err(Error::Argument(format!(
                "parent map and pebbling need {n} entries"
            )));
        }
        if parent.iter().flatten().any(|&p| p >= n) {
            return Err(Error::Argument("parent out of range".into()));
        }
        if pebbling.iter().chain(&p_in).chain(&p_out).any(|&p| p > k) {
            return Err(Error::Argument(format!("pebbles must lie in 0..={k}")));
        }
        Ok(CoveredBigraph {
            k,
            d,
            bigraph,
            parent,
            pebbling,
            p_in,
            p_out,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn bigraph(&self) -> &BilabelledGraph {
        &self.bigraph
    }

    pub fn graph(&self) -> &Graph {
        self.bigraph.graph()
    }

    pub fn in_labels(&self) -> &[usize] {
        self.bigraph.in_labels()
    }

    pub fn out_labels(&self) -> &[usize] {
        self.bigraph.out_labels()
    }

    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn pebbling(&self) -> &[usize] {
        &self.pebbling
    }

    pub fn p_in(&self) -> &[usize] {
        &self.p_in
    }

    pub fn p_out(&self) -> &[usize] {
        &self.p_out
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn reverse(&self) -> Self {
        CoveredBigraph {
            bigraph: self.bigraph.reverse(),
            p_in: self.p_out.clone(),
            p_out: self.p_in.clone(),
            ..self.clone()
        }
    }

    /// Ancestors of `x` from `x` up to the root; stops on a cycle.
    pub(crate) fn path_to_root(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut cur = x;
        while let Some(p) = self.parent[cur] {
            if out.len() > self.order() {
                break;
            }
            out.push(p);
            cur = p;
        }
        out
    }

    /// `x <= y` in the tree order, i.e. `x` is an ancestor of `y` or `y`.
    pub(crate) fn leq(&self, x: usize, y: usize) -> bool {
        self.path_to_root(y).contains(&x)
    }

    pub(crate) fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub(crate) fn is_leaf(&self, x: usize) -> bool {
        !self.parent.contains(&Some(x))
    }

    pub(crate) fn leaves(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.is_leaf(x)).collect()
    }

    /// Number of common ancestors-or-self of `x` and `y` strictly below the
    /// k-th label.
    pub fn gca(&self, x: usize, y: usize) -> usize {
        let uk = self.in_labels()[self.k - 1];
        let py = self.path_to_root(y);
        self.path_to_root(x)
            .into_iter()
            .filter(|&z| z != uk && self.leq(uk, z) && py.contains(&z))
            .count()
    }

    fn is_rooted_tree(&self) -> bool {
        let n = self.order();
        let roots = self.parent.iter().filter(|p| p.is_none()).count();
        roots == 1 && (0..n).all(|x| self.path_to_root(x).len() <= n)
    }

    pub fn validate(&self) -> Validation {
        let k = self.k;
        let w = self.k + self.d;
        let u = self.in_labels();
        let v = self.out_labels();
        let g = self.graph();
        let tree = self.is_rooted_tree();
        let root = self.parent.iter().position(Option::is_none);

        let cover = tree && g.edges().iter().all(|&(a, b)| self.comparable(a, b));

        let pebbling = g.edges().iter().all(|&(a, b)| {
            let (top, bottom) = if self.leq(a, b) {
                (a, b)
            } else if self.leq(b, a) {
                (b, a)
            } else {
                return true;
            };
            self.path_to_root(bottom)
                .into_iter()
                .take_while(|&x| x != top)
                .all(|x| self.pebbling[x] != self.pebbling[top])
        });

        let b1 =
            root == Some(u[0]) && u[0] == v[0] && self.is_leaf(u[w - 1]) && self.is_leaf(v[w - 1]);

        let chain = |t: &[usize]| (1..w).all(|i| self.leq(t[i - 1], t[i]));
        let b2 = (0..k).all(|i| u[i] == v[i]) && chain(u) && chain(v);

        let steps = |t: &[usize]| (k..w).all(|i| self.parent[t[i]] == Some(t[i - 1]));
        let b3 = steps(u) && steps(v);

        let uk = u[k - 1];
        let labelled = |x: usize| u.contains(&x) || v.contains(&x);
        let b4 = (0..self.order())
            .filter(|&x| !labelled(x))
            .all(|x| self.leq(uk, x));

        let leaves = self.leaves();
        let below_uk = |x: usize| {
            self.path_to_root(x)
                .into_iter()
                .filter(|&y| y != uk && self.leq(uk, y))
                .count()
        };
        let b5 = leaves.iter().all(|&x| below_uk(x) == self.d);

        let target = self.gca(u[w - 1], v[w - 1]);
        let b6 = leaves
            .iter()
            .all(|&x| leaves.iter().all(|&y| self.gca(x, y) >= target));

        let mut seen: Vec<(usize, usize)> = Vec::new();
        let b7 = u[..k].iter().all(|&x| {
            let p = self.pebbling[x];
            let ok = seen.iter().all(|&(y, q)| y == x || q != p);
            seen.push((x, p));
            ok
        });

        let b8 = (0..w)
            .all(|i| self.p_in[i] == self.pebbling[u[i]] && self.p_out[i] == self.pebbling[v[i]]);

        Validation {
            results: vec![
                (Axiom::TreeCover, cover),
                (Axiom::Pebbling, pebbling),
                (Axiom::B1, b1),
                (Axiom::B2, b2),
                (Axiom::B3, b3),
                (Axiom::B4, b4),
                (Axiom::B5, b5),
                (Axiom::B6, b6),
                (Axiom::B7, b7),
                (Axiom::B8, b8),
            ],
        }
    }

    /// The sub-element on `keep` (in increasing order) with new label
    /// tuples given as old vertex ids.
    pub(crate) fn restrict(
        &self,
        keep: &[usize],
        in_labels: &[usize],
        out_labels: &[usize],
        p_in: Vec<usize>,
        p_out: Vec<usize>,
    ) -> Result<Self> {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in keep.iter().enumerate() {
            index[x] = i;
        }
        let edges = self
            .graph()
            .edges()
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        let graph = Graph::new(keep.len(), edges)?;
        let relabel = |t: &[usize]| t.iter().map(|&x| index[x]).collect::<Vec<_>>();
        let bigraph = BilabelledGraph::new(graph, relabel(in_labels), relabel(out_labels))?;
        // The parent of a kept vertex is its nearest kept ancestor.
        let parent = keep
            .iter()
            .map(|&x| {
                self.path_to_root(x)
                    .into_iter()
                    .skip(1)
                    .find(|&y| index[y] != usize::MAX)
                    .map(|y| index[y])
            })
            .collect();
        let pebbling = keep.iter().map(|&x| self.pebbling[x]).collect();
        CoveredBigraph::new(self.k, self.d, bigraph, parent, pebbling, p_in, p_out)
    }
}

impl WlkdElement {
    pub fn is_bottom(&self) -> bool {
        matches!(self, WlkdElement::Bottom)
    }

    pub fn as_element(&self) -> Option<&CoveredBigraph> {
        match self {
            WlkdElement::Bottom => None,
            WlkdElement::Element(e) => Some(e),
        }
    }

    /// ⊥ passes vacuously.
    pub fn validate(&self) -> Validation {
        match self {
            WlkdElement::Bottom => Validation {
                results: Axiom::ALL.iter().map(|&a| (a, true)).collect(),
            },
            WlkdElement::Element(e) => e.validate(),
        }
    }

    pub fn reverse(&self) -> Self {
        match self {
            WlkdElement::Bottom => WlkdElement::Bottom,
            WlkdElement::Element(e) => WlkdElement::Element(e.reverse()),
        }
    }
}

impl From<CoveredBigraph> for WlkdElement {
    fn from(e: CoveredBigraph) -> Self {
        WlkdElement::Element(e)
    }
}

/// Series composition: ⊥ unless the out-pebbles of `a` equal the
/// in-pebbles of `b`, otherwise the out-labels of `a` are glued onto the
/// in-labels of `b` and the covers and pebblings are merged along them.
pub fn series_compose_wlkd(a: &WlkdElement, b: &WlkdElement) -> Result<WlkdElement> {
    let (x, y) = match (a, b) {
        (WlkdElement::Element(x), WlkdElement::Element(y)) => (x, y),
        _ => return Ok(WlkdElement::Bottom),
    };
    if (x.k, x.d) != (y.k, y.d) {
        return Err(Error::Argument(format!(
            "cannot compose (k, d) = ({}, {}) with ({}, {})",
            x.k, x.d, y.k, y.d
        )));
    }
    if x.p_out != y.p_in {
        return Ok(WlkdElement::Bottom);
    }
    let pairs: Vec<(usize, usize)> = x
        .out_labels()
        .iter()
        .copied()
        .zip(y.in_labels().iter().copied())
        .collect();
    let (graph, first, second) = identify(x.graph(), y.graph(), &pairs)?;
    let n = graph.order();
    let mut parent: Vec<Option<Option<usize>>> = vec![None; n];
    let mut pebbling: Vec<Option<usize>> = vec![None; n];
    for (side, map) in [(x, &first), (y, &second)] {
        for old in 0..side.order() {
            let new = map[old];
            let p = side.parent[old].map(|q| map[q]);
            let peb = side.pebbling[old];
            if parent[new].is_some_and(|existing| existing != p)
                || pebbling[new].is_some_and(|e| e != peb)
            {
                return Err(Error::Contract(
                    "glued labels disagree on the tree cover or the pebbling".into(),
                ));
            }
            parent[new] = Some(p);
            pebbling[new] = Some(peb);
        }
    }
    let bigraph = BilabelledGraph::new(
        graph,
        x.in_labels().iter().map(|&v| first[v]).collect(),
        y.out_labels().iter().map(|&v| second[v]).collect(),
    )?;
    Ok(WlkdElement::Element(CoveredBigraph::new(
        x.k,
        x.d,
        bigraph,
        parent.into_iter().map(Option::unwrap).collect(),
        pebbling.into_iter().map(Option::unwrap).collect(),
        x.p_in.clone(),
        y.p_out.clone(),
    )?))
}
