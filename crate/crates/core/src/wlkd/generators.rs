use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::hom::BilabelledGraph;
use crate::limits::Limits;

use super::element::{CoveredBigraph, WlkdElement};

/// Shape of a generator. Vertex names are 1-based: names up to `k` are
/// the chain vertices carrying the first `k` labels, `k+1..=k+d` the
/// vertices below them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    Identity,
    /// One edge between the named vertices, `i < j`.
    Adjacency(usize, usize),
    /// Out-labels beyond position `ℓ` move to a fresh branch.
    Join(usize),
}

/// A generator in canonical form: `h[i]` is the first position whose label
/// sits on the same vertex as position `i` (1-based), so `h` is
/// non-decreasing and its values are the chain vertex names.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorId {
    pub kind: GeneratorKind,
    pub h: Vec<usize>,
    pub p_in: Vec<usize>,
    pub p_out: Vec<usize>,
}

fn digits(p: &[usize]) -> String {
    p.iter().map(|x| x.to_string()).collect()
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self.h.iter().map(|x| x.to_string()).collect();
        match &self.kind {
            GeneratorKind::Identity => write!(f, "I")?,
            GeneratorKind::Adjacency(i, j) => write!(f, "A{i},{j}")?,
            GeneratorKind::Join(l) => write!(f, "J{l}")?,
        }
        write!(f, "[h={}", h.join(","))?;
        if self.p_in == self.p_out {
            write!(f, " p={}]", digits(&self.p_in))
        } else {
            write!(f, " in={} out={}]", digits(&self.p_in), digits(&self.p_out))
        }
    }
}

impl GeneratorId {
    pub fn k(&self) -> usize {
        self.h.len()
    }

    pub fn d(&self) -> usize {
        self.p_in.len() - self.h.len()
    }

    /// The reversed generator, which is again a generator.
    pub fn reverse(&self) -> Self {
        GeneratorId {
            kind: self.kind.clone(),
            h: self.h.clone(),
            p_in: self.p_out.clone(),
            p_out: self.p_in.clone(),
        }
    }

    /// Builds the element with its tree cover: the chain vertices in name
    /// order, then `k+1, ..., k+d`, then for a join the primed branch
    /// hanging off position `ℓ`.
    pub fn element(&self) -> Result<CoveredBigraph> {
        let k = self.k();
        let d = self.d();
        let runs: Vec<usize> = {
            let mut r = self.h.clone();
            r.dedup();
            r
        };
        let m = runs.len();
        let name_index = |name: usize| -> Result<usize> {
            if name > k {
                Ok(m + name - k - 1)
            } else {
                runs.iter().position(|&r| r == name).ok_or_else(|| {
                    Error::Argument(format!("vertex name {name} is not a chain vertex"))
                })
            }
        };
        let unprimed: Vec<usize> = (0..k + d)
            .map(|i| {
                if i < k {
                    name_index(self.h[i])
                } else {
                    Ok(m + i - k)
                }
            })
            .collect::<Result<_>>()?;
        let (branch, extra) = match self.kind {
            GeneratorKind::Join(l) => (l, k + d - l),
            _ => (k + d, 0),
        };
        let n = m + d + extra;
        let primed = |pos: usize| m + d + (pos - branch);
        let out: Vec<usize> = (0..k + d)
            .map(|i| if i < branch { unprimed[i] } else { primed(i) })
            .collect();

        let mut parent: Vec<Option<usize>> = (0..m + d).map(|x| x.checked_sub(1)).collect();
        for pos in branch..k + d {
            parent.push(Some(if pos == branch {
                unprimed[branch - 1]
            } else {
                primed(pos - 1)
            }));
        }
        let mut pebbling = vec![0; n];
        for i in (0..k + d).rev() {
            pebbling[unprimed[i]] = self.p_in[i];
        }
        for i in branch..k + d {
            pebbling[primed(i)] = self.p_out[i];
        }

        let edges = match self.kind {
            GeneratorKind::Adjacency(i, j) => vec![(name_index(i)?, name_index(j)?)],
            _ => Vec::new(),
        };
        let bigraph = BilabelledGraph::new(Graph::new(n, edges)?, unprimed, out)?;
        CoveredBigraph::new(
            k,
            d,
            bigraph,
            parent,
            pebbling,
            self.p_in.clone(),
            self.p_out.clone(),
        )
    }
}

/// All maps `[len] -> 0..=k` in lexicographic order.
pub(crate) fn pebble_tuples(len: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let base = k + 1;
    let total = base.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut p = vec![0; len];
        for slot in p.iter_mut().rev() {
            *slot = code % base;
            code /= base;
        }
        p
    })
}

/// Non-decreasing surjections `[k] -> H` for every non-empty `H ⊆ [k]`,
/// each as `(H, h)` with 1-based values.
fn label_patterns(k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << k) {
        let set: Vec<usize> = (1..=k).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
        // Run lengths: compositions of k into |H| positive parts.
        fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
            if parts == 1 {
                return vec![vec![total]];
            }
            (1..=total.saturating_sub(parts - 1))
                .flat_map(|first| {
                    compositions(total - first, parts - 1)
                        .into_iter()
                        .map(move |mut rest| {
                            rest.insert(0, first);
                            rest
                        })
                })
                .collect()
        }
        for lengths in compositions(k, set.len()) {
            let h: Vec<usize> = set
                .iter()
                .zip(&lengths)
                .flat_map(|(&x, &l)| std::iter::repeat_n(x, l))
                .collect();
            out.push((set.clone(), h));
        }
    }
    out
}

/// Maps a vertex name of the literal reading (an element of `H` or a
/// position beyond `k`) to the canonical name: the first position carrying
/// that vertex.
fn canonical_name(name: usize, h: &[usize]) -> usize {
    if name > h.len() {
        name
    } else {
        h.iter()
            .position(|&x| x == name)
            .map(|i| i + 1)
            .expect("name lies in H")
    }
}

fn canonical_h(h: &[usize]) -> Vec<usize> {
    h.iter().map(|&x| canonical_name(x, h)).collect()
}

#[cfg(test)]
/// Side conditions stated for the generator family, checked literally on
/// the uncanonicalised data. `p` is indexed by position (0-based).
pub(crate) fn literal_conditions(
    kind: &GeneratorKind,
    h: &[usize],
    p_in: &[usize],
    p_out: &[usize],
) -> bool {
    let k = h.len();
    let hp_ok = (0..k).all(|i| (0..k).all(|j| p_in[i] != p_in[j] || h[i] == h[j]));
    hp_ok
        && match *kind {
            GeneratorKind::Identity => p_in == p_out,
            GeneratorKind::Adjacency(i, j) => {
                p_in == p_out && (i + 1..=j).all(|l| p_in[i - 1] != p_in[l - 1])
            }
            GeneratorKind::Join(l) => p_in[..l] == p_out[..l],
        }
}

/// The generator family for `(k, d)` in canonical form, sorted: every
/// identity, adjacency and join shape over every label pattern and every
/// pebble assignment whose materialised element passes the validator.
pub fn enumerate_generators(k: usize, d: usize) -> Result<Vec<GeneratorId>> {
    enumerate_generators_with(k, d, &Limits::default())
}

pub fn enumerate_generators_with(k: usize, d: usize, limits: &Limits) -> Result<Vec<GeneratorId>> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    let w = k + d;
    let tuples = ((k + 1) as u128).saturating_pow(w as u32);
    let candidates = tuples
        .saturating_mul(tuples)
        .saturating_mul((w * w) as u128 + 1)
        << (k - 1);
    check_cap(
        "generator candidates",
        candidates,
        (limits.generator_cap as u128).saturating_mul(1000),
    )?;

    let mut found: BTreeSet<GeneratorId> = BTreeSet::new();
    let mut consider =
        |kind: GeneratorKind, h: &[usize], p_in: &[usize], p_out: &[usize]| -> Result<()> {
            let id = GeneratorId {
                kind,
                h: h.to_vec(),
                p_in: p_in.to_vec(),
                p_out: p_out.to_vec(),
            };
            if id.element()?.validate().passes() {
                found.insert(id);
                check_cap(
                    "generator family",
                    found.len() as u128,
                    limits.generator_cap as u128,
                )?;
            }
            Ok(())
        };

    for (_, raw) in label_patterns(k)
        .into_iter()
        .filter(|(set, h)| canonical_h(h) == *h && set.contains(&1))
    {
        let h = raw;
        let mut names = h.clone();
        names.dedup();
        names.extend(k + 1..=w);
        for p in pebble_tuples(w, k) {
            consider(GeneratorKind::Identity, &h, &p, &p)?;
            for (a, &i) in names.iter().enumerate() {
                for &j in &names[a + 1..] {
                    consider(GeneratorKind::Adjacency(i, j), &h, &p, &p)?;
                }
            }
            for l in k..w {
                for tail in pebble_tuples(w - l, k) {
                    let mut q = p[..l].to_vec();
                    q.extend(tail);
                    consider(GeneratorKind::Join(l), &h, &p, &q)?;
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
/// The literal nested loops over `H`, `h`, the pebbles and the shapes with
/// the stated side conditions, canonicalised. Used to cross-check
/// [`enumerate_generators`].
pub(crate) fn literal_candidates(k: usize, d: usize) -> Vec<GeneratorId> {
    let w = k + d;
    let mut out = BTreeSet::new();
    for (set, h) in label_patterns(k) {
        let names: Vec<usize> = set.iter().copied().chain(k + 1..=w).collect();
        let mut push = |kind: GeneratorKind, p: &[usize], q: &[usize]| {
            if literal_conditions(&kind, &h, p, q) {
                let kind = match kind {
                    GeneratorKind::Adjacency(i, j) => {
                        GeneratorKind::Adjacency(canonical_name(i, &h), canonical_name(j, &h))
                    }
                    other => other,
                };
                out.insert(GeneratorId {
                    kind,
                    h: canonical_h(&h),
                    p_in: p.to_vec(),
                    p_out: q.to_vec(),
                });
            }
        };
        for p in pebble_tuples(w, k) {
            push(GeneratorKind::Identity, &p, &p);
            for (a, &i) in names.iter().enumerate() {
                for &j in &names[a + 1..] {
                    push(GeneratorKind::Adjacency(i, j), &p, &p);
                }
            }
            for l in k..w {
                for tail in pebble_tuples(w - l, k) {
                    let mut q = p[..l].to_vec();
                    q.extend(tail);
                    push(GeneratorKind::Join(l), &p, &q);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Materialises a list of generators and composes them left to right.
pub fn compose_generators(word: &[GeneratorId]) -> Result<WlkdElement> {
    let mut iter = word.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::Argument("cannot compose an empty word".into()))?;
    let mut acc = WlkdElement::Element(first.element()?);
    for g in iter {
        acc = super::element::series_compose_wlkd(&acc, &WlkdElement::Element(g.element()?))?;
    }
    Ok(acc)
}
