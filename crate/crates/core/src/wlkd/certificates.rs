use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::Graph;
use crate::hom::HomMatrix;
use crate::limits::Limits;
use crate::linalg::Q;

use super::augmented::{augmented_matrix_with, tag_index};
use super::element::WlkdElement;
use super::generators::{enumerate_generators_with, GeneratorId};

/// A letter of a word: a generator, possibly reversed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: GeneratorId,
    pub starred: bool,
}

impl Letter {
    /// The generator this letter evaluates to.
    pub fn resolved(&self) -> GeneratorId {
        if self.starred {
            self.generator.reverse()
        } else {
            self.generator.clone()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            self.generator,
            if self.starred { "*" } else { "" }
        )
    }
}

pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WordVerdict {
    /// The first word in breadth-first order whose sums of entries differ.
    Witness {
        word: Word,
        soe_g: u128,
        soe_h: u128,
    },
    /// Every word up to `bound` letters has equal sums of entries.
    NoWitness { bound: usize, states: usize },
}

impl WordVerdict {
    pub fn witness(&self) -> Option<&Word> {
        match self {
            WordVerdict::Witness { word, .. } => Some(word),
            WordVerdict::NoWitness { .. } => None,
        }
    }
}

fn overflow() -> Error {
    Error::Numeric("word evaluation overflows u128".into())
}

/// `row * m` for a sparse matrix.
fn times(row: &[u128], m: &HomMatrix) -> Result<Vec<u128>> {
    let mut out = vec![0u128; m.cols()];
    for (r, &a) in row.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for &(c, b) in m.row(r) {
            let t = a.checked_mul(b).ok_or_else(overflow)?;
            out[c] = out[c].checked_add(t).ok_or_else(overflow)?;
        }
    }
    Ok(out)
}

fn sum(row: &[u128]) -> Result<u128> {
    row.iter()
        .try_fold(0u128, |acc, &x| acc.checked_add(x).ok_or_else(overflow))
}

/// Breadth-first search over words in the generators and their reverses
/// for one whose sum of entries differs between `g` and `h`.
///
/// A word is tracked by the row vector `1^T w` on each side together with
/// the pebble tuple it ends in; words reaching a seen state are pruned, and
/// so are words with a mismatched junction, whose matrix is zero.
pub fn word_soe_test(
    g: &Graph,
    h: &Graph,
    k: usize,
    d: usize,
    max_word_len: usize,
) -> Result<WordVerdict> {
    word_soe_test_with(g, h, k, d, max_word_len, &Limits::default(), 1_000_000)
}

pub fn word_soe_test_with(
    g: &Graph,
    h: &Graph,
    k: usize,
    d: usize,
    max_word_len: usize,
    limits: &Limits,
    state_cap: usize,
) -> Result<WordVerdict> {
    let gens = enumerate_generators_with(k, d, limits)?;
    let mut letters: Vec<Letter> = Vec::with_capacity(2 * gens.len());
    for id in &gens {
        for starred in [false, true] {
            letters.push(Letter {
                generator: id.clone(),
                starred,
            });
        }
    }
    // Blocks of each letter on both sides with the in and out tags.
    let mut blocks = Vec::with_capacity(letters.len());
    for letter in &letters {
        let e = WlkdElement::Element(letter.resolved().element()?);
        let ag = augmented_matrix_with(&e, g, k, d, limits)?;
        let ah = augmented_matrix_with(&e, h, k, d, limits)?;
        let bg = ag.block().expect("generators are not ⊥").clone();
        let bh = ah.block().expect("generators are not ⊥").clone();
        blocks.push((
            tag_index(&bg.p_in, k),
            tag_index(&bg.p_out, k),
            bg.matrix,
            bh.matrix,
        ));
    }

    type State = (usize, Vec<u128>, Vec<u128>);
    let mut seen: HashSet<State> = HashSet::new();
    // Each frontier entry: state plus the index of its word in `words`.
    let mut words: Vec<(Option<usize>, usize)> = Vec::new();
    let mut frontier: Vec<(State, usize)> = Vec::new();
    let spell = |words: &[(Option<usize>, usize)], mut at: usize| -> Word {
        let mut out = Vec::new();
        loop {
            let (prev, letter) = words[at];
            out.push(letters[letter].clone());
            match prev {
                Some(p) => at = p,
                None => break,
            }
        }
        out.reverse();
        out
    };

    for len in 1..=max_word_len {
        let mut next = Vec::new();
        let starts: Vec<(Option<(&State, usize)>, usize)> = if len == 1 {
            (0..letters.len()).map(|i| (None, i)).collect()
        } else {
            frontier
                .iter()
                .flat_map(|(s, w)| (0..letters.len()).map(move |i| (Some((s, *w)), i)))
                .collect()
        };
        for (from, i) in starts {
            let (tin, tout, mg, mh) = &blocks[i];
            let (vg, vh, prev) = match from {
                None => (
                    times(&vec![1; mg.rows()], mg)?,
                    times(&vec![1; mh.rows()], mh)?,
                    None,
                ),
                Some(((tag, rg, rh), w)) => {
                    if tag != tin {
                        continue;
                    }
                    (times(rg, mg)?, times(rh, mh)?, Some(w))
                }
            };
            let state = (*tout, vg, vh);
            if seen.contains(&state) {
                continue;
            }
            let (sg, sh) = (sum(&state.1)?, sum(&state.2)?);
            words.push((prev, i));
            let id = words.len() - 1;
            if sg != sh {
                return Ok(WordVerdict::Witness {
                    word: spell(&words, id),
                    soe_g: sg,
                    soe_h: sh,
                });
            }
            seen.insert(state.clone());
            check_cap("word search states", seen.len() as u128, state_cap as u128)?;
            next.push((state, id));
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(WordVerdict::NoWitness {
        bound: max_word_len,
        states: seen.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoStochasticVerdict {
    /// A solution `X` with `X Â_G = Â_H X` for every generator, listed as
    /// non-zero entries `(row over H, column over G, value)`.
    Feasible {
        dim_g: usize,
        dim_h: usize,
        x: Vec<(usize, usize, Q)>,
    },
    Infeasible,
}

impl PseudoStochasticVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, PseudoStochasticVerdict::Feasible { .. })
    }
}

/// Decides exactly whether a pseudo-stochastic `X` intertwines the
/// augmented generator matrices of `g` and `h`.
pub fn pseudo_stochastic_feasible(
    g: &Graph,
    h: &Graph,
    k: usize,
    d: usize,
) -> Result<PseudoStochasticVerdict> {
    pseudo_stochastic_feasible_with(g, h, k, d, &Limits::default())
}

pub fn pseudo_stochastic_feasible_with(
    g: &Graph,
    h: &Graph,
    k: usize,
    d: usize,
    limits: &Limits,
) -> Result<PseudoStochasticVerdict> {
    let side = |n: usize| {
        (n as u128)
            .checked_pow((k + d) as u32)
            .and_then(|t| t.checked_mul(((k + 1) as u128).pow((k + d) as u32)))
            .unwrap_or(u128::MAX)
    };
    check_cap(
        "certificate side n^(k+d)(k+1)^(k+d)",
        side(g.order()),
        limits.certificate_cap,
    )?;
    check_cap(
        "certificate side n^(k+d)(k+1)^(k+d)",
        side(h.order()),
        limits.certificate_cap,
    )?;
    let gens = enumerate_generators_with(k, d, limits)?;
    let mut mats_g = Vec::with_capacity(gens.len());
    let mut mats_h = Vec::with_capacity(gens.len());
    for id in &gens {
        let e = WlkdElement::Element(id.element()?);
        mats_g.push(augmented_matrix_with(&e, g, k, d, limits)?.to_hom_matrix()?);
        mats_h.push(augmented_matrix_with(&e, h, k, d, limits)?.to_hom_matrix()?);
    }
    let (dim_g, dim_h) = (side(g.order()) as usize, side(h.order()) as usize);
    Ok(
        match crate::hom::tplus::intertwiner_solution(&mats_g, &mats_h, dim_g, dim_h)? {
            Some(x) => PseudoStochasticVerdict::Feasible { dim_g, dim_h, x },
            None => PseudoStochasticVerdict::Infeasible,
        },
    )
}
