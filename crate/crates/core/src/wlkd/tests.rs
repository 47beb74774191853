use rand::rngs::StdRng;
use rand::SeedableRng;

use super::element::Axiom;
use super::generators::literal_candidates;
use super::*;
use crate::graph::families::{cycle, graphs_up_to_isomorphism, path, two_triangles};
use crate::graph::Graph;
use crate::hom::{hom_count, BilabelledGraph};
use crate::wl::{wlk_indistinguishable, Depth};

fn id(kind: GeneratorKind, h: &[usize], p_in: &[usize], p_out: &[usize]) -> GeneratorId {
    GeneratorId {
        kind,
        h: h.to_vec(),
        p_in: p_in.to_vec(),
        p_out: p_out.to_vec(),
    }
}

fn el(g: &GeneratorId) -> WlkdElement {
    WlkdElement::Element(g.element().unwrap())
}

#[test]
fn family_sizes() {
    let count = |k, d| enumerate_generators(k, d).unwrap().len();
    assert_eq!(count(1, 0), 2);
    assert_eq!(count(1, 1), 14);
    assert_eq!(count(2, 0), 15);
}

#[test]
fn every_generator_validates() {
    for (k, d) in [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)] {
        for g in enumerate_generators(k, d).unwrap() {
            let v = g.element().unwrap().validate();
            assert!(v.passes(), "{g} fails {:?}", v.failed());
            assert!(
                g.reverse().element().unwrap().validate().passes(),
                "{g} reversed"
            );
        }
    }
}

#[test]
fn valid_literal_candidates_are_in_the_family() {
    for (k, d) in [(1, 1), (1, 2), (2, 0), (2, 1)] {
        let family = enumerate_generators(k, d).unwrap();
        for c in literal_candidates(k, d) {
            if c.element().is_ok_and(|e| e.validate().passes()) {
                assert!(family.contains(&c), "{c} missing");
            }
        }
    }
}

fn two_branches(extra_leaf: bool) -> CoveredBigraph {
    // k = 1, d = 2: root 0, in-path 0-1-2, out-path 0-3-4, and optionally
    // a leaf 5 directly below the root.
    let n = if extra_leaf { 6 } else { 5 };
    let mut parent = vec![None, Some(0), Some(1), Some(0), Some(3)];
    parent.truncate(n);
    if extra_leaf {
        parent.push(Some(0));
    }
    let mut pebbling = vec![0, 1, 1, 1, 1];
    pebbling.resize(n, 1);
    let bigraph = BilabelledGraph::new(
        Graph::new(n, vec![(0, 2)]).unwrap(),
        vec![0, 1, 2],
        vec![0, 3, 4],
    )
    .unwrap();
    CoveredBigraph::new(
        1,
        2,
        bigraph,
        parent,
        pebbling,
        vec![0, 1, 1],
        vec![0, 1, 1],
    )
    .unwrap()
}

#[test]
fn short_leaf_fails_only_depth_axiom() {
    assert!(two_branches(false).validate().passes());
    assert_eq!(two_branches(true).validate().failed(), vec![Axiom::B5]);
}

#[test]
fn bottom_absorbs_and_mismatch_is_bottom() {
    let a = el(&id(GeneratorKind::Identity, &[1], &[0, 1], &[0, 1]));
    let b = el(&id(GeneratorKind::Identity, &[1], &[1, 0], &[1, 0]));
    assert!(series_compose_wlkd(&WlkdElement::Bottom, &a)
        .unwrap()
        .is_bottom());
    assert!(series_compose_wlkd(&a, &WlkdElement::Bottom)
        .unwrap()
        .is_bottom());
    assert!(series_compose_wlkd(&a, &b).unwrap().is_bottom());
    let g = cycle(5);
    let zero = augmented_matrix(&a, &g, 1, 1)
        .unwrap()
        .mul(&augmented_matrix(&b, &g, 1, 1).unwrap())
        .unwrap();
    assert!(zero.is_zero());
    assert!(augmented_matrix(&WlkdElement::Bottom, &g, 1, 1)
        .unwrap()
        .is_zero());
}

#[test]
fn identity_is_neutral() {
    let g = path(4);
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20 {
        let e = random_element(1, 1, 6, &mut rng).unwrap();
        let x = e.as_element().unwrap();
        let i = el(&id(GeneratorKind::Identity, &[1], x.p_in(), x.p_in()));
        let ie = series_compose_wlkd(&i, &e).unwrap();
        assert_eq!(
            augmented_matrix(&ie, &g, 1, 1).unwrap(),
            augmented_matrix(&e, &g, 1, 1).unwrap()
        );
    }
}

#[test]
fn correspondence_laws() {
    let graphs = [cycle(4), path(3), two_triangles()];
    let mut rng = StdRng::seed_from_u64(11);
    for (k, d) in [(1, 1), (2, 0), (2, 1)] {
        for _ in 0..15 {
            let a = random_element(k, d, 6, &mut rng).unwrap();
            let b = random_element(k, d, 6, &mut rng).unwrap();
            let ab = series_compose_wlkd(&a, &b).unwrap();
            for g in &graphs {
                let ma = augmented_matrix(&a, g, k, d).unwrap();
                let mb = augmented_matrix(&b, g, k, d).unwrap();
                assert_eq!(
                    augmented_matrix(&ab, g, k, d).unwrap(),
                    ma.mul(&mb).unwrap()
                );
                assert_eq!(
                    augmented_matrix(&a.reverse(), g, k, d).unwrap(),
                    ma.transpose()
                );
                let underlying = hom_count(a.as_element().unwrap().graph(), g).unwrap();
                assert_eq!(ma.soe().unwrap(), underlying);
            }
        }
    }
}

#[test]
fn generators_decompose_to_themselves() {
    for (k, d) in [(1, 1), (2, 1)] {
        for g in enumerate_generators(k, d).unwrap() {
            let parts = decompose(&el(&g)).unwrap();
            match g.kind {
                GeneratorKind::Join(_) => {
                    let joins = parts
                        .iter()
                        .filter(|p| matches!(p.kind, GeneratorKind::Join(_)))
                        .count();
                    assert_eq!(joins, 1, "{g}");
                }
                _ => assert!(
                    parts.contains(&g) || g.kind == GeneratorKind::Identity,
                    "{g}"
                ),
            }
            let back = compose_generators(&parts).unwrap();
            let test = cycle(4);
            assert_eq!(
                augmented_matrix(&back, &test, k, d).unwrap(),
                augmented_matrix(&el(&g), &test, k, d).unwrap()
            );
        }
    }
}

#[test]
fn decomposition_round_trips() {
    let graphs = [cycle(5), path(4), two_triangles()];
    let mut rng = StdRng::seed_from_u64(5);
    for (k, d) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for _ in 0..25 {
            let e = random_element(k, d, 7, &mut rng).unwrap();
            let x = e.as_element().unwrap();
            let parts = decompose(&e).unwrap();
            let joins = parts
                .iter()
                .filter(|p| matches!(p.kind, GeneratorKind::Join(_)))
                .count();
            assert_eq!(joins + 1, x.leaves().len().max(1));
            let back = compose_generators(&parts).unwrap();
            for g in &graphs {
                assert_eq!(
                    augmented_matrix(&back, g, k, d).unwrap(),
                    augmented_matrix(&e, g, k, d).unwrap()
                );
            }
        }
    }
}

#[test]
fn decompose_rejects_bottom() {
    assert!(decompose(&WlkdElement::Bottom).is_err());
}

#[test]
fn pseudo_identity_for_equal_graphs() {
    let g = cycle(4);
    let v = pseudo_stochastic_feasible(&g, &g, 1, 1).unwrap();
    assert!(v.is_feasible());
}

#[test]
fn pseudo_matches_wl_on_small_graphs() {
    let graphs: Vec<Graph> = (1..=3).flat_map(graphs_up_to_isomorphism).collect();
    for (k, d) in [(1, 0), (1, 1)] {
        for g in &graphs {
            for h in &graphs {
                let feasible = pseudo_stochastic_feasible(g, h, k, d)
                    .unwrap()
                    .is_feasible();
                let wl = wlk_indistinguishable(g, h, k, Depth::Finite(d))
                    .unwrap()
                    .indistinguishable;
                assert_eq!(feasible, wl, "{g:?} {h:?} k={k} d={d}");
            }
        }
    }
}

#[test]
fn word_finds_triangles() {
    match word_soe_test(&cycle(6), &two_triangles(), 2, 1, 3).unwrap() {
        WordVerdict::Witness { word, soe_g, soe_h } => {
            assert_eq!(word.len(), 3);
            assert_ne!(soe_g, soe_h);
        }
        v => panic!("no witness: {v:?}"),
    }
}

#[test]
fn word_silent_on_wl_equivalent_pair() {
    let v = word_soe_test(&cycle(6), &two_triangles(), 1, 1, 3).unwrap();
    assert!(v.witness().is_none());
}
