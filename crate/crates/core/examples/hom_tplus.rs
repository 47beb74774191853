//! Homomorphism counts, bilabelled graphs and the T+ pattern test.

use wlspectra::graph::families::{cycle, path, two_triangles};
use wlspectra::graph::Graph;
use wlspectra::hom::{enumerate_tplus, hom_count, hom_indist_tplus, BilabelledGraph, TPlusVerdict};

fn main() -> wlspectra::Result<()> {
    let triangle = cycle(3);
    println!("hom(K3, C6) = {}", hom_count(&triangle, &cycle(6))?);
    println!("hom(K3, 2C3) = {}", hom_count(&triangle, &two_triangles())?);

    // The edge as a (1,1)-bilabelled graph has the adjacency matrix as its
    // homomorphism matrix; composing it with itself counts walks.
    let edge = BilabelledGraph::new(Graph::new(2, vec![(0, 1)])?, vec![0], vec![1])?;
    let walk2 = edge.series_compose(&edge)?;
    let m = walk2.hom_matrix(&path(3))?;
    println!("\n2-walks in P3:\n{:?}", m.to_dense());

    let patterns = enumerate_tplus(5)?;
    println!(
        "\nT+ patterns with at most 5 forest vertices: {}",
        patterns.len()
    );
    match hom_indist_tplus(&cycle(6), &two_triangles(), 5)? {
        TPlusVerdict::EqualUpToBound { patterns } => {
            println!("C6 vs 2C3: equal on {patterns} patterns")
        }
        TPlusVerdict::Distinguished {
            pattern,
            count_g,
            count_h,
        } => {
            println!(
                "C6 vs 2C3: pattern with edges {:?} gives {count_g} vs {count_h}",
                pattern.graph.edges()
            )
        }
    }
    Ok(())
}
