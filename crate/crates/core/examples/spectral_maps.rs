//! Spectra of graph matrices, cospectrality, the eigenprojection invariant
//! and exact commute distances.

use wlspectra::graph::families::{counterexample_pair, cycle, cycle_plus_isolated, star};
use wlspectra::spectral::{commute_distances, cospectral, fuerer_invariant, spectrum, MatrixMapId};

fn main() -> wlspectra::Result<()> {
    let c6 = cycle(6);
    for id in [
        MatrixMapId::Adjacency,
        MatrixMapId::Laplacian,
        MatrixMapId::Seidel,
    ] {
        let s = spectrum(&id, &c6)?;
        let values: Vec<String> = s
            .eigenvalues
            .iter()
            .map(|e| {
                format!(
                    "{:.3}^{}",
                    (e.value * 1e6).round() / 1e6 + 0.0,
                    e.multiplicity
                )
            })
            .collect();
        println!("C6 {id}: {}", values.join(" "));
    }

    // The classic Saltire pair: cospectral for A, not for L.
    let (s, c) = (star(4), cycle_plus_isolated());
    println!(
        "\nK1,4 vs C4+K1 adjacency cospectral: {}",
        cospectral(&MatrixMapId::Adjacency, &s, &c)?
    );
    println!(
        "K1,4 vs C4+K1 laplacian cospectral: {}",
        cospectral(&MatrixMapId::Laplacian, &s, &c)?
    );
    println!(
        "eigenprojection invariants equal: {}",
        fuerer_invariant(&s)? == fuerer_invariant(&c)?
    );

    let k = commute_distances(&cycle(4))?;
    println!(
        "\ncommute distances on C4 from vertex 0: {:?}",
        k.kappa[0]
            .iter()
            .map(|x| x.as_ref().map(|q| q.to_string()))
            .collect::<Vec<_>>()
    );

    let (g, h) = counterexample_pair();
    let (mg, mh) = (
        commute_distances(&g)?.multiset(),
        commute_distances(&h)?.multiset(),
    );
    println!("counterexample pair commute multisets equal: {}", mg == mh);
    Ok(())
}
