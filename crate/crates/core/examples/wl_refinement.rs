//! Colour refinement, (1,1)-WL and k-WL on pairs that 1-WL cannot tell
//! apart.

use wlspectra::graph::families::{counterexample_pair, cycle, two_triangles};
use wlspectra::wl::{
    wl11_colour_classes, wl11_indistinguishable, wlk_colour, wlk_indistinguishable, Depth,
};

fn main() -> wlspectra::Result<()> {
    let (c6, tt) = (cycle(6), two_triangles());
    let wl1 = wlk_indistinguishable(&c6, &tt, 1, Depth::Stable)?;
    println!(
        "C6 vs 2C3, 1-WL: indistinguishable={}",
        wl1.indistinguishable
    );
    let wl11 = wl11_indistinguishable(&c6, &tt);
    println!(
        "C6 vs 2C3, (1,1)-WL: indistinguishable={} witness={:?}",
        wl11.verdict.indistinguishable, wl11.verdict.witness
    );

    for d in 0..=2 {
        let v = wlk_indistinguishable(&c6, &tt, 2, Depth::Finite(d))?;
        println!(
            "C6 vs 2C3, 2-WL after {d} rounds: indistinguishable={}",
            v.indistinguishable
        );
    }

    let (g, h) = counterexample_pair();
    println!("\ncounterexample pair, n={}", g.order());
    println!(
        "  (1,1)-WL: {}",
        wl11_indistinguishable(&g, &h).verdict.indistinguishable
    );
    println!(
        "  2-WL:     {}",
        wlk_indistinguishable(&g, &h, 2, Depth::Stable)?.indistinguishable
    );
    println!(
        "  (1,1)-WL off-diagonal classes in G: {}",
        wl11_colour_classes(&g).off_diagonal_classes()
    );
    println!(
        "  2-WL classes on pairs of G: {}",
        wlk_colour(&g, 2, Depth::Stable)?.num_classes()
    );
    Ok(())
}
