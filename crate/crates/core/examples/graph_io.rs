//! Loading graphs: shipped fixtures, graph6 and edge lists.

use wlspectra::graph::families::{fixture, fixture_names};
use wlspectra::graph::{parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6};

fn main() -> wlspectra::Result<()> {
    for name in fixture_names() {
        let g = fixture(name).unwrap();
        println!(
            "{name:18} n={:2} m={:2} graph6={}",
            g.order(),
            g.size(),
            serialize_graph6(&g)
        );
    }

    let g = parse_graph6("Ch")?;
    println!("\nCh as an edge list:\n{}", serialize_edge_list(&g));

    let text = "# a claw plus an isolated vertex 4\n0 1\n1 2\n1 3\n4\n";
    let star = parse_edge_list(text)?;
    println!(
        "parsed: n={} degrees={:?} connected={}",
        star.order(),
        star.degrees(),
        star.is_connected()
    );
    Ok(())
}
