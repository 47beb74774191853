//! Running several relations at once and emitting the JSON report.

use wlspectra::report::{load_graph, parse_tests, run_compare, CompareConfig};

fn main() -> wlspectra::Result<()> {
    let a = load_graph("star-k1-4", None)?;
    let b = load_graph("c4-plus-k1", None)?;
    let cfg = CompareConfig {
        tests: parse_tests(
            "wl1,wl11,cospectral(adjacency),cospectral(laplacian),fuerer,homTplus(5)",
        )?,
        ..CompareConfig::default()
    };
    let report = run_compare(&a, &b, &cfg);
    print!("{}", report.render_text());
    println!("exit code would be {}", report.exit_code());
    println!("\n{}", report.to_json());
    Ok(())
}
