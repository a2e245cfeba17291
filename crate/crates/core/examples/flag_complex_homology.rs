//! Clique counts and reduced homology of a few flag complexes.
//!
//! cargo run --example flag_complex_homology -- "cycle:5"

use raag::flag::{clique_counts, flag_complex};
use raag::graph::parse_spec;
use raag::reduced_homology;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs: Vec<String> = match std::env::args().nth(1) {
        Some(s) => vec![s],
        None => ["cycle:4", "complete:3", "join:disjoint-edges:2,disjoint-edges:2", "disjoint:path:3+cycle:5"]
            .map(String::from)
            .to_vec(),
    };
    for spec in specs {
        let g = parse_spec(&spec)?;
        let fc = flag_complex(&g);
        println!("{spec}: b = {:?}, dim Γ̂ = {}", clique_counts(&g).as_slice(), fc.dim());
        for d in -1..=fc.dim() {
            let h = reduced_homology(&fc, d);
            if !h.is_zero() {
                println!("  H̃_{d} = {h}");
            }
        }
    }
    Ok(())
}
