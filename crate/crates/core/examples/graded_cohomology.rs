//! Graded pieces of H^k(π; Z[π]) and the filtration they come from.

use raag::cohomology::{filtration, graded_group_cohomology};
use raag::graph::parse_spec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (spec, k) in
        [("complete:3", 3), ("disjoint-edges:4", 1), ("join:disjoint-edges:2,disjoint-edges:2", 2), ("path:4", 2)]
    {
        let g = parse_spec(spec)?;
        let report = graded_group_cohomology(&g, k);
        println!("{spec}: H^{k}(π;Λ) = {}", report.describe());
        // the filtration is undefined when Γ̂ is a single simplex
        if let Ok(f) = filtration(&g, k) {
            for q in f.quotients.iter().filter(|q| !q.summands.is_empty()) {
                let parts: Vec<String> = q.summands.iter().map(|s| s.describe()).collect();
                println!("  F_{}/F_{}: {}", q.index, q.index as isize - 1, parts.join(" ⊕ "));
            }
        }
    }
    Ok(())
}
