//! Euler characteristic and π₂ bookkeeping for the minimal 4-manifold model.

use raag::graph::parse_spec;
use raag::minimal_model_invariants;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["complete:3", "path:4", "disjoint:complete:3+complete:3", "cycle:5"] {
        let r = minimal_model_invariants(&parse_spec(spec)?)?;
        println!(
            "{spec}: b = {:?}, χ(M₀) = {}, rk π₂⊗Z = {}, rk π₂* = {}, stabilize by {}",
            r.clique_counts, r.chi_m0, r.pi2_tensor_rank, r.pi2_dual_rank, r.stabilization_bound
        );
        println!("  {}", r.four_term.sequence);
        println!("  π₂(M₀) = {}", r.pi2_structure);
    }
    // four cliques are out of range
    assert!(minimal_model_invariants(&parse_spec("complete:4")?).is_err());
    Ok(())
}
