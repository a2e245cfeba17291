//! The Salvetti cellular chain complex as a free Z[π]-resolution.

use raag::graph::parse_spec;
use raag::model::{salvetti_resolution, tensor_down, verify_resolution};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "complete:3".to_string());
    let g = parse_spec(&spec)?;
    let c = salvetti_resolution(&g)?;
    println!("{spec}: ranks {:?}, d² = 0 and ε∘d₁ = 0: {}", c.ranks(), verify_resolution(&c));
    print!("{}", c.dump());
    let down = tensor_down(&c);
    let betti: Vec<String> = (0..=c.top_degree() as isize).map(|d| down.homology(d).to_string()).collect();
    println!("H_*(π; Z) = {}", betti.join(", "));
    Ok(())
}
