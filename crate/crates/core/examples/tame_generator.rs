//! Grow graphs with tame group cohomology from seeded build scripts and
//! check them with the sufficient criterion.

use raag::tame::{generate_tame, random_build_script, tame_sufficient};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2024u64);
    let script = random_build_script(10, seed);
    println!("script (seed {seed}):\n{script}");
    let g = generate_tame(&script)?;
    println!("graph: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    let verdict = tame_sufficient(&g);
    println!("overall: {:?}", verdict.overall);
    for (name, c) in [("(i)", &verdict.condition_i), ("(ii)", &verdict.condition_ii), ("(iii)", &verdict.condition_iii)]
    {
        println!("  {name} {c}");
    }
    let replay = generate_tame(&script.to_string().parse()?)?;
    assert_eq!(replay, g);
    Ok(())
}
