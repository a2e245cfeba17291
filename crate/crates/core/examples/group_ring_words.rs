//! Normal forms in a right-angled Artin group and arithmetic in Z[π].

use raag::graph::parse_spec;
use raag::group_ring::normalize;
use raag::GroupRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // v0 and v1 commute, v2 commutes with neither
    let g = parse_spec("disjoint:complete:2+complete:1")?;
    let w = normalize(&[(1, 1), (2, 1), (0, 1), (1, -1), (0, 2), (2, -1)], &g)?;
    println!("v1 v2 v0 v1⁻¹ v0² v2⁻¹ = {}", w.render(&g));
    let w = normalize(&[(1, 1), (0, 1), (1, -1)], &g)?;
    println!("v1 v0 v1⁻¹ = {}", w.render(&g));

    let ring = GroupRing::new(g);
    let x = ring.parse("1 + 2·v0 - v2")?;
    let y = ring.parse("v1^-1 - v2^2")?;
    println!("x = {x}\ny = {y}");
    println!("x·y = {}", &x * &y);
    println!("x̄ = {}", x.involute());
    println!("ε(x) = {}, ε₁(x) = {}", x.augmentation(), x.epsilon1());
    println!("x + x̄ self-conjugate: {}", (&x + &x.involute()).is_self_conjugate());
    Ok(())
}
