//! Even hermitian forms over Z[π]: strongly-even witnesses, the metabolic
//! double, the stabilization isometry and a transvection move.

use raag::forms::{
    hyperbolic, isometry_check, stabilization_isometry, strongly_even_witness, transvection_composite, w_invariant,
    TransvectionPair,
};
use raag::graph::parse_spec;
use raag::{GroupRing, HermitianForm, LambdaMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = GroupRing::new(parse_spec("path:2")?);
    let theta = HermitianForm::parse(&ring, "v0 + v0^-1; 1 - v1\n1 - v1^-1; 2")?;
    println!("θ =\n{}", theta.matrix());
    println!("w(θ) = {:?}", w_invariant(&theta));
    println!("λ =\n{}", strongly_even_witness(&theta)?.matrix());

    let bundle = stabilization_isometry(&theta)?;
    println!("ψ =\n{}", bundle.psi.matrix());
    println!("k =\n{}", bundle.k);
    println!("k*·H·k = ψ: {}", isometry_check(&bundle.psi, &hyperbolic(&ring, theta.rank()), &bundle.k));

    // on H(Λ) move the isotropic e to a fresh hyperbolic e
    let s = hyperbolic(&ring, 1);
    let w = LambdaMatrix::parse(&ring, "1\n0")?;
    let v = LambdaMatrix::parse(&ring, "0\n1")?;
    let st = transvection_composite(&s, &[TransvectionPair { w: w.clone(), v }])?;
    let image = st.theta.mul(&st.embed(&w))?;
    println!("θ(w) = e: {}", image == st.basis_vector(st.fresh_e[0]));
    println!("θ isometry: {}", isometry_check(&st.form, &st.form, &st.theta));
    Ok(())
}
