//! Hermitian and sesquilinear forms on free based Λ-modules.
//!
//! A form is stored as its Gram matrix S, so s(x, y) = x* S y for column
//! vectors x, y. It is conjugate-linear in the first slot and linear in the
//! second, and a matrix U is an isometry from (S₁) to (S₂) when U* S₂ U = S₁.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::group_ring::{GroupRing, GroupRingElement};
use crate::lambda_matrix::{LambdaMatrix, MatrixError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormsError {
    #[error("form matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("diagonal entry {0} has odd ε₁, so the form is not even")]
    Odd(usize),
    #[error("transvection precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesquilinearForm {
    matrix: LambdaMatrix,
}

impl SesquilinearForm {
    pub fn new(matrix: LambdaMatrix) -> Result<Self, FormsError> {
        if !matrix.is_square() {
            return Err(FormsError::NotSquare(matrix.rows(), matrix.cols()));
        }
        Ok(SesquilinearForm { matrix })
    }

    pub fn matrix(&self) -> &LambdaMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// λ + Tλ, whose matrix is L + L*.
    pub fn symmetrize(&self) -> HermitianForm {
        let m = self.matrix.add(&self.matrix.conjugate_transpose()).expect("same shape");
        HermitianForm { matrix: m }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianForm {
    matrix: LambdaMatrix,
}

pub fn is_hermitian(m: &LambdaMatrix) -> bool {
    m.is_square() && m.conjugate_transpose() == *m
}

impl HermitianForm {
    pub fn new(matrix: LambdaMatrix) -> Result<Self, FormsError> {
        if !matrix.is_square() {
            return Err(FormsError::NotSquare(matrix.rows(), matrix.cols()));
        }
        if !is_hermitian(&matrix) {
            return Err(FormsError::NotHermitian);
        }
        Ok(HermitianForm { matrix })
    }

    pub fn parse(ring: &GroupRing, text: &str) -> Result<Self, FormsError> {
        Self::new(LambdaMatrix::parse(ring, text)?)
    }

    pub fn matrix(&self) -> &LambdaMatrix {
        &self.matrix
    }

    pub fn ring(&self) -> &GroupRing {
        self.matrix.ring()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    /// s(x, y) = x* S y.
    pub fn pairing(&self, x: &LambdaMatrix, y: &LambdaMatrix) -> Result<GroupRingElement, FormsError> {
        let p = x.conjugate_transpose().mul(&self.matrix)?.mul(y)?;
        if (p.rows(), p.cols()) != (1, 1) {
            return Err(MatrixError::Shape(p.rows(), p.cols(), 1, 1).into());
        }
        Ok(p.get(0, 0).clone())
    }

    pub fn is_even(&self) -> bool {
        w_invariant(self).iter().all(|&w| w == 0)
    }

    /// Orthogonal sum with the hyperbolic form H(Λ^r).
    pub fn stabilize(&self, r: usize) -> HermitianForm {
        let m = LambdaMatrix::direct_sum(&self.matrix, hyperbolic(self.ring(), r).matrix()).expect("same ring");
        HermitianForm { matrix: m }
    }
}

/// w_i = ε₁(H_ii) mod 2; the form is even iff every component vanishes.
pub fn w_invariant(h: &HermitianForm) -> Vec<u8> {
    let two = BigInt::from(2);
    (0..h.rank()).map(|i| if h.matrix.get(i, i).epsilon1().is_multiple_of(&two) { 0 } else { 1 }).collect()
}

/// Split a self-conjugate c with even ε₁ as a + ā: a keeps the coefficients on
/// words w with w < w⁻¹ in the word order, plus ε₁(c)/2 on the identity.
fn half_of_self_conjugate(c: &GroupRingElement) -> GroupRingElement {
    let ring = c.ring();
    let g = ring.graph();
    let mut a = ring.zero();
    for (w, coeff) in c.terms() {
        if w.is_identity() {
            a = &a + &ring.integer(coeff / BigInt::from(2));
        } else if *w < w.inverse(g) {
            a = &a + &ring.monomial(coeff.clone(), w.clone());
        }
    }
    a
}

/// A sesquilinear λ with λ + Tλ = H, built from the strict upper triangle of
/// H and a split of each diagonal entry. Exists iff H is even.
pub fn strongly_even_witness(h: &HermitianForm) -> Result<SesquilinearForm, FormsError> {
    if let Some(i) = w_invariant(h).iter().position(|&w| w != 0) {
        return Err(FormsError::Odd(i));
    }
    let n = h.rank();
    let mut l = LambdaMatrix::zeros(h.ring(), n, n);
    for i in 0..n {
        l.set(i, i, half_of_self_conjugate(h.matrix.get(i, i)));
        for j in i + 1..n {
            l.set(i, j, h.matrix.get(i, j).clone());
        }
    }
    let witness = SesquilinearForm { matrix: l };
    debug_assert_eq!(witness.symmetrize(), *h);
    Ok(witness)
}

/// H(Λ^r) in the basis e₁…e_r, f₁…f_r.
pub fn hyperbolic(ring: &GroupRing, r: usize) -> HermitianForm {
    let (z, i) = (LambdaMatrix::zeros(ring, r, r), LambdaMatrix::identity(ring, r));
    HermitianForm { matrix: LambdaMatrix::block(&z, &i, &i, &z).expect("square blocks") }
}

/// [[δ, I], [I, 0]]; with `even` set, δ must be even.
pub fn metabolic_double(delta: &HermitianForm, even: bool) -> Result<HermitianForm, FormsError> {
    if even {
        if let Some(i) = w_invariant(delta).iter().position(|&w| w != 0) {
            return Err(FormsError::Odd(i));
        }
    }
    let ring = delta.ring();
    let n = delta.rank();
    let (z, i) = (LambdaMatrix::zeros(ring, n, n), LambdaMatrix::identity(ring, n));
    Ok(HermitianForm { matrix: LambdaMatrix::block(&delta.matrix, &i, &i, &z)? })
}

/// U* H2 U == H1. Incompatible shapes or rings give `false`.
pub fn isometry_check(h1: &HermitianForm, h2: &HermitianForm, u: &LambdaMatrix) -> bool {
    u.conjugate_transpose().mul(&h2.matrix).and_then(|m| m.mul(u)).is_ok_and(|m| m == h1.matrix)
}

/// σ_{u,a,v}(x) = x + u·s(v,x) − v·s(u,x) − u·a·s(u,x), an isometry when
/// s(u,u) = 0, s(u,v) = 0 and s(v,v) = a + ā.
pub fn unitary_transvection(
    s: &HermitianForm,
    u: &LambdaMatrix,
    a: &GroupRingElement,
    v: &LambdaMatrix,
) -> Result<LambdaMatrix, FormsError> {
    let ring = s.ring();
    if !s.pairing(u, u)?.is_zero() {
        return Err(FormsError::Precondition("s(u,u) ≠ 0".to_string()));
    }
    if !s.pairing(u, v)?.is_zero() {
        return Err(FormsError::Precondition("s(u,v) ≠ 0".to_string()));
    }
    if s.pairing(v, v)? != a + &a.involute() {
        return Err(FormsError::Precondition("s(v,v) ≠ a + ā".to_string()));
    }
    let us = u.conjugate_transpose().mul(s.matrix())?;
    let vs = v.conjugate_transpose().mul(s.matrix())?;
    let a = LambdaMatrix::from_rows(ring, vec![vec![a.clone()]])?;
    let n = s.rank();
    let m = LambdaMatrix::identity(ring, n).add(&u.mul(&vs)?)?.sub(&v.mul(&us)?)?.sub(&u.mul(&a)?.mul(&us)?)?;
    Ok(m)
}

/// Data for one move θ = σ_{f,0,w} ∘ σ_{e,0,v}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransvectionPair {
    /// Isotropic: s(w, w) = 0.
    pub w: LambdaMatrix,
    /// s(w, v) = 1 and s(v, v) = 0.
    pub v: LambdaMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizedTransvection {
    /// s ⊕ H(Λ^k), with the fresh e's and f's appended in that order.
    pub form: HermitianForm,
    pub theta: LambdaMatrix,
    /// Indices of e₁…e_k and f₁…f_k in the stabilized basis.
    pub fresh_e: Vec<usize>,
    pub fresh_f: Vec<usize>,
}

impl StabilizedTransvection {
    /// Embed a vector of the original module into the stabilized one.
    pub fn embed(&self, x: &LambdaMatrix) -> LambdaMatrix {
        pad(x, self.form.rank())
    }

    pub fn basis_vector(&self, i: usize) -> LambdaMatrix {
        unit(self.form.ring(), self.form.rank(), i)
    }
}

fn unit(ring: &GroupRing, n: usize, i: usize) -> LambdaMatrix {
    let mut x = LambdaMatrix::zeros(ring, n, 1);
    x.set(i, 0, ring.one());
    x
}

fn pad(x: &LambdaMatrix, n: usize) -> LambdaMatrix {
    let mut out = LambdaMatrix::zeros(x.ring(), n, 1);
    for i in 0..x.rows() {
        out.set(i, 0, x.get(i, 0).clone());
    }
    out
}

/// θ = θ_k ∘ … ∘ θ₁ with θ_i = σ_{f_i,0,w_i} ∘ σ_{e_i,0,v_i} on s ⊕ H(Λ^k).
/// Requires s(w_i, w_j) = 0, s(w_i, v_j) = δ_ij and s(v_i, v_i) = 0; then
/// θ(w_i) = e_i and θ is an isometry.
pub fn transvection_composite(
    s: &HermitianForm,
    pairs: &[TransvectionPair],
) -> Result<StabilizedTransvection, FormsError> {
    let n = s.rank();
    let k = pairs.len();
    let ring = s.ring();
    let one = ring.one();
    for (i, p) in pairs.iter().enumerate() {
        for (x, name) in [(&p.w, "w"), (&p.v, "v")] {
            if (x.rows(), x.cols()) != (n, 1) {
                return Err(FormsError::Precondition(format!("{name}{} is not a vector of length {n}", i + 1)));
            }
        }
        if !s.pairing(&p.v, &p.v)?.is_zero() {
            return Err(FormsError::Precondition(format!("s(v{0},v{0}) ≠ 0", i + 1)));
        }
        for (j, q) in pairs.iter().enumerate() {
            if !s.pairing(&p.w, &q.w)?.is_zero() {
                return Err(FormsError::Precondition(format!("s(w{},w{}) ≠ 0", i + 1, j + 1)));
            }
            let expected = if i == j { one.clone() } else { ring.zero() };
            if s.pairing(&p.w, &q.v)? != expected {
                return Err(FormsError::Precondition(format!("s(w{},v{}) ≠ {}", i + 1, j + 1, expected)));
            }
        }
    }
    let form = s.stabilize(k);
    let size = n + 2 * k;
    let zero = ring.zero();
    let mut theta = LambdaMatrix::identity(ring, size);
    for (i, p) in pairs.iter().enumerate() {
        let (e, f) = (unit(ring, size, n + i), unit(ring, size, n + k + i));
        let (w, v) = (pad(&p.w, size), pad(&p.v, size));
        let first = unitary_transvection(&form, &e, &zero, &v)?;
        let second = unitary_transvection(&form, &f, &zero, &w)?;
        theta = second.mul(&first)?.mul(&theta)?;
    }
    Ok(StabilizedTransvection { form, theta, fresh_e: (n..n + k).collect(), fresh_f: (n + k..n + 2 * k).collect() })
}

/// The stabilization data for an even θ on F = Λ^r: ψ = [[θ, I], [I, 0]] on
/// F ⊕ F* and k: (F ⊕ F*, ψ) → H(Λ^r) with k(a_i) = e_i + Σ_j f_j λ_ji,
/// k(b_i) = f_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormsBundle {
    pub theta: HermitianForm,
    pub lambda: SesquilinearForm,
    pub psi: HermitianForm,
    pub k: LambdaMatrix,
}

pub fn stabilization_isometry(theta: &HermitianForm) -> Result<FormsBundle, FormsError> {
    let lambda = strongly_even_witness(theta)?;
    let psi = metabolic_double(theta, true)?;
    let r = theta.rank();
    let ring = theta.ring();
    let (z, i) = (LambdaMatrix::zeros(ring, r, r), LambdaMatrix::identity(ring, r));
    let k = LambdaMatrix::block(&i, &z, lambda.matrix(), &i)?;
    Ok(FormsBundle { theta: theta.clone(), lambda, psi, k })
}

/// JSON summary of a form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormReport {
    pub rank: usize,
    pub hermitian: bool,
    pub w: Vec<u8>,
    pub strongly_even: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
}

fn rows_as_text(m: &LambdaMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

/// Summarize an arbitrary square matrix; non-hermitian input gets an empty `w`.
pub fn form_report(m: &LambdaMatrix) -> Result<FormReport, FormsError> {
    if !m.is_square() {
        return Err(FormsError::NotSquare(m.rows(), m.cols()));
    }
    let Ok(h) = HermitianForm::new(m.clone()) else {
        return Ok(FormReport { rank: m.rows(), hermitian: false, w: Vec::new(), strongly_even: false, witness: None });
    };
    let witness = strongly_even_witness(&h).ok();
    Ok(FormReport {
        rank: h.rank(),
        hermitian: true,
        w: w_invariant(&h),
        strongly_even: witness.is_some(),
        witness: witness.map(|l| rows_as_text(l.matrix())),
    })
}

/// ε₁ of every diagonal entry, useful for spotting odd entries.
pub fn diagonal_epsilon1(h: &HermitianForm) -> Vec<BigInt> {
    (0..h.rank()).map(|i| h.matrix.get(i, i).epsilon1()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimplicialGraph;

    fn ring() -> GroupRing {
        GroupRing::new(SimplicialGraph::from_edges(2, &[]))
    }

    fn form(text: &str) -> HermitianForm {
        HermitianForm::parse(&ring(), text).unwrap()
    }

    fn col(text: &str) -> LambdaMatrix {
        LambdaMatrix::parse(&ring(), &text.replace(',', "\n")).unwrap()
    }

    #[test]
    fn hermitian_predicate() {
        let r = ring();
        assert!(is_hermitian(&LambdaMatrix::parse(&r, "0; v0\nv0^-1; 0").unwrap()));
        assert!(!is_hermitian(&LambdaMatrix::parse(&r, "0; v0\nv0; 0").unwrap()));
        assert!(is_hermitian(hyperbolic(&r, 1).matrix()));
        assert_eq!(HermitianForm::parse(&r, "0; v0\nv0; 0"), Err(FormsError::NotHermitian));
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_invariant(&form("v0 + v0^-1")), [0]);
        assert_eq!(w_invariant(&form("1")), [1]);
        for r in 0..=4 {
            assert!(hyperbolic(&ring(), r).is_even());
        }
        assert_eq!(hyperbolic(&ring(), 0).rank(), 0);
    }

    #[test]
    fn witness_examples() {
        let l = strongly_even_witness(&form("v0 + v0^-1")).unwrap();
        assert_eq!(l.matrix().to_string(), "v0\n");
        assert_eq!(strongly_even_witness(&form("2")).unwrap().matrix().to_string(), "1\n");
        assert_eq!(strongly_even_witness(&form("1")), Err(FormsError::Odd(0)));
        let h = form("v0·v1 + v1^-1·v0^-1 - 4; 3 - v1\n3 - v1^-1; 0");
        assert_eq!(strongly_even_witness(&h).unwrap().symmetrize(), h);
    }

    #[test]
    fn metabolic_examples() {
        let r = ring();
        let zero = HermitianForm::new(LambdaMatrix::zeros(&r, 1, 1)).unwrap();
        assert_eq!(metabolic_double(&zero, true).unwrap(), hyperbolic(&r, 1));
        let m = metabolic_double(&form("v0 + v0^-1"), true).unwrap();
        assert_eq!(m.matrix().to_string(), "v0 + v0^-1; 1\n1; 0\n");
        assert_eq!(strongly_even_witness(&m).unwrap().symmetrize(), m);
        assert_eq!(metabolic_double(&form("1"), true), Err(FormsError::Odd(0)));
        assert!(metabolic_double(&form("1"), false).is_ok());
    }

    #[test]
    fn isometry_examples() {
        let r = ring();
        let h = hyperbolic(&r, 1);
        assert!(isometry_check(&h, &h, &LambdaMatrix::identity(&r, 2)));
        let swap = LambdaMatrix::parse(&r, "0; 1\n1; 0").unwrap();
        assert!(isometry_check(&h, &h, &swap));
        // e ↦ e·g, f ↦ f·h pairs to ḡh, so only h = g is compensated
        let scale_both = LambdaMatrix::parse(&r, "v0; 0\n0; v0").unwrap();
        assert!(isometry_check(&h, &h, &scale_both));
        let scale_e = LambdaMatrix::parse(&r, "v0; 0\n0; 1").unwrap();
        assert!(!isometry_check(&h, &h, &scale_e));
        let inverse = LambdaMatrix::parse(&r, "v0; 0\n0; v0^-1").unwrap();
        assert!(!isometry_check(&h, &h, &inverse));
    }

    #[test]
    fn composite_on_hyperbolic_plane() {
        let s = hyperbolic(&ring(), 1);
        let pair = TransvectionPair { w: col("1,0"), v: col("0,1") };
        let t = transvection_composite(&s, std::slice::from_ref(&pair)).unwrap();
        assert_eq!(t.theta.mul(&t.embed(&pair.w)).unwrap(), t.basis_vector(t.fresh_e[0]));
        assert!(isometry_check(&t.form, &t.form, &t.theta));
        assert_eq!(t.form.rank(), 4);
    }

    #[test]
    fn composite_fixes_other_pairs() {
        let s = hyperbolic(&ring(), 2);
        let pairs = [
            TransvectionPair { w: col("1,0,0,0"), v: col("0,0,1,0") },
            TransvectionPair { w: col("0,1,0,0"), v: col("0,0,0,1") },
        ];
        let t = transvection_composite(&s, &pairs).unwrap();
        assert!(isometry_check(&t.form, &t.form, &t.theta));
        for (i, p) in pairs.iter().enumerate() {
            assert_eq!(t.theta.mul(&t.embed(&p.w)).unwrap(), t.basis_vector(t.fresh_e[i]));
        }
        let one_pair = transvection_composite(&s, &pairs[..1]).unwrap();
        let w2 = one_pair.embed(&pairs[1].w);
        assert_eq!(one_pair.theta.mul(&w2).unwrap(), w2);
    }

    #[test]
    fn composite_rejects_bad_pairs() {
        let s = hyperbolic(&ring(), 1);
        let bad = TransvectionPair { w: col("1,1"), v: col("0,1") };
        assert!(matches!(transvection_composite(&s, &[bad]), Err(FormsError::Precondition(_))));
        let unpaired = TransvectionPair { w: col("1,0"), v: col("0,2") };
        assert!(matches!(transvection_composite(&s, &[unpaired]), Err(FormsError::Precondition(_))));
    }

    #[test]
    fn stabilization_examples() {
        let b = stabilization_isometry(&form("2")).unwrap();
        assert_eq!(b.lambda.matrix().to_string(), "1\n");
        assert_eq!(b.psi.matrix().to_string(), "2; 1\n1; 0\n");
        assert_eq!(b.k.to_string(), "1; 0\n1; 1\n");
        assert!(isometry_check(&b.psi, &hyperbolic(&ring(), 1), &b.k));

        let g = stabilization_isometry(&form("v0 + v0^-1")).unwrap();
        assert_eq!(g.k.column_of(0).to_string(), "1\nv0\n");
        assert!(isometry_check(&g.psi, &hyperbolic(&ring(), 1), &g.k));

        let z = HermitianForm::new(LambdaMatrix::zeros(&ring(), 2, 2)).unwrap();
        let zb = stabilization_isometry(&z).unwrap();
        assert_eq!(zb.k, LambdaMatrix::identity(&ring(), 4));
        assert_eq!(stabilization_isometry(&form("1")), Err(FormsError::Odd(0)));
    }

    #[test]
    fn report_json() {
        let r = form_report(form("v0 + v0^-1").matrix()).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"rank":1,"hermitian":true,"w":[0],"strongly_even":true,"witness":[["v0"]]}"#
        );
        let odd = form_report(form("1").matrix()).unwrap();
        assert!(!odd.strongly_even && odd.witness.is_none());
        let not = form_report(&LambdaMatrix::parse(&ring(), "0; v0\nv0; 0").unwrap()).unwrap();
        assert!(!not.hermitian);
    }
}
