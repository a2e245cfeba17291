//! The Salvetti free resolution of Z over Λ and the rank data of the minimal
//! 4-manifold model M₀, the double of a thickening of the 2-skeleton K.
//!
//! C_i is free on the i-cliques in canonical order, with
//! d[σ] = Σ_j (−1)^j (v_j − 1)[σ ∖ v_j] for σ = {v₀ < … < v_k}. For an edge this
//! is the Fox-derivative column (1 − v, u − 1) of the relator uvu⁻¹v⁻¹.
//! Everything here assumes no 4-clique, i.e. cd π ≤ 3.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{graded_group_cohomology, GradedCohomologyReport};
use crate::flag::{all_cliques, clique_counts, CliqueCounts, Simplex};
use crate::graph::SimplicialGraph;
use crate::group_ring::GroupRing;
use crate::homology::{IntegerChainComplex, IntegerMatrix};
use crate::lambda_matrix::LambdaMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("the graph has a 4-clique (cd π = {0}); only cd π ≤ 3 is supported")]
    FourClique(usize),
}

fn require_cd3(counts: &CliqueCounts) -> Result<(), ModelError> {
    match counts.clique_number() {
        n if n > 3 => Err(ModelError::FourClique(n)),
        _ => Ok(()),
    }
}

/// A free Λ-chain complex C_top → … → C_0 with an augmentation ε: C_0 → Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaChainComplex {
    ring: GroupRing,
    bases: Vec<Vec<Simplex>>,
    /// `differentials[i-1]` is d_i: C_i → C_{i−1}.
    differentials: Vec<LambdaMatrix>,
    /// ε as an integer row: ε(Σ λ_k x_k) = Σ ε_k · aug(λ_k).
    augmentation: IntegerMatrix,
}

impl LambdaChainComplex {
    pub fn ring(&self) -> &GroupRing {
        &self.ring
    }

    pub fn top_degree(&self) -> usize {
        self.differentials.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, i: usize) -> &[Simplex] {
        self.bases.get(i).map_or(&[], Vec::as_slice)
    }

    /// d_i for 1 ≤ i ≤ top degree.
    pub fn differential(&self, i: usize) -> Option<&LambdaMatrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn differential_mut(&mut self, i: usize) -> Option<&mut LambdaMatrix> {
        i.checked_sub(1).and_then(move |k| self.differentials.get_mut(k))
    }

    pub fn augmentation(&self) -> &IntegerMatrix {
        &self.augmentation
    }

    /// Every d_i with its basis labels, entries in the group-ring text format.
    pub fn dump(&self) -> String {
        let g = self.ring.graph();
        let label = |s: &Simplex| {
            if s.is_empty() {
                "∅".to_string()
            } else {
                format!("{{{}}}", s.names(g).join(","))
            }
        };
        let mut out = String::new();
        for i in 1..=self.top_degree() {
            let d = self.differential(i).expect("in range");
            let _ = writeln!(out, "# d{i}: C{i} -> C{} ({}x{})", i - 1, d.rows(), d.cols());
            let _ = writeln!(out, "# rows: {}", self.basis(i - 1).iter().map(label).collect::<Vec<_>>().join(" "));
            let _ = writeln!(out, "# cols: {}", self.basis(i).iter().map(label).collect::<Vec<_>>().join(" "));
            out.push_str(&d.to_string());
        }
        out
    }
}

/// The Salvetti resolution of Z over Λ = Z[π(Γ)].
pub fn salvetti_resolution(g: &SimplicialGraph) -> Result<LambdaChainComplex, ModelError> {
    require_cd3(&clique_counts(g))?;
    let ring = GroupRing::new(g.clone());
    let bases = all_cliques(g);
    let mut differentials = Vec::new();
    for i in 1..bases.len() {
        let (rows, cols) = (&bases[i - 1], &bases[i]);
        let mut d = LambdaMatrix::zeros(&ring, rows.len(), cols.len());
        for (c, sigma) in cols.iter().enumerate() {
            for (j, &v) in sigma.vertices().iter().enumerate() {
                let r = rows.binary_search(&sigma.facet(j)).expect("faces of cliques are cliques");
                let coeff = ring.generator_minus_one(v);
                d.set(r, c, if j % 2 == 0 { coeff } else { -coeff });
            }
        }
        differentials.push(d);
    }
    let augmentation = IntegerMatrix::from_rows(&[vec![1i64]]);
    Ok(LambdaChainComplex { ring, bases, differentials, augmentation })
}

/// d_i · d_{i+1} = 0 for every i, and ε ∘ d₁ = 0.
pub fn verify_resolution(c: &LambdaChainComplex) -> bool {
    let squares_vanish = c.differentials.windows(2).all(|w| w[0].mul(&w[1]).is_ok_and(|m| m.is_zero()));
    let augmented = match c.differentials.first() {
        Some(d1) => c.augmentation.cols() == d1.rows() && c.augmentation.mul(&d1.augment()).is_zero(),
        None => true,
    };
    squares_vanish && augmented
}

/// C ⊗_Λ Z: the augmentation applied entry-wise.
pub fn tensor_down(c: &LambdaChainComplex) -> IntegerChainComplex {
    let upper = c.differentials.iter().map(LambdaMatrix::augment).collect();
    IntegerChainComplex::new(0, c.bases.clone(), upper)
}

/// H₂(K;Λ) ≅ Λ^{b₃}: the number of triangles.
pub fn pi2_skeleton_rank(g: &SimplicialGraph) -> Result<usize, ModelError> {
    let counts = clique_counts(g);
    require_cd3(&counts)?;
    Ok(counts.b(3))
}

fn free_module(rank: usize) -> String {
    match rank {
        0 => "0".to_string(),
        1 => "Λ".to_string(),
        r => format!("Λ^{r}"),
    }
}

/// 0 → H²(π;Λ) → H²(K;Λ) → π₂(K)* → H³(π;Λ) → 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourTermReport {
    pub h2_group: GradedCohomologyReport,
    /// Symbolic; identified only when Γ̂ is a single 2-simplex.
    pub h2_skeleton: String,
    pub pi2_skeleton_dual_rank: usize,
    pub h3_group: GradedCohomologyReport,
    pub sequence: String,
    /// π₂(M₀) = H²(K;Λ) ⊕ H₂(K;Λ).
    pub pi2_m0: String,
}

pub fn four_term_report(g: &SimplicialGraph) -> Result<FourTermReport, ModelError> {
    let counts = clique_counts(g);
    require_cd3(&counts)?;
    let b3 = counts.b(3);
    let h2_group = graded_group_cohomology(g, 2);
    let h3_group = graded_group_cohomology(g, 3);
    let triangle = g.vertex_count() == 3 && g.is_complete();
    let h2_skeleton = if triangle && h2_group.is_zero() { "I(π)" } else { "H²(K;Λ)" }.to_string();
    let sequence = format!(
        "0 → {} → {} → {} → {} → 0",
        h2_group.describe(),
        if triangle { "H²(K;Λ)" } else { &h2_skeleton },
        free_module(b3),
        h3_group.describe()
    );
    let pi2_m0 = match b3 {
        0 => h2_skeleton.clone(),
        _ => format!("{h2_skeleton} ⊕ {}", free_module(b3)),
    };
    Ok(FourTermReport { h2_group, h2_skeleton, pi2_skeleton_dual_rank: b3, h3_group, sequence, pi2_m0 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    /// b₁, b₂, b₃.
    pub clique_counts: [usize; 3],
    /// χ(M₀) = 2χ(K) = 2 − 2b₁ + 2b₂.
    pub chi_m0: i64,
    /// rk_Z(π₂(M₀) ⊗_Λ Z) = b₂ + b₃.
    pub pi2_tensor_rank: usize,
    /// π₂(M)* ≅ Λ^{2b₃}.
    pub pi2_dual_rank: usize,
    /// Stabilization by r ≥ b₃ copies of S² × S² suffices.
    pub stabilization_bound: usize,
    pub stabilization_bound_label: &'static str,
    pub pi2_structure: String,
    pub four_term: FourTermReport,
}

pub fn minimal_model_invariants(g: &SimplicialGraph) -> Result<ModelReport, ModelError> {
    let counts = clique_counts(g);
    require_cd3(&counts)?;
    let (b1, b2, b3) = (counts.b(1), counts.b(2), counts.b(3));
    let four_term = four_term_report(g)?;
    Ok(ModelReport {
        clique_counts: [b1, b2, b3],
        chi_m0: 2 - 2 * b1 as i64 + 2 * b2 as i64,
        pi2_tensor_rank: b2 + b3,
        pi2_dual_rank: 2 * b3,
        stabilization_bound: b3,
        stabilization_bound_label: "triangle count; an upper bound for the minimal number of Λ-generators of H³(π;Λ)",
        pi2_structure: four_term.pi2_m0.clone(),
        four_term,
    })
}
