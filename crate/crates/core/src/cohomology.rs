//! The associated graded of H*(π;Λ) built from link cohomology.
//!
//! For a graph whose flag complex is not a single simplex, the graded group in
//! degree `k` is the sum over simplices σ (including ∅) of
//! H̃^{k − dim σ − 2}(Lk σ) ⊗ Z[π/π_σ], where π_σ ≅ Z^{dim σ + 1}. When the flag
//! complex is a single simplex on `n` vertices, π ≅ Zⁿ and Hⁿ(π;Λ) = Z is the
//! only nonzero group.
//!
//! Reports are symbolic: the induced modules Z[π/π_σ] are described by the
//! stabilizer rank and never expanded.

use serde::Serialize;
use thiserror::Error;

use crate::flag::{clique_counts, flag_complex, link, FlagComplex, Simplex};
use crate::graph::SimplicialGraph;
use crate::homology::{reduced_cohomology, FgAbelianGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("the flag complex is a single simplex on {0} vertices; there is no filtration")]
    SingleSimplex(usize),
}

/// One nonzero summand H̃^{k−dim σ−2}(Lk σ) ⊗ Z[π/π_σ].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedSummand {
    #[serde(rename = "simplex", serialize_with = "serialize_names")]
    pub simplex_names: Vec<String>,
    #[serde(skip)]
    pub simplex: Simplex,
    pub link_cohomology: FgAbelianGroup,
    /// Rank of the free abelian group π_σ = dim σ + 1.
    pub stabilizer_rank: usize,
}

fn serialize_names<S: serde::Serializer>(names: &[String], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(names)
}

impl GradedSummand {
    pub fn simplex_dim(&self) -> isize {
        self.simplex.dim()
    }

    /// `Z[π]` for σ = ∅, otherwise `Z[π/Z^r]`.
    pub fn coset_module(&self) -> String {
        match self.stabilizer_rank {
            0 => "Z[π]".to_string(),
            1 => "Z[π/Z]".to_string(),
            r => format!("Z[π/Z^{r}]"),
        }
    }

    /// `Λ^r` for a free σ = ∅ term, otherwise the link group tensored with the
    /// coset module.
    pub fn describe(&self) -> String {
        let c = &self.link_cohomology;
        if self.stabilizer_rank == 0 && c.torsion.is_empty() {
            return match c.free_rank {
                1 => "Λ".to_string(),
                r => format!("Λ^{r}"),
            };
        }
        let simplex = if self.simplex_names.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", self.simplex_names.join(","))
        };
        format!("σ={simplex}: ({}) ⊗ {}", self.link_cohomology, self.coset_module())
    }
}

/// Γ̂ is a single simplex on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingleSimplexCase {
    pub n: usize,
    /// Whether the requested degree equals `n`, where the group is Z.
    pub nonvanishing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedCohomologyReport {
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_case: Option<SingleSimplexCase>,
    pub summands: Vec<GradedSummand>,
}

impl GradedCohomologyReport {
    pub fn is_zero(&self) -> bool {
        match self.special_case {
            Some(case) => !case.nonvanishing,
            None => self.summands.is_empty(),
        }
    }

    /// The σ = ∅ summand, H̃^{k−1}(Γ̂) ⊗ Λ, if present.
    pub fn free_part(&self) -> Option<&GradedSummand> {
        self.summands.iter().find(|s| s.simplex.is_empty())
    }

    /// Free Λ-rank contributed by the σ = ∅ term.
    pub fn free_lambda_rank(&self) -> usize {
        self.free_part().map_or(0, |s| s.link_cohomology.free_rank)
    }

    /// Whether every summand is induced from a nontrivial stabilizer.
    pub fn only_induced_summands(&self) -> bool {
        self.free_part().is_none()
    }

    pub fn describe(&self) -> String {
        if let Some(case) = self.special_case {
            return if case.nonvanishing { "Z".to_string() } else { "0".to_string() };
        }
        if self.summands.is_empty() {
            return "0".to_string();
        }
        self.summands.iter().map(GradedSummand::describe).collect::<Vec<_>>().join(" ⊕ ")
    }
}

fn summand(g: &SimplicialGraph, k: &FlagComplex, sigma: &Simplex, degree: usize) -> Option<GradedSummand> {
    let shifted = degree as isize - sigma.dim() - 2;
    if shifted < -1 {
        return None;
    }
    let lk = link(k, sigma).expect("simplex taken from the complex");
    let coh = reduced_cohomology(&lk, shifted);
    (!coh.is_zero()).then(|| GradedSummand {
        simplex_names: sigma.names(g),
        simplex: sigma.clone(),
        link_cohomology: coh,
        stabilizer_rank: sigma.len(),
    })
}

/// Graded pieces of H^k(π;Λ), one summand per simplex with nonzero link
/// cohomology, in canonical simplex order.
pub fn graded_group_cohomology(g: &SimplicialGraph, k: usize) -> GradedCohomologyReport {
    let fc = flag_complex(g);
    if fc.is_single_simplex() {
        let n = g.vertex_count();
        return GradedCohomologyReport {
            degree: k,
            special_case: Some(SingleSimplexCase { n, nonvanishing: k == n }),
            summands: Vec::new(),
        };
    }
    let summands = fc.iter().filter_map(|sigma| summand(g, &fc, sigma, k)).collect();
    GradedCohomologyReport { degree: k, special_case: None, summands }
}

/// F_j / F_{j−1}: the summands with dim σ = j − 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationQuotient {
    pub index: usize,
    pub simplex_dim: isize,
    pub summands: Vec<GradedSummand>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub degree: usize,
    /// F_0, F_1/F_0, …, F_k/F_{k−1}.
    pub quotients: Vec<FiltrationQuotient>,
}

impl FiltrationReport {
    pub fn all_summands(&self) -> impl Iterator<Item = &GradedSummand> {
        self.quotients.iter().flat_map(|q| q.summands.iter())
    }
}

/// Degree-`k` filtration with the empty simplex at the bottom and the top
/// index equal to `k`.
pub fn filtration(g: &SimplicialGraph, k: usize) -> Result<FiltrationReport, CohomologyError> {
    let fc = flag_complex(g);
    if fc.is_single_simplex() {
        return Err(CohomologyError::SingleSimplex(g.vertex_count()));
    }
    let quotients = (0..=k)
        .map(|j| {
            let dim = j as isize - 1;
            let summands = fc.simplices(dim).iter().filter_map(|sigma| summand(g, &fc, sigma, k)).collect();
            FiltrationQuotient { index: j, simplex_dim: dim, summands }
        })
        .collect();
    Ok(FiltrationReport { degree: k, quotients })
}

/// H_i(π;Z) is free abelian of rank b_i, the number of i-cliques.
pub fn integral_group_homology(g: &SimplicialGraph, i: isize) -> FgAbelianGroup {
    if i < 0 {
        return FgAbelianGroup::zero();
    }
    FgAbelianGroup::free(clique_counts(g).b(i as usize))
}
