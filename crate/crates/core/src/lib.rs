//! Invariants of right-angled Artin groups π = π(Γ) computed from the
//! defining graph Γ.
//!
//! The crate covers clique data and flag complexes ([`graph`], [`flag`]),
//! integral (co)homology via Smith normal form ([`homology`]), arithmetic in
//! the group ring Λ = Z[π] ([`group_ring`], [`lambda_matrix`]), the graded
//! pieces of H*(π;Λ) ([`cohomology`]), sufficient criteria for tame
//! cohomology ([`tame`]), the Salvetti free resolution and the rank data of
//! the minimal 4-manifold model ([`model`]), and hermitian forms over Λ
//! ([`forms`]). The `raag` binary exposes all of it through [`cli`].

pub mod cli;
pub mod cohomology;
pub mod flag;
pub mod forms;
pub mod graph;
pub mod group_ring;
pub mod homology;
pub mod lambda_matrix;
pub mod model;
pub mod tame;

pub use cohomology::{filtration, graded_group_cohomology, GradedCohomologyReport};
pub use flag::{clique_counts, cohomological_dimension, flag_complex, link, CliqueCounts, FlagComplex, Simplex};
pub use forms::{HermitianForm, SesquilinearForm};
pub use graph::{components, ends, free_product_skeleton, parse_graph, EndsClass, SimplicialGraph};
pub use group_ring::{GroupRing, GroupRingElement, RaagWord};
pub use homology::{reduced_cohomology, reduced_homology, FgAbelianGroup};
pub use lambda_matrix::LambdaMatrix;
pub use model::{minimal_model_invariants, salvetti_resolution, LambdaChainComplex};
pub use tame::{generate_tame, tame_sufficient, BuildScript, TameVerdict};
