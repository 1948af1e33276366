//! Exact Pareto-efficiency analysis for pairwise comparison matrices.
//!
//! A weight vector `w` is efficient for a positive reciprocal matrix `A` when no
//! other positive vector approximates every ratio `a_ij` at least as well and
//! one of them strictly better. This crate decides efficiency for any `n` via
//! strong connectivity of the induced digraph, and for `n = 4` builds the whole
//! efficient set as a union of three tetrahedra spanned by path-tree weight
//! vectors.
//!
//! All matrix entries, weights and vertices are exact [`Rational`]s.

pub mod bcc;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod io;
mod linalg;
pub mod pcm;
pub mod rational;
pub mod sample;
pub mod trees;
pub mod weights;

pub use bcc::{bcc_digraph, dominates, find_dominator_sample, is_efficient, BccDigraph, DominanceVerdict};
pub use error::{Error, Result};
pub use geometry::{efficient_set, is_efficient_geometric, EfficientSet, PerturbClass, PerturbTag};
pub use pcm::{parse_pcm, CanonicalCycle, IncompletePcm, Pcm, Permutation};
pub use rational::Rational;
pub use trees::{tree_weight_vector, LabeledPath, SpanningTree};
pub use weights::WeightVector;
