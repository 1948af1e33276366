//! The efficient set of a 4×4 matrix as a union of three tetrahedra.
//!
//! Each canonical 4-cycle contributes the tetrahedron spanned by the weight
//! vectors of its four path trees. A weight vector is efficient exactly when
//! it satisfies the ratio inequalities along at least one oriented cycle.

mod classify;
mod coincidence;
mod embed;
mod orientation;
mod rearrange;
mod tetra;

pub use classify::{classify, PerturbClass, PerturbTag};
pub use coincidence::{coincidence_structure, CoincidenceReport, EdgePair, FacePair, SharedVertex, EDGES, FACES};
pub use embed::{cutting_planes, embed, embed_exact, CuttingPlane, EmbeddedPoint, SIMPLEX_CORNERS};
pub use orientation::{cycle_orientation, orientations, CycleOrientation, Direction};
pub use rearrange::{
    canonical_rearrangement, triad_rearrangement, CycleRearrangement, TriadCase, TriadRearrangement, CASE_TRIADS,
};
pub use tetra::{
    barycentric, containing_regions, contains_cycle_region, is_efficient_geometric, tetrahedron_for_cycle,
    Tetrahedron, FLOAT_COEFFICIENT_SLACK,
};

use crate::error::{ensure_four, Result};
use crate::pcm::{CanonicalCycle, Pcm};

#[derive(Debug, Clone, PartialEq)]
pub struct EfficientSet {
    /// In canonical cycle order `(1,2,3,4)`, `(1,4,2,3)`, `(1,3,4,2)`.
    pub tetrahedra: [Tetrahedron; 3],
    pub classification: PerturbClass,
    pub coincidences: CoincidenceReport,
}

impl EfficientSet {
    pub fn tetrahedron(&self, cycle: CanonicalCycle) -> &Tetrahedron {
        &self.tetrahedra[cycle.index()]
    }
}

/// The three tetrahedra alone, without classification or coincidences.
pub fn tetrahedra(pcm: &Pcm) -> Result<[Tetrahedron; 3]> {
    ensure_four(pcm.n())?;
    let [a, b, c] = CanonicalCycle::ALL;
    Ok([tetrahedron_for_cycle(pcm, a)?, tetrahedron_for_cycle(pcm, b)?, tetrahedron_for_cycle(pcm, c)?])
}

pub fn efficient_set(pcm: &Pcm) -> Result<EfficientSet> {
    let tetrahedra = tetrahedra(pcm)?;
    let classification = classify(pcm)?;
    let coincidences = coincidence_structure(&tetrahedra);
    Ok(EfficientSet { tetrahedra, classification, coincidences })
}

#[cfg(test)]
mod tests;
