//! Monte Carlo comparison of the two efficiency deciders: strong connectivity
//! of the BCC digraph and membership in the union of the three tetrahedra.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bcc::is_efficient;
use crate::error::Result;
use crate::generate::{generate_pcm, near_tetrahedron_weights, rng_for, uniform_simplex_weights};
use crate::geometry::{is_efficient_geometric, tetrahedra, PerturbTag};
use crate::io::MatrixDocument;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub trial: usize,
    pub matrix: MatrixDocument,
    pub w: Vec<String>,
    pub scc_verdict: bool,
    pub geometric_verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub class: PerturbTag,
    pub seed: u64,
    pub trials: usize,
    pub agreements: usize,
    /// Trials both deciders called efficient.
    pub efficient_hits: usize,
    pub disagreements: Vec<Disagreement>,
    /// Wall-clock time; the only field that varies between identical runs.
    pub elapsed_seconds: f64,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Seed of trial `index` within a run seeded by `seed`.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut z = seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs `trials` rounds of: generate a `class` matrix, draw an exact weight
/// vector (uniform on the simplex or near a tetrahedron, half each), and
/// compare the two deciders.
pub fn run_sample(seed: u64, trials: usize, class: PerturbTag) -> Result<EquivalenceReport> {
    let start = Instant::now();
    let mut report = EquivalenceReport {
        class,
        seed,
        trials,
        agreements: 0,
        efficient_hits: 0,
        disagreements: Vec::new(),
        elapsed_seconds: 0.0,
    };
    for index in 0..trials {
        let trial = trial_seed(seed, index);
        let pcm = generate_pcm(trial, class)?;
        let mut rng = rng_for(trial, 0);
        let w = if rng.gen_bool(0.5) {
            uniform_simplex_weights(&mut rng, 4)
        } else {
            near_tetrahedron_weights(&mut rng, &tetrahedra(&pcm)?)
        };
        let scc_verdict = is_efficient(&pcm, &w)?;
        let geometric_verdict = is_efficient_geometric(&pcm, &w)?;
        if scc_verdict == geometric_verdict {
            report.agreements += 1;
            report.efficient_hits += usize::from(scc_verdict);
        } else {
            report.disagreements.push(Disagreement {
                trial: index,
                matrix: MatrixDocument::from_pcm(&pcm),
                w: w.to_strings(),
                scc_verdict,
                geometric_verdict,
            });
        }
    }
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}
