use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pcm::Pcm;

/// Perturbation class of a 4×4 matrix relative to the nearest consistent one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PerturbTag {
    Triple,
    DoubleTriad,
    DoubleOneCycle,
    DoubleTwoCycles,
    Simple,
    Consistent,
}

impl PerturbTag {
    pub const ALL: [PerturbTag; 6] = [
        PerturbTag::Triple,
        PerturbTag::DoubleTriad,
        PerturbTag::DoubleOneCycle,
        PerturbTag::DoubleTwoCycles,
        PerturbTag::Simple,
        PerturbTag::Consistent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PerturbTag::Triple => "triple",
            PerturbTag::DoubleTriad => "double_triad",
            PerturbTag::DoubleOneCycle => "double_one_cycle",
            PerturbTag::DoubleTwoCycles => "double_two_cycles",
            PerturbTag::Simple => "simple",
            PerturbTag::Consistent => "consistent",
        }
    }

    /// `(consistent triads, consistent 4-cycles)` characterizing the class.
    pub fn counts(self) -> (usize, usize) {
        match self {
            PerturbTag::Triple => (0, 0),
            PerturbTag::DoubleTriad => (1, 0),
            PerturbTag::DoubleOneCycle => (0, 1),
            PerturbTag::DoubleTwoCycles => (0, 2),
            PerturbTag::Simple => (2, 1),
            PerturbTag::Consistent => (4, 3),
        }
    }

    pub fn from_counts(triads: usize, cycles: usize) -> Result<Self> {
        PerturbTag::ALL
            .into_iter()
            .find(|tag| tag.counts() == (triads, cycles))
            .ok_or(Error::ImpossibleCombination { triads, cycles })
    }
}

impl fmt::Display for PerturbTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PerturbTag {
    type Err = String;

    /// Accepts the snake_case names; `-` may stand for `_`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        PerturbTag::ALL
            .into_iter()
            .find(|tag| tag.as_str() == key)
            .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PerturbClass {
    pub tag: PerturbTag,
    pub consistent_triad_count: usize,
    pub consistent_cycle_count: usize,
}

pub fn classify(pcm: &Pcm) -> Result<PerturbClass> {
    let triads = pcm.consistent_triads()?.len();
    let cycles = pcm.consistent_four_cycles()?.len();
    Ok(PerturbClass {
        tag: PerturbTag::from_counts(triads, cycles)?,
        consistent_triad_count: triads,
        consistent_cycle_count: cycles,
    })
}
