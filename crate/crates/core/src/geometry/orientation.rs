use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_four, Result};
use crate::pcm::{CanonicalCycle, Pcm};
use crate::rational::cmp_one;

/// The direction in which a 4-cycle can appear in a BCC digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Product along the listing is below one; the cycle runs as listed.
    Forward,
    /// Product above one; the cycle runs against the listing.
    Backward,
    /// Product exactly one; the cycle is consistent.
    ConsistentBoth,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
            Direction::ConsistentBoth => "consistent_both",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleOrientation {
    pub cycle: CanonicalCycle,
    pub direction: Direction,
}

impl CycleOrientation {
    /// The vertex listing in the direction the cycle can run. Backward cycles
    /// are stored reversed, e.g. `(1,2,3,4)` becomes `(1,4,3,2)`.
    pub fn oriented_listing(&self) -> [usize; 4] {
        let v = self.cycle.vertices();
        match self.direction {
            Direction::Backward => [v[0], v[3], v[2], v[1]],
            Direction::Forward | Direction::ConsistentBoth => v,
        }
    }

    /// The four arcs `i → j` of [`Self::oriented_listing`].
    pub fn oriented_arcs(&self) -> [(usize, usize); 4] {
        let v = self.oriented_listing();
        std::array::from_fn(|k| (v[k], v[(k + 1) % 4]))
    }
}

impl fmt::Display for CycleOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.cycle, self.direction)
    }
}

pub fn cycle_orientation(pcm: &Pcm, cycle: CanonicalCycle) -> Result<CycleOrientation> {
    ensure_four(pcm.n())?;
    let product = pcm.cycle_product(&cycle.vertices())?;
    let direction = match cmp_one(&product) {
        Ordering::Less => Direction::Forward,
        Ordering::Greater => Direction::Backward,
        Ordering::Equal => Direction::ConsistentBoth,
    };
    Ok(CycleOrientation { cycle, direction })
}

/// Orientations of the three canonical cycles, in canonical order.
pub fn orientations(pcm: &Pcm) -> Result<[CycleOrientation; 3]> {
    ensure_four(pcm.n())?;
    let [a, b, c] = CanonicalCycle::ALL;
    Ok([cycle_orientation(pcm, a)?, cycle_orientation(pcm, b)?, cycle_orientation(pcm, c)?])
}
