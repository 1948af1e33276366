//! Reindexings that bring a 4×4 matrix into a standard form.

use std::cmp::Ordering;

use crate::error::{ensure_four, Error, Result};
use crate::pcm::{format_labels, CanonicalCycle, Pcm, Permutation};
use crate::rational::cmp_one;

/// Sign patterns of the three canonical cycle products and the reindexings
/// that make all three products at most one. `L` means below one, `G` above.
type CycleCase = (&'static str, [Ordering; 3], [[usize; 4]; 3]);

const CYCLE_CASES: [CycleCase; 8] = {
    use Ordering::{Greater as G, Less as L};
    [
        ("1A", [L, L, L], [[1, 2, 3, 4], [1, 3, 4, 2], [1, 4, 2, 3]]),
        ("1B", [G, G, G], [[1, 2, 4, 3], [1, 3, 2, 4], [1, 4, 3, 2]]),
        ("2A", [L, G, L], [[2, 1, 3, 4], [2, 3, 4, 1], [2, 4, 1, 3]]),
        ("2B", [G, L, G], [[2, 1, 4, 3], [2, 4, 3, 1], [2, 3, 1, 4]]),
        ("3A", [G, L, L], [[3, 1, 4, 2], [3, 4, 2, 1], [3, 2, 1, 4]]),
        ("3B", [L, G, G], [[3, 1, 2, 4], [3, 2, 4, 1], [3, 4, 1, 2]]),
        ("4A", [L, L, G], [[4, 1, 2, 3], [4, 2, 3, 1], [4, 3, 1, 2]]),
        ("4B", [G, G, L], [[4, 1, 3, 2], [4, 2, 1, 3], [4, 3, 2, 1]]),
    ]
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleRearrangement {
    pub permutation: Permutation,
    pub matrix: Pcm,
    /// Label of the sign case the permutation was taken from, `"1A"` … `"4B"`.
    pub case: &'static str,
}

/// Reindexes so that all three canonical cycle products are at most one.
///
/// Consistent cycles (product exactly one) match either sign, so several
/// cases can apply; the lexicographically smallest reindexing among all
/// applicable ones is returned.
pub fn canonical_rearrangement(pcm: &Pcm) -> Result<CycleRearrangement> {
    ensure_four(pcm.n())?;
    let signs = CanonicalCycle::ALL.map(|c| cmp_one(&pcm.closed_walk_product(&c.vertices())));
    let (case, labels) = CYCLE_CASES
        .iter()
        .filter(|(_, pattern, _)| signs.iter().zip(pattern).all(|(s, p)| s.is_eq() || s == p))
        .flat_map(|(case, _, perms)| perms.iter().map(move |p| (*case, p)))
        .min_by_key(|(_, p)| **p)
        .expect("every sign pattern matches a case");
    let permutation = Permutation::from_labels(labels).expect("case table holds permutations");
    let matrix = pcm.apply_permutation(&permutation)?;
    Ok(CycleRearrangement { permutation, matrix, case })
}

/// Triads in the order used by the triad cases: `(1,2,3)`, `(2,3,4)`, `(1,3,4)`, `(1,2,4)`.
pub const CASE_TRIADS: [[usize; 3]; 4] = [[0, 1, 2], [1, 2, 3], [0, 2, 3], [0, 1, 3]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriadCase {
    /// `a_ij a_jk < a_ik` on all four triads.
    One,
    /// As `One` on the first three triads, reversed on `(1,2,4)`.
    Two,
}

impl TriadCase {
    pub fn number(self) -> u8 {
        match self {
            TriadCase::One => 1,
            TriadCase::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriadRearrangement {
    pub permutation: Permutation,
    pub matrix: Pcm,
    pub case: TriadCase,
}

fn triad_case(pcm: &Pcm) -> Option<TriadCase> {
    let signs = CASE_TRIADS.map(|t| cmp_one(&pcm.closed_walk_product(&t)));
    match signs {
        [Ordering::Less, Ordering::Less, Ordering::Less, Ordering::Less] => Some(TriadCase::One),
        [Ordering::Less, Ordering::Less, Ordering::Less, Ordering::Greater] => Some(TriadCase::Two),
        _ => None,
    }
}

/// The lexicographically smallest reindexing that puts a matrix without
/// consistent triads into triad case 1 or 2.
pub fn triad_rearrangement(pcm: &Pcm) -> Result<TriadRearrangement> {
    ensure_four(pcm.n())?;
    if let Some(t) = pcm.consistent_triads()?.first() {
        return Err(Error::ConsistentTriadPresent(format_labels(t)));
    }
    for permutation in Permutation::all(4) {
        let matrix = pcm.apply_permutation(&permutation)?;
        if let Some(case) = triad_case(&matrix) {
            return Ok(TriadRearrangement { permutation, matrix, case });
        }
    }
    unreachable!("every 4x4 matrix without consistent triads has a triad-case reindexing")
}
