//! The tetrahedron spanned by the four path-tree vectors of a 4-cycle, and
//! the region of weight vectors along which that cycle runs.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{ensure_dim, ensure_four, Result};
use crate::linalg;
use crate::pcm::{CanonicalCycle, Pcm};
use crate::rational::Rational;
use crate::trees::{paths_of_cycle, tree_weight_vector, LabeledPath};
use crate::weights::{float_band, WeightVector};

use super::orientation::{cycle_orientation, CycleOrientation, Direction};

/// Coefficients below this count as non-negative for float inputs.
pub const FLOAT_COEFFICIENT_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Tetrahedron {
    orientation: CycleOrientation,
    paths: [LabeledPath; 4],
    vertices: [Vec<Rational>; 4],
    rank: usize,
}

impl Tetrahedron {
    pub fn cycle(&self) -> CanonicalCycle {
        self.orientation.cycle
    }

    pub fn orientation(&self) -> CycleOrientation {
        self.orientation
    }

    /// Paths in rotation order; vertex `k` is the weight vector of path `k`.
    pub fn paths(&self) -> &[LabeledPath; 4] {
        &self.paths
    }

    pub fn vertex(&self, k: usize) -> &[Rational] {
        &self.vertices[k]
    }

    pub fn vertices(&self) -> [&[Rational]; 4] {
        std::array::from_fn(|k| self.vertices[k].as_slice())
    }

    pub fn vertex_vector(&self, k: usize) -> WeightVector {
        WeightVector::exact(self.vertices[k].clone()).expect("tree vectors are positive")
    }

    /// Dimension of the affine hull of the four vertices.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_point(&self) -> bool {
        self.rank == 0
    }

    pub fn centroid(&self) -> WeightVector {
        let quarter = Rational::new(1, 4);
        let components = (0..4)
            .map(|i| self.vertices.iter().map(|v| &v[i]).sum::<Rational>() * &quarter)
            .collect();
        WeightVector::exact(components).expect("centroid of positive vectors is positive")
    }
}

pub fn tetrahedron_for_cycle(pcm: &Pcm, cycle: CanonicalCycle) -> Result<Tetrahedron> {
    ensure_four(pcm.n())?;
    let orientation = cycle_orientation(pcm, cycle)?;
    let paths = paths_of_cycle(cycle);
    let mut vertices: [Vec<Rational>; 4] = Default::default();
    for (slot, path) in vertices.iter_mut().zip(&paths) {
        *slot = tree_weight_vector(pcm, &path.to_tree())?.to_exact();
    }
    let rank = linalg::affine_rank(&vertices.each_ref().map(Vec::as_slice));
    Ok(Tetrahedron { orientation, paths, vertices, rank })
}

/// Whether `w` satisfies `w_i / w_j ≥ a_ij` on every arc of the oriented cycle.
///
/// A consistent cycle can run both ways, so its region requires all four
/// ratios to hold with equality.
pub fn contains_cycle_region(pcm: &Pcm, orientation: &CycleOrientation, w: &WeightVector) -> Result<bool> {
    ensure_four(pcm.n())?;
    ensure_dim(pcm.n(), w.len())?;
    let arcs = orientation.oriented_arcs();
    Ok(match orientation.direction {
        Direction::ConsistentBoth => arcs.iter().all(|&(i, j)| w.compare_ratio(i, j, pcm.get(i, j)).is_eq()),
        Direction::Forward | Direction::Backward => {
            arcs.iter().all(|&(i, j)| w.compare_ratio(i, j, pcm.get(i, j)) != Ordering::Less)
        }
    })
}

/// Canonical cycles whose region contains `w` (closed regions, so boundary
/// points may belong to several).
pub fn containing_regions(pcm: &Pcm, w: &WeightVector) -> Result<Vec<CanonicalCycle>> {
    ensure_four(pcm.n())?;
    let mut inside = Vec::new();
    for cycle in CanonicalCycle::ALL {
        if contains_cycle_region(pcm, &cycle_orientation(pcm, cycle)?, w)? {
            inside.push(cycle);
        }
    }
    Ok(inside)
}

/// Efficiency decided by membership in the union of the three cycle regions.
pub fn is_efficient_geometric(pcm: &Pcm, w: &WeightVector) -> Result<bool> {
    Ok(!containing_regions(pcm, w)?.is_empty())
}

/// Convex coefficients of `w` with respect to the tetrahedron's vertices.
///
/// `w` is normalized first. For a degenerate tetrahedron every affinely
/// independent subset spanning the hull is tried in order and the first one
/// with non-negative coefficients is used; unused vertices get zero. Exact
/// vectors are solved exactly; float vectors are solved on their exact binary
/// value and accepted within the float band.
pub fn barycentric(tet: &Tetrahedron, w: &WeightVector) -> Result<Option<[Rational; 4]>> {
    ensure_dim(4, w.len())?;
    let target = w.normalized().to_exact();
    let float = !w.is_exact();
    let size = tet.rank + 1;
    for subset in index_subsets(size) {
        let points: Vec<&[Rational]> = subset.iter().map(|&k| tet.vertex(k)).collect();
        if linalg::affine_rank(&points) + 1 != size {
            continue;
        }
        if let Some(coefficients) = solve_convex(&points, &target, float) {
            let mut full: [Rational; 4] = Default::default();
            for (&k, c) in subset.iter().zip(coefficients) {
                full[k] = c;
            }
            return Ok(Some(full));
        }
    }
    Ok(None)
}

/// Index subsets of `{0,1,2,3}` with `size` elements, lexicographic.
fn index_subsets(size: usize) -> BTreeSet<Vec<usize>> {
    (0u32..16)
        .filter(|mask| mask.count_ones() as usize == size)
        .map(|mask| (0..4).filter(|k| mask & (1 << k) != 0).collect())
        .collect()
}

/// Solves `Σ λ_k p_k = target`, `Σ λ_k = 1` and checks `λ ≥ 0`.
fn solve_convex(points: &[&[Rational]], target: &[Rational], float: bool) -> Option<Vec<Rational>> {
    let dim = target.len();
    let mut rows: Vec<Vec<Rational>> = (0..dim).map(|i| points.iter().map(|p| p[i].clone()).collect()).collect();
    rows.push(vec![Rational::one(); points.len()]);
    let mut rhs = target.to_vec();
    rhs.push(Rational::one());

    let coefficients = if float {
        let lambda = solve_float_tolerant(&rows, &rhs)?;
        if lambda.iter().any(|l| l.to_f64() < -FLOAT_COEFFICIENT_SLACK) {
            return None;
        }
        lambda
    } else {
        let lambda = linalg::solve(&rows, &rhs)?;
        if lambda.iter().any(Rational::is_negative) {
            return None;
        }
        lambda
    };
    Some(coefficients)
}

/// Solves on a maximal independent row subset, then accepts the solution when
/// the remaining rows hold within the float band.
fn solve_float_tolerant(rows: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let cols = rows[0].len();
    let mut chosen: Vec<usize> = Vec::new();
    for r in (0..rows.len()).rev() {
        let mut candidate: Vec<Vec<Rational>> = chosen.iter().map(|&c| rows[c].clone()).collect();
        candidate.push(rows[r].clone());
        if linalg::rank(candidate) == chosen.len() + 1 {
            chosen.push(r);
            if chosen.len() == cols {
                break;
            }
        }
    }
    let square: Vec<Vec<Rational>> = chosen.iter().map(|&r| rows[r].clone()).collect();
    let square_rhs: Vec<Rational> = chosen.iter().map(|&r| rhs[r].clone()).collect();
    let lambda = linalg::solve(&square, &square_rhs)?;
    let band = float_band();
    for (row, target) in rows.iter().zip(rhs) {
        let value: Rational = row.iter().zip(&lambda).map(|(a, l)| a * l).sum();
        if (value - target).to_f64().abs() > band {
            return None;
        }
    }
    Some(lambda)
}
