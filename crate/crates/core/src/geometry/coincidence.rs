//! Shared vertices, collinear edges and coplanar faces among the three
//! tetrahedra of an efficient set.
//!
//! All tests run on the exact 4-component vectors. Edges must have distinct
//! endpoints and faces must span a plane for a pair to be reported, so
//! collapsed edges and faces never count.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::linalg::affine_rank;
use crate::pcm::CanonicalCycle;
use crate::rational::Rational;

use super::tetra::Tetrahedron;

/// Vertex index pairs of a tetrahedron, lexicographic.
pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
/// Vertex index triples of a tetrahedron, lexicographic.
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedVertex {
    pub cycle_a: CanonicalCycle,
    pub vertex_a: usize,
    pub cycle_b: CanonicalCycle,
    pub vertex_b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePair {
    pub cycle_a: CanonicalCycle,
    pub edge_a: (usize, usize),
    pub cycle_b: CanonicalCycle,
    pub edge_b: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePair {
    pub cycle_a: CanonicalCycle,
    pub face_a: [usize; 3],
    pub cycle_b: CanonicalCycle,
    pub face_b: [usize; 3],
}

/// Vertex indices are 0-based positions in each tetrahedron's rotation order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoincidenceReport {
    pub shared_vertices: Vec<SharedVertex>,
    pub collinear_edge_pairs: Vec<EdgePair>,
    pub coplanar_face_pairs: Vec<FacePair>,
    pub point_tetrahedra: Vec<CanonicalCycle>,
}

impl CoincidenceReport {
    fn between<'a, T, F>(items: &'a [T], a: CanonicalCycle, b: CanonicalCycle, key: F) -> impl Iterator<Item = &'a T>
    where
        F: Fn(&T) -> (CanonicalCycle, CanonicalCycle) + 'a,
    {
        items.iter().filter(move |item| {
            let (x, y) = key(item);
            (x, y) == (a, b) || (x, y) == (b, a)
        })
    }

    /// Shared-vertex index pairs between two tetrahedra.
    pub fn shared_between(&self, a: CanonicalCycle, b: CanonicalCycle) -> usize {
        Self::between(&self.shared_vertices, a, b, |s| (s.cycle_a, s.cycle_b)).count()
    }

    /// Distinct vertex positions of `a` that coincide with some vertex of `b`.
    pub fn distinct_shared_between(&self, a: CanonicalCycle, b: CanonicalCycle) -> usize {
        Self::between(&self.shared_vertices, a, b, |s| (s.cycle_a, s.cycle_b))
            .map(|s| if s.cycle_a == a { s.vertex_a } else { s.vertex_b })
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn collinear_between(&self, a: CanonicalCycle, b: CanonicalCycle) -> usize {
        Self::between(&self.collinear_edge_pairs, a, b, |e| (e.cycle_a, e.cycle_b)).count()
    }

    pub fn coplanar_between(&self, a: CanonicalCycle, b: CanonicalCycle) -> usize {
        Self::between(&self.coplanar_face_pairs, a, b, |f| (f.cycle_a, f.cycle_b)).count()
    }
}

pub fn coincidence_structure(tetrahedra: &[Tetrahedron; 3]) -> CoincidenceReport {
    let mut report = CoincidenceReport {
        point_tetrahedra: tetrahedra.iter().filter(|t| t.is_point()).map(Tetrahedron::cycle).collect(),
        ..CoincidenceReport::default()
    };
    for a in 0..3 {
        for b in a + 1..3 {
            let (ta, tb) = (&tetrahedra[a], &tetrahedra[b]);
            for va in 0..4 {
                for vb in 0..4 {
                    if ta.vertex(va) == tb.vertex(vb) {
                        report.shared_vertices.push(SharedVertex {
                            cycle_a: ta.cycle(),
                            vertex_a: va,
                            cycle_b: tb.cycle(),
                            vertex_b: vb,
                        });
                    }
                }
            }
            for edge_a in proper_edges(ta) {
                for edge_b in proper_edges(tb) {
                    let points = [ta.vertex(edge_a.0), ta.vertex(edge_a.1), tb.vertex(edge_b.0), tb.vertex(edge_b.1)];
                    if affine_rank(&points) == 1 {
                        report.collinear_edge_pairs.push(EdgePair {
                            cycle_a: ta.cycle(),
                            edge_a,
                            cycle_b: tb.cycle(),
                            edge_b,
                        });
                    }
                }
            }
            for face_a in proper_faces(ta) {
                for face_b in proper_faces(tb) {
                    let points: Vec<&[Rational]> =
                        face_a.iter().map(|&k| ta.vertex(k)).chain(face_b.iter().map(|&k| tb.vertex(k))).collect();
                    if affine_rank(&points) == 2 {
                        report.coplanar_face_pairs.push(FacePair {
                            cycle_a: ta.cycle(),
                            face_a,
                            cycle_b: tb.cycle(),
                            face_b,
                        });
                    }
                }
            }
        }
    }
    report
}

fn proper_edges(t: &Tetrahedron) -> impl Iterator<Item = (usize, usize)> + '_ {
    EDGES.into_iter().filter(|&(i, j)| t.vertex(i) != t.vertex(j))
}

fn proper_faces(t: &Tetrahedron) -> impl Iterator<Item = [usize; 3]> + '_ {
    FACES.into_iter().filter(|f| affine_rank(&f.map(|k| t.vertex(k))) == 2)
}
