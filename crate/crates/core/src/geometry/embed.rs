//! The linear map sending the normalized 4-weight simplex onto a regular
//! tetrahedron in 3-space, and the six cutting planes `w_i / w_j = a_ij`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_dim, ensure_four, Error, Result};
use crate::pcm::Pcm;
use crate::rational::Rational;
use crate::weights::WeightVector;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmbeddedPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl EmbeddedPoint {
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_exact(coords: &[Rational; 3]) -> Self {
        EmbeddedPoint { x: coords[0].to_f64(), y: coords[1].to_f64(), z: coords[2].to_f64() }
    }
}

/// Images of the unit vectors `e_1 … e_4`.
pub const SIMPLEX_CORNERS: [[f64; 3]; 4] = [[1.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 1.0], [0.0, 0.0, 0.0]];

/// `(w1 + w2, w1 + w3, w2 + w3)` computed exactly.
pub fn embed_exact(w: &[Rational]) -> Result<[Rational; 3]> {
    ensure_dim(4, w.len())?;
    Ok([&w[0] + &w[1], &w[0] + &w[2], &w[1] + &w[2]])
}

/// Embeds a normalized weight vector, rounding each coordinate once.
pub fn embed(w: &WeightVector) -> Result<EmbeddedPoint> {
    ensure_dim(4, w.len())?;
    if !w.is_normalized() {
        return Err(Error::NotNormalized);
    }
    Ok(match w.as_exact() {
        Some(exact) => EmbeddedPoint::from_exact(&embed_exact(exact)?),
        None => {
            let v = w.to_f64_vec();
            EmbeddedPoint { x: v[0] + v[1], y: v[0] + v[2], z: v[1] + v[2] }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuttingPlane {
    /// 0-based `(i, j)`, `i < j`.
    pub pair: (usize, usize),
    pub value: Rational,
    /// Intersection with the simplex as exact weight vectors, in corner order
    /// followed by edge crossings.
    pub clip_polygon: Vec<[Rational; 4]>,
}

impl CuttingPlane {
    pub fn embedded_polygon(&self) -> Vec<EmbeddedPoint> {
        self.clip_polygon
            .iter()
            .map(|w| EmbeddedPoint::from_exact(&embed_exact(w).expect("four components")))
            .collect()
    }
}

fn unit(k: usize) -> [Rational; 4] {
    std::array::from_fn(|i| if i == k { Rational::one() } else { Rational::zero() })
}

/// Clips `w_i − a w_j = 0` against the simplex: corners on the plane plus the
/// crossing point of every edge whose endpoints lie strictly on opposite sides.
fn clip(i: usize, j: usize, a: &Rational) -> Vec<[Rational; 4]> {
    let side = |w: &[Rational; 4]| &w[i] - a * &w[j];
    let corners: Vec<[Rational; 4]> = (0..4).map(unit).collect();
    let values: Vec<Rational> = corners.iter().map(side).collect();
    let mut polygon: Vec<[Rational; 4]> =
        corners.iter().zip(&values).filter(|(_, v)| v.is_zero()).map(|(c, _)| c.clone()).collect();
    for p in 0..4 {
        for q in p + 1..4 {
            let (fp, fq) = (&values[p], &values[q]);
            if fp.is_positive() && fq.is_negative() || fp.is_negative() && fq.is_positive() {
                // point (1 − t) e_p + t e_q with f = 0
                let t = fp / &(fp - fq);
                let s = Rational::one() - &t;
                polygon.push(std::array::from_fn(|k| {
                    if k == p {
                        s.clone()
                    } else if k == q {
                        t.clone()
                    } else {
                        Rational::zero()
                    }
                }));
            }
        }
    }
    polygon
}

/// One plane per pair `i < j`, lexicographic.
pub fn cutting_planes(pcm: &Pcm) -> Result<Vec<CuttingPlane>> {
    ensure_four(pcm.n())?;
    let mut planes = Vec::with_capacity(6);
    for i in 0..4 {
        for j in i + 1..4 {
            let value = pcm.get(i, j).clone();
            let clip_polygon = clip(i, j, &value);
            planes.push(CuttingPlane { pair: (i, j), value, clip_polygon });
        }
    }
    Ok(planes)
}
