//! On-disk formats: matrix and weight JSON, the geometry export document and
//! the OBJ mesh.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::geometry::{
    cutting_planes, embed_exact, CoincidenceReport, Direction, EfficientSet, PerturbClass, SIMPLEX_CORNERS,
};
use crate::pcm::{parse_pcm, CanonicalCycle, Pcm};
use crate::rational::Rational;
use crate::weights::WeightVector;

pub const SCHEMA_VERSION: &str = "1";

/// `{"n": 4, "entries": [["1", "5/2", ...], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_pcm(pcm: &Pcm) -> Self {
        MatrixDocument { n: pcm.n(), entries: pcm.to_string_rows() }
    }

    pub fn to_pcm(&self) -> Result<Pcm> {
        if self.entries.len() != self.n {
            return Err(Error::NonSquare(format!("n = {} but {} rows given", self.n, self.entries.len())));
        }
        parse_pcm(&self.entries)
    }
}

/// `{"w": [...]}`; strings are parsed exactly, numbers make the vector float.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightDocument {
    pub w: Vec<Value>,
}

impl WeightDocument {
    pub fn from_weights(w: &WeightVector) -> Self {
        let w = match w.as_float() {
            Some(values) => values.iter().map(|&x| Value::from(x)).collect(),
            None => w.to_strings().into_iter().map(Value::String).collect(),
        };
        WeightDocument { w }
    }

    /// All-string documents give exact vectors. Any number makes the whole
    /// vector float, with strings rounded to the nearest double.
    pub fn to_weights(&self) -> Result<WeightVector> {
        let mut exact = Vec::with_capacity(self.w.len());
        let mut any_number = false;
        for value in &self.w {
            match value {
                Value::String(s) => exact.push(Rational::parse(s)?),
                Value::Number(num) => {
                    any_number = true;
                    let x = num.as_f64().ok_or_else(|| Error::BadNumeral(num.to_string()))?;
                    exact.push(Rational::from_f64_exact(x).ok_or_else(|| Error::BadNumeral(num.to_string()))?);
                }
                other => return Err(Error::BadNumeral(other.to_string())),
            }
        }
        if any_number {
            WeightVector::float(exact.iter().map(Rational::to_f64).collect())
        } else {
            WeightVector::exact(exact)
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    if text.trim().is_empty() {
        return Err(Error::BadNumeral("empty input".into()));
    }
    serde_json::from_str(text).map_err(|e| Error::BadNumeral(format!("malformed document: {e}")))
}

pub fn parse_matrix_json(text: &str) -> Result<Pcm> {
    parse_json::<MatrixDocument>(text)?.to_pcm()
}

pub fn parse_weights_json(text: &str) -> Result<WeightVector> {
    parse_json::<WeightDocument>(text)?.to_weights()
}

pub fn read_matrix(path: &Path) -> Result<Pcm> {
    parse_matrix_json(&std::fs::read_to_string(path)?)
}

pub fn read_weights(path: &Path) -> Result<WeightVector> {
    parse_weights_json(&std::fs::read_to_string(path)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TetrahedronDocument {
    pub cycle: CanonicalCycle,
    pub orientation: Direction,
    /// The cycle in its feasible direction, 1-based.
    pub oriented_cycle: Vec<usize>,
    /// The path tree behind each vertex, 1-based.
    pub paths: Vec<Vec<usize>>,
    pub vertices_exact: Vec<Vec<Rational>>,
    pub vertices_embedded: Vec<[f64; 3]>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaneDocument {
    /// 1-based `[i, j]`.
    pub pair: [usize; 2],
    pub value: Rational,
    pub clip_polygon: Vec<[f64; 3]>,
    pub clip_polygon_exact: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryDocument {
    pub schema_version: String,
    pub matrix: MatrixDocument,
    pub classification: PerturbClass,
    pub tetrahedra: Vec<TetrahedronDocument>,
    pub coincidences: CoincidenceReport,
    pub planes: Vec<PlaneDocument>,
    pub simplex_corners: [[f64; 3]; 4],
}

fn embedded(w: &[Rational]) -> [f64; 3] {
    embed_exact(w).expect("four components").map(|c| c.to_f64())
}

impl GeometryDocument {
    pub fn new(pcm: &Pcm, set: &EfficientSet) -> Result<Self> {
        let tetrahedra = set
            .tetrahedra
            .iter()
            .map(|t| TetrahedronDocument {
                cycle: t.cycle(),
                orientation: t.orientation().direction,
                oriented_cycle: t.orientation().oriented_listing().iter().map(|v| v + 1).collect(),
                paths: t.paths().iter().map(|p| p.labels()).collect(),
                vertices_exact: t.vertices().iter().map(|v| v.to_vec()).collect(),
                vertices_embedded: t.vertices().iter().map(|v| embedded(v)).collect(),
                rank: t.rank(),
            })
            .collect();
        let planes = cutting_planes(pcm)?
            .into_iter()
            .map(|p| PlaneDocument {
                pair: [p.pair.0 + 1, p.pair.1 + 1],
                clip_polygon: p.clip_polygon.iter().map(|w| embedded(w)).collect(),
                clip_polygon_exact: p.clip_polygon.iter().map(|w| w.to_vec()).collect(),
                value: p.value,
            })
            .collect();
        Ok(GeometryDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            matrix: MatrixDocument::from_pcm(pcm),
            classification: set.classification,
            tetrahedra,
            coincidences: set.coincidences.clone(),
            planes,
            simplex_corners: SIMPLEX_CORNERS,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("geometry serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        parse_json(text)
    }
}

/// Wavefront OBJ of the three tetrahedra in embedded coordinates.
///
/// Solid tetrahedra get four vertices and four triangles wound so their
/// normals point outward. Point tetrahedra become `# point` comments, and
/// flat ones (rank 1 or 2) are written as vertices only.
pub fn to_obj(set: &EfficientSet) -> String {
    let mut out = String::from("# efficient set: union of three tetrahedra\n");
    let mut next_index = 1;
    for t in &set.tetrahedra {
        let exact: Vec<[Rational; 3]> = t.vertices().iter().map(|v| embed_exact(v).expect("four components")).collect();
        let floats: Vec<[f64; 3]> = exact.iter().map(|p| p.clone().map(|c| c.to_f64())).collect();
        let name = format!("tetra_{}", t.cycle().label().trim_matches(|c| c == '(' || c == ')').replace(',', ""));
        if t.is_point() {
            let [x, y, z] = floats[0];
            let _ = writeln!(out, "# point {name} {x:?} {y:?} {z:?}");
            continue;
        }
        let _ = writeln!(out, "o {name}");
        for [x, y, z] in &floats {
            let _ = writeln!(out, "v {x:?} {y:?} {z:?}");
        }
        if t.rank() < 3 {
            let _ = writeln!(out, "# degenerate {name} rank {}", t.rank());
        } else {
            for face in outward_faces(&exact) {
                let [a, b, c] = face.map(|k| k + next_index);
                let _ = writeln!(out, "f {a} {b} {c}");
            }
        }
        next_index += 4;
    }
    out
}

/// Face triples (0-based) oriented so that the opposite vertex lies behind.
fn outward_faces(p: &[[Rational; 3]]) -> [[usize; 3]; 4] {
    let sub = |a: &[Rational; 3], b: &[Rational; 3]| -> [Rational; 3] { std::array::from_fn(|k| &a[k] - &b[k]) };
    let mut faces = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]];
    for (opposite, face) in faces.iter_mut().enumerate() {
        let [a, b, c] = *face;
        let (u, v, d) = (sub(&p[b], &p[a]), sub(&p[c], &p[a]), sub(&p[opposite], &p[a]));
        let normal = [
            &u[1] * &v[2] - &u[2] * &v[1],
            &u[2] * &v[0] - &u[0] * &v[2],
            &u[0] * &v[1] - &u[1] * &v[0],
        ];
        let facing: Rational = normal.iter().zip(&d).map(|(x, y)| x * y).sum();
        if facing.is_positive() {
            face.swap(1, 2);
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::efficient_set;

    fn base_matrix() -> Pcm {
        parse_matrix_json(
            r#"{"n": 4, "entries": [["1","1","5","7"],["1","1","2","8"],["1/5","1/2","1","1/3"],["1/7","1/8","3","1"]]}"#,
        )
        .unwrap()
    }

    #[test]
    fn matrix_document_errors() {
        assert!(matches!(parse_matrix_json(""), Err(Error::BadNumeral(_))));
        assert!(matches!(parse_matrix_json("  \n"), Err(Error::BadNumeral(_))));
        assert!(matches!(parse_matrix_json("{"), Err(Error::BadNumeral(_))));
        assert_eq!(
            parse_matrix_json(r#"{"n": 2, "entries": [["1","2"],["1/3","1"]]}"#).unwrap_err(),
            Error::ReciprocityViolation(2, 1)
        );
        assert!(matches!(parse_matrix_json(r#"{"n": 3, "entries": [["1"]]}"#), Err(Error::NonSquare(_))));
    }

    #[test]
    fn weight_documents() {
        let exact = parse_weights_json(r#"{"w": ["1/4", "0.25", "1/8", "3/8"]}"#).unwrap();
        assert!(exact.is_exact());
        assert_eq!(exact.to_strings(), ["1/4", "1/4", "1/8", "3/8"]);
        let float = parse_weights_json(r#"{"w": [0.25, "1/4", 0.125, 0.375]}"#).unwrap();
        assert_eq!(float.as_float().unwrap(), [0.25, 0.25, 0.125, 0.375]);
        assert!(matches!(parse_weights_json(r#"{"w": [true]}"#), Err(Error::BadNumeral(_))));
        assert_eq!(parse_weights_json(r#"{"w": ["0", "1"]}"#).unwrap_err(), Error::NonPositiveWeight(1));
        let round = WeightDocument::from_weights(&exact).to_weights().unwrap();
        assert_eq!(round, exact);
    }

    #[test]
    fn geometry_round_trip() {
        let a = base_matrix();
        let set = efficient_set(&a).unwrap();
        let doc = GeometryDocument::new(&a, &set).unwrap();
        let back = GeometryDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        for (t, d) in set.tetrahedra.iter().zip(&back.tetrahedra) {
            let exact: Vec<Vec<Rational>> = t.vertices().iter().map(|v| v.to_vec()).collect();
            assert_eq!(d.vertices_exact, exact);
        }
        assert_eq!(back.matrix.to_pcm().unwrap(), a);
        assert_eq!(back.planes.len(), 6);
        assert_eq!(back.planes[0].clip_polygon.len(), 3);
    }

    #[test]
    fn obj_faces_point_outward() {
        let set = efficient_set(&base_matrix()).unwrap();
        let obj = to_obj(&set);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 12);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 12);

        let b5 = Pcm::from_upper(4, &["5/2", "5", "7", "2", "14/5", "7/5"].map(|s| Rational::parse(s).unwrap())).unwrap();
        let obj = to_obj(&efficient_set(&b5).unwrap());
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ") || l.starts_with("v ")).count(), 0);
        assert_eq!(obj.lines().filter(|l| l.starts_with("# point")).count(), 3);
    }

    #[test]
    fn outward_orientation_on_unit_tetrahedron() {
        let q = |x: i64, y: i64, z: i64| [Rational::from_integer(x), Rational::from_integer(y), Rational::from_integer(z)];
        let pts = [q(0, 0, 0), q(1, 0, 0), q(0, 1, 0), q(0, 0, 1)];
        let faces = outward_faces(&pts);
        // face opposite the origin must wind counter-clockwise seen from outside
        assert_eq!(faces[0], [1, 2, 3]);
        assert_eq!(faces[3], [0, 2, 1]);
    }
}
