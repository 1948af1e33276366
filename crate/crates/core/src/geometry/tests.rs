use proptest::prelude::*;

use super::*;
use crate::bcc::{bcc_digraph, is_efficient};
use crate::error::Error;
use crate::pcm::{CanonicalCycle::*, Permutation};
use crate::rational::Rational;
use crate::trees::{enumerate_spanning_trees, tree_weight_vector, SpanningTree};
use crate::weights::WeightVector;

fn r(s: &str) -> Rational {
    Rational::parse(s).unwrap()
}

fn upper(values: [&str; 6]) -> Pcm {
    Pcm::from_upper(4, &values.map(r)).unwrap()
}

fn base_matrix() -> Pcm {
    upper(["1", "5", "7", "2", "8", "1/3"])
}

/// The base matrix and its five perturbations, in class order.
fn reference(tag: PerturbTag) -> Pcm {
    match tag {
        PerturbTag::Triple => base_matrix(),
        PerturbTag::DoubleTriad => upper(["5/2", "5", "7", "2", "8", "1/3"]),
        PerturbTag::DoubleOneCycle => upper(["1", "5", "7", "2", "14/5", "1/3"]),
        PerturbTag::DoubleTwoCycles => upper(["1", "5", "7", "2", "14/5", "14/25"]),
        PerturbTag::Simple => upper(["5/2", "5", "7", "2", "14/5", "1/3"]),
        PerturbTag::Consistent => upper(["5/2", "5", "7", "2", "14/5", "7/5"]),
    }
}

fn flip_matrix(a14: &str) -> Pcm {
    upper(["1", "2", a14, "1", "3", "1"])
}

fn exact(v: &[&str]) -> WeightVector {
    WeightVector::exact(v.iter().map(|s| r(s)).collect()).unwrap()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[test]
fn orientations_of_examples() {
    let a = base_matrix();
    assert_eq!(cycle_orientation(&a, C1234).unwrap().direction, Direction::Forward);
    let dirs = |m: &Pcm| orientations(m).unwrap().map(|o| o.direction);
    assert_eq!(dirs(&flip_matrix("4")), [Direction::Forward; 3]);
    assert_eq!(dirs(&flip_matrix("6"))[1], Direction::ConsistentBoth);
    assert_eq!(dirs(&flip_matrix("8"))[1], Direction::Backward);
    let backward = cycle_orientation(&flip_matrix("8"), C1423).unwrap();
    assert_eq!(backward.oriented_listing(), [0, 2, 1, 3]);
    assert_eq!(backward.oriented_arcs(), [(0, 2), (2, 1), (1, 3), (3, 0)]);
    assert!(matches!(cycle_orientation(&Pcm::from_upper(3, &["1", "2", "3"].map(r)).unwrap(), C1234), Err(Error::UnsupportedDimension(3))));
}

#[test]
fn cycle_rearrangements() {
    let a = base_matrix();
    let out = canonical_rearrangement(&a).unwrap();
    assert!(out.permutation.is_identity());
    assert_eq!(out.matrix, a);
    assert_eq!(out.case, "1A");

    let t = a.transpose();
    let out = canonical_rearrangement(&t).unwrap();
    assert_eq!(out.permutation.labels(), [1, 2, 4, 3]);
    assert_eq!(out.case, "1B");
    for c in CanonicalCycle::ALL {
        assert!(out.matrix.cycle_product(&c.vertices()).unwrap() < Rational::one());
    }
}

#[test]
fn triad_rearrangements() {
    let low = flip_matrix("4");
    let out = triad_rearrangement(&low).unwrap();
    assert!(out.permutation.is_identity());
    assert_eq!(out.case, TriadCase::One);

    // a single reversed triad: (1,2,4) > 1 while the others stay below one
    let m = upper(["1", "2", "1/2", "1", "3", "1"]);
    let out = triad_rearrangement(&m).unwrap();
    let signs: Vec<bool> = CASE_TRIADS.iter().map(|t| out.matrix.triad_product(*t).unwrap() < Rational::one()).collect();
    match out.case {
        TriadCase::One => assert_eq!(signs, [true; 4]),
        TriadCase::Two => assert_eq!(signs, [true, true, true, false]),
    }
    let again = triad_rearrangement(&out.matrix).unwrap();
    assert!(again.permutation.is_identity());
    assert_eq!(again.case, out.case);

    assert!(matches!(
        triad_rearrangement(&reference(PerturbTag::DoubleTriad)),
        Err(Error::ConsistentTriadPresent(t)) if t == "(1,2,3)"
    ));
}

#[test]
fn base_matrix_tetrahedra() {
    let set = efficient_set(&base_matrix()).unwrap();
    let t1 = set.tetrahedron(C1234);
    assert_eq!(strings(t1.vertex(0)), ["1/4", "1/4", "1/8", "3/8"]);
    assert_eq!(strings(t1.vertex(1)), ["7/9", "2/27", "1/27", "1/9"]);
    assert_eq!(strings(t1.vertex(2)), ["21/46", "21/46", "1/46", "3/46"]);
    assert_eq!(strings(t1.vertex(3)), ["14/37", "14/37", "7/37", "2/37"]);
    assert!(set.tetrahedra.iter().all(|t| t.rank() == 3));
    let mut all: Vec<&[Rational]> = set.tetrahedra.iter().flat_map(|t| t.vertices()).collect();
    all.sort();
    all.dedup();
    assert_eq!(all.len(), 12);
}

#[test]
fn point_tetrahedra() {
    let b2 = efficient_set(&reference(PerturbTag::DoubleOneCycle)).unwrap();
    let t = b2.tetrahedron(C1423);
    assert_eq!(t.rank(), 0);
    for v in t.vertices() {
        assert_eq!(strings(v), ["35/61", "14/61", "7/61", "5/61"]);
    }
    let b5 = reference(PerturbTag::Consistent);
    let w = b5.consistent_weights().unwrap();
    for t in efficient_set(&b5).unwrap().tetrahedra {
        assert!(t.is_point());
        assert_eq!(t.vertex(0), w.as_exact().unwrap());
    }
}

#[test]
fn region_membership() {
    let a = base_matrix();
    let c1 = cycle_orientation(&a, C1234).unwrap();
    assert!(contains_cycle_region(&a, &c1, &exact(&["1/4", "1/4", "1/8", "3/8"])).unwrap());
    assert!(!contains_cycle_region(&a, &c1, &WeightVector::uniform(4)).unwrap());
    assert!(!is_efficient_geometric(&a, &WeightVector::uniform(4)).unwrap());
    assert!(is_efficient_geometric(&a, &exact(&["7/20", "2/5", "1/5", "1/20"])).unwrap());
    let set = efficient_set(&a).unwrap();
    for t in &set.tetrahedra {
        for k in 0..4 {
            assert!(contains_cycle_region(&a, &t.orientation(), &t.vertex_vector(k)).unwrap());
        }
    }
    assert!(matches!(contains_cycle_region(&a, &c1, &WeightVector::uniform(3)), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn barycentric_examples() {
    let set = efficient_set(&base_matrix()).unwrap();
    let t1 = set.tetrahedron(C1234);
    let one = Rational::one();
    let zero = Rational::zero();
    assert_eq!(barycentric(t1, &t1.vertex_vector(0)).unwrap(), Some([one, zero.clone(), zero.clone(), zero]));
    let quarter = Rational::new(1, 4);
    assert_eq!(barycentric(t1, &t1.centroid()).unwrap(), Some([quarter.clone(), quarter.clone(), quarter.clone(), quarter]));
    assert_eq!(barycentric(t1, &WeightVector::uniform(4)).unwrap(), None);
    // float input near a vertex is accepted within the band
    let near = WeightVector::float(t1.vertex_vector(0).to_f64_vec()).unwrap();
    assert!(barycentric(t1, &near).unwrap().is_some());

    let b5 = reference(PerturbTag::Consistent);
    let point = efficient_set(&b5).unwrap();
    let t = point.tetrahedron(C1234);
    assert!(barycentric(t, &b5.consistent_weights().unwrap()).unwrap().is_some());
    assert!(barycentric(t, &WeightVector::uniform(4)).unwrap().is_none());
}

#[test]
fn classification_of_references() {
    for tag in PerturbTag::ALL {
        let class = classify(&reference(tag)).unwrap();
        assert_eq!(class.tag, tag);
        assert_eq!((class.consistent_triad_count, class.consistent_cycle_count), tag.counts());
    }
    assert_eq!(PerturbTag::from_counts(3, 0).unwrap_err(), Error::ImpossibleCombination { triads: 3, cycles: 0 });
    assert_eq!("double-two-cycles".parse::<PerturbTag>().unwrap(), PerturbTag::DoubleTwoCycles);
    assert!("quadruple".parse::<PerturbTag>().is_err());
}

/// Per tetrahedron pair: (shared index pairs, collinear edge pairs, coplanar face pairs).
fn pair_counts(report: &CoincidenceReport) -> [(usize, usize, usize); 3] {
    [(C1234, C1423), (C1234, C1342), (C1423, C1342)].map(|(a, b)| {
        (report.shared_between(a, b), report.collinear_between(a, b), report.coplanar_between(a, b))
    })
}

#[test]
fn coincidence_patterns() {
    let report = |tag| efficient_set(&reference(tag)).unwrap().coincidences;

    let triple = report(PerturbTag::Triple);
    assert_eq!(pair_counts(&triple), [(0, 1, 2); 3]);
    assert!(triple.point_tetrahedra.is_empty());

    let b1 = report(PerturbTag::DoubleTriad);
    assert_eq!(pair_counts(&b1), [(1, 2, 2); 3]);

    let b2 = report(PerturbTag::DoubleOneCycle);
    assert_eq!(b2.point_tetrahedra, [C1423]);
    assert!(b2.shared_vertices.is_empty());
    assert_eq!(pair_counts(&b2)[1], (0, 1, 2));

    let b3 = report(PerturbTag::DoubleTwoCycles);
    assert_eq!(b3.point_tetrahedra, [C1423, C1342]);
    assert!(b3.shared_vertices.is_empty());

    let b4 = report(PerturbTag::Simple);
    assert_eq!(b4.point_tetrahedra, [C1423]);
    // the point is one vertex of each solid tetrahedron
    assert_eq!(b4.distinct_shared_between(C1234, C1423), 1);
    assert_eq!(b4.distinct_shared_between(C1342, C1423), 1);
    assert_eq!(b4.distinct_shared_between(C1234, C1342), 3);
    assert_eq!(pair_counts(&b4)[1], (3, 3, 2));

    let b5 = report(PerturbTag::Consistent);
    assert_eq!(b5.point_tetrahedra, CanonicalCycle::ALL);
    assert_eq!(b5.shared_vertices.len(), 48);
}

#[test]
fn embedding() {
    let p = embed(&exact(&["1", "0.0000001", "0.0000001", "0.0000001"]).normalized()).unwrap();
    assert!((p.x - 1.0).abs() < 1e-6 && (p.y - 1.0).abs() < 1e-6 && p.z.abs() < 1e-6);
    assert_eq!(embed(&WeightVector::uniform(4)).unwrap().to_array(), [0.5, 0.5, 0.5]);
    assert_eq!(embed(&exact(&["1/4", "1/4", "1/8", "3/8"])).unwrap().to_array(), [0.5, 0.375, 0.375]);
    assert_eq!(embed(&exact(&["1", "1", "1", "1"])).unwrap_err(), Error::NotNormalized);
    let corner = embed_exact(&["1", "0", "0", "0"].map(r)).unwrap();
    assert_eq!(EmbeddedPoint::from_exact(&corner).to_array(), SIMPLEX_CORNERS[0]);
}

#[test]
fn cutting_plane_examples() {
    let planes = cutting_planes(&base_matrix()).unwrap();
    assert_eq!(planes.len(), 6);
    assert_eq!(planes[0].pair, (0, 1));
    assert_eq!(planes[0].value, Rational::one());

    let a = upper(["2", "1", "1", "1", "1", "1"]);
    let plane = &cutting_planes(&a).unwrap()[0];
    let crossing = plane.clip_polygon.iter().find(|w| !w[0].is_zero()).unwrap();
    // the crossing on edge V1V2 sits one third of the way from V1
    assert_eq!(strings(crossing), ["2/3", "1/3", "0", "0"]);

    let ones = upper(["1"; 6]);
    for plane in cutting_planes(&ones).unwrap() {
        let (i, j) = plane.pair;
        let mid = plane.clip_polygon.iter().find(|w| !w[i].is_zero()).unwrap();
        assert_eq!(mid[i], Rational::new(1, 2));
        assert_eq!(mid[j], Rational::new(1, 2));
        assert_eq!(plane.clip_polygon.len(), 3);
    }
}

#[test]
fn star_trees_lie_in_regions() {
    let a = base_matrix();
    for center in 0..4 {
        let w = tree_weight_vector(&a, &SpanningTree::star(4, center).unwrap()).unwrap();
        assert!(is_efficient_geometric(&a, &w).unwrap());
    }
}

fn arb_pcm() -> impl Strategy<Value = Pcm> {
    let value = (1i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::new(p, q));
    proptest::collection::vec(value, 6).prop_map(|v| Pcm::from_upper(4, &v).unwrap())
}

fn arb_weights() -> impl Strategy<Value = WeightVector> {
    proptest::collection::vec(1i64..1000, 4)
        .prop_map(|v| WeightVector::exact(v.into_iter().map(Rational::from_integer).collect()).unwrap().normalized())
}

fn arb_permutation() -> impl Strategy<Value = Permutation> {
    (0usize..24).prop_map(|k| Permutation::all(4).swap_remove(k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn geometric_and_graph_verdicts_agree(a in arb_pcm(), w in arb_weights()) {
        prop_assert_eq!(is_efficient_geometric(&a, &w).unwrap(), is_efficient(&a, &w).unwrap());
    }

    #[test]
    fn region_matches_barycentric(a in arb_pcm(), w in arb_weights(), pick in 0usize..4, mix in 0i64..=4) {
        let set = efficient_set(&a).unwrap();
        for t in &set.tetrahedra {
            // random points plus a blend of a vertex with w
            let blend = {
                let v = t.vertex(pick);
                let x = w.as_exact().unwrap();
                let s = Rational::new(mix, 4);
                let comps: Vec<Rational> = v.iter().zip(x).map(|(p, q)| &s * p + (Rational::one() - &s) * q).collect();
                WeightVector::exact(comps).unwrap()
            };
            for candidate in [&w, &blend] {
                let region = contains_cycle_region(&a, &t.orientation(), candidate).unwrap();
                prop_assert_eq!(region, barycentric(t, candidate).unwrap().is_some());
            }
        }
    }

    #[test]
    fn efficient_vectors_carry_an_oriented_cycle(a in arb_pcm(), w in arb_weights()) {
        if is_efficient(&a, &w).unwrap() {
            let g = bcc_digraph(&a, &w).unwrap();
            let found = orientations(&a).unwrap().iter().any(|o| o.oriented_arcs().iter().all(|&(i, j)| g.has_arc(i, j)));
            prop_assert!(found);
        }
    }

    #[test]
    fn rearrangement_is_sound(a in arb_pcm()) {
        let out = canonical_rearrangement(&a).unwrap();
        for c in CanonicalCycle::ALL {
            let p = out.matrix.cycle_product(&c.vertices()).unwrap();
            prop_assert!(p <= Rational::one());
        }
        let brute = Permutation::all(4).into_iter().find(|p| {
            let m = a.apply_permutation(p).unwrap();
            CanonicalCycle::ALL.iter().all(|c| m.cycle_product(&c.vertices()).unwrap() <= Rational::one())
        });
        prop_assert_eq!(Some(out.permutation.clone()), brute);
        prop_assert!(canonical_rearrangement(&out.matrix).unwrap().permutation.is_identity());
    }

    #[test]
    fn rank_zero_exactly_on_consistent_cycles(a in arb_pcm()) {
        let consistent = a.consistent_four_cycles().unwrap();
        for t in efficient_set(&a).unwrap().tetrahedra {
            prop_assert_eq!(t.rank() == 0, consistent.contains(&t.cycle()));
            prop_assert!(t.rank() == 0 || t.rank() == 3);
        }
    }

    #[test]
    fn efficient_set_is_permutation_equivariant(a in arb_pcm(), sigma in arb_permutation()) {
        let b = a.apply_permutation(&sigma).unwrap();
        let collect = |m: &Pcm| {
            let mut all: Vec<Vec<Rational>> =
                efficient_set(m).unwrap().tetrahedra.iter().flat_map(|t| t.vertices().map(<[Rational]>::to_vec)).collect();
            all.sort();
            all
        };
        let mut moved: Vec<Vec<Rational>> = collect(&a)
            .into_iter()
            .map(|v| WeightVector::exact(v).unwrap().permuted(&sigma).unwrap().to_exact())
            .collect();
        moved.sort();
        prop_assert_eq!(collect(&b), moved);
    }

    #[test]
    fn all_trees_lie_in_the_union(a in arb_pcm()) {
        for tree in enumerate_spanning_trees(4).unwrap() {
            let w = tree_weight_vector(&a, &tree).unwrap();
            prop_assert!(is_efficient_geometric(&a, &w).unwrap());
        }
    }
}
