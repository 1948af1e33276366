//! Spanning trees of the complete comparison graph and the weight vectors
//! they determine.
//!
//! A spanning tree of known comparisons fixes a unique consistent completion,
//! so each tree yields one weight vector that reproduces its `n − 1` entries
//! exactly.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{ensure_dim, Error, Result};
use crate::pcm::{format_labels, CanonicalCycle, IncompletePcm, Pcm, Permutation};
use crate::rational::Rational;
use crate::weights::WeightVector;

/// Largest `n` accepted by the enumerators.
pub const ENUMERATION_LIMIT: usize = 6;

/// An undirected spanning tree on `{0..n}` with sorted edges `(i, j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::NotASpanningTree(format!("invalid edge {}", format_labels(&[a, b]))));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if normalized.len() + 1 != n || !is_forest(n, &normalized) {
            return Err(Error::NotASpanningTree(format!("{} edges on {n} vertices do not form a tree", normalized.len())));
        }
        Ok(SpanningTree { n, edges: normalized })
    }

    /// Every edge touches `center`.
    pub fn star(n: usize, center: usize) -> Result<Self> {
        SpanningTree::new(n, (0..n).filter(|&v| v != center).map(|v| (center, v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

impl fmt::Display for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

fn check_enumeration_size(n: usize) -> Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::DimensionTooLarge { n, limit: ENUMERATION_LIMIT });
    }
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok(())
}

/// All labeled spanning trees of `K_n`, ordered by their sorted edge lists.
pub fn enumerate_spanning_trees(n: usize) -> Result<Vec<SpanningTree>> {
    check_enumeration_size(n)?;
    let all_edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let k = n - 1;
    let mut trees = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let edges: Vec<(usize, usize)> = pick.iter().map(|&e| all_edges[e]).collect();
        if is_forest(n, &edges) {
            trees.push(SpanningTree { n, edges });
        }
        // advance to the next k-combination in lexicographic order
        let Some(pos) = (0..k).rev().find(|&p| pick[p] < all_edges.len() - k + p) else {
            break;
        };
        pick[pos] += 1;
        for p in pos + 1..k {
            pick[p] = pick[p - 1] + 1;
        }
    }
    Ok(trees)
}

/// A Hamiltonian path through all alternatives, as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPath(Vec<usize>);

impl LabeledPath {
    /// `sequence` must list every vertex of `{0..n}` once.
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        Permutation::new(sequence.clone()).map_err(|_| {
            Error::NotASpanningTree(format!("{} is not a path through every alternative", format_labels(&sequence)))
        })?;
        Ok(LabeledPath(sequence))
    }

    pub fn sequence(&self) -> &[usize] {
        &self.0
    }

    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// The same undirected path listed with its smaller endpoint first.
    pub fn canonical(&self) -> Self {
        match (self.0.first(), self.0.last()) {
            (Some(first), Some(last)) if first > last => LabeledPath(self.0.iter().rev().copied().collect()),
            _ => self.clone(),
        }
    }

    pub fn to_tree(&self) -> SpanningTree {
        SpanningTree::new(self.0.len(), self.0.windows(2).map(|w| (w[0], w[1]))).expect("a path is a spanning tree")
    }
}

impl fmt::Display for LabeledPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_labels(&self.0))
    }
}

/// One path per undirected Hamiltonian path of `K_n`, smaller endpoint first,
/// in lexicographic order.
pub fn enumerate_labeled_paths(n: usize) -> Result<Vec<LabeledPath>> {
    check_enumeration_size(n)?;
    Ok(Permutation::all(n)
        .into_iter()
        .map(|p| p.mapping().to_vec())
        .filter(|seq| seq[0] < seq[n - 1])
        .map(LabeledPath)
        .collect())
}

/// The four paths left by deleting one edge of `cycle`, in rotation order:
/// path `k` starts at the `k`-th vertex of the listing.
pub fn paths_of_cycle(cycle: CanonicalCycle) -> [LabeledPath; 4] {
    let v = cycle.vertices();
    std::array::from_fn(|k| LabeledPath((0..4).map(|step| v[(k + step) % 4]).collect()))
}

/// Keeps only the entries on the tree's edges (and the diagonal).
pub fn restrict(pcm: &Pcm, tree: &SpanningTree) -> Result<IncompletePcm> {
    let n = pcm.n();
    ensure_dim(n, tree.n())?;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (i == j || tree.contains_edge(i, j)).then(|| pcm.get(i, j).clone()))
                .collect()
        })
        .collect();
    IncompletePcm::new(rows)
}

/// The normalized weight vector reproducing `a_ij` on every tree edge.
///
/// The last alternative is fixed at 1 and values are propagated along the
/// tree with `w_child = a_{child,parent} · w_parent`.
pub fn tree_weight_vector(pcm: &Pcm, tree: &SpanningTree) -> Result<WeightVector> {
    let n = pcm.n();
    ensure_dim(n, tree.n())?;
    let adj = tree.neighbours();
    let root = n - 1;
    let mut weights: Vec<Option<Rational>> = vec![None; n];
    weights[root] = Some(Rational::one());
    let mut queue = VecDeque::from([root]);
    while let Some(parent) = queue.pop_front() {
        let parent_weight = weights[parent].clone().expect("visited vertex has a weight");
        for &child in &adj[parent] {
            if weights[child].is_none() {
                weights[child] = Some(pcm.get(child, parent) * &parent_weight);
                queue.push_back(child);
            }
        }
    }
    let raw = weights.into_iter().map(|w| w.expect("tree spans every vertex")).collect();
    Ok(WeightVector::exact(raw)?.normalized())
}

/// Pairs `(i, j)`, `i < j`, where `w_i / w_j = a_ij` exactly.
pub fn reproduced_pairs(pcm: &Pcm, w: &WeightVector) -> Result<Vec<(usize, usize)>> {
    let n = pcm.n();
    ensure_dim(n, w.len())?;
    Ok((0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| w.compare_ratio(i, j, pcm.get(i, j)).is_eq())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bcc::is_efficient;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        Rational::parse(s).unwrap()
    }

    fn base_matrix() -> Pcm {
        Pcm::from_upper(4, &["1", "5", "7", "2", "8", "1/3"].map(r)).unwrap()
    }

    fn path(labels: &[usize]) -> SpanningTree {
        LabeledPath::new(labels.iter().map(|l| l - 1).collect()).unwrap().to_tree()
    }

    fn strings(w: &WeightVector) -> Vec<String> {
        w.to_strings()
    }

    #[test]
    fn cayley_counts() {
        assert_eq!(enumerate_spanning_trees(2).unwrap().len(), 1);
        assert_eq!(enumerate_spanning_trees(3).unwrap().len(), 3);
        assert_eq!(enumerate_spanning_trees(4).unwrap().len(), 16);
        assert_eq!(enumerate_spanning_trees(5).unwrap().len(), 125);
        assert_eq!(enumerate_spanning_trees(6).unwrap().len(), 1296);
        assert!(matches!(enumerate_spanning_trees(7), Err(Error::DimensionTooLarge { n: 7, limit: 6 })));
        let trees = enumerate_spanning_trees(4).unwrap();
        assert!(trees.windows(2).all(|w| w[0].edges() < w[1].edges()));
    }

    #[test]
    fn path_counts_and_cycle_groups() {
        assert_eq!(enumerate_labeled_paths(3).unwrap().len(), 3);
        let paths = enumerate_labeled_paths(4).unwrap();
        assert_eq!(paths.len(), 12);
        for cycle in CanonicalCycle::ALL {
            let closing = paths
                .iter()
                .filter(|p| {
                    let s = p.sequence();
                    let mut edges: Vec<(usize, usize)> = p.to_tree().edges().to_vec();
                    edges.push((s[0].min(s[3]), s[0].max(s[3])));
                    edges.sort_unstable();
                    let mut cycle_edges = cycle.edges().to_vec();
                    cycle_edges.sort_unstable();
                    edges == cycle_edges
                })
                .count();
            assert_eq!(closing, 4);
        }
    }

    #[test]
    fn cycle_paths_follow_rotation_order() {
        let labels = |c| paths_of_cycle(c).map(|p| p.labels());
        assert_eq!(labels(CanonicalCycle::C1234), [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]]);
        assert_eq!(labels(CanonicalCycle::C1423), [[1, 4, 2, 3], [4, 2, 3, 1], [2, 3, 1, 4], [3, 1, 4, 2]]);
        assert_eq!(labels(CanonicalCycle::C1342), [[1, 3, 4, 2], [3, 4, 2, 1], [4, 2, 1, 3], [2, 1, 3, 4]]);
    }

    #[test]
    fn restriction_keeps_tree_entries() {
        let a = base_matrix();
        let tree = path(&[1, 2, 3, 4]);
        let inc = restrict(&a, &tree).unwrap();
        assert_eq!(inc.get(0, 1), Some(&r("1")));
        assert_eq!(inc.get(1, 2), Some(&r("2")));
        assert_eq!(inc.get(2, 3), Some(&r("1/3")));
        assert_eq!(inc.get(3, 2), Some(&r("3")));
        assert_eq!(inc.get(0, 2), None);
        assert_eq!(inc.representing_graph(), tree.edges());

        let star = SpanningTree::star(4, 0).unwrap();
        let inc = restrict(&a, &star).unwrap();
        assert_eq!(inc.representing_graph(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn example_tree_vectors() {
        let a = base_matrix();
        assert_eq!(strings(&tree_weight_vector(&a, &path(&[1, 2, 3, 4])).unwrap()), ["1/4", "1/4", "1/8", "3/8"]);
        assert_eq!(strings(&tree_weight_vector(&a, &path(&[2, 3, 4, 1])).unwrap()), ["7/9", "2/27", "1/27", "1/9"]);
        assert_eq!(strings(&tree_weight_vector(&a, &path(&[1, 4, 2, 3])).unwrap()), ["7/20", "2/5", "1/5", "1/20"]);
        assert_eq!(
            tree_weight_vector(&a, &SpanningTree::star(3, 0).unwrap()).unwrap_err(),
            Error::DimensionMismatch { expected: 4, found: 3 }
        );
    }

    #[test]
    fn rejects_non_trees() {
        assert!(SpanningTree::new(4, [(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(SpanningTree::new(4, [(0, 1), (1, 2)]).is_err());
        assert!(SpanningTree::new(3, [(0, 0), (1, 2)]).is_err());
        assert!(LabeledPath::new(vec![0, 1, 1]).is_err());
    }

    fn arb_pcm4() -> impl Strategy<Value = Pcm> {
        proptest::collection::vec((1i64..=9, 1i64..=9), 6).prop_map(|pairs| {
            let upper: Vec<Rational> = pairs.into_iter().map(|(p, q)| Rational::new(p, q)).collect();
            Pcm::from_upper(4, &upper).unwrap()
        })
    }

    proptest! {
        #[test]
        fn tree_vectors_are_efficient_and_reproduce_edges(a in arb_pcm4()) {
            for tree in enumerate_spanning_trees(4).unwrap() {
                let w = tree_weight_vector(&a, &tree).unwrap();
                prop_assert!(w.is_normalized());
                prop_assert!(is_efficient(&a, &w).unwrap());
                let reproduced = reproduced_pairs(&a, &w).unwrap();
                for edge in tree.edges() {
                    prop_assert!(reproduced.contains(edge));
                }
            }
        }

        #[test]
        fn consistent_tree_vectors_coincide(weights in proptest::collection::vec(1i64..50, 4)) {
            let ws: Vec<Rational> = weights.into_iter().map(Rational::from_integer).collect();
            let a = Pcm::from_ratios(&ws).unwrap();
            let expected = a.consistent_weights().unwrap();
            for tree in enumerate_spanning_trees(4).unwrap() {
                prop_assert_eq!(tree_weight_vector(&a, &tree).unwrap(), expected.clone());
            }
        }
    }
}
