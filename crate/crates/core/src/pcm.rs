//! Pairwise comparison matrices and their triad / cycle algebra.
//!
//! Indices in the programmatic API are 0-based. Text surfaces (errors, JSON,
//! `Display`) use 1-based alternative labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_dim, ensure_four, Error, Result};
use crate::rational::{cmp_one, Rational};

/// The four triads of a 4×4 matrix, ascending.
pub const TRIADS: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

/// One of the three undirected Hamiltonian 4-cycles on four alternatives,
/// identified by its fixed listing `(1,2,3,4)`, `(1,4,2,3)` or `(1,3,4,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CanonicalCycle {
    #[serde(rename = "1234")]
    C1234,
    #[serde(rename = "1423")]
    C1423,
    #[serde(rename = "1342")]
    C1342,
}

impl CanonicalCycle {
    pub const ALL: [CanonicalCycle; 3] = [CanonicalCycle::C1234, CanonicalCycle::C1423, CanonicalCycle::C1342];

    /// 0-based vertex listing.
    pub const fn vertices(self) -> [usize; 4] {
        match self {
            CanonicalCycle::C1234 => [0, 1, 2, 3],
            CanonicalCycle::C1423 => [0, 3, 1, 2],
            CanonicalCycle::C1342 => [0, 2, 3, 1],
        }
    }

    pub const fn index(self) -> usize {
        match self {
            CanonicalCycle::C1234 => 0,
            CanonicalCycle::C1423 => 1,
            CanonicalCycle::C1342 => 2,
        }
    }

    /// Undirected edges `(i, j)` with `i < j`, in listing order.
    pub fn edges(self) -> [(usize, usize); 4] {
        let v = self.vertices();
        std::array::from_fn(|k| {
            let (a, b) = (v[k], v[(k + 1) % 4]);
            (a.min(b), a.max(b))
        })
    }

    /// The cycle whose listing is exactly `labels` (1-based).
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        CanonicalCycle::ALL
            .into_iter()
            .find(|c| c.vertices().iter().map(|v| v + 1).eq(labels.iter().copied()))
            .ok_or_else(|| Error::NotACanonicalCycle(format!("{labels:?}")))
    }

    pub fn label(self) -> &'static str {
        match self {
            CanonicalCycle::C1234 => "(1,2,3,4)",
            CanonicalCycle::C1423 => "(1,4,2,3)",
            CanonicalCycle::C1342 => "(1,3,4,2)",
        }
    }
}

impl fmt::Display for CanonicalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Formats 0-based indices as a 1-based tuple such as `(1,2,3)`.
pub fn format_labels(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", inner.join(","))
}

/// A bijection on `{0..n}`. Applying it to a matrix gives `b_ij = a_{σ(i),σ(j)}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n || seen[m] {
                return Err(Error::NotAPermutation(format!("{mapping:?}")));
            }
            seen[m] = true;
        }
        Ok(Permutation(mapping))
    }

    /// From a 1-based sequence such as `[1,3,4,2]`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::NotAPermutation(format!("{labels:?}")));
        }
        Permutation::new(labels.iter().map(|l| l - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &m)| i == m)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.0
    }

    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|m| m + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &m) in self.0.iter().enumerate() {
            inv[m] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: first `other`, then `self` on the result index.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&m| self.0[m]).collect())
    }

    /// All permutations of `{0..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation(current.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.labels().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

/// A positive reciprocal matrix of exact judgments.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pcm {
    n: usize,
    entries: Vec<Rational>,
}

impl Pcm {
    /// Validates a full grid: square, positive, unit diagonal and exact reciprocity.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NonSquare("matrix has no rows".into()));
        }
        if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::NonSquare(format!("row {} has {} entries, expected {n}", r + 1, row.len())));
        }
        let entries: Vec<Rational> = rows.into_iter().flatten().collect();
        for i in 0..n {
            for j in 0..n {
                if !entries[i * n + j].is_positive() {
                    return Err(Error::NonPositiveEntry(i + 1, j + 1));
                }
            }
        }
        for i in 0..n {
            for j in 0..=i {
                let product = &entries[i * n + j] * &entries[j * n + i];
                if !product.is_one() {
                    return Err(Error::ReciprocityViolation(i + 1, j + 1));
                }
            }
        }
        Ok(Pcm { n, entries })
    }

    /// Builds a matrix from its strict upper triangle, row by row
    /// (`a_12, a_13, …, a_1n, a_23, …`). Lower entries are the reciprocals.
    pub fn from_upper(n: usize, upper: &[Rational]) -> Result<Self> {
        ensure_dim(n * n.saturating_sub(1) / 2, upper.len())?;
        let mut entries = vec![Rational::one(); n * n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let a = it.next().expect("length checked");
                if !a.is_positive() {
                    return Err(Error::NonPositiveEntry(i + 1, j + 1));
                }
                entries[j * n + i] = a.recip();
                entries[i * n + j] = a.clone();
            }
        }
        Ok(Pcm { n, entries })
    }

    /// The consistent matrix `a_ij = w_i / w_j`.
    pub fn from_ratios(weights: &[Rational]) -> Result<Self> {
        if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight(i + 1));
        }
        let n = weights.len();
        let entries = (0..n * n).map(|k| &weights[k / n] / &weights[k % n]).collect();
        Ok(Pcm { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_ij`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    /// Strict upper triangle in row order.
    pub fn upper(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for i in 0..self.n {
            for j in i + 1..self.n {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    /// Returns a copy with `a_ij` (and its reciprocal) replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Rational) -> Result<Self> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::RepeatedIndex(i + 1));
        }
        if !value.is_positive() {
            return Err(Error::NonPositiveEntry(i + 1, j + 1));
        }
        let mut out = self.clone();
        out.entries[j * self.n + i] = value.recip();
        out.entries[i * self.n + j] = value;
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect();
        Pcm { n, entries }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i + 1, n: self.n })
        }
    }

    fn check_distinct(&self, seq: &[usize]) -> Result<()> {
        for (k, &v) in seq.iter().enumerate() {
            self.check_index(v)?;
            if seq[..k].contains(&v) {
                return Err(Error::RepeatedIndex(v + 1));
            }
        }
        Ok(())
    }

    /// `a_ij · a_jk · a_ki`; equals one exactly when the triad is consistent.
    pub fn triad_product(&self, triad: [usize; 3]) -> Result<Rational> {
        self.check_distinct(&triad)?;
        Ok(self.closed_walk_product(&triad))
    }

    /// Product of entries along the closed walk `c_0 → c_1 → … → c_0`.
    pub fn cycle_product(&self, cycle: &[usize]) -> Result<Rational> {
        self.check_distinct(cycle)?;
        if cycle.len() < 3 {
            return Err(Error::TooShort(cycle.len()));
        }
        Ok(self.closed_walk_product(cycle))
    }

    pub(crate) fn closed_walk_product(&self, cycle: &[usize]) -> Rational {
        let len = cycle.len();
        (0..len).map(|k| self.get(cycle[k], cycle[(k + 1) % len]).clone()).product()
    }

    /// Canonical triads whose product is exactly one. 4×4 only.
    pub fn consistent_triads(&self) -> Result<Vec<[usize; 3]>> {
        ensure_four(self.n)?;
        Ok(TRIADS.into_iter().filter(|t| self.closed_walk_product(t).is_one()).collect())
    }

    /// Canonical 4-cycles whose product is exactly one. 4×4 only.
    pub fn consistent_four_cycles(&self) -> Result<Vec<CanonicalCycle>> {
        ensure_four(self.n)?;
        Ok(CanonicalCycle::ALL
            .into_iter()
            .filter(|c| self.closed_walk_product(&c.vertices()).is_one())
            .collect())
    }

    pub fn is_consistent(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if cmp_one(&self.closed_walk_product(&[i, j, k])).is_ne() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The normalized `w` with `w_i / w_j = a_ij`, rooted at the last alternative.
    pub fn consistent_weights(&self) -> Result<crate::weights::WeightVector> {
        if !self.is_consistent() {
            return Err(Error::NotConsistent);
        }
        let root = self.n - 1;
        let raw: Vec<Rational> = (0..self.n).map(|i| self.get(i, root).clone()).collect();
        crate::weights::WeightVector::exact(raw).map(|w| w.normalized())
    }

    /// `b_ij = a_{σ(i),σ(j)}`.
    pub fn apply_permutation(&self, perm: &Permutation) -> Result<Self> {
        ensure_dim(self.n, perm.len())?;
        let n = self.n;
        let entries = (0..n * n)
            .map(|k| self.get(perm.apply(k / n), perm.apply(k % n)).clone())
            .collect();
        Ok(Pcm { n, entries })
    }

    /// Rows as strings, the on-disk cell format.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows().map(|row| row.iter().map(ToString::to_string).collect()).collect()
    }
}

impl fmt::Debug for Pcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_string_rows()).finish()
    }
}

impl fmt::Display for Pcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_string_rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", cells.join("  "))?;
        }
        Ok(())
    }
}

/// Parses a grid of numeral strings into a validated matrix.
pub fn parse_pcm<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Pcm> {
    let n = rows.len();
    if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
        return Err(Error::NonSquare(format!("row {} has {} entries, expected {n}", r + 1, row.len())));
    }
    let parsed = rows
        .iter()
        .map(|row| row.iter().map(|cell| Rational::parse(cell.as_ref())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Pcm::new(parsed)
}

/// A pairwise comparison matrix with missing entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompletePcm {
    n: usize,
    entries: Vec<Option<Rational>>,
}

impl IncompletePcm {
    /// Validates a grid where `None` marks a missing comparison.
    pub fn new(rows: Vec<Vec<Option<Rational>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare("incomplete matrix is not square".into()));
        }
        let entries: Vec<Option<Rational>> = rows.into_iter().flatten().collect();
        for i in 0..n {
            for j in 0..=i {
                match (&entries[i * n + j], &entries[j * n + i]) {
                    (Some(a), Some(b)) => {
                        if !a.is_positive() {
                            return Err(Error::NonPositiveEntry(i + 1, j + 1));
                        }
                        if !(a * b).is_one() {
                            return Err(Error::ReciprocityViolation(i + 1, j + 1));
                        }
                    }
                    (None, None) if i != j => {}
                    _ => return Err(Error::ReciprocityViolation(i + 1, j + 1)),
                }
            }
        }
        Ok(IncompletePcm { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        self.entries[i * self.n + j].as_ref()
    }

    /// Edges `(i, j)`, `i < j`, of known off-diagonal comparisons, sorted.
    pub fn representing_graph(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j).is_some() {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        Rational::parse(s).unwrap()
    }

    fn example3() -> Pcm {
        parse_pcm(&[
            vec!["1", "1", "5", "7"],
            vec!["1", "1", "2", "8"],
            vec!["1/5", "1/2", "1", "1/3"],
            vec!["1/7", "1/8", "3", "1"],
        ])
        .unwrap()
    }

    #[test]
    fn parses_example_matrix() {
        let a = example3();
        assert_eq!(a.n(), 4);
        assert_eq!(a.get(0, 2), &r("5"));
        assert_eq!(a.get(3, 2), &r("3"));
        assert_eq!(a.upper(), ["1", "5", "7", "2", "8", "1/3"].map(r).to_vec());
    }

    #[test]
    fn one_by_one_is_valid() {
        let a = parse_pcm(&[vec!["1"]]).unwrap();
        assert!(a.is_consistent());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_pcm(&[vec!["1", "2"], vec!["1/3", "1"]]).unwrap_err(),
            Error::ReciprocityViolation(2, 1)
        );
        assert!(matches!(parse_pcm(&[vec!["1", "2"]]), Err(Error::NonSquare(_))));
        assert!(matches!(parse_pcm::<&str>(&[]), Err(Error::NonSquare(_))));
        assert_eq!(
            parse_pcm(&[vec!["1", "-2"], vec!["-1/2", "1"]]).unwrap_err(),
            Error::NonPositiveEntry(1, 2)
        );
        assert_eq!(parse_pcm(&[vec!["1", "0"], vec!["1", "1"]]).unwrap_err(), Error::NonPositiveEntry(1, 2));
        assert!(matches!(parse_pcm(&[vec!["1", "x"], vec!["1", "1"]]), Err(Error::BadNumeral(_))));
        assert_eq!(parse_pcm(&[vec!["2", "1"], vec!["1", "1/2"]]).unwrap_err(), Error::ReciprocityViolation(1, 1));
    }

    #[test]
    fn decimal_cells_are_exact() {
        let a = parse_pcm(&[vec!["1", "0.25"], vec!["4", "1"]]).unwrap();
        assert_eq!(a.get(0, 1), &Rational::new(1, 4));
    }

    #[test]
    fn triad_and_cycle_products() {
        let a = example3();
        assert_eq!(a.triad_product([0, 1, 2]).unwrap(), r("2/5"));
        assert_eq!(a.cycle_product(&[0, 1, 2, 3]).unwrap(), r("2/21"));
        assert_eq!(a.cycle_product(&[0, 3, 1, 2]).unwrap(), r("7/20"));
        assert_eq!(a.triad_product([0, 0, 2]).unwrap_err(), Error::RepeatedIndex(1));
        assert_eq!(a.triad_product([0, 1, 4]).unwrap_err(), Error::IndexOutOfRange { index: 5, n: 4 });
        assert_eq!(a.cycle_product(&[0, 1]).unwrap_err(), Error::TooShort(2));
    }

    #[test]
    fn flip_matrix_four_cycle_is_consistent() {
        let a = Pcm::from_upper(4, &["1", "2", "6", "1", "3", "1"].map(r)).unwrap();
        assert!(a.cycle_product(&[0, 2, 1, 3]).unwrap().is_one());
    }

    #[test]
    fn consistency_queries() {
        let a = example3();
        assert!(!a.is_consistent());
        assert!(a.consistent_triads().unwrap().is_empty());
        assert!(a.consistent_four_cycles().unwrap().is_empty());

        let b4 = a.with_entry(0, 1, r("5/2")).unwrap().with_entry(1, 3, r("14/5")).unwrap();
        assert_eq!(b4.consistent_triads().unwrap(), vec![[0, 1, 2], [0, 1, 3]]);
        assert_eq!(b4.consistent_four_cycles().unwrap(), vec![CanonicalCycle::C1423]);

        let b5 = b4.with_entry(2, 3, r("7/5")).unwrap();
        assert!(b5.is_consistent());
        assert_eq!(b5.consistent_triads().unwrap().len(), 4);
        assert_eq!(b5.consistent_four_cycles().unwrap().len(), 3);

        let two = parse_pcm(&[vec!["1", "3"], vec!["1/3", "1"]]).unwrap();
        assert!(two.is_consistent());
        assert_eq!(two.consistent_triads().unwrap_err(), Error::UnsupportedDimension(2));
    }

    #[test]
    fn consistent_weights_examples() {
        let b5 = Pcm::from_upper(4, &["5/2", "5", "7", "2", "14/5", "7/5"].map(r)).unwrap();
        let w = b5.consistent_weights().unwrap();
        assert_eq!(w.as_exact().unwrap(), ["35/61", "14/61", "7/61", "5/61"].map(r));

        let ones = Pcm::from_upper(4, &[Rational::one(), Rational::one(), Rational::one(), Rational::one(), Rational::one(), Rational::one()]).unwrap();
        assert_eq!(ones.consistent_weights().unwrap().as_exact().unwrap(), [r("1/4"), r("1/4"), r("1/4"), r("1/4")]);

        let two = parse_pcm(&[vec!["1", "3"], vec!["1/3", "1"]]).unwrap();
        assert_eq!(two.consistent_weights().unwrap().as_exact().unwrap(), [r("3/4"), r("1/4")]);
        assert_eq!(example3().consistent_weights().unwrap_err(), Error::NotConsistent);
    }

    #[test]
    fn permutation_basics() {
        let a = example3();
        assert_eq!(a.apply_permutation(&Permutation::identity(4)).unwrap(), a);

        // swapping the first two alternatives
        let swap = Permutation::from_labels(&[2, 1, 3, 4]).unwrap();
        let b = a.apply_permutation(&swap).unwrap();
        assert_eq!(b.get(0, 1), &a.get(0, 1).recip());
        assert_eq!(b.get(0, 2), a.get(1, 2));
        assert_eq!(b.get(1, 3), a.get(0, 3));

        let p = Permutation::from_labels(&[3, 1, 4, 2]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let back = a.apply_permutation(&p).unwrap().apply_permutation(&p.inverse()).unwrap();
        assert_eq!(back, a);
        assert_eq!(a.apply_permutation(&Permutation::identity(3)).unwrap_err(), Error::DimensionMismatch { expected: 4, found: 3 });
        assert!(Permutation::from_labels(&[1, 1, 2]).is_err());
        assert_eq!(p.to_string(), "[3,1,4,2]");
    }

    #[test]
    fn all_permutations_are_lexicographic() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], Permutation::identity(4));
    }

    #[test]
    fn canonical_cycle_listing() {
        assert_eq!(CanonicalCycle::from_labels(&[1, 4, 2, 3]).unwrap(), CanonicalCycle::C1423);
        assert!(CanonicalCycle::from_labels(&[1, 2, 4, 3]).is_err());
        assert_eq!(CanonicalCycle::C1342.edges(), [(0, 2), (2, 3), (1, 3), (0, 1)]);
    }

    #[test]
    fn incomplete_matrix_graph() {
        let a = IncompletePcm::new(vec![
            vec![Some(r("1")), Some(r("2")), None],
            vec![Some(r("1/2")), Some(r("1")), Some(r("3"))],
            vec![None, Some(r("1/3")), Some(r("1"))],
        ])
        .unwrap();
        assert_eq!(a.representing_graph(), vec![(0, 1), (1, 2)]);
        let broken = IncompletePcm::new(vec![vec![Some(r("1")), Some(r("2"))], vec![None, Some(r("1"))]]);
        assert_eq!(broken.unwrap_err(), Error::ReciprocityViolation(2, 1));
    }
}
