//! Efficiency (BCC) digraphs and the strong-connectivity test for
//! Pareto efficiency.
//!
//! For a matrix `A` and a positive `w`, the digraph has an arc `i → j` whenever
//! `w_i / w_j ≥ a_ij`. `w` is efficient exactly when that digraph is strongly
//! connected. A brute-force Hamiltonian cycle search and a random dominance
//! search are kept alongside as independent cross-checks.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ensure_dim, Error, Result};
use crate::pcm::{format_labels, Pcm};
use crate::rational::Rational;
use crate::weights::WeightVector;

/// Largest `n` accepted by [`hamiltonian_cycle_exists`].
pub const HAMILTONIAN_LIMIT: usize = 8;

/// A simple digraph on `{0..n}` stored as an adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<bool>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, adj: vec![false; n * n] }
    }

    /// Panics if an arc endpoint is out of range or a loop.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Digraph::new(n);
        for (i, j) in arcs {
            g.add_arc(i, j);
        }
        g
    }

    pub fn add_arc(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n && i != j, "invalid arc {i}->{j}");
        self.adj[i * self.n + j] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    /// All arcs in row-major order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n).filter(|&k| self.adj[k]).map(|k| (k / n, k % n)).collect()
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.has_arc(v, w))
    }
}

/// Tarjan's strongly connected components, iterative.
pub fn strongly_connected_components(g: &Digraph) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        // (vertex, next successor candidate)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if let Some(w) = (*next..n).find(|&w| g.has_arc(v, w)) {
                *next = w + 1;
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    components
}

pub fn strongly_connected(g: &Digraph) -> bool {
    strongly_connected_components(g).len() <= 1
}

/// A directed Hamiltonian cycle starting at vertex 0, if any. Exhaustive; `n ≤ 8`.
pub fn find_hamiltonian_cycle(g: &Digraph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > HAMILTONIAN_LIMIT {
        return Err(Error::DimensionTooLarge { n, limit: HAMILTONIAN_LIMIT });
    }
    if n < 2 {
        return Ok(Some((0..n).collect()));
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    Ok(extend_path(g, &mut path, &mut used).then_some(path))
}

fn extend_path(g: &Digraph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let last = *path.last().expect("path is never empty");
    if path.len() == g.n() {
        return g.has_arc(last, path[0]);
    }
    for next in g.successors(last).collect::<Vec<_>>() {
        if used[next] {
            continue;
        }
        used[next] = true;
        path.push(next);
        if extend_path(g, path, used) {
            return true;
        }
        path.pop();
        used[next] = false;
    }
    false
}

pub fn hamiltonian_cycle_exists(g: &Digraph) -> Result<bool> {
    Ok(find_hamiltonian_cycle(g)?.is_some())
}

/// The BCC digraph of a matrix and a weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BccDigraph {
    graph: Digraph,
    equality_pairs: Vec<(usize, usize)>,
}

impl BccDigraph {
    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.graph.arcs()
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.graph.has_arc(i, j)
    }

    /// Pairs `(i, j)`, `i < j`, estimated perfectly (arcs in both directions).
    pub fn equality_pairs(&self) -> &[(usize, usize)] {
        &self.equality_pairs
    }

    /// Arcs present in one direction only.
    pub fn one_way_arcs(&self) -> Vec<(usize, usize)> {
        self.arcs().into_iter().filter(|&(i, j)| !self.has_arc(j, i)).collect()
    }

    pub fn is_strongly_connected(&self) -> bool {
        strongly_connected(&self.graph)
    }
}

pub fn bcc_digraph(pcm: &Pcm, w: &WeightVector) -> Result<BccDigraph> {
    let n = pcm.n();
    ensure_dim(n, w.len())?;
    let mut graph = Digraph::new(n);
    let mut equality_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match w.compare_ratio(i, j, pcm.get(i, j)) {
                Ordering::Greater => graph.add_arc(i, j),
                Ordering::Less => graph.add_arc(j, i),
                Ordering::Equal => {
                    graph.add_arc(i, j);
                    graph.add_arc(j, i);
                    equality_pairs.push((i, j));
                }
            }
        }
    }
    Ok(BccDigraph { graph, equality_pairs })
}

pub fn is_efficient(pcm: &Pcm, w: &WeightVector) -> Result<bool> {
    Ok(bcc_digraph(pcm, w)?.is_strongly_connected())
}

/// Outcome of a Pareto dominance comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceVerdict {
    pub dominates: bool,
    /// First pair (row-major, 0-based) where the new vector is strictly closer.
    /// Present whenever `dominates` is true.
    pub strict_pair: Option<(usize, usize)>,
}

impl DominanceVerdict {
    fn no() -> Self {
        DominanceVerdict { dominates: false, strict_pair: None }
    }
}

/// Whether `w_new` approximates every `a_ij` at least as well as `w_old` and
/// one of them strictly better.
pub fn dominates(pcm: &Pcm, w_new: &WeightVector, w_old: &WeightVector) -> Result<DominanceVerdict> {
    let n = pcm.n();
    ensure_dim(n, w_new.len())?;
    ensure_dim(n, w_old.len())?;
    match (w_new.as_exact(), w_old.as_exact()) {
        (Some(new), Some(old)) => Ok(exact_dominance(pcm, new, old)),
        _ => Ok(float_dominance(pcm, &w_new.to_f64_vec(), &w_old.to_f64_vec(), 0.0)),
    }
}

fn exact_dominance(pcm: &Pcm, new: &[Rational], old: &[Rational]) -> DominanceVerdict {
    let n = pcm.n();
    let mut strict = None;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = pcm.get(i, j);
            let err_new = (a - &new[i] / &new[j]).abs();
            let err_old = (a - &old[i] / &old[j]).abs();
            match err_new.cmp(&err_old) {
                Ordering::Greater => return DominanceVerdict::no(),
                Ordering::Less if strict.is_none() => strict = Some((i, j)),
                _ => {}
            }
        }
    }
    DominanceVerdict { dominates: strict.is_some(), strict_pair: strict }
}

/// Float dominance; `slack` loosens the weak inequalities (0 for the literal test).
fn float_dominance(pcm: &Pcm, new: &[f64], old: &[f64], slack: f64) -> DominanceVerdict {
    let n = pcm.n();
    let mut strict = None;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = pcm.get(i, j).to_f64();
            let err_new = (a - new[i] / new[j]).abs();
            let err_old = (a - old[i] / old[j]).abs();
            if err_new > err_old + slack * a.max(1.0) {
                return DominanceVerdict::no();
            }
            if err_new < err_old && strict.is_none() {
                strict = Some((i, j));
            }
        }
    }
    DominanceVerdict { dominates: strict.is_some(), strict_pair: strict }
}

/// Grid steps for the log-perturbation exponents, cycled trial by trial.
///
/// Exponents are drawn from a finite grid so that two components receive the
/// identical factor with positive probability. Perfectly estimated pairs keep
/// their exact ratio only in that case. Finer steps reach dominators that lie
/// in thin cones around `w`.
pub const PERTURBATION_STEPS: [f64; 6] = [
    1.0 / 64.0,
    1.0 / 512.0,
    1.0 / 4096.0,
    1.0 / 32768.0,
    1.0 / 262144.0,
    1.0 / 2097152.0,
];
const PERTURBATION_HALF_WIDTH: i32 = 32;
const PREFILTER_SLACK: f64 = 1e-12;

/// Random multiplicative search for a vector dominating `w`.
///
/// Trial `t` uses the step `h = PERTURBATION_STEPS[t mod 6]`. It draws between
/// 2 and n levels `exp(k·h)` with `k` uniform on `{−32, …, 32}`, multiplies each
/// component by a randomly chosen level and normalizes. Sharing levels lets whole
/// blocks of alternatives move together, which is how dominators of vectors
/// with exactly reproduced ratios look. Candidates pass a float prefilter and are then re-checked with
/// [`dominates`] (exactly, when `w` is exact), so a returned vector always
/// dominates `w`.
pub fn find_dominator_sample(pcm: &Pcm, w: &WeightVector, trials: usize, seed: u64) -> Result<Option<WeightVector>> {
    let n = pcm.n();
    ensure_dim(n, w.len())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = w.to_f64_vec();
    let tables: Vec<Vec<f64>> = PERTURBATION_STEPS
        .iter()
        .map(|h| (-PERTURBATION_HALF_WIDTH..=PERTURBATION_HALF_WIDTH).map(|k| (k as f64 * h).exp()).collect())
        .collect();
    let mut steps = vec![0usize; n];
    let mut levels = Vec::with_capacity(n);
    let mut candidate = vec![0.0; n];
    for trial in 0..trials.max(1) {
        let factors = &tables[trial % tables.len()];
        levels.clear();
        for _ in 0..rng.gen_range(2..=n.max(2)) {
            levels.push(rng.gen_range(0..factors.len()));
        }
        for s in steps.iter_mut() {
            *s = levels[rng.gen_range(0..levels.len())];
        }
        for i in 0..n {
            candidate[i] = base[i] * factors[steps[i]];
        }
        if !float_dominance(pcm, &candidate, &base, PREFILTER_SLACK).dominates
            && !float_dominance_ties(pcm, &candidate, &base, &steps)
        {
            continue;
        }
        let proposal = match w.as_exact() {
            Some(exact) => {
                let components = (0..n)
                    .map(|i| &exact[i] * &Rational::from_f64_exact(factors[steps[i]]).expect("finite"))
                    .collect();
                WeightVector::exact(components)?.normalized()
            }
            None => WeightVector::float(candidate.clone())?.normalized(),
        };
        if dominates(pcm, &proposal, w)?.dominates {
            return Ok(Some(proposal));
        }
    }
    Ok(None)
}

/// Float prefilter that treats pairs sharing a factor as exactly unchanged.
fn float_dominance_ties(pcm: &Pcm, new: &[f64], old: &[f64], steps: &[usize]) -> bool {
    let n = pcm.n();
    let mut strict = false;
    for i in 0..n {
        for j in 0..n {
            if i == j || steps[i] == steps[j] {
                continue;
            }
            let a = pcm.get(i, j).to_f64();
            let err_new = (a - new[i] / new[j]).abs();
            let err_old = (a - old[i] / old[j]).abs();
            if err_new > err_old + PREFILTER_SLACK * a.max(1.0) {
                return false;
            }
            strict |= err_new < err_old;
        }
    }
    strict
}

/// Renders arcs as `1->2, 3->1, …` (1-based).
pub fn format_arcs(arcs: &[(usize, usize)]) -> String {
    arcs.iter().map(|&(i, j)| format!("{}->{}", i + 1, j + 1)).collect::<Vec<_>>().join(", ")
}

/// Renders unordered pairs as `{1,2}, …` (1-based).
pub fn format_pairs(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|&(i, j)| format_labels(&[i, j]).replace('(', "{").replace(')', "}"))
        .collect::<Vec<_>>()
        .join(", ")
}
