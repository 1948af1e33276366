//! Seeded random instances: matrices of a requested perturbation class and
//! exact weight vectors spread over the simplex and around the tetrahedra.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{classify, PerturbTag, Tetrahedron};
use crate::pcm::Pcm;
use crate::rational::Rational;
use crate::weights::WeightVector;

/// Attempts before [`generate_pcm`] gives up.
pub const MAX_ATTEMPTS: usize = 10_000;

/// Denominator of the lattice used for simplex sampling.
pub const LATTICE: i64 = 1 << 20;

const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
/// Disjoint edge pairs of `K_4`.
const MATCHINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

/// A generator seeded from `seed` on a stream private to `stream`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn stream_of(tag: PerturbTag) -> u64 {
    PerturbTag::ALL.iter().position(|t| *t == tag).expect("tag is listed") as u64 + 1
}

/// `s · 2^k` with `s ∈ {1..9}` or its reciprocal and `k ∈ {−1, 0, 1}`.
fn scale_value(rng: &mut impl Rng) -> Rational {
    let s = Rational::from_integer(rng.gen_range(1..=9));
    let s = if rng.gen_bool(0.5) { s } else { s.recip() };
    match rng.gen_range(-1..=1) {
        -1 => s * Rational::new(1, 2),
        1 => s * Rational::from_integer(2),
        _ => s,
    }
}

/// A random factor `p/q ≠ 1` with `p, q ∈ {1..9}`.
fn perturbation(rng: &mut impl Rng) -> Rational {
    loop {
        let f = Rational::new(rng.gen_range(1..=9), rng.gen_range(1..=9));
        if !f.is_one() {
            return f;
        }
    }
}

fn random_consistent(rng: &mut impl Rng) -> Pcm {
    let weights: Vec<Rational> = (0..4).map(|_| Rational::from_integer(rng.gen_range(1..=99))).collect();
    Pcm::from_ratios(&weights).expect("positive weights")
}

fn perturbed(base: &Pcm, changes: &[((usize, usize), Rational)]) -> Pcm {
    changes.iter().fold(base.clone(), |m, ((i, j), f)| {
        let value = m.get(*i, *j) * f;
        m.with_entry(*i, *j, value).expect("positive entry")
    })
}

fn candidate(rng: &mut impl Rng, tag: PerturbTag) -> Pcm {
    match tag {
        PerturbTag::Triple => {
            let upper: Vec<Rational> = (0..6).map(|_| scale_value(rng)).collect();
            Pcm::from_upper(4, &upper).expect("positive entries")
        }
        PerturbTag::Consistent => random_consistent(rng),
        PerturbTag::Simple => {
            let edge = *EDGES.choose(rng).expect("non-empty");
            perturbed(&random_consistent(rng), &[(edge, perturbation(rng))])
        }
        PerturbTag::DoubleTriad => {
            // two edges sharing an endpoint lie in a common triad
            let (e1, e2) = loop {
                let picks: Vec<_> = EDGES.choose_multiple(rng, 2).copied().collect();
                let (a, b) = (picks[0], picks[1]);
                if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                    break (a, b);
                }
            };
            let base = random_consistent(rng);
            perturbed(&base, &[(e1, perturbation(rng)), (e2, perturbation(rng))])
        }
        PerturbTag::DoubleOneCycle => {
            let [e1, e2] = *MATCHINGS.choose(rng).expect("non-empty");
            let base = random_consistent(rng);
            perturbed(&base, &[(e1, perturbation(rng)), (e2, perturbation(rng))])
        }
        PerturbTag::DoubleTwoCycles => {
            // equal or reciprocal factors on a disjoint pair make a second cycle consistent
            let [e1, e2] = *MATCHINGS.choose(rng).expect("non-empty");
            let f = perturbation(rng);
            let g = if rng.gen_bool(0.5) { f.clone() } else { f.recip() };
            perturbed(&random_consistent(rng), &[(e1, f), (e2, g)])
        }
    }
}

/// A random 4×4 matrix whose classification is `tag`, deterministic in `seed`.
pub fn generate_pcm(seed: u64, tag: PerturbTag) -> Result<Pcm> {
    let mut rng = rng_for(seed, stream_of(tag));
    for _ in 0..MAX_ATTEMPTS {
        let pcm = candidate(&mut rng, tag);
        if classify(&pcm).map(|c| c.tag) == Ok(tag) {
            return Ok(pcm);
        }
    }
    Err(Error::GenerationFailed(format!("no {tag} matrix after {MAX_ATTEMPTS} attempts")))
}

/// Uniform point of the lattice simplex `{k / 2^20}` with positive components.
pub fn uniform_simplex_weights(rng: &mut impl Rng, n: usize) -> WeightVector {
    let mut cuts: Vec<i64> = Vec::with_capacity(n + 1);
    while cuts.len() < n - 1 {
        let c = rng.gen_range(1..LATTICE);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(0);
    cuts.push(LATTICE);
    cuts.sort_unstable();
    let components = cuts.windows(2).map(|w| Rational::new(w[1] - w[0], LATTICE)).collect();
    WeightVector::exact(components).expect("gaps are positive")
}

/// A point on or near one of the tetrahedra: a vertex, an edge, face or
/// interior point, optionally nudged off by a tiny multiplicative factor.
pub fn near_tetrahedron_weights(rng: &mut impl Rng, tetrahedra: &[Tetrahedron; 3]) -> WeightVector {
    let tet = tetrahedra.choose(rng).expect("three tetrahedra");
    let support = rng.gen_range(1..=4);
    let mut chosen = [0usize, 1, 2, 3];
    chosen.shuffle(rng);
    let lambdas: Vec<Rational> = match uniform_simplex_weights(rng, support).as_exact() {
        Some(l) => l.to_vec(),
        None => unreachable!("lattice weights are exact"),
    };
    let mut point = vec![Rational::zero(); 4];
    for (&k, lambda) in chosen[..support].iter().zip(&lambdas) {
        for (p, v) in point.iter_mut().zip(tet.vertex(k)) {
            *p = &*p + lambda * v;
        }
    }
    if rng.gen_bool(0.5) {
        for p in point.iter_mut() {
            let nudge = Rational::new(rng.gen_range(-8..=8), 1 << 30);
            *p = &*p * (Rational::one() + nudge);
        }
    }
    WeightVector::exact(point).expect("positive combination").normalized()
}
