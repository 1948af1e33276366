//! Positive weight vectors, exact or floating.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{ensure_dim, Error, Result};
use crate::pcm::Permutation;
use crate::rational::Rational;

/// Default relative band inside which a float ratio counts as equal to a judgment.
pub const DEFAULT_FLOAT_BAND: f64 = 1e-9;

/// Normalization slack accepted for float vectors.
pub const FLOAT_SUM_TOLERANCE: f64 = 1e-12;

/// Name of the environment variable that overrides [`DEFAULT_FLOAT_BAND`].
pub const TOLERANCE_ENV: &str = "EFFPCM_TOL";

/// The float equality band in effect for this process.
pub fn float_band() -> f64 {
    static BAND: OnceLock<f64> = OnceLock::new();
    *BAND.get_or_init(|| {
        std::env::var(TOLERANCE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v >= 0.0)
            .unwrap_or(DEFAULT_FLOAT_BAND)
    })
}

#[derive(Clone, PartialEq)]
enum Repr {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

/// A strictly positive weight vector.
///
/// Exact vectors are compared with exact arithmetic everywhere; float vectors
/// fall back to the relative band returned by [`float_band`].
#[derive(Clone, PartialEq)]
pub struct WeightVector(Repr);

impl WeightVector {
    pub fn exact(components: Vec<Rational>) -> Result<Self> {
        if let Some(i) = components.iter().position(|c| !c.is_positive()) {
            return Err(Error::NonPositiveWeight(i + 1));
        }
        Ok(WeightVector(Repr::Exact(components)))
    }

    pub fn float(components: Vec<f64>) -> Result<Self> {
        if let Some(i) = components.iter().position(|c| !(c.is_finite() && *c > 0.0)) {
            return Err(Error::NonPositiveWeight(i + 1));
        }
        Ok(WeightVector(Repr::Float(components)))
    }

    /// `(1/n, …, 1/n)`.
    pub fn uniform(n: usize) -> Self {
        WeightVector(Repr::Exact(vec![Rational::new(1, n as i64); n]))
    }

    pub fn len(&self) -> usize {
        match &self.0 {
            Repr::Exact(v) => v.len(),
            Repr::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.0, Repr::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&[Rational]> {
        match &self.0 {
            Repr::Exact(v) => Some(v),
            Repr::Float(_) => None,
        }
    }

    pub fn as_float(&self) -> Option<&[f64]> {
        match &self.0 {
            Repr::Float(v) => Some(v),
            Repr::Exact(_) => None,
        }
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        match &self.0 {
            Repr::Exact(v) => v.iter().map(Rational::to_f64).collect(),
            Repr::Float(v) => v.clone(),
        }
    }

    /// Exact value of every component; floats convert without rounding.
    pub fn to_exact(&self) -> Vec<Rational> {
        match &self.0 {
            Repr::Exact(v) => v.clone(),
            Repr::Float(v) => v.iter().map(|x| Rational::from_f64_exact(*x).expect("finite")).collect(),
        }
    }

    pub fn normalized(&self) -> Self {
        match &self.0 {
            Repr::Exact(v) => {
                let sum: Rational = v.iter().sum();
                WeightVector(Repr::Exact(v.iter().map(|x| x / &sum).collect()))
            }
            Repr::Float(v) => {
                let sum: f64 = v.iter().sum();
                WeightVector(Repr::Float(v.iter().map(|x| x / sum).collect()))
            }
        }
    }

    pub fn is_normalized(&self) -> bool {
        match &self.0 {
            Repr::Exact(v) => v.iter().sum::<Rational>().is_one(),
            Repr::Float(v) => (v.iter().sum::<f64>() - 1.0).abs() <= FLOAT_SUM_TOLERANCE,
        }
    }

    /// `c · w`; `c` must be positive.
    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositiveWeight(0));
        }
        Ok(match &self.0 {
            Repr::Exact(v) => WeightVector(Repr::Exact(v.iter().map(|x| x * c).collect())),
            Repr::Float(v) => {
                let cf = c.to_f64();
                WeightVector(Repr::Float(v.iter().map(|x| x * cf).collect()))
            }
        })
    }

    /// Reindexes to match [`crate::pcm::Pcm::apply_permutation`]: `w'_i = w_{σ(i)}`.
    pub fn permuted(&self, perm: &Permutation) -> Result<Self> {
        ensure_dim(self.len(), perm.len())?;
        Ok(match &self.0 {
            Repr::Exact(v) => WeightVector(Repr::Exact((0..v.len()).map(|i| v[perm.apply(i)].clone()).collect())),
            Repr::Float(v) => WeightVector(Repr::Float((0..v.len()).map(|i| v[perm.apply(i)]).collect())),
        })
    }

    /// Compares the ratio `w_i / w_j` against `a`.
    ///
    /// Exact vectors compare exactly. Float vectors report `Equal` whenever
    /// `|w_i/w_j − a| ≤ band · max(1, a)`.
    pub fn compare_ratio(&self, i: usize, j: usize, a: &Rational) -> Ordering {
        match &self.0 {
            Repr::Exact(v) => v[i].cmp(&(a * &v[j])),
            Repr::Float(v) => {
                let ratio = v[i] / v[j];
                let af = a.to_f64();
                if (ratio - af).abs() <= float_band() * af.max(1.0) {
                    Ordering::Equal
                } else if ratio > af {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Components rendered as strings: exact fractions, or shortest round-trip floats.
    pub fn to_strings(&self) -> Vec<String> {
        match &self.0 {
            Repr::Exact(v) => v.iter().map(ToString::to_string).collect(),
            Repr::Float(v) => v.iter().map(|x| format!("{x:?}")).collect(),
        }
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Exact(v) => f.debug_tuple("Exact").field(v).finish(),
            Repr::Float(v) => f.debug_tuple("Float").field(v).finish(),
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}
