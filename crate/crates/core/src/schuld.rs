//! Analytic model of the Hamming-distance quantum k-NN with a threshold
//! measurement protocol.
//!
//! After the distance circuit, training pattern `i` carries amplitude
//! `cos(pi d_i / 2n) / sqrt(N)` on the ancilla-0 branch and
//! `sin(pi d_i / 2n) / sqrt(N)` on the ancilla-1 branch. A run succeeds when
//! the ancilla reads 0, after which the class register is measured.

use std::f64::consts::PI;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::classical::{hamming, smallest_mode};
use crate::dataset::{BinaryPattern, LabeledDataset};
use crate::{Error, Result};

/// Probability vector indexed by class id.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassDistribution {
    pub probs: Vec<f64>,
}

impl ClassDistribution {
    /// Normalizes nonnegative weights. `None` if they sum to zero.
    pub fn from_weights(weights: Vec<f64>) -> Option<Self> {
        let total: f64 = weights.iter().sum();
        (total > 0.0).then(|| ClassDistribution {
            probs: weights.into_iter().map(|w| w / total).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Index of the largest probability; ties go to the smallest id.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (c, &p) in self.probs.iter().enumerate() {
            if p > self.probs[best] {
                best = c;
            }
        }
        best
    }

    /// Inverse-CDF draw from one uniform variate.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        for (c, &p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return c;
            }
        }
        // rounding left u above the last partial sum
        self.probs.iter().rposition(|&p| p > 0.0).unwrap_or(0)
    }

    pub fn total_variation(&self, other: &ClassDistribution) -> f64 {
        let n = self.len().max(other.len());
        let get = |d: &ClassDistribution, i: usize| d.probs.get(i).copied().unwrap_or(0.0);
        0.5 * (0..n)
            .map(|i| (get(self, i) - get(other, i)).abs())
            .sum::<f64>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchuldEntry {
    pub distance: u32,
    pub class_id: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchuldModel {
    pub n: usize,
    pub class_count: usize,
    pub entries: Vec<SchuldEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchuldOutcome {
    Classified { class_id: usize, runs_used: usize },
    Unclassifiable,
}

impl SchuldModel {
    pub fn new(n: usize, class_count: usize, entries: Vec<SchuldEntry>) -> Result<Self> {
        if entries.is_empty() || n == 0 {
            return Err(Error::InvalidParams(
                "model needs n > 0 and at least one entry".into(),
            ));
        }
        if let Some(e) = entries
            .iter()
            .find(|e| e.distance as usize > n || e.class_id >= class_count)
        {
            return Err(Error::InvalidParams(format!(
                "entry {e:?} invalid for n = {n}"
            )));
        }
        Ok(SchuldModel {
            n,
            class_count,
            entries,
        })
    }

    fn weight(&self, distance: u32) -> f64 {
        (PI * distance as f64 / (2.0 * self.n as f64)).cos().powi(2)
    }

    fn class_weights(&self) -> Vec<f64> {
        let mut w = vec![0.0; self.class_count];
        for e in &self.entries {
            w[e.class_id] += self.weight(e.distance);
        }
        w
    }
}

pub fn build_model(train: &LabeledDataset, query: &BinaryPattern) -> Result<SchuldModel> {
    let entries = train
        .patterns
        .iter()
        .map(|p| {
            hamming(&query.bits, &p.bits).map(|distance| SchuldEntry {
                distance,
                class_id: p.class_id,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SchuldModel::new(train.n, train.class_count(), entries)
}

/// Probability of reading the ancilla as 0.
pub fn p0(model: &SchuldModel) -> f64 {
    let all_zero = model.entries.iter().all(|e| e.distance == 0);
    let all_max = model.entries.iter().all(|e| e.distance as usize == model.n);
    if all_zero {
        return 1.0;
    }
    if all_max {
        return 0.0;
    }
    let sum: f64 = model.entries.iter().map(|e| model.weight(e.distance)).sum();
    (sum / model.entries.len() as f64).clamp(0.0, 1.0)
}

/// Class distribution conditioned on the ancilla reading 0.
pub fn class_distribution(model: &SchuldModel) -> Result<ClassDistribution> {
    if p0(model) == 0.0 {
        return Err(Error::DegenerateQuery);
    }
    ClassDistribution::from_weights(model.class_weights()).ok_or(Error::DegenerateQuery)
}

pub fn classify_argmax(model: &SchuldModel) -> Result<usize> {
    class_distribution(model).map(|d| d.argmax())
}

/// Runs the circuit up to `t` times, collecting a class candidate from each
/// run whose ancilla reads 0, and stops as soon as `k` candidates exist.
pub fn run_protocol<R: Rng + ?Sized>(
    model: &SchuldModel,
    k: usize,
    t: usize,
    rng: &mut R,
) -> Result<SchuldOutcome> {
    if t <= k {
        return Err(Error::ThresholdTooSmall { t, k });
    }
    let success = p0(model);
    let dist = class_distribution(model).ok();
    let mut candidates = Vec::with_capacity(k);
    for run in 1..=t {
        let u: f64 = rng.gen();
        if u < success {
            let dist = dist.as_ref().expect("P0 > 0 implies a distribution");
            candidates.push(dist.sample(rng));
            if candidates.len() == k {
                return Ok(SchuldOutcome::Classified {
                    class_id: smallest_mode(candidates).expect("k >= 1"),
                    runs_used: run,
                });
            }
        }
    }
    Ok(SchuldOutcome::Unclassifiable)
}

/// Probability that fewer than `k` of `t` independent runs succeed, each
/// with probability `p0`.
pub fn failure_probability(p0: f64, k: usize, t: usize) -> f64 {
    let q = 1.0 - p0;
    let mut coeff = 1.0f64;
    let mut total = 0.0;
    for j in 0..k.min(t + 1) {
        if j > 0 {
            coeff *= (t - j + 1) as f64 / j as f64;
        }
        total += coeff * p0.powi(j as i32) * q.powi((t - j) as i32);
    }
    total
}
