//! Baseline k-nearest-neighbour classifier.

use crate::dataset::{BinaryPattern, BitString, LabeledDataset};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    /// Hamming distance on the binarized bit strings.
    HammingOnBits,
    /// Euclidean distance on the scaled numeric attributes.
    EuclideanOnRaw,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeighborRecord {
    pub train_index: usize,
    pub distance: f64,
    pub class_id: usize,
}

pub fn hamming(a: &BitString, b: &BitString) -> Result<u32> {
    a.hamming(b).ok_or(Error::DimensionMismatch {
        expected: a.len(),
        found: b.len(),
    })
}

/// Exact sort key for a distance: Hamming count or squared Euclidean norm.
fn distance_key(a: &BinaryPattern, b: &BinaryPattern, dist: DistanceKind) -> Result<u64> {
    match dist {
        DistanceKind::HammingOnBits => hamming(&a.bits, &b.bits).map(u64::from),
        DistanceKind::EuclideanOnRaw => {
            if a.scaled.len() != b.scaled.len() {
                return Err(Error::DimensionMismatch {
                    expected: a.scaled.len(),
                    found: b.scaled.len(),
                });
            }
            Ok(a.scaled
                .iter()
                .zip(&b.scaled)
                .map(|(x, y)| (x - y).unsigned_abs().pow(2))
                .sum())
        }
    }
}

/// The `k` nearest training patterns, nearest first. Equal distances keep
/// training order.
pub fn nearest(
    train: &LabeledDataset,
    query: &BinaryPattern,
    k: usize,
    dist: DistanceKind,
) -> Result<Vec<NeighborRecord>> {
    if k == 0 || k > train.len() {
        return Err(Error::KOutOfRange { k, n: train.len() });
    }
    let mut keyed = train
        .patterns
        .iter()
        .enumerate()
        .map(|(i, p)| distance_key(query, p, dist).map(|d| (d, i)))
        .collect::<Result<Vec<_>>>()?;
    if k < keyed.len() {
        keyed.select_nth_unstable(k - 1);
        keyed.truncate(k);
    }
    keyed.sort_unstable();
    Ok(keyed
        .into_iter()
        .map(|(d, i)| NeighborRecord {
            train_index: i,
            distance: match dist {
                DistanceKind::HammingOnBits => d as f64,
                DistanceKind::EuclideanOnRaw => (d as f64).sqrt(),
            },
            class_id: train.patterns[i].class_id,
        })
        .collect())
}

/// Most frequent class, ties resolved to the smallest class id.
pub fn smallest_mode<I: IntoIterator<Item = usize>>(classes: I) -> Option<usize> {
    let mut counts: Vec<usize> = Vec::new();
    for c in classes {
        if c >= counts.len() {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    // max_by_key returns the last maximum; iterate in reverse so the
    // smallest id wins.
    counts
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &n)| n > 0)
        .max_by_key(|(_, &n)| n)
        .map(|(c, _)| c)
}

pub fn knn_classify(
    train: &LabeledDataset,
    query: &BinaryPattern,
    k: usize,
    dist: DistanceKind,
) -> Result<usize> {
    let neighbors = nearest(train, query, k, dist)?;
    Ok(smallest_mode(neighbors.iter().map(|n| n.class_id)).expect("k >= 1"))
}
