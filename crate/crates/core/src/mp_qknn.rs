//! k-NN classifier built on the (m,p) sorter.
//!
//! Training patterns are ranked by Hamming distance to the query and handed
//! to the sorter as order labels, nearest pattern labelled `N`. Measuring the
//! class register of the first sorted slot then yields class `c` with
//! probability
//!
//! ```text
//! P(c) = cos^2(alpha) / nu * sum_{x in c} N0(x) + sin^2(alpha) / mu * sum_{x in c} N1(x)
//! ```
//!
//! and the classifier votes over `k` such measurements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{hamming, smallest_mode};
use crate::dataset::{BinaryPattern, LabeledDataset};
use crate::mp_sort::{self, MPParams};
use crate::schuld::ClassDistribution;
use crate::{Error, Result};

/// How patterns at equal distance are put into a strict order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TiePolicy {
    /// Random order drawn from a stream seeded with the given value.
    SeededRandom(u64),
    /// Earlier training patterns count as nearer.
    ByTrainIndex,
}

/// `labels[i]` is the order label of training pattern `i`; the nearest
/// pattern has label `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderLabeling {
    pub labels: Vec<u64>,
}

impl OrderLabeling {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MPClassifierConfig {
    pub m: u32,
    pub p: u32,
    pub k: usize,
    pub tie_policy: TiePolicy,
}

impl Default for MPClassifierConfig {
    fn default() -> Self {
        MPClassifierConfig {
            m: 5,
            p: 8,
            k: 1,
            tie_policy: TiePolicy::SeededRandom(0),
        }
    }
}

pub fn labels_from_distances(distances: &[u32], policy: TiePolicy) -> OrderLabeling {
    let keys: Vec<u64> = match policy {
        TiePolicy::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            distances.iter().map(|_| rng.gen()).collect()
        }
        TiePolicy::ByTrainIndex => (0..distances.len() as u64).collect(),
    };
    let mut order: Vec<usize> = (0..distances.len()).collect();
    order.sort_unstable_by_key(|&i| (distances[i], keys[i], i));
    let n = distances.len() as u64;
    let mut labels = vec![0; distances.len()];
    for (rank, i) in order.into_iter().enumerate() {
        labels[i] = n - rank as u64;
    }
    OrderLabeling { labels }
}

pub fn order_labels(
    train: &LabeledDataset,
    query: &BinaryPattern,
    policy: TiePolicy,
) -> Result<OrderLabeling> {
    let distances = train
        .patterns
        .iter()
        .map(|p| hamming(&query.bits, &p.bits))
        .collect::<Result<Vec<_>>>()?;
    Ok(labels_from_distances(&distances, policy))
}

fn check_inputs(
    labeling: &OrderLabeling,
    classes: &[usize],
    class_count: usize,
    params: &MPParams,
) -> Result<()> {
    if labeling.len() != classes.len() || labeling.len() as u64 != params.n {
        return Err(Error::DimensionMismatch {
            expected: params.n as usize,
            found: labeling.len().min(classes.len()),
        });
    }
    if let Some(&c) = classes.iter().find(|&&c| c >= class_count) {
        return Err(Error::InvalidParams(format!(
            "class id {c} >= class count {class_count}"
        )));
    }
    Ok(())
}

/// Per-label `(N0, N1)` table for one parameter set, reused across queries.
#[derive(Clone, Debug)]
pub struct LabelCounts {
    params: MPParams,
    derived: mp_sort::MPDerived,
    counts: Vec<(u128, u128)>,
}

impl LabelCounts {
    pub fn new(params: &MPParams) -> Result<Self> {
        let counts = (1..=params.n)
            .map(|x| {
                Ok((
                    mp_sort::n0(x, params.n, params.m)?,
                    mp_sort::n1(x, params.n, params.m)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LabelCounts {
            params: *params,
            derived: mp_sort::derive(params)?,
            counts,
        })
    }

    /// Per-class `(sum N0, sum N1)` in exact integers.
    pub fn class_sums(
        &self,
        labeling: &OrderLabeling,
        classes: &[usize],
        class_count: usize,
    ) -> Result<Vec<(u128, u128)>> {
        check_inputs(labeling, classes, class_count, &self.params)?;
        let mut sums = vec![(0u128, 0u128); class_count];
        for (&x, &c) in labeling.labels.iter().zip(classes) {
            let (zero, one) = self.counts[(x - 1) as usize];
            sums[c].0 += zero;
            sums[c].1 += one;
        }
        Ok(sums)
    }

    pub fn class_distribution(
        &self,
        labeling: &OrderLabeling,
        classes: &[usize],
        class_count: usize,
    ) -> Result<ClassDistribution> {
        let sums = self.class_sums(labeling, classes, class_count)?;
        let (c2, s2) = (self.derived.cos2_alpha(), self.derived.sin2_alpha());
        let (nu, mu) = (self.derived.nu as f64, self.derived.mu as f64);
        Ok(ClassDistribution {
            probs: sums
                .into_iter()
                .map(|(zero, one)| c2 * zero as f64 / nu + s2 * one as f64 / mu)
                .collect(),
        })
    }
}

pub fn class_tuple_counts(
    labeling: &OrderLabeling,
    classes: &[usize],
    class_count: usize,
    params: &MPParams,
) -> Result<Vec<(u128, u128)>> {
    LabelCounts::new(params)?.class_sums(labeling, classes, class_count)
}

pub fn class_distribution(
    labeling: &OrderLabeling,
    classes: &[usize],
    class_count: usize,
    params: &MPParams,
) -> Result<ClassDistribution> {
    LabelCounts::new(params)?.class_distribution(labeling, classes, class_count)
}

/// `k` independent draws, smallest mode.
pub fn vote<R: Rng + ?Sized>(dist: &ClassDistribution, k: usize, rng: &mut R) -> usize {
    smallest_mode((0..k).map(|_| dist.sample(rng))).unwrap_or(0)
}

pub fn run_classifier<R: Rng + ?Sized>(
    labeling: &OrderLabeling,
    classes: &[usize],
    class_count: usize,
    config: &MPClassifierConfig,
    rng: &mut R,
) -> Result<usize> {
    if config.k == 0 {
        return Err(Error::KOutOfRange {
            k: 0,
            n: usize::MAX,
        });
    }
    let params = MPParams::new(labeling.len() as u64, config.m, config.p)?;
    let dist = class_distribution(labeling, classes, class_count, &params)?;
    Ok(vote(&dist, config.k, rng))
}

pub fn classify_argmax(
    labeling: &OrderLabeling,
    classes: &[usize],
    class_count: usize,
    params: &MPParams,
) -> Result<usize> {
    class_distribution(labeling, classes, class_count, params).map(|d| d.argmax())
}

pub const ENUMERATION_BUDGET: u128 = 10_000_000;

/// Reference distribution by enumerating every `m`-tuple of labels.
///
/// A tuple is marked when its elements are strictly increasing under the
/// order, i.e. when its labels are strictly decreasing. The marked count and
/// rotation angle are recounted here rather than taken from [`mp_sort`].
pub fn brute_force_class_distribution(
    labeling: &OrderLabeling,
    classes: &[usize],
    class_count: usize,
    params: &MPParams,
) -> Result<ClassDistribution> {
    check_inputs(labeling, classes, class_count, params)?;
    let n = params.n as usize;
    let m = params.m as usize;
    let tuples = (n as u128).pow(params.m);
    if tuples > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget {
            needed: tuples,
            budget: ENUMERATION_BUDGET,
        });
    }
    let mut class_of_label = vec![0usize; n + 1];
    for (&x, &c) in labeling.labels.iter().zip(classes) {
        class_of_label[x as usize] = c;
    }

    let mut marked_by_class = vec![0u64; class_count];
    let mut unmarked_by_class = vec![0u64; class_count];
    let mut digits = vec![1usize; m];
    for _ in 0..tuples {
        let marked = digits.windows(2).all(|w| w[0] > w[1]);
        let c = class_of_label[digits[0]];
        if marked {
            marked_by_class[c] += 1;
        } else {
            unmarked_by_class[c] += 1;
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d <= n {
                break;
            }
            *d = 1;
        }
    }

    let marked: u64 = marked_by_class.iter().sum();
    let unmarked = tuples as u64 - marked;
    let theta = (marked as f64 / tuples as f64).sqrt().asin();
    let alpha = (2 * params.p + 1) as f64 * theta;
    let w1 = alpha.sin().powi(2) / marked as f64;
    let w0 = alpha.cos().powi(2) / unmarked as f64;
    Ok(ClassDistribution {
        probs: marked_by_class
            .iter()
            .zip(&unmarked_by_class)
            .map(|(&a, &b)| w1 * a as f64 + w0 * b as f64)
            .collect(),
    })
}
