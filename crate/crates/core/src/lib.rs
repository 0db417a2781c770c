//! Simulation library for the (m,p) quantum sorting algorithm and the
//! k-nearest-neighbour classifiers built on top of it.
//!
//! The crate is organised bottom-up:
//!
//! * [`dataset`] parses numeric CSV data, applies fixed-point scaling and
//!   Gray-code binarization, and produces leave-one-out folds.
//! * [`classical`] is the baseline k-NN over Hamming or Euclidean distance.
//! * [`schuld`] models the Hamming-distance quantum k-NN analytically and
//!   samples its threshold measurement protocol.
//! * [`mp_sort`] holds the closed-form combinatorics of the (m,p) sorter.
//! * [`qsim`] is a dense statevector simulator of the (m,p) sorting circuit,
//!   used as a brute-force check of [`mp_sort`].
//! * [`mp_qknn`] is the classifier built on the (m,p) sorter.
//! * [`experiment`] drives leave-one-out benchmarks and result emission.

pub mod classical;
pub mod dataset;
mod error;
pub mod experiment;
pub mod mp_qknn;
pub mod mp_sort;
pub mod qsim;
pub mod schuld;
pub mod seed;
pub mod stats;

pub use error::{Error, Result};

/// Probability vector over class ids, shared by both quantum classifiers.
pub use schuld::ClassDistribution;
