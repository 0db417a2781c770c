//! Dense statevector simulation of the (m,p) sorting circuit.
//!
//! Basis index layout, most significant first: register 0, register 1, ...,
//! register `m - 1`, each `bits` wide, then the ancilla in bit 0. The order
//! oracle is applied as a basis permutation computed from the comparator
//! rather than as a gate network.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use crate::{Error, Result};

pub const DEFAULT_QUBIT_CEILING: usize = 24;

type LessFn = dyn Fn(u64, u64) -> bool + Send + Sync;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegisterLayout {
    pub m: usize,
    pub bits: u32,
}

impl RegisterLayout {
    pub fn qubits(&self) -> usize {
        self.m * self.bits as usize + 1
    }

    pub fn check(&self, ceiling: usize) -> Result<()> {
        let needed = self.qubits();
        if needed > ceiling || needed > 62 {
            return Err(Error::QubitCeiling { needed, ceiling });
        }
        Ok(())
    }

    fn mask(&self) -> usize {
        (1usize << self.bits) - 1
    }

    pub fn register_value(&self, index: usize, register: usize) -> u64 {
        let shift = 1 + self.bits as usize * (self.m - 1 - register);
        ((index >> shift) & self.mask()) as u64
    }

    pub fn ancilla(index: usize) -> bool {
        index & 1 == 1
    }

    pub fn index_of(&self, values: &[u64], ancilla: bool) -> usize {
        let regs = values
            .iter()
            .fold(0usize, |acc, &v| (acc << self.bits) | v as usize);
        (regs << 1) | ancilla as usize
    }
}

/// Distinct `bits`-wide elements under a strict total order.
#[derive(Clone)]
pub struct SortInput {
    elements: Vec<u64>,
    bits: u32,
    less: Arc<LessFn>,
}

impl fmt::Debug for SortInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SortInput")
            .field("elements", &self.elements)
            .field("bits", &self.bits)
            .finish_non_exhaustive()
    }
}

impl SortInput {
    /// Elements under unsigned integer order.
    pub fn new(elements: Vec<u64>, bits: u32) -> Result<Self> {
        Self::with_order(elements, bits, |a, b| a < b)
    }

    pub fn with_order<F>(elements: Vec<u64>, bits: u32, less: F) -> Result<Self>
    where
        F: Fn(u64, u64) -> bool + Send + Sync + 'static,
    {
        if elements.len() < 2 {
            return Err(Error::InvalidParams(format!(
                "need at least 2 elements, got {}",
                elements.len()
            )));
        }
        if bits == 0 || bits > 32 {
            return Err(Error::InvalidParams(format!(
                "register width {bits} out of range"
            )));
        }
        if let Some(&v) = elements.iter().find(|&&v| v >> bits != 0) {
            return Err(Error::WidthExceeded {
                value: v,
                width: bits,
            });
        }
        for (i, &a) in elements.iter().enumerate() {
            if let Some(&b) = elements[i + 1..]
                .iter()
                .find(|&&b| !less(a, b) && !less(b, a))
            {
                return Err(Error::DuplicateElement(b));
            }
        }
        Ok(SortInput {
            elements,
            bits,
            less: Arc::new(less),
        })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn less(&self, a: u64, b: u64) -> bool {
        (self.less)(a, b)
    }

    fn cmp(&self, a: u64, b: u64) -> Ordering {
        if self.less(a, b) {
            Ordering::Less
        } else if self.less(b, a) {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    /// `(value, order label)` pairs with the least element labelled `N`.
    pub fn labels(&self) -> Vec<(u64, u64)> {
        let mut sorted = self.elements.clone();
        sorted.sort_by(|&a, &b| self.cmp(a, b));
        let n = sorted.len() as u64;
        sorted
            .into_iter()
            .enumerate()
            .map(|(rank, v)| (v, n - rank as u64))
            .collect()
    }

    /// The generalized characteristic function: 1 iff strictly increasing.
    pub fn increasing(&self, values: &[u64]) -> bool {
        values.windows(2).all(|w| self.less(w[0], w[1]))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    layout: RegisterLayout,
}

impl StateVector {
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn layout(&self) -> RegisterLayout {
        self.layout
    }

    pub fn qubit_count(&self) -> usize {
        self.layout.qubits()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Probability of reading the ancilla as 1.
    pub fn ancilla_one_probability(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| RegisterLayout::ancilla(*i))
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Joint probability of each basis value of `register`, optionally
    /// restricted to one ancilla outcome.
    pub fn register_marginal(&self, register: usize, ancilla: Option<bool>) -> Result<Vec<f64>> {
        if register >= self.layout.m {
            return Err(Error::RegisterIndex {
                index: register,
                m: self.layout.m,
            });
        }
        let mut probs = vec![0.0; 1 << self.layout.bits];
        for (i, a) in self.amplitudes.iter().enumerate() {
            if ancilla.is_some_and(|bit| bit != RegisterLayout::ancilla(i)) {
                continue;
            }
            probs[self.layout.register_value(i, register) as usize] += a.norm_sqr();
        }
        Ok(probs)
    }

    fn check_layout(&self, input: &SortInput) -> Result<()> {
        if self.layout.bits != input.bits {
            return Err(Error::LayoutMismatch(format!(
                "state registers are {} bits, input needs {}",
                self.layout.bits, input.bits
            )));
        }
        Ok(())
    }
}

/// `|s>^m (x) |0>` with `|s>` the uniform superposition over the elements.
pub fn prepare_uniform(input: &SortInput, m: usize) -> Result<StateVector> {
    prepare_uniform_with_ceiling(input, m, DEFAULT_QUBIT_CEILING)
}

pub fn prepare_uniform_with_ceiling(
    input: &SortInput,
    m: usize,
    ceiling: usize,
) -> Result<StateVector> {
    if m < 2 || m > input.elements.len() {
        return Err(Error::InvalidParams(format!(
            "m = {m} must lie in 2..={}",
            input.elements.len()
        )));
    }
    let layout = RegisterLayout {
        m,
        bits: input.bits,
    };
    layout.check(ceiling)?;
    let n = input.elements.len();
    let tuples = n.pow(m as u32);
    let amp = Complex64::new(1.0 / (tuples as f64).sqrt(), 0.0);
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << layout.qubits()];
    let mut digits = vec![0usize; m];
    let mut values = vec![0u64; m];
    for _ in 0..tuples {
        for (v, &d) in values.iter_mut().zip(&digits) {
            *v = input.elements[d];
        }
        amplitudes[layout.index_of(&values, false)] = amp;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    Ok(StateVector { amplitudes, layout })
}

/// XORs the ancilla with the order predicate of the register tuple.
pub fn apply_order_oracle(mut state: StateVector, input: &SortInput) -> Result<StateVector> {
    state.check_layout(input)?;
    let layout = state.layout;
    let mut values = vec![0u64; layout.m];
    for base in (0..state.amplitudes.len()).step_by(2) {
        for (r, v) in values.iter_mut().enumerate() {
            *v = layout.register_value(base, r);
        }
        if input.increasing(&values) {
            state.amplitudes.swap(base, base | 1);
        }
    }
    Ok(state)
}

/// `p` amplification rounds: flip the sign of the ancilla-1 subspace, then
/// reflect about the oracle-prepared state.
pub fn amplitude_amplify(mut state: StateVector, p: u32, input: &SortInput) -> Result<StateVector> {
    state.check_layout(input)?;
    if p == 0 {
        return Ok(state);
    }
    let reference = apply_order_oracle(
        prepare_uniform_with_ceiling(input, state.layout.m, usize::MAX)?,
        input,
    )?;
    for _ in 0..p {
        for (i, a) in state.amplitudes.iter_mut().enumerate() {
            if RegisterLayout::ancilla(i) {
                *a = -*a;
            }
        }
        let overlap = reference.inner(&state);
        for (a, r) in state.amplitudes.iter_mut().zip(&reference.amplitudes) {
            *a = 2.0 * overlap * r - *a;
        }
    }
    Ok(state)
}

/// Amplitude of `state` along the normalized ordered-tuple component of the
/// oracle-prepared state.
pub fn marked_overlap(state: &StateVector, input: &SortInput) -> Result<Complex64> {
    state.check_layout(input)?;
    let psi2 = apply_order_oracle(
        prepare_uniform_with_ceiling(input, state.layout.m, usize::MAX)?,
        input,
    )?;
    let weight = psi2.ancilla_one_probability().sqrt();
    Ok(psi2
        .amplitudes
        .iter()
        .zip(&state.amplitudes)
        .enumerate()
        .filter(|(i, _)| RegisterLayout::ancilla(*i))
        .map(|(_, (a, b))| a.conj() * b)
        .sum::<Complex64>()
        / weight)
}

/// Preparation, oracle and `p` rounds of amplification.
pub fn run_sort_circuit(
    input: &SortInput,
    m: usize,
    p: u32,
    ceiling: usize,
) -> Result<StateVector> {
    let psi1 = prepare_uniform_with_ceiling(input, m, ceiling)?;
    let psi2 = apply_order_oracle(psi1, input)?;
    amplitude_amplify(psi2, p, input)
}

/// Exact marginal distribution of one register over its basis values.
pub fn measure_register(state: &StateVector, register: usize) -> Result<Vec<f64>> {
    state.register_marginal(register, None)
}

/// One sampled basis value of `register`.
pub fn sample_register<R: Rng + ?Sized>(
    state: &StateVector,
    register: usize,
    rng: &mut R,
) -> Result<u64> {
    let probs = measure_register(state, register)?;
    let u: f64 = rng.gen::<f64>() * probs.iter().sum::<f64>();
    let mut acc = 0.0;
    for (v, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return Ok(v as u64);
        }
    }
    Ok(probs.iter().rposition(|&p| p > 0.0).unwrap_or(0) as u64)
}

/// First-register distribution re-indexed by order label (`probs[x - 1]`).
pub fn rank_distribution(state: &StateVector, input: &SortInput) -> Result<Vec<f64>> {
    label_marginal(state, input, None)
}

pub fn label_marginal(
    state: &StateVector,
    input: &SortInput,
    ancilla: Option<bool>,
) -> Result<Vec<f64>> {
    let marginal = state.register_marginal(0, ancilla)?;
    let labels = input.labels();
    let mut probs = vec![0.0; labels.len()];
    for (value, label) in labels {
        probs[(label - 1) as usize] = marginal[value as usize];
    }
    Ok(probs)
}
