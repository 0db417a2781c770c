//! Leave-one-out benchmark harness, simulator verification and result
//! emission.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::classical::{self, hamming, DistanceKind};
use crate::dataset::{self, BinarizationSpec, LabeledDataset, WidthPolicy};
use crate::mp_qknn::{self, labels_from_distances, TiePolicy};
use crate::mp_sort::{self, MPParams};
use crate::qsim::{self, SortInput};
use crate::schuld::{self, SchuldEntry, SchuldModel, SchuldOutcome};
use crate::seed::child_seed;
use crate::stats::{summarize, Summary};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Classical,
    Schuld,
    Mp,
}

impl Algorithm {
    fn seed_id(self) -> u64 {
        match self {
            Algorithm::Classical => 0,
            Algorithm::Schuld => 1,
            Algorithm::Mp => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Classical => "classical",
            Algorithm::Schuld => "schuld",
            Algorithm::Mp => "mp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieMode {
    /// Fresh random tie order for every fold of every run.
    Random,
    Index,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    pub k_values: Vec<usize>,
    pub runs: usize,
    pub master_seed: u64,
    pub m: u32,
    pub p: u32,
    pub t_multiplier: usize,
    pub distance: DistanceKind,
    pub ties: TieMode,
    pub binarization: BinarizationSpec,
    pub parallel: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            algorithm: Algorithm::Mp,
            k_values: vec![1, 3, 5, 7, 9, 11, 13],
            runs: 50,
            master_seed: 0,
            m: 5,
            p: 8,
            t_multiplier: 5,
            distance: DistanceKind::HammingOnBits,
            ties: TieMode::Random,
            binarization: BinarizationSpec::default(),
            parallel: true,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self, dataset_len: usize) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.k_values.is_empty() || self.k_values.contains(&0) {
            return Err(Error::Config(
                "k values must be a nonempty list of positive integers".into(),
            ));
        }
        let training = dataset_len.saturating_sub(1);
        match self.algorithm {
            Algorithm::Classical => {
                if let Some(&k) = self.k_values.iter().find(|&&k| k > training) {
                    return Err(Error::Config(format!(
                        "k = {k} exceeds training size {training}"
                    )));
                }
            }
            Algorithm::Schuld => {
                if self.t_multiplier < 2 {
                    return Err(Error::Config(
                        "t multiplier must be at least 2 so that T > k".into(),
                    ));
                }
            }
            Algorithm::Mp => {
                MPParams::new(training as u64, self.m, self.p).map_err(|e| {
                    Error::Config(format!("m/p invalid for training size {training}: {e}"))
                })?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunParams {
    pub k_values: Vec<usize>,
    pub runs: usize,
    pub master_seed: u64,
    pub m: u32,
    pub p: u32,
    pub t_multiplier: usize,
    pub distance: DistanceKind,
    pub ties: TieMode,
    pub scale_factor: u32,
    pub widths: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KResult {
    pub k: usize,
    pub accuracies: Vec<f64>,
    pub correct: Vec<usize>,
    pub stats: Summary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub argmax_accuracy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unclassifiable: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub algorithm: Algorithm,
    pub params: RunParams,
    pub dataset_digest: String,
    pub dataset_size: usize,
    pub per_k: Vec<KResult>,
}

pub fn dataset_digest(data: &LabeledDataset) -> String {
    hex::encode(Sha256::digest(data.to_text().as_bytes()))
}

/// Distances and classes of one leave-one-out fold, in training order.
struct FoldView {
    query_class: usize,
    distances: Vec<u32>,
    classes: Vec<usize>,
}

fn fold_views(data: &LabeledDataset) -> Result<Vec<FoldView>> {
    dataset::loo_folds(data)?
        .into_iter()
        .map(|f| {
            let distances = f
                .training
                .patterns
                .iter()
                .map(|p| hamming(&f.query.bits, &p.bits))
                .collect::<Result<Vec<_>>>()?;
            Ok(FoldView {
                query_class: f.query.class_id,
                classes: f.training.class_ids(),
                distances,
            })
        })
        .collect()
}

/// Maps `f` over fold indices, in parallel or not; output keeps fold order.
fn per_fold<T, F>(parallel: bool, folds: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    if parallel {
        (0..folds).into_par_iter().map(f).collect()
    } else {
        (0..folds).map(f).collect()
    }
}

#[derive(Clone, Copy)]
struct FoldResult {
    correct: bool,
    argmax_correct: bool,
    unclassifiable: bool,
}

pub fn run_benchmark_on(data: &LabeledDataset, config: &ExperimentConfig) -> Result<RunSummary> {
    config.validate(data.len())?;
    let n = data.len();
    let class_count = data.class_count();
    let views = fold_views(data)?;
    let folds = dataset::loo_folds(data)?;
    let algo = config.algorithm.seed_id();
    let training = (n - 1) as u64;
    let rank_counts = match config.algorithm {
        Algorithm::Mp => Some(mp_qknn::LabelCounts::new(&MPParams::new(
            training, config.m, config.p,
        )?)?),
        _ => None,
    };

    let mut per_k = Vec::with_capacity(config.k_values.len());
    for &k in &config.k_values {
        let runs = if config.algorithm == Algorithm::Classical {
            1
        } else {
            config.runs
        };
        let mut correct = Vec::with_capacity(runs);
        let mut argmax_correct = Vec::with_capacity(runs);
        let mut unclassifiable = 0usize;
        for run in 0..runs {
            let results = per_fold(config.parallel, n, |fold| {
                let view = &views[fold];
                let mut rng = ChaCha8Rng::seed_from_u64(child_seed(
                    config.master_seed,
                    &[algo, k as u64, run as u64, fold as u64],
                ));
                match config.algorithm {
                    Algorithm::Classical => {
                        let f = &folds[fold];
                        let got =
                            classical::knn_classify(&f.training, &f.query, k, config.distance)?;
                        Ok(FoldResult {
                            correct: got == view.query_class,
                            argmax_correct: false,
                            unclassifiable: false,
                        })
                    }
                    Algorithm::Schuld => {
                        let model = SchuldModel::new(
                            data.n,
                            class_count,
                            view.distances
                                .iter()
                                .zip(&view.classes)
                                .map(|(&distance, &class_id)| SchuldEntry { distance, class_id })
                                .collect(),
                        )?;
                        let outcome =
                            schuld::run_protocol(&model, k, config.t_multiplier * k, &mut rng)?;
                        let argmax = schuld::classify_argmax(&model).ok();
                        Ok(FoldResult {
                            correct: matches!(outcome, SchuldOutcome::Classified { class_id, .. } if class_id == view.query_class),
                            argmax_correct: argmax == Some(view.query_class),
                            unclassifiable: outcome == SchuldOutcome::Unclassifiable,
                        })
                    }
                    Algorithm::Mp => {
                        let policy = match config.ties {
                            TieMode::Random => TiePolicy::SeededRandom(rng.gen()),
                            TieMode::Index => TiePolicy::ByTrainIndex,
                        };
                        let labeling = labels_from_distances(&view.distances, policy);
                        let dist = rank_counts
                            .as_ref()
                            .expect("built for Mp")
                            .class_distribution(&labeling, &view.classes, class_count)?;
                        let got = mp_qknn::vote(&dist, k, &mut rng);
                        Ok(FoldResult {
                            correct: got == view.query_class,
                            argmax_correct: dist.argmax() == view.query_class,
                            unclassifiable: false,
                        })
                    }
                }
            })?;
            correct.push(results.iter().filter(|r| r.correct).count());
            argmax_correct.push(results.iter().filter(|r| r.argmax_correct).count());
            unclassifiable += results.iter().filter(|r| r.unclassifiable).count();
        }

        let accuracies: Vec<f64> = correct.iter().map(|&c| c as f64 / n as f64).collect();
        let quantum = config.algorithm != Algorithm::Classical;
        let argmax_accuracy = quantum.then(|| {
            argmax_correct
                .iter()
                .map(|&c| c as f64 / n as f64)
                .sum::<f64>()
                / runs as f64
        });
        per_k.push(KResult {
            k,
            stats: summarize(&accuracies).expect("runs >= 1"),
            accuracies,
            correct,
            argmax_accuracy,
            unclassifiable: (config.algorithm == Algorithm::Schuld).then_some(unclassifiable),
        });
    }

    Ok(RunSummary {
        algorithm: config.algorithm,
        params: RunParams {
            k_values: config.k_values.clone(),
            runs: config.runs,
            master_seed: config.master_seed,
            m: config.m,
            p: config.p,
            t_multiplier: config.t_multiplier,
            distance: config.distance,
            ties: config.ties,
            scale_factor: config.binarization.scale_factor,
            widths: data.widths.clone(),
        },
        dataset_digest: dataset_digest(data),
        dataset_size: n,
        per_k,
    })
}

pub fn load_dataset(path: &Path, spec: &BinarizationSpec) -> Result<LabeledDataset> {
    let text = std::fs::read_to_string(path)?;
    dataset::binarize(&dataset::parse_csv(&text)?, spec)
}

pub fn run_benchmark(dataset_path: &Path, config: &ExperimentConfig) -> Result<RunSummary> {
    let data = load_dataset(dataset_path, &config.binarization)?;
    run_benchmark_on(&data, config)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
}

pub fn to_json(summary: &RunSummary) -> Result<String> {
    let mut s = serde_json::to_string_pretty(summary)?;
    s.push('\n');
    Ok(s)
}

pub fn to_csv(summary: &RunSummary) -> String {
    let mut out = String::from("algorithm,k,run,correct,total,accuracy\n");
    for kr in &summary.per_k {
        for (run, (&c, &acc)) in kr.correct.iter().zip(&kr.accuracies).enumerate() {
            writeln!(
                out,
                "{},{},{},{},{},{}",
                summary.algorithm.name(),
                kr.k,
                run,
                c,
                summary.dataset_size,
                acc
            )
            .expect("writing to a String");
        }
    }
    out
}

pub fn render(summary: &RunSummary, format: OutputFormat) -> Result<String> {
    if summary.per_k.is_empty() || summary.per_k.iter().any(|k| k.accuracies.is_empty()) {
        return Err(Error::Config("summary has no runs to emit".into()));
    }
    match format {
        OutputFormat::Json => to_json(summary),
        OutputFormat::Csv => Ok(to_csv(summary)),
    }
}

/// Writes the summary to `path`, or to stdout when `path` is `None`.
pub fn emit_results(summary: &RunSummary, format: OutputFormat, path: Option<&Path>) -> Result<()> {
    let text = render(summary, format)?;
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyGrid {
    pub ns: Vec<u64>,
    pub ms: Vec<u32>,
    pub ps: Vec<u32>,
    pub max_qubits: usize,
}

impl Default for VerifyGrid {
    fn default() -> Self {
        VerifyGrid {
            ns: vec![3, 4],
            ms: vec![2, 3],
            ps: vec![0, 1, 2],
            max_qubits: qsim::DEFAULT_QUBIT_CEILING,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyInstance {
    pub n: u64,
    pub m: u32,
    pub p: u32,
    pub qubits: usize,
    pub rank_deviation: f64,
    pub ancilla_one_probability: f64,
    pub expected_ancilla_one: f64,
    pub ancilla_deviation: f64,
    /// Largest simulated marked-branch probability on a label below `m`.
    pub marked_small_label_mass: f64,
}

impl VerifyInstance {
    pub fn max_deviation(&self) -> f64 {
        self.rank_deviation
            .max(self.ancilla_deviation)
            .max(self.marked_small_label_mass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub tolerance: f64,
    pub instances: Vec<VerifyInstance>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.instances
            .iter()
            .all(|i| i.max_deviation() <= self.tolerance)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "N,m,p,qubits,rank_deviation,ancilla_one_probability,expected_ancilla_one,ancilla_deviation,marked_small_label_mass\n",
        );
        for i in &self.instances {
            writeln!(
                out,
                "{},{},{},{},{:e},{},{},{:e},{:e}",
                i.n,
                i.m,
                i.p,
                i.qubits,
                i.rank_deviation,
                i.ancilla_one_probability,
                i.expected_ancilla_one,
                i.ancilla_deviation,
                i.marked_small_label_mass
            )
            .expect("writing to a String");
        }
        out
    }
}

pub const VERIFY_TOLERANCE: f64 = 1e-9;

/// Register width for `n` distinct elements.
fn bits_for(n: u64) -> u32 {
    (u64::BITS - (n - 1).leading_zeros()).max(1)
}

/// Elements `2^bits - 1, 2^bits - 2, ...`, so the listing order differs from
/// the sort order and small basis values stay unused when `n < 2^bits`.
pub fn verification_input(n: u64) -> Result<SortInput> {
    let bits = bits_for(n);
    let top = (1u64 << bits) - 1;
    SortInput::new((0..n).map(|i| top - i).collect(), bits)
}

pub fn verify_instance(n: u64, m: u32, p: u32, max_qubits: usize) -> Result<VerifyInstance> {
    let params = MPParams::new(n, m, p)?;
    let input = verification_input(n)?;
    let state = qsim::run_sort_circuit(&input, m as usize, p, max_qubits)?;
    let simulated = qsim::rank_distribution(&state, &input)?;
    let closed = mp_sort::exact_rank_distribution(&params)?;
    let rank_deviation = simulated
        .iter()
        .zip(&closed.probs)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let marked = qsim::label_marginal(&state, &input, Some(true))?;
    let marked_small_label_mass = marked[..(m as usize - 1)]
        .iter()
        .copied()
        .fold(0.0, f64::max);
    let ancilla = state.ancilla_one_probability();
    let expected = mp_sort::derive(&params)?.sin2_alpha();
    Ok(VerifyInstance {
        n,
        m,
        p,
        qubits: state.qubit_count(),
        rank_deviation,
        ancilla_one_probability: ancilla,
        expected_ancilla_one: expected,
        ancilla_deviation: (ancilla - expected).abs(),
        marked_small_label_mass,
    })
}

pub fn verify_sim(grid: &VerifyGrid) -> Result<VerifyReport> {
    // fail fast on the ceiling before simulating anything
    for &n in &grid.ns {
        for &m in &grid.ms {
            let needed = m as usize * bits_for(n) as usize + 1;
            if needed > grid.max_qubits {
                return Err(Error::QubitCeiling {
                    needed,
                    ceiling: grid.max_qubits,
                });
            }
        }
    }
    let mut instances = Vec::new();
    for &n in &grid.ns {
        for &m in &grid.ms {
            if m as u64 > n {
                continue;
            }
            for &p in &grid.ps {
                instances.push(verify_instance(n, m, p, grid.max_qubits)?);
            }
        }
    }
    Ok(VerifyReport {
        tolerance: VERIFY_TOLERANCE,
        instances,
    })
}

/// `m, p_optimal, first-maximum p` rows followed by two `P_least` curves:
/// over `p` at fixed `m`, and over `m` at fixed `p`.
pub fn mp_tune_csv(n: u64, fixed_m: u32, max_p: u32, ms: &[u32], fixed_p: u32) -> Result<String> {
    let mut out = String::from("m,p_optimal,first_maximum_p\n");
    for &m in ms {
        writeln!(
            out,
            "{},{},{}",
            m,
            mp_sort::p_optimal(m),
            mp_sort::first_maximum_p(n, m)?
        )
        .expect("writing to a String");
    }
    out.push_str("\ncurve,N,m,p,p_least,p_least_approx\n");
    for p in 0..=max_p {
        let exact = mp_sort::p_least(&MPParams::new(n, fixed_m, p)?)?;
        writeln!(
            out,
            "over_p,{n},{fixed_m},{p},{exact},{}",
            mp_sort::p_least_approx(n, fixed_m, p)
        )
        .expect("writing to a String");
    }
    for &m in ms {
        let exact = mp_sort::p_least(&MPParams::new(n, m, fixed_p)?)?;
        writeln!(
            out,
            "over_m,{n},{m},{fixed_p},{exact},{}",
            mp_sort::p_least_approx(n, m, fixed_p)
        )
        .expect("writing to a String");
    }
    Ok(out)
}

/// Ideal and exact rank distributions per `m`; `p` defaults to `p_optimal(m)`.
pub fn mp_dist_csv(n: u64, ms: &[u32], p: Option<u32>) -> Result<String> {
    let mut out = String::from("N,m,p,x,ideal,exact\n");
    for &m in ms {
        let p = p.unwrap_or_else(|| mp_sort::p_optimal(m));
        let ideal = mp_sort::ideal_rank_distribution(n, m)?;
        let exact = mp_sort::exact_rank_distribution(&MPParams::new(n, m, p)?)?;
        for x in 1..=n {
            writeln!(out, "{n},{m},{p},{x},{},{}", ideal.get(x), exact.get(x))
                .expect("writing to a String");
        }
    }
    Ok(out)
}

pub fn parse_width_policy(s: &str) -> Result<WidthPolicy> {
    match s {
        "min" => Ok(WidthPolicy::PerAttributeMin),
        "max" => Ok(WidthPolicy::GlobalMax),
        list => list
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Config(format!("bad width {w:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WidthPolicy::Explicit),
    }
}

/// Default dataset location inside the source tree.
pub fn bundled_iris_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/iris.csv")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> LabeledDataset {
        let text = "0.1,0.2,A\n0.2,0.2,A\n0.1,0.3,A\n1.5,1.4,B\n1.4,1.5,B\n1.6,1.6,B\n";
        dataset::binarize(
            &dataset::parse_csv(text).unwrap(),
            &BinarizationSpec::default(),
        )
        .unwrap()
    }

    fn config(algorithm: Algorithm) -> ExperimentConfig {
        ExperimentConfig {
            algorithm,
            k_values: vec![1, 3],
            runs: 4,
            master_seed: 99,
            m: 2,
            p: 1,
            ..ExperimentConfig::default()
        }
    }

    #[test]
    fn accuracies_are_fractions_of_n() {
        let data = tiny();
        for algo in [Algorithm::Classical, Algorithm::Schuld, Algorithm::Mp] {
            let s = run_benchmark_on(&data, &config(algo)).unwrap();
            for kr in &s.per_k {
                for (&c, &a) in kr.correct.iter().zip(&kr.accuracies) {
                    assert!(c <= 6);
                    assert_eq!(a, c as f64 / 6.0);
                }
                let st = kr.stats;
                assert!(
                    st.min <= st.q1 && st.q1 <= st.median && st.median <= st.q3 && st.q3 <= st.max
                );
            }
            assert_eq!(
                s.per_k[0].accuracies.len(),
                if algo == Algorithm::Classical { 1 } else { 4 }
            );
            assert_eq!(
                s.per_k[0].unclassifiable.is_some(),
                algo == Algorithm::Schuld
            );
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let data = tiny();
        for algo in [Algorithm::Schuld, Algorithm::Mp] {
            let par = run_benchmark_on(&data, &config(algo)).unwrap();
            let seq = run_benchmark_on(
                &data,
                &ExperimentConfig {
                    parallel: false,
                    ..config(algo)
                },
            )
            .unwrap();
            assert_eq!(to_json(&par).unwrap(), to_json(&seq).unwrap());
        }
    }

    #[test]
    fn config_validation() {
        let data = tiny();
        let bad = [
            ExperimentConfig {
                runs: 0,
                ..config(Algorithm::Mp)
            },
            ExperimentConfig {
                k_values: vec![],
                ..config(Algorithm::Mp)
            },
            ExperimentConfig {
                k_values: vec![0],
                ..config(Algorithm::Mp)
            },
            ExperimentConfig {
                m: 6,
                ..config(Algorithm::Mp)
            },
            ExperimentConfig {
                t_multiplier: 1,
                ..config(Algorithm::Schuld)
            },
            ExperimentConfig {
                k_values: vec![6],
                ..config(Algorithm::Classical)
            },
        ];
        for c in bad {
            assert!(
                matches!(run_benchmark_on(&data, &c), Err(Error::Config(_))),
                "{c:?}"
            );
        }
    }

    #[test]
    fn csv_and_json_emission() {
        let s = run_benchmark_on(&tiny(), &config(Algorithm::Mp)).unwrap();
        let csv = render(&s, OutputFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 1 + 2 * 4);
        assert!(csv.starts_with("algorithm,k,run,correct,total,accuracy\nmp,1,0,"));
        let json = render(&s, OutputFormat::Json).unwrap();
        let back: RunSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);

        let mut empty = s.clone();
        empty.per_k[0].accuracies.clear();
        assert!(render(&empty, OutputFormat::Json).is_err());
    }

    #[test]
    fn verify_small_grid() {
        let report = verify_sim(&VerifyGrid::default()).unwrap();
        assert_eq!(report.instances.len(), 2 * 2 * 3);
        assert!(report.passed());
        let one = report
            .instances
            .iter()
            .find(|i| (i.n, i.m, i.p) == (4, 2, 1))
            .unwrap();
        assert!((one.ancilla_one_probability - 27.0 / 32.0).abs() < 1e-12);
    }

    #[test]
    fn verify_rejects_large_layouts() {
        let grid = VerifyGrid {
            ns: vec![150],
            ms: vec![5],
            ps: vec![8],
            max_qubits: 24,
        };
        assert!(matches!(
            verify_sim(&grid),
            Err(Error::QubitCeiling { needed: 41, .. })
        ));
    }

    #[test]
    fn verification_input_leaves_padding() {
        let input = verification_input(3).unwrap();
        assert_eq!(input.elements(), &[3, 2, 1]);
        assert_eq!(bits_for(2), 1);
        assert_eq!(bits_for(8), 3);
        assert_eq!(bits_for(9), 4);
    }

    #[test]
    fn tune_and_dist_tables() {
        let tune = mp_tune_csv(150, 5, 20, &[2, 3, 4, 5], 8).unwrap();
        assert!(tune.contains("\n5,8,8\n"));
        let dist = mp_dist_csv(10, &[2, 3], Some(1)).unwrap();
        assert_eq!(dist.lines().count(), 1 + 20);
    }

    #[test]
    fn width_policy_parsing() {
        assert_eq!(
            parse_width_policy("min").unwrap(),
            WidthPolicy::PerAttributeMin
        );
        assert_eq!(parse_width_policy("max").unwrap(), WidthPolicy::GlobalMax);
        assert_eq!(
            parse_width_policy("7,6,7,5").unwrap(),
            WidthPolicy::Explicit(vec![7, 6, 7, 5])
        );
        assert!(parse_width_policy("7,x").is_err());
    }
}
