use mpknn::classical::{knn_classify, DistanceKind};
use mpknn::dataset::{self, BinarizationSpec};
use mpknn::experiment::{self, dataset_digest};
use mpknn::{mp_qknn, schuld};

fn iris() -> dataset::LabeledDataset {
    experiment::load_dataset(
        &experiment::bundled_iris_path(),
        &BinarizationSpec::default(),
    )
    .unwrap()
}

#[test]
fn binarization_shape() {
    let data = iris();
    assert_eq!(data.len(), 150);
    assert_eq!(data.widths, vec![7, 6, 7, 5]);
    assert_eq!(data.n, 25);
    assert_eq!(
        data.class_names,
        vec!["Iris-setosa", "Iris-versicolor", "Iris-virginica"]
    );
    let per_class: Vec<usize> = (0..3)
        .map(|c| data.patterns.iter().filter(|p| p.class_id == c).count())
        .collect();
    assert_eq!(per_class, vec![50, 50, 50]);
}

#[test]
fn digest_is_stable_for_the_same_data() {
    assert_eq!(dataset_digest(&iris()), dataset_digest(&iris()));
}

#[test]
fn folds_leave_one_out() {
    let data = iris();
    let folds = dataset::loo_folds(&data).unwrap();
    assert_eq!(folds.len(), 150);
    for f in &folds {
        assert_eq!(f.training.len(), 149);
        assert_eq!(f.query.bits, data.patterns[f.index].bits);
    }
}

#[test]
fn every_fold_is_classifiable_by_each_model() {
    let data = iris();
    let params = mpknn::mp_sort::MPParams::new(149, 5, 8).unwrap();
    for f in dataset::loo_folds(&data).unwrap() {
        let c = knn_classify(&f.training, &f.query, 5, DistanceKind::HammingOnBits).unwrap();
        assert!(c < 3);
        let model = schuld::build_model(&f.training, &f.query).unwrap();
        let d = schuld::class_distribution(&model).unwrap();
        assert!((d.probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let labeling =
            mp_qknn::order_labels(&f.training, &f.query, mp_qknn::TiePolicy::ByTrainIndex).unwrap();
        let d =
            mp_qknn::class_distribution(&labeling, &f.training.class_ids(), 3, &params).unwrap();
        assert!((d.probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
