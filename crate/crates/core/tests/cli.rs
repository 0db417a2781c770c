use std::process::{Command, Output};

fn mpknn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpknn"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn encode_prints_one_line_per_pattern() {
    let o = mpknn(&["encode"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 150);
    let (bits, class) = lines[0].split_once(' ').unwrap();
    assert_eq!(bits.len(), 25);
    assert!(bits.chars().all(|c| c == '0' || c == '1'));
    assert_eq!(class, "Iris-setosa");
}

#[test]
fn encode_custom_dataset_and_widths() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("toy.csv");
    std::fs::write(&csv, "a,b,label\n0.1,0.2,x\n0.3,0.0,y\n").unwrap();
    let o = mpknn(&[
        "encode",
        "--dataset",
        csv.to_str().unwrap(),
        "--widths",
        "3,2",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    // 1 -> 001, 2 -> 11 ; 3 -> 010, 0 -> 00
    assert_eq!(stdout(&o), "00111 x\n01000 y\n");
}

#[test]
fn width_overflow_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("toy.csv");
    std::fs::write(&csv, "0.9,x\n0.1,y\n").unwrap();
    let o = mpknn(&[
        "encode",
        "--dataset",
        csv.to_str().unwrap(),
        "--widths",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn missing_dataset_is_an_io_error() {
    let o = mpknn(&["encode", "--dataset", "/nonexistent/iris.csv"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bad_arguments_exit_one() {
    assert_eq!(mpknn(&["bench", "--algo", "nope"]).status.code(), Some(1));
    assert_eq!(mpknn(&["bench", "--k", "0"]).status.code(), Some(1));
    assert_eq!(
        mpknn(&["bench", "--algo", "schuld", "--t-mult", "0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn bench_csv_has_one_row_per_k_and_run() {
    let o = mpknn(&[
        "bench", "--algo", "schuld", "--k", "1,3", "--runs", "4", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("algorithm,k,run,correct,total,accuracy"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn bench_json_carries_digest_and_params() {
    let o = mpknn(&[
        "bench",
        "--algo",
        "classical",
        "--k",
        "5",
        "--distance",
        "euclidean",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dataset_size"], 150);
    assert_eq!(v["dataset_digest"].as_str().unwrap().len(), 64);
    assert_eq!(v["per_k"][0]["k"], 5);
    assert_eq!(v["per_k"][0]["correct"][0], 145);
}

#[test]
fn verify_sim_small_grid_passes() {
    let o = mpknn(&["verify-sim", "--n", "3,4", "--m", "2", "--p", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn verify_sim_refuses_iris_scale() {
    let o = mpknn(&["verify-sim", "--n", "150", "--m", "5", "--p", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("qubit"));
}

#[test]
fn mp_tune_and_dist_emit_csv() {
    let tune = mpknn(&["mp-tune", "--max-p", "3"]);
    assert_eq!(tune.status.code(), Some(0));
    assert!(!stdout(&tune).is_empty());
    let dist = mpknn(&["mp-dist", "--n", "10", "--m", "2,3"]);
    assert_eq!(dist.status.code(), Some(0));
    assert!(stdout(&dist).lines().count() > 10);
}
