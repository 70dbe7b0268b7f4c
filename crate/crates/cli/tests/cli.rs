use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use complex_moments::catalog;
use complex_moments::{Complex64, MeasureP1};
use complex_moments_cli::csv_io::{number, Table};
use complex_moments_cli::run;
use complex_moments_cli::spec_file::SpecFile;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["cmoments"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fixtures_match_the_catalog() {
    let cases: [(&str, MeasureP1); 5] = [
        ("cauchy01", catalog::cauchy_with_terms(0.0, 1.0, 2.0, 122).unwrap()),
        ("cauchy34", catalog::cauchy(3.0, 4.0, 10.0).unwrap()),
        ("example1", catalog::quartic()),
        ("example2", catalog::quartic_ratio()),
        ("example3_a1", catalog::shifted_quartic_ratio(1.0)),
    ];
    for (name, m) in cases {
        let text = fs::read_to_string(fixture(name)).unwrap();
        let spec = SpecFile::parse(&text).unwrap();
        assert_eq!(spec, SpecFile::from_measure(&m), "{name}: regenerate with the write_fixtures example");
        assert_eq!(spec.to_measure().unwrap(), m, "{name}");
    }
}

#[test]
fn spec_file_roundtrip_and_unknown_keys() {
    let spec = SpecFile::from_measure(&catalog::cauchy(0.5, 1.0, 3.0).unwrap());
    assert_eq!(SpecFile::parse(&spec.to_json()).unwrap(), spec);
    let bad = r#"{"atoms": [], "compact_density": null, "tail": {"R": 2, "r": 1, "coeffs": []}, "extra": 1}"#;
    assert!(SpecFile::parse(bad).is_err());
    let bad_atom = r#"{"atoms": [{"x": 0, "w": 1, "y": 2}], "compact_density": null, "tail": {"R": 2, "r": 1, "coeffs": []}}"#;
    assert!(SpecFile::parse(bad_atom).is_err());
    let ok = r#"{"atoms": [{"x": 0, "w": 1}], "compact_density": null, "tail": {"R": 2, "r": 1, "coeffs": []}}"#;
    let m = SpecFile::parse(ok).unwrap().to_measure().unwrap();
    assert!(m.validate().is_valid());
}

#[test]
fn validate_reports() {
    let (code, out, _) = invoke(&["validate", path(&fixture("cauchy01"))]);
    assert_eq!(code, 0);
    assert_eq!(out, "violation,detail\n");

    let dir = tempfile::tempdir().unwrap();
    let negative = dir.path().join("negative.json");
    let half = dir.path().join("half.json");
    fs::write(
        &negative,
        r#"{"atoms": [{"x": 0, "w": 1}], "compact_density": null, "tail": {"R": 2, "r": 1, "coeffs": [{"n": 2, "a": -0.3183098861837907}]}}"#,
    )
    .unwrap();
    fs::write(&half, r#"{"atoms": [{"x": 0, "w": 0.5}], "compact_density": null, "tail": {"R": 2, "r": 1, "coeffs": []}}"#)
        .unwrap();
    let (code, out, err) = invoke(&["validate", path(&negative)]);
    assert_eq!(code, 2, "{err}");
    assert!(out.lines().count() > 1);
    let (code, out, _) = invoke(&["validate", path(&half)]);
    assert_eq!(code, 2);
    assert!(out.lines().nth(1).unwrap().starts_with("total-mass,"), "{out}");
    let (code, _, _) = invoke(&["moments", path(&half)]);
    assert_eq!(code, 2);
}

#[test]
fn moments_of_cauchy01() {
    let (code, out, err) = invoke(&["moments", path(&fixture("cauchy01")), "--n-max", "4"]);
    assert_eq!(code, 0, "{err}");
    let t = Table::read(out.as_bytes()).unwrap();
    assert_eq!(t.header, ["n", "re", "im"]);
    let m = t.column_complex("re", "im").unwrap();
    let want = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 0.0)];
    for (v, (re, im)) in m.iter().zip(want) {
        assert!((v - Complex64::new(re, im)).norm() < 1e-8);
    }
}

#[test]
fn tensor_variance_of_example1() {
    let (code, out, _) = invoke(&["cumulants", path(&fixture("example1")), "--kind", "tensor", "--n-max", "2"]);
    assert_eq!(code, 0);
    let t = Table::read(out.as_bytes()).unwrap();
    let k = t.column_complex("re", "im").unwrap();
    assert_eq!(t.column_f64("n").unwrap(), [1.0, 2.0]);
    assert!((k[1] - Complex64::new(0.5, 0.0)).norm() < 1e-10);
    let (_, ext, _) = invoke(&[
        "cumulants",
        path(&fixture("example1")),
        "--kind",
        "tensor",
        "--n-max",
        "2",
        "--method",
        "extraction",
    ]);
    let e = Table::read(ext.as_bytes()).unwrap().column_complex("re", "im").unwrap();
    assert!((e[1] - k[1]).norm() < 1e-9);
}

#[test]
fn convolve_power_and_limit() {
    let c01 = fixture("cauchy01");
    let (code, out, _) = invoke(&["convolve", path(&c01), path(&c01), "--kind", "free", "--n-max", "3"]);
    assert_eq!(code, 0);
    let m = Table::read(out.as_bytes()).unwrap().column_complex("re", "im").unwrap();
    assert!((m[3] - Complex64::new(0.0, 2.0).powi(3)).norm() < 1e-8);
    let (code, out, _) = invoke(&["power", path(&c01), "--kind", "monotone", "-N", "3", "--n-max", "3"]);
    assert_eq!(code, 0);
    let m = Table::read(out.as_bytes()).unwrap().column_complex("re", "im").unwrap();
    assert!((m[2] - Complex64::new(-9.0, 0.0)).norm() < 1e-8);
    let (code, out, _) = invoke(&["limit", path(&fixture("example1")), "--kind", "boolean", "--n-list", "1,2,4"]);
    assert_eq!(code, 0);
    let t = Table::read(out.as_bytes()).unwrap();
    assert_eq!(t.header, ["kind", "N", "n", "re", "im", "deviation"]);
    assert_eq!(t.rows.len(), 3 * 7);
    let dev = t.column_f64("deviation").unwrap();
    assert!(dev[20] < dev[0]);
}

#[test]
fn transform_points_file() {
    let dir = tempfile::tempdir().unwrap();
    let zs = dir.path().join("z.csv");
    fs::write(&zs, "re,im\n0,-2\n3,-0.0001\n").unwrap();
    let (code, out, err) = invoke(&["transform", path(&fixture("cauchy01")), "--which", "stieltjes", "--points", path(&zs)]);
    assert_eq!(code, 0, "{err}");
    let t = Table::read(out.as_bytes()).unwrap();
    let g = t.column_complex("value_re", "value_im").unwrap();
    assert!((g[0] - Complex64::new(0.0, 1.0 / 3.0)).norm() < 1e-12);
    let (code, out, _) = invoke(&["transform", path(&fixture("cauchy01")), "--which", "reciprocal", "--points", path(&zs)]);
    assert_eq!(code, 0);
    let f = Table::read(out.as_bytes()).unwrap().column_complex("value_re", "value_im").unwrap();
    assert!((f[0] - Complex64::new(0.0, -3.0)).norm() < 1e-10);

    let ts = dir.path().join("t.csv");
    fs::write(&ts, "t\n1.0\n-1.0\n").unwrap();
    let (code, out, _) = invoke(&["transform", path(&fixture("cauchy34")), "--which", "fourier", "--points", path(&ts)]);
    assert_eq!(code, 0);
    let f = Table::read(out.as_bytes()).unwrap().column_complex("value_re", "value_im").unwrap();
    let want = (Complex64::new(-4.0, 3.0)).exp();
    assert!((f[0] - want).norm() < 1e-10);
    assert!((f[1] - want.conj()).norm() < 1e-10);

    // on the support: a numeric-domain error
    let real = dir.path().join("real.csv");
    fs::write(&real, "re,im\n0.5,0\n").unwrap();
    let (code, _, err) = invoke(&["transform", path(&fixture("cauchy01")), "--which", "stieltjes", "--points", path(&real)]);
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = invoke(&["transform", path(&fixture("cauchy01")), "--which", "fourier", "--points", path(&zs)]);
    assert_eq!(code, 1);
}

#[test]
fn radius_row() {
    let (code, out, _) = invoke(&["radius", path(&fixture("cauchy01")), "--n-max", "40"]);
    assert_eq!(code, 0);
    let t = Table::read(out.as_bytes()).unwrap();
    let r = t.column_f64("radius").unwrap()[0];
    assert!((0.95..=1.05).contains(&r));
    let (code, out, _) = invoke(&["radius", path(&fixture("cauchy01")), "--n-max", "12"]);
    assert_eq!(code, 0);
    let t = Table::read(out.as_bytes()).unwrap();
    assert_eq!(t.rows[0][t.column_index("order").unwrap()], "");
    let (code, _, _) = invoke(&["radius", path(&fixture("cauchy01")), "--n-max", "5"]);
    assert_eq!(code, 3);
}

#[test]
fn numeric_and_usage_errors() {
    let c01 = fixture("cauchy01");
    assert_eq!(invoke(&["cumulants", path(&c01), "--kind", "free", "--n-max", "11"]).0, 3);
    assert_eq!(invoke(&["cumulants", path(&c01), "--kind", "weird"]).0, 1);
    assert_eq!(invoke(&["moments", path(&c01), "--bogus"]).0, 1);
    assert_eq!(invoke(&["moments", "/nonexistent/spec.json"]).0, 1);
    assert_eq!(invoke(&[]).0, 1);
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("moments"));
}

#[test]
fn output_is_deterministic_and_exact() {
    let spec = fixture("example3_a1");
    let args = ["moments", path(&spec), "--n-max", "12"];
    let (_, a, _) = invoke(&args);
    let (_, b, _) = invoke(&args);
    assert_eq!(a, b);
    let t = Table::read(a.as_bytes()).unwrap();
    let mut again = Vec::new();
    t.write(&mut again).unwrap();
    assert_eq!(String::from_utf8(again).unwrap(), a);
    for x in [0.1, -1.0 / 3.0, 1e-300, 6.02e23, std::f64::consts::PI] {
        assert_eq!(number(x).parse::<f64>().unwrap(), x);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cmoments");
    let ok = Command::new(bin).args(["validate", path(&fixture("example2"))]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let usage = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    assert!(!usage.stderr.is_empty());
    let numeric = Command::new(bin)
        .args(["power", path(&fixture("example1")), "--kind", "free", "-N", "2", "--n-max", "12"])
        .output()
        .unwrap();
    assert_eq!(numeric.status.code(), Some(3));
}
