use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn keli(args: &[&str]) -> Output {
    keli_env(args, &[])
}

fn keli_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_keli"));
    cmd.args(args).env_remove("KELI_THREADS").env("RUST_LOG", "error");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(o: &Output) -> String {
    assert!(o.status.success(), "exit {:?}\n{}", o.status.code(), stderr(o));
    stdout(o)
}

/// Rows after the `#` header and the column line.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn write_cache(dir: &Path, count: &str, digits: &str) -> String {
    let path = dir.join("nodes.knt");
    let p = path.to_str().unwrap().to_owned();
    ok(&keli(&["nodes", "--count", count, "--digits", digits, "--out", &p]));
    p
}

#[test]
fn alphas_from_a_cache_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = write_cache(dir.path(), "12", "200");
    let out = dir.path().join("alphas.csv");
    let args = ["alphas", "--nodes", &cache, "--out", out.to_str().unwrap()];
    ok(&keli(&args));
    let first = fs::read(&out).unwrap();
    ok(&keli(&args));
    assert_eq!(fs::read(&out).unwrap(), first);

    let text = String::from_utf8(first).unwrap();
    let r = rows(&text);
    assert_eq!(r.len(), 12);
    assert!(r[0][1].starts_with("2.31003495415444235245195960822"), "{}", r[0][1]);
    assert!(text.contains("# node_digits=200\n"));
}

#[test]
fn header_reconstructs_the_command_line() {
    let args = ["lambda", "--n", "1..3", "--k-max", "12", "--node-digits", "200"];
    let text = ok(&keli(&args));
    let first = text.lines().next().unwrap();
    let echoed: Vec<&str> = first.trim_start_matches("# ").split(' ').collect();
    assert_eq!(echoed[0], "keli");
    assert_eq!(&echoed[1..], &args);
}

#[test]
fn eval_at_one_half_matches_the_known_value() {
    let dir = tempfile::tempdir().unwrap();
    let cache = write_cache(dir.path(), "30", "200");
    let text = ok(&keli(&["eval", "--s", "0.5", "--nodes", &cache]));
    let r = rows(&text);
    assert!(r[0][2].starts_with("5.774507219796948948"), "{}", r[0][2]);
    assert_eq!(r[0][3], "0.0e0");
    let sig: f64 = r[0][4].parse().unwrap();
    assert!(sig >= 25.0);
    // the rounded column keeps only significant digits
    assert!(r[0][5].len() < 40, "{}", r[0][5]);

    let series = ok(&keli(&["eval", "--s", "0.5", "--nodes", &cache, "--series"]));
    assert!(rows(&series)[0][2].starts_with("5.774507219796948948"));
}

#[test]
fn json_mirrors_csv() {
    let args = ["nu", "--k-max", "12", "--node-digits", "200", "--q-max", "10"];
    let csv = ok(&keli(&args));
    let mut with_json = args.to_vec();
    with_json.extend(["--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&ok(&keli(&with_json))).unwrap();
    let r = rows(&csv);
    assert_eq!(r.len(), 5);
    assert_eq!(json["rows"].as_array().unwrap().len(), 5);
    assert_eq!(json["columns"][1], "nu_q");
    for (i, row) in r.iter().enumerate() {
        assert_eq!(json["rows"][i]["q"], row[0].as_str());
        assert_eq!(json["rows"][i]["nu_q"], row[1].as_str());
    }
    assert!(r[0][1].starts_with("2.30988022834241047767"), "{}", r[0][1]);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["rhsim", "--delta", "0.25", "--n-max", "2000", "--values"];
    let one = ok(&keli_env(&args, &[("KELI_THREADS", "1")]));
    let four = ok(&keli_env(&args, &[("KELI_THREADS", "4")]));
    assert_eq!(one, four);
    assert_eq!(rows(&one).len(), 2000);
}

#[test]
fn rhsim_reports_the_first_negative_sum() {
    let r = rows(&ok(&keli(&["rhsim", "--delta", "0.25", "--n-max", "5000"])));
    let n: u64 = r[0][3].parse().unwrap();
    assert!((100..5000).contains(&n));
    let none = rows(&ok(&keli(&["rhsim", "--delta", "0", "--n-max", "3000"])));
    assert_eq!(none[0][3], "none");
}

#[test]
fn exit_codes() {
    let usage = keli(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(1));
    let range = keli(&["lambda", "--n", "5..2"]);
    assert_eq!(range.status.code(), Some(1));
    assert!(stderr(&range).starts_with("error\tusage\t"));
    assert_eq!(keli(&["--help"]).status.code(), Some(0));
    assert_eq!(keli(&["--version"]).status.code(), Some(0));

    let far = keli(&["eval", "--s", "5000", "--k-max", "12", "--node-digits", "200"]);
    assert_eq!(far.status.code(), Some(2));
    assert!(stderr(&far).lines().any(|l| l.starts_with("error\tinsufficient_truncation\t")));

    let missing = keli(&["alphas", "--nodes", "/nonexistent/nodes.knt"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).starts_with("error\tio\t"));

    let too_many = keli(&["alphas", "--k-max", "12", "--node-digits", "200", "--digits", "300"]);
    assert_eq!(too_many.status.code(), Some(2));
    assert!(stderr(&too_many).starts_with("error\tinsufficient_precision\t"));
}

#[test]
fn cache_check_catches_damage() {
    let dir = tempfile::tempdir().unwrap();
    let cache = write_cache(dir.path(), "6", "120");
    let report = ok(&keli(&["verify", "--cache-only", "--nodes", &cache]));
    assert!(rows(&report).iter().all(|r| r[2] == "true"));

    let text = fs::read_to_string(&cache).unwrap();
    let cut: Vec<&str> = text.lines().collect();
    fs::write(&cache, cut[..cut.len() - 2].join("\n")).unwrap();
    let broken = keli(&["verify", "--cache-only", "--nodes", &cache]);
    assert_eq!(broken.status.code(), Some(2));
    assert!(stderr(&broken).starts_with("error\ttruncated\t"), "{}", stderr(&broken));
}

#[test]
fn verify_recomputes_the_first_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = dir.path().join("zeros.csv");
    fs::write(&fixture, "k,re,im\n1,76.010927161420,72.007003457304\n2,167.539562791694,80.244129087905\n").unwrap();
    let f = fixture.to_str().unwrap();
    let text = ok(&keli(&["verify", "--fixture", f, "--k", "1..2", "--digits", "120"]));
    assert!(text.contains("# status=Pass\n"));
    assert_eq!(rows(&text).len(), 2);

    fs::write(&fixture, "k,re,im\n1,76.010927161520,72.007003457304\n").unwrap();
    let bad = keli(&["verify", "--fixture", f, "--k", "1", "--digits", "120"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).starts_with("error\tverification\t"));
    assert!(stdout(&bad).contains("# status=Fail\n"));
}

#[test]
fn zeros_from_k_onwards() {
    let text = ok(&keli(&["zeros", "--k", "2..2", "--digits", "120"]));
    let r = rows(&text);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0][0], "2");
    assert!(r[0][1].starts_with("1.675395627916"), "{}", r[0][1]);
}

#[test]
fn fixture_studies() {
    let fit = rows(&ok(&keli(&["fit"])));
    let c: f64 = fit[0][1].parse().unwrap();
    assert!((c - 16.0).abs() < 0.5);
    assert_eq!(rows(&ok(&keli(&["fit", "--rescale"]))).len(), 3520);

    let d = rows(&ok(&keli(&["fdiff", "--order", "700", "--normalize", "pow2"])));
    assert_eq!(d.len(), 3520 - 700);
    let two = rows(&ok(&keli(&["fdiff", "--order", "10", "--stride", "2", "--offset", "1"])));
    assert_eq!(two.len(), 1760 - 10);
    let p1 = ok(&keli(&["fdiff", "--order", "20", "--perturb", "4e-5", "--seed", "7"]));
    let p2 = ok(&keli(&["fdiff", "--order", "20", "--perturb", "4e-5", "--seed", "7"]));
    assert_eq!(p1, p2);
    assert_eq!(keli(&["fdiff", "--order", "4000"]).status.code(), Some(2));

    let prod = ok(&keli(&["product", "--constant", "0.0230988022834241047767624316", "--count", "3520"]));
    let v: f64 = rows(&prod)[0][3].parse().unwrap();
    assert!((v / 0.005774507219796949 - 1.0).abs() < 1e-4, "{v}");
}
