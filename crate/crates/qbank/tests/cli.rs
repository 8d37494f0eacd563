use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qbank(args: &[&str]) -> Output {
    qbank_env(args, None)
}

fn qbank_env(args: &[&str], seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qbank"));
    cmd.args(args).env_remove("QBANK_SEED");
    if let Some(s) = seed {
        cmd.env("QBANK_SEED", s);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn generate_correlation_pool() {
    let dir = tempfile::tempdir().unwrap();
    let o = qbank(&["generate", "--family", "Qcorr", "--count", "30", "--seed", "7", "--clock", "c", "--out", p(dir.path())]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let manifest = stdout(&o);
    assert_eq!(manifest.lines().count(), 31);
    assert!(manifest.starts_with("Qcorr.html\t"));
    assert_eq!(manifest.lines().filter(|l| l.contains(".svg\t")).count(), 30);
    let html = fs::read_to_string(dir.path().join("Qcorr.html")).unwrap();
    assert!(html.starts_with("<HTML>\n<HEAD><TITLE>c</TITLE></HEAD>"));
    assert_eq!(html.matches("Title: Qcorr").count(), 30);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["generate", "--family", "Qcorr", "--count", "0"][..],
        &["generate", "--family", "NoSuchFamily"],
        &["generate"],
        &["generate", "--family", "ZScore", "--format", "pdf"],
        &["generate", "--family", "ZScore", "--bound", "z-sd-min=0"],
        &["frobnicate"],
    ] {
        let o = qbank(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn runtime_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("blocker");
    fs::write(&blocker, "x").unwrap();
    let o = qbank(&["generate", "--family", "ZScore", "--count", "1", "--out", p(&blocker)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("blocker"));
    let o = qbank(&["generate", "--family", "DiceSum", "--format", "txt", "--out", p(dir.path())]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn seed_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let run = |extra: &[&str], env: Option<&str>| {
        let out = dir.path().join("o");
        let mut args = vec!["generate", "--family", "ZScore", "--count", "3", "--out", p(&out)];
        args.extend_from_slice(extra);
        let o = qbank_env(&args, env);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o)
    };
    let cfg = dir.path().join("run.conf");
    fs::write(&cfg, "# seeds\nseed = 5\n").unwrap();
    let five = run(&["--seed", "5"], None);
    let six = run(&["--seed", "6"], None);
    assert_ne!(five, six);
    assert_eq!(run(&[], Some("5")), five);
    assert_eq!(run(&["--config", p(&cfg)], Some("6")), five);
    assert_eq!(run(&["--config", p(&cfg), "--seed", "6"], Some("5")), six);
}

#[test]
fn validate_round_trip_and_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let o = qbank(&["generate", "--family", "LinEqRatCffRatAns", "--count", "5", "--seed", "3", "--out", p(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    let file = dir.path().join("LinEqRatCffRatAnsTXT.txt");
    let o = qbank(&["validate", p(&file)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("ok, 5 questions"));

    let text = fs::read_to_string(&file).unwrap();
    let dup = dir.path().join("dup.txt");
    fs::write(&dup, text.replace("LinEqRatCffRatAns-0002", "LinEqRatCffRatAns-0001")).unwrap();
    let o = qbank(&["validate", p(&dup)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("duplicate title `LinEqRatCffRatAns-0001` (questions 1 and 2)"), "{}", stderr(&o));

    let cut = dir.path().join("cut.txt");
    let keep: Vec<&str> = text.lines().take(4).collect();
    fs::write(&cut, keep.join("\n") + "\n").unwrap();
    let o = qbank(&["validate", p(&cut)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));

    let wrong = dir.path().join("wrong.txt");
    fs::write(
        &wrong,
        "Type: FMB\nTitle: T-0001\n1. Solve.\n\n17z + 842 = -5z - 16\n\nz = [-39, -38]\n",
    )
    .unwrap();
    let o = qbank(&["validate", p(&wrong)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("`-38` does not solve"), "{}", stderr(&o));
}

#[test]
fn assess_reports() {
    let dir = tempfile::tempdir().unwrap();
    let exact = dir.path().join("exact.csv");
    fs::write(&exact, "student_id,hw_pct,course_pct\na,10,25\nb,50,45\nc,90,65\nd,70,55\n").unwrap();
    let o = qbank(&["assess", p(&exact)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "full fit: slope = 0.5000, intercept = 20.0000, R² = 1.0000, n = 4\n");

    let mixed = dir.path().join("mixed.csv");
    let mut csv = String::from("student_id,hw_pct,course_pct\n");
    for i in 0..20 {
        let hw = 60 + 2 * i;
        csv.push_str(&format!("s{i},{hw},{}\n", hw - 5 + (i % 3)));
    }
    csv.push_str("low1,5,70\nlow2,10,72\nlow3,12,69\nlow4,8,75\n");
    fs::write(&mixed, csv).unwrap();
    let o = qbank(&["assess", p(&mixed), "--exclude", "low1,low2", "--exclude", "low3", "--exclude", "low4", "--line-slope", "1", "--line-intercept", "-6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = stdout(&o);
    let r2: Vec<f64> = report
        .lines()
        .filter_map(|l| l.split("R² = ").nth(1))
        .map(|s| s[..6].parse().unwrap())
        .collect();
    assert_eq!(r2.len(), 2, "{report}");
    assert!(r2[1] > r2[0], "{report}");
    assert!(report.contains("excluded: low1, low2, low3, low4"));
    assert!(report.contains("below line: 0\n"), "{report}");

    let missing = dir.path().join("absent.csv");
    let o = qbank(&["assess", p(&missing)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("absent.csv"));

    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "student_id,hw_pct,course_pct\na,10,25\nb,150,45\n").unwrap();
    let o = qbank(&["assess", p(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("row 3"), "{}", stderr(&o));
}

#[test]
fn families_listed() {
    let o = qbank(&["families"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    assert!(out.contains("Qcorr\tMC\t"));
    assert!(out.contains("LinEqIntCffIntSol\tFITB\t"));
}
