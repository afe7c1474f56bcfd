use std::path::PathBuf;
use std::process::Command;

use reslat_cli::doc::AlgebraDocument;
use reslat_cli::{run, Outcome, EXIT_INVALID, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn reslat(args: &[&str]) -> Outcome {
    run(std::iter::once("reslat").chain(args.iter().copied()))
}

#[test]
fn exemplars_verify_cleanly() {
    for f in ["a7.alg", "chain2.alg", "chain3.alg", "boolean4.alg", "lukasiewicz4.alg"] {
        let o = reslat(&["verify", &fixture(f)]);
        assert_eq!(o.code, EXIT_OK, "{f}: {}", o.stdout);
        assert!(o.stdout.contains(" 0 failed"), "{f}");
    }
    assert_ne!(EXIT_VERIFY_FAILED, EXIT_OK);
}

#[test]
fn broken_fixture_is_rejected() {
    let o = reslat(&["validate", &fixture("a7_broken.alg")]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(
        o.stdout.contains("ProdCommutative: x⊙y = y⊙x fails at (b, e)"),
        "{}",
        o.stdout
    );
    for cmd in ["filters", "verify", "info"] {
        let o = reslat(&[cmd, &fixture("a7_broken.alg")]);
        assert_eq!(o.code, EXIT_INVALID, "{cmd}");
        assert!(o.stderr.contains("violation"), "{cmd}: {}", o.stderr);
    }
}

#[test]
fn a7_filters_listing() {
    let o = reslat(&["filters", &fixture("a7.alg")]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "{1}\n{e,1}\n{b,d,1}\n{a,b,c,d,e,1}\n{0,a,b,c,d,e,1}\n");
}

#[test]
fn usage_errors() {
    let dir = std::env::temp_dir();
    let missing = dir.join("reslat-does-not-exist.alg");
    let cases: Vec<Vec<String>> = vec![
        vec!["frobnicate".into()],
        vec!["search".into()],
        vec!["search".into(), "--size".into(), "9".into()],
        vec![
            "search".into(),
            "--size".into(),
            "3".into(),
            "--where".into(),
            "boolean".into(),
        ],
        vec![
            "search".into(),
            "--size".into(),
            "3".into(),
            "--jobs".into(),
            "0".into(),
        ],
        vec![
            "search".into(),
            "--size".into(),
            "4".into(),
            "--lattice".into(),
            fixture("a7.alg"),
        ],
        vec!["filters".into(), missing.to_string_lossy().into_owned()],
        vec!["verify".into()],
    ];
    for args in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = reslat(&refs);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}: {}", o.stderr);
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(reslat(&["--help"]).code, EXIT_OK);
}

#[test]
fn parse_errors_carry_positions() {
    let path = std::env::temp_dir().join(format!("reslat-parse-{}.alg", std::process::id()));
    let text = std::fs::read_to_string(fixture("chain2.alg"))
        .unwrap()
        .replace("  1 | 0 1\nprod", "  1 | 0 q\nprod");
    std::fs::write(&path, text).unwrap();
    let o = reslat(&["filters", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(o.code, EXIT_INVALID);
    assert!(o.stderr.contains(":10:9: unknown element name(s): q"), "{}", o.stderr);
}

#[test]
fn json_reports_are_stable() {
    for cmd in [
        "validate", "info", "filters", "spectrum", "coann", "alpha", "classify", "verify",
    ] {
        let a = reslat(&["--format", "json", cmd, &fixture("a7.alg")]);
        let b = reslat(&[cmd, "--format", "json", &fixture("a7.alg")]);
        assert_eq!(a.code, EXIT_OK, "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
        assert!(v.is_object());
    }
    let one = reslat(&["search", "--size", "5", "--jobs", "1", "--format", "json"]);
    let many = reslat(&["search", "--size", "5", "--jobs", "8", "--format", "json"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn search_emits_parseable_documents() {
    let o = reslat(&["search", "--size", "4"]);
    assert_eq!(o.code, EXIT_OK);
    let body: String = o
        .stdout
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let docs: Vec<&str> = body.split("---\n").collect();
    assert_eq!(docs.len(), 7);
    for d in docs {
        let parsed = AlgebraDocument::parse(d).unwrap();
        assert!(parsed.to_algebra().is_ok());
        assert_eq!(parsed.render(), d);
    }
    assert!(o.stdout.contains("# models: 7\n"));
}

#[test]
fn search_on_a_given_lattice_with_a_predicate() {
    let o = reslat(&[
        "search",
        "--lattice",
        &fixture("a7.alg"),
        "--where",
        "quasicomplemented ∧ ¬weakly_disjunctive",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let a7 = AlgebraDocument::parse(&std::fs::read_to_string(fixture("a7.alg")).unwrap()).unwrap();
    let prod_rows = a7
        .render()
        .split("prod:\n")
        .nth(1)
        .unwrap()
        .split("impl:")
        .next()
        .unwrap()
        .to_string();
    assert!(o.stdout.contains(&prod_rows));
    assert!(o.stdout.contains("# matched with theorem failures: 0"));
    let none = reslat(&["search", "--size", "5", "--where", "false"]);
    assert!(none.stdout.contains("# matched: 0\n"));
    assert!(!none.stdout.contains("elements:"));
}

#[test]
fn binary_exit_codes_and_jobs_variable() {
    let bin = env!("CARGO_BIN_EXE_reslat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    assert_eq!(status(&["verify", &fixture("a7.alg")]).status.code(), Some(EXIT_OK));
    assert_eq!(
        status(&["validate", &fixture("a7_broken.alg")]).status.code(),
        Some(EXIT_INVALID)
    );
    assert_eq!(status(&["nonsense"]).status.code(), Some(EXIT_USAGE));
    let out = Command::new(bin)
        .args(["search", "--size", "3"])
        .env("RESLAT_JOBS", "3")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stderr).contains("3 worker(s)"));
}

#[test]
fn a7_coannihilator_and_alpha_reports() {
    let c = reslat(&["coann", &fixture("a7.alg")]);
    assert_eq!(c.code, EXIT_OK);
    assert!(c.stdout.contains("  covers: F1<F2 F1<F3 F2<F5 F3<F5\n"), "{}", c.stdout);
    assert!(c.stdout.contains("dense: {0,a,c}\n"));
    let a = reslat(&["alpha", &fixture("a7.alg")]);
    assert_eq!(a.code, EXIT_OK);
    assert!(a.stdout.contains("F4 = {a,b,c,d,e,1}  not alpha\n"));
    assert!(a.stdout.contains("  F2 | F3 F5 F3 F5\n"), "{}", a.stdout);
    assert!(a.stdout.contains("adjunction: holds"));
    assert!(!a.stdout.contains("FAIL"));
}
