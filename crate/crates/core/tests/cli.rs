use std::path::Path;
use std::process::{Command, Output};

fn mrlrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mrlrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds_prints_key_values() {
    let o = mrlrc(&["bounds", "40,7,3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "q_unconditional=34"), "{text}");
    assert!(text.lines().any(|l| l == "gopi_alpha=1/3"), "{text}");
}

#[test]
fn bounds_accepts_long_codes() {
    let o = mrlrc(&["bounds", "200,7,3", "--csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("200,50,"));
}

#[test]
fn witness_eq1_line() {
    let o = mrlrc(&["witness", "12,7,3", "--eq", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "F=; X=0,4,8; k'=7; n'=9; verified=true");
}

#[test]
fn invalid_params_exit_three() {
    let o = mrlrc(&["axioms", "9,4,3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("divisibility"));
}

#[test]
fn parse_and_usage_errors_exit_two() {
    assert_eq!(mrlrc(&["axioms", "9,4"]).status.code(), Some(2));
    assert_eq!(mrlrc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        mrlrc(&["witness", "8,4,3", "--eq", "7"]).status.code(),
        Some(2)
    );
}

#[test]
fn size_refusal_exits_four() {
    assert_eq!(mrlrc(&["axioms", "16,6,3"]).status.code(), Some(4));
    assert_eq!(mrlrc(&["oracle", "20,6,4"]).status.code(), Some(4));
}

#[test]
fn axioms_and_flats_pass() {
    let o = mrlrc(&["axioms", "8,4,3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("axioms: pass"));
    let o = mrlrc(&["flats", "8,4,3", "--check"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("closure_agrees=true"));
}

#[test]
fn emitted_witnesses_reverify() {
    for params in ["8,4,3", "12,7,3", "9,4,2", "12,6,2"] {
        let o = mrlrc(&["witness", params]);
        assert!(o.status.success(), "{params}");
        for line in stdout(&o).lines().filter(|l| !l.starts_with('#')) {
            let w = line.split_once(": ").unwrap().1;
            let v = mrlrc(&["witness", params, "--verify", w]);
            assert_eq!(stdout(&v).trim(), "verified=true", "{params} {w}");
        }
    }
    let bad = mrlrc(&["witness", "8,4,3", "--verify", "F=0; X=; k'=3; n'=7"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(stdout(&bad).trim(), "verified=false");
}

#[test]
fn eq3_boundary_is_reported() {
    let o = mrlrc(&["witness", "8,4,3", "--eq", "3", "--kprime", "2"]);
    let text = stdout(&o);
    assert!(text.contains("boundary=true"), "{text}");
    assert!(text.contains("formula size 5, witness size 6"), "{text}");
    let o = mrlrc(&["oracle", "8,4,3"]);
    let text = stdout(&o);
    assert!(text.contains("# eq3 k'=2: formula 5, oracle 6"), "{text}");
    assert!(text.contains("oracle_largest=6") && text.contains("theorem_largest=6"));
}

#[test]
fn sweep_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = [
        "sweep", "--k", "7", "--r", "3", "--n-min", "8", "--n-max", "60", "--out",
    ];
    let mut with_a = args.to_vec();
    with_a.push(path(&a));
    assert!(mrlrc(&with_a).status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_mrlrc"))
        .args(&args[..args.len() - 1])
        .args(["--out", path(&b)])
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# mrlrc sweep"));
    assert_eq!(
        lines.next().unwrap(),
        "n,g,h,eq1,eq2,eq3_kprime,eq3,thm,q_uncond,q_conj,q_gopalan"
    );
    assert_eq!(lines.count(), 13);
    assert_eq!(
        mrlrc(&["sweep", "--k", "7", "--r", "3", "--n-min", "13", "--n-max", "15"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn code_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.txt");
    let o = mrlrc(&[
        "code",
        "search",
        "8,4,3",
        "--field",
        "13",
        "--seed",
        "7",
        "--out",
        path(&m),
    ]);
    assert!(o.status.success());
    let first = std::fs::read(&m).unwrap();
    let m2 = dir.path().join("m2.txt");
    mrlrc(&[
        "code",
        "search",
        "8,4,3",
        "--field",
        "13",
        "--seed",
        "7",
        "--out",
        path(&m2),
    ]);
    assert_eq!(first, std::fs::read(&m2).unwrap());

    let o = mrlrc(&["code", "check", path(&m), "--mr", "8,4,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("MR: true"));

    let p = dir.path().join("p.txt");
    assert!(mrlrc(&[
        "code",
        "puncture",
        path(&m),
        "--cols",
        "0,4",
        "--out",
        path(&p)
    ])
    .status
    .success());
    let o = mrlrc(&["code", "check", path(&p), "--mds"]);
    assert!(stdout(&o).contains("MDS: true"));

    let s = dir.path().join("s.txt");
    assert!(mrlrc(&[
        "code",
        "shorten",
        path(&m),
        "--cols",
        "0,4",
        "--out",
        path(&s)
    ])
    .status
    .success());
    let o = mrlrc(&["code", "check", path(&s), "--mds"]);
    assert!(stdout(&o).contains("[6, 2]") && stdout(&o).contains("MDS: true"));

    // the full code is not MDS: certification false
    let o = mrlrc(&["code", "check", path(&m), "--mds"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("MDS: false"));
}

#[test]
fn code_errors_are_distinct_from_false() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "field 6\n1 2\n1 1\n").unwrap();
    assert_eq!(
        mrlrc(&["code", "check", path(&bad), "--mds"]).status.code(),
        Some(3)
    );
    std::fs::write(&bad, "field 5\n1 2\n1 x\n").unwrap();
    assert_eq!(
        mrlrc(&["code", "check", path(&bad), "--mds"]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        mrlrc(&["code", "check", path(&missing)]).status.code(),
        Some(1)
    );
    let o = mrlrc(&["code", "search", "8,4,3", "--field", "2", "--trials", "100"]);
    assert_eq!(o.status.code(), Some(1));
}
