use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pdgenus::RibbonGraph;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdgenus"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cycle_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["pdg", "--family", "cycle", "--n", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2 + 30*z\n");
    let closed = run(
        dir.path(),
        &["pdg", "--family", "cycle", "--n", "5", "--method", "closed"],
    );
    assert_eq!(stdout(&closed), "2 + 30*z\n");
    let rec = run(
        dir.path(),
        &[
            "pdg",
            "--family",
            "cycle",
            "--n",
            "5",
            "--method",
            "recurrence",
        ],
    );
    assert_eq!(stdout(&rec), "2 + 30*z\n");
}

#[test]
fn formats() {
    let dir = tempfile::tempdir().unwrap();
    let csv = run(
        dir.path(),
        &["pdg", "--family", "dipole", "--n", "3", "--format", "csv"],
    );
    assert_eq!(stdout(&csv), "genus,count\n0,2\n1,6\n");
    let json = run(
        dir.path(),
        &["pdg", "--family", "dipole", "--n", "3", "--format", "json"],
    );
    assert_eq!(
        stdout(&json),
        "[{\"genus\":0,\"count\":2},{\"genus\":1,\"count\":6}]\n"
    );
}

#[test]
fn euler_spectrum_of_join() {
    let dir = tempfile::tempdir().unwrap();
    let made = run(
        dir.path(),
        &[
            "family",
            "--family",
            "join_with_bm",
            "--n",
            "2",
            "--m",
            "1",
            "--out",
            "c2_join_b1.rg",
        ],
    );
    assert!(made.status.success());
    let o = run(
        dir.path(),
        &["spectrum", "--file", "c2_join_b1.rg", "--euler"],
    );
    assert_eq!(stdout(&o), "{1,3} NOT interpolating\n");
    let e = run(dir.path(), &["euler", "--file", "c2_join_b1.rg"]);
    assert_eq!(stdout(&e), "4*z + 4*z^3\n");
}

#[test]
fn partial_dual_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(run(
        d,
        &["family", "--family", "cycle", "--n", "2", "--out", "c2.rg"]
    )
    .status
    .success());
    assert!(run(
        d,
        &["dual", "--file", "c2.rg", "--subset", "0", "--out", "out.rg"]
    )
    .status
    .success());
    let p = run(d, &["pdg", "--file", "out.rg"]);
    assert_eq!(stdout(&p), "2 + 2*z\n");

    assert!(run(
        d,
        &["family", "--family", "wheel", "--n", "3", "--out", "w3.rg"]
    )
    .status
    .success());
    assert!(run(
        d,
        &["dual", "--file", "w3.rg", "--subset", "0,2,5", "--out", "once.rg"]
    )
    .status
    .success());
    assert!(run(
        d,
        &["dual", "--file", "once.rg", "--subset", "0,2,5", "--out", "twice.rg"]
    )
    .status
    .success());
    let read = |f: &str| RibbonGraph::decode(&fs::read_to_string(d.join(f)).unwrap()).unwrap();
    assert_eq!(
        read("twice.rg").surface_stats(),
        read("w3.rg").surface_stats()
    );
    assert_eq!(
        stdout(&run(d, &["pdg", "--file", "once.rg"])),
        stdout(&run(d, &["pdg", "--file", "w3.rg"]))
    );
}

#[test]
fn max_genus_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    for n in ["3", "4"] {
        let a = run(
            dir.path(),
            &[
                "maxgenus", "--family", "wheel", "--n", n, "--method", "brute",
            ],
        );
        let b = run(
            dir.path(),
            &["maxgenus", "--family", "wheel", "--n", n, "--method", "xi"],
        );
        assert_eq!(stdout(&a), stdout(&b));
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(run(d, &["pdg"]).status.code(), Some(2));
    assert_eq!(
        run(
            d,
            &["pdg", "--file", "x.rg", "--family", "cycle", "--n", "2"]
        )
        .status
        .code(),
        Some(2)
    );
    fs::write(d.join("bad.rg"), "not a graph\n").unwrap();
    assert_eq!(run(d, &["pdg", "--file", "bad.rg"]).status.code(), Some(3));
    assert_eq!(
        run(d, &["pdg", "--file", "missing.rg"]).status.code(),
        Some(3)
    );
    let o = run(d, &["pdg", "--family", "bouquet_twisted", "--n", "2"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not orientable"));
    assert_eq!(
        run(d, &["pdg", "--family", "cycle", "--n", "0"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(
            d,
            &[
                "pdg",
                "--family",
                "path",
                "--n",
                "3",
                "--method",
                "recurrence"
            ]
        )
        .status
        .code(),
        Some(4)
    );
    assert_eq!(
        run(d, &["stats", "--family", "wheel", "--n-max", "3"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(
        d,
        &[
            "verify",
            "--suite",
            "theorems",
            "--trials",
            "20",
            "--max-edges",
            "8",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("5 checks, 0 failed\n"));
    let csv = run(
        d,
        &[
            "verify",
            "--suite",
            "props",
            "--trials",
            "5",
            "--max-edges",
            "6",
            "--format",
            "csv",
        ],
    );
    assert!(stdout(&csv)
        .starts_with("theorem,seed,trial,agree,witness_subset\ndual_invariants,1,0,true,\n"));
    // The printed wheel system departs from enumeration at four spokes.
    let fam = run(d, &["verify", "--suite", "families"]);
    assert_eq!(fam.status.code(), Some(5));
    assert!(stdout(&fam).contains("FAIL W_4:"));
    assert!(stdout(&fam).contains("PASS W_3:"));
}

#[test]
fn stats_output() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(
        d,
        &[
            "stats", "--family", "necklace", "--n-max", "1", "--out", "csv",
        ],
    );
    assert_eq!(
        stdout(&o),
        "n,mean_num,mean_den,var_num,var_den,ks\n1,3,4,3,16,0.4681485692\n"
    );
    assert!(run(
        d,
        &["stats", "--family", "fan", "--n-max", "5", "--out", "fan.csv"]
    )
    .status
    .success());
    assert_eq!(
        fs::read_to_string(d.join("fan.csv"))
            .unwrap()
            .lines()
            .count(),
        6
    );
}
