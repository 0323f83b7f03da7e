//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use pdgenus::enumerate::{euler_polynomial, pdg_polynomial, EnumOptions, GenusMethod};
use pdgenus::families::{
    cycle_closed_form, fan_closed_form, fan_recurrence, generate, necklace_closed_form,
    wheel_system, FamilySpec,
};
use pdgenus::random::{random_planar_with, random_ribbon_with, trial_rng};
use pdgenus::stats::{asymptotic_suite, necklace_mean, necklace_variance, AsymptoticFamily};
use pdgenus::theorems::{audit, dual_invariants_hold, TheoremId};
use pdgenus::{EdgeSubset, IntPolynomial, RibbonGraph};
use rand::Rng;

const SEED: u64 = 20240611;

type Criterion = (&'static str, fn() -> Outcome);
const FAN_KS_THRESHOLD: f64 = 0.075;
const RATIO_TOLERANCE: f64 = 0.05;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn brute(g: &RibbonGraph) -> IntPolynomial {
    pdg_polynomial(g, GenusMethod::Formula, &EnumOptions::default()).unwrap()
}

fn family(spec: FamilySpec) -> RibbonGraph {
    generate(&spec).unwrap()
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.passed &= took < limit;
    o.detail = format!("{}; {:.2?} (limit {:?})", o.detail, took, limit);
    o
}

fn cycles_and_dipoles() -> Outcome {
    timed(Duration::from_secs(10), || {
        let bad: Vec<String> = (2..=14)
            .flat_map(|n| [FamilySpec::Cycle(n), FamilySpec::Dipole(n)])
            .filter(|s| {
                let n = s.edge_count();
                brute(&family(s.clone())) != cycle_closed_form(n)
            })
            .map(|s| s.to_string())
            .collect();
        outcome(
            bad.is_empty(),
            format!("C_n, D_n for 2 <= n <= 14; mismatches {bad:?}"),
        )
    })
}

fn necklaces() -> Outcome {
    timed(Duration::from_secs(120), || {
        let bad: Vec<usize> = (1..=7)
            .filter(|&n| brute(&family(FamilySpec::Necklace(n))) != necklace_closed_form(n))
            .collect();
        outcome(
            bad.is_empty(),
            format!("N_n for n <= 7; mismatches at {bad:?}"),
        )
    })
}

fn fans() -> Outcome {
    let small: Vec<usize> = (1..=7)
        .filter(|&n| {
            let b = brute(&family(FamilySpec::FanQ(n)));
            b != fan_recurrence(n) || b != fan_closed_form(n)
        })
        .collect();
    let large: Vec<usize> = (1..=30)
        .filter(|&n| fan_recurrence(n) != fan_closed_form(n))
        .collect();
    outcome(
        small.is_empty() && large.is_empty(),
        format!("brute/recurrence/closed form mismatches for n <= 7: {small:?}; recurrence/closed for n <= 30: {large:?}"),
    )
}

fn wheels() -> Outcome {
    let initial = wheel_system(2).0 == p(&[2, 10, 4]);
    let mut notes = Vec::new();
    for n in 3..=5 {
        let system = wheel_system(n).0;
        let enumerated = brute(&family(FamilySpec::Wheel(n)));
        if system != enumerated {
            notes.push(format!("W_{n}: system {system} vs brute {enumerated}"));
        }
    }
    outcome(
        initial && notes.is_empty(),
        format!(
            "W_2 initial condition ok = {initial}; {}",
            if notes.is_empty() {
                "n = 3, 4, 5 agree".into()
            } else {
                notes.join("; ")
            }
        ),
    )
}

fn random_graph(seed: u64, trial: u64, max_edges: usize, planar: bool) -> RibbonGraph {
    let mut rng = trial_rng(seed, trial);
    let v = rng.gen_range(1..=6usize);
    let e = rng.gen_range(v - 1..=max_edges);
    if planar {
        random_planar_with(&mut rng, v, e).unwrap()
    } else {
        random_ribbon_with(&mut rng, v, e, 0.0).unwrap()
    }
}

fn dual_invariants() -> Outcome {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for trial in 0..200 {
        let g = random_graph(SEED, trial, 9, true);
        for a in EdgeSubset::all(g.edge_count()) {
            checked += 1;
            if !dual_invariants_hold(&g, a) && failures.len() < 3 {
                failures.push(format!(
                    "trial {trial} subset {:?}",
                    a.iter().collect::<Vec<_>>()
                ));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("200 plane graphs, {checked} subsets; failures {failures:?}"),
    )
}

fn genus_formula() -> Outcome {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for trial in 0..100 {
        let g = random_graph(SEED + 1, trial, 9, false);
        for a in EdgeSubset::all(g.edge_count()) {
            checked += 1;
            let formula = g.genus_of_partial_dual(a).ok();
            if formula != g.partial_dual(a).surface_stats().genus {
                failures.push(format!(
                    "trial {trial} subset {:?}",
                    a.iter().collect::<Vec<_>>()
                ));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("100 orientable graphs, {checked} subsets; failures {failures:?}"),
    )
}

fn audit_all(ids: &[TheoremId]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for &t in ids {
        let reports = audit(t, SEED, 50, 9);
        let agree = reports.iter().filter(|r| r.agree).count();
        ok &= agree == reports.len();
        parts.push(format!("{t} {agree}/{}", reports.len()));
    }
    (ok, parts.join(", "))
}

fn recurrences() -> Outcome {
    timed(Duration::from_secs(300), || {
        let (ok, detail) = audit_all(&[
            TheoremId::Deletion,
            TheoremId::DeletionCut,
            TheoremId::Parallel,
            TheoremId::Subdivision,
            TheoremId::Ring,
        ]);
        outcome(ok, detail)
    })
}

fn max_genus() -> Outcome {
    let (ok, detail) = audit_all(&[
        TheoremId::MaxGenus,
        TheoremId::ComponentBound,
        TheoremId::ParallelMaxGenus,
    ]);
    outcome(ok, detail)
}

fn euler_counterexample() -> Outcome {
    let join = family(FamilySpec::JoinWithBouquet {
        base: Box::new(FamilySpec::Cycle(2)),
        m: 1,
    });
    let opts = EnumOptions::default();
    let e = euler_polynomial(&join, &opts).unwrap();
    let spectrum = e.spectrum();
    let join_ok = e == p(&[0, 4, 0, 4]) && spectrum.exponents == [1, 3] && !spectrum.interpolating;
    let bad: Vec<usize> = (0..=8)
        .filter(|&m| {
            euler_polynomial(&family(FamilySpec::BouquetTwisted(m)), &opts).unwrap()
                != p(&[0, 2]).pow(m as u32)
        })
        .collect();
    outcome(
        join_ok && bad.is_empty(),
        format!("C_2 ∨ B_1 gives {e}, spectrum {spectrum}; B_m mismatches for m <= 8: {bad:?}"),
    )
}

fn necklace_stats() -> Outcome {
    let rows = asymptotic_suite(AsymptoticFamily::Necklace, 60);
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| {
            r.stats.mean != necklace_mean(r.n) || r.stats.variance != necklace_variance(r.n)
        })
        .map(|r| r.n)
        .collect();
    outcome(
        bad.is_empty(),
        format!("exact mean and variance for 1 <= n <= 60; mismatches at {bad:?}"),
    )
}

fn fan_stats() -> Outcome {
    let rows = asymptotic_suite(AsymptoticFamily::Fan, 60);
    let q60 = &rows[59].stats;
    let mean_ratio = q60.mean.to_f64().unwrap() / 40.0;
    let var_ratio = q60.variance.to_f64().unwrap() / 240.0;
    let ks = q60.ks_to_normal.unwrap();
    let trend: Vec<f64> = (1..=6)
        .map(|i| rows[10 * i - 1].stats.ks_to_normal.unwrap())
        .collect();
    let monotone = trend.windows(2).all(|w| w[1] <= w[0]);
    let passed = (mean_ratio - 1.0).abs() <= RATIO_TOLERANCE
        && (var_ratio - 1.0).abs() <= RATIO_TOLERANCE
        && ks < FAN_KS_THRESHOLD
        && monotone;
    outcome(
        passed,
        format!(
            "mean ratio {mean_ratio:.6}, variance ratio {var_ratio:.6}, ks {ks:.6} (< {FAN_KS_THRESHOLD}), trend non-increasing = {monotone}"
        ),
    )
}

fn pdgenus(dir: &Path, threads: usize, args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_pdgenus"))
        .current_dir(dir)
        .arg("--threads")
        .arg(threads.to_string())
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let (code, _) = pdgenus(
        d,
        1,
        &[
            "family", "--family", "necklace", "--n", "3", "--out", "n3.rg",
        ],
    );
    assert_eq!(code, Some(0));
    let runs: [&[&str]; 9] = [
        &["pdg", "--file", "n3.rg", "--format", "json"],
        &[
            "euler",
            "--family",
            "join_with_bm",
            "--n",
            "3",
            "--m",
            "2",
            "--format",
            "csv",
        ],
        &["dual", "--file", "n3.rg", "--subset", "0,2,5"],
        &["maxgenus", "--file", "n3.rg", "--method", "brute"],
        &["spectrum", "--file", "n3.rg", "--euler"],
        &["family", "--family", "wheel", "--n", "5"],
        &[
            "verify",
            "--suite",
            "theorems",
            "--seed",
            "3",
            "--trials",
            "10",
            "--max-edges",
            "7",
            "--format",
            "csv",
        ],
        &[
            "verify",
            "--suite",
            "props",
            "--seed",
            "3",
            "--trials",
            "10",
            "--max-edges",
            "7",
            "--format",
            "csv",
        ],
        &["stats", "--family", "fan", "--n-max", "40", "--out", "csv"],
    ];
    let mut differing = Vec::new();
    for args in runs {
        let a = pdgenus(d, 1, args);
        let b = pdgenus(d, 1, args);
        let c = pdgenus(d, 8, args);
        if a != b || a != c || a.1.is_empty() {
            differing.push(args[0]);
        }
    }
    outcome(
        differing.is_empty(),
        format!("9 invocations over every verb, threads 1/1/8; differing {differing:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("cycles_and_dipoles_closed_form", cycles_and_dipoles),
        ("necklace_closed_form", necklaces),
        ("fan_recurrence_closed_form_brute", fans),
        ("wheel_coupled_recurrence", wheels),
        ("partial_dual_invariants", dual_invariants),
        ("genus_formula_oracle", genus_formula),
        ("recurrence_audits", recurrences),
        ("max_genus_and_component_bound", max_genus),
        ("euler_counterexample_and_bouquets", euler_counterexample),
        ("necklace_statistics_exact", necklace_stats),
        ("fan_statistics_asymptotic", fan_stats),
        ("cli_determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.passed);
        println!(
            "criterion {:>2} {:<36} {}  {}",
            i + 1,
            name,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
