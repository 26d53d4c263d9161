//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured quantities. Everything is exact arithmetic; a single
//! failing instance fails the build.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use leibniz_cli::format::AlgebraFile;
use leibniz_core::algebra::Algebra;
use leibniz_core::corpus::{self, CorpusInstance};
use leibniz_core::decomposer;
use leibniz_core::idealkit::{
    self, leibniz_kernel, simplicity_by_enumeration, simplicity_oracle_with_kernel, Verdict,
    DEFAULT_SEED,
};
use leibniz_core::maxlen::{MaxlenContext, Trichotomy};
use leibniz_core::Field;

fn corpus_all() -> Vec<CorpusInstance> {
    corpus::full_corpus()
}

fn corpus_valid() -> Vec<(String, Algebra)> {
    corpus_all()
        .into_iter()
        .filter(|i| i.expected_valid)
        .map(|i| (i.name, i.algebra))
        .collect()
}

/// Writes the offending instance next to the test output and returns the
/// path, so a red criterion always leaves the evidence on disk.
fn dump_instance(name: &str, alg: &Algebra) -> String {
    let dir = std::env::temp_dir().join("leibniz-acceptance-failures");
    let _ = std::fs::create_dir_all(&dir);
    let path = dir.join(format!("{name}.json"));
    let _ = std::fs::write(&path, AlgebraFile::from_algebra(alg).to_json());
    path.display().to_string()
}

#[test]
fn criterion_1_axiom_suite() {
    let started = Instant::now();
    let instances = corpus_all();
    let mut constructive = 0usize;
    let mut rejected = 0usize;
    for inst in &instances {
        assert!(
            inst.algebra.dim() <= 16,
            "{} exceeds the dimension budget",
            inst.name
        );
        let report = inst.algebra.validate();
        if inst.name.starts_with("perturb_") {
            assert_eq!(
                report.is_valid(),
                inst.expected_valid,
                "validator verdict changed on {} ({})",
                inst.name,
                dump_instance(&inst.name, &inst.algebra),
            );
            if !report.is_valid() {
                rejected += 1;
                assert!(
                    !report.violations.is_empty(),
                    "rejection without a witness on {}",
                    inst.name
                );
            }
        } else {
            constructive += 1;
            assert!(
                report.is_valid(),
                "constructive instance {} rejected: {:?} ({})",
                inst.name,
                report.violations,
                dump_instance(&inst.name, &inst.algebra),
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(
        constructive >= 180,
        "need 180+ constructive instances, built {constructive}"
    );
    assert!(
        rejected >= 5,
        "perturbation suite produced too few negatives ({rejected})"
    );
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "validation of the corpus took {elapsed:?}, budget is 5 s"
    );
    println!(
        "criterion 1: PASS - axiom suite: {constructive} constructive accepted, \
         {rejected} perturbed rejected with witnesses, {elapsed:?} < 5 s"
    );
}

#[test]
fn criterion_2_decomposition_suite() {
    let mut checked = 0usize;
    for (name, alg) in corpus_valid() {
        let report = decomposer::decompose(&alg);
        for key in ["sum_reconstitutes", "ideal_sweep", "cross_products_vanish"] {
            assert_eq!(
                report.checks.get(key),
                Some(&true),
                "{key} failed on {name} ({})",
                dump_instance(&name, &alg),
            );
        }
        checked += 1;
    }
    println!(
        "criterion 2: PASS - decomposition suite: reconstruction, ideal sweeps and \
         cross-class products exact on {checked} instances"
    );
}

#[test]
fn criterion_3_corollary_suite() {
    let mut no_distinguished = 0usize;
    let mut centerless_tight = 0usize;
    for (name, alg) in corpus_valid() {
        let report = decomposer::decompose(&alg);
        if alg.distinguished().is_none() {
            no_distinguished += 1;
            assert!(
                report.direct && report.complement.is_zero(),
                "direct sum fails without a distinguished label on {name} ({})",
                dump_instance(&name, &alg),
            );
        }
        if idealkit::center(&alg).is_zero() && idealkit::is_tight(&alg) {
            centerless_tight += 1;
            assert!(
                report.direct,
                "direct sum fails on centerless tight instance {name} ({})",
                dump_instance(&name, &alg),
            );
        }
    }
    assert!(no_distinguished >= 100 && centerless_tight >= 10);
    println!(
        "criterion 3: PASS - corollary suite: {no_distinguished} instances without a \
         distinguished label and {centerless_tight} centerless+tight instances all decompose \
         directly"
    );
}

#[test]
fn criterion_4_kernel_suite() {
    let mut checked = 0usize;
    for (name, alg) in corpus_valid() {
        // leibniz_kernel asserts [L, kernel] = 0 internally and errors out
        // otherwise
        let kernel = leibniz_kernel(&alg).unwrap_or_else(|e| {
            panic!(
                "kernel inconsistency on {name}: {e} ({})",
                dump_instance(&name, &alg)
            )
        });
        if alg.field().characteristic() != 2 {
            assert_eq!(
                kernel.is_zero(),
                alg.is_lie_superalgebra(),
                "kernel/skew equivalence fails on {name} ({})",
                dump_instance(&name, &alg),
            );
        }
        checked += 1;
    }
    println!(
        "criterion 4: PASS - kernel suite: left products vanish and the kernel detects \
         skew-supersymmetry on {checked} instances"
    );
}

#[test]
fn criterion_5_oracle_agreement() {
    let started = Instant::now();
    let mut checked = 0usize;
    for (name, alg) in corpus_valid() {
        let small = matches!(alg.field(), Field::Prime(5) | Field::Prime(7))
            && alg.labels().len() <= 3
            && alg.dim() <= 4;
        if !small {
            continue;
        }
        let kernel = leibniz_kernel(&alg).unwrap();
        let oracle = simplicity_oracle_with_kernel(&alg, &kernel, DEFAULT_SEED).unwrap();
        assert!(!oracle.sampled, "prime-field verdicts are exact on {name}");
        let literal = simplicity_by_enumeration(&alg).unwrap();
        assert_eq!(
            oracle.verdict,
            literal,
            "oracle disagrees with literal ideal enumeration on {name} ({})",
            dump_instance(&name, &alg),
        );
        checked += 1;
    }
    let elapsed = started.elapsed();
    assert!(
        checked >= 15,
        "too few instances in the enumeration window ({checked})"
    );
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "agreement scan took {elapsed:?}, budget 60 s"
    );
    println!(
        "criterion 5: PASS - oracle agreement: {checked} GF(5)/GF(7) instances match the \
         literal graded-ideal enumeration, {elapsed:?} < 60 s"
    );
}

#[test]
fn criterion_6_characterization_suite() {
    let mut satisfying = 0usize;
    let mut simple_side = 0usize;
    let mut nonsimple_side = 0usize;
    for (name, alg) in corpus_valid() {
        let Ok(ctx) = MaxlenContext::new(&alg) else {
            continue;
        };
        let report = ctx
            .theorem_simplicity_check(DEFAULT_SEED)
            .unwrap_or_else(|e| {
                panic!(
                    "theorem check failed on {name}: {e} ({})",
                    dump_instance(&name, &alg)
                )
            });
        assert!(
            report.consistent,
            "biconditional inconsistency on {name}: oracle {:?} ({})",
            report.oracle.verdict,
            dump_instance(&name, &alg),
        );
        if report.hypotheses_hold_somewhere() {
            satisfying += 1;
            match report.oracle.verdict {
                Verdict::Simple => simple_side += 1,
                Verdict::NotSimple => nonsimple_side += 1,
                Verdict::ProbablySimple => {}
            }
        }
    }
    assert!(
        satisfying >= 25,
        "need 25+ maximal-length instances satisfying every hypothesis, found {satisfying}"
    );
    assert!(
        simple_side >= 5 && nonsimple_side >= 5,
        "both directions must be exercised"
    );
    println!(
        "criterion 6: PASS - characterization suite: {satisfying} hypothesis-satisfying \
         instances ({simple_side} simple, {nonsimple_side} not), biconditional consistent \
         everywhere"
    );
}

#[test]
fn criterion_7_trichotomy_suite() {
    let mut classified = 0usize;
    let mut case1 = 0usize;
    let mut case2 = 0usize;
    for (name, alg) in corpus_valid() {
        let Ok(ctx) = MaxlenContext::new(&alg) else {
            continue;
        };
        match ctx.trichotomy(DEFAULT_SEED) {
            Err(_) => continue, // hypotheses unmet
            Ok(Trichotomy::Undetermined) => continue,
            Ok(Trichotomy::ImpossibleConfiguration) => {
                panic!(
                    "non-simple instance {name} exhibits the impossible cardinality \
                     configuration ({})",
                    dump_instance(&name, &alg),
                );
            }
            Ok(Trichotomy::Simple) => {
                classified += 1;
                case1 += 1;
            }
            Ok(Trichotomy::KernelComplement {
                rank_ok,
                subalgebra_ok,
                dim_one,
                free_label,
            }) => {
                classified += 1;
                case2 += 1;
                assert!(
                    rank_ok && subalgebra_ok,
                    "kernel-complement shape fails rank accounting on {name} at {free_label} \
                     ({})",
                    dump_instance(&name, &alg),
                );
                assert!(dim_one, "two-parity free component flagged on {name}");
            }
        }
    }
    assert!(
        classified >= 5,
        "too few trichotomy-eligible instances ({classified})"
    );
    println!(
        "criterion 7: PASS - trichotomy suite: {classified} eligible instances \
         ({case1} simple, {case2} kernel-complement), impossible configuration never hit"
    );
}

#[test]
fn criterion_8_determinism() {
    // machine reports: byte-identical modulo the wall-time field
    let dir = tempfile::tempdir().unwrap();
    let alg = corpus::so3_with_ad_copies(
        Field::prime(7).unwrap(),
        &[leibniz_core::Parity::Even, leibniz_core::Parity::Odd],
    );
    let path = dir.path().join("instance.json");
    std::fs::write(&path, AlgebraFile::from_algebra(&alg).to_json()).unwrap();
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_leibniz"))
            .args(["report", path.to_str().unwrap(), "--json"])
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0));
        String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .filter(|l| !l.trim_start().starts_with("\"wall_time_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "machine report is not deterministic");

    // corpus generation: two in-process builds emit identical files
    let a: Vec<String> = corpus::full_corpus()
        .iter()
        .map(|i| AlgebraFile::from_algebra(&i.algebra).to_json())
        .collect();
    let b: Vec<String> = corpus::full_corpus()
        .iter()
        .map(|i| AlgebraFile::from_algebra(&i.algebra).to_json())
        .collect();
    assert_eq!(a, b, "corpus generation is not reproducible");
    println!(
        "criterion 8: PASS - determinism: report output stable modulo wall time, corpus \
         emission reproducible ({} files)",
        a.len()
    );
}

#[test]
fn acceptance_inputs_exist() {
    // the golden fixture must ship with the suite
    assert!(Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden/n2_report.json")
        .exists());
}
