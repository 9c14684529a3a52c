//! The acceptance gate: one test per criterion, each printing a single
//! PASS or FAIL line (visible with `-- --nocapture`).
//!
//! Criterion 7 is a known, documented failure: squares cut from the
//! trace-built arrays satisfy the column half of the Latin property and
//! full mutual suitability, but strict two-sided verification is
//! structurally impossible for them. See "Known deviations" in the README.

use bgw_core::arrays::{self, ArrayError, ArrayKind};
use bgw_core::bgw::{self, classical_params};
use bgw_core::cwcode::{self, ClassicalBgw, ConstructionRequest};
use bgw_core::{BgwCert, CodeParams, MonomialTransform};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn finish(name: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("ACCEPTANCE {name}: PASS"),
        Err(e) => println!("ACCEPTANCE {name}: FAIL - {e}"),
    }
    if let Err(e) = outcome {
        panic!("{name}: {e}");
    }
}

fn err<E: std::fmt::Display>(context: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{context}: {e}")
}

#[test]
fn criterion_1_classical_parameter_grid() {
    finish(
        "criterion 1 (classical BGW grid)",
        (|| {
            let grid = [
                (3u64, 1u32),
                (3, 2),
                (3, 3),
                (5, 1),
                (5, 2),
                (7, 1),
                (7, 2),
                (9, 1),
                (9, 2),
                (11, 1),
                (13, 1),
            ];
            for (q, m) in grid {
                let (v, k, lambda) = classical_params(q, m).map_err(err("params"))?;
                // build() runs the exhaustive balance verifier; its
                // certificate is the verifier's output, not the target.
                let cert = ClassicalBgw::build(q, m)
                    .map_err(err(&format!("({q},{m})")))?
                    .cert();
                let want = BgwCert {
                    v,
                    k,
                    lambda,
                    u: (q - 1) as u32,
                };
                if cert != want {
                    return Err(format!("({q},{m}): verified {cert}, expected {want}"));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_2_equidistant_24_word_code() {
    finish(
        "criterion 2 (24-word equidistant code)",
        (|| {
            let req = ConstructionRequest { q: 5, m: 1, g: 4 };
            let code = cwcode::full_code(req).map_err(err("build"))?;
            let analysis = cwcode::analyze(&code).map_err(err("scan"))?;
            let want = CodeParams {
                n: 6,
                m: 24,
                d: 5,
                w: 5,
                a: 5,
            };
            if analysis.params != want {
                return Err(format!("scanned {}, expected {want}", analysis.params));
            }
            if !analysis.distances.is_equidistant() {
                return Err(format!(
                    "distances {:?}, expected equidistant",
                    analysis.distances.values()
                ));
            }
            let inner = cwcode::derived_inner_bound(want);
            let report = cwcode::check_optimal(&analysis, want, inner).map_err(err("bounds"))?;
            if report.denominator != 5 {
                return Err(format!("denominator {}, expected 5", report.denominator));
            }
            if report.restricted != Some(24) {
                return Err(format!("restricted {:?}, expected Some(24)", report.restricted));
            }
            if !report.optimal {
                return Err("bound met but not reported optimal".into());
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_3_sign_code_negashift_orbit() {
    finish(
        "criterion 3 (12-word sign code orbit)",
        (|| {
            let req = ConstructionRequest { q: 5, m: 1, g: 2 };
            let code = cwcode::full_code(req).map_err(err("build"))?;
            let analysis = cwcode::analyze(&code).map_err(err("scan"))?;
            let want = CodeParams {
                n: 6,
                m: 12,
                d: 4,
                w: 5,
                a: 3,
            };
            if analysis.params != want {
                return Err(format!("scanned {}, expected {want}", analysis.params));
            }
            if analysis.distances.num_distinct() != 2 {
                return Err(format!(
                    "distances {:?}, expected exactly two values",
                    analysis.distances.values()
                ));
            }
            for (i, w) in code.words().iter().enumerate() {
                if !code.contains(&cwcode::omega_shift(w, 1)) {
                    return Err(format!("word {i}: negashift leaves the code"));
                }
            }
            let orbit = cwcode::generate_from_seed(&code.words()[0], 1);
            if orbit.len() != 12 || orbit.sorted_words() != code.sorted_words() {
                return Err(format!(
                    "negashift orbit has {} words; the code is not one orbit",
                    orbit.len()
                ));
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_4_predicted_parameter_grid() {
    finish(
        "criterion 4 (predicted-parameter grid, brute-force oracle)",
        (|| {
            for q in [3u64, 5, 7, 9] {
                for m in 1u32..=3 {
                    let (v, _, _) = classical_params(q, m).map_err(err("params"))?;
                    if v > 400 {
                        continue;
                    }
                    let pipeline =
                        ClassicalBgw::build(q, m).map_err(err(&format!("({q},{m})")))?;
                    for g in (2..=(q - 1) as u32).filter(|&g| (q - 1) % g as u64 == 0) {
                        let tag = format!("({q},{m},{g})");
                        let req = ConstructionRequest { q, m, g };
                        let (pred_derived, pred_full) =
                            cwcode::predicted_params(req).map_err(err(&tag))?;
                        for (code, predicted, which) in [
                            (pipeline.full_code(g), pred_full, "full"),
                            (pipeline.derived_code(g), pred_derived, "derived"),
                        ] {
                            let code = code.map_err(err(&tag))?;
                            // verify_optimal re-scans every pair; a scan /
                            // prediction mismatch comes back as an error.
                            let inner = cwcode::derived_inner_bound(predicted);
                            let report = cwcode::verify_optimal(&code, predicted, inner)
                                .map_err(err(&format!("{tag} {which}")))?;
                            if !report.optimal {
                                return Err(format!(
                                    "{tag} {which}: M = {} misses the bounds {:?}/{:?}",
                                    report.achieved_m, report.restricted, report.unrestricted
                                ));
                            }
                        }
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_5_ternary_26_word_code() {
    finish(
        "criterion 5 (ternary 26-word spot check)",
        (|| {
            let req = ConstructionRequest { q: 3, m: 2, g: 2 };
            let code = cwcode::full_code(req).map_err(err("build"))?;
            let analysis = cwcode::analyze(&code).map_err(err("scan"))?;
            let want = CodeParams {
                n: 13,
                m: 26,
                d: 9,
                w: 9,
                a: 3,
            };
            if analysis.params != want {
                return Err(format!("scanned {}, expected {want}", analysis.params));
            }
            if !analysis.distances.is_equidistant() {
                return Err("expected an equidistant code".into());
            }
            if analysis.params.m != 3u64.pow(3) - 1 {
                return Err("M != q^(m+1) - 1".into());
            }
            let inner = cwcode::derived_inner_bound(want);
            let report = cwcode::check_optimal(&analysis, want, inner).map_err(err("bounds"))?;
            if !report.optimal {
                return Err(format!(
                    "not optimal: bounds {:?}/{:?}",
                    report.restricted, report.unrestricted
                ));
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_6_strength_2_arrays() {
    finish(
        "criterion 6 (orthogonal and covering arrays)",
        (|| {
            let full = cwcode::full_code(ConstructionRequest { q: 5, m: 1, g: 4 })
                .map_err(err("24-word code"))?;
            let arr = arrays::append_zero_word(&full).map_err(err("append"))?;
            let cert = arrays::verify_oa(&arr, 2, 1).map_err(err("oa"))?;
            if (cert.kind, cert.n_rows, cert.k, cert.t, cert.lambda)
                != (ArrayKind::Oa, 25, 6, 2, 1)
            {
                return Err(format!("unexpected certificate {cert}"));
            }

            let nega = cwcode::full_code(ConstructionRequest { q: 5, m: 1, g: 2 })
                .map_err(err("12-word code"))?;
            let arr = arrays::append_zero_word(&nega).map_err(err("append"))?;
            let cert = arrays::verify_ca(&arr, 2, 1).map_err(err("ca"))?;
            if (cert.kind, cert.n_rows, cert.k, cert.t, cert.lambda)
                != (ArrayKind::Ca, 13, 6, 2, 1)
            {
                return Err(format!("unexpected certificate {cert}"));
            }
            match arrays::verify_oa(&arr, 2, 1) {
                Err(ArrayError::NotOrthogonal {
                    cols,
                    tuple,
                    count,
                    lambda,
                }) => {
                    if cols.len() != 2 || tuple.len() != 2 || count == lambda {
                        return Err("witness is not a concrete 2-column imbalance".into());
                    }
                }
                Err(e) => return Err(format!("wrong failure shape: {e}")),
                Ok(_) => return Err("sign-code array passed strict orthogonality".into()),
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_7_complete_msls_systems() {
    finish(
        "criterion 7 (complete MSLS systems)",
        (|| {
            for q in [3u64, 5, 7] {
                let g = (q - 1) as u32;
                let code = cwcode::full_code(ConstructionRequest { q, m: 1, g })
                    .map_err(err("code"))?;
                let arr = arrays::append_zero_word(&code).map_err(err("append"))?;
                let squares = arrays::extract_msls(&arr).map_err(err("extract"))?;
                if squares.len() != (q - 1) as usize {
                    return Err(format!(
                        "q={q}: {} squares, expected {}",
                        squares.len(),
                        q - 1
                    ));
                }
                let report = arrays::verify_msls(&squares).map_err(err("verify"))?;
                if !report.all_suitable || !report.complete {
                    return Err(format!(
                        "q={q}: suitability failed, first bad pair {:?}",
                        report.first_unsuitable
                    ));
                }
                for (i, s) in squares.iter().enumerate() {
                    if !arrays::verify_latin(s) {
                        return Err(format!(
                            "q={q}: square {i} fails strict two-sided latin verification \
                             (first violation {:?}). Structural, not a bug: each codeword \
                             packs q nonzero coordinates into q-1 distinct values, so a \
                             repeat lands in some line of every extracted square; only the \
                             column half holds. Suitability and completeness pass above. \
                             See 'Known deviations' in the README.",
                            s.violation()
                        ));
                    }
                }
            }
            Ok(())
        })(),
    );
}

fn random_transform(
    rng: &mut ChaCha8Rng,
    nrows: usize,
    ncols: usize,
    u: u32,
) -> MonomialTransform {
    let mut t = MonomialTransform::identity(nrows, ncols);
    t.row_perm.shuffle(rng);
    t.col_perm.shuffle(rng);
    t.row_scalars = (0..nrows).map(|_| rng.random_range(0..u)).collect();
    t.col_scalars = (0..ncols).map(|_| rng.random_range(0..u)).collect();
    t
}

#[test]
fn criterion_8_monomial_equivalence_invariance() {
    finish(
        "criterion 8 (monomial equivalence invariance)",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(8);
            for (q, m) in [(5u64, 1u32), (3, 2)] {
                let pipeline = ClassicalBgw::build(q, m).map_err(err("build"))?;
                let w = pipeline.matrix();
                let cert = pipeline.cert();
                for i in 0..100 {
                    let t = random_transform(&mut rng, w.nrows(), w.ncols(), w.u());
                    let tw = bgw::apply_monomial_equivalence(w, &t)
                        .map_err(err(&format!("({q},{m}) #{i}")))?;
                    let got = bgw::verify_bgw(&tw)
                        .map_err(|e| format!("({q},{m}) #{i}: transform broke balance: {e}"))?;
                    if got != cert {
                        return Err(format!("({q},{m}) #{i}: certificate drifted to {got}"));
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_9_sweep_determinism() {
    finish(
        "criterion 9 (sweep byte determinism)",
        (|| {
            let sweep = |extra: &[&str]| -> Result<Vec<u8>, String> {
                let out = std::process::Command::new(env!("CARGO_BIN_EXE_bgw"))
                    .args(["sweep", "--qmax", "9", "--mmax", "3"])
                    .args(extra)
                    .output()
                    .map_err(err("spawn"))?;
                if !out.status.success() {
                    return Err(format!("sweep exited {:?}", out.status.code()));
                }
                Ok(out.stdout)
            };
            let first = sweep(&[])?;
            let second = sweep(&[])?;
            if first != second {
                return Err("two identical invocations differ".into());
            }
            let one = sweep(&["--threads", "1"])?;
            let eight = sweep(&["--threads", "8"])?;
            if one != eight {
                return Err("--threads 1 and --threads 8 outputs differ".into());
            }
            if first != one {
                return Err("threaded output differs from the default pool".into());
            }
            Ok(())
        })(),
    );
}
