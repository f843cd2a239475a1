//! Acceptance gate: one test per release criterion, numbered 01-14.
//!
//! Each test prints `ACCEPTANCE <k> <name>: PASS` once its checks (and the
//! stated time budget, where one applies) succeed; a failing criterion
//! fails the test and hence the build.  Run with `--nocapture` to see the
//! fourteen lines.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superelliptic::{
    alpha0_four_survivors, compact_endgame, composite_candidates, cw_dimension,
    eigen_rank_vector, genus, lambda_compact, nu_table, relative_invariants, run_exclusion,
    slope_deficit, verify_unit_fraction_lemma, Outcome, Rational, Regime,
    SingularityIndexTable, SuperellipticDatum, Verdict,
};

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn datum(n: u64, alpha0: u64) -> SuperellipticDatum {
    SuperellipticDatum::new(n, alpha0).unwrap()
}

fn pass(k: u32, name: &str) {
    println!("ACCEPTANCE {k:02} {name}: PASS");
}

fn within(budget: Duration, elapsed: Duration, what: &str) {
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn acceptance_01_genus_values() {
    // Warm-up evaluation so the timed run measures arithmetic, not lazy
    // runtime initialization.
    assert_eq!(genus(2, 3).unwrap(), 1);
    let t0 = Instant::now();
    assert_eq!(genus(9, 3).unwrap(), 7);
    assert_eq!(genus(5, 8).unwrap(), 14);
    assert_eq!(genus(8, 6).unwrap(), 17);
    assert_eq!(genus(9, 4).unwrap(), 12);
    within(Duration::from_millis(1), t0.elapsed(), "four genus values");
    pass(1, "genus-values");
}

#[test]
fn acceptance_02_rank_sum_identity() {
    let t0 = Instant::now();
    for n in 2..=60 {
        for alpha0 in 3..=60 {
            let d = datum(n, alpha0);
            let v = eigen_rank_vector(&d).unwrap();
            assert_eq!(v.e.iter().sum::<u64>(), d.g, "rank sum at ({n}, {alpha0})");
        }
    }
    within(Duration::from_secs(1), t0.elapsed(), "rank-sum grid");
    pass(2, "rank-sum-identity");
}

#[test]
fn acceptance_03_chevalley_weil_oracle() {
    let t0 = Instant::now();
    for n in 2..=40 {
        for alpha0 in 3..=40 {
            let d = datum(n, alpha0);
            let res = superelliptic::branch_datum(&d).residues();
            let v = eigen_rank_vector(&d).unwrap();
            for i in 1..n {
                assert_eq!(
                    cw_dimension(n, &res, i).unwrap(),
                    v.get(i),
                    "oracle mismatch at ({n}, {alpha0}), i = {i}"
                );
            }
        }
    }
    within(Duration::from_secs(5), t0.elapsed(), "Chevalley-Weil grid");
    pass(3, "chevalley-weil-oracle");
}

#[test]
fn acceptance_04_noether_identity_random_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5u64 * 0x1000 + 0xe11);
    let t0 = Instant::now();
    for trial in 0..10_000 {
        let n = rng.gen_range(2..=12);
        let alpha0 = rng.gen_range(3..=20);
        let d = datum(n, alpha0);
        let mut t = SingularityIndexTable::new(d.clone());
        for gamma in 2..=d.alpha / 2 {
            t.add_s(gamma, num::integer::gcd(gamma, n), rng.gen_range(0..3));
            if d.alpha % n != 0 {
                t.add_s_prime(
                    gamma,
                    num::integer::gcd(d.alpha - gamma, n),
                    rng.gen_range(0..3),
                );
            }
        }
        let inv = relative_invariants(&t).unwrap();
        assert_eq!(
            Rational::from(12u64) * inv.deg_hodge.clone(),
            inv.omega2.clone() + inv.delta.clone(),
            "Noether identity failed on trial {trial} at ({n}, {alpha0})"
        );
    }
    within(Duration::from_secs(5), t0.elapsed(), "10000 Noether tables");
    pass(4, "noether-identity-random-tables");
}

#[test]
fn acceptance_05_genus_two_cross_check() {
    let t = SingularityIndexTable::from_parts(2, 6, &[(2, 2, 1)], &[]).unwrap();
    let inv = relative_invariants(&t).unwrap();
    assert_eq!(inv.deg_hodge, rat(1, 10));
    assert_eq!(inv.delta0, rat(1, 1));
    // Classical genus-2 oracle: 10 deg = delta_0 + 2 delta_1.
    assert_eq!(
        Rational::from(10u64) * inv.deg_hodge,
        inv.delta0 + Rational::from(2u64) * inv.delta1
    );
    pass(5, "genus-two-cross-check");
}

#[test]
fn acceptance_06_compact_slope_nonnegativity() {
    // slope_deficit is linear in the cell counts of a delta_0 = 0 table,
    // so per-cell nonnegativity over the grid decides every such table.
    let t0 = Instant::now();
    let mut cells = 0u64;
    for n in 2..=12u64 {
        for alpha0 in 3..=20 {
            let d = datum(n, alpha0);
            if d.g < n {
                continue;
            }
            for gamma in 2..=d.alpha / 2 {
                if num::integer::gcd(gamma, n) == 1 {
                    let mut t = SingularityIndexTable::new(d.clone());
                    t.add_s(gamma, 1, 1);
                    let deficit = slope_deficit(&t, Regime::Compact).unwrap();
                    assert!(
                        !deficit.is_negative(),
                        "plain cell gamma = {gamma} at ({n}, {alpha0}): {deficit}"
                    );
                    cells += 1;
                }
                if d.alpha % n != 0 && num::integer::gcd(d.alpha - gamma, n) == 1 {
                    let mut t = SingularityIndexTable::new(d.clone());
                    t.add_s_prime(gamma, 1, 1);
                    let deficit = slope_deficit(&t, Regime::Compact).unwrap();
                    assert!(
                        !deficit.is_negative(),
                        "complementary cell gamma = {gamma} at ({n}, {alpha0}): {deficit}"
                    );
                    cells += 1;
                }
            }
        }
    }
    assert!(cells > 500, "grid unexpectedly small: {cells} cells");
    within(Duration::from_secs(10), t0.elapsed(), "slope grid");
    pass(6, "compact-slope-nonnegativity");
}

#[test]
fn acceptance_07_lemma_brute_force() {
    let t0 = Instant::now();
    for p in [3u64, 5, 7, 11, 13] {
        let rep = verify_unit_fraction_lemma(p, None).unwrap();
        assert!(
            rep.counterexamples.is_empty(),
            "counterexamples at p = {p}: {:?}",
            rep.counterexamples
        );
        assert_eq!(rep.beta_max, p);
        // At beta = p the all-ones sequence is extremal with theta = 1.
        let last = rep.per_beta.last().unwrap();
        assert_eq!(last.beta, p);
        assert_eq!(last.bound, 1);
        assert_eq!(last.max_theta, 1);
        assert!(
            last.extremal.contains(&vec![1u64; p as usize]),
            "all-ones not reported extremal at p = {p}"
        );
    }
    within(Duration::from_secs(60), t0.elapsed(), "lemma brute force");
    pass(7, "lemma-brute-force");
}

#[test]
fn acceptance_08_nu_table_reproduction() {
    let expect: &[(u64, u64, i64, i64)] = &[
        (4, 7, 8, 1),
        (4, 8, 8, 1),
        (4, 9, 22, 3),
        (4, 10, 8, 1),
        (4, 11, 7, 1),
        (4, 12, 7, 1),
        (4, 13, 34, 5),
        (4, 14, 36, 5),
        (4, 15, 8, 1),
        (4, 16, 8, 1),
        (6, 5, 9, 1),
        (6, 6, 9, 1),
        (6, 7, 7, 1),
        (6, 8, 8, 1),
        (6, 9, 9, 1),
        (8, 5, 26, 3),
        (8, 6, 8, 1),
        (9, 5, 15, 2),
        (9, 6, 9, 1),
        (9, 7, 23, 3),
        (9, 8, 9, 1),
        (9, 9, 9, 1),
        (10, 5, 10, 1),
        (15, 5, 10, 1),
        (25, 5, 10, 1),
    ];
    let t0 = Instant::now();
    let table = nu_table().unwrap();
    within(Duration::from_secs(1), t0.elapsed(), "nu table");
    assert_eq!(table.len(), expect.len());
    for (cell, &(n, alpha0, num, den)) in table.iter().zip(expect.iter()) {
        assert_eq!((cell.n, cell.alpha0), (n, alpha0));
        assert_eq!(cell.nu, rat(num, den), "nu({n}, {alpha0})");
    }
    pass(8, "nu-table-reproduction");
}

#[test]
fn acceptance_09_candidate_list() {
    let mut expect: Vec<(u64, u64)> = Vec::new();
    expect.extend((7..=16).map(|alpha0| (4, alpha0))); // case (a)
    expect.extend((5..=9).map(|alpha0| (6, alpha0))); // case (b)
    expect.extend((5..=6).map(|alpha0| (8, alpha0))); // case (c)
    expect.extend((5..=9).map(|alpha0| (9, alpha0))); // case (d)
    expect.extend([(10, 5), (15, 5), (25, 5)]); // case (e)
    let t0 = Instant::now();
    let got = composite_candidates(8).unwrap();
    within(Duration::from_secs(1), t0.elapsed(), "candidate scan");
    assert_eq!(got, expect);
    pass(9, "candidate-list");
}

#[test]
fn acceptance_10_prime_endgame() {
    let t0 = Instant::now();
    let out = compact_endgame(5, 20).unwrap();
    assert_eq!(out.survivors, vec![(8, 5, 3)]);
    let rep = &out.reports[0];
    assert_eq!(rep.verdict, Verdict::Excluded);
    let kill = rep
        .steps
        .iter()
        .find(|s| s.id == "endgame-b5-i3-rank")
        .expect("final rank step");
    assert_eq!(kill.lhs, rat(6, 1));
    assert_eq!(kill.rhs, rat(39, 7));
    assert_eq!(kill.outcome, Outcome::Violated);
    assert_eq!(lambda_compact(&datum(5, 8)).unwrap(), rat(28, 3));
    assert!(compact_endgame(7, 20).unwrap().survivors.is_empty());
    assert!(compact_endgame(11, 20).unwrap().survivors.is_empty());
    within(Duration::from_secs(1), t0.elapsed(), "prime endgames");
    pass(10, "prime-endgame");
}

#[test]
fn acceptance_11_alpha0_four_analysis() {
    let t0 = Instant::now();
    assert_eq!(alpha0_four_survivors(50).unwrap(), vec![9]);
    let rep = run_exclusion(11, 4).unwrap();
    assert_eq!(rep.verdict, Verdict::Excluded);
    assert_eq!(rep.steps[0].lhs, rat(6, 1));
    assert_eq!(rep.steps[0].rhs, rat(5, 1));
    assert_eq!(rep.steps[0].outcome, Outcome::Violated);
    within(Duration::from_secs(1), t0.elapsed(), "alpha0 = 4 scan");
    pass(11, "alpha0-four-analysis");
}

#[test]
fn acceptance_12_degenerate_quotient_bounds() {
    let cases = [(6u64, 8u64, rat(8, 7)), (4, 6, rat(4, 5)), (6, 9, rat(6, 7))];
    for (n, alpha0, expect) in cases {
        let bound = superelliptic::degenerate_quotient_bound(&datum(n, alpha0)).unwrap();
        assert_eq!(bound, expect, "bound at ({n}, {alpha0})");
        // The ample rank of such a quotient is divisible by 4 and its half
        // is bounded by `bound`; with bound < 2 the only multiple of 4
        // whose half fits is 0.
        assert!(rat(2, 1) > bound);
        let cap = rat(2, 1) * bound;
        let forced = (0..=8u64)
            .step_by(4)
            .filter(|&r| Rational::from(r) <= cap)
            .max()
            .unwrap();
        assert_eq!(forced, 0, "forced rank at ({n}, {alpha0})");
    }
    // The engine applies exactly this argument on the (6, 8) cell.
    let rep = run_exclusion(6, 8).unwrap();
    let degen = rep
        .steps
        .iter()
        .find(|s| s.id == "degenerate-quotient-bound")
        .expect("degenerate bound step");
    assert_eq!(degen.rhs, rat(8, 7));
    assert_eq!(degen.outcome, Outcome::Violated);
    let forced = rep
        .steps
        .iter()
        .find(|s| s.id == "note/degenerate-forced-rank")
        .expect("forced rank note");
    assert_eq!(forced.lhs, rat(0, 1));
    pass(12, "degenerate-quotient-bounds");
}

#[test]
fn acceptance_13_nu_vs_lambda_comparison() {
    for cell in nu_table().unwrap() {
        let lambda = lambda_compact(&datum(cell.n, cell.alpha0)).unwrap();
        let rep = run_exclusion(cell.n, cell.alpha0).unwrap();
        if (cell.n, cell.alpha0) == (4, 7) || (cell.n, cell.alpha0) == (4, 8) {
            assert!(
                cell.nu >= lambda,
                "({}, {}) should not be decided by nu < lambda",
                cell.n,
                cell.alpha0
            );
            assert_eq!(rep.verdict, Verdict::NotDecided);
        } else {
            assert!(
                cell.nu < lambda,
                "nu = {} >= lambda = {} at ({}, {})",
                cell.nu,
                lambda,
                cell.n,
                cell.alpha0
            );
            assert_eq!(rep.verdict, Verdict::Excluded);
        }
    }
    pass(13, "nu-vs-lambda-comparison");
}

#[test]
fn acceptance_14_cli_byte_stability() {
    let bin = env!("CARGO_BIN_EXE_superelliptic");
    let data = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let genus2 = data.join("genus2-table.json");
    let genus2 = genus2.to_str().unwrap();
    let slope58 = data.join("slope-5-8.json");
    let slope58 = slope58.to_str().unwrap();
    let invocations: &[&[&str]] = &[
        &["genus", "--n", "9", "--alpha0", "3"],
        &["ranks", "--n", "5", "--alpha0", "8"],
        &["cw", "--n", "5", "--residues", "1,1,1,1,1,1,1,1,2", "--i", "2"],
        &["invariants", "--indices", genus2],
        &["lambda", "--n", "5", "--alpha0", "8", "--regime", "compact"],
        &["slope", "--indices", slope58, "--regime", "compact"],
        &["bound", "--n", "6", "--alpha0", "8", "--regime", "compact"],
        &["lemma3101", "--p", "5"],
        &["nu-table"],
        &["candidates"],
        &["exclude", "--n", "6", "--alpha0", "8"],
        &["sweep"],
    ];
    for args in invocations {
        let run = || {
            Command::new(bin)
                .args(*args)
                .output()
                .expect("binary runs")
        };
        let first = run();
        let second = run();
        assert!(
            first.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(
            first.stdout, second.stdout,
            "{args:?} is not byte-stable across runs"
        );
    }
    pass(14, "cli-byte-stability");
}
