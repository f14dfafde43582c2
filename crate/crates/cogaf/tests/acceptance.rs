//! Acceptance suite. Each test verifies one numbered criterion and
//! prints a single pass/fail line for it; time limits are pinned as
//! constants next to the criteria they gate.

mod common;

use std::time::{Duration, Instant};

use cogaf::af::{ArgSet, ExtensionSet, Framework};
use cogaf::gen::{enumerate_all_afs, random_af, GenConfig};
use cogaf::harness::{
    check_attacker_dominance, check_inclusion, compare_semantics, find_strictness_witnesses,
};
use cogaf::io::{parse_apx, parse_tgf, render_af, render_tgf, RenderFormat};
use cogaf::oracle::{oracle_is_cogent, oracle_is_weakly_admissible};
use cogaf::semantics::{is_weakly_admissible, maximal_by_inclusion, MemoTable, Solver};

use common::{chain_three, cycle_with_tail, self_attack_pair, set};

const EXAMPLE_TIME_LIMIT: Duration = Duration::from_secs(1);
const INCLUSION_SWEEP_TIME_LIMIT: Duration = Duration::from_secs(120);
const COGENT_N12_TIME_LIMIT: Duration = Duration::from_secs(120);
const WEAK_N10_TIME_LIMIT: Duration = Duration::from_secs(60);

/// Runs one criterion body and prints exactly one pass/fail line for it.
fn criterion(number: usize, summary: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let outcome = std::panic::catch_unwind(body);
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {number:02} {verdict}: {summary}");
    if let Err(cause) = outcome {
        std::panic::resume_unwind(cause);
    }
}

fn extensions(items: &[&[usize]]) -> ExtensionSet {
    items.iter().map(|xs| set(xs)).collect()
}

/// 200 seeded random frameworks with 1 to 6 arguments, mixed densities.
fn random_pool_n6(seed_base: u64) -> Vec<Framework> {
    (0..200usize)
        .map(|i| {
            random_af(GenConfig {
                n: 1 + i % 6,
                p: if (i / 6) % 2 == 0 { 0.2 } else { 0.5 },
                seed: seed_base.wrapping_add(i as u64),
                allow_self_attacks: true,
            })
            .unwrap()
        })
        .collect()
}

#[test]
fn criterion_01_motivating_example() {
    criterion(
        1,
        "self-attack pair: admissible {{}}, weakly admissible and cogent {{},{b}}",
        || {
            let started = Instant::now();
            let f = self_attack_pair();
            let solver = Solver::new();
            assert_eq!(
                solver.enumerate_admissible(&f).unwrap(),
                extensions(&[&[]])
            );
            assert_eq!(
                solver.enumerate_weakly_admissible(&f).unwrap(),
                extensions(&[&[], &[1]])
            );
            assert_eq!(solver.enumerate_cogent(&f).unwrap(), extensions(&[&[], &[1]]));
            assert!(started.elapsed() < EXAMPLE_TIME_LIMIT);
        },
    );
}

#[test]
fn criterion_02_strictness_witness() {
    criterion(
        2,
        "chain a->b->c: {c} weakly admissible, not cogent, sole strictness witness",
        || {
            let started = Instant::now();
            let f = chain_three();
            let solver = Solver::new();
            let c = set(&[2]);
            assert!(solver
                .enumerate_weakly_admissible(&f)
                .unwrap()
                .contains(c));
            assert!(!solver.enumerate_cogent(&f).unwrap().contains(c));
            assert_eq!(
                find_strictness_witnesses(&solver, &f).unwrap(),
                extensions(&[&[2]])
            );
            assert!(started.elapsed() < EXAMPLE_TIME_LIMIT);
        },
    );
}

#[test]
fn criterion_03_maximal_agreement() {
    criterion(
        3,
        "chain a->b->c: maximal cogent and maximal weakly admissible agree in {a,c}",
        || {
            let f = chain_three();
            let solver = Solver::new();
            let max_weak =
                maximal_by_inclusion(&solver.enumerate_weakly_admissible(&f).unwrap());
            let max_cogent = maximal_by_inclusion(&solver.enumerate_cogent(&f).unwrap());
            assert_eq!(max_weak, extensions(&[&[0, 2]]));
            assert_eq!(max_cogent, extensions(&[&[0, 2]]));
        },
    );
}

#[test]
fn criterion_04_maximal_disagreement() {
    criterion(
        4,
        "3-cycle with tail: maximal weakly admissible {{d}} while cogent stops at {}",
        || {
            let f = cycle_with_tail();
            let solver = Solver::new();
            let max_weak =
                maximal_by_inclusion(&solver.enumerate_weakly_admissible(&f).unwrap());
            assert_eq!(max_weak, extensions(&[&[3]]));
            assert!(!solver.enumerate_cogent(&f).unwrap().contains(set(&[3])));
            let report = compare_semantics(&solver, &f).unwrap();
            assert_eq!(report.summary.maximal_agreement, Some(false));
        },
    );
}

#[test]
fn criterion_05_inclusion_sweep() {
    criterion(
        5,
        "cogent subsets are weakly admissible: exhaustive 0..=3 plus 1000 random n in 4..=7",
        || {
            let started = Instant::now();
            let solver = Solver::new();
            let mut frameworks = 0usize;
            for n in 0..=3 {
                for f in enumerate_all_afs(n).unwrap() {
                    let report = check_inclusion(&solver, &f).unwrap();
                    assert!(report.violations.is_empty(), "on {f:?}");
                    frameworks += 1;
                }
            }
            assert_eq!(frameworks, 1 + 2 + 16 + 512);
            for i in 0..1000usize {
                let f = random_af(GenConfig {
                    n: 4 + i % 4,
                    p: if (i / 4) % 2 == 0 { 0.2 } else { 0.5 },
                    seed: 0xC0F_F33u64.wrapping_add(i as u64),
                    allow_self_attacks: true,
                })
                .unwrap();
                let report = check_inclusion(&solver, &f).unwrap();
                assert!(report.violations.is_empty(), "random framework {i}");
            }
            assert!(started.elapsed() < INCLUSION_SWEEP_TIME_LIMIT);
        },
    );
}

#[test]
fn criterion_06_attacker_dominance_sweep() {
    criterion(
        6,
        "weakly admissible reduct attackers strictly dominate: exhaustive 0..=3 plus 200 random n <= 6",
        || {
            let solver = Solver::new();
            for n in 0..=3 {
                for f in enumerate_all_afs(n).unwrap() {
                    let report = check_attacker_dominance(&solver, &f).unwrap();
                    assert!(report.violations.is_empty(), "on {f:?}");
                }
            }
            for f in random_pool_n6(0xD0_0D) {
                let report = check_attacker_dominance(&solver, &f).unwrap();
                assert!(report.violations.is_empty(), "on {f:?}");
            }
        },
    );
}

#[test]
fn criterion_07_oracle_equivalence() {
    criterion(
        7,
        "engine equals oracle on every subset: exhaustive 0..=3 plus 200 random n <= 6",
        || {
            let solver = Solver::new();
            let mut pool: Vec<Framework> = Vec::new();
            for n in 0..=3 {
                pool.extend(enumerate_all_afs(n).unwrap());
            }
            pool.extend(random_pool_n6(0xFACE));
            for f in &pool {
                let mut memo = MemoTable::new();
                for bits in 0..1u64 << f.arg_count() {
                    let e = ArgSet::from_bits(bits);
                    assert_eq!(
                        solver.is_cogent(f, e).unwrap(),
                        oracle_is_cogent(f, e).unwrap(),
                        "cogency of {e:?} on {f:?}"
                    );
                    assert_eq!(
                        is_weakly_admissible(f, e, &mut memo),
                        oracle_is_weakly_admissible(f, e).unwrap(),
                        "weak admissibility of {e:?} on {f:?}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_08_structural_properties() {
    criterion(
        8,
        "empty set membership, conflict-freeness, semantics chain, canonical antichain outputs",
        || {
            let solver = Solver::new();
            let mut pool: Vec<Framework> = Vec::new();
            for n in 0..=3 {
                pool.extend(enumerate_all_afs(n).unwrap());
            }
            pool.extend(random_pool_n6(0xBEEF));
            for f in &pool {
                let admissible = solver.enumerate_admissible(f).unwrap();
                let cogent = solver.enumerate_cogent(f).unwrap();
                let weak = solver.enumerate_weakly_admissible(f).unwrap();
                assert!(cogent.contains(ArgSet::EMPTY));
                assert!(weak.contains(ArgSet::EMPTY));
                for e in &admissible {
                    assert!(cogent.contains(e));
                }
                for e in &cogent {
                    assert!(f.is_conflict_free(e));
                    assert!(weak.contains(e));
                }
                for sets in [&admissible, &cogent, &weak] {
                    for pair in sets.as_slice().windows(2) {
                        assert!((pair[0].len(), pair[0].bits()) < (pair[1].len(), pair[1].bits()));
                    }
                }
                for sets in [&cogent, &weak] {
                    let maximal = maximal_by_inclusion(sets);
                    for a in &maximal {
                        for b in &maximal {
                            assert!(a == b || !a.is_subset_of(b));
                        }
                    }
                    for e in sets {
                        assert!(maximal.iter().any(|m| e.is_subset_of(m)));
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_09_io_round_trips() {
    criterion(
        9,
        "500 generated frameworks up to 20 arguments round-trip byte-identically",
        || {
            for i in 0..500usize {
                let f = random_af(GenConfig {
                    n: i % 21,
                    p: [0.0, 0.25, 0.5, 0.75, 1.0][i % 5],
                    seed: 0x10_AD5u64.wrapping_add(i as u64),
                    allow_self_attacks: i % 2 == 0,
                })
                .unwrap();
                let apx = render_af(&f, RenderFormat::Text);
                assert_eq!(parse_apx(&apx).unwrap(), f, "apx round trip {i}");
                assert_eq!(render_af(&f, RenderFormat::Text), apx);
                let tgf = render_tgf(&f);
                assert_eq!(parse_tgf(&tgf).unwrap(), f, "tgf round trip {i}");
                assert_eq!(render_tgf(&f), tgf);
                let json = render_af(&f, RenderFormat::Json);
                assert_eq!(render_af(&f, RenderFormat::Json), json);
            }
        },
    );
}

#[test]
fn criterion_10_performance_envelope() {
    criterion(
        10,
        "cogent enumeration at n=12 and weak admissibility at n=10 inside their time limits",
        || {
            let solver = Solver::new();

            let f12 = random_af(GenConfig {
                n: 12,
                p: 0.3,
                seed: 1212,
                allow_self_attacks: true,
            })
            .unwrap();
            let started = Instant::now();
            let cogent = solver.enumerate_cogent(&f12).unwrap();
            assert!(started.elapsed() < COGENT_N12_TIME_LIMIT);
            assert!(cogent.contains(ArgSet::EMPTY));

            let f10 = random_af(GenConfig {
                n: 10,
                p: 0.3,
                seed: 1010,
                allow_self_attacks: true,
            })
            .unwrap();
            let started = Instant::now();
            let weak = solver.enumerate_weakly_admissible(&f10).unwrap();
            assert!(started.elapsed() < WEAK_N10_TIME_LIMIT);
            assert!(weak.contains(ArgSet::EMPTY));
        },
    );
}
