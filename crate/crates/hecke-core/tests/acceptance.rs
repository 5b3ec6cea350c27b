//! Acceptance suite: every clause the library promises, run exhaustively
//! over the full configuration grid with exact coefficient equality.
//!
//! One test per criterion; each prints a single pass/fail line.  The grid
//! is the rank-≤2 types {A1xA1, A2, B2, G2} across twists m ∈ {1, 2, 3}
//! and denominators N ∈ {1, …, 6}, plus {A3, B3} at m = 1, N ∈ {1, 2}.

use std::time::Instant;

use hecke_core::barcanon::canonical_basis;
use hecke_core::coeff::Laurent;
use hecke_core::extweyl::enumerate_txm;
use hecke_core::fforacle::{exhaustive_check, gf_build};
use hecke_core::heckemod::{HeckeModule, ModuleVector};
use hecke_core::rootdata::{build_root_datum, CartanType, RootDatum};
use hecke_core::torusquot::TorusPoint;
use hecke_core::verify::{
    suite_bar, suite_bijection, suite_braid, suite_canonical, suite_lv_sector, suite_oracle,
    suite_quadratic, suite_signs, suite_v1, SuiteOutcome,
};

const RANK2_TYPES: [&str; 4] = ["A1xA1", "A2", "B2", "G2"];

fn rank2_grid() -> Vec<(String, i64, i64)> {
    let mut out = Vec::new();
    for t in RANK2_TYPES {
        for m in 1..=3 {
            for n in 1..=6 {
                out.push((t.to_string(), m, n));
            }
        }
    }
    out
}

fn rank3_grid() -> Vec<(String, i64, i64)> {
    vec![
        ("A3".to_string(), 1, 1),
        ("A3".to_string(), 1, 2),
        ("B3".to_string(), 1, 1),
        ("B3".to_string(), 1, 2),
    ]
}

fn full_grid() -> Vec<(String, i64, i64)> {
    let mut g = rank2_grid();
    g.extend(rank3_grid());
    g
}

fn datum(t: &str) -> RootDatum {
    build_root_datum(&CartanType::parse(t).unwrap()).unwrap()
}

fn run_over_grid<F>(criterion: &str, grid: &[(String, i64, i64)], suite: F)
where
    F: Fn(&HeckeModule) -> hecke_core::Result<SuiteOutcome>,
{
    let start = Instant::now();
    let mut total_checks = 0usize;
    for (t, m, n) in grid {
        let d = datum(t);
        let module = HeckeModule::new(&d, *m, *n).unwrap();
        let outcome = suite(&module)
            .unwrap_or_else(|e| panic!("{criterion}: internal error on {t}, m={m}, N={n}: {e}"));
        assert!(
            outcome.passed(),
            "{criterion}: FAIL on {t}, m={m}, N={n}: {:?}",
            outcome.failures
        );
        total_checks += outcome.checks;
    }
    println!(
        "{criterion}: PASS ({total_checks} checks over {} configurations in {:.2?})",
        grid.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_01_braid_relations() {
    let start = Instant::now();
    run_over_grid("criterion 1 (braid relations)", &full_grid(), |m| {
        suite_braid(m, 1)
    });
    assert!(
        start.elapsed().as_secs() < 60,
        "braid criterion exceeded its 60 s budget"
    );
}

#[test]
fn criterion_02_quadratic_and_idempotents() {
    run_over_grid(
        "criterion 2 (quadratic/idempotent relations)",
        &full_grid(),
        |m| suite_quadratic(m, 1),
    );
}

#[test]
fn criterion_03_oracle_equivalence() {
    let mut grid = rank2_grid();
    grid.push(("A3".to_string(), 1, 2));
    run_over_grid("criterion 3 (transport-oracle equivalence)", &grid, |m| {
        suite_oracle(m, 2)
    });
}

#[test]
fn criterion_04_bar_operator() {
    run_over_grid("criterion 4 (bar operator)", &full_grid(), |m| {
        suite_bar(m, 1)
    });
}

#[test]
fn criterion_05_canonical_basis() {
    // hand-checked anchor first: A1, m = 2, N = 3
    let d = datum("A1");
    let module = HeckeModule::new(&d, 2, 3).unwrap();
    let table = canonical_basis(&module, None, false).unwrap();
    let s = d.simple_reflection(0).clone();
    let zero = TorusPoint::zero(1);
    let i_s0 = module.index_of(&s, &zero).unwrap();
    let i_10 = module.index_of(&d.identity(), &zero).unwrap();
    let hat = table.get(i_s0);
    assert_eq!(hat.coeff(i_s0), Laurent::one());
    assert_eq!(hat.coeff(i_10), Laurent::monomial(1, -1));
    assert_eq!(hat.support().len(), 2);
    for idx in 0..module.dim() {
        if module.element(idx).u.is_identity() {
            assert_eq!(table.get(idx), &ModuleVector::basis(idx));
        }
    }

    run_over_grid("criterion 5 (canonical basis)", &full_grid(), suite_canonical);
}

#[test]
fn criterion_06_v1_specialization() {
    run_over_grid("criterion 6 (v = 1 specialization)", &full_grid(), suite_v1);
}

#[test]
fn criterion_07_block_bijection() {
    // anchor counts
    let a1 = datum("A1");
    assert_eq!(enumerate_txm(&a1, 2, 3).unwrap().len(), 4);
    let a2 = datum("A2");
    assert_eq!(enumerate_txm(&a2, 1, 1).unwrap().len(), 4);

    run_over_grid("criterion 7 (block bijection)", &full_grid(), suite_bijection);
}

#[test]
fn criterion_08_sign_recursions() {
    run_over_grid("criterion 8 (sign recursions)", &full_grid(), suite_signs);
}

#[test]
fn criterion_09_finite_field_identities() {
    let start = Instant::now();
    let mut total = 0usize;
    for q in [3u64, 5, 7, 11] {
        let f = gf_build(q).unwrap();
        let rows = exhaustive_check(&f).unwrap();
        assert!(!rows.is_empty());
        for row in &rows {
            assert!(
                row.passed(),
                "criterion 9: FAIL at q={q}, identity ({}): a={:?}, b={:?}: {} ≠ {}",
                row.identity,
                row.a,
                row.b,
                row.count,
                row.expected
            );
        }
        total += rows.len();
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 10,
        "finite-field criterion exceeded its 10 s budget"
    );
    println!(
        "criterion 9 (finite-field identities): PASS ({total} parameter pairs over q ∈ {{3,5,7,11}} in {elapsed:.2?})"
    );
}

#[test]
fn criterion_10_zero_sector_consistency() {
    run_over_grid(
        "criterion 10 (zero-sector blockwise consistency)",
        &full_grid(),
        suite_lv_sector,
    );
}
