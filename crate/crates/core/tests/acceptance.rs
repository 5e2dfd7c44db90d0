//! One test per acceptance criterion; each prints a PASS/FAIL line.

use nodal_core::acceptance::{self, CriterionResult};

fn report(r: CriterionResult) {
    println!("{}", r.summary_line());
    assert!(r.passed(), "{}", r.summary_line());
}

#[test]
fn criterion_01_courant_sharp_set() {
    report(acceptance::criterion_1());
}

#[test]
fn criterion_02_table_equivalence() {
    report(acceptance::criterion_2());
}

#[test]
fn criterion_03_weyl_inequality() {
    report(acceptance::criterion_3());
}

#[test]
fn criterion_04_index_gate() {
    report(acceptance::criterion_4());
}

#[test]
fn criterion_05_chessboard_areas() {
    report(acceptance::criterion_5());
}

#[test]
fn criterion_06_nodal_counts() {
    report(acceptance::criterion_6());
}

#[test]
fn criterion_07_sweep_maxima() {
    report(acceptance::criterion_7());
}

#[test]
fn criterion_08_level_set_roots() {
    report(acceptance::criterion_8());
}

#[test]
fn criterion_09_lower_bound_and_parity() {
    report(acceptance::criterion_9());
}

#[test]
fn criterion_10_critical_points() {
    report(acceptance::criterion_10());
}
