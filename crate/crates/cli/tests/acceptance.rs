//! One test per acceptance criterion, at the default configuration
//! (p = 32003, T = 50, seed 0). Each prints a single status line.

use msq::verify::{run_criterion, Status, VerifyConfig};

fn criterion(id: usize) {
    let row = run_criterion(id, &VerifyConfig::default());
    println!("{row}");
    assert_ne!(row.status, Status::Fail, "{}", row.line());
    assert_ne!(row.status, Status::Skipped, "{}", row.line());
}

#[test]
fn criterion_01_complete_graphs() {
    criterion(1);
}

#[test]
fn criterion_02_triangular_construction() {
    criterion(2);
}

#[test]
fn criterion_03_squares_ideals() {
    criterion(3);
}

#[test]
fn criterion_04_three_variable_monomial_ideals() {
    criterion(4);
}

#[test]
fn criterion_05_cs_equals_one() {
    criterion(5);
}

#[test]
fn criterion_06_stars() {
    criterion(6);
}

#[test]
fn criterion_07_paths() {
    criterion(7);
}

#[test]
fn criterion_08_cycles() {
    criterion(8);
}

#[test]
fn criterion_09_campaign_nulls() {
    criterion(9);
}

#[test]
fn criterion_10_petersen() {
    criterion(10);
}

#[test]
fn criterion_11_join_law() {
    criterion(11);
}

#[test]
fn criterion_12_wedges_and_jellyfish() {
    criterion(12);
}

#[test]
fn criterion_13_chordal_complement() {
    criterion(13);
}

#[test]
fn criterion_14_doubling_sets() {
    criterion(14);
}

#[test]
fn criterion_15_weak_lefschetz_chain() {
    criterion(15);
}

#[test]
fn criterion_16_property_suites() {
    criterion(16);
}
