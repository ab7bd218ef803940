//! `check_structure` against a dense nested-loop oracle in machine integers.

mod common;

use common::{compare, random_suite, Dense};
use trialab::fixtures;

#[test]
fn fifty_random_binary_tensors() {
    let r = compare(&random_suite(true, 7));
    assert_eq!((r.verdict_disagreements, r.report_mismatches), (0, 0));
    assert!(r.valid > 0 && r.valid < 50, "suite should mix valid and invalid inputs ({} valid)", r.valid);
}

#[test]
fn fifty_random_ternary_tensors() {
    let r = compare(&random_suite(false, 11));
    assert_eq!((r.verdict_disagreements, r.report_mismatches), (0, 0));
    assert!(r.valid > 0 && r.valid < 50, "suite should mix valid and invalid inputs ({} valid)", r.valid);
}

#[test]
fn catalogs_agree_with_oracle() {
    let mut all = fixtures::associative_catalog();
    all.extend(fixtures::triassociative_catalog());
    all.extend(fixtures::leibniz_dim2_catalog());
    all.extend(fixtures::ternary_dim2_catalog());
    all.extend([fixtures::leibniz3(), fixtures::ternary2(), fixtures::assoc2(), fixtures::tri2()]);
    let dense: Vec<Dense> = all.iter().map(Dense::from_algebra).collect();
    for d in &dense {
        assert!(d.violations().is_empty());
    }
    let r = compare(&dense);
    assert_eq!((r.verdict_disagreements, r.report_mismatches, r.valid), (0, 0, dense.len()));
}
