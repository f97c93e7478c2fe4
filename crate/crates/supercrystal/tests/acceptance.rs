//! Acceptance suite: every criterion runs at its stated scale and prints one
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;
use supercrystal::verify::{run_suite, Params};

fn criterion(number: u32, label: &str, suite: &str) {
    let start = Instant::now();
    let result = run_suite(suite, &Params::default()).expect("suite exists");
    let elapsed = start.elapsed().as_secs_f64();
    match result {
        Ok(detail) => {
            println!("criterion {number} ({label}): pass [{elapsed:.2}s] - {detail}");
        }
        Err(e) => {
            println!("criterion {number} ({label}): FAIL [{elapsed:.2}s] - {e}");
            panic!("criterion {number} ({label}) failed: {e}");
        }
    }
}

#[test]
fn criterion_1_fixture_exactness() {
    criterion(1, "fixture exactness", "fixtures");
}

#[test]
fn criterion_2_bijection() {
    criterion(2, "insertion bijections", "burge-roundtrip");
}

#[test]
fn criterion_3_bc_commutation() {
    criterion(3, "b/c operator commutation", "bc-commutation");
}

#[test]
fn criterion_4_d_commutation() {
    criterion(4, "type-d direct rules and gluing", "d-commutation");
}

#[test]
fn criterion_5_array_lemmas() {
    criterion(5, "two-rowed array laws", "array-lemmas");
}

#[test]
fn criterion_6_bumping_routes() {
    criterion(6, "column bumping routes", "bumping");
}

#[test]
fn criterion_7_crystal_axioms() {
    criterion(7, "crystal operator axioms", "axioms");
}

#[test]
fn criterion_8_separation_equivalence() {
    criterion(8, "separation equivalence", "separation");
}
