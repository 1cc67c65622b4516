//! Library results against independent brute-force oracles.

mod common;

use common::*;

#[test]
fn greedy_forms_match_factorization_search() {
    let run = normal_form_oracle(&NORMAL_FORM_TYPES);
    assert!(run.passed(), "{:?}", run.failures);
}

#[test]
fn cone_feasibility_matches_fourier_motzkin() {
    let run = cone_oracle(300);
    assert!(run.passed(), "{:?}", run.failures);
}

#[test]
fn inversion_sets_survive_braid_moves() {
    let run = inversion_oracle(&INVERSION_TYPES);
    assert!(run.passed(), "{:?}", run.failures);
}

#[test]
fn cone_oracle_sees_both_outcomes() {
    let run = cone_oracle(100);
    assert!(run.feasible > run.cases / 5 && run.feasible < run.cases * 4 / 5, "{} of {}", run.feasible, run.cases);
}
