//! Suites outside the acceptance run, and the elements on which stated equivalences fail.

mod common;

use common::rs;
use coxbraid::braid::{normal_form, power_normal_form, quasiregular_power_identity, BraidWord};
use coxbraid::cli::fixtures::fixture_names;
use coxbraid::cli::suites::{run_suite, SuiteOptions};
use coxbraid::coxeter::{conjugacy_class, power_bound, GroupElement};
use coxbraid::eigengeometry::{eigen_decompose, is_dominant, is_quasiregular, Angle};

fn suite_passes(name: &str) {
    let r = run_suite(name, &SuiteOptions::default()).unwrap();
    let bad: Vec<_> = r.checks.iter().filter(|c| !c.passed()).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn normal_form_suite() {
    suite_passes("normal-form");
}

#[test]
fn shifts_suite() {
    suite_passes("shifts");
}

#[test]
fn fixtures_suite() {
    suite_passes("fixtures");
    assert_eq!(fixture_names().len(), 49);
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    let capped = SuiteOptions { types: Some(vec!["F4".into()]), max_rank: Some(3) };
    assert!(run_suite("theorem", &capped).is_err());
}

/// The only eigenspace outside the fixed space lies in root hyperplanes, yet b_w⁴ = b_{pb}² with pb an involution.
#[test]
fn power_identity_without_quasiregularity() {
    for (t, word) in [("D4", "2 1 3 2 4"), ("B4", "2 1 3 2 4 3 4"), ("C4", "2 1 3 2 4 3 4")] {
        let r = rs(t);
        let w = GroupElement::parse(&r, word).unwrap();
        let pb = power_bound(&r, &w).unwrap();
        assert_eq!(pb, w.power(&r, 2), "{t}");
        assert_eq!(pb.length(), 2 * w.length());
        assert_eq!(pb.inverse(&r), pb);
        assert!(quasiregular_power_identity(&r, &w).unwrap());
        assert!(!is_quasiregular(&r, &w), "{t}");
    }
}

/// Quasiregular only at θ = k/ord with k > 1: the minimal dominant length is θ(|R| − ℓ_f).
#[test]
fn non_crystallographic_quasiregular_angles() {
    for (t, word, theta, ord) in [("H3", "1 2 1 2", (2, 5), 5), ("H3", "3 2 1 2 1 3 2 1 2", (3, 10), 10), ("I2(5)", "1 2 1 2", (2, 5), 5)] {
        let r = rs(t);
        let w = GroupElement::parse(&r, word).unwrap();
        assert_eq!(w.order(), ord);
        assert!(is_quasiregular(&r, &w));
        let d = eigen_decompose(&r, &w);
        let thetas: Vec<Angle> = d.nonzero_components().map(|(_, c)| c.theta).collect();
        assert!(!thetas.contains(&Angle::new(1, ord as i64)), "{t} {thetas:?}");
        assert!(thetas.contains(&Angle::new(theta.0, theta.1)));
        let class = conjugacy_class(&r, &w, r.full_index());
        let dmin = class.iter().filter(|x| is_dominant(&r, x)).map(GroupElement::length).min().unwrap();
        let free = 2 * r.npos() - w.inversion_data(&r).fixed_count();
        assert_eq!(dmin * theta.1 as usize, theta.0 as usize * free, "{t}");
        assert_ne!(dmin * ord, free);
    }
    let r = rs("H3");
    let w = GroupElement::parse(&r, "3 2 1 2 1 3 2 1 2").unwrap();
    assert!(is_dominant(&r, &w));
    let pb = power_bound(&r, &w).unwrap();
    let pair = normal_form(&r, &BraidWord::new(0, vec![pb.inverse(&r), pb]));
    assert_ne!(power_normal_form(&r, &w, 10), pair);
}

/// A twist δ ≠ 1 has R_st = R but R^δ ≠ R.
#[test]
fn pure_twists_are_convex_but_not_firmly_convex() {
    for (t, twist) in [("A2", 1), ("A3", 1), ("D4", 1), ("D4", 3), ("I2(5)", 1)] {
        let r = rs(t);
        let d = GroupElement::twist_element(&r, twist);
        let data = d.inversion_data(&r);
        assert_eq!(data.stable.len(), 2 * r.npos());
        assert!(data.is_convex(&r));
        assert!(!data.is_firmly_convex(&r), "{t} d{twist}");
        assert!(!eigen_decompose(&r, &d).is_elliptic());
    }
}
