//! Normal forms of powers b_w^d, stabilisation of DG prefixes and the braid equation.

use serde::Serialize;

use crate::coxeter::{power_bound, GroupElement};
use crate::rootsystem::RootSystem;

use super::greedy::{normal_form, renormalize};
use super::word::{twist_apply, BraidError, BraidWord, NormalForm};

/// DGN(b_w^d), built as DGN(δ⁻¹(DGN(b_w^{d−1}))·b̃) one power at a time.
pub fn power_normal_form(rs: &RootSystem, w: &GroupElement, d: usize) -> NormalForm {
    let t = w.twist();
    let back = rs.twist_inverse(t);
    let base = w.untwisted(rs);
    let mut twist = 0;
    let mut factors: Vec<GroupElement> = Vec::new();
    for _ in 0..d {
        factors = factors.iter().map(|x| twist_apply(rs, back, x)).collect();
        if !base.is_identity() {
            factors.push(base.clone());
        }
        renormalize(rs, &mut factors);
        twist = rs.twist_compose(twist, t);
    }
    BraidWord { twist, factors }
}

/// DG_{i≥}(b_w^d) for d = 1..=dmax, keeping only the last i factors at each step.
pub fn power_prefixes(rs: &RootSystem, w: &GroupElement, i: usize, dmax: usize) -> Vec<Vec<GroupElement>> {
    let back = rs.twist_inverse(w.twist());
    let base = w.untwisted(rs);
    let mut out = Vec::with_capacity(dmax);
    let mut factors: Vec<GroupElement> = Vec::new();
    for _ in 0..dmax {
        factors = factors.iter().map(|x| twist_apply(rs, back, x)).collect();
        if !base.is_identity() {
            factors.push(base.clone());
        }
        renormalize(rs, &mut factors);
        let cut = factors.len().saturating_sub(i);
        factors.drain(..cut);
        out.push(factors.clone());
    }
    out
}

/// |R_+ ∖ R_st^w|.
pub fn unstable_count(rs: &RootSystem, w: &GroupElement) -> usize {
    rs.npos() - w.inversion_data(rs).stable_positive().count_ones() as usize
}

/// d = i(|R_+ ∖ R_st^w| − ℓ(w) + 1), after which DG_{i≥}(b_w^d) no longer changes.
pub fn stabilization_bound(rs: &RootSystem, w: &GroupElement, i: usize) -> usize {
    i * (unstable_count(rs, w) + 1 - w.length())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizedPrefix {
    pub bound: usize,
    pub prefix: BraidWord,
    /// DG_{i≥}(b_w^{d+1}) agrees with DG_{i≥}(b_w^d).
    pub confirmed: bool,
}

/// DG_{i≥}(b_w^d) at the stabilisation bound, checked against one more power.
pub fn stabilized_prefix(rs: &RootSystem, w: &GroupElement, i: usize) -> StabilizedPrefix {
    assert!(i >= 1, "prefix length starts at 1");
    let bound = stabilization_bound(rs, w, i).max(1);
    let seq = power_prefixes(rs, w, i, bound + 1);
    let prefix = BraidWord { twist: 0, factors: seq[bound - 1].clone() };
    StabilizedPrefix { confirmed: seq[bound] == seq[bound - 1], bound, prefix }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidEquation {
    pub satisfied: bool,
    /// Least d with DG(b_w^d) = pb(w).
    pub witness: Option<usize>,
    pub convex: bool,
    /// |R_+ ∖ R_st^w| − ℓ(w) + 1; DG(b_w^d) is stable from here on.
    pub bound: usize,
}

/// Whether DG(b_w^d) = pb(w) for some (equivalently every large) d.
pub fn braid_equation(rs: &RootSystem, w: &GroupElement) -> BraidEquation {
    let bound = stabilization_bound(rs, w, 1).max(1);
    let Ok(pb) = power_bound(rs, w) else {
        return BraidEquation { satisfied: false, witness: None, convex: false, bound };
    };
    let dgs = power_prefixes(rs, w, 1, bound);
    let last = |f: &Vec<GroupElement>| f.last().cloned().unwrap_or_else(|| GroupElement::identity(rs));
    let witness = dgs.iter().position(|f| last(f) == pb).map(|k| k + 1);
    BraidEquation { satisfied: witness.is_some(), witness, convex: true, bound }
}

/// b_w^{ord(w)} = b_{pb(w)⁻¹}·b_{pb(w)}, compared on normal forms; false when w is not convex.
pub fn quasiregular_power_identity(rs: &RootSystem, w: &GroupElement) -> Result<bool, BraidError> {
    if w.twist() != 0 {
        return Err(BraidError::Precondition("the element must be untwisted".into()));
    }
    let Ok(pb) = power_bound(rs, w) else {
        return Ok(false);
    };
    let lhs = power_normal_form(rs, w, w.order());
    let rhs = normal_form(rs, &BraidWord::new(0, vec![pb.inverse(rs), pb]));
    Ok(lhs == rhs)
}

/// DGN(b_w^d) = δ^d·δ^{1−d}(w̃)⋯δ^{−1}(w̃)·w̃ when DG(b_w²) = w̃.
pub fn dg_square_form(rs: &RootSystem, w: &GroupElement, d: usize) -> Result<NormalForm, BraidError> {
    let base = w.untwisted(rs);
    let square = power_normal_form(rs, w, 2);
    let dg = square.factors.last().cloned().unwrap_or_else(|| GroupElement::identity(rs));
    if dg != base {
        return Err(BraidError::Precondition(format!(
            "DG(b_w^2) = {} differs from the untwisted part {}",
            dg.word_string(rs),
            base.word_string(rs)
        )));
    }
    let t = w.twist();
    let back = rs.twist_inverse(t);
    let mut factors = Vec::with_capacity(d);
    let mut x = base;
    let mut twist = 0;
    for _ in 0..d {
        factors.push(x.clone());
        x = twist_apply(rs, back, &x);
        twist = rs.twist_compose(twist, t);
    }
    factors.reverse();
    Ok(BraidWord::new(twist, factors))
}
