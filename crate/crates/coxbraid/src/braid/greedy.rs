//! Right and left Deligne–Garside normal forms by local sliding.

use crate::coxeter::GroupElement;
use crate::rootsystem::RootSystem;

use super::word::{BraidWord, NormalForm};

/// Moves simple letters from the right end of x to the left end of y while ℓ drops in x and grows in y.
pub(crate) fn slide_right(rs: &RootSystem, x: &mut GroupElement, y: &mut GroupElement) -> bool {
    let mut changed = false;
    while let Some(s) = (0..rs.rank()).find(|&s| x.is_right_descent(s) && !y.is_left_descent(s)) {
        *x = x.mul_simple_right(rs, s);
        *y = y.mul_simple_left(rs, s);
        changed = true;
    }
    changed
}

/// Mirror of `slide_right`: letters travel from the left end of y to the right end of x.
pub(crate) fn slide_left(rs: &RootSystem, x: &mut GroupElement, y: &mut GroupElement) -> bool {
    let mut changed = false;
    while let Some(s) = (0..rs.rank()).find(|&s| y.is_left_descent(s) && !x.is_right_descent(s)) {
        *x = x.mul_simple_right(rs, s);
        *y = y.mul_simple_left(rs, s);
        changed = true;
    }
    changed
}

/// Right-to-left bubble passes until no pair changes, then drops identity factors.
pub(crate) fn renormalize(rs: &RootSystem, factors: &mut Vec<GroupElement>) {
    loop {
        let mut changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let (a, b) = factors.split_at_mut(i + 1);
            changed |= slide_right(rs, &mut a[i], &mut b[0]);
        }
        factors.retain(|x| !x.is_identity());
        if !changed {
            break;
        }
    }
}

fn renormalize_left(rs: &RootSystem, factors: &mut Vec<GroupElement>) {
    loop {
        let mut changed = false;
        for i in 0..factors.len().saturating_sub(1) {
            let (a, b) = factors.split_at_mut(i + 1);
            changed |= slide_left(rs, &mut a[i], &mut b[0]);
        }
        factors.retain(|x| !x.is_identity());
        if !changed {
            break;
        }
    }
}

/// The right-greedy normal form DGN(b).
pub fn normal_form(rs: &RootSystem, b: &BraidWord) -> NormalForm {
    let mut factors = b.factors.clone();
    renormalize(rs, &mut factors);
    BraidWord { twist: b.twist, factors }
}

/// The left-greedy normal form.
pub fn left_normal_form(rs: &RootSystem, b: &BraidWord) -> NormalForm {
    let mut factors = b.factors.clone();
    renormalize_left(rs, &mut factors);
    BraidWord { twist: b.twist, factors }
}

/// Every right descent of a factor is a left descent of the factor to its right.
pub fn is_right_greedy(b: &BraidWord, rank: usize) -> bool {
    b.factors.iter().all(|x| !x.is_identity())
        && b.factors.windows(2).all(|p| p[0].right_descents(rank) & !p[1].left_descents(rank) == 0)
}

/// Every left descent of a factor is a right descent of the factor to its left.
pub fn is_left_greedy(b: &BraidWord, rank: usize) -> bool {
    b.factors.iter().all(|x| !x.is_identity())
        && b.factors.windows(2).all(|p| p[1].left_descents(rank) & !p[0].right_descents(rank) == 0)
}

/// DG_i(b), counted from the right starting at 1; the identity past the end.
pub fn dg(rs: &RootSystem, b: &BraidWord, i: usize) -> GroupElement {
    let nf = normal_form(rs, b);
    dg_of_form(rs, &nf, i)
}

pub(crate) fn dg_of_form(rs: &RootSystem, nf: &NormalForm, i: usize) -> GroupElement {
    assert!(i >= 1, "DG indices start at 1");
    let n = nf.factors.len();
    if i > n {
        GroupElement::identity(rs)
    } else {
        nf.factors[n - i].clone()
    }
}

/// DG_{i≥}(b) = DG_i(b)⋯DG_1(b), untwisted.
pub fn dg_prefix(rs: &RootSystem, b: &BraidWord, i: usize) -> BraidWord {
    let nf = normal_form(rs, b);
    let n = nf.factors.len();
    BraidWord { twist: 0, factors: nf.factors[n.saturating_sub(i)..].to_vec() }
}

/// x·p⁻¹ when p right-divides x in the monoid (p untwisted), peeling p's letters off DG₁.
pub fn right_quotient(rs: &RootSystem, x: &BraidWord, p: &BraidWord) -> Option<BraidWord> {
    assert_eq!(p.twist, 0, "divisor must be untwisted");
    let mut nf = normal_form(rs, x);
    for s in p.letters(rs).into_iter().rev() {
        let last = nf.factors.last_mut()?;
        if !last.is_right_descent(s) {
            return None;
        }
        *last = last.mul_simple_right(rs, s);
        renormalize(rs, &mut nf.factors);
    }
    Some(nf)
}

/// Whether x = c·p for some positive braid c.
pub fn right_divides(rs: &RootSystem, p: &BraidWord, x: &BraidWord) -> bool {
    right_quotient(rs, x, p).is_some()
}

/// DGN(b^d) for an arbitrary positive braid, one multiplication at a time.
pub fn braid_power_normal_form(rs: &RootSystem, b: &BraidWord, d: usize) -> NormalForm {
    let mut acc = BraidWord::identity();
    for _ in 0..d {
        acc = normal_form(rs, &acc.product(rs, b));
    }
    acc
}
