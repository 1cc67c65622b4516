//! Whole-group enumeration, longest elements, power bounds and conjugacy classes.

use std::collections::{HashSet, VecDeque};

use crate::rootsystem::{bits, ParabolicIndex, RootSystem};

use super::element::GroupElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("element {0} is not convex")]
    NotConvex(String),
    #[error("group has {size} elements, above the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("element {0} is not an involution (its square is not conjugate to a twist)")]
    NotInvolution(String),
}

/// Longest element of the standard parabolic subgroup W_J.
pub fn longest_parabolic(rs: &RootSystem, j: ParabolicIndex) -> GroupElement {
    let mut w = GroupElement::identity(rs);
    while let Some(s) = bits(j as u128).find(|&s| !w.is_right_descent(s)) {
        w = w.mul_simple_right(rs, s);
    }
    w
}

/// The longest element w∘ of W̃.
pub fn longest(rs: &RootSystem) -> GroupElement {
    longest_parabolic(rs, rs.full_index())
}

/// pb(w) = w∘·w_st, making negative exactly the positive non-stable roots.
pub fn power_bound(rs: &RootSystem, w: &GroupElement) -> Result<GroupElement, GroupError> {
    let data = w.inversion_data(rs);
    let j = rs.standard_parabolic_set(&data.stable).ok_or_else(|| GroupError::NotConvex(w.word_string(rs)))?;
    Ok(longest(rs).mul(rs, &longest_parabolic(rs, j)))
}

/// Order of W̃ obtained from the root system without enumeration.
pub fn group_order(rs: &RootSystem) -> usize {
    // Tower W_{1} ⊂ W_{1,2} ⊂ … of parabolics on initial index segments.
    let mut total = 1usize;
    for k in 1..=rs.rank() {
        let big: ParabolicIndex = (1 << k) - 1;
        let small: ParabolicIndex = (1 << (k - 1)) - 1;
        total *= minimal_coset_count(rs, big, small);
    }
    total
}

/// Number of minimal left coset representatives of W_small in W_big.
fn minimal_coset_count(rs: &RootSystem, big: ParabolicIndex, small: ParabolicIndex) -> usize {
    let start = GroupElement::identity(rs);
    let mut seen: HashSet<GroupElement> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for s in bits(big as u128) {
            let y = x.mul_simple_left(rs, s);
            if y.length() > x.length() && bits(small as u128).all(|t| !y.is_right_descent(t)) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// All elements δw̃ of the coset δW̃, sorted by (length, images).
pub fn coset_elements(rs: &RootSystem, twist: usize, cap: usize) -> Result<Vec<GroupElement>, GroupError> {
    let size = group_order(rs);
    if size > cap {
        return Err(GroupError::CapExceeded { size, cap });
    }
    let start = GroupElement::twist_element(rs, twist);
    let mut seen: HashSet<GroupElement> = HashSet::with_capacity(size);
    seen.insert(start.clone());
    let mut layer = vec![start];
    let mut out = Vec::with_capacity(size);
    while !layer.is_empty() {
        layer.sort();
        let mut next = Vec::new();
        for x in &layer {
            for s in 0..rs.rank() {
                if !x.is_right_descent(s) {
                    let y = x.mul_simple_right(rs, s);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    Ok(out)
}

/// Elements of W_J (untwisted), sorted by (length, images).
pub fn parabolic_elements(rs: &RootSystem, j: ParabolicIndex) -> Vec<GroupElement> {
    let start = GroupElement::identity(rs);
    let mut seen: HashSet<GroupElement> = HashSet::from([start.clone()]);
    let mut layer = vec![start];
    let mut out = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        let mut next = Vec::new();
        for x in &layer {
            for s in bits(j as u128) {
                if !x.is_right_descent(s) {
                    let y = x.mul_simple_right(rs, s);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out
}

/// The W_J-orbit of w under conjugation, sorted by (length, images).
pub fn conjugacy_class(rs: &RootSystem, w: &GroupElement, j: ParabolicIndex) -> Vec<GroupElement> {
    let mut seen: HashSet<GroupElement> = HashSet::from([w.clone()]);
    let mut frontier = vec![w.clone()];
    while !frontier.is_empty() {
        frontier.sort();
        let mut next = Vec::new();
        for x in &frontier {
            for s in bits(j as u128) {
                let y = x.conjugate_simple(rs, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<GroupElement> = seen.into_iter().collect();
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    out
}

/// Partition of the coset δW̃ into W_J-orbits, each sorted, ordered by their first element.
pub fn conjugacy_classes(
    rs: &RootSystem,
    twist: usize,
    j: ParabolicIndex,
    cap: usize,
) -> Result<Vec<Vec<GroupElement>>, GroupError> {
    let all = coset_elements(rs, twist, cap)?;
    let mut assigned: HashSet<GroupElement> = HashSet::with_capacity(all.len());
    let mut classes = Vec::new();
    for w in &all {
        if assigned.contains(w) {
            continue;
        }
        let class = conjugacy_class(rs, w, j);
        assigned.extend(class.iter().cloned());
        classes.push(class);
    }
    Ok(classes)
}

/// Whether w² is a pure twist.
pub fn squares_to_twist(rs: &RootSystem, w: &GroupElement) -> bool {
    let sq = w.mul(rs, w);
    sq == GroupElement::twist_element(rs, sq.twist())
}

/// Whether w² is W̃-conjugate to a pure twist; this property is invariant under conjugation.
pub fn squares_to_twist_class(rs: &RootSystem, w: &GroupElement) -> bool {
    if squares_to_twist(rs, w) {
        return true;
    }
    let sq = w.mul(rs, w);
    let target = GroupElement::twist_element(rs, sq.twist());
    if sq.length() == 0 || target.is_identity() {
        return false;
    }
    conjugacy_class(rs, &sq, rs.full_index()).contains(&target)
}
