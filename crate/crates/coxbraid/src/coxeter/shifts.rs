//! Simple shifts, cyclic shifts, strong conjugations and their transporters.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::rootsystem::{bits, ParabolicIndex, RootSystem};

use super::element::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShiftKind {
    /// Elementary conjugation s·w·s of equal length (w ↔ w').
    SimpleShift,
    /// τ with ℓ(τw) = ℓ(w) − ℓ(τ) or ℓ(wτ⁻¹) = ℓ(w) − ℓ(τ).
    Cyclic,
    /// τ with ℓ(τw) = ℓ(w) + ℓ(τ) or ℓ(wτ⁻¹) = ℓ(w) + ℓ(τ).
    Strong,
    /// Either of Cyclic or Strong at each step.
    Mixed,
}

/// One conjugation step τ·source·τ⁻¹ = target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftEdge {
    pub kind: ShiftKind,
    pub conjugator: GroupElement,
    pub source: GroupElement,
    pub target: GroupElement,
}

impl ShiftEdge {
    /// Checks the conjugation identity and the side conditions of the declared kind at equal length.
    pub fn is_valid(&self, rs: &RootSystem) -> bool {
        let tau = &self.conjugator;
        if self.source.conjugate_by(rs, tau) != self.target || self.source.length() != self.target.length() {
            return false;
        }
        let l = self.source.length();
        let lt = tau.length();
        let left = tau.mul(rs, &self.source).length();
        let right = self.source.mul(rs, &tau.inverse(rs)).length();
        let cyclic = left + lt == l || right + lt == l;
        let strong = left == l + lt || right == l + lt;
        match self.kind {
            ShiftKind::SimpleShift => lt == 1,
            ShiftKind::Cyclic => cyclic,
            ShiftKind::Strong => strong,
            ShiftKind::Mixed => cyclic || strong,
        }
    }
}

/// Elementary step by s, if it is a step of the given kind (all kinds require equal length).
pub fn shift_step(rs: &RootSystem, w: &GroupElement, s: usize, kind: ShiftKind) -> Option<ShiftEdge> {
    let target = w.conjugate_simple(rs, s);
    if target.length() != w.length() {
        return None;
    }
    let descent = w.is_left_descent(s) || w.is_right_descent(s);
    let ascent = !w.is_left_descent(s) || !w.is_right_descent(s);
    let ok = match kind {
        ShiftKind::SimpleShift | ShiftKind::Mixed => true,
        ShiftKind::Cyclic => descent,
        ShiftKind::Strong => ascent,
    };
    ok.then(|| ShiftEdge { kind, conjugator: GroupElement::simple(rs, s), source: w.clone(), target })
}

/// All single conjugation steps τ ∈ W_J of the given kind, without any length condition on the target.
///
/// Cyclic steps run over left prefixes and right suffixes of w; strong steps over left and right
/// ascent chains from w. Both are exhaustive for τ ∈ W_J.
pub fn step_candidates(rs: &RootSystem, w: &GroupElement, kind: ShiftKind, j: ParabolicIndex) -> Vec<ShiftEdge> {
    let mut found: HashMap<GroupElement, GroupElement> = HashMap::new();
    let mut record = |tau: GroupElement, target: GroupElement| {
        found.entry(tau).or_insert(target);
    };
    match kind {
        ShiftKind::SimpleShift => {
            for s in bits(j as u128) {
                record(GroupElement::simple(rs, s), w.conjugate_simple(rs, s));
            }
        }
        ShiftKind::Cyclic | ShiftKind::Mixed | ShiftKind::Strong => {
            if kind != ShiftKind::Strong {
                // w = u·y reduced, τ = u⁻¹: target y·u.
                for (u, y) in chains(rs, w, j, true, true) {
                    record(u.inverse(rs), y.mul(rs, &u));
                }
                // w = x·τ reduced: target τ·x.
                for (tau, x) in chains(rs, w, j, false, true) {
                    record(tau.clone(), tau.mul(rs, &x));
                }
            }
            if kind != ShiftKind::Cyclic {
                // z = τ·w with lengths adding: target z·τ⁻¹.
                for (tau, z) in chains(rs, w, j, true, false) {
                    let target = z.mul(rs, &tau.inverse(rs));
                    record(tau, target);
                }
                // z = w·τ⁻¹ with lengths adding: target τ·z.
                for (tinv, z) in chains(rs, w, j, false, false) {
                    let tau = tinv.inverse(rs);
                    let target = tau.mul(rs, &z);
                    record(tau, target);
                }
            }
        }
    }
    let mut edges: Vec<ShiftEdge> = found
        .into_iter()
        .map(|(conjugator, target)| ShiftEdge { kind, conjugator, source: w.clone(), target })
        .collect();
    edges.sort_by(|a, b| {
        (a.conjugator.length(), &a.conjugator, &a.target).cmp(&(b.conjugator.length(), &b.conjugator, &b.target))
    });
    edges
}

/// Walks from w by removing (`descend`) or adding letters of J on one side, returning
/// (accumulated factor, remaining element) pairs.
///
/// Left side: w = acc·rest when descending, rest = acc·w when ascending.
/// Right side: w = rest·acc when descending, rest = w·acc when ascending.
fn chains(
    rs: &RootSystem,
    w: &GroupElement,
    j: ParabolicIndex,
    left: bool,
    descend: bool,
) -> Vec<(GroupElement, GroupElement)> {
    let start = (GroupElement::identity(rs), w.clone());
    let mut seen: HashSet<GroupElement> = HashSet::from([start.1.clone()]);
    let mut out = vec![start.clone()];
    let mut stack = vec![start];
    while let Some((acc, rest)) = stack.pop() {
        for s in bits(j as u128) {
            let is_descent = if left { rest.is_left_descent(s) } else { rest.is_right_descent(s) };
            if is_descent != descend {
                continue;
            }
            let (acc2, rest2) = match (left, descend) {
                (true, true) => (acc.mul_simple_right(rs, s), rest.mul_simple_left(rs, s)),
                (true, false) => (acc.mul_simple_left(rs, s), rest.mul_simple_left(rs, s)),
                (false, true) => (acc.mul_simple_left(rs, s), rest.mul_simple_right(rs, s)),
                (false, false) => (acc.mul_simple_right(rs, s), rest.mul_simple_right(rs, s)),
            };
            if seen.insert(rest2.clone()) {
                out.push((acc2.clone(), rest2.clone()));
                stack.push((acc2, rest2));
            }
        }
    }
    out
}

/// Equal-length steps of the given kind from w.
pub fn level_steps(rs: &RootSystem, w: &GroupElement, kind: ShiftKind, j: ParabolicIndex) -> Vec<ShiftEdge> {
    if kind == ShiftKind::SimpleShift {
        return bits(j as u128).filter_map(|s| shift_step(rs, w, s, kind)).collect();
    }
    step_candidates(rs, w, kind, j).into_iter().filter(|e| e.target.length() == w.length()).collect()
}

/// The shift class of w by W_J, optionally restricted to elements satisfying `constraint`.
pub fn shift_class(
    rs: &RootSystem,
    w: &GroupElement,
    kind: ShiftKind,
    j: ParabolicIndex,
    constraint: Option<&dyn Fn(&GroupElement) -> bool>,
) -> Vec<GroupElement> {
    let allowed = |x: &GroupElement| constraint.is_none_or(|c| c(x));
    let mut seen: BTreeSet<GroupElement> = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for e in level_steps(rs, &x, kind, j) {
            if allowed(&e.target) && seen.insert(e.target.clone()) {
                queue.push_back(e.target);
            }
        }
    }
    seen.into_iter().collect()
}

/// A shortest path of steps from `w` to `target`; `Some(vec![])` when they coincide.
pub fn transporter_search(
    rs: &RootSystem,
    w: &GroupElement,
    target: &GroupElement,
    kind: ShiftKind,
    j: ParabolicIndex,
    constraint: Option<&dyn Fn(&GroupElement) -> bool>,
) -> Option<Vec<ShiftEdge>> {
    let allowed = |x: &GroupElement| constraint.is_none_or(|c| c(x));
    let mut parent: HashMap<GroupElement, Option<ShiftEdge>> = HashMap::from([(w.clone(), None)]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        if &x == target {
            let mut path = Vec::new();
            let mut cur = x;
            while let Some(Some(edge)) = parent.get(&cur) {
                path.push(edge.clone());
                cur = edge.source.clone();
            }
            path.reverse();
            return Some(path);
        }
        for e in level_steps(rs, &x, kind, j) {
            if allowed(&e.target) && !parent.contains_key(&e.target) {
                parent.insert(e.target.clone(), Some(e.clone()));
                queue.push_back(e.target);
            }
        }
    }
    None
}

/// Product τ_n⋯τ_0 of a path's conjugators.
pub fn path_conjugator(rs: &RootSystem, path: &[ShiftEdge]) -> Option<GroupElement> {
    let mut acc: Option<GroupElement> = None;
    for e in path {
        acc = Some(match acc {
            None => e.conjugator.clone(),
            Some(a) => e.conjugator.mul(rs, &a),
        });
    }
    acc
}

/// Image of Tran^kind(w, w') → Tran(w, w'): every accumulated conjugator of a path from w to w'.
pub fn transporter_projection(
    rs: &RootSystem,
    w: &GroupElement,
    target: &GroupElement,
    kind: ShiftKind,
    j: ParabolicIndex,
) -> Vec<GroupElement> {
    let start = (w.clone(), GroupElement::identity(rs));
    let mut seen: HashSet<(GroupElement, GroupElement)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut steps: HashMap<GroupElement, Vec<ShiftEdge>> = HashMap::new();
    let mut out = BTreeSet::new();
    while let Some((x, acc)) = queue.pop_front() {
        if &x == target {
            out.insert(acc.clone());
        }
        let edges = steps.entry(x.clone()).or_insert_with(|| level_steps(rs, &x, kind, j));
        for e in edges.iter() {
            let next = (e.target.clone(), e.conjugator.mul(rs, &acc));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    out.into_iter().collect()
}

/// Follows elementary conjugations s·w·s by W_J that strictly raise (`up`) or lower the length,
/// always taking the smallest such s, until none exists.
pub fn greedy_monotone_path(rs: &RootSystem, w: &GroupElement, j: ParabolicIndex, up: bool) -> Vec<GroupElement> {
    let mut path = vec![w.clone()];
    loop {
        let x = path.last().unwrap();
        let next = bits(j as u128).map(|s| x.conjugate_simple(rs, s)).find(|y| {
            if up {
                y.length() > x.length()
            } else {
                y.length() < x.length()
            }
        });
        match next {
            Some(y) => path.push(y),
            None => return path,
        }
    }
}
