//! Independent oracles shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use coxbraid::braid::{inversion_sequence_of_letters, left_normal_form, normal_form, BraidWord};
use coxbraid::coxeter::{coset_elements, parabolic_elements, shift_class, GroupElement, ShiftKind};
use coxbraid::exactfield::linalg::rank;
use coxbraid::exactfield::poly::from_ints;
use coxbraid::exactfield::{cone_strictly_feasible, field_create, ConeProblem, FieldElement, RealCyclotomicField, Vector};
use coxbraid::rootsystem::RootSystem;
use proptest::test_runner::{RngAlgorithm, TestRng};
use rand::RngExt;

pub fn rs(t: &str) -> Arc<RootSystem> {
    RootSystem::from_str(t).unwrap()
}

/// Outcome of one oracle comparison run.
#[derive(Debug, Default)]
pub struct OracleRun {
    pub cases: usize,
    /// Feasible instances seen by the cone oracle.
    pub feasible: usize,
    pub failures: Vec<String>,
}

impl OracleRun {
    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// m_ij as the order of s_i s_j.
pub fn coxeter_matrix(rs: &RootSystem) -> Vec<Vec<usize>> {
    let n = rs.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = GroupElement::simple(rs, i).mul(rs, &GroupElement::simple(rs, j));
                    let mut p = x.clone();
                    let mut k = 1;
                    while !p.is_identity() {
                        p = p.mul(rs, &x);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
        .collect()
}

/// Every word obtained from `w` by one braid move (commutations included).
pub fn braid_moves(m: &[Vec<usize>], w: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for p in 0..w.len() {
        let (i, j) = match (w.get(p), w.get(p + 1)) {
            (Some(&i), Some(&j)) if i != j => (i, j),
            _ => continue,
        };
        let len = m[i][j];
        if p + len > w.len() {
            continue;
        }
        if (0..len).all(|k| w[p + k] == if k % 2 == 0 { i } else { j }) {
            let mut v = w.to_vec();
            for k in 0..len {
                v[p + k] = if k % 2 == 0 { j } else { i };
            }
            out.push(v);
        }
    }
    out
}

/// All positive words equal to `w` in the braid monoid.
pub fn word_class(m: &[Vec<usize>], w: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for y in braid_moves(m, &x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn reduced_element(rs: &RootSystem, word: &[usize]) -> Option<GroupElement> {
    let x = GroupElement::from_word(rs, 0, word).unwrap();
    (x.length() == word.len()).then_some(x)
}

/// Greedy normal form by exhaustive search: the largest simple right (or left) divisor is read
/// off from every reduced suffix (or prefix) of every word of the braid, then split off.
pub fn greedy_by_search(rs: &RootSystem, m: &[Vec<usize>], word: &[usize], right: bool) -> Option<Vec<GroupElement>> {
    let mut factors = Vec::new();
    let mut rest = word.to_vec();
    while !rest.is_empty() {
        let class = word_class(m, &rest);
        let mut divisors: Vec<(GroupElement, Vec<usize>)> = Vec::new();
        for w in &class {
            for k in 1..=w.len() {
                let (part, remainder) = if right {
                    (&w[w.len() - k..], &w[..w.len() - k])
                } else {
                    (&w[..k], &w[k..])
                };
                if let Some(x) = reduced_element(rs, part) {
                    divisors.push((x, remainder.to_vec()));
                }
            }
        }
        let top = divisors.iter().map(|(x, _)| x.length()).max()?;
        let best: BTreeSet<&GroupElement> = divisors.iter().filter(|(x, _)| x.length() == top).map(|(x, _)| x).collect();
        if best.len() != 1 {
            return None;
        }
        let pick = divisors.iter().find(|(x, _)| x.length() == top)?;
        factors.push(pick.0.clone());
        rest = pick.1.clone();
    }
    if right {
        factors.reverse();
    }
    Some(factors)
}

/// Every word over `rank` letters of length at most `max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..rank).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Right and left greedy forms against exhaustive factorization search.
pub fn normal_form_oracle(types: &[(&str, usize)]) -> OracleRun {
    let mut run = OracleRun::default();
    for &(t, max_len) in types {
        let rs = rs(t);
        let m = coxeter_matrix(&rs);
        for w in all_words(rs.rank(), max_len) {
            let b = BraidWord::from_letters(&rs, 0, &w);
            for right in [true, false] {
                let got = if right { normal_form(&rs, &b) } else { left_normal_form(&rs, &b) };
                let expect = greedy_by_search(&rs, &m, &w, right);
                run.check(expect.as_ref() == Some(&got.factors), || {
                    format!("{t} word {:?} {}", w.iter().map(|s| s + 1).collect::<Vec<_>>(), if right { "right" } else { "left" })
                });
            }
        }
    }
    run
}

/// Strict feasibility of {c : a·c > 0 (strict) or a·c ≥ 0} by Fourier–Motzkin elimination.
pub fn fourier_motzkin(dim: usize, rows: &[(Vector, bool)]) -> bool {
    let mut rows: Vec<(Vector, bool)> = rows.to_vec();
    for var in (0..dim).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.0[var].sign() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => rest.push(r),
            }
        }
        for (p, ps) in &pos {
            for (q, qs) in &neg {
                let a = -&q[var];
                let b = p[var].clone();
                let combo: Vector = p.iter().zip(q).map(|(x, y)| &(&a * x) + &(&b * y)).collect();
                rest.push((combo, *ps || *qs));
            }
        }
        rows = rest;
    }
    rows.iter().all(|(_, strict)| !strict)
}

fn random_element(field: &Arc<RealCyclotomicField>, rng: &mut TestRng) -> FieldElement {
    let coeffs: Vec<i64> = (0..field.degree()).map(|_| rng.random_range(-2..=2)).collect();
    FieldElement::from_coeffs(field, from_ints(&coeffs))
}

/// Cone feasibility against Fourier–Motzkin on random problems of dimension ≤ 3.
pub fn cone_oracle(cases: usize) -> OracleRun {
    let mut run = OracleRun::default();
    let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    for n in [1u64, 5, 8] {
        let field = field_create(n);
        for case in 0..cases {
            let ambient = rng.random_range(1..=3usize);
            let k = rng.random_range(1..=ambient);
            let basis: Vec<Vector> =
                (0..k).map(|_| (0..ambient).map(|_| random_element(&field, &mut rng)).collect()).collect();
            let mut p = ConeProblem::new(&field, ambient, basis.clone());
            for _ in 0..rng.random_range(0..=4usize) {
                p.strict.push((0..ambient).map(|_| random_element(&field, &mut rng)).collect());
            }
            for _ in 0..rng.random_range(0..=2usize) {
                p.weak.push((0..ambient).map(|_| random_element(&field, &mut rng)).collect());
            }
            let restrict = |f: &Vector| -> Vector { basis.iter().map(|b| coxbraid::exactfield::linalg::dot(f, b)).collect() };
            let mut rows: Vec<(Vector, bool)> = p.strict.iter().map(|f| (restrict(f), true)).collect();
            rows.extend(p.weak.iter().map(|g| (restrict(g), false)));
            let expect = fourier_motzkin(k, &rows);
            run.feasible += expect as usize;
            let (got, witness) = cone_strictly_feasible(&p);
            let witness_ok = match &witness {
                Some(v) if got => {
                    let mut m = basis.clone();
                    m.push(v.clone());
                    p.satisfied_by(v) && rank(&m) == rank(&basis)
                }
                None => !got,
                _ => false,
            };
            run.check(got == expect && witness_ok, || format!("field {n} case {case}: expected {expect}, got {got}"));
        }
    }
    run
}

/// The literal one-step shift targets of w by W_J: equal length and the length condition of `kind`.
pub fn literal_steps(rs: &RootSystem, w: &GroupElement, kind: ShiftKind, taus: &[GroupElement]) -> BTreeSet<GroupElement> {
    let l = w.length();
    taus.iter()
        .filter_map(|tau| {
            let target = w.conjugate_by(rs, tau);
            if target.length() != l {
                return None;
            }
            let lt = tau.length();
            let left = tau.mul(rs, w).length();
            let right = w.mul(rs, &tau.inverse(rs)).length();
            let cyclic = left + lt == l || right + lt == l;
            let strong = left == l + lt || right == l + lt;
            let ok = match kind {
                ShiftKind::SimpleShift => lt == 1,
                ShiftKind::Cyclic => cyclic,
                ShiftKind::Strong => strong,
                ShiftKind::Mixed => cyclic || strong,
            };
            ok.then_some(target)
        })
        .collect()
}

fn literal_class(rs: &RootSystem, w: &GroupElement, kind: ShiftKind, taus: &[GroupElement]) -> BTreeSet<GroupElement> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in literal_steps(rs, &x, kind, taus) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Shift classes of every element of every coset against closure under literal all-τ steps.
pub fn shift_oracle(types: &[&str]) -> OracleRun {
    let mut run = OracleRun::default();
    for &t in types {
        let rs = rs(t);
        let full = rs.full_index();
        for j in [full, full & !1, 1] {
            let taus = parabolic_elements(&rs, j);
            for twist in 0..rs.twist_count() {
                for w in coset_elements(&rs, twist, usize::MAX).unwrap() {
                    for kind in [ShiftKind::SimpleShift, ShiftKind::Cyclic, ShiftKind::Strong, ShiftKind::Mixed] {
                        let got: BTreeSet<GroupElement> = shift_class(&rs, &w, kind, j, None).into_iter().collect();
                        let expect = literal_class(&rs, &w, kind, &taus);
                        run.check(got == expect, || format!("{t} J={j:b} {kind:?} w = [{}]", w.word_string(&rs)));
                    }
                }
            }
        }
    }
    run
}

/// The root set of the inversion sequence is unchanged by every braid move, and equals R_w on
/// reduced words.
pub fn inversion_oracle(types: &[(&str, usize)]) -> OracleRun {
    let mut run = OracleRun::default();
    for &(t, max_len) in types {
        let rs = rs(t);
        let m = coxeter_matrix(&rs);
        let npos = rs.npos();
        for w in all_words(rs.rank(), max_len) {
            let base = inversion_sequence_of_letters(&rs, &w).as_set(npos);
            for v in braid_moves(&m, &w) {
                let moved = inversion_sequence_of_letters(&rs, &v).as_set(npos);
                run.check(moved == base, || format!("{t} word {w:?} → {v:?}"));
            }
            if let Some(x) = reduced_element(&rs, &w) {
                let expect: BTreeSet<usize> = (0..npos).filter(|&r| !rs.is_positive(x.apply(r as u16))).collect();
                let got: BTreeSet<usize> = inversion_sequence_of_letters(&rs, &w).roots.iter().map(|&r| r as usize).collect();
                run.check(got == expect, || format!("{t} reduced word {w:?} sequence ≠ R_w"));
            }
        }
    }
    run
}

/// Default oracle workloads: rank ≤ 2 at longer words, rank 3 at shorter ones.
pub const NORMAL_FORM_TYPES: [(&str, usize); 6] = [("A2", 8), ("B2", 8), ("G2", 8), ("I2(5)", 8), ("A3", 5), ("B3", 5)];
pub const SHIFT_TYPES: [&str; 6] = ["A2", "B2", "G2", "A3", "B3", "I2(5)"];
pub const INVERSION_TYPES: [(&str, usize); 5] = [("A2", 8), ("B2", 8), ("G2", 7), ("A3", 6), ("B3", 6)];
