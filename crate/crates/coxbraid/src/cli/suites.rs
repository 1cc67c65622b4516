//! Named verification suites run exhaustively over small types.

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    conjugates_in_monoid, edge_lift, is_left_greedy, is_right_greedy, left_normal_form, normal_form,
    power_normal_form, power_prefixes, predicted_dgn, quasiregular_power_identity, renormalize, right_divides,
    stabilization_bound, twist_apply, unstable_count, BraidWord,
};
use crate::coxeter::{
    coset_elements, conjugacy_class, conjugacy_classes, greedy_monotone_path, involution_explicit_form,
    involution_minmax_check, involutions, level_steps, power_bound, Extremum, GroupElement, ShiftKind,
};
use crate::eigengeometry::{
    braiding_sequences, eigen_decompose, fixed_space, good_position, good_position_alt,
    has_anisotropic_braiding_sequence, has_regular_point_in_dominant_chamber, is_dominant, is_quasiregular_with,
    Ambient, EigenComponent, EigenSequence,
};
use crate::exactfield::kernel;
use crate::exactfield::linalg::{identity, mat_add};
use crate::rootsystem::{bits, RootSystem, TypeError};

use super::fixtures;

pub const SUITES: [&str; 8] =
    ["normal-form", "dg-bound", "dominance-chain", "involutions", "shifts", "braiding-dgn", "theorem", "fixtures"];

/// Irreducible types of rank at most 4 used when no type is given.
pub const SMALL_TYPES: [&str; 14] =
    ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "H3", "I2(5)"];

/// Most counterexamples kept per check.
const KEEP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Named pass/fail counters; merging keeps the order of first appearance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checks: Vec<Check>,
}

impl Tally {
    fn entry(&mut self, name: &str) -> &mut Check {
        let pos = match self.checks.iter().position(|c| c.name == name) {
            Some(p) => p,
            None => {
                self.checks.push(Check { name: name.to_string(), cases: 0, failures: 0, counterexamples: Vec::new() });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let c = self.entry(name);
        c.cases += 1;
        if !ok {
            c.failures += 1;
            if c.counterexamples.len() < KEEP {
                c.counterexamples.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        for o in other.checks {
            let c = self.entry(&o.name);
            c.cases += o.cases;
            c.failures += o.failures;
            let room = KEEP.saturating_sub(c.counterexamples.len());
            c.counterexamples.extend(o.counterexamples.into_iter().take(room));
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    let parts: Vec<Tally> = items.par_iter().map(f).collect();
    parts.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub types: Vec<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Types to run; `None` means every small type within the rank cap.
    pub types: Option<Vec<String>>,
    pub max_rank: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected one of {list})", list = SUITES.join(", "))]
    UnknownSuite(String),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("type {ty} has rank {rank}, above the cap {cap} of this suite")]
    RankCap { ty: String, rank: usize, cap: usize },
}

/// Default rank cap of the exhaustive suites.
pub const DEFAULT_RANK_CAP: usize = 4;

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, SuiteError> {
    if !SUITES.contains(&name) {
        return Err(SuiteError::UnknownSuite(name.to_string()));
    }
    if name == "fixtures" {
        let tally = fixtures::run_fixtures();
        return Ok(SuiteReport { suite: name.into(), types: vec![], passed: tally.passed(), checks: tally.checks });
    }
    let cap = opts.max_rank.unwrap_or(DEFAULT_RANK_CAP);
    let types: Vec<String> = match &opts.types {
        Some(t) => t.clone(),
        None => SMALL_TYPES.iter().map(|s| s.to_string()).collect(),
    };
    let mut systems = Vec::new();
    for t in &types {
        let rs = RootSystem::from_str(t)?;
        if rs.rank() > cap {
            if opts.types.is_some() {
                return Err(SuiteError::RankCap { ty: t.clone(), rank: rs.rank(), cap });
            }
            continue;
        }
        systems.push((t.clone(), rs));
    }
    let mut tally = Tally::default();
    for (t, rs) in &systems {
        let part = match name {
            "normal-form" => normal_form_suite(t, rs),
            "dg-bound" => dg_bound_suite(t, rs),
            "dominance-chain" => dominance_chain_suite(t, rs),
            "involutions" => involutions_suite(t, rs),
            "shifts" => shifts_suite(t, rs),
            "braiding-dgn" => braiding_dgn_suite(t, rs),
            "theorem" => theorem_suite(t, rs),
            _ => unreachable!(),
        };
        tally.merge(part);
    }
    Ok(SuiteReport {
        suite: name.into(),
        types: systems.into_iter().map(|(t, _)| t).collect(),
        passed: tally.passed(),
        checks: tally.checks,
    })
}

/// Every element of every coset δW̃.
pub fn all_elements(rs: &RootSystem) -> Vec<GroupElement> {
    (0..rs.twist_count()).flat_map(|t| coset_elements(rs, t, usize::MAX).expect("no cap")).collect()
}

/// Classes of every coset, each sorted by length.
fn all_classes(rs: &RootSystem) -> Vec<Vec<GroupElement>> {
    (0..rs.twist_count())
        .flat_map(|t| conjugacy_classes(rs, t, rs.full_index(), usize::MAX).expect("no cap"))
        .collect()
}

fn w_str(ty: &str, rs: &RootSystem, w: &GroupElement) -> String {
    format!("{ty} w = [{}]", w.word_string(rs))
}

/// Some eigenspace with θ = 1/ord(w) lies in no root hyperplane outside H^w.
fn primitive_quasiregular(rs: &RootSystem, w: &GroupElement, decomp: &crate::eigengeometry::EigenDecomposition) -> bool {
    let fixed = w.inversion_data(rs).fixed.pos;
    let target = crate::eigengeometry::Angle::new(1, w.order() as i64);
    decomp
        .nonzero_components()
        .any(|(_, c)| c.theta == target && decomp.ambient.orthogonal_roots(&c.basis) & !fixed == 0)
}

/// b_w^d written with one factor per simple letter.
fn letter_power(rs: &RootSystem, w: &GroupElement, d: usize) -> BraidWord {
    let single = BraidWord::from_element(rs, w);
    let full = (0..d).fold(BraidWord::identity(), |acc, _| acc.product(rs, &single));
    let letters = full.letters(rs);
    BraidWord::new(full.twist, letters.into_iter().map(|s| GroupElement::simple(rs, s)).collect())
}

fn normal_form_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let rank = rs.rank();
    let elements = all_elements(rs);
    let mut tally = par_tally(&elements, |w| {
        let mut t = Tally::default();
        for d in 1..=3 {
            let nf = power_normal_form(rs, w, d);
            let detail = || format!("{} d = {d}", w_str(ty, rs, w));
            t.check("right-greedy output with the right image", is_right_greedy(&nf, rank) && nf.image(rs) == w.power(rs, d), detail);
            let letters = letter_power(rs, w, d);
            t.check("independent of decomposition and sliding order", normal_form(rs, &letters) == nf, detail);
            t.check("idempotent", normal_form(rs, &nf) == nf, detail);
            if w.twist() == 0 {
                let left = left_normal_form(rs, &letters);
                let mirrored = normal_form(rs, &letters.reversed(rs)).reversed(rs);
                t.check("left form mirrors the right form", is_left_greedy(&left, rank) && left == mirrored, detail);
            }
        }
        t
    });
    if rank <= 2 {
        let simple: Vec<GroupElement> = elements.iter().filter(|w| w.twist() == 0 && !w.is_identity()).cloned().collect();
        let part = par_tally(&simple, |x| {
            let mut t = Tally::default();
            for y in &simple {
                let pair = BraidWord::new(0, vec![x.clone(), y.clone()]);
                let greedy_xy = is_right_greedy(&pair, rank);
                for z in &simple {
                    let pair_yz = BraidWord::new(0, vec![y.clone(), z.clone()]);
                    if greedy_xy && is_right_greedy(&pair_yz, rank) {
                        let triple = BraidWord::new(0, vec![x.clone(), y.clone(), z.clone()]);
                        t.check("pairwise greedy triples are normal forms", normal_form(rs, &triple) == triple, || {
                            format!("{ty} {}", triple.display(rs))
                        });
                    }
                }
                let letters: Vec<GroupElement> =
                    pair.letters(rs).into_iter().map(|s| GroupElement::simple(rs, s)).collect();
                t.check("pairs agree with letter decompositions", normal_form(rs, &pair) == normal_form(rs, &BraidWord::new(0, letters)), || {
                    format!("{ty} {}", pair.display(rs))
                });
            }
            t
        });
        tally.merge(part);
    }
    tally
}

fn dg_bound_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let elements = all_elements(rs);
    par_tally(&elements, |w| {
        let mut t = Tally::default();
        let npos = rs.npos();
        let data = w.inversion_data(rs);
        let u = unstable_count(rs, w);
        let base = stabilization_bound(rs, w, 1);
        let dmax = 3 * base + 2;
        let back = rs.twist_inverse(w.twist());
        let tilde = w.untwisted(rs);
        let rw = w.inversion_mask();
        let mut forms: Vec<Vec<GroupElement>> = vec![Vec::new()];
        for d in 1..=dmax {
            let shifted: Vec<GroupElement> = forms[d - 1].iter().map(|x| twist_apply(rs, back, x)).collect();
            let mut f = shifted.clone();
            if !tilde.is_identity() {
                f.push(tilde.clone());
            }
            renormalize(rs, &mut f);
            let detail = || format!("{} d = {d}", w_str(ty, rs, w));
            let dg1 = f.last().map_or(0, GroupElement::inversion_mask);
            t.check("R_w ⊆ R_DG ⊆ R+ ∖ R_st", rw & !dg1 == 0 && dg1 & data.stable.pos == 0, detail);
            let mut g = GroupElement::identity(rs);
            let mut ok = true;
            for x in f.iter().rev() {
                let ginv = g.inverse(rs);
                ok &= bits(x.inversion_mask()).all(|r| !data.stable.contains(npos, ginv.apply(r as u16)));
                ok &= x.length() <= u;
                g = x.mul(rs, &g);
            }
            t.check("factor roots avoid the transported stable roots", ok, detail);
            for i in 1..=3 {
                let keep = |v: &[GroupElement]| v[v.len().saturating_sub(i)..].to_vec();
                let mut x = keep(&shifted);
                if !tilde.is_identity() {
                    x.push(tilde.clone());
                }
                let p = BraidWord::new(0, keep(&f));
                t.check("DG prefix of the power right-divides the previous prefix times b_w", right_divides(rs, &p, &BraidWord::new(0, x)), || {
                    format!("{} d = {d} i = {i}", w_str(ty, rs, w))
                });
            }
            forms.push(f);
        }
        for i in 1..=3 {
            let di = stabilization_bound(rs, w, i).max(1);
            let tail = |d: usize| forms[d][forms[d].len().saturating_sub(i)..].to_vec();
            let stable = (di..=dmax).all(|d| tail(d) == tail(di));
            t.check("DG prefix stabilises at the bound", stable, || format!("{} i = {i} bound = {di}", w_str(ty, rs, w)));
        }
        t
    })
}

struct ElementInfo {
    dominant: bool,
    elliptic: bool,
    quasiregular: bool,
    primitive: bool,
}

fn dominance_chain_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let classes = all_classes(rs);
    let rank = rs.rank();
    let coxeter = GroupElement::from_word(rs, 0, &(0..rank).collect::<Vec<_>>()).unwrap();
    let irreducible = rs.cartan().is_irreducible();
    par_tally(&classes, |class| {
        let mut t = Tally::default();
        let min_len = class[0].length();
        let infos: Vec<ElementInfo> = class
            .par_iter()
            .map(|w| {
                let decomp = eigen_decompose(rs, w);
                ElementInfo {
                    dominant: is_dominant(rs, w),
                    elliptic: decomp.is_elliptic(),
                    quasiregular: is_quasiregular_with(rs, w, &decomp),
                    primitive: primitive_quasiregular(rs, w, &decomp),
                }
            })
            .collect();
        let parts: Vec<Tally> = class
            .par_iter()
            .zip(&infos)
            .map(|(w, info)| {
                let mut t = Tally::default();
                let detail = || w_str(ty, rs, w);
                let decomp = eigen_decompose(rs, w);
                let dims: usize = decomp.nonzero_components().map(|(_, c)| c.dim()).sum();
                t.check("eigenspace dimensions add up to the rank", dims == rank, detail);
                let lcm = decomp.nonzero_components().fold(1i64, |acc, (_, c)| acc.lcm(c.theta.denom()));
                t.check("order is the lcm of the angle denominators", lcm as usize == w.order(), detail);
                let data = w.inversion_data(rs);
                let premise = info.elliptic || (!info.dominant && has_anisotropic_braiding_sequence(rs, w));
                t.check("elliptic or anisotropic braiding implies dominant", !premise || info.dominant, detail);
                t.check("dominant implies firmly convex", !info.dominant || data.is_firmly_convex(rs), detail);
                t.check("firmly convex implies convex", !data.is_firmly_convex(rs) || data.is_convex(rs), detail);
                let comps: Vec<&EigenComponent> = decomp.nonzero_components().map(|(_, c)| c).collect();
                if rank <= 3 {
                    for order in ordered_subsets(comps.len()) {
                        let spaces = order.iter().map(|&i| comps[i].clone()).collect();
                        let seq = EigenSequence::new(decomp.ambient.clone(), spaces).expect("distinct angles");
                        t.check("both good position criteria agree", good_position(&seq) == good_position_alt(&seq), || {
                            format!("{} thetas {:?}", w_str(ty, rs, w), seq.thetas())
                        });
                    }
                }
                for seq in braiding_sequences(rs, w, &decomp) {
                    let th = seq.thetas();
                    if th.iter().any(|x| *x < th[0]) {
                        t.check("braiding with a non-minimal first angle is not of minimal length", w.length() > min_len, || {
                            format!("{} thetas {th:?}", w_str(ty, rs, w))
                        });
                    }
                }
                t
            })
            .collect();
        for p in parts {
            t.merge(p);
        }
        let rep = &class[0];
        let dom: Vec<usize> = class.iter().zip(&infos).filter(|(_, i)| i.dominant).map(|(w, _)| w.length()).collect();
        let detail = || w_str(ty, rs, rep);
        let (Some(&dmin), Some(&dmax)) = (dom.iter().min(), dom.iter().max()) else {
            t.check("every class has a dominant element", false, detail);
            return t;
        };
        t.check("every class has a dominant element", true, detail);
        if rep.twist() != 0 {
            return t;
        }
        let max_len = class.last().unwrap().length();
        t.check("maximal dominant length equals maximal length", dmax == max_len, detail);
        let elliptic_or_trivial = infos[0].elliptic || rep.is_identity();
        t.check("minimal dominant length ≥ minimal length, equal iff elliptic or trivial", dmin >= min_len && (dmin == min_len) == elliptic_or_trivial, detail);
        if !rep.is_identity() && irreducible {
            let roots = 2 * rs.npos();
            let lf = rep.inversion_data(rs).fixed_count();
            let lhs = dmin * rep.order();
            t.check("ord·ℓ(O^dom_min) ≥ |R| − ℓ_f, equal iff quasiregular", lhs + lf >= roots && (lhs + lf == roots) == infos[0].quasiregular, detail);
            t.check("ord·ℓ(O^dom_min) = |R| − ℓ_f iff quasiregular at θ = 1/ord", (lhs + lf == roots) == infos[0].primitive, detail);
            let is_coxeter = class.contains(&coxeter);
            t.check("ℓ(O^dom_min) ≥ rank, equal iff Coxeter class", dmin >= rank && (dmin == rank) == is_coxeter, detail);
        }
        t
    })
}

/// Every ordered selection of distinct indices below n, including the empty one.
fn ordered_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    while let Some(seq) = frontier.pop() {
        for i in 0..n {
            if !seq.contains(&i) {
                let mut next: Vec<usize> = seq.clone();
                next.push(i);
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out
}

fn eigenspace(rs: &RootSystem, w: &GroupElement, sign: i64) -> Vec<crate::exactfield::Vector> {
    if sign > 0 {
        return fixed_space(rs, w);
    }
    let m = mat_add(&w.matrix(rs), &identity(rs.field(), rs.rank()));
    kernel(rs.field(), &m, rs.rank())
}

fn involutions_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let rank = rs.rank();
    let full = rs.full_index();
    let ambient = Ambient::new(rs, 1);
    let mut tally = Tally::default();
    for twist in (0..rs.twist_count()).filter(|&t| rs.twist_order(t) <= 2) {
        let invs = involutions(rs, twist, usize::MAX).expect("no cap");
        let subsets: Vec<u64> = (0..1u64 << rank).collect();
        let part = par_tally(&subsets, |&j| {
            let mut t = Tally::default();
            let mut assigned = std::collections::HashSet::new();
            for w in &invs {
                if assigned.contains(w) {
                    continue;
                }
                let orbit = conjugacy_class(rs, w, j);
                assigned.extend(orbit.iter().cloned());
                let (lo, hi) = (orbit[0].length(), orbit.last().unwrap().length());
                for x in &orbit {
                    let detail = || format!("{} J = {{{}}}", w_str(ty, rs, x), super::report::parabolic_string(j));
                    for (mode, extremal, sign) in [(Extremum::Max, x.length() == hi, -1), (Extremum::Min, x.length() == lo, 1)] {
                        let b = involution_minmax_check(rs, x, j, mode).expect("involution");
                        let c = involution_explicit_form(rs, x, j, mode).expect("involution").holds();
                        t.check("extremal length iff the root condition", extremal == b, detail);
                        t.check("extremal length iff the explicit form", extremal == c, detail);
                        if j == full {
                            let d = has_regular_point_in_dominant_chamber(&ambient, &eigenspace(rs, x, sign));
                            t.check("extremal length iff C̄ meets the ∓1 eigenspace openly", extremal == d, detail);
                        }
                    }
                    let up = greedy_monotone_path(rs, x, j, true);
                    let down = greedy_monotone_path(rs, x, j, false);
                    let ok = involution_minmax_check(rs, up.last().unwrap(), j, Extremum::Max).unwrap()
                        && involution_minmax_check(rs, down.last().unwrap(), j, Extremum::Min).unwrap();
                    t.check("monotone conjugation reaches an extremal involution", ok, detail);
                }
                if j == full {
                    let dom: Vec<usize> = orbit.iter().filter(|x| is_dominant(rs, x)).map(|x| x.length()).collect();
                    let lf = orbit[0].inversion_data(rs).fixed_count();
                    let ok = !dom.is_empty() && dom.iter().all(|&l| l == dom[0]) && 2 * rs.npos() == lf + 2 * dom[0];
                    t.check("|R| = ℓ_f + 2ℓ(O^dom)", ok, || w_str(ty, rs, &orbit[0]));
                }
            }
            t
        });
        tally.merge(part);
    }
    tally
}

struct ShiftInfo {
    stable: crate::rootsystem::RootSet,
    moved_inversions: u32,
    convex: bool,
    firm: bool,
    pb: Option<GroupElement>,
}

fn shifts_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let elements = all_elements(rs);
    let infos: HashMap<GroupElement, ShiftInfo> = elements
        .par_iter()
        .map(|w| {
            let data = w.inversion_data(rs);
            let in_moved = rs.orthogonal_roots(&fixed_space(rs, w));
            let info = ShiftInfo {
                stable: data.stable,
                moved_inversions: (data.inversions & in_moved).count_ones(),
                convex: data.is_convex(rs),
                firm: data.is_firmly_convex(rs),
                pb: power_bound(rs, w).ok(),
            };
            (w.clone(), info)
        })
        .collect();
    let npos = rs.npos();
    par_tally(&elements, |w| {
        let mut t = Tally::default();
        let a = &infos[w];
        for e in level_steps(rs, w, ShiftKind::Mixed, rs.full_index()) {
            let b = &infos[&e.target];
            let tau = &e.conjugator;
            let detail = || format!("{} τ = [{}]", w_str(ty, rs, w), tau.word_string(rs));
            let moved = a.stable.iter(npos).all(|r| b.stable.contains(npos, tau.apply(r)));
            t.check("conjugator carries stable roots onto stable roots", moved && a.stable.len() == b.stable.len(), detail);
            t.check("|R_w ∩ V_w| is preserved", a.moved_inversions == b.moved_inversions, detail);
            if a.convex && b.convex && (a.firm || b.firm) {
                t.check("firm convexity transfers along shifts", a.firm && b.firm, detail);
            }
            let lift = edge_lift(rs, &e);
            t.check("edge lifts conjugate the braids", lift.is_some_and(|c| conjugates_in_monoid(rs, &c, w, &e.target)), detail);
            let (l, lt) = (w.length(), tau.length());
            let x = if tau.mul(rs, w).length() + lt == l {
                Some(tau.mul(rs, w))
            } else if w.mul(rs, &tau.inverse(rs)).length() + lt == l {
                Some(tau.clone())
            } else {
                None
            };
            if let (Some(x), Some(pb), Some(pb2)) = (x, &a.pb, &b.pb) {
                let x2 = pb2.mul(rs, &x).mul(rs, &pb.inverse(rs));
                let lhs = BraidWord::from_element(rs, pb2).product(rs, &BraidWord::from_element(rs, &x));
                let rhs = BraidWord::from_element(rs, &x2).product(rs, &BraidWord::from_element(rs, pb));
                let ok = x2.length() + pb.length() == pb2.length() + x.length() && normal_form(rs, &lhs) == normal_form(rs, &rhs);
                t.check("power bounds move along cyclic shifts", ok, detail);
            }
        }
        t
    })
}

fn braiding_dgn_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let elements = all_elements(rs);
    par_tally(&elements, |w| {
        let mut t = Tally::default();
        let decomp = eigen_decompose(rs, w);
        let ord = w.order();
        for seq in braiding_sequences(rs, w, &decomp) {
            for d in [ord, 2 * ord] {
                let ok = predicted_dgn(rs, w, &seq, d).is_ok_and(|p| p == power_normal_form(rs, w, d));
                t.check("predicted normal form of the power", ok, || {
                    format!("{} thetas {:?} d = {d}", w_str(ty, rs, w), seq.thetas())
                });
            }
        }
        t
    })
}

struct TheoremInfo {
    dominant: bool,
    elliptic: bool,
    quasiregular: bool,
    primitive: bool,
    convex: bool,
    firm: bool,
    pb: Option<GroupElement>,
    witness: Option<usize>,
    bound: usize,
    anisotropic: bool,
}

fn theorem_suite(ty: &str, rs: &Arc<RootSystem>) -> Tally {
    let classes = all_classes(rs);
    let irreducible = rs.cartan().is_irreducible();
    let npos = rs.npos();
    par_tally(&classes, |class| {
        let mut t = Tally::default();
        let infos: Vec<TheoremInfo> = class
            .par_iter()
            .map(|w| {
                let decomp = eigen_decompose(rs, w);
                let data = w.inversion_data(rs);
                let eq = crate::braid::braid_equation(rs, w);
                TheoremInfo {
                    dominant: is_dominant(rs, w),
                    elliptic: decomp.is_elliptic(),
                    quasiregular: is_quasiregular_with(rs, w, &decomp),
                    primitive: primitive_quasiregular(rs, w, &decomp),
                    convex: data.is_convex(rs),
                    firm: data.is_firmly_convex(rs),
                    pb: power_bound(rs, w).ok(),
                    witness: eq.witness,
                    bound: eq.bound,
                    anisotropic: has_anisotropic_braiding_sequence(rs, w),
                }
            })
            .collect();
        let min_len = class[0].length();
        let dom: Vec<usize> = class.iter().zip(&infos).filter(|(_, i)| i.dominant).map(|(w, _)| w.length()).collect();
        let (dmin, dmax) = (dom.iter().copied().min(), dom.iter().copied().max());
        for (w, info) in class.iter().zip(&infos) {
            let detail = || w_str(ty, rs, w);
            if info.anisotropic {
                let ord = w.order();
                let dg = power_prefixes(rs, w, 1, ord).pop().unwrap_or_default();
                let dg = dg.last().cloned().unwrap_or_else(|| GroupElement::identity(rs));
                t.check("anisotropic braiding gives DG(b_w^ord) = pb(w)", info.pb.as_ref() == Some(&dg), detail);
            }
            if info.dominant && (Some(w.length()) == dmin || Some(w.length()) == dmax) {
                t.check("extremal dominant elements satisfy the braid equation", info.witness.is_some_and(|d| d <= info.bound), detail);
            }
            if w.twist() == 0 {
                let holds = quasiregular_power_identity(rs, w).expect("untwisted");
                let min_dom = info.dominant && Some(w.length()) == dmin;
                t.check("quasiregular and minimally dominant imply the power identity", !(info.quasiregular && min_dom) || holds, detail);
                t.check("the power identity implies quasiregular", !holds || info.quasiregular, detail);
                t.check("power identity iff quasiregular of minimal dominant length", holds == (info.quasiregular && Some(w.length()) == dmin), detail);
                t.check("quasiregular at θ = 1/ord and minimally dominant imply the power identity", !(info.primitive && min_dom) || holds, detail);
            }
            if irreducible && w.length() == min_len {
                let trivial_or_elliptic = w.is_identity() || info.elliptic;
                let d = npos + 1 - w.length();
                let eq_at = info.pb.as_ref().is_some_and(|pb| {
                    let dg = power_prefixes(rs, w, 1, d).pop().unwrap_or_default();
                    dg.last().cloned().unwrap_or_else(|| GroupElement::identity(rs)) == *pb
                });
                let ok = trivial_or_elliptic == info.convex && info.convex == (info.firm && eq_at);
                t.check("minimal length: trivial or elliptic iff convex iff firmly convex with the braid equation", ok, detail);
            }
            if irreducible && w.twist() == 0 && !w.is_identity() {
                let support = w.reduced_word(rs).iter().fold(0u64, |m, &s| m | 1 << s);
                if support != rs.full_index() {
                    t.check("nontrivial parabolic elements are not convex", !info.convex, detail);
                }
            }
        }
        t
    })
}
