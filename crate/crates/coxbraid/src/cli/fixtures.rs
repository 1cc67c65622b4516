//! Worked examples replayed as named checks.

use std::sync::Arc;

use crate::braid::{
    braid_equation, dg_square_form, inversion_sequence_of_letters, normal_form, power_normal_form, predicted_dgn,
    quasiregular_power_identity, right_quotient, stabilized_prefix, BraidWord,
};
use crate::coxeter::{
    conjugacy_class, involution_explicit_form, involution_minmax_check, is_orbit_extremal, longest, path_conjugator,
    power_bound, shift_class, transporter_projection, transporter_search, Extremum, GroupElement, ShiftKind,
};
use crate::eigengeometry::{
    braiding_sequences, classify_sequence, dominant_subset, eigen_decompose, has_anisotropic_braiding_sequence,
    is_dominant, is_quasiregular, is_regular, length_formula, maximally_dominant, minimally_dominant, theta_elements,
    Angle, EigenSequence,
};
use crate::rootsystem::{RootSet, RootSystem};

use super::report::{classify, dgn_report, element_report};
use super::suites::Tally;

fn rs(t: &str) -> Arc<RootSystem> {
    RootSystem::from_str(t).expect("fixture type")
}

fn el(rs: &RootSystem, w: &str) -> GroupElement {
    GroupElement::parse(rs, w).expect("fixture word")
}

fn bw(rs: &RootSystem, b: &str) -> BraidWord {
    BraidWord::parse(rs, b).expect("fixture braid")
}

fn angle(n: i64, d: i64) -> Angle {
    Angle::new(n, d)
}

/// Positive root whose simple-root coordinates are 1 on the given 1-based indices and 0 elsewhere.
fn root_sum(rs: &RootSystem, support: &[usize]) -> Option<usize> {
    (0..rs.npos()).find(|&r| {
        rs.root(r).iter().enumerate().all(|(i, x)| if support.contains(&(i + 1)) { x.is_one() } else { x.is_zero() })
    })
}

/// The reflection in a positive root, as u·s_i·u⁻¹ found by descending in height.
fn reflection(rs: &RootSystem, r: usize) -> GroupElement {
    let mut prefix = Vec::new();
    let mut cur = r as u16;
    while cur as usize >= rs.rank() {
        let s = (0..rs.rank())
            .find(|&s| {
                let img = rs.simple_reflection(s, cur);
                rs.is_positive(img) && rs.height(img as usize) < rs.height(cur as usize)
            })
            .expect("a simple root lowers the height");
        prefix.push(s);
        cur = rs.simple_reflection(s, cur);
    }
    let mut word = prefix.clone();
    word.push(cur as usize);
    word.extend(prefix.iter().rev());
    GroupElement::from_word(rs, 0, &word).expect("valid letters")
}

fn dg1(rs: &RootSystem, w: &GroupElement, d: usize) -> GroupElement {
    power_normal_form(rs, w, d).factors.last().cloned().unwrap_or_else(|| GroupElement::identity(rs))
}

fn same_line(a: &[crate::exactfield::FieldElement], b: &[crate::exactfield::FieldElement]) -> bool {
    let Some(k) = (0..a.len()).find(|&i| !b[i].is_zero()) else {
        return false;
    };
    let ratio = &a[k] / &b[k];
    a.iter().zip(b).all(|(x, y)| *x == &ratio * y)
}

type Fixture = (&'static str, fn() -> bool);

const FIXTURES: &[Fixture] = &[
    ("B3 has 9 positive roots and α₂+α₃ is a root", || {
        let b3 = rs("B3");
        b3.npos() == 9 && root_sum(&b3, &[2, 3]).is_some()
    }),
    ("D4 has six twists including 1↦3↦4↦1", || {
        let d4 = rs("D4");
        d4.twist_count() == 6 && d4.twists().iter().any(|p| p[..] == [2, 1, 3, 0])
    }),
    ("dual Coxeter numbers of H3 and H4 are 8 and 24", || {
        rs("H3").dual_coxeter_number() == Some(8) && rs("H4").dual_coxeter_number() == Some(24)
    }),
    ("B3 s₃s₁s₂s₁ has length 4 and R_st = R^w = {±α₂₃}", || {
        let b3 = rs("B3");
        let w = el(&b3, "3 1 2 1");
        let data = w.inversion_data(&b3);
        let a23 = root_sum(&b3, &[2, 3]).unwrap();
        w.length() == 4 && data.stable == RootSet::symmetric(1 << a23) && data.fixed == data.stable && !data.is_convex(&b3)
    }),
    ("D4 s₂s₄s₃s₂s₁ has stable positive roots {α₃, α₄}", || {
        let d4 = rs("D4");
        el(&d4, "2 4 3 2 1").inversion_data(&d4).stable_positive() == 0b1100
    }),
    ("B3 s₁s₂s₃s₂ is convex and s₂s₁s₂s₃ is not", || {
        let b3 = rs("B3");
        el(&b3, "1 2 3 2").inversion_data(&b3).is_convex(&b3) && !el(&b3, "2 1 2 3").inversion_data(&b3).is_convex(&b3)
    }),
    ("D4 s₃s₁ and s₄s₁ are not conjugate under W", || {
        let d4 = rs("D4");
        let class = conjugacy_class(&d4, &el(&d4, "3 1"), d4.full_index());
        !class.contains(&el(&d4, "4 1"))
    }),
    ("A4 class of s₂s₃s₄ contains s₁s₂s₃s₄s₁ and s₂s₃s₄s₂s₃", || {
        let a4 = rs("A4");
        let class = conjugacy_class(&a4, &el(&a4, "2 3 4"), a4.full_index());
        class.contains(&el(&a4, "1 2 3 4 1")) && class.contains(&el(&a4, "2 3 4 2 3"))
    }),
    ("B3 w∘s₁ and w∘s₂ are cyclic shifts via x = s₃s₂s₃s₁s₂s₃, y = s₁s₂", || {
        let b3 = rs("B3");
        let w0 = longest(&b3);
        let (a, b) = (w0.mul_simple_right(&b3, 0), w0.mul_simple_right(&b3, 1));
        let (x, y) = (el(&b3, "3 2 3 1 2 3"), el(&b3, "1 2"));
        let no_elementary = (0..3).all(|s| a.conjugate_simple(&b3, s).length() <= a.length() && a.conjugate_simple(&b3, s) != b);
        let decomposed = x.mul(&b3, &y) == a && y.mul(&b3, &x) == b && x.length() + y.length() == a.length();
        let class = shift_class(&b3, &a, ShiftKind::Cyclic, b3.full_index(), None);
        let path = transporter_search(&b3, &a, &b, ShiftKind::Cyclic, b3.full_index(), None);
        no_elementary
            && decomposed
            && class.contains(&b)
            && path.is_some_and(|p| path_conjugator(&b3, &p).is_some_and(|t| a.conjugate_by(&b3, &t) == b))
    }),
    ("B4 s₁s₂s₃s₄s₂s₃s₁ and its inverse lie in distinct cyclic shift classes", || {
        let b4 = rs("B4");
        let u = el(&b4, "1 2 3 4 2 3 1");
        !shift_class(&b4, &u, ShiftKind::Cyclic, b4.full_index(), None).contains(&u.inverse(&b4))
    }),
    ("A3 loops of mixed shifts at s₁s₂s₁ project into ⟨w⟩", || {
        let a3 = rs("A3");
        let w = el(&a3, "1 2 1");
        let v = el(&a3, "2 3 2");
        let loops = transporter_projection(&a3, &w, &w, ShiftKind::Mixed, a3.full_index());
        let generated = [GroupElement::identity(&a3), w.clone()];
        w.conjugate_by(&a3, &v) == w && loops.iter().all(|t| generated.contains(t)) && !loops.contains(&v)
    }),
    ("A3 w∘s₁s₃ is not of maximal length in its class", || {
        let a3 = rs("A3");
        let w = longest(&a3).mul(&a3, &el(&a3, "1 3"));
        w == el(&a3, "1").mul(&a3, &longest(&a3)).mul(&a3, &el(&a3, "1"))
            && !involution_minmax_check(&a3, &w, a3.full_index(), Extremum::Max).unwrap()
            && !is_orbit_extremal(&a3, &w, a3.full_index(), Extremum::Max)
    }),
    ("D4 δw∘ is not of minimal length and δs₃s₂s₄s₁s₂s₁ is", || {
        let d4 = rs("D4");
        let full = d4.full_index();
        let dw0 = GroupElement::twist_element(&d4, 1).mul(&d4, &longest(&d4));
        let good = el(&d4, "d1: 3 2 4 1 2 1");
        d4.twist_order(1) == 3
            && !is_orbit_extremal(&d4, &dw0, full, Extremum::Min)
            && !involution_minmax_check(&d4, &dw0, full, Extremum::Min).unwrap()
            && conjugacy_class(&d4, &dw0, full).contains(&good)
            && is_orbit_extremal(&d4, &good, full, Extremum::Min)
            && !involution_explicit_form(&d4, &good, full, Extremum::Min).unwrap().holds()
    }),
    ("A4 s₂s₃s₄s₁s₂s₃ has eigenvalues e^{±2πi/5}, e^{±4πi/5} and minimal length", || {
        let a4 = rs("A4");
        let w = el(&a4, "2 3 4 1 2 3");
        let spectrum: Vec<(Angle, usize)> =
            eigen_decompose(&a4, &w).nonzero_components().map(|(_, c)| (c.theta, c.dim())).collect();
        spectrum == [(angle(1, 5), 2), (angle(2, 5), 2)] && (0..4).all(|s| w.conjugate_simple(&a4, s).length() >= w.length())
    }),
    ("B4 w∘s₁s₂s₄ has V_{−1} the line through ω₃", || {
        let b4 = rs("B4");
        let w = longest(&b4).mul(&b4, &el(&b4, "1 2 4"));
        let d = eigen_decompose(&b4, &w);
        let Some(line) = d.component(angle(1, 2)).map(|c| c.basis.clone()) else {
            return false;
        };
        let omega3 = d.ambient.embed(&b4.fundamental_weights()[2]);
        line.len() == 1 && same_line(&line[0], &omega3)
    }),
    ("A4 s₁s₂s₃s₄s₁ and s₃(s₁s₂s₃s₄s₁)s₃ are dominant", || {
        let a4 = rs("A4");
        let w = el(&a4, "1 2 3 4 1");
        is_dominant(&a4, &w) && is_dominant(&a4, &w.conjugate_simple(&a4, 2))
    }),
    ("B3 highest root reflection is dominant", || {
        let b3 = rs("B3");
        is_dominant(&b3, &reflection(&b3, b3.highest_root().unwrap()))
    }),
    ("B4 dominant conjugates of s₂s₃s₄ of length 7 are neither minimally nor maximally dominant", || {
        let b4 = rs("B4");
        let class = conjugacy_class(&b4, &el(&b4, "2 3 4"), b4.full_index());
        let mid: Vec<GroupElement> = dominant_subset(&b4, &class).into_iter().filter(|x| x.length() == 7).collect();
        let (min, max) = (minimally_dominant(&b4, &class), maximally_dominant(&b4, &class));
        mid.len() == 2 && mid.iter().all(|x| !min.contains(x) && !max.contains(x))
    }),
    ("B2 reflections: V_{−1} is anisotropic braiding, (V_1, V_{−1}) of a simple one is decreasing and complete", || {
        let b2 = rs("B2");
        let simple = el(&b2, "1");
        let d = eigen_decompose(&b2, &simple);
        let seq = EigenSequence::from_angles(&d, &[angle(0, 1), angle(1, 2)]).unwrap();
        let c = classify_sequence(&b2, &simple, &seq);
        let r = reflection(&b2, 2);
        let d2 = eigen_decompose(&b2, &r);
        let seq2 = EigenSequence::from_angles(&d2, &[angle(1, 2)]).unwrap();
        let c2 = classify_sequence(&b2, &r, &seq2);
        c.braiding && c.complete && c.decreasing && c2.braiding && c2.anisotropic
    }),
    ("B2 non-simple reflections are quasiregular but not regular", || {
        let b2 = rs("B2");
        (2..b2.npos()).all(|r| {
            let w = reflection(&b2, r);
            is_quasiregular(&b2, &w) && !is_regular(&b2, &w)
        })
    }),
    ("A3 bipartite Coxeter elements braid through their Coxeter plane; s₁s₂s₃ has no braiding sequence", || {
        let a3 = rs("A3");
        let has = |w: &str| {
            let w = el(&a3, w);
            !braiding_sequences(&a3, &w, &eigen_decompose(&a3, &w)).is_empty()
        };
        let w = el(&a3, "1 3 2");
        let plane = EigenSequence::from_angles(&eigen_decompose(&a3, &w), &[angle(1, 4)]).unwrap();
        let c = classify_sequence(&a3, &w, &plane);
        c.braiding && c.complete && has("1 3 2") && has("2 1 3") && !has("1 2 3") && !has("3 2 1")
    }),
    ("A3 s₁s₂s₃s₂ is regular", || {
        let a3 = rs("A3");
        is_regular(&a3, &el(&a3, "1 2 3 2"))
    }),
    ("A2 Coxeter class has ℓ(O^dom_min) = 2", || {
        let a2 = rs("A2");
        let class = conjugacy_class(&a2, &el(&a2, "1 2"), a2.full_index());
        minimally_dominant(&a2, &class).iter().all(|x| x.length() == 2)
    }),
    ("B3 long root reflections: ℓ(O^dom) = 2h^∨ − 3 = 7 and ℓ_f = 4", || {
        let b3 = rs("B3");
        let refl = reflection(&b3, b3.highest_root().unwrap());
        let class = conjugacy_class(&b3, &refl, b3.full_index());
        let dom = dominant_subset(&b3, &class);
        let h = b3.dual_coxeter_number().unwrap() as usize;
        !dom.is_empty() && dom.iter().all(|x| x.length() == 2 * h - 3) && refl.inversion_data(&b3).fixed_count() == 4
    }),
    ("A4 class of s₂s₃s₄ has ℓ(O^dom_min) = 5 attained by s₁s₂s₃s₄s₁", || {
        let a4 = rs("A4");
        let class = conjugacy_class(&a4, &el(&a4, "2 3 4"), a4.full_index());
        let min = minimally_dominant(&a4, &class);
        min.contains(&el(&a4, "1 2 3 4 1")) && min.iter().all(|x| x.length() == 5)
    }),
    ("B3 w∘s₁ with Θ = {−1} gives length 8", || {
        let b3 = rs("B3");
        let w = longest(&b3).mul_simple_right(&b3, 0);
        let seq = EigenSequence::from_angles(&eigen_decompose(&b3, &w), &[angle(1, 2)]).unwrap();
        classify_sequence(&b3, &w, &seq).braiding && length_formula(&b3, &w, &seq) == Ok(angle(8, 1))
    }),
    ("anisotropic braiding sequences have ϑ_0 = pb(w)", || {
        let b3 = rs("B3");
        let w = el(&b3, "1 2 3 2");
        let seqs = braiding_sequences(&b3, &w, &eigen_decompose(&b3, &w));
        let pb = power_bound(&b3, &w).unwrap();
        let aniso: Vec<_> = seqs.iter().filter(|s| classify_sequence(&b3, &w, s).anisotropic).collect();
        !aniso.is_empty() && aniso.iter().all(|s| theta_elements(&b3, s).is_ok_and(|t| t.varthetas[0] == pb))
    }),
    ("B3 elliptic s₂s₃s₁s₂s₃s₂s₁ has b_w² = b_{12321}·b_{w∘}", || {
        let b3 = rs("B3");
        let w = el(&b3, "2 3 1 2 3 2 1");
        let d = eigen_decompose(&b3, &w);
        let expected = vec![el(&b3, "1 2 3 2 1"), longest(&b3)];
        let seq = EigenSequence::from_angles(&d, &[angle(1, 2), angle(1, 4)]).unwrap();
        d.is_elliptic()
            && power_normal_form(&b3, &w, 2).factors == expected
            && predicted_dgn(&b3, &w, &seq, 2).is_ok_and(|p| p.factors == expected)
    }),
    ("A2 DGN(b₁₂·b₁₂) = b₁·b₂₁₂ and DGN(b₁b₂₁) = b₁₂₁", || {
        let a2 = rs("A2");
        let w = bw(&a2, "1 2");
        let x = bw(&a2, "1 | 2").product(&a2, &w);
        normal_form(&a2, &w.product(&a2, &w)) == bw(&a2, "1 | 2 1 2")
            && right_quotient(&a2, &x, &bw(&a2, "2")) == Some(bw(&a2, "1 2 1"))
    }),
    ("A3 DG(b₃₂₁³) = DG(b₂₃₁²) = w∘ ≠ DG(b₃₂₁²)", || {
        let a3 = rs("A3");
        let w0 = longest(&a3);
        let w = el(&a3, "3 2 1");
        dg1(&a3, &w, 3) == w0 && dg1(&a3, &w, 2) != w0 && dg1(&a3, &el(&a3, "2 3 1"), 2) == w0
    }),
    ("A4 s₂s₁s₄s₃s₂s₁ has ℓ(DG) = 6, 7, 10, 10, …", || {
        let a4 = rs("A4");
        let w = el(&a4, "2 1 4 3 2 1");
        let lengths: Vec<usize> = (1..=6).map(|d| dg1(&a4, &w, d).length()).collect();
        lengths == [6, 7, 10, 10, 10, 10] && dg1(&a4, &w, 2) == w.mul_simple_left(&a4, 0)
    }),
    ("B3 s₃s₁s₂s₁: DGN(b_w²) = b₃₂·b₁₂₁₃₂₁, DGN(b_w³) = b₃₂₁₂₃₂·b₁₂₁₃₂₁, DGN(b_w^{2d}) = b₃₂·b_{w∘s₃}^{d−1}·b₁₂₁₃₂₁", || {
        let b3 = rs("B3");
        let w = el(&b3, "3 1 2 1");
        let tail = el(&b3, "1 2 1 3 2 1");
        let w0s3 = longest(&b3).mul_simple_right(&b3, 2);
        let closed = (1..=6).all(|d| {
            let mut expected = vec![el(&b3, "3 2")];
            expected.extend(std::iter::repeat_n(w0s3.clone(), d - 1));
            expected.push(tail.clone());
            power_normal_form(&b3, &w, 2 * d).factors == expected
        });
        power_normal_form(&b3, &w, 2).factors == [el(&b3, "3 2"), tail.clone()]
            && power_normal_form(&b3, &w, 3).factors == [el(&b3, "3 2 1 2 3 2"), tail]
            && closed
    }),
    ("A3 w∘s₁: DGN(b_w²) = b₂₃₁₂·b_{w∘}, DGN(b_w³) = b₂₃₁₂·b_{w⁻¹}·b_{w∘}, DGN(b_w^{4i+2}) = b₂₃₁₂^{2i+1}·b_{w∘}^{2i+1}", || {
        let a3 = rs("A3");
        let w0 = longest(&a3);
        let w = w0.mul_simple_right(&a3, 0);
        let x = el(&a3, "2 3 1 2");
        let closed = (0..=7).all(|i| {
            let k = 2 * i + 1;
            let mut expected = vec![x.clone(); k];
            expected.extend(vec![w0.clone(); k]);
            power_normal_form(&a3, &w, 4 * i + 2).factors == expected
        });
        power_normal_form(&a3, &w, 1).factors == [w.clone()]
            && power_normal_form(&a3, &w, 2).factors == [x.clone(), w0.clone()]
            && power_normal_form(&a3, &w, 3).factors == [x, w.inverse(&a3), w0]
            && closed
    }),
    ("D4 s₂s₄s₃s₂s₁ has stabilised DG = w∘s₄s₃ for d > 1", || {
        let d4 = rs("D4");
        let w = el(&d4, "2 4 3 2 1");
        let target = longest(&d4).mul(&d4, &el(&d4, "4 3"));
        let s = stabilized_prefix(&d4, &w, 1);
        s.confirmed && s.prefix.factors == [target.clone()] && dg1(&d4, &w, 1) != target && (2..=s.bound + 2).all(|d| dg1(&d4, &w, d) == target)
    }),
    ("B3 s₂s₁s₂s₃ fails the braid equation", || {
        let b3 = rs("B3");
        !braid_equation(&b3, &el(&b3, "2 1 2 3")).satisfied
    }),
    ("D6 w = xyx⁻¹ has DG(b_w⁷) = w∘ but DG(b_w⁶) = w∘s₂ with ord(w) = 6", || {
        let d6 = rs("D6");
        let x = el(&d6, "2 3 4");
        let y = el(&d6, "5 4 3 2 1 6 4 3 2 1");
        let w = x.mul(&d6, &y).mul(&d6, &x.inverse(&d6));
        let w0 = longest(&d6);
        w.order() == 6
            && braid_equation(&d6, &w).witness == Some(7)
            && dg1(&d6, &w, 7) == w0
            && dg1(&d6, &w, 6) == w0.mul_simple_right(&d6, 1)
    }),
    ("A3 maximally and minimally dominant elements satisfy the braid equation", || {
        let a3 = rs("A3");
        ["1", "1 2", "1 3", "1 2 3", "1 2 1 3"].iter().all(|rep| {
            let class = conjugacy_class(&a3, &el(&a3, rep), a3.full_index());
            minimally_dominant(&a3, &class)
                .iter()
                .chain(&maximally_dominant(&a3, &class))
                .all(|w| braid_equation(&a3, w).satisfied)
        })
    }),
    ("A3 s₂s₃s₂s₁ has b_w^{ord} = b_{w∘}²", || {
        let a3 = rs("A3");
        let w = el(&a3, "2 3 2 1");
        let w0 = longest(&a3);
        quasiregular_power_identity(&a3, &w) == Ok(true) && power_normal_form(&a3, &w, w.order()).factors == [w0.clone(), w0]
    }),
    ("inversion sequence of b_w^d lists w^{1−d}(R_w), …, R_w outside R_st", || {
        let b3 = rs("B3");
        let w = el(&b3, "1 2 3 2");
        let word = w.reduced_word(&b3);
        let block = inversion_sequence_of_letters(&b3, &word).roots;
        let d = 3;
        let letters: Vec<usize> = (0..d).flat_map(|_| word.clone()).collect();
        let full = inversion_sequence_of_letters(&b3, &letters).roots;
        let winv = w.inverse(&b3);
        let stable = w.inversion_data(&b3).stable;
        (0..d).all(|k| {
            let g = winv.power(&b3, d - 1 - k);
            full[k * block.len()..(k + 1) * block.len()].iter().zip(&block).all(|(&x, &r)| x == g.apply(r))
        }) && full.iter().all(|&r| !stable.contains(b3.npos(), r))
    }),
    ("A4 v = s₃s₄s₁s₂s₃ has DG(b_v²) = b_v but is not an involution", || {
        let a4 = rs("A4");
        let v = el(&a4, "3 4 1 2 3");
        !v.power(&a4, 2).is_identity() && (1..=4).all(|d| dg_square_form(&a4, &v, d).is_ok_and(|f| f == power_normal_form(&a4, &v, d)))
    }),
    ("A4 b_w and b_{w'} for w = s₁s₂s₃s₄s₁, w' = s₂s₃s₄s₂s₃ are not related by mixed shifts", || {
        let a4 = rs("A4");
        let (w, w2) = (el(&a4, "1 2 3 4 1"), el(&a4, "2 3 4 2 3"));
        transporter_search(&a4, &w, &w2, ShiftKind::Mixed, a4.full_index(), None).is_none()
            && w.inversion_data(&a4).stable != w2.inversion_data(&a4).stable
    }),
    ("A3 b = b₂₃₁, b' = b₂₃₂₁: b₂₃b₁₃·b = b·b' while b₁₂₁₃·b² = b²·b'", || {
        let a3 = rs("A3");
        let b = bw(&a3, "2 3 1");
        let b2 = bw(&a3, "2 3 2 1");
        let bb = b.product(&a3, &b);
        right_quotient(&a3, &b.product(&a3, &b2), &b) == Some(normal_form(&a3, &bw(&a3, "2 3 | 1 3")))
            && right_quotient(&a3, &bb.product(&a3, &b2), &bb) == Some(bw(&a3, "1 2 1 3"))
    }),
    ("A2 b = b₂, b' = b₁₂: b₂₁·b = b·b' while b²·b' has no right divisor b²", || {
        let a2 = rs("A2");
        let b = bw(&a2, "2");
        let b2 = bw(&a2, "1 2");
        let bb = b.product(&a2, &b);
        right_quotient(&a2, &b.product(&a2, &b2), &b) == Some(bw(&a2, "2 1"))
            && right_quotient(&a2, &bb.product(&a2, &b2), &bb).is_none()
    }),
    ("element report of B3 s₃s₁s₂s₁: stable roots ±α₂₃, not convex", || {
        let b3 = rs("B3");
        let r = element_report(&b3, &el(&b3, "3 1 2 1"));
        r.stable == ["[0,1,1]", "-[0,1,1]"] && !r.convex
    }),
    ("dgn report of B3 s₃s₁s₂s₁ squared is 32 | 121321", || {
        let b3 = rs("B3");
        let r = dgn_report(&b3, &bw(&b3, "3 1 2 1"), 2, false);
        r.factors.iter().map(|f| f.word.as_str()).collect::<Vec<_>>() == ["3 2", "1 2 1 3 2 1"]
    }),
    ("dgn report of A3 b_{w∘}⁴ is four copies of w∘; of (w∘s₁)⁶ the closed form", || {
        let a3 = rs("A3");
        let w0 = longest(&a3).word_string(&a3);
        let r = dgn_report(&a3, &bw(&a3, "2 1 3 2 1 3"), 4, false);
        let r6 = dgn_report(&a3, &BraidWord::from_element(&a3, &longest(&a3).mul_simple_right(&a3, 0)), 6, false);
        let words6: Vec<&str> = r6.factors.iter().map(|f| f.word.as_str()).collect();
        let x = el(&a3, "2 3 1 2").word_string(&a3);
        r.factors.len() == 4
            && r.factors.iter().all(|f| f.word == w0)
            && words6 == [x.as_str(), x.as_str(), x.as_str(), w0.as_str(), w0.as_str(), w0.as_str()]
    }),
    ("classification of B3 shows ℓ(O^dom) = 7 for long root reflections", || {
        let b3 = rs("B3");
        let refl = reflection(&b3, b3.highest_root().unwrap());
        let reps = classify(&b3, 0, b3.full_index(), usize::MAX).unwrap();
        let class = conjugacy_class(&b3, &refl, b3.full_index());
        reps.iter().any(|c| {
            class.iter().any(|x| x.word_string(&b3) == c.representative)
                && c.dominant_min_length == Some(7)
                && c.dominant_max_length == Some(7)
        })
    }),
    ("classification of D4 separates s₃s₁ from δ(s₃s₁) = s₄s₁ and reports twisted cosets apart", || {
        let d4 = rs("D4");
        let swap = d4.twists().iter().position(|p| p[..] == [0, 1, 3, 2]).unwrap();
        let w = el(&d4, "3 1");
        let image = crate::braid::twist_apply(&d4, swap, &w);
        let untwisted = classify(&d4, 0, d4.full_index(), usize::MAX).unwrap();
        let twisted = classify(&d4, 1, d4.full_index(), usize::MAX).unwrap();
        image == el(&d4, "4 1")
            && !conjugacy_class(&d4, &w, d4.full_index()).contains(&image)
            && untwisted.iter().all(|c| c.twist == 0)
            && twisted.iter().all(|c| c.twist == 1)
    }),
    ("anisotropic braiding gives DG(b_w^{ord}) = pb(w) for B3 s₁s₂s₃s₂", || {
        let b3 = rs("B3");
        let w = el(&b3, "1 2 3 2");
        has_anisotropic_braiding_sequence(&b3, &w) && power_bound(&b3, &w).is_ok_and(|pb| dg1(&b3, &w, w.order()) == pb)
    }),
];

/// Runs every worked example; each is one check.
pub fn run_fixtures() -> Tally {
    let mut tally = Tally::default();
    for (name, f) in FIXTURES {
        let ok = std::panic::catch_unwind(f).unwrap_or(false);
        tally.check(name, ok, || (*name).to_string());
    }
    tally
}

/// Names of every fixture, in replay order.
pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(n, _)| *n).collect()
}
