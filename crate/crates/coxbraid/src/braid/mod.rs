//! The twisted positive braid monoid: Deligne–Garside normal forms, powers of reduced braids,
//! inversion sequences and the braid equation.

mod greedy;
mod inversion;
mod powers;
mod predicted;
mod word;

pub(crate) use greedy::renormalize;
pub use greedy::{
    braid_power_normal_form, dg, dg_prefix, is_left_greedy, is_right_greedy, left_normal_form, normal_form, right_divides,
    right_quotient,
};
pub use inversion::{inversion_sequence, inversion_sequence_of_letters, InversionSequence};
pub use powers::{
    braid_equation, dg_square_form, power_normal_form, power_prefixes, quasiregular_power_identity,
    stabilization_bound, stabilized_prefix, unstable_count, BraidEquation, StabilizedPrefix,
};
pub use predicted::{conjugates_in_monoid, edge_lift, mixed_shift_to_braid_conjugator, predicted_dgn, signed_power};
pub use word::{twist_apply, BraidError, BraidWord, NormalForm};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{conjugacy_class, longest, power_bound, shift_class, transporter_search, GroupElement, ShiftKind};
    use crate::eigengeometry::{
        braiding_sequences, classify_sequence, eigen_decompose, is_quasiregular, maximally_dominant, minimally_dominant,
        Angle, EigenSequence,
    };
    use crate::rootsystem::RootSystem;
    use std::sync::Arc;

    fn rs(t: &str) -> Arc<RootSystem> {
        RootSystem::from_str(t).unwrap()
    }

    fn el(rs: &RootSystem, w: &str) -> GroupElement {
        GroupElement::parse(rs, w).unwrap()
    }

    fn bw(rs: &RootSystem, text: &str) -> BraidWord {
        BraidWord::parse(rs, text).unwrap()
    }

    fn dg1(rs: &RootSystem, w: &GroupElement, d: usize) -> GroupElement {
        dg(rs, &power_normal_form(rs, w, d), 1)
    }

    #[test]
    fn parsing_and_products() {
        let a3 = rs("A3");
        let b = bw(&a3, "d1: 1 2 | 2 1");
        assert_eq!(b.twist, 1);
        assert_eq!(b.factors, vec![el(&a3, "1 2"), el(&a3, "2 1")]);
        // A non-reduced factor word is the product of its letters.
        assert_eq!(bw(&a3, "1 1 2").factors, vec![el(&a3, "1"), el(&a3, "1 2")]);
        assert!(matches!(BraidWord::parse(&a3, "1 | d1: 2"), Err(BraidError::MisplacedTwist)));
        assert!(BraidWord::parse(&a3, "1 | 5").is_err());
        assert_eq!(bw(&a3, "").factors, vec![]);
        let d = BraidWord::from_element(&a3, &el(&a3, "d1: 1"));
        let p = d.product(&a3, &d);
        assert_eq!(p.image(&a3), el(&a3, "d1: 1").power(&a3, 2));
        assert_eq!(p.length(), 2);
        assert_eq!(b.display(&a3), "d1: 1 2 | 2 1");
    }

    #[test]
    fn normal_forms() {
        let a2 = rs("A2");
        let b = bw(&a2, "1 2 | 1 2");
        let nf = normal_form(&a2, &b);
        assert_eq!(nf.factors, vec![el(&a2, "1"), el(&a2, "2 1 2")]);
        assert!(is_right_greedy(&nf, 2));
        let lnf = left_normal_form(&a2, &b);
        assert_eq!(lnf.factors, vec![el(&a2, "1 2 1"), el(&a2, "2")]);
        assert!(is_left_greedy(&lnf, 2));
        // b₁·b₂₁ is the reduced braid b₁₂₁.
        assert_eq!(normal_form(&a2, &bw(&a2, "1 | 2 1")).factors, vec![el(&a2, "1 2 1")]);
        let w = el(&a2, "1 2");
        let single = BraidWord::from_element(&a2, &w);
        assert_eq!(normal_form(&a2, &single), single);
        assert_eq!(dg(&a2, &single, 1), w);
        assert!(dg(&a2, &single, 2).is_identity());
        assert_eq!(dg_prefix(&a2, &b, 5), nf);
    }

    #[test]
    fn descent_growth_of_dg() {
        let a3 = rs("A3");
        let w0 = longest(&a3);
        let w = el(&a3, "3 2 1");
        assert_eq!(dg1(&a3, &w, 3), w0);
        assert_ne!(dg1(&a3, &w, 2), w0);
        assert_eq!(dg1(&a3, &el(&a3, "2 3 1"), 2), w0);

        let a4 = rs("A4");
        let w = el(&a4, "2 1 4 3 2 1");
        let lengths: Vec<usize> = (1..=6).map(|d| dg1(&a4, &w, d).length()).collect();
        assert_eq!(lengths, vec![6, 7, 10, 10, 10, 10]);
        assert_eq!(dg1(&a4, &w, 2), w.mul_simple_left(&a4, 0));
    }

    #[test]
    fn powers() {
        let b3 = rs("B3");
        let w = el(&b3, "3 1 2 1");
        assert_eq!(power_normal_form(&b3, &w, 2).factors, vec![el(&b3, "3 2"), el(&b3, "1 2 1 3 2 1")]);
        assert_eq!(power_normal_form(&b3, &w, 3).factors, vec![el(&b3, "3 2 1 2 3 2"), el(&b3, "1 2 1 3 2 1")]);
        let w0s3 = longest(&b3).mul_simple_right(&b3, 2);
        for d in 1..=6 {
            let mut expected = vec![el(&b3, "3 2")];
            expected.extend(std::iter::repeat_n(w0s3.clone(), d - 1));
            expected.push(el(&b3, "1 2 1 3 2 1"));
            assert_eq!(power_normal_form(&b3, &w, 2 * d).factors, expected, "d = {d}");
        }

        let a3 = rs("A3");
        let w0 = longest(&a3);
        let w = w0.mul_simple_right(&a3, 0);
        let x = el(&a3, "2 3 1 2");
        assert_eq!(power_normal_form(&a3, &w, 2).factors, vec![x.clone(), w0.clone()]);
        assert_eq!(power_normal_form(&a3, &w, 3).factors, vec![x.clone(), w.inverse(&a3), w0.clone()]);
        for i in 0..=7 {
            let k = 2 * i + 1;
            let mut expected = vec![x.clone(); k];
            expected.extend(vec![w0.clone(); k]);
            assert_eq!(power_normal_form(&a3, &w, 4 * i + 2).factors, expected, "i = {i}");
        }
        assert!(power_normal_form(&a3, &w, 0).is_empty());

        // Direct normalisation of the concatenated word agrees with the incremental one.
        let d4 = rs("D4");
        let w = el(&d4, "d1: 2 4 3 1");
        for d in 1..=5 {
            let naive = (0..d).fold(BraidWord::identity(), |acc, _| acc.product(&d4, &BraidWord::from_element(&d4, &w)));
            let nf = power_normal_form(&d4, &w, d);
            assert_eq!(normal_form(&d4, &naive), nf);
            assert_eq!(nf.image(&d4), w.power(&d4, d));
        }
    }

    #[test]
    fn stabilization() {
        let d4 = rs("D4");
        let w = el(&d4, "2 4 3 2 1");
        let target = longest(&d4).mul_simple_right(&d4, 3).mul_simple_right(&d4, 2);
        let s = stabilized_prefix(&d4, &w, 1);
        assert!(s.confirmed);
        assert_eq!(s.prefix.factors, vec![target.clone()]);
        assert!((2..=s.bound + 2).all(|d| dg1(&d4, &w, d) == target));
        assert_ne!(dg1(&d4, &w, 1), target);

        let a2 = rs("A2");
        let s = stabilized_prefix(&a2, &el(&a2, "1 2"), 1);
        assert_eq!(s.bound, 2);
        assert_eq!(s.prefix.factors, vec![longest(&a2)]);
        let e = stabilized_prefix(&a2, &GroupElement::identity(&a2), 1);
        assert!(e.prefix.is_empty() && e.confirmed);
        assert_eq!(stabilization_bound(&a2, &el(&a2, "1 2"), 3), 6);
    }

    #[test]
    fn braid_equations() {
        let b3 = rs("B3");
        let bad = el(&b3, "2 1 2 3");
        assert!(!braid_equation(&b3, &bad).satisfied);
        assert!(!quasiregular_power_identity(&b3, &bad).unwrap());

        let d6 = rs("D6");
        let x = el(&d6, "2 3 4");
        let y = el(&d6, "5 4 3 2 1 6 4 3 2 1");
        let w = x.mul(&d6, &y).mul(&d6, &x.inverse(&d6));
        let eq = braid_equation(&d6, &w);
        assert_eq!(w.order(), 6);
        assert_eq!(eq.witness, Some(7));
        assert_eq!(dg1(&d6, &w, 6), longest(&d6).mul_simple_right(&d6, 1));

        let a3 = rs("A3");
        for class_rep in ["1", "1 2", "1 3", "1 2 3", "1 2 1 3"] {
            let class = conjugacy_class(&a3, &el(&a3, class_rep), a3.full_index());
            for w in minimally_dominant(&a3, &class).iter().chain(&maximally_dominant(&a3, &class)) {
                assert!(braid_equation(&a3, w).satisfied, "{}", w.word_string(&a3));
            }
        }
    }

    #[test]
    fn quasiregular_powers() {
        let a3 = rs("A3");
        let w = el(&a3, "2 3 2 1");
        assert!(quasiregular_power_identity(&a3, &w).unwrap());
        let w0 = longest(&a3);
        assert_eq!(power_normal_form(&a3, &w, w.order()).factors, vec![w0.clone(), w0]);
        let a2 = rs("A2");
        assert!(quasiregular_power_identity(&a2, &el(&a2, "1 2")).unwrap());
        assert!(quasiregular_power_identity(&a3, &el(&a3, "d1: 1")).is_err());
        // Quasiregular and minimally dominant implies the identity; the identity implies
        // quasiregularity but neither dominance nor minimal dominant length (s₂s₁s₃s₂).
        for rep in ["1", "1 2", "1 3", "1 2 3", "1 2 1 3"] {
            let class = conjugacy_class(&a3, &el(&a3, rep), a3.full_index());
            let min = minimally_dominant(&a3, &class);
            for v in &class {
                let holds = quasiregular_power_identity(&a3, v).unwrap();
                if is_quasiregular(&a3, v) && min.contains(v) {
                    assert!(holds, "{}", v.word_string(&a3));
                }
                if holds {
                    assert!(is_quasiregular(&a3, v), "{}", v.word_string(&a3));
                }
            }
        }
        let v = el(&a3, "2 1 3 2");
        assert!(quasiregular_power_identity(&a3, &v).unwrap() && !crate::eigengeometry::is_dominant(&a3, &v));
        let class = conjugacy_class(&a3, &v, a3.full_index());
        assert_eq!(minimally_dominant(&a3, &class), vec![longest(&a3)]);
        assert_eq!(power_bound(&a3, &v).unwrap(), v);
    }

    #[test]
    fn inversion_sequences() {
        let a2 = rs("A2");
        assert_eq!(inversion_sequence(&a2, &bw(&a2, "1")).roots, vec![0]);
        let lhs = inversion_sequence_of_letters(&a2, &[0, 1, 0]);
        let rhs = inversion_sequence_of_letters(&a2, &[1, 0, 1]);
        let mut rev = rhs.roots.clone();
        rev.reverse();
        assert_eq!(lhs.roots, rev);
        assert_eq!(lhs.as_set(3), rhs.as_set(3));

        let b3 = rs("B3");
        let w = el(&b3, "1 2 3 2");
        let seq = inversion_sequence(&b3, &BraidWord::from_element(&b3, &w));
        assert!(seq.is_reduced(&b3));
        assert_eq!(seq.as_set(b3.npos()).pos, w.inversion_mask());
        // b_w^d lists w^{1−d}(R_w), …, R_w.
        let d = 3;
        let letters: Vec<usize> = (0..d).flat_map(|_| w.reduced_word(&b3)).collect();
        let full = inversion_sequence_of_letters(&b3, &letters);
        let block = &seq.roots;
        let winv = w.inverse(&b3);
        for k in 0..d {
            let g = winv.power(&b3, d - 1 - k);
            let chunk = &full.roots[k * block.len()..(k + 1) * block.len()];
            assert!(chunk.iter().zip(block).all(|(&x, &r)| x == g.apply(r)));
        }
        let stable = w.inversion_data(&b3).stable;
        assert!(full.roots.iter().all(|&r| !stable.contains(b3.npos(), r)));
    }

    #[test]
    fn predicted_forms() {
        let b3 = rs("B3");
        let w = el(&b3, "2 3 1 2 3 2 1");
        let d = eigen_decompose(&b3, &w);
        assert!(d.is_elliptic());
        let seqs = braiding_sequences(&b3, &w, &d);
        assert!(!seqs.is_empty());
        let w0 = longest(&b3);
        assert_eq!(power_normal_form(&b3, &w, 2).factors, vec![el(&b3, "1 2 3 2 1"), w0.clone()]);
        for seq in &seqs {
            for k in 1..=8 {
                match predicted_dgn(&b3, &w, seq, k) {
                    Ok(p) => assert_eq!(p, power_normal_form(&b3, &w, k), "{:?} d = {k}", seq.thetas()),
                    Err(e) => assert!(matches!(e, crate::eigengeometry::SequenceError::NonIntegralPower { .. })),
                }
            }
        }
        let ordered = EigenSequence::from_angles(&d, &[Angle::new(1, 2), Angle::new(1, 4)]).unwrap();
        assert_eq!(predicted_dgn(&b3, &w, &ordered, 2).unwrap().factors, vec![el(&b3, "1 2 3 2 1"), w0]);

        // Anisotropic braiding sequences give DG(b_w^{ord}) = pb(w).
        let w = el(&b3, "1 2 3 2");
        let d = eigen_decompose(&b3, &w);
        for seq in braiding_sequences(&b3, &w, &d) {
            if classify_sequence(&b3, &w, &seq).anisotropic {
                let p = predicted_dgn(&b3, &w, &seq, w.order()).unwrap();
                assert_eq!(dg(&b3, &p, 1), power_bound(&b3, &w).unwrap());
            }
        }

        let a2 = rs("A2");
        let e = GroupElement::identity(&a2);
        let d = eigen_decompose(&a2, &e);
        let empty = EigenSequence::new(d.ambient.clone(), vec![]).unwrap();
        assert!(predicted_dgn(&a2, &e, &empty, 3).unwrap().is_empty());
        let c = el(&a2, "1 2");
        let seq = EigenSequence::from_angles(&eigen_decompose(&a2, &c), &[Angle::new(1, 3)]).unwrap();
        assert!(predicted_dgn(&a2, &c, &seq, 1).is_err());
        assert_eq!(predicted_dgn(&a2, &c, &seq, 3).unwrap(), power_normal_form(&a2, &c, 3));
    }

    #[test]
    fn square_forms() {
        let a3 = rs("A3");
        let w = longest(&a3).mul(&a3, &el(&a3, "1 3"));
        let closed = dg_square_form(&a3, &w, 3).unwrap();
        assert_eq!(closed, power_normal_form(&a3, &w, 3));
        assert_eq!(closed.len(), 3);
        assert_eq!(dg_square_form(&a3, &w, 1).unwrap(), BraidWord::from_element(&a3, &w));

        let a4 = rs("A4");
        let v = el(&a4, "3 4 1 2 3");
        assert!(v.power(&a4, 2) != GroupElement::identity(&a4));
        for d in 1..=4 {
            assert_eq!(dg_square_form(&a4, &v, d).unwrap(), power_normal_form(&a4, &v, d));
        }
        assert!(dg_square_form(&a3, &el(&a3, "1 2"), 2).is_err());

        let d4 = rs("D4");
        let dw0 = GroupElement::twist_element(&d4, 1).mul(&d4, &longest(&d4));
        for d in 1..=4 {
            assert_eq!(dg_square_form(&d4, &dw0, d).unwrap(), power_normal_form(&d4, &dw0, d));
        }
    }

    #[test]
    fn shift_conjugators() {
        let a3 = rs("A3");
        let w = el(&a3, "1 2 3");
        assert_eq!(mixed_shift_to_braid_conjugator(&a3, &[]).unwrap(), BraidWord::identity());
        let x = el(&a3, "1");
        let y = el(&a3, "2 3");
        let path = transporter_search(&a3, &w, &y.mul(&a3, &x), ShiftKind::Cyclic, a3.full_index(), None).unwrap();
        let c = mixed_shift_to_braid_conjugator(&a3, &path).unwrap();
        assert!(conjugates_in_monoid(&a3, &c, &w, &y.mul(&a3, &x)));

        let b3 = rs("B3");
        let w = longest(&b3).mul_simple_right(&b3, 0);
        for target in shift_class(&b3, &w, ShiftKind::Mixed, b3.full_index(), None) {
            let path = transporter_search(&b3, &w, &target, ShiftKind::Mixed, b3.full_index(), None).unwrap();
            let c = mixed_shift_to_braid_conjugator(&b3, &path).unwrap();
            assert!(conjugates_in_monoid(&b3, &c, &w, &target));
        }

        let a4 = rs("A4");
        let w = el(&a4, "1 2 3 4 1");
        let w2 = el(&a4, "2 3 4 2 3");
        assert!(transporter_search(&a4, &w, &w2, ShiftKind::Mixed, a4.full_index(), None).is_none());
        assert_ne!(w.inversion_data(&a4).stable, w2.inversion_data(&a4).stable);
    }

    #[test]
    fn square_condition_counterexamples() {
        let a3 = rs("A3");
        let b = bw(&a3, "2 3 1");
        let b2 = bw(&a3, "2 3 2 1");
        let bb = b.product(&a3, &b);
        let once = right_quotient(&a3, &b.product(&a3, &b2), &b).unwrap();
        assert_eq!(once, normal_form(&a3, &bw(&a3, "2 3 | 1 3")));
        assert_eq!(once.len(), 2);
        let twice = right_quotient(&a3, &bb.product(&a3, &b2), &bb).unwrap();
        assert_eq!(twice, bw(&a3, "1 2 1 3"));

        let a2 = rs("A2");
        let b = bw(&a2, "2");
        let b2 = bw(&a2, "1 2");
        let bb = b.product(&a2, &b);
        assert_eq!(right_quotient(&a2, &b.product(&a2, &b2), &b).unwrap(), bw(&a2, "2 1"));
        assert!(right_quotient(&a2, &bb.product(&a2, &b2), &bb).is_none());

        // DGN(b₁b₂·b_w·b₂⁻¹) = DGN(b₁b₂₁) = b₁₂₁ for w = s₁s₂.
        let w = bw(&a2, "1 2");
        let x = bw(&a2, "1 | 2").product(&a2, &w);
        assert_eq!(right_quotient(&a2, &x, &bw(&a2, "2")).unwrap(), bw(&a2, "1 2 1"));
        assert!(right_divides(&a2, &w, &braid_power_normal_form(&a2, &w, 3)));
    }
}
