//! Property tests for the invariants of each layer.

mod common;

use std::collections::{BTreeSet, HashMap, VecDeque};

use common::{braid_moves, coxeter_matrix, rs};
use coxbraid::braid::{is_right_greedy, left_normal_form, normal_form, BraidWord};
use coxbraid::coxeter::{conjugacy_classes, coset_elements, group_order, GroupElement};
use coxbraid::eigengeometry::eigen_decompose;
use coxbraid::exactfield::linalg::{bilinear, embed_matrix, mat_add, mat_vec, rank};
use coxbraid::exactfield::poly::{degree, from_ints};
use coxbraid::exactfield::{cos_value, field_create, kernel, FieldElement, Matrix};
use coxbraid::rootsystem::{RootSet, RootSystem};
use proptest::prelude::*;

const TYPES: [&str; 10] = ["A1", "A2", "A3", "B2", "B3", "G2", "H3", "I2(5)", "D4", "A2xA1"];

/// A type, a twist of it and a word over its simple reflections.
fn typed_word(max_len: usize) -> impl Strategy<Value = (&'static str, usize, Vec<usize>)> {
    (0..TYPES.len()).prop_flat_map(move |i| {
        let t = TYPES[i];
        let r = rs(t);
        (Just(t), 0..r.twist_count(), prop::collection::vec(0..r.rank(), 0..=max_len))
    })
}

fn element(t: &str, twist: usize, w: &[usize]) -> (std::sync::Arc<RootSystem>, GroupElement) {
    let r = rs(t);
    let x = GroupElement::from_word(&r, twist, w).unwrap();
    (r, x)
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u64
}

fn field_element(n: u64, coeffs: &[i64]) -> FieldElement {
    let f = field_create(n);
    let c: Vec<i64> = coeffs.iter().copied().take(f.degree().max(1)).collect();
    FieldElement::from_coeffs(&f, from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sign_is_multiplicative(n in 1u64..16, a in prop::collection::vec(-5i64..=5, 1..8), b in prop::collection::vec(-5i64..=5, 1..8)) {
        let (x, y) = (field_element(n, &a), field_element(n, &b));
        prop_assert_eq!((&x * &y).sign(), x.sign() * y.sign());
        prop_assert_eq!(x.sign() == 0, x.coeffs().iter().all(num_traits::Zero::is_zero));
        let approx = x.to_f64();
        if approx.abs() > 1e-9 {
            prop_assert_eq!(x.sign() as f64, approx.signum());
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(n in prop::sample::select(vec![1u64, 5, 7, 8]), rows in 1usize..4, cols in 1usize..5, seed in prop::collection::vec(-3i64..=3, 60)) {
        let f = field_create(n);
        let d = f.degree();
        let mut it = seed.chunks(d.max(1)).cycle();
        let m: Matrix = (0..rows)
            .map(|_| (0..cols).map(|_| FieldElement::from_coeffs(&f, from_ints(it.next().unwrap()))).collect())
            .collect();
        let k = kernel(&f, &m, cols);
        for v in &k {
            prop_assert!(mat_vec(&m, v).iter().all(FieldElement::is_zero));
        }
        prop_assert_eq!(k.len() + rank(&m), cols);
    }

    #[test]
    fn word_length_and_inversions((t, twist, w) in typed_word(14)) {
        let (r, x) = element(t, twist, &w);
        prop_assert!(x.length() <= w.len());
        prop_assert_eq!(x.length() % 2, w.len() % 2);
        prop_assert_eq!(x.length(), x.inversion_data(&r).length());
        let back = GroupElement::parse(&r, &x.word_string(&r)).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(x.reduced_word(&r).len(), x.length());
    }

    #[test]
    fn stable_and_fixed_roots((t, twist, w) in typed_word(14)) {
        let (r, x) = element(t, twist, &w);
        let data = x.inversion_data(&r);
        prop_assert!(data.fixed.is_subset(&data.stable));
        prop_assert_eq!(data.stable.negate(), data.stable);
        prop_assert_eq!(data.inversions & data.stable.pos, 0);
        let fixed: RootSet = RootSet::from_signed(r.npos(), (0..2 * r.npos() as u16).filter(|&b| x.apply(b) == b));
        prop_assert_eq!(fixed, data.fixed);
    }

    #[test]
    fn inversion_set_negated_iff_square_is_twist((t, twist, w) in typed_word(14)) {
        let (r, x) = element(t, twist, &w);
        let npos = r.npos();
        let rw: Vec<u16> = (0..npos as u16).filter(|&b| !r.is_positive(x.apply(b))).collect();
        let image = RootSet::from_signed(npos, rw.iter().map(|&b| x.apply(b)));
        let minus = RootSet::from_signed(npos, rw.iter().map(|&b| r.negate(b)));
        prop_assert_eq!(image == minus, x.power(&r, 2).length() == 0);
    }

    #[test]
    fn eigenspaces_decompose_the_space((t, twist, w) in typed_word(12)) {
        let (r, x) = element(t, twist, &w);
        let d = eigen_decompose(&r, &x);
        let f = d.ambient.field.clone();
        let n = f.modulus() as i64;
        let g = embed_matrix(r.gram(), &f);
        let m = embed_matrix(&x.matrix(&r), &f);
        let minv = embed_matrix(&x.inverse(&r).matrix(&r), &f);
        let sum = mat_add(&m, &minv);
        prop_assert_eq!(d.components.iter().map(|c| c.dim()).sum::<usize>(), r.rank());
        let lcm = d.components.iter().filter(|c| c.dim() > 0).fold(1i64, |acc, c| num_integer::lcm(acc, *c.theta.denom()));
        prop_assert_eq!(x.power(&r, lcm as usize).untwisted(&r).is_identity(), true);
        for (i, c) in d.nonzero_components() {
            let k = (c.theta * num_rational::Ratio::from_integer(n)).to_integer();
            let lambda = cos_value(&f, k);
            for v in &c.basis {
                let lhs = mat_vec(&sum, v);
                prop_assert!(lhs.iter().zip(v).all(|(a, b)| *a == &lambda * b));
            }
            for (j, e) in d.nonzero_components() {
                if i < j {
                    for u in &c.basis {
                        for v in &e.basis {
                            prop_assert!(bilinear(u, &g, v).is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normal_form_ignores_decomposition((t, _twist, w) in typed_word(12), moves in prop::collection::vec(0usize..64, 0..30)) {
        let r = rs(t);
        let m = coxeter_matrix(&r);
        let mut v = w.clone();
        for pick in moves {
            let next = braid_moves(&m, &v);
            if next.is_empty() {
                break;
            }
            v = next[pick % next.len()].clone();
        }
        let a = normal_form(&r, &BraidWord::from_letters(&r, 0, &w));
        let b = normal_form(&r, &BraidWord::from_letters(&r, 0, &v));
        prop_assert_eq!(&a, &b);
        prop_assert!(is_right_greedy(&a, r.rank()));
        prop_assert_eq!(&normal_form(&r, &a), &a);
        prop_assert_eq!(a.length(), w.len());
    }

    #[test]
    fn normal_form_of_products((t, twist, w) in typed_word(10), u in prop::collection::vec(0usize..3, 0..10)) {
        let r = rs(t);
        let u: Vec<usize> = u.into_iter().map(|s| s % r.rank()).collect();
        let b = BraidWord::from_letters(&r, twist, &w);
        let c = BraidWord::from_letters(&r, 0, &u);
        let whole = normal_form(&r, &b.product(&r, &c));
        let staged = normal_form(&r, &normal_form(&r, &b).product(&r, &normal_form(&r, &c)));
        prop_assert_eq!(&whole, &staged);
        prop_assert_eq!(whole.twist, twist);
        prop_assert_eq!(whole.image(&r), b.image(&r).mul(&r, &c.image(&r)));
    }

    #[test]
    fn left_form_mirrors_right_form((t, _twist, w) in typed_word(12)) {
        let r = rs(t);
        let b = BraidWord::from_letters(&r, 0, &w);
        let left = left_normal_form(&r, &b);
        let right = normal_form(&r, &b.reversed(&r));
        let mirrored: Vec<GroupElement> = right.factors.iter().rev().map(|x| x.inverse(&r)).collect();
        prop_assert_eq!(left.factors, mirrored);
    }
}

#[test]
fn minpoly_degrees() {
    for n in 3..40u64 {
        assert_eq!(degree(field_create(n).minpoly()), Some(totient(n) as usize / 2), "N = {n}");
        for k in 0..n as i64 {
            let f = field_create(n);
            assert_eq!(cos_value(&f, k), cos_value(&f, n as i64 - k));
        }
    }
}

#[test]
fn root_counts() {
    let expect = [
        ("A1", 1), ("A4", 10), ("A7", 28), ("B3", 9), ("B5", 25), ("C4", 16), ("D4", 12), ("D6", 30), ("E6", 36),
        ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6), ("H3", 15), ("H4", 60), ("I2(7)", 7), ("A2xB2", 7),
    ];
    for (t, n) in expect {
        assert_eq!(rs(t).npos(), n, "{t}");
    }
}

#[test]
fn twists_preserve_roots_and_gram() {
    for t in ["A2", "A5", "D4", "D5", "E6", "F4", "G2", "I2(5)", "A2xA2"] {
        let r = rs(t);
        let g = r.gram();
        for p in r.twists() {
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    assert_eq!(g[p[i]][p[j]], g[i][j], "{t} {p:?}");
                }
            }
        }
        for k in 0..r.twist_count() {
            let image: BTreeSet<u16> = (0..r.npos() as u16).map(|b| r.twist_action(k, b)).collect();
            assert!(image.iter().all(|&b| r.is_positive(b)) && image.len() == r.npos(), "{t}");
        }
    }
}

#[test]
fn fundamental_weights_are_dual_to_coroots() {
    for t in ["A3", "B3", "C3", "G2", "F4", "H3", "I2(5)"] {
        let r = rs(t);
        let f = r.field().clone();
        let two = FieldElement::from_int(&f, 2);
        for (i, w) in r.fundamental_weights().iter().enumerate() {
            for j in 0..r.rank() {
                let value = &(&bilinear(w, r.gram(), r.root(j)) * &two) * &r.gram()[j][j].inv();
                let expect = FieldElement::from_int(&f, (i == j) as i64);
                assert_eq!(value, expect, "{t} ω{i} α{j}");
            }
        }
    }
}

#[test]
fn lengths_are_distances_in_the_cayley_graph() {
    for t in ["A3", "B3", "H3", "G2", "A2xA1"] {
        let r = rs(t);
        let e = GroupElement::identity(&r);
        let mut dist = HashMap::from([(e.clone(), 0usize)]);
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for s in 0..r.rank() {
                let y = x.mul_simple_right(&r, s);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(dist.len(), group_order(&r), "{t}");
        for (x, d) in dist {
            assert_eq!(x.length(), d, "{t}");
        }
    }
}

#[test]
fn parabolic_sets_are_the_closed_symmetric_sets() {
    for t in ["A2", "B2", "G2", "A3", "B3", "A1xA1"] {
        let r = rs(t);
        let n = r.npos();
        for mask in 0u128..(1 << n) {
            let l = RootSet::symmetric(mask);
            let complement = RootSet::from_positive(!mask & ((1 << n) - 1));
            let closed = r.convex_root_set(&l) && r.convex_root_set(&complement);
            assert_eq!(r.standard_parabolic_set(&l).is_some(), closed, "{t} {mask:b}");
        }
    }
}

#[test]
fn classes_partition_each_coset() {
    for t in ["A3", "B3", "D4", "G2", "H3"] {
        let r = rs(t);
        for twist in 0..r.twist_count() {
            let classes = conjugacy_classes(&r, twist, r.full_index(), usize::MAX).unwrap();
            let total: usize = classes.iter().map(Vec::len).sum();
            let distinct: BTreeSet<&GroupElement> = classes.iter().flatten().collect();
            assert_eq!(total, group_order(&r), "{t} d{twist}");
            assert_eq!(distinct.len(), total);
            assert_eq!(coset_elements(&r, twist, usize::MAX).unwrap().len(), total);
        }
    }
}
