//! Closed forms of DGN(b_w^d) from braiding sequences, and braid lifts of shift paths.

use num_traits::Zero;

use crate::coxeter::{longest, GroupElement, ShiftEdge};
use crate::eigengeometry::{classify_sequence, theta_elements, Angle, EigenSequence, SequenceError};
use crate::rootsystem::RootSystem;

use super::greedy::normal_form;
use super::word::{BraidError, BraidWord, NormalForm};

/// b_{±x}^n for n ∈ ½ℤ_{≥0}, with b_{±x} = b_{x⁻¹}b_x and b_{±x}^{k+½} = b_x·b_{±x}^k.
pub fn signed_power(rs: &RootSystem, x: &GroupElement, n: Angle) -> Vec<GroupElement> {
    let twice = n * 2;
    assert!(twice.is_integer() && twice >= Angle::zero(), "exponent must be a nonnegative half-integer");
    let twice = *twice.numer() as usize;
    let mut out = Vec::with_capacity(twice);
    if twice % 2 == 1 {
        out.push(x.clone());
    }
    let inv = x.inverse(rs);
    for _ in 0..twice / 2 {
        out.push(inv.clone());
        out.push(x.clone());
    }
    out
}

/// δ^d·b_{±ϑ_{m−1}}^{d·d'_{m−1}}⋯b_{±ϑ_0}^{d·d'_0} for a braiding sequence of w.
pub fn predicted_dgn(rs: &RootSystem, w: &GroupElement, seq: &EigenSequence, d: usize) -> Result<NormalForm, SequenceError> {
    if !classify_sequence(rs, w, seq).braiding {
        return Err(SequenceError::NotBraiding);
    }
    for theta in seq.thetas() {
        if !(theta * 2 * d as i64).is_integer() {
            return Err(SequenceError::NonIntegralPower { d: d as u64, theta });
        }
    }
    let data = theta_elements(rs, seq)?;
    let mut factors = Vec::new();
    for i in (0..seq.len()).rev() {
        factors.extend(signed_power(rs, &data.varthetas[i], data.d_primes[i] * d as i64));
    }
    let twist = (0..d).fold(0, |t, _| rs.twist_compose(t, w.twist()));
    Ok(BraidWord::new(twist, factors))
}

/// A positive braid c with c·b_w = b_{w'}·c for one mixed-shift step w → w' = τwτ⁻¹.
pub fn edge_lift(rs: &RootSystem, edge: &ShiftEdge) -> Option<BraidWord> {
    let tau = &edge.conjugator;
    let w = &edge.source;
    let (l, lt) = (w.length(), tau.length());
    let left = tau.mul(rs, w).length();
    let right = w.mul(rs, &tau.inverse(rs)).length();
    if left == l + lt || right + lt == l {
        Some(BraidWord::from_element(rs, tau))
    } else if left + lt == l {
        Some(BraidWord::from_element(rs, &tau.mul(rs, w)))
    } else if right == l + lt {
        // b_{τ⁻¹}⁻¹·Δ² with Δ = b_{w∘}.
        let w0 = longest(rs);
        Some(BraidWord::new(0, vec![tau.mul(rs, &w0), w0]))
    } else {
        None
    }
}

/// The product c_n⋯c_0 of edge lifts along a mixed-shift path.
pub fn mixed_shift_to_braid_conjugator(rs: &RootSystem, path: &[ShiftEdge]) -> Result<BraidWord, BraidError> {
    let mut c = BraidWord::identity();
    for (j, edge) in path.iter().enumerate() {
        if !edge.is_valid(rs) || (j > 0 && path[j - 1].target != edge.source) {
            return Err(BraidError::InvalidPath(j));
        }
        let lift = edge_lift(rs, edge).ok_or(BraidError::InvalidPath(j))?;
        c = lift.product(rs, &c);
    }
    Ok(c)
}

/// c·b_w = b_{w'}·c, compared on normal forms.
pub fn conjugates_in_monoid(rs: &RootSystem, c: &BraidWord, w: &GroupElement, w2: &GroupElement) -> bool {
    let lhs = c.product(rs, &BraidWord::from_element(rs, w));
    let rhs = BraidWord::from_element(rs, w2).product(rs, c);
    normal_form(rs, &lhs) == normal_form(rs, &rhs)
}
