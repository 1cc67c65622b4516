//! Sequences of eigenspaces, good position and the braiding conditions.

use num_traits::Zero;

use crate::coxeter::GroupElement;
use crate::exactfield::linalg::{mat_vec, span_basis};
use crate::exactfield::{cone_strictly_feasible, ConeProblem, Vector};
use crate::rootsystem::{all_positive, RootSystem};

use super::decompose::{eigen_decompose, Ambient, Angle, EigenComponent, EigenDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("eigenvalue angle {0} occurs twice in the sequence")]
    RepeatedAngle(Angle),
    #[error("element has no eigenvalue with angle {0}")]
    UnknownAngle(Angle),
    #[error("sequence is not in good position with respect to the dominant chamber")]
    NotGoodPosition,
    #[error("sequence is not braiding")]
    NotBraiding,
    #[error("power {d} times angle {theta} is not a half-integer")]
    NonIntegralPower { d: u64, theta: Angle },
}

/// An ordered sequence (V_m, …, V_1) of full real eigenspaces; `spaces[0]` is V_1.
#[derive(Clone, Debug)]
pub struct EigenSequence {
    pub ambient: Ambient,
    pub spaces: Vec<EigenComponent>,
    /// H_{F_i} for 0 ≤ i ≤ m as masks of positive roots; H_{F_0} is every root.
    pub hyperplanes: Vec<u128>,
}

impl EigenSequence {
    pub fn new(ambient: Ambient, spaces: Vec<EigenComponent>) -> Result<Self, SequenceError> {
        for (i, a) in spaces.iter().enumerate() {
            if spaces[..i].iter().any(|b| b.theta == a.theta) {
                return Err(SequenceError::RepeatedAngle(a.theta));
            }
        }
        let mut hyperplanes = vec![all_positive(ambient.functionals.len())];
        let mut span: Vec<Vector> = Vec::new();
        for v in &spaces {
            span.extend(v.basis.iter().cloned());
            hyperplanes.push(ambient.orthogonal_roots(&span));
        }
        Ok(EigenSequence { ambient, spaces, hyperplanes })
    }

    /// The sequence of the given eigenspaces of a decomposition, `thetas[0]` being θ_1.
    pub fn from_angles(decomp: &EigenDecomposition, thetas: &[Angle]) -> Result<Self, SequenceError> {
        let spaces = thetas
            .iter()
            .map(|&t| decomp.component(t).filter(|c| c.dim() > 0).cloned().ok_or(SequenceError::UnknownAngle(t)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(decomp.ambient.clone(), spaces)
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    /// (θ_1, …, θ_m).
    pub fn thetas(&self) -> Vec<Angle> {
        self.spaces.iter().map(|c| c.theta).collect()
    }

    /// A basis of F_i = V_1 + … + V_i.
    pub fn filtration(&self, i: usize) -> Vec<Vector> {
        let all: Vec<Vector> = self.spaces[..i].iter().flat_map(|c| c.basis.iter().cloned()).collect();
        span_basis(&all)
    }

    /// H_Θ, the hyperplanes containing the whole span.
    pub fn span_hyperplanes(&self) -> u128 {
        *self.hyperplanes.last().unwrap()
    }

    /// τ(Θ̲), the image sequence for τwτ⁻¹.
    pub fn translate(&self, rs: &RootSystem, tau: &GroupElement) -> EigenSequence {
        let m = crate::exactfield::linalg::embed_matrix(&tau.matrix(rs), &self.ambient.field);
        let spaces = self
            .spaces
            .iter()
            .map(|c| EigenComponent { theta: c.theta, basis: c.basis.iter().map(|v| mat_vec(&m, v)).collect() })
            .collect();
        EigenSequence::new(self.ambient.clone(), spaces).expect("translation keeps angles distinct")
    }
}

/// Whether the closed dominant chamber contains a regular point of span(basis).
pub fn has_regular_point_in_dominant_chamber(ambient: &Ambient, basis: &[Vector]) -> bool {
    regular_dominant_witness(ambient, basis).is_some()
}

/// A regular point of span(basis) in the closed dominant chamber, if any.
///
/// Strict positivity on the simple roots not orthogonal to the subspace is equivalent to strict
/// positivity on every positive root not orthogonal to it.
pub fn regular_dominant_witness(ambient: &Ambient, basis: &[Vector]) -> Option<Vector> {
    let dim = ambient.rank;
    let mut p = ConeProblem::new(&ambient.field, dim, basis.to_vec());
    let orth = ambient.orthogonal_roots(basis);
    for s in 0..dim {
        if orth >> s & 1 == 0 {
            p.strict.push(ambient.functionals[s].clone());
        }
    }
    cone_strictly_feasible(&p).1
}

/// Good position: C̄ contains a regular point of every F_i.
pub fn good_position(seq: &EigenSequence) -> bool {
    (1..=seq.len()).all(|i| has_regular_point_in_dominant_chamber(&seq.ambient, &seq.filtration(i)))
}

/// Good position via the connected component of C in V ∖ H_{F_{i−1}}: for each i, V_i has a point
/// positive on the roots of H_{F_{i−1}} outside H_{V_i}.
///
/// The feasible set is relatively open in V_i, so it then also contains a regular point of V_i.
pub fn good_position_alt(seq: &EigenSequence) -> bool {
    let a = &seq.ambient;
    seq.spaces.iter().enumerate().all(|(i, v)| {
        let own = a.orthogonal_roots(&v.basis);
        let constrained = seq.hyperplanes[i] & !own;
        let mut p = ConeProblem::new(&a.field, a.rank, v.basis.clone());
        p.strict = crate::rootsystem::bits(constrained).map(|r| a.functionals[r].clone()).collect();
        cone_strictly_feasible(&p).0
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct SequenceClass {
    pub good_position: bool,
    pub braiding: bool,
    pub complete: bool,
    pub anisotropic: bool,
    pub increasing: bool,
    pub decreasing: bool,
}

/// Classifies a sequence of eigenspaces of w.
pub fn classify_sequence(rs: &RootSystem, w: &GroupElement, seq: &EigenSequence) -> SequenceClass {
    let fixed = w.inversion_data(rs).fixed.pos;
    let good = good_position(seq);
    let h = seq.span_hyperplanes();
    let braiding = good && h & !fixed == 0;
    let t = seq.thetas();
    SequenceClass {
        good_position: good,
        braiding,
        complete: braiding && h == 0,
        anisotropic: t.iter().all(|x| !x.is_zero()),
        increasing: t.windows(2).all(|p| p[0] > p[1]),
        decreasing: t.windows(2).all(|p| p[0] < p[1]),
    }
}

/// ℓ(O^Θ) = 2Σ θ_i |H_{F_{i−1}} ∖ H_{F_i}|.
pub fn length_formula(rs: &RootSystem, w: &GroupElement, seq: &EigenSequence) -> Result<Angle, SequenceError> {
    let fixed = w.inversion_data(rs).fixed.pos;
    if seq.span_hyperplanes() & !fixed != 0 {
        return Err(SequenceError::NotBraiding);
    }
    let mut total = Angle::zero();
    for (i, v) in seq.spaces.iter().enumerate() {
        let lost = (seq.hyperplanes[i] & !seq.hyperplanes[i + 1]).count_ones() as i64;
        total += v.theta * lost * 2;
    }
    Ok(total)
}

/// Sets of nonzero eigenspaces (bitmasks over `decomp.nonzero_components()`) whose span has a
/// regular point in C̄, together with their hyperplane masks.
fn good_sets(decomp: &EigenDecomposition, comps: &[&EigenComponent]) -> Vec<(bool, u128)> {
    let a = &decomp.ambient;
    (0..1usize << comps.len())
        .map(|mask| {
            let basis: Vec<Vector> = crate::rootsystem::bits(mask as u128)
                .flat_map(|i| comps[i].basis.iter().cloned())
                .collect();
            let h = a.orthogonal_roots(&basis);
            (mask == 0 || has_regular_point_in_dominant_chamber(a, &basis), h)
        })
        .collect()
}

/// Every braiding sequence of full eigenspaces of w (ordered, nonempty unless w is trivial).
///
/// Good position only depends on the sets F_i, so sequences are chains of good sets.
pub fn braiding_sequences(rs: &RootSystem, w: &GroupElement, decomp: &EigenDecomposition) -> Vec<EigenSequence> {
    let fixed = w.inversion_data(rs).fixed.pos;
    let comps: Vec<&EigenComponent> = decomp.nonzero_components().map(|(_, c)| c).collect();
    let sets = good_sets(decomp, &comps);
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(chain) = stack.pop() {
        let mask = chain.iter().fold(0usize, |m, &i| m | 1 << i);
        if (!chain.is_empty() || w.is_identity()) && sets[mask].1 & !fixed == 0 {
            let spaces = chain.iter().map(|&i| comps[i].clone()).collect();
            out.push(EigenSequence::new(decomp.ambient.clone(), spaces).expect("distinct components"));
        }
        for i in 0..comps.len() {
            if mask >> i & 1 == 0 && sets[mask | 1 << i].0 {
                let mut next = chain.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out.sort_by_key(|s| s.thetas());
    out
}

/// Whether w has an anisotropic braiding sequence.
pub fn has_anisotropic_braiding_sequence(rs: &RootSystem, w: &GroupElement) -> bool {
    let decomp = eigen_decompose(rs, w);
    let fixed = w.inversion_data(rs).fixed.pos;
    let comps: Vec<&EigenComponent> = decomp.nonzero_components().map(|(_, c)| c).filter(|c| !c.theta.is_zero()).collect();
    let sets = good_sets(&decomp, &comps);
    // Reachable good sets via single additions.
    let mut reach = vec![false; sets.len()];
    reach[0] = true;
    for mask in 0..sets.len() {
        if !reach[mask] {
            continue;
        }
        if mask != 0 && sets[mask].1 & !fixed == 0 {
            return true;
        }
        for i in 0..comps.len() {
            let next = mask | 1 << i;
            if next != mask && sets[next].0 {
                reach[next] = true;
            }
        }
    }
    false
}
