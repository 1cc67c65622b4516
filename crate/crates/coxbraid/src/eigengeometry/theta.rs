//! The exponents d_i' and elements ϑ_i attached to a sequence in good position.

use num_traits::Zero;

use crate::coxeter::{longest_parabolic, GroupElement};
use crate::rootsystem::{ParabolicIndex, RootSystem};

use super::decompose::Angle;
use super::sequence::{good_position, EigenSequence, SequenceError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaData {
    /// J_i with W̃_i = W_{J_i} the pointwise stabiliser of F_i, for 0 ≤ i ≤ m.
    pub parabolics: Vec<ParabolicIndex>,
    /// w_i, the longest element of W̃_i.
    pub longest: Vec<GroupElement>,
    /// w_j' = w_j w_{j+1} for 0 ≤ j < m.
    pub w_primes: Vec<GroupElement>,
    /// d_i' for 0 ≤ i < m; the partial sums d_0' + … + d_i' are the successive minimal angles.
    pub d_primes: Vec<Angle>,
    /// ϑ_i for 0 ≤ i < m.
    pub varthetas: Vec<GroupElement>,
}

/// Computes the stabiliser tower, d_i' and ϑ_i of a sequence in good position.
pub fn theta_elements(rs: &RootSystem, seq: &EigenSequence) -> Result<ThetaData, SequenceError> {
    if !good_position(seq) {
        return Err(SequenceError::NotGoodPosition);
    }
    let m = seq.len();
    let parabolics: Vec<ParabolicIndex> = seq
        .hyperplanes
        .iter()
        .map(|&h| {
            let j = (0..rs.rank()).filter(|&s| h >> s & 1 == 1).fold(0, |acc, s| acc | 1 << s);
            debug_assert_eq!(rs.parabolic_positive(j), h, "stabiliser of a good filtration is standard");
            j
        })
        .collect();
    let longest: Vec<GroupElement> = parabolics.iter().map(|&j| longest_parabolic(rs, j)).collect();
    let w_primes: Vec<GroupElement> = (0..m).map(|j| longest[j].mul(rs, &longest[j + 1])).collect();

    let thetas = seq.thetas();
    let mut remaining: Vec<usize> = (0..m).collect();
    let mut d_primes = Vec::with_capacity(m);
    let mut varthetas = Vec::with_capacity(m);
    let mut previous_min = Angle::zero();
    for _ in 0..m {
        let mut vartheta = GroupElement::identity(rs);
        for &k in &remaining {
            vartheta = vartheta.mul(rs, &w_primes[k]);
        }
        varthetas.push(vartheta);
        match remaining.iter().map(|&k| thetas[k]).min() {
            Some(min) => {
                d_primes.push(min - previous_min);
                previous_min = min;
                remaining.retain(|&k| thetas[k] != min);
            }
            None => d_primes.push(Angle::zero()),
        }
    }
    Ok(ThetaData { parabolics, longest, w_primes, d_primes, varthetas })
}
