//! Maximal and minimal length involutions in parabolic orbits.

use std::collections::HashSet;

use crate::rootsystem::{bits, ParabolicIndex, RootSystem};

use super::element::GroupElement;
use super::group::{
    conjugacy_class, coset_elements, longest_parabolic, squares_to_twist, squares_to_twist_class, GroupError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremum {
    Max,
    Min,
}

/// The decomposition w = w^{J'}·w_{J'} together with the outcome of each defining condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitInvolution {
    pub element: GroupElement,
    pub j_prime: ParabolicIndex,
    pub coset_rep: GroupElement,
    pub parabolic_longest: GroupElement,
    pub roots_match: bool,
    pub rep_is_involution: bool,
    pub double_coset_extremal: bool,
    pub permutes_simple_roots: bool,
}

impl ExplicitInvolution {
    pub fn holds(&self) -> bool {
        self.roots_match && self.rep_is_involution && self.double_coset_extremal && self.permutes_simple_roots
    }
}

fn require_involution(rs: &RootSystem, w: &GroupElement) -> Result<(), GroupError> {
    if squares_to_twist_class(rs, w) {
        Ok(())
    } else {
        Err(GroupError::NotInvolution(w.word_string(rs)))
    }
}

/// Whether R_w ∩ _J R_+ equals _J R_+ ∖ R^w (max) or _J R_+ ∩ R^w_{-1} (min).
pub fn involution_minmax_check(
    rs: &RootSystem,
    w: &GroupElement,
    j: ParabolicIndex,
    mode: Extremum,
) -> Result<bool, GroupError> {
    require_involution(rs, w)?;
    let data = w.inversion_data(rs);
    let jpos = rs.parabolic_positive(j);
    let expected = match mode {
        Extremum::Max => jpos & !data.fixed.pos,
        Extremum::Min => jpos & data.negated.pos,
    };
    Ok(data.inversions & jpos == expected)
}

/// Whether w has maximal or minimal length in its W_J-orbit.
pub fn is_orbit_extremal(rs: &RootSystem, w: &GroupElement, j: ParabolicIndex, mode: Extremum) -> bool {
    let orbit = conjugacy_class(rs, w, j);
    match mode {
        Extremum::Max => orbit.last().is_some_and(|x| x.length() == w.length()),
        Extremum::Min => orbit[0].length() == w.length(),
    }
}

/// Computes J', w_{J'} (longest in W_{J'}) and w^{J'} = w·w_{J'}, and evaluates each condition.
pub fn involution_explicit_form(
    rs: &RootSystem,
    w: &GroupElement,
    j: ParabolicIndex,
    mode: Extremum,
) -> Result<ExplicitInvolution, GroupError> {
    require_involution(rs, w)?;
    let j_prime = bits(j as u128)
        .filter(|&s| {
            let raises = !w.is_right_descent(s);
            w.conjugate_simple(rs, s) == *w && (raises == (mode == Extremum::Max))
        })
        .fold(0u64, |m, s| m | 1 << s);
    let parabolic_longest = longest_parabolic(rs, j_prime);
    let coset_rep = w.mul(rs, &parabolic_longest);
    let data = w.inversion_data(rs);
    let jpos = rs.parabolic_positive(j);
    let jppos = rs.parabolic_positive(j_prime);
    let roots_match = match mode {
        Extremum::Max => jpos & jppos == jpos & data.fixed.pos,
        Extremum::Min => jpos & jppos == jpos & data.negated.pos,
    };
    let rep_is_involution = squares_to_twist(rs, &coset_rep);
    let want_descent = mode == Extremum::Max;
    let double_coset_extremal = bits(j as u128).all(|s| coset_rep.is_left_descent(s) == want_descent)
        && bits(j_prime as u128).all(|s| coset_rep.is_right_descent(s) == want_descent);
    let p = rs.npos();
    let permutes_simple_roots = bits(j_prime as u128).all(|s| {
        let img = coset_rep.apply(s as u16) as usize;
        let (positive, idx) = if img < p { (true, img) } else { (false, img - p) };
        idx < rs.rank() && j_prime >> idx & 1 == 1 && positive != want_descent
    });
    Ok(ExplicitInvolution {
        element: w.clone(),
        j_prime,
        coset_rep,
        parabolic_longest,
        roots_match,
        rep_is_involution,
        double_coset_extremal,
        permutes_simple_roots,
    })
}

/// Elements of the coset δW̃ whose square is conjugate to a twist.
pub fn involutions(rs: &RootSystem, twist: usize, cap: usize) -> Result<Vec<GroupElement>, GroupError> {
    Ok(coset_elements(rs, twist, cap)?.into_iter().filter(|w| squares_to_twist_class(rs, w)).collect())
}

/// W_J-orbits of involutions in δW̃, each sorted by (length, images).
pub fn involution_orbits(
    rs: &RootSystem,
    j: ParabolicIndex,
    twist: usize,
    cap: usize,
) -> Result<Vec<Vec<GroupElement>>, GroupError> {
    let mut assigned = HashSet::new();
    let mut orbits = Vec::new();
    for w in involutions(rs, twist, cap)? {
        if assigned.contains(&w) {
            continue;
        }
        let orbit = conjugacy_class(rs, &w, j);
        assigned.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// One minimal-length representative per W_J-orbit of involutions, in explicit form.
pub fn classify_involution_orbits(
    rs: &RootSystem,
    j: ParabolicIndex,
    twist: usize,
    cap: usize,
) -> Result<Vec<ExplicitInvolution>, GroupError> {
    involution_orbits(rs, j, twist, cap)?
        .iter()
        .map(|orbit| involution_explicit_form(rs, &orbit[0], j, Extremum::Min))
        .collect()
}
