//! Dominance, quasiregularity and the dominant parts of conjugacy classes.

use crate::coxeter::GroupElement;
use crate::rootsystem::RootSystem;

use super::decompose::{eigen_decompose, moved_space, Ambient, EigenDecomposition};
use super::sequence::has_regular_point_in_dominant_chamber;

/// w is dominant when C̄ contains an open subset of V_w.
pub fn is_dominant(rs: &RootSystem, w: &GroupElement) -> bool {
    let ambient = Ambient::new(rs, 1);
    has_regular_point_in_dominant_chamber(&ambient, &moved_space(rs, w))
}

/// Some eigenspace V_λ has H_{V_λ} ⊆ H^w.
pub fn is_quasiregular(rs: &RootSystem, w: &GroupElement) -> bool {
    is_quasiregular_with(rs, w, &eigen_decompose(rs, w))
}

pub fn is_quasiregular_with(rs: &RootSystem, w: &GroupElement, decomp: &EigenDecomposition) -> bool {
    let fixed = w.inversion_data(rs).fixed.pos;
    decomp.nonzero_components().any(|(_, c)| decomp.ambient.orthogonal_roots(&c.basis) & !fixed == 0)
}

/// Some eigenspace V_λ lies on no root hyperplane.
pub fn is_regular(rs: &RootSystem, w: &GroupElement) -> bool {
    is_regular_with(&eigen_decompose(rs, w))
}

pub fn is_regular_with(decomp: &EigenDecomposition) -> bool {
    decomp.nonzero_components().any(|(_, c)| decomp.ambient.orthogonal_roots(&c.basis) == 0)
}

/// O^dom: the dominant elements of a class.
pub fn dominant_subset(rs: &RootSystem, class: &[GroupElement]) -> Vec<GroupElement> {
    class.iter().filter(|w| is_dominant(rs, w)).cloned().collect()
}

/// O^dom_min: the dominant elements of minimal length.
pub fn minimally_dominant(rs: &RootSystem, class: &[GroupElement]) -> Vec<GroupElement> {
    extreme_layer(rs, class, false)
}

/// O^dom_max: the dominant elements of maximal length.
pub fn maximally_dominant(rs: &RootSystem, class: &[GroupElement]) -> Vec<GroupElement> {
    extreme_layer(rs, class, true)
}

/// Scans length layers from the short (or long) end and returns the first layer's dominant elements.
fn extreme_layer(rs: &RootSystem, class: &[GroupElement], longest: bool) -> Vec<GroupElement> {
    let mut sorted: Vec<&GroupElement> = class.iter().collect();
    sorted.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    if longest {
        sorted.reverse();
    }
    let mut i = 0;
    while i < sorted.len() {
        let l = sorted[i].length();
        let layer: Vec<GroupElement> = sorted[i..]
            .iter()
            .take_while(|x| x.length() == l)
            .filter(|x| is_dominant(rs, x))
            .map(|x| (*x).clone())
            .collect();
        if !layer.is_empty() {
            let mut layer = layer;
            layer.sort();
            return layer;
        }
        i += sorted[i..].iter().take_while(|x| x.length() == l).count();
    }
    Vec::new()
}
