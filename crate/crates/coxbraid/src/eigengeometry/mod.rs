//! Eigenspaces in the reflection representation, good position, dominance and quasiregularity.

mod decompose;
mod dominance;
mod sequence;
mod theta;

pub use decompose::{eigen_decompose, fixed_space, moved_space, Ambient, Angle, EigenComponent, EigenDecomposition};
pub use dominance::{
    dominant_subset, is_dominant, is_quasiregular, is_quasiregular_with, is_regular, is_regular_with,
    maximally_dominant, minimally_dominant,
};
pub use sequence::{
    braiding_sequences, classify_sequence, good_position, good_position_alt, has_anisotropic_braiding_sequence,
    has_regular_point_in_dominant_chamber, length_formula, regular_dominant_witness, EigenSequence, SequenceClass,
    SequenceError,
};
pub use theta::{theta_elements, ThetaData};
