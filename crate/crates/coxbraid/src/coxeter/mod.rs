//! Twisted Coxeter group elements, conjugacy classes, shift classes and involutions.

mod element;
mod group;
mod involutions;
mod shifts;

pub use element::{format_word, mask_roots, parse_word, GroupElement, InversionData, WordError};
pub use group::{
    conjugacy_class, conjugacy_classes, coset_elements, group_order, longest, longest_parabolic, parabolic_elements,
    power_bound, squares_to_twist, squares_to_twist_class, GroupError,
};
pub use involutions::{
    classify_involution_orbits, involution_explicit_form, is_orbit_extremal, involution_minmax_check, involution_orbits, involutions,
    ExplicitInvolution, Extremum,
};
pub use shifts::{
    greedy_monotone_path, level_steps, path_conjugator, shift_class, shift_step, step_candidates,
    transporter_projection, transporter_search, ShiftEdge, ShiftKind,
};
