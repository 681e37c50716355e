//! Invariants of the three families of rings.

mod cubic;
mod numeric;
mod rank_one;
mod t1;
mod t2;
mod t3;

pub use cubic::{
    det_cubic, family_cubic, family_net, inflection_lines, plane_names, rotate_alpha_beta, singular_points,
    singular_points_with_height, tangent_cone, BinaryCubic, BinaryQuadratic, SearchStatus, SingularPoints,
    TernaryCubic, DEFAULT_SEARCH_HEIGHT,
};
pub use numeric::{solve_in_chart, FloatPoly};
pub use t1::{
    inflection_numeric_residual, nodal_cubic_invariant, t1_ab, t1_alpha_beta, t1_invariant, t1_pipeline,
    t1_realize_class, NodalCubicData, T1Invariant,
};
pub use rank_one::{annihilator_conics, rank_one_elements, RankOneClassification, RankOneOrbit};
pub use t2::{t2_bundle_form, t2_det_class, t2_det_class_with, t2_induced_form, t2_quadratic_form, t2_reference_matrix};
pub use t3::{
    membership_quadratic, quadratic_discriminant, t3_base_ring, t3_delta, t3_discriminant_class, t3_numeric_residual,
    rank_one_field_class, rank_one_quadratic,
    t3_membership_quadratic, t3_reference_quadratic, t3_reference_system, t3_system, t3_system_over,
};
