//! Space-curve constructions: determinantal twisted-cubic families, matrix
//! factorizations of singular plane cubics, Fitting images of finite
//! pushforwards, and the named verification catalog.

pub mod family;
pub mod image;
pub mod section;
pub mod verify;

pub use family::{
    embedded_cubic_chart_residue, embedded_cubic_chart_setup, quintic_chart_fitting_generators,
    quintic_projection_chart, quintic_projection_fiber, quintic_torsion_witness,
    stable_sheaf_fitting_fiber, stable_sheaf_presentation, stable_sheaf_product,
    twisted_cubic_family, twisted_cubic_family_symbolic, TWISTED_CUBIC_PARAMETERS,
};
pub use image::{
    critical_locus, fitting_image, plain_double_point_length, planar_image_fitting_pn,
    planar_image_pattern, pushforward_presentation, schematic_image, universal_ternary_cubic,
    CMCurvePresentation,
};
pub use section::{
    avoids_projection_center, curve_from_factorization, decompose_singular_cubic,
    matrix_factorization, ring_condition_check, roundtrip_check, CubicDecomposition,
    RoundtripReport, SingularCubicSection,
};
pub use verify::{
    characteristic_sensitive, run_check, CheckContext, CheckStatus, VerificationReport, CATALOG,
};
