//! Exact barycentric triangle geometry for pedal-cevian concurrence.
//!
//! Every verification path runs on exact rationals ([`Scalar`]). Floating
//! point appears only in the [`locus`] explorer and in the cartesian
//! embedding fallback for triangles with an irrational height.

pub mod cartesian;
pub mod centers;
pub mod concurrence;
pub mod error;
pub mod locus;
pub mod pedal;
pub mod point;
pub mod scalar;
pub mod svg;
pub mod triangle;

pub use cartesian::{embed_cartesian, CartesianPoint, Embedded, Frame};
pub use centers::{center, euler_line_contains, excenter_point, franke_point, kariya_point, CenterKind};
pub use concurrence::{
    ceva_product, cevian_intersection, concurrence_conditions_hold, condition_forms, condition_values,
    condition_values_via_coefficients, relation_brackets, relation_residual, scaled_concurrence, ConcurrenceReport,
    ConditionValues, RelationBrackets,
};
pub use error::{GeomError, Result};
pub use pedal::{coefficients, pedal_triangle, scale_pedal, Coefficients, PedalTriangle, ScaledPedal};
pub use point::{collinear, intersect, line_through, BaryLine, BaryPoint};
pub use scalar::Scalar;
pub use triangle::{Triangle, TriangleF64};

/// Default k-set spanning negative, fractional and large scale factors.
pub fn default_k_set() -> Vec<Scalar> {
    [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1), (3, 1)].into_iter().map(|(n, d)| Scalar::ratio(n, d)).collect()
}
