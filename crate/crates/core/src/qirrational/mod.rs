//! q-deformed irrationals: stabilized series, periodic closed forms, one-sided
//! limits and radii of convergence.

mod radius;
mod stabilize;
mod stream;
mod surd;

pub use radius::{
    durand_kerner, radius, radius_of_qrational, radius_of_series, radius_of_surd, RadiusInput,
    RadiusMethod, RadiusReport, Roots, GOLDEN_RADIUS, MIN_RATIO_TERMS, UNIVERSAL_BOUND,
};
pub use stabilize::{stabilization_experiment, Anchor, Side, StabilizationReport};
pub use stream::{
    convergent_value, q_irrational, q_irrational_with_depth, CfStream, Cursor, QConvergents,
    StableSeries,
};
pub use surd::{metallic, period_matrix, quadratic_fixed_point, Surd};
