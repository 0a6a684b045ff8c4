//! Experimental identities: Hankel determinants, cubic Vieta relations,
//! Catalan and Motzkin functional equations, and symmetries.

mod hankel;
mod identities;
mod vieta;

pub use hankel::{
    bareiss_det, detect_periodicity, hankel, somos4_check, HankelSequence, Periodicity,
    PeriodicityReport, SomosReport,
};
pub use identities::{
    catalan_motzkin_check, catalan_series, motzkin_series, probe_printed_operators,
    symmetry_check, CatalanMotzkinReport, OperatorProbe, PrintedOperator, SymmetryReport,
};
pub use vieta::{isolating_intervals, vieta_check, Cubic, Residual, VietaReport, GRID_DENOMINATOR};
