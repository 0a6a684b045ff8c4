//! Regular and negative continued fractions of rationals and of real
//! algebraic numbers.

mod algebraic;
mod cf;
mod fraction;

pub use algebraic::{AlgebraicNumber, CfExpander};
pub use cf::{CfKind, ContinuedFraction, Parity};
pub use fraction::Fraction;
