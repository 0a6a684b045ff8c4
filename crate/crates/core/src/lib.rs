//! Exact q-deformed rational and irrational numbers.
//!
//! The crate is layered bottom-up: [`ring`] provides exact polynomial and
//! series arithmetic, [`contfrac`] continued fractions, [`modular`] the
//! modular group and its deformation, and the remaining modules build the
//! q-rationals, q-irrationals and the checks run on them.

pub mod analysis;
pub mod contfrac;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod modular;
pub mod qirrational;
pub mod qrational;
pub mod ring;
pub mod snake;

pub use error::{Error, Result};
