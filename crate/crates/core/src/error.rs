use thiserror::Error;

use crate::contfrac::Fraction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("numerator and denominator are both zero")]
    InvalidRational,
    #[error("the projective point at infinity has no expansion")]
    PoleAtEveryPoint,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is not a square: {0}")]
    NotASquare(String),
    #[error("result would leave the integers: {0}")]
    NonIntegral(String),
    #[error("value is not finite")]
    NotFinite,
    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),
    #[error("polynomial has the rational root {0} inside the interval")]
    RationalRoot(Fraction),
    #[error("invalid isolating interval: {0}")]
    InvalidInterval(String),
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("expected x > y, got {0} <= {1}")]
    OrderViolation(Box<Fraction>, Box<Fraction>),
    #[error("not enough terms: {needed} needed")]
    InsufficientTerms { needed: usize },
    #[error("element with trace {0} is not hyperbolic")]
    NotHyperbolic(String),
    #[error("invalid snake input: {0}")]
    InvalidSnakeInput(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
