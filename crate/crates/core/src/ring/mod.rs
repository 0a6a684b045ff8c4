//! Exact arithmetic over the integers: polynomials, Laurent polynomials,
//! reduced rational functions and truncated Laurent series in `q`.

mod laurent;
mod poly;
mod ratfunc;
mod series;

pub use laurent::LaurentPoly;
pub use poly::IntPoly;
pub use ratfunc::RatFunc;
pub use series::LaurentSeries;

pub(crate) use poly::big_to_f64;
#[cfg(test)]
pub(crate) use ratfunc::rf;
