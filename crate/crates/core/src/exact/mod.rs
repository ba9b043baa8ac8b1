//! Exact arithmetic: Laurent polynomials in `t^{1/2}`, bivariate rational
//! functions in `q^{1/m}` and `t^{1/2}`, and weight-indexed formal sums.

mod laurent;
mod qt;
mod series;

pub use laurent::{rat_pow, LaurentT};
pub use qt::{laurent_div_exact, qt_div_exact, qt_gcd, QtPoly, RatQT};
pub use series::{CoeffRing, WeightSeries};
