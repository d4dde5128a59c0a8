//! Exact arithmetic: big rationals, sparse multivariate polynomials and
//! normalized rational functions.
//!
//! Laurent expressions never appear directly.  A value such as `z⁻¹` is the
//! fraction `1/z`, and `√q` is the variable `s` with `q = s²`; claims that a
//! result is a Laurent polynomial become claims about its denominator.

mod gcd;
mod heugcd;
mod json;
mod poly;
mod ratfun;

pub use gcd::{gcd, integer_content, lcm};
pub use json::{poly_from_json, poly_to_json, rational_to_json, rf_from_json, rf_to_json};
pub use poly::{rat, rat2, Mono, Rational, SparsePoly, Var};
pub use ratfun::{assert_poly_in_qsq, RationalFunction};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("substitution makes the denominator vanish ({binding})")]
    ZeroDenominator { binding: String },
    #[error("not polynomial: residual denominator {denominator}")]
    NotPolynomial { denominator: SparsePoly },
    #[error("odd power of {var} in {poly}")]
    OddPower { var: String, poly: SparsePoly },
    #[error("{0}")]
    Unbound(String),
    #[error("malformed polynomial json: {0}")]
    Json(String),
}
