//! Exact polynomial arithmetic over `Q`, weights, and the expression parser.

mod monomial;
mod parse;
mod polynomial;
pub mod rational;
mod weights;

pub use monomial::{grevlex_cmp, Monomial};
pub use parse::{parse_expression, scan_variables, ParseError};
pub use polynomial::{format_monomial, Polynomial, Ring};
pub use rational::{fmt_rational, parse_rational, Rational};
pub use weights::{
    alpha_value, check_coordinate_powers, check_weighted_homogeneous, coordinate_power_issues, infer_weights,
    CoordinatePowerIssue, WeightError, WeightSystem,
};

/// Partial derivative `∂p/∂x_i`.
pub fn partial_derivative(p: &Polynomial, i: usize) -> Polynomial {
    p.derivative(i)
}
