//! Exact multivariate polynomials over the rationals.

mod express;
mod polynomial;
mod rational;

pub use express::{
    express_in_generators, linear_coefficient, weighted_monomials, ExpressionSolver, Generator, GeneratorExpression,
};
pub(crate) use polynomial::is_ident_byte;
pub use polynomial::{LinearSubstitution, Monomial, Namespace, Polynomial};
pub(crate) use rational::Fraction;
pub use rational::Rational;
