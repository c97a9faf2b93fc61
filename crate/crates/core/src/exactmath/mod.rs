//! Exact scalar and polynomial arithmetic.

pub mod bernoulli;
pub mod multipoly;
pub mod rational;
pub mod unipoly;

pub use bernoulli::{bernoulli_numbers, bernoulli_poly, BernoulliTable};
pub use multipoly::{LinearForm, MultiPoly, TermJson, Var, VarSpace};
pub use rational::Rational;
pub use unipoly::UniPoly;
