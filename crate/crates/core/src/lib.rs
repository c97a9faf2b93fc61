//! Exact orbits, invariants, equivalence certificates and classification
//! witnesses for the deformed affine action of the super Weyl groupoid of
//! `gl(n, m)`.

pub mod classification;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod groupoid;
pub mod invariants;
pub mod reproduce;
pub mod special_cases;

pub use error::{Error, Result};
