//! Differential polynomial algebras, the Lie algebras of special
//! derivations a∂ they carry, and decision and search procedures for Lie
//! identities of vector fields on the line.

pub mod algebra;
pub mod error;
pub mod freelie;
pub mod random;
pub mod rational;
pub mod specder;
pub mod structconst;
pub mod taylor;
pub mod witness;

pub use error::{Error, Result};
pub use rational::Rational;
