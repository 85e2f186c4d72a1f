//! Exact relative homological algebra over finite-dimensional algebras.

pub mod algebra;
pub mod fixtures;
pub mod frobenius;
pub mod gorenstein;
pub mod homological;
pub mod linalg;
pub mod module;
pub mod session;
