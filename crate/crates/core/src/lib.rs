//! Exact-arithmetic engine for Demazure module weight multiplicities.
//!
//! Computes the character of a Demazure module by two independent routes
//! (Demazure operators; the `q -> oo`, `t -> oo` limits of nonsymmetric
//! Macdonald polynomials), together with the dimension invariant
//! `n_{lambda,mu}` and the volume polynomial predicting coset counts over
//! finite fields.

pub mod affine_weyl;
pub mod batch;
pub mod demazure;
pub mod engine;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod macdonald;
pub mod root_data;
pub mod weight;

pub use engine::Engine;
pub use error::Error;
pub use root_data::{CartanType, RootSystem};
pub use weight::Weight;
