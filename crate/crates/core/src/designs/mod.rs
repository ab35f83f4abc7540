//! Spherical designs from generator sets.
//!
//! For integers `a_1..a_m` and `n` points, point `i` is
//! `(cos(2 pi i a_1/n), sin(2 pi i a_1/n), ..., cos(2 pi i a_m/n), sin(2 pi i a_m/n)) / sqrt(m)`
//! on `S^(2m-1)`. When `{a_1, ..., a_m}` is t-free in Z_n and `t <= 3` the points
//! form a spherical t-design; for odd `k` a k-free generator set gives a design of
//! index `k`.

mod basis;
mod build;
pub mod io;
mod polynomial;
mod verify;

pub use basis::{dgs_bound, dim_harm, harmonic_basis};
pub use build::{
    build_design, build_design_in_dimension, trig_zero_sum, DesignPointSet, DesignWarning,
    GeneratorSet,
};
pub use polynomial::{Monomial, Polynomial};
pub use verify::{
    default_tolerance, monomial_sum, sphere_average, verify_index, verify_strength, Residual,
    VerificationMode, VerificationReport,
};
