//! t-free sets in the cyclic group Z_n and spherical designs on odd-dimensional
//! spheres built from them.
//!
//! A subset `S` of Z_n is *t-free* when no sum of `k` elements of `S` equals a sum
//! of `l` elements of `S` for `k + l <= t`, except identically. The crate provides
//!
//! - [`zn`]: residue sets, the t-free predicate with canonical violation witnesses,
//!   and the signed-sum / multiset-sum set machinery;
//! - [`constructions`]: explicit t-free sets with guaranteed sizes;
//! - [`search`]: exact maximum t-free sets by branch and bound, the greedy
//!   incremental construction, and bound aggregation;
//! - [`designs`]: point sets on `S^(2m-1)` generated by a t-free set, harmonic
//!   polynomial bases and numerical design verification.

pub mod arith;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod search;
pub mod zn;

pub use error::{Error, Result};
