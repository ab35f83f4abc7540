//! Maximum t-free sets: exact branch and bound, the greedy incremental
//! construction, and lower/upper bounds on `s(Z_n, t)`.

mod bnb;
mod bounds;
mod greedy;

pub use bnb::{exact_max, MaxResult, SearchBudget, Status};
pub use bounds::{bounds, BoundEntry, BoundSource, BoundsReport};
pub use greedy::{greedy_t_free, greedy_precondition_holds};
