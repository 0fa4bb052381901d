//! Exact arithmetic: Q/Z-valued roots of unity, integer helpers, and Smith
//! normal form over arbitrary-precision integers.

mod integer;
mod matrix;
mod snf;
mod unity;

pub use integer::Integer;
pub use matrix::IntMatrix;
pub use snf::{
    apply_mod1, invariant_factors, smith_normal_form, solve_mod1, Mod1System, SnfDecomposition,
};
pub use unity::{floor_div, rem, root, UnityRoot};
