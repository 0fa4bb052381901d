//! Exact computations for pointed fusion categories `Vec_G^omega` over
//! `G = Z_m x Z_n`: group cohomology via explicit resolutions, representative
//! 3-cocycles, and the braidings they admit.

pub mod arith;
pub mod braiding;
pub mod chain_map;
pub mod classify;
pub mod cocycle;
pub mod error;
pub mod group;
pub mod limits;
pub mod resolution;

pub use arith::{floor_div, rem, root, IntMatrix, Integer, UnityRoot};
pub use braiding::{BraidedStructure, QuasiBicharacter};
pub use cocycle::{BarCochain, CocycleParams3};
pub use error::{Error, Result};
pub use group::{Factor, GroupElement, GroupRingElem, GroupSpec};
pub use limits::Limits;
