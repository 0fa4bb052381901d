use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size ceilings for the brute-force and linear-algebra code paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest |G| accepted by degree-3 brute force (cocycle checks, hexagon, pentagon).
    pub max_order: usize,
    /// Largest |G| accepted by the degree-3 coboundary oracle.
    pub max_coboundary_order: usize,
    /// Largest number of tuples a single enumeration may produce.
    pub max_tuples: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 16,
            max_coboundary_order: 9,
            max_tuples: 1 << 20,
        }
    }
}

impl Limits {
    pub fn check_order(&self, what: &'static str, order: usize, limit: usize) -> Result<()> {
        if order > limit {
            return Err(Error::SizeLimit {
                what,
                size: order as u64,
                limit: limit as u64,
            });
        }
        Ok(())
    }

    /// Fails unless `base^exp` tuples fit under `max_tuples`.
    pub fn check_tuples(&self, what: &'static str, base: usize, exp: usize) -> Result<u64> {
        let size = (base as u64)
            .checked_pow(exp as u32)
            .filter(|&s| s <= self.max_tuples)
            .ok_or(Error::SizeLimit {
                what,
                size: (base as u64).saturating_pow(exp as u32),
                limit: self.max_tuples,
            })?;
        Ok(size)
    }
}
