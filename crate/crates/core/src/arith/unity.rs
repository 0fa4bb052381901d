//! Roots of unity, written additively as elements of Q/Z.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest integer `<= x / m`.
pub fn floor_div(x: i64, m: i64) -> Result<i64> {
    if m <= 0 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(x.div_euclid(m))
}

/// `x - m * floor_div(x, m)`, always in `[0, m)`.
pub fn rem(x: i64, m: i64) -> Result<i64> {
    if m <= 0 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(x.rem_euclid(m))
}

/// The scalar `exp(2 pi i * num / den)`, stored as the reduced fraction
/// `num / den` with `0 <= num < den`. One is `0/1`.
///
/// The group law is addition mod 1, so "multiplying" two roots is `+` and
/// raising to the `k`-th power is [`UnityRoot::times`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnityRoot {
    num: u64,
    den: u64,
}

impl UnityRoot {
    pub const ONE: UnityRoot = UnityRoot { num: 0, den: 1 };

    /// Canonical form of `num / den` mod 1. Panics if `den == 0`.
    pub fn new(num: i128, den: u64) -> UnityRoot {
        assert!(den >= 1, "denominator must be positive");
        let r = num.rem_euclid(den as i128) as u64;
        let g = r.gcd(&den);
        UnityRoot { num: r / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Multiplicative order, which equals the reduced denominator.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    /// The `k`-th power, i.e. `k * self` in Q/Z.
    pub fn times(self, k: i64) -> UnityRoot {
        let k = (k as i128).rem_euclid(self.den as i128);
        UnityRoot::new(k * self.num as i128, self.den)
    }

    /// One `k`-th root of `self` (a solution `x` of `k * x = self`). Panics if `k == 0`.
    pub fn root_of(self, k: u64) -> UnityRoot {
        assert!(k >= 1);
        let den = self.den.checked_mul(k).expect("denominator overflow");
        UnityRoot::new(self.num as i128, den)
    }

    /// All `k` solutions of `k * x = self`, ascending.
    pub fn all_roots(self, k: u64) -> Vec<UnityRoot> {
        let base = self.root_of(k);
        let mut roots: Vec<_> = (0..k).map(|t| base + UnityRoot::new(t as i128, k)).collect();
        roots.sort();
        roots
    }

    /// Numerator of `self` written over `den`, which must be a multiple of the reduced denominator.
    pub fn numerator_over(&self, den: u64) -> u64 {
        assert_eq!(den % self.den, 0, "{den} is not a multiple of {}", self.den);
        self.num * (den / self.den)
    }
}

/// `zeta_order ^ numerator`.
pub fn root(numerator: i64, order: i64) -> Result<UnityRoot> {
    if order <= 0 {
        return Err(Error::InvalidModulus(order));
    }
    Ok(UnityRoot::new(numerator as i128, order as u64))
}

impl Default for UnityRoot {
    fn default() -> Self {
        UnityRoot::ONE
    }
}

impl Add for UnityRoot {
    type Output = UnityRoot;
    fn add(self, rhs: UnityRoot) -> UnityRoot {
        if self.den == rhs.den {
            return UnityRoot::new(self.num as i128 + rhs.num as i128, self.den);
        }
        let l = self.den.lcm(&rhs.den);
        let a = self.num as i128 * (l / self.den) as i128;
        let b = rhs.num as i128 * (l / rhs.den) as i128;
        UnityRoot::new(a + b, l)
    }
}

impl Neg for UnityRoot {
    type Output = UnityRoot;
    fn neg(self) -> UnityRoot {
        UnityRoot::new(-(self.num as i128), self.den)
    }
}

impl Sub for UnityRoot {
    type Output = UnityRoot;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: UnityRoot) -> UnityRoot {
        self + (-rhs)
    }
}

impl AddAssign for UnityRoot {
    fn add_assign(&mut self, rhs: UnityRoot) {
        *self = *self + rhs;
    }
}

impl SubAssign for UnityRoot {
    fn sub_assign(&mut self, rhs: UnityRoot) {
        *self = *self - rhs;
    }
}

impl Sum for UnityRoot {
    fn sum<I: Iterator<Item = UnityRoot>>(iter: I) -> UnityRoot {
        iter.fold(UnityRoot::ONE, Add::add)
    }
}

/// Ordered by the rational value `num / den` in `[0, 1)`.
impl Ord for UnityRoot {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for UnityRoot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UnityRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for UnityRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `p/q` (any integer `p`, `q >= 1`) or a bare integer, reduced mod 1.
impl FromStr for UnityRoot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected p/q, got {s:?}"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i128 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(UnityRoot::new(p, q))
    }
}

impl Serialize for UnityRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UnityRoot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
