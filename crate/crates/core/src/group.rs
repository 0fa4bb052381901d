//! The group `Z_m x Z_n` and its integral group ring.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// `G = Z_m x Z_n` with generators `g1` (order `m`) and `g2` (order `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    m: u32,
    n: u32,
}

impl GroupSpec {
    pub fn new(m: u32, n: u32) -> Result<GroupSpec> {
        if m == 0 {
            return Err(Error::InvalidModulus(0));
        }
        if n == 0 {
            return Err(Error::InvalidModulus(0));
        }
        Ok(GroupSpec { m, n })
    }

    /// The cyclic group `Z_m`, i.e. `n = 1`.
    pub fn cyclic(m: u32) -> Result<GroupSpec> {
        GroupSpec::new(m, 1)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `(m, n)`, the greatest common divisor.
    pub fn gcd(&self) -> u32 {
        self.m.gcd(&self.n)
    }

    pub fn order(&self) -> usize {
        self.m as usize * self.n as usize
    }

    pub fn is_cyclic(&self) -> bool {
        self.n == 1
    }

    /// `g1^i g2^j`, reduced.
    pub fn element(&self, i: i64, j: i64) -> GroupElement {
        GroupElement {
            spec: *self,
            i: i.rem_euclid(self.m as i64) as u32,
            j: j.rem_euclid(self.n as i64) as u32,
        }
    }

    pub fn identity(&self) -> GroupElement {
        self.element(0, 0)
    }

    pub fn g1(&self) -> GroupElement {
        self.element(1, 0)
    }

    pub fn g2(&self) -> GroupElement {
        self.element(0, 1)
    }

    /// Element with lexicographic index `idx = i * n + j`.
    pub fn element_at(&self, idx: usize) -> GroupElement {
        let n = self.n as usize;
        GroupElement {
            spec: *self,
            i: (idx / n) as u32,
            j: (idx % n) as u32,
        }
    }

    /// All elements in lexicographic order of `(i, j)`.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|idx| self.element_at(idx))
    }

    /// Index of the product of the elements at indices `a` and `b`.
    pub(crate) fn mul_index(&self, a: usize, b: usize) -> usize {
        let (m, n) = (self.m as usize, self.n as usize);
        let i = (a / n + b / n) % m;
        let j = (a % n + b % n) % n;
        i * n + j
    }

    /// Every `arity`-tuple of elements, lexicographically, or a size error.
    pub fn enumerate(&self, arity: usize, limits: &Limits) -> Result<TupleIter> {
        limits.check_tuples("tuple enumeration", self.order(), arity)?;
        Ok(TupleIter::new(*self, arity))
    }

    /// `N_m = sum_{i<m} g1^i` (`which = 1`) or `N_n = sum_{j<n} g2^j` (`which = 2`).
    pub fn norm(&self, which: Factor) -> GroupRingElem {
        let mut e = GroupRingElem::zero(*self);
        match which {
            Factor::First => (0..self.m).for_each(|i| e.add_term(self.element(i as i64, 0), 1)),
            Factor::Second => (0..self.n).for_each(|j| e.add_term(self.element(0, j as i64), 1)),
        }
        e
    }

    /// `T_m = g1 - 1` or `T_n = g2 - 1`.
    pub fn translate(&self, which: Factor) -> GroupRingElem {
        let g = match which {
            Factor::First => self.g1(),
            Factor::Second => self.g2(),
        };
        let mut e = GroupRingElem::monomial(g, 1);
        e.add_term(self.identity(), -1);
        e
    }

    pub(crate) fn check_same(&self, other: &GroupSpec) -> Result<()> {
        if self != other {
            return Err(Error::MixedSpec(*self, *other));
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{} x Z{}", self.m, self.n)
    }
}

/// Which cyclic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

/// `g1^i g2^j` in a specific `Z_m x Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    spec: GroupSpec,
    i: u32,
    j: u32,
}

impl GroupElement {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn index(&self) -> usize {
        self.i as usize * self.spec.n as usize + self.j as usize
    }

    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// Group law; rejects operands from different groups.
    pub fn g_mul(self, other: GroupElement) -> Result<GroupElement> {
        self.spec.check_same(&other.spec)?;
        Ok(self.mul_same(other))
    }

    pub(crate) fn mul_same(self, other: GroupElement) -> GroupElement {
        debug_assert_eq!(self.spec, other.spec);
        let s = self.spec;
        GroupElement {
            spec: s,
            i: (self.i + other.i) % s.m,
            j: (self.j + other.j) % s.n,
        }
    }

    pub fn inverse(self) -> GroupElement {
        self.spec.element(-(self.i as i64), -(self.j as i64))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

/// Lexicographic iterator over `G^arity`.
#[derive(Debug, Clone)]
pub struct TupleIter {
    spec: GroupSpec,
    digits: Vec<usize>,
    done: bool,
}

impl TupleIter {
    pub(crate) fn new(spec: GroupSpec, arity: usize) -> TupleIter {
        TupleIter {
            spec,
            digits: vec![0; arity],
            done: false,
        }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<GroupElement>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self.digits.iter().map(|&d| self.spec.element_at(d)).collect();
        let order = self.spec.order();
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < order {
                break;
            }
            self.digits[k] = 0;
        }
        Some(out)
    }
}

/// An element of `Z[G]`: a finite integer combination of group elements.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    spec: GroupSpec,
    coeffs: BTreeMap<GroupElement, i64>,
}

impl GroupRingElem {
    pub fn zero(spec: GroupSpec) -> GroupRingElem {
        GroupRingElem {
            spec,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(spec: GroupSpec) -> GroupRingElem {
        GroupRingElem::monomial(spec.identity(), 1)
    }

    pub fn monomial(g: GroupElement, c: i64) -> GroupRingElem {
        let mut e = GroupRingElem::zero(g.spec);
        e.add_term(g, c);
        e
    }

    /// The integer `c` as `c * 1`.
    pub fn integer(spec: GroupSpec, c: i64) -> GroupRingElem {
        GroupRingElem::monomial(spec.identity(), c)
    }

    /// `sum_{a < count} g^a`; zero when `count == 0`.
    pub fn geometric(g: GroupElement, count: u32) -> GroupRingElem {
        let mut e = GroupRingElem::zero(g.spec);
        let mut x = g.spec.identity();
        for _ in 0..count {
            e.add_term(x, 1);
            x = x.mul_same(g);
        }
        e
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: &GroupElement) -> i64 {
        self.coeffs.get(g).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, i64)> + '_ {
        self.coeffs.iter().map(|(g, c)| (*g, *c))
    }

    /// Sum of coefficients (the augmentation `Z[G] -> Z`).
    pub fn augmentation(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub(crate) fn add_term(&mut self, g: GroupElement, c: i64) {
        debug_assert_eq!(g.spec, self.spec);
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(g).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&g);
        }
    }

    pub fn ring_add(&self, other: &GroupRingElem) -> Result<GroupRingElem> {
        self.spec.check_same(&other.spec)?;
        let mut out = self.clone();
        out.add_assign_same(other, 1);
        Ok(out)
    }

    pub fn ring_sub(&self, other: &GroupRingElem) -> Result<GroupRingElem> {
        self.spec.check_same(&other.spec)?;
        let mut out = self.clone();
        out.add_assign_same(other, -1);
        Ok(out)
    }

    pub fn ring_scale(&self, k: i64) -> GroupRingElem {
        let mut out = GroupRingElem::zero(self.spec);
        for (g, c) in self.terms() {
            out.add_term(g, c * k);
        }
        out
    }

    pub fn ring_mul(&self, other: &GroupRingElem) -> Result<GroupRingElem> {
        self.spec.check_same(&other.spec)?;
        Ok(self.mul_same(other))
    }

    /// `g * self`.
    pub fn shift(&self, g: GroupElement) -> Result<GroupRingElem> {
        self.spec.check_same(&g.spec)?;
        let mut out = GroupRingElem::zero(self.spec);
        for (h, c) in self.terms() {
            out.add_term(g.mul_same(h), c);
        }
        Ok(out)
    }

    /// `self += k * other` (same spec).
    pub(crate) fn add_assign_same(&mut self, other: &GroupRingElem, k: i64) {
        debug_assert_eq!(self.spec, other.spec);
        for (g, c) in other.terms() {
            self.add_term(g, c * k);
        }
    }

    pub(crate) fn mul_same(&self, other: &GroupRingElem) -> GroupRingElem {
        debug_assert_eq!(self.spec, other.spec);
        let mut out = GroupRingElem::zero(self.spec);
        for (g, a) in self.terms() {
            for (h, b) in other.terms() {
                out.add_term(g.mul_same(h), a * b);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(g, c)| match (g.is_identity(), c) {
                (true, c) => format!("{c}"),
                (false, 1) => format!("g1^{}g2^{}", g.i, g.j),
                (false, c) => format!("{c}*g1^{}g2^{}", g.i, g.j),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
