//! Normalized bar cochains with values in Q/Z (trivial action), the
//! coboundary operator, and the representative cocycle families.

mod families;
mod oracle;

use std::fmt;

use num_integer::Integer as _;
use serde::Serialize;

pub use families::{
    is_coboundary_resolution, is_cocycle_resolution, omega, omega_value, phi2, phi3, pullback2,
    pullback3, CocycleParams3, ResolutionCochain, ResolutionCochain2, ResolutionCochain3,
};
pub use oracle::{
    cohomology_group, is_coboundary_bar, CoboundaryOracle, CohomologyReport, OracleSummary,
};

use crate::arith::UnityRoot;
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::limits::Limits;

/// Largest arity a [`BarCochain`] may have.
pub const MAX_ARITY: usize = 4;

/// A function `G^arity -> Q/Z`, stored densely in lexicographic tuple order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BarCochain {
    spec: GroupSpec,
    arity: usize,
    values: Vec<UnityRoot>,
}

fn check_arity(arity: usize) -> Result<()> {
    if !(1..=MAX_ARITY).contains(&arity) {
        return Err(Error::UnsupportedDegree {
            degree: arity,
            reason: "bar cochains have arity 1 to 4",
        });
    }
    Ok(())
}

impl BarCochain {
    /// The constant cochain `0/1`.
    pub fn trivial(spec: GroupSpec, arity: usize, limits: &Limits) -> Result<BarCochain> {
        check_arity(arity)?;
        let size = limits.check_tuples("cochain table", spec.order(), arity)?;
        Ok(BarCochain {
            spec,
            arity,
            values: vec![UnityRoot::ONE; size as usize],
        })
    }

    /// Tabulates `f` on every tuple.
    pub fn from_fn<F>(spec: GroupSpec, arity: usize, limits: &Limits, mut f: F) -> Result<BarCochain>
    where
        F: FnMut(&[GroupElement]) -> UnityRoot,
    {
        check_arity(arity)?;
        let values = spec.enumerate(arity, limits)?.map(|t| f(&t)).collect();
        Ok(BarCochain { spec, arity, values })
    }

    /// Wraps a table in lexicographic tuple order.
    pub fn from_values(spec: GroupSpec, arity: usize, values: Vec<UnityRoot>) -> Result<BarCochain> {
        check_arity(arity)?;
        let expected = spec.order().pow(arity as u32);
        if values.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a {arity}-cochain on {spec}, expected {expected}",
                values.len()
            )));
        }
        Ok(BarCochain { spec, arity, values })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[UnityRoot] {
        &self.values
    }

    fn offset(&self, args: &[GroupElement]) -> Result<usize> {
        if args.len() != self.arity {
            return Err(Error::DimensionMismatch(format!(
                "{} arguments for a {}-cochain",
                args.len(),
                self.arity
            )));
        }
        let mut idx = 0;
        for g in args {
            self.spec.check_same(&g.spec())?;
            idx = idx * self.spec.order() + g.index();
        }
        Ok(idx)
    }

    pub fn value(&self, args: &[GroupElement]) -> Result<UnityRoot> {
        Ok(self.values[self.offset(args)?])
    }

    pub fn set(&mut self, args: &[GroupElement], v: UnityRoot) -> Result<()> {
        let idx = self.offset(args)?;
        self.values[idx] = v;
        Ok(())
    }

    /// `(tuple, value)` pairs in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<GroupElement>, UnityRoot)> + '_ {
        crate::group::TupleIter::new(self.spec, self.arity).zip(self.values.iter().copied())
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(UnityRoot::is_one)
    }

    /// First tuple containing the identity where the value is not `0/1`.
    pub fn normalization_defect(&self) -> Option<(Vec<GroupElement>, UnityRoot)> {
        self.entries()
            .find(|(t, v)| !v.is_one() && t.iter().any(GroupElement::is_identity))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalization_defect().is_none()
    }

    pub fn check_normalized(&self) -> Result<()> {
        match self.normalization_defect() {
            None => Ok(()),
            Some((t, v)) => Err(Error::NotNormalized {
                at: fmt_args(&t),
                value: v.to_string(),
            }),
        }
    }

    fn check_compatible(&self, other: &BarCochain) -> Result<()> {
        self.spec.check_same(&other.spec)?;
        if self.arity != other.arity {
            return Err(Error::DimensionMismatch(format!(
                "arity {} vs arity {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    /// Pointwise product (sum in Q/Z).
    pub fn add(&self, other: &BarCochain) -> Result<BarCochain> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a + *b).collect();
        Ok(BarCochain { values, ..*self })
    }

    /// Pointwise quotient (difference in Q/Z).
    pub fn sub(&self, other: &BarCochain) -> Result<BarCochain> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| *a - *b).collect();
        Ok(BarCochain { values, ..*self })
    }

    /// Common denominator of every value.
    fn denominator(&self) -> u64 {
        self.values.iter().fold(1, |l, v| l.lcm(&v.den()))
    }

    /// Numerators over [`Self::denominator`].
    fn numerators(&self, den: u64) -> Vec<i64> {
        self.values.iter().map(|v| v.numerator_over(den) as i64).collect()
    }
}

impl fmt::Debug for BarCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BarCochain({}, arity {}, [", self.spec, self.arity)?;
        let shown: Vec<String> = self.values.iter().take(32).map(|v| v.to_string()).collect();
        write!(f, "{}", shown.join(", "))?;
        if self.values.len() > 32 {
            write!(f, ", ...")?;
        }
        write!(f, "])")
    }
}

/// `(x, y, ...)` with each element as `[i,j]`.
pub fn fmt_args(t: &[GroupElement]) -> String {
    let parts: Vec<String> = t.iter().map(|g| g.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Walks all `(l+1)`-tuples and yields `(delta f)` as a numerator over
/// `den`; the first argument acts trivially.
struct DeltaWalker<'a> {
    order: usize,
    arity: usize,
    num: Vec<i64>,
    den: i64,
    spec: &'a GroupSpec,
}

impl DeltaWalker<'_> {
    fn new(f: &BarCochain) -> DeltaWalker<'_> {
        let den = f.denominator();
        DeltaWalker {
            order: f.spec.order(),
            arity: f.arity,
            num: f.numerators(den),
            den: den as i64,
            spec: &f.spec,
        }
    }

    fn at(&self, t: &[usize]) -> i64 {
        let l = self.arity;
        let o = self.order;
        let lookup = |it: &mut dyn Iterator<Item = usize>| it.fold(0, |acc, x| acc * o + x);
        let mut total = self.num[lookup(&mut t[1..].iter().copied())];
        for i in 1..=l {
            let prod = self.spec.mul_index(t[i - 1], t[i]);
            let mut face = t[..i - 1]
                .iter()
                .copied()
                .chain(std::iter::once(prod))
                .chain(t[i + 1..].iter().copied());
            let v = self.num[lookup(&mut face)];
            total += if i % 2 == 0 { v } else { -v };
        }
        let last = self.num[lookup(&mut t[..l].iter().copied())];
        total += if (l + 1).is_multiple_of(2) { last } else { -last };
        total.rem_euclid(self.den)
    }

    /// Calls `visit` with each tuple (as indices) and the value of `delta f`
    /// there; stops early when `visit` returns `false`.
    fn walk(&self, mut visit: impl FnMut(&[usize], i64) -> bool) {
        let len = self.arity + 1;
        let mut t = vec![0usize; len];
        loop {
            if !visit(&t, self.at(&t)) {
                return;
            }
            let mut k = len;
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                t[k] += 1;
                if t[k] < self.order {
                    break;
                }
                t[k] = 0;
            }
        }
    }
}

/// `(delta f)(x1..x(l+1)) = f(x2..) + sum_i (-1)^i f(.., xi x(i+1), ..) + (-1)^(l+1) f(x1..xl)`.
pub fn coboundary(f: &BarCochain, limits: &Limits) -> Result<BarCochain> {
    if f.arity >= MAX_ARITY {
        return Err(Error::UnsupportedDegree {
            degree: f.arity,
            reason: "coboundary is defined on cochains of arity 1 to 3",
        });
    }
    let size = limits.check_tuples("coboundary table", f.spec.order(), f.arity + 1)?;
    let walker = DeltaWalker::new(f);
    let mut values = Vec::with_capacity(size as usize);
    walker.walk(|_, v| {
        values.push(UnityRoot::new(v as i128, walker.den as u64));
        true
    });
    Ok(BarCochain {
        spec: f.spec,
        arity: f.arity + 1,
        values,
    })
}

/// First tuple where `delta f` is not `0/1`, with its value.
pub fn cocycle_defect(f: &BarCochain, limits: &Limits) -> Result<Option<(Vec<GroupElement>, UnityRoot)>> {
    if f.arity > 3 {
        return Err(Error::UnsupportedDegree {
            degree: f.arity,
            reason: "cocycle checks are defined on cochains of arity 1 to 3",
        });
    }
    if f.arity == 3 {
        limits.check_order("degree-3 cocycle check", f.spec.order(), limits.max_order)?;
    }
    limits.check_tuples("cocycle check", f.spec.order(), f.arity + 1)?;
    let walker = DeltaWalker::new(f);
    let mut found = None;
    walker.walk(|t, v| {
        if v == 0 {
            return true;
        }
        let tuple = t.iter().map(|&i| f.spec.element_at(i)).collect();
        found = Some((tuple, UnityRoot::new(v as i128, walker.den as u64)));
        false
    });
    Ok(found)
}

/// `true` iff `delta f` is trivial.
pub fn is_cocycle_bar(f: &BarCochain, limits: &Limits) -> Result<bool> {
    Ok(cocycle_defect(f, limits)?.is_none())
}
