//! Quasi-bicharacters for `Phi_(a,b,d)`: the braidings of `Vec_G^Phi`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::arith::UnityRoot;
use crate::cocycle::{fmt_args, BarCochain, CocycleParams3};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::limits::Limits;

/// The four values `r11 = R(g1,g1)`, `r12 = R(g1,g2)`, `r21 = R(g2,g1)`,
/// `r22 = R(g2,g2)` that determine `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuasiBicharacter {
    pub spec: GroupSpec,
    pub params: CocycleParams3,
    pub r11: UnityRoot,
    pub r12: UnityRoot,
    pub r21: UnityRoot,
    pub r22: UnityRoot,
}

/// A monoidal structure together with a braiding on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedStructure {
    pub params: CocycleParams3,
    pub r: QuasiBicharacter,
}

impl BraidedStructure {
    pub fn new(r: QuasiBicharacter) -> BraidedStructure {
        BraidedStructure { params: r.params, r }
    }
}

/// The first of the defining equations that fails, if any.
fn constraint_violation(q: &QuasiBicharacter) -> Option<String> {
    let (m, n) = (q.spec.m() as i64, q.spec.n() as i64);
    let a = UnityRoot::new(q.params.a as i128, m as u64);
    let b = UnityRoot::new(q.params.b as i128, n as u64);
    let d = UnityRoot::new(q.params.d as i128, n as u64);
    let checks = [
        (q.r11.times(m) == a, "m r11 = a/m"),
        (a == -a, "a/m = -a/m"),
        (q.r22.times(n) == d, "n r22 = d/n"),
        (d == -d, "d/n = -d/n"),
        (q.r12.times(n).is_one(), "n r12 = 0"),
        (q.r12.times(m) == -b, "m r12 = -b/n"),
        (q.r21.times(n).is_one(), "n r21 = 0"),
        (q.r21.times(m) == b, "m r21 = b/n"),
    ];
    checks
        .iter()
        .find(|(ok, _)| !ok)
        .map(|(_, what)| format!("{what} fails for {q}"))
}

impl QuasiBicharacter {
    /// Validates the defining equations.
    pub fn new(
        spec: GroupSpec,
        params: CocycleParams3,
        r: [UnityRoot; 4],
    ) -> Result<QuasiBicharacter> {
        CocycleParams3::new(spec, params.a as i64, params.b as i64, params.d as i64)?;
        let q = QuasiBicharacter::candidate(spec, params, r);
        match constraint_violation(&q) {
            None => Ok(q),
            Some(msg) => Err(Error::Verification(msg)),
        }
    }

    /// An arbitrary quadruple, not checked against anything.
    pub fn candidate(spec: GroupSpec, params: CocycleParams3, r: [UnityRoot; 4]) -> QuasiBicharacter {
        QuasiBicharacter {
            spec,
            params,
            r11: r[0],
            r12: r[1],
            r21: r[2],
            r22: r[3],
        }
    }

    pub fn satisfies_constraints(&self) -> bool {
        constraint_violation(self).is_none()
    }

    pub fn values(&self) -> [UnityRoot; 4] {
        [self.r11, self.r12, self.r21, self.r22]
    }

    /// `R(g1^i g2^j, g1^s g2^t) = is r11 + it r12 + js r21 + jt r22`.
    pub fn value(&self, x: GroupElement, y: GroupElement) -> UnityRoot {
        let (i, j, s, t) = (x.i() as i64, x.j() as i64, y.i() as i64, y.j() as i64);
        self.r11.times(i * s) + self.r12.times(i * t) + self.r21.times(j * s) + self.r22.times(j * t)
    }

    /// The full table of `R`.
    pub fn table(&self, limits: &Limits) -> Result<BarCochain> {
        BarCochain::from_fn(self.spec, 2, limits, |x| self.value(x[0], x[1]))
    }

    /// `true` when the quadruple is what the table shows at the generators.
    /// Fails only when a factor is trivial and a slot is invisible.
    pub fn is_canonical(&self) -> bool {
        let (g1, g2) = (self.spec.g1(), self.spec.g2());
        self.value(g1, g1) == self.r11
            && self.value(g1, g2) == self.r12
            && self.value(g2, g1) == self.r21
            && self.value(g2, g2) == self.r22
    }
}

impl fmt::Display for QuasiBicharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r11={} r12={} r21={} r22={}",
            self.r11, self.r12, self.r21, self.r22
        )
    }
}

/// All `r` satisfying the defining equations for `params`, sorted by
/// `(r11, r12, r21, r22)`.
pub fn solve_quasi_bicharacters(spec: GroupSpec, params: CocycleParams3) -> Result<Vec<QuasiBicharacter>> {
    CocycleParams3::new(spec, params.a as i64, params.b as i64, params.d as i64)?;
    let (m, n) = (spec.m() as u64, spec.n() as u64);
    let a = UnityRoot::new(params.a as i128, m);
    let d = UnityRoot::new(params.d as i128, n);
    if a != -a || d != -d {
        return Ok(Vec::new());
    }
    let b = UnityRoot::new(params.b as i128, n);
    // r12, r21 live in (1/n)Z/Z; keep those whose m-th multiple is -b or b
    let mu_n: Vec<UnityRoot> = (0..n).map(|c| UnityRoot::new(c as i128, n)).collect();
    let r12s: Vec<_> = mu_n.iter().copied().filter(|x| x.times(m as i64) == -b).collect();
    let r21s: Vec<_> = mu_n.iter().copied().filter(|x| x.times(m as i64) == b).collect();
    let r11s = a.all_roots(m);
    let r22s = d.all_roots(n);

    let mut out = Vec::with_capacity(r11s.len() * r12s.len() * r21s.len() * r22s.len());
    for &r11 in &r11s {
        for &r12 in &r12s {
            for &r21 in &r21s {
                for &r22 in &r22s {
                    out.push(QuasiBicharacter::new(spec, params, [r11, r12, r21, r22])?);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Which braiding identity failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HexagonIdentity {
    /// `R(xy,z) = R(x,z) R(y,z) Phi(z,x,y) Phi(x,y,z) / Phi(x,z,y)`
    ProductFirst,
    /// `R(x,yz) = R(x,y) R(x,z) Phi(y,x,z) / (Phi(y,z,x) Phi(x,y,z))`
    ProductSecond,
    /// `Phi(x,y,z) = Phi(x,z,y)`
    SlotSymmetry,
}

#[derive(Debug, Clone, Serialize)]
pub struct HexagonFailure {
    pub identity: HexagonIdentity,
    pub at: String,
    pub lhs: UnityRoot,
    pub rhs: UnityRoot,
}

impl fmt::Display for HexagonFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} fails at {}: {} != {}",
            self.identity, self.at, self.lhs, self.rhs
        )
    }
}

/// Checks both hexagon identities for `R` and `Phi_(a,b,d)` on all of `G^3`,
/// plus the slot symmetry of `Phi`. Returns the first failure.
pub fn hexagon_failure(r: &QuasiBicharacter, limits: &Limits) -> Result<Option<HexagonFailure>> {
    let spec = r.spec;
    limits.check_order("hexagon check", spec.order(), limits.max_order)?;
    let phi = |x, y, z| r.params.eval(x, y, z);
    for t in spec.enumerate(3, limits)? {
        let (x, y, z) = (t[0], t[1], t[2]);
        let fail = |identity, lhs, rhs| {
            Some(HexagonFailure {
                identity,
                at: fmt_args(&t),
                lhs,
                rhs,
            })
        };
        let lhs = r.value(x.g_mul(y)?, z);
        let rhs = r.value(x, z) + r.value(y, z) + phi(z, x, y) + phi(x, y, z) - phi(x, z, y);
        if lhs != rhs {
            return Ok(fail(HexagonIdentity::ProductFirst, lhs, rhs));
        }
        let lhs = r.value(x, y.g_mul(z)?);
        let rhs = r.value(x, y) + r.value(x, z) + phi(y, x, z) - phi(y, z, x) - phi(x, y, z);
        if lhs != rhs {
            return Ok(fail(HexagonIdentity::ProductSecond, lhs, rhs));
        }
        let (lhs, rhs) = (phi(x, y, z), phi(x, z, y));
        if lhs != rhs {
            return Ok(fail(HexagonIdentity::SlotSymmetry, lhs, rhs));
        }
    }
    Ok(None)
}

pub fn verify_hexagon(r: &QuasiBicharacter, limits: &Limits) -> Result<bool> {
    Ok(hexagon_failure(r, limits)?.is_none())
}

/// First `(x, y, z, w)` where the associator table `phi` breaks
/// `Phi(xy,z,w) Phi(x,y,zw) = Phi(x,y,z) Phi(x,yz,w) Phi(y,z,w)`.
pub fn pentagon_failure(phi: &BarCochain, limits: &Limits) -> Result<Option<Vec<GroupElement>>> {
    if phi.arity() != 3 {
        return Err(Error::DimensionMismatch(format!(
            "an associator has arity 3, got {}",
            phi.arity()
        )));
    }
    let spec = phi.spec();
    limits.check_order("pentagon check", spec.order(), limits.max_order)?;
    let f = |x, y, z| phi.value(&[x, y, z]);
    for t in spec.enumerate(4, limits)? {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let lhs = f(x.g_mul(y)?, z, w)? + f(x, y, z.g_mul(w)?)?;
        let rhs = f(x, y, z)? + f(x, y.g_mul(z)?, w)? + f(y, z, w)?;
        if lhs != rhs {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// The pentagon axiom for the associator `Phi_(a,b,d)` on simple objects.
pub fn verify_pentagon(spec: GroupSpec, params: CocycleParams3, limits: &Limits) -> Result<bool> {
    let phi = crate::cocycle::phi3(spec, params, limits)?;
    Ok(pentagon_failure(&phi, limits)?.is_none())
}

/// `R(x,y) R(y,x) = 1` for all `x, y`, decided both from the closed form
/// `r11^2 = r22^2 = 1, r12 = r21^-1` and from the table; disagreement is an error.
pub fn is_skew_symmetric(r: &QuasiBicharacter) -> Result<bool> {
    let closed = r.r11.times(2).is_one() && r.r22.times(2).is_one() && (r.r12 + r.r21).is_one();
    let spec = r.spec;
    let table = spec
        .elements()
        .all(|x| spec.elements().all(|y| (r.value(x, y) + r.value(y, x)).is_one()));
    if closed != table && r.is_canonical() {
        return Err(Error::Verification(format!(
            "skew-symmetry criteria disagree for {r}: closed form {closed}, table {table}"
        )));
    }
    Ok(table)
}

/// The braidings for `params` found by exhaustive search: every canonical
/// quadruple with entries in `(1/L)Z/Z`, `L = lcm(2m, 2n, mn)`, whose table
/// satisfies both hexagon identities. Sorted like [`solve_quasi_bicharacters`].
pub fn hexagon_candidates(
    spec: GroupSpec,
    params: CocycleParams3,
    limits: &Limits,
) -> Result<Vec<QuasiBicharacter>> {
    CocycleParams3::new(spec, params.a as i64, params.b as i64, params.d as i64)?;
    limits.check_order("hexagon search", spec.order(), limits.max_order)?;
    let (m, n) = (spec.m() as u64, spec.n() as u64);
    let big_l = (2 * m).lcm(&(2 * n)).lcm(&(m * n));
    limits.check_tuples("hexagon search", big_l as usize, 4)?;

    // Each identity at each (x,y,z) reads sum_k coef_k c_k = rhs (mod L)
    // in the numerators c_k of r over L. Collect the distinct ones.
    let mut constraints: BTreeSet<([u64; 4], u64)> = BTreeSet::new();
    let coef = |x: GroupElement, y: GroupElement| -> [i64; 4] {
        let (i, j, s, t) = (x.i() as i64, x.j() as i64, y.i() as i64, y.j() as i64);
        [i * s, i * t, j * s, j * t]
    };
    let phi = |x, y, z| params.eval(x, y, z);
    let mut push = |c: [i64; 4], rhs: UnityRoot| {
        let c = c.map(|v| v.rem_euclid(big_l as i64) as u64);
        constraints.insert((c, rhs.numerator_over(big_l)));
    };
    for t in spec.enumerate(3, limits)? {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (xy, yz) = (x.g_mul(y)?, y.g_mul(z)?);
        let (a, b, c) = (coef(xy, z), coef(x, z), coef(y, z));
        push(
            [0, 1, 2, 3].map(|k| a[k] - b[k] - c[k]),
            phi(z, x, y) + phi(x, y, z) - phi(x, z, y),
        );
        let (a, b, c) = (coef(x, yz), coef(x, y), coef(x, z));
        push(
            [0, 1, 2, 3].map(|k| a[k] - b[k] - c[k]),
            phi(y, x, z) - phi(y, z, x) - phi(x, y, z),
        );
    }
    let constraints: Vec<_> = constraints.into_iter().filter(|(c, r)| *c != [0; 4] || *r != 0).collect();
    if constraints.iter().any(|(c, r)| *c == [0; 4] && *r != 0) {
        return Ok(Vec::new());
    }

    let mut out = Vec::new();
    let mut num = [0u64; 4];
    loop {
        let ok = constraints.iter().all(|(c, r)| {
            let s: u64 = (0..4).map(|k| c[k] * num[k]).sum();
            s % big_l == *r
        });
        if ok {
            let r = num.map(|v| UnityRoot::new(v as i128, big_l));
            let q = QuasiBicharacter::candidate(spec, params, r);
            if q.is_canonical() {
                out.push(q);
            }
        }
        let mut k = 4;
        loop {
            if k == 0 {
                out.sort();
                return Ok(out);
            }
            k -= 1;
            num[k] += 1;
            if num[k] < big_l {
                break;
            }
            num[k] = 0;
        }
    }
}
