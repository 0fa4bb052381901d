use serde::{Deserialize, Serialize};

use super::BarCochain;
use crate::arith::{solve_mod1, IntMatrix, UnityRoot};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::limits::Limits;

fn fl(a: u32, b: u32, m: u32) -> i64 {
    ((a + b) / m) as i64
}

/// `zeta_m^(a i1 floor((i2+i3)/m) ... floor((i(l-1)+il)/m))` on `Z_m`,
/// for odd `l <= 5`.
pub fn omega_value(spec: GroupSpec, a: i64, args: &[GroupElement]) -> Result<UnityRoot> {
    if !spec.is_cyclic() {
        return Err(Error::NotCyclic(spec));
    }
    let l = args.len();
    if l.is_multiple_of(2) || l > 5 {
        return Err(Error::UnsupportedDegree {
            degree: l,
            reason: "omega is defined in odd degrees 1, 3, 5",
        });
    }
    let m = spec.m();
    let mut e = a.rem_euclid(m as i64) * args[0].i() as i64;
    for p in args[1..].chunks(2) {
        e *= fl(p[0].i(), p[1].i(), m);
    }
    Ok(UnityRoot::new(e as i128, m as u64))
}

/// The table of [`omega_value`] for `l` in `{1, 3}`.
pub fn omega(spec: GroupSpec, a: i64, l: usize, limits: &Limits) -> Result<BarCochain> {
    if !spec.is_cyclic() {
        return Err(Error::NotCyclic(spec));
    }
    if l.is_multiple_of(2) || l > 3 {
        return Err(Error::UnsupportedDegree {
            degree: l,
            reason: "omega tables exist in degrees 1 and 3; even degrees carry no nontrivial class",
        });
    }
    BarCochain::from_fn(spec, l, limits, |x| {
        omega_value(spec, a, x).expect("validated above")
    })
}

/// `Phi_b(g1^i g2^j, g1^s g2^t) = zeta_(m,n)^(b j s)`, for `0 <= b < (m, n)`.
pub fn phi2(spec: GroupSpec, b: u32, limits: &Limits) -> Result<BarCochain> {
    let g = spec.gcd();
    if b >= g {
        return Err(Error::OutOfRange {
            name: "b",
            value: b as i64,
            bound: g as i64,
        });
    }
    BarCochain::from_fn(spec, 2, limits, |x| {
        let (j, s) = (x[0].j() as i128, x[1].i() as i128);
        UnityRoot::new(b as i128 * j * s, g as u64)
    })
}

/// Parameters `(a, b, d)` of the representative 3-cocycle `Phi_(a,b,d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CocycleParams3 {
    pub a: u32,
    pub b: u32,
    pub d: u32,
}

impl CocycleParams3 {
    /// Checks `a < m`, `b < (m, n)`, `d < n`.
    pub fn new(spec: GroupSpec, a: i64, b: i64, d: i64) -> Result<CocycleParams3> {
        let check = |name, value: i64, bound: u32| {
            if value < 0 || value >= bound as i64 {
                Err(Error::OutOfRange {
                    name,
                    value,
                    bound: bound as i64,
                })
            } else {
                Ok(value as u32)
            }
        };
        Ok(CocycleParams3 {
            a: check("a", a, spec.m())?,
            b: check("b", b, spec.gcd())?,
            d: check("d", d, spec.n())?,
        })
    }

    /// Every parameter triple, lexicographically.
    pub fn all(spec: GroupSpec) -> Vec<CocycleParams3> {
        let mut out = Vec::with_capacity(spec.order() * spec.gcd() as usize);
        for a in 0..spec.m() {
            for b in 0..spec.gcd() {
                for d in 0..spec.n() {
                    out.push(CocycleParams3 { a, b, d });
                }
            }
        }
        out
    }

    /// `a floor((k+s)/m) i / m + b floor((k+s)/m) j / n + d floor((t+l)/n) j / n`
    /// at `(g1^i g2^j, g1^s g2^t, g1^k g2^l)`.
    pub fn eval(&self, x: GroupElement, y: GroupElement, z: GroupElement) -> UnityRoot {
        let spec = x.spec();
        let (m, n) = (spec.m(), spec.n());
        let ks = fl(z.i(), y.i(), m);
        let tl = fl(y.j(), z.j(), n);
        let first = self.a as i64 * ks * x.i() as i64;
        let rest = (self.b as i64 * ks + self.d as i64 * tl) * x.j() as i64;
        UnityRoot::new(first as i128, m as u64) + UnityRoot::new(rest as i128, n as u64)
    }

    /// `(A, B, C, D) = (zeta_m^a, zeta_n^b, 1, zeta_n^d)`.
    pub fn resolution_cochain(&self, spec: GroupSpec) -> ResolutionCochain3 {
        ResolutionCochain3 {
            a: UnityRoot::new(self.a as i128, spec.m() as u64),
            b: UnityRoot::new(self.b as i128, spec.n() as u64),
            c: UnityRoot::ONE,
            d: UnityRoot::new(self.d as i128, spec.n() as u64),
        }
    }
}

/// The table of `Phi_(a,b,d)`.
pub fn phi3(spec: GroupSpec, params: CocycleParams3, limits: &Limits) -> Result<BarCochain> {
    CocycleParams3::new(spec, params.a as i64, params.b as i64, params.d as i64)?;
    BarCochain::from_fn(spec, 3, limits, |x| params.eval(x[0], x[1], x[2]))
}

/// A homomorphism `K_l -> Q/Z`, given by its values on the free generators.
pub trait ResolutionCochain {
    fn arity(&self) -> usize;

    /// Values on `Psi(l,0), Psi(l-1,1), ..., Psi(0,l)`.
    fn generator_values(&self) -> Vec<UnityRoot>;

    fn is_cocycle(&self, spec: GroupSpec) -> bool;

    fn is_coboundary(&self, spec: GroupSpec) -> bool;

    /// The bar cochain `f o F_l`.
    fn pullback(&self, spec: GroupSpec, limits: &Limits) -> Result<BarCochain>;
}

/// `(A, B, C)` on `Psi(2,0), Psi(1,1), Psi(0,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResolutionCochain2 {
    pub a: UnityRoot,
    pub b: UnityRoot,
    pub c: UnityRoot,
}

impl ResolutionCochain2 {
    /// `A^floor((i+s)/m) B^(-js) C^floor((j+t)/n)` at `(g1^i g2^j, g1^s g2^t)`.
    pub fn eval(&self, x: GroupElement, y: GroupElement) -> UnityRoot {
        let spec = x.spec();
        let (i, j, s, t) = (x.i(), x.j(), y.i(), y.j());
        self.a.times(fl(i, s, spec.m())) - self.b.times(j as i64 * s as i64)
            + self.c.times(fl(j, t, spec.n()))
    }
}

impl ResolutionCochain for ResolutionCochain2 {
    fn arity(&self) -> usize {
        2
    }

    fn generator_values(&self) -> Vec<UnityRoot> {
        vec![self.a, self.b, self.c]
    }

    /// `B^m = B^n = 1`.
    fn is_cocycle(&self, spec: GroupSpec) -> bool {
        self.b.times(spec.m() as i64).is_one() && self.b.times(spec.n() as i64).is_one()
    }

    /// `B = 1`.
    fn is_coboundary(&self, _spec: GroupSpec) -> bool {
        self.b.is_one()
    }

    fn pullback(&self, spec: GroupSpec, limits: &Limits) -> Result<BarCochain> {
        BarCochain::from_fn(spec, 2, limits, |x| self.eval(x[0], x[1]))
    }
}

/// `(A, B, C, D)` on `Psi(3,0), Psi(2,1), Psi(1,2), Psi(0,3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResolutionCochain3 {
    pub a: UnityRoot,
    pub b: UnityRoot,
    pub c: UnityRoot,
    pub d: UnityRoot,
}

impl ResolutionCochain3 {
    /// `A^(floor((k+s)/m) i) B^(floor((k+s)/m) j) C^(floor((j+t)/n) k) D^(floor((t+l)/n) j)`.
    pub fn eval(&self, x: GroupElement, y: GroupElement, z: GroupElement) -> UnityRoot {
        let spec = x.spec();
        let (m, n) = (spec.m(), spec.n());
        let (i, j, s, t, k, l) = (x.i(), x.j(), y.i(), y.j(), z.i(), z.j());
        let ks = fl(k, s, m);
        self.a.times(ks * i as i64)
            + self.b.times(ks * j as i64)
            + self.c.times(fl(j, t, n) * k as i64)
            + self.d.times(fl(t, l, n) * j as i64)
    }

    /// Some `E` with `E^m = B` and `E^(-n) = C`, if one exists.
    pub fn coboundary_witness(&self, spec: GroupSpec) -> Option<UnityRoot> {
        if !self.a.is_one() || !self.d.is_one() {
            return None;
        }
        let mat = IntMatrix::from_rows(&[[spec.m() as i64], [-(spec.n() as i64)]])
            .expect("2x1 matrix");
        solve_mod1(&mat, &[self.b, self.c])
            .expect("dimensions agree")
            .map(|x| x[0])
    }
}

impl ResolutionCochain for ResolutionCochain3 {
    fn arity(&self) -> usize {
        3
    }

    fn generator_values(&self) -> Vec<UnityRoot> {
        vec![self.a, self.b, self.c, self.d]
    }

    /// `A^m = B^n C^m = D^n = 1`.
    fn is_cocycle(&self, spec: GroupSpec) -> bool {
        let (m, n) = (spec.m() as i64, spec.n() as i64);
        self.a.times(m).is_one()
            && (self.b.times(n) + self.c.times(m)).is_one()
            && self.d.times(n).is_one()
    }

    /// `A = D = 1`, `B = E^m`, `C = E^(-n)`.
    fn is_coboundary(&self, spec: GroupSpec) -> bool {
        self.coboundary_witness(spec).is_some()
    }

    fn pullback(&self, spec: GroupSpec, limits: &Limits) -> Result<BarCochain> {
        BarCochain::from_fn(spec, 3, limits, |x| self.eval(x[0], x[1], x[2]))
    }
}

pub fn is_cocycle_resolution<R: ResolutionCochain>(rc: &R, spec: GroupSpec) -> bool {
    rc.is_cocycle(spec)
}

pub fn is_coboundary_resolution<R: ResolutionCochain>(rc: &R, spec: GroupSpec) -> bool {
    rc.is_coboundary(spec)
}

/// Pulls `Phi(A, B, C)` back along `F_2`.
pub fn pullback2(spec: GroupSpec, rc: &ResolutionCochain2, limits: &Limits) -> Result<BarCochain> {
    rc.pullback(spec, limits)
}

/// Pulls `Phi(A, B, C, D)` back along `F_3`.
pub fn pullback3(spec: GroupSpec, rc: &ResolutionCochain3, limits: &Limits) -> Result<BarCochain> {
    rc.pullback(spec, limits)
}
