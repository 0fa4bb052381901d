//! Chain maps from the bar resolution to `K`: the all-degree maps for a
//! cyclic group and the degree `<= 3` maps for `Z_m x Z_n`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupRingElem, GroupSpec};
use crate::limits::Limits;
use crate::resolution::{
    bar_differential, k_differential_elem, BarGenerator, FreeModuleElem, KGenerator,
};

/// Highest degree of the cyclic chain map supported here.
pub const MAX_CYCLIC_DEGREE: usize = 5;
/// Highest degree of the product chain map.
pub const MAX_PRODUCT_DEGREE: usize = 3;

/// Which family of chain maps to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainMapKind {
    /// `F_k`, `Psi_k` identified with `Psi(k, 0)`; needs `n = 1`.
    Cyclic,
    /// `F_1, F_2, F_3` for the product group.
    Product,
}

impl ChainMapKind {
    pub fn max_degree(self) -> usize {
        match self {
            ChainMapKind::Cyclic => MAX_CYCLIC_DEGREE,
            ChainMapKind::Product => MAX_PRODUCT_DEGREE,
        }
    }

    /// The natural choice for `spec`.
    pub fn for_spec(spec: GroupSpec) -> ChainMapKind {
        if spec.is_cyclic() {
            ChainMapKind::Cyclic
        } else {
            ChainMapKind::Product
        }
    }

    pub fn apply(self, x: &BarGenerator, spec: GroupSpec) -> Result<FreeModuleElem<KGenerator>> {
        match self {
            ChainMapKind::Cyclic => cyclic_f(x, spec),
            ChainMapKind::Product => product_f(x, spec),
        }
    }
}

fn fl(a: u32, b: u32, m: u32) -> i64 {
    ((a + b) / m) as i64
}

/// `F_0[] = Psi(0, 0)`.
pub fn f0(spec: GroupSpec) -> FreeModuleElem<KGenerator> {
    FreeModuleElem::generator(spec, KGenerator::new(0, 0))
}

/// The cyclic chain map in degree `k = x.degree()`:
/// odd `k = 2r+1` gives `(sum_{a<i1} g^a) prod_t floor((i_2t + i_2t+1)/m) Psi_k`,
/// even `k = 2r` gives `prod_t floor((i_2t-1 + i_2t)/m) Psi_k`.
///
/// `spec` is only consulted when `x` is empty.
pub fn cyclic_f(x: &BarGenerator, spec: GroupSpec) -> Result<FreeModuleElem<KGenerator>> {
    let spec = x.entries().first().map_or(spec, |g| g.spec());
    if !spec.is_cyclic() {
        return Err(Error::NotCyclic(spec));
    }
    let k = x.degree();
    if k > MAX_CYCLIC_DEGREE {
        return Err(Error::UnsupportedDegree {
            degree: k,
            reason: "cyclic chain map is implemented through degree 5",
        });
    }
    if k == 0 {
        return Ok(f0(spec));
    }
    let m = spec.m();
    let i: Vec<u32> = x.entries().iter().map(|g| g.i()).collect();
    let psi = KGenerator::new(k as u32, 0);
    let mut out = FreeModuleElem::zero(spec);
    if k % 2 == 1 {
        let c: i64 = i[1..].chunks(2).map(|p| fl(p[0], p[1], m)).product();
        let coeff = GroupRingElem::geometric(spec.g1(), i[0]).ring_scale(c);
        out.add_term(psi, &coeff);
    } else {
        let c: i64 = i.chunks(2).map(|p| fl(p[0], p[1], m)).product();
        out.add_term(psi, &GroupRingElem::integer(spec, c));
    }
    Ok(out)
}

/// `sum_{a < count} base * g^a`.
fn shifted_geometric(base: GroupElement, g: GroupElement, count: u32) -> GroupRingElem {
    GroupRingElem::geometric(g, count)
        .shift(base)
        .expect("same group")
}

/// The product chain map in degrees 0 to 3, writing the entries as
/// `g1^i g2^j`, `g1^s g2^t`, `g1^k g2^l`.
pub fn product_f(x: &BarGenerator, spec: GroupSpec) -> Result<FreeModuleElem<KGenerator>> {
    let spec = x.entries().first().map_or(spec, |g| g.spec());
    let (m, n) = (spec.m(), spec.n());
    let e = x.entries();
    let (g1, g2) = (spec.g1(), spec.g2());
    let psi = KGenerator::new;
    let mut out = FreeModuleElem::zero(spec);
    match e.len() {
        0 => return Ok(f0(spec)),
        1 => {
            let (i, j) = (e[0].i(), e[0].j());
            out.add_term(psi(1, 0), &GroupRingElem::geometric(g1, i));
            out.add_term(psi(0, 1), &shifted_geometric(spec.element(i as i64, 0), g2, j));
        }
        2 => {
            let (i, j, s, t) = (e[0].i(), e[0].j(), e[1].i(), e[1].j());
            out.add_term(psi(2, 0), &GroupRingElem::integer(spec, fl(i, s, m)));
            let mut mid = GroupRingElem::zero(spec);
            for a in 0..s {
                let row = shifted_geometric(spec.element((a + i) as i64, 0), g2, j);
                mid.add_assign_same(&row, -1);
            }
            out.add_term(psi(1, 1), &mid);
            let last = GroupRingElem::monomial(spec.element((i + s) as i64, 0), fl(j, t, n));
            out.add_term(psi(0, 2), &last);
        }
        3 => {
            let (i, j) = (e[0].i(), e[0].j());
            let (s, t) = (e[1].i(), e[1].j());
            let (k, l) = (e[2].i(), e[2].j());
            let ks = fl(k, s, m);
            let jt = fl(j, t, n);
            let tl = fl(t, l, n);
            out.add_term(psi(3, 0), &GroupRingElem::geometric(g1, i).ring_scale(ks));
            out.add_term(
                psi(2, 1),
                &shifted_geometric(spec.element(i as i64, 0), g2, j).ring_scale(ks),
            );
            out.add_term(
                psi(1, 2),
                &shifted_geometric(spec.element((i + s) as i64, 0), g1, k).ring_scale(jt),
            );
            out.add_term(
                psi(0, 3),
                &shifted_geometric(spec.element((i + s + k) as i64, 0), g2, j).ring_scale(tl),
            );
        }
        d => {
            return Err(Error::UnsupportedDegree {
                degree: d,
                reason: "product chain map is only defined in degrees 1 to 3",
            })
        }
    }
    Ok(out)
}

/// Applies a chain map to a `Z[G]`-combination of bar symbols.
pub fn apply_linear(
    kind: ChainMapKind,
    spec: GroupSpec,
    x: &FreeModuleElem<BarGenerator>,
) -> Result<FreeModuleElem<KGenerator>> {
    let mut out = FreeModuleElem::zero(spec);
    for (gen, c) in x.terms() {
        out.add_scaled(&kind.apply(gen, spec)?, c);
    }
    Ok(out)
}

/// First bar symbol where `d F_k != F_(k-1) d`.
#[derive(Debug, Clone, Serialize)]
pub struct ChainMapFailure {
    pub degree: usize,
    pub generator: String,
    /// `d(F_k(x))`
    pub lhs: String,
    /// `F_(k-1)(d x)`
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainMapReport {
    pub spec: GroupSpec,
    pub kind: ChainMapKind,
    pub max_degree: usize,
    pub generators: u64,
    pub counterexample: Option<ChainMapFailure>,
}

impl ChainMapReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for ChainMapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(
                f,
                "PASS degrees 1..{} ({} generators)",
                self.max_degree, self.generators
            ),
            Some(c) => write!(
                f,
                "FAIL degree {} at {}: d(F(x)) = {} but F(d(x)) = {}",
                c.degree, c.generator, c.lhs, c.rhs
            ),
        }
    }
}

/// Checks `d F_k(x) = F_(k-1)(d x)` for every bar symbol of degree
/// `1..=max_degree`, using the natural chain map for `spec`.
pub fn verify_chain_map(spec: GroupSpec, max_degree: usize, limits: &Limits) -> Result<ChainMapReport> {
    verify_chain_map_with(ChainMapKind::for_spec(spec), spec, max_degree, limits)
}

pub fn verify_chain_map_with(
    kind: ChainMapKind,
    spec: GroupSpec,
    max_degree: usize,
    limits: &Limits,
) -> Result<ChainMapReport> {
    if kind == ChainMapKind::Cyclic && !spec.is_cyclic() {
        return Err(Error::NotCyclic(spec));
    }
    if max_degree > kind.max_degree() {
        return Err(Error::UnsupportedDegree {
            degree: max_degree,
            reason: match kind {
                ChainMapKind::Cyclic => "cyclic chain map is implemented through degree 5",
                ChainMapKind::Product => "product chain map is only defined in degrees 1 to 3",
            },
        });
    }
    let mut generators = 0;
    for k in 1..=max_degree {
        for t in spec.enumerate(k, limits)? {
            generators += 1;
            let x = BarGenerator::new(t)?;
            let lhs = k_differential_elem(&kind.apply(&x, spec)?)?;
            let rhs = apply_linear(kind, spec, &bar_differential(&x)?)?;
            if lhs != rhs {
                return Ok(ChainMapReport {
                    spec,
                    kind,
                    max_degree,
                    generators,
                    counterexample: Some(ChainMapFailure {
                        degree: k,
                        generator: x.to_string(),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                });
            }
        }
    }
    Ok(ChainMapReport {
        spec,
        kind,
        max_degree,
        generators,
        counterexample: None,
    })
}
