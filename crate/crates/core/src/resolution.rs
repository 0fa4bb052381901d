//! Free resolutions of the trivial module `Z`: the bar resolution and the
//! tensor product `K` of the two periodic cyclic resolutions.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{invariant_factors, IntMatrix, Integer};
use crate::error::{Error, Result};
use crate::group::{Factor, GroupElement, GroupRingElem, GroupSpec};
use crate::limits::Limits;

/// Longest bar symbol handled. Degree 5 is needed to check the cyclic chain
/// map through `F_5`.
pub const MAX_BAR_DEGREE: usize = 5;

/// A bar symbol `[x1, ..., xl]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarGenerator(Vec<GroupElement>);

impl BarGenerator {
    pub fn new(entries: Vec<GroupElement>) -> Result<BarGenerator> {
        if entries.len() > MAX_BAR_DEGREE {
            return Err(Error::UnsupportedDegree {
                degree: entries.len(),
                reason: "bar symbols are capped at MAX_BAR_DEGREE",
            });
        }
        if let Some(first) = entries.first() {
            for e in &entries[1..] {
                first.spec().check_same(&e.spec())?;
            }
        }
        Ok(BarGenerator(entries))
    }

    pub fn entries(&self) -> &[GroupElement] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for BarGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The free generator `Psi(p, q)` of `K` in degree `p + q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct KGenerator {
    pub p: u32,
    pub q: u32,
}

impl KGenerator {
    pub const fn new(p: u32, q: u32) -> KGenerator {
        KGenerator { p, q }
    }

    pub fn degree(&self) -> usize {
        (self.p + self.q) as usize
    }

    /// The generators of `K_l`, as `Psi(l, 0), Psi(l-1, 1), ..., Psi(0, l)`.
    pub fn in_degree(l: usize) -> Vec<KGenerator> {
        (0..=l as u32)
            .rev()
            .map(|p| KGenerator::new(p, l as u32 - p))
            .collect()
    }
}

impl fmt::Display for KGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Psi({},{})", self.p, self.q)
    }
}

/// A finite `Z[G]`-combination of free generators of one kind.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModuleElem<Gen: Ord> {
    spec: GroupSpec,
    terms: BTreeMap<Gen, GroupRingElem>,
}

impl<Gen: Ord + Clone> FreeModuleElem<Gen> {
    pub fn zero(spec: GroupSpec) -> Self {
        FreeModuleElem {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(spec: GroupSpec, gen: Gen) -> Self {
        let mut e = Self::zero(spec);
        e.add_term(gen, &GroupRingElem::one(spec));
        e
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, gen: &Gen) -> GroupRingElem {
        self.terms
            .get(gen)
            .cloned()
            .unwrap_or_else(|| GroupRingElem::zero(self.spec))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gen, &GroupRingElem)> {
        self.terms.iter()
    }

    /// `self += c * gen`
    pub fn add_term(&mut self, gen: Gen, c: &GroupRingElem) {
        debug_assert_eq!(c.spec(), self.spec);
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(gen.clone())
            .or_insert_with(|| GroupRingElem::zero(self.spec));
        slot.add_assign_same(c, 1);
        if slot.is_zero() {
            self.terms.remove(&gen);
        }
    }

    /// `self += r * other`
    pub fn add_scaled(&mut self, other: &Self, r: &GroupRingElem) {
        for (gen, c) in other.terms() {
            self.add_term(gen.clone(), &r.mul_same(c));
        }
    }

    /// `self += k * other`
    pub fn add_multiple(&mut self, other: &Self, k: i64) {
        for (gen, c) in other.terms() {
            self.add_term(gen.clone(), &c.ring_scale(k));
        }
    }
}

impl<Gen: Ord + fmt::Display> fmt::Display for FreeModuleElem<Gen> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("({c}){g}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<Gen: Ord + fmt::Display> fmt::Debug for FreeModuleElem<Gen> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The bar differential
/// `x1 [x2..xl] + sum_k (-1)^k [.., xk x(k+1), ..] + (-1)^l [x1..x(l-1)]`.
pub fn bar_differential(x: &BarGenerator) -> Result<FreeModuleElem<BarGenerator>> {
    let l = x.degree();
    if l == 0 {
        return Err(Error::UnsupportedDegree {
            degree: 0,
            reason: "the bar differential starts in degree 1",
        });
    }
    let e = x.entries();
    let spec = e[0].spec();
    let mut out = FreeModuleElem::zero(spec);
    out.add_term(
        BarGenerator(e[1..].to_vec()),
        &GroupRingElem::monomial(e[0], 1),
    );
    for k in 1..l {
        let mut face = Vec::with_capacity(l - 1);
        face.extend_from_slice(&e[..k - 1]);
        face.push(e[k - 1].mul_same(e[k]));
        face.extend_from_slice(&e[k + 1..]);
        out.add_term(BarGenerator(face), &GroupRingElem::integer(spec, sign(k)));
    }
    out.add_term(
        BarGenerator(e[..l - 1].to_vec()),
        &GroupRingElem::integer(spec, sign(l)),
    );
    Ok(out)
}

/// Extends [`bar_differential`] Z[G]-linearly.
pub fn bar_differential_elem(
    x: &FreeModuleElem<BarGenerator>,
) -> Result<FreeModuleElem<BarGenerator>> {
    let mut out = FreeModuleElem::zero(x.spec());
    for (gen, c) in x.terms() {
        out.add_scaled(&bar_differential(gen)?, c);
    }
    Ok(out)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `d = d1 + d2` on `c * Psi(p, q)`:
///
/// * `d1 Psi(p,q)` is `0` for `p = 0`, `N_m Psi(p-1,q)` for even `p`, `T_m Psi(p-1,q)` for odd `p`;
/// * `d2 Psi(p,q)` is `0` for `q = 0`, `(-1)^p N_n Psi(p,q-1)` for even `q`, `(-1)^p T_n Psi(p,q-1)` for odd `q`.
pub fn k_differential(c: &GroupRingElem, gen: KGenerator) -> Result<FreeModuleElem<KGenerator>> {
    if gen.degree() == 0 {
        return Err(Error::UnsupportedDegree {
            degree: 0,
            reason: "K_0 is the last term before the augmentation",
        });
    }
    let spec = c.spec();
    let mut out = FreeModuleElem::zero(spec);
    if gen.p > 0 {
        let op = if gen.p.is_multiple_of(2) {
            spec.norm(Factor::First)
        } else {
            spec.translate(Factor::First)
        };
        out.add_term(KGenerator::new(gen.p - 1, gen.q), &c.mul_same(&op));
    }
    if gen.q > 0 {
        let op = if gen.q.is_multiple_of(2) {
            spec.norm(Factor::Second)
        } else {
            spec.translate(Factor::Second)
        };
        let op = op.ring_scale(sign(gen.p as usize));
        out.add_term(KGenerator::new(gen.p, gen.q - 1), &c.mul_same(&op));
    }
    Ok(out)
}

/// Extends [`k_differential`] linearly.
pub fn k_differential_elem(x: &FreeModuleElem<KGenerator>) -> Result<FreeModuleElem<KGenerator>> {
    let mut out = FreeModuleElem::zero(x.spec());
    for (gen, c) in x.terms() {
        let d = k_differential(c, *gen)?;
        out.add_multiple(&d, 1);
    }
    Ok(out)
}

/// Outcome of [`verify_complex`].
#[derive(Debug, Clone, Serialize)]
pub struct ComplexReport {
    pub spec: GroupSpec,
    pub max_degree: usize,
    /// Generators whose `d(d(Psi))` is nonzero.
    pub dd_failures: Vec<KGenerator>,
    /// One entry per degree `0..max_degree` (degree 0 uses the augmentation).
    pub exactness: Vec<ExactnessCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExactnessCheck {
    pub degree: usize,
    pub rank_of_module: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    /// Invariant factors of the incoming map that are larger than 1.
    pub torsion: Vec<String>,
}

impl ExactnessCheck {
    pub fn is_exact(&self) -> bool {
        self.rank_in + self.rank_out == self.rank_of_module && self.torsion.is_empty()
    }
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.dd_failures.is_empty() && self.exactness.iter().all(ExactnessCheck::is_exact)
    }
}

/// Matrix of `d: K_l -> K_(l-1)` over Z, basis `(generator, group element)`
/// in the order of [`KGenerator::in_degree`] then lexicographic elements.
/// Degree 0 gives the augmentation `K_0 -> Z`.
pub fn k_differential_matrix(spec: GroupSpec, l: usize) -> Result<IntMatrix> {
    let order = spec.order();
    let src = KGenerator::in_degree(l);
    if l == 0 {
        let ones: Vec<i64> = vec![1; order];
        return IntMatrix::from_rows(&[ones]);
    }
    let dst = KGenerator::in_degree(l - 1);
    let mut mat = IntMatrix::zeros(dst.len() * order, src.len() * order);
    for (sc, &gen) in src.iter().enumerate() {
        for g in spec.elements() {
            let col = sc * order + g.index();
            let image = k_differential(&GroupRingElem::monomial(g, 1), gen)?;
            for (target, coeff) in image.terms() {
                let row_block = dst.iter().position(|t| t == target).expect("degree l-1");
                for (h, c) in coeff.terms() {
                    mat[(row_block * order + h.index(), col)] = Integer::from(c);
                }
            }
        }
    }
    Ok(mat)
}

/// Checks `d o d = 0` on every generator of degree `<= max_degree` and
/// exactness of the augmented complex (as abelian groups) in degrees
/// `0..max_degree`.
pub fn verify_complex(spec: GroupSpec, max_degree: usize, limits: &Limits) -> Result<ComplexReport> {
    if max_degree > 4 {
        return Err(Error::UnsupportedDegree {
            degree: max_degree,
            reason: "complex checks stop at degree 4",
        });
    }
    // the largest matrix is |G| (l+1) square-ish; keep it inside the tuple budget
    limits.check_tuples("complex verification", spec.order() * (max_degree + 1), 2)?;

    let mut dd_failures = Vec::new();
    for l in 2..=max_degree {
        for gen in KGenerator::in_degree(l) {
            let d1 = k_differential(&GroupRingElem::one(spec), gen)?;
            if !k_differential_elem(&d1)?.is_zero() {
                dd_failures.push(gen);
            }
        }
    }

    let mut ranks = Vec::with_capacity(max_degree + 1);
    let mut factors = Vec::with_capacity(max_degree + 1);
    for l in 0..=max_degree {
        let d = invariant_factors(&k_differential_matrix(spec, l)?);
        ranks.push(d.iter().filter(|x| !x.is_zero()).count());
        factors.push(d);
    }
    let exactness = (0..max_degree)
        .map(|l| ExactnessCheck {
            degree: l,
            rank_of_module: spec.order() * (l + 1),
            rank_in: ranks[l + 1],
            rank_out: ranks[l],
            torsion: factors[l + 1]
                .iter()
                .filter(|x| !x.is_zero() && !x.is_one())
                .map(|x| x.to_string())
                .collect(),
        })
        .collect();

    Ok(ComplexReport {
        spec,
        max_degree,
        dd_failures,
        exactness,
    })
}
