//! Deciding "is a coboundary" by solving `delta g = f` over Q/Z, and the
//! cohomology groups built on it.

use std::fmt;

use serde::Serialize;

use super::{coboundary, is_cocycle_bar, phi2, phi3, BarCochain, CocycleParams3};
use crate::arith::{invariant_factors, IntMatrix, Integer, Mod1System, UnityRoot};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::limits::Limits;

/// The matrix of `delta` from normalized `(l-1)`-cochains to normalized
/// `l`-cochains, factored once so that many right-hand sides can be tested.
///
/// Only tuples without an identity entry are coordinates: a normalized
/// cochain vanishes elsewhere, `delta` preserves normalization, and a
/// normalized coboundary always has a normalized primitive.
pub struct CoboundaryOracle {
    spec: GroupSpec,
    arity: usize,
    system: Mod1System,
}

/// Index of a tuple of non-identity elements among all such tuples,
/// or `None` if some entry is the identity. Element index `k > 0` becomes digit `k - 1`.
fn reduced_offset(t: &[usize], base: usize) -> Option<usize> {
    t.iter()
        .try_fold(0, |acc, &k| (k != 0).then(|| acc * base + (k - 1)))
}

/// All tuples of length `len` over `1..order`, lexicographically.
fn reduced_tuples(order: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..order).map(move |k| {
                    let mut u = t.clone();
                    u.push(k);
                    u
                })
            })
            .collect();
    }
    out
}

impl CoboundaryOracle {
    /// Prepares the oracle for `arity`-cochains (`arity` in `{2, 3}`).
    pub fn new(spec: GroupSpec, arity: usize, limits: &Limits) -> Result<CoboundaryOracle> {
        let limit = match arity {
            2 => limits.max_order,
            3 => limits.max_coboundary_order,
            _ => {
                return Err(Error::UnsupportedDegree {
                    degree: arity,
                    reason: "the coboundary oracle handles arity 2 and 3",
                })
            }
        };
        limits.check_order("coboundary oracle", spec.order(), limit)?;
        limits.check_tuples("coboundary oracle", spec.order(), arity)?;

        let order = spec.order();
        let base = order - 1;
        let rows = reduced_tuples(order, arity);
        let cols = base.pow(arity as u32 - 1);
        let mut mat = IntMatrix::zeros(rows.len(), cols);
        for (r, t) in rows.iter().enumerate() {
            let l = arity;
            let mut add = |face: &[usize], sign: i64| {
                if let Some(c) = reduced_offset(face, base) {
                    mat[(r, c)] = &mat[(r, c)] + &Integer::from(sign);
                }
            };
            add(&t[1..], 1);
            for i in 1..l {
                let mut face = t[..i - 1].to_vec();
                face.push(spec.mul_index(t[i - 1], t[i]));
                face.extend_from_slice(&t[i + 1..]);
                add(&face, if i % 2 == 0 { 1 } else { -1 });
            }
            add(&t[..l - 1], if l.is_multiple_of(2) { 1 } else { -1 });
        }
        Ok(CoboundaryOracle {
            spec,
            arity,
            system: Mod1System::new(&mat)?,
        })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// A normalized `g` with `delta g = f`, or `None`.
    pub fn witness(&self, f: &BarCochain, limits: &Limits) -> Result<Option<BarCochain>> {
        self.spec.check_same(&f.spec())?;
        if f.arity() != self.arity {
            return Err(Error::DimensionMismatch(format!(
                "oracle for arity {} given a {}-cochain",
                self.arity,
                f.arity()
            )));
        }
        f.check_normalized()?;
        let order = self.spec.order();
        let rhs: Vec<UnityRoot> = reduced_tuples(order, self.arity)
            .iter()
            .map(|t| f.values()[t.iter().fold(0, |acc, &k| acc * order + k)])
            .collect();
        let Some(y) = self.system.solve(&rhs)? else {
            return Ok(None);
        };
        let mut g = BarCochain::trivial(self.spec, self.arity - 1, limits)?;
        for (t, v) in reduced_tuples(order, self.arity - 1).iter().zip(y) {
            let args: Vec<_> = t.iter().map(|&k| self.spec.element_at(k)).collect();
            g.set(&args, v)?;
        }
        if coboundary(&g, limits)? != *f {
            return Err(Error::Verification(
                "coboundary oracle produced a primitive whose coboundary differs".into(),
            ));
        }
        Ok(Some(g))
    }
}

/// A normalized `g` with `delta g = f`, or `None` when `f` is not a coboundary.
pub fn is_coboundary_bar(f: &BarCochain, limits: &Limits) -> Result<Option<BarCochain>> {
    CoboundaryOracle::new(f.spec(), f.arity(), limits)?.witness(f, limits)
}

/// Pairwise comparison of the representative cocycles.
#[derive(Debug, Clone, Serialize)]
pub struct OracleSummary {
    pub representatives: usize,
    pub pairs_checked: usize,
    /// Number of cohomology classes among the representatives.
    pub distinct_classes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyReport {
    pub spec: GroupSpec,
    pub degree: usize,
    /// `[(m,n)]` in degree 2, `[m, (m,n), n]` in degree 3.
    pub factors: Vec<u32>,
    /// Invariant factors larger than 1, each dividing the next.
    pub invariant_factors: Vec<u64>,
    pub order: u64,
    pub oracle: Option<OracleSummary>,
}

impl CohomologyReport {
    /// `true` when the oracle ran and found exactly `order` classes.
    pub fn oracle_confirms(&self) -> Option<bool> {
        self.oracle
            .as_ref()
            .map(|o| o.distinct_classes as u64 == self.order && o.representatives as u64 == self.order)
    }
}

impl fmt::Display for CohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let product: Vec<String> = self.factors.iter().map(|k| format!("Z{k}")).collect();
        write!(f, "H^{}({}) = {}", self.degree, self.spec, product.join(" x "))?;
        let inv: Vec<String> = self.invariant_factors.iter().map(|k| format!("Z{k}")).collect();
        let inv = if inv.is_empty() { "0".to_string() } else { inv.join(" x ") };
        write!(f, " = {inv}, order {}", self.order)?;
        if let Some(o) = &self.oracle {
            write!(
                f,
                "; oracle: {} representatives, {} pairs, {} classes",
                o.representatives, o.pairs_checked, o.distinct_classes
            )?;
        }
        Ok(())
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// `H^degree(G, Q/Z)` in closed form; with `oracle`, also checks that the
/// representatives are cocycles and counts their classes by testing every
/// pair of differences with the coboundary oracle.
pub fn cohomology_group(
    spec: GroupSpec,
    degree: usize,
    oracle: bool,
    limits: &Limits,
) -> Result<CohomologyReport> {
    let (m, n, g) = (spec.m(), spec.n(), spec.gcd());
    let factors = match degree {
        2 => vec![g],
        3 => vec![m, g, n],
        _ => {
            return Err(Error::UnsupportedDegree {
                degree,
                reason: "cohomology is computed in degrees 2 and 3",
            })
        }
    };
    let rows: Vec<Vec<i64>> = (0..factors.len())
        .map(|i| {
            (0..factors.len())
                .map(|j| if i == j { factors[i] as i64 } else { 0 })
                .collect()
        })
        .collect();
    let invariant: Vec<u64> = invariant_factors(&IntMatrix::from_rows(&rows)?)
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_i64().expect("small") as u64)
        .collect();
    let order = factors.iter().map(|&k| k as u64).product();

    let oracle = if oracle {
        let reps: Vec<BarCochain> = match degree {
            2 => (0..g).map(|b| phi2(spec, b, limits)).collect::<Result<_>>()?,
            _ => CocycleParams3::all(spec)
                .into_iter()
                .map(|p| phi3(spec, p, limits))
                .collect::<Result<_>>()?,
        };
        for (k, r) in reps.iter().enumerate() {
            if !is_cocycle_bar(r, limits)? {
                return Err(Error::Verification(format!(
                    "representative #{k} of degree {degree} is not a cocycle"
                )));
            }
        }
        let solver = CoboundaryOracle::new(spec, degree, limits)?;
        let mut parent: Vec<usize> = (0..reps.len()).collect();
        let mut pairs = 0;
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                pairs += 1;
                if solver.witness(&reps[i].sub(&reps[j])?, limits)?.is_some() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let distinct = (0..reps.len()).filter(|&i| find(&mut parent, i) == i).count();
        Some(OracleSummary {
            representatives: reps.len(),
            pairs_checked: pairs,
            distinct_classes: distinct,
        })
    } else {
        None
    };

    Ok(CohomologyReport {
        spec,
        degree,
        factors,
        invariant_factors: invariant,
        order,
        oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn trivial_has_trivial_witness() {
        let s = GroupSpec::new(2, 2).unwrap();
        for l in [2, 3] {
            let f = BarCochain::trivial(s, l, &lim()).unwrap();
            let w = is_coboundary_bar(&f, &lim()).unwrap().unwrap();
            assert!(w.is_trivial());
        }
    }

    #[test]
    fn representative_is_not_a_coboundary() {
        let s = GroupSpec::new(2, 2).unwrap();
        let f = phi3(s, CocycleParams3::new(s, 1, 0, 0).unwrap(), &lim()).unwrap();
        assert!(is_coboundary_bar(&f, &lim()).unwrap().is_none());
        let f = phi2(s, 1, &lim()).unwrap();
        assert!(is_coboundary_bar(&f, &lim()).unwrap().is_none());
    }

    #[test]
    fn oracle_rejects_bad_input() {
        let s = GroupSpec::new(2, 2).unwrap();
        let mut f = BarCochain::trivial(s, 2, &lim()).unwrap();
        f.set(&[s.identity(), s.g1()], UnityRoot::new(1, 2)).unwrap();
        assert!(matches!(is_coboundary_bar(&f, &lim()), Err(Error::NotNormalized { .. })));
        let f1 = BarCochain::trivial(s, 1, &lim()).unwrap();
        assert!(is_coboundary_bar(&f1, &lim()).is_err());
        let big = GroupSpec::new(2, 5).unwrap();
        let f3 = BarCochain::trivial(big, 3, &lim()).unwrap();
        assert!(matches!(is_coboundary_bar(&f3, &lim()), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn closed_form_examples() {
        let r = cohomology_group(GroupSpec::new(2, 2).unwrap(), 3, false, &lim()).unwrap();
        assert_eq!(r.factors, vec![2, 2, 2]);
        assert_eq!(r.invariant_factors, vec![2, 2, 2]);
        assert_eq!(r.order, 8);
        let r = cohomology_group(GroupSpec::new(2, 4).unwrap(), 2, false, &lim()).unwrap();
        assert_eq!(r.invariant_factors, vec![2]);
        assert_eq!(r.order, 2);
        let r = cohomology_group(GroupSpec::new(1, 5).unwrap(), 3, false, &lim()).unwrap();
        assert_eq!(r.factors, vec![1, 1, 5]);
        assert_eq!(r.invariant_factors, vec![5]);
        let r = cohomology_group(GroupSpec::new(2, 3).unwrap(), 3, false, &lim()).unwrap();
        assert_eq!(r.invariant_factors, vec![6]);
        assert_eq!(
            r.to_string(),
            "H^3(Z2 x Z3) = Z2 x Z1 x Z3 = Z6, order 6"
        );
        assert!(cohomology_group(GroupSpec::new(2, 3).unwrap(), 4, false, &lim()).is_err());
    }

    #[test]
    fn oracle_counts_small() {
        for (m, n) in [(2, 2), (1, 3), (2, 1), (2, 3)] {
            let s = GroupSpec::new(m, n).unwrap();
            for degree in [2, 3] {
                let r = cohomology_group(s, degree, true, &lim()).unwrap();
                assert_eq!(r.oracle_confirms(), Some(true), "{r}");
            }
        }
    }

    fn spec_and_cochain() -> impl Strategy<Value = (GroupSpec, Vec<(i128, u64)>, usize)> {
        (1u32..=3, 1u32..=3, 1usize..=2).prop_flat_map(|(m, n, l)| {
            let s = GroupSpec::new(m, n).unwrap();
            let size = s.order().pow(l as u32);
            (Just(s), proptest::collection::vec((0i128..24, 1u64..=8), size), Just(l))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn coboundaries_are_recognized((s, raw, l) in spec_and_cochain()) {
            // random normalized g, then f = delta g must come back with a witness
            let mut g = BarCochain::trivial(s, l, &lim()).unwrap();
            for ((t, _), (p, q)) in g.clone().entries().zip(raw) {
                if t.iter().all(|x| !x.is_identity()) {
                    g.set(&t, UnityRoot::new(p, q)).unwrap();
                }
            }
            let f = coboundary(&g, &lim()).unwrap();
            let w = is_coboundary_bar(&f, &lim()).unwrap();
            prop_assert!(w.is_some());
            prop_assert_eq!(coboundary(&w.unwrap(), &lim()).unwrap(), f);
        }
    }
}
