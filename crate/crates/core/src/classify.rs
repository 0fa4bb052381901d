//! Monoidal and braided monoidal structures on `Vec_G`, up to the listed
//! representatives.

use serde::{Deserialize, Serialize};

use crate::arith::UnityRoot;
use crate::braiding::{
    hexagon_failure, is_skew_symmetric, solve_quasi_bicharacters, QuasiBicharacter,
};
use crate::cocycle::CocycleParams3;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::limits::Limits;

pub const TOOL_NAME: &str = "vecg";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidalClass {
    pub spec: GroupSpec,
    pub params: CocycleParams3,
}

/// One representative `Vec_G^Phi_(a,b,d)` per triple, lexicographically.
pub fn classify_monoidal(spec: GroupSpec) -> Vec<MonoidalClass> {
    CocycleParams3::all(spec)
        .into_iter()
        .map(|params| MonoidalClass { spec, params })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingEntry {
    pub r11: UnityRoot,
    pub r12: UnityRoot,
    pub r21: UnityRoot,
    pub r22: UnityRoot,
    pub skew_symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidedClass {
    pub params: CocycleParams3,
    pub solutions: Vec<BraidingEntry>,
    pub empty: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub monoidal: usize,
    pub admissible: usize,
    pub braided: usize,
    pub symmetric: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub limits: Limits,
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: GroupSpec,
    pub monoidal_classes: Vec<CocycleParams3>,
    pub braided: Vec<BraidedClass>,
    pub meta: Meta,
}

impl ClassificationReport {
    /// Rebuilds the quasi-bicharacters listed in the report.
    pub fn quasi_bicharacters(&self) -> Vec<QuasiBicharacter> {
        self.braided
            .iter()
            .flat_map(|c| {
                c.solutions.iter().map(move |e| {
                    QuasiBicharacter::candidate(self.group, c.params, [e.r11, e.r12, e.r21, e.r22])
                })
            })
            .collect()
    }
}

/// Every braiding on every representative, each re-checked against both
/// hexagon identities and flagged symmetric or not.
pub fn classify_braided(spec: GroupSpec, limits: &Limits) -> Result<ClassificationReport> {
    let classes = classify_monoidal(spec);
    let mut braided = Vec::with_capacity(classes.len());
    let mut counts = Counts {
        monoidal: classes.len(),
        admissible: 0,
        braided: 0,
        symmetric: 0,
    };
    for c in &classes {
        let mut solutions = Vec::new();
        for r in solve_quasi_bicharacters(spec, c.params)? {
            if let Some(fail) = hexagon_failure(&r, limits)? {
                return Err(Error::Verification(format!("{r} for {:?}: {fail}", c.params)));
            }
            let skew_symmetric = is_skew_symmetric(&r)?;
            counts.symmetric += skew_symmetric as usize;
            solutions.push(BraidingEntry {
                r11: r.r11,
                r12: r.r12,
                r21: r.r21,
                r22: r.r22,
                skew_symmetric,
            });
        }
        counts.braided += solutions.len();
        counts.admissible += !solutions.is_empty() as usize;
        braided.push(BraidedClass {
            params: c.params,
            empty: solutions.is_empty(),
            solutions,
        });
    }
    Ok(ClassificationReport {
        group: spec,
        monoidal_classes: classes.iter().map(|c| c.params).collect(),
        braided,
        meta: Meta {
            tool: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
            limits: *limits,
            counts,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::cohomology_group;

    #[test]
    fn monoidal_counts() {
        assert_eq!(classify_monoidal(GroupSpec::new(2, 2).unwrap()).len(), 8);
        assert_eq!(classify_monoidal(GroupSpec::new(1, 1).unwrap()).len(), 1);
        assert_eq!(classify_monoidal(GroupSpec::new(2, 4).unwrap()).len(), 16);
        for m in 1..=6 {
            for n in 1..=6 {
                let s = GroupSpec::new(m, n).unwrap();
                let h3 = cohomology_group(s, 3, false, &Limits::default()).unwrap();
                assert_eq!(classify_monoidal(s).len() as u64, h3.order);
            }
        }
        let c = classify_monoidal(GroupSpec::new(2, 3).unwrap());
        assert!(c.windows(2).all(|w| w[0].params < w[1].params));
    }

    #[test]
    fn braided_counts() {
        let lim = Limits::default();
        let r = classify_braided(GroupSpec::new(2, 2).unwrap(), &lim).unwrap();
        assert_eq!(r.meta.counts.braided, 64);
        assert_eq!(r.meta.counts.admissible, 4);
        for c in &r.braided {
            assert_eq!(c.empty, c.params.b != 0);
            assert_eq!(c.solutions.len(), if c.empty { 0 } else { 16 });
        }
        let r = classify_braided(GroupSpec::new(3, 3).unwrap(), &lim).unwrap();
        assert_eq!(r.meta.counts.braided, 81);
        assert_eq!(r.meta.counts.admissible, 1);
        assert!(!r.braided[0].empty);
        let r = classify_braided(GroupSpec::new(1, 1).unwrap(), &lim).unwrap();
        assert_eq!(r.meta.counts.braided, 1);
        assert!(r.braided[0].solutions[0].skew_symmetric);
    }
}
