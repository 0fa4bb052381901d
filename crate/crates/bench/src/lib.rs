//! Inputs shared by the criterion benchmarks.

use vecg_core::GroupSpec;

/// Groups benchmarked throughout, smallest first.
pub fn bench_specs() -> Vec<GroupSpec> {
    [(2, 2), (2, 3), (3, 3)]
        .into_iter()
        .map(|(m, n)| GroupSpec::new(m, n).expect("nonzero moduli"))
        .collect()
}
