//! Acceptance checks 1 to 10. Each prints one `PASS`/`FAIL` line with its
//! elapsed time; the process exits nonzero if any check fails.
//!
//! The golden file for check 10 is regenerated from the brute-force hexagon
//! search with `VECG_BLESS=1 cargo test -p vecg-cli --test acceptance`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use vecg_core::braiding::{
    hexagon_candidates, is_skew_symmetric, pentagon_failure, solve_quasi_bicharacters,
    QuasiBicharacter,
};
use vecg_core::chain_map::{verify_chain_map_with, ChainMapKind};
use vecg_core::classify::{
    classify_braided, BraidedClass, BraidingEntry, ClassificationReport, Counts, Meta, TOOL_NAME,
    TOOL_VERSION,
};
use vecg_core::cocycle::{
    cohomology_group, is_cocycle_bar, phi2, phi3, pullback2, pullback3, CoboundaryOracle,
    ResolutionCochain, ResolutionCochain2, ResolutionCochain3,
};
use vecg_core::resolution::{k_differential, k_differential_elem, verify_complex, KGenerator};
use vecg_core::{
    floor_div, rem, BarCochain, CocycleParams3, GroupRingElem, GroupSpec, Limits, UnityRoot,
};

const BOUND_1: Duration = Duration::from_secs(1);
const BOUND_2: Duration = Duration::from_secs(30);
const BOUND_3: Duration = Duration::from_secs(30);
const BOUND_4: Duration = Duration::from_secs(120);
const BOUND_5: Duration = Duration::from_secs(300);
const BOUND_6: Duration = Duration::from_secs(120);
const BOUND_7: Duration = Duration::from_secs(300);
const BOUND_10: Duration = Duration::from_secs(10);

const GOLDEN: &str = "tests/golden/classify_braided_2_2.json";

type Check = std::result::Result<String, String>;

/// Number, name, time bound and body of one criterion.
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Check);

fn lim() -> Limits {
    Limits::default()
}

fn specs_up_to(order: u32) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for m in 1..=order {
        for n in 1..=order / m {
            out.push(GroupSpec::new(m, n).unwrap());
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn floor_identity() -> Check {
    let mut cases = 0;
    for m in 1..=12i64 {
        for x in 0..4 * m {
            for j in 0..4 * m {
                let lhs = floor_div(x + rem(j, m).unwrap(), m).unwrap();
                let rhs = floor_div(x + j, m).unwrap() - floor_div(j, m).unwrap();
                ensure(lhs == rhs, || format!("m={m} x={x} j={j}: {lhs} != {rhs}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn chain_maps() -> Check {
    let mut generators = 0;
    for m in 2..=8 {
        let s = GroupSpec::cyclic(m).unwrap();
        let r = verify_chain_map_with(ChainMapKind::Cyclic, s, 5, &lim()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{s}: {r}"))?;
        generators += r.generators;
    }
    for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 6)] {
        let s = GroupSpec::new(m, n).unwrap();
        let r = verify_chain_map_with(ChainMapKind::Product, s, 3, &lim()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{s}: {r}"))?;
        generators += r.generators;
    }
    Ok(format!("{generators} bar generators"))
}

fn complex_property() -> Check {
    let mut gens = 0;
    for m in 1..=12 {
        for n in 1..=12 {
            let s = GroupSpec::new(m, n).unwrap();
            for l in 2..=4 {
                for g in KGenerator::in_degree(l) {
                    let d = k_differential(&GroupRingElem::one(s), g).map_err(|e| e.to_string())?;
                    let dd = k_differential_elem(&d).map_err(|e| e.to_string())?;
                    ensure(dd.is_zero(), || format!("{s}: d(d({g})) = {dd}"))?;
                    gens += 1;
                }
            }
        }
    }
    let specs = specs_up_to(16);
    for &s in &specs {
        let r = verify_complex(s, 3, &lim()).map_err(|e| e.to_string())?;
        for c in r.exactness.iter().filter(|c| (1..=2).contains(&c.degree)) {
            ensure(c.is_exact(), || format!("{s}: not exact in degree {}: {c:?}", c.degree))?;
        }
    }
    Ok(format!("{gens} generators, exactness on {} groups", specs.len()))
}

fn cocycle_verification() -> Check {
    let (mut n3, mut n2) = (0, 0);
    for s in specs_up_to(16) {
        for p in CocycleParams3::all(s) {
            let f = phi3(s, p, &lim()).map_err(|e| e.to_string())?;
            ensure(is_cocycle_bar(&f, &lim()).map_err(|e| e.to_string())?, || format!("{s} {p:?}"))?;
            n3 += 1;
        }
        for b in 0..s.gcd() {
            let f = phi2(s, b, &lim()).map_err(|e| e.to_string())?;
            ensure(is_cocycle_bar(&f, &lim()).map_err(|e| e.to_string())?, || format!("{s} b={b}"))?;
            n2 += 1;
        }
    }
    Ok(format!("{n3} three-cocycles, {n2} two-cocycles"))
}

fn cohomology_counts() -> Check {
    let mut groups = 0;
    for s in specs_up_to(16) {
        let r = cohomology_group(s, 2, true, &lim()).map_err(|e| e.to_string())?;
        let classes = r.oracle.as_ref().map(|o| o.distinct_classes);
        ensure(classes == Some(s.gcd() as usize), || format!("H^2({s}): {classes:?} classes, want {}", s.gcd()))?;
        if s.order() <= 9 {
            let want = (s.m() * s.gcd() * s.n()) as usize;
            let r = cohomology_group(s, 3, true, &lim()).map_err(|e| e.to_string())?;
            let classes = r.oracle.as_ref().map(|o| o.distinct_classes);
            ensure(classes == Some(want), || format!("H^3({s}): {classes:?} classes, want {want}"))?;
        }
        groups += 1;
    }
    Ok(format!("{groups} groups"))
}

/// All values in `(1/den)Z/Z` for `slots` slots.
fn grid(den: u64, slots: usize) -> Vec<Vec<UnityRoot>> {
    let mut out = vec![vec![]];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|v: Vec<UnityRoot>| {
                (0..den).map(move |k| {
                    let mut w = v.clone();
                    w.push(UnityRoot::new(k as i128, den));
                    w
                })
            })
            .collect();
    }
    out
}

/// Resolution slots the pullback cannot see (only when `m = 1` or `n = 1`).
fn invisible_slots<R: ResolutionCochain>(s: GroupSpec, arity: usize, build: impl Fn(&[UnityRoot]) -> R) -> Vec<bool> {
    (0..=arity)
        .map(|k| {
            let mut v = vec![UnityRoot::ONE; arity + 1];
            v[k] = UnityRoot::new(1, 997);
            build(&v).pullback(s, &lim()).unwrap().is_trivial()
        })
        .collect()
}

fn consistency_for<R: ResolutionCochain + std::fmt::Debug>(
    s: GroupSpec,
    arity: usize,
    build: impl Fn(&[UnityRoot]) -> R,
    oracle: &CoboundaryOracle,
) -> std::result::Result<usize, String> {
    let den = (s.m() as u64 * s.n() as u64) / s.gcd() as u64;
    let hide = invisible_slots(s, arity, &build);
    let mut count = 0;
    for v in grid(den, arity + 1) {
        let rc = build(&v);
        let pb = rc.pullback(s, &lim()).map_err(|e| e.to_string())?;
        let bar = is_cocycle_bar(&pb, &lim()).map_err(|e| e.to_string())?;
        let res = rc.is_cocycle(s);
        if s.m() >= 2 && s.n() >= 2 {
            ensure(res == bar, || format!("{s} {rc:?}: resolution {res}, bar {bar}"))?;
        } else {
            // the pullback forgets the invisible slots; compare with them cleared
            ensure(!res || bar, || format!("{s} {rc:?}: resolution cocycle, bar not"))?;
            let cleared: Vec<UnityRoot> =
                v.iter().zip(&hide).map(|(x, &h)| if h { UnityRoot::ONE } else { *x }).collect();
            let res = build(&cleared).is_cocycle(s);
            ensure(res == bar, || format!("{s} {rc:?} (cleared): resolution {res}, bar {bar}"))?;
        }
        if rc.is_coboundary(s) {
            let w = oracle.witness(&pb, &lim()).map_err(|e| e.to_string())?;
            ensure(w.is_some(), || format!("{s} {rc:?}: resolution coboundary, bar not"))?;
        }
        count += 1;
    }
    Ok(count)
}

fn criteria_consistency() -> Check {
    let mut count = 0;
    for s in specs_up_to(9) {
        let o2 = CoboundaryOracle::new(s, 2, &lim()).map_err(|e| e.to_string())?;
        let o3 = CoboundaryOracle::new(s, 3, &lim()).map_err(|e| e.to_string())?;
        count += consistency_for(s, 2, |v| ResolutionCochain2 { a: v[0], b: v[1], c: v[2] }, &o2)?;
        count += consistency_for(s, 3, |v| ResolutionCochain3 { a: v[0], b: v[1], c: v[2], d: v[3] }, &o3)?;
    }
    // pullback2/pullback3 are what `pullback` dispatches to
    let s = GroupSpec::new(2, 2).unwrap();
    let rc = ResolutionCochain3 { a: UnityRoot::new(1, 2), b: UnityRoot::ONE, c: UnityRoot::ONE, d: UnityRoot::ONE };
    ensure(pullback3(s, &rc, &lim()).unwrap() == rc.pullback(s, &lim()).unwrap(), || "pullback3".into())?;
    let rc = ResolutionCochain2 { a: UnityRoot::ONE, b: UnityRoot::new(1, 2), c: UnityRoot::ONE };
    ensure(pullback2(s, &rc, &lim()).unwrap() == rc.pullback(s, &lim()).unwrap(), || "pullback2".into())?;
    Ok(format!("{count} resolution cochains"))
}

type Quad = [UnityRoot; 4];

fn quads(rs: &[QuasiBicharacter]) -> BTreeSet<Quad> {
    rs.iter().map(|r| [r.r11, r.r12, r.r21, r.r22]).collect()
}

fn braiding_completeness() -> Check {
    let mut total = 0;
    for s in specs_up_to(12) {
        for p in CocycleParams3::all(s) {
            let closed = solve_quasi_bicharacters(s, p).map_err(|e| e.to_string())?;
            let searched = hexagon_candidates(s, p, &lim()).map_err(|e| e.to_string())?;
            let (a, b) = (quads(&closed), quads(&searched));
            ensure(a.len() == closed.len(), || format!("{s} {p:?}: duplicate solutions"))?;
            ensure(a == b, || format!("{s} {p:?}: closed {} vs search {}", a.len(), b.len()))?;
            total += a.len();
        }
    }
    Ok(format!("{total} braidings"))
}

fn existence_shape() -> Check {
    let mut nonempty = 0;
    for s in specs_up_to(12) {
        for p in CocycleParams3::all(s) {
            if !hexagon_candidates(s, p, &lim()).map_err(|e| e.to_string())?.is_empty() {
                ensure(2 * p.a % s.m() == 0 && 2 * p.d % s.n() == 0, || format!("{s} {p:?}"))?;
                nonempty += 1;
            }
        }
    }
    Ok(format!("{nonempty} nonempty solution sets"))
}

fn symmetric_by_table(r: &QuasiBicharacter) -> bool {
    let s = &r.spec;
    s.elements().all(|x| s.elements().all(|y| (r.value(x, y) + r.value(y, x)).is_one()))
}

fn equivalences() -> Check {
    let mut cochains = 0;
    for s in specs_up_to(12) {
        for p in CocycleParams3::all(s) {
            let f = phi3(s, p, &lim()).map_err(|e| e.to_string())?;
            let mut tested = vec![f.clone()];
            // perturbed copies, so that both sides of the equivalence are exercised
            if s.order() > 1 {
                let x = [s.element_at(s.order() - 1), s.element_at(1), s.element_at(1)];
                let mut g: BarCochain = f.clone();
                g.set(&x, g.value(&x).unwrap() + UnityRoot::new(1, s.order() as u64)).unwrap();
                tested.push(g);
            }
            for g in tested {
                let pentagon = pentagon_failure(&g, &lim()).map_err(|e| e.to_string())?.is_none();
                let cocycle = is_cocycle_bar(&g, &lim()).map_err(|e| e.to_string())?;
                ensure(pentagon == cocycle, || format!("{s} {p:?}: pentagon {pentagon}, cocycle {cocycle}"))?;
                cochains += 1;
            }
        }
    }
    let mut braidings = 0;
    for s in specs_up_to(12) {
        for p in CocycleParams3::all(s) {
            for r in hexagon_candidates(s, p, &lim()).map_err(|e| e.to_string())? {
                let skew = is_skew_symmetric(&r).map_err(|e| e.to_string())?;
                ensure(skew == symmetric_by_table(&r), || format!("{s} {p:?} {r}"))?;
                braidings += 1;
            }
        }
    }
    Ok(format!("{cochains} cochains, {braidings} braidings"))
}

/// The classification report for `Z2 x Z2` assembled from the brute-force
/// hexagon search and table-level symmetry, without the closed-form solver.
fn brute_force_report(s: GroupSpec) -> ClassificationReport {
    let limits = lim();
    let params = CocycleParams3::all(s);
    let mut counts = Counts { monoidal: params.len(), admissible: 0, braided: 0, symmetric: 0 };
    let braided = params
        .iter()
        .map(|&p| {
            let solutions: Vec<BraidingEntry> = hexagon_candidates(s, p, &limits)
                .unwrap()
                .iter()
                .map(|r| BraidingEntry {
                    r11: r.r11,
                    r12: r.r12,
                    r21: r.r21,
                    r22: r.r22,
                    skew_symmetric: symmetric_by_table(r),
                })
                .collect();
            counts.braided += solutions.len();
            counts.symmetric += solutions.iter().filter(|e| e.skew_symmetric).count();
            counts.admissible += !solutions.is_empty() as usize;
            BraidedClass { params: p, empty: solutions.is_empty(), solutions }
        })
        .collect();
    ClassificationReport {
        group: s,
        monoidal_classes: params,
        braided,
        meta: Meta { tool: TOOL_NAME.into(), version: TOOL_VERSION.into(), limits, counts },
    }
}

fn run_cli(args: &[&str]) -> std::result::Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_vecg")).args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit {:?}: {}", out.status, String::from_utf8_lossy(&out.stderr)))?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn golden_classification() -> Check {
    let s = GroupSpec::new(2, 2).unwrap();
    let derived = brute_force_report(s);
    let derived_json = serde_json::to_string_pretty(&derived).unwrap() + "\n";
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(GOLDEN);
    if std::env::var_os("VECG_BLESS").is_some() {
        std::fs::write(&path, &derived_json).map_err(|e| e.to_string())?;
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    ensure(golden == derived_json, || "brute-force report differs from the golden file".into())?;

    let args = ["classify", "braided", "--m", "2", "--n", "2", "--json"];
    let first = run_cli(&args)?;
    let second = run_cli(&args)?;
    ensure(first == second, || "output differs between runs".into())?;
    ensure(first == golden, || "CLI output differs from the golden file".into())?;

    let report: ClassificationReport = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    ensure(report.monoidal_classes.len() == 8, || format!("{} monoidal classes", report.monoidal_classes.len()))?;
    let structures: usize = report.braided.iter().map(|c| c.solutions.len()).sum();
    ensure(structures == 64, || format!("{structures} braided structures"))?;
    ensure(report == classify_braided(s, &lim()).unwrap(), || "library report differs".into())?;
    Ok(format!("{} monoidal classes, {structures} braided structures", report.monoidal_classes.len()))
}

fn main() -> ExitCode {
    let checks: [Criterion; 10] = [
        (1, "floor identity", Some(BOUND_1), floor_identity),
        (2, "chain-map commutation", Some(BOUND_2), chain_maps),
        (3, "complex property", Some(BOUND_3), complex_property),
        (4, "cocycle verification", Some(BOUND_4), cocycle_verification),
        (5, "cohomology counts", Some(BOUND_5), cohomology_counts),
        (6, "resolution criteria", Some(BOUND_6), criteria_consistency),
        (7, "braiding completeness", Some(BOUND_7), braiding_completeness),
        (8, "existence shape", None, existence_shape),
        (9, "pentagon and symmetry", None, equivalences),
        (10, "golden classification", Some(BOUND_10), golden_classification),
    ];
    let mut failed = 0;
    for (id, name, bound, check) in checks {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, bound) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            (r, _) => r,
        };
        let limit = bound.map_or("none".to_string(), |b| format!("{b:?}"));
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS {name}: {detail} ({elapsed:.2?}, bound {limit})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name}: {why} ({elapsed:.2?}, bound {limit})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
