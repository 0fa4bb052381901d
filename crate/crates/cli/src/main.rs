mod args;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;
use serde_json::json;

use args::{element, BraidingCmd, ChainmapCmd, Cli, ClassifyCmd, CocycleCmd, Command};
use vecg_core::braiding::{hexagon_failure, is_skew_symmetric, pentagon_failure, solve_quasi_bicharacters, QuasiBicharacter};
use vecg_core::chain_map::{verify_chain_map_with, ChainMapKind};
use vecg_core::classify::{classify_braided, classify_monoidal, ClassificationReport};
use vecg_core::cocycle::{cocycle_defect, cohomology_group, fmt_args, phi3};
use vecg_core::{CocycleParams3, Error, Limits};

/// A finished command: what to print, and whether every check passed.
struct Outcome {
    text: String,
    json: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: impl Serialize) -> Outcome {
        Outcome {
            text,
            json: render(&json),
            passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = cli.limits();
    match run(&cli.command, &limits) {
        Ok(out) => {
            let body = if cli.json {
                out.json
            } else {
                out.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command, limits: &Limits) -> vecg_core::Result<Outcome> {
    match command {
        Command::Classify(ClassifyCmd::Monoidal(g)) => {
            let spec = g.spec()?;
            let classes: Vec<CocycleParams3> = classify_monoidal(spec).iter().map(|c| c.params).collect();
            let mut text = format!("{} monoidal classes on {spec}\n", classes.len());
            for p in &classes {
                text.push_str(&format!("  a={} b={} d={}\n", p.a, p.b, p.d));
            }
            Ok(Outcome::ok(
                text.trim_end().to_string(),
                json!({ "group": spec, "monoidal_classes": classes }),
            ))
        }
        Command::Classify(ClassifyCmd::Braided(g)) => {
            let report = classify_braided(g.spec()?, limits)?;
            Ok(Outcome::ok(braided_text(&report), &report))
        }
        Command::Cocycle(CocycleCmd::Eval { group, params, x, y, z }) => {
            let spec = group.spec()?;
            let p = CocycleParams3::new(spec, params.a, params.b, params.d)?;
            let (x, y, z) = (element(spec, *x), element(spec, *y), element(spec, *z));
            let v = p.eval(x, y, z);
            Ok(Outcome::ok(
                v.to_string(),
                json!({ "params": p, "args": [x.to_string(), y.to_string(), z.to_string()], "value": v }),
            ))
        }
        Command::Cocycle(CocycleCmd::Verify { group, a, b, d }) => {
            let spec = group.spec()?;
            let all = match (a, b, d) {
                (Some(a), Some(b), Some(d)) => vec![CocycleParams3::new(spec, *a, *b, *d)?],
                _ => CocycleParams3::all(spec),
            };
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            let mut passed = true;
            for p in all {
                let phi = phi3(spec, p, limits)?;
                let cocycle = cocycle_defect(&phi, limits)?;
                let pentagon = pentagon_failure(&phi, limits)?;
                let ok = cocycle.is_none() && pentagon.is_none() && phi.is_normalized();
                passed &= ok;
                let mut line = format!(
                    "a={} b={} d={}: {}",
                    p.a,
                    p.b,
                    p.d,
                    if ok { "PASS" } else { "FAIL" }
                );
                if let Some((t, v)) = &cocycle {
                    line.push_str(&format!("; delta = {v} at {}", fmt_args(t)));
                }
                if let Some(t) = &pentagon {
                    line.push_str(&format!("; pentagon fails at {}", fmt_args(t)));
                }
                lines.push(line);
                rows.push(json!({
                    "params": p,
                    "cocycle": cocycle.is_none(),
                    "pentagon": pentagon.is_none(),
                    "normalized": phi.is_normalized(),
                    "counterexample": cocycle.map(|(t, _)| fmt_args(&t)).or(pentagon.map(|t| fmt_args(&t))),
                }));
            }
            Ok(Outcome {
                text: lines.join("\n"),
                json: render(&json!({ "group": spec, "results": rows })),
                passed,
            })
        }
        Command::Cohomology { group, degree, oracle } => {
            let report = cohomology_group(group.spec()?, *degree, *oracle, limits)?;
            let passed = report.oracle_confirms().unwrap_or(true);
            Ok(Outcome {
                text: report.to_string(),
                json: render(&report),
                passed,
            })
        }
        Command::Chainmap(cmd) => {
            let (group, degree, kind) = match cmd {
                ChainmapCmd::Verify { group, degree } => (group, degree, ChainMapKind::Product),
                ChainmapCmd::VerifyCyclic { group, degree } => (group, degree, ChainMapKind::Cyclic),
            };
            let report = verify_chain_map_with(kind, group.spec()?, *degree, limits)?;
            Ok(Outcome {
                text: report.to_string(),
                json: render(&report),
                passed: report.passed(),
            })
        }
        Command::Braiding(BraidingCmd::Solve { group, params }) => {
            let spec = group.spec()?;
            let p = CocycleParams3::new(spec, params.a, params.b, params.d)?;
            let sols = solve_quasi_bicharacters(spec, p)?;
            let mut text = format!("{} quasi-bicharacters for a={} b={} d={}", sols.len(), p.a, p.b, p.d);
            let mut rows = Vec::new();
            for r in &sols {
                let skew = is_skew_symmetric(r)?;
                text.push_str(&format!("\n  {r}{}", if skew { "  symmetric" } else { "" }));
                rows.push(json!({
                    "r11": r.r11, "r12": r.r12, "r21": r.r21, "r22": r.r22,
                    "skew_symmetric": skew,
                }));
            }
            Ok(Outcome::ok(text, json!({ "group": spec, "params": p, "solutions": rows })))
        }
        Command::Braiding(BraidingCmd::Verify { group, params, r }) => {
            let spec = group.spec()?;
            let p = CocycleParams3::new(spec, params.a, params.b, params.d)?;
            let q = QuasiBicharacter::candidate(spec, p, *r);
            let failure = hexagon_failure(&q, limits)?;
            let text = match &failure {
                None => format!("PASS {q}"),
                Some(f) => format!("FAIL {q}: {f}"),
            };
            Ok(Outcome {
                text,
                json: render(&json!({
                    "group": spec,
                    "params": p,
                    "r": q.values(),
                    "hexagon": failure.is_none(),
                    "counterexample": failure,
                })),
                passed: failure.is_none(),
            })
        }
    }
}

/// Pretty JSON in field declaration order.
fn render(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn braided_text(report: &ClassificationReport) -> String {
    let c = &report.meta.counts;
    let mut out = format!(
        "{}: {} monoidal classes, {} admit braidings, {} braided structures ({} symmetric)\n",
        report.group, c.monoidal, c.admissible, c.braided, c.symmetric
    );
    for class in &report.braided {
        let p = class.params;
        out.push_str(&format!("a={} b={} d={}: ", p.a, p.b, p.d));
        if class.empty {
            out.push_str("none\n");
            continue;
        }
        out.push_str(&format!("{}\n", class.solutions.len()));
        for s in &class.solutions {
            out.push_str(&format!(
                "  r11={} r12={} r21={} r22={}{}\n",
                s.r11,
                s.r12,
                s.r21,
                s.r22,
                if s.skew_symmetric { "  symmetric" } else { "" }
            ));
        }
    }
    out.trim_end().to_string()
}
