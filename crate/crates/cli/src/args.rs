use clap::{Args, Parser, Subcommand};

use vecg_core::{GroupElement, GroupSpec, Limits, UnityRoot};

#[derive(Parser, Debug)]
#[command(
    name = "vecg",
    version,
    about = "Monoidal and braided monoidal structures on Vec_G for G = Z_m x Z_n"
)]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest |G| accepted by degree-3 brute force.
    #[arg(long, global = true, default_value_t = Limits::default().max_order)]
    pub max_order: usize,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order,
            ..Limits::default()
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate monoidal or braided monoidal structures.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Evaluate or check the representative 3-cocycles.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// H^2 or H^3 of G with coefficients in Q/Z.
    Cohomology {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Count classes of the representatives with the coboundary oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Check that the chain maps commute with the differentials.
    #[command(subcommand)]
    Chainmap(ChainmapCmd),
    /// Solve for or check quasi-bicharacters.
    #[command(subcommand)]
    Braiding(BraidingCmd),
}

#[derive(Subcommand, Debug)]
pub enum ClassifyCmd {
    Monoidal(GroupArgs),
    Braided(GroupArgs),
}

#[derive(Subcommand, Debug)]
pub enum CocycleCmd {
    /// Value of Phi_(a,b,d) at (x, y, z).
    Eval {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = parse_pair)]
        x: (i64, i64),
        #[arg(long, value_parser = parse_pair)]
        y: (i64, i64),
        #[arg(long, value_parser = parse_pair)]
        z: (i64, i64),
    },
    /// Check the cocycle and pentagon identities, for one triple or all of them.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, requires_all = ["b", "d"])]
        a: Option<i64>,
        #[arg(long, requires_all = ["a", "d"])]
        b: Option<i64>,
        #[arg(long, requires_all = ["a", "b"])]
        d: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ChainmapCmd {
    /// Product chain maps, degrees 1 to 3.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Cyclic chain maps (n = 1), degrees 1 to 5.
    VerifyCyclic {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 5)]
        degree: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum BraidingCmd {
    /// All quasi-bicharacters for Phi_(a,b,d).
    Solve {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check the hexagon identities for a given quadruple.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// r11,r12,r21,r22 as p/q values.
        #[arg(long, value_parser = parse_quad)]
        r: [UnityRoot; 4],
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct GroupArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
}

impl GroupArgs {
    pub fn spec(&self) -> vecg_core::Result<GroupSpec> {
        GroupSpec::new(self.m, self.n)
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ParamArgs {
    #[arg(long)]
    pub a: i64,
    #[arg(long)]
    pub b: i64,
    #[arg(long)]
    pub d: i64,
}

/// `i,j` or a bare `i`.
fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once(',') {
        Some((i, j)) => Ok((parse(i)?, parse(j)?)),
        None => Ok((parse(s)?, 0)),
    }
}

fn parse_quad(s: &str) -> Result<[UnityRoot; 4], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected four comma-separated values, got {}", parts.len()));
    }
    let mut out = [UnityRoot::ONE; 4];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|e: vecg_core::Error| e.to_string())?;
    }
    Ok(out)
}

pub fn element(spec: GroupSpec, (i, j): (i64, i64)) -> GroupElement {
    spec.element(i, j)
}
