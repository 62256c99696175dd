//! `setfam`: construct named families, evaluate size formulas and bounds,
//! enumerate censuses, run theorem checks, and replicate the result
//! tables. Exit codes: 0 verified/ok, 1 counterexample, 2 inconclusive
//! (budget exhausted), 3 usage or input error.

mod manifest;
mod run;
mod suites;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use setfam_core::oracles::ReportStatus;

#[derive(Parser)]
#[command(name = "setfam", version, about = "Intersecting-family toolkit driver")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named family and write its JSON ({"n","k","sets"}).
    Construct(ConstructArgs),
    /// Evaluate the closed-form size of a named family.
    Size(FamilyArgs),
    /// Evaluate a named bound, threshold, or ladder value.
    Bound(BoundArgs),
    /// Enumerate a census under a budget and write the families found.
    Enumerate(EnumerateArgs),
    /// Run one theorem check and write its report.
    Verify(VerifyArgs),
    /// Run a named batch suite and write an aggregate report.
    Replicate(ReplicateArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    /// All k-sets through --center.
    Star,
    /// Block family H_u: --n --k --u.
    H,
    /// Two-block family J_i: --n --k --i.
    J,
    /// Core-and-tails family E_l: --n --k --l.
    E,
    /// Two disjoint s-blocks over [m]: --m --s.
    T2s,
    /// Largest (k-1)-uniform partner of t2s: --m --k --s.
    F2s,
}

#[derive(Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    u: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long, default_value_t = 1)]
    center: u32,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    /// Largest non-star size: --n --k.
    Hm,
    /// Largest size at diversity >= 2: --n --k.
    Hk,
    /// Diversity-threshold bound, real or integer --u: --n --k --u.
    Kz,
    /// Cross-partner ladder f(z): --m --k --s --z.
    FOfZ,
    /// Real root x of C(x,r) = size: --size --r.
    KkX,
    /// Shadow lower bound C(x,r-1): --size --r.
    KkShadow,
    /// Plain cross-intersecting sum bound: --n --a --b.
    CrossEasy,
    /// Refined cross-intersecting sum bound: --n --a --b --j.
    CrossJ,
    /// Member cap s+1 for minimal covering pairs: --s.
    Bollobas,
}

#[derive(Args)]
pub struct BoundArgs {
    #[arg(long, value_enum)]
    name: BoundName,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    z: Option<u32>,
    #[arg(long)]
    size: Option<u64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum EnumMode {
    /// Maximal intersecting families at (--n, --k).
    Maximal,
    /// Minimal covering-number-2 families of s-sets over [m]: --m --s.
    Tau2,
}

#[derive(Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    mode: EnumMode,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Collapse isomorphic families to one representative.
    #[arg(long)]
    dedup_iso: bool,
    /// Report only the census size, not the families.
    #[arg(long)]
    count_only: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum TheoremName {
    /// Diversity-threshold size bound: --n --k --u.
    Thm1,
    /// Diversity >= 2 size bound with tie classes: --n --k.
    Hk,
    /// Single-family maximal-extension bound: --family --msub.
    Thm4p1,
    /// Census classification at core size t: --n --k --t.
    Thm4p2,
    /// Threshold containment sweep: --n --k.
    Cor5,
    /// Exhaustive covering-pair maximum: --m --s --k.
    Lemma7,
    /// Randomized cross-intersecting bounds: --n --a --b --samples --seed.
    Cross,
}

#[derive(Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Node cap for the census search (default 10^7).
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Cap on families emitted.
    #[arg(long)]
    max_families: Option<u64>,
    /// Wall-clock cap in milliseconds (default 600000).
    #[arg(long)]
    budget_ms: Option<u64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: TheoremName,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    /// Sample count for randomized checks (default 10000).
    #[arg(long)]
    samples: Option<u64>,
    /// RNG seed; required for randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Family JSON input (thm4p1).
    #[arg(long)]
    family: Option<String>,
    /// Prescribed bar-1 subfamily JSON input (thm4p1).
    #[arg(long)]
    msub: Option<String>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<String>,
    /// Optional one-row CSV summary.
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    /// Closed-form sizes vs constructed cardinalities, k in {4,5}, n <= 12.
    Formulas,
    /// Small complete censuses: star bound ties and threshold bound runs.
    HmKz,
    /// Budgeted diversity >= 2 bound run at (9,4).
    Hk,
    /// Maximal-extension checks plus budgeted census classification.
    Thm4,
    /// Exhaustive covering-pair maxima at (8,3,4) and (9,3,5).
    Lemma7,
    /// Randomized cross-intersecting sweeps (requires --seed).
    Cross,
    /// Two-block chain difference table, k in {4..8}, n <= 40.
    Chains,
}

#[derive(Args)]
pub struct ReplicateArgs {
    #[arg(long, value_enum)]
    suite: SuiteName,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Report path; stdout when omitted.
    #[arg(long)]
    report: Option<String>,
    /// Optional CSV summary, one row per theorem run in the suite.
    #[arg(long)]
    csv: Option<String>,
}

pub fn exit_code(status: ReportStatus) -> i32 {
    match status {
        ReportStatus::Verified => 0,
        ReportStatus::Counterexample => 1,
        ReportStatus::Inconclusive => 2,
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let result = match cli.cmd {
        Cmd::Construct(args) => run::construct(args),
        Cmd::Size(args) => run::size(args),
        Cmd::Bound(args) => run::bound(args),
        Cmd::Enumerate(args) => run::enumerate(args),
        Cmd::Verify(args) => run::verify(args),
        Cmd::Replicate(args) => suites::replicate(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(3);
        }
    }
}
