//! `ola`: command-line front end for the 𝒪𝓛𝒜 combinatorics engine.
//!
//! Every invocation prints one JSON document on stdout:
//! `{"value": …, "diagnostics": {…}}`. Failures print
//! `{"error": {"kind": …, "message": …}}` on stderr and exit with 1 (parse),
//! 2 (precondition) or 3 (resource bound).

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ola_core::{Error, LieFlavor};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ola", version, about = "Exact combinatorics for the category OLA of sl(∞), o(∞), sp(∞)")]
struct Cli {
    /// Largest symmetric-group window for Kazhdan–Lusztig computations.
    #[arg(long, global = true, env = "OLA_MAX_WINDOW", default_value_t = 8)]
    max_window: usize,
    /// Entry bound for each memo table.
    #[arg(long, global = true, env = "OLA_CACHE_LIMIT", default_value_t = 1 << 20)]
    cache_limit: usize,
    /// Largest number of weights visited by an order search.
    #[arg(long, global = true, env = "OLA_MAX_STATES", default_value_t = 2_000_000)]
    max_states: usize,
    #[command(subcommand)]
    command: Command,
}

/// A weight-consuming command's flavor.
#[derive(Args, Clone)]
struct FlavorArg {
    /// Lie algebra: sl, o or sp.
    #[arg(long)]
    flavor: LieFlavor,
}

#[derive(Subcommand)]
enum Command {
    /// Kostka number K(shape, content).
    Kostka {
        /// Shape, e.g. "[2,1]".
        #[arg(long)]
        mu: String,
        /// Content, e.g. "1,1,1".
        #[arg(long)]
        content: String,
        /// Also count tableaux directly and report both.
        #[arg(long)]
        oracle: bool,
    },
    /// Weight multiplicity c_k(γ) of the k-th layer module.
    CCoeff {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Kazhdan–Lusztig polynomial P_{x,w}.
    Kl {
        /// One-line notation, e.g. "[1,3,2,4]".
        #[arg(long)]
        x: String,
        #[arg(long)]
        w: String,
        /// Also run the R-polynomial oracle and report both.
        #[arg(long)]
        oracle: bool,
    },
    /// [M(λ):L(μ)] in a product of gl(n) factors: entries "a,b,c;d,e".
    Verma {
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Stable multiplicity m(λ, μ).
    StableMult {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Evaluate on windows this many positions larger than minimal.
        #[arg(long, default_value_t = 0)]
        extra: usize,
    },
    /// Standard multiplicity [W(λ):L(ν)].
    StandardMult {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Standard filtration multiplicities of the injective hull of L(μ).
    InjFiltration {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Constituents of the k-th canonical layer of W(λ) supported in the given windows.
    Layer {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long)]
        k: u32,
        /// Per-chain support windows for ν, e.g. "2,2" (default: support of λ, at least 1).
        #[arg(long)]
        windows: Option<String>,
    },
    /// μ ≤_fin λ.
    LeqFin {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
    },
    /// μ⁺_fin = {λ : μ ≤_fin λ}.
    FinUpSet {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// μ ≤_inf λ, with a witness chain.
    LeqInf {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        /// Largest number of γ-steps (default: the degree gap).
        #[arg(long)]
        max_depth: Option<u32>,
    },
    /// The interval {κ : μ ≤_inf κ ≤_inf λ}.
    Interval {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        /// Search on windows this many positions larger than needed.
        #[arg(long, default_value_t = 0)]
        widen: usize,
    },
    /// Block label of a weight.
    Block {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Degree d(λ).
    Degree {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Whether a weight is 𝔟-dominant.
    Dominant {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Primitive-ideal label of L(λ) for a dominant sl weight.
    Annihilator {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
    },
    /// A weight whose simple module has annihilator I(x, 0, Yl, Yr).
    WeightFromLabel {
        #[command(flatten)]
        flavor: FlavorArg,
        #[arg(long)]
        x: u32,
        /// Partition, e.g. "[2,1]".
        #[arg(long, default_value = "[]")]
        yl: String,
        #[arg(long, default_value = "[]")]
        yr: String,
        /// The x non-integral parameters a_i, e.g. "1/2,1/3".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        a: String,
    },
    /// Run the oracle-agreement and acceptance suite.
    Selftest {
        /// Run a single criterion (1-10).
        #[arg(long)]
        criterion: Option<u8>,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 1,
        Error::Precondition(_) => 2,
        Error::ResourceBound(_) => 3,
    }
}

fn kind(err: &Error) -> &'static str {
    match err {
        Error::Parse(_) => "parse",
        Error::Precondition(_) => "precondition",
        Error::ResourceBound(_) => "resource_bound",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            println!("{}", out.document);
            ExitCode::from(out.code)
        }
        Err(err) => {
            eprintln!("{}", json!({"error": {"kind": kind(&err), "message": err.to_string()}}));
            ExitCode::from(exit_code(&err))
        }
    }
}
