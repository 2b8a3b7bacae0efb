//! Command-line driver. Every subcommand writes one JSON document to stdout
//! and diagnostics to stderr; exit status 0 on success, 1 when a
//! verification fails, 2 on a usage error.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scalar_algebra::{parse_rat, Rat};

mod commands;
pub mod json;
pub mod suites;

/// What a run produced; `main` prints it and exits with `code`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "dualpairs", version, about = "Exact and numerical checks for compact dual pairs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derived constants of a dual pair.
    PairInfo {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// The polynomials of the Fourier pair for (1+iy)^{-a}(1-iy)^{-b}.
    Poly {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_enum, default_value = "pair", allow_hyphen_values = true)]
        branch: BranchArg,
    },
    /// Quadrature against the closed-form Fourier pairs.
    FourierCheck {
        #[arg(long, allow_hyphen_values = true)]
        amin: i64,
        #[arg(long, allow_hyphen_values = true)]
        amax: i64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_delimiter = ',', value_parser = rat_arg, allow_hyphen_values = true,
              default_value = "1/2,-1/2,1,-1,2,-2")]
        xi: Vec<Rat>,
        /// Also pair the distributional identity with test functions for
        /// `a, b >= PAIRING_MIN`, `a + b <= 0`.
        #[arg(long, allow_hyphen_values = true)]
        pairing_min: Option<i64>,
    },
    /// Dimensions and homogeneity degrees of the nilpotent orbits.
    OrbitDims {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// The Howe correspondent of a Harish-Chandra parameter for (U_l, U_{l'}).
    Correspond {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        lprime: usize,
        #[arg(long, value_delimiter = ',', value_parser = rat_arg, allow_hyphen_values = true)]
        mu: Vec<Rat>,
    },
    /// Weyl dimension of a highest weight, or the dimension of the
    /// representation of U_{l'} attached to a Harish-Chandra parameter.
    Dim {
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_delimiter = ',', value_parser = rat_arg, allow_hyphen_values = true)]
        lambda: Option<Vec<Rat>>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        lprime: Option<usize>,
        #[arg(long, value_delimiter = ',', value_parser = rat_arg, allow_hyphen_values = true)]
        mu: Option<Vec<Rat>>,
    },
    /// Constancy of |S(μ)| / dim Π' over admissible μ.
    MultOne {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        lprime: usize,
        #[arg(long, default_value_t = 6)]
        max_mu: u32,
    },
    /// The full batch of exact and seeded suites.
    Identities {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cocycle identities on random unitary and symplectic pairs.
    CocycleCheck {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The intertwining distribution for (O_1, Sp_{2n}(R)).
    ToyO1sp {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        sign: SignArg,
    },
    /// The closed-form intertwining distribution for (U_l, U_{0,l'}) at a point.
    EvalDistribution {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        lprime: usize,
        #[arg(long, value_delimiter = ',', value_parser = rat_arg, allow_hyphen_values = true)]
        mu: Vec<Rat>,
        /// l' x l matrix as JSON rows; entries are numbers or [re, im].
        #[arg(long)]
        w: String,
    },
}

#[derive(Args, Debug, Clone)]
struct PairArgs {
    #[arg(long, value_enum)]
    algebra: Option<AlgebraArg>,
    /// The compact member; must agree with --algebra when both are given.
    #[arg(long, value_enum)]
    g: Option<GroupArg>,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    dprime: usize,
    #[arg(long, requires = "q")]
    p: Option<usize>,
    #[arg(long, requires = "p")]
    q: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlgebraArg {
    #[value(name = "R")]
    R,
    #[value(name = "C")]
    C,
    #[value(name = "H")]
    H,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GroupArg {
    #[value(name = "O")]
    O,
    #[value(name = "U")]
    U,
    #[value(name = "Sp")]
    Sp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BranchArg {
    #[value(name = "2")]
    Plus,
    #[value(name = "-2")]
    Minus,
    #[value(name = "q")]
    Q,
    #[value(name = "pair")]
    Pair,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SignArg {
    Plus,
    Minus,
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s.trim()).map_err(|e| e.to_string())
}

/// A successful command: the document and whether every check in it passed.
struct Output {
    value: serde_json::Value,
    passed: bool,
}

impl Output {
    fn ok(value: serde_json::Value) -> Self {
        Output { value, passed: true }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.exit_code() == 0 {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let result = commands::dispatch(cli.command);
    let elapsed = start.elapsed().as_secs_f64();
    match result {
        Ok(out) => {
            let mut stderr = format!("elapsed {elapsed:.3} s\n");
            if !out.passed {
                stderr.push_str("verification failed\n");
            }
            Outcome { code: if out.passed { 0 } else { 1 }, stdout: format!("{}\n", out.value), stderr }
        }
        Err(msg) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
