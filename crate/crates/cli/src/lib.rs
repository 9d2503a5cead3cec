//! Command-line front end for `liefoliate`.
//!
//! [`run`] parses an argument list, dispatches and returns the exit status
//! together with the text for stdout and stderr, so the binary is a thin
//! wrapper and tests can drive the CLI in-process.

mod commands;
mod render;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{CatalogRecord, IwasawaReport, KillingReport, KillingSample, LieTripleCheck};

/// Environment variable overriding the sampling seed.
pub const SEED_VAR: &str = "LIEFOLIATE_SEED";

const SPACE_HELP: &str = "\
Space names use a flattened ASCII grammar, with ranks and series parameters
written out as numbers:

  SL5           SL_5(R)/SO_5          SL3(C), SL3(H)
  SOo(5,1)      real hyperbolic 5-space
  SOo(5,2)      SO^o_{5,2}/SO_5 SO_2  SO5(C), SO8(H), SOo(4,4)
  Sp3(R)        Sp_3(R)/U_3           Sp3(C), Sp(3,3), Sp(5,2)
  SU(3,3)       SU(5,2), SO7(H), SO6(H)
  E6(6) E6(2) E6(-14) E6(-26) E6(C)   E7(7), E8(-24), F4(-20), G2(2) ...

Display names such as `SL_5(R)/SO_5` are accepted as well. `catalog list`
prints every series with its ASCII template.

Exit status: 0 on success, 1 on a domain error (unknown space, invalid
subset, failed verification), 2 on a usage error. LIEFOLIATE_SEED sets the
seed for sampled matrices (decimal or 0x-prefixed hex).";

#[derive(Debug, Parser)]
#[command(name = "liefoliate", version, about = "Root systems, parabolic data and hyperpolar foliations of symmetric spaces", after_help = SPACE_HELP)]
pub struct Cli {
    /// Output format. `dot` is only available for Dynkin diagrams.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Restricted root systems and their Dynkin diagrams.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// The catalog of symmetric spaces.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Dimension data of the parabolic subalgebra attached to a subset of simple roots.
    Parabolic(SpacePhi),
    /// Horospherical decomposition M = F^s x E x N.
    Horospherical(SpacePhi),
    /// Hyperpolar homogeneous foliations.
    #[command(subcommand)]
    Foliations(FoliationsCmd),
    /// Computations in the matrix model of SL_{r+1}(R)/SO_{r+1}.
    #[command(subcommand)]
    Slmodel(SlmodelCmd),
    /// Run the invariant suites; exits 0 iff every check passes.
    Verify {
        #[arg(long, default_value = "all")]
        suite: liefoliate::verify::Suite,
    },
}

#[derive(Debug, clap::Args)]
pub struct FamilyRank {
    /// A, B, C, D, E6, E7, E8, F4, G2 or BC.
    #[arg(long)]
    pub family: liefoliate::Family,
    /// Rank; optional for the exceptional families.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum RootsysCmd {
    /// Roots, positive roots and simple roots.
    Show(FamilyRank),
    /// The Dynkin diagram.
    Dynkin(FamilyRank),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// Every series of the catalog.
    List,
    /// One space with its multiplicities.
    Show {
        #[arg(long)]
        space: String,
    },
}

#[derive(Debug, clap::Args)]
pub struct SpacePhi {
    #[arg(long)]
    pub space: String,
    /// Simple root indices, e.g. `1,3`; `-` for the empty set. All subsets when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum FoliationsCmd {
    /// One representative per congruence class.
    Enumerate {
        #[arg(long)]
        space: String,
        /// Keep the foliation with a single leaf.
        #[arg(long)]
        include_trivial: bool,
        /// Only classes of this codimension.
        #[arg(long)]
        codim: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SlmodelCmd {
    /// Factor g = k a n. Samples a random element when no matrix is given.
    Iwasawa {
        #[arg(long)]
        rank: Option<usize>,
        /// JSON rows, e.g. `[[2,0],[0,0.5]]`.
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Killing form from ad-traces against 2(r+1) tr(XY).
    Killing {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// JSON rows of X; needs `--y`.
        #[arg(long, requires = "y")]
        x: Option<String>,
        #[arg(long, requires = "x")]
        y: Option<String>,
    },
    /// Check [[S,S],S] in S for a span of symmetric matrices.
    CheckLieTriple {
        /// JSON list of matrices, each a list of rows.
        #[arg(long)]
        basis: String,
    },
    /// Orbit of a point of the upper half-plane under K, A or N.
    Halfplane {
        #[arg(long)]
        orbit: liefoliate::slmodel::OrbitKind,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        to: f64,
        /// Base point `re,im`.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        base: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) enum Failure {
    Usage(String),
    Domain(String),
}

impl From<liefoliate::Error> for Failure {
    fn from(e: liefoliate::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Output of a successful command; `status` is nonzero only for `verify`.
pub(crate) struct Rendered {
    pub text: String,
    pub status: i32,
}

/// Runs with the seed taken from `LIEFOLIATE_SEED`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let seed = std::env::var(SEED_VAR).ok();
    run_with_seed(args, seed.as_deref())
}

/// Runs with an explicit seed string in place of the environment.
pub fn run_with_seed<I, T>(args: I, seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = parse_seed(seed).and_then(|seed| commands::dispatch(&cli, seed));
    match result {
        Ok(r) => Outcome {
            status: r.status,
            stdout: r.text,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => Outcome {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn parse_seed(s: Option<&str>) -> Result<u64, Failure> {
    let Some(s) = s.map(str::trim) else {
        return Ok(liefoliate::slmodel::DEFAULT_SEED);
    };
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| Failure::Usage(format!("{SEED_VAR}=`{s}` is not an unsigned integer")))
}
