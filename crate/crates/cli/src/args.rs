use cayley_walks::oracles::DEFAULT_MAX_STATES;
use cayley_walks::verify::Scope;
use cayley_walks::Rat;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Count walks on regular trees and weighted Dyck paths exactly.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or validation
/// error, 3 enumeration refused by --max-states.
#[derive(Debug, Parser)]
#[command(name = "cayley-walks", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format for walks and dyck.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Keep only lengths n with n - i even.
    #[arg(long, global = true, overrides_with = "no_parity_filter")]
    pub parity_filter: bool,

    /// Emit every length, including those that are forced to zero.
    #[arg(long, global = true, overrides_with = "parity_filter")]
    pub no_parity_filter: bool,

    /// Ceiling on the number of states an exhaustive oracle may visit.
    #[arg(long, default_value_t = DEFAULT_MAX_STATES, global = true)]
    pub max_states: u64,
}

impl GlobalOpts {
    pub fn parity(&self, default: bool) -> bool {
        if self.parity_filter {
            true
        } else if self.no_parity_filter {
            false
        } else {
            default
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Walks of length n = 0..=n-max on the m-regular tree ending at distance i.
    Walks {
        #[arg(short, long)]
        m: u32,
        #[arg(short, long, default_value_t = 0)]
        i: usize,
        #[arg(short, long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = WalkMethod::Dp)]
        method: WalkMethod,
    },
    /// Poids-weighted Dyck paths of length n = 0..=n-max ending at height i.
    #[command(allow_negative_numbers = true)]
    Dyck {
        /// Up-step weight.
        c1: Rat,
        /// Down-step weight away from the axis.
        c2: Rat,
        /// Down-step weight landing on the axis.
        c3: Rat,
        #[arg(short, long, default_value_t = 0)]
        i: usize,
        #[arg(short, long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = DyckMethod::Dp)]
        method: DyckMethod,
    },
    /// Cross-check recurrence, generating functions and oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyScope::All)]
        scope: VerifyScope,
        #[arg(short, long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
    },
    /// OEIS b-file of A_m(i, i + 2k), k = 0..count.
    Bfile {
        #[arg(short, long)]
        m: u32,
        #[arg(short, long, default_value_t = 0)]
        i: usize,
        #[arg(short, long)]
        count: usize,
        /// Index of the first line.
        #[arg(short, long, default_value_t = 0)]
        start: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WalkMethod {
    Dp,
    Gf,
    Tree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DyckMethod {
    Dp,
    Gf,
    Enum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyScope {
    Tree,
    Dyck,
    Freegroup,
    All,
}

impl From<VerifyScope> for Scope {
    fn from(s: VerifyScope) -> Self {
        match s {
            VerifyScope::Tree => Scope::Tree,
            VerifyScope::Dyck => Scope::Dyck,
            VerifyScope::Freegroup => Scope::FreeGroup,
            VerifyScope::All => Scope::All,
        }
    }
}
