use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use stackycovers_core::simple_cyclic::CharAssumption;
use stackycovers_core::strata::AmbientConvention;

#[derive(Debug, Parser)]
#[command(name = "stackycovers", version, about = "Classify moduli stacks of cyclic covers of projective spaces")]
pub struct Cli {
    /// Output format; defaults to json for single records, csv for tables and plain text for verify.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Assumption on the characteristic of the base field.
    #[arg(long = "char", value_enum, global = true, default_value_t = CharFlag::Unknown)]
    pub char_flag: CharFlag,
    /// Enumeration cap; overrides STACKYCOVERS_CAP.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharFlag {
    Zero,
    Large,
    Unknown,
}

impl From<CharFlag> for CharAssumption {
    fn from(c: CharFlag) -> Self {
        match c {
            CharFlag::Zero => CharAssumption::Zero,
            CharFlag::Large => CharAssumption::GreaterThanBound,
            CharFlag::Unknown => CharAssumption::Unknown,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ambient {
    Standard,
    Printed,
}

impl From<Ambient> for AmbientConvention {
    fn from(a: Ambient) -> Self {
        match a {
            Ambient::Standard => AmbientConvention::Standard,
            Ambient::Printed => AmbientConvention::Printed,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a single parameter tuple.
    Classify {
        #[command(subcommand)]
        target: ClassifyTarget,
    },
    /// Picard group presentations for H_{n,r,d} and its quotients.
    Pic {
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'r')]
        r: u64,
        #[arg(short = 'd')]
        d: u64,
    },
    /// Dimensions of the loci with extra automorphisms.
    Strata {
        #[command(subcommand)]
        which: StrataTarget,
    },
    /// Classify every tuple of a sweep file and emit a table.
    Table {
        #[arg(long)]
        sweep: PathBuf,
    },
    /// Check closed-form shortcuts against brute-force oracles.
    Verify {
        #[arg(long)]
        sweep: Option<PathBuf>,
        /// Restrict to these identities (repeatable).
        #[arg(long)]
        only: Vec<String>,
        #[cfg(feature = "mutation")]
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClassifyTarget {
    /// Simple cyclic covers of degree r of Pⁿ branched in degree rd.
    Simple {
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'r')]
        r: u64,
        #[arg(short = 'd')]
        d: u64,
    },
    /// Cyclic triple covers of P¹.
    Triple {
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
        /// Reject branch degrees below 4 instead of 3.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum StrataTarget {
    /// Points on P¹.
    P1 {
        #[arg(long)]
        rd: u64,
    },
    /// Plane curves of degree d.
    P2 {
        #[arg(short = 'd')]
        d: u64,
        #[arg(long, value_enum, default_value_t = Ambient::Standard)]
        ambient: Ambient,
    },
}
