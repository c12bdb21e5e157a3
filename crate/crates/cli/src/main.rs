//! `catmon`: command-line front end for universal monoids of finite
//! categories, interval monoids, spindles and floating homotopy groups.
//!
//! Exit status is 0 on success, 1 when a property check answers no, and 2
//! on unreadable or invalid input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "catmon", version, about = "Universal monoids of finite categories")]
pub struct Cli {
    /// Output format; `json` prints each report as one object.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse an input file and summarize it.
    Validate {
        file: PathBuf,
        /// Category the functor file refers to.
        #[arg(long)]
        category: Option<PathBuf>,
        /// Source poset of a map file.
        #[arg(long)]
        source: Option<PathBuf>,
        /// Target poset of a map file.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Normal form of a word in the universal monoid.
    Nf {
        category: PathBuf,
        word: String,
        /// Print every rewriting step.
        #[arg(long)]
        trace: bool,
    },
    /// Product of two elements.
    Mult { category: PathBuf, x: String, y: String },
    /// Greatest common divisor of a family of elements.
    Gcd {
        category: PathBuf,
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Least common multiple of two standard generators.
    Lcm {
        category: PathBuf,
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Verify that a normal form is greedy.
    Greedy { category: PathBuf, word: String },
    /// Property checks.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Barycentric subdivision of a complex, as a poset file.
    Barycentric { complex: PathBuf },
    /// Chain complex of a poset, as a complex file.
    ChainComplex { poset: PathBuf },
    /// Floating homotopy group of a complex.
    Homotopy { complex: PathBuf },
    /// Compare the two free-rank computations for the interval monoid of a poset.
    CrossCheck { poset: PathBuf },
    /// Spindles of a poset.
    Spindle {
        #[command(subcommand)]
        what: SpindleCommand,
    },
    /// Hom-set separation test for embedding the universal monoid in a group.
    EmbedCheck {
        category: PathBuf,
        /// Functor file; the trivial functor when omitted.
        #[arg(long)]
        functor: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Presented monoids.
    Monoid {
        #[command(subcommand)]
        what: MonoidCommand,
    },
    /// Group presentations.
    Present {
        #[command(subcommand)]
        what: PresentCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Conicality, cancellativity and gcds of a category.
    Category { category: PathBuf },
    /// Whether the interval monoid of a poset is a gcd-monoid.
    GcdMonoid { poset: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum SpindleCommand {
    Detect {
        poset: PathBuf,
        u: String,
        v: String,
    },
    /// The spindle category, as a category file.
    Category {
        poset: PathBuf,
        u: String,
        v: String,
    },
    /// Its monoid presentation, as a monoid file.
    Presentation {
        poset: PathBuf,
        u: String,
        v: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum MonoidCommand {
    /// The congruence class of a word.
    Class {
        monoid: PathBuf,
        word: String,
    },
    Equal {
        monoid: PathBuf,
        u: String,
        v: String,
    },
    Atoms {
        monoid: PathBuf,
    },
    /// Common right multiple; with three words, the full 3-Ore report.
    Crm {
        monoid: PathBuf,
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Check the embedding of the six-generator example into a free monoid.
    M6 {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum PresentCommand {
    /// Group presentation of the universal group of a category.
    UniversalGroup { category: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            match cli.format {
                OutputFormat::Text => print!("{}", report.text),
                OutputFormat::Json => println!("{}", report.json),
            }
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
