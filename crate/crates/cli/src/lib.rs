//! Command-line front end for the `codim4-core` toolkit.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};

use codim4_core::groebner::{GbOptions, ModuleOrder};

use crate::commands::{FamilyChoice, Settings};
pub use crate::error::CliError;
pub use crate::report::CommandReport;

#[derive(Debug, Parser)]
#[command(name = "codim4", version, about = "Gorenstein codimension four resolutions and their spinors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of S-pair reductions per Gröbner basis.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// Print only the emitted document, or the verdict.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Pot,
    Top,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal free resolution of an ideal.
    Resolve {
        file: String,
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, value_enum, default_value = "pot")]
        order: OrderArg,
    },
    /// Resolve an ideal and bring the resolution to standard form.
    Symmetrize {
        file: String,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Check a resolution given by `L`, `M1` and optionally `Q`.
    Verify { file: String },
    /// Cramer spinors of a resolution.
    Spinors {
        file: String,
        #[arg(long)]
        table: bool,
        #[arg(long)]
        census: bool,
        /// Use this many seeded spinor sets instead of all of them.
        #[arg(long)]
        subsets: Option<usize>,
    },
    /// Test whether every nonzero spinor lies in the ideal.
    Conjecture {
        file: String,
        #[arg(long)]
        subsets: Option<usize>,
    },
    /// Certify exactness through ranks and codimension of minors.
    Exactness {
        file: String,
        #[arg(long, default_value_t = 4)]
        subsets: usize,
    },
    /// Tangent dimension of the isotropic Grassmannian at the base point.
    Tangent {
        #[arg(long)]
        k: usize,
    },
    /// Emit a resolution from one of the built-in families.
    Family {
        #[command(subcommand)]
        which: FamilyCommand,
    },
    /// Solve `M1·v = e_i·L_j − e_j·L_i`.
    Lift {
        file: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Koszul complex of `x1^a, x2^b, x3^c, x4^d`.
    Koszul {
        #[arg(long, value_delimiter = ',', default_value = "1,1,1,1")]
        degrees: Vec<u32>,
    },
    /// Pfaffian hypersurface from a generic skew matrix.
    Pfh {
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Extrasymmetric Tom format.
    Tom {
        /// A nonzero rational value for `lam`; a variable when omitted.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Rolling factors format.
    Rolling,
    /// The small isotropic Grassmannian example.
    Ogr24,
}

pub fn run(cli: &Cli) -> Result<CommandReport, CliError> {
    let mut gb = GbOptions::default();
    if let Some(limit) = cli.limit {
        gb.limit = limit;
    }
    let s = Settings { seed: cli.seed, gb };
    match &cli.command {
        Command::Resolve { file, ideal, order } => {
            let order = match order {
                OrderArg::Pot => ModuleOrder::Pot,
                OrderArg::Top => ModuleOrder::Top,
            };
            commands::resolve(&commands::load(file)?, ideal.as_deref(), order, s)
        }
        Command::Symmetrize { file, ideal } => commands::symmetrize_cmd(&commands::load(file)?, ideal.as_deref(), s),
        Command::Verify { file } => commands::verify(&commands::load(file)?, s),
        Command::Spinors { file, table, census, subsets } => {
            commands::spinors(&commands::load(file)?, *table, *census, *subsets, s)
        }
        Command::Conjecture { file, subsets } => commands::conjecture(&commands::load(file)?, *subsets, s),
        Command::Exactness { file, subsets } => commands::exactness(&commands::load(file)?, *subsets, s),
        Command::Tangent { k } => commands::tangent(*k),
        Command::Family { which } => {
            let choice = match which {
                FamilyCommand::Koszul { degrees } => FamilyChoice::Koszul { degrees: degrees.clone() },
                FamilyCommand::Pfh { l } => FamilyChoice::Pfh { l: *l },
                FamilyCommand::Tom { lambda } => FamilyChoice::Tom { lambda: lambda.clone() },
                FamilyCommand::Rolling => FamilyChoice::Rolling,
                FamilyCommand::Ogr24 => FamilyChoice::Ogr24,
            };
            commands::family(&choice, s)
        }
        Command::Lift { file, i, j } => commands::lift(&commands::load(file)?, *i, *j, s),
    }
}
