//! File formats and the `pimsner` command-line front end.

pub mod commands;
pub mod error;
pub mod formats;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::Report;
pub use error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Exact crossed-product, fusion-graph and K-theory computations for finite
/// group actions.
#[derive(Debug, Parser)]
#[command(name = "pimsner", version)]
pub struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, exponent and conjugacy classes of a group.
    GroupInfo {
        /// `builtin:NAME` (C6, D4, S3, V4, ...) or a group file.
        group: String,
    },
    /// Validate a representation and report its character.
    RepCheck {
        #[arg(long)]
        group: String,
        /// Rep file, `fixture:sigma`, `trivial`, `regular` or `irrep:K`.
        #[arg(long)]
        rep: String,
        /// Optional character table for multiplicities.
        #[arg(long)]
        table: Option<String>,
    },
    /// Fusion matrix `B_ik = ⟨χ_i, χ_ρ χ_k⟩`.
    Fusion {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        /// Character-table file or `builtin:NAME`.
        #[arg(long)]
        table: String,
    },
    /// Corner dimensions of the crossed-product correspondence.
    Corners {
        #[arg(long)]
        group: String,
        #[arg(long)]
        rep: String,
        #[arg(long)]
        table: String,
    },
    /// K-theory of the graph algebra of an incidence matrix.
    KtheoryGraph {
        /// Matrix file or `fixture:b`.
        #[arg(long)]
        matrix: String,
        /// Also emit the powers B, B², ..., B^k.
        #[arg(long)]
        iterates: Option<usize>,
    },
    /// K-theory for a bundle of class `n + mλ` over an even sphere.
    KtheorySphere {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Fusion graph and K-theory of a homogeneous bundle `G ×_H V`.
    Homogeneous {
        #[arg(long)]
        group: String,
        /// Generators of `H`, as element indices of `G`.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        subgroup_gens: Vec<usize>,
        /// Module over `H`; matrix keys are element indices of `G`.
        #[arg(long)]
        module: String,
        /// Character table of `H`: file keyed by element indices of `G`, or
        /// `builtin:NAME` when `H` has that exact table.
        #[arg(long)]
        table: String,
    },
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::GroupInfo { group } => commands::group_info(group),
        Command::RepCheck { group, rep, table } => commands::rep_check(group, rep, table.as_deref()),
        Command::Fusion { group, rep, table } => commands::fusion(group, rep, table),
        Command::Corners { group, rep, table } => commands::corners(group, rep, table),
        Command::KtheoryGraph { matrix, iterates } => commands::ktheory_graph(matrix, *iterates),
        Command::KtheorySphere { n, m } => commands::ktheory_sphere(*n, *m),
        Command::Homogeneous { group, subgroup_gens, module, table } => {
            commands::homogeneous(group, subgroup_gens, module, table)
        }
    }
}

/// Runs a parsed command line and returns the exit status, writing the
/// result to `out` or the error to `err`.
pub fn execute(cli: &Cli, out: &mut impl std::io::Write, err: &mut impl std::io::Write) -> i32 {
    let result = run(&cli.command);
    let written = match (&result, cli.format) {
        (Ok(r), Format::Json) => out.write_all(formats::render_json(&r.json).as_bytes()),
        (Ok(r), Format::Text) => writeln!(out, "{}", r.text),
        (Err(e), Format::Json) => err.write_all(formats::render_json(&e.to_json()).as_bytes()),
        (Err(e), Format::Text) => writeln!(err, "error: {e}"),
    };
    if written.is_err() {
        return error::EXIT_MALFORMED;
    }
    match result {
        Ok(_) => 0,
        Err(e) => e.exit_code(),
    }
}
