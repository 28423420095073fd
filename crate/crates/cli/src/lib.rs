//! Command-line front end for `pieri-core`.
//!
//! [`run`] parses arguments, dispatches to the owning module and writes
//! deterministic text, JSON or LaTeX to the given writer. Exit statuses:
//! 0 on success, 1 on usage or domain errors, 2 when a verification fails.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod cache;
mod commands;
mod render;
pub mod verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pieri", version, about = "Pieri rule, Kostka tables and SPS dimensions for S_n and GL_n(F_q)")]
pub struct Cli {
    /// Accept partitions with zero parts or parts in any order.
    #[arg(long, global = true)]
    pub lenient: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Horizontal-strip expansion of a diagram (Pieri rule).
    Pieri(PieriArgs),
    /// Multiplicity table K(E,D) of σ_E in Y_D.
    Kostka(KostkaArgs),
    /// Decompose a Young/flag module or an induced spherical principal series.
    Decompose(DecomposeArgs),
    /// Intertwining number ⟨Y_D, Y_E⟩ (or ⟨Y_E(sgn), Y_D⟩ with --signed).
    Intertwine(IntertwineArgs),
    /// dim ρ_D as a polynomial in q.
    Qdim(QPolyArgs),
    /// |GL_n / P_D| as a polynomial in q.
    FlagSize(QPolyArgs),
    /// Number of double cosets S_D\S_n/S_E = P_D\GL_n/P_E.
    DoubleCosets(DoubleCosetArgs),
    /// Run the brute-force verification sweeps.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args, Debug)]
pub struct PieriArgs {
    #[arg(long)]
    pub diagram: String,
    #[arg(long)]
    pub target_size: usize,
    /// Complex general linear group: |E| = target size, at most --max-rows rows.
    #[arg(long, requires = "max_rows")]
    pub gl: bool,
    #[arg(long, requires = "gl")]
    pub max_rows: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct KostkaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest n accepted.
    #[arg(long, default_value_t = pieri_core::pieri::DEFAULT_KOSTKA_BOUND)]
    pub table_bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    /// Young module Y_D over S_n.
    Sn,
    /// Flag module I_D over GL_n(F_q).
    Gl,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("module").required(true).args(["young", "sps"])))]
pub struct DecomposeArgs {
    #[arg(long)]
    pub young: Option<String>,
    #[arg(long, value_enum, default_value = "sn", requires = "young")]
    pub group: GroupArg,
    #[arg(long, requires = "target")]
    pub sps: Option<String>,
    #[arg(long, requires = "sps")]
    pub target: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = pieri_core::pieri::DEFAULT_KOSTKA_BOUND)]
    pub table_bound: usize,
}

#[derive(Args, Debug)]
pub struct IntertwineArgs {
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
    /// Count 0-1 tables: ⟨Y_right(sgn), Y_left⟩.
    #[arg(long)]
    pub signed: bool,
    /// Also list the tables, one JSON array of rows per table.
    #[arg(long)]
    pub tables: bool,
    /// Largest rows × columns accepted with --tables.
    #[arg(long, default_value_t = pieri_core::tabloid::DEFAULT_MAX_CELLS)]
    pub table_bound: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct QPolyArgs {
    #[arg(long)]
    pub diagram: String,
    /// Also evaluate at this q.
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = pieri_core::pieri::DEFAULT_KOSTKA_BOUND)]
    pub table_bound: usize,
}

#[derive(Args, Debug)]
pub struct DoubleCosetArgs {
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
    /// Cross-check by enumerating GL_n(F_p), p ∈ {2, 3}.
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Dominance,
    Intertwine,
    Pieri,
    Kostka,
    Bruhat,
    SchurWeyl,
    Qdim,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: i32,
    pub message: String,
}

impl From<pieri_core::Error> for Failure {
    fn from(err: pieri_core::Error) -> Self {
        Self { status: EXIT_DOMAIN, message: err.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Self { status: EXIT_DOMAIN, message: format!("write failed: {err}") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_DOMAIN
                }
            };
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(status) => status,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.status
        }
    }
}

/// Runs the command and captures stdout and stderr as strings.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run(args, &mut out, &mut err);
    (
        status,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
