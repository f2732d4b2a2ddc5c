//! Command-line front end: argument model, dispatch and output.

pub mod commands;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use unimod::configsystem::Formulation;

use crate::commands::Selection;
pub use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json-like")]
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulationArg {
    Literal,
    Rigorous,
    Both,
}

impl FormulationArg {
    fn selection(self) -> Selection {
        match self {
            Self::Literal => Selection::One(Formulation::PaperLiteral),
            Self::Rigorous => Selection::One(Formulation::Rigorous),
            Self::Both => Selection::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SingleFormulation {
    Literal,
    Rigorous,
}

impl From<SingleFormulation> for Formulation {
    fn from(f: SingleFormulation) -> Self {
        match f {
            SingleFormulation::Literal => Formulation::PaperLiteral,
            SingleFormulation::Rigorous => Formulation::Rigorous,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "unimod", version, about = "Exact verification of generation by small shells for extremal even unimodular lattices")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of the extremal theta series of a given rank.
    Theta {
        #[arg(long)]
        rank: u64,
        /// Highest power of q to print (default ⌊rank/24⌋ + 3).
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Run the determinant pipeline for rank 40r.
    Verify {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = FormulationArg::Both)]
        formulation: FormulationArg,
    },
    /// Show the extended linear system.
    System {
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = SingleFormulation::Rigorous)]
        formulation: SingleFormulation,
        /// Print every matrix entry.
        #[arg(long)]
        dump: bool,
    },
    /// Enumerate a shell of a built-in lattice and check moment identities.
    Oracle {
        #[arg(long, value_parser = ["e8", "e8e8", "d16plus"])]
        lattice: String,
        #[arg(long)]
        norm: u32,
        /// Index of the centre vector within the enumerated shell.
        #[arg(long)]
        x0: Option<usize>,
        /// Degree of the zonal harmonic to sum.
        #[arg(long)]
        degree: Option<u32>,
    },
}

pub fn run(command: &Command) -> Report {
    match command {
        Command::Theta { rank, terms } => commands::cmd_theta(*rank, *terms),
        Command::Verify { r, formulation } => commands::cmd_verify(*r, formulation.selection()),
        Command::System { r, formulation, dump } => commands::cmd_system(*r, (*formulation).into(), *dump),
        Command::Oracle { lattice, norm, x0, degree } => commands::cmd_oracle(lattice, *norm, *x0, *degree),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    }
}
