//! `jumpcost` command-line front end.
//!
//! Exit status: 0 definite answer, 1 definite negative, 2 unknown or a
//! resource limit, 3 usage/input error or a disagreement between methods.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jumpcost::Semantics;

#[derive(Debug, Parser)]
#[command(name = "jumpcost", version, about = "Costs and boundedness of jumping finite automata")]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Automaton file.
    #[arg(long, global = true)]
    pub aut: Option<PathBuf>,

    /// Seed for randomly generated automata.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// State budget for constructions and determinization.
    #[arg(long, global = true)]
    pub budget: Option<usize>,

    /// Maximal word length for searches and scans.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_len: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Construction,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Search,
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cost of a word.
    Cost {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_parser = parse_semantics)]
        sem: Semantics,
        #[arg(long, value_enum, default_value_t = Method::Construction)]
        method: Method,
    },
    /// Membership in the jumping language.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Write the reachable part of the cost-k automaton to a file.
    Construct {
        #[arg(long, value_parser = parse_semantics)]
        sem: Semantics,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Whether every word has cost at most k.
    Bounded {
        #[arg(long, value_parser = parse_semantics)]
        sem: Semantics,
        #[arg(long)]
        k: usize,
        /// Quantify over all words instead of the jumping language.
        #[arg(long)]
        universal: bool,
        #[arg(long, value_enum, default_value_t = Mode::Search)]
        mode: Mode,
    },
    /// Check the inequalities between the semantics and scan costs.
    Interplay {
        /// CSV report; a markdown copy is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the separation suite over the six fixed languages.
    Table2 {
        /// Directory for table2.csv and table2.md.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Differential check of constructions against the oracle on random
    /// automata.
    Selftest {
        /// Number of random automata.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let g = &cli.global;
    let status = match cli.command {
        Command::Cost { word, sem, method } => commands::cost(g, &word, sem, method),
        Command::Member { word } => commands::member(g, &word),
        Command::Construct { sem, k, out } => commands::construct(g, sem, k, &out),
        Command::Bounded { sem, k, universal, mode } => commands::bounded(g, sem, k, universal, mode),
        Command::Interplay { out } => commands::interplay(g, out.as_deref()),
        Command::Table2 { out } => commands::table2(g, out.as_deref()),
        Command::Selftest { count } => commands::selftest(g, count),
    };
    ExitCode::from(status.code())
}
