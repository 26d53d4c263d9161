use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use leibniz_cli::commands::{self, GenerateArgs, Outcome, SimplicityMode};

/// Analyzer for finite-dimensional set-graded Leibniz superalgebras given
/// by exact structure constants.
#[derive(Parser)]
#[command(name = "leibniz", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the machine-readable JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Oracle,
    Theorem,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check the grading and identity axioms; exit 0 iff valid.
    Validate { path: PathBuf },
    /// Support labels split by parity.
    Support { path: PathBuf },
    /// Evaluate the star operation on two symbols (tilde suffix: "a~").
    Star { path: PathBuf, x: String, y: String },
    /// Connection classes of the support.
    Classes { path: PathBuf },
    /// Class ideals, complement and the global decomposition checks.
    Decompose { path: PathBuf },
    /// The Leibniz kernel ideal (generated by symmetrized products).
    FrakI { path: PathBuf },
    /// Two-sided center.
    Center { path: PathBuf },
    /// Annihilator of the components away from the kernel support.
    LieAnnihilator {
        path: PathBuf,
        /// Quantify the distinguished component as well.
        #[arg(long)]
        include_o: bool,
    },
    /// Is the distinguished component spanned by pair products into it?
    Tight { path: PathBuf },
    /// Are all pieces away from the distinguished label lines?
    Maxlen { path: PathBuf },
    /// Support multiplicativity with a counterexample when it fails.
    SMult { path: PathBuf },
    /// Simplicity by brute-force oracle, by the connectivity
    /// characterization, or both; exit 3 on an inconsistency finding.
    Simplicity {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Oracle)]
        mode: Mode,
        /// Seed for the sampling paths of the oracle.
        #[arg(long)]
        seed: Option<u64>,
        /// Mark the annihilator row quantifying the distinguished label.
        #[arg(long)]
        include_o: bool,
        /// Mark the row whose connection steps admit tilde companions.
        #[arg(long)]
        allow_tilde: bool,
    },
    /// Full dossier: every analysis in one report.
    Report {
        path: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit instances of the built-in families as algebra files.
    Generate {
        /// abelian | n2 | simple3 | two-step | so3 | so3-module |
        /// sl2-module | perturbed-n2 | corpus
        family: String,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Copy count or label count, family dependent.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Module parity for the module families (0 or 1).
        #[arg(long, default_value_t = 0)]
        parity: u8,
        /// Module copies for so3-module.
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long, default_value_t = leibniz_core::idealkit::DEFAULT_SEED)]
        seed: u64,
        /// Output file (stdout when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Output directory for the corpus family.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let default_seed = leibniz_core::idealkit::DEFAULT_SEED;
    let outcome: Outcome = match &cli.command {
        Command::Validate { path } => commands::cmd_validate(path),
        Command::Support { path } => commands::cmd_support(path),
        Command::Star { path, x, y } => commands::cmd_star(path, x, y),
        Command::Classes { path } => commands::cmd_classes(path),
        Command::Decompose { path } => commands::cmd_decompose(path),
        Command::FrakI { path } => commands::cmd_frak_i(path),
        Command::Center { path } => commands::cmd_center(path),
        Command::LieAnnihilator { path, include_o } => {
            commands::cmd_lie_annihilator(path, *include_o)
        }
        Command::Tight { path } => commands::cmd_tight(path),
        Command::Maxlen { path } => commands::cmd_maxlen(path),
        Command::SMult { path } => commands::cmd_s_mult(path),
        Command::Simplicity {
            path, mode, seed, ..
        } => {
            let mode = match mode {
                Mode::Oracle => SimplicityMode::Oracle,
                Mode::Theorem => SimplicityMode::Theorem,
                Mode::Both => SimplicityMode::Both,
            };
            commands::cmd_simplicity(path, mode, seed.unwrap_or(default_seed))
        }
        Command::Report { path, seed } => commands::cmd_report(path, seed.unwrap_or(default_seed)),
        Command::Generate {
            family,
            field,
            k,
            parity,
            copies,
            seed,
            output,
            out_dir,
        } => commands::cmd_generate(&GenerateArgs {
            family: family.clone(),
            field: field.clone(),
            k: *k,
            parity: *parity,
            copies: *copies,
            seed: *seed,
            output: output.clone(),
            out_dir: out_dir.clone(),
        }),
    };
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome.json).expect("report serializes")
        );
    } else {
        println!("{}", outcome.human.trim_end());
    }
    ExitCode::from(outcome.exit as u8)
}
