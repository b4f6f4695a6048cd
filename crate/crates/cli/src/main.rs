//! `gk`: run graded K-theory checks on ring, complex, sheaf and package files.
//!
//! Exit status 0 means every check passed, 1 that a mathematical check failed (the
//! report still carries its certificate), 2 that the input could not be used.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gradedk_cli::commands::{self, CliError, ObstructionQuery};
use gradedk_cli::report::Report;

#[derive(Parser)]
#[command(name = "gk", version, about = "Exact checks for strongly Z-graded rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a ring spec, verify its strong grading witness and probe confluence.
    RingCheck {
        ring: PathBuf,
        /// Longest word the confluence probe resolves.
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// K0 groups of a ring (.toml) or a package (.json).
    K0 {
        input: PathBuf,
        /// Class in K0 of the source of `--along`, as comma-separated coordinates.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, requires = "along")]
        class: Option<Vec<i64>>,
        /// Induction map for the obstruction: i-, i+, j- or j+.
        #[arg(long, requires = "class", allow_hyphen_values = true)]
        along: Option<String>,
    },
    /// Certify the K0 short exact sequence through the nil groups and the shift cokernel.
    Ft0 { input: PathBuf },
    /// Certify the K0 tail of the Mayer-Vietoris sequence.
    Mv0 { input: PathBuf },
    /// Homology of a complex; over R>=0 also the finite-domination verdict.
    Homology {
        complex: PathBuf,
        /// Cap on the exponent searched for the domination witness.
        #[arg(long, default_value_t = gradedk::homology::DEFAULT_WITNESS_CAP)]
        bound: u32,
    },
    /// Lift a complex over R to one over R<=0 or R>=0.
    Lift {
        complex: PathBuf,
        #[arg(long, default_value = "Rge0")]
        target: String,
        /// Padding for non-acyclic input: minimal or proof.
        #[arg(long, default_value = "minimal")]
        policy: String,
    },
    /// Decide membership of a twisted endomorphism in the nil category.
    Nil {
        twisted: PathBuf,
        /// Iteration bound for the strict nilpotency search.
        #[arg(long, default_value_t = 64)]
        bound: u32,
    },
    /// Sheaf condition and H0/H1 of a sheaf on the projective line.
    SheafCohomology { sheaf: PathBuf },
    /// Search twists for nonvanishing H1.
    ProbeVect0 {
        sheaf: PathBuf,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::RingCheck { ring, bound } => commands::ring_check(&ring, bound),
        Command::K0 { input, class, along } => {
            let query = class.zip(along).map(|(class, along)| ObstructionQuery { class, along });
            commands::k0(&input, query)
        }
        Command::Ft0 { input } => commands::ft0(&input),
        Command::Mv0 { input } => commands::mv0(&input),
        Command::Homology { complex, bound } => commands::homology_cmd(&complex, bound),
        Command::Lift { complex, target, policy } => commands::lift(&complex, &target, &policy),
        Command::Nil { twisted, bound } => commands::nil(&twisted, bound),
        Command::SheafCohomology { sheaf } => commands::sheaf_cohomology(&sheaf),
        Command::ProbeVect0 { sheaf, window } => commands::probe_vect0(&sheaf, window),
    }
}

fn emit(body: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, format!("{body}\n")).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, body) = match run(cli.command) {
        Ok(report) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize"),
                Format::Text => report.text,
            };
            (report.verdict.exit_code(), Some(body))
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            let body = (cli.format == Format::Json).then(|| {
                let kind = if e.exit_code() == 2 { "input" } else { "math" };
                serde_json::to_string_pretty(&serde_json::json!({"error": e.message(), "kind": kind})).expect("errors serialize")
            });
            (e.exit_code(), body)
        }
    };
    if let Some(body) = body {
        if let Err(msg) = emit(&body, cli.out.as_ref()) {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code as u8)
}
