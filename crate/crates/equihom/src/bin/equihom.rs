//! Thin command-line front end.  All computation lives in the library;
//! this binary parses arguments, dispatches, and maps errors to exit codes:
//! 0 success, 1 check failure, 2 parse or usage error, 3 resource cap.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use equihom::c2sset::SsetError;
use equihom::checks::{coind_check, james_check, splitting_check, CheckError};
use equihom::confcomb::{
    aut_order, emb_nonempty, graph_subgroup_count, norm_map_status, pi0_emb, pi0_emb_sigma,
    pi0_underlying, C2SetDescriptor, ConfcombError, RepPQ,
};
use equihom::expr::{parse, ExprError};
use equihom::report::{homology_table, table_to_csv, table_to_json, CheckReport, Coefficient};

#[derive(Parser)]
#[command(
    name = "equihom",
    about = "Exact cellular Bredon homology and Mackey functor algebra for C2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    #[value(name = "B")]
    B,
    #[value(name = "A")]
    A,
    #[value(name = "Zconst")]
    Zconst,
}

impl From<CoeffArg> for Coefficient {
    fn from(c: CoeffArg) -> Coefficient {
        match c {
            CoeffArg::B => Coefficient::B,
            CoeffArg::A => Coefficient::A,
            CoeffArg::Zconst => Coefficient::Zconst,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate Bredon homology of a space expression.
    Homology {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "B")]
        coeff: CoeffArg,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Compare homology of a coinduced space with its descriptor.
    CoindCheck {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a James filtration stage on the sign circle with its descriptor.
    JamesCheck {
        #[arg(long, default_value_t = 2)]
        stage: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the suspension splitting of a coinduction at homology level.
    SplittingCheck {
        #[arg(long)]
        space: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Configuration-space combinatorics for finite C2-sets.
    Config {
        #[command(subcommand)]
        query: ConfigQuery,
    },
}

#[derive(Subcommand)]
enum ConfigQuery {
    /// Number of graph subgroups of C2 x Sigma_n over the full C2.
    GraphCount {
        #[arg(long)]
        n: usize,
    },
    /// Order of the equivariant automorphism group of a finite C2-set.
    AutOrder {
        #[arg(long, default_value_t = 0)]
        fixed: usize,
        #[arg(long, default_value_t = 0)]
        free: usize,
    },
    /// Whether the equivariant embedding space into p + q.sigma is nonempty.
    Emb {
        #[arg(long, default_value_t = 0)]
        fixed: usize,
        #[arg(long, default_value_t = 0)]
        free: usize,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
    },
    /// Components of the space of k free orbits embedded in the sign line.
    Pi0EmbSigma {
        #[arg(long)]
        k: usize,
    },
    /// Components of the space of n points embedded in the line.
    Pi0Underlying {
        #[arg(long)]
        n: usize,
    },
    /// Components of a general equivariant embedding space, where pinned.
    Pi0Emb {
        #[arg(long, default_value_t = 0)]
        fixed: usize,
        #[arg(long, default_value_t = 0)]
        free: usize,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
    },
    /// Existence and uniqueness of norm maps for the disk operad of p + q.sigma.
    NormStatus {
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn fail(code: u8, message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn sset_exit_code(e: &SsetError) -> u8 {
    match e {
        SsetError::CellBudget { .. } | SsetError::InsufficientDepth { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn expr_exit_code(e: &ExprError) -> u8 {
    match e {
        ExprError::Sset(s) => sset_exit_code(s),
        _ => EXIT_USAGE,
    }
}

fn check_exit_code(e: &CheckError) -> u8 {
    match e {
        CheckError::Expr(inner) => expr_exit_code(inner),
        CheckError::Sset(inner) => sset_exit_code(inner),
        _ => EXIT_USAGE,
    }
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<(), std::io::Error> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_check(report: &CheckReport, out: Option<&PathBuf>) -> ExitCode {
    print!("{}", report.render_text());
    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return fail(EXIT_USAGE, &format!("cannot write {}: {e}", path.display()));
        }
    }
    if report.passed {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn run_config(query: ConfigQuery) -> ExitCode {
    let answer: Result<String, ConfcombError> = match query {
        ConfigQuery::GraphCount { n } => graph_subgroup_count(n).map(|c| c.to_string()),
        ConfigQuery::AutOrder { fixed, free } => {
            Ok(aut_order(C2SetDescriptor::new(fixed, free)).to_string())
        }
        ConfigQuery::Emb { fixed, free, p, q } => Ok(emb_nonempty(
            C2SetDescriptor::new(fixed, free),
            RepPQ::new(p, q),
        )
        .to_string()),
        ConfigQuery::Pi0EmbSigma { k } => Ok(pi0_emb_sigma(k).to_string()),
        ConfigQuery::Pi0Underlying { n } => Ok(pi0_underlying(n).to_string()),
        ConfigQuery::Pi0Emb { fixed, free, p, q } => {
            pi0_emb(C2SetDescriptor::new(fixed, free), RepPQ::new(p, q)).map(|c| c.to_string())
        }
        ConfigQuery::NormStatus { p, q } => Ok(norm_map_status(RepPQ::new(p, q)).to_string()),
    };
    match answer {
        Ok(text) => {
            println!("{text}");
            ExitCode::from(EXIT_OK)
        }
        Err(e @ ConfcombError::TooLarge(_)) => fail(EXIT_RESOURCE, &e.to_string()),
        Err(e) => fail(EXIT_USAGE, &e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Homology {
            space,
            coeff,
            max_degree,
            reduced,
            out,
            format,
        } => {
            let expr = match parse(&space) {
                Ok(e) => e,
                Err(e) => return fail(EXIT_USAGE, &e.to_string()),
            };
            match homology_table(&expr, coeff.into(), max_degree, reduced) {
                Ok(table) => {
                    let text = match format {
                        FormatArg::Json => table_to_json(&table),
                        FormatArg::Csv => table_to_csv(&table),
                    };
                    match write_output(&text, out.as_ref()) {
                        Ok(()) => ExitCode::from(EXIT_OK),
                        Err(e) => fail(EXIT_USAGE, &format!("cannot write output: {e}")),
                    }
                }
                Err(equihom::report::ReportError::Expr(e)) => {
                    fail(expr_exit_code(&e), &e.to_string())
                }
                Err(equihom::report::ReportError::Sset(e)) => {
                    fail(sset_exit_code(&e), &e.to_string())
                }
                Err(e) => fail(EXIT_USAGE, &e.to_string()),
            }
        }
        Command::CoindCheck {
            space,
            max_degree,
            out,
        } => {
            let expr = match parse(&space) {
                Ok(e) => e,
                Err(e) => return fail(EXIT_USAGE, &e.to_string()),
            };
            match coind_check(&expr, max_degree) {
                Ok(report) => emit_check(&report, out.as_ref()),
                Err(e) => fail(check_exit_code(&e), &e.to_string()),
            }
        }
        Command::JamesCheck {
            stage,
            max_degree,
            out,
        } => match james_check(stage, max_degree) {
            Ok(report) => emit_check(&report, out.as_ref()),
            Err(e) => fail(check_exit_code(&e), &e.to_string()),
        },
        Command::SplittingCheck {
            space,
            max_degree,
            out,
        } => {
            let expr = match parse(&space) {
                Ok(e) => e,
                Err(e) => return fail(EXIT_USAGE, &e.to_string()),
            };
            match splitting_check(&expr, max_degree) {
                Ok(report) => emit_check(&report, out.as_ref()),
                Err(e) => fail(check_exit_code(&e), &e.to_string()),
            }
        }
        Command::Config { query } => run_config(query),
    }
}
