use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ffgroups::groups::parse_group;
use ffgroups::harness::{Harness, DEFAULT_CAP, DEFAULT_PSL2_FIELDS, DEFAULT_SIMPLE_GROUPS};
use ffgroups::report::{
    render_classification, render_cover, render_lattice, render_question, render_results, Format,
};
use ffgroups::{Result, VerificationResult};

#[derive(Parser)]
#[command(
    name = "ffgroups",
    version,
    about = "Maximal covers, FF-subgroups and generating pairs"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Options {
    /// Worker threads (0 = one per core); output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, env = "FFGROUPS_CAP", default_value_t = DEFAULT_CAP)]
    cap: u128,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every proper nontrivial subgroup is FF.
    #[command(subcommand)]
    Verify(Verify),
    /// Check which maximal subgroups contain selected elements.
    #[command(subcommand)]
    Witness(Witness),
    #[command(subcommand)]
    Scan(Scan),
    /// Maximal overgroups, cover and generating partners of one subgroup.
    Cover {
        #[arg(long)]
        group: String,
        /// Comma-separated generators, e.g. "(1 2),(3 4)".
        #[arg(long)]
        subgroup: String,
    },
    /// Per-class generating-pair classification of a group.
    Classify {
        #[arg(long)]
        group: String,
    },
    /// Export the subgroup lattice of a group.
    Lattice {
        #[arg(long)]
        group: String,
    },
    /// Run every default verification target.
    Suite,
}

#[derive(Subcommand)]
enum Verify {
    /// Symmetric groups S_3..S_n.
    Sym {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Alternating groups A_3..A_n.
    Alt {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// PSL(2,q) for a list of field sizes.
    Psl2 {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PSL2_FIELDS)]
        q: Vec<u64>,
        /// Allow q above 13.
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Subcommand)]
enum Witness {
    /// Cycle-type witnesses in S_n.
    Cycles {
        #[arg(long, value_delimiter = ',', default_values_t = [5usize])]
        n: Vec<usize>,
    },
    /// Element-order witnesses in PSL(2,q).
    Orders {
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PSL2_FIELDS)]
        q: Vec<u64>,
    },
}

#[derive(Subcommand)]
enum Scan {
    /// FF check over a list of simple groups.
    Conjecture {
        #[arg(long, value_delimiter = ';', default_values_t = DEFAULT_SIMPLE_GROUPS.map(String::from))]
        groups: Vec<String>,
    },
    /// Two-generated subgroups of S_n with a non-FF subgroup outside the Frattini subgroup.
    #[command(name = "question42")]
    Question {
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long)]
        max_order: Option<u128>,
    },
}

fn emit(opts: &Options, text: &str) -> Result<()> {
    match &opts.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn finish(opts: &Options, results: &[VerificationResult]) -> Result<ExitCode> {
    emit(opts, &render_results(results, opts.format)?)?;
    let failing: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.label())
        .collect();
    for r in results {
        if r.notes.iter().any(|n| n.starts_with("FINDING")) {
            eprintln!("FINDING in {}: see counterexamples", r.label());
        }
    }
    if failing.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("failing targets: {}", failing.join(", "));
        Ok(ExitCode::from(1))
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let opts = &cli.opts;
    let h = Harness::new(opts.cap, opts.workers)?;
    match cli.command {
        Command::Verify(Verify::Sym { max_n }) => finish(opts, &h.verify_symmetric(max_n)?),
        Command::Verify(Verify::Alt { max_n }) => finish(opts, &h.verify_alternating(max_n)?),
        Command::Verify(Verify::Psl2 { q, allow_large }) => {
            finish(opts, &h.verify_psl2(&q, allow_large)?)
        }
        Command::Witness(Witness::Cycles { n }) => {
            let rs = n
                .iter()
                .map(|&n| h.witness_cycle_types(n))
                .collect::<Result<Vec<_>>>()?;
            finish(opts, &rs)
        }
        Command::Witness(Witness::Orders { q }) => {
            let rs = q
                .iter()
                .map(|&q| h.witness_orders(q))
                .collect::<Result<Vec<_>>>()?;
            finish(opts, &rs)
        }
        Command::Scan(Scan::Conjecture { groups }) => finish(opts, &h.conjecture_scan(&groups)?),
        Command::Scan(Scan::Question {
            max_degree,
            max_order,
        }) => {
            let report = h.question_scan(max_degree, max_order.unwrap_or(opts.cap))?;
            emit(opts, &render_question(&report, opts.format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover { group, subgroup } => {
            let report = h.cover(&parse_group(&group)?, &subgroup)?;
            emit(opts, &render_cover(&report, opts.format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { group } => {
            let report = h.classification_report(&parse_group(&group)?)?;
            emit(opts, &render_classification(&report, opts.format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { group } => {
            let export = h.lattice_export(&parse_group(&group)?)?;
            emit(opts, &render_lattice(&export, opts.format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite => finish(opts, &h.default_suite()?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
