//! `nanotop` — build finite nano topologies from rough-set approximations,
//! query their h-open structure, classify maps between them, and run the
//! exhaustive verification sweeps.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nanotop::verify::{mine_counterexample, run_regression_fixtures, verify_theorems};
use nanotop::MapPredicate;

use nanotop_cli::files::{
    build_map, build_space, load_map_file, load_space_file, parse_label_list,
};
use nanotop_cli::report::{
    to_json, CliError, MapReport, MineReport, SetReport, SpaceReport, VerifyReport, WitnessReport,
};

#[derive(Parser)]
#[command(
    name = "nanotop",
    version,
    about = "Finite nano topologies: approximations, h-open families, map classification, exhaustive verification"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Override the universe-size cap that gates h-family enumeration
    #[arg(long, global = true, value_name = "N")]
    max_universe: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetOp {
    /// nano interior
    Nint,
    /// nano closure
    Ncl,
    /// h-interior
    Ninth,
    /// h-closure
    Nclh,
    /// membership in the h-open family
    IsHopen,
    /// membership in the h-closed family
    IsHclosed,
}

#[derive(Subcommand)]
enum Command {
    /// Build the space a file describes and print its approximations and set families
    Space {
        /// JSON file with fields `universe`, `partition`, `x`
        file: PathBuf,
        /// Also compute and print the h-open family
        #[arg(long)]
        show_hfamily: bool,
    },
    /// Apply interior/closure operators to one subset of a space
    Set {
        /// JSON file with fields `universe`, `partition`, `x`
        file: PathBuf,
        /// Comma-separated element labels; pass "" for the empty set
        b: String,
        /// Operators to apply (defaults to all six)
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [
            SetOp::Nint, SetOp::Ncl, SetOp::Ninth, SetOp::Nclh, SetOp::IsHopen, SetOp::IsHclosed,
        ])]
        ops: Vec<SetOp>,
    },
    /// Classify the map a file describes
    Map {
        /// JSON file with fields `domain`, `codomain`, `map`
        file: PathBuf,
        /// Also evaluate the five equivalent h-continuity characterizations
        /// and report strict-inclusion witnesses
        #[arg(long)]
        conditions: bool,
    },
    /// Replay the pinned fixtures and sweep every structural claim over all
    /// spaces and maps up to the given sizes
    Verify {
        /// Largest universe for the set-level sweeps
        #[arg(long, default_value_t = 4)]
        max_space_size: usize,
        /// Largest universe on either side of the map-level sweeps
        #[arg(long, default_value_t = 3)]
        max_map_size: usize,
    },
    /// Search for the first map satisfying one class but not another
    Mine {
        /// Implication to refute, written `antecedent=>consequent`
        implication: String,
        /// Largest domain universe to search
        max_domain: usize,
        /// Largest codomain universe to search
        max_codomain: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let format = cli.format;
    let cap = cli.max_universe;
    match cli.command {
        Command::Space { file, show_hfamily } => {
            let space = build_space(&load_space_file(&file)?, cap)?;
            let report = SpaceReport::collect(&space, show_hfamily)?;
            emit(format, &report, SpaceReport::text);
            Ok(true)
        }
        Command::Set { file, b, ops } => {
            let space = build_space(&load_space_file(&file)?, cap)?;
            let subset = space
                .universe()
                .subset(parse_label_list(&b))
                .map_err(CliError::from)?;
            let mut report = SetReport {
                b: subset.to_labels(),
                nint: None,
                ncl: None,
                ninth: None,
                nclh: None,
                is_hopen: None,
                is_hclosed: None,
            };
            for op in ops {
                match op {
                    SetOp::Nint => report.nint = Some(space.interior(&subset).to_labels()),
                    SetOp::Ncl => report.ncl = Some(space.closure(&subset).to_labels()),
                    SetOp::Ninth => {
                        report.ninth =
                            Some(space.h_interior(&subset).map_err(CliError::from)?.to_labels())
                    }
                    SetOp::Nclh => {
                        report.nclh =
                            Some(space.h_closure(&subset).map_err(CliError::from)?.to_labels())
                    }
                    SetOp::IsHopen => report.is_hopen = Some(space.is_h_open(&subset)),
                    SetOp::IsHclosed => report.is_hclosed = Some(space.is_h_closed(&subset)),
                }
            }
            emit(format, &report, SetReport::text);
            Ok(true)
        }
        Command::Map { file, conditions } => {
            let map = build_map(&load_map_file(&file)?, &file, cap)?;
            let report = MapReport::collect(&map, conditions)?;
            emit(format, &report, MapReport::text);
            Ok(true)
        }
        Command::Verify { max_space_size, max_map_size } => {
            let mut reports = vec![run_regression_fixtures()];
            reports.extend(verify_theorems(max_space_size, max_map_size).map_err(CliError::from)?);
            let report = VerifyReport::collect(&reports);
            let clean = report.all_passed;
            emit(format, &report, VerifyReport::text);
            Ok(clean)
        }
        Command::Mine { implication, max_domain, max_codomain } => {
            let (ante, cons) = parse_implication(&implication)?;
            let witness = mine_counterexample(ante, cons, max_domain, max_codomain)
                .map_err(CliError::from)?;
            let report = MineReport {
                antecedent: ante.name().to_string(),
                consequent: cons.name().to_string(),
                witness: witness.as_ref().map(WitnessReport::from),
            };
            emit(format, &report, MineReport::text);
            Ok(true)
        }
    }
}

/// Splits `antecedent=>consequent` into two known map classes.
fn parse_implication(raw: &str) -> Result<(MapPredicate, MapPredicate), CliError> {
    let Some((a, c)) = raw.split_once("=>") else {
        return Err(CliError::Usage(format!(
            "implication `{raw}` must be written `antecedent=>consequent`"
        )));
    };
    let ante = MapPredicate::parse(a.trim()).map_err(CliError::from)?;
    let cons = MapPredicate::parse(c.trim()).map_err(CliError::from)?;
    Ok((ante, cons))
}

fn emit<T: serde::Serialize>(format: Format, report: &T, text: impl Fn(&T) -> String) {
    let rendered = match format {
        Format::Text => text(report),
        Format::Json => to_json(report),
    };
    print!("{rendered}");
}
