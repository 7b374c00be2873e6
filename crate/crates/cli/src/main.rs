//! `cyclowalk`: periods, certificates, spectra and simulations of 3-state
//! quantum walks on cycle graphs.
//!
//! Exit codes: 0 decided, 1 usage or input error, 2 undecided within the
//! search bound, 3 the coin condition rules out the requested period.

mod commands;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclowalk::{
    fourier_coin, grover_coin, CoinMatrix, ShiftType, WalkSpec, DEFAULT_LEVEL_CAP, DEFAULT_T_MAX,
};

const LEVEL_CAP_VAR: &str = "CYCLOWALK_LEVEL_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "cyclowalk",
    version,
    about = "Exact periods of 3-state quantum walks on cycle graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the period T_N, or certify that the walk is not periodic.
    Period {
        #[command(flatten)]
        walk: WalkArgs,
        /// Largest block order searched before giving up.
        #[arg(long, default_value_t = DEFAULT_T_MAX, value_parser = clap::value_parser!(u64).range(1..))]
        t_max: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Eigenvalues and exact characteristic polynomials of every block.
    Spectrum {
        #[command(flatten)]
        walk: WalkArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Simulate the walk and emit per-vertex chirality probabilities.
    Evolve {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, default_value_t = 0)]
        steps: usize,
        /// `uniform`, or `VERTEX:A,B,C` with complex weights for (←, •, →).
        #[arg(long, default_value = "0:0,1,0")]
        initial: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Test the diagonal coin entries against a candidate period T.
    CheckCoin {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct WalkArgs {
    /// `grover`, `fourier`, or a path to a coin JSON file.
    #[arg(long, default_value = "grover")]
    coin: String,
    /// Number of vertices of the cycle.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    n: u64,
    #[arg(long, default_value = "moving", value_parser = parse_shift)]
    shift: ShiftType,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Defaults to csv for `evolve` and json otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

fn parse_shift(s: &str) -> std::result::Result<ShiftType, String> {
    s.parse().map_err(|e: cyclowalk::Error| e.to_string())
}

fn level_cap() -> Result<u64> {
    match std::env::var(LEVEL_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&c| c > 0)
            .with_context(|| format!("{LEVEL_CAP_VAR} must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_LEVEL_CAP),
    }
}

fn load_coin(selector: &str) -> Result<CoinMatrix> {
    match selector {
        "grover" => Ok(grover_coin()),
        "fourier" => Ok(fourier_coin()),
        path => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read coin file {path}"))?;
            CoinMatrix::from_json_str(&text).with_context(|| format!("invalid coin file {path}"))
        }
    }
}

impl WalkArgs {
    fn spec(&self) -> Result<WalkSpec> {
        let coin = load_coin(&self.coin)?;
        let n = usize::try_from(self.n).context("cycle size too large")?;
        Ok(WalkSpec::new(n, coin, self.shift)?.with_level_cap(level_cap()?))
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let (report, output, default) = match &cli.command {
        Command::Period {
            walk,
            t_max,
            output,
        } => (
            commands::period(&walk.spec()?, *t_max)?,
            output,
            Format::Json,
        ),
        Command::Spectrum { walk, output } => {
            (commands::spectrum(&walk.spec()?)?, output, Format::Json)
        }
        Command::Evolve {
            walk,
            steps,
            initial,
            output,
        } => (
            commands::evolve(&walk.spec()?, initial, *steps)?,
            output,
            Format::Csv,
        ),
        Command::CheckCoin { walk, t, output } => (
            commands::check_coin(&walk.spec()?, *t)?,
            output,
            Format::Json,
        ),
    };
    let format = output.format.unwrap_or(default);
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.json)?),
        Format::Human => render::human(&report.json),
        Format::Csv => match &report.csv {
            Some(csv) => csv.clone(),
            None => bail!("csv output is only available for evolve and spectrum"),
        },
    };
    emit(output, &text)?;
    Ok(report.exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
