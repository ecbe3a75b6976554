use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cubicode_cli::{run, CliError, Command, ExitStatus, Format, MethodArg, RunConfig};

#[derive(Parser)]
#[command(
    name = "cubicode",
    version,
    about = "Cubic trace codes over F2+vF2+v^2F2 and their binary images"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Extension degree m (1..=16)
    #[arg(long)]
    m: u32,
    /// Reduction polynomial for F_{2^m} as hex, e.g. 0xb
    #[arg(long, value_parser = parse_hex)]
    poly: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: available parallelism)
    #[arg(long, env = "CUBICODE_THREADS")]
    threads: Option<usize>,
    /// Override resource guards on exhaustive enumeration
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Code parameters without enumeration
    Info(Common),
    /// Lee weight distribution
    Weights {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
    },
    /// Run every check and aggregate the results
    Verify(Common),
    /// Griesmer-bound optimality
    Griesmer(Common),
    /// Dual Lee distance
    DualDistance(Common),
    /// Minimal-codeword analysis
    Minimal(Common),
    /// Write the generator matrix of the binary image
    Genmat {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_hex(s: &str) -> Result<u32, String> {
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    u32::from_str_radix(digits, 16).map_err(|e| format!("invalid hex polynomial {s:?}: {e}"))
}

fn config(cli: Cli) -> RunConfig {
    let (common, command) = match cli.command {
        Cmd::Info(c) => (c, Command::Info),
        Cmd::Weights { common, method } => (common, Command::Weights { method }),
        Cmd::Verify(c) => (c, Command::Verify),
        Cmd::Griesmer(c) => (c, Command::Griesmer),
        Cmd::DualDistance(c) => (c, Command::DualDistance),
        Cmd::Minimal(c) => (c, Command::Minimal),
        Cmd::Genmat { common, out } => (common, Command::Genmat { out }),
    };
    RunConfig {
        m: common.m,
        poly: common.poly,
        command,
        format: common.format,
        threads: common.threads,
        force: common.force,
    }
}

fn main() -> ExitCode {
    let cfg = config(Cli::parse());
    match run(&cfg) {
        Ok(outcome) => {
            print!("{}", outcome.render(cfg.format));
            for note in &outcome.notes {
                eprintln!("{note}");
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Code(cubicode::Error::ResourceGuard { .. }) = e {
                eprintln!("hint: pass --force to enumerate anyway");
            }
            ExitCode::from(ExitStatus::Usage as u8)
        }
    }
}
