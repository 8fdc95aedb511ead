use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nanogrid::commands::{cmd_compare, cmd_dump_fis, cmd_run};
use nanogrid::{ControllerKind, NanogridParams};

#[derive(Parser)]
#[command(name = "nanogrid", version, about = "Fuzzy bus-frequency energy management for an islanded nanogrid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and write its trace and summary
    Run {
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Override the scenario's controller (flc | proportional)
        #[arg(long)]
        controller: Option<ControllerKind>,
    },
    /// Run a scenario under both controllers and print a comparison
    Compare {
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write both fuzzy systems in scenario-config syntax
    DumpFis {
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Run {
            scenario,
            out,
            controller,
        } => cmd_run(&scenario, &out, controller, &mut stdout).map(|_| ()),
        Command::Compare { scenario, out } => {
            cmd_compare(&scenario, &out, &mut stdout).map(|_| ())
        }
        Command::DumpFis { out } => cmd_dump_fis(&out, &NanogridParams::default()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
