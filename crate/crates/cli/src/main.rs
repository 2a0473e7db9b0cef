//! `gpdim`: verification campaigns and metric-dimension search for `P(n,m)`.
//!
//! Exit codes: 0 when everything verified (or was computed), 1 when a check
//! failed, 2 on usage or domain errors. `GPDIM_WORKERS` sets the number of
//! worker threads.

mod args;
mod report;
mod run;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use args::{Cli, Command, Format};
use report::{Report, Status};

const WORKERS_ENV: &str = "GPDIM_WORKERS";

fn init_workers() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .with_context(|| format!("{WORKERS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(workers).build_global().context("cannot start worker pool")?;
    Ok(())
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Human => report::to_human(report),
        Format::Jsonl => report::to_jsonl(report),
        Format::Csv => report::to_csv(report),
    }
}

fn execute(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Dim(a) => Ok(run::dim(a, cli.timing)?),
        Command::Verify { kind, select } => Ok(run::verify(*kind, select, cli.timing)?),
        Command::Report { path } => {
            let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            Ok(report::from_jsonl(&text).with_context(|| format!("cannot parse {}", path.display()))?)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).context("cannot write to stdout")
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = init_workers().and_then(|_| execute(&cli)).and_then(|report| {
        emit(&cli, &render(&report, cli.format))?;
        Ok(report.meta.status)
    });
    match result {
        Ok(Status::Failed) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
