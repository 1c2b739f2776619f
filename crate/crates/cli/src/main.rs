use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use subsums_cli::report::Status;
use subsums_cli::{run, Cli, EXIT_CHECK_FAILED, EXIT_OK};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let format = cli.global.format;
    let code = match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            match outcome
                .report
                .render(format, &mut stdout)
                .and_then(|_| Ok(stdout.flush()?))
            {
                Ok(()) if outcome.report.status == Status::Fail => EXIT_CHECK_FAILED,
                Ok(()) => EXIT_OK,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
