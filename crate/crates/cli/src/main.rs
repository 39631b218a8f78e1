use std::io;
use std::process::ExitCode;
use std::time::Duration;

use clap::Parser;
use tracing_subscriber::EnvFilter;
use ttt_cli::args::{Cli, Command};
use ttt_cli::{play, verify, EXIT_STARTUP_FAILED};
use ttt_server::ServiceConfig;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Play => {
            play::run_play(&mut io::stdin().lock(), &mut io::stdout().lock()).unwrap_or_else(|e| {
                eprintln!("error: {e}");
                EXIT_STARTUP_FAILED
            })
        }
        Command::Verify { full } => {
            verify::run_verify(full, &mut io::stdout().lock(), &mut io::stderr().lock())
                .unwrap_or(verify::EXIT_VERIFY_FAILED)
        }
        Command::Serve {
            host,
            port,
            max_matches,
            match_ttl_seconds,
        } => run_serve(
            &host,
            port,
            ServiceConfig {
                max_matches,
                match_ttl: Duration::from_secs(match_ttl_seconds),
            },
        ),
    };
    ExitCode::from(code)
}

fn run_serve(host: &str, port: u16, config: ServiceConfig) -> u8 {
    tracing_subscriber::fmt()
        .with_env_filter(EnvFilter::try_from_env("TTT_LOG").unwrap_or_else(|_| EnvFilter::new("info")))
        .with_writer(io::stderr)
        .init();

    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("error: cannot start runtime: {e}");
            return EXIT_STARTUP_FAILED;
        }
    };
    runtime.block_on(async {
        let listener = match tokio::net::TcpListener::bind((host, port)).await {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: cannot listen on {host}:{port}: {e}");
                return EXIT_STARTUP_FAILED;
            }
        };
        if let Ok(addr) = listener.local_addr() {
            println!("listening on http://{addr}");
        }
        match ttt_server::serve(listener, config).await {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: server stopped: {e}");
                EXIT_STARTUP_FAILED
            }
        }
    })
}
