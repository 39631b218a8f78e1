//! Command-line surface of `ttt`.

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ttt", version, about = "Two-player tic-tac-toe")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Play on this terminal; moves are typed as `row col`, zero-based.
    Play,
    /// Check the winner logic against a brute-force scan of every board.
    Verify {
        /// Also enumerate every game and compare against the frozen census.
        #[arg(long)]
        full: bool,
    },
    /// Run the two-player match server.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value_t = ttt_server::service::DEFAULT_MAX_MATCHES)]
        max_matches: usize,
        #[arg(long, default_value_t = ttt_server::service::DEFAULT_MATCH_TTL.as_secs())]
        match_ttl_seconds: u64,
    },
}
