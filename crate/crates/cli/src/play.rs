//! Hot-seat play on one terminal.

use std::io::{self, BufRead, Write};

use ttt_core::{Board, GameSession, GameStatus};

/// Three lines of three symbols separated by spaces.
pub fn render_board(board: &Board) -> String {
    board
        .cells()
        .iter()
        .map(|row| {
            row.iter()
                .map(|m| m.symbol().to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Header line for a status: `Turn X`, `Winner O`, `Draw`, ...
pub fn status_line(status: GameStatus) -> String {
    match status {
        GameStatus::InProgress { turn } => format!("Turn {turn}"),
        GameStatus::Won { winner, .. } => format!("Winner {winner}"),
        GameStatus::Draw => "Draw".to_owned(),
    }
}

/// Everything shown for a session before input is read.
pub fn render(session: &GameSession) -> String {
    format!(
        "{}\n{}",
        render_board(session.board()),
        status_line(session.status())
    )
}

fn parse_move(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let row = parts.next()?.parse().ok()?;
    let col = parts.next()?.parse().ok()?;
    parts.next().is_none().then_some((row, col))
}

fn read_line(input: &mut impl BufRead) -> io::Result<Option<String>> {
    let mut line = String::new();
    Ok((input.read_line(&mut line)? > 0).then_some(line))
}

/// Run the interactive loop until the players decline a new game or input
/// ends. Returns the process exit code.
pub fn run_play(input: &mut impl BufRead, out: &mut impl Write) -> io::Result<u8> {
    let mut session = GameSession::new("local");
    loop {
        writeln!(out, "{}", render(&session))?;
        match session.status() {
            GameStatus::InProgress { turn } => {
                let Some(line) = read_line(input)? else {
                    return Ok(0);
                };
                let Some((row, col)) = parse_move(&line) else {
                    writeln!(out, "Enter a move as `row col`, each 0..2")?;
                    continue;
                };
                match session.apply_move(turn, row, col) {
                    Ok(next) => session = next,
                    Err(e) => writeln!(out, "Error: {e}")?,
                }
            }
            GameStatus::Won { .. } | GameStatus::Draw => loop {
                writeln!(out, "New game? [y/n]")?;
                let Some(line) = read_line(input)? else {
                    return Ok(0);
                };
                match line.trim().to_ascii_lowercase().as_str() {
                    "y" | "yes" => {
                        session = session.reset();
                        break;
                    }
                    "n" | "no" => return Ok(0),
                    _ => {}
                }
            },
        }
        out.flush()?;
    }
}
