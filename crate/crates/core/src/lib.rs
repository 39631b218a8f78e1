//! Tic-tac-toe for two human players.
//!
//! - [`board`]: the 3x3 grid and the pure rules (winner, draw, legality).
//! - [`session`]: a value-semantic game state machine with history and replay.
//! - [`oracle`]: brute-force checks of the rules over every board and every game.

pub mod board;
pub mod oracle;
pub mod session;

pub use board::{
    empty_board, encode_mark, format_board, parse_board, status_of, Board, CellMark, GameStatus, LineKind,
    ParseBoardError, Player, WinLine,
};
pub use session::{GameSession, MoveError, MoveRecord, ReplayError, SessionId};
