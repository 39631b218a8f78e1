//! Game-in-progress state machine.
//!
//! [`GameSession`] is a value: every transition returns a new session and
//! leaves the input untouched, so a rejected move can never corrupt state.
//! X always moves first.

use std::fmt;

use thiserror::Error;

use crate::board::{Board, GameStatus, Player, SIZE};

/// Opaque session identifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SessionId(String);

impl SessionId {
    pub fn new(id: impl Into<String>) -> Self {
        SessionId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SessionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for SessionId {
    fn from(s: &str) -> Self {
        SessionId::new(s)
    }
}

impl From<String> for SessionId {
    fn from(s: String) -> Self {
        SessionId(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MoveRecord {
    pub player: Player,
    pub row: usize,
    pub col: usize,
    /// 1-based sequence number.
    pub ply: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("the game is over; start a new game")]
    GameOver,
    #[error("it is {expected}'s turn, not {attempted}'s")]
    OutOfTurn { expected: Player, attempted: Player },
    #[error("cell ({row}, {col}) is already occupied")]
    CellOccupied { row: usize, col: usize },
    #[error("cell ({row}, {col}) is off the board; rows and columns run 0..2")]
    OutOfBounds { row: usize, col: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("move {ply} rejected: {source}")]
pub struct ReplayError {
    pub ply: usize,
    #[source]
    pub source: MoveError,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSession {
    id: SessionId,
    board: Board,
    status: GameStatus,
    history: Vec<MoveRecord>,
}

impl GameSession {
    /// Fresh game: empty board, X to move.
    pub fn new(id: impl Into<SessionId>) -> Self {
        GameSession {
            id: id.into(),
            board: Board::empty(),
            status: GameStatus::InProgress { turn: Player::X },
            history: Vec::new(),
        }
    }

    pub fn id(&self) -> &SessionId {
        &self.id
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn status(&self) -> GameStatus {
        self.status
    }

    pub fn history(&self) -> &[MoveRecord] {
        &self.history
    }

    /// Number of moves played so far.
    pub fn ply(&self) -> usize {
        self.history.len()
    }

    /// Place `player`'s mark at `(row, col)`.
    pub fn apply_move(&self, player: Player, row: usize, col: usize) -> Result<GameSession, MoveError> {
        let turn = match self.status {
            GameStatus::InProgress { turn } => turn,
            GameStatus::Won { .. } | GameStatus::Draw => return Err(MoveError::GameOver),
        };
        if player != turn {
            return Err(MoveError::OutOfTurn {
                expected: turn,
                attempted: player,
            });
        }
        if row >= SIZE || col >= SIZE {
            return Err(MoveError::OutOfBounds { row, col });
        }
        if !self.board[(row, col)].is_empty() {
            return Err(MoveError::CellOccupied { row, col });
        }

        let board = self.board.with_mark(row, col, player.mark());
        let mut history = self.history.clone();
        history.push(MoveRecord {
            player,
            row,
            col,
            ply: history.len() + 1,
        });
        Ok(GameSession {
            id: self.id.clone(),
            status: board.status(player.opponent()),
            board,
            history,
        })
    }

    /// Start over with the same id. Allowed in any state.
    #[must_use]
    pub fn reset(&self) -> GameSession {
        GameSession::new(self.id.clone())
    }

    /// Rebuild a session by applying `moves` in order to a fresh game.
    pub fn replay<I>(id: impl Into<SessionId>, moves: I) -> Result<GameSession, ReplayError>
    where
        I: IntoIterator<Item = (Player, usize, usize)>,
    {
        moves
            .into_iter()
            .enumerate()
            .try_fold(GameSession::new(id), |s, (i, (player, row, col))| {
                s.apply_move(player, row, col)
                    .map_err(|source| ReplayError { ply: i + 1, source })
            })
    }

    /// History as replayable `(player, row, col)` triples.
    pub fn moves(&self) -> impl Iterator<Item = (Player, usize, usize)> + '_ {
        self.history.iter().map(|m| (m.player, m.row, m.col))
    }
}
