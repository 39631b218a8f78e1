//! JSON wire messages exchanged over the per-match websocket.

use serde::{Deserialize, Serialize};
use ttt_core::{GameSession, GameStatus, LineKind, Player, WinLine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Seat {
    X,
    O,
}

impl From<Player> for Seat {
    fn from(p: Player) -> Self {
        match p {
            Player::X => Seat::X,
            Player::O => Seat::O,
        }
    }
}

impl From<Seat> for Player {
    fn from(s: Seat) -> Self {
        match s {
            Seat::X => Player::X,
            Seat::O => Player::O,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ClientMessage {
    Join,
    PlaceMark { row: i64, col: i64 },
    NewGame,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusTag {
    InProgress,
    Won,
    Draw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKindTag {
    Row,
    Col,
    MainDiag,
    AntiDiag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinePayload {
    pub kind: LineKindTag,
    pub index: usize,
}

impl From<WinLine> for LinePayload {
    fn from(line: WinLine) -> Self {
        let kind = match line.kind() {
            LineKind::Row => LineKindTag::Row,
            LineKind::Column => LineKindTag::Col,
            LineKind::MainDiagonal => LineKindTag::MainDiag,
            LineKind::AntiDiagonal => LineKindTag::AntiDiag,
        };
        LinePayload {
            kind,
            index: line.index(),
        }
    }
}

/// Full snapshot of a match's game.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatePayload {
    pub board: String,
    pub status: StatusTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub turn: Option<Seat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub winner: Option<Seat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<LinePayload>,
    pub ply: usize,
}

impl From<&GameSession> for StatePayload {
    fn from(s: &GameSession) -> Self {
        let (status, turn, winner, line) = match s.status() {
            GameStatus::InProgress { turn } => (StatusTag::InProgress, Some(turn.into()), None, None),
            GameStatus::Won { winner, line } => {
                (StatusTag::Won, None, Some(winner.into()), Some(line.into()))
            }
            GameStatus::Draw => (StatusTag::Draw, None, None, None),
        };
        StatePayload {
            board: s.board().to_string(),
            status,
            turn,
            winner,
            line,
            ply: s.ply(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    MatchNotFound,
    MatchFull,
    AlreadySeated,
    NotSeated,
    GameOver,
    OutOfTurn,
    CellOccupied,
    OutOfBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ServerMessage {
    Joined { seat: Seat, match_id: String },
    State(StatePayload),
    Error { code: ErrorCode, message: String },
    OpponentLeft,
}

impl ServerMessage {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("server messages always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ttt_core::Player::{O, X};

    #[test]
    fn client_messages_parse() {
        let m: ClientMessage = serde_json::from_str(r#"{"type":"join"}"#).unwrap();
        assert_eq!(m, ClientMessage::Join);
        let m: ClientMessage = serde_json::from_str(r#"{"type":"place_mark","row":1,"col":2}"#).unwrap();
        assert_eq!(m, ClientMessage::PlaceMark { row: 1, col: 2 });
        let m: ClientMessage = serde_json::from_str(r#"{"type":"new_game"}"#).unwrap();
        assert_eq!(m, ClientMessage::NewGame);
        assert!(serde_json::from_str::<ClientMessage>(r#"{"type":"resign"}"#).is_err());
    }

    #[test]
    fn fresh_state_json() {
        let s = GameSession::new("m");
        assert_eq!(
            ServerMessage::State((&s).into()).to_json(),
            r#"{"type":"state","board":".........","status":"in_progress","turn":"X","ply":0}"#
        );
    }

    #[test]
    fn won_state_json() {
        let s = GameSession::replay("m", [(X, 0, 0), (O, 1, 0), (X, 0, 1), (O, 1, 1), (X, 0, 2)]).unwrap();
        assert_eq!(
            ServerMessage::State((&s).into()).to_json(),
            r#"{"type":"state","board":"XXXOO....","status":"won","winner":"X","line":{"kind":"row","index":0},"ply":5}"#
        );
    }

    #[test]
    fn other_messages_json() {
        let joined = ServerMessage::Joined {
            seat: Seat::O,
            match_id: "abc".into(),
        };
        assert_eq!(
            joined.to_json(),
            r#"{"type":"joined","seat":"O","match_id":"abc"}"#
        );
        let err = ServerMessage::Error {
            code: ErrorCode::CellOccupied,
            message: "taken".into(),
        };
        assert_eq!(
            err.to_json(),
            r#"{"type":"error","code":"cell_occupied","message":"taken"}"#
        );
        assert_eq!(
            ServerMessage::OpponentLeft.to_json(),
            r#"{"type":"opponent_left"}"#
        );
    }

    #[test]
    fn line_kinds_map_to_wire_names() {
        let tags: Vec<String> = WinLine::ALL
            .iter()
            .map(|&l| serde_json::to_string(&LinePayload::from(l)).unwrap())
            .collect();
        assert_eq!(tags[3], r#"{"kind":"col","index":0}"#);
        assert_eq!(tags[6], r#"{"kind":"main_diag","index":0}"#);
        assert_eq!(tags[7], r#"{"kind":"anti_diag","index":0}"#);
    }
}
