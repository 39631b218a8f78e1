//! Two-player tic-tac-toe over websockets.
//!
//! `POST /matches` creates a match, `GET /healthz` reports liveness and
//! `/ws/{match_id}` carries the JSON protocol in [`protocol`]. Game rules come
//! from `ttt-core`; this crate only adds seats, relay and broadcast.

pub mod app;
pub mod protocol;
pub mod service;

pub use app::{router, serve};
pub use protocol::{ClientMessage, ErrorCode, ServerMessage, StatePayload};
pub use service::{MatchService, ServiceConfig, ServiceError};
