//! In-memory match store and the per-match rules of remote play.
//!
//! The service is transport-agnostic: a client is an id plus an outbound
//! channel of serialized JSON frames. Every operation on one match runs under
//! that match's lock, so messages are applied in arrival order and each client
//! sees broadcasts in the order the session passed through them.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use parking_lot::{Mutex, RwLock};
use thiserror::Error;
use tokio::sync::mpsc::UnboundedSender;
use tracing::{debug, info};
use ttt_core::{GameSession, MoveError, Player};

use crate::protocol::{ErrorCode, ServerMessage, StatePayload};

pub type MatchId = String;
pub type ConnectionId = u64;

pub const DEFAULT_MAX_MATCHES: usize = 1024;
pub const DEFAULT_MATCH_TTL: Duration = Duration::from_secs(3600);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ServiceConfig {
    pub max_matches: usize,
    /// Matches with no activity for this long are evicted.
    pub match_ttl: Duration,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            max_matches: DEFAULT_MAX_MATCHES,
            match_ttl: DEFAULT_MATCH_TTL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ServiceError {
    #[error("no live match with id {0}")]
    MatchNotFound(MatchId),
    #[error("both seats are taken")]
    MatchFull,
    #[error("this connection already holds a seat")]
    AlreadySeated,
    #[error("this connection has not joined the match")]
    NotSeated,
    #[error("row {row}, col {col} is off the board; rows and columns run 0..2")]
    NegativeCoordinates { row: i64, col: i64 },
    #[error("live match limit of {0} reached")]
    CapacityExceeded(usize),
    #[error(transparent)]
    Move(#[from] MoveError),
}

impl ServiceError {
    /// Wire code, for errors that are reported over the websocket.
    pub fn code(&self) -> Option<ErrorCode> {
        Some(match self {
            ServiceError::MatchNotFound(_) => ErrorCode::MatchNotFound,
            ServiceError::MatchFull => ErrorCode::MatchFull,
            ServiceError::AlreadySeated => ErrorCode::AlreadySeated,
            ServiceError::NotSeated => ErrorCode::NotSeated,
            ServiceError::NegativeCoordinates { .. } => ErrorCode::OutOfBounds,
            ServiceError::CapacityExceeded(_) => return None,
            ServiceError::Move(e) => match e {
                MoveError::GameOver => ErrorCode::GameOver,
                MoveError::OutOfTurn { .. } => ErrorCode::OutOfTurn,
                MoveError::CellOccupied { .. } => ErrorCode::CellOccupied,
                MoveError::OutOfBounds { .. } => ErrorCode::OutOfBounds,
            },
        })
    }

    pub fn to_message(&self) -> Option<ServerMessage> {
        self.code().map(|code| ServerMessage::Error {
            code,
            message: self.to_string(),
        })
    }
}

/// One connected client.
#[derive(Clone, Debug)]
pub struct Client {
    id: ConnectionId,
    tx: UnboundedSender<String>,
}

impl Client {
    pub fn id(&self) -> ConnectionId {
        self.id
    }

    /// Queue a frame; a closed receiver means the client is gone and the frame
    /// is dropped.
    pub fn send_raw(&self, frame: String) {
        let _ = self.tx.send(frame);
    }

    pub fn send(&self, msg: &ServerMessage) {
        self.send_raw(msg.to_json());
    }
}

#[derive(Debug)]
pub struct Match {
    id: MatchId,
    session: GameSession,
    seats: [Option<Client>; 2],
    created_at: Instant,
    last_active: Instant,
}

const fn seat_index(p: Player) -> usize {
    match p {
        Player::X => 0,
        Player::O => 1,
    }
}

impl Match {
    fn new(id: MatchId, now: Instant) -> Self {
        Match {
            session: GameSession::new(id.clone()),
            id,
            seats: [None, None],
            created_at: now,
            last_active: now,
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn session(&self) -> &GameSession {
        &self.session
    }

    pub fn created_at(&self) -> Instant {
        self.created_at
    }

    pub fn seat_of(&self, conn: ConnectionId) -> Option<Player> {
        [Player::X, Player::O]
            .into_iter()
            .find(|&p| self.seats[seat_index(p)].as_ref().is_some_and(|c| c.id == conn))
    }

    pub fn occupant(&self, seat: Player) -> Option<ConnectionId> {
        self.seats[seat_index(seat)].as_ref().map(|c| c.id)
    }

    fn seated(&self) -> impl Iterator<Item = &Client> {
        self.seats.iter().flatten()
    }

    /// Send the current state to every seated client. The payload is
    /// serialized once so both seats get identical bytes.
    fn broadcast_state(&self) {
        let frame = ServerMessage::State(StatePayload::from(&self.session)).to_json();
        for c in self.seated() {
            c.send_raw(frame.clone());
        }
    }
}

pub struct MatchService {
    config: ServiceConfig,
    matches: RwLock<HashMap<MatchId, Arc<Mutex<Match>>>>,
    next_connection: AtomicU64,
}

impl MatchService {
    pub fn new(config: ServiceConfig) -> Self {
        MatchService {
            config,
            matches: RwLock::new(HashMap::new()),
            next_connection: AtomicU64::new(1),
        }
    }

    pub fn config(&self) -> ServiceConfig {
        self.config
    }

    pub fn live_matches(&self) -> usize {
        self.matches.read().len()
    }

    /// Register a new connection whose frames go to `tx`.
    pub fn connect(&self, tx: UnboundedSender<String>) -> Client {
        Client {
            id: self.next_connection.fetch_add(1, Ordering::Relaxed),
            tx,
        }
    }

    pub fn create_match(&self) -> Result<MatchId, ServiceError> {
        let now = Instant::now();
        let mut matches = self.matches.write();
        if matches.len() >= self.config.max_matches {
            Self::evict_locked(&mut matches, now, self.config.match_ttl);
        }
        if matches.len() >= self.config.max_matches {
            return Err(ServiceError::CapacityExceeded(self.config.max_matches));
        }
        let id = loop {
            let candidate = uuid::Uuid::new_v4().simple().to_string();
            if !matches.contains_key(&candidate) {
                break candidate;
            }
        };
        matches.insert(id.clone(), Arc::new(Mutex::new(Match::new(id.clone(), now))));
        info!(match_id = %id, "match created");
        Ok(id)
    }

    fn lookup(&self, match_id: &str) -> Result<Arc<Mutex<Match>>, ServiceError> {
        self.matches
            .read()
            .get(match_id)
            .cloned()
            .ok_or_else(|| ServiceError::MatchNotFound(match_id.to_owned()))
    }

    /// Run `f` with exclusive access to a match, refreshing its idle timer.
    fn with_match<T>(
        &self,
        match_id: &str,
        f: impl FnOnce(&mut Match) -> Result<T, ServiceError>,
    ) -> Result<T, ServiceError> {
        let handle = self.lookup(match_id)?;
        let mut m = handle.lock();
        m.last_active = Instant::now();
        f(&mut m)
    }

    /// Seat `client` at the first free seat, X before O.
    pub fn join(&self, match_id: &str, client: &Client) -> Result<Player, ServiceError> {
        self.with_match(match_id, |m| {
            if m.seat_of(client.id).is_some() {
                return Err(ServiceError::AlreadySeated);
            }
            let seat = [Player::X, Player::O]
                .into_iter()
                .find(|&p| m.seats[seat_index(p)].is_none())
                .ok_or(ServiceError::MatchFull)?;
            m.seats[seat_index(seat)] = Some(client.clone());
            client.send(&ServerMessage::Joined {
                seat: seat.into(),
                match_id: m.id.clone(),
            });
            if m.seated().count() == 2 {
                m.broadcast_state();
            } else {
                client.send(&ServerMessage::State(StatePayload::from(&m.session)));
            }
            debug!(match_id, conn = client.id, %seat, "seated");
            Ok(seat)
        })
    }

    /// Apply a move for the connection's seat and broadcast the result.
    pub fn submit_move(
        &self,
        match_id: &str,
        conn: ConnectionId,
        row: i64,
        col: i64,
    ) -> Result<(), ServiceError> {
        self.with_match(match_id, |m| {
            let seat = m.seat_of(conn).ok_or(ServiceError::NotSeated)?;
            let (Ok(r), Ok(c)) = (usize::try_from(row), usize::try_from(col)) else {
                return Err(ServiceError::NegativeCoordinates { row, col });
            };
            m.session = m.session.apply_move(seat, r, c)?;
            m.broadcast_state();
            Ok(())
        })
    }

    /// Reset the game; either seated player may do this at any time.
    pub fn new_game(&self, match_id: &str, conn: ConnectionId) -> Result<(), ServiceError> {
        self.with_match(match_id, |m| {
            m.seat_of(conn).ok_or(ServiceError::NotSeated)?;
            m.session = m.session.reset();
            m.broadcast_state();
            Ok(())
        })
    }

    /// Free the connection's seat and tell the opponent. The game itself is
    /// kept so the seat can be taken again.
    pub fn handle_disconnect(&self, match_id: &str, conn: ConnectionId) {
        let _ = self.with_match(match_id, |m| {
            if let Some(seat) = m.seat_of(conn) {
                m.seats[seat_index(seat)] = None;
                for c in m.seated() {
                    c.send(&ServerMessage::OpponentLeft);
                }
                debug!(match_id, conn, %seat, "seat freed");
            }
            Ok(())
        });
    }

    pub fn state(&self, match_id: &str) -> Result<StatePayload, ServiceError> {
        self.with_match(match_id, |m| Ok(StatePayload::from(&m.session)))
    }

    /// Read-only access to a match without touching its idle timer.
    pub fn inspect<T>(&self, match_id: &str, f: impl FnOnce(&Match) -> T) -> Result<T, ServiceError> {
        let handle = self.lookup(match_id)?;
        let m = handle.lock();
        Ok(f(&m))
    }

    /// Drop matches idle for longer than the TTL as of `now`; returns how many.
    pub fn evict_idle(&self, now: Instant) -> usize {
        Self::evict_locked(&mut self.matches.write(), now, self.config.match_ttl)
    }

    fn evict_locked(matches: &mut HashMap<MatchId, Arc<Mutex<Match>>>, now: Instant, ttl: Duration) -> usize {
        let before = matches.len();
        matches.retain(|_, m| now.saturating_duration_since(m.lock().last_active) <= ttl);
        let evicted = before - matches.len();
        if evicted > 0 {
            info!(evicted, "evicted idle matches");
        }
        evicted
    }
}

impl Default for MatchService {
    fn default() -> Self {
        MatchService::new(ServiceConfig::default())
    }
}
