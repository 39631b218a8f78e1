//! HTTP and websocket front end for [`MatchService`].

use std::io;
use std::sync::Arc;
use std::time::Duration;

use axum::extract::ws::{Message, WebSocket, WebSocketUpgrade};
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::json;
use tokio::net::TcpListener;
use tokio::sync::mpsc;
use tracing::{debug, info, warn};

use crate::protocol::ClientMessage;
use crate::service::{MatchService, ServiceConfig, ServiceError};

pub fn router(service: Arc<MatchService>) -> Router {
    Router::new()
        .route("/healthz", get(healthz))
        .route("/matches", post(create_match))
        .route("/ws/{match_id}", get(ws_upgrade))
        .with_state(service)
}

async fn healthz() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

async fn create_match(State(service): State<Arc<MatchService>>) -> Response {
    match service.create_match() {
        Ok(id) => (StatusCode::CREATED, Json(json!({ "match_id": id }))).into_response(),
        Err(e @ ServiceError::CapacityExceeded(_)) => (
            StatusCode::SERVICE_UNAVAILABLE,
            Json(json!({ "error": "capacity_exceeded", "message": e.to_string() })),
        )
            .into_response(),
        Err(e) => (StatusCode::INTERNAL_SERVER_ERROR, e.to_string()).into_response(),
    }
}

async fn ws_upgrade(
    ws: WebSocketUpgrade,
    Path(match_id): Path<String>,
    State(service): State<Arc<MatchService>>,
) -> Response {
    ws.on_upgrade(move |socket| run_connection(socket, service, match_id))
}

async fn run_connection(mut socket: WebSocket, service: Arc<MatchService>, match_id: String) {
    let (tx, mut outbound) = mpsc::unbounded_channel::<String>();
    let client = service.connect(tx);
    debug!(match_id, conn = client.id(), "websocket open");

    loop {
        tokio::select! {
            frame = outbound.recv() => {
                // the client handle keeps a sender alive, so this never yields None
                let Some(frame) = frame else { break };
                if socket.send(Message::Text(frame.into())).await.is_err() {
                    break;
                }
            }
            incoming = socket.recv() => {
                let text = match incoming {
                    Some(Ok(Message::Text(text))) => text,
                    Some(Ok(Message::Close(_))) | None | Some(Err(_)) => break,
                    Some(Ok(_)) => continue,
                };
                let msg = match serde_json::from_str::<ClientMessage>(&text) {
                    Ok(msg) => msg,
                    Err(e) => {
                        warn!(match_id, conn = client.id(), error = %e, "ignoring malformed message");
                        continue;
                    }
                };
                let result = match msg {
                    ClientMessage::Join => service.join(&match_id, &client).map(drop),
                    ClientMessage::PlaceMark { row, col } => service.submit_move(&match_id, client.id(), row, col),
                    ClientMessage::NewGame => service.new_game(&match_id, client.id()),
                };
                if let Err(e) = result {
                    if let Some(reply) = e.to_message() {
                        client.send(&reply);
                    }
                }
            }
        }
    }

    service.handle_disconnect(&match_id, client.id());
    debug!(match_id, conn = client.id(), "websocket closed");
}

/// Periodically evict idle matches.
pub fn spawn_evictor(service: Arc<MatchService>) -> tokio::task::JoinHandle<()> {
    let period = (service.config().match_ttl / 4).clamp(Duration::from_secs(1), Duration::from_secs(60));
    tokio::spawn(async move {
        let mut ticker = tokio::time::interval(period);
        loop {
            ticker.tick().await;
            service.evict_idle(std::time::Instant::now());
        }
    })
}

/// Serve on an already-bound listener until the process stops.
pub async fn serve(listener: TcpListener, config: ServiceConfig) -> io::Result<()> {
    let service = Arc::new(MatchService::new(config));
    let evictor = spawn_evictor(service.clone());
    info!(addr = %listener.local_addr()?, "listening");
    let result = axum::serve(listener, router(service)).await;
    evictor.abort();
    result
}
