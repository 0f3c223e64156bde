//! HTTP facade: `POST /api/check`, `/api/generate`, `/api/kfactor`.
//!
//! Stateless. Bodies are parsed by hand so malformed JSON maps to 400
//! (axum's extractor would answer 422, which is reserved for domain errors).

#![allow(clippy::result_large_err)]

use std::net::SocketAddr;
use std::time::Instant;

use axum::body::Bytes;
use axum::http::{HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::post;
use axum::{Json, Router};
use kfactor::api::{self, ApiError, CheckRequest, GenerateRequest, KFactorRequest};
use kfactor::ErrorKind;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

/// Largest sequence length or vertex count accepted per request.
pub const MAX_REQUEST_N: usize = 10_000;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct ServiceConfig {
    /// Allowed browser origin; `None` allows any.
    pub cors_origin: Option<String>,
}

pub fn router(config: &ServiceConfig) -> Router {
    let cors = match &config.cors_origin {
        Some(origin) => match HeaderValue::from_str(origin) {
            Ok(v) => CorsLayer::new().allow_origin(AllowOrigin::exact(v)),
            Err(_) => CorsLayer::new(),
        },
        None => CorsLayer::new().allow_origin(Any),
    }
    .allow_methods([axum::http::Method::POST])
    .allow_headers([axum::http::header::CONTENT_TYPE]);

    Router::new()
        .route("/api/check", post(check))
        .route("/api/generate", post(generate))
        .route("/api/kfactor", post(kfactor))
        .layer(cors)
}

pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(&config)).await
}

fn error_response(status: StatusCode, code: &str, message: String) -> Response {
    let body = json!({ "error": { "code": code, "message": message } });
    (status, Json(body)).into_response()
}

fn api_error_response(e: &ApiError) -> Response {
    let status = match e {
        ApiError::Usage(_) => StatusCode::BAD_REQUEST,
        ApiError::Core(core) => match core.kind() {
            ErrorKind::Domain | ErrorKind::Parameter => StatusCode::UNPROCESSABLE_ENTITY,
            ErrorKind::Internal => StatusCode::INTERNAL_SERVER_ERROR,
        },
    };
    (status, Json(e.envelope())).into_response()
}

fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, Response> {
    serde_json::from_slice(body)
        .map_err(|e| error_response(StatusCode::BAD_REQUEST, "bad_request", e.to_string()))
}

fn too_large(n: usize) -> Result<(), Response> {
    if n > MAX_REQUEST_N {
        return Err(error_response(
            StatusCode::BAD_REQUEST,
            "request_too_large",
            format!("n = {n} exceeds the limit of {MAX_REQUEST_N}"),
        ));
    }
    Ok(())
}

/// Runs a computation off the async workers and wraps the payload.
async fn respond<F>(seed: Option<u64>, work: F) -> Response
where
    F: FnOnce() -> Result<Value, ApiError> + Send + 'static,
{
    let start = Instant::now();
    let outcome = match tokio::task::spawn_blocking(work).await {
        Ok(outcome) => outcome,
        Err(e) => {
            return error_response(
                StatusCode::INTERNAL_SERVER_ERROR,
                "internal",
                format!("computation panicked: {e}"),
            )
        }
    };
    match outcome {
        Ok(mut payload) => {
            payload["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1000.0);
            payload["seed"] = json!(seed);
            payload["version"] = json!(VERSION);
            (StatusCode::OK, Json(payload)).into_response()
        }
        Err(e) => api_error_response(&e),
    }
}

async fn check(body: Bytes) -> Response {
    let req: CheckRequest = match parse(&body) {
        Ok(r) => r,
        Err(resp) => return resp,
    };
    if let Err(resp) = too_large(req.seq.len()) {
        return resp;
    }
    respond(None, move || api::check(req).map(|o| o.payload)).await
}

async fn generate(body: Bytes) -> Response {
    let req: GenerateRequest = match parse(&body) {
        Ok(r) => r,
        Err(resp) => return resp,
    };
    if let Err(resp) = too_large(req.n.unwrap_or(0)) {
        return resp;
    }
    // The connected/heuristic length grows with (a + b)^2 / b.
    if let (Some(a), Some(b)) = (req.a, req.b) {
        if a > MAX_REQUEST_N as u64 || b > MAX_REQUEST_N as u64 {
            return error_response(
                StatusCode::BAD_REQUEST,
                "request_too_large",
                format!("degree bounds a = {a}, b = {b} exceed {MAX_REQUEST_N}"),
            );
        }
    }
    let seed = req.seed;
    respond(Some(seed), move || api::generate(req)).await
}

async fn kfactor(body: Bytes) -> Response {
    let req: KFactorRequest = match parse(&body) {
        Ok(r) => r,
        Err(resp) => return resp,
    };
    if let Err(resp) = too_large(req.seq.len()) {
        return resp;
    }
    respond(None, move || api::kfactor(req)).await
}
