//! JSON over HTTP.
//!
//! Parameters travel in the query string (`?e=3&w=2&format=dot`); the two
//! POST routes take a JSON body. Domain errors answer 400, unknown routes
//! 404 and undecodable bodies 422, always with an [`ApiError`] body.

use axum::extract::rejection::{JsonRejection, QueryRejection};
use axum::extract::{Json, Query};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::Deserialize;
use serde_json::json;
use smtilt_core::polygon::{CategoryParams, Diagonal};

use crate::api::{self, ApiError, ApiResult, ClosureRequest, Format, Rendered, TiltRequest};

#[derive(Debug, Default, Deserialize)]
struct Params {
    e: Option<u32>,
    w: Option<u32>,
    format: Option<String>,
    suite: Option<String>,
}

impl Params {
    fn category(&self) -> ApiResult<CategoryParams> {
        api::params(self.e, self.w)
    }

    fn format(&self) -> ApiResult<Format> {
        self.format
            .as_deref()
            .map_or(Ok(Format::Json), Format::parse)
    }
}

#[derive(Debug, Deserialize)]
struct SystemBody {
    system: Vec<Diagonal>,
}

pub fn router() -> Router {
    Router::new()
        .route("/category", get(category))
        .route("/diagonals", get(diagonals))
        .route("/ar-quiver", get(ar_quiver))
        .route("/sms", get(sms_list))
        .route("/sms/check", post(sms_check))
        .route("/closure", post(closure))
        .route("/tilt", post(tilt))
        .route("/tilting-graph", get(tilting_graph))
        .route("/verify", get(verify))
        .fallback(not_found)
}

pub async fn serve(host: &str, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind((host, port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router()).await
}

fn error(status: StatusCode, e: &ApiError) -> Response {
    let body = api::canonical_json(e);
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn rendered(r: Rendered) -> Response {
    (
        [
            (header::CONTENT_TYPE, r.content_type),
            (header::ACCESS_CONTROL_ALLOW_ORIGIN, "*"),
        ],
        r.body,
    )
        .into_response()
}

async fn respond<F>(f: F) -> Response
where
    F: FnOnce() -> ApiResult<Rendered> + Send + 'static,
{
    match tokio::task::spawn_blocking(f).await {
        Ok(Ok(r)) => rendered(r),
        Ok(Err(e)) => error(StatusCode::BAD_REQUEST, &e),
        Err(join) => error(
            StatusCode::INTERNAL_SERVER_ERROR,
            &ApiError::parameter(format!("computation aborted: {join}")),
        ),
    }
}

fn query(q: Result<Query<Params>, QueryRejection>) -> Result<Params, (StatusCode, ApiError)> {
    q.map(|Query(p)| p).map_err(|r| {
        let e = ApiError::parameter("malformed query string")
            .with_details(json!({ "reason": r.body_text() }));
        (StatusCode::BAD_REQUEST, e)
    })
}

fn body<T>(b: Result<Json<T>, JsonRejection>) -> Result<T, (StatusCode, ApiError)> {
    b.map(|Json(v)| v).map_err(|r| {
        let e = ApiError::parameter("malformed request body")
            .with_details(json!({ "reason": r.body_text() }));
        (StatusCode::UNPROCESSABLE_ENTITY, e)
    })
}

macro_rules! get_handler {
    ($name:ident, $f:path) => {
        async fn $name(q: Result<Query<Params>, QueryRejection>) -> Response {
            let q = match query(q) {
                Ok(q) => q,
                Err((status, e)) => return error(status, &e),
            };
            respond(move || $f(&q.category()?, q.format()?)).await
        }
    };
}

get_handler!(category, api::category);
get_handler!(diagonals, api::diagonals);
get_handler!(ar_quiver, api::ar_quiver);
get_handler!(sms_list, api::sms_list);
get_handler!(tilting_graph, api::tilting_graph);

async fn verify(q: Result<Query<Params>, QueryRejection>) -> Response {
    let q = match query(q) {
        Ok(q) => q,
        Err((status, e)) => return error(status, &e),
    };
    respond(move || {
        let suite = q.suite.as_deref().unwrap_or("all");
        api::verify(&q.category()?, suite).map(|(_, body)| body)
    })
    .await
}

async fn sms_check(
    q: Result<Query<Params>, QueryRejection>,
    b: Result<Json<SystemBody>, JsonRejection>,
) -> Response {
    let (q, b) = match (query(q), body(b)) {
        (Ok(q), Ok(b)) => (q, b),
        (Err((status, e)), _) | (_, Err((status, e))) => return error(status, &e),
    };
    respond(move || api::sms_check(&q.category()?, &b.system)).await
}

async fn closure(
    q: Result<Query<Params>, QueryRejection>,
    b: Result<Json<ClosureRequest>, JsonRejection>,
) -> Response {
    let (q, b) = match (query(q), body(b)) {
        (Ok(q), Ok(b)) => (q, b),
        (Err((status, e)), _) | (_, Err((status, e))) => return error(status, &e),
    };
    respond(move || api::closure(&q.category()?, &b, q.format()?)).await
}

async fn tilt(
    q: Result<Query<Params>, QueryRejection>,
    b: Result<Json<TiltRequest>, JsonRejection>,
) -> Response {
    let (q, b) = match (query(q), body(b)) {
        (Ok(q), Ok(b)) => (q, b),
        (Err((status, e)), _) | (_, Err((status, e))) => return error(status, &e),
    };
    respond(move || api::tilt(&q.category()?, &b, q.format()?)).await
}

async fn not_found() -> Response {
    error(
        StatusCode::NOT_FOUND,
        &ApiError::parameter("no such resource"),
    )
}
