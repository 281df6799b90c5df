//! HTTP+JSON service with a single-flight LRU timeline cache.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::rejection::QueryRejection;
use axum::extract::{Path, Query, State};
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::{Json, Router};
use lru::LruCache;
use serde::Serialize;
use tokio::sync::OnceCell;
use tower_http::services::ServeDir;

use biotimeline_core::{EntityId, Source};

use crate::document::{now_timestamp, ExportDocument, TimelineDocument};
use crate::engine::{Engine, EngineError};

pub const DEFAULT_PORT: u16 = 8080;
pub const DEFAULT_CACHE_SIZE: usize = 1000;
pub const DEFAULT_LIMIT: usize = 10;
pub const MAX_LIMIT: usize = 100;
pub const CACHE_HEADER: &str = "cache";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub person: EntityId,
    pub model_source: Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
}

impl CacheStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CacheStatus::Hit => "hit",
            CacheStatus::Miss => "miss",
        }
    }
}

/// A computed timeline and its serialized body.
#[derive(Debug)]
pub struct CachedTimeline {
    pub document: TimelineDocument,
    pub body: Bytes,
}

type Slot = Arc<OnceCell<Arc<CachedTimeline>>>;

/// Bounded LRU of timelines. Concurrent requests for the same key share a
/// single computation.
pub struct TimelineCache {
    slots: Mutex<LruCache<CacheKey, Slot>>,
    builds: AtomicU64,
}

impl TimelineCache {
    pub fn new(capacity: NonZeroUsize) -> Self {
        Self { slots: Mutex::new(LruCache::new(capacity)), builds: AtomicU64::new(0) }
    }

    /// Number of timeline computations performed so far.
    pub fn builds(&self) -> u64 {
        self.builds.load(Ordering::SeqCst)
    }

    pub fn len(&self) -> usize {
        self.slots.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.slots.lock().expect("cache lock").clear();
    }

    /// Returns the cached timeline for `key`, running `build` on a blocking
    /// thread when no request has computed it yet.
    pub async fn get_or_build<F>(
        &self,
        key: CacheKey,
        build: F,
    ) -> Result<(Arc<CachedTimeline>, CacheStatus), EngineError>
    where
        F: FnOnce() -> Result<TimelineDocument, EngineError> + Send + 'static,
    {
        let slot = {
            let mut slots = self.slots.lock().expect("cache lock");
            slots.get_or_insert(key.clone(), || Arc::new(OnceCell::new())).clone()
        };
        let mut built = false;
        let cached = slot
            .get_or_try_init(|| async {
                built = true;
                self.builds.fetch_add(1, Ordering::SeqCst);
                let document = tokio::task::spawn_blocking(build).await.expect("timeline build panicked")?;
                let body = Bytes::from(serde_json::to_vec(&document).expect("timeline serializes"));
                Ok::<_, EngineError>(Arc::new(CachedTimeline { document, body }))
            })
            .await;
        match cached {
            Ok(cached) => Ok((cached.clone(), if built { CacheStatus::Miss } else { CacheStatus::Hit })),
            Err(err) => {
                let mut slots = self.slots.lock().expect("cache lock");
                if slots.peek(&key).is_some_and(|s| Arc::ptr_eq(s, &slot)) {
                    slots.pop(&key);
                }
                Err(err)
            }
        }
    }
}

type Clock = Arc<dyn Fn() -> String + Send + Sync>;

#[derive(Clone)]
pub struct AppState {
    pub engine: Arc<Engine>,
    pub cache: Arc<TimelineCache>,
    clock: Clock,
}

impl AppState {
    pub fn new(engine: Engine, cache_size: NonZeroUsize) -> Self {
        Self::with_clock(engine, cache_size, Arc::new(now_timestamp))
    }

    /// Uses `clock` for `generated_at` values.
    pub fn with_clock(engine: Engine, cache_size: NonZeroUsize, clock: Clock) -> Self {
        Self { engine: Arc::new(engine), cache: Arc::new(TimelineCache::new(cache_size)), clock }
    }

    async fn timeline(&self, id: &str, source: Source) -> Result<(Arc<CachedTimeline>, CacheStatus), ApiError> {
        self.engine.person_info(id)?;
        if self.engine.models.get(source).is_none() {
            return Err(ApiError::bad_request(format!("model `{source}` is not loaded")));
        }
        let person = EntityId::new(id).map_err(|_| ApiError::not_found(format!("unknown person `{id}`")))?;
        let key = CacheKey { person, model_source: source };
        let engine = self.engine.clone();
        let generated_at = (self.clock)();
        let id = id.to_owned();
        Ok(self.cache.get_or_build(key, move || engine.timeline(&id, source, generated_at)).await?)
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn bad_request(message: impl Into<String>) -> Self {
        Self { status: StatusCode::BAD_REQUEST, message: message.into() }
    }

    fn not_found(message: impl Into<String>) -> Self {
        Self { status: StatusCode::NOT_FOUND, message: message.into() }
    }
}

impl From<EngineError> for ApiError {
    fn from(err: EngineError) -> Self {
        let status = match err {
            EngineError::UnknownPerson(_) => StatusCode::NOT_FOUND,
            EngineError::ModelUnavailable(_) => StatusCode::BAD_REQUEST,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        Self { status, message: err.to_string() }
    }
}

impl From<QueryRejection> for ApiError {
    fn from(err: QueryRejection) -> Self {
        Self::bad_request(err.body_text())
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a str,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(ErrorBody { error: &self.message })).into_response()
    }
}

type Params = Result<Query<BTreeMap<String, String>>, QueryRejection>;

fn params(query: Params) -> Result<BTreeMap<String, String>, ApiError> {
    Ok(query?.0)
}

fn limit_param(params: &BTreeMap<String, String>) -> Result<usize, ApiError> {
    let Some(raw) = params.get("limit") else {
        return Ok(DEFAULT_LIMIT);
    };
    match raw.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n.min(MAX_LIMIT)),
        _ => Err(ApiError::bad_request(format!("limit must be an integer between 1 and {MAX_LIMIT}"))),
    }
}

fn model_param(params: &BTreeMap<String, String>) -> Result<Source, ApiError> {
    match params.get("model") {
        None => Ok(Source::Wikipedia),
        Some(raw) => raw
            .parse()
            .map_err(|_| ApiError::bad_request(format!("model must be `wikipedia` or `bio_web`, got `{raw}`"))),
    }
}

fn json_response(body: Bytes, status: CacheStatus) -> Response {
    let mut response = body.into_response();
    let headers = response.headers_mut();
    headers.insert(header::CONTENT_TYPE, HeaderValue::from_static("application/json"));
    headers.insert(CACHE_HEADER, HeaderValue::from_static(status.as_str()));
    response
}

async fn persons(State(state): State<AppState>, query: Params) -> Result<Response, ApiError> {
    let params = params(query)?;
    let q = params.get("q").map(String::as_str).unwrap_or_default();
    if q.trim().is_empty() {
        return Err(ApiError::bad_request("missing query parameter `q`"));
    }
    let limit = limit_param(&params)?;
    Ok(Json(state.engine.search(q, limit)).into_response())
}

async fn timeline(State(state): State<AppState>, Path(id): Path<String>, query: Params) -> Result<Response, ApiError> {
    let source = model_param(&params(query)?)?;
    let (cached, status) = state.timeline(&id, source).await?;
    Ok(json_response(cached.body.clone(), status))
}

async fn export(State(state): State<AppState>, Path(id): Path<String>, query: Params) -> Result<Response, ApiError> {
    let source = model_param(&params(query)?)?;
    let (cached, status) = state.timeline(&id, source).await?;
    let doc = ExportDocument::from_timeline(&state.engine.kg, &cached.document);
    let body = Bytes::from(serde_json::to_vec(&doc).expect("export serializes"));
    Ok(json_response(body, status))
}

async fn related(State(state): State<AppState>, Path(id): Path<String>, query: Params) -> Result<Response, ApiError> {
    let params = params(query)?;
    let limit = limit_param(&params)?;
    Ok(Json(state.engine.related(&id, Some(limit))?).into_response())
}

async fn events(State(state): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    Ok(Json(state.engine.events(&id)?).into_response())
}

async fn unknown_endpoint() -> ApiError {
    ApiError::not_found("unknown endpoint")
}

/// The API routes, plus static files from `static_dir` for everything else.
pub fn router(state: AppState, static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/persons", get(persons))
        .route("/api/timeline/{id}", get(timeline))
        .route("/api/export/{id}", get(export))
        .route("/api/related/{id}", get(related))
        .route("/api/events/{id}", get(events))
        .route("/api/{*rest}", get(unknown_endpoint))
        .with_state(state);
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

pub struct ServeConfig {
    pub addr: SocketAddr,
    pub cache_size: NonZeroUsize,
    pub static_dir: Option<PathBuf>,
}

pub async fn serve(engine: Engine, config: ServeConfig) -> std::io::Result<()> {
    let state = AppState::new(engine, config.cache_size);
    let app = router(state, config.static_dir);
    let listener = tokio::net::TcpListener::bind(config.addr).await?;
    tracing::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, app).await
}
