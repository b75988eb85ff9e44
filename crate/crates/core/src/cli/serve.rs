//! JSON HTTP API over a content-addressed seed store.
//!
//! Vertices on the wire are 1-based. A seed id is the hash of the normalized
//! seed (see [`Seed::id`]); the store keeps the first seed seen under each id
//! and every response shows that representative.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cluster_algebra::{explore, initial_seed, AtlasJson, ExploreOptions, LaurentPolynomial, Seed};
use crate::error::Error;
use crate::quiver::{Quiver, RelationKind};
use crate::repcat::ClusterCategory;
use crate::root_system::{DynkinType, Root, RootSystem};
use crate::tilting::{quiver_qt, TiltingObject};

/// Largest rank listed by `GET /types`.
pub const MAX_LISTED_RANK: usize = 8;

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn bad_request(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::BAD_REQUEST,
            message: message.into(),
        }
    }

    fn not_found(message: impl Into<String>) -> Self {
        ApiError {
            status: StatusCode::NOT_FOUND,
            message: message.into(),
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidType(_)
            | Error::VertexOutOfRange { .. }
            | Error::LargeType(_)
            | Error::AtlasCapExceeded(_)
            | Error::Parse(_) => StatusCode::BAD_REQUEST,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError {
            status,
            message: e.to_string(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

type ApiResult<T> = std::result::Result<Json<T>, ApiError>;

#[derive(Debug, Clone)]
struct StoredSeed {
    ty: DynkinType,
    seed: Seed,
}

#[derive(Debug, Default)]
pub struct ServeState {
    allow_large: bool,
    seeds: RwLock<HashMap<String, StoredSeed>>,
    categories: Mutex<HashMap<DynkinType, Arc<ClusterCategory>>>,
    atlases: Mutex<HashMap<DynkinType, Arc<AtlasJson>>>,
}

impl ServeState {
    pub fn new(allow_large: bool) -> Self {
        ServeState {
            allow_large,
            ..Default::default()
        }
    }

    /// Insert unless the id is taken; return the stored representative.
    fn store(&self, ty: DynkinType, seed: Seed) -> (String, Seed) {
        let id = seed.id();
        let mut seeds = self.seeds.write().expect("seed store lock");
        let entry = seeds.entry(id.clone()).or_insert(StoredSeed { ty, seed });
        (id, entry.seed.clone())
    }

    fn category(&self, ty: DynkinType) -> Result<Arc<ClusterCategory>, Error> {
        if let Some(c) = self.categories.lock().expect("category lock").get(&ty) {
            return Ok(c.clone());
        }
        let cat = Arc::new(ClusterCategory::new(&RootSystem::new(ty))?);
        self.categories
            .lock()
            .expect("category lock")
            .insert(ty, cat.clone());
        Ok(cat)
    }
}

pub fn router(state: Arc<ServeState>) -> Router {
    Router::new()
        .route("/types", get(types))
        .route("/seed", post(seed))
        .route("/mutate", post(mutate))
        .route("/atlas/{type}", get(atlas))
        .with_state(state)
}

/// Serve on `0.0.0.0:port` until the process ends.
pub async fn serve(port: u16, allow_large: bool) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    axum::serve(listener, router(Arc::new(ServeState::new(allow_large)))).await
}

#[derive(Debug, Serialize)]
pub struct TypeInfo {
    #[serde(rename = "type")]
    pub dynkin_type: DynkinType,
    pub rank: usize,
    pub positive_roots: usize,
    pub coxeter_number: usize,
    /// Atlas requests need the large-type opt-in.
    pub large: bool,
}

async fn types() -> Json<Vec<TypeInfo>> {
    Json(
        DynkinType::all_up_to(MAX_LISTED_RANK)
            .into_iter()
            .map(|t| TypeInfo {
                dynkin_type: t,
                rank: t.rank,
                positive_roots: t.nu(),
                coxeter_number: t.coxeter_number(),
                large: t == DynkinType::e(7) || t == DynkinType::e(8),
            })
            .collect(),
    )
}

#[derive(Debug, Deserialize)]
pub struct SeedRequest {
    #[serde(rename = "type")]
    pub dynkin_type: String,
}

#[derive(Debug, Deserialize)]
pub struct MutateRequest {
    pub seed: String,
    /// 1-based.
    pub vertex: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VariableState {
    /// 1-based seed position.
    pub position: usize,
    pub display: String,
    pub polynomial: LaurentPolynomial,
    pub denominator: Vec<i32>,
    /// The almost positive root of the variable: `-a_i` for `x_i`, the
    /// denominator vector otherwise.
    pub root: Vec<i32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RelationSummary {
    pub arrow: [usize; 2],
    pub kind: RelationKind,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct QtSummary {
    pub summands: Vec<String>,
    /// 1-based arrows of `Q_T`.
    pub arrows: Vec<[usize; 2]>,
    pub matches_exchange_quiver: bool,
    pub relations: Vec<RelationSummary>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeedState {
    pub id: String,
    #[serde(rename = "type")]
    pub dynkin_type: DynkinType,
    pub quiver: Quiver,
    /// 1-based arrows of the exchange quiver.
    pub arrows: Vec<[usize; 2]>,
    pub variables: Vec<VariableState>,
    pub qt: QtSummary,
}

fn parse_body<'a, T: Deserialize<'a>>(body: &'a Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed request: {e}")))
}

fn one_based(q: &Quiver) -> Vec<[usize; 2]> {
    q.arrows().into_iter().map(|(a, b, _)| [a + 1, b + 1]).collect()
}

fn variable_root(v: &LaurentPolynomial) -> Root {
    match v.as_variable() {
        Some(i) => Root::negative_simple(v.nvars(), i),
        None => Root(v.denominator_vector()),
    }
}

fn qt_summary(cat: &ClusterCategory, seed: &Seed) -> Result<QtSummary, Error> {
    let summands = seed
        .vars
        .iter()
        .map(|v| {
            let r = variable_root(v);
            cat.index_of_root(&r).ok_or_else(|| Error::NotARoot(r.0.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let t = TiltingObject::new(cat, summands)?;
    let qt = quiver_qt(cat, &t)?.quiver;
    let relations = qt
        .relations()?
        .relations()
        .map(|e| RelationSummary {
            arrow: [e.source + 1, e.target + 1],
            kind: e.kind,
        })
        .collect();
    Ok(QtSummary {
        summands: t.summands.iter().map(|&i| cat.object(i).to_string()).collect(),
        arrows: one_based(&qt),
        matches_exchange_quiver: qt == seed.quiver,
        relations,
    })
}

fn seed_state(state: &ServeState, ty: DynkinType, id: String, seed: &Seed) -> Result<SeedState, Error> {
    let cat = state.category(ty)?;
    let variables = seed
        .vars
        .iter()
        .enumerate()
        .map(|(p, v)| VariableState {
            position: p + 1,
            display: v.to_string(),
            polynomial: v.clone(),
            denominator: v.denominator_vector(),
            root: variable_root(v).0,
        })
        .collect();
    Ok(SeedState {
        id,
        dynkin_type: ty,
        arrows: one_based(&seed.quiver),
        quiver: seed.quiver.clone(),
        variables,
        qt: qt_summary(&cat, seed)?,
    })
}

async fn seed(State(state): State<Arc<ServeState>>, body: Bytes) -> ApiResult<SeedState> {
    let req: SeedRequest = parse_body(&body)?;
    let ty: DynkinType = req.dynkin_type.parse()?;
    let (id, s) = state.store(ty, initial_seed(ty));
    Ok(Json(seed_state(&state, ty, id, &s)?))
}

async fn mutate(State(state): State<Arc<ServeState>>, body: Bytes) -> ApiResult<SeedState> {
    let req: MutateRequest = parse_body(&body)?;
    let stored = state
        .seeds
        .read()
        .expect("seed store lock")
        .get(&req.seed)
        .cloned()
        .ok_or_else(|| ApiError::not_found(format!("unknown seed {}", req.seed)))?;
    let n = stored.seed.n();
    if !(1..=n).contains(&req.vertex) {
        return Err(ApiError::bad_request(format!(
            "vertex {} out of range 1..={n}",
            req.vertex
        )));
    }
    let next = stored.seed.mutate(req.vertex - 1)?;
    let (id, s) = state.store(stored.ty, next);
    Ok(Json(seed_state(&state, stored.ty, id, &s)?))
}

async fn atlas(
    State(state): State<Arc<ServeState>>,
    Path(ty): Path<String>,
) -> Result<Json<Arc<AtlasJson>>, ApiError> {
    let ty: DynkinType = ty
        .parse()
        .map_err(|e: Error| ApiError::not_found(e.to_string()))?;
    if let Some(a) = state.atlases.lock().expect("atlas lock").get(&ty) {
        return Ok(Json(a.clone()));
    }
    let opts = ExploreOptions {
        allow_large: state.allow_large,
        ..Default::default()
    };
    let a = Arc::new(explore(ty, opts)?.to_json());
    state.atlases.lock().expect("atlas lock").insert(ty, a.clone());
    Ok(Json(a))
}
