use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use cluster_tilt::cli::serve::{router, SeedState, ServeState};
use cluster_tilt::cluster_algebra::{explore, initial_seed, mutate_seed};
use cluster_tilt::root_system::{DynkinType, Root};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

fn app() -> Router {
    router(Arc::new(ServeState::new(false)))
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri);
    let req = match body {
        Some(b) => req
            .header("content-type", "application/json")
            .body(Body::from(b.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, serde_json::from_slice(&bytes).unwrap())
}

async fn seed(app: &Router, ty: &str) -> SeedState {
    let (s, v) = call(app, "POST", "/seed", Some(json!({ "type": ty }))).await;
    assert_eq!(s, StatusCode::OK);
    serde_json::from_value(v).unwrap()
}

async fn mutate(app: &Router, id: &str, vertex: usize) -> SeedState {
    let (s, v) = call(app, "POST", "/mutate", Some(json!({ "seed": id, "vertex": vertex }))).await;
    assert_eq!(s, StatusCode::OK, "{v}");
    serde_json::from_value(v).unwrap()
}

#[tokio::test]
async fn types_lists_small_ranks() {
    let (s, v) = call(&app(), "GET", "/types", None).await;
    assert_eq!(s, StatusCode::OK);
    let names: Vec<&str> = v.as_array().unwrap().iter().map(|t| t["type"].as_str().unwrap()).collect();
    for t in ["A1", "A2", "D4", "E6", "E8"] {
        assert!(names.contains(&t));
    }
}

#[tokio::test]
async fn seed_a2() {
    let s = seed(&app(), "A2").await;
    assert_eq!(s.arrows, vec![[1, 2]]);
    assert_eq!(s.variables[0].display, "x1");
    assert!(s.qt.matches_exchange_quiver);
    assert_eq!(s.id, initial_seed(DynkinType::a(2)).id());
}

#[tokio::test]
async fn a2_first_mutation_renders() {
    let app = app();
    let s = seed(&app, "A2").await;
    let m = mutate(&app, &s.id, 1).await;
    assert_eq!(m.variables[0].display, "(x2 + 1)/x1");
    assert_eq!(m.variables[0].denominator, vec![1, 0]);
}

#[tokio::test]
async fn mutating_twice_returns_the_same_id() {
    let app = app();
    let s = seed(&app, "D4").await;
    for k in 1..=4 {
        let m = mutate(&app, &s.id, k).await;
        assert_ne!(m.id, s.id);
        let back = mutate(&app, &m.id, k).await;
        assert_eq!(back, s);
    }
}

#[tokio::test]
async fn pentagon_walk_returns_to_start() {
    let app = app();
    let start = seed(&app, "A2").await;
    let mut cur = start.clone();
    for k in [1, 2, 1, 2, 1] {
        cur = mutate(&app, &cur.id, k).await;
    }
    assert_eq!(cur.id, start.id);
}

#[tokio::test]
async fn ids_agree_with_library_mutation() {
    let app = app();
    let ty = DynkinType::a(4);
    let mut lib = initial_seed(ty);
    let mut cur = seed(&app, "A4").await;
    for k in [2, 3, 1, 4, 2, 3] {
        lib = mutate_seed(&lib, k - 1).unwrap();
        cur = mutate(&app, &cur.id, k).await;
        assert_eq!(cur.id, lib.id());
        assert_eq!(cur.quiver, lib.quiver);
    }
}

#[tokio::test]
async fn denominators_match_atlas_roots() {
    let app = app();
    let ty = DynkinType::d(4);
    let atlas = explore(ty, Default::default()).unwrap();
    let mut cur = seed(&app, "D4").await;
    for k in [1, 2, 3, 4, 2, 1] {
        cur = mutate(&app, &cur.id, k).await;
        assert!(cur.qt.matches_exchange_quiver);
        for v in &cur.variables {
            let id = atlas.variable_id(&v.polynomial).unwrap();
            assert_eq!(&Root(v.root.clone()), atlas.root_of(id));
            let expected: Vec<i32> = v.root.iter().map(|&x| x.max(0)).collect();
            assert_eq!(v.denominator, expected);
        }
    }
}

#[tokio::test]
async fn atlas_endpoint() {
    let app = app();
    let (s, v) = call(&app, "GET", "/atlas/A2", None).await;
    assert_eq!(s, StatusCode::OK);
    assert_eq!(v["num_clusters"], 5);
    let (s, _) = call(&app, "GET", "/atlas/B3", None).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
    let (s, _) = call(&app, "GET", "/atlas/E7", None).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn errors() {
    let app = app();
    let (s, v) = call(&app, "POST", "/mutate", Some(json!({ "seed": "nope", "vertex": 1 }))).await;
    assert_eq!(s, StatusCode::NOT_FOUND);
    assert!(v["error"].as_str().unwrap().contains("unknown seed"));
    let (s, _) = call(&app, "POST", "/seed", Some(json!({ "kind": "A2" }))).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    let (s, _) = call(&app, "POST", "/seed", Some(json!({ "type": "Z9" }))).await;
    assert_eq!(s, StatusCode::BAD_REQUEST);
    let st = seed(&app, "A3").await;
    for vertex in [0, 4] {
        let (s, _) = call(&app, "POST", "/mutate", Some(json!({ "seed": st.id, "vertex": vertex }))).await;
        assert_eq!(s, StatusCode::BAD_REQUEST);
    }
    let req = Request::builder()
        .method("POST")
        .uri("/seed")
        .body(Body::from("{not json"))
        .unwrap();
    assert_eq!(app.clone().oneshot(req).await.unwrap().status(), StatusCode::BAD_REQUEST);
}
