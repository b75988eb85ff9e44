//! The JSON API behind the explorer, driven in-process: create an A2 seed,
//! walk the pentagon and come back to the starting id.

use std::sync::Arc;

use axum::body::Body;
use axum::http::Request;
use cluster_tilt::cli::serve::{router, SeedState, ServeState};
use http_body_util::BodyExt;
use serde_json::json;
use tower::ServiceExt;

async fn post(app: &axum::Router, uri: &str, body: serde_json::Value) -> SeedState {
    let req = Request::post(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    serde_json::from_slice(&bytes).unwrap()
}

#[tokio::main]
async fn main() {
    let app = router(Arc::new(ServeState::new(false)));
    let start = post(&app, "/seed", json!({ "type": "A2" })).await;
    println!("start {}", &start.id[..12]);
    let mut cur = start.clone();
    for k in [1, 2, 1, 2, 1] {
        cur = post(&app, "/mutate", json!({ "seed": cur.id, "vertex": k })).await;
        let vars: Vec<&str> = cur.variables.iter().map(|v| v.display.as_str()).collect();
        let dens: Vec<&Vec<i32>> = cur.variables.iter().map(|v| &v.denominator).collect();
        println!("mutate at {k}: {}  [{}]  d-vectors {dens:?}", &cur.id[..12], vars.join(", "));
    }
    println!("back at the start: {}", cur.id == start.id);
}
