use axum::body::Body;
use axum::http::{header, Method, Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use smtilt_workbench::http::router;
use tower::ServiceExt;

async fn call(method: Method, uri: &str, body: Option<&str>) -> (StatusCode, String, String) {
    let mut req = Request::builder().method(method).uri(uri);
    if body.is_some() {
        req = req.header(header::CONTENT_TYPE, "application/json");
    }
    let req = req
        .body(body.map_or_else(Body::empty, |b| Body::from(b.to_string())))
        .unwrap();
    let resp = router().oneshot(req).await.unwrap();
    let status = resp.status();
    let ctype = resp
        .headers()
        .get(header::CONTENT_TYPE)
        .map(|v| v.to_str().unwrap().to_string())
        .unwrap_or_default();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    (status, ctype, String::from_utf8(bytes.to_vec()).unwrap())
}

async fn get_json(uri: &str) -> Value {
    let (status, ctype, body) = call(Method::GET, uri, None).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(ctype, "application/json");
    serde_json::from_str(&body).unwrap()
}

async fn post_json(uri: &str, body: &str) -> (StatusCode, Value) {
    let (status, _, body) = call(Method::POST, uri, Some(body)).await;
    (status, serde_json::from_str(&body).unwrap())
}

#[tokio::test]
async fn category_info() {
    let v = get_json("/category?e=3&w=2").await;
    assert_eq!(
        v,
        json!({"indecomposables": 15, "polygon_size": 10, "rank": 3, "weight": 2})
    );
}

#[tokio::test]
async fn diagonals_and_sms() {
    let v = get_json("/diagonals?e=2&w=3").await;
    assert_eq!(v["count"], 10);
    let v = get_json("/sms?e=2&w=3").await;
    assert_eq!(v["count"], 15);
    assert_eq!(v["systems"].as_array().unwrap().len(), 15);
}

#[tokio::test]
async fn ar_quiver_matches_fixture() {
    let fixture: Value =
        serde_json::from_str(include_str!("fixtures/ar_quiver_e3_w2.json")).unwrap();
    let v = get_json("/ar-quiver?e=3&w=2").await;
    let mut arrows = v["arrows"].as_array().unwrap().clone();
    arrows.sort_by_key(|a| a.to_string());
    let mut expected = fixture["arrows"].as_array().unwrap().clone();
    expected.sort_by_key(|a| a.to_string());
    assert_eq!(arrows, expected);
    let (status, ctype, dot) = call(Method::GET, "/ar-quiver?e=3&w=2&format=dot", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ctype, "text/vnd.graphviz");
    assert!(dot.starts_with("digraph ar_quiver {"));
}

#[tokio::test]
async fn tilt_left_at_one_six() {
    let body = r#"{"system":[[3,5],[1,6],[7,9]],"pivot":[[1,6]],"direction":"left"}"#;
    let (status, v) = post_json("/tilt?e=3&w=2", body).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v["system"], json!([[0, 5], [1, 3], [7, 9]]));
    assert_eq!(v["request"]["system"], json!([[1, 6], [3, 5], [7, 9]]));
}

#[tokio::test]
async fn closure_members_and_torsion() {
    let body = r#"{"system":[[3,5],[1,6],[7,9]],"torsion":[[3,5]]}"#;
    let (status, v) = post_json("/closure?e=3&w=2", body).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(
        v["members"],
        json!([[1, 3], [1, 6], [1, 9], [3, 5], [7, 9]])
    );
    assert_eq!(v["torsion_pair"]["torsion"], json!([[3, 5]]));
    assert_eq!(
        v["torsion_pair"]["torsion_free"],
        json!([[1, 6], [1, 9], [7, 9]])
    );
    let (status, ctype, svg) = call(
        Method::POST,
        "/closure?e=3&w=2&format=svg",
        Some(r#"{"system":[[3,5],[1,6],[7,9]]}"#),
    )
    .await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ctype, "image/svg+xml");
    assert_eq!(svg.matches("class=\"chord extra\"").count(), 2);
}

#[tokio::test]
async fn tilting_graph_shape() {
    let v = get_json("/tilting-graph?e=2&w=3").await;
    assert_eq!(v["nodes"].as_array().unwrap().len(), 15);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
    assert_eq!(v["weakly_connected"], true);
}

#[tokio::test]
async fn verify_suite() {
    let v = get_json("/verify?e=2&w=2&suite=orthogonality,closure-golden").await;
    assert_eq!(v["passed"], true);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["failed"] == 0));
}

#[tokio::test]
async fn domain_errors_are_400() {
    let (status, v) = post_json(
        "/tilt?e=3&w=2",
        r#"{"system":[[0,4],[1,6],[7,9]],"pivot":[],"direction":"left"}"#,
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "not_admissible");
    assert_eq!(v["details"]["diagonal"], json!([0, 4]));

    let (status, v) = post_json(
        "/tilt?e=3&w=2",
        r#"{"system":[[3,5],[3,8],[7,9]],"pivot":[],"direction":"left"}"#,
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "not_sms");

    let (status, _, body) = call(Method::GET, "/category?e=3", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body.contains("parameter_error"));

    let (status, _, body) = call(Method::GET, "/category?e=x&w=2", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body.contains("malformed query string"));

    let (status, _, body) = call(Method::GET, "/sms?e=2&w=3&format=svg", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(body.contains("parameter_error"));

    let (status, v) = post_json(
        "/tilt?e=2&w=1",
        r#"{"system":[[0,1],[2,3]],"pivot":[],"direction":"left"}"#,
    )
    .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "unsupported_weight");
}

#[tokio::test]
async fn unknown_route_is_404() {
    let (status, ctype, body) = call(Method::GET, "/nope", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(ctype, "application/json");
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["code"], "parameter_error");
}

#[tokio::test]
async fn bad_bodies_are_422() {
    for body in [
        r#"{"system":[[3,5]]}"#,
        r#"{"system":[[3,3]],"pivot":[],"direction":"left"}"#,
        r#"{"system":[[3,5]],"pivot":[],"direction":"up"}"#,
        "not json",
    ] {
        let (status, _, text) = call(Method::POST, "/tilt?e=3&w=2", Some(body)).await;
        assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY, "{body}");
        assert!(text.contains("malformed request body"));
    }
}

#[tokio::test]
async fn responses_are_byte_stable() {
    for uri in [
        "/tilting-graph?e=2&w=3",
        "/sms?e=3&w=2",
        "/ar-quiver?e=3&w=2&format=dot",
    ] {
        let a = call(Method::GET, uri, None).await;
        let b = call(Method::GET, uri, None).await;
        assert_eq!(a, b);
    }
    let v = get_json("/tilting-graph?e=2&w=3").await;
    let text = serde_json::to_string(&v).unwrap();
    let (_, _, raw) = call(Method::GET, "/tilting-graph?e=2&w=3", None).await;
    assert_eq!(text, raw);
}
