//! Request handling shared by the command line and the HTTP service.
//!
//! Every operation takes validated parameters, returns a [`Rendered`] body
//! and never keeps state, so the same request always yields the same bytes.
//! JSON bodies are canonical: object keys sorted, no insignificant spaces.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use smtilt_core::ar_quiver::build_ar_quiver;
use smtilt_core::polygon::{CategoryParams, Diagonal};
use smtilt_core::sms::{
    enumerate_sms, extension_closure, orthogonality_failures, simples_of_closure, sms_violation,
    torsion_pair, SimpleMindedSystem,
};
use smtilt_core::tilting::{
    gabriel_quiver, tilt as tilt_move, tilting_graph as build_graph, Direction,
};
use smtilt_core::verify::{verify as run_verify, Suite, VerifyReport};
use smtilt_core::Error;

use crate::export;

/// Largest rank and weight accepted by the enumerating operations.
pub const MAX_RANK: u32 = 10;
pub const MAX_WEIGHT: u32 = 10;
/// The brute-force oracle behind `verify` is only run up to this rank.
pub const MAX_VERIFY_RANK: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    ParameterError,
    NotAdmissible,
    NotSms,
    TiltRuleIncomplete,
    UnsupportedWeight,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApiError {
    pub code: ErrorCode,
    pub message: String,
    pub details: Value,
}

impl ApiError {
    pub fn parameter(message: impl Into<String>) -> Self {
        ApiError {
            code: ErrorCode::ParameterError,
            message: message.into(),
            details: json!({}),
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }
}

impl fmt::Display for ApiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for ApiError {}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let message = e.to_string();
        let (code, details) = match &e {
            Error::Parameter(_) => (ErrorCode::ParameterError, json!({})),
            Error::DegenerateDiagonal(v) => (ErrorCode::ParameterError, json!({ "vertex": v })),
            Error::NotAdmissible(d) => (ErrorCode::NotAdmissible, json!({ "diagonal": d })),
            Error::NotSms(reason) => (ErrorCode::NotSms, json!({ "reason": reason })),
            Error::NoExtension { target, through } => (
                ErrorCode::ParameterError,
                json!({ "target": target, "through": through }),
            ),
            Error::UnsupportedWeight(w) => (ErrorCode::UnsupportedWeight, json!({ "weight": w })),
            Error::TiltRuleIncomplete(reason) => {
                (ErrorCode::TiltRuleIncomplete, json!({ "reason": reason }))
            }
            Error::Inconsistent(reason) => (
                ErrorCode::ParameterError,
                json!({ "internal": true, "reason": reason }),
            ),
        };
        ApiError {
            code,
            message,
            details,
        }
    }
}

pub type ApiResult<T> = Result<T, ApiError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Dot,
    Svg,
}

impl Format {
    pub fn parse(s: &str) -> ApiResult<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "svg" => Ok(Format::Svg),
            other => Err(ApiError::parameter(format!("unknown format '{other}'"))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Svg => "svg",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub content_type: &'static str,
    pub body: String,
}

impl Rendered {
    fn json(v: &impl Serialize) -> Self {
        Rendered {
            content_type: "application/json",
            body: canonical_json(v),
        }
    }

    fn dot(body: String) -> Self {
        Rendered {
            content_type: "text/vnd.graphviz",
            body,
        }
    }

    fn svg(body: String) -> Self {
        Rendered {
            content_type: "image/svg+xml",
            body,
        }
    }
}

/// Compact JSON with object keys in sorted order.
pub fn canonical_json(v: &impl Serialize) -> String {
    let value = serde_json::to_value(v).expect("wire types serialize");
    serde_json::to_string(&value).expect("values serialize")
}

fn unsupported(resource: &str, format: Format) -> ApiError {
    ApiError::parameter(format!("{resource} is not available as {}", format.name()))
        .with_details(json!({ "resource": resource, "format": format.name() }))
}

/// Validates `(e, w)` for the service.
pub fn params(rank: Option<u32>, weight: Option<u32>) -> ApiResult<CategoryParams> {
    let rank = rank.ok_or_else(|| ApiError::parameter("missing rank e"))?;
    let weight = weight.ok_or_else(|| ApiError::parameter("missing weight w"))?;
    if rank > MAX_RANK || weight > MAX_WEIGHT {
        return Err(ApiError::parameter(format!(
            "rank and weight are limited to {MAX_RANK} and {MAX_WEIGHT}"
        ))
        .with_details(json!({ "rank": rank, "weight": weight })));
    }
    Ok(CategoryParams::new(rank, weight)?)
}

fn on_polygon(p: &CategoryParams, diagonals: &[Diagonal]) -> ApiResult<()> {
    match diagonals.iter().find(|d| !p.contains(**d)) {
        Some(d) => Err(ApiError::parameter(format!(
            "{d} is not a diagonal of the {}-gon",
            p.polygon_size()
        ))
        .with_details(json!({ "diagonal": d }))),
        None => Ok(()),
    }
}

fn admissible(p: &CategoryParams, diagonals: &[Diagonal]) -> ApiResult<()> {
    on_polygon(p, diagonals)?;
    for &d in diagonals {
        p.require_admissible(d)?;
    }
    Ok(())
}

fn sorted(mut v: Vec<Diagonal>) -> Vec<Diagonal> {
    v.sort();
    v.dedup();
    v
}

/// Parses a simple-minded system, reporting the first problem found.
pub fn system(p: &CategoryParams, simples: &[Diagonal]) -> ApiResult<SimpleMindedSystem> {
    admissible(p, simples)?;
    Ok(SimpleMindedSystem::new(p, simples.iter().copied())?)
}

pub fn info(p: &CategoryParams) -> Value {
    json!({
        "rank": p.rank(),
        "weight": p.weight(),
        "polygon_size": p.polygon_size(),
        "indecomposables": p.admissible_diagonals().len(),
    })
}

pub fn category(p: &CategoryParams, format: Format) -> ApiResult<Rendered> {
    match format {
        Format::Json => Ok(Rendered::json(&info(p))),
        Format::Svg => Ok(Rendered::svg(export::polygon_svg(
            p,
            &p.to_string(),
            &[],
            &[],
        ))),
        Format::Dot => Err(unsupported("category", format)),
    }
}

pub fn diagonals(p: &CategoryParams, format: Format) -> ApiResult<Rendered> {
    let all = p.admissible_diagonals();
    match format {
        Format::Json => Ok(Rendered::json(&json!({
            "params": p,
            "count": all.len(),
            "diagonals": all,
        }))),
        Format::Svg => Ok(Rendered::svg(export::polygon_svg(
            p,
            "admissible diagonals",
            &all,
            &[],
        ))),
        Format::Dot => Err(unsupported("diagonals", format)),
    }
}

pub fn ar_quiver(p: &CategoryParams, format: Format) -> ApiResult<Rendered> {
    let q = build_ar_quiver(p);
    match format {
        Format::Json => Ok(Rendered::json(&q)),
        Format::Dot => Ok(Rendered::dot(export::ar_quiver_dot(&q))),
        Format::Svg => Err(unsupported("ar-quiver", format)),
    }
}

#[derive(Serialize)]
struct SystemEntry<'a> {
    id: String,
    simples: &'a [Diagonal],
}

pub fn sms_list(p: &CategoryParams, format: Format) -> ApiResult<Rendered> {
    if format != Format::Json {
        return Err(unsupported("sms", format));
    }
    let systems = enumerate_sms(p);
    let entries: Vec<SystemEntry> = systems
        .iter()
        .map(|s| SystemEntry {
            id: s.id(),
            simples: s.simples(),
        })
        .collect();
    Ok(Rendered::json(&json!({
        "params": p,
        "count": entries.len(),
        "systems": entries,
    })))
}

/// Whether `simples` is a simple-minded system, with the first violation.
pub fn sms_check(p: &CategoryParams, simples: &[Diagonal]) -> ApiResult<Rendered> {
    on_polygon(p, simples)?;
    let simples = sorted(simples.to_vec());
    let violation = sms_violation(p, &simples);
    let mut body = json!({
        "params": p,
        "system": simples,
        "is_sms": violation.is_none(),
        "violation": violation,
    });
    if violation.is_none() && p.weight() >= 2 {
        let s = SimpleMindedSystem::new(p, simples.iter().copied())?;
        body["orthogonality_failures"] =
            serde_json::to_value(orthogonality_failures(p, &simples)?).unwrap();
        body["gabriel_quiver"] = serde_json::to_value(gabriel_quiver(&s)?).unwrap();
    }
    Ok(Rendered::json(&body))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureRequest {
    pub system: Vec<Diagonal>,
    /// Simples generating the torsion class; omitted for no torsion data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<Diagonal>>,
}

pub fn closure(p: &CategoryParams, req: &ClosureRequest, format: Format) -> ApiResult<Rendered> {
    let seed = sorted(req.system.clone());
    admissible(p, &seed)?;
    let c = extension_closure(p, &seed)?;
    let members = c.diagonals();
    match format {
        Format::Json => {
            let mut body = json!({
                "params": p,
                "request": ClosureRequest { system: seed.clone(), torsion: req.torsion.clone().map(sorted) },
                "members": members,
                "simples": simples_of_closure(&c),
                "details": c.members,
            });
            if let Some(t) = &req.torsion {
                body["torsion_pair"] =
                    serde_json::to_value(torsion_pair(&c, &sorted(t.clone()))?).unwrap();
            }
            Ok(Rendered::json(&body))
        }
        Format::Svg => {
            let extras: Vec<Diagonal> = members
                .iter()
                .copied()
                .filter(|m| !seed.contains(m))
                .collect();
            Ok(Rendered::svg(export::polygon_svg(
                p,
                "extension closure",
                &seed,
                &extras,
            )))
        }
        Format::Dot => Err(unsupported("closure", format)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltRequest {
    pub system: Vec<Diagonal>,
    pub pivot: Vec<Diagonal>,
    pub direction: Direction,
}

pub fn tilt(p: &CategoryParams, req: &TiltRequest, format: Format) -> ApiResult<Rendered> {
    let s = system(p, &req.system)?;
    let pivot = sorted(req.pivot.clone());
    on_polygon(p, &pivot)?;
    let mv = tilt_move(&s, &pivot, req.direction)?;
    match format {
        Format::Json => Ok(Rendered::json(&json!({
            "params": p,
            "request": TiltRequest { system: s.simples().to_vec(), pivot, direction: req.direction },
            "system": mv.result.simples(),
            "move": mv,
        }))),
        Format::Svg => {
            let before: Vec<Diagonal> = s
                .simples()
                .iter()
                .copied()
                .filter(|d| !mv.result.contains(*d))
                .collect();
            Ok(Rendered::svg(export::polygon_svg(
                p,
                &format!("{} tilt", req.direction),
                mv.result.simples(),
                &before,
            )))
        }
        Format::Dot => Err(unsupported("tilt", format)),
    }
}

pub fn tilting_graph(p: &CategoryParams, format: Format) -> ApiResult<Rendered> {
    let g = build_graph(p)?;
    match format {
        Format::Json => Ok(Rendered::json(&json!({
            "params": p,
            "nodes": g.nodes,
            "edges": g.edges,
            "components": g.component_count(),
            "weakly_connected": g.is_weakly_connected(),
        }))),
        Format::Dot => Ok(Rendered::dot(export::tilting_graph_dot(&g))),
        Format::Svg => Err(unsupported("tilting-graph", format)),
    }
}

/// Runs the named suites (`all` or a comma separated list).
pub fn verify(p: &CategoryParams, suite: &str) -> ApiResult<(VerifyReport, Rendered)> {
    if p.rank() > MAX_VERIFY_RANK {
        return Err(ApiError::parameter(format!(
            "verification is limited to rank {MAX_VERIFY_RANK}"
        )));
    }
    let suites = Suite::parse_list(suite)?;
    let report = run_verify(p, &suites)?;
    let body = Rendered::json(&json!({
        "params": p,
        "suite": suite,
        "passed": report.passed,
        "checks": report.checks,
    }));
    Ok((report, body))
}
