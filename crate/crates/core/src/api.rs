//! JSON payloads shared by the command-line tool and the HTTP service.
//!
//! Every payload is a `serde_json::Value` whose objects have sorted keys and
//! whose edge lists are sorted, so identical requests serialize to identical
//! bytes.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::analyze::report;
use crate::error::{Error, ErrorKind};
use crate::factor::compute_k_factor;
use crate::generate::{
    generate_connected, generate_disconnected, generate_heuristic, FamilyClaim, FamilyParams,
    GenerationParams, DEFAULT_MAX_RETRIES, RNG_ALGORITHM,
};
use crate::seq::{
    is_graphic, is_k_factorable, min_length, rao_connected, DegreeSequence, KabParams,
    LengthBound,
};

/// Failure of an API call: either malformed input or a library error.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApiError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl ApiError {
    pub fn code(&self) -> &'static str {
        match self {
            ApiError::Usage(_) => "usage",
            ApiError::Core(e) => e.code(),
        }
    }

    /// Process exit code: 2 domain-negative, 64 usage, 65 parameter domain, 70 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            ApiError::Usage(_) => 64,
            ApiError::Core(e) => match e.kind() {
                ErrorKind::Domain => 2,
                ErrorKind::Parameter => 65,
                ErrorKind::Internal => 70,
            },
        }
    }

    pub fn envelope(&self) -> Value {
        json!({ "error": { "code": self.code(), "message": self.to_string() } })
    }
}

fn sequence_from(values: Vec<usize>) -> Result<DegreeSequence, ApiError> {
    DegreeSequence::from_unsorted(values).map_err(|e| ApiError::Usage(e.to_string()))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRequest {
    pub seq: Vec<usize>,
    #[serde(default)]
    pub k: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub graphic: bool,
    pub payload: Value,
}

pub fn check(req: CheckRequest) -> Result<CheckOutcome, ApiError> {
    let seq = sequence_from(req.seq)?;
    let graphic = is_graphic(&seq);
    let rao = rao_connected(&seq);
    let mut payload = json!({
        "graphic": graphic,
        "rao_connected": rao.holds(),
        "sequence": seq,
    });
    if let Some(s) = rao.witness() {
        payload["witness_s"] = json!(s);
    }
    if let Some(k) = req.k {
        payload["k"] = json!(k);
        payload["k_factorable"] = json!(is_k_factorable(&seq, k));
    }
    Ok(CheckOutcome { graphic, payload })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenerateMode {
    Connected,
    Disconnected,
    Heuristic,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateRequest {
    pub mode: GenerateMode,
    #[serde(default)]
    pub a: Option<u64>,
    #[serde(default)]
    pub b: Option<u64>,
    pub k: usize,
    #[serde(default)]
    pub n: Option<usize>,
    /// Forces the middle degree in disconnected mode instead of drawing it.
    #[serde(default)]
    pub x: Option<usize>,
    #[serde(default)]
    pub claim: FamilyClaim,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub max_retries: Option<u32>,
}

fn require<T>(value: Option<T>, name: &str, mode: &str) -> Result<T, ApiError> {
    value.ok_or_else(|| ApiError::Usage(format!("mode {mode} requires parameter `{name}`")))
}

pub fn generate(req: GenerateRequest) -> Result<Value, ApiError> {
    match req.mode {
        GenerateMode::Connected | GenerateMode::Heuristic => {
            let name = if req.mode == GenerateMode::Connected {
                "connected"
            } else {
                "heuristic"
            };
            let a = require(req.a, "a", name)?;
            let b = require(req.b, "b", name)?;
            let p = GenerationParams {
                max_retries: req.max_retries.unwrap_or(DEFAULT_MAX_RETRIES),
                ..GenerationParams::new(a, b, req.k, req.seed)
            };
            let (seq, bound) = if req.mode == GenerateMode::Connected {
                (generate_connected(&p)?, LengthBound::Connected)
            } else {
                (generate_heuristic(&p)?, LengthBound::Plain)
            };
            let kab = KabParams::new(a, b)?;
            Ok(json!({
                "mode": name,
                "params": { "a": a, "b": b, "k": req.k, "max_retries": p.max_retries },
                "min_length": min_length(&kab, bound)?,
                "n": seq.len(),
                "rng": RNG_ALGORITHM,
                "seed": req.seed,
                "sequence": seq,
            }))
        }
        GenerateMode::Disconnected => {
            let n = require(req.n, "n", "disconnected")?;
            let (fp, seq) = match req.x {
                Some(x) => {
                    let fp = FamilyParams::with_claim(n, req.k, x, req.claim)?;
                    (fp, fp.sequence())
                }
                None => generate_disconnected(n, req.k, req.claim, req.seed)?,
            };
            Ok(json!({
                "mode": "disconnected",
                "params": { "claim": req.claim, "k": fp.k, "n": fp.n, "x": fp.x },
                "n": seq.len(),
                "rng": RNG_ALGORITHM,
                "seed": req.seed,
                "sequence": seq,
                "witness_s": rao_connected(&seq).witness(),
            }))
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KFactorRequest {
    pub seq: Vec<usize>,
    pub k: usize,
}

/// Full factor bundle; `realization` is the graph on `d` whose k-factor is
/// `factor`, and `d_minus_k_graph` is the remainder after removing it.
pub fn kfactor(req: KFactorRequest) -> Result<Value, ApiError> {
    let seq = sequence_from(req.seq)?;
    let fc = compute_k_factor(&seq, req.k)?;
    let rep = report(&fc)?;
    Ok(json!({
        "counters": fc.counters,
        "d_minus_k_graph": fc.graph_a,
        "factor": fc.factor,
        "initial_complement_graph": fc.initial_b,
        "initial_d_minus_k_graph": fc.initial_a,
        "k": req.k,
        "realization": fc.realization(),
        "report": {
            "factor_components": rep.factor_components,
            "factor_connected": rep.factor_connected,
            "rao_connected": rep.rao.holds(),
            "witness_s": rep.rao.witness(),
        },
        "sequence": seq,
        "trace": fc.trace,
    }))
}

/// Canonical text form: compact JSON (keys already sorted) plus newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
