//! Browser demo bindings: JSON-in/JSON-out wrappers around the walk,
//! state-transfer and spatial-search computations, thin enough that the
//! page's plotting code stays plain JavaScript.

use graphwalk::ctqw::{detect_state_transfer, quantum_walk_series, WalkConfig};
use graphwalk::graphs::{Family, Graph};
use graphwalk::search::{search_series, SearchConfig};
use graphwalk::trotter::{trotter_walk_series, TrotterConfig};
use graphwalk::TimeSeries;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct SeriesOut {
    times: Vec<f64>,
    values: Vec<Vec<f64>>,
    labels: Vec<String>,
}

impl From<TimeSeries> for SeriesOut {
    fn from(s: TimeSeries) -> Self {
        SeriesOut { times: s.times, values: s.values, labels: s.labels }
    }
}

fn build_graph(family: &str, n: usize) -> Result<Graph, JsValue> {
    let kind: Family = family.parse().map_err(err_str)?;
    Graph::family(kind, n).map_err(err_str)
}

fn err_str(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn to_json(v: &impl Serialize) -> Result<String, JsValue> {
    serde_json::to_string(v).map_err(err_str)
}

/// Exact or Trotterized quantum walk series on a named graph family.
#[wasm_bindgen]
pub fn qwalk_json(
    family: &str,
    n: usize,
    start: usize,
    t_max: f64,
    steps: usize,
    trotter: bool,
    slices_per_unit_time: u32,
) -> Result<String, JsValue> {
    let g = build_graph(family, n)?;
    let series = if trotter {
        let cfg = TrotterConfig { order: 2, slices_per_unit_time, total_time: t_max };
        trotter_walk_series(&g, &cfg, start).map_err(err_str)?
    } else {
        let cfg = WalkConfig { start, t_max, steps, shots: 0, seed: 0 };
        quantum_walk_series(&g, &cfg).map_err(err_str)?
    };
    to_json(&SeriesOut::from(series))
}

#[derive(Serialize)]
struct TransferOut {
    vertex: usize,
    time: f64,
    peak: f64,
}

/// State-transfer peaks above the threshold.
#[wasm_bindgen]
pub fn transfer_json(
    family: &str,
    n: usize,
    start: usize,
    t_max: f64,
    threshold: f64,
) -> Result<String, JsValue> {
    let g = build_graph(family, n)?;
    let events = detect_state_transfer(&g, start, t_max, threshold).map_err(err_str)?;
    let out: Vec<TransferOut> = events
        .into_iter()
        .map(|e| TransferOut { vertex: e.vertex, time: e.time, peak: e.peak })
        .collect();
    to_json(&out)
}

#[derive(Serialize)]
struct SearchOut {
    series: SeriesOut,
    t_star: f64,
    p_star: f64,
}

/// Continuous-time spatial search series plus the target's peak.
#[wasm_bindgen]
pub fn search_json(
    family: &str,
    n: usize,
    target: usize,
    gamma: f64,
    t_max: f64,
    steps: usize,
) -> Result<String, JsValue> {
    let g = build_graph(family, n)?;
    let gamma = if gamma > 0.0 { gamma } else { SearchConfig::default_gamma(n) };
    let cfg = SearchConfig { target, gamma, t_max, steps };
    let (series, summary) = search_series(&g, &cfg).map_err(err_str)?;
    to_json(&SearchOut {
        series: series.into(),
        t_star: summary.t_star,
        p_star: summary.p_star,
    })
}
