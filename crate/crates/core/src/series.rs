//! Sampled time series of per-vertex probabilities (or frequencies), the
//! common output unit of the walk, search and kernel computations.

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    /// One row per time sample, one column per vertex/site.
    pub values: Vec<Vec<f64>>,
    pub labels: Vec<String>,
}

impl TimeSeries {
    pub fn new(times: Vec<f64>, values: Vec<Vec<f64>>, labels: Vec<String>) -> Self {
        debug_assert_eq!(times.len(), values.len());
        TimeSeries { times, values, labels }
    }

    /// 1-based vertex labels v1..vN.
    pub fn vertex_labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("v{i}")).collect()
    }

    pub fn rows(&self) -> usize {
        self.times.len()
    }

    pub fn cols(&self) -> usize {
        self.labels.len()
    }
}

/// Uniform grid over [0, t_max] including both endpoints; `steps` intervals,
/// hence steps + 1 samples.
pub fn linspace(t_max: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|i| t_max * i as f64 / steps as f64).collect()
}
