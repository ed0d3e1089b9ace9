//! Path-counting classical walk: repeated multiplication of an integer count
//! vector by the adjacency matrix, with probabilities obtained by dividing
//! by the total path count. Counts grow exponentially, so they are kept as
//! big integers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Result, WalkError};
use crate::graphs::Graph;
use crate::series::TimeSeries;

/// Integer path counts per vertex after `step` multiplications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    pub counts: Vec<BigUint>,
    pub step: u64,
}

impl CountVector {
    /// Walker localized on `start`: one path of length zero.
    pub fn start(n: usize, start: usize) -> Result<Self> {
        if start >= n {
            return Err(WalkError::IndexOutOfRange { index: start, dim: n });
        }
        let mut counts = vec![BigUint::zero(); n];
        counts[start] = BigUint::one();
        Ok(CountVector { counts, step: 0 })
    }
}

/// One multiplication by the adjacency matrix; entry j of the result counts
/// paths of length step+1 from the start vertex to j.
pub fn classical_step(g: &Graph, c: &CountVector) -> Result<CountVector> {
    let n = g.n();
    if c.counts.len() != n {
        return Err(WalkError::Dimension { expected: n, got: c.counts.len() });
    }
    let counts = (0..n)
        .map(|i| {
            g.neighbors(i)
                .map(|j| &c.counts[j])
                .fold(BigUint::zero(), |acc, v| acc + v)
        })
        .collect();
    Ok(CountVector { counts, step: c.step + 1 })
}

/// Normalizes counts to probabilities P(j) = counts[j] / sum(counts).
/// A zero total (isolated start vertex after at least one step) is signaled
/// as degenerate rather than divided through.
pub fn classical_probabilities(c: &CountVector) -> Result<Vec<f64>> {
    let total: BigUint = c.counts.iter().sum();
    if total.is_zero() {
        return Err(WalkError::Degenerate(
            "no paths exist at this step (isolated start vertex)".into(),
        ));
    }
    // Exact rational value rounded once to f64: scale numerators so the
    // division stays in range even when counts exceed 2^53.
    let tot = big_to_f64(&total);
    Ok(c.counts.iter().map(|v| big_to_f64(v) / tot).collect())
}

fn big_to_f64(v: &BigUint) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

/// Probability rows for t = 0..=t_max.
pub fn classical_walk_series(g: &Graph, start: usize, t_max: u64) -> Result<TimeSeries> {
    let mut c = CountVector::start(g.n(), start)?;
    let mut times = Vec::with_capacity(t_max as usize + 1);
    let mut values = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        if t > 0 {
            c = classical_step(g, &c)?;
        }
        times.push(t as f64);
        values.push(classical_probabilities(&c)?);
    }
    Ok(TimeSeries::new(times, values, TimeSeries::vertex_labels(g.n())))
}
