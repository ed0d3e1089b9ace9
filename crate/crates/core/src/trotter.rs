//! Suzuki-Trotter product-formula evolution of a statevector under a Pauli
//! term list. Orders 1 and 2 are the standard Lie and Strang splittings;
//! even orders >= 4 come from the Suzuki fractal recursion. Term order
//! within a step is the lexicographic order fixed by `pauli::decompose`,
//! so results are deterministic.

use crate::error::{Result, WalkError};
use crate::graphs::Graph;
use crate::linalg::StateVector;
use crate::pauli::{apply_pauli_exp, decompose, padded_adjacency, PauliTermList};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy)]
pub struct TrotterConfig {
    pub order: u32,
    pub slices_per_unit_time: u32,
    pub total_time: f64,
}

impl TrotterConfig {
    pub fn validate(&self) -> Result<()> {
        normalize_order(self.order)?;
        if self.slices_per_unit_time == 0 {
            return Err(WalkError::Config("slices_per_unit_time must be >= 1".into()));
        }
        if !self.total_time.is_finite() || self.total_time < 0.0 {
            return Err(WalkError::Config(format!(
                "total_time {} must be finite and >= 0",
                self.total_time
            )));
        }
        Ok(())
    }

    /// ceil(slices_per_unit_time * total_time), at least 1 for positive time.
    pub fn slice_count(&self) -> usize {
        if self.total_time == 0.0 {
            0
        } else {
            (self.slices_per_unit_time as f64 * self.total_time).ceil().max(1.0) as usize
        }
    }
}

/// Accepted orders are 1, 2 and even k >= 4; order 3 names the reference
/// toolchain's parameter and is mapped to the Suzuki order-4 recursion (one
/// level above the symmetric formula).
fn normalize_order(order: u32) -> Result<u32> {
    match order {
        1 | 2 => Ok(order),
        3 => Ok(4),
        k if k >= 4 && k % 2 == 0 => Ok(k),
        other => Err(WalkError::Config(format!(
            "unsupported Trotter order {other}; use 1, 2, 3 (mapped to 4) or even >= 4"
        ))),
    }
}

/// One product-formula step of duration dt.
pub fn trotter_step(
    terms: &PauliTermList,
    dt: f64,
    order: u32,
    psi: &StateVector,
) -> Result<StateVector> {
    if !dt.is_finite() {
        return Err(WalkError::Config(format!("dt {dt} not finite")));
    }
    let order = normalize_order(order)?;
    if psi.dim() != 1 << terms.qubits {
        return Err(WalkError::Dimension { expected: 1 << terms.qubits, got: psi.dim() });
    }
    step_rec(terms, dt, order, psi)
}

fn step_rec(terms: &PauliTermList, dt: f64, order: u32, psi: &StateVector) -> Result<StateVector> {
    match order {
        1 => {
            let mut psi = psi.clone();
            for (a, s) in &terms.terms {
                psi = apply_pauli_exp(s, a * dt, &psi)?;
            }
            Ok(psi)
        }
        2 => {
            let mut psi = psi.clone();
            for (a, s) in &terms.terms {
                psi = apply_pauli_exp(s, a * dt / 2.0, &psi)?;
            }
            for (a, s) in terms.terms.iter().rev() {
                psi = apply_pauli_exp(s, a * dt / 2.0, &psi)?;
            }
            Ok(psi)
        }
        k => {
            // Suzuki recursion: S_k(dt) = S_{k-2}(p dt)^2 S_{k-2}((1-4p) dt) S_{k-2}(p dt)^2
            let p = 1.0 / (4.0 - 4f64.powf(1.0 / (k as f64 - 1.0)));
            let mut psi = step_rec(terms, p * dt, k - 2, psi)?;
            psi = step_rec(terms, p * dt, k - 2, &psi)?;
            psi = step_rec(terms, (1.0 - 4.0 * p) * dt, k - 2, &psi)?;
            psi = step_rec(terms, p * dt, k - 2, &psi)?;
            step_rec(terms, p * dt, k - 2, &psi)
        }
    }
}

/// Evolves psi0 over cfg.total_time in `slice_count` equal steps; returns
/// the final state and the slice count used.
pub fn trotter_evolve(
    terms: &PauliTermList,
    cfg: &TrotterConfig,
    psi0: &StateVector,
) -> Result<(StateVector, usize)> {
    cfg.validate()?;
    let slices = cfg.slice_count();
    if slices == 0 {
        return Ok((psi0.clone(), 0));
    }
    let dt = cfg.total_time / slices as f64;
    let mut psi = psi0.clone();
    for _ in 0..slices {
        psi = trotter_step(terms, dt, cfg.order, &psi)?;
    }
    Ok((psi, slices))
}

/// Trotterized walk on a graph: decomposes the (zero-padded) adjacency into
/// Pauli terms, evolves slice by slice from the start basis state, and reads
/// the statevector at every slice boundary (one row per slice, no shot
/// sampling). Probabilities are reported for the physical vertices only.
pub fn trotter_walk_series(g: &Graph, cfg: &TrotterConfig, start: usize) -> Result<TimeSeries> {
    cfg.validate()?;
    if start >= g.n() {
        return Err(WalkError::IndexOutOfRange { index: start, dim: g.n() });
    }
    let h = padded_adjacency(g);
    let terms = decompose(&h)?;
    let slices = cfg.slice_count();
    let mut psi = StateVector::basis(h.nrows(), start)?;
    let dt = if slices == 0 { 0.0 } else { cfg.total_time / slices as f64 };
    let mut times = Vec::with_capacity(slices);
    let mut values = Vec::with_capacity(slices);
    for i in 0..slices {
        psi = trotter_step(&terms, dt, cfg.order, &psi)?;
        times.push(dt * (i + 1) as f64);
        values.push(psi.probabilities()[..g.n()].to_vec());
    }
    Ok(TimeSeries::new(times, values, TimeSeries::vertex_labels(g.n())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Family;
    use crate::linalg::{evolve_basis_state, hermitian_eig};
    use crate::pauli::PauliString;
    use nalgebra::DVector;
    use num_complex::Complex64;

    fn single_term(name: &str, a: f64) -> PauliTermList {
        PauliTermList {
            qubits: name.len(),
            terms: vec![(a, PauliString::parse(name).unwrap())],
        }
    }

    fn state_dist(a: &StateVector, b: &StateVector) -> f64 {
        (&a.amps - &b.amps).iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    #[test]
    fn single_term_is_exact_for_any_order() {
        let terms = single_term("X", 1.0);
        let psi = StateVector::basis(2, 0).unwrap();
        let dt = 0.83f64;
        let exact = StateVector::new(DVector::from_vec(vec![
            Complex64::new(dt.cos(), 0.0),
            Complex64::new(0.0, -dt.sin()),
        ]));
        for order in [1, 2, 3, 4, 6] {
            let out = trotter_step(&terms, dt, order, &psi).unwrap();
            assert!(state_dist(&out, &exact) < 1e-12, "order {order}");
        }
    }

    #[test]
    fn commuting_terms_are_exact() {
        let terms = PauliTermList {
            qubits: 2,
            terms: vec![
                (1.0, PauliString::parse("IZ").unwrap()),
                (1.0, PauliString::parse("ZI").unwrap()),
            ],
        };
        // uniform superposition
        let amp = Complex64::new(0.5, 0.0);
        let psi = StateVector::new(DVector::from_element(4, amp));
        let dt = 1.7;
        let out1 = trotter_step(&terms, dt, 1, &psi).unwrap();
        let out2 = trotter_step(&terms, dt, 2, &psi).unwrap();
        assert!(state_dist(&out1, &out2) < 1e-12);
        // exact phases: e^{-i dt (z0 + z1)} per basis state
        for b in 0..4usize {
            let z = |bit: usize| if (b >> bit) & 1 == 0 { 1.0 } else { -1.0 };
            let expect = amp * (-Complex64::i() * dt * (z(0) + z(1))).exp();
            assert!((out1.amps[b] - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn cycle4_step_close_to_exact() {
        let g = Graph::family(Family::Cycle, 4).unwrap();
        let terms = decompose(&padded_adjacency(&g)).unwrap();
        let spec = hermitian_eig(&g.adjacency_matrix()).unwrap();
        let dt = 0.1;
        let stepped = trotter_step(&terms, dt, 2, &StateVector::basis(4, 0).unwrap()).unwrap();
        let exact = evolve_basis_state(&spec, 0, dt).unwrap();
        assert!(state_dist(&stepped, &exact) < 1e-4);
    }

    #[test]
    fn zero_time_is_identity() {
        let terms = single_term("XY", 0.7);
        let cfg = TrotterConfig { order: 2, slices_per_unit_time: 10, total_time: 0.0 };
        let psi = StateVector::basis(4, 2).unwrap();
        let (out, slices) = trotter_evolve(&terms, &cfg, &psi).unwrap();
        assert_eq!(slices, 0);
        assert_eq!(out.amps, psi.amps);
    }

    #[test]
    fn slice_count_matches_reference_settings() {
        let cfg = TrotterConfig { order: 3, slices_per_unit_time: 10, total_time: 25.0 };
        assert_eq!(cfg.slice_count(), 250);
    }

    #[test]
    fn cycle4_terms_commute_so_trotter_is_exact() {
        // cycle(4) decomposes into IX + XX, which commute; any slice count
        // reproduces the exact evolution to roundoff
        let g = Graph::family(Family::Cycle, 4).unwrap();
        let terms = decompose(&padded_adjacency(&g)).unwrap();
        let names: Vec<String> = terms.terms.iter().map(|(_, s)| s.to_string()).collect();
        assert_eq!(names, vec!["IX", "XX"]);
        let spec = hermitian_eig(&g.adjacency_matrix()).unwrap();
        let exact = evolve_basis_state(&spec, 0, 1.0).unwrap();
        for slices in [1, 5, 80] {
            let cfg = TrotterConfig { order: 2, slices_per_unit_time: slices, total_time: 1.0 };
            let (out, _) =
                trotter_evolve(&terms, &cfg, &StateVector::basis(4, 0).unwrap()).unwrap();
            assert!(state_dist(&out, &exact) < 1e-12);
        }
    }

    /// Deterministic non-commuting 3-qubit Hermitian for convergence tests.
    fn noncommuting_terms() -> PauliTermList {
        PauliTermList {
            qubits: 3,
            terms: vec![
                (0.9, PauliString::parse("IIX").unwrap()),
                (0.7, PauliString::parse("IZZ").unwrap()),
                (-0.4, PauliString::parse("XXI").unwrap()),
                (0.3, PauliString::parse("ZXI").unwrap()),
            ],
        }
    }

    #[test]
    fn order2_error_quarters_when_slices_double() {
        let terms = noncommuting_terms();
        let h = terms.to_dense();
        let hr = nalgebra::DMatrix::from_fn(8, 8, |i, j| h[(i, j)].re);
        let spec = hermitian_eig(&hr).unwrap();
        let exact = evolve_basis_state(&spec, 0, 1.0).unwrap();
        let err = |slices: u32| {
            let cfg = TrotterConfig { order: 2, slices_per_unit_time: slices, total_time: 1.0 };
            let (out, _) = trotter_evolve(&terms, &cfg, &StateVector::basis(8, 0).unwrap()).unwrap();
            state_dist(&out, &exact)
        };
        let r = err(10) / err(20);
        assert!((3.5..=4.5).contains(&r), "ratio {r}");
    }

    #[test]
    fn order1_error_halves_when_slices_double() {
        let terms = noncommuting_terms();
        let h = terms.to_dense();
        let hr = nalgebra::DMatrix::from_fn(8, 8, |i, j| h[(i, j)].re);
        let spec = hermitian_eig(&hr).unwrap();
        let exact = evolve_basis_state(&spec, 0, 1.0).unwrap();
        let err = |slices: u32| {
            let cfg = TrotterConfig { order: 1, slices_per_unit_time: slices, total_time: 1.0 };
            let (out, _) = trotter_evolve(&terms, &cfg, &StateVector::basis(8, 0).unwrap()).unwrap();
            state_dist(&out, &exact)
        };
        let r = err(10) / err(20);
        assert!((1.7..=2.3).contains(&r), "ratio {r}");
    }

    #[test]
    fn reversal_returns_start() {
        let g = Graph::family(Family::Cycle, 4).unwrap();
        let terms = decompose(&padded_adjacency(&g)).unwrap();
        let psi0 = StateVector::basis(4, 0).unwrap();
        let mut psi = psi0.clone();
        let dt = 0.05;
        for _ in 0..100 {
            psi = trotter_step(&terms, dt, 2, &psi).unwrap();
        }
        for _ in 0..100 {
            psi = trotter_step(&terms, -dt, 2, &psi).unwrap();
        }
        assert!(state_dist(&psi, &psi0) < 1e-9);
        assert!((psi.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn octagon_series_row_sums_and_symmetry() {
        let g = Graph::family(Family::Cycle, 8).unwrap();
        let cfg = TrotterConfig { order: 2, slices_per_unit_time: 10, total_time: 2.0 };
        let s = trotter_walk_series(&g, &cfg, 0).unwrap();
        assert_eq!(s.rows(), 20);
        for row in &s.values {
            let sum: f64 = row.iter().sum();
            assert!((sum - 1.0).abs() < 1e-9);
        }
        // octagon symmetry about the start: vertices 1 and 7 rise together
        for row in &s.values {
            assert!((row[1] - row[7]).abs() < 5e-3);
        }
    }
}
