//! Dense complex linear algebra: statevectors, Hermitian eigendecomposition
//! with a deterministic ordering convention, and spectral matrix exponentials.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Result, WalkError};

const SYMMETRY_TOL: f64 = 1e-12;

/// Complex amplitude vector over basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub amps: DVector<Complex64>,
}

impl StateVector {
    pub fn new(amps: DVector<Complex64>) -> Self {
        StateVector { amps }
    }

    /// Basis vector |index> in dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(WalkError::IndexOutOfRange { index, dim });
        }
        let mut amps = DVector::from_element(dim, Complex64::ZERO);
        amps[index] = Complex64::ONE;
        Ok(StateVector { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Measurement probabilities |amps|^2.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// Eigendecomposition of a real symmetric matrix: ascending eigenvalues,
/// orthonormal real eigenvector columns with a fixed sign convention.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: DVector<f64>,
    pub eigenvectors: DMatrix<f64>,
}

/// m x m complex matrix produced by `expm_spectral`; unitary up to
/// numerical tolerance.
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    pub entries: DMatrix<Complex64>,
}

/// Full eigendecomposition of a symmetric matrix. Eigenvalues are sorted
/// ascending; each eigenvector's first component of magnitude > 1e-12 is
/// made positive, so the output is deterministic for a given input.
pub fn hermitian_eig(h: &DMatrix<f64>) -> Result<Spectrum> {
    let m = h.nrows();
    if h.ncols() != m {
        return Err(WalkError::Dimension { expected: m, got: h.ncols() });
    }
    let scale = h.amax().max(1.0);
    for i in 0..m {
        for j in 0..m {
            if (h[(i, j)] - h[(j, i)]).abs() > SYMMETRY_TOL * scale {
                return Err(WalkError::Validation(format!(
                    "matrix not symmetric at ({i},{j})"
                )));
            }
        }
    }
    let eig = h.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let eigenvalues = DVector::from_fn(m, |k, _| eig.eigenvalues[order[k]]);
    let mut eigenvectors = DMatrix::zeros(m, m);
    for (k, &src) in order.iter().enumerate() {
        let mut col: DVector<f64> = eig.eigenvectors.column(src).into();
        if let Some(first) = col.iter().find(|v| v.abs() > 1e-12) {
            if *first < 0.0 {
                col.neg_mut();
            }
        }
        eigenvectors.set_column(k, &col);
    }
    Ok(Spectrum { eigenvalues, eigenvectors })
}

/// e^{-iHt} assembled from the spectral sum sum_n e^{-i lambda_n t} v_n v_n^T.
pub fn expm_spectral(spec: &Spectrum, t: f64) -> UnitaryMatrix {
    let m = spec.eigenvalues.len();
    let phases: Vec<Complex64> = spec
        .eigenvalues
        .iter()
        .map(|&lam| (-Complex64::i() * lam * t).exp())
        .collect();
    let entries = DMatrix::from_fn(m, m, |i, j| {
        (0..m)
            .map(|k| phases[k] * spec.eigenvectors[(i, k)] * spec.eigenvectors[(j, k)])
            .sum()
    });
    UnitaryMatrix { entries }
}

/// U * psi.
pub fn apply(u: &UnitaryMatrix, psi: &StateVector) -> Result<StateVector> {
    if u.entries.ncols() != psi.dim() {
        return Err(WalkError::Dimension { expected: u.entries.ncols(), got: psi.dim() });
    }
    Ok(StateVector::new(&u.entries * &psi.amps))
}

/// Largest entry magnitude of a complex matrix.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Amplitudes of e^{-iHt}|start> without forming the full matrix:
/// amp_j = sum_k e^{-i lambda_k t} V[j,k] V[start,k].
pub fn evolve_basis_state(spec: &Spectrum, start: usize, t: f64) -> Result<StateVector> {
    let m = spec.eigenvalues.len();
    if start >= m {
        return Err(WalkError::IndexOutOfRange { index: start, dim: m });
    }
    let phases: Vec<Complex64> = spec
        .eigenvalues
        .iter()
        .map(|&lam| (-Complex64::i() * lam * t).exp())
        .collect();
    let amps = DVector::from_fn(m, |j, _| {
        (0..m)
            .map(|k| phases[k] * spec.eigenvectors[(j, k)] * spec.eigenvectors[(start, k)])
            .sum()
    });
    Ok(StateVector::new(amps))
}
