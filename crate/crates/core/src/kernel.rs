//! Feynman propagator (kernel) computations on discrete lattices: spectral
//! kernels K(x, x0; t) = sum_n e^{-i E_n t} psi_n*(x0) psi_n(x), the printed
//! closed-form eigen-systems for the discrete ring and line interval (kept
//! verbatim, with a separately orthonormalized copy), the free-particle
//! reference kernel, and a diagnostic comparing the printed formulas with
//! numerically diagonalized operators.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::graphs::{Family, Graph};
use crate::linalg::{evolve_basis_state, hermitian_eig};
use crate::series::TimeSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenKind {
    Ring,
    Interval,
    Numeric,
}

/// Eigenvalues and eigenfunctions feeding a spectral kernel. `verbatim`
/// holds the eigenfunctions exactly as written (possibly non-orthonormal);
/// `orthonormal` is the Gram-Schmidt copy the kernel actually uses. For
/// numeric specs the two coincide.
#[derive(Debug, Clone)]
pub struct EigenSystemSpec {
    pub kind: EigenKind,
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub verbatim: DMatrix<Complex64>,
    pub orthonormal: DMatrix<Complex64>,
}

/// Complex kernel values for a fixed source site: one row per time.
#[derive(Debug, Clone)]
pub struct KernelGrid {
    pub n: usize,
    pub times: Vec<f64>,
    pub values: Vec<Vec<Complex64>>,
}

impl KernelGrid {
    /// |K|^2 rows, the walk-comparable observable.
    pub fn probabilities(&self) -> TimeSeries {
        let values = self
            .values
            .iter()
            .map(|row| row.iter().map(|k| k.norm_sqr()).collect())
            .collect();
        TimeSeries::new(self.times.clone(), values, TimeSeries::vertex_labels(self.n))
    }
}

/// Modified Gram-Schmidt on complex columns. Columns that collapse to
/// (numerically) zero after projection are rejected: the as-written basis
/// is then rank-deficient and has no orthonormal counterpart.
fn gram_schmidt(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let (rows, cols) = m.shape();
    let mut q = m.clone();
    for j in 0..cols {
        for i in 0..j {
            let qi: DVector<Complex64> = q.column(i).into();
            let proj: Complex64 = qi.dotc(&q.column(j).into_owned());
            let col = q.column(j).into_owned() - qi * proj;
            q.set_column(j, &col);
        }
        let norm = q.column(j).iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-10 * rows as f64 {
            return Err(WalkError::Degenerate(format!(
                "eigenfunction column {j} is linearly dependent"
            )));
        }
        let col = q.column(j).into_owned() / Complex64::new(norm, 0.0);
        q.set_column(j, &col);
    }
    Ok(q)
}

/// Numeric spec from a real symmetric operator.
pub fn numeric_eigs(h: &DMatrix<f64>) -> Result<EigenSystemSpec> {
    let spec = hermitian_eig(h)?;
    let n = h.nrows();
    let vecs = DMatrix::from_fn(n, n, |i, j| Complex64::new(spec.eigenvectors[(i, j)], 0.0));
    Ok(EigenSystemSpec {
        kind: EigenKind::Numeric,
        n,
        eigenvalues: spec.eigenvalues.iter().copied().collect(),
        verbatim: vecs.clone(),
        orthonormal: vecs,
    })
}

/// Discrete-ring closed forms, recorded exactly as printed:
/// E_n = sin^2[2 pi (N/2 + 1 - n) / (2(N+1))] and
/// psi_n(x) = exp[i 2 pi (N/2 + 1 - n) x / (2(N+1))], n = 1..N.
pub fn ring_eigs(n_sites: usize) -> Result<EigenSystemSpec> {
    if n_sites < 2 {
        return Err(WalkError::Size { family: "ring", n: n_sites });
    }
    let nf = n_sites as f64;
    let freq = |n: usize| 2.0 * PI * (nf / 2.0 + 1.0 - n as f64) / (2.0 * (nf + 1.0));
    let eigenvalues: Vec<f64> = (1..=n_sites).map(|n| freq(n).sin().powi(2)).collect();
    let verbatim = DMatrix::from_fn(n_sites, n_sites, |x, col| {
        (Complex64::i() * freq(col + 1) * x as f64).exp()
    });
    let orthonormal = gram_schmidt(&verbatim)?;
    Ok(EigenSystemSpec {
        kind: EigenKind::Ring,
        n: n_sites,
        eigenvalues,
        verbatim,
        orthonormal,
    })
}

/// Discrete line-interval closed forms, as printed:
/// E_n = (2 sin(pi n / 2N))^2 and psi_n(x) = cos(pi n x / N), n = 0..N-1.
pub fn interval_eigs(n_sites: usize) -> Result<EigenSystemSpec> {
    if n_sites < 2 {
        return Err(WalkError::Size { family: "interval", n: n_sites });
    }
    let nf = n_sites as f64;
    let eigenvalues: Vec<f64> = (0..n_sites)
        .map(|n| (2.0 * (PI * n as f64 / (2.0 * nf)).sin()).powi(2))
        .collect();
    let verbatim = DMatrix::from_fn(n_sites, n_sites, |x, n| {
        Complex64::new((PI * n as f64 * x as f64 / nf).cos(), 0.0)
    });
    let orthonormal = gram_schmidt(&verbatim)?;
    Ok(EigenSystemSpec {
        kind: EigenKind::Interval,
        n: n_sites,
        eigenvalues,
        verbatim,
        orthonormal,
    })
}

/// The interval operator whose spectrum equals the printed E_n =
/// (2 sin(pi n / 2N))^2 = 2 - 2 cos(pi n / N): the tridiagonal Laplacian
/// with Neumann end corrections (diagonal 1, 2, ..., 2, 1; off-diagonal -1).
pub fn interval_hamiltonian(n_sites: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n_sites, n_sites, |i, j| {
        if i == j {
            if i == 0 || i == n_sites - 1 {
                1.0
            } else {
                2.0
            }
        } else if i.abs_diff(j) == 1 {
            -1.0
        } else {
            0.0
        }
    })
}

/// Spectral kernel for a fixed source, using the orthonormal copy.
pub fn spectral_kernel(spec: &EigenSystemSpec, x0: usize, times: &[f64]) -> Result<KernelGrid> {
    if x0 >= spec.n {
        return Err(WalkError::IndexOutOfRange { index: x0, dim: spec.n });
    }
    let values = times
        .iter()
        .map(|&t| {
            (0..spec.n)
                .map(|x| {
                    (0..spec.n)
                        .map(|k| {
                            (-Complex64::i() * spec.eigenvalues[k] * t).exp()
                                * spec.orthonormal[(x0, k)].conj()
                                * spec.orthonormal[(x, k)]
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    Ok(KernelGrid { n: spec.n, times: times.to_vec(), values })
}

/// Free particle on the real line (hbar = 1):
/// K = (m / (2 pi i t))^{1/2} exp(-m (x - x0)^2 / (2 i t)), principal branch.
pub fn free_particle_kernel(m: f64, x: f64, x0: f64, t: f64) -> Result<Complex64> {
    if t == 0.0 {
        return Err(WalkError::Singular("free-particle kernel undefined at t = 0".into()));
    }
    let prefactor = (Complex64::new(m, 0.0)
        / (Complex64::new(0.0, 2.0 * PI * t)))
    .sqrt();
    let exponent = -Complex64::new(m * (x - x0).powi(2), 0.0) / Complex64::new(0.0, 2.0 * t);
    Ok(prefactor * exponent.exp())
}

/// Max deviations between the printed closed forms and the numerically
/// diagonalized reference operators.
#[derive(Debug, Clone)]
pub struct FormulaDiagnostic {
    pub kind: EigenKind,
    pub n: usize,
    /// Sorted-eigenvalue distance to the reference operator's spectrum.
    pub eigenvalue_max_dev: f64,
    /// Largest |H v - E v| residual of the verbatim eigenfunctions against
    /// the reference operator.
    pub residual_max: f64,
    /// Interval only: same residual for the half-site-offset variant
    /// cos(pi n (x + 1/2) / N).
    pub half_offset_residual_max: Option<f64>,
}

impl std::fmt::Display for FormulaDiagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let kind = match self.kind {
            EigenKind::Ring => "ring",
            EigenKind::Interval => "interval",
            EigenKind::Numeric => "numeric",
        };
        write!(
            f,
            "formula diagnostic ({kind}, N={}): eigenvalue max dev = {:.6e}, eigenfunction residual max = {:.6e}",
            self.n, self.eigenvalue_max_dev, self.residual_max
        )?;
        if let Some(h) = self.half_offset_residual_max {
            write!(f, ", half-offset residual max = {:.6e}", h)?;
        }
        Ok(())
    }
}

fn sorted_dev(mut a: Vec<f64>, mut b: Vec<f64>) -> f64 {
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn max_residual(h: &DMatrix<f64>, spec: &EigenSystemSpec) -> f64 {
    let hc = h.map(|v| Complex64::new(v, 0.0));
    (0..spec.n)
        .map(|k| {
            let v = spec.verbatim.column(k).into_owned();
            let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            let r = &hc * &v - &v * Complex64::new(spec.eigenvalues[k], 0.0);
            r.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt() / norm.max(1e-300)
        })
        .fold(0.0, f64::max)
}

/// Runs the closed-form-formula diagnostic for the given kind against
/// its numeric reference: the cycle adjacency for the ring, the Neumann
/// interval Laplacian for the interval.
pub fn formula_diagnostic(kind: EigenKind, n_sites: usize) -> Result<FormulaDiagnostic> {
    match kind {
        EigenKind::Ring => {
            let spec = ring_eigs(n_sites)?;
            let g = Graph::family(Family::Cycle, n_sites.max(3))?;
            let reference = g.adjacency_matrix();
            let numeric = hermitian_eig(&reference)?;
            Ok(FormulaDiagnostic {
                kind,
                n: n_sites,
                eigenvalue_max_dev: sorted_dev(
                    spec.eigenvalues.clone(),
                    numeric.eigenvalues.iter().copied().collect(),
                ),
                residual_max: max_residual(&reference, &spec),
                half_offset_residual_max: None,
            })
        }
        EigenKind::Interval => {
            let spec = interval_eigs(n_sites)?;
            let reference = interval_hamiltonian(n_sites);
            let numeric = hermitian_eig(&reference)?;
            let nf = n_sites as f64;
            let half_offset = EigenSystemSpec {
                verbatim: DMatrix::from_fn(n_sites, n_sites, |x, n| {
                    Complex64::new((PI * n as f64 * (x as f64 + 0.5) / nf).cos(), 0.0)
                }),
                ..spec.clone()
            };
            Ok(FormulaDiagnostic {
                kind,
                n: n_sites,
                eigenvalue_max_dev: sorted_dev(
                    spec.eigenvalues.clone(),
                    numeric.eigenvalues.iter().copied().collect(),
                ),
                residual_max: max_residual(&reference, &spec),
                half_offset_residual_max: Some(max_residual(&reference, &half_offset)),
            })
        }
        EigenKind::Numeric => Err(WalkError::Config(
            "diagnostic applies to the ring/interval closed forms only".into(),
        )),
    }
}

/// Two routes to the same observable on the N-site interval: |K|^2 from the
/// spectral kernel of the numerically diagonalized operator, and the exact
/// walk probabilities from the matrix exponential of that same operator.
/// `use_adjacency` swaps the Neumann interval Laplacian for the plain path
/// adjacency.
pub fn kernel_walk_comparison(
    n_sites: usize,
    x0: usize,
    times: &[f64],
    use_adjacency: bool,
) -> Result<(TimeSeries, TimeSeries)> {
    let h = if use_adjacency {
        Graph::family(Family::Path, n_sites)?.adjacency_matrix()
    } else {
        interval_hamiltonian(n_sites)
    };
    let spec = numeric_eigs(&h)?;
    let kernel = spectral_kernel(&spec, x0, times)?.probabilities();
    let walk_spec = hermitian_eig(&h)?;
    let walk_values: Vec<Vec<f64>> = times
        .iter()
        .map(|&t| Ok(evolve_basis_state(&walk_spec, x0, t)?.probabilities()))
        .collect::<Result<_>>()?;
    let walk = TimeSeries::new(times.to_vec(), walk_values, TimeSeries::vertex_labels(n_sites));
    Ok((kernel, walk))
}
