//! Pauli-string decomposition of Hermitian matrices and statevector-level
//! application of strings and their exponentials. Every tensor product of
//! Pauli operators is 1-sparse, so both operations run as bit-indexed
//! permutations with phase bookkeeping instead of dense products.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::graphs::Graph;
use crate::linalg::StateVector;

/// Single-qubit Pauli letter. Ordering gives the lexicographic term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn from_char(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(WalkError::Validation(format!("invalid Pauli letter `{other}`"))),
        }
    }

    fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Tensor product of Pauli letters; letter 0 acts on the most significant
/// bit of the basis index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PauliString {
    letters: Vec<Pauli>,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Result<Self> {
        if letters.is_empty() {
            return Err(WalkError::Validation("empty Pauli string".into()));
        }
        Ok(PauliString { letters })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let letters: Result<Vec<Pauli>> = s.chars().map(Pauli::from_char).collect();
        PauliString::new(letters?)
    }

    pub fn qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    /// Bit masks over basis indices: bits flipped by the string (X and Y),
    /// bits contributing a sign (Z and Y), and the Y count for the i^k
    /// prefactor.
    fn masks(&self) -> (usize, usize, u32) {
        let q = self.letters.len();
        let mut x_mask = 0usize;
        let mut z_mask = 0usize;
        let mut y_count = 0u32;
        for (i, &p) in self.letters.iter().enumerate() {
            let bit = 1 << (q - 1 - i);
            match p {
                Pauli::I => {}
                Pauli::X => x_mask |= bit,
                Pauli::Y => {
                    x_mask |= bit;
                    z_mask |= bit;
                    y_count += 1;
                }
                Pauli::Z => z_mask |= bit,
            }
        }
        (x_mask, z_mask, y_count)
    }

    /// Phase picked up on basis state |b>: P|b> = phase(b) |b ^ x_mask>.
    fn phase(b: usize, z_mask: usize, y_count: u32) -> Complex64 {
        let sign = if (b & z_mask).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        let i_pow = match y_count % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        i_pow * sign
    }

    /// Dense matrix of the string; test and diagnostic use only.
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let dim = self.dim();
        let (x_mask, z_mask, y_count) = self.masks();
        let mut m = DMatrix::from_element(dim, dim, Complex64::ZERO);
        for b in 0..dim {
            m[(b ^ x_mask, b)] = Self::phase(b, z_mask, y_count);
        }
        m
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &p in &self.letters {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

/// Weighted sum of Pauli strings representing a Hermitian operator on
/// `qubits` qubits. Terms are kept in lexicographic order with real
/// coefficients; near-zero coefficients are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTermList {
    pub terms: Vec<(f64, PauliString)>,
    pub qubits: usize,
}

impl PauliTermList {
    /// One `coefficient<TAB>string` line per term, 12 significant digits.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (a, s) in &self.terms {
            out.push_str(&format!("{:.11e}\t{s}\n", a));
        }
        out
    }

    /// Dense reconstruction sum_j a_j P_j; test and diagnostic use only.
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let dim = 1 << self.qubits;
        let mut m = DMatrix::from_element(dim, dim, Complex64::ZERO);
        for (a, s) in &self.terms {
            m += s.to_dense() * Complex64::new(*a, 0.0);
        }
        m
    }
}

const COEFF_CUTOFF: f64 = 1e-12;

/// Hilbert-Schmidt decomposition a_P = Tr(P H) / 2^q over all 4^q strings,
/// enumerated in lexicographic letter order.
pub fn decompose(h: &DMatrix<Complex64>) -> Result<PauliTermList> {
    let dim = h.nrows();
    if h.ncols() != dim {
        return Err(WalkError::Dimension { expected: dim, got: h.ncols() });
    }
    if dim == 0 || !dim.is_power_of_two() {
        return Err(WalkError::Validation(format!(
            "dimension {dim} is not a power of two; zero-pad the matrix first"
        )));
    }
    let scale = h.iter().map(|c| c.norm()).fold(1.0f64, f64::max);
    for i in 0..dim {
        for j in 0..dim {
            if (h[(i, j)] - h[(j, i)].conj()).norm() > 1e-12 * scale {
                return Err(WalkError::Validation(format!(
                    "matrix not Hermitian at ({i},{j})"
                )));
            }
        }
    }
    let q = dim.trailing_zeros() as usize;
    let mut terms = Vec::new();
    let mut letters = vec![Pauli::I; q];
    enumerate_strings(h, dim, q, 0, &mut letters, &mut terms)?;
    Ok(PauliTermList { terms, qubits: q })
}

fn enumerate_strings(
    h: &DMatrix<Complex64>,
    dim: usize,
    q: usize,
    pos: usize,
    letters: &mut Vec<Pauli>,
    terms: &mut Vec<(f64, PauliString)>,
) -> Result<()> {
    if pos == q {
        let s = PauliString::new(letters.clone())?;
        let (x_mask, z_mask, y_count) = s.masks();
        // Tr(P H) = sum_b phase(b ^ x) H[b ^ x, b]
        let tr: Complex64 = (0..dim)
            .map(|b| PauliString::phase(b ^ x_mask, z_mask, y_count) * h[(b ^ x_mask, b)])
            .sum();
        let a = tr / dim as f64;
        if a.im.abs() > 1e-10 {
            return Err(WalkError::Validation(format!(
                "non-real coefficient {a} for {s}; input not Hermitian"
            )));
        }
        if a.re.abs() >= COEFF_CUTOFF {
            terms.push((a.re, s));
        }
        return Ok(());
    }
    for p in [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z] {
        letters[pos] = p;
        enumerate_strings(h, dim, q, pos + 1, letters, terms)?;
    }
    letters[pos] = Pauli::I;
    Ok(())
}

/// Adjacency matrix zero-padded to the next power of two, as a complex
/// matrix ready for `decompose`. Padded basis states stay unreachable under
/// the exact evolution because the padded block is entirely zero.
pub fn padded_adjacency(g: &Graph) -> DMatrix<Complex64> {
    let n = g.n();
    let dim = n.next_power_of_two().max(2);
    DMatrix::from_fn(dim, dim, |i, j| {
        if i < n && j < n && g.has_edge(i, j) {
            Complex64::ONE
        } else {
            Complex64::ZERO
        }
    })
}

/// P|psi> by bit manipulation: X flips a bit, Z contributes (-1)^bit,
/// Y = iXZ phase bookkeeping.
pub fn apply_string(s: &PauliString, psi: &StateVector) -> Result<StateVector> {
    if psi.dim() != s.dim() {
        return Err(WalkError::Dimension { expected: s.dim(), got: psi.dim() });
    }
    let (x_mask, z_mask, y_count) = s.masks();
    let mut out = DVector::from_element(psi.dim(), Complex64::ZERO);
    for b in 0..psi.dim() {
        out[b ^ x_mask] = PauliString::phase(b, z_mask, y_count) * psi.amps[b];
    }
    Ok(StateVector::new(out))
}

/// e^{-i theta P} psi = cos(theta) psi - i sin(theta) P psi, using P^2 = I.
pub fn apply_pauli_exp(s: &PauliString, theta: f64, psi: &StateVector) -> Result<StateVector> {
    let p_psi = apply_string(s, psi)?;
    let c = Complex64::new(theta.cos(), 0.0);
    let ms = Complex64::new(0.0, -theta.sin());
    Ok(StateVector::new(&psi.amps * c + p_psi.amps * ms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Family;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn cplx_mat_max(m: &DMatrix<Complex64>) -> f64 {
        m.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn decompose_z_and_x() {
        let z = DMatrix::from_row_slice(2, 2, &[
            Complex64::ONE, Complex64::ZERO,
            Complex64::ZERO, -Complex64::ONE,
        ]);
        let t = decompose(&z).unwrap();
        assert_eq!(t.terms.len(), 1);
        assert_eq!(t.terms[0].1.to_string(), "Z");
        assert!((t.terms[0].0 - 1.0).abs() < 1e-14);

        let x = DMatrix::from_row_slice(2, 2, &[
            Complex64::ZERO, Complex64::ONE,
            Complex64::ONE, Complex64::ZERO,
        ]);
        let t = decompose(&x).unwrap();
        assert_eq!(t.terms.len(), 1);
        assert_eq!(t.terms[0].1.to_string(), "X");
    }

    #[test]
    fn decompose_cycle4_reconstructs() {
        let g = Graph::family(Family::Cycle, 4).unwrap();
        let h = padded_adjacency(&g);
        let t = decompose(&h).unwrap();
        assert!(cplx_mat_max(&(t.to_dense() - h)) < 1e-10);
        // adjacency is real symmetric: no odd-Y strings survive
        for (_, s) in &t.terms {
            let ys = s.letters().iter().filter(|&&p| p == Pauli::Y).count();
            assert_eq!(ys % 2, 0, "odd-Y term {s}");
        }
    }

    #[test]
    fn decompose_rejects_non_power_of_two() {
        let h = DMatrix::from_element(3, 3, Complex64::ZERO);
        assert!(decompose(&h).is_err());
    }

    #[test]
    fn terms_are_lexicographic() {
        let g = Graph::family(Family::Cycle, 4).unwrap();
        let t = decompose(&padded_adjacency(&g)).unwrap();
        let names: Vec<String> = t.terms.iter().map(|(_, s)| s.to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn apply_string_x_swaps() {
        let s = PauliString::parse("X").unwrap();
        let psi = StateVector::new(DVector::from_vec(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.8, 0.0),
        ]));
        let out = apply_string(&s, &psi).unwrap();
        assert_eq!(out.amps[0], Complex64::new(0.8, 0.0));
        assert_eq!(out.amps[1], Complex64::new(0.6, 0.0));
    }

    #[test]
    fn apply_string_identity() {
        let s = PauliString::parse("III").unwrap();
        let psi = StateVector::basis(8, 5).unwrap();
        let out = apply_string(&s, &psi).unwrap();
        assert_eq!(out.amps, psi.amps);
    }

    #[test]
    fn apply_string_matches_dense() {
        let strings = ["XYZ", "YIZ", "ZZX", "YYY"];
        for name in strings {
            let s = PauliString::parse(name).unwrap();
            let dense = s.to_dense();
            for b in 0..8 {
                let psi = StateVector::basis(8, b).unwrap();
                let fast = apply_string(&s, &psi).unwrap();
                let slow = &dense * &psi.amps;
                for i in 0..8 {
                    assert!((fast.amps[i] - slow[i]).norm() < 1e-14, "{name} b={b}");
                }
            }
        }
    }

    #[test]
    fn exp_at_zero_is_identity() {
        let s = PauliString::parse("XZ").unwrap();
        let psi = StateVector::basis(4, 1).unwrap();
        let out = apply_pauli_exp(&s, 0.0, &psi).unwrap();
        assert_eq!(out.amps, psi.amps);
    }

    #[test]
    fn exp_x_half_pi() {
        let s = PauliString::parse("X").unwrap();
        let psi = StateVector::basis(2, 0).unwrap();
        let out = apply_pauli_exp(&s, FRAC_PI_2, &psi).unwrap();
        assert!(out.amps[0].norm() < 1e-15);
        assert!((out.amps[1] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn exp_zz_on_01_is_phase() {
        let s = PauliString::parse("ZZ").unwrap();
        let psi = StateVector::basis(4, 1).unwrap(); // |01>, ZZ eigenvalue -1
        let theta = 0.37;
        let out = apply_pauli_exp(&s, theta, &psi).unwrap();
        let expect = Complex64::new(0.0, theta).exp(); // e^{+i theta}
        assert!((out.amps[1] - expect).norm() < 1e-14);
        assert!((out.norm() - 1.0).abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn apply_string_is_involution(idx in 0usize..8, name in "[IXYZ]{3}") {
            let s = PauliString::parse(&name).unwrap();
            let psi = StateVector::basis(8, idx).unwrap();
            let twice = apply_string(&s, &apply_string(&s, &psi).unwrap()).unwrap();
            for i in 0..8 {
                prop_assert!((twice.amps[i] - psi.amps[i]).norm() < 1e-15);
            }
        }
    }
}
