//! Two-qutrit states generated by the braid operator and their negativity.
//!
//! Acting R(theta, phi1, phi2) on a product basis state |ij> produces a
//! pure state whose entanglement depends only on theta:
//!
//!   N(theta) = 4/9 (sin^2 theta + |sin theta| sqrt(1 + 8 cos^2 theta)),
//!
//! ranging over [0, 1] but not monotonically; theta = pi/3 gives the nine
//! maximally entangled basis states at once.

use num_complex::Complex64 as C64;

use crate::braid::{r_matrix, BraidParams};
use crate::error::{Error, Result};
use crate::numeric::{herm_eig, ComplexVector};

/// Normalized two-qutrit pure state over {|00>, ..., |22>}.
#[derive(Debug, Clone)]
pub struct QutritState {
    amplitudes: ComplexVector,
}

impl QutritState {
    /// Wrap a length-9 amplitude vector; must be normalized to 1e-12.
    pub fn new(amplitudes: ComplexVector) -> Result<Self> {
        if amplitudes.dim() != 9 {
            return Err(Error::DimensionMismatch(amplitudes.dim(), 1, 9, 1));
        }
        let n = amplitudes.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized(n));
        }
        Ok(Self { amplitudes })
    }

    pub fn amplitudes(&self) -> &ComplexVector {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize) -> C64 {
        self.amplitudes[i]
    }
}

/// psi = R(params) |basis_index>.
pub fn generate_state(params: &BraidParams, basis_index: usize) -> Result<QutritState> {
    if basis_index > 8 {
        return Err(Error::InvalidBasisIndex(basis_index));
    }
    let r = r_matrix(params);
    // R is unitary, so the column is normalized up to rounding; renormalize
    // to keep the state invariant exact.
    QutritState::new(r.column(basis_index).normalized())
}

/// Negativity via the spectrum of the partial transpose:
/// N = |sum of negative eigenvalues of rho^{T_A}|.
///
/// Eigenvalues in [-1e-12, 0) are rounding noise and are clamped to zero
/// so that product states report exactly no entanglement.
pub fn negativity(psi: &QutritState) -> f64 {
    let rho = psi.amplitudes.outer(&psi.amplitudes);
    let pt = rho.partial_transpose_a(3).expect("9 = 3^2");
    let eig = herm_eig(&pt).expect("rho^{T_A} is Hermitian");
    eig.eigenvalues
        .iter()
        .filter(|&&l| l < -1e-12)
        .map(|l| -l)
        .sum()
}

/// Negativity via the trace norm, N = (|rho^{T_A}|_1 - 1)/2.
///
/// Same quantity by a different route; kept as a cross-check on
/// [`negativity`].
pub fn negativity_via_trace_norm(psi: &QutritState) -> f64 {
    let rho = psi.amplitudes.outer(&psi.amplitudes);
    let pt = rho.partial_transpose_a(3).expect("9 = 3^2");
    let tn = pt.trace_norm().expect("square");
    ((tn - 1.0) / 2.0).max(0.0)
}

/// Closed form N(theta) for any state R(theta, ., .)|ij>.
pub fn negativity_closed(theta: f64) -> f64 {
    let s = theta.sin();
    let c = theta.cos();
    4.0 / 9.0 * (s * s + s.abs() * (1.0 + 8.0 * c * c).sqrt())
}

/// The nine orthonormal maximally entangled states: columns of
/// R(pi/3, phi1, phi2). Each has negativity 1 regardless of the phases.
pub fn maximally_entangled_basis(phi1: f64, phi2: f64) -> [QutritState; 9] {
    let params = BraidParams::new(std::f64::consts::PI / 3.0, phi1, phi2);
    let r = r_matrix(&params);
    std::array::from_fn(|j| {
        QutritState::new(r.column(j).normalized()).expect("unitary column")
    })
}

/// One row of a negativity sweep, numeric against closed form.
#[derive(Debug, Clone, Copy)]
pub struct NegativityReport {
    pub theta: f64,
    pub basis_state: usize,
    pub numeric: f64,
    pub closed_form: f64,
}

impl NegativityReport {
    pub fn compute(params: &BraidParams, basis_index: usize) -> Result<Self> {
        let psi = generate_state(params, basis_index)?;
        Ok(Self {
            theta: params.theta,
            basis_state: basis_index,
            numeric: negativity(&psi),
            closed_form: negativity_closed(params.theta),
        })
    }

    pub fn abs_diff(&self) -> f64 {
        (self.numeric - self.closed_form).abs()
    }
}
