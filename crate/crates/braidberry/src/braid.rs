//! The 9x9 M-matrix, its Baxterization into a unitary braid operator
//! R(theta, phi1, phi2), and the residual checks for the algebraic
//! relations it satisfies.
//!
//! Basis ordering throughout: {|00>, |01>, ..., |22>} with |ij> at index
//! 3i + j. M has 18 nonzero entries, each a monomial q1^p q2^r with
//! q1 = exp(i phi1), q2 = exp(i phi2); it is Hermitian and obeys
//! M^2 = M + 2. The braid operator is R = (b + a M)/3 with a = 1/x - x,
//! b = 2x + 1/x, x = exp(i theta); it is unitary with spectrum
//! {x (x6), 1/x (x3)} and solves the Yang-Baxter equation on C^27.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::numeric::ComplexMatrix;
use crate::su3::CoupledSu3Set;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Control parameters (theta, phi1, phi2) of the braid operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BraidParams {
    pub theta: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl BraidParams {
    pub fn new(theta: f64, phi1: f64, phi2: f64) -> Self {
        Self { theta, phi1, phi2 }
    }

    /// Spectral parameter x = exp(i theta).
    pub fn x(&self) -> C64 {
        C64::from_polar(1.0, self.theta)
    }

    pub fn q1(&self) -> C64 {
        C64::from_polar(1.0, self.phi1)
    }

    pub fn q2(&self) -> C64 {
        C64::from_polar(1.0, self.phi2)
    }
}

/// Hecke algebra constants. The quadratic relation is M^2 = alpha M + beta
/// and the braided relation carries g; this family fixes alpha = 1,
/// beta = g = 2 alpha^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeckeParams {
    pub alpha: f64,
    pub beta: f64,
    pub g: f64,
}

impl HeckeParams {
    pub fn standard() -> Self {
        Self { alpha: 1.0, beta: 2.0, g: 2.0 }
    }
}

/// Baxterization coefficients at spectral parameter x.
///
/// R = rho(x) [1 + G(x) M] = (b 1 + a M)/3 with a = 1/x - x, b = 2x + 1/x;
/// equivalently G = a/b and rho = b/3.
#[derive(Debug, Clone, Copy)]
pub struct BaxterCoeffs {
    pub a: C64,
    pub b: C64,
    pub rho: C64,
    pub g: C64,
}

impl BaxterCoeffs {
    pub fn from_x(x: C64) -> Self {
        let a = 1.0 / x - x;
        let b = 2.0 * x + 1.0 / x;
        Self { a, b, rho: b / 3.0, g: a / b }
    }

    pub fn from_theta(theta: f64) -> Self {
        Self::from_x(C64::from_polar(1.0, theta))
    }
}

/// G(x) = -(x - 1/x)/(2x + 1/x).
pub fn g_function(x: C64) -> Result<C64> {
    let den = 2.0 * x + 1.0 / x;
    if den.norm() < 1e-12 {
        return Err(Error::SingularDenominator(den.norm()));
    }
    Ok(-(x - 1.0 / x) / den)
}

/// rho(x) = (2x + 1/x)/3.
pub fn rho_function(x: C64) -> C64 {
    (2.0 * x + 1.0 / x) / 3.0
}

/// Nonzero entries of M as (row, col, p, r) with value q1^p q2^r.
///
/// This table is the single source of truth for M; the time derivative in
/// the dynamics module differentiates the same monomials.
pub(crate) const M_MONOMIALS: [(usize, usize, i32, i32); 18] = [
    (0, 4, -2, 2),
    (0, 8, 0, 2),
    (1, 5, 0, 1),
    (1, 6, 1, 0),
    (2, 3, -1, 0),
    (2, 7, -1, 1),
    (3, 2, 1, 0),
    (3, 7, 0, 1),
    (4, 0, 2, -2),
    (4, 8, 2, 0),
    (5, 1, 0, -1),
    (5, 6, 1, -1),
    (6, 1, -1, 0),
    (6, 5, -1, 1),
    (7, 2, 1, -1),
    (7, 3, 0, -1),
    (8, 0, 0, -2),
    (8, 4, -2, 0),
];

pub(crate) fn monomial(p: i32, r: i32, params: &BraidParams) -> C64 {
    C64::from_polar(1.0, p as f64 * params.phi1 + r as f64 * params.phi2)
}

/// The 9x9 Hermitian M-matrix.
pub fn m_matrix(params: &BraidParams) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(9, 9);
    for &(i, j, p, r) in &M_MONOMIALS {
        m[(i, j)] = monomial(p, r, params);
    }
    m
}

/// M assembled from the three coupled SU(3) sets instead of entry tables.
///
/// The 18 ladder terms: set 1 carries the squared phases, sets 2 and 3 the
/// single ones. Must agree entrywise with [`m_matrix`].
pub fn m_matrix_su3(params: &BraidParams, sets: &[CoupledSu3Set; 3]) -> ComplexMatrix {
    let q1 = params.q1();
    let q2 = params.q2();
    let (s1, s2, s3) = (&sets[0], &sets[1], &sets[2]);

    let mut m = s1.i_plus.scale(q2 * q2 / (q1 * q1));
    m = &m + &s1.i_minus.scale(q1 * q1 / (q2 * q2));
    m = &m + &s1.v_plus.scale(1.0 / (q2 * q2));
    m = &m + &s1.v_minus.scale(q2 * q2);
    m = &m + &s1.u_plus.scale(q1 * q1);
    m = &m + &s1.u_minus.scale(1.0 / (q1 * q1));
    for s in [s2, s3] {
        m = &m + &s.i_plus.scale(q1 / q2);
        m = &m + &s.i_minus.scale(q2 / q1);
        m = &m + &s.v_plus.scale(q2);
        m = &m + &s.v_minus.scale(1.0 / q2);
        m = &m + &s.u_plus.scale(1.0 / q1);
        m = &m + &s.u_minus.scale(q1);
    }
    m
}

/// Unitary braid operator R = (b 1 + a M)/3.
pub fn r_matrix(params: &BraidParams) -> ComplexMatrix {
    let cf = BaxterCoeffs::from_theta(params.theta);
    let mut r = m_matrix(params).scale(cf.a / 3.0);
    let diag = cf.b / 3.0;
    for i in 0..9 {
        r[(i, i)] += diag;
    }
    r
}

/// Residuals of the Hecke algebra relations.
#[derive(Debug, Clone, Copy)]
pub struct HeckeResiduals {
    /// |M^2 - M - 2| on C^9.
    pub quadratic: f64,
    /// |M1 M2 M1 + 2 M1 - M2 M1 M2 - 2 M2| on C^27.
    pub braided: f64,
}

impl HeckeResiduals {
    pub fn max(&self) -> f64 {
        self.quadratic.max(self.braided)
    }
}

/// Check M^2 = M + 2 and the braided relation with M1 = M (x) 1,
/// M2 = 1 (x) M on three qutrits.
pub fn hecke_residuals(params: &BraidParams) -> HeckeResiduals {
    let m = m_matrix(params);
    let m2 = &m * &m;
    let mut q = &m2 - &m;
    for i in 0..9 {
        q[(i, i)] -= c(2.0, 0.0);
    }
    let quadratic = q.frobenius_norm();

    let i3 = ComplexMatrix::identity(3);
    let m1 = m.kron(&i3);
    let m2 = i3.kron(&m);
    let lhs = &(&(&m1 * &m2) * &m1) + &m1.scale(c(2.0, 0.0));
    let rhs = &(&(&m2 * &m1) * &m2) + &m2.scale(c(2.0, 0.0));
    HeckeResiduals { quadratic, braided: lhs.dist(&rhs) }
}

/// Frobenius residual of the Yang-Baxter equation
/// R1(x) R2(xy) R1(y) = R2(y) R1(xy) R2(x) on C^27, with x = exp(i theta1),
/// y = exp(i theta2) and the phases (phi1, phi2) held fixed.
pub fn ybe_residual(theta1: f64, theta2: f64, phi1: f64, phi2: f64) -> f64 {
    let i3 = ComplexMatrix::identity(3);
    let r1 = |th: f64| r_matrix(&BraidParams::new(th, phi1, phi2)).kron(&i3);
    let r2 = |th: f64| i3.kron(&r_matrix(&BraidParams::new(th, phi1, phi2)));
    let lhs = &(&r1(theta1) * &r2(theta1 + theta2)) * &r1(theta2);
    let rhs = &(&r2(theta2) * &r1(theta1 + theta2)) * &r2(theta1);
    lhs.dist(&rhs)
}

/// Residuals of the Baxterization functional equations.
#[derive(Debug, Clone, Copy)]
pub struct BaxterizationResiduals {
    /// G(x) + G(y) + G(x)G(y) - [1 + 2 G(x)G(y)] G(xy)
    pub addition: f64,
    /// G(x) + G(1/x) + G(x)G(1/x)
    pub inverse_sum: f64,
    /// rho(x) rho(1/x) [1 + 2 G(x)G(1/x)] - 1
    pub unitarity_product: f64,
}

impl BaxterizationResiduals {
    pub fn max(&self) -> f64 {
        self.addition.max(self.inverse_sum).max(self.unitarity_product)
    }
}

/// Evaluate the three functional-equation residuals at spectral parameters
/// x, y. Fails if any of the denominators 2z + 1/z (z = x, y, xy, 1/x)
/// degenerates; for unit-modulus x this cannot happen, since
/// |2x + 1/x|^2 = 9 cos^2(theta) + sin^2(theta) >= 1.
pub fn baxterization_residuals(x: C64, y: C64) -> Result<BaxterizationResiduals> {
    let gx = g_function(x)?;
    let gy = g_function(y)?;
    let gxy = g_function(x * y)?;
    let gxi = g_function(1.0 / x)?;
    let addition = (gx + gy + gx * gy - (1.0 + 2.0 * gx * gy) * gxy).norm();
    let inverse_sum = (gx + gxi + gx * gxi).norm();
    let unitarity_product =
        (rho_function(x) * rho_function(1.0 / x) * (1.0 + 2.0 * gx * gxi) - 1.0).norm();
    Ok(BaxterizationResiduals { addition, inverse_sum, unitarity_product })
}

/// Local gauge matrix P = diag(q1/q2, 1, q1) on one qutrit.
pub fn local_gauge_matrix(params: &BraidParams) -> ComplexMatrix {
    let q1 = params.q1();
    let q2 = params.q2();
    ComplexMatrix::diag(&[q1 / q2, c(1.0, 0.0), q1])
}

/// (P (x) P) R(theta, phi1, phi2) (P^-1 (x) P^-1).
///
/// Equals R(theta, 0, 0): the phases are pure gauge and carry no
/// entanglement content.
pub fn gauge_transform(params: &BraidParams) -> ComplexMatrix {
    let p = local_gauge_matrix(params);
    // unit-modulus diagonal, so the inverse is the conjugate
    let p_inv = ComplexMatrix::from_fn(3, 3, |i, j| p[(i, j)].conj());
    let pp = p.kron(&p);
    let pp_inv = p_inv.kron(&p_inv);
    &(&pp * &r_matrix(params)) * &pp_inv
}
