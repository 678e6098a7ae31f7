//! Dynamics generated by driving the braid operator's phases.
//!
//! With theta fixed and phi_i = n_i omega t, the Hamiltonian
//! H = i hbar (dR/dt) R^dag is Hermitian and block-diagonal over the three
//! invariant qutrit-pair blocks
//!
//!   k = 1: {|00>, |11>, |22>},
//!   k = 2: {|01>, |12>, |20>},
//!   k = 3: {|02>, |10>, |21>}.
//!
//! Each block has the time-independent spectrum {+E_k, 0, -E_k} with
//! E_1 = (4 sqrt(2)/3) hbar n omega sin(theta), E_{2,3} = E_1 / 2 and
//! n = sqrt(n1^2 - n1 n2 + n2^2). Closed-form eigenvectors, the SU(3)
//! expansion coefficients, drive periods, and the SU(2) reduction at
//! n1 = n2 all live here; Berry phases, the orthogonal block splitting,
//! and the effective oscillator parameters are in the submodules.

mod berry;
mod blockdiag;
mod oscillator;

pub use berry::{berry_closed, berry_numeric, canonicalize_phase, wrap_distance, BerryResult, PhaseMethod};
pub use blockdiag::{appendix_p, block_diagonalize, BlockDecomposition, Sector, BLOCK_LAYOUT, BLOCK_SIZES};
pub use oscillator::{oscillator_params, OscillatorForm};

use num_complex::Complex64 as C64;

use crate::braid::{monomial, BraidParams, M_MONOMIALS};
use crate::error::{Error, Result};
use crate::numeric::{ComplexMatrix, ComplexVector};
use crate::su3::{su2_set, CoupledSu3Set};

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// One of the three invariant blocks of the two-qutrit space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsystemId {
    First,
    Second,
    Third,
}

impl SubsystemId {
    pub const ALL: [SubsystemId; 3] = [SubsystemId::First, SubsystemId::Second, SubsystemId::Third];

    pub fn from_index(k: usize) -> Result<Self> {
        match k {
            1 => Ok(SubsystemId::First),
            2 => Ok(SubsystemId::Second),
            3 => Ok(SubsystemId::Third),
            _ => Err(Error::InvalidSubsystem(k)),
        }
    }

    pub fn index(&self) -> usize {
        match self {
            SubsystemId::First => 1,
            SubsystemId::Second => 2,
            SubsystemId::Third => 3,
        }
    }

    /// Positions of the block's basis triple inside {|00>, ..., |22>}.
    pub fn basis_indices(&self) -> [usize; 3] {
        match self {
            SubsystemId::First => [0, 4, 8],
            SubsystemId::Second => [1, 5, 6],
            SubsystemId::Third => [2, 3, 7],
        }
    }

    pub fn basis_labels(&self) -> [&'static str; 3] {
        match self {
            SubsystemId::First => ["00", "11", "22"],
            SubsystemId::Second => ["01", "12", "20"],
            SubsystemId::Third => ["02", "10", "21"],
        }
    }
}

/// Energy band label within one subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    Plus,
    Zero,
    Minus,
}

impl Band {
    pub const ALL: [Band; 3] = [Band::Plus, Band::Zero, Band::Minus];

    pub fn label(&self) -> char {
        match self {
            Band::Plus => '+',
            Band::Zero => '0',
            Band::Minus => '-',
        }
    }

    pub fn sign(&self) -> f64 {
        match self {
            Band::Plus => 1.0,
            Band::Zero => 0.0,
            Band::Minus => -1.0,
        }
    }
}

/// Harmonic drive phi_i = n_i omega t on top of a fixed theta.
///
/// (n1, n2) is stored in lowest terms; `new` reduces automatically. Both
/// integers must be nonzero. hbar defaults to 1 and only rescales energies,
/// never phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveParams {
    pub theta: f64,
    pub n1: i64,
    pub n2: i64,
    pub omega: f64,
    pub hbar: f64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl DriveParams {
    pub fn new(theta: f64, n1: i64, n2: i64, omega: f64) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::InvalidDrive(format!("n1 and n2 must be nonzero (got {n1}, {n2})")));
        }
        if !theta.is_finite() || !omega.is_finite() || omega <= 0.0 {
            return Err(Error::InvalidDrive(format!(
                "theta and omega must be finite with omega > 0 (got theta = {theta}, omega = {omega})"
            )));
        }
        let g = gcd(n1, n2);
        Ok(Self { theta, n1: n1 / g, n2: n2 / g, omega, hbar: 1.0 })
    }

    pub fn with_hbar(mut self, hbar: f64) -> Self {
        self.hbar = hbar;
        self
    }

    /// n = sqrt(n1^2 - n1 n2 + n2^2), the scale entering every energy and
    /// normalization.
    pub fn n_scalar(&self) -> f64 {
        ((self.n1 * self.n1 - self.n1 * self.n2 + self.n2 * self.n2) as f64).sqrt()
    }

    pub fn phi1(&self, t: f64) -> f64 {
        self.n1 as f64 * self.omega * t
    }

    pub fn phi2(&self, t: f64) -> f64 {
        self.n2 as f64 * self.omega * t
    }

    pub fn braid_params(&self, t: f64) -> BraidParams {
        BraidParams::new(self.theta, self.phi1(t), self.phi2(t))
    }

    /// True at the critical points sin(theta) = 0 where all bands collapse.
    pub fn is_degenerate(&self) -> bool {
        self.theta.sin().abs() < 1e-12
    }

    /// Overall scale C(k) of the SU(3) expansion:
    /// C(1) = -(8 sqrt(2)/3) hbar omega sin(theta), C(2) = C(3) = C(1)/2.
    pub fn energy_scale(&self, k: SubsystemId) -> f64 {
        let base = -8.0 * SQRT2 / 3.0 * self.hbar * self.omega * self.theta.sin();
        match k {
            SubsystemId::First => base,
            _ => base / 2.0,
        }
    }

    /// Closed-form band energy of subsystem k.
    pub fn band_energy(&self, k: SubsystemId, band: Band) -> f64 {
        let scale = match k {
            SubsystemId::First => 4.0,
            _ => 2.0,
        };
        band.sign() * scale * SQRT2 / 3.0 * self.hbar * self.n_scalar() * self.omega
            * self.theta.sin()
    }
}

/// The shorthand scalars the closed-form eigenvectors are written in.
///
/// alpha_pm = 3 n1 +- 2 sqrt(2) n sin(theta), beta_pm = 3 n1 +- sqrt(2) i
/// conj(b) n, delta_pm and eta_pm the same with n1 -> n2 (eta carries b, not
/// conj(b)), where b = 2 exp(i theta) + exp(-i theta).
#[derive(Debug, Clone, Copy)]
pub struct ShorthandScalars {
    pub n: f64,
    pub b: C64,
    pub alpha_plus: f64,
    pub alpha_minus: f64,
    pub beta_plus: C64,
    pub beta_minus: C64,
    pub delta_plus: f64,
    pub delta_minus: f64,
    pub eta_plus: C64,
    pub eta_minus: C64,
    n1: f64,
    n2: f64,
    sin_theta: f64,
}

impl ShorthandScalars {
    pub fn new(drive: &DriveParams) -> Self {
        let n = drive.n_scalar();
        let s = drive.theta.sin();
        let x = C64::from_polar(1.0, drive.theta);
        let b = 2.0 * x + 1.0 / x;
        let n1 = drive.n1 as f64;
        let n2 = drive.n2 as f64;
        let i = c(0.0, 1.0);
        Self {
            n,
            b,
            alpha_plus: 3.0 * n1 + 2.0 * SQRT2 * n * s,
            alpha_minus: 3.0 * n1 - 2.0 * SQRT2 * n * s,
            beta_plus: 3.0 * n1 + SQRT2 * i * b.conj() * n,
            beta_minus: 3.0 * n1 - SQRT2 * i * b.conj() * n,
            delta_plus: 3.0 * n2 + 2.0 * SQRT2 * n * s,
            delta_minus: 3.0 * n2 - 2.0 * SQRT2 * n * s,
            eta_plus: 3.0 * n2 + SQRT2 * i * b * n,
            eta_minus: 3.0 * n2 - SQRT2 * i * b * n,
            n1,
            n2,
            sin_theta: s,
        }
    }

    /// Closed-form normalization N_band^(k).
    pub fn norm_sq(&self, k: SubsystemId, band: Band) -> f64 {
        let (n, n1, n2, s) = (self.n, self.n1, self.n2, self.sin_theta);
        let nn = n * n;
        match (k, band) {
            (_, Band::Zero) => 2.0 * nn,
            (SubsystemId::First, Band::Plus) => {
                12.0 * nn * (6.0 * nn + 2.0 * SQRT2 * (n1 - 2.0 * n2) * n * s - 3.0 * n1 * n1)
            }
            (SubsystemId::First, Band::Minus) => {
                12.0 * nn * (6.0 * nn - 2.0 * SQRT2 * (n1 - 2.0 * n2) * n * s - 3.0 * n1 * n1)
            }
            (_, Band::Plus) => {
                12.0 * nn * (3.0 * nn - 2.0 * SQRT2 * (n1 + n2) * n * s + 3.0 * n1 * n2)
            }
            (_, Band::Minus) => {
                12.0 * nn * (3.0 * nn + 2.0 * SQRT2 * (n1 + n2) * n * s + 3.0 * n1 * n2)
            }
        }
    }
}

/// dM/dt: every entry of M is a monomial q1^p q2^r, so its derivative is
/// i (p n1 + r n2) omega times the entry. Exact, no finite differences.
fn m_dot(drive: &DriveParams, t: f64) -> ComplexMatrix {
    let params = drive.braid_params(t);
    let mut md = ComplexMatrix::zeros(9, 9);
    for &(i, j, p, r) in &M_MONOMIALS {
        let rate = (p as i64 * drive.n1 + r as i64 * drive.n2) as f64 * drive.omega;
        md[(i, j)] = c(0.0, rate) * monomial(p, r, &params);
    }
    md
}

/// dR/dt = (a/3) dM/dt.
pub fn r_dot(drive: &DriveParams, t: f64) -> ComplexMatrix {
    let x = C64::from_polar(1.0, drive.theta);
    let a = 1.0 / x - x;
    m_dot(drive, t).scale(a / 3.0)
}

/// H(t) = i hbar (dR/dt) R^dag. Hermitian, block-diagonal over the three
/// subsystem triples.
pub fn hamiltonian(drive: &DriveParams, t: f64) -> ComplexMatrix {
    let r = crate::braid::r_matrix(&drive.braid_params(t));
    let rd = r_dot(drive, t);
    rd.matmul(&r.dagger()).unwrap().scale(c(0.0, drive.hbar))
}

/// The 3x3 Hamiltonian of subsystem k, built directly on the block.
///
/// Same matrix as restricting [`hamiltonian`], but O(1) instead of a 9x9
/// product; the Berry-phase time loops live on this.
pub fn hamiltonian_block(drive: &DriveParams, k: SubsystemId, t: f64) -> ComplexMatrix {
    let idx = k.basis_indices();
    let params = drive.braid_params(t);
    let mut m = ComplexMatrix::zeros(3, 3);
    let mut md = ComplexMatrix::zeros(3, 3);
    for &(i, j, p, r) in &M_MONOMIALS {
        let (Some(bi), Some(bj)) =
            (idx.iter().position(|&v| v == i), idx.iter().position(|&v| v == j))
        else {
            continue;
        };
        let entry = monomial(p, r, &params);
        m[(bi, bj)] = entry;
        let rate = (p as i64 * drive.n1 + r as i64 * drive.n2) as f64 * drive.omega;
        md[(bi, bj)] = c(0.0, rate) * entry;
    }
    // H = (i hbar / 9) (a conj(b) Mdot + |a|^2 Mdot M)
    let x = C64::from_polar(1.0, drive.theta);
    let a = 1.0 / x - x;
    let b = 2.0 * x + 1.0 / x;
    let first = md.scale(a * b.conj());
    let second = md.matmul(&m).unwrap().scale(c(a.norm_sqr(), 0.0));
    (&first + &second).scale(c(0.0, drive.hbar / 9.0))
}

/// Largest entry of `h` coupling two different subsystem blocks.
pub fn off_block_leakage(h: &ComplexMatrix) -> f64 {
    let block_of = |i: usize| match i {
        0 | 4 | 8 => 0,
        1 | 5 | 6 => 1,
        _ => 2,
    };
    let mut worst = 0.0_f64;
    for i in 0..9 {
        for j in 0..9 {
            if block_of(i) != block_of(j) {
                worst = worst.max(h[(i, j)].norm());
            }
        }
    }
    worst
}

/// Restrict a 9x9 block-diagonal operator to subsystem k, in the block's
/// listed basis order. Couplings between blocks above 1e-9 are a
/// structural error.
pub fn subsystem_block(h: &ComplexMatrix, k: SubsystemId) -> Result<ComplexMatrix> {
    if h.rows() != 9 || h.cols() != 9 {
        return Err(Error::DimensionMismatch(h.rows(), h.cols(), 9, 9));
    }
    let leak = off_block_leakage(h);
    if leak > 1e-9 {
        return Err(Error::BlockLeakage(leak, 1e-9));
    }
    let idx = k.basis_indices();
    Ok(ComplexMatrix::from_fn(3, 3, |i, j| h[(idx[i], idx[j])]))
}

/// Embed a 3x3 block back at subsystem k's positions in the 9x9 space.
pub fn embed_block(block: &ComplexMatrix, k: SubsystemId) -> ComplexMatrix {
    assert_eq!((block.rows(), block.cols()), (3, 3), "embed_block wants 3x3");
    let idx = k.basis_indices();
    let mut out = ComplexMatrix::zeros(9, 9);
    for i in 0..3 {
        for j in 0..3 {
            out[(idx[i], idx[j])] = block[(i, j)];
        }
    }
    out
}

/// Expansion coefficients B_lambda^(k) of a subsystem Hamiltonian over the
/// k-th coupled SU(3) generators: H^(k) = C(k) sum_lambda B_lambda I_lambda.
///
/// Projected out by trace: restricted to the block,
/// tr(I_a^(k) I_b^(k)) = delta_ab / 2, so B_lambda = 2 tr(H I_lambda)/C(k).
/// The reconstruction from the coefficients must close to 1e-9.
pub fn su3_expansion(
    block: &ComplexMatrix,
    k: SubsystemId,
    sets: &[CoupledSu3Set; 3],
    drive: &DriveParams,
) -> Result<[f64; 8]> {
    if drive.is_degenerate() {
        return Err(Error::DegenerateSpectrum);
    }
    let scale = drive.energy_scale(k);
    let set = &sets[k.index() - 1];
    let h9 = embed_block(block, k);
    let mut coeffs = [0.0; 8];
    for u in 1..=8 {
        let tr = h9.matmul(set.generator(u)).unwrap().trace();
        coeffs[u - 1] = 2.0 * tr.re / scale;
    }
    let mut rec = ComplexMatrix::zeros(9, 9);
    for u in 1..=8 {
        rec = &rec + &set.generator(u).scale(c(scale * coeffs[u - 1], 0.0));
    }
    let residual = rec.dist(&h9);
    if residual > 1e-9 {
        return Err(Error::ExpansionResidual(residual, 1e-9));
    }
    Ok(coeffs)
}

/// Closed-form B_lambda^(k)(t) lists.
pub fn b_closed(drive: &DriveParams, k: SubsystemId, t: f64) -> [f64; 8] {
    let s = drive.theta.sin();
    let cth = drive.theta.cos();
    let n1 = drive.n1 as f64;
    let n2 = drive.n2 as f64;
    let p1 = drive.phi1(t);
    let p2 = drive.phi2(t);
    let d = p1 - p2;
    let sq6 = 6.0_f64.sqrt();
    match k {
        SubsystemId::First => [
            SQRT2 / 2.0 * (n1 - n2) * cth * (2.0 * d).sin()
                + SQRT2 / 6.0 * (n1 + n2) * s * (2.0 * d).cos(),
            -SQRT2 / 2.0 * (n1 - n2) * cth * (2.0 * d).cos()
                + SQRT2 / 6.0 * (n1 + n2) * s * (2.0 * d).sin(),
            -SQRT2 / 2.0 * (n1 - n2) * s,
            SQRT2 / 6.0 * n2 * s * (2.0 * p2).cos() + SQRT2 / 2.0 * n2 * cth * (2.0 * p2).sin()
                - SQRT2 / 3.0 * n1 * s * (2.0 * p2).cos(),
            -SQRT2 / 6.0 * n2 * s * (2.0 * p2).sin() + SQRT2 / 2.0 * n2 * cth * (2.0 * p2).cos()
                + SQRT2 / 3.0 * n1 * s * (2.0 * p2).sin(),
            SQRT2 / 6.0 * n1 * s * (2.0 * p1).cos() + SQRT2 / 2.0 * n1 * cth * (2.0 * p1).sin()
                - SQRT2 / 3.0 * n2 * s * (2.0 * p1).cos(),
            -SQRT2 / 6.0 * n1 * s * (2.0 * p1).sin() + SQRT2 / 2.0 * n1 * cth * (2.0 * p1).cos()
                + SQRT2 / 3.0 * n2 * s * (2.0 * p1).sin(),
            sq6 / 6.0 * (n1 + n2) * s,
        ],
        _ => [
            SQRT2 / 2.0 * (n1 - n2) * d.sin() * cth - SQRT2 / 6.0 * (n1 + n2) * d.cos() * s,
            SQRT2 / 2.0 * (n1 - n2) * d.cos() * cth + SQRT2 / 6.0 * (n1 + n2) * d.sin() * s,
            SQRT2 / 2.0 * (n1 - n2) * s,
            -SQRT2 / 6.0 * n2 * p2.cos() * s + SQRT2 / 2.0 * n2 * p2.sin() * cth
                + SQRT2 / 3.0 * n1 * p2.cos() * s,
            -SQRT2 / 6.0 * n2 * p2.sin() * s - SQRT2 / 2.0 * n2 * p2.cos() * cth
                + SQRT2 / 3.0 * n1 * p2.sin() * s,
            -SQRT2 / 6.0 * n1 * p1.cos() * s + SQRT2 / 2.0 * n1 * p1.sin() * cth
                + SQRT2 / 3.0 * n2 * p1.cos() * s,
            -SQRT2 / 6.0 * n1 * p1.sin() * s - SQRT2 / 2.0 * n1 * p1.cos() * cth
                + SQRT2 / 3.0 * n2 * p1.sin() * s,
            -sq6 / 6.0 * (n1 + n2) * s,
        ],
    }
}

/// Closed-form eigensystem of one subsystem block, in band order
/// (+, 0, -). States are unit 9-vectors supported on the block, in the
/// phase convention of the closed-form expressions.
#[derive(Debug, Clone)]
pub struct ClosedEigensystem {
    pub energies: [f64; 3],
    pub states: [ComplexVector; 3],
}

impl ClosedEigensystem {
    pub fn band(&self, band: Band) -> (&ComplexVector, f64) {
        let i = match band {
            Band::Plus => 0,
            Band::Zero => 1,
            Band::Minus => 2,
        };
        (&self.states[i], self.energies[i])
    }
}

pub fn closed_eigensystem(drive: &DriveParams, k: SubsystemId, t: f64) -> Result<ClosedEigensystem> {
    if drive.is_degenerate() {
        return Err(Error::DegenerateSpectrum);
    }
    let sc = ShorthandScalars::new(drive);
    let n1 = drive.n1 as f64;
    let n2 = drive.n2 as f64;
    let n = sc.n;
    let b = sc.b;
    let i = c(0.0, 1.0);
    let e1 = C64::from_polar(1.0, drive.phi1(t));
    let e2 = C64::from_polar(1.0, drive.phi2(t));

    // raw (unnormalized) components per band, in the block's basis order
    let raw = |band: Band| -> [C64; 3] {
        match k {
            SubsystemId::First => match band {
                Band::Plus => [
                    ((n1 - 2.0 * n2) * sc.alpha_plus + 6.0 * n2 * n2) * e2 * e2,
                    (n2 * sc.beta_minus + SQRT2 * i * b * n * n1) * e1 * e1,
                    c(n1 * sc.alpha_plus, 0.0) - n2 * sc.beta_plus,
                ],
                Band::Zero => [-n1 * e2 * e2, n2 * e1 * e1, c(n1 - n2, 0.0)],
                Band::Minus => [
                    ((n1 - 2.0 * n2) * sc.alpha_minus + 6.0 * n2 * n2) * e2 * e2,
                    (n2 * sc.beta_plus - SQRT2 * i * b * n * n1) * e1 * e1,
                    c(n1 * sc.alpha_minus, 0.0) - n2 * sc.beta_minus,
                ],
            },
            _ => {
                // subsystems 2 and 3 share coefficients; only the basis slot
                // each one occupies rotates
                let tri = match band {
                    Band::Plus => [
                        (n1 * sc.alpha_minus + n2 * sc.delta_minus) * e2,
                        c(n1 * sc.alpha_minus, 0.0) - n2 * sc.beta_minus.conj(),
                        (c(n2 * sc.delta_minus, 0.0) - n1 * sc.eta_plus) * (e2 / e1),
                    ],
                    Band::Zero => [(n2 - n1) * e2, c(n1, 0.0), -n2 * (e2 / e1)],
                    Band::Minus => [
                        (n1 * sc.alpha_plus + n2 * sc.delta_plus) * e2,
                        c(n1 * sc.alpha_plus, 0.0) - n2 * sc.beta_plus.conj(),
                        (c(n2 * sc.delta_plus, 0.0) - n1 * sc.eta_minus) * (e2 / e1),
                    ],
                };
                match k {
                    SubsystemId::Second => tri,
                    _ => [tri[2], tri[0], tri[1]],
                }
            }
        }
    };

    let mut states: Vec<ComplexVector> = Vec::with_capacity(3);
    let mut energies = [0.0; 3];
    for (slot, band) in Band::ALL.iter().enumerate() {
        let comps = raw(*band);
        let nsq: f64 = comps.iter().map(|z| z.norm_sqr()).sum();
        let expected = ShorthandScalars::new(drive).norm_sq(k, *band);
        if nsq <= 1e-12 || expected <= 0.0 {
            return Err(Error::NonPositiveNormalization {
                k: k.index(),
                band: band.label(),
                value: expected,
            });
        }
        let idx = k.basis_indices();
        let mut v = ComplexVector::zeros(9);
        let scale = c(1.0 / nsq.sqrt(), 0.0);
        for (slot_b, &pos) in idx.iter().enumerate() {
            v[pos] = comps[slot_b] * scale;
        }
        states.push(v);
        energies[slot] = drive.band_energy(k, *band);
    }
    let states: [ComplexVector; 3] = states.try_into().unwrap();
    Ok(ClosedEigensystem { energies, states })
}

/// Drive period of subsystem k: T^(1) = pi/omega, T^(2,3) = 2 pi/omega for
/// coprime (n1, n2). The analytic value is cross-checked against
/// |H_k(t + T) - H_k(t)| <= 1e-9 before being returned.
pub fn period(drive: &DriveParams, k: SubsystemId) -> Result<f64> {
    let t_k = analytic_period(drive, k);
    for t0 in [0.0, 0.37 / drive.omega] {
        let h0 = hamiltonian_block(drive, k, t0);
        let h1 = hamiltonian_block(drive, k, t0 + t_k);
        let r = h0.dist(&h1);
        if r > 1e-9 {
            return Err(Error::PeriodMismatch(r));
        }
    }
    Ok(t_k)
}

pub(crate) fn analytic_period(drive: &DriveParams, k: SubsystemId) -> f64 {
    match k {
        SubsystemId::First => std::f64::consts::PI / drive.omega,
        _ => 2.0 * std::f64::consts::PI / drive.omega,
    }
}

/// Residuals between the subsystem Hamiltonians and their SU(2)-operator
/// form at n1 = n2 (phi1 = phi2 = phi).
///
/// For k = 1:
///   H = C(1) [ -(i/6) conj(b) e^{2 i phi} S+ + (i/6) b e^{-2 i phi} S-
///              + (2 sqrt(2)/3) sin(theta) S3 ].
/// For k = 2, 3 the same expression holds for the doublet-reversed triple
/// (S+ <-> S-, S3 -> -S3), i.e. in terms of the standard triple:
///   H = C(k) [ (i/6) conj(b) e^{-i phi} S+ - (i/6) b e^{i phi} S-
///              - (2 sqrt(2)/3) sin(theta) S3 ].
pub fn su2_hamiltonian_residuals(
    drive: &DriveParams,
    sets: &[CoupledSu3Set; 3],
    t: f64,
) -> Result<[f64; 3]> {
    if drive.n1 != drive.n2 {
        return Err(Error::UnequalFrequencies(drive.n1, drive.n2));
    }
    let h = hamiltonian(drive, t);
    let phi = drive.phi1(t);
    let x = C64::from_polar(1.0, drive.theta);
    let b = 2.0 * x + 1.0 / x;
    let s = drive.theta.sin();
    let i6 = c(0.0, 1.0 / 6.0);
    let s3_coeff = 2.0 * SQRT2 / 3.0 * s;

    let mut out = [0.0; 3];
    for (slot, k) in SubsystemId::ALL.iter().enumerate() {
        let su2 = su2_set(&sets[slot]);
        let ck = c(drive.energy_scale(*k), 0.0);
        let expr = match k {
            SubsystemId::First => {
                let cp = -i6 * b.conj() * C64::from_polar(1.0, 2.0 * phi);
                let cm = i6 * b * C64::from_polar(1.0, -2.0 * phi);
                &(&su2.s_plus.scale(ck * cp) + &su2.s_minus.scale(ck * cm))
                    + &su2.s3.scale(ck * s3_coeff)
            }
            _ => {
                let cp = i6 * b.conj() * C64::from_polar(1.0, -phi);
                let cm = -i6 * b * C64::from_polar(1.0, phi);
                &(&su2.s_plus.scale(ck * cp) + &su2.s_minus.scale(ck * cm))
                    + &su2.s3.scale(-ck * s3_coeff)
            }
        };
        let idx = k.basis_indices();
        let mut res = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                res += (expr[(idx[i], idx[j])] - h[(idx[i], idx[j])]).norm_sqr();
            }
        }
        out[slot] = res.sqrt();
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
