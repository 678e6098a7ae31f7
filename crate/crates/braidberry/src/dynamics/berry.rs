//! Berry phases of the driven subsystem bands, by gauge-invariant discrete
//! overlap product and by closed form.

use std::f64::consts::PI;

use super::{analytic_period, hamiltonian_block, Band, DriveParams, SubsystemId};
use crate::error::{Error, Result};
use crate::numeric::herm_eig;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const MIN_STEPS: usize = 64;
const MIN_TRACKING_OVERLAP: f64 = 0.9;

/// How a [`BerryResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseMethod {
    Numeric,
    Closed,
}

/// One band's geometric phase over its drive period, canonicalized to
/// (-pi, pi].
#[derive(Debug, Clone, Copy)]
pub struct BerryResult {
    pub subsystem: SubsystemId,
    pub band: Band,
    pub gamma: f64,
    pub method: PhaseMethod,
}

/// Reduce a phase to the canonical branch (-pi, pi].
pub fn canonicalize_phase(gamma: f64) -> f64 {
    let r = gamma.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Distance between two phases on the circle, after canonicalization.
pub fn wrap_distance(a: f64, b: f64) -> f64 {
    let d = (canonicalize_phase(a) - canonicalize_phase(b)).abs();
    d.min(2.0 * PI - d)
}

/// Discrete Berry phase of one band: sample the band's eigenvector at
/// t_j = j T / steps, track it across steps by maximal overlap, and return
///
///   gamma = -Im sum_j ln <psi_j | psi_{j+1}>   (psi_steps = psi_0).
///
/// The product is invariant under the eigensolver's per-step phase choices,
/// which is the whole point of this discretization. Converges as
/// 1/steps^2 to the adiabatic closed forms.
pub fn berry_numeric(
    drive: &DriveParams,
    k: SubsystemId,
    band: Band,
    steps: usize,
) -> Result<BerryResult> {
    if steps < MIN_STEPS {
        return Err(Error::TooFewSteps(steps, MIN_STEPS));
    }
    if drive.is_degenerate() {
        return Err(Error::DegenerateSpectrum);
    }
    let period = analytic_period(drive, k);
    let target = drive.band_energy(k, band);

    // seed at t = 0 on the eigenvalue closest to the band's closed form
    let eig0 = herm_eig(&hamiltonian_block(drive, k, 0.0))?;
    let seed = (0..3)
        .min_by(|&a, &b| {
            (eig0.eigenvalues[a] - target)
                .abs()
                .partial_cmp(&(eig0.eigenvalues[b] - target).abs())
                .unwrap()
        })
        .unwrap();
    let first = eig0.eigenvector(seed);

    let mut gamma = 0.0;
    let mut prev = first.clone();
    for j in 1..steps {
        let t = j as f64 * period / steps as f64;
        let eig = herm_eig(&hamiltonian_block(drive, k, t))?;
        let (sel, overlap) = (0..3)
            .map(|i| (i, prev.inner(&eig.eigenvector(i)).norm()))
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        if overlap < MIN_TRACKING_OVERLAP {
            return Err(Error::BandTrackingLost { step: j, overlap });
        }
        let v = eig.eigenvector(sel);
        gamma -= prev.inner(&v).arg();
        prev = v;
    }
    gamma -= prev.inner(&first).arg();

    Ok(BerryResult { subsystem: k, band, gamma: canonicalize_phase(gamma), method: PhaseMethod::Numeric })
}

/// The K polynomials of the general closed forms.
fn k_polynomials(drive: &DriveParams) -> (f64, f64, f64, f64) {
    let n1 = drive.n1 as f64;
    let n2 = drive.n2 as f64;
    let n = drive.n_scalar();
    let nn = n * n;
    let s = drive.theta.sin();
    let k1 = -10.0 * n1.powi(5) + 13.0 * n1.powi(4) * n2 + 11.0 * n1.powi(3) * n2 * n2
        - 82.0 * n1 * n1 * n2.powi(3)
        + 94.0 * n1 * n2.powi(4)
        - 52.0 * n2.powi(5)
        - 8.0 * (2.0 * drive.theta).cos() * (n1 - 2.0 * n2) * nn * nn;
    let k2 = -6.0 * SQRT2 * s * n * n2
        * (n1.powi(3) - 9.0 * n1 * n1 * n2 + 12.0 * n1 * n2 * n2 - 8.0 * n2.powi(3));
    let k3 = 2.0 * nn * (9.0 * n1 * n1 * (n1 - n2) - 8.0 * s * s * (n1.powi(3) + n2.powi(3)))
        - 9.0 * n2
            * (n1.powi(4) - n1.powi(3) * n2 + 5.0 * n1 * n1 * n2 * n2 - 3.0 * n1 * n2.powi(3)
                + 2.0 * n2.powi(4));
    let k4 = 6.0 * SQRT2 * s * n * n2
        * (n1.powi(3) + 6.0 * n1 * n1 * n2 - 3.0 * n1 * n2 * n2 + 4.0 * n2.powi(3));
    (k1, k2, k3, k4)
}

/// Closed-form Berry phase.
///
/// Subsystem 1 uses (K1 +- K2)/N_{+-}^(1) * 2 omega T^(1); subsystems 2, 3
/// use (K3 +- K4)/N_{+-}^(i) * omega T^(i); the zero bands are rational in
/// (n1, n2) alone. Both gamma_- denominators take the same-subsystem
/// normalization; anything else fails the discrete-overlap cross-check.
pub fn berry_closed(drive: &DriveParams, k: SubsystemId, band: Band) -> Result<BerryResult> {
    if drive.is_degenerate() {
        return Err(Error::DegenerateSpectrum);
    }
    let sc = super::ShorthandScalars::new(drive);
    let n1 = drive.n1 as f64;
    let n2 = drive.n2 as f64;
    let nn = sc.n * sc.n;
    let (k1, k2, k3, k4) = k_polynomials(drive);
    let angle = 2.0 * PI; // 2 omega T^(1) and omega T^(2,3) both reduce to 2 pi
    let gamma = match (k, band) {
        (SubsystemId::First, Band::Plus) => (k1 + k2) / sc.norm_sq(k, band) * angle,
        (SubsystemId::First, Band::Zero) => -n1 * n2 * (n1 + n2) / (2.0 * nn) * angle,
        (SubsystemId::First, Band::Minus) => (k1 - k2) / sc.norm_sq(k, band) * angle,
        (_, Band::Plus) => (k3 + k4) / sc.norm_sq(k, band) * angle,
        (_, Band::Zero) => -n2 * (n1 - n2) * (n1 - 2.0 * n2) / (2.0 * nn) * angle,
        (_, Band::Minus) => (k3 - k4) / sc.norm_sq(k, band) * angle,
    };
    Ok(BerryResult { subsystem: k, band, gamma: canonicalize_phase(gamma), method: PhaseMethod::Closed })
}
