//! Effective two-fermion oscillator parameters of the spin-1/2 blocks at
//! phi1 = phi2.
//!
//! The first doublet block reads H_1/2^(1) = -2 hbar omega cos(alpha)
//! [2 cos(alpha) S3 + sin(alpha) e^{i beta} S+ + sin(alpha) e^{-i beta} S-]
//! with cos(alpha) = (2 sqrt(2)/3) sin(theta) fixed and beta sweeping the
//! azimuth as the drive runs; subsystems 2 and 3 are the same picture at
//! half the frequency. The band phases are the solid-angle ones,
//! gamma_+- = -+ Omega(C)/2 with Omega(C) = 2 pi (1 - cos(alpha)).

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use super::Band;
use crate::error::{Error, Result};

/// Bloch-sphere description of the driven spin-1/2 blocks.
#[derive(Debug, Clone, Copy)]
pub struct OscillatorForm {
    pub theta: f64,
    pub omega: f64,
    /// cos(alpha) = (2 sqrt(2)/3) sin(theta); nonzero away from the
    /// critical points.
    pub cos_alpha: f64,
    /// alpha in (0, pi).
    pub alpha_angle: f64,
    /// Omega(C) = 2 pi (1 - cos(alpha)), the solid angle swept on the
    /// Bloch sphere.
    pub solid_angle: f64,
    /// Oscillator frequencies of subsystems 1, 2, 3:
    /// (2 omega cos(alpha), omega cos(alpha), omega cos(alpha)).
    pub frequencies: [f64; 3],
}

/// Build the oscillator picture at fixed theta. sin(theta) = 0 is the
/// critical point where the doublets collapse; rejected.
pub fn oscillator_params(theta: f64, omega: f64) -> Result<OscillatorForm> {
    let s = theta.sin();
    if s.abs() < 1e-12 {
        return Err(Error::DegenerateSpectrum);
    }
    let cos_alpha = 2.0 * 2.0_f64.sqrt() / 3.0 * s;
    let alpha_angle = cos_alpha.acos();
    Ok(OscillatorForm {
        theta,
        omega,
        cos_alpha,
        alpha_angle,
        solid_angle: 2.0 * PI * (1.0 - cos_alpha),
        frequencies: [2.0 * omega * cos_alpha, omega * cos_alpha, omega * cos_alpha],
    })
}

impl OscillatorForm {
    /// Azimuth beta(t) of the first doublet's field direction, from
    /// cos(beta) = (-sin(theta) cos(2 phi) + 3 cos(theta) sin(2 phi))
    ///             / sqrt(9 - 8 sin^2(theta))
    /// with the matching sine branch; phi = omega t.
    pub fn beta_angle(&self, phi: f64) -> f64 {
        let s = self.theta.sin();
        let c = self.theta.cos();
        let den = (9.0 - 8.0 * s * s).sqrt();
        let cos_beta = (-s * (2.0 * phi).cos() + 3.0 * c * (2.0 * phi).sin()) / den;
        let sin_beta = (-s * (2.0 * phi).sin() - 3.0 * c * (2.0 * phi).cos()) / den;
        sin_beta.atan2(cos_beta)
    }

    /// Band phase from the solid angle: gamma_+- = -+ Omega(C)/2.
    pub fn berry_phase(&self, band: Band) -> f64 {
        super::canonicalize_phase(-band.sign() * self.solid_angle / 2.0)
    }

    /// The Bloch eigenstates of the first spin-1/2 block in its doublet
    /// basis: |E+> = (-e^{i beta} sin(alpha/2), cos(alpha/2)) and
    /// |E-> = (cos(alpha/2), e^{-i beta} sin(alpha/2)).
    pub fn bloch_states(&self, phi: f64) -> ([C64; 2], [C64; 2]) {
        let beta = self.beta_angle(phi);
        let half = self.alpha_angle / 2.0;
        let eb = C64::from_polar(1.0, beta);
        let plus = [-eb * half.sin(), C64::new(half.cos(), 0.0)];
        let minus = [C64::new(half.cos(), 0.0), eb.conj() * half.sin()];
        (plus, minus)
    }
}
