//! Two-qutrit braiding operators and the dynamics they generate.
//!
//! The starting point is a 9x9 Hermitian M-matrix obeying the Hecke
//! algebra relations M^2 = M + 2 and the braided relation
//! M_i M_{i+1} M_i + 2 M_i = M_{i+1} M_i M_{i+1} + 2 M_{i+1}.
//! Baxterization turns it into a one-parameter family of unitary braid
//! operators R(theta, phi1, phi2) solving the Yang-Baxter equation on
//! C^3 (x) C^3. From there the crate covers:
//!
//! - [`braid`]: the M- and R-matrices, Hecke/Yang-Baxter residuals, and the
//!   local gauge transformation removing the phases (phi1, phi2);
//! - [`su3`]: Gell-Mann generators, the three coupled SU(3) realizations on
//!   the two-qutrit space, and the SU(2) triples built from them;
//! - [`entanglement`]: states generated by R acting on product states and
//!   their negativity, numeric and closed form;
//! - [`dynamics`]: the Hamiltonian i hbar (dR/dt) R^dag under harmonic
//!   phase drives, its three invariant subsystems, closed-form eigensystems,
//!   Berry phases (discrete overlap product and closed form), the orthogonal
//!   change of basis splitting the phi1 = phi2 system into spin-1/2 and
//!   spin-0 sectors, and the effective oscillator parameters;
//! - [`numeric`]: the dense complex matrix/vector types and the Hermitian
//!   eigensolver everything rests on.
//!
//! All arithmetic is in double precision. The identities implemented here
//! are exact, so residual checks default to an absolute 1e-10 on matrices
//! with O(1) entries.

pub mod braid;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod numeric;
pub mod su3;

pub use error::{Error, Result};
pub use numeric::{herm_eig, C64, ComplexMatrix, ComplexVector, HermEig};

/// Default absolute tolerance for algebraic identity residuals.
pub const DEFAULT_TOL: f64 = 1e-10;
