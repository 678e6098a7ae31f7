use num_complex::Complex64 as C64;

use super::{ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};

/// Full eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues come out ascending; `eigenvectors` holds the matching
/// orthonormal eigenvectors as columns, so A = V diag(lambda) V^dag.
#[derive(Debug, Clone)]
pub struct HermEig {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermEig {
    pub fn eigenvector(&self, i: usize) -> ComplexVector {
        self.eigenvectors.column(i)
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization for complex Hermitian matrices.
///
/// Each rotation factors the 2x2 pivot through a phase, reducing it to the
/// real symmetric case. Quadratic convergence; the matrices here never
/// exceed 27x27, so no pivot-ordering refinements are needed.
pub fn herm_eig(a: &ComplexMatrix) -> Result<HermEig> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    let scale = a.frobenius_norm();
    let asym = a.hermiticity_residual();
    if asym > 1e-10 * scale.max(1.0) {
        return Err(Error::NotHermitian(asym));
    }

    // Work on the hermitized copy so the <=1e-10 input asymmetry cannot leak
    // into the result.
    let mut m = ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);

    let off = |m: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += m[(p, q)].norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&m) <= 1e-15 * scale.max(1e-300) {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                // phase that makes the pivot real, then a real Jacobi angle
                let phase = apq / mag;
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // U = [[c, s*phase_bar?]] realized column-wise below; columns
                // first (M <- M U), then rows (M <- U^dag M).
                let u_pp = C64::new(c, 0.0);
                let u_pq = C64::new(s, 0.0);
                let u_qp = -s * phase.conj();
                let u_qq = c * phase.conj();
                for r in 0..n {
                    let mp = m[(r, p)];
                    let mq = m[(r, q)];
                    m[(r, p)] = mp * u_pp + mq * u_qp;
                    m[(r, q)] = mp * u_pq + mq * u_qq;
                }
                for r in 0..n {
                    let mp = m[(p, r)];
                    let mq = m[(q, r)];
                    m[(p, r)] = u_pp.conj() * mp + u_qp.conj() * mq;
                    m[(q, r)] = u_pq.conj() * mp + u_qq.conj() * mq;
                }
                for r in 0..n {
                    let vp = v[(r, p)];
                    let vq = v[(r, q)];
                    v[(r, p)] = vp * u_pp + vq * u_qp;
                    v[(r, q)] = vp * u_pq + vq * u_qq;
                }
            }
        }
    }
    if !converged && off(&m) > 1e-12 * scale.max(1e-300) {
        return Err(Error::EigNoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).unwrap());

    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermEig { eigenvalues, eigenvectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn diagonal_sorts_ascending() {
        let a = ComplexMatrix::diag(&[c(3.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        let e = herm_eig(&a).unwrap();
        assert!((e.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 2.0).abs() < 1e-14);
        assert!((e.eigenvalues[2] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_x_spectrum() {
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let e = herm_eig(&a).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        assert!(matches!(herm_eig(&a), Err(Error::NotHermitian(_))));
    }
}
