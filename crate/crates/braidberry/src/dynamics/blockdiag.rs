//! Orthogonal change of basis splitting the n1 = n2 system into three
//! spin-1/2 doublets and three frozen spin-0 singlets.
//!
//! Each subsystem's SU(2) triple singles out the doublet
//! {(|a> + |b>)/sqrt(2), |c>} and the singlet (|a> - |b>)/sqrt(2) inside
//! its basis triple; stacking those combinations as rows gives a constant
//! orthogonal P with P H P^T = diag{H_1/2^(1), H_0^(1), H_0^(2), H_1/2^(2),
//! H_0^(3), H_1/2^(3)} whenever phi1 = phi2. The transformed SU(2) ladder
//! operators collapse to single dyads and the Casimirs to diagonal 3/4
//! projectors onto the doublets.

use num_complex::Complex64 as C64;

use super::SubsystemId;
use crate::error::{Error, Result};
use crate::numeric::ComplexMatrix;

/// Spin content of one block after the transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    SpinHalf,
    SpinZero,
}

/// Diagonal block sizes of P H P^T, in order.
pub const BLOCK_SIZES: [usize; 6] = [2, 1, 1, 2, 1, 2];

/// Which subsystem and spin sector each diagonal block carries.
pub const BLOCK_LAYOUT: [(SubsystemId, Sector); 6] = [
    (SubsystemId::First, Sector::SpinHalf),
    (SubsystemId::First, Sector::SpinZero),
    (SubsystemId::Second, Sector::SpinZero),
    (SubsystemId::Second, Sector::SpinHalf),
    (SubsystemId::Third, Sector::SpinZero),
    (SubsystemId::Third, Sector::SpinHalf),
];

/// The constant 9x9 orthogonal matrix. Entries are 0, 1 and +-1/sqrt(2);
/// rows pair |00> with |11>, |12> with |20>, and |02> with |21>, leaving
/// |22>, |01> and |10> alone.
pub fn appendix_p() -> ComplexMatrix {
    let s = 1.0 / 2.0_f64.sqrt();
    let mut p = ComplexMatrix::zeros(9, 9);
    let set = |p: &mut ComplexMatrix, row: usize, entries: &[(usize, f64)]| {
        for &(col, v) in entries {
            p[(row, col)] = C64::new(v, 0.0);
        }
    };
    set(&mut p, 0, &[(0, s), (4, s)]); // doublet m = +1/2 of subsystem 1
    set(&mut p, 1, &[(8, 1.0)]); //       doublet m = -1/2
    set(&mut p, 2, &[(0, s), (4, -s)]); // spin-0 of subsystem 1
    set(&mut p, 3, &[(5, s), (6, -s)]); // spin-0 of subsystem 2
    set(&mut p, 4, &[(1, 1.0)]); //       doublet m = -1/2 of subsystem 2
    set(&mut p, 5, &[(5, s), (6, s)]); // doublet m = +1/2
    set(&mut p, 6, &[(2, s), (7, -s)]); // spin-0 of subsystem 3
    set(&mut p, 7, &[(2, s), (7, s)]); // doublet m = +1/2 of subsystem 3
    set(&mut p, 8, &[(3, 1.0)]); //       doublet m = -1/2
    p
}

/// Result of conjugating a 9x9 operator by P.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub p: ComplexMatrix,
    pub transformed: ComplexMatrix,
    /// The six diagonal blocks in [`BLOCK_LAYOUT`] order.
    pub blocks: Vec<ComplexMatrix>,
    /// Largest entry outside the block pattern.
    pub leakage: f64,
}

/// Conjugate `h` by P and split it along [`BLOCK_SIZES`]. Off-pattern
/// entries above 1e-9 mean `h` is not in the phi1 = phi2 regime and are an
/// error.
pub fn block_diagonalize(h: &ComplexMatrix) -> Result<BlockDecomposition> {
    if h.rows() != 9 || h.cols() != 9 {
        return Err(Error::DimensionMismatch(h.rows(), h.cols(), 9, 9));
    }
    let p = appendix_p();
    let transformed = &(&p * h) * &p.transpose();

    let mut starts = [0usize; 6];
    let mut acc = 0;
    for (i, sz) in BLOCK_SIZES.iter().enumerate() {
        starts[i] = acc;
        acc += sz;
    }
    let block_of = |i: usize| -> usize {
        (0..6).find(|&b| i >= starts[b] && i < starts[b] + BLOCK_SIZES[b]).unwrap()
    };

    let mut leakage = 0.0_f64;
    for i in 0..9 {
        for j in 0..9 {
            if block_of(i) != block_of(j) {
                leakage = leakage.max(transformed[(i, j)].norm());
            }
        }
    }
    if leakage > 1e-9 {
        return Err(Error::BlockLeakage(leakage, 1e-9));
    }

    let blocks = (0..6)
        .map(|b| {
            let s = starts[b];
            let n = BLOCK_SIZES[b];
            ComplexMatrix::from_fn(n, n, |i, j| transformed[(s + i, s + j)])
        })
        .collect();

    Ok(BlockDecomposition { p, transformed, blocks, leakage })
}
