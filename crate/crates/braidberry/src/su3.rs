//! SU(3) and SU(2) operator algebra on one and two qutrits.
//!
//! Single-qutrit generators are the Gell-Mann matrices over the basis
//! {|0>, |1>, |2>}, normalized so tr(lambda_a lambda_b) = 2 delta_ab. On
//! the two-qutrit space there are three mutually commuting SU(3)
//! realizations, one per invariant 3-dimensional block, and each of them
//! carries an SU(2) triple whose Casimir splits the block into a
//! spin-1/2 doublet and a spin-0 singlet.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::numeric::ComplexMatrix;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn zero3() -> ComplexMatrix {
    ComplexMatrix::zeros(3, 3)
}

/// |i><j| on a single qutrit.
fn ketbra(i: usize, j: usize) -> ComplexMatrix {
    let mut m = zero3();
    m[(i, j)] = c(1.0, 0.0);
    m
}

/// The eight Gell-Mann matrices with the derived single-qutrit operators:
/// generators I_u = lambda_u / 2, ladder combinations and hypercharge.
///
/// Sign conventions: I+- = I1 +- i I2, U+- = I6 +- i I7, Y = 2/sqrt(3) I8,
/// but V+- = I4 -+ i I5 (the V pair is defined with the opposite sign).
#[derive(Debug, Clone)]
pub struct Su3Generators {
    lambda: [ComplexMatrix; 8],
    pub i_plus: ComplexMatrix,
    pub i_minus: ComplexMatrix,
    pub v_plus: ComplexMatrix,
    pub v_minus: ComplexMatrix,
    pub u_plus: ComplexMatrix,
    pub u_minus: ComplexMatrix,
    pub hypercharge: ComplexMatrix,
}

/// Standard Gell-Mann basis.
pub fn gell_mann() -> Su3Generators {
    let s3 = 3.0_f64.sqrt();
    let lambda: [ComplexMatrix; 8] = [
        ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 1) | (1, 0) => c(1.0, 0.0),
            _ => c(0.0, 0.0),
        }),
        ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 1) => c(0.0, -1.0),
            (1, 0) => c(0.0, 1.0),
            _ => c(0.0, 0.0),
        }),
        ComplexMatrix::diag(&[c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]),
        ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 2) | (2, 0) => c(1.0, 0.0),
            _ => c(0.0, 0.0),
        }),
        ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 2) => c(0.0, -1.0),
            (2, 0) => c(0.0, 1.0),
            _ => c(0.0, 0.0),
        }),
        ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (1, 2) | (2, 1) => c(1.0, 0.0),
            _ => c(0.0, 0.0),
        }),
        ComplexMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (1, 2) => c(0.0, -1.0),
            (2, 1) => c(0.0, 1.0),
            _ => c(0.0, 0.0),
        }),
        ComplexMatrix::diag(&[c(1.0 / s3, 0.0), c(1.0 / s3, 0.0), c(-2.0 / s3, 0.0)]),
    ];
    // With this basis the ladder operators collapse to single dyads:
    // I+ = |0><1|, V+ = |2><0|, U+ = |1><2|.
    Su3Generators {
        lambda,
        i_plus: ketbra(0, 1),
        i_minus: ketbra(1, 0),
        v_plus: ketbra(2, 0),
        v_minus: ketbra(0, 2),
        u_plus: ketbra(1, 2),
        u_minus: ketbra(2, 1),
        hypercharge: ComplexMatrix::diag(&[
            c(1.0 / 3.0, 0.0),
            c(1.0 / 3.0, 0.0),
            c(-2.0 / 3.0, 0.0),
        ]),
    }
}

impl Su3Generators {
    /// lambda_u for u in 1..=8.
    pub fn lambda(&self, u: usize) -> &ComplexMatrix {
        assert!((1..=8).contains(&u), "Gell-Mann index must be 1..=8");
        &self.lambda[u - 1]
    }

    /// I_u = lambda_u / 2 for u in 1..=8.
    pub fn generator(&self, u: usize) -> ComplexMatrix {
        self.lambda(u).scale(c(0.5, 0.0))
    }

    /// I_3 = lambda_3 / 2.
    pub fn i3(&self) -> ComplexMatrix {
        self.generator(3)
    }
}

/// Totally antisymmetric SU(3) structure constants, computed from the
/// fundamental representation rather than tabulated.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    f: Vec<f64>, // flattened [a][b][c], 1-based indices
}

/// f_abc = -2i tr([I_a, I_b] I_c).
pub fn structure_constants(g: &Su3Generators) -> StructureConstants {
    let gens: Vec<ComplexMatrix> = (1..=8).map(|u| g.generator(u)).collect();
    let mut f = vec![0.0; 9 * 9 * 9];
    for a in 1..=8usize {
        for b in 1..=8usize {
            let comm = &(&gens[a - 1] * &gens[b - 1]) - &(&gens[b - 1] * &gens[a - 1]);
            for c_ in 1..=8usize {
                let tr = comm.matmul(&gens[c_ - 1]).unwrap().trace();
                f[(a * 9 + b) * 9 + c_] = (tr * c(0.0, -2.0)).re;
            }
        }
    }
    StructureConstants { f }
}

impl StructureConstants {
    pub fn f(&self, a: usize, b: usize, c: usize) -> f64 {
        assert!((1..=8).contains(&a) && (1..=8).contains(&b) && (1..=8).contains(&c));
        self.f[(a * 9 + b) * 9 + c]
    }
}

/// One of the three coupled SU(3) realizations on C^3 (x) C^3.
///
/// Each set is supported on one invariant block of the two-qutrit space
/// and restricted to it forms a fundamental representation:
/// tr(I_a^(k) I_b^(k)) = delta_ab / 2.
#[derive(Debug, Clone)]
pub struct CoupledSu3Set {
    pub index: usize,
    pub i_plus: ComplexMatrix,
    pub i_minus: ComplexMatrix,
    pub u_plus: ComplexMatrix,
    pub u_minus: ComplexMatrix,
    pub v_plus: ComplexMatrix,
    pub v_minus: ComplexMatrix,
    pub i3: ComplexMatrix,
    pub hypercharge: ComplexMatrix,
    generators: [ComplexMatrix; 8],
}

impl CoupledSu3Set {
    /// I_u^(k) for u in 1..=8, recovered from the ladder combinations.
    pub fn generator(&self, u: usize) -> &ComplexMatrix {
        assert!((1..=8).contains(&u), "generator index must be 1..=8");
        &self.generators[u - 1]
    }
}

/// Build the k-th coupled SU(3) set (k = 1, 2, 3).
///
/// The ladder operators are pair products of single-site ladders; which
/// single-site pair enters rotates with k. I_3 and Y are the matching
/// quadratic combinations of single-site I_3 and Y.
pub fn coupled_set(k: usize) -> Result<CoupledSu3Set> {
    let g = gell_mann();
    let id = ComplexMatrix::identity(3);
    let i3 = g.i3();
    let y = &g.hypercharge;

    let half = c(0.5, 0.0);
    let third = c(1.0 / 3.0, 0.0);
    let sixth = c(1.0 / 6.0, 0.0);

    let (i_plus, u_plus, v_plus, i3k, yk) = match k {
        1 => {
            let i3k = &(&i3.kron(&id) + &id.kron(&i3)).scale(third)
                + &(&i3.kron(y) + &y.kron(&i3)).scale(half);
            let yk = &(&(&y.kron(&id) + &id.kron(y)).scale(third)
                + &i3.kron(&i3).scale(c(2.0 / 3.0, 0.0)))
                - &y.kron(y).scale(half);
            (
                g.i_plus.kron(&g.i_plus),
                g.u_plus.kron(&g.u_plus),
                g.v_plus.kron(&g.v_plus),
                i3k,
                yk,
            )
        }
        2 => {
            let i3k = (&(&(&y.kron(&id) - &id.kron(y)).scale(half)
                - &(&i3.kron(&id) + &id.kron(&i3)).scale(third))
                + &(&i3.kron(y) + &y.kron(&i3)))
                .scale(half);
            let yk = &(&(&i3.kron(&i3).scale(c(2.0 / 3.0, 0.0))
                - &(&i3.kron(&id) - &id.kron(&i3)).scale(third))
                - &(&y.kron(&id) + &id.kron(y)).scale(sixth))
                - &y.kron(y).scale(half);
            (
                g.u_plus.kron(&g.v_plus),
                g.v_plus.kron(&g.i_plus),
                g.i_plus.kron(&g.u_plus),
                i3k,
                yk,
            )
        }
        3 => {
            let i3k = (&(&i3.kron(y) + &y.kron(&i3))
                - &(&(&i3.kron(&id) + &id.kron(&i3)).scale(third)
                    + &(&y.kron(&id) - &id.kron(y)).scale(half)))
                .scale(half);
            let yk = &(&(&i3.kron(&i3).scale(c(2.0 / 3.0, 0.0))
                + &(&i3.kron(&id) - &id.kron(&i3)).scale(third))
                - &(&y.kron(&id) + &id.kron(y)).scale(sixth))
                - &y.kron(y).scale(half);
            (
                g.v_plus.kron(&g.u_plus),
                g.i_plus.kron(&g.v_plus),
                g.u_plus.kron(&g.i_plus),
                i3k,
                yk,
            )
        }
        _ => return Err(Error::InvalidSubsystem(k)),
    };

    let i_minus = i_plus.dagger();
    let u_minus = u_plus.dagger();
    let v_minus = v_plus.dagger();

    // Invert the ladder definitions: I1 = (I+ + I-)/2, I2 = (I+ - I-)/2i,
    // I4 = (V+ + V-)/2, I5 = (V- - V+)/2i (note the V sign convention),
    // I6 = (U+ + U-)/2, I7 = (U+ - U-)/2i, I8 = sqrt(3)/2 Y.
    let mi = c(0.0, -0.5); // 1/(2i)
    let generators: [ComplexMatrix; 8] = [
        (&i_plus + &i_minus).scale(half),
        (&i_plus - &i_minus).scale(mi),
        i3k.clone(),
        (&v_plus + &v_minus).scale(half),
        (&v_minus - &v_plus).scale(mi),
        (&u_plus + &u_minus).scale(half),
        (&u_plus - &u_minus).scale(mi),
        yk.scale(c(3.0_f64.sqrt() / 2.0, 0.0)),
    ];

    Ok(CoupledSu3Set {
        index: k,
        i_plus,
        i_minus,
        u_plus,
        u_minus,
        v_plus,
        v_minus,
        i3: i3k,
        hypercharge: yk,
        generators,
    })
}

/// All three coupled sets.
pub fn coupled_sets() -> [CoupledSu3Set; 3] {
    [
        coupled_set(1).unwrap(),
        coupled_set(2).unwrap(),
        coupled_set(3).unwrap(),
    ]
}

/// SU(2) triple carried by one coupled SU(3) set, with its quadratic
/// Casimir J = (S+ S- + S- S+)/2 + S3^2.
#[derive(Debug, Clone)]
pub struct Su2Set {
    pub index: usize,
    pub s_plus: ComplexMatrix,
    pub s_minus: ComplexMatrix,
    pub s3: ComplexMatrix,
    pub casimir: ComplexMatrix,
}

/// S+ = (V- + U+)/sqrt(2), S- = (V+ + U-)/sqrt(2),
/// S3 = 3/4 Y + (I+ + I-)/4.
pub fn su2_set(set: &CoupledSu3Set) -> Su2Set {
    let isq2 = c(1.0 / 2.0_f64.sqrt(), 0.0);
    let s_plus = (&set.v_minus + &set.u_plus).scale(isq2);
    let s_minus = (&set.v_plus + &set.u_minus).scale(isq2);
    let s3 = &set.hypercharge.scale(c(0.75, 0.0))
        + &(&set.i_plus + &set.i_minus).scale(c(0.25, 0.0));
    let casimir = &(&(&s_plus * &s_minus) + &(&s_minus * &s_plus)).scale(c(0.5, 0.0))
        + &(&s3 * &s3);
    Su2Set { index: set.index, s_plus, s_minus, s3, casimir }
}
