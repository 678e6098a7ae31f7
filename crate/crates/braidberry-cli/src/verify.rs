//! The `verify` subcommand: seeded randomized suites plus the exhaustive
//! algebra checks, one row per check with its max residual.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braidberry::braid::{gauge_transform, hecke_residuals, m_matrix, r_matrix, BraidParams};
use braidberry::numeric::{herm_eig, ComplexMatrix};
use braidberry::su3::{coupled_sets, gell_mann, structure_constants, su2_set};

use crate::output::Table;
use crate::VerifyArgs;

struct Check {
    name: &'static str,
    residual: f64,
    tolerance: f64,
    samples: usize,
}

pub fn run(args: &VerifyArgs) -> Result<bool, String> {
    let fault = args.inject_fault.as_deref();
    if let Some(name) = fault {
        let known = ["hecke", "ybe", "unitarity", "gauge", "su3-commutators", "su2-relations", "casimir-spectra"];
        if !known.contains(&name) {
            return Err(format!("unknown check '{name}' (known: {})", known.join(", ")));
        }
    }
    let n = args.samples;
    let checks = vec![
        hecke_check(args.seed, n, fault == Some("hecke"), args.output.tolerance(1e-9)),
        ybe_check(args.seed.wrapping_add(1), 2 * n, fault == Some("ybe"), args.output.tolerance(1e-9)),
        unitarity_check(args.seed.wrapping_add(2), n, fault == Some("unitarity"), args.output.tolerance(1e-10)),
        gauge_check(args.seed.wrapping_add(3), n, fault == Some("gauge"), args.output.tolerance(1e-10)),
        su3_commutator_check(fault == Some("su3-commutators"), args.output.tolerance(1e-9)),
        su2_relation_check(fault == Some("su2-relations"), args.output.tolerance(1e-9)),
        casimir_check(fault == Some("casimir-spectra"), args.output.tolerance(1e-10)),
    ];

    let mut table = Table::new(
        "verify",
        &["check", "samples", "max_residual", "tolerance", "status"],
    );
    table.param("seed", args.seed);
    table.param("samples", n);

    let mut all_pass = true;
    let mut failed: Vec<&str> = Vec::new();
    for c in &checks {
        let pass = c.residual <= c.tolerance;
        all_pass &= pass;
        if !pass {
            failed.push(c.name);
        }
        table.push(vec![
            c.name.into(),
            c.samples.into(),
            c.residual.into(),
            c.tolerance.into(),
            if pass { "PASS" } else { "FAIL" }.into(),
        ]);
    }
    table.write(args.output.format, &args.output.out).map_err(|e| e.to_string())?;
    if !all_pass {
        eprintln!("verify: FAILED checks: {}", failed.join(", "));
    }
    Ok(all_pass)
}

fn sample_phases(rng: &mut ChaCha8Rng) -> (f64, f64) {
    (rng.random_range(-PI..PI), rng.random_range(-PI..PI))
}

fn hecke_check(seed: u64, samples: usize, fault: bool, tolerance: f64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..samples {
        let (p1, p2) = sample_phases(&mut rng);
        let params = BraidParams::new(0.0, p1, p2);
        if fault {
            let mut m = m_matrix(&params);
            m[(0, 4)] += C64::new(0.01, 0.0);
            let m2 = &m * &m;
            let mut q = &m2 - &m;
            for i in 0..9 {
                q[(i, i)] -= C64::new(2.0, 0.0);
            }
            worst = worst.max(q.frobenius_norm());
        } else {
            worst = worst.max(hecke_residuals(&params).max());
        }
    }
    Check { name: "hecke", residual: worst, tolerance, samples }
}

fn ybe_check(seed: u64, samples: usize, fault: bool, tolerance: f64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let i3 = ComplexMatrix::identity(3);
    let mut worst = 0.0_f64;
    for _ in 0..samples {
        let (t1, t2) = sample_phases(&mut rng);
        let (p1, p2) = sample_phases(&mut rng);
        let r9 = |th: f64| {
            let mut r = r_matrix(&BraidParams::new(th, p1, p2));
            if fault {
                r[(0, 0)] += C64::new(0.01, 0.0);
            }
            r
        };
        let r1 = |th: f64| r9(th).kron(&i3);
        let r2 = |th: f64| i3.kron(&r9(th));
        let lhs = &(&r1(t1) * &r2(t1 + t2)) * &r1(t2);
        let rhs = &(&r2(t2) * &r1(t1 + t2)) * &r2(t1);
        worst = worst.max(lhs.dist(&rhs));
    }
    Check { name: "ybe", residual: worst, tolerance, samples }
}

fn unitarity_check(seed: u64, samples: usize, fault: bool, tolerance: f64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = ComplexMatrix::identity(9);
    let mut worst = 0.0_f64;
    for _ in 0..samples {
        let theta = rng.random_range(-PI..PI);
        let (p1, p2) = sample_phases(&mut rng);
        let mut r = r_matrix(&BraidParams::new(theta, p1, p2));
        if fault {
            r[(0, 0)] += C64::new(0.01, 0.0);
        }
        worst = worst.max(r.dagger().matmul(&r).unwrap().dist(&id));
    }
    Check { name: "unitarity", residual: worst, tolerance, samples }
}

fn gauge_check(seed: u64, samples: usize, fault: bool, tolerance: f64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..samples {
        let theta = rng.random_range(-PI..PI);
        let (p1, p2) = sample_phases(&mut rng);
        let stripped = gauge_transform(&BraidParams::new(theta, p1, p2));
        let mut plain = r_matrix(&BraidParams::new(theta, 0.0, 0.0));
        if fault {
            plain[(0, 0)] += C64::new(0.01, 0.0);
        }
        worst = worst.max(stripped.dist(&plain));
    }
    Check { name: "gauge", residual: worst, tolerance, samples }
}

fn su3_commutator_check(fault: bool, tolerance: f64) -> Check {
    let sets = coupled_sets();
    let f = structure_constants(&gell_mann());
    let mut worst = 0.0_f64;
    for si in &sets {
        for sj in &sets {
            for a in 1..=8 {
                for b in 1..=8 {
                    let mut ga = si.generator(a).clone();
                    if fault {
                        ga[(0, 0)] += C64::new(0.01, 0.0);
                    }
                    let gb = sj.generator(b);
                    let comm = &(&ga * gb) - &(gb * &ga);
                    let mut rhs = ComplexMatrix::zeros(9, 9);
                    if si.index == sj.index {
                        for c in 1..=8 {
                            let fc = f.f(a, b, c);
                            if fc != 0.0 {
                                rhs = &rhs + &si.generator(c).scale(C64::new(0.0, fc));
                            }
                        }
                    }
                    worst = worst.max(comm.dist(&rhs));
                }
            }
        }
    }
    // 3 x 3 set pairs x 8 x 8 generator pairs
    Check { name: "su3-commutators", residual: worst, tolerance, samples: 576 }
}

fn su2_relation_check(fault: bool, tolerance: f64) -> Check {
    let sets = coupled_sets();
    let su2s: Vec<_> = sets.iter().map(su2_set).collect();
    let mut worst = 0.0_f64;
    for a in &su2s {
        let mut sp = a.s_plus.clone();
        if fault {
            sp[(0, 0)] += C64::new(0.01, 0.0);
        }
        worst = worst.max((&sp * &sp).frobenius_norm());
        for b in &su2s {
            let d = if a.index == b.index { 1.0 } else { 0.0 };
            let comm_pm = &(&sp * &b.s_minus) - &(&b.s_minus * &sp);
            worst = worst.max(comm_pm.dist(&a.s3.scale(C64::new(2.0 * d, 0.0))));
            let comm_3p = &(&a.s3 * &sp) - &(&sp * &a.s3);
            if a.index == b.index {
                worst = worst.max(comm_3p.dist(&sp.scale(C64::new(d, 0.0))));
            }
        }
    }
    Check { name: "su2-relations", residual: worst, tolerance, samples: 9 }
}

fn casimir_check(fault: bool, tolerance: f64) -> Check {
    let sets = coupled_sets();
    let mut worst = 0.0_f64;
    for set in &sets {
        let mut j = su2_set(set).casimir;
        if fault {
            j[(0, 0)] += C64::new(0.01, 0.0);
            j[(0, 0)] = C64::new(j[(0, 0)].re, 0.0);
        }
        let eig = herm_eig(&j).expect("Casimir is Hermitian");
        for (i, &l) in eig.eigenvalues.iter().enumerate() {
            let want = if i >= 7 { 0.75 } else { 0.0 };
            worst = worst.max((l - want).abs());
        }
    }
    Check { name: "casimir-spectra", residual: worst, tolerance, samples: 3 }
}
