//! The sweep subcommands: entangle, berry, spectrum, decompose.

use rayon::prelude::*;

use braidberry::braid::BraidParams;
use braidberry::dynamics::{
    appendix_p, berry_closed, berry_numeric, block_diagonalize, hamiltonian, hamiltonian_block,
    period, wrap_distance, Band, DriveParams, Sector, SubsystemId, BLOCK_LAYOUT,
};
use braidberry::entanglement::NegativityReport;
use braidberry::numeric::{herm_eig, ComplexMatrix};
use braidberry::su3::{coupled_sets, su2_set};

use crate::output::{Table, Value};
use crate::{BerryArgs, DecomposeArgs, EntangleArgs, SpectrumArgs};

pub fn entangle(args: &EntangleArgs) -> Result<bool, String> {
    let grid: Vec<f64> = match (&args.theta_grid, args.theta) {
        (Some(spec), _) => crate::parse_grid(spec)?,
        (None, Some(theta)) => vec![theta],
        (None, None) => return Err("supply --theta or --theta-grid".into()),
    }
    .into_iter()
    .map(|v| args.angles.to_radians(v))
    .collect();

    let columns: Vec<usize> = if args.per_basis { (0..9).collect() } else { vec![0] };
    let tol = args.output.tolerance(1e-9);

    // fan out across grid points; collect preserves input order
    let reports: Vec<NegativityReport> = grid
        .par_iter()
        .flat_map_iter(|&theta| {
            let params = BraidParams::new(theta, 0.0, 0.0);
            columns
                .iter()
                .map(move |&col| NegativityReport::compute(&params, col).expect("valid basis"))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut table = Table::new(
        "entangle",
        &["theta", "basis_state", "negativity_numeric", "negativity_closed", "abs_diff"],
    );
    table.param("tol", tol);
    let mut pass = true;
    for r in reports {
        pass &= r.abs_diff() <= tol;
        table.push(vec![
            r.theta.into(),
            r.basis_state.into(),
            r.numeric.into(),
            r.closed_form.into(),
            r.abs_diff().into(),
        ]);
    }
    table.write(args.output.format, &args.output.out).map_err(|e| e.to_string())?;
    Ok(pass)
}

pub fn berry(args: &BerryArgs) -> Result<bool, String> {
    let (n1, n2) = match args.example {
        Some(1) => (1, 1),
        Some(2) => (-1, 1),
        Some(3) => (2, 1),
        Some(4) => (-2, 1),
        _ => (args.n1, args.n2),
    };
    let theta = args.angles.to_radians(args.theta);
    let user_gcd = gcd(args.n1, args.n2);
    if args.example.is_none() && user_gcd > 1 {
        eprintln!("note: ({}, {}) reduced to lowest terms", args.n1, args.n2);
    }
    let drive = DriveParams::new(theta, n1, n2, args.omega).map_err(|e| e.to_string())?;
    if drive.is_degenerate() {
        return Err("sin(theta) = 0: bands are degenerate, Berry phases undefined".into());
    }
    let tol = args.output.tolerance(1e-5);

    let jobs: Vec<(SubsystemId, Band)> = SubsystemId::ALL
        .iter()
        .flat_map(|&k| Band::ALL.iter().map(move |&b| (k, b)))
        .collect();
    let rows: Vec<(SubsystemId, Band, f64, f64, f64, f64)> = jobs
        .par_iter()
        .map(|&(k, band)| {
            let numeric = berry_numeric(&drive, k, band, args.steps).expect("checked domain");
            let closed = berry_closed(&drive, k, band).expect("checked domain");
            let t_k = period(&drive, k).expect("analytic period verified");
            (k, band, numeric.gamma, closed.gamma, wrap_distance(numeric.gamma, closed.gamma), t_k)
        })
        .collect();

    let mut table = Table::new(
        "berry",
        &["k", "band", "gamma_numeric", "gamma_closed", "wrap_distance", "period", "steps"],
    );
    table.param("theta", theta);
    table.param("n1", n1);
    table.param("n2", n2);
    table.param("omega", args.omega);
    table.param("tol", tol);
    let mut pass = true;
    for (k, band, gn, gc, dist, t_k) in rows {
        pass &= dist <= tol;
        table.push(vec![
            k.index().into(),
            band.label().to_string().into(),
            gn.into(),
            gc.into(),
            dist.into(),
            t_k.into(),
            args.steps.into(),
        ]);
    }
    table.write(args.output.format, &args.output.out).map_err(|e| e.to_string())?;
    Ok(pass)
}

pub fn spectrum(args: &SpectrumArgs) -> Result<bool, String> {
    let theta = args.angles.to_radians(args.theta);
    let drive = DriveParams::new(theta, args.n1, args.n2, args.omega).map_err(|e| e.to_string())?;
    let tol = args.output.tolerance(1e-9);

    let mut table = Table::new(
        "spectrum",
        &["k", "band", "energy_numeric", "energy_closed", "abs_diff"],
    );
    table.param("theta", theta);
    table.param("n1", drive.n1);
    table.param("n2", drive.n2);
    table.param("omega", args.omega);
    table.param("t", args.t);
    table.param("tol", tol);

    let mut pass = true;
    for k in SubsystemId::ALL {
        let eig = herm_eig(&hamiltonian_block(&drive, k, args.t)).map_err(|e| e.to_string())?;
        for band in Band::ALL {
            let closed = drive.band_energy(k, band);
            // match the numeric eigenvalue nearest the closed one
            let numeric = eig
                .eigenvalues
                .iter()
                .cloned()
                .min_by(|a, b| (a - closed).abs().partial_cmp(&(b - closed).abs()).unwrap())
                .unwrap();
            let diff = (numeric - closed).abs();
            pass &= diff <= tol;
            table.push(vec![
                k.index().into(),
                band.label().to_string().into(),
                numeric.into(),
                closed.into(),
                diff.into(),
            ]);
        }
    }
    table.write(args.output.format, &args.output.out).map_err(|e| e.to_string())?;
    Ok(pass)
}

pub fn decompose(args: &DecomposeArgs) -> Result<bool, String> {
    let theta = args.angles.to_radians(args.theta);
    let drive = DriveParams::new(theta, 1, 1, args.omega).map_err(|e| e.to_string())?;
    let tol = args.output.tolerance(1e-10);

    let h = hamiltonian(&drive, args.t);
    let dec = block_diagonalize(&h).map_err(|e| e.to_string())?;

    // orthogonality residual of P itself
    let p = appendix_p();
    let prod = p.matmul(&p.transpose()).unwrap();
    let ppt_residual = prod.dist(&ComplexMatrix::identity(9));

    // Casimir spectra after conjugation: {3/4 x2, 0 x7} per set
    let mut casimir_dev = 0.0_f64;
    for set in coupled_sets().iter() {
        let j = su2_set(set).casimir;
        let jt = p.matmul(&j).unwrap().matmul(&p.transpose()).unwrap();
        let eig = herm_eig(&jt).map_err(|e| e.to_string())?;
        for (i, &l) in eig.eigenvalues.iter().enumerate() {
            let want = if i >= 7 { 0.75 } else { 0.0 };
            casimir_dev = casimir_dev.max((l - want).abs());
        }
    }

    let mut table = Table::new(
        "decompose",
        &[
            "block",
            "subsystem",
            "sector",
            "size",
            "energy_min",
            "energy_max",
            "ppt_residual",
            "leakage",
            "casimir_deviation",
        ],
    );
    table.param("theta", theta);
    table.param("omega", args.omega);
    table.param("t", args.t);
    table.param("tol", tol);

    let pass = dec.leakage <= tol && ppt_residual <= 1e-15 && casimir_dev <= tol.max(1e-10);
    for (i, block) in dec.blocks.iter().enumerate() {
        let (sub, sector) = BLOCK_LAYOUT[i];
        let eig = herm_eig(block).map_err(|e| e.to_string())?;
        let lo = eig.eigenvalues.first().copied().unwrap_or(0.0);
        let hi = eig.eigenvalues.last().copied().unwrap_or(0.0);
        table.push(vec![
            i.into(),
            sub.index().into(),
            Value::from(match sector {
                Sector::SpinHalf => "spin-1/2",
                Sector::SpinZero => "spin-0",
            }),
            block.rows().into(),
            lo.into(),
            hi.into(),
            ppt_residual.into(),
            dec.leakage.into(),
            casimir_dev.into(),
        ]);
    }
    table.write(args.output.format, &args.output.out).map_err(|e| e.to_string())?;
    Ok(pass)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
