//! Jaynes-Cummings model: unitarity of the truncated propagator, analytic reduced
//! dynamics, and excitation-number conservation.

use backflow::models::{excitation_number, jc_default_pair, jc_evolve, jc_propagator, jc_reduced_analytic, uniform_grid, JCParams};
use backflow::ComplexMatrix;

fn main() -> backflow::Result<()> {
    let params = JCParams::default();
    let u = jc_propagator(&params, 3.7)?;
    let id = ComplexMatrix::identity(u.dim());
    println!("dimension {}, max |U^dagger U - 1| = {:.3e}", u.dim(), u.adjoint().matmul(&u).max_abs_diff(&id));

    let times = uniform_grid(8.9, 41)?;
    let (excited, superposition) = jc_default_pair();
    let traj = jc_evolve(&params, (&excited, &superposition), &times)?;
    let n0 = excitation_number(&params, &traj.snapshots[0].rho_se)?;
    let mut worst_state = 0f64;
    let mut worst_excitation = 0f64;
    for (t, snap) in times.iter().zip(&traj.snapshots) {
        let a = jc_reduced_analytic(&params, &excited, *t)?;
        let b = jc_reduced_analytic(&params, &superposition, *t)?;
        worst_state = worst_state
            .max(a.matrix().max_abs_diff(snap.rho_s.matrix()))
            .max(b.matrix().max_abs_diff(snap.sigma_s.matrix()));
        worst_excitation = worst_excitation.max((excitation_number(&params, &snap.rho_se)? - n0).abs());
    }
    println!("max |analytic - partial trace| = {worst_state:.3e}");
    println!("max excitation-number drift    = {worst_excitation:.3e}");
    for k in (0..times.len()).step_by(8) {
        let p = traj.snapshots[k].rho_s.matrix()[(1, 1)].re;
        println!("t = {:5.2}  excited population {p:.6}", times[k]);
    }
    Ok(())
}
