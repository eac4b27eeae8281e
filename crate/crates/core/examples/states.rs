//! Build density matrices: pure states, partial traces of an entangled state,
//! and the truncated thermal state of a bosonic mode.

use backflow::qla::Subsystems;
use backflow::states::ThermalSpec;
use backflow::DensityMatrix;

fn main() -> backflow::Result<()> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    // (|00> + |11>) / sqrt 2
    let bell = DensityMatrix::pure_real(&[s, 0.0, 0.0, s])?;
    let subs = Subsystems::bipartite(2, 2)?;
    let reduced = bell.reduce(&subs, 0)?;
    println!("purity of the Bell state       {:.6}", bell.purity());
    println!("purity of either half          {:.6}", reduced.purity());

    let spec = ThermalSpec::new(1.0, 40)?;
    let p = spec.occupation_probabilities();
    let mean: f64 = p.iter().enumerate().map(|(n, pn)| n as f64 * pn).sum();
    println!("thermal p_0                    {:.12}", p[0]);
    println!("thermal <n>                    {:.12} (1/(e-1) = {:.12})", mean, 1.0 / (1f64.exp() - 1.0));
    println!("tail mass above the cutoff     {:.3e}", spec.tail_mass());

    match DensityMatrix::validate(backflow::ComplexMatrix::from_diagonal(&[1.2, -0.2])) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
