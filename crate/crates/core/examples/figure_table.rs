//! Run a figure experiment from a JSON configuration and print the CSV table.
//!
//! ```text
//! cargo run --example figure_table -- jc 0.25
//! ```

use backflow::runner::{run_experiment, to_csv_string, ExperimentConfig};

fn main() -> backflow::Result<()> {
    let mut args = std::env::args().skip(1);
    let model = args.next().unwrap_or_else(|| "spin_star".into());
    let mu = args.next().unwrap_or_else(|| "0.5".into());
    let config = ExperimentConfig::from_json(&format!(
        r#"{{"model": {{"kind": "{model}"}}, "mu": {mu}, "grid_points": 25}}"#
    ))?;
    let table = run_experiment(&config)?;
    print!("{}", to_csv_string(&table)?);
    eprintln!("bounds: {:?}", table.metadata.bounds);
    eprintln!("all satisfied: {}", table.summary.all_satisfied);
    Ok(())
}
