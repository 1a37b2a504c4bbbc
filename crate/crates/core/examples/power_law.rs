// At fixed N the smallest prolate eigenvalue falls like Δx^{2(N−1)}.

use superosc::scaling::{sweep_dx, SweepConfig};
use superosc::Result;

pub fn run_example() -> Result<()> {
    let grid = ["0.2", "0.1", "0.05", "0.04", "0.03", "0.02"];
    for n in 2..=4 {
        let report = sweep_dx(&SweepConfig::vary_dx(n, &grid))?;
        let fit = report.fit.as_ref().expect("fit over at least two points");
        println!(
            "N = {n}: alpha = {:.4} (expected {}), R^2 = {:.6}",
            report.exponent.unwrap_or(f64::NAN),
            report.expected_exponent.unwrap_or(f64::NAN),
            fit.r_squared
        );
    }
    let report = sweep_dx(&SweepConfig::vary_dx(3, &grid))?;
    print!("{}", report.to_csv());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
