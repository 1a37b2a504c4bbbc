// At fixed spacing the smallest prolate eigenvalue falls like N^{1/2}e^{−γN},
// with γ set by the spacing alone.

use superosc::scaling::{sweep_n, SweepConfig};
use superosc::Result;

pub fn run_example() -> Result<()> {
    for ratio in ["0.2", "0.1", "0.05"] {
        let report = sweep_n(&SweepConfig::vary_n(ratio, 4..=12))?;
        let fit = report.fit.as_ref().expect("fit over at least two points");
        let (front, back) = report.gamma_halves().expect("N sweep with enough points");
        let plain = report.uncorrected_fit.as_ref().map_or(f64::NAN, |f| f.max_residual);
        println!(
            "dx/lambda = {ratio:>4}: gamma = {:.4} (halves {front:.4} / {back:.4}), R^2 = {:.7}, \
             max residual {:.3} with N^(1/2), {plain:.3} without",
            report.exponent.unwrap_or(f64::NAN),
            fit.r_squared,
            fit.max_residual
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
