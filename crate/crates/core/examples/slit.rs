// Cut the superoscillating stretch out with a hard slit and renormalize:
// most of the momentum that emerges lies beyond p_max.

use superosc::prolate::{NodeGeometry, NodeSpec};
use superosc::slit::{acceleration_summary, truncate_and_transform, SlitWindow};
use superosc::synth::synthesize;
use superosc::xprec::{to_decimal_digits, PrecisionContext};
use superosc::Result;

pub fn run_example() -> Result<()> {
    let probe = PrecisionContext::new(128)?;
    let ctx = PrecisionContext::for_problem(6, &probe.parse("0.05")?, 32)?;
    let geom = NodeGeometry::equispaced(6, &ctx.parse("0.1")?, ctx.pi(), ctx.one())?;
    let psi = synthesize(&NodeSpec::alternating(geom), ctx)?;
    let nodes = psi.nodes().clone();

    for (lo, hi) in [("0", "0.5"), ("-0.3", "0.8")] {
        let win = SlitWindow::new(psi.clone(), &ctx.parse(lo)?, &ctx.parse(hi)?)?;
        let report = truncate_and_transform(&win, &win.min_p_grid(), win.recommended_n_quad())?;
        let summary = acceleration_summary(&report, &nodes);
        println!("slit [{lo}, {hi}]");
        println!("  captured probability  {}", to_decimal_digits(&report.captured_probability, 6));
        println!("  amplitude boost       {}", to_decimal_digits(&report.boost, 6));
        println!("  <|p|>                 {}", to_decimal_digits(&report.expectation_abs_p, 8));
        println!("  <|p|>/p_max           {:.4}", summary.expectation_over_p_max);
        println!("  fraction |p| > p_max  {:.4}", summary.fraction_above_cutoff);
        println!("  tail bound            {}", to_decimal_digits(&report.tail_bound, 3));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
