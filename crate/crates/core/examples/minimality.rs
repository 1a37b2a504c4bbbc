// The interpolant is orthogonal to every bandlimited function that vanishes
// at the nodes, so adding one can only increase the norm.

use superosc::prolate::{NodeGeometry, NodeSpec};
use superosc::synth::synthesize;
use superosc::verify::{minimality_suite, verify_wavefunction};
use superosc::xprec::PrecisionContext;
use superosc::Result;

pub fn run_example() -> Result<()> {
    let ctx = PrecisionContext::with_guard(128, 32)?;
    let geom = NodeGeometry::equispaced(4, &ctx.parse("0.15")?, ctx.pi(), ctx.one())?;
    let psi = synthesize(&NodeSpec::alternating(geom), ctx)?;

    let stats = minimality_suite(&psi, 25, 2024)?;
    println!(
        "{} perturbations at {} bits: worst overlap {:.2e}, smallest norm gain {:.3e}",
        stats.trials, stats.bits, stats.worst_overlap, stats.worst_gain
    );
    for line in verify_wavefunction(&psi, 10, 7)?.lines() {
        println!("{line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
