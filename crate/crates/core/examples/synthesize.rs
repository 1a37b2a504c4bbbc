// Five nodes a tenth of a unit apart with alternating signs, p_max = π.
// The interpolant passes through every amplitude, and its norm comes out the
// same three ways: quadratic form, momentum space, position space.

use superosc::prolate::{NodeGeometry, NodeSpec};
use superosc::synth::synthesize;
use superosc::xprec::{to_decimal_digits, PrecisionContext};
use superosc::Result;

pub fn run_example() -> Result<()> {
    let probe = PrecisionContext::new(128)?;
    // Δx = 0.1 with λ_min = 2
    let ctx = PrecisionContext::for_problem(5, &probe.parse("0.05")?, 32)?;
    let dx = ctx.parse("0.1")?;
    let geom = NodeGeometry::equispaced(5, &dx, ctx.pi(), ctx.one())?;
    let psi = synthesize(&NodeSpec::alternating(geom), ctx)?;

    println!("working precision: {} bits", ctx.bits());
    for (k, c) in psi.coeffs().iter().enumerate() {
        println!("c[{k}] = {}", to_decimal_digits(&c.re, 20));
    }
    println!("interpolation residual: {}", to_decimal_digits(&psi.interpolation_residual(), 3));

    let form = psi.norm_sq().clone();
    let momentum = psi.momentum_norm_sq();
    let position = psi.position_norm_sq(&ctx.real(200))?;
    println!("|psi|^2 quadratic form: {}", to_decimal_digits(&form, 25));
    println!("|psi|^2 momentum space: {}", to_decimal_digits(&momentum, 25));
    println!(
        "|psi|^2 position space: {}  ({} panels, tail {})",
        to_decimal_digits(&position.total, 25),
        position.panels,
        to_decimal_digits(&position.tail, 6)
    );

    let x = ctx.parse("0.25")?;
    let v = psi.eval_position(&x);
    println!("psi(0.25) = {}", to_decimal_digits(&v.re, 15));
    let unit = psi.normalize()?;
    println!("normalized node amplitude |a_0|/|psi| = {}", to_decimal_digits(&unit.node_amplitudes()[0].re, 6));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
