// Zero crossings of a ten-node alternating wave function: it oscillates on
// the scale of the node spacing, far below λ_min = 2.

use superosc::prolate::{NodeGeometry, NodeSpec};
use superosc::synth::{synthesize, WavelengthProbe};
use superosc::xprec::{to_decimal_digits, PrecisionContext};
use superosc::Result;

pub fn run_example() -> Result<()> {
    let probe = PrecisionContext::new(128)?;
    let ctx = PrecisionContext::for_problem(10, &probe.parse("0.05")?, 32)?;
    let geom = NodeGeometry::equispaced(10, &ctx.parse("0.1")?, ctx.pi(), ctx.one())?;
    let psi = synthesize(&NodeSpec::alternating(geom), ctx)?;

    let (lo, hi) = (ctx.zero(), ctx.parse("0.9")?);
    let zeros = psi.zero_crossings(&lo, &hi);
    for z in &zeros {
        println!("zero at x = {}", to_decimal_digits(z, 12));
    }
    let wl = psi.local_wavelength(&lo, &hi)?;
    let minima = psi.local_wavelength_with(&lo, &hi, WavelengthProbe::ModulusMinima)?;
    println!("local wavelength (Re psi crossings): {}", to_decimal_digits(&wl, 8));
    println!("local wavelength (|psi| minima):     {}", to_decimal_digits(&minima, 8));
    println!("lambda_min:                          {}", to_decimal_digits(&psi.geometry().lambda_min(), 8));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
