// The largest node amplitudes any normalized bandlimited function can reach
// at eight closely spaced nodes: s_min^{1/2} times the s_min eigenvector.

use superosc::prolate::{NodeGeometry, ProlateMatrix};
use superosc::synth::maximal_superoscillation;
use superosc::xprec::{to_decimal_digits, PrecisionContext};
use superosc::Result;

pub fn run_example() -> Result<()> {
    let probe = PrecisionContext::new(128)?;
    let ctx = PrecisionContext::for_problem(8, &probe.parse("0.025")?, 32)?;
    let geom = NodeGeometry::equispaced(8, &ctx.parse("0.05")?, ctx.pi(), ctx.one())?;

    let prolate = ProlateMatrix::build(&geom, ctx)?;
    let (s_min, v) = prolate.smallest_eigenpair()?;
    println!("s_min = {}", to_decimal_digits(&s_min, 20));
    println!("cond(S) ~ 2^{:.1}", prolate.condition_number()?.log2().to_f64());

    let psi = maximal_superoscillation(&geom, ctx)?;
    let root = s_min.clone().sqrt();
    for (k, (a, vk)) in psi.node_amplitudes().iter().zip(&v).enumerate() {
        println!(
            "a[{k}] = {:>24}   s_min^(1/2) v[{k}] = {:>24}",
            to_decimal_digits(&a.re, 15),
            to_decimal_digits(&(root.clone() * vk), 15)
        );
    }
    println!("|psi|^2 = {}", to_decimal_digits(psi.norm_sq(), 15));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
